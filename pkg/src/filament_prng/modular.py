"""Exact integer arithmetic: inverses, Jacobi symbols, totients, CRT.

All operations are pure functions on plain ints; results that carry their
modulus come back as small frozen dataclasses.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import EvenModulus, NotCoprime, NotInvertible, RangeError

# Largest ring modulus accepted anywhere in the package.  Products of two
# reduced residues then stay below 2**62, so every intermediate fits a
# signed 64-bit word and behaviour is portable to fixed-width arithmetic.
MAX_MODULUS = 2**31


@dataclass(frozen=True, slots=True)
class Residue:
    """An element of Z_n in canonical form 0 <= value < modulus."""

    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise RangeError(f"modulus must be positive, got {self.modulus}")
        if not 0 <= self.value < self.modulus:
            raise ValueError(
                f"residue {self.value} not reduced mod {self.modulus}"
            )


@dataclass(frozen=True, slots=True)
class FactoredModulus:
    """q split as 2**r * q_odd with q_odd odd."""

    r: int
    q_odd: int
    q: int


@dataclass(frozen=True, slots=True)
class PhiResult:
    """Value of the inverse map and the modulus it lives in (q or q/2)."""

    phi: int
    effective_modulus: int


def _check_modulus(n: int) -> None:
    if n < 1:
        raise RangeError(f"modulus must be positive, got {n}")
    if n > MAX_MODULUS:
        raise RangeError(f"modulus {n} exceeds supported bound 2**31")


def mod_inverse(a: int, n: int) -> Residue:
    """Inverse of a modulo n by the extended Euclidean algorithm.

    n = 1 returns 0: the ring Z_1 is trivial and every congruence there
    holds vacuously.
    """
    _check_modulus(n)
    if n == 1:
        return Residue(0, 1)
    a %= n
    if math.gcd(a, n) != 1:
        raise NotInvertible(f"{a} has no inverse mod {n}")
    return Residue(pow(a, -1, n), n)


def fermat_inverse(a: int, n: int) -> Residue:
    """Inverse modulo a prime n via a**(n-2) mod n, with 0 mapped to 0."""
    _check_modulus(n)
    a %= n
    if a == 0 or n == 1:
        return Residue(0, n)
    return Residue(pow(a, n - 2, n), n)


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a | n) for odd n >= 1; 0 when gcd(a, n) > 1.

    (a | 1) = 1 by the empty-product convention.  The denominator is not
    range-limited: closed-form recombination feeds products of two bounded
    moduli through here.
    """
    if n < 1 or n % 2 == 0:
        raise EvenModulus(f"Jacobi symbol needs a positive odd modulus, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def euler_totient(q: int) -> int:
    """Count of 1 <= k <= q coprime to q, via the Euler product."""
    _check_modulus(q)
    result = q
    n = q
    p = 2
    while p * p <= n:
        if n % p == 0:
            result -= result // p
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        result -= result // n
    return result


def factor_pow2(q: int) -> FactoredModulus:
    """Split q = 2**r * q_odd with q_odd odd."""
    _check_modulus(q)
    r = (q & -q).bit_length() - 1
    return FactoredModulus(r=r, q_odd=q >> r, q=q)


def crt_combine(r1: Residue, r2: Residue) -> Residue:
    """The unique residue mod n1*n2 reducing to r1 mod n1 and r2 mod n2."""
    n1, n2 = r1.modulus, r2.modulus
    if math.gcd(n1, n2) != 1:
        raise NotCoprime(f"moduli {n1} and {n2} are not coprime")
    _check_modulus(n1 * n2)
    step = (r2.value - r1.value) * pow(n1, -1, n2) % n2 if n2 > 1 else 0
    return Residue(r1.value + n1 * step, n1 * n2)


def phi_p(p: int, q: int) -> PhiResult:
    """The inverse map driving the tangent-evolution phases.

    (4p)^-1 mod q for odd q; p^-1 mod (q/2) when q = 2 mod 4; p^-1 mod q
    when q = 0 mod 4.  The effective modulus records which ring the value
    lives in.
    """
    _check_modulus(q)
    if math.gcd(p, q) != 1:
        raise NotCoprime(f"p={p} and q={q} are not coprime")
    if q % 2 == 1:
        inv = mod_inverse(4 * p, q)
    elif q % 4 == 2:
        inv = mod_inverse(p, q // 2)
    else:
        inv = mod_inverse(p, q)
    return PhiResult(phi=inv.value, effective_modulus=inv.modulus)


def coprime_residues(q: int) -> list[int]:
    """Residues 1 <= p < q coprime to q, ascending; empty for q = 1."""
    _check_modulus(q)
    return [p for p in range(1, q) if math.gcd(p, q) == 1]


# Witnesses making Miller-Rabin deterministic for all n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin primality check, deterministic for n < 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for base in _MR_BASES:
        x = pow(base, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True
