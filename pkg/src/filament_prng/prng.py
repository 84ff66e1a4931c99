"""Pseudorandom streams.

The circle stream reads off the tangent-evolution closed form for every
admissible index p; explicit inversive generators (prime and power-of-two
moduli) and a linear congruential reference (including the RANDU preset)
accompany it.  All streams are deterministic and restartable from
(spec, start index); disjoint ranges concatenate bit-identically.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .errors import BadParameters, BadPrimes, CompositeModulus
from .filament import CirclePoint, corner_angle, z_qm_closed
from .modular import coprime_residues, is_probable_prime, mod_inverse, phi_p


class StreamKind(Enum):
    VFE_CIRCLE = "vfe"
    EICG = "eicg"
    EICG_POW2 = "eicg-pow2"
    LCG = "lcg"
    COMPOUND = "compound"


@dataclass(frozen=True, slots=True)
class UnitSample:
    """One normalized sample u in [0, 1) at stream index n."""

    u: float
    n: int


@dataclass(frozen=True)
class StreamSpec:
    """Parameters of one stream; prefer the classmethod constructors."""

    kind: StreamKind
    q: int = 0
    a: int = 0
    b: int = 0
    x0: int = 0
    primes: tuple[int, ...] = ()
    sides: int = 3

    def __post_init__(self):
        if self.kind is StreamKind.EICG:
            if not is_probable_prime(self.q):
                raise CompositeModulus(f"EICG modulus {self.q} is not prime")
            if self.a % self.q == 0:
                raise BadParameters("EICG needs a != 0 mod q")
        elif self.kind is StreamKind.EICG_POW2:
            if self.q < 32 or self.q & (self.q - 1):
                raise BadParameters(
                    f"modulus must be 2**omega with omega >= 5, got {self.q}"
                )
            if self.a % 4 != 2:
                raise BadParameters(f"need a = 2 mod 4, got a={self.a}")
            if self.b % 2 != 1:
                raise BadParameters(f"need odd b, got b={self.b}")
        elif self.kind is StreamKind.LCG:
            if self.q < 1:
                raise BadParameters(f"LCG modulus must be positive, got {self.q}")
        elif self.kind is StreamKind.VFE_CIRCLE:
            if self.sides < 3 or self.q < 1:
                raise BadParameters(
                    f"circle stream needs sides >= 3 and q >= 1, got "
                    f"sides={self.sides}, q={self.q}"
                )
        elif self.kind is StreamKind.COMPOUND:
            if not self.primes or len(set(self.primes)) != len(self.primes):
                raise BadPrimes(f"need distinct primes, got {self.primes}")
            for prime in self.primes:
                if prime < 5 or not is_probable_prime(prime):
                    raise BadPrimes(f"need distinct primes >= 5, got {self.primes}")

    @classmethod
    def lcg(cls, a: int, b: int, q: int, x0: int = 1) -> "StreamSpec":
        return cls(kind=StreamKind.LCG, q=q, a=a, b=b, x0=x0 % q)

    @classmethod
    def eicg(cls, q: int, a: int = 4, b: int = 0) -> "StreamSpec":
        return cls(kind=StreamKind.EICG, q=q, a=a, b=b)

    @classmethod
    def eicg_pow2(cls, omega: int, a: int = 2, b: int = 1) -> "StreamSpec":
        return cls(kind=StreamKind.EICG_POW2, q=1 << omega, a=a, b=b)

    @classmethod
    def vfe(cls, sides: int, q: int) -> "StreamSpec":
        return cls(kind=StreamKind.VFE_CIRCLE, q=q, sides=sides)

    @classmethod
    def compound(cls, primes: Sequence[int], sides: int = 3) -> "StreamSpec":
        return cls(kind=StreamKind.COMPOUND, primes=tuple(primes), sides=sides)


def randu_preset() -> StreamSpec:
    """The historically popular LCG x_{n+1} = 65539 x_n mod 2**31, seed 1."""
    return StreamSpec.lcg(a=65539, b=0, q=2**31, x0=1)


def _expect(spec: StreamSpec, kind: StreamKind) -> None:
    if spec.kind is not kind:
        raise BadParameters(f"expected a {kind.value} spec, got {spec.kind.value}")


def lcg_stream(spec: StreamSpec, count: int, start: int = 0) -> list[UnitSample]:
    """x_{n+1} = a x_n + b mod q from x0, normalized to u_n = x_n / q."""
    _expect(spec, StreamKind.LCG)
    q = spec.q
    x = spec.x0 % q
    for _ in range(start):
        x = (spec.a * x + spec.b) % q
    out = []
    for n in range(start, start + count):
        out.append(UnitSample(u=x / q, n=n))
        x = (spec.a * x + spec.b) % q
    return out


def lcg_ints(spec: StreamSpec, count: int, start: int = 0) -> list[int]:
    """The raw integer states x_n of an LCG (same indexing as lcg_stream)."""
    _expect(spec, StreamKind.LCG)
    q = spec.q
    x = spec.x0 % q
    for _ in range(start):
        x = (spec.a * x + spec.b) % q
    out = []
    for _ in range(count):
        out.append(x)
        x = (spec.a * x + spec.b) % q
    return out


def eicg_stream(spec: StreamSpec, count: int, start: int = 0) -> list[UnitSample]:
    """Explicit inversive stream x_n = (a n + b)^-1 mod prime q, 0 -> 0.

    Inverses follow the exponentiation route x^(q-2) mod q; one full period
    visits every residue of Z_q exactly once.
    """
    _expect(spec, StreamKind.EICG)
    q, a, b = spec.q, spec.a, spec.b
    out = []
    for n in range(start, start + count):
        v = (a * n + b) % q
        x = pow(v, q - 2, q) if v else 0
        out.append(UnitSample(u=x / q, n=n))
    return out


def eicg_pow2_stream(spec: StreamSpec, count: int, start: int = 0) -> list[UnitSample]:
    """Power-of-two inversive stream x_n = (a n + b)^-1 mod 2**omega.

    With a = 2 mod 4 and odd b the argument is always odd, the period is
    2**(omega-1), and one period visits exactly the odd residues.
    """
    _expect(spec, StreamKind.EICG_POW2)
    q, a, b = spec.q, spec.a, spec.b
    out = []
    for n in range(start, start + count):
        x = pow((a * n + b) % q, -1, q)
        out.append(UnitSample(u=x / q, n=n))
    return out


def vfe_stream(sides: int, q: int) -> list[CirclePoint]:
    """One circle point per residue p coprime to q, ascending p.

    Emits exactly phi(q) pairwise-distinct points on the circle of center
    i cos^2(rho) and radius sin^2(rho); p = 0 is excluded (q = 1 gives an
    empty stream).  `sides` only sets the circle geometry through rho.
    """
    angle = corner_angle(sides, q)
    c2, s2 = angle.cos_rho**2, angle.sin_rho**2
    out = []
    for p in coprime_residues(q):
        res = phi_p(p, q)
        alpha = 2.0 * math.pi * (res.phi / res.effective_modulus)
        out.append(
            CirclePoint(re=s2 * math.sin(alpha), im=c2 - s2 * math.cos(alpha), p=p)
        )
    return out


def vfe_unit_samples(q: int) -> list[UnitSample]:
    """The circle phases u_p = phi(p) / effective modulus as a unit stream.

    For prime q these coincide with eicg_stream(q, a=4, b=0) at indices p.
    """
    out = []
    for p in coprime_residues(q):
        res = phi_p(p, q)
        out.append(UnitSample(u=res.phi / res.effective_modulus, n=p))
    return out


def compound_identity_residual(sides: int, primes: Sequence[int], p: int, u: float) -> float:
    """|prod_j (c_j^2 + i z_j(p)) / s_j^2 - exp(2 pi i u)| for one index."""
    lhs = 1 + 0j
    for qj in primes:
        angle = corner_angle(sides, qj)
        z = z_qm_closed(sides, qj, p, 0).value
        lhs *= (angle.cos_rho**2 + 1j * z) / angle.sin_rho**2
    return abs(lhs - cmath.exp(2j * math.pi * u))


def compound_stream(
    sides: int, primes: Sequence[int], count: int, start: int = 0
) -> list[UnitSample]:
    """Combined phases u_p = sum_j phi_j(p)/q_j mod 1 with phi_j = (4p)^-1
    mod q_j, over indices p coprime to every prime, ascending.

    u_p is assembled exactly over the common denominator prod(q_j), and each
    emitted sample is checked against the circle-product identity
    prod_j (c_j^2 + i z_j(p)) / s_j^2 = exp(2 pi i u_p).
    """
    spec = StreamSpec.compound(primes, sides=sides)
    qs = spec.primes
    modulus = math.prod(qs)
    weights = [modulus // qj for qj in qs]
    out: list[UnitSample] = []
    p = 0
    to_skip = start
    while len(out) < count:
        p += 1
        if math.gcd(p, modulus) != 1:
            continue
        if to_skip:
            to_skip -= 1
            continue
        num = sum(mod_inverse(4 * p, qj).value * w for qj, w in zip(qs, weights))
        u = (num % modulus) / modulus
        if compound_identity_residual(sides, qs, p, u) > 1e-9:
            raise ArithmeticError(
                f"circle-product identity violated at p={p} for primes {qs}"
            )
        out.append(UnitSample(u=u, n=p))
    return out


def parallel_streams_distinct(q: int, params: Sequence[tuple[int, int]]) -> bool:
    """Whether a family of inversive streams x_n^i = (a_i n + b_i)^-1 mod q
    has all the values b_i * a_i^-1 distinct mod q, the stated condition for
    well-behaved parallel tuples."""
    if not is_probable_prime(q):
        raise CompositeModulus(f"modulus {q} is not prime")
    seen = set()
    for a, b in params:
        if a % q == 0:
            raise BadParameters("family members need a != 0 mod q")
        seen.add(b * pow(a, q - 2, q) % q)
    return len(seen) == len(params)
