"""Generalized quadratic Gauss sums.

G(a, b, c) = sum_{l=0}^{c-1} exp(2 pi i (a l^2 + b l) / c) is evaluated two
independent ways: literal summation (`gauss_direct`, `gauss_direct_row`) and
the closed forms for the three parity classes of the modulus
(`gauss_closed_odd`, `gauss_closed_2mod4`, `gauss_closed_0mod4`).  The
closed forms never feed the direct route, so each can serve as the other's
oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import EvenModulus, NotCoprime, RangeError, WrongParityClass
from .modular import MAX_MODULUS, factor_pow2, jacobi, mod_inverse

TWO_PI = 2.0 * math.pi

# i**k for k mod 4, kept exact on the unit circle.
_I_POW = (1 + 0j, 1j, -1 + 0j, -1j)


class MagnitudeClass(Enum):
    """Branch of the magnitude law that |G(a, b, c)| falls under."""

    ODD_Q_SQRT_Q = "sqrt(q)"
    EVEN_Q_SQRT_2Q = "sqrt(2q)"
    EVEN_Q_ZERO = "zero"


@dataclass(frozen=True)
class GaussValue:
    """One Gauss sum with its magnitude-law tag (None when gcd(a, c) > 1)."""

    re: float
    im: float
    magnitude_class: MagnitudeClass | None

    @property
    def value(self) -> complex:
        return complex(self.re, self.im)

    def __abs__(self) -> float:
        return abs(self.value)


@dataclass(frozen=True, slots=True)
class ThetaPhase:
    """Phase of a nonzero Gauss sum, normalized to [0, 2 pi)."""

    theta: float
    m: int


def _classify(a: int, b: int, c: int) -> MagnitudeClass | None:
    if math.gcd(a, c) != 1:
        return None
    if c % 2 == 1:
        return MagnitudeClass.ODD_Q_SQRT_Q
    if (c // 2 - b) % 2 == 0:
        return MagnitudeClass.EVEN_Q_SQRT_2Q
    return MagnitudeClass.EVEN_Q_ZERO


def _check_summation_modulus(c: int) -> None:
    if c < 1:
        raise RangeError(f"modulus must be positive, got {c}")
    if c > MAX_MODULUS:
        raise RangeError(f"modulus {c} exceeds supported bound 2**31")


def gauss_direct(a: int, b: int, c: int) -> GaussValue:
    """Literal evaluation of the c-term sum in double precision.

    The phase integers (a l^2 + b l) mod c are reduced exactly before any
    rounding, and numpy's pairwise summation keeps the accumulated error
    orders of magnitude below 1e-9 * sqrt(c) for c up to 1e4.
    """
    _check_summation_modulus(c)
    l = np.arange(c, dtype=np.int64)
    k = (((a % c) * (l * l % c)) % c + (b % c) * l) % c
    total = np.exp((2j * np.pi / c) * k).sum()
    return GaussValue(float(total.real), float(total.imag), _classify(a, b, c))


def gauss_direct_row(a: int, c: int) -> np.ndarray:
    """G(a, b, c) for every b = 0..c-1 as one complex array.

    Same summand family as `gauss_direct`, evaluated through an FFT: with
    w_l = exp(2 pi i a l^2 / c), the row is c * ifft(w).  Only the
    association order of the accumulation differs from the scalar path.
    """
    _check_summation_modulus(c)
    l = np.arange(c, dtype=np.int64)
    k = (a % c) * (l * l % c) % c
    w = np.exp((2j * np.pi / c) * k)
    return c * np.fft.ifft(w)


def gauss_magnitude(p: int, m: int, q: int) -> float:
    """|G(-p, m, q)| from the magnitude law, for gcd(p, q) = 1.

    sqrt(q) for odd q; sqrt(2q) when q is even and q/2 = m mod 2; else 0.
    """
    _check_summation_modulus(q)
    if math.gcd(p, q) != 1:
        raise NotCoprime(f"p={p} and q={q} are not coprime")
    if q % 2 == 1:
        return math.sqrt(q)
    if (q // 2 - m) % 2 == 0:
        return math.sqrt(2 * q)
    return 0.0


def _phase_row(scale: int, ks: np.ndarray, den: int) -> np.ndarray:
    """exp(2 pi i (scale * ks) / den) with the numerator reduced exactly."""
    ks = (scale % den) * (ks % den) % den
    return np.exp((2j * np.pi / den) * ks)


def closed_odd_row(p: int, q: int, ms: np.ndarray) -> np.ndarray:
    """Closed form of G(-p, m, q) for odd q, vectorized over m:
    sqrt(q) (p|q) exp(2 pi i phi m^2 / q), times -i when q = 3 mod 4,
    with phi = (4p)^-1 mod q.
    """
    if q % 2 == 0:
        raise EvenModulus(f"odd-modulus closed form got q={q}")
    if math.gcd(p, q) != 1:
        raise NotCoprime(f"p={p} and q={q} are not coprime")
    p %= q
    phi = mod_inverse(4 * p, q).value
    pref = math.sqrt(q) * jacobi(p, q)
    if q % 4 == 3:
        pref *= -1j
    ms = np.asarray(ms, dtype=np.int64)
    return pref * _phase_row(phi, ms * ms % q, q)


def closed_2mod4_row(p: int, q: int, ms: np.ndarray) -> np.ndarray:
    """Closed form of G(-p, m, q) for q = 2 mod 4, q > 2, odd m:
    2 G(-2p, m, q/2) = sqrt(2q) (2p|q/2) exp(4 pi i phi1 m^2 / q), times -i
    when q = 6 mod 8, with phi1 = (8p)^-1 mod (q/2).

    The modulus 2 has no closed form here ("q = 2 is the planar case");
    evaluate it with gauss_direct.
    """
    if q % 4 != 2 or q <= 2:
        raise WrongParityClass(f"need q = 2 mod 4 and q > 2, got q={q}")
    ms = np.asarray(ms, dtype=np.int64)
    if np.any(ms % 2 == 0):
        raise WrongParityClass("this parity class only has odd indices")
    if math.gcd(p, q) != 1:
        raise NotCoprime(f"p={p} and q={q} are not coprime")
    p %= q
    half = q // 2
    phi1 = mod_inverse(8 * p, half).value
    pref = math.sqrt(2 * q) * jacobi(2 * p, half)
    if q % 8 == 6:
        pref *= -1j
    # exp(4 pi i phi1 m^2 / q) = exp(2 pi i phi1 m^2 / (q/2))
    return pref * _phase_row(phi1, ms * ms % half, half)


def closed_0mod4_row(p: int, q: int, ms: np.ndarray) -> np.ndarray:
    """Closed form of G(-p, m, q) for q = 0 mod 4 and even m.

    With q = 2**r * q' (q' odd) the sum splits as
    G(-2**r p, m, q') * G(-q' p, m, 2**r); the first factor is the odd-part
    closed form with phi1 = (2**(r+2) p)^-1 mod q', the second is
    exp(pi i phi2 m^2 / 2**(r+1)) (2**r | q' p)(1 - i**(q' p)) sqrt(2**r)
    with phi2 = (q' p)^-1 mod 2**r.
    """
    if q % 4 != 0:
        raise WrongParityClass(f"need q = 0 mod 4, got q={q}")
    ms = np.asarray(ms, dtype=np.int64)
    if np.any(ms % 2 == 1):
        raise WrongParityClass("this parity class only has even indices")
    if math.gcd(p, q) != 1:
        raise NotCoprime(f"p={p} and q={q} are not coprime")
    p %= q
    fac = factor_pow2(q)
    two_r, q1 = 1 << fac.r, fac.q_odd
    phi1 = mod_inverse(4 * two_r * p, q1).value
    phi2 = mod_inverse(q1 * p, two_r).value
    pref = math.sqrt(q1) * jacobi(two_r * p, q1)
    if q1 % 4 == 3:
        pref *= -1j
    # (2**r | q'p) via multiplicativity in the denominator; q'p stays odd.
    pref *= jacobi(two_r, q1) * jacobi(two_r, p)
    pref *= (1 - _I_POW[q1 * p % 4]) * math.sqrt(two_r)
    m2 = ms * ms
    # exp(pi i phi2 m^2 / 2**(r+1)) = exp(2 pi i phi2 (m^2/4) / 2**r) for even m
    return pref * _phase_row(phi1, m2 % q1, q1) * _phase_row(phi2, (m2 >> 2) % two_r, two_r)


def gauss_closed_odd(p: int, m: int, q: int) -> GaussValue:
    """Scalar wrapper around `closed_odd_row`."""
    val = complex(closed_odd_row(p, q, np.array([m]))[0])
    return GaussValue(val.real, val.imag, _classify(-p, m, q))


def gauss_closed_2mod4(p: int, m_odd: int, q: int) -> GaussValue:
    """Scalar wrapper around `closed_2mod4_row`."""
    val = complex(closed_2mod4_row(p, q, np.array([m_odd]))[0])
    return GaussValue(val.real, val.imag, _classify(-p, m_odd, q))


def gauss_closed_0mod4(p: int, m_even: int, q: int) -> GaussValue:
    """Scalar wrapper around `closed_0mod4_row`."""
    val = complex(closed_0mod4_row(p, q, np.array([m_even]))[0])
    return GaussValue(val.real, val.imag, _classify(-p, m_even, q))


def active_indices(q: int) -> range:
    """Indices m with nonzero G(-p, m, q): all m for odd q, odd m for
    q = 2 mod 4, even m for q = 0 mod 4."""
    if q % 2 == 1:
        return range(q)
    if q % 4 == 2:
        return range(1, q, 2)
    return range(0, q, 2)


def theta_sequence(p: int, q: int) -> list[ThetaPhase]:
    """Phases of the nonzero sums G(-p, m, q) over one period in m."""
    _check_summation_modulus(q)
    if math.gcd(p, q) != 1:
        raise NotCoprime(f"p={p} and q={q} are not coprime")
    row = gauss_direct_row(-p, q)
    out = []
    for m in active_indices(q):
        theta = math.atan2(row[m].imag, row[m].real) % TWO_PI
        if theta >= TWO_PI:  # rounding of tiny negative angles
            theta = 0.0
        out.append(ThetaPhase(theta=theta, m=m))
    return out
