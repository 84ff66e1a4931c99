"""Serial-test discrepancy machinery, reference bounds, and structure probes.

The quality measure is the discrepancy of wraparound k-tuples from a full
generator period.  The extreme discrepancy (over all subintervals) is
expensive to compute exactly, so the star discrepancy D* over anchored
boxes is computed exactly instead and the standard enclosure
D* <= D <= 2^k D* is reported alongside it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import BadDimension, BadLags, BadT, EmptyInput, TooLarge
from .modular import is_probable_prime
from .prng import UnitSample, randu_preset

MAX_EXACT_POINTS = 4096
MAX_EXACT_DIM = 3


@dataclass(frozen=True, eq=False)
class TupleCloud:
    """k-tuples (u_{n+n_1}, ..., u_{n+n_k}) over a full period, wrapped."""

    points: np.ndarray  # (n, k), every coordinate in [0, 1)
    k: int
    lags: tuple[int, ...]
    n: int


@dataclass(frozen=True)
class DiscrepancyReport:
    """Measured star discrepancy with its extreme-discrepancy enclosure."""

    star: float
    extreme_lower: float
    extreme_upper: float
    k: int
    n: int
    lags: tuple[int, ...]
    theorem2_upper: float | None = None
    theorem_lower_scale: float | None = None

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "lags": list(self.lags),
            "star": self.star,
            "extreme_lower": self.extreme_lower,
            "extreme_upper": self.extreme_upper,
            "theorem2_upper": self.theorem2_upper,
            "theorem_lower_scale": self.theorem_lower_scale,
        }


@dataclass(frozen=True)
class BoundReport:
    """Reference discrepancy bounds for a prime-modulus inversive stream."""

    p: int
    k: int
    upper: float
    t: float
    lower_threshold: float
    a_p_t: float


def _unit_values(samples: Sequence) -> np.ndarray:
    return np.array(
        [s.u if isinstance(s, UnitSample) else float(s) for s in samples]
    )


def make_tuples(samples: Sequence, k: int, lags: Sequence[int]) -> TupleCloud:
    """One k-tuple per sample index, indices wrapping modulo the period."""
    u = _unit_values(samples)
    n = len(u)
    if n == 0:
        raise EmptyInput("no samples")
    lags = tuple(int(x) for x in lags)
    if (
        len(lags) != k
        or not lags
        or lags[0] != 0
        or any(b <= a for a, b in zip(lags, lags[1:]))
        or lags[-1] >= n
    ):
        raise BadLags(f"lags must satisfy 0 = n_1 < ... < n_k < {n}, got {lags}")
    idx = (np.arange(n)[:, None] + np.array(lags)[None, :]) % n
    return TupleCloud(points=u[idx], k=k, lags=lags, n=n)


def star_discrepancy(cloud: TupleCloud) -> float:
    """Exact star discrepancy D*_N of the tuple cloud.

    The supremum over anchored boxes is attained on the grid of point
    coordinates extended by 1.0 in each axis, provided both the open count
    (coordinates strictly below the corner) and the closed count (below or
    equal) are examined; this scans both.  Exact for k <= 3 and N <= 4096;
    the k = 3 cost grows like N^3, so keep N moderate there.
    """
    if cloud.k > MAX_EXACT_DIM or cloud.n > MAX_EXACT_POINTS:
        raise TooLarge(
            f"exact algorithm limited to k <= {MAX_EXACT_DIM}, "
            f"N <= {MAX_EXACT_POINTS}; got k={cloud.k}, N={cloud.n}"
        )
    if cloud.k == 1:
        return _star_1d(cloud.points[:, 0], cloud.n)
    if cloud.k == 2:
        return _star_2d(cloud.points, cloud.n)
    return _star_3d(cloud.points, cloud.n)


def _star_1d(x: np.ndarray, n: int) -> float:
    ux, counts = np.unique(x, return_counts=True)
    closed = np.cumsum(counts)
    opened = closed - counts
    ex = np.append(ux, 1.0)
    closed = np.append(closed, n)
    opened = np.append(opened, n)
    over = np.max(closed / n - ex)
    under = np.max(ex - opened / n)
    return float(max(over, under, 0.0))


def _star_2d(pts: np.ndarray, n: int) -> float:
    ux, ix = np.unique(pts[:, 0], return_inverse=True)
    uy, iy = np.unique(pts[:, 1], return_inverse=True)
    counts = np.zeros((len(ux), len(uy)), dtype=np.int32)
    np.add.at(counts, (ix, iy), 1)
    prefix = counts.cumsum(axis=0).cumsum(axis=1)
    closed = np.pad(prefix, ((0, 1), (0, 1)), mode="edge")
    opened = np.zeros_like(closed)
    opened[1:, 1:] = closed[:-1, :-1]
    ex = np.append(ux, 1.0)
    ey = np.append(uy, 1.0)
    best = 0.0
    for i in range(len(ex)):  # row-wise to bound memory
        vol = ex[i] * ey
        best = max(best, float(np.max(closed[i] / n - vol)))
        best = max(best, float(np.max(vol - opened[i] / n)))
    return best


def _star_3d(pts: np.ndarray, n: int) -> float:
    ux, ix = np.unique(pts[:, 0], return_inverse=True)
    uy, iy = np.unique(pts[:, 1], return_inverse=True)
    uz, iz = np.unique(pts[:, 2], return_inverse=True)
    ey = np.append(uy, 1.0)
    ez = np.append(uz, 1.0)
    ny, nz = len(uy), len(uz)
    vol_yz = np.outer(ey, ez)
    slices: list[list[tuple[int, int]]] = [[] for _ in range(len(ux))]
    for a, b, c in zip(ix, iy, iz):
        slices[a].append((b, c))
    counts = np.zeros((ny, nz), dtype=np.int32)
    best = 0.0
    for i in range(len(ux) + 1):
        x = ux[i] if i < len(ux) else 1.0
        # entering iteration i, counts holds the points with coordinate < x
        prefix = counts.cumsum(axis=0).cumsum(axis=1)
        opened = np.zeros((ny + 1, nz + 1), dtype=np.int32)
        opened[1:, 1:] = prefix
        best = max(best, float(np.max(x * vol_yz - opened / n)))
        if i < len(ux):
            for b, c in slices[i]:
                counts[b, c] += 1
            prefix = counts.cumsum(axis=0).cumsum(axis=1)
        closed = np.pad(prefix, ((0, 1), (0, 1)), mode="edge")
        best = max(best, float(np.max(closed / n - x * vol_yz)))
    return best


def theorem2_upper(p: int, k: int) -> float:
    """Upper discrepancy bound for any full-period inversive stream:
    2 p^(-1/2) ((k-1)((2/pi) ln p + 7/5)^k + 1) + k/p."""
    if not 2 <= k < p:
        raise BadDimension(f"need 2 <= k < p, got k={k}, p={p}")
    return (
        2.0 / math.sqrt(p) * ((k - 1) * (2.0 / math.pi * math.log(p) + 1.4) ** k + 1.0)
        + k / p
    )


def theorem3_lower(p: int, t: float) -> tuple[float, float]:
    """Existence threshold t/(2(pi+2)) p^(-1/2) together with the parameter
    fraction A_p(t) = (1-t^2) p / ((4-t^2) p + 12 sqrt(p) + 9).

    This is a statement about how many multipliers exceed the threshold,
    not a per-instance inequality; callers report it, they do not assert it.
    """
    if not 0.0 < t <= 1.0:
        raise BadT(f"need 0 < t <= 1, got {t}")
    threshold = t / (2.0 * (math.pi + 2.0)) / math.sqrt(p)
    fraction = (1.0 - t * t) * p / ((4.0 - t * t) * p + 12.0 * math.sqrt(p) + 9.0)
    return threshold, fraction


def bound_report(p: int, k: int, t: float = 0.5) -> BoundReport:
    threshold, fraction = theorem3_lower(p, t)
    return BoundReport(
        p=p, k=k, upper=theorem2_upper(p, k), t=t,
        lower_threshold=threshold, a_p_t=fraction,
    )


def serial_test(samples: Sequence, k: int, lags: Sequence[int]) -> DiscrepancyReport:
    """Star discrepancy of the wraparound k-tuples with the enclosure
    [D*, 2^k D*]; the reference bounds are attached when the sample count
    is prime (the full-period case they apply to)."""
    cloud = make_tuples(samples, k, lags)
    star = star_discrepancy(cloud)
    upper = scale = None
    if 2 <= k < cloud.n and is_probable_prime(cloud.n):
        upper = theorem2_upper(cloud.n, k)
        scale = theorem3_lower(cloud.n, 1.0)[0]
    return DiscrepancyReport(
        star=star,
        extreme_lower=star,
        extreme_upper=float(2**k) * star,
        k=k,
        n=cloud.n,
        lags=cloud.lags,
        theorem2_upper=upper,
        theorem_lower_scale=scale,
    )


def randu_plane_labels(sample_count: int) -> set[int]:
    """Distinct integers (x_{n+2} - 6 x_{n+1} + 9 x_n) / 2^31 over RANDU
    triples; each labels one plane 9x - 6y + z = label in the unit cube."""
    if sample_count < 3:
        raise ValueError(f"need at least 3 samples, got {sample_count}")
    spec = randu_preset()
    q, a = spec.q, spec.a
    x0 = spec.x0 % q
    x1 = a * x0 % q
    labels = set()
    for _ in range(sample_count - 2):
        x2 = a * x1 % q
        combo = x2 - 6 * x1 + 9 * x0
        if combo % q:
            raise ArithmeticError("RANDU three-term recurrence violated")
        labels.add(combo // q)
        x0, x1 = x1, x2
    return labels


def randu_plane_count(sample_count: int) -> int:
    """Number of distinct planes hit by consecutive RANDU triples."""
    return len(randu_plane_labels(sample_count))


def chi_square_uniformity(samples: Sequence, bins: int) -> tuple[float, int]:
    """Pearson chi^2 statistic of the sample histogram against uniformity."""
    if bins < 2:
        raise ValueError(f"need at least 2 bins, got {bins}")
    u = _unit_values(samples)
    if u.size == 0:
        raise EmptyInput("no samples")
    counts = np.bincount((u * bins).astype(np.int64), minlength=bins)
    expected = u.size / bins
    return float(((counts - expected) ** 2 / expected).sum()), bins


# 99.9% chi^2 quantiles for 1..100 degrees of freedom (frozen constants, so
# no statistics library is needed at runtime).
_CHI2_Q999 = (
    10.8276, 13.8155, 16.2662, 18.4668, 20.5150,
    22.4577, 24.3219, 26.1245, 27.8772, 29.5883,
    31.2641, 32.9095, 34.5282, 36.1233, 37.6973,
    39.2524, 40.7902, 42.3124, 43.8202, 45.3147,
    46.7970, 48.2679, 49.7282, 51.1786, 52.6197,
    54.0520, 55.4760, 56.8923, 58.3012, 59.7031,
    61.0983, 62.4872, 63.8701, 65.2472, 66.6188,
    67.9852, 69.3465, 70.7029, 72.0547, 73.4020,
    74.7449, 76.0838, 77.4186, 78.7495, 80.0767,
    81.4003, 82.7204, 84.0371, 85.3506, 86.6608,
    87.9680, 89.2722, 90.5734, 91.8718, 93.1675,
    94.4605, 95.7510, 97.0388, 98.3242, 99.6072,
    100.8879, 102.1662, 103.4424, 104.7163, 105.9881,
    107.2579, 108.5256, 109.7913, 111.0551, 112.3169,
    113.5769, 114.8351, 116.0915, 117.3462, 118.5991,
    119.8503, 121.1000, 122.3480, 123.5944, 124.8392,
    126.0826, 127.3244, 128.5648, 129.8037, 131.0412,
    132.2773, 133.5121, 134.7455, 135.9776, 137.2084,
    138.4379, 139.6661, 140.8931, 142.1189, 143.3435,
    144.5670, 145.7892, 147.0104, 148.2304, 149.4493,
)


def chi2_quantile_999(dof: int) -> float:
    """99.9% quantile of the chi^2 distribution, dof in 1..100."""
    if not 1 <= dof <= len(_CHI2_Q999):
        raise ValueError(f"quantile table covers dof 1..{len(_CHI2_Q999)}")
    return _CHI2_Q999[dof - 1]
