"""Frame transport along the skew polygon and the closed forms it validates.

At a rational time p/q the tangent evolution of a regular M-gon under the
binormal flow is a skew polygon: Mq corners for odd q, Mq/2 for even q.
Each corner applies a fixed-angle rotation whose axis direction is set by a
Gauss-sum phase; transporting an orthonormal frame corner to corner gives
the triple and scalar products that the closed form `z_qm_closed` predicts
from a single modular inverse.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DegeneratePolygon, IndexOutOfRange, NotCoprime
from .gauss import TWO_PI, theta_sequence
from .modular import phi_p


@dataclass(frozen=True, slots=True)
class RationalTime:
    """Reduced fraction p/q selecting the observation time (2 pi / M^2)(p/q)."""

    p: int
    q: int

    def __post_init__(self):
        if self.q < 1:
            raise ValueError(f"denominator must be positive, got {self.q}")
        if self.p < 0:
            raise ValueError(f"numerator must be nonnegative, got {self.p}")
        if math.gcd(self.p, self.q) != 1:
            raise NotCoprime(f"{self.p}/{self.q} is not a reduced fraction")


@dataclass(frozen=True, slots=True)
class PolygonConfig:
    """A regular polygon initial curve observed at a rational time."""

    sides: int
    time: RationalTime

    def __post_init__(self):
        if self.sides < 3:
            raise DegeneratePolygon(f"need at least 3 sides, got {self.sides}")

    @property
    def corner_count(self) -> int:
        """Corners of the skew polygon over one full period."""
        q = self.time.q
        return self.sides * q if q % 2 else self.sides * q // 2

    @property
    def side_length(self) -> float:
        """Arc-length spacing between consecutive corners."""
        q = self.time.q
        return (2.0 if q % 2 else 4.0) * math.pi / (self.sides * q)


@dataclass(frozen=True, slots=True)
class CornerAngle:
    """Turning angle between adjacent sides, with its cached cos/sin."""

    rho: float
    cos_rho: float
    sin_rho: float


@dataclass(frozen=True, eq=False)
class CornerRotation:
    """The 3x3 rotation applied to the stacked frame rows at one corner."""

    theta: float
    matrix: np.ndarray


@dataclass(frozen=True, eq=False)
class FrameMatrix:
    """Orthonormal frame with rows (tangent, first normal, second normal)."""

    matrix: np.ndarray

    @property
    def tangent(self) -> np.ndarray:
        return self.matrix[0]

    @property
    def normal1(self) -> np.ndarray:
        return self.matrix[1]

    @property
    def normal2(self) -> np.ndarray:
        return self.matrix[2]


@dataclass(frozen=True, slots=True)
class CirclePoint:
    """Point on the circle of center i cos^2(rho) and radius sin^2(rho)."""

    re: float
    im: float
    p: int

    @property
    def value(self) -> complex:
        return complex(self.re, self.im)


def corner_angle(sides: int, q: int) -> CornerAngle:
    """Turning angle rho with cos(rho) = 2 cos^(2/q)(pi/M) - 1 for odd q,
    2 cos^(4/q)(pi/M) - 1 for even q."""
    if sides < 3:
        raise DegeneratePolygon(f"need at least 3 sides, got {sides}")
    if q < 1:
        raise ValueError(f"q must be positive, got {q}")
    exponent = (2.0 if q % 2 else 4.0) / q
    c = 2.0 * math.cos(math.pi / sides) ** exponent - 1.0
    c = min(c, 1.0)  # float guard; the formula never leaves (-1, 1]
    rho = math.acos(c)
    return CornerAngle(rho=rho, cos_rho=c, sin_rho=math.sin(rho))


def rotation_matrix(angle: CornerAngle, theta: float) -> CornerRotation:
    """Corner rotation acting on the (tangent, normal, normal) rows.

    Identity when rho = 0; for theta = 0 it reduces to an in-plane turn
    [[c, s, 0], [-s, c, 0], [0, 0, 1]].
    """
    c, s = angle.cos_rho, angle.sin_rho
    ct, st = math.cos(theta), math.sin(theta)
    m = np.array(
        [
            [c, s * ct, s * st],
            [-s * ct, c * ct * ct + st * st, (c - 1.0) * ct * st],
            [-s * st, (c - 1.0) * ct * st, c * st * st + ct * ct],
        ]
    )
    return CornerRotation(theta=theta, matrix=m)


def _active_thetas(config: PolygonConfig) -> np.ndarray:
    """Rotation phase at each corner over one full period.

    The phase at global grid index j is theta_(j mod q); for even q only
    every second grid index carries a corner (odd indices when q = 2 mod 4,
    even when q = 0 mod 4).
    """
    q = config.time.q
    phases = {tp.m: tp.theta for tp in theta_sequence(config.time.p, q)}
    n = config.sides * q
    if q % 2 == 1:
        grid = range(n)
    elif q % 4 == 2:
        grid = range(1, n, 2)
    else:
        grid = range(0, n, 2)
    return np.array([phases[j % q] for j in grid])


def _rotation_stack(angle: CornerAngle, thetas: np.ndarray) -> np.ndarray:
    """(K, 3, 3) stack of corner rotations for the given phases."""
    c, s = angle.cos_rho, angle.sin_rho
    ct, st = np.cos(thetas), np.sin(thetas)
    out = np.empty((len(thetas), 3, 3))
    out[:, 0, 0] = c
    out[:, 0, 1] = s * ct
    out[:, 0, 2] = s * st
    out[:, 1, 0] = -s * ct
    out[:, 1, 1] = c * ct * ct + st * st
    out[:, 1, 2] = (c - 1.0) * ct * st
    out[:, 2, 0] = -s * st
    out[:, 2, 1] = out[:, 1, 2]
    out[:, 2, 2] = c * st * st + ct * ct
    return out


def _config_rotations(config: PolygonConfig) -> np.ndarray:
    angle = corner_angle(config.sides, config.time.q)
    return _rotation_stack(angle, _active_thetas(config))


def transport_frames(
    config: PolygonConfig, initial: FrameMatrix | None = None
) -> list[FrameMatrix]:
    """Frames after each corner of one period, from the identity frame
    (or `initial` when given).

    No renormalization is applied; orthogonality drift over a period is a
    measured quantity, not a hidden one.
    """
    frame = np.eye(3) if initial is None else np.array(initial.matrix, dtype=float)
    out = []
    for rot in _config_rotations(config):
        frame = rot @ frame
        out.append(FrameMatrix(matrix=frame))
    return out


def _ordered_product(mats: np.ndarray) -> np.ndarray:
    """mats[-1] @ ... @ mats[0] by pairwise tree reduction (deterministic)."""
    if len(mats) == 0:
        return np.eye(3)
    while len(mats) > 1:
        half = len(mats) // 2
        paired = mats[1 : 2 * half : 2] @ mats[0 : 2 * half : 2]
        mats = paired if len(mats) % 2 == 0 else np.concatenate([paired, mats[-1:]])
    return mats[0]


def closure_residual(config: PolygonConfig) -> float:
    """Frobenius distance of the full-period rotation product from identity."""
    prod = _ordered_product(_config_rotations(config))
    return float(np.linalg.norm(prod - np.eye(3)))


def build_polygon(config: PolygonConfig) -> np.ndarray:
    """Vertex positions (K, 3): cumulative sum of side_length * tangent from
    the origin.  Arc-length side spacing; the traversal closes whenever the
    rotation product does."""
    tangents = np.array([f.matrix[0] for f in transport_frames(config)])
    verts = np.zeros_like(tangents)
    verts[1:] = np.cumsum(config.side_length * tangents[:-1], axis=0)
    return verts


def _tangent_rows_from(config: PolygonConfig, initial: np.ndarray) -> np.ndarray:
    """Tangent rows through one period: row i is the tangent before corner i,
    for i = 0..K+1 (the last entry wraps one corner past the period)."""
    rots = _config_rotations(config)
    rows = np.empty((len(rots) + 2, 3))
    frame = initial
    rows[0] = frame[0]
    for i, rot in enumerate(rots):
        frame = rot @ frame
        rows[i + 1] = frame[0]
    frame = rots[0] @ frame  # phases repeat with period K
    rows[len(rots) + 1] = frame[0]
    return rows


@lru_cache(maxsize=512)
def _tangent_rows(config: PolygonConfig) -> np.ndarray:
    rows = _tangent_rows_from(config, np.eye(3))
    rows.flags.writeable = False
    return rows


def _pair_positions(config: PolygonConfig, m: int) -> tuple[int, int, int]:
    """Row indices (before, between, after) for quantity index m.

    Odd q and q = 0 mod 4 pair corner m with the next corner; q = 2 mod 4
    pairs the corner before index m with the one at m, wrapping m = 0
    around the period.
    """
    count = config.corner_count
    if not 0 <= m < count:
        raise IndexOutOfRange(f"index {m} outside active set of size {count}")
    if config.time.q % 4 == 2:
        return (count - 1, count, count + 1) if m == 0 else (m - 1, m, m + 1)
    return m, m + 1, m + 2


def triple_product_geometric(config: PolygonConfig, m: int) -> float:
    """det of the stacked tangents before/between/after corner pair m,
    computed from transported frames."""
    rows = _tangent_rows(config)
    i, j, k = _pair_positions(config, m)
    return float(np.linalg.det(np.stack([rows[i], rows[j], rows[k]])))


def scalar_product_geometric(config: PolygonConfig, m: int) -> float:
    """Dot product of the tangents entering and leaving corner pair m."""
    rows = _tangent_rows(config)
    i, _, k = _pair_positions(config, m)
    return float(rows[i] @ rows[k])


def corner_products(
    config: PolygonConfig, initial: FrameMatrix | None = None
) -> tuple[np.ndarray, np.ndarray]:
    """All triple and scalar products over the active index set in one
    transported pass.  `initial` replaces the identity starting frame (the
    products are rotation-invariant, which tests exercise through it)."""
    if initial is None:
        rows = _tangent_rows(config)
    else:
        rows = _tangent_rows_from(config, np.array(initial.matrix, dtype=float))
    idx = np.array([_pair_positions(config, m) for m in range(config.corner_count)])
    stacked = rows[idx]  # (K, 3, 3): rows before, between, after
    triples = np.linalg.det(stacked)
    scalars = np.einsum("ij,ij->i", stacked[:, 0, :], stacked[:, 2, :])
    return triples, scalars


def z_qm_closed(sides: int, q: int, p: int, m: int) -> CirclePoint:
    """Closed form of triple + i * scalar at quantity index m:
    i c^2 - i s^2 exp(2 pi i phi (2m+1) / q), or with exponent
    phi m / (q/2) when q = 2 mod 4."""
    res = phi_p(p, q)
    angle = corner_angle(sides, q)
    if q % 4 == 2:
        num, den = res.phi * m, res.effective_modulus
    else:
        num, den = res.phi * (2 * m + 1), q
    alpha = TWO_PI * ((num % den) / den)
    c2, s2 = angle.cos_rho**2, angle.sin_rho**2
    return CirclePoint(re=s2 * math.sin(alpha), im=c2 - s2 * math.cos(alpha), p=p)
