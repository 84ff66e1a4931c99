"""Verification sweeps: closed forms against literal summation, geometric
transport against the closed form, closure of the corner-rotation product,
and the compound product identity.

Shared by the `verify` CLI subcommand and the acceptance test suite.  The
FILAMENT_PRNG_THREADS environment variable caps the worker pool used for
the per-modulus sweeps; reductions are max-only, so the result does not
depend on scheduling.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from .filament import PolygonConfig, RationalTime, closure_residual, corner_products, z_qm_closed
from .gauss import active_indices, closed_0mod4_row, closed_2mod4_row, closed_odd_row, gauss_direct_row
from .modular import coprime_residues
from .prng import compound_identity_residual, compound_stream


@dataclass(frozen=True)
class SuiteResult:
    """Outcome of one sweep: worst observed error against its tolerance."""

    name: str
    cases: int
    max_error: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.max_error < self.tolerance

    def describe(self) -> str:
        status = "pass" if self.passed else "FAIL"
        return (
            f"{self.name:<18} {status}  cases={self.cases:<8} "
            f"max_error={self.max_error:.3e}  tolerance={self.tolerance:.1e}"
        )


def worker_count() -> int:
    """Worker cap from FILAMENT_PRNG_THREADS (default: single-threaded)."""
    try:
        return max(1, int(os.environ.get("FILAMENT_PRNG_THREADS", "1")))
    except ValueError:
        return 1


def _map(fn: Callable, items: Iterable, workers: int | None = None) -> list:
    workers = worker_count() if workers is None else workers
    if workers <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _sweep_residues(q: int) -> list[int]:
    """Coprime p values used by the sweeps; q = 1 contributes p = 1."""
    return coprime_residues(q) or [1]


def _gauss_errors_for_q(q: int) -> tuple[float, float, int, int]:
    """(magnitude error, closed-form error, magnitude cases, closed cases),
    errors normalized by sqrt(q)."""
    scale = math.sqrt(q)
    m = np.arange(q)
    if q % 2:
        law = np.full(q, math.sqrt(q))
    else:
        law = np.where((q // 2 - m) % 2 == 0, math.sqrt(2 * q), 0.0)
    active = np.asarray(active_indices(q))
    mag_err = closed_err = 0.0
    mag_cases = closed_cases = 0
    for p in _sweep_residues(q):
        row = gauss_direct_row(-p, q)
        mag_err = max(mag_err, float(np.max(np.abs(np.abs(row) - law))) / scale)
        mag_cases += q
        if q % 2:
            closed = closed_odd_row(p, q, active)
        elif q % 4 == 2 and q > 2:
            closed = closed_2mod4_row(p, q, active)
        elif q % 4 == 0:
            closed = closed_0mod4_row(p, q, active)
        else:  # q = 2 carries no closed form; the direct route stands alone
            continue
        closed_err = max(
            closed_err, float(np.max(np.abs(closed - row[active]))) / scale
        )
        closed_cases += len(active)
    return mag_err, closed_err, mag_cases, closed_cases


def verify_gauss(q_max: int = 300, workers: int | None = None) -> list[SuiteResult]:
    """Magnitude law and closed forms against literal summation, for every
    coprime (p, q) with q <= q_max and every index m."""
    rows = _map(_gauss_errors_for_q, range(1, q_max + 1), workers)
    mag_err = max(r[0] for r in rows)
    closed_err = max(r[1] for r in rows)
    return [
        SuiteResult("gauss-magnitude", sum(r[2] for r in rows), mag_err, 1e-9),
        SuiteResult("gauss-closed", sum(r[3] for r in rows), closed_err, 1e-9),
    ]


def _theorem1_error_for_q(args: tuple[int, int]) -> tuple[float, int]:
    sides, q = args
    worst = 0.0
    cases = 0
    for p in _sweep_residues(q):
        config = PolygonConfig(sides, RationalTime(p, q))
        triples, scalars = corner_products(config)
        for m in range(config.corner_count):
            closed = z_qm_closed(sides, q, p, m)
            err = math.hypot(triples[m] - closed.re, scalars[m] - closed.im)
            worst = max(worst, err)
        cases += config.corner_count
    return worst, cases


def verify_theorem1(
    sides_range: tuple[int, int] = (3, 8),
    q_max: int = 40,
    workers: int | None = None,
) -> SuiteResult:
    """Geometric triple/scalar products from frame transport against the
    closed form, for every valid (sides, q, p, m)."""
    jobs = [
        (sides, q)
        for sides in range(sides_range[0], sides_range[1] + 1)
        for q in range(1, q_max + 1)
    ]
    rows = _map(_theorem1_error_for_q, jobs, workers)
    return SuiteResult(
        "theorem1",
        sum(r[1] for r in rows),
        max(r[0] for r in rows),
        1e-8,
    )


def _closure_error_for_q(args: tuple[int, int]) -> tuple[float, int]:
    sides, q = args
    worst = 0.0
    cases = 0
    for p in _sweep_residues(q):
        config = PolygonConfig(sides, RationalTime(p, q))
        worst = max(worst, closure_residual(config))
        cases += 1
    return worst, cases


def verify_closure(
    sides_range: tuple[int, int] = (3, 10),
    q_max: int = 50,
    workers: int | None = None,
) -> SuiteResult:
    """Frobenius residual of the full-period rotation product against the
    identity, for every valid (sides, q, p)."""
    jobs = [
        (sides, q)
        for sides in range(sides_range[0], sides_range[1] + 1)
        for q in range(1, q_max + 1)
    ]
    rows = _map(_closure_error_for_q, jobs, workers)
    return SuiteResult(
        "closure",
        sum(r[1] for r in rows),
        max(r[0] for r in rows),
        1e-7,
    )


def verify_compound(
    prime_sets: Sequence[Sequence[int]] = ((5, 7), (11, 13, 17)),
    p_max: int = 10_000,
    sides: int = 3,
) -> SuiteResult:
    """Circle-product identity over every admissible index p <= p_max.

    compound_stream already raises if the identity drifts past 1e-9; this
    sweep records the worst residual explicitly.
    """
    worst = 0.0
    cases = 0
    for primes in prime_sets:
        modulus = math.prod(primes)
        count = sum(1 for p in range(1, p_max + 1) if math.gcd(p, modulus) == 1)
        for sample in compound_stream(sides, primes, count):
            worst = max(
                worst,
                compound_identity_residual(sides, tuple(primes), sample.n, sample.u),
            )
            cases += 1
    return SuiteResult("compound", cases, worst, 1e-9)
