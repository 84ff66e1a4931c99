import json
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from filament_prng.errors import BadDimension, BadLags, BadT, EmptyInput, TooLarge
from filament_prng.prng import StreamSpec, eicg_stream, vfe_unit_samples
from filament_prng.stattest import (
    TupleCloud,
    bound_report,
    chi2_quantile_999,
    chi_square_uniformity,
    make_tuples,
    randu_plane_count,
    randu_plane_labels,
    serial_test,
    star_discrepancy,
    theorem2_upper,
    theorem3_lower,
)
from helpers import star_discrepancy_oracle


def cloud_from(points) -> TupleCloud:
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    n, k = pts.shape
    return TupleCloud(points=pts, k=k, lags=tuple(range(k)), n=n)


def test_make_tuples_overlapping_pairs():
    samples = [0.1, 0.2, 0.3, 0.4, 0.5]
    cloud = make_tuples(samples, 2, (0, 1))
    assert cloud.n == 5 and cloud.k == 2
    assert cloud.points[0].tolist() == [0.1, 0.2]
    assert cloud.points[4].tolist() == [0.5, 0.1]  # wraps around


def test_make_tuples_triples_wraparound():
    samples = [i / 7 for i in range(7)]
    cloud = make_tuples(samples, 3, (0, 1, 2))
    assert cloud.points.shape == (7, 3)
    assert cloud.points[5].tolist() == [5 / 7, 6 / 7, 0.0]
    assert cloud.points[6].tolist() == [6 / 7, 0.0, 1 / 7]


def test_make_tuples_constant_sequence():
    cloud = make_tuples([0.25] * 4, 2, (0, 1))
    assert np.all(cloud.points == 0.25)


def test_make_tuples_bad_lags():
    samples = [0.1, 0.2, 0.3]
    with pytest.raises(BadLags):
        make_tuples(samples, 2, (1, 2))  # must start at 0
    with pytest.raises(BadLags):
        make_tuples(samples, 2, (0, 0))  # strictly increasing
    with pytest.raises(BadLags):
        make_tuples(samples, 3, (0, 1))  # length must equal k
    with pytest.raises(BadLags):
        make_tuples(samples, 2, (0, 3))  # lag beyond the period
    with pytest.raises(EmptyInput):
        make_tuples([], 2, (0, 1))


def test_star_single_point():
    assert star_discrepancy(cloud_from([[0.5]])) == pytest.approx(0.5)


def test_star_equally_spaced_grid():
    q = 8
    cloud = cloud_from([[j / q] for j in range(q)])
    assert star_discrepancy(cloud) == pytest.approx(1 / q)


def test_star_midpoint_optimum():
    n = 10
    cloud = cloud_from([[(2 * i - 1) / (2 * n)] for i in range(1, n + 1)])
    assert star_discrepancy(cloud) == pytest.approx(1 / (2 * n))


def test_star_matches_oracle_random_sets():
    rng = np.random.default_rng(20240817)
    for _ in range(60):
        n = int(rng.integers(1, 65))
        k = int(rng.integers(1, 3))
        pts = rng.random((n, k))
        assert star_discrepancy(cloud_from(pts)) == star_discrepancy_oracle(pts)


def test_star_matches_oracle_with_duplicates():
    rng = np.random.default_rng(7)
    base = rng.random((20, 2))
    pts = np.vstack([base, base[:7], base[3:5]])
    assert star_discrepancy(cloud_from(pts)) == star_discrepancy_oracle(pts)


def test_star_3d_matches_oracle():
    rng = np.random.default_rng(99)
    for n in (5, 17, 40):
        pts = rng.random((n, 3))
        assert star_discrepancy(cloud_from(pts)) == pytest.approx(
            star_discrepancy_oracle(pts), abs=1e-12
        )


def test_star_permutation_invariant():
    rng = np.random.default_rng(3)
    pts = rng.random((30, 2))
    shuffled = pts[rng.permutation(30)]
    assert star_discrepancy(cloud_from(pts)) == star_discrepancy(
        cloud_from(shuffled)
    )


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=1, max_value=40), st.integers(min_value=0, max_value=2**32 - 1))
def test_star_duplicate_point_adjustment(n, seed):
    rng = np.random.default_rng(seed)
    pts = rng.random((n, 2))
    base = star_discrepancy(cloud_from(pts))
    extended = np.vstack([pts, pts[:1]])
    grown = star_discrepancy(cloud_from(extended))
    assert grown >= base - 1.0 / n - 1e-12
    assert 0.0 <= grown <= 1.0


def test_star_too_large():
    with pytest.raises(TooLarge):
        star_discrepancy(cloud_from(np.zeros((10, 4))))
    with pytest.raises(TooLarge):
        star_discrepancy(cloud_from(np.linspace(0, 0.999, 5000)[:, None]))


def test_serial_test_eicg_within_bound():
    q = 101
    samples = eicg_stream(StreamSpec.eicg(q, a=4, b=0), q)
    report = serial_test(samples, 2, (0, 1))
    assert report.n == q and report.k == 2
    assert report.extreme_lower == report.star
    assert report.extreme_upper == pytest.approx(4 * report.star)
    assert report.theorem2_upper is not None
    assert report.extreme_upper <= report.theorem2_upper


def test_serial_test_constant_sequence_clusters():
    report = serial_test([0.1] * 32, 2, (0, 1))
    assert report.star > 0.9
    assert report.theorem2_upper is None  # 32 is not prime


def test_serial_test_grid_k1():
    q = 64
    report = serial_test([j / q for j in range(q)], 1, (0,))
    assert report.star == pytest.approx(1 / q)
    assert report.theorem2_upper is None


def test_theorem2_frozen_value():
    # independent evaluation of the bound at p=101, k=2
    expected = 2 / math.sqrt(101) * ((2 / math.pi * math.log(101) + 1.4) ** 2 + 1) + 2 / 101
    assert theorem2_upper(101, 2) == pytest.approx(expected, rel=1e-15)
    assert theorem2_upper(101, 2) == pytest.approx(3.9640, abs=5e-4)


def test_theorem2_limits():
    assert theorem2_upper(10**12 + 39, 2) < 1e-3  # decays like (log p)^k / sqrt(p)
    values = [theorem2_upper(101, k) for k in range(2, 6)]
    assert values == sorted(values)
    with pytest.raises(BadDimension):
        theorem2_upper(101, 1)
    with pytest.raises(BadDimension):
        theorem2_upper(5, 7)


def test_theorem3_values():
    threshold, fraction = theorem3_lower(101, 1.0)
    assert fraction == 0.0
    assert threshold == pytest.approx(1 / (2 * (math.pi + 2) * math.sqrt(101)))
    threshold_05, fraction_05 = theorem3_lower(101, 0.5)
    assert fraction_05 == pytest.approx(
        0.75 * 101 / (3.75 * 101 + 12 * math.sqrt(101) + 9), rel=1e-15
    )
    # threshold scales exactly like p^(-1/2)
    assert theorem3_lower(4 * 101, 0.5)[0] == pytest.approx(threshold_05 / 2)
    with pytest.raises(BadT):
        theorem3_lower(101, 0.0)
    with pytest.raises(BadT):
        theorem3_lower(101, 1.5)


def test_bound_report_fields():
    report = bound_report(101, 2, t=0.5)
    assert report.p == 101 and report.k == 2
    assert 0.0 < report.a_p_t < 1.0
    assert report.upper > 0.0


def test_randu_single_triple():
    assert randu_plane_count(3) == 1


def test_randu_labels_within_range():
    labels = randu_plane_labels(20_000)
    assert labels <= set(range(-5, 10))
    assert randu_plane_count(20_000) == len(labels)


def test_randu_monotone_in_count():
    assert randu_plane_count(100) <= randu_plane_count(1000) <= 15


def test_chi2_uniform_grid_is_zero():
    q = 40
    stat, bins = chi_square_uniformity([j / q for j in range(q)], 20)
    assert stat == pytest.approx(0.0, abs=1e-12)
    assert bins == 20


def test_chi2_single_bin_maximal():
    n, bins = 60, 12
    stat, _ = chi_square_uniformity([0.01] * n, bins)
    assert stat == pytest.approx(n * (bins - 1))


def test_chi2_rejects_empty():
    with pytest.raises(EmptyInput):
        chi_square_uniformity([], 10)


def test_chi2_eicg_passes():
    samples = eicg_stream(StreamSpec.eicg(1009, a=4, b=0), 1009)
    stat, _ = chi_square_uniformity(samples, 20)
    assert stat < chi2_quantile_999(19)


def test_chi2_quantile_table():
    assert chi2_quantile_999(1) == pytest.approx(10.828, abs=1e-3)
    assert chi2_quantile_999(19) == pytest.approx(43.820, abs=1e-3)
    assert chi2_quantile_999(100) == pytest.approx(149.449, abs=1e-3)
    with pytest.raises(ValueError):
        chi2_quantile_999(101)


def test_vfe_discrepancy_transfers_from_eicg():
    # same underlying integers, so identical serial behaviour once the
    # leading zero sample is prepended
    q = 211
    phases = [s.u for s in vfe_unit_samples(q)]
    eicg = [s.u for s in eicg_stream(StreamSpec.eicg(q, a=4, b=0), q)]
    assert eicg == [0.0] + phases
    star_eicg = star_discrepancy(make_tuples(eicg, 2, (0, 1)))
    star_vfe = star_discrepancy(make_tuples([0.0] + phases, 2, (0, 1)))
    assert star_eicg == star_vfe


def test_report_json_round_trip():
    q = 101
    samples = eicg_stream(StreamSpec.eicg(q, a=4, b=0), q)
    report = serial_test(samples, 2, (0, 1))
    payload = json.loads(json.dumps(report.as_dict()))
    assert set(payload) == {
        "n",
        "k",
        "lags",
        "star",
        "extreme_lower",
        "extreme_upper",
        "theorem2_upper",
        "theorem_lower_scale",
    }
    assert payload["n"] == q
    assert payload["lags"] == [0, 1]
