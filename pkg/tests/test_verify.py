from filament_prng.verify import (
    SuiteResult,
    verify_closure,
    verify_compound,
    verify_gauss,
    verify_theorem1,
    worker_count,
)


def test_worker_count_env(monkeypatch):
    monkeypatch.delenv("FILAMENT_PRNG_THREADS", raising=False)
    assert worker_count() == 1
    monkeypatch.setenv("FILAMENT_PRNG_THREADS", "4")
    assert worker_count() == 4
    monkeypatch.setenv("FILAMENT_PRNG_THREADS", "0")
    assert worker_count() == 1
    monkeypatch.setenv("FILAMENT_PRNG_THREADS", "plenty")
    assert worker_count() == 1


def test_suite_result_describe():
    good = SuiteResult(name="demo", cases=10, max_error=1e-12, tolerance=1e-9)
    bad = SuiteResult(name="demo", cases=10, max_error=1e-3, tolerance=1e-9)
    assert good.passed and "pass" in good.describe()
    assert not bad.passed and "FAIL" in bad.describe()


def test_gauss_sweep_deterministic_across_workers():
    serial = verify_gauss(q_max=60, workers=1)
    threaded = verify_gauss(q_max=60, workers=4)
    assert serial == threaded
    assert all(s.passed for s in serial)


def test_theorem1_sweep_small():
    suite = verify_theorem1(sides_range=(3, 4), q_max=8, workers=2)
    assert suite.passed
    assert suite.cases > 0


def test_closure_sweep_small():
    suite = verify_closure(sides_range=(3, 4), q_max=10)
    assert suite.passed


def test_compound_sweep_small():
    suite = verify_compound(prime_sets=((5, 7),), p_max=300)
    assert suite.passed
    # admissible means coprime to 35
    assert suite.cases == sum(1 for p in range(1, 301) if p % 5 and p % 7)
