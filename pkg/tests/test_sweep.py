import numpy as np
import pytest

from becck import (SweepSpec, StabilityReport, bistable_window,
                   ck_comparison_metrics, paper_base_params, preset_names,
                   preset_spec, run_sweep)
from becck.cli import row_to_csv
from becck.sweep import resolve_workers

KAPPA = paper_base_params().kappa


def _spec(lo, hi, count, policy="all", ck_mode="paired", var="delta_c",
          **base_overrides):
    base = paper_base_params(eta=2 * KAPPA, **base_overrides)
    return SweepSpec(var=var, start=lo * KAPPA, stop=hi * KAPPA, count=count,
                     base=base, ck_mode=ck_mode, branch_policy=policy)


def test_preset_table():
    assert preset_names() == ("fig2a", "fig2b", "fig3a", "fig3b", "fig4",
                              "fig5", "fig6", "fig7", "fig8")
    for name in preset_names():
        spec = preset_spec(name)
        assert spec.count == 501
        assert spec.ck_mode == "paired"
        assert spec.preset == name
    assert preset_spec("fig5").var == "eta"
    assert preset_spec("fig8").var == "omega_sw"
    with pytest.raises(ValueError, match="unknown preset"):
        preset_spec("fig99")


def test_spec_validation():
    with pytest.raises(ValueError):
        _spec(0.0, 1.0, 1)  # single-point grid
    with pytest.raises(ValueError):
        _spec(1.0, 1.0, 5)  # empty interval
    with pytest.raises(ValueError):
        _spec(0.0, 1.0, 5, policy="best")
    with pytest.raises(ValueError):
        _spec(0.0, 1.0, 5, ck_mode="both")
    with pytest.raises(ValueError):
        _spec(0.0, 1.0, 5, var="tuning")


def test_grid_endpoints():
    g = _spec(-1.0, 2.0, 7).grid()
    assert g[0] == -1.0 * KAPPA
    assert g[-1] == 2.0 * KAPPA
    assert len(g) == 7


def test_row_ordering_paired_all():
    rows = run_sweep(_spec(4.9, 5.1, 3))
    values = sorted({r.sweep_value for r in rows})
    assert len(values) == 3
    cursor = 0
    for v in values:
        chunk = [r for r in rows if r.sweep_value == v]
        # grid-major: each value's rows form one contiguous block
        block = rows[cursor:cursor + len(chunk)]
        assert [id(r) for r in block] == [id(r) for r in chunk]
        # branch-major, cross-Kerr off before on inside each branch
        key = [(r.branch_index, r.ck_enabled) for r in chunk]
        assert key == sorted(key)
        assert [r.branch_index for r in chunk] == [0, 0, 1, 1, 2, 2]
        cursor += len(chunk)
    assert all(a.sweep_value <= b.sweep_value
               for a, b in zip(rows, rows[1:]))


def test_branch_policies():
    lowest = run_sweep(_spec(4.9, 5.1, 2, policy="lowest", ck_mode="on"))
    highest = run_sweep(_spec(4.9, 5.1, 2, policy="highest", ck_mode="on"))
    assert [r.branch_index for r in lowest] == [0, 0]
    assert [r.branch_index for r in highest] == [2, 2]
    assert all(r.stable for r in lowest + highest)
    assert all(r.n_branches == 3 for r in lowest + highest)


def test_parallel_run_is_bitwise_deterministic():
    spec = _spec(3.8, 4.4, 5)
    serial = run_sweep(spec, workers=1)
    parallel = run_sweep(spec, workers=2)
    assert len(serial) == len(parallel)
    for a, b in zip(serial, parallel):
        assert row_to_csv(a) == row_to_csv(b)
        assert a.warnings == b.warnings
        if a.covariance is None:
            assert b.covariance is None
        else:
            assert np.array_equal(a.covariance, b.covariance)


def test_unstable_middle_branch_has_no_observables():
    rows = run_sweep(_spec(4.9, 5.1, 2))
    middles = [r for r in rows if r.branch_index == 1]
    assert middles
    for r in middles:
        assert r.stable is False
        assert r.E_N is None and r.S_Q is None and r.S_P is None
        assert r.n_incoherent is None
        assert r.covariance is None
        assert r.max_real_part > 0.0
        assert r.bogoliubov_ok is None


def test_omega_b_ratio_is_unity_without_cross_kerr():
    rows = run_sweep(_spec(4.9, 5.1, 3))
    for r in rows:
        if not r.ck_enabled:
            assert r.omega_B_ratio == 1.0
        elif r.n_photon > 0:
            assert r.omega_B_ratio > 1.0


def test_eta_sweep_variable():
    spec = _spec(0.0, 1.0, 3, var="eta", ck_mode="on", policy="lowest")
    rows = run_sweep(spec)
    assert [r.sweep_var for r in rows] == ["eta"] * 3
    assert rows[0].sweep_value == 0.0
    assert rows[0].n_photon == 0.0
    assert rows[0].stable is True


def test_bistable_window_detection():
    rows = run_sweep(_spec(4.9, 5.1, 3))
    win = bistable_window(rows)
    assert win == (4.9 * KAPPA, 5.1 * KAPPA)
    off_only = bistable_window([r for r in rows if not r.ck_enabled])
    assert off_only == win
    none_rows = run_sweep(_spec(-5.0, -4.0, 3))
    assert bistable_window(none_rows) is None


def test_ck_comparison_metrics_paired_lowest():
    m = ck_comparison_metrics(
        run_sweep(_spec(-2.0, 0.0, 5, policy="lowest")))
    assert m.values.shape == (5,)
    assert m.differences.shape == (5,)
    assert np.all(m.differences >= 0.0)
    assert m.max_difference == m.differences.max()
    assert m.argmax_value in m.values
    assert m.skipped == ()


def test_ck_comparison_rejects_multibranch_rows():
    rows = run_sweep(_spec(4.9, 5.1, 2))  # policy 'all' at a bistable point
    with pytest.raises(ValueError):
        ck_comparison_metrics(rows)


def test_no_stable_branch_marker(monkeypatch):
    def verdict_unstable(dd):
        return StabilityReport(eigenvalues=(1.0 + 0j,) * 4,
                               max_real_part=1.0, routh_hurwitz_pass=False,
                               stable=False, marginal=False)

    monkeypatch.setattr("becck.sweep.classify_stability", verdict_unstable)
    rows = run_sweep(_spec(-1.0, 0.0, 2, policy="lowest", ck_mode="on"),
                     workers=1)
    assert len(rows) == 2
    for r in rows:
        assert r.branch_index == 0
        assert r.stable is False
        assert "no-stable-branch" in r.warnings
        assert r.E_N is None
        assert r.covariance is None


def test_resolve_workers(monkeypatch):
    monkeypatch.delenv("BECCK_WORKERS", raising=False)
    assert resolve_workers(None) == 1
    assert resolve_workers(4) == 4
    monkeypatch.setenv("BECCK_WORKERS", "3")
    assert resolve_workers(None) == 3
    assert resolve_workers(2) == 2
    with pytest.raises(ValueError):
        resolve_workers(0)
    monkeypatch.setenv("BECCK_WORKERS", "many")
    with pytest.raises(ValueError):
        resolve_workers(None)
