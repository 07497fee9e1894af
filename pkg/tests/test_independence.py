import itertools
import math

import numpy as np
import pytest

from bellinfo import (
    BudgetExceeded,
    DomainError,
    Ensemble,
    certify_ensemble,
    independence_locus,
    is_independent,
    search_independent_configurations,
    triple_impossibility_check,
)
from bellinfo.independence import angle_grid, pair_flow
from bellinfo.information import LN2

PI = math.pi


@pytest.mark.parametrize(
    "mu, nu, s, expected",
    [
        (PI / 2, 0, 1, True),
        (PI / 2, PI / 2, 1, False),
        (3 * PI / 4, 3 * PI / 4, 0, True),
        (PI / 4, PI / 4, 0, True),
        (0.2, 0.4, 0, False),
    ],
)
def test_is_independent_examples(mu, nu, s, expected):
    assert is_independent(mu, nu, s) is expected


def test_is_independent_rejects_bad_tol():
    with pytest.raises(DomainError):
        is_independent(0, 0, 1, tol=0)


def test_locus_examples():
    assert independence_locus(1).contains(PI / 2, 0)
    assert independence_locus(0).contains(PI / 4, PI / 4)
    assert independence_locus(0).contains(PI, PI / 2)
    assert not independence_locus(0).contains(0.3, 0.3)
    assert "3" in independence_locus(0).describe() and "[derived]" in independence_locus(0).describe()
    assert independence_locus(0).notes
    assert not independence_locus(1).notes
    with pytest.raises(DomainError):
        independence_locus(3)


@pytest.mark.parametrize("s", [0, 1])
def test_predicate_agreement_on_grid(s):
    grid = np.linspace(0, PI, 129)
    locus = independence_locus(s)
    tol = (PI / 128) / 4
    for mu, nu in itertools.product(grid, grid):
        assert is_independent(mu, nu, s) == (locus.distance(mu, nu) <= tol), (mu, nu)


def test_flow_symmetry():
    rng = np.random.default_rng(5)
    for mu, nu in rng.uniform(0, PI, size=(200, 2)):
        for s in (0, 1):
            assert pair_flow(mu, nu, s) == pair_flow(nu, mu, s)


def test_certify_examples():
    r = certify_ensemble(Ensemble((0, PI / 2), 1))
    assert r.verdict == "all_pairs_independent" and r.witness is None

    r = certify_ensemble(Ensemble((0, PI / 2, PI), 1))
    assert r.verdict == "dependence_forced"
    assert r.witness == (0, 2)
    assert r.min_positive_flow == pytest.approx(LN2, abs=1e-15)
    assert r.independent_pairs == [(0, 1), (1, 2)]

    r = certify_ensemble(Ensemble((PI / 4,) * 3, 0))
    assert r.verdict == "all_pairs_independent"
    assert r.derived_branch_pairs == []


def test_certify_flags_derived_branch():
    r = certify_ensemble(Ensemble((3 * PI / 4,) * 3, 0))
    assert r.verdict == "all_pairs_independent"
    assert r.derived_branch_pairs == [(0, 1), (0, 2), (1, 2)]
    assert any("3pi/2" in n for n in r.notes)


def test_certify_matrix_properties_and_restriction():
    rng = np.random.default_rng(11)
    angles = tuple(rng.uniform(0, PI, 6))
    full = certify_ensemble(Ensemble(angles, 1))
    m = full.flow_matrix
    assert np.array_equal(m, m.T) and np.all(np.diag(m) == 0) and np.all(m >= 0)
    assert (full.verdict == "all_pairs_independent") == (not full.dependent_pairs)
    keep = [1, 3, 4]
    sub = certify_ensemble(Ensemble(tuple(angles[k] for k in keep), 1))
    np.testing.assert_array_equal(sub.flow_matrix, m[np.ix_(keep, keep)])


def test_ensemble_validation():
    with pytest.raises(DomainError):
        Ensemble((0.1,), 1)
    with pytest.raises(DomainError):
        Ensemble((0.1, 4.0), 1)
    with pytest.raises(DomainError):
        Ensemble((0.1, 0.2), 5)


def test_triple_impossibility():
    rep = triple_impossibility_check()
    assert rep.analytic_holds
    assert len(rep.sign_patterns) == 8
    for p in rep.sign_patterns:
        a, b, _ = p["signs"]
        if a == b:
            assert p["implied_abs_mu_minus_tau"] == PI
        else:
            assert p["implied_abs_mu_minus_tau"] == 0
        assert not p["feasible"]
    assert rep.all_independent_triples == 0
    assert rep.min_max_flow > 1e-3
    assert rep.holds
    with pytest.raises(DomainError):
        triple_impossibility_check(s=0)


def test_triple_min_by_brute_force():
    grid = np.linspace(0, PI, 9)
    best = min(
        max(pair_flow(a, b, 1), pair_flow(a, c, 1), pair_flow(b, c, 1))
        for a, b, c in itertools.product(grid, repeat=3)
    )
    rep = triple_impossibility_check(points=9)
    assert rep.min_max_flow == pytest.approx(best, abs=1e-15)


def test_search_examples():
    assert search_independent_configurations(3, 1) == []
    found = search_independent_configurations(3, 0)
    assert [c.indices for c in found] == [(8, 8, 8), (24, 24, 24)]
    assert [c.tag for c in found] == ["stated", "derived_extra"]
    np.testing.assert_allclose(found[0].angles, [PI / 4] * 3)
    np.testing.assert_allclose(found[1].angles, [3 * PI / 4] * 3)


def test_search_n4():
    assert search_independent_configurations(4, 1, PI / 16) == []
    assert [c.indices for c in search_independent_configurations(4, 0, PI / 16)] == [(4,) * 4, (12,) * 4]


@pytest.mark.parametrize("s", [0, 1])
def test_search_pairs_recovers_locus_grid_points(s):
    step = PI / 32
    grid = angle_grid(step)
    locus = independence_locus(s)
    expected = [
        (i, j)
        for i in range(len(grid))
        for j in range(i, len(grid))
        if locus.contains(grid[i], grid[j], tol=1e-9)
    ]
    assert [c.indices for c in search_independent_configurations(2, s, step)] == expected


def test_search_guards():
    with pytest.raises(BudgetExceeded):
        search_independent_configurations(6, 0, PI / 32)
    with pytest.raises(DomainError):
        search_independent_configurations(3, 0, 0.3)
    with pytest.raises(DomainError):
        search_independent_configurations(1, 0)


@pytest.mark.parametrize("s", [0, 1])
def test_search_same_on_fallback_backend(monkeypatch, s):
    from bellinfo import _core, _fallback

    native = search_independent_configurations(3, s)
    native_triple = triple_impossibility_check(points=17)
    for name in ("theta_table", "flow_table", "triple_scan", "independent_multisets"):
        monkeypatch.setattr(_core, name, getattr(_fallback, name))
    assert search_independent_configurations(3, s) == native
    fb = triple_impossibility_check(points=17)
    assert fb.min_max_flow == pytest.approx(native_triple.min_max_flow, abs=1e-15)
    assert fb.all_independent_triples == native_triple.all_independent_triples


def test_spot_check_catches_corrupted_theta(monkeypatch):
    from bellinfo import OracleMismatch, _core

    real = _core.theta_table
    monkeypatch.setattr(_core, "theta_table", lambda a, b, s: real(a, b, s) + 1e-9)
    with pytest.raises(OracleMismatch):
        search_independent_configurations(3, 0)
