"""Acceptance criteria, one test each, at their stated tolerances.

A PASS/FAIL line per criterion is printed in the terminal summary.
"""
import itertools
import math

import numpy as np
import pytest

from bellinfo import (
    Ensemble,
    GateAngles,
    JointDistribution,
    bell_state,
    born_joint_distribution,
    certify_ensemble,
    closed_form_distribution,
    eigenframe,
    entropy,
    independence_locus,
    information_flow,
    lift,
    make_gate,
    marginal,
    sample_outcomes,
    search_independent_configurations,
    triple_impossibility_check,
)
from bellinfo.independence import pair_flow

PI = math.pi
GRID65 = np.linspace(0.0, PI, 65)
GRID129 = np.linspace(0.0, PI, 129)
LN2 = math.log(2)


def test_01_oracle_equivalence(criterion):
    worst = 0.0
    for s in (0, 1):
        psi = bell_state(s)
        for mu, nu in itertools.product(GRID65, GRID65):
            b = born_joint_distribution(psi, mu, nu).xi
            c = closed_form_distribution(mu, nu, s).xi
            worst = max(worst, max(abs(p - q) for p, q in zip(b, c)))
    ok = criterion(1, "Born rule == closed form on 65x65 grid, both s (<= 1e-12)", worst <= 1e-12, f"max dev {worst:.2e}")
    assert ok


def test_02_azimuth_irrelevance(criterion):
    rng = np.random.default_rng(20260101)
    worst = 0.0
    for s in (0, 1):
        psi = bell_state(s)
        for _ in range(100):
            mu, nu = rng.uniform(0, PI, 2)
            eta, zeta = rng.uniform(0, 2 * PI, 2)
            with_az = born_joint_distribution(psi, GateAngles(mu, eta), GateAngles(nu, zeta)).xi
            without = born_joint_distribution(psi, GateAngles(mu, 0.0), GateAngles(nu, 0.0)).xi
            worst = max(worst, max(abs(p - q) for p, q in zip(with_az, without)))
    ok = criterion(
        2,
        "azimuths irrelevant for 100 random (mu,eta,nu,zeta) per s (<= 1e-12)",
        worst <= 1e-12,
        f"max dev {worst:.2e}; depends on eta-zeta",
    )
    assert ok


def test_03_marginal_uniformity(criterion):
    rng = np.random.default_rng(3)
    worst = 0.0
    for s in (0, 1):
        psi = bell_state(s)
        for mu, nu in itertools.product(GRID65, GRID65):
            eta, zeta = rng.uniform(0, 2 * PI, 2)
            for a, b in (((mu, 0.0), (nu, 0.0)), ((mu, eta), (nu, zeta))):
                d = born_joint_distribution(psi, GateAngles(*a), GateAngles(*b))
                for side in "AB":
                    m = marginal(d, side)
                    worst = max(worst, abs(m.p_plus - 0.5), abs(m.p_minus - 0.5))
    ok = criterion(3, "marginals (1/2, 1/2) on grid, both s (<= 1e-12)", worst <= 1e-12, f"max dev {worst:.2e}")
    assert ok


def _locus_scan(s):
    locus = independence_locus(s)
    grid_tol = (PI / 128) / 4
    mismatches, weak = [], []
    for mu, nu in itertools.product(GRID129, GRID129):
        f = pair_flow(mu, nu, s)
        dist = locus.distance(mu, nu)
        if (f <= 1e-9) != (dist <= grid_tol):
            mismatches.append((mu, nu, f, dist))
        if dist > 0.05 and f < 1e-4:
            weak.append((mu, nu, f, dist))
    return mismatches, weak


def test_04_locus_s1(criterion):
    mismatches, weak = _locus_scan(1)
    ok = criterion(
        4,
        "s=1 flow <= 1e-9 exactly on |mu-nu|=pi/2; >= 1e-4 beyond 0.05 rad (129x129)",
        not mismatches and not weak,
        f"{len(mismatches)} mismatches, {len(weak)} weak",
    )
    assert ok


def test_05_locus_s0(criterion):
    mismatches, weak = _locus_scan(0)
    report = certify_ensemble(Ensemble((3 * PI / 4, 3 * PI / 4), 0))
    stated = certify_ensemble(Ensemble((PI / 4, PI / 4), 0))
    flagged = (
        report.derived_branch_pairs == [(0, 1)]
        and any("3pi/2" in n for n in report.notes)
        and stated.derived_branch_pairs == []
        and "[derived]" in independence_locus(0).describe()
    )
    ok = criterion(
        5,
        "s=0 locus mu+nu in {pi/2, 3pi/2} (129x129), 3pi/2 branch flagged",
        not mismatches and not weak and flagged,
        f"{len(mismatches)} mismatches, {len(weak)} weak, flagged={flagged}",
    )
    assert ok


def test_06_triple_impossibility(criterion):
    rep = triple_impossibility_check(s=1, points=33)
    ok = criterion(
        6,
        "s=1 no pairwise-independent triple (sign patterns + 33^3 grid)",
        rep.analytic_holds and rep.all_independent_triples == 0 and rep.min_max_flow > 0,
        f"min max-pair flow {rep.min_max_flow:.4g} at {tuple(round(a, 4) for a in rep.argmin)}",
    )
    assert ok


def test_07_forced_configuration_s0(criterion):
    found = search_independent_configurations(3, 0, PI / 32)
    angles = [c.angles for c in found]
    tags = [c.tag for c in found]
    exact = (
        len(found) == 2
        and np.allclose(angles[0], [PI / 4] * 3, atol=1e-15)
        and np.allclose(angles[1], [3 * PI / 4] * 3, atol=1e-15)
        and tags == ["stated", "derived_extra"]
    )
    ok = criterion(7, "s=0 step pi/32 search returns only (pi/4)^3 and (3pi/4)^3 [derived]", exact, f"{tags}")
    assert ok


def test_08_entropy_identities(criterion):
    grid = np.linspace(0, 0.5, 501)
    ident = (
        abs(entropy(0.25) - 2 * LN2) <= 1e-12
        and abs(entropy(0.0) - LN2) <= 1e-12
        and abs(entropy(0.5) - LN2) <= 1e-12
    )
    sym = max(abs(entropy(t) - entropy(0.5 - t)) for t in grid)
    flows = np.array([information_flow(t) for t in grid])
    mono = bool(np.all(np.diff(flows[grid <= 0.25]) < 0) and np.all(np.diff(flows[grid >= 0.25]) > 0))
    ok = criterion(
        8,
        "E(1/4)=2ln2, E(0)=E(1/2)=ln2, symmetry, flow monotone each side",
        ident and sym <= 1e-12 and mono,
        f"symmetry dev {sym:.1e}",
    )
    assert ok


def test_09_operator_invariants(criterion):
    rng = np.random.default_rng(9)
    worst = 0.0
    for _ in range(1000):
        mu = rng.uniform(0, PI)
        eta = rng.uniform(0, 2 * PI)
        g = make_gate(GateAngles(mu, eta))
        a = g.entries
        f = eigenframe(g.angles)
        nu, zeta = rng.uniform(0, PI), rng.uniform(0, 2 * PI)
        la, lb = lift(g, "left").entries, lift(make_gate((nu, zeta)), "right").entries
        worst = max(
            worst,
            np.max(np.abs(a - a.conj().T)),
            np.max(np.abs(a @ a - np.eye(2))),
            abs(np.trace(a)),
            abs(np.linalg.det(a) + 1),
            np.max(np.abs(a @ f.u_plus - f.u_plus)),
            np.max(np.abs(a @ f.u_minus + f.u_minus)),
            np.max(np.abs(la @ lb - lb @ la)),
        )
    ok = criterion(9, "1000 random gates: Hermitian, involutive, tr 0, det -1, eigen, lifts commute", worst <= 1e-14, f"worst {worst:.1e}")
    assert ok


def test_10_sampling(criterion):
    dist = JointDistribution((0.25,) * 4)
    n = 10**6
    counts = sample_outcomes(dist, n, seed=42)
    sigma = math.sqrt(n * 0.25 * 0.75)
    within = all(abs(c - n / 4) <= 4 * sigma for c in counts)
    same = counts == sample_outcomes(dist, n, seed=42)
    ok = criterion(10, "uniform sampling n=1e6 within 4 sigma, deterministic per seed", within and same and sum(counts) == n, f"{counts}")
    assert ok
