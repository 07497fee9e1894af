"""Informational independence of gate pairs and of whole ensembles.

Two decision routes are kept separate on purpose: :func:`is_independent`
thresholds the information flow, while :class:`IndependenceLocus` is pure
angle arithmetic.  Tests cross-check one against the other.
"""
from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

import numpy as np

from . import _core
from .errors import BudgetExceeded, DomainError, OracleMismatch
from .information import INDEPENDENCE_TOL, information_flow, theta_param
from .measurement import bell_born_distribution
from .operators import check_polar

log = logging.getLogger(__name__)

HALF_PI = math.pi / 2
# Upper bound on n * (pi / grid_step) ** n for the configuration search.
SEARCH_BUDGET = 10**8
# One closed-form evaluation in this many is re-done with the Born rule.
SPOT_CHECK_STRIDE = 100

DERIVED_BRANCH_NOTE = (
    "s=0: mu+nu = 3pi/2 also gives theta = 1/4, so it is a second independence "
    "branch beyond the published condition mu+nu = pi/2 (derived, reported separately)"
)


def pi_fraction(x: float) -> str:
    """Render ``x`` as a multiple of pi, e.g. ``3pi/2``."""
    f = Fraction(x / math.pi).limit_denominator(64)
    num = "" if f.numerator == 1 else str(f.numerator)
    return f"{num}pi" if f.denominator == 1 else f"{num}pi/{f.denominator}"


@dataclass(frozen=True)
class LocusBranch:
    kind: Literal["abs_difference", "sum"]
    value: float
    stated: bool

    def offset(self, mu: float, nu: float) -> float:
        """Euclidean distance from ``(mu, nu)`` to this branch in the angle plane."""
        if self.kind == "sum":
            return abs(mu + nu - self.value) / math.sqrt(2.0)
        return abs(abs(mu - nu) - self.value) / math.sqrt(2.0)

    def describe(self) -> str:
        lhs = "|mu - nu|" if self.kind == "abs_difference" else "mu + nu"
        tag = "" if self.stated else " [derived]"
        return f"{lhs} = {pi_fraction(self.value)}{tag}"


@dataclass(frozen=True)
class IndependenceLocus:
    s: int
    branches: tuple[LocusBranch, ...]

    def distance(self, mu: float, nu: float) -> float:
        return min(b.offset(mu, nu) for b in self.branches)

    def branch_of(self, mu: float, nu: float, tol: float = 1e-6) -> LocusBranch | None:
        best = min(self.branches, key=lambda b: b.offset(mu, nu))
        return best if best.offset(mu, nu) <= tol else None

    def contains(self, mu: float, nu: float, tol: float = 1e-6) -> bool:
        return self.distance(mu, nu) <= tol

    def describe(self) -> str:
        text = " or ".join(b.describe() for b in self.branches)
        return f"s={self.s}: {text}"

    @property
    def notes(self) -> list[str]:
        return [DERIVED_BRANCH_NOTE] if any(not b.stated for b in self.branches) else []


def independence_locus(s: int) -> IndependenceLocus:
    if s == 1:
        return IndependenceLocus(1, (LocusBranch("abs_difference", HALF_PI, True),))
    if s == 0:
        return IndependenceLocus(
            0, (LocusBranch("sum", HALF_PI, True), LocusBranch("sum", 3 * HALF_PI, False))
        )
    raise DomainError("s", s, "{0, 1}")


def pair_flow(mu: float, nu: float, s: int) -> float:
    return information_flow(theta_param(mu, nu, s))


def is_independent(mu: float, nu: float, s: int, tol: float = INDEPENDENCE_TOL) -> bool:
    if not tol > 0:
        raise DomainError("tol", tol, "(0, inf)")
    return pair_flow(mu, nu, s) <= tol


@dataclass(frozen=True)
class Ensemble:
    angles: tuple[float, ...]
    s: int

    def __post_init__(self):
        if self.s not in (0, 1):
            raise DomainError("s", self.s, "{0, 1}")
        angles = tuple(check_polar(a, f"angles[{k}]") for k, a in enumerate(self.angles))
        if len(angles) < 2:
            raise DomainError("angles", self.angles, "sequences of at least 2 angles")
        object.__setattr__(self, "angles", angles)


@dataclass
class DependenceReport:
    ensemble: Ensemble
    tol: float
    flow_matrix: np.ndarray
    independent_pairs: list[tuple[int, int]]
    dependent_pairs: list[tuple[tuple[int, int], float]]
    min_positive_flow: float | None
    witness: tuple[int, int] | None
    verdict: Literal["all_pairs_independent", "dependence_forced"]
    derived_branch_pairs: list[tuple[int, int]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "s": self.ensemble.s,
            "angles": list(self.ensemble.angles),
            "tol": self.tol,
            "verdict": self.verdict,
            "flow_matrix": [list(map(float, row)) for row in self.flow_matrix],
            "independent_pairs": [list(p) for p in self.independent_pairs],
            "dependent_pairs": [{"pair": list(p), "flow": f} for p, f in self.dependent_pairs],
            "min_positive_flow": self.min_positive_flow,
            "witness": list(self.witness) if self.witness else None,
            "derived_branch_pairs": [list(p) for p in self.derived_branch_pairs],
            "notes": list(self.notes),
        }


def certify_ensemble(ensemble: Ensemble, tol: float = INDEPENDENCE_TOL) -> DependenceReport:
    """Pairwise flow matrix and verdict for an ensemble of gates."""
    angles, s = ensemble.angles, ensemble.s
    n = len(angles)
    locus = independence_locus(s)
    flows = np.zeros((n, n))
    independent, dependent, derived = [], [], []
    for i, j in itertools.combinations(range(n), 2):
        f = pair_flow(angles[i], angles[j], s)
        flows[i, j] = flows[j, i] = f
        if f <= tol:
            independent.append((i, j))
            branch = locus.branch_of(angles[i], angles[j], tol=1e-4)
            if branch is not None and not branch.stated:
                derived.append((i, j))
        else:
            dependent.append(((i, j), f))
    flows.flags.writeable = False
    witness, min_flow = None, None
    if dependent:
        witness, min_flow = min(dependent, key=lambda pf: pf[1])
    notes = list(locus.notes)
    for i, j in derived:
        notes.append(f"pair ({i}, {j}) is independent on the derived branch mu+nu = 3pi/2")
    return DependenceReport(
        ensemble=ensemble,
        tol=tol,
        flow_matrix=flows,
        independent_pairs=independent,
        dependent_pairs=dependent,
        min_positive_flow=min_flow,
        witness=witness,
        verdict="dependence_forced" if dependent else "all_pairs_independent",
        derived_branch_pairs=derived,
        notes=notes,
    )


def angle_grid(grid_step: float) -> np.ndarray:
    """``k * grid_step`` for ``k = 0..pi/grid_step``; the step must divide pi."""
    if not grid_step > 0:
        raise DomainError("grid_step", grid_step, "(0, pi]")
    count = math.pi / grid_step
    k = round(count)
    if k < 1 or abs(count - k) > 1e-9 * max(k, 1):
        raise DomainError("grid_step", grid_step, "steps dividing pi")
    return np.arange(k + 1) * (math.pi / k)


def _spot_check(grid: np.ndarray, s: int) -> int:
    """Re-evaluate every ``SPOT_CHECK_STRIDE``-th grid theta with the Born rule."""
    theta = _core.theta_table(grid, grid, s)
    m = len(grid)
    checked = 0
    for flat in range(0, m * m, SPOT_CHECK_STRIDE):
        i, j = divmod(flat, m)
        born = bell_born_distribution(grid[i], grid[j], s).xi[0]
        if abs(born - theta[i, j]) > 1e-12:
            raise OracleMismatch(f"theta({grid[i]}, {grid[j]}, s={s}): {theta[i, j]} vs Born {born}")
        checked += 1
    return checked


@dataclass(frozen=True)
class Configuration:
    angles: tuple[float, ...]
    indices: tuple[int, ...]
    tag: Literal["stated", "derived_extra"]


def search_independent_configurations(
    n: int,
    s: int,
    grid_step: float = math.pi / 32,
    tol: float = INDEPENDENCE_TOL,
    budget: int = SEARCH_BUDGET,
) -> list[Configuration]:
    """All grid n-multisets whose pairs are all informationally independent.

    Exhaustive over nondecreasing index tuples on ``k * grid_step``; results
    are lexicographic.  Configurations that rely on a pair from the derived
    ``mu + nu = 3pi/2`` branch are tagged ``derived_extra``.
    """
    if int(n) != n or n < 2:
        raise DomainError("n", n, "integers >= 2")
    if s not in (0, 1):
        raise DomainError("s", s, "{0, 1}")
    grid = angle_grid(grid_step)
    divisions = len(grid) - 1
    cost = n * divisions**n
    if cost > budget:
        raise BudgetExceeded(
            f"n * (pi/grid_step)^n = {n} * {divisions}^{n} = {cost} exceeds the budget of {budget}; "
            "use a coarser grid_step or a smaller n"
        )
    checked = _spot_check(grid, s)
    log.debug("spot-checked %d grid thetas against the Born rule", checked)
    ok = _core.flow_table(grid, grid, s) <= tol
    locus = independence_locus(s)
    out = []
    for idx in _core.independent_multisets(ok, int(n)):
        angles = tuple(float(grid[k]) for k in idx)
        derived = any(
            (b := locus.branch_of(a, c, tol=1e-4)) is not None and not b.stated
            for a, c in itertools.combinations(angles, 2)
        )
        out.append(Configuration(angles, tuple(idx), "derived_extra" if derived else "stated"))
    return out


@dataclass(frozen=True)
class ImpossibilityReport:
    sign_patterns: list[dict]
    analytic_holds: bool
    grid_points: int
    triples: int
    all_independent_triples: int
    min_max_flow: float
    argmin: tuple[float, float, float]
    threshold: float
    numeric_holds: bool
    backend: str

    @property
    def holds(self) -> bool:
        return self.analytic_holds and self.numeric_holds


def triple_impossibility_check(
    s: int = 1, points: int = 33, tol: float = INDEPENDENCE_TOL, threshold: float = 1e-3
) -> ImpossibilityReport:
    """No three gates can be pairwise independent on the singlet.

    Analytic part: with ``mu-nu = a*pi/2``, ``nu-tau = b*pi/2`` and
    ``mu-tau = c*pi/2`` for signs ``a, b, c``, additivity needs ``c = a+b``,
    but ``a+b`` is in {-2, 0, 2}.  Numeric part: every ordered triple on a
    ``points``-per-axis grid over [0, pi] is scanned.
    """
    if s != 1:
        raise DomainError("s", s, "{1}")
    patterns = []
    for a, b, c in itertools.product((1, -1), repeat=3):
        implied = abs(a + b) * HALF_PI
        patterns.append(
            {
                "signs": (a, b, c),
                "implied_abs_mu_minus_tau": implied,
                "required": HALF_PI,
                "feasible": c == a + b,
            }
        )
    analytic = not any(p["feasible"] for p in patterns)

    grid = np.linspace(0.0, math.pi, points)
    table = _core.flow_table(grid, grid, s)
    best, (i, j, k), below = _core.triple_scan(table, tol)
    return ImpossibilityReport(
        sign_patterns=patterns,
        analytic_holds=analytic,
        grid_points=points,
        triples=points**3,
        all_independent_triples=below,
        min_max_flow=float(best),
        argmin=(float(grid[i]), float(grid[j]), float(grid[k])),
        threshold=threshold,
        numeric_holds=below == 0 and best > threshold,
        backend=_core.BACKEND,
    )
