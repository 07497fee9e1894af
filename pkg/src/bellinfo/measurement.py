"""Joint outcome statistics of two commuting lifted observables.

Outcomes are always ordered ``(+1,+1), (+1,-1), (-1,+1), (-1,-1)``; the
entries ``xi[0..3]`` of a :class:`JointDistribution` (and the ``xi1..xi4``
columns of sweep output) follow that order.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .errors import DomainError
from .operators import BipartiteState, GateAngles, bell_state, check_polar, product_frame

OUTCOMES = ((1, 1), (1, -1), (-1, 1), (-1, -1))

_NORM_TOL = 1e-12


@dataclass(frozen=True)
class JointDistribution:
    xi: tuple[float, float, float, float]
    provenance: Literal["born_rule", "closed_form", "given"] = "given"
    context: tuple | None = None

    def __post_init__(self):
        xi = tuple(float(x) for x in self.xi)
        if len(xi) != 4:
            raise DomainError("xi", self.xi, "4 probabilities")
        for k, x in enumerate(xi):
            if not (-_NORM_TOL <= x <= 1.0 + _NORM_TOL):
                raise DomainError(f"xi{k + 1}", x, "[0, 1]")
        if abs(math.fsum(xi) - 1.0) > _NORM_TOL:
            raise DomainError("xi", xi, "probabilities summing to 1 +- 1e-12")
        object.__setattr__(self, "xi", xi)

    def __iter__(self):
        return iter(self.xi)

    def as_array(self) -> np.ndarray:
        return np.array(self.xi)


@dataclass(frozen=True)
class MarginalPair:
    p_plus: float
    p_minus: float
    side: Literal["A", "B"]


def _angles(value, name: str) -> GateAngles:
    if isinstance(value, GateAngles):
        return value
    if isinstance(value, tuple):
        return GateAngles(*value)
    return GateAngles(check_polar(value, name))


def born_joint_distribution(state: BipartiteState, a, b) -> JointDistribution:
    """Born-rule probabilities ``|<u_i(A) ⊗ u_j(B) | psi>|^2``.

    ``a`` and ``b`` are :class:`GateAngles`, ``(mu, eta)`` tuples, or bare
    polar angles (azimuth 0).  No trigonometric simplification is applied.
    """
    if not isinstance(state, BipartiteState):
        state = BipartiteState(state)
    a, b = _angles(a, "mu"), _angles(b, "nu")
    psi = state.amplitudes
    xi = tuple(abs(np.vdot(vec, psi)) ** 2 for _, vec in product_frame(a, b))
    return JointDistribution(xi, "born_rule", (state.label, a.mu, b.mu))


def half_angle(mu: float, nu: float, s: int) -> float:
    """``(mu + (-1)^s nu) / 2``, the only combination Bell statistics depend on."""
    if s not in (0, 1):
        raise DomainError("s", s, "{0, 1}")
    mu, nu = check_polar(mu, "mu"), check_polar(nu, "nu")
    return (mu + nu) / 2 if s == 0 else (mu - nu) / 2


def closed_form_distribution(mu: float, nu: float, s: int) -> JointDistribution:
    x = half_angle(mu, nu, s)
    agree = 0.5 * math.sin(x) ** 2
    disagree = 0.5 * math.cos(x) ** 2
    return JointDistribution((agree, disagree, disagree, agree), "closed_form", (f"bell_s{s}", mu, nu))


def azimuth_invariance_check(state: BipartiteState, mu, eta, nu, zeta) -> float:
    """Largest change in any ``xi`` when both azimuths are reset to zero."""
    with_az = born_joint_distribution(state, GateAngles(mu, eta), GateAngles(nu, zeta))
    without = born_joint_distribution(state, GateAngles(mu, 0.0), GateAngles(nu, 0.0))
    return max(abs(p - q) for p, q in zip(with_az.xi, without.xi))


def marginal(dist: JointDistribution, side: Literal["A", "B"]) -> MarginalPair:
    x1, x2, x3, x4 = dist.xi
    if side == "A":
        return MarginalPair(x1 + x2, x3 + x4, "A")
    if side == "B":
        return MarginalPair(x1 + x3, x2 + x4, "B")
    raise DomainError("side", side, "{'A', 'B'}")


def correlation(dist: JointDistribution) -> float:
    """Expectation of the product of the two ±1 outcomes."""
    x1, x2, x3, x4 = dist.xi
    return (x1 + x4) - (x2 + x3)


def sample_outcomes(dist: JointDistribution, n: int, seed: int) -> tuple[int, int, int, int]:
    """Draw ``n`` i.i.d. outcomes and return the count of each.

    Uniforms come from numpy's PCG64 seeded through ``SeedSequence(seed)``;
    each uniform ``u`` maps to the first outcome whose cumulative
    probability exceeds ``u`` (inverse CDF).  Identical ``(dist, n, seed)``
    give identical counts.
    """
    if int(n) != n or n < 1:
        raise DomainError("n", n, "integers >= 1")
    if int(seed) != seed or not 0 <= seed < 2**64:
        raise DomainError("seed", seed, "[0, 2**64)")
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(int(seed))))
    cdf = np.cumsum(dist.xi)
    cdf[-1] = 1.0
    u = rng.random(int(n))
    idx = np.searchsorted(cdf, u, side="right")
    counts = np.bincount(idx, minlength=4)
    return tuple(int(c) for c in counts[:4])


def bell_born_distribution(mu: float, nu: float, s: int) -> JointDistribution:
    """Born-rule distribution on the Bell state ``s`` with zero azimuths."""
    return born_joint_distribution(bell_state(s), mu, nu)
