"""Entropy, information flow and degree of dependence (all in nats).

On a Bell state the joint distribution is ``(theta, 1/2-theta, 1/2-theta,
theta)`` for a single parameter ``theta`` in [0, 1/2], so every quantity
here is a function of ``theta``.  ``0 * ln 0`` is taken as 0.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from .errors import DomainError
from .measurement import JointDistribution, half_angle, marginal

LN2 = math.log(2.0)
INDEPENDENCE_TOL = 1e-9

Classification = Literal["independent", "agreement_correlated", "disagreement_correlated"]


@dataclass(frozen=True)
class ThetaParam:
    value: float

    def __post_init__(self):
        v = float(self.value)
        if not 0.0 <= v <= 0.5:
            raise DomainError("theta", v, "[0, 1/2]")
        object.__setattr__(self, "value", v)

    def __float__(self):
        return self.value


@dataclass(frozen=True)
class InfoReport:
    theta: ThetaParam
    entropy: float
    flow: float
    degree: float
    classification: Classification

    def as_dict(self) -> dict:
        return {
            "theta": self.theta.value,
            "entropy": self.entropy,
            "flow": self.flow,
            "degree": self.degree,
            "class": self.classification,
        }


def _theta(theta) -> float:
    return theta.value if isinstance(theta, ThetaParam) else ThetaParam(theta).value


def _xlogx(x: float) -> float:
    return x * math.log(x) if x > 0.0 else 0.0


def theta_param(mu: float, nu: float, s: int) -> ThetaParam:
    """``1/2 sin^2((mu + (-1)^s nu) / 2)``."""
    return ThetaParam(0.5 * math.sin(half_angle(mu, nu, s)) ** 2)


def entropy(theta) -> float:
    t = _theta(theta)
    return -2.0 * _xlogx(t) - 2.0 * _xlogx(0.5 - t)


def shannon_entropy(probs) -> float:
    """``-sum p ln p`` over any finite distribution."""
    return -math.fsum(_xlogx(float(p)) for p in probs)


def entropy_of_distribution(dist: JointDistribution) -> float:
    return shannon_entropy(dist.xi)


def mutual_information(dist: JointDistribution) -> float:
    """``H(A) + H(B) - H(A, B)`` from the marginals and the joint table."""
    a, b = marginal(dist, "A"), marginal(dist, "B")
    h_a = shannon_entropy((a.p_plus, a.p_minus))
    h_b = shannon_entropy((b.p_plus, b.p_minus))
    return max(0.0, h_a + h_b - shannon_entropy(dist.xi))


def information_flow(theta) -> float:
    """Mutual information of the two binary trials, ``2 ln 2 - E(theta)``.

    Evaluated as ``((1+x) ln(1+x) + (1-x) ln(1-x)) / 2`` with
    ``x = 4 theta - 1``, which avoids the cancellation in the difference
    near ``theta = 1/4``.
    """
    x = 4.0 * _theta(theta) - 1.0
    plus = (1.0 + x) * math.log1p(x) if x > -1.0 else 0.0
    minus = (1.0 - x) * math.log1p(-x) if x < 1.0 else 0.0
    return max(0.0, 0.5 * (plus + minus))


def degree_of_dependence(theta) -> float:
    """Signed flow normalised by ``ln 2``: -1 at theta=0, 0 at 1/4, +1 at 1/2."""
    t = _theta(theta)
    if t == 0.25:
        return 0.0
    return math.copysign(information_flow(t) / LN2, t - 0.25)


def classify(theta, tol: float = INDEPENDENCE_TOL) -> Classification:
    t = _theta(theta)
    if information_flow(t) <= tol:
        return "independent"
    return "agreement_correlated" if t > 0.25 else "disagreement_correlated"


def info_report(mu: float, nu: float, s: int, tol: float = INDEPENDENCE_TOL) -> InfoReport:
    theta = theta_param(mu, nu, s)
    return InfoReport(
        theta=theta,
        entropy=entropy(theta),
        flow=information_flow(theta),
        degree=degree_of_dependence(theta),
        classification=classify(theta, tol),
    )
