"""Gate observables with spectrum {1, -1} on a qubit and their bipartite lifts.

All matrices are coordinates in the standard basis ``h1 = (1, 0)``,
``h2 = (0, 1)``.  Two-qubit vectors use the Kronecker ordering
``(h1⊗h1, h1⊗h2, h2⊗h1, h2⊗h2)``.

The inner product is anti-linear in the first slot: ``inner(x, y) =
sum(conj(x) * y)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from .errors import DomainError

# Values this close outside a closed interval end are snapped onto it, so
# that decimal literals like 3.1415927 are accepted as pi.
ANGLE_SLACK = 1e-6

_I2 = np.eye(2, dtype=complex)


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=complex)
    a.flags.writeable = False
    return a


def check_polar(value: float, name: str = "mu") -> float:
    """Validate a polar angle in ``[0, pi]``; returns the (snapped) value."""
    value = float(value)
    if not math.isfinite(value):
        raise DomainError(name, value, "[0, pi]")
    if -ANGLE_SLACK <= value < 0.0:
        return 0.0
    if math.pi < value <= math.pi + ANGLE_SLACK:
        return math.pi
    if not 0.0 <= value <= math.pi:
        raise DomainError(name, value, "[0, pi]")
    return value


def check_azimuth(value: float, name: str = "eta") -> float:
    """Validate an azimuthal angle in ``[0, 2*pi)``."""
    value = float(value)
    if not math.isfinite(value):
        raise DomainError(name, value, "[0, 2*pi)")
    if -ANGLE_SLACK <= value < 0.0:
        return 0.0
    if not 0.0 <= value < 2.0 * math.pi:
        raise DomainError(name, value, "[0, 2*pi)")
    return value


@dataclass(frozen=True)
class GateAngles:
    """Polar angle ``mu`` in [0, pi] and azimuthal angle ``eta`` in [0, 2pi)."""

    mu: float
    eta: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "mu", check_polar(self.mu, "mu"))
        object.__setattr__(self, "eta", check_azimuth(self.eta, "eta"))


@dataclass(frozen=True)
class HermitianGate:
    entries: np.ndarray = field(repr=False)
    angles: GateAngles

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.entries, dtype=dtype)


@dataclass(frozen=True)
class EigenFrame:
    u_plus: np.ndarray
    u_minus: np.ndarray

    def vectors(self) -> tuple[np.ndarray, np.ndarray]:
        """Eigenvectors ordered by eigenvalue ``(+1, -1)``."""
        return self.u_plus, self.u_minus


@dataclass(frozen=True)
class BipartiteState:
    amplitudes: np.ndarray
    label: str = "custom"

    def __post_init__(self):
        amp = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        if amp.shape != (4,):
            raise DomainError("amplitudes", amp.shape, "4 complex amplitudes")
        norm2 = float(np.sum(np.abs(amp) ** 2))
        if abs(norm2 - 1.0) > 1e-12:
            raise DomainError("amplitudes", norm2, "unit norm (squared norm 1 +- 1e-12)")
        object.__setattr__(self, "amplitudes", _frozen(amp))

    @property
    def is_bell(self) -> bool:
        return self.label in ("bell_s0", "bell_s1")

    @property
    def bell_index(self) -> int | None:
        return {"bell_s0": 0, "bell_s1": 1}.get(self.label)


@dataclass(frozen=True)
class LiftedObservable:
    entries: np.ndarray = field(repr=False)
    side: Literal["left", "right", "product"]

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.entries, dtype=dtype)


def inner(x, y) -> complex:
    """``<x|y>``, conjugating the first argument."""
    return complex(np.vdot(np.asarray(x), np.asarray(y)))


def _as_angles(angles) -> GateAngles:
    if isinstance(angles, GateAngles):
        return angles
    if isinstance(angles, HermitianGate):
        return angles.angles
    return GateAngles(*angles)


def make_gate(angles: GateAngles | tuple[float, float]) -> HermitianGate:
    """Return ``[[cos mu, e^{-i eta} sin mu], [e^{i eta} sin mu, -cos mu]]``."""
    angles = _as_angles(angles)
    c, s = math.cos(angles.mu), math.sin(angles.mu)
    phase = complex(math.cos(angles.eta), math.sin(angles.eta))
    entries = np.array([[c, phase.conjugate() * s], [phase * s, -c]], dtype=complex)
    return HermitianGate(_frozen(entries), angles)


def eigenframe(angles: GateAngles | tuple[float, float]) -> EigenFrame:
    angles = _as_angles(angles)
    ch, sh = math.cos(angles.mu / 2), math.sin(angles.mu / 2)
    conj_phase = complex(math.cos(angles.eta), -math.sin(angles.eta))
    u_plus = np.array([conj_phase * ch, sh], dtype=complex)
    u_minus = np.array([-conj_phase * sh, ch], dtype=complex)
    return EigenFrame(_frozen(u_plus), _frozen(u_minus))


def bell_state(s: int) -> BipartiteState:
    """``(h1⊗h2 + (-1)^s h2⊗h1) / sqrt(2)`` for ``s`` in {0, 1}."""
    if s not in (0, 1):
        raise DomainError("s", s, "{0, 1}")
    r = 1.0 / math.sqrt(2.0)
    return BipartiteState(np.array([0.0, r, (-1) ** s * r, 0.0]), label=f"bell_s{s}")


def product_state(a, b) -> BipartiteState:
    """Tensor product of two single-qubit unit vectors."""
    return BipartiteState(np.kron(np.asarray(a, complex), np.asarray(b, complex)))


def lift(gate: HermitianGate, side: Literal["left", "right"]) -> LiftedObservable:
    """``A ⊗ I`` for ``side="left"``, ``I ⊗ A`` for ``side="right"``."""
    a = np.asarray(gate.entries)
    if side == "left":
        m = np.kron(a, _I2)
    elif side == "right":
        m = np.kron(_I2, a)
    else:
        raise DomainError("side", side, "{'left', 'right'}")
    return LiftedObservable(_frozen(m), side)


def tensor_observable(a: HermitianGate, b: HermitianGate) -> LiftedObservable:
    return LiftedObservable(_frozen(np.kron(a.entries, b.entries)), "product")


def product_frame(a, b) -> list[tuple[tuple[int, int], np.ndarray]]:
    """Common eigenbasis ``u_i(A) ⊗ u_j(B)`` with eigenvalue pairs.

    Ordered ``(+1,+1), (+1,-1), (-1,+1), (-1,-1)``.
    """
    fa, fb = eigenframe(a), eigenframe(b)
    out = []
    for la, ua in zip((1, -1), fa.vectors()):
        for lb, ub in zip((1, -1), fb.vectors()):
            out.append(((la, lb), np.kron(ua, ub)))
    return out
