"""Damped quantum transport: wave functions in Laplace space and their phases."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateGapError, ParameterError
from .graph import _readonly
from .spectral import EigenSystem, GapReport

UNDERFLOW_FLOOR = 1e-300

_S_RULES = ("first_gap", "avg_gap", "explicit")


@dataclass(frozen=True)
class LaplaceParams:
    """Rule for choosing the damping rate s of the transform.

    ``first_gap`` and ``avg_gap`` scale the corresponding spectral gap by
    ``multiplier``; ``explicit`` uses ``multiplier`` verbatim as s.
    """

    rule: str = "avg_gap"
    multiplier: float = 1.2

    def __post_init__(self):
        if self.rule not in _S_RULES:
            raise ParameterError(f"rule must be one of {_S_RULES}, got {self.rule!r}")
        if not (np.isfinite(self.multiplier) and self.multiplier > 0.0):
            raise ParameterError("multiplier must be a positive finite number")


@dataclass(frozen=True)
class WavePhaseField:
    """Laplace-transformed wave function started at one node, plus its phases."""

    init_node: int
    amplitudes: np.ndarray
    phases: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "amplitudes", _readonly(np.asarray(self.amplitudes, dtype=complex)))
        object.__setattr__(self, "phases", _readonly(np.asarray(self.phases, dtype=float)))


def select_s(gaps: GapReport, params: LaplaceParams) -> float:
    """Resolve the damping rate from gap diagnostics and a selection rule."""
    if params.rule == "explicit":
        return float(params.multiplier)
    gap = gaps.first_gap if params.rule == "first_gap" else gaps.avg_gap
    if not gap > 0.0:
        raise DegenerateGapError(
            f"{params.rule} is zero (disconnected graph?); "
            "pass LaplaceParams(rule='explicit', multiplier=s) instead"
        )
    return float(params.multiplier * gap)


def laplace_wavefunction(eig: EigenSystem, init_node: int, s: float) -> WavePhaseField:
    """Transform of the evolution started at ``init_node``, damped at rate s.

    Evaluates the spectral sum over all modes with weights 1/(s + i E_n),
    which equals the solution of (s I + i H) psi = e_j.  Reusing one
    decomposition makes each initialization an O(m^2) matrix-vector product.
    """
    m = eig.size
    if not 0 <= init_node < m:
        raise ParameterError(f"init_node must be in [0, {m}), got {init_node}")
    if not (np.isfinite(s) and s > 0.0):
        raise ParameterError("s must be a positive finite number")
    weights = eig.modes[init_node, :] / (s + 1j * eig.energies)
    amplitudes = eig.modes @ weights
    tiny = np.abs(amplitudes) < UNDERFLOW_FLOOR
    if tiny.any():
        # cancellation hit the subnormal range: redo those dot products with
        # exact accumulation so the recovered phase is meaningful
        amplitudes = amplitudes.copy()
        for i in np.nonzero(tiny)[0]:
            re = math.fsum((eig.modes[i, :] * weights.real).tolist())
            im = math.fsum((eig.modes[i, :] * weights.imag).tolist())
            amplitudes[i] = complex(re, im)
    return WavePhaseField(
        init_node=int(init_node),
        amplitudes=amplitudes,
        phases=phase_field(amplitudes),
    )


def phase_field(amplitudes: np.ndarray) -> np.ndarray:
    """Complex arguments in (-pi, pi] of a vector of amplitudes."""
    amp = np.asarray(amplitudes, dtype=complex)
    n_tiny = int(np.count_nonzero(np.abs(amp) < UNDERFLOW_FLOOR))
    if n_tiny:
        warnings.warn(
            f"{n_tiny} amplitude(s) underflowed; their phases are unreliable",
            RuntimeWarning,
            stacklevel=2,
        )
    phases = np.angle(amp)
    phases[phases <= -np.pi] = np.pi
    return phases
