"""Photon-statistics and entropy diagnostics.

Mandel's Q = (<n^2> - <n>^2 - <n>) / <n> classifies number statistics:
negative is sub-Poissonian, zero Poissonian, positive super-Poissonian.  A
thermal state has Q = nbar; a Fock state |n>, n >= 1, has Q = -1; a coherent
state has Q = 0.

Inputs may live on the mode sector (dim N+1) or on the doubled space
(dim (N+1)^2); doubled states and densities are reduced onto the mode sector
before taking moments.  Moments use the truncated number operator, so their
truncation error scales like N^2 times the tail mass and tolerances should
inherit that factor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import gates, hilbert, thermo
from .errors import ConsistencyError, InvalidDensityError, ShapeError, UndefinedMeanError


@dataclass(frozen=True)
class MandelReport:
    mean: float
    second_factorial: float
    q: float
    regime: str


def mandel_q(
    state: np.ndarray,
    ops: hilbert.FockOperators,
    mean_tol: float = 1e-12,
    regime_tol: float = 1e-9,
) -> MandelReport:
    """Mandel Q of a state vector or density operator.

    Raises :class:`UndefinedMeanError` (carrying the raw moments) when the
    mean occupation is below ``mean_tol``.
    """
    mean, second = _factorial_moments(state, ops)
    if mean <= mean_tol:
        raise UndefinedMeanError(
            f"mean occupation {mean:.3e} is below {mean_tol:.1e}; Q undefined", mean, second
        )
    q = (second - mean**2) / mean
    if abs(q) < regime_tol:
        regime = "poissonian"
    elif q < 0:
        regime = "sub-poissonian"
    else:
        regime = "super-poissonian"
    return MandelReport(mean=mean, second_factorial=second, q=q, regime=regime)


def mandel_q_gated_vacuum(g: gates.GateOp, params: thermo.ThermalParams, cutoff: int) -> MandelReport:
    """Q of the gate-operated thermal vacuum, from doubled-space moments.

    Identical to ``mandel_q`` of the conjugated thermal density U rho_th U†.
    """
    return mandel_q(gates.gate_vacuum(g, params, cutoff), hilbert.fock_operators(cutoff))


def mandel_q_gated_qubit(
    g: gates.GateOp, q: thermo.ThermofieldQubit, agreement_tol: float = 1e-8
) -> MandelReport:
    """Q of the gate-operated thermofield qubit, evaluated along two paths.

    Path one takes traces against the gated qubit density, path two takes
    state-vector moments of the gated qubit ket; they must agree within
    ``agreement_tol`` or :class:`ConsistencyError` is raised.
    """
    ops = hilbert.fock_operators(q.cutoff)
    via_density = mandel_q(gates.rho_psi_gated(g, q), ops)
    via_state = mandel_q(gates.gated_qubit_state(g, q), ops)
    if abs(via_density.q - via_state.q) > agreement_tol:
        raise ConsistencyError(
            f"gated-qubit Q paths disagree: {via_density.q} (density) vs {via_state.q} (state)"
        )
    return via_density


def von_neumann_entropy(rho: np.ndarray, neg_tol: float = 1e-10, eig_floor: float = 1e-15) -> float:
    """-sum lambda ln lambda over the spectrum of a density operator."""
    rho = np.asarray(rho)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ShapeError(f"density must be a square matrix, got {rho.shape}")
    eigs = np.linalg.eigvalsh(rho)
    if eigs.min() < -neg_tol:
        raise InvalidDensityError(f"negative eigenvalue {eigs.min():.3e} below -{neg_tol:.1e}")
    eigs = eigs[eigs > eig_floor]
    return float(-np.sum(eigs * np.log(eigs)))


def coherent_state(alpha: complex, cutoff: int) -> np.ndarray:
    """Truncated coherent state (Poissonian test vector), renormalized."""
    n = np.arange(cutoff + 1)
    log_fact = np.concatenate(([0.0], np.cumsum(np.log(np.arange(1, cutoff + 1)))))
    amps = np.exp(n * np.log(complex(alpha)) - 0.5 * log_fact) if alpha != 0 else (n == 0).astype(complex)
    amps = np.asarray(amps, dtype=complex)
    return amps / np.linalg.norm(amps)


def _factorial_moments(state: np.ndarray, ops: hilbert.FockOperators) -> tuple[float, float]:
    """(<n>, <n^2 - n>) on the mode sector, reducing doubled inputs first."""
    d = ops.dim
    state = np.asarray(state)
    n_op = ops.number
    n2_op = n_op @ n_op
    if state.ndim == 1:
        if state.size == d:
            pass
        elif state.size == d * d:
            state = hilbert.reduced_mode_density(state, d)
        else:
            raise ShapeError(f"state dim {state.size} matches neither {d} nor {d * d}")
    elif state.ndim == 2:
        if state.shape == (d, d):
            pass
        elif state.shape == (d * d, d * d):
            state = hilbert.partial_trace(state, (d, d), keep=0)
        else:
            raise ShapeError(f"density shape {state.shape} matches neither mode nor doubled dims")
    else:
        raise ShapeError(f"state must be a vector or matrix, got ndim {state.ndim}")
    mean = hilbert.expectation(state, n_op).real
    n2 = hilbert.expectation(state, n2_op).real
    return float(mean), float(n2 - mean)
