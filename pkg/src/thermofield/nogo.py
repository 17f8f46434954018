"""Doubling, cloning, temperature maps, and broadcasting checks.

The doubling map |n> -> |n, n~> is defined on Fock basis kets only; asking it
to act on a superposition raises, because no linear (let alone unitary)
extension exists.  The cloning map psi -> psi (x) psi is total but quadratic,
and :func:`cloning_linearity_gap` measures its failure of linearity, which is
strictly positive exactly when both amplitudes are nonzero.

The temperature map is re-preparation: it accepts a thermal density (validated
as geometric-diagonal) and returns the thermal density at the target
temperature, an exchange of thermal baths rather than a channel on arbitrary
states.  Broadcasting candidates are built and checked as explicit joint
states; no complete-positivity claim is made.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import hilbert, thermo
from .errors import ContractError, DomainError, InvalidDensityError, ShapeError


def doubling_map(ket, cutoff: int) -> np.ndarray:
    """|n> -> |n, n~> on the doubled space, for basis kets only.

    Accepts a Fock index or a vector that is a basis ket up to global phase.
    Superpositions raise :class:`DomainError`: the map has no linear
    extension, and this contract makes that impossibility executable.
    """
    if isinstance(ket, (int, np.integer)):
        return hilbert.doubled_basis_ket(int(ket), int(ket), cutoff)
    vec = np.asarray(ket)
    if vec.ndim != 1 or vec.size != cutoff + 1:
        raise ShapeError(f"expected a mode-sector vector of dim {cutoff + 1}, got shape {vec.shape}")
    support = np.flatnonzero(np.abs(vec) > 1e-12)
    if support.size != 1 or abs(abs(vec[support[0]]) - 1.0) > 1e-10:
        raise DomainError(
            "doubling map is defined on Fock basis kets only; superpositions have no linear extension"
        )
    n = int(support[0])
    return vec[n] * hilbert.doubled_basis_ket(n, n, cutoff)


def clone_map(psi: np.ndarray) -> np.ndarray:
    """psi -> psi (x) psi for a normalized state vector."""
    psi = np.asarray(psi)
    if psi.ndim != 1:
        raise ShapeError(f"expected a state vector, got shape {psi.shape}")
    if abs(np.linalg.norm(psi) - 1.0) > 1e-8:
        raise ContractError(f"clone input is not normalized: norm = {np.linalg.norm(psi):.6f}")
    return np.kron(psi, psi)


def cloning_linearity_gap(a0: complex, a1: complex, basis: tuple[np.ndarray, np.ndarray]) -> float:
    """|| C(a0 e0 + a1 e1) - a0 C(e0) - a1 C(e1) || for the cloning map C.

    ``basis`` is any orthonormal pair; the gap is basis-independent,
    sqrt(2|a0 a1|^2 + |a0^2 - a0|^2 + |a1^2 - a1|^2), and vanishes exactly
    for the bare basis states.
    """
    e0, e1 = (np.asarray(b) for b in basis)
    for name, vec in (("first", e0), ("second", e1)):
        if abs(np.linalg.norm(vec) - 1.0) > 1e-8:
            raise ContractError(f"{name} basis ket is not normalized")
    if abs(np.vdot(e0, e1)) > 1e-8:
        raise ContractError(f"basis kets are not orthogonal: |<e0|e1>| = {abs(np.vdot(e0, e1)):.3e}")
    if abs(abs(a0) ** 2 + abs(a1) ** 2 - 1.0) > 1e-9:
        raise ContractError("amplitudes must satisfy |a0|^2 + |a1|^2 = 1")
    psi = a0 * e0 + a1 * e1
    cloned = clone_map(psi / np.linalg.norm(psi))
    linear = a0 * np.kron(e0, e0) + a1 * np.kron(e1, e1)
    return float(np.linalg.norm(cloned - linear))


def temperature_map(rho: np.ndarray, target: thermo.ThermalParams, cutoff: int, atol: float = 1e-8) -> np.ndarray:
    """Re-prepare a thermal density at the target temperature.

    The input must be a (truncated, renormalized) thermal density; anything
    else raises :class:`DomainError` since the map is only defined on thermal
    states.  A zero-temperature target yields the vacuum projector.
    """
    _require_thermal(rho, cutoff, atol)
    return thermo.thermal_density(target, cutoff)


@dataclass(frozen=True)
class BroadcastReport:
    """Verdict on whether a joint state broadcasts a reference state.

    ``reduced_a``/``reduced_b`` are the reductions onto the first/second
    factor (i.e. the states surviving the trace over the other factor);
    ``deviations`` are their Frobenius distances to the reference, and
    ``is_broadcast`` holds iff both are below the tolerance.
    """

    input_rho: np.ndarray
    joint_state: np.ndarray
    reduced_a: np.ndarray
    reduced_b: np.ndarray
    deviations: tuple[float, float]
    is_broadcast: bool


def broadcast_check(joint: np.ndarray, rho_ref: np.ndarray, atol: float = 1e-10) -> BroadcastReport:
    """Check Tr_B(joint) = Tr_A(joint) = rho_ref within ``atol``."""
    joint = np.asarray(joint)
    d = rho_ref.shape[0]
    if joint.shape != (d * d, d * d):
        raise ShapeError(f"joint shape {joint.shape} does not match two copies of dim {d}")
    _require_density(joint)
    reduced_a = hilbert.partial_trace(joint, (d, d), keep=0)
    reduced_b = hilbert.partial_trace(joint, (d, d), keep=1)
    dev_a = float(np.linalg.norm(reduced_a - rho_ref))
    dev_b = float(np.linalg.norm(reduced_b - rho_ref))
    return BroadcastReport(
        input_rho=np.asarray(rho_ref),
        joint_state=joint,
        reduced_a=reduced_a,
        reduced_b=reduced_b,
        deviations=(dev_a, dev_b),
        is_broadcast=dev_a < atol and dev_b < atol,
    )


def vacuum_swap_mixture(rho: np.ndarray, mu: float) -> np.ndarray:
    """mu rho (x) |0><0| + (1 - mu) |0><0| (x) rho.

    Its two reductions swap mu between rho and the vacuum projector, so it
    never broadcasts rho for mu in (0, 1) and mixed thermal rho.
    """
    if not 0.0 <= mu <= 1.0:
        raise DomainError(f"mu must lie in [0, 1], got {mu}")
    p0 = _vacuum_projector(rho.shape[0])
    return mu * np.kron(rho, p0) + (1.0 - mu) * np.kron(p0, rho)


def mixture_broadcast_candidate(rho: np.ndarray, mu: float) -> np.ndarray:
    """mu rho (x) rho + (1 - mu) |0><0| (x) |0><0|.

    Both reductions equal mu rho + (1 - mu)|0><0|: a broadcast of the mixture.
    """
    if not 0.0 <= mu <= 1.0:
        raise DomainError(f"mu must lie in [0, 1], got {mu}")
    p0 = _vacuum_projector(rho.shape[0])
    return mu * np.kron(rho, rho) + (1.0 - mu) * np.kron(p0, p0)


@dataclass(frozen=True)
class TwoTemperatureBroadcast:
    """Joint state realizing a pair of temperature maps through its reductions."""

    joint: np.ndarray
    onto_first: np.ndarray
    onto_second: np.ndarray
    deviations: tuple[float, float]


def thermal_broadcast_maps(
    rho_beta: np.ndarray,
    target_first: thermo.ThermalParams,
    target_second: thermo.ThermalParams,
    cutoff: int,
    atol: float = 1e-10,
) -> TwoTemperatureBroadcast:
    """Canonical joint state whose traces realize two temperature maps.

    Tracing the first factor leaves the thermal state at ``target_first``;
    tracing the second leaves the one at ``target_second``.  Deviations are
    verified below ``atol``.
    """
    _require_thermal(rho_beta, cutoff, 1e-8)
    rho_first = thermo.thermal_density(target_first, cutoff)
    rho_second = thermo.thermal_density(target_second, cutoff)
    joint = np.kron(rho_second, rho_first)
    d = cutoff + 1
    after_first_trace = hilbert.partial_trace(joint, (d, d), keep=1)
    after_second_trace = hilbert.partial_trace(joint, (d, d), keep=0)
    devs = (
        float(np.linalg.norm(after_first_trace - rho_first)),
        float(np.linalg.norm(after_second_trace - rho_second)),
    )
    if max(devs) > atol:
        raise InvalidDensityError(f"broadcast reductions deviate by {devs}, beyond {atol:.1e}")
    return TwoTemperatureBroadcast(
        joint=joint, onto_first=after_first_trace, onto_second=after_second_trace, deviations=devs
    )


def _vacuum_projector(dim: int) -> np.ndarray:
    p0 = np.zeros((dim, dim), dtype=complex)
    p0[0, 0] = 1.0
    return p0


def _require_density(rho: np.ndarray, atol: float = 1e-8) -> None:
    if np.abs(rho - rho.conj().T).max() > atol:
        raise InvalidDensityError("matrix is not Hermitian")
    if abs(np.trace(rho).real - 1.0) > atol:
        raise InvalidDensityError(f"trace {np.trace(rho).real:.6f} is not 1")


def _require_thermal(rho: np.ndarray, cutoff: int, atol: float) -> None:
    """Accept only geometric-diagonal densities (truncated thermal states)."""
    rho = np.asarray(rho)
    if rho.shape != (cutoff + 1, cutoff + 1):
        raise ShapeError(f"density shape {rho.shape} does not match cutoff {cutoff}")
    off = rho - np.diag(np.diagonal(rho))
    if np.abs(off).max() > atol:
        raise DomainError("temperature map is defined on thermal states; input is not diagonal")
    diag = np.diagonal(rho).real
    if diag.min() < -atol or abs(diag.sum() - 1.0) > atol or np.abs(np.diagonal(rho).imag).max() > atol:
        raise DomainError("temperature map input is not a valid thermal density")
    if diag[0] <= 0:
        raise DomainError("thermal densities have strictly positive vacuum weight")
    ratio = diag[1] / diag[0]
    if not 0.0 <= ratio < 1.0:
        raise DomainError("temperature map input has no geometric weight profile")
    expected = diag[0] * ratio ** np.arange(cutoff + 1)
    if np.abs(diag - expected).max() > atol:
        raise DomainError("temperature map input deviates from a geometric weight profile")
