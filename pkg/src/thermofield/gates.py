"""Gate actions on thermofield objects.

Gates are unitaries on the mode sector, lifted to the doubled space as
U (x) I; the tilde sector is never gated.  Conjugated operators, gate-operated
vacua and qubits, and the Bogoliubov commutator diagnostic live here.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import hilbert, thermo
from .errors import ConsistencyError, ContractError, ShapeError


@dataclass(frozen=True)
class GateOp:
    """Named unitary acting on the mode sector."""

    name: str
    unitary: np.ndarray

    def __post_init__(self):
        u = np.asarray(self.unitary)
        if u.ndim != 2 or u.shape[0] != u.shape[1]:
            raise ShapeError(f"gate unitary must be square, got {u.shape}")
        defect = np.abs(u @ u.conj().T - np.eye(u.shape[0])).max()
        if defect > 1e-10:
            raise ContractError(f"gate {self.name!r} is not unitary: |U U† - I| = {defect:.3e}")

    @property
    def dim(self) -> int:
        return self.unitary.shape[0]

    @property
    def lifted(self) -> np.ndarray:
        """U (x) I on the doubled space."""
        return hilbert.lift_mode(self.unitary)


def identity_gate(cutoff: int) -> GateOp:
    return GateOp("identity", np.eye(cutoff + 1, dtype=complex))


def phase_gate(cutoff: int, phi: float) -> GateOp:
    """Number-conserving diagonal unitary diag(1, e^{i phi}, e^{2 i phi}, ...)."""
    return GateOp(f"phase({phi:g})", np.diag(np.exp(1j * phi * np.arange(cutoff + 1))))


def random_gate(cutoff: int, rng: np.random.Generator, name: str = "random") -> GateOp:
    """Haar-ish random unitary from QR of a complex Gaussian matrix."""
    d = cutoff + 1
    z = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    q, r = np.linalg.qr(z)
    q = q * (np.diagonal(r) / np.abs(np.diagonal(r)))
    return GateOp(name, q)


def conjugate_operator(g: GateOp, a: np.ndarray) -> np.ndarray:
    """U A U† on the mode sector."""
    a = np.asarray(a)
    if a.shape != g.unitary.shape:
        raise ShapeError(f"operator shape {a.shape} does not match gate dim {g.dim}")
    return g.unitary @ a @ g.unitary.conj().T


def gate_vacuum(g: GateOp, params: thermo.ThermalParams, cutoff: int) -> np.ndarray:
    """Gate-operated thermal vacuum (U (x) I)|0(beta)>."""
    _check_gate_cutoff(g, cutoff)
    return hilbert.apply_mode_operator(g.unitary, thermo.thermal_vacuum(params, cutoff))


def gate_excited(g: GateOp, params: thermo.ThermalParams, cutoff: int, atol: float = 1e-8) -> np.ndarray:
    """Gate-operated first excitation, computed along both construction paths.

    Path one applies the conjugated creation operator to the gated vacuum,
    path two gates the ungated excitation.  The two must agree within ``atol``
    (a mismatch signals an implementation or truncation fault).
    """
    _check_gate_cutoff(g, cutoff)
    c_g_dag = conjugate_operator(g, hilbert.fock_operators(cutoff).create)
    via_ladder = hilbert.apply_mode_operator(c_g_dag, gate_vacuum(g, params, cutoff)) / params.u
    via_ladder = via_ladder / np.linalg.norm(via_ladder)
    via_gate = hilbert.apply_mode_operator(g.unitary, thermo.excited_thermofield(params, cutoff))
    mismatch = float(np.linalg.norm(via_ladder - via_gate))
    if mismatch > atol:
        raise ConsistencyError(f"gate-excited construction paths disagree by {mismatch:.3e}")
    return via_gate


def gated_qubit_state(g: GateOp, q: thermo.ThermofieldQubit) -> np.ndarray:
    """(U (x) I) applied to the thermofield qubit vector."""
    _check_gate_cutoff(g, q.cutoff)
    return hilbert.apply_mode_operator(g.unitary, thermo.qubit_state(q))


def rho_psi_gated(g: GateOp, q: thermo.ThermofieldQubit) -> np.ndarray:
    """Gate-operated qubit density, via the conjugated four-term expansion.

    Built from rho_G = U rho_th U† and c_G = U c U†; equals U rho_psi U†
    identically, which tests assert to 1e-10.
    """
    _check_gate_cutoff(g, q.cutoff)
    p = q.params
    ops = hilbert.fock_operators(q.cutoff)
    rho_g = conjugate_operator(g, thermo.thermal_density(p, q.cutoff))
    c_g = conjugate_operator(g, ops.annihilate)
    cd_g = conjugate_operator(g, ops.create)
    a0, a1 = complex(q.a0), complex(q.a1)
    cross = np.conj(a0) * a1 / p.u
    return (
        abs(a0) ** 2 * rho_g
        + (abs(a1) ** 2 / p.u**2) * (cd_g @ rho_g @ c_g)
        + cross * (cd_g @ rho_g)
        + np.conj(cross) * (rho_g @ c_g)
    )


def check_bogoliubov_commutator(g: GateOp, params: thermo.ThermalParams, cutoff: int) -> float:
    """Residual of [U_G, c†] = u [U_G, b†(beta)] + v [U_G, b~(beta)].

    b and b~ are the thermal ladder operators from the inverse Bogoliubov
    relations, b = u (c (x) I) - v (I (x) c†) and b~ = u (I (x) c) - v (c† (x) I).
    Returns the spectral norm of the difference restricted to the block with
    both Fock indices <= cutoff - 2, excluding the truncation edge.
    """
    _check_gate_cutoff(g, cutoff)
    ops = hilbert.fock_operators(cutoff)
    cdag = hilbert.lift_mode(ops.create)
    c_tilde = hilbert.lift_tilde(ops.annihilate)
    b_dag = params.u * cdag - params.v * c_tilde
    b_tilde = params.u * c_tilde - params.v * cdag
    u_g = g.lifted

    def comm(x, y):
        return x @ y - y @ x

    diff = comm(u_g, cdag) - params.u * comm(u_g, b_dag) - params.v * comm(u_g, b_tilde)
    d = cutoff + 1
    sub = np.arange(d * d).reshape(d, d)[: cutoff - 1, : cutoff - 1].reshape(-1)
    return float(np.linalg.norm(diff[np.ix_(sub, sub)], 2))


def _check_gate_cutoff(g: GateOp, cutoff: int) -> None:
    if g.dim != cutoff + 1:
        raise ShapeError(f"gate dim {g.dim} does not match cutoff {cutoff}")
