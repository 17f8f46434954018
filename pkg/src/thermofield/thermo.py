"""Thermal states on the doubled Fock space.

A single bosonic mode of frequency omega at inverse temperature beta is
described by the Bogoliubov angle theta with

    tanh(theta) = exp(-beta*omega/2),   u = cosh(theta),   v = sinh(theta),
    nbar = sinh(theta)^2 = 1/(exp(beta*omega) - 1).

The thermal vacuum is the entangled doubled-space state

    |0(beta)> = (1/cosh theta) sum_n tanh(theta)^n |n, n~>,

whose mode-sector expectations reproduce the thermal density operator

    rho_th = sum_n nbar^n / (nbar + 1)^(n+1) |n><n|.

The first excitation |1(beta)> = (c† (x) I / u) |0(beta)> and superpositions
a0 |0(beta)> + a1 |1(beta)> form the thermofield qubit.  Truncated states are
renormalized; the raw geometric tail mass tanh(theta)^(2(N+1)) is always
available through :func:`tail_mass` so tolerances can scale with it.

Zero temperature is the first-class sentinel beta = math.inf (theta = 0),
never a large float.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from . import hilbert
from .errors import ContractError, DomainError, ShapeError, TruncationError, TruncationWarning


@dataclass(frozen=True)
class ThermalParams:
    """Scalar bundle for one mode at one temperature.

    Invariants (by construction): u^2 - v^2 = 1, v^2 = nbar, and
    tanh(theta) = exp(-beta*omega/2).
    """

    beta: float
    omega: float
    theta: float
    u: float
    v: float
    nbar: float

    @property
    def tanh_theta(self) -> float:
        return self.v / self.u

    def tag(self) -> tuple[float, float]:
        """Hashable temperature identity used by the label algebra."""
        return (self.beta, self.omega)


def bogoliubov_params(beta: float, omega: float = 1.0) -> ThermalParams:
    """Bogoliubov parameters for inverse temperature beta and frequency omega.

    ``beta = math.inf`` is the zero-temperature sentinel (theta = 0, nbar = 0).
    """
    if omega <= 0:
        raise DomainError(f"omega must be positive, got {omega}")
    if beta != math.inf and beta <= 0:
        raise DomainError(f"beta must be positive or math.inf, got {beta}")
    if beta == math.inf:
        return ThermalParams(beta=math.inf, omega=omega, theta=0.0, u=1.0, v=0.0, nbar=0.0)
    nbar = 1.0 / math.expm1(beta * omega)
    u = math.sqrt(nbar + 1.0)
    v = math.sqrt(nbar)
    theta = math.asinh(v)
    return ThermalParams(beta=beta, omega=omega, theta=theta, u=u, v=v, nbar=nbar)


def params_from_nbar(nbar: float, omega: float = 1.0) -> ThermalParams:
    """Parameters of the temperature whose mean occupation is nbar."""
    if nbar < 0:
        raise DomainError(f"nbar must be >= 0, got {nbar}")
    if nbar == 0:
        return bogoliubov_params(math.inf, omega)
    return bogoliubov_params(math.log1p(1.0 / nbar) / omega, omega)


def tail_mass(params: ThermalParams, cutoff: int) -> float:
    """Geometric weight above the cutoff: tanh(theta)^(2(N+1))."""
    return float(params.tanh_theta ** (2 * (cutoff + 1)))


def thermal_vacuum(params: ThermalParams, cutoff: int, warn_tail: float = 1e-6) -> np.ndarray:
    """Truncated, renormalized thermal vacuum on the doubled space.

    Emits :class:`TruncationWarning` (never fails) when the raw tail mass
    exceeds ``warn_tail``.
    """
    if cutoff < 1:
        raise ShapeError(f"cutoff must be >= 1, got {cutoff}")
    tail = tail_mass(params, cutoff)
    if tail > warn_tail:
        warnings.warn(
            f"thermal vacuum tail mass {tail:.3e} exceeds {warn_tail:.1e} at cutoff {cutoff}",
            TruncationWarning,
            stacklevel=2,
        )
    d = cutoff + 1
    amps = params.tanh_theta ** np.arange(d)
    amps = amps / np.linalg.norm(amps)
    vec = np.zeros(d * d, dtype=complex)
    vec[np.arange(d) * d + np.arange(d)] = amps
    return vec


def thermal_density(params: ThermalParams, cutoff: int) -> np.ndarray:
    """Truncated, renormalized thermal density operator, diagonal in Fock basis."""
    if cutoff < 1:
        raise ShapeError(f"cutoff must be >= 1, got {cutoff}")
    q = params.tanh_theta ** 2
    weights = q ** np.arange(cutoff + 1)
    weights = weights / weights.sum()
    return np.diag(weights).astype(complex)


def excited_thermofield(params: ThermalParams, cutoff: int, norm_tol: float = 1e-4) -> np.ndarray:
    """First excitation |1(beta)> = (c† (x) I / u) |0(beta)>, renormalized.

    Raises :class:`TruncationError` when the raw norm deviates from 1 by more
    than ``norm_tol``, which signals that the cutoff is too small for this
    temperature.
    """
    ops = hilbert.fock_operators(cutoff)
    vac = thermal_vacuum(params, cutoff)
    raw = hilbert.apply_mode_operator(ops.create, vac) / params.u
    nrm = float(np.linalg.norm(raw))
    if abs(nrm - 1.0) > norm_tol:
        raise TruncationError(
            f"excited thermofield norm {nrm:.6f} deviates beyond {norm_tol:.1e}; raise the cutoff"
        )
    return raw / nrm


@dataclass(frozen=True)
class ThermofieldQubit:
    """Superposition a0 |0(beta)> + a1 |1(beta)> at a fixed cutoff."""

    a0: complex
    a1: complex
    params: ThermalParams
    cutoff: int

    def __post_init__(self):
        total = abs(self.a0) ** 2 + abs(self.a1) ** 2
        if abs(total - 1.0) > 1e-10:
            raise ContractError(f"|a0|^2 + |a1|^2 = {total} is not 1 within 1e-10")
        if self.cutoff < 1:
            raise ShapeError(f"cutoff must be >= 1, got {self.cutoff}")


def qubit_state(q: ThermofieldQubit) -> np.ndarray:
    """Doubled-space vector of the thermofield qubit, normalized."""
    vec = q.a0 * thermal_vacuum(q.params, q.cutoff) + q.a1 * excited_thermofield(q.params, q.cutoff)
    return vec / np.linalg.norm(vec)


def rho_psi(q: ThermofieldQubit) -> np.ndarray:
    """Mode-sector density operator reproducing the qubit's expectations.

    The four-term form

        |a0|^2 rho_th + (|a1|^2/u^2) c† rho_th c
        + (a0* a1 / u) c† rho_th + (a0 a1* / u) rho_th c

    satisfies Tr(rho_psi O) = <psi(beta)| (O (x) I) |psi(beta)> for every
    operator O on the mode sector, exactly at any cutoff when the same
    truncated thermal objects appear on both sides.  The trace equals 1 up to
    a truncation deficit of order (N+1) tanh(theta)^(2N) / u^2; it is reported
    via ``np.trace``, not silently renormalized.
    """
    p = q.params
    rho = thermal_density(p, q.cutoff)
    ops = hilbert.fock_operators(q.cutoff)
    c, cd = ops.annihilate, ops.create
    a0, a1 = complex(q.a0), complex(q.a1)
    cross = np.conj(a0) * a1 / p.u
    return (
        abs(a0) ** 2 * rho
        + (abs(a1) ** 2 / p.u**2) * (cd @ rho @ c)
        + cross * (cd @ rho)
        + np.conj(cross) * (rho @ c)
    )


def thermal_annihilator(params: ThermalParams, cutoff: int) -> np.ndarray:
    """Doubled-space operator u (c (x) I) - v (I (x) c†).

    Annihilates the (truncated) thermal vacuum exactly: the geometric
    amplitude ratio tanh(theta) makes the two ladder terms cancel term by
    term below the cutoff.
    """
    ops = hilbert.fock_operators(cutoff)
    return params.u * hilbert.lift_mode(ops.annihilate) - params.v * hilbert.lift_tilde(ops.create)


def vacuum_overlap(p1: ThermalParams, p2: ThermalParams, cutoff: int) -> complex:
    """Numeric <0(beta)|0(beta')> of the truncated, renormalized vacua.

    The analytic untruncated value is 1/cosh(theta - theta'); see
    :func:`vacuum_overlap_analytic`.  Both temperatures must share the mode
    frequency.
    """
    if abs(p1.omega - p2.omega) > 1e-12:
        raise DomainError(f"vacua live on different modes: omega {p1.omega} vs {p2.omega}")
    n = np.arange(cutoff + 1)
    a = p1.tanh_theta**n
    b = p2.tanh_theta**n
    return complex(np.dot(a, b) / (np.linalg.norm(a) * np.linalg.norm(b)))


def vacuum_overlap_analytic(p1: ThermalParams, p2: ThermalParams) -> float:
    """Closed form 1/cosh(theta - theta') of the vacuum overlap."""
    return 1.0 / math.cosh(p1.theta - p2.theta)


@dataclass(frozen=True)
class SuperposedVacuumExpectation:
    """Expectation of a mode-sector observable in a two-temperature vacuum superposition.

    ``abstract`` assumes vacua at different temperatures are orthonormal and
    equals mu <O>_beta + (1-mu) <O>_beta' exactly.  ``numeric`` evaluates the
    concrete renormalized vector sqrt(mu)|0(beta)> + sqrt(1-mu)|0(beta')> and
    therefore includes the cross terms the abstract rule drops.
    """

    abstract: complex
    numeric: complex | None

    @property
    def cross_term(self) -> complex | None:
        if self.numeric is None:
            return None
        return self.numeric - self.abstract


def superposed_vacuum_expectation(
    mu: float,
    p1: ThermalParams,
    p2: ThermalParams,
    op: np.ndarray,
    cutoff: int,
    engine: str = "both",
) -> SuperposedVacuumExpectation:
    """Both readings of <O> in sqrt(mu)|0(beta)> + sqrt(1-mu)|0(beta')>."""
    if not 0.0 <= mu <= 1.0:
        raise DomainError(f"mu must lie in [0, 1], got {mu}")
    if engine not in ("abstract", "numeric", "both"):
        raise DomainError(f"unknown engine {engine!r}")
    exp1 = hilbert.expectation(thermal_density(p1, cutoff), op)
    exp2 = hilbert.expectation(thermal_density(p2, cutoff), op)
    abstract = mu * exp1 + (1.0 - mu) * exp2
    numeric = None
    if engine in ("numeric", "both"):
        vec = math.sqrt(mu) * thermal_vacuum(p1, cutoff) + math.sqrt(1.0 - mu) * thermal_vacuum(p2, cutoff)
        vec = vec / np.linalg.norm(vec)
        numeric = hilbert.mode_expectation(vec, op)
    return SuperposedVacuumExpectation(abstract=abstract, numeric=numeric)


@dataclass(frozen=True)
class TemperatureMixture:
    """Convex weights over inverse temperatures: ((beta_1, mu_1), ...)."""

    weights: tuple[tuple[float, float], ...]

    def __post_init__(self):
        if not self.weights:
            raise DomainError("mixture needs at least one component")
        total = 0.0
        for beta, mu in self.weights:
            if mu < 0:
                raise DomainError(f"mixture weight {mu} is negative")
            if beta != math.inf and beta <= 0:
                raise DomainError(f"beta must be positive or math.inf, got {beta}")
            total += mu
        if abs(total - 1.0) > 1e-12:
            raise DomainError(f"mixture weights sum to {total}, not 1 within 1e-12")


def mixture_density(mix: TemperatureMixture, omega: float, cutoff: int) -> np.ndarray:
    """Convex combination sum_k mu_k rho_th(beta_k) of thermal densities."""
    d = cutoff + 1
    rho = np.zeros((d, d), dtype=complex)
    for beta, mu in mix.weights:
        rho += mu * thermal_density(bogoliubov_params(beta, omega), cutoff)
    return rho
