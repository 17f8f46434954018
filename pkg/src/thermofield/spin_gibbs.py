"""Spin-1/2 Gibbs-like density operator and its Hadamard transform.

Basis order is (|+1/2>, |-1/2>), S0 = diag(1/2, -1/2), and the thermal state
is rho = exp(-beta*omega*S0)/Z with Z = 2 cosh(beta*omega/2).  The Hadamard is
the standard (1/sqrt 2) [[1, 1], [1, -1]], which sends |+-1/2> to
(|1/2> +- |-1/2>)/sqrt 2.  Conjugating twice restores rho exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

HADAMARD = np.array([[1.0, 1.0], [1.0, -1.0]], dtype=complex) / math.sqrt(2.0)


@dataclass(frozen=True)
class SpinGibbs:
    beta_omega: float
    rho: np.ndarray
    partition: float


def spin_gibbs(beta_omega: float) -> SpinGibbs:
    """Two-level thermal state diag(e^{-x/2}, e^{x/2})/Z for x = beta*omega."""
    x = float(beta_omega)
    if not math.isfinite(x):
        raise ValueError(f"beta*omega must be finite, got {x}")
    # Stable diagonal weights: e^{-x/2}/Z = 1/(1 + e^x).
    p_up = 1.0 / (1.0 + math.exp(x)) if x < 700 else 0.0
    rho = np.diag([p_up, 1.0 - p_up]).astype(complex)
    return SpinGibbs(beta_omega=x, rho=rho, partition=2.0 * math.cosh(x / 2.0))


def hadamard_transform(s: SpinGibbs) -> np.ndarray:
    """H rho H†: diagonal entries 1/2, off-diagonal -tanh(beta*omega/2)/2."""
    return HADAMARD @ s.rho @ HADAMARD.conj().T


def hadamard_sum_form(s: SpinGibbs) -> np.ndarray:
    """The transform as an explicit two-term dyad sum.

    (1/2Z) sum_{sgn = +-1} e^{-sgn x/2} (|1/2> + sgn |-1/2>)(<1/2| + sgn <-1/2|).
    The weight/sign pairing is the one direct conjugation produces; the sum
    equals :func:`hadamard_transform` entrywise.
    """
    x = s.beta_omega
    out = np.zeros((2, 2), dtype=complex)
    for sgn in (+1.0, -1.0):
        ket = np.array([1.0, sgn], dtype=complex)
        weight = 1.0 / (1.0 + math.exp(sgn * x)) if abs(x) < 700 else (0.0 if sgn * x > 0 else 1.0)
        out += weight * np.outer(ket, ket.conj()) / 2.0
    return out


def verify_gibbs_reversibility(s: SpinGibbs) -> float:
    """Spectral norm of H (H rho H†) H† - rho; zero for an involution."""
    twice = HADAMARD @ hadamard_transform(s) @ HADAMARD.conj().T
    return float(np.linalg.norm(twice - s.rho, 2))
