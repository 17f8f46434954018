"""Dense truncated-Fock-space substrate.

Everything else in the package is built on the helpers here: ladder operators
at a finite cutoff, Kronecker products, partial traces, expectation values and
fidelities.  All arrays are plain complex ndarrays.

Index conventions, fixed once and used everywhere:

* a doubled mode is ordered (mode (x) tilde partner); the basis ket |n, m~>
  sits at flat index n*(N+1) + m,
* multi-party products are ordered (A (x) B (x) C).

Truncation note: on the cutoff subspace the commutator [annihilate, create]
equals the identity except in the top row/column, where the missing |N+1>
level makes it deviate.  This defect is a property of any finite cutoff; it is
quantified by the thermal tail bounds in :mod:`thermofield.thermo` rather than
"fixed" here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ContractError, DimensionError, ShapeError

#: Largest matrix dimension a tensor product may produce by default.  Vectors
#: are allowed up to the square of this (same memory footprint as one matrix
#: row budget).
DEFAULT_MAX_DIM = 4096


@dataclass(frozen=True)
class FockOperators:
    """Ladder and number operators on the Fock space truncated at ``cutoff``.

    ``annihilate |n> = sqrt(n) |n-1>`` and ``annihilate |0> = 0``; ``number``
    is exactly ``create @ annihilate``.  Matrices have dim ``cutoff + 1``.
    """

    cutoff: int
    annihilate: np.ndarray
    create: np.ndarray
    number: np.ndarray

    @property
    def dim(self) -> int:
        return self.cutoff + 1


def fock_operators(cutoff: int) -> FockOperators:
    """Build the ladder operators for Fock states 0..cutoff."""
    if cutoff < 1:
        raise ShapeError(f"cutoff must be >= 1, got {cutoff}")
    d = cutoff + 1
    a = np.zeros((d, d), dtype=complex)
    roots = np.sqrt(np.arange(1, d))
    a[np.arange(d - 1), np.arange(1, d)] = roots
    adag = a.conj().T
    return FockOperators(cutoff=cutoff, annihilate=a, create=adag, number=adag @ a)


def basis_ket(index: int, dim: int) -> np.ndarray:
    """Computational basis vector |index> in a dim-dimensional space."""
    if not 0 <= index < dim:
        raise ShapeError(f"basis index {index} out of range for dim {dim}")
    v = np.zeros(dim, dtype=complex)
    v[index] = 1.0
    return v


def doubled_basis_ket(n: int, m: int, cutoff: int) -> np.ndarray:
    """Basis ket |n, m~> of the doubled mode, flat index n*(N+1) + m."""
    d = cutoff + 1
    if not (0 <= n < d and 0 <= m < d):
        raise ShapeError(f"indices ({n}, {m}) out of range for cutoff {cutoff}")
    v = np.zeros(d * d, dtype=complex)
    v[n * d + m] = 1.0
    return v


def tensor_product(a: np.ndarray, b: np.ndarray, max_dim: int = DEFAULT_MAX_DIM) -> np.ndarray:
    """Kronecker product of two operators or two state vectors.

    Both operands must be the same kind (both matrices or both vectors).
    Matrix results larger than ``max_dim`` and vector results larger than
    ``max_dim**2`` raise :class:`DimensionError` before any allocation.
    """
    a = np.asarray(a)
    b = np.asarray(b)
    if a.ndim != b.ndim or a.ndim not in (1, 2):
        raise ShapeError(
            f"operands must both be vectors or both be square matrices, got ndim {a.ndim} and {b.ndim}"
        )
    if a.ndim == 2 and (a.shape[0] != a.shape[1] or b.shape[0] != b.shape[1]):
        raise ShapeError(f"matrix operands must be square, got {a.shape} and {b.shape}")
    out_dim = a.shape[0] * b.shape[0]
    budget = max_dim if a.ndim == 2 else max_dim * max_dim
    if out_dim > budget:
        raise DimensionError(f"tensor product dimension {out_dim} exceeds budget {budget}")
    return np.kron(a, b)


def lift_mode(op: np.ndarray, tilde_dim: int | None = None) -> np.ndarray:
    """Embed an operator on the mode sector into the doubled space: op (x) I."""
    d = tilde_dim if tilde_dim is not None else op.shape[0]
    return np.kron(op, np.eye(d, dtype=complex))


def lift_tilde(op: np.ndarray, mode_dim: int | None = None) -> np.ndarray:
    """Embed an operator on the tilde sector into the doubled space: I (x) op."""
    d = mode_dim if mode_dim is not None else op.shape[0]
    return np.kron(np.eye(d, dtype=complex), op)


def apply_mode_operator(op: np.ndarray, psi: np.ndarray) -> np.ndarray:
    """Apply (op (x) I) to a doubled-space vector without building the kron."""
    d = op.shape[0]
    psi = np.asarray(psi)
    if psi.ndim != 1 or psi.size % d != 0:
        raise ShapeError(f"state of size {psi.size} is not compatible with mode dim {d}")
    return (op @ psi.reshape(d, -1)).reshape(-1)


def reduced_mode_density(psi: np.ndarray, mode_dim: int) -> np.ndarray:
    """Density on the mode sector after tracing out the tilde partner."""
    psi = np.asarray(psi)
    if psi.ndim != 1 or psi.size % mode_dim != 0:
        raise ShapeError(f"state of size {psi.size} is not compatible with mode dim {mode_dim}")
    m = psi.reshape(mode_dim, -1)
    return m @ m.conj().T


def mode_expectation(psi: np.ndarray, op: np.ndarray) -> complex:
    """<psi| (op (x) I) |psi> for a doubled-space vector, via reshaping."""
    d = op.shape[0]
    psi = np.asarray(psi)
    if psi.ndim != 1 or psi.size % d != 0:
        raise ShapeError(f"state of size {psi.size} is not compatible with mode dim {d}")
    m = psi.reshape(d, -1)
    return complex(np.vdot(m, op @ m))


def partial_trace(rho: np.ndarray, dims, keep) -> np.ndarray:
    """Reduced density matrix on the kept subsystem(s).

    Args:
        rho: square matrix on the full product space.
        dims: dimensions of the tensor factors, in product order.
        keep: index (or indices) of the factor(s) to keep.

    Returns:
        The reduction onto the kept factors, in their original relative order.
    """
    dims = tuple(int(d) for d in dims)
    total = math.prod(dims)
    rho = np.asarray(rho)
    if rho.shape != (total, total):
        raise ShapeError(f"matrix shape {rho.shape} does not match subsystem dims {dims}")
    if isinstance(keep, (int, np.integer)):
        keep = (int(keep),)
    keep = tuple(sorted(int(k) for k in keep))
    if not keep or any(k < 0 or k >= len(dims) for k in keep) or len(set(keep)) != len(keep):
        raise ShapeError(f"invalid keep={keep} for {len(dims)} subsystems")

    t = rho.reshape(dims + dims)
    n = len(dims)
    for axis in sorted((i for i in range(len(dims)) if i not in keep), reverse=True):
        t = np.trace(t, axis1=axis, axis2=axis + n)
        n -= 1
    d_keep = math.prod(dims[k] for k in keep)
    return t.reshape(d_keep, d_keep)


def expectation(state: np.ndarray, op: np.ndarray) -> complex:
    """<psi|O|psi> for a vector, Tr(rho O) for a matrix.

    Returns the raw complex value; callers assert realness for Hermitian O.
    """
    state = np.asarray(state)
    op = np.asarray(op)
    if state.ndim == 1:
        if op.shape != (state.size, state.size):
            raise ShapeError(f"operator shape {op.shape} incompatible with state dim {state.size}")
        return complex(np.vdot(state, op @ state))
    if state.ndim == 2:
        if state.shape != op.shape or state.shape[0] != state.shape[1]:
            raise ShapeError(f"density shape {state.shape} incompatible with operator {op.shape}")
        return complex(np.trace(state @ op))
    raise ShapeError(f"state must be a vector or a square matrix, got ndim {state.ndim}")


def fidelity(a: np.ndarray, b: np.ndarray, norm_tol: float = 1e-8) -> float:
    """|<a|b>|^2 for two normalized state vectors."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape or a.ndim != 1:
        raise ShapeError(f"states must be vectors of equal dim, got {a.shape} and {b.shape}")
    for name, v in (("first", a), ("second", b)):
        nrm = float(np.linalg.norm(v))
        if abs(nrm - 1.0) > norm_tol:
            raise ContractError(f"{name} state is not normalized: |norm - 1| = {abs(nrm - 1.0):.3e}")
    return float(abs(np.vdot(a, b)) ** 2)


def dagger(m: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return np.asarray(m).conj().T
