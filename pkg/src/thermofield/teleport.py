"""Teleportation of thermofield qubits, in two engines.

The ``abstract`` engine works in an exact orthonormal-label algebra: kets are
sparse maps from per-party labels to complex amplitudes, and two labels that
differ in any component (excitation index, temperature tag, party, tilde
index) are orthogonal by definition.  This encodes the working assumption
that states at different temperatures are orthonormal, and it is the
authoritative engine for protocol-level claims.

The ``numeric`` engine realizes every state as a vector on truncated doubled
Fock spaces, one doubled mode per party, ordered (A (x) B (x) C), and runs the
same protocol with dense linear algebra.  It serves as a representation-level
diagnostic; for channels that mix temperatures it additionally reports the
concrete vacuum overlap between the source and target temperatures.
Disagreements between the engines are reported side by side, never averaged.

Protocol shapes (all kets normalized by 1/sqrt 2 so that the four Bell
branches carry probability 1/4 each):

* channel    (1/sqrt 2) sum_j (-1)^j |j>_B |j+1>_C        (indices mod 2)
* Bell pair  Psi_s = (1/sqrt 2) sum_j s^j |j>_A |j+1>_C,
             Phi_s = (1/sqrt 2) sum_j s^j |j>_A |j>_C
* correction P_Psi_s = sum_j (-1)^j s^j |j><j|,
             P_Phi_s = sum_j (-1)^j s^{j+1} |j+1><j|   (then renormalize)

The four zero-temperature source variants ("00", "11", "01", "10") replace
Alice's thermofield labels with doubled Fock pairs |j, f(j)~> and use the
analogous "b1"/"b2" Bell families; Bob stays thermal and the same corrections
apply.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable

import numpy as np

from . import hilbert, thermo
from .errors import ConfigError, ContractError, ShapeError

SQRT2 = math.sqrt(2.0)

#: label kinds
THERMO = "thermo"
PAIR = "pair"

#: Bell families; PSI/B1 correct with the diagonal projector, PHI/B2 with the
#: index-shifting one.
PSI, PHI, B1, B2 = "Psi", "Phi", "b1", "b2"
_SHIFT_FAMILIES = frozenset({PHI, B2})

PartyLabel = tuple
TermKey = tuple


def thermo_label(j: int, tag) -> PartyLabel:
    """Label of the thermofield state |j(beta)> carrying temperature tag."""
    return (THERMO, j % 2, tag)


def pair_label(j: int, jt: int) -> PartyLabel:
    """Label of the doubled Fock pair ket |j, jt~>."""
    return (PAIR, j % 2, jt % 2)


class AbstractKet:
    """Sparse multi-party ket over orthonormal labels.

    Terms map a tuple of (party, label) pairs, sorted by party, to a complex
    amplitude.  Distinct keys are orthonormal by definition; amplitudes below
    1e-15 in magnitude are pruned after every arithmetic operation.
    """

    PRUNE = 1e-15
    __slots__ = ("terms",)

    def __init__(self, terms: dict[TermKey, complex] | None = None):
        self.terms: dict[TermKey, complex] = {}
        if terms:
            for key, amp in terms.items():
                if abs(amp) >= self.PRUNE:
                    self.terms[key] = complex(amp)

    @classmethod
    def product(cls, assignments: dict[str, PartyLabel], amplitude: complex = 1.0) -> "AbstractKet":
        """Single product term assigning one label per party."""
        key = tuple(sorted(assignments.items()))
        return cls({key: amplitude})

    def parties(self) -> frozenset[str]:
        return frozenset(p for key in self.terms for p, _ in key)

    def __add__(self, other: "AbstractKet") -> "AbstractKet":
        out = dict(self.terms)
        for key, amp in other.terms.items():
            out[key] = out.get(key, 0.0) + amp
        return AbstractKet(out)

    def __sub__(self, other: "AbstractKet") -> "AbstractKet":
        return self + (-1.0) * other

    def __mul__(self, scalar: complex) -> "AbstractKet":
        return AbstractKet({k: scalar * a for k, a in self.terms.items()})

    __rmul__ = __mul__

    def tensor(self, other: "AbstractKet") -> "AbstractKet":
        """Product of kets on disjoint parties."""
        if self.parties() & other.parties():
            raise ShapeError(f"tensor factors share parties {self.parties() & other.parties()}")
        out: dict[TermKey, complex] = {}
        for k1, a1 in self.terms.items():
            for k2, a2 in other.terms.items():
                key = tuple(sorted(k1 + k2))
                out[key] = out.get(key, 0.0) + a1 * a2
        return AbstractKet(out)

    def inner(self, other: "AbstractKet") -> complex:
        """<self|other> = sum over matching keys of conj(a) b."""
        if len(self.terms) > len(other.terms):
            return complex(np.conj(other.inner(self)))
        return sum(np.conj(amp) * other.terms.get(key, 0.0) for key, amp in self.terms.items())

    def norm(self) -> float:
        return math.sqrt(sum(abs(a) ** 2 for a in self.terms.values()))

    def normalized(self) -> "AbstractKet":
        n = self.norm()
        if n == 0.0:
            raise ContractError("cannot normalize the zero ket")
        return (1.0 / n) * self

    def project(self, bra: "AbstractKet") -> "AbstractKet":
        """Contract <bra| over the bra's parties, leaving a ket on the rest."""
        bra_parties = bra.parties()
        out: dict[TermKey, complex] = {}
        for key, amp in self.terms.items():
            on_bra = tuple(pl for pl in key if pl[0] in bra_parties)
            rest = tuple(pl for pl in key if pl[0] not in bra_parties)
            coeff = bra.terms.get(on_bra)
            if coeff is not None:
                out[rest] = out.get(rest, 0.0) + np.conj(coeff) * amp
        return AbstractKet(out)

    def map_party(self, party: str, fn: Callable[[PartyLabel], tuple[PartyLabel, complex] | None]) -> "AbstractKet":
        """Apply a label->(label, coeff) operator to one party's labels."""
        out: dict[TermKey, complex] = {}
        for key, amp in self.terms.items():
            new_key = []
            coeff = 1.0 + 0.0j
            for p, label in key:
                if p == party:
                    mapped = fn(label)
                    if mapped is None:
                        coeff = 0.0
                        break
                    label, c = mapped
                    coeff *= c
                new_key.append((p, label))
            if coeff != 0.0:
                k = tuple(sorted(new_key))
                out[k] = out.get(k, 0.0) + coeff * amp
        return AbstractKet(out)

    def __repr__(self) -> str:
        body = " + ".join(f"({a:.4g})|{k}>" for k, a in sorted(self.terms.items()))
        return f"AbstractKet({body or '0'})"


# --------------------------------------------------------------------------
# protocol specifications


@dataclass(frozen=True)
class SourceSpec:
    """Alice's input state: a thermofield qubit or a zero-temperature variant.

    ``kind = "thermo"`` requires ``params``; ``kind = "zero_temp"`` requires
    ``xy`` in {"00", "11", "01", "10"} selecting the tilde structure of
    Alice's doubled pair basis |j, f(j)~>.
    """

    kind: str
    params: thermo.ThermalParams | None = None
    xy: str | None = None

    def __post_init__(self):
        if self.kind == "thermo":
            if self.params is None:
                raise ConfigError("thermo source needs thermal params")
        elif self.kind == "zero_temp":
            if self.xy not in ("00", "11", "01", "10"):
                raise ConfigError(f"zero_temp source needs xy in 00/11/01/10, got {self.xy!r}")
        else:
            raise ConfigError(f"unknown source kind {self.kind!r}")


@dataclass(frozen=True)
class ChannelSpec:
    """The entangled BC pair: Bob's leg is always a thermofield state.

    For ``kind = "thermo"`` the C leg is a thermofield state at ``alice``
    (defaulting to the source temperature; set it explicitly for channels
    whose legs sit in different baths).  For ``kind = "zero_temp"`` the C leg
    is the doubled Fock pair |j, j~>.
    """

    kind: str
    bob: thermo.ThermalParams
    alice: thermo.ThermalParams | None = None

    def __post_init__(self):
        if self.kind not in ("thermo", "zero_temp"):
            raise ConfigError(f"unknown channel kind {self.kind!r}")


@dataclass(frozen=True)
class BellBasisElement:
    family: str
    sign: int
    ket: object
    normalization: float = 1.0 / SQRT2


@dataclass(frozen=True)
class TeleportOutcome:
    """Record of one protocol branch."""

    branch: tuple[str, int]
    probability: float
    classical_message: tuple[str, int]
    bob_state: object
    fidelity: float
    engine: str
    diagnostics: dict = field(default_factory=dict)


def _xy_tilde(xy: str) -> Callable[[int], int]:
    return {
        "00": lambda j: 0,
        "11": lambda j: 1,
        "01": lambda j: (j + 1) % 2,
        "10": lambda j: j % 2,
    }[xy]


# --------------------------------------------------------------------------
# abstract engine


class AbstractEngine:
    """Exact label-algebra realization of the protocol."""

    name = "abstract"

    def __init__(self, source: SourceSpec, channel: ChannelSpec, cutoff: int | None = None):
        _validate_combo(source, channel)
        self.source = source
        self.channel = channel
        self.bob_tag = channel.bob.tag()
        if source.kind == "thermo":
            self.families = (PSI, PHI)
            self.src_tag = source.params.tag()
            c_params = channel.alice if channel.alice is not None else source.params
            self.c_tag = c_params.tag()
            self._alice_label = lambda j: thermo_label(j, self.src_tag)
            self._c_label = lambda j: thermo_label(j, self.c_tag)
        else:
            self.families = (B1, B2)
            tilde = _xy_tilde(source.xy)
            self._alice_label = lambda j: pair_label(j, tilde(j))
            self._c_label = lambda j: pair_label(j, j)

    def source_state(self, a0: complex, a1: complex) -> AbstractKet:
        amps = (a0, a1)
        terms = [amps[j] * AbstractKet.product({"A": self._alice_label(j)}) for j in range(2)]
        return terms[0] + terms[1]

    def channel_state(self) -> AbstractKet:
        out = AbstractKet()
        for j in range(2):
            term = AbstractKet.product(
                {"B": thermo_label(j, self.bob_tag), "C": self._c_label(j + 1)}, (-1.0) ** j
            )
            out = out + term
        return (1.0 / SQRT2) * out

    def bell(self, family: str, sign: int) -> BellBasisElement:
        shift = 1 if family in _SHIFT_FAMILIES else 0
        out = AbstractKet()
        for j in range(2):
            out = out + AbstractKet.product(
                {"A": self._alice_label(j), "C": self._c_label(j + 1 - shift)}, float(sign) ** j
            )
        return BellBasisElement(family=family, sign=sign, ket=(1.0 / SQRT2) * out)

    def full_state(self, a0: complex, a1: complex) -> AbstractKet:
        return self.source_state(a0, a1).tensor(self.channel_state())

    def measure(self, state: AbstractKet, bell: BellBasisElement) -> tuple[AbstractKet, float]:
        residual = state.project(bell.ket)
        return residual, residual.norm() ** 2

    def correct(self, bob_ket: AbstractKet, family: str, sign: int) -> AbstractKet:
        op = _correction_label_map(family, sign)
        return bob_ket.map_party("B", op).normalized()

    def target(self, a0: complex, a1: complex) -> AbstractKet:
        out = a0 * AbstractKet.product({"B": thermo_label(0, self.bob_tag)}) + a1 * AbstractKet.product(
            {"B": thermo_label(1, self.bob_tag)}
        )
        return out.normalized()

    def fidelity(self, x: AbstractKet, y: AbstractKet) -> float:
        return abs(x.inner(y)) ** 2

    def diagnostics(self, bob_state: AbstractKet, a0: complex, a1: complex) -> dict:
        return {}


def _correction_label_map(family: str, sign: int):
    """(be3)/(be4)-style correction as a label operator on Bob's party."""
    if family in _SHIFT_FAMILIES:

        def op(label: PartyLabel):
            kind, j, tag = label
            return (kind, (j + 1) % 2, tag), ((-1.0) ** j) * (float(sign) ** (j + 1))

    else:

        def op(label: PartyLabel):
            kind, j, tag = label
            return label, ((-1.0) ** j) * (float(sign) ** j)

    return op


# --------------------------------------------------------------------------
# numeric engine


class NumericEngine:
    """Truncated-Fock realization; one doubled mode per party, order (A, B, C)."""

    name = "numeric"

    def __init__(self, source: SourceSpec, channel: ChannelSpec, cutoff: int = 8):
        _validate_combo(source, channel)
        self.source = source
        self.channel = channel
        self.cutoff = cutoff
        self.dim = (cutoff + 1) ** 2
        self.bob_basis = _thermo_basis(channel.bob, cutoff)
        if source.kind == "thermo":
            self.families = (PSI, PHI)
            self.alice_basis = _thermo_basis(source.params, cutoff)
            c_params = channel.alice if channel.alice is not None else source.params
            self.c_basis = _thermo_basis(c_params, cutoff)
        else:
            self.families = (B1, B2)
            tilde = _xy_tilde(source.xy)
            self.alice_basis = [hilbert.doubled_basis_ket(j, tilde(j), cutoff) for j in range(2)]
            self.c_basis = [hilbert.doubled_basis_ket(j, j, cutoff) for j in range(2)]

    def source_state(self, a0: complex, a1: complex) -> np.ndarray:
        return a0 * self.alice_basis[0] + a1 * self.alice_basis[1]

    def channel_state(self) -> np.ndarray:
        return (np.kron(self.bob_basis[0], self.c_basis[1]) - np.kron(self.bob_basis[1], self.c_basis[0])) / SQRT2

    def bell(self, family: str, sign: int) -> BellBasisElement:
        shift = 1 if family in _SHIFT_FAMILIES else 0
        vec = sum(
            (float(sign) ** j) * np.kron(self.alice_basis[j], self.c_basis[(j + 1 - shift) % 2])
            for j in range(2)
        )
        return BellBasisElement(family=family, sign=sign, ket=vec / SQRT2)

    def full_state(self, a0: complex, a1: complex) -> np.ndarray:
        return np.kron(self.source_state(a0, a1), self.channel_state())

    def measure(self, state: np.ndarray, bell: BellBasisElement) -> tuple[np.ndarray, float]:
        d = self.dim
        psi = state.reshape(d, d, d)
        bra = bell.ket.conj().reshape(d, d)
        bob = np.einsum("ac,abc->b", bra, psi)
        return bob, float(np.vdot(bob, bob).real)

    def correct(self, bob_ket: np.ndarray, family: str, sign: int) -> np.ndarray:
        e0, e1 = self.bob_basis
        if family in _SHIFT_FAMILIES:
            op = float(sign) * np.outer(e1, e0.conj()) - (float(sign) ** 2) * np.outer(e0, e1.conj())
        else:
            op = np.outer(e0, e0.conj()) - float(sign) * np.outer(e1, e1.conj())
        corrected = op @ bob_ket
        nrm = np.linalg.norm(corrected)
        if nrm == 0.0:
            raise ContractError("correction annihilated the state")
        return corrected / nrm

    def target(self, a0: complex, a1: complex) -> np.ndarray:
        vec = a0 * self.bob_basis[0] + a1 * self.bob_basis[1]
        return vec / np.linalg.norm(vec)

    def fidelity(self, x: np.ndarray, y: np.ndarray) -> float:
        return float(abs(np.vdot(x, y)) ** 2)

    def diagnostics(self, bob_state: np.ndarray, a0: complex, a1: complex) -> dict:
        """Concrete-representation overlap diagnostics for mixed-temperature runs."""
        if self.source.kind != "thermo":
            return {}
        src = self.source.params
        bob = self.channel.bob
        if src.tag() == bob.tag():
            return {}
        src_basis = _thermo_basis(src, self.cutoff)
        target_src = a0 * src_basis[0] + a1 * src_basis[1]
        target_src = target_src / np.linalg.norm(target_src)
        return {
            "fidelity_vs_source_temperature": float(abs(np.vdot(target_src, bob_state)) ** 2),
            "vacuum_overlap": float(thermo.vacuum_overlap(src, bob, self.cutoff).real),
        }


def _thermo_basis(params: thermo.ThermalParams, cutoff: int) -> list[np.ndarray]:
    return [thermo.thermal_vacuum(params, cutoff), thermo.excited_thermofield(params, cutoff)]


def _validate_combo(source: SourceSpec, channel: ChannelSpec) -> None:
    if source.kind != channel.kind:
        raise ConfigError(
            f"source kind {source.kind!r} requires a matching channel, got {channel.kind!r}"
        )
    if source.kind == "zero_temp" and channel.alice is not None:
        raise ConfigError("zero_temp channels carry no thermal C leg")


def make_engine(source: SourceSpec, channel: ChannelSpec, engine: str = "abstract", cutoff: int = 8):
    if engine == "abstract":
        return AbstractEngine(source, channel)
    if engine == "numeric":
        return NumericEngine(source, channel, cutoff)
    raise ConfigError(f"unknown engine {engine!r}")


# --------------------------------------------------------------------------
# protocol driver and spec-level wrappers


def run_teleport(
    a0: complex,
    a1: complex,
    source: SourceSpec,
    channel: ChannelSpec,
    engine: str = "abstract",
    cutoff: int = 8,
    branch: str | tuple[str, int] = "all",
) -> list[TeleportOutcome]:
    """Run the teleportation protocol and return one outcome per branch.

    ``branch`` is either "all" (all four Bell branches) or a single
    (family, sign) pair.  Every outcome carries Bob's corrected state and its
    fidelity against the target qubit at Bob's temperature tag.
    """
    if abs(abs(a0) ** 2 + abs(a1) ** 2 - 1.0) > 1e-9:
        raise ContractError(f"|a0|^2 + |a1|^2 = {abs(a0) ** 2 + abs(a1) ** 2} is not 1")
    eng = make_engine(source, channel, engine, cutoff)
    state = eng.full_state(a0, a1)
    target = eng.target(a0, a1)
    branches = _branches(eng, branch)

    outcomes = []
    for family, sign in branches:
        bob_raw, prob = eng.measure(state, eng.bell(family, sign))
        if prob < 1e-15:
            outcomes.append(
                TeleportOutcome(
                    branch=(family, sign),
                    probability=0.0,
                    classical_message=(family, sign),
                    bob_state=None,
                    fidelity=0.0,
                    engine=eng.name,
                )
            )
            continue
        bob = eng.correct(bob_raw, family, sign)
        outcomes.append(
            TeleportOutcome(
                branch=(family, sign),
                probability=prob,
                classical_message=(family, sign),
                bob_state=bob,
                fidelity=eng.fidelity(target, bob),
                engine=eng.name,
                diagnostics=eng.diagnostics(bob, a0, a1),
            )
        )
    return outcomes


def _branches(eng, branch) -> Iterable[tuple[str, int]]:
    all_branches = [(fam, s) for fam in eng.families for s in (+1, -1)]
    if branch == "all":
        return all_branches
    if isinstance(branch, tuple) and tuple(branch) in all_branches:
        return [tuple(branch)]
    raise ConfigError(f"branch must be 'all' or one of {all_branches}, got {branch!r}")


def build_channel(channel: ChannelSpec, source: SourceSpec, engine: str = "abstract", cutoff: int = 8):
    """The entangled BC ket of the requested channel, in either engine."""
    return make_engine(source, channel, engine, cutoff).channel_state()


def bell_basis(
    family: str,
    sign: int,
    source: SourceSpec,
    channel: ChannelSpec,
    engine: str = "abstract",
    cutoff: int = 8,
) -> BellBasisElement:
    """One normalized Bell element of the family/sign on the AC parties."""
    eng = make_engine(source, channel, engine, cutoff)
    if family not in eng.families:
        raise ConfigError(f"family {family!r} not available for this channel (have {eng.families})")
    if sign not in (+1, -1):
        raise ConfigError(f"sign must be +1 or -1, got {sign}")
    return eng.bell(family, sign)


def alice_measure(state_abc, bell: BellBasisElement) -> tuple[object, float]:
    """Project the ABC state onto a Bell element of the AC parties.

    Returns the unnormalized residual ket on B and the branch probability.
    Engine is inferred from the operand types.
    """
    ket = bell.ket if isinstance(bell, BellBasisElement) else bell
    if isinstance(state_abc, AbstractKet):
        residual = state_abc.project(ket)
        return residual, residual.norm() ** 2
    state = np.asarray(state_abc)
    d = round(ket.size ** 0.5)
    if d * d != ket.size or d**3 != state.size:
        raise ShapeError(f"sizes {state.size} / {ket.size} are not a (D^3, D^2) pair")
    bob = np.einsum("ac,abc->b", np.asarray(ket).conj().reshape(d, d), state.reshape(d, d, d))
    return bob, float(np.vdot(bob, bob).real)


def bob_correct(bob_ket, message: tuple[str, int], basis: tuple[np.ndarray, np.ndarray] | None = None):
    """Apply Bob's correction for the classical message (family, sign).

    Abstract kets need no extra context; numeric kets need Bob's two basis
    vectors.  Mismatched messages are applied as requested; the resulting
    fidelity deficit is the caller's to report.
    """
    family, sign = message
    if isinstance(bob_ket, AbstractKet):
        return bob_ket.map_party("B", _correction_label_map(family, sign)).normalized()
    if basis is None:
        raise ConfigError("numeric correction needs Bob's basis vectors")
    e0, e1 = basis
    if family in _SHIFT_FAMILIES:
        op = float(sign) * np.outer(e1, e0.conj()) - (float(sign) ** 2) * np.outer(e0, e1.conj())
    else:
        op = np.outer(e0, e0.conj()) - float(sign) * np.outer(e1, e1.conj())
    corrected = op @ np.asarray(bob_ket)
    return corrected / np.linalg.norm(corrected)
