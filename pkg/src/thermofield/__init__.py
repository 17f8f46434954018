"""Thermofield-double qubits on truncated Fock spaces.

Numerical constructions and machine checks for thermal vacua, thermofield
qubits and their generalized expectations, gate actions, teleportation
protocols (exact label algebra and truncated-Fock realizations), Mandel-Q
photon statistics, spin-1/2 Gibbs states under Hadamard gates, and the
no-cloning / no-broadcasting constructions.
"""

from . import cli, diagnostics, gates, hilbert, nogo, spin_gibbs, teleport, thermo
from .diagnostics import MandelReport, coherent_state, mandel_q, von_neumann_entropy
from .errors import (
    ConfigError,
    ConsistencyError,
    ContractError,
    DimensionError,
    DomainError,
    InvalidDensityError,
    ShapeError,
    ThermofieldError,
    TruncationError,
    TruncationWarning,
    UndefinedMeanError,
)
from .gates import GateOp, conjugate_operator, gate_excited, gate_vacuum, random_gate, rho_psi_gated
from .hilbert import (
    FockOperators,
    expectation,
    fidelity,
    fock_operators,
    mode_expectation,
    partial_trace,
    tensor_product,
)
from .nogo import BroadcastReport, broadcast_check, clone_map, cloning_linearity_gap, doubling_map, temperature_map
from .spin_gibbs import SpinGibbs, hadamard_transform, verify_gibbs_reversibility
from .teleport import ChannelSpec, SourceSpec, TeleportOutcome, run_teleport
from .thermo import (
    TemperatureMixture,
    ThermalParams,
    ThermofieldQubit,
    bogoliubov_params,
    excited_thermofield,
    mixture_density,
    params_from_nbar,
    qubit_state,
    rho_psi,
    tail_mass,
    thermal_density,
    thermal_vacuum,
    vacuum_overlap,
    vacuum_overlap_analytic,
)

__version__ = "0.1.0"
