"""Exact diagonalization toolkit for a pair of spin-1 atoms in an optical lattice.

Deep in the Mott regime, second-order tunneling between two singly occupied
sites reduces to linear plus quadratic spin exchange in a magnetic field.
The resulting nine-level model is solved in closed form here: spectrum,
thermal state, partial-transpose negativity, heat capacity, and the location
of the ground-state level crossings that drive its phase structure.
"""

from .entanglement import (
    NegativityResult,
    PartialTransposeMatrix,
    PRODUCT_BASIS,
    classify_negativity,
    clebsch_gordan,
    clebsch_gordan_1x1,
    negativity,
    partial_transpose,
    partial_transpose_closed_form,
    partial_transpose_numeric,
    thermal_density_matrix,
)
from .errors import (
    DomainError,
    NoCrossingInRangeError,
    NonpositiveTemperatureError,
    ScatteringSingularityError,
)
from .linalg import central_diff, sym_eigenvalues, sym_eigh, sym_expm
from .operators import EXCHANGE, EXCHANGE_SQ, JZ, hamiltonian_matrix
from .params import (
    EffectiveCouplings,
    MicroscopicParams,
    ModelParams,
    map_couplings,
    to_model_params,
)
from .spectrum import (
    COUPLED_LABELS,
    CoupledLabel,
    Crossing,
    CrossingReport,
    Spectrum,
    eigenvalue,
    find_crossings,
    full_spectrum,
    ground_state_energy,
    ground_state_label,
    level_energies,
)
from .sweep import (
    OUTPUT_NAMES,
    SweepResult,
    SweepSpec,
    format_crossing_report,
    levels_table,
    report_crossings,
    run_sweep,
)
from .thermo import (
    ThermoPoint,
    heat_capacity,
    internal_energy,
    level_probabilities,
    mean_excitation_energy,
    partition_function,
    thermo_point,
)

__version__ = "0.1.0"

__all__ = [
    "COUPLED_LABELS",
    "CoupledLabel",
    "Crossing",
    "CrossingReport",
    "DomainError",
    "EXCHANGE",
    "EXCHANGE_SQ",
    "EffectiveCouplings",
    "JZ",
    "MicroscopicParams",
    "ModelParams",
    "NegativityResult",
    "NoCrossingInRangeError",
    "NonpositiveTemperatureError",
    "OUTPUT_NAMES",
    "PRODUCT_BASIS",
    "PartialTransposeMatrix",
    "ScatteringSingularityError",
    "Spectrum",
    "SweepResult",
    "SweepSpec",
    "ThermoPoint",
    "central_diff",
    "classify_negativity",
    "clebsch_gordan",
    "clebsch_gordan_1x1",
    "eigenvalue",
    "find_crossings",
    "format_crossing_report",
    "full_spectrum",
    "ground_state_energy",
    "ground_state_label",
    "hamiltonian_matrix",
    "heat_capacity",
    "internal_energy",
    "level_energies",
    "level_probabilities",
    "levels_table",
    "map_couplings",
    "mean_excitation_energy",
    "negativity",
    "partial_transpose",
    "partial_transpose_closed_form",
    "partial_transpose_numeric",
    "partition_function",
    "report_crossings",
    "run_sweep",
    "sym_eigenvalues",
    "sym_eigh",
    "sym_expm",
    "thermal_density_matrix",
    "thermo_point",
    "to_model_params",
]
