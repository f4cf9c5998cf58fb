"""Local quantum uncertainty of two-qubit Heisenberg XY thermal states with
z-axis and x-axis Dzyaloshinskii-Moriya interaction."""

from .exceptions import (
    DmlquError,
    ExponentOverflowError,
    NotCentrosymmetricError,
    NotHermitianError,
    NotPSDError,
    RankDeficiencyError,
    ValidationError,
)
from .linalg import (
    HADAMARD,
    PAULIS,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    EigenDecomposition,
    hermitian_eigendecomposition,
    kron,
    matrix_exp_scaled,
    matrix_sqrt_psd,
)
from .lqu import (
    FanoBloch,
    LocalObservable,
    LquResult,
    OmegaTriple,
    ThermalLqu,
    fano_bloch,
    lqu_bruteforce,
    lqu_closed,
    lqu_w,
    model_params,
    omega_eigenvalues,
    skew_information,
    thermal_lqu,
    threshold_temperature,
    variance_observable,
    w_matrix,
)
from .models import (
    GroundStateReport,
    Spectrum,
    XModelParams,
    ZModelParams,
    ground_state,
    hamiltonian_x,
    hamiltonian_z,
    spectrum_x,
    spectrum_z,
)
from .thermal import (
    Partition,
    XState,
    double_hadamard,
    gibbs_state_numeric,
    hadamard_x_form,
    partition_x,
    partition_z,
    phase_normalize_x,
    thermal_state_x_closed,
    thermal_state_x_hadamard_closed,
    thermal_state_z_closed,
)

__version__ = "0.1.0"
