"""Transfer-matrix and closed-form simulation of n-coupled Mach-Zehnder chains."""

from .algebra import (
    FieldPair,
    IntensityPair,
    TransferMatrix2,
    apply,
    compose,
    equal_up_to_global_phase,
    intensities,
    is_unitary,
    output_intensities,
)
from .closed_form import (
    PsiCase,
    UnsupportedFormulaError,
    closed_form_intensities,
    double_mzi_intensities,
    intensity_product,
    n_chain_intensities,
    n_chain_matrix_closed_form,
    phase_from_path_difference,
    psi_case,
    r_product,
    single_mzi_intensities,
)
from .elements import Arm, ChainSpec, beam_splitter, chain, coupled_chain, mzi, phase_shifter
from .fringes import FringeReport, fringe_report
from .oracle import OracleReport, OracleVerificationError, verify_oracle
from .sweeps import Engine, SweepConfig, SweepRow, sweep, sweep_2d

__version__ = "0.1.0"
