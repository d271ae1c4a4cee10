"""Numerical radius of 2 x 2 block operator matrices.

Certified numerical radii, a catalogue of upper and lower bounds for
``w([[0, B], [C, 0]])`` and ``w([[A, B], [C, D]])``, and a seeded harness
that checks them over random matrix ensembles.
"""

from .blockops import (
    FullBlock,
    OffDiagBlock,
    check_block_diag_radius,
    check_block_norms,
    check_pinched_radius,
    make_full,
    make_offdiag,
    positive_offdiag_radius,
)
from .bounds import (
    ALPHA_GRID,
    BlockPieces,
    BoundKind,
    BoundReport,
    bound_bk21_upper_4,
    bound_cor1_upper_4,
    bound_prop33,
    bound_th1_upper,
    bound_th1eqn_upper,
    bound_th25_upper_4,
    bound_th2_upper_sq,
    bound_th3_chain,
    bound_th3_lower_sq,
    bound_th4_chain,
    bound_th4_lower_sq,
    bound_th5_lower,
    bound_th6_lower_sq,
    bound_th7_upper_4,
    check_equality_conditions,
    check_prop31,
    cor1_cap,
    kittaneh2002_bound,
)
from .ensembles import EnsembleSpec, Kind, generate, sample_operands
from .errors import (
    AlphaOutOfRange,
    BlockRadiusError,
    DimMismatch,
    MatrixFormatError,
    NoConvergence,
    NotHermitian,
    NotPSD,
    NumericalFailure,
    ToleranceUnreachable,
    UnknownCheck,
)
from .harness import CHECKS, default_suite, run_checks, run_suite, sharpness_probe, summarize
from .lemmas import run_lemma_suite
from .linalg import (
    adjoint,
    hermitian_eig,
    imag_part,
    load_matrix,
    matrix_abs,
    op_norm,
    psd_sqrt,
    real_part,
    spectral_radius_psd_product,
)
from .numradius import (
    RadiusCertificate,
    numerical_radius,
    numerical_radius_vector_oracle,
    spectral_radius_general,
)

__version__ = "0.1.0"
