"""Exact Hilbert series and Lefschetz properties of Artinian monomial algebras."""

from .analysis import (
    ReflectingDegree,
    TwoVarProfile,
    coincides,
    is_almost_centered,
    is_almost_centered_noncrossing,
    is_symmetric,
    is_unimodal,
    reflecting_degree,
    symmetric_product_check,
    two_var_profile,
)
from .classify import (
    ClassificationVerdict,
    CsmDecomposition,
    CsmPiece,
    HypothesisViolation,
    all_maci_grid,
    classify_maci,
    classify_support_two,
    cross_verify,
    csm_decomposition,
    grid_from_json,
    is_symmetric_maci,
    slp_symmetric,
    support_two_grid,
    symmetric_grid,
    symmetric_witness,
)
from .core import (
    IdealSyntaxError,
    Monomial,
    MonomialIdeal,
    colon_by_monomial,
    minimalize,
    parse_ideal,
    pure_power,
    render_ideal,
    render_monomial,
    standard_monomial_table,
    standard_monomials,
)
from .oracle import (
    LefschetzReport,
    MapRecord,
    lefschetz_report,
    matrix_rank,
    multiplication_matrix,
    tensor_map_full_rank,
)
from .series import (
    HilbertSeries,
    MaciSpec,
    ci_series,
    hilbert_series,
    hilbert_series_by_counting,
    maci_from_ideal,
)

__version__ = "0.1.0"
