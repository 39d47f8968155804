"""Local-dimension-invariant qudit stabilizer codes."""

from .bounds import (
    CssCutoff,
    PromiseBounds,
    b_bound,
    gqhb_holds,
    next_safe_prime,
    p_star_css,
    p_star_general,
    promise_bounds,
)
from .distance import (
    Artifact,
    Detectable,
    DistanceResult,
    InGroup,
    MinorScanReport,
    Unavoidable,
    classify_error,
    css_distance,
    css_min,
    distance_exact,
    minor_scan,
)
from .hamming import certify_family_member, hamming_css, hamming_ldi, parity_check
from .ldi import LdiCode, LdiReport, ldi_prescriptive, ldi_sign_search, reduce_mod, verify_ldi
from .phi import (
    INTEGERS,
    PauliWord,
    PhiVector,
    Ring,
    compose,
    pauli_weight,
    phi_map,
    realize_dense,
    symplectic_product,
)
from .stabilizer import (
    CssStructure,
    Dft,
    RegisterSwap,
    RowAdd,
    RowScale,
    RowSwap,
    StabilizerCode,
    apply_move,
    canonical_form,
    is_css,
    new_code,
    syndrome,
    to_css,
)

__version__ = "0.1.0"
