"""Cutting sequences of square-billiard trajectories and Sturmian words, computed exactly."""
from .bridge import RewriteTrace, cf_of_sequence, sequence_to_slope, slope_to_sequence
from .errors import (
    CutseqError,
    DomainError,
    IrrationalValueError,
    PreconditionError,
    RejectedError,
    VertexHitError,
)
from .exact import (
    ContinuedFraction,
    QuadraticSurd,
    Rational,
    cf_expand,
    cf_expand_periodic,
    cf_expand_surd,
    cf_surd_value,
    cf_value,
    parse_number,
    surd_cmp,
    surd_floor,
)
from .geometry import (
    billiard_path,
    crossing_events,
    line_crossings,
    sturmian_prefix,
    sturmian_stream,
    torus_cutting_sequence,
    torus_to_billiard,
    unfold,
)
from .render import RenderSpec, render_svg
from .transforms import FLIP, L, R, ShearMatrix, apply_matrix, decompose, flip, lengthen_A, lengthen_B, shear_shorten
from .words import (
    BiInfiniteWord,
    FiniteWord,
    PeriodicWord,
    complexity,
    complexity_plateau,
    is_balanced,
    is_valid_cutting_sequence,
    parse_word,
    recurrence_check,
    unbalance_witness,
)

__version__ = "0.1.0"
