"""Exact symbolic calculator for finite and infinite natural numbers."""

from .arith import (
    CoFiniteSupport,
    DigitForm,
    FiniteSupport,
    add,
    div,
    from_digits,
    mul,
    pred,
    render_digits,
    sub,
    succ,
    to_digits,
)
from .bijections import (
    Bottom,
    PairIndex,
    StreamToken,
    Top,
    diff_interleave,
    gap_block_enumerate,
    pair_index,
    pair_unindex,
    token_name,
    union_interleave_fin,
    union_interleave_kk,
)
from .cardinal import (
    N_STREAM,
    card_add,
    card_div,
    card_mul,
    card_of_stream,
    card_sub,
)
from .errors import InfnatError
from .limits import (
    APEIRON,
    IDENTITY,
    LIMIT_K,
    NO_LIMIT,
    ONES_RUN,
    POW2,
    Affine,
    IndexDomain,
    LimitResult,
    LimitValue,
    SeqFamily,
    eval_limit,
    eval_xtr_limit,
    prefix_table,
)
from .model import (
    KAPPA,
    CardValue,
    Fin,
    FinCard,
    K,
    Lmk,
    MNumber,
    W,
    canonical_name,
    card_name,
    is_infinite,
    parse_name,
    parse_value,
)
from .order import (
    INFINITE_DIST,
    PROVABLY_NONE,
    Comparison,
    FiniteDist,
    LandmarkClass,
    NoWitnessUpTo,
    Witness,
    archimedean_witness,
    cardinal_compare,
    distance,
    structural_compare,
    z_project,
)

__version__ = "0.1.0"
