"""Exact partial determinants, partial traces and determinant-roots of
Kronecker products over pluggable fields, plus a verification harness."""

from .algebra import (
    ComplexField,
    Field,
    InvalidFieldError,
    NotEnumerableError,
    PrimeField,
    RationalField,
    field_from_name,
)
from .detroot import (
    ClassScaledMatrix,
    NotInDnError,
    OrderMismatchError,
    RootClass,
    class_nth_root,
    class_of,
    det_root,
    det_root_of_scaled,
    embed,
    mul_scaled,
    partial_det_root,
    partial_det_root_blocks,
    partial_det_root_kron,
    root_of,
    star,
)
from .kron import (
    FactorShape,
    block_at,
    is_blockwise_symmetric,
    kron,
    kron_sum,
    partial_det_blocks,
    partial_det_slices,
    partial_map_blocks,
    partial_trace_blocks,
    partial_trace_slices,
    partial_transpose_blocks,
    phi,
    shuffle,
    slice_at,
)
from .matrix import (
    Matrix,
    MatrixParseError,
    dump_matrix,
    format_matrix,
    load_matrix,
    parse_matrix,
    rank1,
)

__version__ = "0.1.0"
