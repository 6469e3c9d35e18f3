"""Kronecker structure: products, sums, the perfect shuffle, and the
slice/block partial operations.

An mn x mn matrix M is viewed as an element of M_m(F) (x) M_n(F).  Two
decompositions are used throughout and deserve fixed names, because their
index conventions are easy to transpose by accident:

* a *slice* is the m x m matrix A_ij with (A_ij)_{kl} = M[(k-1)n+i, (l-1)n+j]
  for i, j in 1..n (the right-factor decomposition M = sum A_ij (x) E_ij);
* a *block* is the n x n matrix B_ij with (B_ij)_{kl} = M[(i-1)n+k, (j-1)n+l]
  for i, j in 1..m (the left-factor decomposition M = sum E_ij (x) B_ij).

``partial_det_slices``/``partial_trace_slices`` take determinants/traces of
slices and return an n x n matrix; the ``_blocks`` variants work on blocks
and return an m x m matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Field
from .matrix import Matrix, _check_same_field


@dataclass(frozen=True)
class FactorShape:
    """Declares how an mn x mn matrix factors: left m x m, right n x n."""

    m: int
    n: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError("factor dimensions must be positive")

    @property
    def dim(self) -> int:
        return self.m * self.n

    @classmethod
    def parse(cls, text: str) -> "FactorShape":
        m, _, n = text.partition("x")
        try:
            return cls(int(m), int(n))
        except ValueError:
            raise ValueError(f"bad shape {text!r}, expected like '2x3'") from None


def _as_shape(shape) -> FactorShape:
    if isinstance(shape, FactorShape):
        return shape
    m, n = shape
    return FactorShape(m, n)


def _check_shape(M: Matrix, shape: FactorShape):
    if not M.is_square or M.rows != shape.dim:
        raise ValueError(
            f"matrix is {M.rows}x{M.cols}, expected {shape.dim}x{shape.dim} for shape {shape.m}x{shape.n}"
        )


def kron(A: Matrix, B: Matrix) -> Matrix:
    """Kronecker product: block (i, j) of the result is A[i,j] * B."""
    _check_same_field(A, B)
    mul = A.field.mul
    br, bc = B.rows, B.cols
    out_cols = A.cols * bc
    data = [None] * (A.rows * br * out_cols)
    for i in range(A.rows):
        for j in range(A.cols):
            a = A._data[i * A.cols + j]
            base = i * br * out_cols + j * bc
            for k in range(br):
                row_off = base + k * out_cols
                for l in range(bc):
                    data[row_off + l] = mul(a, B._data[k * bc + l])
    return Matrix(A.field, A.rows * br, out_cols, data)


def kron_sum(B: Matrix, C: Matrix) -> Matrix:
    """Kronecker sum B (x) I_n + I_m (x) C of square factors."""
    _check_same_field(B, C)
    B._require_square("kron_sum")
    C._require_square("kron_sum")
    field = B.field
    return kron(B, Matrix.identity(field, C.rows)) + kron(Matrix.identity(field, B.rows), C)


def shuffle(shape, field: Field) -> Matrix:
    """The perfect-shuffle (vec-permutation) matrix P for the given shape.

    P maps e_i (x) e_j to e_j (x) e_i (left factor of size m, right of
    size n), so P (B (x) C) P^T = C (x) B for all m x m B and n x n C.
    """
    shape = _as_shape(shape)
    m, n = shape.m, shape.n
    dim = m * n
    z, o = field.zero(), field.one()
    data = [z] * (dim * dim)
    for i in range(m):
        for j in range(n):
            col = i * n + j
            row = j * m + i
            data[row * dim + col] = o
    return Matrix(field, dim, dim, data)


def slice_at(M: Matrix, shape, i: int, j: int) -> Matrix:
    """Right-indexed m x m slice A_ij, 1 <= i, j <= n."""
    shape = _as_shape(shape)
    _check_shape(M, shape)
    m, n = shape.m, shape.n
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"slice index ({i},{j}) out of range for n={n}")
    dim = shape.dim
    d = M._data
    data = [d[(k * n + i - 1) * dim + (l * n + j - 1)] for k in range(m) for l in range(m)]
    return Matrix(M.field, m, m, data)


def block_at(M: Matrix, shape, i: int, j: int) -> Matrix:
    """Left-indexed n x n block B_ij, 1 <= i, j <= m."""
    shape = _as_shape(shape)
    _check_shape(M, shape)
    m, n = shape.m, shape.n
    if not (1 <= i <= m and 1 <= j <= m):
        raise ValueError(f"block index ({i},{j}) out of range for m={m}")
    dim = shape.dim
    d = M._data
    base = (i - 1) * n * dim + (j - 1) * n
    data = [d[base + k * dim + l] for k in range(n) for l in range(n)]
    return Matrix(M.field, n, n, data)


def partial_det_slices(M: Matrix, shape) -> Matrix:
    """n x n matrix of slice determinants."""
    shape = _as_shape(shape)
    _check_shape(M, shape)
    n = shape.n
    data = [slice_at(M, shape, i, j).det() for i in range(1, n + 1) for j in range(1, n + 1)]
    return Matrix(M.field, n, n, data)


def partial_det_blocks(M: Matrix, shape) -> Matrix:
    """m x m matrix of block determinants."""
    shape = _as_shape(shape)
    _check_shape(M, shape)
    m = shape.m
    data = [block_at(M, shape, i, j).det() for i in range(1, m + 1) for j in range(1, m + 1)]
    return Matrix(M.field, m, m, data)


def partial_trace_slices(M: Matrix, shape) -> Matrix:
    """n x n matrix of slice traces; completes the trace."""
    shape = _as_shape(shape)
    _check_shape(M, shape)
    m, n = shape.m, shape.n
    dim = shape.dim
    d = M.field.sum
    data = [
        d(M._data[(k * n + i) * dim + (k * n + j)] for k in range(m))
        for i in range(n)
        for j in range(n)
    ]
    return Matrix(M.field, n, n, data)


def partial_trace_blocks(M: Matrix, shape) -> Matrix:
    """m x m matrix of block traces; completes the trace."""
    shape = _as_shape(shape)
    _check_shape(M, shape)
    m, n = shape.m, shape.n
    dim = shape.dim
    d = M.field.sum
    data = [
        d(M._data[(i * n + k) * dim + (j * n + k)] for k in range(n))
        for i in range(m)
        for j in range(m)
    ]
    return Matrix(M.field, m, m, data)


def partial_transpose_blocks(M: Matrix, shape) -> Matrix:
    """Replace every block by its transpose; an involution on M_{mn}(F)."""
    shape = _as_shape(shape)
    _check_shape(M, shape)
    m, n = shape.m, shape.n
    dim = shape.dim
    d = M._data
    data = [None] * (dim * dim)
    for i in range(m):
        for j in range(m):
            base = i * n * dim + j * n
            for k in range(n):
                for l in range(n):
                    data[base + k * dim + l] = d[base + l * dim + k]
    return Matrix(M.field, dim, dim, data)


def partial_map_blocks(M: Matrix, shape, op) -> Matrix:
    """Generic block-wise partial operation.

    ``op`` maps each n x n block to an r x r matrix (or a scalar, read as
    1 x 1); the result is the m*r x m*r matrix assembled block-wise, the
    partial version of ``op`` in the completability sense.
    """
    shape = _as_shape(shape)
    _check_shape(M, shape)
    m = shape.m
    results = {}
    r = None
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            g = op(block_at(M, shape, i, j))
            if not isinstance(g, Matrix):
                g = Matrix(M.field, 1, 1, [M.field.coerce(g)])
            if r is None:
                r = g.rows
            if not g.is_square or g.rows != r:
                raise ValueError("block operation must return uniform square results")
            results[(i, j)] = g
    dim = m * r
    data = [None] * (dim * dim)
    for (i, j), g in results.items():
        base = (i - 1) * r * dim + (j - 1) * r
        for k in range(r):
            for l in range(r):
                data[base + k * dim + l] = g._data[k * r + l]
    return Matrix(M.field, dim, dim, data)


def is_blockwise_symmetric(M: Matrix, shape) -> bool:
    """True when every block equals its own transpose."""
    shape = _as_shape(shape)
    _check_shape(M, shape)
    return all(
        block_at(M, shape, i, j).is_symmetric()
        for i in range(1, shape.m + 1)
        for j in range(1, shape.m + 1)
    )


def phi(C: Matrix, D: Matrix) -> Matrix:
    """The n^2 x n^2 product-encoding matrix built from columns of C and rows of D.

    Block (i, j) is the outer product (column j of C) (row i of D), i.e.
    entry [(i-1)n+k, (j-1)n+l] = C[k,j] * D[i,l].  With this indexing the
    slice-trace of the result is CD and the block-trace is DC, and the
    m-th Hadamard power commutes with the construction.
    """
    _check_same_field(C, D)
    C._require_square("phi")
    if C.rows != D.rows or not D.is_square:
        raise ValueError("phi expects two square matrices of equal dimension")
    n = C.rows
    dim = n * n
    mul = C.field.mul
    c, d = C._data, D._data
    data = [None] * (dim * dim)
    for i in range(n):
        for j in range(n):
            base = i * n * dim + j * n
            for k in range(n):
                row_off = base + k * dim
                ckj = c[k * n + j]
                for l in range(n):
                    data[row_off + l] = mul(ckj, d[i * n + l])
    return Matrix(C.field, dim, dim, data)
