"""Matrix exponential over the complex backend and the laws tying the
exponential, trace and determinant together on Kronecker sums.

The exponential uses a fixed degree-13 Pade approximant with binary
scaling down to a 1-norm of at most 0.5; no norm-adaptive degree
selection, so identical inputs give bit-identical results.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field as dataclass_field

from .algebra import ComplexField
from .detroot import ClassScaledMatrix, RootClass, class_of, det_root, partial_det_root_kron
from .kron import kron, kron_sum, partial_det_slices, partial_trace_slices, slice_at, _as_shape
from .matrix import Matrix


class UndefinedNormalizationError(ZeroDivisionError):
    """Normalized trace requested where the characteristic divides the size."""


@dataclass
class ExpReport:
    """Outcome of a floating-point law check.

    ``holds`` is true exactly when ``max_abs_deviation <= tolerance``; the
    deviation is relative (each entry is scaled by max(1, |lhs|, |rhs|)).
    For iff laws ``condition_holds`` carries the side condition and the
    report passes when the two booleans agree.
    """

    law_id: str
    holds: bool
    max_abs_deviation: float
    tolerance: float
    condition_holds: bool | None = None
    extra_ok: bool = True
    lhs: object = None
    rhs: object = None
    inputs: dict = dataclass_field(default_factory=dict)
    params: dict = dataclass_field(default_factory=dict)
    seed: int | None = None
    detail: str = ""

    @property
    def ok(self) -> bool:
        base = self.holds if self.condition_holds is None else (self.holds == self.condition_holds)
        return base and self.extra_ok


_PADE13 = (
    64764752532480000.0,
    32382376266240000.0,
    7771770303897600.0,
    1187353796428800.0,
    129060195264000.0,
    10559470521600.0,
    670442572800.0,
    33522128640.0,
    1323241920.0,
    40840800.0,
    960960.0,
    16380.0,
    182.0,
    1.0,
)


def _one_norm(A: Matrix) -> float:
    return max(sum(abs(v) for v in A.col_values(j)) for j in range(1, A.cols + 1))


def _solve(A: Matrix, B: Matrix) -> Matrix:
    """Solve A X = B by partial-pivot Gaussian elimination (complex)."""
    n = A.rows
    w = B.cols
    aug = [list(A._data[i * n : (i + 1) * n]) + list(B._data[i * w : (i + 1) * w])
           for i in range(n)]
    for k in range(n):
        pivot_row = max(range(k, n), key=lambda r: abs(aug[r][k]))
        if aug[pivot_row][k] == 0:
            raise ZeroDivisionError("singular system in matrix exponential")
        if pivot_row != k:
            aug[k], aug[pivot_row] = aug[pivot_row], aug[k]
        pivot = aug[k][k]
        for i in range(n):
            if i == k:
                continue
            f = aug[i][k] / pivot
            if f != 0:
                for j in range(k, n + w):
                    aug[i][j] -= f * aug[k][j]
    data = []
    for i in range(n):
        pivot = aug[i][i]
        data.extend(v / pivot for v in aug[i][n:])
    return Matrix(A.field, n, w, data)


def matrix_exp(A: Matrix) -> Matrix:
    """Scaling-and-squaring exponential with the degree-13 Pade approximant."""
    A._require_square("matrix_exp")
    if not isinstance(A.field, ComplexField):
        raise TypeError("matrix_exp requires the complex backend")
    field = A.field
    n = A.rows
    norm = _one_norm(A)
    s = 0
    if norm > 0.5:
        s = max(0, math.ceil(math.log2(norm / 0.5)))
    As = A.scale(2.0**-s) if s else A
    b = _PADE13
    eye = Matrix.identity(field, n)
    A2 = As @ As
    A4 = A2 @ A2
    A6 = A4 @ A2
    U = As @ (
        A6 @ (A6.scale(b[13]) + A4.scale(b[11]) + A2.scale(b[9]))
        + A6.scale(b[7])
        + A4.scale(b[5])
        + A2.scale(b[3])
        + eye.scale(b[1])
    )
    V = (
        A6 @ (A6.scale(b[12]) + A4.scale(b[10]) + A2.scale(b[8]))
        + A6.scale(b[6])
        + A4.scale(b[4])
        + A2.scale(b[2])
        + eye.scale(b[0])
    )
    R = _solve(V - U, V + U)
    for _ in range(s):
        R = R @ R
    return R


def normalized_trace(A: Matrix):
    """Trace divided by the dimension; undefined when the characteristic
    divides the dimension."""
    A._require_square("normalized_trace")
    field = A.field
    n = A.rows
    p = field.characteristic()
    if p and n % p == 0:
        raise UndefinedNormalizationError(f"dimension {n} vanishes in {field.name}")
    return field.div(A.trace(), field.coerce(n))


def partial_normalized_trace_slices(M: Matrix, shape) -> Matrix:
    """Slice-wise normalized trace: each m x m slice contributes tr/m."""
    shape = _as_shape(shape)
    field = M.field
    p = field.characteristic()
    if p and shape.m % p == 0:
        raise UndefinedNormalizationError(f"slice dimension {shape.m} vanishes in {field.name}")
    inv_m = field.div(field.one(), field.coerce(shape.m))
    n = shape.n
    data = [
        field.mul(inv_m, slice_at(M, shape, i, j).trace())
        for i in range(1, n + 1)
        for j in range(1, n + 1)
    ]
    return Matrix(field, n, n, data)


def _max_rel_dev(L: Matrix, R: Matrix) -> float:
    return max(
        abs(a - b) / max(1.0, abs(a), abs(b)) for a, b in zip(L._data, R._data)
    )


def check_exp_det_trace(A: Matrix, tol: float = 1e-9) -> ExpReport:
    """det(exp(A)) = exp(tr(A)), the scalar exponential-trace law."""
    lhs = matrix_exp(A).det()
    rhs = cmath.exp(A.trace())
    dev = abs(lhs - rhs) / max(1.0, abs(lhs), abs(rhs))
    return ExpReport("exp-det-trace", dev <= tol, dev, tol, lhs=lhs, rhs=rhs,
                     inputs={"A": A})


def check_exp_kron_sum_factorization(B: Matrix, C: Matrix, tol: float = 1e-9) -> ExpReport:
    """exp of a Kronecker sum factors as exp(B) (x) exp(C); the summands
    commute, which is all the factorization needs."""
    lhs = matrix_exp(kron_sum(B, C))
    rhs = kron(matrix_exp(B), matrix_exp(C))
    dev = _max_rel_dev(lhs, rhs)
    return ExpReport("exp-kron-sum-factor", dev <= tol, dev, tol, lhs=lhs, rhs=rhs,
                     inputs={"B": B, "C": C})


def check_exp_kron_sum_law(B: Matrix, C: Matrix, tol: float = 1e-9) -> ExpReport:
    """On a Kronecker sum, the slice-wise partial determinant of the
    exponential equals the exponential of the slice-wise partial trace iff
    the left-size Hadamard power of exp(C) equals its matrix power."""
    m, n = B.rows, C.rows
    A = kron_sum(B, C)
    lhs = partial_det_slices(matrix_exp(A), (m, n))
    rhs = matrix_exp(partial_trace_slices(A, (m, n)))
    dev = _max_rel_dev(lhs, rhs)
    expC = matrix_exp(C)
    cond_dev = _max_rel_dev(expC.hadamard_power(m), expC.mat_power(m)) if m > 1 else 0.0
    return ExpReport("exp-kron-sum", dev <= tol, dev, tol,
                     condition_holds=cond_dev <= tol,
                     lhs=lhs, rhs=rhs, inputs={"B": B, "C": C},
                     detail=f"dev={dev!r} cond_dev={cond_dev!r}")


def check_exp_det_root_law(B: Matrix, C: Matrix, tol: float = 1e-8) -> ExpReport:
    """Partial determinant-root of exp on a Kronecker sum: the class-scaled
    matrix det_root(exp B) * exp(C) equals the class of exp of the
    normalized trace of B scaling exp(C).

    Also rechecks the scalar form on the full Kronecker sum: the
    determinant-root of exp(A) is the class of exp of the normalized trace
    of A.  Real inputs expected (zero imaginary parts)."""
    field = B.field
    m, n = B.rows, C.rows
    expB = matrix_exp(B)
    expC = matrix_exp(C)
    lhs = partial_det_root_kron(expB, expC)
    rhs = ClassScaledMatrix(class_of(field, cmath.exp(normalized_trace(B)), m), expC)
    dev = 0.0
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            p1 = lhs.entry_class(i, j).power
            p2 = rhs.entry_class(i, j).power
            dev = max(dev, abs(p1 - p2) / max(1.0, abs(p1), abs(p2)))

    A = kron_sum(B, C)
    scalar_lhs = det_root(matrix_exp(A))
    scalar_rhs = class_of(field, cmath.exp(normalized_trace(A)), m * n)
    sdev = abs(scalar_lhs.power - scalar_rhs.power) / max(
        1.0, abs(scalar_lhs.power), abs(scalar_rhs.power)
    )
    return ExpReport("exp-detroot", dev <= tol, dev, tol,
                     extra_ok=sdev <= tol,
                     inputs={"B": B, "C": C},
                     detail=f"dev={dev!r} scalar_dev={sdev!r}")
