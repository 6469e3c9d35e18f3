"""Determinant-root calculus on quotient classes of m-th roots.

A :class:`RootClass` of order m stands for the set of m-th roots of a
stored ``power``: the coset of the subgroup of m-th roots of unity
containing any representative, extended with a zero class.  Storing the
m-th power makes coset equality a plain scalar comparison and turns the
order-composition isomorphism into the identity on powers, so no coset
representative ever has to be chosen.

:class:`ClassScaledMatrix` is the single-term fragment of the group-ring
picture: one root class scaling an ordinary matrix entry-wise.  It is the
value of the slice-wise partial determinant-root on a Kronecker product.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Field
from .kron import _as_shape, shuffle, slice_at
from .matrix import Matrix


class OrderMismatchError(ValueError):
    """Same-order operation applied to classes of different orders."""


class NotInDnError(ValueError):
    """Determinant-root requested where the root does not exist."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


@dataclass(frozen=True, eq=False)
class RootClass:
    """The class of ``order``-th roots of ``power`` over ``field``.

    ``power = 0`` encodes the zero extension.  The class may be *empty*
    when no root exists in the field; emptiness is queryable and rejected
    only by the operations whose hypotheses need a non-empty class.
    """

    order: int
    power: object
    field: Field

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("class order must be >= 1")

    def is_zero(self) -> bool:
        return self.field.eq(self.power, self.field.zero())

    def is_empty(self) -> bool:
        """True when no field element has this class as its root set."""
        if self.is_zero():
            return False
        return not self.field.mth_roots(self.power, self.order)

    def __eq__(self, other):
        if not isinstance(other, RootClass):
            return NotImplemented
        return (
            self.order == other.order
            and self.field == other.field
            and self.field.eq(self.power, other.power)
        )

    __hash__ = None

    def __mul__(self, other: "RootClass") -> "RootClass":
        if not isinstance(other, RootClass):
            return NotImplemented
        if self.order != other.order:
            raise OrderMismatchError(f"orders {self.order} and {other.order} differ")
        return RootClass(self.order, self.field.mul(self.power, other.power), self.field)

    def __repr__(self):
        return self.text()

    def text(self) -> str:
        return f"root[{self.order}]{{{self.field.format(self.power)}}}"


def class_of(field: Field, a, m: int) -> RootClass:
    """The order-m class containing the representative a; never empty."""
    return RootClass(m, field.pow(field.coerce(a), m), field)


def root_of(field: Field, b, m: int):
    """The class of m-th roots of b, or None when no root exists.

    Zero always has the zero class; otherwise existence is decided by the
    field's root finder (exhaustive over GF(p), exact integer-root
    extraction over the rationals, always non-empty over the complexes).
    """
    b = field.coerce(b)
    if field.eq(b, field.zero()):
        return RootClass(m, field.zero(), field)
    if field.mth_roots(b, m):
        return RootClass(m, b, field)
    return None


def embed(c: RootClass, n: int) -> RootClass:
    """Order-raising embedding into classes of order m*n: power goes to its
    n-th power, matching a representative kept fixed."""
    if n < 1:
        raise ValueError("embedding factor must be >= 1")
    return RootClass(c.order * n, c.field.pow(c.power, n), c.field)


def star(c1: RootClass, c2: RootClass) -> RootClass:
    """Cross-order product: orders m and n combine to order m*n with power
    p1^n * p2^m.  Makes the determinant-root multiplicative across
    Kronecker products."""
    if c1.field != c2.field:
        raise ValueError("field mismatch in star")
    return embed(c1, c2.order) * embed(c2, c1.order)


def class_nth_root(c: RootClass, n: int) -> RootClass:
    """Take the n-th root of a class: order m becomes m*n, power unchanged.
    This is the canonical image under the iterated-quotient isomorphism."""
    if n < 1:
        raise ValueError("root order must be >= 1")
    return RootClass(c.order * n, c.power, c.field)


def det_root(M: Matrix):
    """The n-th-root class of det(M) for square n x n M, or None when the
    root does not exist (M is outside the root-closed monoid)."""
    M._require_square("det_root")
    return root_of(M.field, M.det(), M.rows)


@dataclass(frozen=True, eq=False)
class ClassScaledMatrix:
    """A root class times a plain matrix, entry-wise.

    Entry (i, j) denotes the order-m class with canonical power
    scale.power * body[i,j]^m; equality is always canonical, never
    representation-wise.
    """

    scale: RootClass
    body: Matrix

    def entry_class(self, i: int, j: int) -> RootClass:
        field = self.body.field
        m = self.scale.order
        power = field.mul(self.scale.power, field.pow(self.body.entry(i, j), m))
        return RootClass(m, power, field)

    def __eq__(self, other):
        if not isinstance(other, ClassScaledMatrix):
            return NotImplemented
        if self.scale.order != other.scale.order:
            return False
        b1, b2 = self.body, other.body
        if b1.rows != b2.rows or b1.cols != b2.cols or b1.field != b2.field:
            return False
        return all(
            self.entry_class(i, j) == other.entry_class(i, j)
            for i in range(1, b1.rows + 1)
            for j in range(1, b1.cols + 1)
        )

    __hash__ = None

    def __matmul__(self, other: "ClassScaledMatrix") -> "ClassScaledMatrix":
        return mul_scaled(self, other)

    def __repr__(self):
        return f"ClassScaledMatrix({self.scale!r} * {self.body!r})"


def partial_det_root_kron(A: Matrix, B: Matrix) -> ClassScaledMatrix:
    """Slice-wise partial determinant-root of A (x) B, which collapses to
    det_root(A) scaling B entry-wise."""
    scale = det_root(A)
    if scale is None:
        raise NotInDnError(
            f"det {A.field.format(A.det())} has no {A.rows}-th root in {A.field.name}"
        )
    return ClassScaledMatrix(scale, B)


def det_root_of_scaled(S: ClassScaledMatrix) -> RootClass:
    """Determinant-root of a class-scaled n x n matrix: the order-(m*n)
    class with power scale^n * det(body)^m."""
    S.body._require_square("det_root_of_scaled")
    field = S.body.field
    m, n = S.scale.order, S.body.rows
    power = field.mul(field.pow(S.scale.power, n), field.pow(S.body.det(), m))
    return RootClass(m * n, power, field)


def mul_scaled(S1: ClassScaledMatrix, S2: ClassScaledMatrix) -> ClassScaledMatrix:
    """Product of class-scaled matrices: scales multiply (same order),
    bodies multiply as matrices."""
    return ClassScaledMatrix(S1.scale * S2.scale, S1.body @ S2.body)


def partial_det_root(M: Matrix, shape) -> list:
    """Slice-wise partial determinant-root of an arbitrary mn x mn matrix:
    an n x n grid of order-m root classes.

    Raises :class:`NotInDnError` naming the first offending slice when any
    slice determinant has no m-th root; no partial grid is returned.
    """
    shape = _as_shape(shape)
    grid = []
    for i in range(1, shape.n + 1):
        row = []
        for j in range(1, shape.n + 1):
            c = root_of(M.field, slice_at(M, shape, i, j).det(), shape.m)
            if c is None:
                raise NotInDnError(
                    f"slice ({i},{j}) determinant has no {shape.m}-th root", index=(i, j)
                )
            row.append(c)
        grid.append(row)
    return grid


def partial_det_root_blocks(M: Matrix, shape) -> list:
    """Block-wise partial determinant-root via the shuffle identity: apply
    the slice-wise version to the shuffled matrix under the swapped shape."""
    shape = _as_shape(shape)
    P = shuffle(shape, M.field)
    return partial_det_root(P @ M @ P.transpose(), (shape.n, shape.m))
