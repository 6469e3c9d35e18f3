"""Seeded random instance generation for the verification suites.

Rational entries are drawn from {-3..3}, prime-field entries uniformly
from the field, complex entries from the unit square.  Structured
generators (triangular, diagonal, permutation, (0,1), rank-1, disjoint
support) are first-class because the characterization laws quantify over
those classes.  Every generator is deterministic given its seed.
"""

from __future__ import annotations

import random

from .algebra import ComplexField, PrimeField, RationalField
from .matrix import Matrix, rank1


class InstanceGen:
    def __init__(self, field, seed):
        self.field = field
        self.rng = random.Random(seed)

    def scalar(self):
        f = self.field
        if isinstance(f, RationalField):
            return f.coerce(self.rng.randint(-3, 3))
        if isinstance(f, PrimeField):
            return self.rng.randrange(f.p)
        return complex(self.rng.uniform(-1, 1), self.rng.uniform(-1, 1))

    def nonzero_scalar(self):
        while True:
            v = self.scalar()
            if v != self.field.zero():
                return v

    def matrix(self, rows, cols=None) -> Matrix:
        cols = rows if cols is None else cols
        return Matrix(self.field, rows, cols, [self.scalar() for _ in range(rows * cols)])

    def vector(self, n) -> Matrix:
        return self.matrix(n, 1)

    def nonsingular(self, n) -> Matrix:
        while True:
            A = self.matrix(n)
            if A.det() != self.field.zero():
                return A

    def triangular(self, n, upper=None) -> Matrix:
        if upper is None:
            upper = self.rng.random() < 0.5
        z = self.field.zero()
        rows = []
        for i in range(n):
            if upper:
                rows.append([z] * i + [self.scalar() for _ in range(n - i)])
            else:
                rows.append([self.scalar() for _ in range(i + 1)] + [z] * (n - i - 1))
        return Matrix.from_rows(self.field, rows)

    def diagonal(self, n) -> Matrix:
        return Matrix.diagonal(self.field, [self.scalar() for _ in range(n)])

    def permutation(self, n) -> Matrix:
        perm = list(range(n))
        self.rng.shuffle(perm)
        z, o = self.field.zero(), self.field.one()
        return Matrix(self.field, n, n,
                      [o if j == perm[i] else z for i in range(n) for j in range(n)])

    def zero_one(self, n) -> Matrix:
        z, o = self.field.zero(), self.field.one()
        return Matrix(self.field, n, n,
                      [o if self.rng.random() < 0.5 else z for _ in range(n * n)])

    def rank_one(self, n) -> Matrix:
        return rank1(self.vector(n), self.vector(n))

    def single_row(self, n) -> Matrix:
        """At most one non-zero row."""
        r = self.rng.randrange(n)
        z = self.field.zero()
        return Matrix(self.field, n, n,
                      [self.scalar() if i == r else z for i in range(n) for _ in range(n)])

    def single_col(self, n) -> Matrix:
        """At most one non-zero column."""
        c = self.rng.randrange(n)
        z = self.field.zero()
        return Matrix(self.field, n, n,
                      [self.scalar() if j == c else z for _ in range(n) for j in range(n)])

    def disjoint_pair(self, n):
        """(B, D) with entry-wise product zero: each cell feeds at most one of them."""
        z = self.field.zero()
        b, d = [], []
        for _ in range(n * n):
            pick = self.rng.randrange(3)
            if pick == 0:
                b.append(self.scalar())
                d.append(z)
            elif pick == 1:
                b.append(z)
                d.append(self.scalar())
            else:
                b.append(z)
                d.append(z)
        return Matrix(self.field, n, n, b), Matrix(self.field, n, n, d)

    def root_scalable(self, n, order) -> Matrix:
        """Random n x n matrix whose determinant has an ``order``-th root.

        Rejection sampling; singular matrices qualify (zero has every root).
        """
        while True:
            A = self.matrix(n)
            d = A.det()
            if d == self.field.zero() or self.field.mth_roots(d, order):
                return A

    # ---- complex-only helpers -------------------------------------------

    def complex_matrix(self, n, norm_cap=None) -> Matrix:
        A = self.matrix(n)
        if norm_cap is not None:
            norm = max(
                sum(abs(v) for v in A.col_values(j)) for j in range(1, n + 1)
            )
            if norm > norm_cap:
                A = A.scale(norm_cap / norm)
        return A

    def real_matrix(self, n, norm_cap=None) -> Matrix:
        """Complex-backend matrix with zero imaginary parts."""
        A = Matrix(self.field, n, n,
                   [complex(self.rng.uniform(-1, 1), 0.0) for _ in range(n * n)])
        if norm_cap is not None:
            norm = max(sum(abs(v) for v in A.col_values(j)) for j in range(1, n + 1))
            if norm > norm_cap:
                A = A.scale(norm_cap / norm)
        return A

    def hermitian_pd(self, n, eps=1e-6) -> Matrix:
        """G G^H + eps I: Hermitian positive definite by construction."""
        if not isinstance(self.field, ComplexField):
            raise ValueError("hermitian_pd needs the complex backend")
        G = self.matrix(n)
        GH = Matrix(self.field, n, n,
                    [G._data[j * n + i].conjugate() for i in range(n) for j in range(n)])
        B = G @ GH
        return B + Matrix.identity(self.field, n).scale(complex(eps, 0.0))

    def blockdiag_hermitian_pd(self, m, n, eps=1e-6) -> Matrix:
        """Block-diagonal Hermitian PD matrix with m diagonal n x n blocks."""
        dim = m * n
        z = self.field.zero()
        data = [z] * (dim * dim)
        for b in range(m):
            blk = self.hermitian_pd(n, eps)
            base = b * n * dim + b * n
            for k in range(n):
                for l in range(n):
                    data[base + k * dim + l] = blk._data[k * n + l]
        return Matrix(self.field, dim, dim, data)
