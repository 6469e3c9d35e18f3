"""Independent oracles used to freeze expected values.

These deliberately avoid the library's production code paths: the
determinant here is cofactor expansion (dimensions <= 5), the Kronecker
product is assembled row by row from the block formula, and symmetric
polynomials are enumerated combinatorially.
"""

from itertools import combinations

from partialdet.matrix import Matrix


def det_cofactor(M: Matrix):
    """Cofactor expansion along the first row; only for small matrices."""
    assert M.is_square and M.rows <= 5
    field = M.field
    n = M.rows
    if n == 1:
        return M.entry(1, 1)
    total = field.zero()
    rows = M.to_rows()
    for j in range(n):
        minor_rows = [[rows[i][k] for k in range(n) if k != j] for i in range(1, n)]
        minor = Matrix(field, n - 1, n - 1, [v for r in minor_rows for v in r])
        term = field.mul(rows[0][j], det_cofactor(minor))
        if j % 2 == 1:
            term = field.neg(term)
        total = field.add(total, term)
    return total


def kron_rowwise(A: Matrix, B: Matrix) -> Matrix:
    """Kronecker product assembled directly from the block formula."""
    field = A.field
    rows = []
    for i in range(1, A.rows + 1):
        for k in range(1, B.rows + 1):
            row = []
            for j in range(1, A.cols + 1):
                for l in range(1, B.cols + 1):
                    row.append(field.mul(A.entry(i, j), B.entry(k, l)))
            rows.append(row)
    return Matrix(field, A.rows * B.rows, A.cols * B.cols, [v for r in rows for v in r])


def power_sum_naive(field, xs, m):
    total = field.zero()
    for x in xs:
        term = field.one()
        for _ in range(m):
            term = field.mul(term, x)
        total = field.add(total, term)
    return total


def elementary_symmetric_naive(field, xs, m):
    xs = list(xs)
    total = field.zero()
    for combo in combinations(xs, m):
        term = field.one()
        for x in combo:
            term = field.mul(term, x)
        total = field.add(total, term)
    return total
