"""Dense immutable matrices over a pluggable field.

Storage is 0-based row-major; every public index parameter (``entry``,
``basis`` and friends) is 1-based to match the usual mathematical
convention.  Determinants are exact over the exact backends: fraction-free
Bareiss elimination for rationals, plain pivoted elimination for GF(p),
and partial-pivot LU for the complex backend.
"""

from __future__ import annotations

import re

from .algebra import ComplexField, Field, PrimeField, RationalField, field_from_name


class MatrixParseError(ValueError):
    """Matrix file syntax error; carries the 1-based line and column."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col


def _check_same_field(a: "Matrix", b: "Matrix"):
    if a.field != b.field:
        raise ValueError(f"field mismatch: {a.field.name} vs {b.field.name}")


class Matrix:
    """A rows x cols grid of field scalars; all operations return new values."""

    __slots__ = ("field", "rows", "cols", "_data")

    def __init__(self, field: Field, rows: int, cols: int, data):
        if rows < 1 or cols < 1:
            raise ValueError("matrix dimensions must be positive")
        data = tuple(data)
        if len(data) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(data)}")
        self.field = field
        self.rows = rows
        self.cols = cols
        self._data = data

    # ---- constructors -------------------------------------------------

    @classmethod
    def from_rows(cls, field: Field, rows) -> "Matrix":
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise ValueError("matrix dimensions must be positive")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        data = [field.coerce(v) for r in rows for v in r]
        return cls(field, len(rows), ncols, data)

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int | None = None) -> "Matrix":
        cols = rows if cols is None else cols
        z = field.zero()
        return cls(field, rows, cols, [z] * (rows * cols))

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        z, o = field.zero(), field.one()
        return cls(field, n, n, [o if i == j else z for i in range(n) for j in range(n)])

    @classmethod
    def basis(cls, field: Field, n: int, i: int, j: int) -> "Matrix":
        """The n x n standard basis matrix with a single 1 at (i, j), 1-based."""
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValueError(f"basis index ({i},{j}) out of range for n={n}")
        z, o = field.zero(), field.one()
        data = [z] * (n * n)
        data[(i - 1) * n + (j - 1)] = o
        return cls(field, n, n, data)

    @classmethod
    def diagonal(cls, field: Field, entries) -> "Matrix":
        entries = [field.coerce(v) for v in entries]
        n = len(entries)
        z = field.zero()
        data = [entries[i] if i == j else z for i in range(n) for j in range(n)]
        return cls(field, n, n, data)

    # ---- element access ------------------------------------------------

    def entry(self, i: int, j: int):
        """Entry at row i, column j (1-based)."""
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise ValueError(f"entry ({i},{j}) out of range")
        return self._data[(i - 1) * self.cols + (j - 1)]

    def row_values(self, i: int) -> tuple:
        return self._data[(i - 1) * self.cols : i * self.cols]

    def col_values(self, j: int) -> tuple:
        return self._data[j - 1 :: self.cols]

    def to_rows(self) -> list:
        c = self.cols
        return [list(self._data[r * c : (r + 1) * c]) for r in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def _require_square(self, what: str):
        if not self.is_square:
            raise ValueError(f"{what} requires a square matrix")

    # ---- equality -------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.rows != other.rows or self.cols != other.cols or self.field != other.field:
            return False
        eq = self.field.eq
        return all(eq(a, b) for a, b in zip(self._data, other._data))

    __hash__ = None

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols}, {self.field.name})"

    # ---- arithmetic -------------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        _check_same_field(self, other)
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch in add")
        add = self.field.add
        return Matrix(self.field, self.rows, self.cols,
                      [add(a, b) for a, b in zip(self._data, other._data)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __neg__(self) -> "Matrix":
        neg = self.field.neg
        return Matrix(self.field, self.rows, self.cols, [neg(a) for a in self._data])

    def scale(self, c) -> "Matrix":
        c = self.field.coerce(c)
        mul = self.field.mul
        return Matrix(self.field, self.rows, self.cols, [mul(c, a) for a in self._data])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        _check_same_field(self, other)
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matmul")
        dot = self.field.dot
        rows, cols, inner = self.rows, other.cols, self.cols
        a, b = self._data, other._data
        out = []
        for r in range(rows):
            lhs_row = a[r * inner : (r + 1) * inner]
            for c in range(cols):
                out.append(dot(lhs_row, b[c :: cols]))
        return Matrix(self.field, rows, cols, out)

    def transpose(self) -> "Matrix":
        r, c, d = self.rows, self.cols, self._data
        return Matrix(self.field, c, r, [d[i * c + j] for j in range(c) for i in range(r)])

    def trace(self):
        self._require_square("trace")
        n = self.rows
        return self.field.sum(self._data[i * n + i] for i in range(n))

    def hadamard(self, other: "Matrix") -> "Matrix":
        _check_same_field(self, other)
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch in hadamard product")
        mul = self.field.mul
        return Matrix(self.field, self.rows, self.cols,
                      [mul(a, b) for a, b in zip(self._data, other._data)])

    def hadamard_power(self, m: int) -> "Matrix":
        """Entry-wise m-th power, m >= 1."""
        if m < 1:
            raise ValueError("hadamard power needs m >= 1")
        pw = self.field.pow
        return Matrix(self.field, self.rows, self.cols, [pw(a, m) for a in self._data])

    def mat_power(self, m: int) -> "Matrix":
        """Ordinary matrix power A^m, m >= 1."""
        self._require_square("matrix power")
        if m < 1:
            raise ValueError("matrix power needs m >= 1")
        result = self
        for _ in range(m - 1):
            result = result @ self
        return result

    # ---- determinant ------------------------------------------------------

    def det(self):
        """Exact determinant over rat/GF(p); pivoted LU over c64."""
        self._require_square("det")
        if isinstance(self.field, RationalField):
            return _det_bareiss(self)
        if isinstance(self.field, PrimeField):
            return _det_prime(self)
        if isinstance(self.field, ComplexField):
            return _det_lu(self)
        raise TypeError(f"no determinant strategy for field {self.field.name}")

    # ---- structural predicates ---------------------------------------------

    def nnz(self) -> int:
        z = self.field.zero()
        eq = self.field.eq
        return sum(1 for a in self._data if not eq(a, z))

    def is_upper_triangular(self) -> bool:
        self._require_square("is_upper_triangular")
        eq, z = self.field.eq, self.field.zero()
        n = self.rows
        return all(eq(self._data[i * n + j], z) for i in range(n) for j in range(i))

    def is_lower_triangular(self) -> bool:
        self._require_square("is_lower_triangular")
        eq, z = self.field.eq, self.field.zero()
        n = self.rows
        return all(eq(self._data[i * n + j], z) for i in range(n) for j in range(i + 1, n))

    def is_triangular(self) -> bool:
        """True for upper OR lower triangular."""
        return self.is_upper_triangular() or self.is_lower_triangular()

    def is_diagonal(self) -> bool:
        return self.is_upper_triangular() and self.is_lower_triangular()

    def is_zero_one(self) -> bool:
        eq, z, o = self.field.eq, self.field.zero(), self.field.one()
        return all(eq(a, z) or eq(a, o) for a in self._data)

    def is_permutation(self) -> bool:
        self._require_square("is_permutation")
        if not self.is_zero_one():
            return False
        eq, o = self.field.eq, self.field.one()
        n = self.rows
        for i in range(1, n + 1):
            if sum(1 for a in self.row_values(i) if eq(a, o)) != 1:
                return False
            if sum(1 for a in self.col_values(i) if eq(a, o)) != 1:
                return False
        return True

    def is_symmetric(self) -> bool:
        self._require_square("is_symmetric")
        eq = self.field.eq
        n = self.rows
        d = self._data
        return all(eq(d[i * n + j], d[j * n + i]) for i in range(n) for j in range(i + 1, n))


def rank1(x: Matrix, y: Matrix) -> Matrix:
    """Outer product x y^T of two column vectors."""
    _check_same_field(x, y)
    if x.cols != 1 or y.cols != 1:
        raise ValueError("rank1 expects column vectors")
    mul = x.field.mul
    data = [mul(a, b) for a in x._data for b in y._data]
    return Matrix(x.field, x.rows, y.rows, data)


def _det_bareiss(M: Matrix):
    """Fraction-free Bareiss elimination; every division is exact."""
    n = M.rows
    a = [list(M._data[i * n : (i + 1) * n]) for i in range(n)]
    field = M.field
    sign = 1
    prev = field.one()
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return field.zero()
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) / prev
            a[i][k] = field.zero()
        prev = pivot
    result = a[n - 1][n - 1]
    return result if sign == 1 else -result


def _det_prime(M: Matrix):
    """Gaussian elimination over GF(p) with pivoting; det = sign * product of pivots."""
    p = M.field.p
    n = M.rows
    a = [list(M._data[i * n : (i + 1) * n]) for i in range(n)]
    det = 1
    sign = 1
    for k in range(n):
        pivot_row = next((r for r in range(k, n) if a[r][k] % p != 0), None)
        if pivot_row is None:
            return 0
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        pivot = a[k][k] % p
        det = det * pivot % p
        inv = pow(pivot, p - 2, p)
        for i in range(k + 1, n):
            f = a[i][k] * inv % p
            if f:
                row_k = a[k]
                row_i = a[i]
                for j in range(k, n):
                    row_i[j] = (row_i[j] - f * row_k[j]) % p
    return det if sign == 1 else (p - det) % p


def _det_lu(M: Matrix):
    """Partial-pivot LU; det = sign * product of pivots."""
    n = M.rows
    a = [list(M._data[i * n : (i + 1) * n]) for i in range(n)]
    det = 1 + 0j
    sign = 1
    for k in range(n):
        pivot_row = max(range(k, n), key=lambda r: abs(a[r][k]))
        if a[pivot_row][k] == 0:
            return 0j
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        pivot = a[k][k]
        det *= pivot
        for i in range(k + 1, n):
            f = a[i][k] / pivot
            if f != 0:
                for j in range(k, n):
                    a[i][j] -= f * a[k][j]
    return det if sign == 1 else -det


# ---- text file format -------------------------------------------------------
#
#   line 1:  field rat | field gf:<p> | field c64
#   line 2:  <rows> <cols>
#   then `rows` lines of whitespace-separated scalar literals.

_TOKEN = re.compile(r"\S+")


def parse_matrix(text: str) -> Matrix:
    lines = text.splitlines()
    if not lines:
        raise MatrixParseError("empty input", 1, 1)

    header = list(_TOKEN.finditer(lines[0]))
    if len(header) != 2 or header[0].group() != "field":
        raise MatrixParseError("expected 'field <name>'", 1, 1)
    try:
        field = field_from_name(header[1].group())
    except Exception as exc:
        raise MatrixParseError(str(exc), 1, header[1].start() + 1) from None

    if len(lines) < 2:
        raise MatrixParseError("missing dimension line", 2, 1)
    dims = list(_TOKEN.finditer(lines[1]))
    if len(dims) != 2:
        raise MatrixParseError("expected '<rows> <cols>'", 2, 1)
    try:
        rows, cols = int(dims[0].group()), int(dims[1].group())
    except ValueError:
        raise MatrixParseError("dimensions must be integers", 2, dims[0].start() + 1) from None
    if rows < 1 or cols < 1:
        raise MatrixParseError("dimensions must be positive", 2, dims[0].start() + 1)

    data = []
    for r in range(rows):
        idx = 2 + r
        if idx >= len(lines):
            raise MatrixParseError(f"missing row {r + 1}", idx + 1, 1)
        tokens = list(_TOKEN.finditer(lines[idx]))
        if len(tokens) != cols:
            raise MatrixParseError(
                f"row {r + 1} has {len(tokens)} entries, expected {cols}", idx + 1, 1
            )
        for t in tokens:
            try:
                data.append(field.parse(t.group()))
            except Exception:
                raise MatrixParseError(
                    f"bad scalar {t.group()!r}", idx + 1, t.start() + 1
                ) from None
    return Matrix(field, rows, cols, data)


def format_matrix(M: Matrix) -> str:
    fmt = M.field.format
    out = [f"field {M.field.name}", f"{M.rows} {M.cols}"]
    for i in range(1, M.rows + 1):
        out.append(" ".join(fmt(v) for v in M.row_values(i)))
    return "\n".join(out) + "\n"


def load_matrix(path) -> Matrix:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_matrix(fh.read())


def dump_matrix(M: Matrix, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_matrix(M))
