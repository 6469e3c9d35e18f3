"""Executable verifiers for the partial-determinant laws.

Each check returns a :class:`LawReport` carrying the verified statement
(``holds``), the characterizing side condition when the law is an
if-and-only-if (``condition_holds``), and the inputs needed to replay the
instance.  ``mode`` states how the two booleans combine into a pass:

* ``theorem``  - the statement must hold unconditionally,
* ``iff``      - pass means ``holds == condition_holds``,
* ``implies``  - pass means the condition forces the statement,
* ``record``   - informational, never fails.

Verification is deliberately redundant: completion checks evaluate the
full-size determinant directly on the mn x mn matrix instead of reusing
the factor identity they exercise.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dataclass_field

from .algebra import ComplexField, PrimeField, RationalField
from .generators import InstanceGen
from .kron import (
    FactorShape,
    _as_shape,
    block_at,
    is_blockwise_symmetric,
    kron,
    partial_det_blocks,
    partial_det_slices,
    partial_map_blocks,
    partial_trace_blocks,
    partial_trace_slices,
    phi,
    shuffle,
)
from .matrix import Matrix


class UnsupportedFieldError(ValueError):
    """A verifier was asked to run on a field its hypotheses exclude."""


class SweepTooLargeError(ValueError):
    """Exhaustive enumeration would exceed the configured budget."""


class SearchTooLargeError(ValueError):
    """Permutation search dimension exceeds the exhaustive limit."""


class NotPositiveDefiniteError(ValueError):
    """Input advertised as positive definite failed the Cholesky check."""


@dataclass
class LawReport:
    law_id: str
    holds: bool
    condition_holds: bool | None = None
    mode: str = "theorem"
    extra_ok: bool = True
    lhs: object = None
    rhs: object = None
    inputs: dict = dataclass_field(default_factory=dict)
    params: dict = dataclass_field(default_factory=dict)
    seed: int | None = None
    detail: str = ""

    @property
    def ok(self) -> bool:
        if self.mode == "record":
            return True
        if self.mode == "iff":
            base = self.holds == self.condition_holds
        elif self.mode == "implies":
            base = (not self.condition_holds) or self.holds
        else:
            base = self.holds
        return base and self.extra_ok


def _hadamard_is_zero(B: Matrix, D: Matrix) -> bool:
    return B.hadamard(D) == Matrix.zeros(B.field, B.rows, B.cols)


# ---------------------------------------------------------------------------
# Partial-determinant laws on Kronecker products
# ---------------------------------------------------------------------------


def check_partial_det_factorization(A: Matrix, B: Matrix) -> LawReport:
    """Slice-wise partial determinant of A (x) B equals det(A) times the
    m-th Hadamard power of B.  Unconditional over every field."""
    m, n = A.rows, B.rows
    lhs = partial_det_slices(kron(A, B), (m, n))
    rhs = B.hadamard_power(m).scale(A.det())
    return LawReport("hp", lhs == rhs, mode="theorem", lhs=lhs, rhs=rhs,
                     inputs={"A": A, "B": B})


def check_det_completion(A: Matrix, B: Matrix) -> LawReport:
    """Determinant completion through slices: det of the partial determinant
    of A (x) B equals det(A (x) B) iff det(A) = 0 or the determinant of the
    m-th Hadamard power of B equals det(B)^m.

    The big determinant is evaluated directly on the mn x mn matrix so the
    check stays independent of the factorization identity.
    """
    field = A.field
    m, n = A.rows, B.rows
    K = kron(A, B)
    lhs = partial_det_slices(K, (m, n)).det()
    rhs = K.det()
    holds = field.eq(lhs, rhs)
    det_a = A.det()
    cond = field.eq(det_a, field.zero()) or field.eq(
        B.hadamard_power(m).det(), field.pow(B.det(), m)
    )
    return LawReport("parthp", holds, cond, mode="iff", lhs=lhs, rhs=rhs,
                     inputs={"A": A, "B": B})


def check_det_completion_blocks(A: Matrix, B: Matrix) -> LawReport:
    """Block-wise mirror of :func:`check_det_completion`: completing through
    blocks swaps the roles of the two factors in the side condition."""
    field = A.field
    m, n = A.rows, B.rows
    K = kron(A, B)
    lhs = partial_det_blocks(K, (m, n)).det()
    rhs = K.det()
    holds = field.eq(lhs, rhs)
    cond = field.eq(B.det(), field.zero()) or field.eq(
        A.hadamard_power(n).det(), field.pow(A.det(), n)
    )
    return LawReport("completion-det", holds, cond, mode="iff", lhs=lhs, rhs=rhs,
                     inputs={"A": A, "B": B})


def check_partial_det_multiplicativity(A: Matrix, B: Matrix, C: Matrix, D: Matrix) -> LawReport:
    """Multiplicativity of the slice-wise partial determinant on Kronecker
    products iff det(AB) = 0 or the m-th Hadamard power distributes over CD."""
    field = A.field
    m, n = A.rows, C.rows
    lhs = partial_det_slices(kron(A, C) @ kron(B, D), (m, n))
    rhs = partial_det_slices(kron(A, C), (m, n)) @ partial_det_slices(kron(B, D), (m, n))
    holds = lhs == rhs
    cond = field.eq((A @ B).det(), field.zero()) or (
        (C @ D).hadamard_power(m) == C.hadamard_power(m) @ D.hadamard_power(m)
    )
    return LawReport("mul", holds, cond, mode="iff", lhs=lhs, rhs=rhs,
                     inputs={"A": A, "B": B, "C": C, "D": D})


def check_partial_det_additivity(A: Matrix, B: Matrix, C: Matrix, D: Matrix) -> LawReport:
    """Additivity of the slice-wise partial determinant on A (x) B + C (x) D.
    Guaranteed when B and D have disjoint support; recorded either way."""
    m, n = A.rows, B.rows
    total = kron(A, B) + kron(C, D)
    lhs = partial_det_slices(total, (m, n))
    rhs = partial_det_slices(kron(A, B), (m, n)) + partial_det_slices(kron(C, D), (m, n))
    return LawReport("sum", lhs == rhs, _hadamard_is_zero(B, D), mode="implies",
                     lhs=lhs, rhs=rhs, inputs={"A": A, "B": B, "C": C, "D": D})


def check_additivity_iff(B: Matrix, C: Matrix, m_max: int, seed) -> LawReport:
    """Sweep left factors of growing size: additivity in the right factor
    holds for every m and every A iff B and C have disjoint support.

    The reverse direction needs characteristic other than 2 (in
    characteristic 2 the square of a sum always splits) and m_max >= 2.
    """
    field = B.field
    if field.characteristic() == 2:
        raise UnsupportedFieldError("additivity iff is unsound in characteristic 2")
    if m_max < 2:
        raise ValueError("need m_max >= 2 for the reverse direction")
    gen = InstanceGen(field, seed)
    holds = True
    for m in range(1, m_max + 1):
        A = gen.nonsingular(m)
        if not check_partial_det_additivity(A, B, A, C).holds:
            holds = False
            break
    return LawReport("sum-iff", holds, _hadamard_is_zero(B, C), mode="iff",
                     inputs={"B": B, "C": C}, params={"m_max": m_max}, seed=seed)


# ---------------------------------------------------------------------------
# Symmetric polynomials
# ---------------------------------------------------------------------------


def power_sum(field, xs, m: int):
    """p_m = sum of m-th powers."""
    if m < 1:
        raise ValueError("power sum needs m >= 1")
    return field.sum(field.pow(x, m) for x in xs)


def elementary_symmetric(field, xs, m: int):
    """e_m = sum of all m-fold products of distinct entries."""
    if m < 1:
        raise ValueError("elementary symmetric needs m >= 1")
    xs = list(xs)
    coeffs = [field.one()] + [field.zero()] * m
    for x in xs:
        for k in range(min(m, len(coeffs) - 1), 0, -1):
            coeffs[k] = field.add(coeffs[k], field.mul(coeffs[k - 1], x))
    return coeffs[m]


def newton_girard_det(field, es) -> object:
    """Recover the m-th power sum from e_1..e_m as the determinant of the
    classical Hessenberg matrix (first column k*e_k, unit superdiagonal).

    Requires characteristic 0 because rows are scaled by integers up to m.
    """
    if field.characteristic() != 0:
        raise UnsupportedFieldError("Newton-Girard determinant needs characteristic 0")
    es = list(es)
    m = len(es)
    if m < 1:
        raise ValueError("need at least e_1")
    z, o = field.zero(), field.one()
    rows = []
    for i in range(1, m + 1):
        row = [field.mul(field.coerce(i), es[i - 1])]
        for j in range(2, m + 1):
            k = i - j + 1
            if j == i + 1:
                row.append(o)
            elif 1 <= k:
                row.append(es[k - 1])
            else:
                row.append(z)
        rows.append(row)
    return Matrix.from_rows(field, rows).det()


def check_newton_girard(field, xs, m_max: int) -> LawReport:
    """The Hessenberg determinant reproduces every power sum up to m_max."""
    xs = [field.coerce(x) for x in xs]
    holds = all(
        field.eq(
            newton_girard_det(field, [elementary_symmetric(field, xs, k) for k in range(1, m + 1)]),
            power_sum(field, xs, m),
        )
        for m in range(1, m_max + 1)
    )
    return LawReport("newton-girard", holds, mode="theorem",
                     inputs={"xs": xs}, params={"m_max": m_max})


def check_power_sum_collapse(field, xs, m_max: int) -> LawReport:
    """p_m = (e_1)^m for every m iff all pairwise products vanish.

    Characteristic 0 only; the sweep bound must reach the tuple length for
    the finite surrogate of "every m" to be sound.
    """
    if field.characteristic() != 0:
        raise UnsupportedFieldError("power-sum collapse needs characteristic 0")
    xs = [field.coerce(x) for x in xs]
    if m_max < len(xs):
        raise ValueError("m_max must be at least the tuple length")
    e1 = field.sum(xs)
    holds = all(
        field.eq(power_sum(field, xs, m), field.pow(e1, m)) for m in range(1, m_max + 1)
    )
    z = field.zero()
    cond = all(
        field.eq(field.mul(xs[j], xs[k]), z)
        for j in range(len(xs))
        for k in range(j + 1, len(xs))
    )
    return LawReport("ng-collapse", holds, cond, mode="iff",
                     inputs={"xs": xs}, params={"m_max": m_max})


# ---------------------------------------------------------------------------
# Hadamard-power distributivity and monoid predicates
# ---------------------------------------------------------------------------


def _hadamard_distributes(C: Matrix, D: Matrix, m: int) -> bool:
    return (C @ D).hadamard_power(m) == C.hadamard_power(m) @ D.hadamard_power(m)


def check_hadamard_distributivity_iff(C: Matrix, D: Matrix, m_max: int) -> LawReport:
    """Equivalence of three descriptions of Hadamard-power distributivity
    over an ordered field:

    * T1:   (CD)^(m) = C^(m) D^(m) for every m up to m_max,
    * T2:   the m = 2 case plus a single-witness property: every entry of
            CD equals one of its summands C_ik D_kj,
    * COND: all cross products C_ik D_kj C_ik' D_k'j (k != k') vanish.

    Reported as holds = T1, condition = T2, with T2 == COND folded into the
    pass criterion.  Sound per instance when m_max >= n.
    """
    field = C.field
    if not isinstance(field, RationalField):
        raise UnsupportedFieldError("ordered-field check requires the rational backend")
    n = C.rows
    if m_max < n:
        raise ValueError("m_max must be at least the dimension")
    t1 = all(_hadamard_distributes(C, D, m) for m in range(1, m_max + 1))
    t2a = _hadamard_distributes(C, D, 2)
    CD = C @ D
    t2b = all(
        any(
            field.eq(CD.entry(i, j), field.mul(C.entry(i, k), D.entry(k, j)))
            for k in range(1, n + 1)
        )
        for i in range(1, n + 1)
        for j in range(1, n + 1)
    )
    z = field.zero()
    cond = all(
        field.eq(
            field.mul(
                field.mul(C.entry(i, k), D.entry(k, j)),
                field.mul(C.entry(i, kp), D.entry(kp, j)),
            ),
            z,
        )
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        for k in range(1, n + 1)
        for kp in range(k + 1, n + 1)
    )
    return LawReport("monequiv", t1, t2a and t2b, mode="iff",
                     extra_ok=((t2a and t2b) == cond),
                     inputs={"C": C, "D": D}, params={"m_max": m_max},
                     detail=f"t1={t1} t2a={t2a} t2b={t2b} cond={cond}")


def classify_2x2_submatrices(C: Matrix) -> list:
    """Index pairs (i, j), i < j, whose corner 2 x 2 submatrix escapes the
    six admissible sparsity forms (diagonal, anti-diagonal, single row,
    single column); detected through the four vanishing products."""
    C._require_square("classify_2x2_submatrices")
    field = C.field
    z = field.zero()
    n = C.rows
    bad = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            p, q = C.entry(i, i), C.entry(i, j)
            r, s = C.entry(j, i), C.entry(j, j)
            mul = field.mul
            products = (
                mul(mul(p, p), mul(q, r)),
                mul(mul(p, q), mul(q, s)),
                mul(mul(s, s), mul(r, q)),
                mul(mul(r, p), mul(s, r)),
            )
            if not all(field.eq(v, z) for v in products):
                bad.append((i, j))
    return bad


def _at_most_one_nonzero_row(C: Matrix) -> bool:
    z = C.field.zero()
    eq = C.field.eq
    nonzero_rows = sum(
        1 for i in range(1, C.rows + 1) if any(not eq(v, z) for v in C.row_values(i))
    )
    return nonzero_rows <= 1


def _at_most_one_nonzero_col(C: Matrix) -> bool:
    z = C.field.zero()
    eq = C.field.eq
    nonzero_cols = sum(
        1 for j in range(1, C.cols + 1) if any(not eq(v, z) for v in C.col_values(j))
    )
    return nonzero_cols <= 1


def check_monoid_closure_2x2(C: Matrix, D: Matrix, m_max: int) -> LawReport:
    """If both arguments live in diagonal-or-single-column matrices (or both
    in diagonal-or-single-row), the determinant law det(X^(m)) = det(X)^m
    and Hadamard distributivity over the product hold for every m."""
    field = C.field
    if not isinstance(field, RationalField):
        raise UnsupportedFieldError("ordered-field check requires the rational backend")

    def in_dc(X):
        return X.is_diagonal() or _at_most_one_nonzero_col(X)

    def in_dr(X):
        return X.is_diagonal() or _at_most_one_nonzero_row(X)

    cond = (in_dc(C) and in_dc(D)) or (in_dr(C) and in_dr(D))
    det_law = all(
        field.eq(X.hadamard_power(m).det(), field.pow(X.det(), m))
        for X in (C, D)
        for m in range(1, m_max + 1)
    )
    product_law = all(_hadamard_distributes(C, D, m) for m in range(1, m_max + 1))
    return LawReport("monoid-2x2", det_law and product_law, cond, mode="implies",
                     inputs={"C": C, "D": D}, params={"m_max": m_max},
                     detail=f"det_law={det_law} product_law={product_law}")


# ---------------------------------------------------------------------------
# GF(2) exhaustive sweep
# ---------------------------------------------------------------------------


def _all_gf2_matrices(field: PrimeField, n: int) -> list:
    mats = []
    for bits in range(1 << (n * n)):
        data = [(bits >> k) & 1 for k in range(n * n)]
        mats.append(Matrix(field, n, n, data))
    return mats


def exhaustive_gf2_multiplicativity(m: int, n: int, budget: int = 200_000,
                                    seed=None, samples: int = 10_000) -> LawReport:
    """Multiplicativity of the slice-wise partial determinant over GF(2),
    swept over all quadruples (A, B, C, D) when the count fits the budget,
    otherwise over a seeded sample.  Also confirms Hadamard distributivity
    of every GF(2) pair, which over (0,1) entries is power-free."""
    field = PrimeField(2)
    total = 1 << (2 * m * m + 2 * n * n)
    left = _all_gf2_matrices(field, m)
    right = _all_gf2_matrices(field, n)
    shape = FactorShape(m, n)

    pair_law_ok = all(
        _hadamard_distributes(C, D, m) for C in right for D in right
    ) if len(right) ** 2 <= budget else True

    violations = 0
    checked = 0
    first_bad = None

    if total <= budget:
        kps = [(kron(A, C), partial_det_slices(kron(A, C), shape), A, C)
               for A in left for C in right]
        for K1, P1, A, C in kps:
            for K2, P2, B, D in kps:
                checked += 1
                if partial_det_slices(K1 @ K2, shape) != P1 @ P2:
                    violations += 1
                    if first_bad is None:
                        first_bad = {"A": A, "B": B, "C": C, "D": D}
        detail = f"full sweep, {checked} quadruples"
    else:
        if seed is None:
            raise SweepTooLargeError(
                f"{total} quadruples exceed budget {budget}; provide a seed to sample"
            )
        gen = InstanceGen(field, seed)
        for _ in range(samples):
            A, B = gen.matrix(m), gen.matrix(m)
            C, D = gen.matrix(n), gen.matrix(n)
            checked += 1
            if not check_partial_det_multiplicativity(A, B, C, D).holds:
                violations += 1
                if first_bad is None:
                    first_bad = {"A": A, "B": B, "C": C, "D": D}
        detail = f"sampled {checked} quadruples (seed {seed})"

    return LawReport("gf2-exhaustive", violations == 0 and pair_law_ok, mode="theorem",
                     inputs=first_bad or {}, seed=seed,
                     params={"m": m, "n": n},
                     detail=f"{detail}, {violations} violations")


# ---------------------------------------------------------------------------
# Permutation triangularization search
# ---------------------------------------------------------------------------


def search_permutation_triangularization(B: Matrix, limit: int = 6):
    """Exhaustive search for permutations P, Q with P B Q^T triangular.

    Returns (P, Q) or None.  Only upper-triangular targets are scanned:
    a lower-triangular arrangement exists iff reversing both permutations
    yields an upper one, so the sweep already covers both."""
    B._require_square("permutation triangularization")
    n = B.rows
    if n > limit:
        raise SearchTooLargeError(f"dimension {n} exceeds exhaustive limit {limit}")
    field = B.field
    z = field.zero()
    eq = field.eq
    entries = B.to_rows()
    for sigma in itertools.permutations(range(n)):
        rows = [entries[s] for s in sigma]
        for tau in itertools.permutations(range(n)):
            if all(eq(rows[i][tau[j]], z) for i in range(1, n) for j in range(i)):
                zo, oo = field.zero(), field.one()
                P = Matrix(field, n, n,
                           [oo if k == sigma[i] else zo for i in range(n) for k in range(n)])
                Q = Matrix(field, n, n,
                           [oo if k == tau[j] else zo for j in range(n) for k in range(n)])
                return P, Q
    return None


# ---------------------------------------------------------------------------
# Generic completion checks
# ---------------------------------------------------------------------------


def check_completion(kind: str, M: Matrix, shape, factors=None) -> LawReport:
    """Does the block-wise partial version of an operation complete?

    ``kind`` is one of ``trace`` (always completes), ``det`` (completes
    iff the factor condition holds; pass ``factors=(A, B)`` for Kronecker
    inputs to turn the report into an iff check), or ``transpose``
    (completes iff M is block-wise symmetric).
    """
    shape = _as_shape(shape)
    field = M.field
    if kind == "trace":
        f = partial_map_blocks(M, shape, lambda blk: blk.trace())
        holds = field.eq(f.trace(), M.trace())
        return LawReport("completion-trace", holds, mode="theorem",
                         inputs={"M": M}, params={"shape": shape})
    if kind == "det":
        f = partial_map_blocks(M, shape, lambda blk: blk.det())
        holds = field.eq(f.det(), M.det())
        if factors is not None:
            A, B = factors
            cond = field.eq(B.det(), field.zero()) or field.eq(
                A.hadamard_power(B.rows).det(), field.pow(A.det(), B.rows)
            )
            return LawReport("completion-det", holds, cond, mode="iff",
                             inputs={"A": A, "B": B}, params={"shape": shape})
        return LawReport("completion-det", holds, mode="record",
                         inputs={"M": M}, params={"shape": shape})
    if kind == "transpose":
        f = partial_map_blocks(M, shape, lambda blk: blk.transpose())
        holds = f.transpose() == M.transpose()
        cond = is_blockwise_symmetric(M, shape)
        return LawReport("completion-transpose", holds, cond, mode="iff",
                         inputs={"M": M}, params={"shape": shape})
    raise ValueError(f"unknown completion kind {kind!r}")


# ---------------------------------------------------------------------------
# Phi identities
# ---------------------------------------------------------------------------


def check_phi_identities(C: Matrix, D: Matrix, m_max: int = 4) -> LawReport:
    """The product-encoding matrix reproduces CD under the slice trace and
    DC under the block trace, commutes with Hadamard powers, and agrees
    with its triple-product construction through the perfect shuffle."""
    field = C.field
    n = C.rows
    shape = FactorShape(n, n)
    F = phi(C, D)
    ok_slices = partial_trace_slices(F, shape) == C @ D
    ok_blocks = partial_trace_blocks(F, shape) == D @ C
    ok_power = all(
        F.hadamard_power(m) == phi(C.hadamard_power(m), D.hadamard_power(m))
        for m in range(1, m_max + 1)
    )
    eye = Matrix.identity(field, n)
    triple = kron(eye, C) @ shuffle(shape, field) @ kron(eye, D)
    ok_triple = F == triple
    return LawReport("phi", ok_slices and ok_blocks and ok_power and ok_triple,
                     mode="theorem", inputs={"C": C, "D": D}, params={"m_max": m_max},
                     detail=f"slices={ok_slices} blocks={ok_blocks} power={ok_power} triple={ok_triple}")


# ---------------------------------------------------------------------------
# Positive-definite determinant inequality
# ---------------------------------------------------------------------------


def _cholesky_check(B: Matrix):
    """Raise unless B is Hermitian positive definite (complex backend)."""
    field = B.field
    n = B.rows
    d = B._data
    for i in range(n):
        for j in range(n):
            if not field.eq(d[i * n + j], d[j * n + i].conjugate()):
                raise NotPositiveDefiniteError("matrix is not Hermitian")
    L = [[0j] * n for _ in range(n)]
    for j in range(n):
        s = d[j * n + j] - sum(L[j][k] * L[j][k].conjugate() for k in range(j))
        if s.real <= 0:
            raise NotPositiveDefiniteError(f"pivot {j + 1} is not positive")
        L[j][j] = s.real**0.5
        for i in range(j + 1, n):
            t = d[i * n + j] - sum(L[i][k] * L[j][k].conjugate() for k in range(j))
            L[i][j] = t / L[j][j]


def is_block_diagonal(M: Matrix, shape) -> bool:
    shape = _as_shape(shape)
    zero = Matrix.zeros(M.field, shape.n, shape.n)
    return all(
        block_at(M, shape, i, j) == zero
        for i in range(1, shape.m + 1)
        for j in range(1, shape.m + 1)
        if i != j
    )


def check_psd_det_inequality(B: Matrix, shape, tol_scale: float = 1e-9) -> LawReport:
    """For Hermitian positive definite B, the determinant of the block-wise
    partial determinant dominates det(B); equality on block-diagonal
    inputs.  Tolerance scales with 1 + |det B|."""
    if not isinstance(B.field, ComplexField):
        raise UnsupportedFieldError("positive-definite check requires the complex backend")
    shape = _as_shape(shape)
    _cholesky_check(B)
    lhs = partial_det_blocks(B, shape).det()
    rhs = B.det()
    tol = tol_scale * (1.0 + abs(rhs))
    holds = lhs.real >= rhs.real - tol
    blockdiag = is_block_diagonal(B, shape)
    if blockdiag:
        holds = holds and abs(lhs - rhs) <= tol
    return LawReport("thompson", holds, blockdiag, mode="theorem",
                     lhs=lhs, rhs=rhs, inputs={"B": B}, params={"shape": shape},
                     detail=f"lhs={lhs.real!r} rhs={rhs.real!r}")
