"""Command-line front end.

Two subcommands:

* ``verify <suite>`` runs a verification suite and streams one report line
  per instance in the form ``law-id status seed instance-file``; failures
  write a replay directory that ``verify --replay DIR`` re-executes.
  Exit codes: 0 all pass, 1 violation, 2 usage/configuration error.
* ``compute <op>`` evaluates a single operation on matrix files and prints
  the result (matrix file format, scalar literal, or root-class text).
  Exit 3 signals an undefined value (root does not exist).

Identical invocations (including ``--seed``) produce byte-identical
output; ``--jobs`` only parallelizes the work, report order is fixed by
instance index.
"""

from __future__ import annotations

import argparse
import random
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from pathlib import Path

from . import detroot, expmap, laws
from .algebra import ComplexField, Field, PrimeField, RationalField, field_from_name
from .generators import InstanceGen
from .kron import FactorShape, kron, kron_sum, partial_det_blocks, partial_det_slices, \
    partial_trace_blocks, partial_trace_slices, partial_transpose_blocks, phi, shuffle
from .matrix import Matrix, MatrixParseError, format_matrix, load_matrix

EXIT_PASS = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_UNDEFINED = 3

SUITE_IDS = (
    "hp", "sum", "parthp", "mul", "gf2-exhaustive", "newton-girard",
    "monequiv", "monoid-2x2", "phi", "detroot", "completion", "exp",
    "thompson", "counterexample-4x4", "all",
)

COMPUTE_OPS = (
    "kron", "kron-sum", "shuffle", "det", "det1", "det2", "tr1", "tr2",
    "ptranspose", "hadamard-pow", "phi", "Det", "Det1",
)


@dataclass
class SuiteConfig:
    suite_id: str
    field: Field
    trials: int
    seed: int
    max_dim: int
    m_max: int
    jobs: int


def _instance_seeds(seed: int, count: int) -> list:
    rng = random.Random(seed)
    return [rng.getrandbits(64) for _ in range(count)]


def _write_replay(report, iseed: int) -> str:
    base = Path("replay") / f"{report.law_id}-{iseed}"
    base.mkdir(parents=True, exist_ok=True)
    lines = [f"law {report.law_id}", f"seed {iseed}"]
    for key, value in report.params.items():
        if isinstance(value, FactorShape):
            value = f"{value.m}x{value.n}"
        lines.append(f"param {key} {value}")
    for name, value in report.inputs.items():
        if isinstance(value, Matrix):
            path = base / f"{name}.mat"
            path.write_text(format_matrix(value), encoding="utf-8")
            lines.append(f"input {name} {name}.mat")
        elif isinstance(value, (list, tuple)):
            # scalar tuples (xs) are stored as a single-row matrix
            field = RationalField()
            path = base / f"{name}.mat"
            path.write_text(format_matrix(Matrix(field, 1, len(value), value)),
                            encoding="utf-8")
            lines.append(f"input {name} {name}.mat")
    (base / "instance.txt").write_text("\n".join(lines) + "\n", encoding="utf-8")
    return str(base)


def _run_instances(config: SuiteConfig, emit, instance_fn, count=None) -> int:
    count = config.trials if count is None else count
    seeds = _instance_seeds(config.seed, count)

    def one(payload):
        idx, iseed = payload
        return idx, iseed, instance_fn(idx, iseed)

    payloads = list(enumerate(seeds))
    if config.jobs > 1:
        with ThreadPoolExecutor(max_workers=config.jobs) as pool:
            results = list(pool.map(one, payloads))
    else:
        results = [one(p) for p in payloads]

    failures = 0
    for _idx, iseed, report in results:
        if report.seed is None:
            report.seed = iseed
        if report.ok:
            emit(f"{report.law_id} pass seed={iseed} -")
        else:
            failures += 1
            where = _write_replay(report, iseed)
            emit(f"{report.law_id} fail seed={iseed} {where}")
    return failures


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------


def suite_hp(config: SuiteConfig, emit) -> int:
    def instance(_idx, iseed):
        gen = InstanceGen(config.field, iseed)
        m = gen.rng.randint(1, config.max_dim)
        n = gen.rng.randint(1, config.max_dim)
        return laws.check_partial_det_factorization(gen.matrix(m), gen.matrix(n))

    return _run_instances(config, emit, instance)


def suite_sum(config: SuiteConfig, emit) -> int:
    char2 = config.field.characteristic() == 2

    def instance(idx, iseed):
        gen = InstanceGen(config.field, iseed)
        m = gen.rng.randint(1, config.max_dim)
        n = gen.rng.randint(1, config.max_dim)
        if char2 or idx % 3 == 0:
            B, D = gen.disjoint_pair(n)
            return laws.check_partial_det_additivity(gen.matrix(m), B, gen.matrix(m), D)
        if idx % 3 == 1:
            B, C = gen.matrix(n), gen.matrix(n)
        else:
            B, C = gen.disjoint_pair(n)
        return laws.check_additivity_iff(B, C, max(2, config.m_max), iseed)

    return _run_instances(config, emit, instance)


def _boundary_2x2(gen: InstanceGen):
    """2x2 right factors on and off the completability boundary."""
    field = gen.field
    kind = gen.rng.randrange(3)
    a, b, c = (gen.nonzero_scalar() for _ in range(3))
    if kind == 0:  # triangular: off-diagonal product vanishes
        return Matrix.from_rows(field, [[a, b], [field.zero(), c]])
    if kind == 1:  # rank one with all entries non-zero
        d = field.div(field.mul(b, c), a)
        return Matrix.from_rows(field, [[a, b], [c, d]])
    # violating family: off-diagonal product non-zero, determinant non-zero
    while True:
        d = gen.scalar()
        det = field.sub(field.mul(a, d), field.mul(b, c))
        if not field.eq(det, field.zero()):
            return Matrix.from_rows(field, [[a, b], [c, d]])


def suite_parthp(config: SuiteConfig, emit) -> int:
    def instance(idx, iseed):
        gen = InstanceGen(config.field, iseed)
        m = gen.rng.randint(1, config.max_dim)
        n = gen.rng.randint(1, config.max_dim)
        fam = idx % 4
        A = gen.matrix(m)
        if fam == 0:
            B = gen.matrix(n)
        elif fam == 1:
            B = gen.triangular(n)
        elif fam == 2:
            B = gen.zero_one(n)
        else:
            A = gen.nonsingular(max(2, m))
            B = _boundary_2x2(gen)
        return laws.check_det_completion(A, B)

    return _run_instances(config, emit, instance)


def suite_mul(config: SuiteConfig, emit) -> int:
    def instance(idx, iseed):
        gen = InstanceGen(config.field, iseed)
        m = gen.rng.randint(1, config.max_dim)
        n = gen.rng.randint(1, config.max_dim)
        A, B = gen.matrix(m), gen.matrix(m)
        fam = idx % 4
        if fam == 0:
            C, D = gen.matrix(n), gen.matrix(n)
        elif fam == 1:
            C, D = gen.matrix(n), gen.permutation(n)
        elif fam == 2:
            C, D = gen.matrix(n), gen.diagonal(n)
        else:
            A, B = gen.nonsingular(m), gen.nonsingular(m)
            C = D = Matrix.from_rows(config.field, [[1, 1], [1, 0]])
        return laws.check_partial_det_multiplicativity(A, B, C, D)

    return _run_instances(config, emit, instance)


def suite_gf2(config: SuiteConfig, emit) -> int:
    report = laws.exhaustive_gf2_multiplicativity(2, 2)
    if report.ok:
        emit(f"gf2-exhaustive pass seed={config.seed} - {report.detail}")
        return 0
    where = _write_replay(report, config.seed)
    emit(f"gf2-exhaustive fail seed={config.seed} {where} {report.detail}")
    return 1


def suite_newton_girard(config: SuiteConfig, emit) -> int:
    field = RationalField()
    failures = 0
    for n in (1, 2, 3):
        values = list(range(-2, 3))
        tuples = [[]]
        for _ in range(n):
            tuples = [t + [v] for t in tuples for v in values]
        for xs in tuples:
            r1 = laws.check_newton_girard(field, xs, config.m_max)
            r2 = laws.check_power_sum_collapse(field, xs, max(config.m_max, n))
            ok = r1.ok and r2.ok
            if not ok:
                failures += 1
                where = _write_replay(r2 if not r2.ok else r1, config.seed)
                emit(f"newton-girard fail seed={config.seed} {where} xs={xs}")
            else:
                emit(f"newton-girard pass seed={config.seed} - xs={xs}")
    return failures


def suite_monequiv(config: SuiteConfig, emit) -> int:
    def instance(idx, iseed):
        gen = InstanceGen(config.field, iseed)
        n = gen.rng.randint(2, min(config.max_dim, config.m_max))
        fam = idx % 5
        if fam == 0:
            C, D = gen.diagonal(n), gen.diagonal(n)
        elif fam == 1:
            C, D = gen.single_row(n), gen.single_row(n)
        elif fam == 2:
            C, D = gen.single_col(n), gen.single_col(n)
        elif fam == 3:
            C, D = gen.single_row(n), gen.single_col(n)
        else:
            C, D = gen.matrix(n), gen.matrix(n)
        return laws.check_hadamard_distributivity_iff(C, D, config.m_max)

    return _run_instances(config, emit, instance)


def suite_monoid_2x2(config: SuiteConfig, emit) -> int:
    def instance(idx, iseed):
        gen = InstanceGen(config.field, iseed)
        fam = idx % 4
        if fam == 0:
            C = gen.diagonal(2) if gen.rng.random() < 0.5 else gen.single_col(2)
            D = gen.diagonal(2) if gen.rng.random() < 0.5 else gen.single_col(2)
        elif fam == 1:
            C = gen.diagonal(2) if gen.rng.random() < 0.5 else gen.single_row(2)
            D = gen.diagonal(2) if gen.rng.random() < 0.5 else gen.single_row(2)
        elif fam == 2:
            C = D = Matrix.from_rows(config.field, [[1, 2], [2, 4]])
        else:
            C, D = gen.single_col(2), gen.single_row(2)
        return laws.check_monoid_closure_2x2(C, D, config.m_max)

    return _run_instances(config, emit, instance)


def suite_phi(config: SuiteConfig, emit) -> int:
    def instance(_idx, iseed):
        gen = InstanceGen(config.field, iseed)
        n = gen.rng.randint(1, config.max_dim)
        return laws.check_phi_identities(gen.matrix(n), gen.matrix(n), m_max=4)

    return _run_instances(config, emit, instance)


def check_det_root_instance(A: Matrix, B: Matrix, C: Matrix, D: Matrix) -> laws.LawReport:
    """Composite determinant-root check on one quadruple with A, B in the
    root-closed monoid: the star law, both completion statements, and
    agreement of the general slice-wise grid with the collapsed form."""
    m, n = A.rows, C.rows
    star_ok = detroot.det_root(kron(A, C)) == detroot.star(detroot.det_root(A),
                                                           detroot.det_root(C))
    S = detroot.partial_det_root_kron(A, C)
    part1_ok = detroot.det_root_of_scaled(S) == detroot.det_root(kron(A, C))
    lhs = detroot.partial_det_root_kron(A @ B, C @ D)
    rhs = detroot.mul_scaled(detroot.partial_det_root_kron(A, C),
                             detroot.partial_det_root_kron(B, D))
    part2_ok = lhs == rhs
    grid = detroot.partial_det_root(kron(A, C), (m, n))
    grid_ok = all(
        grid[i - 1][j - 1] == S.entry_class(i, j)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
    )
    return laws.LawReport("detroot", star_ok and part1_ok and part2_ok and grid_ok,
                          mode="theorem", inputs={"A": A, "B": B, "C": C, "D": D},
                          detail=f"star={star_ok} part1={part1_ok} part2={part2_ok} grid={grid_ok}")


def suite_detroot(config: SuiteConfig, emit) -> int:
    def instance(_idx, iseed):
        gen = InstanceGen(config.field, iseed)
        m = gen.rng.randint(1, 3)
        n = gen.rng.randint(1, 3)
        A = gen.root_scalable(m, m)
        B = gen.root_scalable(m, m)
        C = gen.root_scalable(n, n)
        D = gen.matrix(n)
        return check_det_root_instance(A, B, C, D)

    return _run_instances(config, emit, instance)


def _blockwise_symmetric_matrix(gen: InstanceGen, m: int, n: int) -> Matrix:
    blocks = {}
    for i in range(m):
        for j in range(m):
            S = gen.matrix(n)
            blocks[(i, j)] = S + S.transpose()
    dim = m * n
    data = [None] * (dim * dim)
    for (i, j), blk in blocks.items():
        for k in range(n):
            for l in range(n):
                data[(i * n + k) * dim + (j * n + l)] = blk._data[k * n + l]
    return Matrix(gen.field, dim, dim, data)


def suite_completion(config: SuiteConfig, emit) -> int:
    def instance(idx, iseed):
        gen = InstanceGen(config.field, iseed)
        m = gen.rng.randint(1, 3)
        n = gen.rng.randint(2, 3)
        fam = idx % 4
        if fam == 0:
            return laws.check_completion("trace", gen.matrix(m * n), (m, n))
        if fam == 1:
            M = _blockwise_symmetric_matrix(gen, m, n)
            return laws.check_completion("transpose", M, (m, n))
        if fam == 2:
            M = _blockwise_symmetric_matrix(gen, m, n)
            bump = Matrix.basis(config.field, m * n, 1, 2)
            return laws.check_completion("transpose", M + bump, (m, n))
        return laws.check_det_completion_blocks(gen.matrix(m), gen.matrix(n))

    return _run_instances(config, emit, instance)


def suite_exp(config: SuiteConfig, emit) -> int:
    def instance(idx, iseed):
        gen = InstanceGen(config.field, iseed)
        fam = idx % 5
        if fam == 0:
            n = gen.rng.randint(1, 6)
            return expmap.check_exp_det_trace(gen.complex_matrix(n, norm_cap=5.0))
        if fam == 1:
            B = gen.complex_matrix(gen.rng.randint(1, 3), norm_cap=2.0)
            C = gen.complex_matrix(gen.rng.randint(1, 3), norm_cap=2.0)
            return expmap.check_exp_kron_sum_law(B, C)
        if fam == 2:
            m = gen.rng.randint(2, 3)
            B = gen.complex_matrix(m, norm_cap=2.0)
            if gen.rng.random() < 0.5:
                C = gen.diagonal(2)
            else:
                t = gen.nonzero_scalar()
                C = Matrix.from_rows(config.field, [[0, t], [0, 0]])
            return expmap.check_exp_kron_sum_law(B, C)
        if fam == 3:
            B = gen.complex_matrix(gen.rng.randint(1, 3), norm_cap=2.0)
            C = gen.complex_matrix(gen.rng.randint(1, 3), norm_cap=2.0)
            return expmap.check_exp_kron_sum_factorization(B, C)
        B = gen.real_matrix(gen.rng.randint(1, 3), norm_cap=2.0)
        C = gen.real_matrix(gen.rng.randint(1, 3), norm_cap=2.0)
        return expmap.check_exp_det_root_law(B, C)

    return _run_instances(config, emit, instance)


def suite_thompson(config: SuiteConfig, emit) -> int:
    shapes = ((2, 2), (2, 3), (3, 2), (2, 4), (4, 2))

    def instance(idx, iseed):
        gen = InstanceGen(config.field, iseed)
        m, n = shapes[gen.rng.randrange(len(shapes))]
        if idx % 2 == 0:
            B = gen.hermitian_pd(m * n)
        else:
            B = gen.blockdiag_hermitian_pd(m, n)
        return laws.check_psd_det_inequality(B, (m, n))

    return _run_instances(config, emit, instance)


PAPER_4X4 = [[1, 0, 1, 1], [0, 1, 0, 0], [1, 0, 1, 0], [0, 0, 0, 1]]


def suite_counterexample(config: SuiteConfig, emit) -> int:
    field = config.field
    failures = 0
    B = Matrix.from_rows(field, PAPER_4X4)
    found = laws.search_permutation_triangularization(B)
    if found is None:
        emit(f"counterexample-4x4 pass seed={config.seed} - no (P,Q) found among 576")
    else:
        report = laws.LawReport("counterexample-4x4", False,
                                inputs={"B": B}, params={"expect": "none"})
        where = _write_replay(report, config.seed)
        emit(f"counterexample-4x4 fail seed={config.seed} {where}")
        failures += 1

    gen = InstanceGen(field, config.seed)
    for k in range(10):
        T = gen.triangular(4)
        M = gen.permutation(4) @ T @ gen.permutation(4).transpose()
        got = laws.search_permutation_triangularization(M)
        ok = got is not None
        if ok:
            P, Q = got
            ok = (P @ M @ Q.transpose()).is_triangular()
        if ok:
            emit(f"counterexample-4x4 pass seed={config.seed} - control {k}")
        else:
            report = laws.LawReport("counterexample-4x4", False,
                                    inputs={"B": M}, params={"expect": "found"})
            where = _write_replay(report, config.seed)
            emit(f"counterexample-4x4 fail seed={config.seed} {where} control {k}")
            failures += 1
    return failures


SUITES = {
    "hp": (suite_hp, None),
    "sum": (suite_sum, None),
    "parthp": (suite_parthp, None),
    "mul": (suite_mul, None),
    "gf2-exhaustive": (suite_gf2, None),
    "newton-girard": (suite_newton_girard, None),
    "monequiv": (suite_monequiv, "rational"),
    "monoid-2x2": (suite_monoid_2x2, "rational"),
    "phi": (suite_phi, None),
    "detroot": (suite_detroot, "prime-field"),
    "completion": (suite_completion, None),
    "exp": (suite_exp, "complex64"),
    "thompson": (suite_thompson, "complex64"),
    "counterexample-4x4": (suite_counterexample, None),
}

# Field each restricted suite falls back to inside `verify all`.
_ALL_DEFAULTS = {
    "monequiv": "rat",
    "monoid-2x2": "rat",
    "detroot": "gf:7",
    "exp": "c64",
    "thompson": "c64",
}


def _suite_field(suite_id: str, config: SuiteConfig) -> Field:
    runner, required = SUITES[suite_id]
    if required is None or config.field.kind == required:
        return config.field
    return field_from_name(_ALL_DEFAULTS[suite_id])


def run_verify(config: SuiteConfig, emit) -> int:
    if config.suite_id == "all":
        failures = 0
        for suite_id in SUITE_IDS[:-1]:
            sub = replace(config, suite_id=suite_id, field=_suite_field(suite_id, config))
            runner, _required = SUITES[suite_id]
            n = runner(sub, emit)
            failures += n
            emit(f"suite {suite_id} {'pass' if n == 0 else 'fail'} failures={n}")
        return EXIT_VIOLATION if failures else EXIT_PASS

    runner, required = SUITES[config.suite_id]
    if required is not None and config.field.kind != required:
        raise UsageError(
            f"suite {config.suite_id!r} requires a {required} field, got {config.field.name}"
        )
    n = runner(config, emit)
    emit(f"suite {config.suite_id} {'pass' if n == 0 else 'fail'} failures={n}")
    return EXIT_VIOLATION if n else EXIT_PASS


class UsageError(ValueError):
    pass


# ---------------------------------------------------------------------------
# replay
# ---------------------------------------------------------------------------


def _replay_dispatch(law_id: str, inputs: dict, params: dict, seed: int):
    m_max = int(params.get("m_max", 6))
    if law_id == "hp":
        return laws.check_partial_det_factorization(inputs["A"], inputs["B"])
    if law_id == "parthp":
        return laws.check_det_completion(inputs["A"], inputs["B"])
    if law_id == "mul" or law_id == "gf2-exhaustive":
        return laws.check_partial_det_multiplicativity(
            inputs["A"], inputs["B"], inputs["C"], inputs["D"])
    if law_id == "sum":
        return laws.check_partial_det_additivity(
            inputs["A"], inputs["B"], inputs["C"], inputs["D"])
    if law_id == "sum-iff":
        return laws.check_additivity_iff(inputs["B"], inputs["C"], m_max, seed)
    if law_id in ("newton-girard", "ng-collapse"):
        xs = list(inputs["xs"].row_values(1))
        field = inputs["xs"].field
        if law_id == "newton-girard":
            return laws.check_newton_girard(field, xs, m_max)
        return laws.check_power_sum_collapse(field, xs, m_max)
    if law_id == "monequiv":
        return laws.check_hadamard_distributivity_iff(inputs["C"], inputs["D"], m_max)
    if law_id == "monoid-2x2":
        return laws.check_monoid_closure_2x2(inputs["C"], inputs["D"], m_max)
    if law_id == "phi":
        return laws.check_phi_identities(inputs["C"], inputs["D"], m_max)
    if law_id == "detroot":
        return check_det_root_instance(inputs["A"], inputs["B"], inputs["C"], inputs["D"])
    if law_id == "completion-trace":
        return laws.check_completion("trace", inputs["M"], FactorShape.parse(params["shape"]))
    if law_id == "completion-transpose":
        return laws.check_completion("transpose", inputs["M"], FactorShape.parse(params["shape"]))
    if law_id == "completion-det":
        return laws.check_det_completion_blocks(inputs["A"], inputs["B"])
    if law_id == "exp-det-trace":
        return expmap.check_exp_det_trace(inputs["A"])
    if law_id == "exp-kron-sum":
        return expmap.check_exp_kron_sum_law(inputs["B"], inputs["C"])
    if law_id == "exp-kron-sum-factor":
        return expmap.check_exp_kron_sum_factorization(inputs["B"], inputs["C"])
    if law_id == "exp-detroot":
        return expmap.check_exp_det_root_law(inputs["B"], inputs["C"])
    if law_id == "thompson":
        return laws.check_psd_det_inequality(inputs["B"], FactorShape.parse(params["shape"]))
    if law_id == "counterexample-4x4":
        found = laws.search_permutation_triangularization(inputs["B"])
        expected_none = params.get("expect", "none") == "none"
        return laws.LawReport(law_id, (found is None) == expected_none,
                              inputs=inputs, params=params)
    raise UsageError(f"no replay handler for law {law_id!r}")


def run_replay(directory: str, emit) -> int:
    base = Path(directory)
    meta = base / "instance.txt"
    if not meta.is_file():
        raise UsageError(f"{directory} has no instance.txt")
    law_id = None
    seed = 0
    params = {}
    inputs = {}
    for raw in meta.read_text(encoding="utf-8").splitlines():
        parts = raw.split()
        if not parts:
            continue
        if parts[0] == "law":
            law_id = parts[1]
        elif parts[0] == "seed":
            seed = int(parts[1])
        elif parts[0] == "param":
            params[parts[1]] = parts[2]
        elif parts[0] == "input":
            inputs[parts[1]] = load_matrix(base / parts[2])
    if law_id is None:
        raise UsageError(f"{directory}/instance.txt has no law line")
    report = _replay_dispatch(law_id, inputs, params, seed)
    status = "pass" if report.ok else "fail"
    emit(f"{law_id} {status} seed={seed} {directory} (replay)")
    return EXIT_PASS if report.ok else EXIT_VIOLATION


# ---------------------------------------------------------------------------
# compute
# ---------------------------------------------------------------------------


def _format_root_grid(grid) -> str:
    return "\n".join(" ".join(c.text() for c in row) for row in grid) + "\n"


def run_compute(args, emit) -> int:
    files = list(args.files)
    if args.file:
        files.extend(args.file)
    mats = [load_matrix(p) for p in files]
    op = args.op

    def need(count):
        if len(mats) != count:
            raise UsageError(f"op {op!r} expects {count} matrix file(s), got {len(mats)}")

    def need_shape():
        if args.shape is None:
            raise UsageError(f"op {op!r} requires --shape")
        return FactorShape.parse(args.shape)

    if op == "kron":
        need(2)
        emit(format_matrix(kron(mats[0], mats[1])), end="")
    elif op == "kron-sum":
        need(2)
        emit(format_matrix(kron_sum(mats[0], mats[1])), end="")
    elif op == "shuffle":
        need(0)
        shape = need_shape()
        emit(format_matrix(shuffle(shape, field_from_name(args.field))), end="")
    elif op == "det":
        need(1)
        emit(mats[0].field.format(mats[0].det()))
    elif op == "det1":
        need(1)
        emit(format_matrix(partial_det_slices(mats[0], need_shape())), end="")
    elif op == "det2":
        need(1)
        emit(format_matrix(partial_det_blocks(mats[0], need_shape())), end="")
    elif op == "tr1":
        need(1)
        emit(format_matrix(partial_trace_slices(mats[0], need_shape())), end="")
    elif op == "tr2":
        need(1)
        emit(format_matrix(partial_trace_blocks(mats[0], need_shape())), end="")
    elif op == "ptranspose":
        need(1)
        emit(format_matrix(partial_transpose_blocks(mats[0], need_shape())), end="")
    elif op == "hadamard-pow":
        need(1)
        if args.m is None:
            raise UsageError("hadamard-pow requires --m")
        emit(format_matrix(mats[0].hadamard_power(args.m)), end="")
    elif op == "phi":
        need(2)
        emit(format_matrix(phi(mats[0], mats[1])), end="")
    elif op == "Det":
        need(1)
        c = detroot.det_root(mats[0])
        if c is None:
            print(f"undefined root: det has no {mats[0].rows}-th root in "
                  f"{mats[0].field.name}", file=sys.stderr)
            return EXIT_UNDEFINED
        emit(c.text())
    elif op == "Det1":
        need(1)
        shape = need_shape()
        try:
            grid = detroot.partial_det_root(mats[0], shape)
        except detroot.NotInDnError as exc:
            print(f"undefined root: {exc}", file=sys.stderr)
            return EXIT_UNDEFINED
        emit(_format_root_grid(grid), end="")
    else:
        raise UsageError(f"unknown op {op!r}")
    return EXIT_PASS


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


def build_verify_parser() -> argparse.ArgumentParser:
    v = argparse.ArgumentParser(prog="partialdet verify",
                                description="Run a verification suite.")
    v.add_argument("suite", nargs="?", choices=SUITE_IDS,
                   help="suite id ('all' runs every suite on its natural field)")
    v.add_argument("--field", default="rat", help="rat | gf:<p> | c64")
    v.add_argument("--trials", type=int, default=200)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--max-dim", type=int, default=4, dest="max_dim")
    v.add_argument("--m-max", type=int, default=6, dest="m_max")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--replay", metavar="DIR", help="re-run a recorded instance")
    return v


def build_compute_parser() -> argparse.ArgumentParser:
    c = argparse.ArgumentParser(prog="partialdet compute",
                                description="Evaluate one operation on matrix files.")
    c.add_argument("op", choices=COMPUTE_OPS)
    c.add_argument("files", nargs="*", help="matrix files")
    c.add_argument("--file", action="append", help="additional matrix file")
    c.add_argument("--shape", help="factor shape like 2x3")
    c.add_argument("--m", type=int, help="Hadamard power exponent")
    c.add_argument("--field", default="rat", help="field for shuffle construction")
    return c


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)

    def emit(text, end="\n"):
        sys.stdout.write(text + end)

    if not argv or argv[0] in ("-h", "--help"):
        print("usage: partialdet {verify,compute} ...", file=sys.stderr)
        return EXIT_PASS if argv else EXIT_USAGE
    command, rest = argv[0], argv[1:]

    try:
        if command == "verify":
            args = build_verify_parser().parse_args(rest)
            if args.replay:
                return run_replay(args.replay, emit)
            if args.suite is None:
                raise UsageError("verify needs a suite id or --replay DIR")
            config = SuiteConfig(
                suite_id=args.suite,
                field=field_from_name(args.field),
                trials=args.trials,
                seed=args.seed,
                max_dim=args.max_dim,
                m_max=args.m_max,
                jobs=args.jobs,
            )
            return run_verify(config, emit)
        if command == "compute":
            args = build_compute_parser().parse_intermixed_args(rest)
            return run_compute(args, emit)
        print(f"error: unknown command {command!r}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, MatrixParseError, laws.UnsupportedFieldError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
