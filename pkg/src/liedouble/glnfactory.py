"""Factory for the self-dual double built on gl(n) + t_n.

Two n(n+1)/2-dimensional solvable algebras, isomorphic to the upper and
lower triangular matrices of gl(n), are paired index-by-index:

    s_plus:  X_i (i = 1..n) and Y_ij (i < j)
    s_minus: x^i            and y^ij  (i < j)

with brackets

    [X_i, Y_jk] = kappa (d_ij - d_ik) Y_jk      [Y_ij, Y_kl] = d_jk Y_il - d_il Y_kj
    [x^i, y^jk] = -kappa (d_ij - d_ik) y^jk     [y^ij, y^kl] = -(d_jk y^il - d_il y^kj)

where kappa defaults to 1/sqrt2, the unique normalization (up to sign) for
which the double is gl(n) + t_n with the orthonormal-Cartan trace pairing.

Flattened index orders are fixed and documented:

    solvable basis:  X_1..X_n, then Y_ij in lexicographic (i, j) order;
    gl(n)+t_n basis: H_1..H_n, I_1..I_n, then F_ij (i != j) lexicographic.

The change of basis identifying the double with gl(n) + t_n is

    H_i = (X_i + x^i)/sqrt2,  I_i = (X_i - x^i)/(i*sqrt2),
    F_ij = Y_ij (i < j),      F_ij = y^ji (i > j).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bialg import Cocommutator, TwoTensor, cocommutator_from_triple, express_in_basis
from .liealg import (
    BilinearForm,
    LieAlgebra,
    Matrix,
    StructureTensor,
    Vector,
    Violation,
    structure_equal,
)
from .manin import ManinTriple, build_double
from fractions import Fraction

from .scalars import HALF_SQRT2, ONE, Scalar, ZERO

__all__ = [
    "solvable_dim",
    "cartan_index",
    "root_index",
    "solvable_labels",
    "gln_dim",
    "h_index",
    "i_index",
    "f_index",
    "gln_labels",
    "build_s_plus",
    "build_s_minus",
    "build_gln_triple",
    "gln_change_of_basis",
    "fundamental_representation",
    "build_gln_tn",
    "gln_tn_trace_form",
    "double_in_gln_basis",
    "delta_in_gln_basis",
    "verify_double_is_gln",
    "check_chain_embedding",
    "GlnMatchReport",
    "ChainReport",
]

# i*sqrt2/2 and -i*sqrt2/2, the central-generator mixing weights
_I_HALF_SQRT2 = Scalar(0, 0, 0, Fraction(1, 2))
_MINUS_I_HALF_SQRT2 = -_I_HALF_SQRT2


def solvable_dim(n: int) -> int:
    return n * (n + 1) // 2


def cartan_index(n: int, i: int) -> int:
    """0-based index of X_i / x^i, i given 1-based."""
    if not 1 <= i <= n:
        raise ValueError(f"Cartan index {i} outside 1..{n}")
    return i - 1


def root_index(n: int, i: int, j: int) -> int:
    """0-based index of Y_ij / y^ij, pair given 1-based with i < j."""
    if not (1 <= i < j <= n):
        raise ValueError(f"root pair ({i},{j}) must satisfy 1 <= i < j <= {n}")
    return n + (i - 1) * n - i * (i - 1) // 2 + (j - i - 1)


def solvable_labels(n: int, lower: bool = False) -> tuple[str, ...]:
    cartan = "x" if lower else "X"
    root = "y" if lower else "Y"
    labels = [f"{cartan}{i}" for i in range(1, n + 1)]
    labels += [f"{root}{i}{j}" for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    return tuple(labels)


def gln_dim(n: int) -> int:
    return n * n + n


def h_index(n: int, i: int) -> int:
    if not 1 <= i <= n:
        raise ValueError(f"H index {i} outside 1..{n}")
    return i - 1


def i_index(n: int, i: int) -> int:
    if not 1 <= i <= n:
        raise ValueError(f"I index {i} outside 1..{n}")
    return n + i - 1


def f_index(n: int, i: int, j: int) -> int:
    if i == j or not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"F pair ({i},{j}) must have distinct entries in 1..{n}")
    return 2 * n + (i - 1) * (n - 1) + (j - 1 if j < i else j - 2)


def gln_labels(n: int) -> tuple[str, ...]:
    labels = [f"H{i}" for i in range(1, n + 1)]
    labels += [f"I{i}" for i in range(1, n + 1)]
    labels += [f"F{i}{j}" for i in range(1, n + 1) for j in range(1, n + 1) if j != i]
    return tuple(labels)


def _solvable_brackets(n: int, kappa: Scalar, sign: int):
    brackets: dict[tuple[int, int], dict[int, Scalar]] = {}
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    for i in range(1, n + 1):
        for (j, k) in pairs:
            weight = (1 if i == j else 0) - (1 if i == k else 0)
            if weight:
                coeff = kappa * Scalar(sign * weight)
                brackets[(cartan_index(n, i), root_index(n, j, k))] = {
                    root_index(n, j, k): coeff
                }
    for a, (i, j) in enumerate(pairs):
        for (k, l) in pairs[a + 1 :]:
            acc: dict[int, Scalar] = {}
            if j == k:
                acc[root_index(n, i, l)] = Scalar(sign)
            if i == l:
                out = acc.get(root_index(n, k, j), ZERO)
                acc[root_index(n, k, j)] = out - Scalar(sign)
            acc = {r: v for r, v in acc.items() if v}
            if acc:
                brackets[(root_index(n, i, j), root_index(n, k, l))] = acc
    return brackets


def build_s_plus(n: int, cartan_coefficient: Scalar = HALF_SQRT2) -> LieAlgebra:
    """Upper-triangular-type solvable algebra on X_i, Y_ij (i < j)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return LieAlgebra(
        solvable_labels(n),
        StructureTensor(_solvable_brackets(n, cartan_coefficient, +1)),
    )


def build_s_minus(n: int, cartan_coefficient: Scalar = HALF_SQRT2) -> LieAlgebra:
    """Lower-triangular-type partner: every structure constant negated."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return LieAlgebra(
        solvable_labels(n, lower=True),
        StructureTensor(_solvable_brackets(n, cartan_coefficient, -1)),
    )


def build_gln_triple(
    n: int, cartan_coefficient: Scalar = HALF_SQRT2, validate: bool = True
) -> ManinTriple:
    """Pair the two solvable algebras index-by-index into a Manin triple."""
    plus = build_s_plus(n, cartan_coefficient)
    minus = build_s_minus(n, cartan_coefficient)
    if validate:
        return ManinTriple(plus, minus)
    return ManinTriple.unchecked(plus, minus)


def gln_change_of_basis(n: int) -> Matrix:
    """Columns express H_i, I_i, F_ij through the double's X, Y, x, y basis.

    H_i = (X_i + x^i)/sqrt2, I_i = (X_i - x^i)/(i*sqrt2) and F_ij is Y_ij
    for i < j, y^ji for i > j.  The exact inverse realizes
    X_i = (H_i + i I_i)/sqrt2 and x^i = (H_i - i I_i)/sqrt2.
    """
    m = solvable_dim(n)
    dim = gln_dim(n)
    columns = []
    for i in range(1, n + 1):
        columns.append({cartan_index(n, i): HALF_SQRT2, m + cartan_index(n, i): HALF_SQRT2})
    for i in range(1, n + 1):
        columns.append(
            {
                cartan_index(n, i): _MINUS_I_HALF_SQRT2,
                m + cartan_index(n, i): _I_HALF_SQRT2,
            }
        )
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            if i < j:
                columns.append({root_index(n, i, j): ONE})
            else:
                columns.append({m + root_index(n, j, i): ONE})
    return Matrix.from_columns(dim, [Vector(col) for col in columns])


def fundamental_representation(n: int) -> list[Matrix]:
    """n x n matrices for the gl(n) block: H_i = E_ii, F_ij = E_ij (i != j)."""

    def unit(i: int, j: int) -> Matrix:
        return Matrix(
            [[ONE if (r, s) == (i - 1, j - 1) else ZERO for s in range(n)] for r in range(n)]
        )

    matrices = [unit(i, i) for i in range(1, n + 1)]
    matrices += [unit(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if j != i]
    return matrices


def build_gln_tn(n: int) -> LieAlgebra:
    """gl(n) from fundamental-representation commutators, plus n central I_i."""
    if n < 1:
        raise ValueError("n must be at least 1")
    rep = fundamental_representation(n)
    # map the representation list (H-block then F-block) to algebra indices
    rep_index = [h_index(n, i) for i in range(1, n + 1)]
    rep_index += [
        f_index(n, i, j) for i in range(1, n + 1) for j in range(1, n + 1) if j != i
    ]
    algebra_to_rep = {alg_i: k for k, alg_i in enumerate(rep_index)}

    def decompose(mat: Matrix) -> dict[int, Scalar]:
        out: dict[int, Scalar] = {}
        for r in range(n):
            for s in range(n):
                value = mat.entry(r, s)
                if value:
                    index = h_index(n, r + 1) if r == s else f_index(n, r + 1, s + 1)
                    out[index] = value
        return out

    brackets: dict[tuple[int, int], dict[int, Scalar]] = {}
    indices = sorted(algebra_to_rep)
    for a_pos, p in enumerate(indices):
        mp = rep[algebra_to_rep[p]]
        for q in indices[a_pos + 1 :]:
            mq = rep[algebra_to_rep[q]]
            comm = mp * mq
            comm2 = mq * mp
            diff = Matrix(
                [
                    [comm.entry(r, s) - comm2.entry(r, s) for s in range(n)]
                    for r in range(n)
                ]
            )
            vec = decompose(diff)
            if vec:
                brackets[(p, q)] = vec
    return LieAlgebra(gln_labels(n), StructureTensor(brackets))


def gln_tn_trace_form(n: int) -> BilinearForm:
    """Fundamental trace form on the gl(n) block, extended by <I_i, I_j> = d_ij."""
    dim = gln_dim(n)
    gram = [[ZERO] * dim for _ in range(dim)]
    rep = fundamental_representation(n)
    rep_index = [h_index(n, i) for i in range(1, n + 1)]
    rep_index += [
        f_index(n, i, j) for i in range(1, n + 1) for j in range(1, n + 1) if j != i
    ]
    for a, p in enumerate(rep_index):
        for b, q in enumerate(rep_index):
            total = ZERO
            for k in range(n):
                for l in range(n):
                    u = rep[a].entry(k, l)
                    if u:
                        v = rep[b].entry(l, k)
                        if v:
                            total = total + u * v
            gram[p][q] = total
    for i in range(1, n + 1):
        gram[i_index(n, i)][i_index(n, i)] = ONE
    return BilinearForm(gram)


def double_in_gln_basis(n: int, triple: ManinTriple | None = None) -> LieAlgebra:
    """The double's bracket table rewritten in the H, I, F basis."""
    if triple is None:
        triple = build_gln_triple(n)
    double = build_double(triple)
    return double.algebra.change_of_basis(gln_change_of_basis(n), labels=gln_labels(n))


def delta_in_gln_basis(n: int, triple: ManinTriple | None = None) -> Cocommutator:
    """The double's cocommutator transported to the H, I, F basis."""
    if triple is None:
        triple = build_gln_triple(n)
    return express_in_basis(cocommutator_from_triple(triple), gln_change_of_basis(n))


@dataclass
class GlnMatchReport:
    """Outcome of comparing the rebased double with the matrix-built algebra."""

    n: int
    passed: bool
    detail: str = ""


def verify_double_is_gln(n: int) -> GlnMatchReport:
    """Build the triple, double and basis change, then compare tensors exactly."""
    rebased = double_in_gln_basis(n)
    expected = build_gln_tn(n)
    if structure_equal(rebased, expected):
        return GlnMatchReport(n, True)
    got = dict(rebased.tensor.stored())
    want = dict(expected.tensor.stored())
    for key in sorted(set(got) | set(want)):
        if got.get(key) != want.get(key):
            labels = expected.labels
            left = Vector(got.get(key, {})).format(labels)
            right = Vector(want.get(key, {})).format(labels)
            return GlnMatchReport(
                n,
                False,
                f"first differing bracket at pair {key}: built {left}, expected {right}",
            )
    return GlnMatchReport(n, False, "tensors differ only in dimension bookkeeping")


@dataclass
class ChainReport:
    """Embedding gl(m)+t_m -> gl(m+1)+t_{m+1} checked on brackets and deltas."""

    m: int
    passed: bool
    violations: list[Violation] = field(default_factory=list)


def _embedding_map(m: int) -> dict[int, int]:
    big = m + 1
    mapping = {}
    for i in range(1, m + 1):
        mapping[h_index(m, i)] = h_index(big, i)
        mapping[i_index(m, i)] = i_index(big, i)
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            if i != j:
                mapping[f_index(m, i, j)] = f_index(big, i, j)
    return mapping


def check_chain_embedding(m: int) -> ChainReport:
    """Generator-wise inclusion must commute with brackets and cocommutators."""
    small_triple = build_gln_triple(m)
    big_triple = build_gln_triple(m + 1)
    small = double_in_gln_basis(m, small_triple)
    big = double_in_gln_basis(m + 1, big_triple)
    small_delta = delta_in_gln_basis(m, small_triple)
    big_delta = delta_in_gln_basis(m + 1, big_triple)
    emb = _embedding_map(m)
    report = ChainReport(m, True)
    for p in range(small.dim):
        for q in range(p + 1, small.dim):
            pushed: dict[int, Scalar] = {}
            coeffs = small.tensor.pair(p, q)
            if coeffs:
                pushed = {emb[r]: v for r, v in coeffs.items()}
            target = big.tensor.pair(emb[p], emb[q]) or {}
            if pushed != dict(target):
                residual = Vector(dict(target)) - Vector(pushed)
                report.violations.append(
                    Violation((p, q), f"bracket mismatch: {residual.format(big.labels)}")
                )
    for p in range(small.dim):
        small_value = small_delta.get(p)
        pushed_pairs = {
            (emb[a], emb[b]): v for (a, b), v in small_value.items()
        }
        target_value = big_delta.get(emb[p])
        if TwoTensor(pushed_pairs) != target_value:
            residual = target_value - TwoTensor(pushed_pairs)
            report.violations.append(
                Violation((p,), f"cocommutator mismatch: {residual.format(big.labels)}")
            )
    report.passed = not report.violations
    return report
