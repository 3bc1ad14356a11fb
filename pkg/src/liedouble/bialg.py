"""Lie bialgebra layer: cocommutators, classical r-matrices, Schouten bracket.

Wedge convention, fixed repository-wide: a^b = a(x)b - b(x)a, with no 1/2
factor.  A cocommutator maps each basis index to an antisymmetric TwoTensor;
its structure constants double as the bracket table of the dual algebra.

For a Manin triple the canonical r-matrix is r = sum_p z^p (x) Z_p (one
term per index pair, coefficient 1) and its skew part is
r_tilde = (1/2) sum_p z^p ^ Z_p.  The coboundary of r_tilde reproduces the
double's cocommutator exactly; the symmetric part of r is invariant under
the adjoint action, which is why Schouten verdicts are computed on the skew
part alone (the report states this assumption).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .liealg import LieAlgebra, Matrix, Violation, ViolationReport, StructureTensor
from .manin import ManinTriple
from .scalars import Scalar, ZERO, ONE, rational

__all__ = [
    "TwoTensor",
    "ThreeTensor",
    "Cocommutator",
    "cocommutator_from_triple",
    "express_in_basis",
    "dual_algebra",
    "check_cojacobi",
    "check_cocycle",
    "build_rmatrix",
    "coboundary",
    "schouten_bracket",
    "schouten_check",
    "split_twist",
    "identify_central",
    "QuasitriangularReport",
    "TRIANGULAR",
    "QUASITRIANGULAR",
    "NOT_INVARIANT",
]


def _coerce(value) -> Scalar:
    return value if isinstance(value, Scalar) else Scalar(value)


def _add_into(acc: dict, key, value):
    s = acc.get(key)
    s = value if s is None else s + value
    if s:
        acc[key] = s
    else:
        acc.pop(key, None)


class TwoTensor:
    """Sparse element of g (x) g: map from index pair (q, r) to coefficient."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        data = {}
        if coeffs:
            for key, value in coeffs.items():
                value = _coerce(value)
                if value:
                    data[key] = value
        self._c = data

    @classmethod
    def wedge(cls, p: int, q: int, coeff=ONE) -> TwoTensor:
        coeff = _coerce(coeff)
        return cls({(p, q): coeff, (q, p): -coeff})

    def items(self):
        return sorted(self._c.items())

    def get(self, p: int, q: int) -> Scalar:
        return self._c.get((p, q), ZERO)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TwoTensor):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(tuple(self.items()))

    def __add__(self, other: TwoTensor) -> TwoTensor:
        data = dict(self._c)
        for key, value in other._c.items():
            _add_into(data, key, value)
        out = TwoTensor()
        out._c = data
        return out

    def __neg__(self) -> TwoTensor:
        return TwoTensor({k: -v for k, v in self._c.items()})

    def __sub__(self, other: TwoTensor) -> TwoTensor:
        return self + (-other)

    def scale(self, factor) -> TwoTensor:
        factor = _coerce(factor)
        if not factor:
            return TwoTensor()
        return TwoTensor({k: factor * v for k, v in self._c.items()})

    def is_antisymmetric(self) -> bool:
        for (p, q), value in self._c.items():
            if self._c.get((q, p), ZERO) != -value:
                return False
        return True

    def transport(self, inverse_basis_map: Matrix) -> TwoTensor:
        """Rewrite coordinates through the inverse change-of-basis matrix."""
        columns: dict[int, list] = {}

        def column(index):
            col = columns.get(index)
            if col is None:
                col = [
                    (k, inverse_basis_map.entry(k, index))
                    for k in range(inverse_basis_map.rows)
                    if inverse_basis_map.entry(k, index)
                ]
                columns[index] = col
            return col

        acc: dict[tuple[int, int], Scalar] = {}
        for (p, q), value in self._c.items():
            for k, left in column(p):
                for l, right in column(q):
                    _add_into(acc, (k, l), value * left * right)
        return TwoTensor(acc)

    def format(self, labels) -> str:
        if not self._c:
            return "0"
        parts = []
        for (p, q), value in self.items():
            term = f"{labels[p]}(x){labels[q]}"
            text = str(value)
            if text == "1":
                parts.append(term)
            elif text == "-1":
                parts.append("-" + term)
            else:
                if " " in text:
                    text = f"({text})"
                parts.append(f"{text}*{term}")
        out = parts[0]
        for piece in parts[1:]:
            out += " - " + piece[1:] if piece.startswith("-") else " + " + piece
        return out

    def __repr__(self):
        return f"TwoTensor({dict(self.items())!r})"


class ThreeTensor:
    """Sparse element of g (x) g (x) g, not antisymmetrized."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        data = {}
        if coeffs:
            for key, value in coeffs.items():
                value = _coerce(value)
                if value:
                    data[key] = value
        self._c = data

    def items(self):
        return sorted(self._c.items())

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ThreeTensor):
            return NotImplemented
        return self._c == other._c

    def format(self, labels) -> str:
        if not self._c:
            return "0"
        parts = []
        for (p, q, r), value in self.items():
            text = str(value)
            if " " in text:
                text = f"({text})"
            parts.append(f"{text}*{labels[p]}(x){labels[q]}(x){labels[r]}")
        return " + ".join(parts)

    def __repr__(self):
        return f"ThreeTensor({dict(self.items())!r})"


class Cocommutator:
    """Map from basis index to an antisymmetric TwoTensor; zeros omitted."""

    __slots__ = ("dim", "_entries")

    def __init__(self, dim: int, entries=None):
        self.dim = dim
        data = {}
        if entries:
            for index, tensor in entries.items():
                if not isinstance(tensor, TwoTensor):
                    tensor = TwoTensor(tensor)
                if tensor:
                    if not tensor.is_antisymmetric():
                        raise ValueError(f"cocommutator value at index {index} is not antisymmetric")
                    data[index] = tensor
        self._entries = data

    def get(self, index: int) -> TwoTensor:
        return self._entries.get(index, TwoTensor())

    def items(self):
        return sorted(self._entries.items())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cocommutator):
            return NotImplemented
        return self.dim == other.dim and self._entries == other._entries

    def __repr__(self):
        return f"Cocommutator(dim={self.dim}, entries={len(self._entries)})"


def cocommutator_from_triple(triple: ManinTriple) -> Cocommutator:
    """Double cocommutator: delta(Z_p) = -c^{q,r}_p Z_q (x) Z_r and
    delta(z^p) = f^p_{q,r} z^q (x) z^r, in double indices (Z-block first)."""
    m = triple.plus.dim
    entries: dict[int, dict] = {}
    for (q, r), vec in triple.minus.tensor.stored():
        # stored entry: c^{q,r}_p for each output p
        for p, value in vec.items():
            acc = entries.setdefault(p, {})
            _add_into(acc, (q, r), -value)
            _add_into(acc, (r, q), value)
    for (q, r), vec in triple.plus.tensor.stored():
        # stored entry: f^p_{q,r} for each output p
        for p, value in vec.items():
            acc = entries.setdefault(m + p, {})
            _add_into(acc, (m + q, m + r), value)
            _add_into(acc, (m + r, m + q), -value)
    return Cocommutator(2 * m, {k: TwoTensor(v) for k, v in entries.items()})


def express_in_basis(delta: Cocommutator, T: Matrix) -> Cocommutator:
    """Transport a cocommutator through the change of basis with matrix T.

    Consistent with LieAlgebra.change_of_basis: the new basis vectors are
    the columns of T in the old basis, arguments pull back through T and
    output pairs push forward through T^{-1}.
    """
    if T.rows != delta.dim or T.cols != delta.dim:
        raise ValueError("change-of-basis matrix has wrong shape")
    T_inv = T.inverse()
    entries = {}
    for j in range(delta.dim):
        acc: dict[tuple[int, int], Scalar] = {}
        for i, weight in T.column(j).items():
            value = delta.get(i)
            if not value:
                continue
            for key, coeff in value.items():
                _add_into(acc, key, weight * coeff)
        if acc:
            entries[j] = TwoTensor(acc).transport(T_inv)
    return Cocommutator(delta.dim, entries)


def dual_algebra(delta: Cocommutator, labels=None) -> LieAlgebra:
    """The algebra on the dual space whose brackets are delta's constants."""
    if labels is None:
        labels = tuple(f"d{k}" for k in range(delta.dim))
    brackets: dict[tuple[int, int], dict[int, Scalar]] = {}
    for p, tensor in delta.items():
        for (q, r), value in tensor.items():
            if q < r:
                brackets.setdefault((q, r), {})[p] = value
    return LieAlgebra(labels, StructureTensor(brackets))


def check_cojacobi(delta: Cocommutator, labels=None) -> ViolationReport:
    """Jacobi identity for the dual bracket read off from delta."""
    report = dual_algebra(delta, labels).check_jacobi()
    report.check = "cojacobi"
    return report


def _act_on_two_tensor(alg: LieAlgebra, x: int, tensor: TwoTensor) -> TwoTensor:
    """(ad_x (x) 1 + 1 (x) ad_x) applied to a TwoTensor, x a basis index."""
    pair = alg.tensor.pair
    acc: dict[tuple[int, int], Scalar] = {}
    for (p, q), value in tensor.items():
        w = pair(x, p)
        if w:
            for k, coeff in w.items():
                _add_into(acc, (k, q), value * coeff)
        w = pair(x, q)
        if w:
            for k, coeff in w.items():
                _add_into(acc, (p, k), value * coeff)
    return TwoTensor(acc)


def check_cocycle(alg: LieAlgebra, delta: Cocommutator) -> ViolationReport:
    """1-cocycle condition: delta([x,y]) = ad_x.delta(y) - ad_y.delta(x)."""
    if delta.dim != alg.dim:
        raise ValueError("cocommutator dimension does not match the algebra")
    report = ViolationReport("cocycle")
    for p in range(alg.dim):
        for q in range(p + 1, alg.dim):
            lhs_acc: dict[tuple[int, int], Scalar] = {}
            coeffs = alg.tensor.pair(p, q)
            if coeffs:
                for r, value in coeffs.items():
                    for key, coeff in delta.get(r).items():
                        _add_into(lhs_acc, key, value * coeff)
            lhs = TwoTensor(lhs_acc)
            rhs = _act_on_two_tensor(alg, p, delta.get(q)) - _act_on_two_tensor(
                alg, q, delta.get(p)
            )
            residual = lhs - rhs
            if residual:
                report.violations.append(
                    Violation((p, q), residual.format(alg.labels))
                )
    return report


def build_rmatrix(triple: ManinTriple) -> tuple[TwoTensor, TwoTensor]:
    """The canonical element sum_p z^p (x) Z_p and its skew half."""
    m = triple.plus.dim
    half = rational(1, 2)
    r = TwoTensor({(m + p, p): ONE for p in range(m)})
    r_skew = TwoTensor(
        {key: value for p in range(m) for key, value in (((m + p, p), half), ((p, m + p), -half))}
    )
    return r, r_skew


def coboundary(alg: LieAlgebra, r_skew: TwoTensor) -> Cocommutator:
    """delta(x) = (ad_x (x) 1 + 1 (x) ad_x)(r_skew) on every basis element."""
    entries = {}
    for x in range(alg.dim):
        value = _act_on_two_tensor(alg, x, r_skew)
        if value:
            entries[x] = value
    return Cocommutator(alg.dim, entries)


TRIANGULAR = "triangular"
QUASITRIANGULAR = "quasitriangular"
NOT_INVARIANT = "not_invariant"

_SCHOUTEN_ASSUMPTION = (
    "verdict computed on the skew part; the symmetric part of the canonical "
    "element is adjoint-invariant and does not affect it"
)


@dataclass
class QuasitriangularReport:
    """Schouten bracket of r with itself plus its adjoint-invariance verdict."""

    verdict: str
    schouten: ThreeTensor
    violations: list[Violation] = field(default_factory=list)
    assumption: str = _SCHOUTEN_ASSUMPTION

    @property
    def ok(self) -> bool:
        return self.verdict != NOT_INVARIANT


def schouten_bracket(alg: LieAlgebra, r: TwoTensor, s: TwoTensor | None = None) -> ThreeTensor:
    """[[r, s]] = [r_12, s_13] + [r_12, s_23] + [r_13, s_23] (+ r<->s when distinct)."""
    if s is None or s is r:
        left = right = list(r.items())
        symmetric = True
    else:
        left = list(r.items())
        right = list(s.items())
        symmetric = False
    pair = alg.tensor.pair
    acc: dict[tuple[int, int, int], Scalar] = {}

    def accumulate(first, second):
        for (a1, b1), v1 in first:
            for (a2, b2), v2 in second:
                coeff = v1 * v2
                w = pair(a1, a2)
                if w:
                    for k, cv in w.items():
                        _add_into(acc, (k, b1, b2), coeff * cv)
                w = pair(b1, a2)
                if w:
                    for k, cv in w.items():
                        _add_into(acc, (a1, k, b2), coeff * cv)
                w = pair(b1, b2)
                if w:
                    for k, cv in w.items():
                        _add_into(acc, (a1, a2, k), coeff * cv)

    accumulate(left, right)
    if not symmetric:
        accumulate(right, left)
    return ThreeTensor(acc)


def schouten_check(alg: LieAlgebra, r_skew: TwoTensor) -> QuasitriangularReport:
    """Compute [[r, r]] and test its invariance under every ad_x (x basis)."""
    schouten = schouten_bracket(alg, r_skew)
    pair = alg.tensor.pair
    violations: list[Violation] = []
    for x in range(alg.dim):
        acc: dict[tuple[int, int, int], Scalar] = {}
        for (p, q, r), value in schouten.items():
            w = pair(x, p)
            if w:
                for k, cv in w.items():
                    _add_into(acc, (k, q, r), value * cv)
            w = pair(x, q)
            if w:
                for k, cv in w.items():
                    _add_into(acc, (p, k, r), value * cv)
            w = pair(x, r)
            if w:
                for k, cv in w.items():
                    _add_into(acc, (p, q, k), value * cv)
        if acc:
            violations.append(
                Violation((x,), ThreeTensor(acc).format(alg.labels))
            )
    if violations:
        verdict = NOT_INVARIANT
    elif schouten:
        verdict = QUASITRIANGULAR
    else:
        verdict = TRIANGULAR
    return QuasitriangularReport(verdict, schouten, violations)


def _classify_index(n: int, index: int) -> str:
    """Block of a flattened gl(n)+t_n basis index: H, I or F."""
    if index < 0 or index >= n * n + n:
        raise ValueError(f"index {index} outside the gl({n})+t_{n} basis")
    if index < n:
        return "H"
    if index < 2 * n:
        return "I"
    return "F"


def split_twist(n: int, r_skew: TwoTensor) -> tuple[TwoTensor, TwoTensor]:
    """Split a skew r-matrix over the H/I/F basis layout of gl(n)+t_n.

    Returns (r_s, r_t): r_s collects the F^F terms, r_t the H^I terms.
    Index layout: H-block [0, n), I-block [n, 2n), F-block [2n, n^2+n).
    Any term outside both patterns signals malformed input.
    """
    standard: dict[tuple[int, int], Scalar] = {}
    twist: dict[tuple[int, int], Scalar] = {}
    for (p, q), value in r_skew.items():
        kinds = {_classify_index(n, p), _classify_index(n, q)}
        if kinds == {"F"}:
            standard[(p, q)] = value
        elif kinds == {"H", "I"}:
            twist[(p, q)] = value
        else:
            raise ValueError(
                f"term at {(p, q)} (blocks {sorted(kinds)}) fits neither the "
                "F^F nor the H^I pattern"
            )
    return TwoTensor(standard), TwoTensor(twist)


def identify_central(n: int, tensor: TwoTensor) -> TwoTensor:
    """Quotient map sending every central generator I_i to one common I.

    All I-block indices [n, 2n) collapse onto index n; H and F indices are
    unchanged.  The image of a wedge F^(I_i - I_j) is zero, which is the
    operational sense in which the twist becomes trivial.
    """

    def image(index: int) -> int:
        return n if _classify_index(n, index) == "I" else index

    acc: dict[tuple[int, int], Scalar] = {}
    for (p, q), value in tensor.items():
        _add_into(acc, (image(p), image(q)), value)
    return TwoTensor(acc)
