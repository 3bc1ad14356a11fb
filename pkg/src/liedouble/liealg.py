"""Structure-constant Lie algebras over Q(i, sqrt2).

An algebra is a labelled basis plus a sparse antisymmetric structure tensor:
only pairs (p, q) with p < q are stored, the reversed bracket is implied.
Basis indexing is 0-based internally; display labels carry whatever 1-based
names the caller prefers.

All containers here are treated as immutable after construction and every
operation is a pure function, so values can be shared freely.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .scalars import Scalar, ZERO

__all__ = [
    "Vector",
    "StructureTensor",
    "Matrix",
    "SingularMatrixError",
    "BilinearForm",
    "LieAlgebra",
    "Violation",
    "ViolationReport",
    "abelian",
    "direct_sum",
    "structure_equal",
    "trace_form",
]


def _coerce_scalar(value) -> Scalar:
    if isinstance(value, Scalar):
        return value
    return Scalar(value)


def _format_coeff(coeff: Scalar, label: str) -> str:
    text = str(coeff)
    if text == "1":
        return label
    if text == "-1":
        return "-" + label
    if " " in text:
        text = f"({text})"
    return f"{text}*{label}"


def _join_terms(terms: list[str]) -> str:
    out = terms[0]
    for term in terms[1:]:
        if term.startswith("-"):
            out += " - " + term[1:]
        else:
            out += " + " + term
    return out


class Vector:
    """Sparse vector over basis indices; zero entries are never stored."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        data = {}
        if coeffs:
            for index, value in coeffs.items():
                value = _coerce_scalar(value)
                if value:
                    data[index] = value
        self._c = data

    @classmethod
    def basis(cls, index: int) -> Vector:
        vec = cls()
        vec._c[index] = Scalar(1)
        return vec

    def items(self):
        return sorted(self._c.items())

    def get(self, index: int) -> Scalar:
        return self._c.get(index, ZERO)

    def indices(self):
        return sorted(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Vector):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(tuple(self.items()))

    def __neg__(self) -> Vector:
        return Vector({k: -v for k, v in self._c.items()})

    def __add__(self, other: Vector) -> Vector:
        data = dict(self._c)
        for k, v in other._c.items():
            s = data.get(k)
            s = v if s is None else s + v
            if s:
                data[k] = s
            else:
                data.pop(k, None)
        vec = Vector()
        vec._c = data
        return vec

    def __sub__(self, other: Vector) -> Vector:
        return self + (-other)

    def scale(self, factor) -> Vector:
        factor = _coerce_scalar(factor)
        if not factor:
            return Vector()
        return Vector({k: factor * v for k, v in self._c.items()})

    def format(self, labels) -> str:
        if not self._c:
            return "0"
        return _join_terms([_format_coeff(v, labels[k]) for k, v in self.items()])

    def __repr__(self):
        return f"Vector({dict(self.items())!r})"


class StructureTensor:
    """Antisymmetric bracket table: stored pairs (p, q) with p < q only."""

    __slots__ = ("_stored", "_view")

    def __init__(self, entries):
        stored = {}
        for (p, q), vec in entries.items():
            if p == q:
                raise ValueError(f"diagonal bracket ({p},{p}) is identically zero")
            coeffs = dict(vec.items()) if isinstance(vec, Vector) else dict(vec)
            coeffs = {r: _coerce_scalar(v) for r, v in coeffs.items()}
            coeffs = {r: v for r, v in sorted(coeffs.items()) if v}
            if not coeffs:
                continue
            key, flip = ((p, q), False) if p < q else ((q, p), True)
            if key in stored:
                raise ValueError(f"duplicate bracket declaration for pair {key}")
            stored[key] = {r: -v for r, v in coeffs.items()} if flip else coeffs
        self._stored = dict(sorted(stored.items()))
        view = {}
        for (p, q), coeffs in self._stored.items():
            view[(p, q)] = coeffs
            view[(q, p)] = {r: -v for r, v in coeffs.items()}
        self._view = view

    def pair(self, p: int, q: int):
        """Coefficients of [e_p, e_q], or None when the bracket vanishes.

        The returned mapping is shared internal state; do not mutate it.
        """
        return self._view.get((p, q))

    def stored(self):
        return self._stored.items()

    def max_index(self) -> int:
        top = -1
        for (p, q), coeffs in self._stored.items():
            top = max(top, q)
            top = max(top, max(coeffs))
        return top

    def __eq__(self, other) -> bool:
        if not isinstance(other, StructureTensor):
            return NotImplemented
        return self._stored == other._stored

    def __hash__(self):
        return hash(tuple((k, tuple(v.items())) for k, v in self._stored.items()))

    def __repr__(self):
        return f"StructureTensor({self._stored!r})"


class SingularMatrixError(ValueError):
    pass


class Matrix:
    """Dense exact matrix over Q(i, sqrt2)."""

    __slots__ = ("rows", "cols", "_e")

    def __init__(self, entries):
        self._e = [[_coerce_scalar(v) for v in row] for row in entries]
        self.rows = len(self._e)
        self.cols = len(self._e[0]) if self._e else 0
        if any(len(row) != self.cols for row in self._e):
            raise ValueError("ragged matrix rows")

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls([[Scalar(1) if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Matrix:
        return cls([[ZERO] * cols for _ in range(rows)])

    @classmethod
    def from_columns(cls, dim: int, columns) -> Matrix:
        mat = [[ZERO] * len(columns) for _ in range(dim)]
        for j, col in enumerate(columns):
            for i, v in col.items():
                mat[i][j] = _coerce_scalar(v)
        return cls(mat)

    def entry(self, i: int, j: int) -> Scalar:
        return self._e[i][j]

    def column(self, j: int) -> Vector:
        return Vector({i: self._e[i][j] for i in range(self.rows)})

    def transpose(self) -> Matrix:
        return Matrix([[self._e[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols and self._e == other._e

    def __mul__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError("matrix dimension mismatch")
        out = [[ZERO] * other.cols for _ in range(self.rows)]
        for i in range(self.rows):
            row = self._e[i]
            for k in range(self.cols):
                a = row[k]
                if not a:
                    continue
                other_row = other._e[k]
                for j in range(other.cols):
                    b = other_row[j]
                    if b:
                        out[i][j] = out[i][j] + a * b
        return Matrix(out)

    def apply(self, vec: Vector) -> Vector:
        acc: dict[int, Scalar] = {}
        for j, v in vec.items():
            if j >= self.cols:
                raise IndexError(f"vector index {j} out of range for {self.cols} columns")
            for i in range(self.rows):
                m = self._e[i][j]
                if m:
                    s = acc.get(i)
                    acc[i] = m * v if s is None else s + m * v
        return Vector(acc)

    def trace(self) -> Scalar:
        if self.rows != self.cols:
            raise ValueError("trace of a non-square matrix")
        total = ZERO
        for i in range(self.rows):
            total = total + self._e[i][i]
        return total

    def _eliminated(self, augment: bool):
        n = self.rows
        work = [row[:] for row in self._e]
        aug = [[Scalar(1) if i == j else ZERO for j in range(n)] for i in range(n)] if augment else None
        det = Scalar(1)
        for col in range(n):
            pivot_row = None
            for r in range(col, n):
                if work[r][col]:
                    pivot_row = r
                    break
            if pivot_row is None:
                return None, ZERO
            if pivot_row != col:
                work[col], work[pivot_row] = work[pivot_row], work[col]
                if aug is not None:
                    aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
                det = -det
            pivot = work[col][col]
            det = det * pivot
            inv = pivot.inverse()
            work[col] = [v * inv for v in work[col]]
            if aug is not None:
                aug[col] = [v * inv for v in aug[col]]
            for r in range(n):
                if r == col or not work[r][col]:
                    continue
                factor = work[r][col]
                work[r] = [v - factor * w for v, w in zip(work[r], work[col])]
                if aug is not None:
                    aug[r] = [v - factor * w for v, w in zip(aug[r], aug[col])]
        return aug, det

    def determinant(self) -> Scalar:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        _, det = self._eliminated(augment=False)
        return det

    def inverse(self) -> Matrix:
        if self.rows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        aug, det = self._eliminated(augment=True)
        if aug is None or not det:
            raise SingularMatrixError("matrix is singular")
        return Matrix(aug)

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols})"


class BilinearForm:
    """Symmetric bilinear form given by its exact Gram matrix."""

    __slots__ = ("dim", "_m")

    def __init__(self, matrix):
        if isinstance(matrix, Matrix):
            entries = [[matrix.entry(i, j) for j in range(matrix.cols)] for i in range(matrix.rows)]
        else:
            entries = [[_coerce_scalar(v) for v in row] for row in matrix]
        self.dim = len(entries)
        if any(len(row) != self.dim for row in entries):
            raise ValueError("bilinear form matrix must be square")
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                if entries[i][j] != entries[j][i]:
                    raise ValueError(f"bilinear form not symmetric at ({i},{j})")
        self._m = entries

    def entry(self, i: int, j: int) -> Scalar:
        return self._m[i][j]

    def matrix(self) -> Matrix:
        return Matrix(self._m)

    def evaluate(self, x: Vector, y: Vector) -> Scalar:
        total = ZERO
        for i, xv in x.items():
            row = self._m[i]
            for j, yv in y.items():
                m = row[j]
                if m:
                    total = total + xv * m * yv
        return total

    def determinant(self) -> Scalar:
        return self.matrix().determinant()

    def is_degenerate(self) -> bool:
        return not self.determinant()

    def __eq__(self, other) -> bool:
        if not isinstance(other, BilinearForm):
            return NotImplemented
        return self._m == other._m

    def __repr__(self):
        return f"BilinearForm(dim={self.dim})"


@dataclass(frozen=True)
class Violation:
    """One counterexample: the offending index tuple and its residual."""

    indices: tuple[int, ...]
    residual: str


@dataclass
class ViolationReport:
    check: str
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


class LieAlgebra:
    """Finite-dimensional Lie algebra given by basis labels and brackets."""

    __slots__ = ("dim", "labels", "tensor")

    def __init__(self, labels, tensor: StructureTensor):
        labels = tuple(labels)
        if len(set(labels)) != len(labels):
            raise ValueError("basis labels must be pairwise distinct")
        if tensor.max_index() >= len(labels):
            raise ValueError("structure tensor index out of range")
        self.dim = len(labels)
        self.labels = labels
        self.tensor = tensor

    @classmethod
    def from_brackets(cls, labels, brackets) -> LieAlgebra:
        return cls(labels, StructureTensor(brackets))

    def _check_index(self, index: int):
        if not 0 <= index < self.dim:
            raise IndexError(f"basis index {index} out of range for dimension {self.dim}")

    def bracket_basis(self, p: int, q: int) -> Vector:
        self._check_index(p)
        self._check_index(q)
        coeffs = self.tensor.pair(p, q)
        return Vector(coeffs) if coeffs else Vector()

    def bracket(self, x: Vector, y: Vector) -> Vector:
        acc: dict[int, Scalar] = {}
        for p, xv in x.items():
            self._check_index(p)
            for q, yv in y.items():
                self._check_index(q)
                coeffs = self.tensor.pair(p, q)
                if not coeffs:
                    continue
                factor = xv * yv
                for r, coeff in coeffs.items():
                    term = factor * coeff
                    s = acc.get(r)
                    s = term if s is None else s + term
                    if s:
                        acc[r] = s
                    else:
                        acc.pop(r, None)
        return Vector(acc)

    def check_jacobi(self) -> ViolationReport:
        """Exhaustively test [[e_p,e_q],e_r] + cyclic = 0 over all p<q<r."""
        report = ViolationReport("jacobi")
        pair = self.tensor.pair

        def accumulate(acc, inner, outer_index):
            if not inner:
                return
            for k, coeff in inner.items():
                w = pair(k, outer_index)
                if not w:
                    continue
                for m, c2 in w.items():
                    term = coeff * c2
                    s = acc.get(m)
                    s = term if s is None else s + term
                    if s:
                        acc[m] = s
                    else:
                        acc.pop(m, None)

        for p in range(self.dim):
            for q in range(p + 1, self.dim):
                for r in range(q + 1, self.dim):
                    acc: dict[int, Scalar] = {}
                    accumulate(acc, pair(p, q), r)
                    accumulate(acc, pair(q, r), p)
                    accumulate(acc, pair(r, p), q)
                    if acc:
                        residual = Vector(acc)
                        report.violations.append(
                            Violation((p, q, r), residual.format(self.labels))
                        )
        return report

    def adjoint_matrix(self, p: int) -> Matrix:
        """Matrix of ad(e_p): column q holds [e_p, e_q]."""
        self._check_index(p)
        out = [[ZERO] * self.dim for _ in range(self.dim)]
        for q in range(self.dim):
            coeffs = self.tensor.pair(p, q)
            if coeffs:
                for r, v in coeffs.items():
                    out[r][q] = v
        return Matrix(out)

    def killing_form(self) -> BilinearForm:
        """K(p, q) = trace(ad(e_p) ad(e_q)), computed sparsely."""
        pair = self.tensor.pair
        gram = [[ZERO] * self.dim for _ in range(self.dim)]
        for p in range(self.dim):
            for q in range(p, self.dim):
                total = ZERO
                for l in range(self.dim):
                    w = pair(p, l)
                    if not w:
                        continue
                    for k, a in w.items():
                        bv = pair(q, k)
                        if bv:
                            b = bv.get(l)
                            if b:
                                total = total + a * b
                gram[p][q] = gram[q][p] = total
        return BilinearForm(gram)

    def change_of_basis(self, T: Matrix, labels=None) -> LieAlgebra:
        """Rewrite brackets in the basis whose vectors are the columns of T."""
        if T.rows != self.dim or T.cols != self.dim:
            raise ValueError("change-of-basis matrix has wrong shape")
        T_inv = T.inverse()
        columns = [T.column(j) for j in range(self.dim)]
        brackets = {}
        for p in range(self.dim):
            for q in range(p + 1, self.dim):
                w = self.bracket(columns[p], columns[q])
                if w:
                    new_w = T_inv.apply(w)
                    if new_w:
                        brackets[(p, q)] = {r: v for r, v in new_w.items()}
        return LieAlgebra(labels if labels is not None else self.labels, StructureTensor(brackets))


def abelian(dim: int, labels=None) -> LieAlgebra:
    if labels is None:
        labels = tuple(f"T{k + 1}" for k in range(dim))
    return LieAlgebra(labels, StructureTensor({}))


def direct_sum(a: LieAlgebra, b: LieAlgebra) -> LieAlgebra:
    """Block direct sum; colliding right-hand labels are prefixed."""
    right = list(b.labels)
    taken = set(a.labels)
    while taken & set(right):
        right = ["r_" + label for label in right]
    brackets = {key: dict(vec) for key, vec in a.tensor.stored()}
    offset = a.dim
    for (p, q), vec in b.tensor.stored():
        brackets[(p + offset, q + offset)] = {r + offset: v for r, v in vec.items()}
    return LieAlgebra(tuple(a.labels) + tuple(right), StructureTensor(brackets))


def structure_equal(a: LieAlgebra, b: LieAlgebra) -> bool:
    """Entrywise equality of dimensions and structure tensors; labels ignored."""
    return a.dim == b.dim and a.tensor == b.tensor


def trace_form(rep) -> BilinearForm:
    """Gram matrix B(p, q) = trace(rep[p] * rep[q]) of a matrix representation."""
    rep = list(rep)
    dim = len(rep)
    if dim == 0:
        return BilinearForm([])
    size = rep[0].rows
    for mat in rep:
        if mat.rows != mat.cols or mat.rows != size:
            raise ValueError("representation matrices must be square and equal-sized")
    gram = [[ZERO] * dim for _ in range(dim)]
    for p in range(dim):
        for q in range(p, dim):
            total = ZERO
            for k in range(size):
                for l in range(size):
                    a = rep[p].entry(k, l)
                    if a:
                        b = rep[q].entry(l, k)
                        if b:
                            total = total + a * b
            gram[p][q] = gram[q][p] = total
    return BilinearForm(gram)
