"""Manin triples and their Drinfeld doubles.

A triple holds two structure tensors f (for s_plus, brackets [Z_p, Z_q] =
f^r_{p,q} Z_r) and c (for s_minus, brackets [z^p, z^q] = c^{p,q}_r z^r)
over bases that are dual index-by-index: <Z_p, z^q> = delta_p^q, with both
halves isotropic.  Construction eagerly verifies the crossed Jacobi
compatibility; the double then carries the crossed brackets

    [z^p, Z_q] = f^p_{q,r} z^r - c^{p,r}_q Z_r

on the 2m-dimensional space ordered Z-block first, z-block second, which
makes the pairing matrix the fixed block form [[0, Id], [Id, 0]].
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .liealg import (
    BilinearForm,
    LieAlgebra,
    StructureTensor,
    Violation,
    ViolationReport,
)
from .scalars import Scalar, ZERO, ONE

__all__ = [
    "CompatibilityError",
    "ManinTriple",
    "DoubleAlgebra",
    "check_compatibility",
    "build_double",
    "check_isotropic_pairing",
    "check_ad_invariance",
    "InvarianceReport",
]


class CompatibilityError(ValueError):
    """Crossed Jacobi compatibility failed; the offending report is attached."""

    def __init__(self, report: ViolationReport):
        first = report.violations[0]
        super().__init__(
            f"{len(report.violations)} crossed-Jacobi violations, first at "
            f"{first.indices}: {first.residual}"
        )
        self.report = report


def _tensor_triples(tensor: StructureTensor):
    """All ((p, q), r, value) over both orientations of stored pairs."""
    out = []
    for (p, q), coeffs in tensor.stored():
        for r, v in coeffs.items():
            out.append((p, q, r, v))
            out.append((q, p, r, -v))
    return out


def check_compatibility(f: StructureTensor, c: StructureTensor) -> ViolationReport:
    """Crossed Jacobi identities between a bracket tensor pair.

    For every index combination (p, q, s, t) the residual

        sum_r [ c^{p,q}_r f^r_{s,t} - c^{p,r}_s f^q_{r,t} - c^{r,q}_s f^p_{r,t}
                - c^{p,r}_t f^q_{s,r} - c^{r,q}_t f^p_{s,r} ]

    must vanish; nonzero residuals are reported sorted lexicographically.
    Both tensors index the same m-dimensional space: f maps bracket pair
    (p, q) to outputs r with value f^r_{p,q}, c maps (p, q) to c^{p,q}_r.
    """
    c_triples = _tensor_triples(c)
    f_triples = _tensor_triples(f)
    f_by_output: dict[int, list] = {}
    f_by_first: dict[int, list] = {}
    f_by_second: dict[int, list] = {}
    for p, q, r, v in f_triples:
        f_by_output.setdefault(r, []).append((p, q, v))
        f_by_first.setdefault(p, []).append((q, r, v))
        f_by_second.setdefault(q, []).append((p, r, v))

    residual: dict[tuple[int, int, int, int], Scalar] = {}

    def add(key, value):
        s = residual.get(key)
        s = value if s is None else s + value
        if s:
            residual[key] = s
        else:
            residual.pop(key, None)

    for cp, cq, cr, cv in c_triples:
        # term 1: + c^{p,q}_r f^r_{s,t}
        for s, t, fv in f_by_output.get(cr, ()):
            add((cp, cq, s, t), cv * fv)
        # term 2: - c^{p,r}_s f^q_{r,t}  (join r = c upper second = f lower first)
        for t, q, fv in f_by_first.get(cq, ()):
            add((cp, q, cr, t), -(cv * fv))
        # term 3: - c^{r,q}_s f^p_{r,t}  (join r = c upper first = f lower first)
        for t, p, fv in f_by_first.get(cp, ()):
            add((p, cq, cr, t), -(cv * fv))
        # term 4: - c^{p,r}_t f^q_{s,r}  (join r = c upper second = f lower second)
        for s, q, fv in f_by_second.get(cq, ()):
            add((cp, q, s, cr), -(cv * fv))
        # term 5: - c^{r,q}_t f^p_{s,r}  (join r = c upper first = f lower second)
        for s, p, fv in f_by_second.get(cp, ()):
            add((p, cq, s, cr), -(cv * fv))

    report = ViolationReport("compatibility")
    for key in sorted(residual):
        report.violations.append(Violation(key, str(residual[key])))
    return report


@dataclass(frozen=True)
class ManinTriple:
    """Index-aligned dual pair of Lie algebras, validated at construction."""

    plus: LieAlgebra
    minus: LieAlgebra

    def __post_init__(self):
        if self.plus.dim != self.minus.dim:
            raise ValueError(
                f"paired algebras must share a dimension, got {self.plus.dim} and {self.minus.dim}"
            )
        report = check_compatibility(self.plus.tensor, self.minus.tensor)
        if not report.ok:
            raise CompatibilityError(report)

    @classmethod
    def unchecked(cls, plus: LieAlgebra, minus: LieAlgebra) -> ManinTriple:
        """Skip compatibility validation (for diagnostics on bad input)."""
        triple = object.__new__(cls)
        object.__setattr__(triple, "plus", plus)
        object.__setattr__(triple, "minus", minus)
        return triple

    @property
    def dim(self) -> int:
        return self.plus.dim


@dataclass(frozen=True)
class DoubleAlgebra:
    """The double: 2m-dimensional algebra plus its hyperbolic pairing."""

    algebra: LieAlgebra
    pairing: BilinearForm
    origin: ManinTriple

    @property
    def half_dim(self) -> int:
        return self.algebra.dim // 2


def _hyperbolic_pairing(m: int) -> BilinearForm:
    gram = [[ZERO] * (2 * m) for _ in range(2 * m)]
    for p in range(m):
        gram[p][m + p] = ONE
        gram[m + p][p] = ONE
    return BilinearForm(gram)


def build_double(triple: ManinTriple) -> DoubleAlgebra:
    """Assemble the double bracket table from the two structure tensors."""
    m = triple.plus.dim
    f = triple.plus.tensor
    c = triple.minus.tensor
    brackets: dict[tuple[int, int], dict[int, Scalar]] = {}
    for (p, q), vec in f.stored():
        brackets[(p, q)] = dict(vec)
    for (p, q), vec in c.stored():
        brackets[(m + p, m + q)] = {m + r: v for r, v in vec.items()}
    for p in range(m):
        for q in range(m):
            acc: dict[int, Scalar] = {}
            # [z^p, Z_q] = f^p_{q,r} z^r - c^{p,r}_q Z_r
            for r in range(m):
                coeffs = f.pair(q, r)
                if coeffs:
                    value = coeffs.get(p)
                    if value:
                        key = m + r
                        s = acc.get(key)
                        s = value if s is None else s + value
                        if s:
                            acc[key] = s
                        else:
                            acc.pop(key, None)
                coeffs = c.pair(p, r)
                if coeffs:
                    value = coeffs.get(q)
                    if value:
                        s = acc.get(r)
                        s = -value if s is None else s - value
                        if s:
                            acc[r] = s
                        else:
                            acc.pop(r, None)
            if acc:
                # stored orientation is [Z_q, z^p] = -[z^p, Z_q]
                brackets[(q, m + p)] = {r: -v for r, v in acc.items()}
    labels = tuple(triple.plus.labels)
    right = list(triple.minus.labels)
    while set(labels) & set(right):
        right = ["r_" + label for label in right]
    algebra = LieAlgebra(labels + tuple(right), StructureTensor(brackets))
    return DoubleAlgebra(algebra, _hyperbolic_pairing(m), triple)


def check_isotropic_pairing(double: DoubleAlgebra) -> ViolationReport:
    """Empty iff the pairing matrix is exactly [[0, Id], [Id, 0]]."""
    report = ViolationReport("isotropic_pairing")
    pairing = double.pairing
    m = double.half_dim
    if pairing.dim != 2 * m:
        report.violations.append(
            Violation((), f"pairing dimension {pairing.dim} != {2 * m}")
        )
        return report
    for p in range(2 * m):
        for q in range(2 * m):
            value = pairing.entry(p, q)
            same_block = (p < m) == (q < m)
            if same_block:
                if value:
                    report.violations.append(
                        Violation((p, q), f"isotropy: {value}")
                    )
            else:
                expected = ONE if (p % m) == (q % m) else ZERO
                if value != expected:
                    report.violations.append(
                        Violation((p, q), f"duality: {value - expected}")
                    )
    if report.violations and not pairing.determinant():
        report.violations.append(Violation((), "nondegeneracy: determinant is 0"))
    report.violations.sort(key=lambda v: v.indices)
    return report


@dataclass
class InvarianceReport:
    """Which of the two pairing-invariance sign conventions hold globally.

    ``invariant`` is <[a,b],c> = <a,[b,c]>, ``anti_invariant`` is
    <[a,b],c> = -<a,[b,c]>; counterexample triples are listed per failing
    convention, sorted lexicographically.
    """

    invariant_holds: bool
    anti_invariant_holds: bool
    invariant_counterexamples: list[Violation] = field(default_factory=list)
    anti_invariant_counterexamples: list[Violation] = field(default_factory=list)

    def conventions(self) -> tuple[str, ...]:
        names = []
        if self.invariant_holds:
            names.append("invariant")
        if self.anti_invariant_holds:
            names.append("anti_invariant")
        return tuple(names)


def check_ad_invariance(double: DoubleAlgebra) -> InvarianceReport:
    """Test both sign conventions of pairing invariance over all basis triples."""
    alg = double.algebra
    pairing = double.pairing
    dim = alg.dim
    pair = alg.tensor.pair

    def paired(coeffs, index) -> Scalar:
        if not coeffs:
            return ZERO
        total = ZERO
        for r, v in coeffs.items():
            m = pairing.entry(r, index)
            if m:
                total = total + v * m
        return total

    plus_bad: list[Violation] = []
    minus_bad: list[Violation] = []
    for a in range(dim):
        for b in range(dim):
            left_coeffs = pair(a, b)
            for cidx in range(dim):
                lhs = paired(left_coeffs, cidx)
                rhs = paired(pair(b, cidx), a)
                if lhs != rhs:
                    plus_bad.append(Violation((a, b, cidx), str(lhs - rhs)))
                if lhs != -rhs:
                    minus_bad.append(Violation((a, b, cidx), str(lhs + rhs)))
    return InvarianceReport(
        invariant_holds=not plus_bad,
        anti_invariant_holds=not minus_bad,
        invariant_counterexamples=plus_bad,
        anti_invariant_counterexamples=minus_bad,
    )
