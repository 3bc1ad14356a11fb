#!/usr/bin/env python3
"""From two algebra files to a verified Drinfeld double.

The smallest interesting case: a pair of 3-dimensional solvable algebras,
dual to each other index-by-index, assembled into a 6-dimensional double
whose brackets, pairing and adjoint-invariance we then verify.
"""

from liedouble import (
    Vector,
    ManinTriple,
    build_double,
    check_ad_invariance,
    check_compatibility,
    check_isotropic_pairing,
    parse_algebra_file,
)

PLUS = """# upper-triangular half: diagonal action with weight 1/sqrt2
algebra splus dim 3
basis Z1 Z2 Z3
[Z1,Z3] = 1/2*sqrt2*Z3
[Z2,Z3] = -1/2*sqrt2*Z3
"""

MINUS = """# dual half: all weights flipped
algebra sminus dim 3
basis z1 z2 z3
[z1,z3] = -1/2*sqrt2*z3
[z2,z3] = 1/2*sqrt2*z3
"""

plus = parse_algebra_file(PLUS).to_algebra()
minus = parse_algebra_file(MINUS).to_algebra()
print("Jacobi on each half:",
      "ok" if plus.check_jacobi().ok and minus.check_jacobi().ok else "violated")

report = check_compatibility(plus.tensor, minus.tensor)
print("Crossed Jacobi compatibility:", "ok" if report.ok else report.violations[:3])

double = build_double(ManinTriple(plus, minus))
alg = double.algebra
print(f"\nThe double has dimension {alg.dim} with basis {' '.join(alg.labels)}")
print("Every bracket of the double:")
for (p, q), coeffs in alg.tensor.stored():
    print(f"  [{alg.labels[p]},{alg.labels[q]}] = {Vector(dict(coeffs)).format(alg.labels)}")

print("\nJacobi on the double:", "ok" if alg.check_jacobi().ok else "violated")
print("Pairing is the hyperbolic block form:", "ok" if check_isotropic_pairing(double).ok else "violated")

invariance = check_ad_invariance(double)
print("Adjoint invariance convention(s) holding globally:", ", ".join(invariance.conventions()))
print("Counterexamples against the opposite sign:",
      len(invariance.anti_invariant_counterexamples))

print("\nWhat happens with an incompatible pair?  Add [z1,z2] = z3:")
broken = parse_algebra_file(MINUS + "[z1,z2] = z3\n").to_algebra()
report = check_compatibility(plus.tensor, broken.tensor)
for violation in report.violations[:4]:
    print(f"  residual at (p,q,s,t) = {violation.indices}: {violation.residual}")
