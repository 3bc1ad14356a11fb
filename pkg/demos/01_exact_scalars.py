#!/usr/bin/env python3
"""Tour of the exact coefficient field Q(i, sqrt2).

Everything in this library computes over four-component scalars
a + b*sqrt2 + c*i + d*i*sqrt2 with rational a, b, c, d.  There is no
floating point anywhere: equality always means equality.
"""

from liedouble import HALF_SQRT2, I_UNIT, ONE, SQRT2, Scalar, scalar_parse

print("The four basis directions: 1, sqrt2, i, i*sqrt2")
x = scalar_parse("1/2 + 1/2*sqrt2")
print(f"  parse('1/2 + 1/2*sqrt2') -> {x}")
print(f"  components a={x.a}, b={x.b}, c={x.c}, d={x.d}")

print("\nMultiplication respects (sqrt2)^2 = 2 and i^2 = -1:")
print(f"  (1/sqrt2)^2      = {HALF_SQRT2 * HALF_SQRT2}")
print(f"  i * i            = {I_UNIT * I_UNIT}")
print(f"  (1+i*sqrt2)(1-i*sqrt2) = {(ONE + I_UNIT * SQRT2) * (ONE - I_UNIT * SQRT2)}")

print("\nEvery nonzero element has an exact inverse:")
for text in ("sqrt2", "i", "1+i", "3/4 - 1/2*i*sqrt2"):
    value = scalar_parse(text)
    inverse = value.inverse()
    print(f"  1/({text})  =  {inverse}    check: product = {value * inverse}")

print("\nParsing is whitespace-insensitive and canonicalizing:")
for text in ("2/4", "i*i", "(1 + i) * (1 - i)", "sqrt2*sqrt2*sqrt2", "1/sqrt2"):
    print(f"  {text!r:28} -> {scalar_parse(text)}")

print("\nCanonical printing round-trips: parse(str(x)) == x")
sample = Scalar(-1, 1, -1, 1)
print(f"  {sample} -> reparsed equal: {scalar_parse(str(sample)) == sample}")
