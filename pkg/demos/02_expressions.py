#!/usr/bin/env python3
"""The expression language: floors, fractional parts, embeddings.

Expressions parse from a small grammar and evaluate exactly over
environments binding variables to rationals or field elements.
"""

from fractions import Fraction as F

from gpnf import (NumberField, eval_expr, parse, pretty, trace_expr,
                  zero_indicator)
from gpnf.genpoly import Var

K2 = NumberField([-2, 0, 1])      # Q(sqrt2)
K = NumberField([-1, -1, 1])      # Q(phi)

# A two-floor difference generates a Sturmian word.
expr = parse("floor(a*(n+1)+b) - floor(a*n+b)")
print("expression:", pretty(expr))
a = K2.beta - 1                   # sqrt2 - 1, irrational slope in (0,1)
word = [eval_expr(expr, {"a": a, "b": 0, "n": n}).as_rational()
        for n in range(20)]
print("word:", "".join(str(v) for v in word))

# The zero indicator: 1 exactly at 0. A real y vanishes iff y and
# sqrt(2) y are both integers, so two floors suffice.
zi = zero_indicator(Var("f"))
print("\nzero indicator:", pretty(zi))
for v in (F(0), F(3), F(-2, 7), K.beta, K.beta - K.beta, K2.beta - 1):
    label = v if isinstance(v, F) else v.coords
    print(f"  f = {label}: {eval_expr(zi, {'f': v}).as_rational()}")

# Trace as a sum over embeddings: collapses to an exact rational.
te = trace_expr(K)
print("\ntrace expression:", pretty(te))
val = eval_expr(te, {"x": K.beta ** 5})
print("trace(phi^5) =", "11" if val.compare_rational(11) == 0 else "??",
      "(Lucas number L_5)")

# Complex floors flow through the same machinery.
Ks = NumberField([1, -1, -1, -1, 1])
cf = parse("cfloor(emb(x, 2))")
v = eval_expr(cf, {"x": Ks.beta})
print("\ncfloor at the circle conjugate:",
      (v.real_part().as_rational(), v.imag_part().as_rational()))

# Values that leave a single field drop to certified real algebraic
# numbers; decisions stay exact.  Here sqrt2 is a built-in constant from
# an auxiliary quadratic field, multiplied against a golden-field value.
cross = parse("floor(sqrt2 * f)")
print("\nfloor(sqrt2 * phi) =",
      eval_expr(cross, {"f": K.beta}).as_rational(), " (~ 2.288)")
print("floor(sqrt2 * sqrt2) recognizes the exact integer:",
      eval_expr(parse("floor(sqrt2 * sqrt2)"), {}).as_rational())
