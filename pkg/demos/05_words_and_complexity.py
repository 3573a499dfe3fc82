#!/usr/bin/env python3
"""Sturmian words, subword complexity, and carving a high-complexity subset
out of a slowly-decaying set.

The construction shows a set of density zero whose indicator has
polynomially bounded factor counts can still contain a subset with
exponentially many factors: at each level L, a repeated block pattern is
found by pigeonhole and 2^a of its subsets are removed, leaving 2^a
distinct length-L factors.
"""

import math
from fractions import Fraction as F

from gpnf import (NumberField, density_profile, non_hereditary_construct,
                  sturmian, subword_complexity, surrogate_slow_decay_set)

K2 = NumberField([-2, 0, 1])

# A Sturmian word has the minimal nontrivial complexity p(N) = N + 1.
w = sturmian(K2.beta - 1, 0, 0, 1999)
print("Sturmian word (slope sqrt2 - 1):", "".join(map(str, w.bits[:40])), "...")
print("complexity:", [(N, subword_complexity(w, N)) for N in (1, 5, 10, 25, 40)])

# Densities of familiar sets, exact rationals.
fibs = {0, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233, 377, 610, 987}
prof = density_profile(lambda n: n in fibs, [10, 100, 500])
print("\nFibonacci density profile:", [str(d) for d in prof])

# A surrogate slowly-decaying set: dense prefix, then thinning to zero.
E = surrogate_slow_decay_set(
    lambda N: F(9, 10) if N < 10 ** 4 else F(9, 10) * F(10 ** 4, N))
print("\nsurrogate counts: |E cap [0,100)| =", E.prefix_count(100),
      " |E cap [0,10^4)| =", E.prefix_count(10 ** 4))

# Build the subset F with certified complexity 2^ceil(h(L) L) per level.
plan = non_hereditary_construct(E, lambda L: min(F(1, 2), 1 / math.sqrt(L)), 4)
print("\nconstruction levels:")
for rec in plan.levels:
    print(f"  L={rec.level}: blocks M={rec.M}, window [,{rec.N}), "
          f"repeated block {rec.block_set} at positions {rec.positions[:4]}..., "
          f"p({rec.level}) = {plan.complexity_at(rec.level)} >= {2 ** rec.a}")
print("window length:", plan.N_max, " certified:", plan.certified())
print("removed", len(plan.removed), "points; F stays inside E:",
      all(E(i) for i in range(plan.N_max) if plan.window[i]))
