#!/usr/bin/env python3
"""Pisot units, Salem numbers, and hereditary power sets.

The centerpiece: for a rank-one Pisot unit beta and ANY index set I with a
decidability certificate, membership in {beta^i : i in I} is decided
exactly — power detection by certified logarithm plus exact power
comparison, index membership by comparing the distance of gamma^j xi to
the nearest integer against (2/3) dist(beta).
"""

from fractions import Fraction as F

from gpnf import (IndexSet, NumberField, PisotSetSpec, choose_m,
                  hereditary_predicate, lattice_indicator, pisot_unit_test,
                  power_set_predicate, salem_test, unit_indicator)

K = NumberField([-1, -1, 1])
phi = K.beta

# Classical indicators.
lat = lattice_indicator(K, [K.one, phi])     # Z[phi]
units = unit_indicator(K)
print("Z[phi] membership:  phi ->", lat(phi), "  phi/2 ->", lat(phi * F(1, 2)))
print("unit group:         phi ->", units(phi), "  2 ->", units(K.element(2)))

# Detectors, with exact resolution of unit-circle ties.
print("\npisot_unit_test(phi) =", pisot_unit_test(phi))
print("pisot_unit_test(1/phi) =", pisot_unit_test(phi - 1), " (0.618 < 1)")
Ks = NumberField([1, -1, -1, -1, 1])
print("salem_test(quartic beta) =", salem_test(Ks.beta))
print("pisot_unit_test(quartic beta) =", pisot_unit_test(Ks.beta),
      " (circle conjugates disqualify)")

# The powers of phi, recognized exactly.
pred = power_set_predicate(phi)
print("\npowers of phi: phi^7 ->", pred(phi ** 7),
      "  2 phi ->", pred(2 * phi),
      "  exponent of phi^23:", pred.exponent_of(phi ** 23))

# How large must the dilation be? The explicit bound chain answers.
m = choose_m(phi, F(3, 2))
print("\nchoose_m(phi, rho=3/2) =", m)

# Hereditary membership for the even-index subset of the powers.
spec = PisotSetSpec.create(phi, IndexSet.evens(), rho=F(3, 2))
hp = hereditary_predicate(spec)
print("\n{phi^i : i even}:")
print("  ", [(i, hp(phi ** i)) for i in range(10)])

# Any index set with a certificate works, including finite and periodic.
for I in (IndexSet.finite([0, 2, 5]), IndexSet.periodic(3, [1])):
    hp2 = hereditary_predicate(PisotSetSpec.create(phi, I, rho=F(3, 2)))
    print(f"  I = {I}:", [hp2(phi ** i) for i in range(8)])

# The CLI exposes the same machinery:
#   gpnf pisot-set --minpoly "1,-1,-1" --indices-mod 2,0 --query "1,1" --explain
