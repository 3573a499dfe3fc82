#!/usr/bin/env python3
"""Number fields with certified embeddings: a walkthrough.

Everything below is exact. Enclosures are rational intervals that provably
contain the value; integer decisions (floor, nearest integer) are settled
by refinement plus exact field equality, never by rounding.
"""

from fractions import Fraction as F

from gpnf import (NumberField, certified_dist, certified_floor,
                  certified_frac, certified_nint, complex_floor)

# The golden ratio field: x^2 - x - 1, coefficients ascending.
K = NumberField([-1, -1, 1])
phi = K.beta
print("field:", K)
print("signature (real, complex-pair embeddings):", K.signature)
print("distinguished root index:", K.distinguished)

# Exact arithmetic in the power basis: phi^2 = phi + 1, 1/phi = phi - 1.
print("\nphi * phi =", (phi * phi).coords)
print("1 / phi   =", (1 / phi).coords)
print("phi^10    =", (phi ** 10).coords, " (Fibonacci pairs)")

# Trace and norm come from the multiplication matrix: no floating point.
print("\ntrace(phi) =", phi.trace(), "  norm(phi) =", phi.norm())
print("char poly of phi:", phi.char_poly())
print("phi is an algebraic integer:", phi.is_algebraic_integer())
print("phi/2 is an algebraic integer:", (phi * F(1, 2)).is_algebraic_integer())

# Certified enclosures at any precision.
box = phi.embed(prec_bits=60)
print("\nphi in", box, "~", box.approx_str(15))
conj = phi.embed(0, 30)
print("conjugate in", conj.approx_str(10))

# Integer-part primitives: exact, including ties.
print("\nfloor(phi) =", certified_floor(phi))
print("nint(phi)  =", certified_nint(phi))
print("frac(phi)  =", certified_frac(phi).coords, " (= phi - 1)")
print("dist(phi)  =", certified_dist(phi).coords, " (= 2 - phi ~ 0.382)")
print("nint(5/2)  =", certified_nint(K.element(F(5, 2))), " (halves round up)")

# A field with complex embeddings: the smallest Salem polynomial's quartic.
Ks = NumberField([1, -1, -1, -1, 1])
beta = Ks.beta
print("\nSalem quartic field:", Ks.signature, "degree", Ks.degree)
for j in range(4):
    b = Ks.root_box(j, F(1, 2 ** 40))
    print(f"  conjugate {j}:", b.approx_str(12))

# The complex floor works componentwise and exactly, even on the pair of
# conjugates that sits exactly on the unit circle.
print("complex floor of the circle conjugate:", complex_floor(beta, 2))
