#!/usr/bin/env python3
"""Linear recurrent sequences: stepping, transfer, Salem recovery.

Pisot sequences step forward by a single nearest-integer multiplication
once past a certified onset; Salem sequences give back the exact power
beta^i from a window of terms, and a finite family of floor-corrected
maps recovers it from one term alone.
"""

from gpnf import (LinRecSeq, salem_recover_exact, salem_recovery_family,
                  sml_zeros, trace_representation, transfer_map,
                  value_set_membership, verified_i0, pisot_step)

fib = LinRecSeq([-1, -1, 1], [0, 1])
luc = LinRecSeq([-1, -1, 1], [2, 1])
phi = fib.field.beta

print("Fibonacci:", [int(fib.term(i)) for i in range(12)])
print("trace representation x with F_i = Tr(phi^i x):",
      trace_representation(fib).coords, " (= (2 phi - 1)/5)")

# The stepping law F_{i+1} = nint(phi F_i) holds from a certified onset.
i0 = verified_i0(fib, 1)
print("\nverified onset for j=1:", i0)
print("pre-onset failure: nint(phi * F_1) =", pisot_step(phi, 1, 1),
      " but F_2 = 1")
print("beyond onset: nint(phi * F_6) =", pisot_step(phi, 1, fib.term(6)),
      " = F_7 =", fib.term(7))

# Transfer between sequences sharing the recurrence: L_i = -F_i + 2 F_{i+1}.
tm = transfer_map(fib, luc)
print("\ntransfer Fibonacci -> Lucas: w =", [str(c) for c in tm.coeffs],
      " onset", tm.onset)
print("g(F_9 = 34) =", tm.apply(34), " = L_9 =", luc.term(9))

# Exact value-set membership through the transfer + power-set route.
print("\nis 21 a Fibonacci number?", value_set_membership(fib, 21))
print("is 22?", value_set_membership(fib, 22))

# A Salem sequence: power sums of the quartic x^4 - x^3 - x^2 - x + 1.
sal = LinRecSeq([1, -1, -1, -1, 1], [4, 1, 3, 7])
beta = sal.field.beta
print("\nSalem power sums:", [int(sal.term(i)) for i in range(10)])
print("recover beta^5 from the window:",
      salem_recover_exact(sal, 5) == beta ** 5)

# The correction family: floors of beta^j n, corrected by bounded integers.
fam = salem_recovery_family(sal, range(0, 21))
print("correction bounds C_j:", fam.bounds,
      " candidate tuples:", fam.candidate_count)
print("correction tuple at i=0:", [str(c) for c in fam.correction_tuple(0)])
print("is 16 a value?", value_set_membership(sal, 16),
      "  is 15?", value_set_membership(sal, 15))

# Desk-scale zero scanning (the classical structure shows up immediately).
parity = LinRecSeq([-1, 0, 1], [2, 0])          # 1 + (-1)^i
print("\nzeros of 1+(-1)^i up to 100:",
      sml_zeros(parity, 100).progressions, "(full odd class)")
perrin = LinRecSeq([-1, -1, 0, 1], [3, 0, 2])
print("Perrin zeros on [0, 10^4]:", sml_zeros(perrin, 10 ** 4).zeros)
