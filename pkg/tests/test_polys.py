import random
from fractions import Fraction as F

import pytest

from gpnf import polys as P


def test_mk_normalizes():
    assert P.mk([1, 2, 0, 0]) == (F(1), F(2))
    assert P.mk([0]) == ()
    assert P.degree(()) == -1
    assert P.degree(P.mk([3])) == 0


def test_arithmetic_ring_axioms():
    rng = random.Random(5)
    for _ in range(60):
        a, b, c = (P.mk([rng.randint(-5, 5) for _ in range(rng.randint(0, 5))])
                   for _ in range(3))
        assert P.mul(P.add(a, b), c) == P.add(P.mul(a, c), P.mul(b, c))
        assert P.mul(a, b) == P.mul(b, a)


def test_divmod_roundtrip():
    rng = random.Random(6)
    for _ in range(50):
        a = P.mk([rng.randint(-9, 9) for _ in range(rng.randint(1, 7))])
        b = P.mk([rng.randint(-9, 9) for _ in range(rng.randint(1, 5))])
        if P.is_zero(b):
            continue
        q, r = P.divmod_(a, b)
        assert P.add(P.mul(q, b), r) == a
        assert P.degree(r) < P.degree(b)


def test_gcd_and_squarefree():
    x2m1 = P.mk([-1, 0, 1])               # (x-1)(x+1)
    xm1 = P.mk([-1, 1])
    assert P.gcd(x2m1, xm1) == P.monic(xm1)
    sq = P.mul(xm1, xm1)
    assert not P.is_squarefree(sq)
    assert P.squarefree_part(sq) == P.monic(xm1)
    assert P.is_squarefree(P.mk([-1, -1, 1]))


def test_eval_and_compose():
    p = P.mk([1, 2, 3])                    # 3x^2 + 2x + 1
    assert P.eval_at(p, F(2)) == 17
    q = P.compose(p, P.mk([1, 1]))         # p(x+1)
    assert P.eval_at(q, F(1)) == P.eval_at(p, F(2))


@pytest.mark.parametrize("coeffs,expected", [
    ([-1, -1, 1], 2),          # golden ratio: two real roots
    ([1, 0, 1], 0),            # x^2 + 1
    ([-1, -1, 0, 1], 1),       # plastic cubic
    ([1, -1, -1, -1, 1], 2),   # Salem quartic
])
def test_count_real_roots(coeffs, expected):
    assert P.count_real_roots(P.mk(coeffs)) == expected


def test_isolation_brackets_roots():
    # oracle: known closed forms
    import math
    p = P.mk([-1, -1, 1])
    ivs = P.isolate_real_roots(p)
    assert len(ivs) == 2
    phi = (1 + math.sqrt(5)) / 2
    vals = sorted([(1 - math.sqrt(5)) / 2, phi])
    for (lo, hi), v in zip(ivs, vals):
        assert float(lo) <= v <= float(hi)


def test_refine_root_converges():
    p = P.mk([-2, 0, 1])
    (lo, hi) = P.isolate_real_roots(p)[1]
    lo, hi = P.refine_root(p, lo, hi, F(1, 2 ** 300))
    assert hi - lo <= F(1, 2 ** 300)
    mid = (lo + hi) / 2
    assert abs(mid * mid - 2) < F(1, 2 ** 250)


def test_refine_root_rational_root():
    p = P.mk([-4, 0, 1])                   # roots +-2
    ivs = P.isolate_real_roots(p)
    lo, hi = P.refine_root(p, *ivs[1], F(1, 2 ** 40))
    assert hi - lo <= F(1, 2 ** 40)
    assert lo <= 2 <= hi


def test_resultant_vs_sympy():
    import sympy
    x = sympy.symbols("x")
    rng = random.Random(7)
    for _ in range(15):
        a = P.mk([rng.randint(-4, 4) for _ in range(rng.randint(2, 5))])
        b = P.mk([rng.randint(-4, 4) for _ in range(rng.randint(2, 5))])
        if P.degree(a) < 1 or P.degree(b) < 1:
            continue
        pa = sum(int(c) * x ** i for i, c in enumerate(a))
        pb = sum(int(c) * x ** i for i, c in enumerate(b))
        assert P.resultant(a, b) == sympy.resultant(pa, pb, x)


def test_sum_poly_kills_sums():
    # roots of x^2-2 and x^2-3: sums +-sqrt2 +- sqrt3 are roots of the resolvent
    import math
    A, B = P.mk([-2, 0, 1]), P.mk([-3, 0, 1])
    S = P.sum_poly(A, B)
    for s1 in (1, -1):
        for s2 in (1, -1):
            v = s1 * math.sqrt(2) + s2 * math.sqrt(3)
            acc = 0.0
            for c in reversed(S):
                acc = acc * v + float(c)
            assert abs(acc) < 1e-6


def test_prod_poly_kills_products():
    import math
    A, B = P.mk([-2, 0, 1]), P.mk([-3, 0, 1])
    Q = P.prod_poly(A, B)
    v = math.sqrt(6)
    acc = 0.0
    for c in reversed(Q):
        acc = acc * v + float(c)
    assert abs(acc) < 1e-6


def test_prod_poly_zero_root():
    A = P.mk([0, 1])        # root 0
    B = P.mk([-3, 0, 1])
    Q = P.prod_poly(A, B)
    assert P.eval_at(Q, F(0)) == 0


def test_discriminant():
    assert P.discriminant(P.mk([-1, -1, 1])) == 5
    assert P.discriminant(P.mk([-2, 0, 1])) == 8


def test_cauchy_bound_contains_roots():
    p = P.mk([-1, -1, 1])
    b = P.cauchy_bound(p)
    for lo, hi in P.isolate_real_roots(p):
        assert -b <= lo and hi <= b
