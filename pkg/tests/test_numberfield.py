import random
from fractions import Fraction as F

import pytest

from conftest import durand_kerner, embed_floats, random_element
from gpnf import polys
from gpnf.errors import (ComplexEmbedding, DivisionByZero, FieldMismatch,
                         NoRealRoot, NotSquarefree, ReducibleDetected)
from gpnf.numberfield import (NumberField, certified_ceil, certified_dist,
                              certified_floor, certified_frac, certified_nint,
                              compare_elements)


# -- construction -------------------------------------------------------------

def test_create_golden(K_phi):
    assert K_phi.degree == 2
    assert K_phi.signature == (2, 0)
    b0 = K_phi.root_box(0, F(1, 2 ** 30))
    b1 = K_phi.root_box(1, F(1, 2 ** 30))
    assert float(b1.mid) == pytest.approx(1.6180339887, abs=1e-8)
    assert float(b0.mid) == pytest.approx(-0.6180339887, abs=1e-8)
    assert K_phi.distinguished == 1


def test_create_gaussian():
    K = NumberField([1, 0, 1])
    assert K.signature == (0, 1)
    assert not K.is_real_root(0)


def test_not_squarefree():
    with pytest.raises(NotSquarefree):
        NumberField([1, -2, 1])   # (x-1)^2


def test_reducible_detected():
    with pytest.raises(ReducibleDetected):
        NumberField([-1, 0, 1])   # (x-1)(x+1)
    with pytest.raises(ReducibleDetected):
        NumberField([2, 3, 1])    # (x+1)(x+2)


def test_no_real_root_error():
    with pytest.raises(NoRealRoot):
        NumberField([1, 0, 1], require_real_distinguished=True)


def test_degree_one_field():
    K = NumberField([-3, 2])     # 2x - 3
    assert K.degree == 1
    assert K.beta == F(3, 2)
    assert certified_floor(K.beta) == 1


def test_canonical_root_order(K_salem):
    # real roots ascending first, then the complex pair, upper first
    assert K_salem.is_real_root(0) and K_salem.is_real_root(1)
    r0 = K_salem.root_box(0, F(1, 1000)).mid
    r1 = K_salem.root_box(1, F(1, 1000)).mid
    assert r0 < r1
    up = K_salem.root_box(2, F(1, 1000))
    lo = K_salem.root_box(3, F(1, 1000))
    assert up.im.lo > 0 and lo.im.hi < 0
    assert K_salem.conj_index(2) == 3 and K_salem.conj_index(3) == 2


def test_distinguished_prefers_positive_on_tie(K_sqrt2):
    # |sqrt2| = |-sqrt2|: the positive root wins
    box = K_sqrt2.root_box(K_sqrt2.distinguished, F(1, 1000))
    assert box.lo > 0


def test_root_boxes_disjoint_and_contain_roots(K_plastic, K_salem):
    for K in (K_plastic, K_salem):
        floats = durand_kerner(K.monic_minpoly)
        boxes = [K.root_box(j, F(1, 2 ** 40)) for j in range(K.degree)]
        # every float root lies in exactly one box
        for r in floats:
            hits = 0
            for b in boxes:
                if hasattr(b, "re"):
                    if (b.re.lo - F(1, 10 ** 6) <= F(r.real) <= b.re.hi + F(1, 10 ** 6)
                            and b.im.lo - F(1, 10 ** 6) <= F(r.imag) <= b.im.hi + F(1, 10 ** 6)):
                        hits += 1
                else:
                    if abs(r.imag) < 1e-9 and b.lo - F(1, 10 ** 6) <= F(r.real) <= b.hi + F(1, 10 ** 6):
                        hits += 1
            assert hits == 1


# -- arithmetic ----------------------------------------------------------------

def test_defining_relation(K_phi):
    phi = K_phi.beta
    assert phi * phi == phi + 1


def test_inverse(K_phi):
    phi = K_phi.beta
    inv = 1 / phi
    assert inv == phi - 1
    assert inv * phi == 1


def test_additive_inverse(K_phi):
    phi = K_phi.beta
    assert (phi + (-phi)).is_zero()


def test_division_by_zero(K_phi):
    with pytest.raises(DivisionByZero):
        K_phi.one / K_phi.zero


def test_field_mismatch(K_phi, K_sqrt2):
    with pytest.raises(FieldMismatch):
        K_phi.beta + K_sqrt2.beta


def test_ring_axioms_randomized(K_phi, K_sqrt2, K_plastic, K_salem, rng):
    for K in (K_phi, K_sqrt2, K_plastic, K_salem):
        for _ in range(25):
            a, b, c = (random_element(K, rng) for _ in range(3))
            assert (a + b) * c == a * c + b * c
            assert (a * b) * c == a * (b * c)
            if not b.is_zero():
                assert (a / b) * b == a


def test_negative_powers_of_unit(K_phi):
    phi = K_phi.beta
    assert phi ** -3 == (1 / phi) ** 3
    assert phi ** -2 * phi ** 5 == phi ** 3


# -- trace, norm, characteristic polynomial -----------------------------------

def test_trace_examples(K_sqrt2, K_phi):
    r2 = K_sqrt2.beta
    assert r2.trace() == 0
    assert (r2 + 3).trace() == 6
    assert K_phi.beta.norm() == -1
    assert K_phi.element(F(5, 7)).norm() == F(25, 49)   # q^m for rational q


def test_char_poly_examples(K_phi):
    phi = K_phi.beta
    assert phi.char_poly() == polys.mk([-1, -1, 1])
    assert phi.is_algebraic_integer()
    half_phi = phi * F(1, 2)
    assert half_phi.char_poly() == polys.mk([F(-1, 4), F(-1, 2), 1])
    assert not half_phi.is_algebraic_integer()
    assert K_phi.element(5).is_algebraic_integer()


def test_trace_linear(K_plastic, rng):
    for _ in range(30):
        a, b = random_element(K_plastic, rng), random_element(K_plastic, rng)
        q = F(rng.randint(-9, 9), rng.randint(1, 4))
        assert (a * q + b).trace() == q * a.trace() + b.trace()


def test_trace_vs_embeddings(K_salem, rng):
    # the trace lies in the sum of the embedding boxes at every precision
    for _ in range(10):
        x = random_element(K_salem, rng)
        for prec in (16, 50, 90):
            total = None
            for j in range(K_salem.degree):
                b = x.embed(j, prec)
                r = b.re if hasattr(b, "re") else b
                total = r if total is None else total + r
            assert total.contains(x.trace())


def test_norm_vs_embeddings(K_plastic, rng):
    from gpnf.intervals import ComplexBox, RatInterval
    for _ in range(10):
        x = random_element(K_plastic, rng)
        total = ComplexBox.point(1)
        for j in range(K_plastic.degree):
            b = x.embed(j, 60)
            if not hasattr(b, "re"):
                b = ComplexBox(b, RatInterval.point(0))
            total = total * b
        assert total.re.contains(x.norm())
        assert total.im.contains(0)


def test_gram_matrix_nondegenerate(K_sqrt2):
    # trace-form Gram on the power basis of Q(sqrt2): [[2,0],[0,4]]
    b = [K_sqrt2.one, K_sqrt2.beta]
    G = [[(x * y).trace() for y in b] for x in b]
    assert G == [[2, 0], [0, 4]]
    assert G[0][0] * G[1][1] - G[0][1] * G[1][0] == 8


def test_alg_integers_closed(K_salem, rng):
    ints = []
    while len(ints) < 6:
        x = K_salem.element([rng.randint(-3, 3) for _ in range(4)])
        if x.is_algebraic_integer():
            ints.append(x)
    for a in ints[:3]:
        for b in ints[3:]:
            assert (a + b).is_algebraic_integer()
            assert (a * b).is_algebraic_integer()


# -- embeddings and floors ------------------------------------------------------

def test_embed_precision(K_phi):
    box = K_phi.beta.embed(None, 80)
    assert box.width <= F(2, 2 ** 80)
    assert float(box.mid) == pytest.approx(1.618033988749895, abs=1e-12)


def test_embed_rational_is_point(K_phi):
    assert K_phi.element(F(3, 7)).embed(None, 10).width == 0


def test_embed_other_root(K_phi):
    box = K_phi.beta.embed(0, 30)
    assert float(box.mid) == pytest.approx(-0.618033988749895, abs=1e-8)


def test_floor_examples(K_phi):
    phi = K_phi.beta
    assert certified_floor(phi) == 1
    assert certified_floor(K_phi.element(2)) == 2
    assert certified_nint(phi) == 2
    assert certified_dist(phi) == 2 - phi
    assert certified_frac(phi) == phi - 1
    assert certified_ceil(phi) == 2


def test_floor_tie_paths(K_phi):
    # exact integers and half-integers exercise the equality decisions
    assert certified_floor(K_phi.element(-3)) == -3
    assert certified_nint(K_phi.element(F(5, 2))) == 3   # halves round up
    assert certified_nint(K_phi.element(F(-5, 2))) == -2
    assert certified_dist(K_phi.element(F(7, 2))) == F(1, 2)


def test_floor_sandwich_randomized(K_plastic, K_salem, rng):
    for K in (K_plastic, K_salem):
        for _ in range(40):
            x = random_element(K, rng, span=20)
            n = certified_floor(x)
            assert x.compare_rational(n) >= 0
            assert x.compare_rational(n + 1) < 0


def test_floor_of_rational_multiples(K_sqrt2):
    # floor(sqrt2 * q) against the independent float value
    r2 = K_sqrt2.beta
    import math
    for q in range(-50, 50):
        got = certified_floor(r2 * q)
        assert got == math.floor(math.sqrt(2) * q)


def test_floor_complex_embedding_rejected(K_salem):
    with pytest.raises(ComplexEmbedding):
        certified_floor(K_salem.beta, 2)


def test_compare_elements(K_phi):
    phi = K_phi.beta
    assert compare_elements(phi, K_phi.element(1)) == 1
    assert compare_elements(phi, phi) == 0
    assert compare_elements(phi - 1, K_phi.one) == -1


def test_floats_agree_with_embeddings(K_plastic, K_salem, rng):
    for K in (K_plastic, K_salem):
        for _ in range(10):
            x = random_element(K, rng)
            vals = sorted(embed_floats(x), key=lambda z: (round(z.real, 6), round(z.imag, 6)))
            got = []
            for j in range(K.degree):
                b = x.embed(j, 40)
                if hasattr(b, "re"):
                    got.append(complex(float(b.re.mid), float(b.im.mid)))
                else:
                    got.append(complex(float(b.mid), 0.0))
            got = sorted(got, key=lambda z: (round(z.real, 6), round(z.imag, 6)))
            for a, b in zip(vals, got):
                assert abs(a - b) < 1e-6


def test_power_sums_match_lucas(K_phi):
    assert K_phi.power_sums(6) == [2, 1, 3, 4, 7, 11, 18]
