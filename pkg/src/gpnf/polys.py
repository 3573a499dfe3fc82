"""Exact univariate polynomial arithmetic over the rationals.

Polynomials are tuples of Fractions in ascending order of power; the zero
polynomial is the empty tuple.  Everything here is exact: Sturm chains,
root counting, isolation and refinement of real roots, resultants
(including resultants with polynomial coefficients, used to build defining
polynomials for sums and products of algebraic numbers).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Poly = tuple  # tuple[Fraction, ...], ascending powers

ZERO = ()
ONE = (Fraction(1),)


def mk(coeffs: Iterable) -> Poly:
    """Normalize a coefficient iterable (ascending) into a Poly."""
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def from_desc(coeffs: Iterable) -> Poly:
    """Build from descending (leading-first) coefficients, the CLI order."""
    return mk(reversed(list(coeffs)))


def to_desc(p: Poly) -> list:
    return list(reversed(p)) if p else [Fraction(0)]


def degree(p: Poly) -> int:
    return len(p) - 1  # -1 for the zero polynomial


def is_zero(p: Poly) -> bool:
    return not p


def lead(p: Poly) -> Fraction:
    return p[-1]


def constant(c) -> Poly:
    return mk([c])


def monomial(c, k: int) -> Poly:
    return mk([0] * k + [c])


def add(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    return mk([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0)
               for i in range(n)])


def neg(p: Poly) -> Poly:
    return tuple(-c for c in p)


def sub(p: Poly, q: Poly) -> Poly:
    return add(p, neg(q))


def mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ZERO
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return mk(out)


def scale(p: Poly, c) -> Poly:
    c = Fraction(c)
    if c == 0:
        return ZERO
    return tuple(a * c for a in p)


def shift_up(p: Poly, k: int) -> Poly:
    """Multiply by x^k."""
    if not p:
        return ZERO
    return tuple([Fraction(0)] * k) + p


def pow_(p: Poly, n: int) -> Poly:
    out = ONE
    base = p
    while n:
        if n & 1:
            out = mul(out, base)
        base = mul(base, base)
        n >>= 1
    return out


def divmod_(p: Poly, q: Poly) -> tuple:
    """Exact rational division with remainder."""
    if is_zero(q):
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    dq, lq = degree(q), lead(q)
    quo = [Fraction(0)] * max(0, len(p) - len(q) + 1)
    while len(r) >= len(q) and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) < len(q):
            break
        k = len(r) - len(q)
        c = r[-1] / lq
        quo[k] = c
        for i in range(len(q)):
            r[k + i] -= c * q[i]
        r.pop()
    return mk(quo), mk(r)


def divexact(p: Poly, q: Poly) -> Poly:
    quo, rem = divmod_(p, q)
    if not is_zero(rem):
        raise ArithmeticError("inexact polynomial division")
    return quo


def monic(p: Poly) -> Poly:
    if is_zero(p):
        return p
    return scale(p, 1 / lead(p))


def gcd(p: Poly, q: Poly) -> Poly:
    a, b = p, q
    while not is_zero(b):
        a, b = b, divmod_(a, b)[1]
    return monic(a) if not is_zero(a) else ZERO


def derivative(p: Poly) -> Poly:
    return mk([i * p[i] for i in range(1, len(p))])


def squarefree_part(p: Poly) -> Poly:
    """p divided by gcd(p, p'); monic."""
    if degree(p) <= 0:
        return monic(p) if p else ZERO
    g = gcd(p, derivative(p))
    if degree(g) == 0:
        return monic(p)
    return monic(divexact(p, g))


def is_squarefree(p: Poly) -> bool:
    return degree(p) <= 0 or degree(gcd(p, derivative(p))) == 0


def eval_at(p: Poly, x) -> Fraction:
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def compose(p: Poly, q: Poly) -> Poly:
    """p(q(x))."""
    acc = ZERO
    for c in reversed(p):
        acc = add(mul(acc, q), constant(c))
    return acc


def to_int_primitive(p: Poly) -> tuple:
    """Return (integer-coefficient primitive polynomial, positive scalar s)
    with p = s * primitive.  Leading coefficient sign is preserved."""
    if is_zero(p):
        return ZERO, Fraction(1)
    from math import gcd as igcd, lcm
    den = lcm(*[c.denominator for c in p]) if len(p) > 1 else p[0].denominator
    ints = [int(c * den) for c in p]
    g = 0
    for v in ints:
        g = igcd(g, abs(v))
    ints = [v // g for v in ints]
    return tuple(Fraction(v) for v in ints), Fraction(g, den)


def content_free_pair(p: Poly, q: Poly) -> tuple:
    return to_int_primitive(p)[0], to_int_primitive(q)[0]


def cauchy_bound(p: Poly) -> Fraction:
    """All complex roots have modulus < 1 + max|a_i/lead|."""
    if degree(p) < 1:
        return Fraction(1)
    lc = abs(lead(p))
    return 1 + max(abs(c) / lc for c in p[:-1]) if len(p) > 1 else Fraction(1)


# -- Sturm machinery ---------------------------------------------------------

def sturm_chain(p: Poly) -> list:
    """Standard Sturm chain of the squarefree part of p."""
    p = squarefree_part(p)
    chain = [p]
    if degree(p) >= 1:
        chain.append(derivative(p))
        while degree(chain[-1]) >= 1:
            rem = divmod_(chain[-2], chain[-1])[1]
            if is_zero(rem):
                break
            chain.append(neg(rem))
    return chain


def _variations(signs: Sequence[int]) -> int:
    v, prev = 0, 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            v += 1
        prev = s
    return v


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def variations_at(chain: list, x) -> int:
    return _variations([_sign(eval_at(f, x)) for f in chain])


def variations_at_inf(chain: list, positive: bool) -> int:
    signs = []
    for f in chain:
        if is_zero(f):
            signs.append(0)
        else:
            s = _sign(lead(f))
            if not positive and degree(f) % 2 == 1:
                s = -s
            signs.append(s)
    return _variations(signs)


def count_roots(chain: list, lo, hi) -> int:
    """Number of distinct real roots in (lo, hi]; endpoints are Fractions.
    The chain's first entry must not vanish at lo or hi for the open-interval
    reading; callers arrange that."""
    return variations_at(chain, lo) - variations_at(chain, hi)


def count_real_roots(p: Poly) -> int:
    chain = sturm_chain(p)
    return variations_at_inf(chain, False) - variations_at_inf(chain, True)


def isolate_real_roots(p: Poly) -> list:
    """Isolating intervals for the distinct real roots of p, ascending.

    Returns a list of (lo, hi) pairs with lo < hi, p(lo) != 0 != p(hi), and
    exactly one root in each open interval -- except that exact rational
    roots appear as point pairs (r, r).
    """
    p = squarefree_part(p)
    if degree(p) < 1:
        return []
    chain = [p] + sturm_chain(p)[1:]
    bound = cauchy_bound(p)
    out = []

    def total(lo, hi):
        return variations_at(chain, lo) - variations_at(chain, hi)

    def walk(lo, hi, n):
        if n == 0:
            return
        if n == 1:
            out.append((lo, hi))
            return
        mid = (lo + hi) / 2
        if eval_at(p, mid) == 0:
            out_mid = (mid, mid)
            # shrink around mid so the flanks have clean endpoints
            eps = (hi - lo) / 4
            while eval_at(p, mid - eps) == 0 or eval_at(p, mid + eps) == 0:
                eps /= 2
            nl = total(lo, mid - eps)
            walk(lo, mid - eps, nl)
            out.append(out_mid)
            walk(mid + eps, hi, n - 1 - nl)
        else:
            nl = total(lo, mid)
            walk(lo, mid, nl)
            walk(mid, hi, n - nl)

    lo, hi = -bound, bound
    while eval_at(p, lo) == 0:
        lo -= 1
    while eval_at(p, hi) == 0:
        hi += 1
    walk(lo, hi, total(lo, hi))
    return out


def _interval_eval(p: Poly, lo: Fraction, hi: Fraction) -> tuple:
    """Enclosure of p over [lo, hi] by interval Horner."""
    alo = ahi = Fraction(0)
    for c in reversed(p):
        cands = (alo * lo, alo * hi, ahi * lo, ahi * hi)
        alo, ahi = min(cands) + c, max(cands) + c
    return alo, ahi


def dyadic_down(q: Fraction, t: int) -> Fraction:
    """Largest multiple of 2^-t that is <= q."""
    return Fraction((q.numerator << t) // q.denominator, 1 << t)


def dyadic_up(q: Fraction, t: int) -> Fraction:
    """Smallest multiple of 2^-t that is >= q."""
    return Fraction(-((-q.numerator << t) // q.denominator), 1 << t)


def _width_bits(w: Fraction) -> int:
    """Roughly -log2(w), never underestimating by more than 1."""
    if w <= 0:
        return 0
    return max(0, w.denominator.bit_length() - w.numerator.bit_length() + 1)


def refine_root(p: Poly, lo: Fraction, hi: Fraction, width: Fraction) -> tuple:
    """Refine an isolating interval of squarefree p down to the given width.

    Interval Newton steps give quadratic convergence once the enclosure is
    tight; bisection on the sign change is the fallback.  Point intervals
    pass through unchanged; a midpoint that hits the root exactly collapses
    the interval to a point.
    """
    if lo == hi:
        return lo, hi
    slo = _sign(eval_at(p, lo))
    shi = _sign(eval_at(p, hi))
    if slo == shi or slo == 0 or shi == 0:
        # no sign change: fall back to Sturm bisection
        chain = sturm_chain(p)
        while hi - lo > width:
            mid = (lo + hi) / 2
            if eval_at(p, mid) == 0:
                return mid, mid
            if count_roots(chain, lo, mid) == 1:
                hi = mid
            else:
                lo = mid
        return lo, hi
    dp = derivative(p)
    while hi - lo > width:
        mid = (lo + hi) / 2
        fm = eval_at(p, mid)
        if fm == 0:
            return mid, mid
        dlo, dhi = _interval_eval(dp, lo, hi)
        if dlo > 0 or dhi < 0:
            # Newton: the root lies in mid - fm / [dlo, dhi]; round the
            # result outward to dyadics so denominators stay linear in the
            # precision instead of doubling every step
            t = 2 * _width_bits(hi - lo) + 8
            q1, q2 = fm / dlo, fm / dhi
            nlo = max(lo, dyadic_down(mid - max(q1, q2), t))
            nhi = min(hi, dyadic_up(mid - min(q1, q2), t))
            if nlo <= nhi and (nhi - nlo) <= (hi - lo) * Fraction(7, 8):
                flo = _sign(eval_at(p, nlo))
                fhi = _sign(eval_at(p, nhi))
                if flo == 0:
                    return nlo, nlo
                if fhi == 0:
                    return nhi, nhi
                lo, hi, slo, shi = nlo, nhi, flo, fhi
                continue
        sm = _sign(fm)
        if sm == slo:
            lo = mid
        else:
            hi = mid
    return lo, hi


# -- resultants --------------------------------------------------------------

def resultant(p: Poly, q: Poly) -> Fraction:
    """Res(p, q) over the rationals, by the Euclidean update rules."""
    if is_zero(p) or is_zero(q):
        return Fraction(0)
    a, b = p, q
    res = Fraction(1)
    while degree(b) > 0:
        r = divmod_(a, b)[1]
        if is_zero(r):
            return Fraction(0)
        da, db, dr = degree(a), degree(b), degree(r)
        res *= (-1) ** (da * db) * lead(b) ** (da - dr)
        a, b = b, r
    return res * b[0] ** degree(a)


def discriminant(p: Poly) -> Fraction:
    n = degree(p)
    if n < 1:
        return Fraction(0)
    r = resultant(p, derivative(p))
    return (-1) ** (n * (n - 1) // 2) * r / lead(p)


# Polynomials with polynomial coefficients: a BiPoly is a tuple of Poly,
# ascending in the main variable z; coefficients are Polys in s.

def _bi_mk(coeffs: list) -> tuple:
    while coeffs and is_zero(coeffs[-1]):
        coeffs.pop()
    return tuple(coeffs)


def _bi_from_const(p: Poly) -> tuple:
    """Embed p(z) as a BiPoly in z with constant coefficients."""
    return _bi_mk([constant(c) for c in p])


def _sylvester_resultant_bi(A: tuple, B: tuple) -> Poly:
    """Res_z(A, B) where A, B are BiPolys in z over Q[s]; returns a Poly in s.

    Bareiss fraction-free elimination over the polynomial ring.
    """
    n, m = len(A) - 1, len(B) - 1
    if n < 0 or m < 0:
        return ZERO
    if n == 0 and m == 0:
        return ONE
    if n == 0:
        return pow_(A[0], m)
    if m == 0:
        return pow_(B[0], n)
    size = n + m
    M = [[ZERO] * size for _ in range(size)]
    for i in range(m):
        for j, c in enumerate(A):
            M[i][i + (n - j)] = c
    for i in range(n):
        for j, c in enumerate(B):
            M[m + i][i + (m - j)] = c
    # Bareiss
    sign = 1
    prev = ONE
    for k in range(size - 1):
        if is_zero(M[k][k]):
            piv = next((r for r in range(k + 1, size) if not is_zero(M[r][k])), None)
            if piv is None:
                return ZERO
            M[k], M[piv] = M[piv], M[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                num = sub(mul(M[i][j], M[k][k]), mul(M[i][k], M[k][j]))
                M[i][j] = divexact(num, prev)
            M[i][k] = ZERO
        prev = M[k][k]
    det = M[size - 1][size - 1]
    return neg(det) if sign < 0 else det


def sum_poly(A: Poly, B: Poly) -> Poly:
    """A polynomial vanishing at every a + b with A(a) = 0, B(b) = 0."""
    # Res_z(A(z), B(s - z)):  B(s - z) expanded as a BiPoly in z over Q[s].
    m = degree(B)
    acc = [ZERO] * (m + 1)
    # (s - z)^k coefficients in z: sum_j C(k,j) s^(k-j) (-1)^j z^j
    from math import comb
    for k, bk in enumerate(B):
        if bk == 0:
            continue
        for j in range(k + 1):
            term = monomial(bk * comb(k, j) * (-1) ** j, k - j)
            acc[j] = add(acc[j], term)
    return _sylvester_resultant_bi(_bi_from_const(A), _bi_mk(acc))


def prod_poly(A: Poly, B: Poly) -> Poly:
    """A polynomial vanishing at every a * b with A(a) = 0, B(b) = 0.

    Requires B(0) != 0 or handles the zero root separately.
    """
    m = degree(B)
    b0_zero = B[0] == 0 if B else True
    # Res_z(A(z), z^m B(s/z)) = Res_z(A(z), sum_k b_k s^k z^(m-k))
    acc = [ZERO] * (m + 1)
    for k, bk in enumerate(B):
        if bk == 0:
            continue
        acc[m - k] = add(acc[m - k], monomial(bk, k))
    res = _sylvester_resultant_bi(_bi_from_const(A), _bi_mk(acc))
    if b0_zero and not is_zero(res) and eval_at(res, 0) != 0:
        res = mul(res, mk([0, 1]))
    return res


def scale_roots(p: Poly, c) -> Poly:
    """Polynomial whose roots are c * (roots of p); c a nonzero rational."""
    c = Fraction(c)
    n = degree(p)
    return mk([p[i] * c ** (n - i) for i in range(n + 1)])


def diff_poly(A: Poly, B: Poly) -> Poly:
    """A polynomial vanishing at every a - b with A(a) = 0, B(b) = 0."""
    return sum_poly(A, scale_roots(B, -1))
