"""Exact arithmetic in a number field Q(beta) with certified embeddings.

A NumberField is built from a squarefree defining polynomial.  Real
conjugates are isolated by Sturm bisection; complex conjugates by rectangle
subdivision with an exact winding-number count on rectangle boundaries (no
floating point anywhere).  Elements are coordinate vectors in the power
basis; floor / nearest-integer / fractional-part of real embeddings are
decided exactly: intervals are refined until they exclude all integers, and
an exact field-equality test settles integer hits, so ties are never
guessed from numerics.
"""

from __future__ import annotations

import functools
import threading
from fractions import Fraction
from itertools import product as _iproduct
from math import comb, isqrt
from typing import Optional, Sequence, Union

from . import polys
from .errors import (ComplexEmbedding, DivisionByZero, FieldMismatch,
                     NoRealRoot, NotSquarefree, ReducibleDetected)
from .intervals import ComplexBox, RatInterval, poly_complex_box, poly_interval

Rationalish = Union[int, Fraction, str]


class _BoundaryRoot(Exception):
    """Internal: a root lies on a counting rectangle's boundary."""


# ---------------------------------------------------------------------------
# winding-number root counting in rectangles
# ---------------------------------------------------------------------------

_SECTOR = {
    (1, 0): 0, (1, 1): 1, (0, 1): 2, (-1, 1): 3,
    (-1, 0): 4, (-1, -1): 5, (0, -1): 6, (1, -1): 7,
}


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _edge_uv(p: tuple, x0, y0, x1, y1) -> tuple:
    """Real and imaginary parts of p((x0+iy0) + t*((x1-x0)+i(y1-y0))) as
    polynomials in t."""
    cr, ci = Fraction(x0), Fraction(y0)
    dr, di = Fraction(x1) - cr, Fraction(y1) - ci
    accR: list = []
    accI: list = []
    for a in reversed(p):
        n = len(accR)
        newR = [Fraction(0)] * (n + 1)
        newI = [Fraction(0)] * (n + 1)
        for k in range(n):
            A, B = accR[k], accI[k]
            newR[k] += A * cr - B * ci
            newI[k] += A * ci + B * cr
            newR[k + 1] += A * dr - B * di
            newI[k + 1] += A * di + B * dr
        if not newR:
            newR, newI = [Fraction(0)], [Fraction(0)]
        newR[0] += Fraction(a)
        accR, accI = newR, newI
    return polys.mk(accR), polys.mk(accI)


def _roots_in_open_unit(sq: tuple) -> list:
    """Isolating intervals for the roots of squarefree sq in the open (0,1);
    exact rational roots appear as point pairs (r, r)."""
    out = []
    at0 = polys.eval_at(sq, Fraction(0)) == 0
    at1 = polys.eval_at(sq, Fraction(1)) == 0
    for lo, hi in polys.isolate_real_roots(sq):
        if lo == hi:
            if 0 < lo < 1:
                out.append((lo, hi))
            continue
        if hi <= 0 or lo >= 1:
            continue
        while True:
            if lo >= 0 and hi <= 1:
                out.append((lo, hi))
                break
            if hi <= 0 or lo >= 1:
                break
            if (at0 and lo < 0 < hi) or (at1 and lo < 1 < hi):
                break  # the isolated root is exactly 0 or 1
            lo, hi = polys.refine_root(sq, lo, hi, (hi - lo) / 4)
            if lo == hi:
                if 0 < lo < 1:
                    out.append((lo, hi))
                break
    return out


def _sign_at_root(other: tuple, defining: tuple, lo, hi) -> int:
    """Sign of other(r) for r the unique root of squarefree `defining` in
    [lo, hi]; requires other(r) != 0."""
    if lo == hi:
        return _sign(polys.eval_at(other, lo))
    while True:
        s = poly_interval(other, RatInterval(lo, hi)).sign()
        if s:
            return s
        lo, hi = polys.refine_root(defining, lo, hi, (hi - lo) / 16)
        if lo == hi:
            return _sign(polys.eval_at(other, lo))


def _edge_steps(p: tuple, x0, y0, x1, y1) -> int:
    """Total signed eighth-turns of arg p(z) along the directed segment.

    Raises _BoundaryRoot if p vanishes somewhere on the segment.
    """
    u, v = _edge_uv(p, x0, y0, x1, y1)
    if polys.is_zero(u) and polys.is_zero(v):
        raise _BoundaryRoot
    if polys.is_zero(u) or polys.is_zero(v):
        w = v if polys.is_zero(u) else u
        sq = polys.squarefree_part(w)
        if polys.eval_at(sq, Fraction(0)) == 0 or \
                polys.eval_at(sq, Fraction(1)) == 0 or _roots_in_open_unit(sq):
            raise _BoundaryRoot
        return 0
    g = polys.gcd(u, v)
    if polys.degree(g) >= 1:
        gs = polys.squarefree_part(g)
        if polys.eval_at(gs, Fraction(0)) == 0 or \
                polys.eval_at(gs, Fraction(1)) == 0 or _roots_in_open_unit(gs):
            raise _BoundaryRoot

    squ, sqv = polys.squarefree_part(u), polys.squarefree_part(v)
    events = [[iv, "u"] for iv in _roots_in_open_unit(squ)] + \
             [[iv, "v"] for iv in _roots_in_open_unit(sqv)]

    # refine until the event intervals are pairwise disjoint (they never
    # share a root: gcd was checked above), then order them
    changed = True
    while changed:
        changed = False
        for a in range(len(events)):
            for b in range(a + 1, len(events)):
                (lo1, hi1), k1 = events[a]
                (lo2, hi2), k2 = events[b]
                if hi1 < lo2 or hi2 < lo1:
                    continue
                changed = True
                for ev in (events[a], events[b]):
                    (lo, hi), kind = ev
                    if lo != hi:
                        own = squ if kind == "u" else sqv
                        ev[0] = polys.refine_root(own, lo, hi, (hi - lo) / 16)
    events.sort(key=lambda e: e[0][0])

    def state_at(t: Fraction) -> tuple:
        return (_sign(polys.eval_at(u, t)), _sign(polys.eval_at(v, t)))

    walk = [state_at(Fraction(0))]
    for k, ((lo, hi), kind) in enumerate(events):
        if kind == "u":
            walk.append((0, _sign_at_root(v, squ, lo, hi)))
        else:
            walk.append((_sign_at_root(u, sqv, lo, hi), 0))
        nxt_lo = events[k + 1][0][0] if k + 1 < len(events) else Fraction(1)
        t = (hi + nxt_lo) / 2
        if hi < t < 1:
            walk.append(state_at(t))
    walk.append(state_at(Fraction(1)))

    total = 0
    prev = _SECTOR[walk[0]]
    for st in walk[1:]:
        cur = _SECTOR[st]
        d = (cur - prev + 4) % 8 - 4
        if abs(d) > 1:
            raise _BoundaryRoot  # degenerate sampling; caller perturbs
        total += d
        prev = cur
    return total


def count_roots_in_rect(p: tuple, xlo, xhi, ylo, yhi) -> int:
    """Exact number of roots of squarefree p strictly inside the rectangle
    (argument principle, rational arithmetic only).

    Raises _BoundaryRoot if a root lies on the boundary.
    """
    steps = (_edge_steps(p, xlo, ylo, xhi, ylo)
             + _edge_steps(p, xhi, ylo, xhi, yhi)
             + _edge_steps(p, xhi, yhi, xlo, yhi)
             + _edge_steps(p, xlo, yhi, xlo, ylo))
    if steps % 8 != 0:
        raise _BoundaryRoot
    return steps // 8


def _split_candidates(lo: Fraction, hi: Fraction):
    w = hi - lo
    for num, den in ((1, 2), (17, 32), (15, 32), (9, 16), (7, 16), (19, 32),
                     (13, 32), (5, 8), (3, 8), (21, 32), (11, 32), (23, 32)):
        yield lo + w * Fraction(num, den)


def _isolate_complex_upper(p: tuple, expected: int) -> list:
    """Isolating rectangles (xlo, xhi, ylo, yhi) for the roots of squarefree
    p in the open upper half-plane."""
    if expected == 0:
        return []
    bound = polys.cauchy_bound(p)
    # lower edge strictly below the least positive imaginary part, via the
    # Mahler root-separation bound (conjugate pairs are 2*Im apart)
    ip, _ = polys.to_int_primitive(p)
    m = polys.degree(p)
    disc = abs(polys.resultant(ip, polys.derivative(ip)) / polys.lead(ip))
    norm2sq = sum(Fraction(c) ** 2 for c in ip)
    sep_sq = 3 * disc / (Fraction(m) ** (m + 2) * norm2sq ** (m - 1))
    eta = Fraction(1)
    while 4 * eta * eta > sep_sq:
        eta /= 2
    work = [(-bound, bound, eta, bound)]
    done = []
    while work:
        r = work.pop()
        n = count_roots_in_rect(p, *r)
        if n == 0:
            continue
        if n == 1:
            done.append(r)
            continue
        xlo, xhi, ylo, yhi = r
        vertical = (xhi - xlo) >= (yhi - ylo)
        cands = _split_candidates(xlo, xhi) if vertical else _split_candidates(ylo, yhi)
        for c in cands:
            if vertical:
                r1, r2 = (xlo, c, ylo, yhi), (c, xhi, ylo, yhi)
            else:
                r1, r2 = (xlo, xhi, ylo, c), (xlo, xhi, c, yhi)
            try:
                n1 = count_roots_in_rect(p, *r1)
                n2 = count_roots_in_rect(p, *r2)
            except _BoundaryRoot:
                continue
            if n1 + n2 == n:
                work.extend((r1, r2))
                break
        else:
            raise ArithmeticError("complex root isolation failed to split")
    if len(done) != expected:
        raise ArithmeticError("complex root isolation miscount")
    return done


def _gauss_eval(p: tuple, re: Fraction, im: Fraction) -> tuple:
    """p(re + i*im) for exact rationals: (real, imaginary)."""
    ar, ai = Fraction(0), Fraction(0)
    for c in reversed(p):
        ar, ai = ar * re - ai * im + c, ar * im + ai * re
    return ar, ai


def _krawczyk_step(p: tuple, dp: tuple, rect: tuple):
    """One Krawczyk contraction of an isolating rectangle; returns a
    strictly smaller isolating rectangle or None when the test fails.

    With Z the box, m its midpoint: any root in Z lies in
    m - p(m)/p'(m) + (1 - p'(Z)/p'(m)) (Z - m), so intersecting with Z
    keeps a valid enclosure.
    """
    xlo, xhi, ylo, yhi = rect
    Z = ComplexBox(RatInterval(xlo, xhi), RatInterval(ylo, yhi))
    mx, my = (xlo + xhi) / 2, (ylo + yhi) / 2
    fr, fi = _gauss_eval(p, mx, my)
    dr, di = _gauss_eval(dp, mx, my)
    nrm = dr * dr + di * di
    if nrm == 0:
        return None
    # 1/p'(m) exactly
    ir, ii = dr / nrm, -di / nrm
    inv = ComplexBox.point(ir, ii)
    newton = ComplexBox.point(mx - (fr * ir - fi * ii), my - (fr * ii + fi * ir))
    dpz = poly_complex_box(dp, Z)
    contraction = ComplexBox.point(1) - dpz * inv
    K = newton + contraction * (Z - ComplexBox.point(mx, my))
    # round outward to dyadics: keeps the enclosure while stopping the
    # denominators from doubling at every contraction
    t = 2 * polys._width_bits(max(xhi - xlo, yhi - ylo)) + 8
    nxlo = max(polys.dyadic_down(K.re.lo, t), xlo)
    nxhi = min(polys.dyadic_up(K.re.hi, t), xhi)
    nylo = max(polys.dyadic_down(K.im.lo, t), ylo)
    nyhi = min(polys.dyadic_up(K.im.hi, t), yhi)
    if nxlo > nxhi or nylo > nyhi:
        return None
    if max(nxhi - nxlo, nyhi - nylo) > max(xhi - xlo, yhi - ylo) * Fraction(7, 8):
        return None
    return nxlo, nxhi, nylo, nyhi


def _refine_rect(p: tuple, rect: tuple, width: Fraction) -> tuple:
    """Shrink an isolating rectangle of p below the given side length.

    Coarse rectangles are bisected with exact winding counts; once small,
    Krawczyk contraction converges quadratically (with bisection as the
    fallback whenever the contraction test fails)."""
    xlo, xhi, ylo, yhi = rect
    dp = polys.derivative(p)
    coarse = Fraction(1, 2 ** 8)
    while max(xhi - xlo, yhi - ylo) > width:
        if max(xhi - xlo, yhi - ylo) <= coarse:
            step = _krawczyk_step(p, dp, (xlo, xhi, ylo, yhi))
            if step is not None:
                xlo, xhi, ylo, yhi = step
                continue
        vertical = (xhi - xlo) >= (yhi - ylo)
        cands = _split_candidates(xlo, xhi) if vertical else _split_candidates(ylo, yhi)
        for c in cands:
            if vertical:
                r1, r2 = (xlo, c, ylo, yhi), (c, xhi, ylo, yhi)
            else:
                r1, r2 = (xlo, xhi, ylo, c), (xlo, xhi, c, yhi)
            try:
                n1 = count_roots_in_rect(p, *r1)
            except _BoundaryRoot:
                continue
            xlo, xhi, ylo, yhi = r1 if n1 == 1 else r2
            break
        else:
            raise ArithmeticError("rectangle refinement failed")
    return xlo, xhi, ylo, yhi


# ---------------------------------------------------------------------------
# the field
# ---------------------------------------------------------------------------

class _Root:
    __slots__ = ("kind", "interval", "rect", "pair")

    def __init__(self, kind, interval=None, rect=None, pair=None):
        self.kind = kind          # 'real' | 'upper' | 'lower'
        self.interval = interval  # (lo, hi) for real roots
        self.rect = rect          # (xlo, xhi, ylo, yhi), upper-half roots
        self.pair = pair          # index of the complex-conjugate root


class NumberField:
    """Q(beta) for beta a root of a squarefree rational polynomial.

    Conjugates are ordered canonically: real roots ascending, then complex
    pairs by ascending real part (exact ties broken by imaginary part),
    each pair listed upper-half root first.  `distinguished` is the index
    of the conjugate identified with beta; by default the real root of
    largest absolute value (positive one on an exact tie), or index 0 if
    there is no real root.
    """

    def __init__(self, coeffs: Sequence[Rationalish], *,
                 distinguished: Optional[int] = None,
                 require_real_distinguished: bool = False,
                 check_reducible: bool = True):
        p = polys.mk([Fraction(c) for c in coeffs])
        if polys.degree(p) < 1:
            raise ValueError("defining polynomial must have degree >= 1")
        if not polys.is_squarefree(p):
            raise NotSquarefree("defining polynomial has a repeated root")
        self.minpoly_int, _ = polys.to_int_primitive(p)
        if polys.lead(self.minpoly_int) < 0:
            self.minpoly_int = polys.neg(self.minpoly_int)
        self.monic_minpoly = polys.monic(self.minpoly_int)
        self.degree = polys.degree(p)
        if check_reducible:
            f = self._cheap_factor_search()
            if f is not None:
                raise ReducibleDetected(f"found factor with coefficients {list(f)}")

        m = self.degree
        self._sqfree = self.monic_minpoly
        self._chain = polys.sturm_chain(self._sqfree)
        real_ivs = polys.isolate_real_roots(self.monic_minpoly)
        r1 = len(real_ivs)
        r2 = (m - r1) // 2
        self.signature = (r1, r2)

        self._roots = [_Root("real", interval=iv) for iv in real_ivs]
        for rect in self._sort_uppers(_isolate_complex_upper(self.minpoly_int, r2)):
            k = len(self._roots)
            self._roots.append(_Root("upper", rect=rect, pair=k + 1))
            self._roots.append(_Root("lower", rect=rect, pair=k))

        self._lock = threading.RLock()
        self._red = self._reduction_table()
        self.distinguished = self._pick_distinguished(
            distinguished, require_real_distinguished)

    # -- construction helpers -----------------------------------------------

    def _cheap_factor_search(self) -> Optional[tuple]:
        """Bounded search for an integer polynomial factor of degree <= m/2.

        Silence is not a proof of irreducibility; the caller asserts that.
        """
        p = self.minpoly_int
        m = polys.degree(p)
        if m == 1:
            return None
        if p[0] == 0:
            return polys.mk([0, 1])
        lead = int(polys.lead(p))
        const = int(p[0])

        def divisors(n):
            n = abs(int(n))
            out = [d for d in range(1, min(n, 1000) + 1) if n % d == 0]
            if n > 1000:
                out.append(n)
            return out

        for c in divisors(const):
            for l in divisors(lead):
                for sc in (c, -c):
                    if polys.eval_at(p, Fraction(sc, l)) == 0:
                        return polys.mk([-sc, l])
        b2 = isqrt(int(sum(c * c for c in p))) + 1
        cap = 200000
        for d in range(2, m // 2 + 1):
            bound = comb(d, d // 2) * b2
            if bound > 40:
                continue  # bounded search only
            total = (len(divisors(lead)) * len(divisors(const)) * 2
                     * (2 * bound + 1) ** (d - 1))
            if total > cap:
                continue
            for lc in divisors(lead):
                for cst in divisors(const):
                    for sc in (cst, -cst):
                        for mid in _iproduct(range(-bound, bound + 1), repeat=d - 1):
                            g = polys.mk([sc, *mid, lc])
                            if polys.degree(g) != d:
                                continue
                            if polys.is_zero(polys.divmod_(p, g)[1]):
                                return g
        return None

    def _sort_uppers(self, uppers: list) -> list:
        if len(uppers) <= 1:
            return uppers
        p = self.minpoly_int
        sum2 = polys.squarefree_part(
            polys.sum_poly(self.monic_minpoly, self.monic_minpoly))
        chain2 = polys.sturm_chain(sum2)

        def count2(lo, hi):
            bump = (hi - lo) / 1009 if hi > lo else Fraction(1, 1009)
            a, b = lo, hi
            while polys.eval_at(sum2, a) == 0:
                a -= bump
            while polys.eval_at(sum2, b) == 0:
                b += bump
            return polys.count_roots(chain2, a, b)

        def cmp(ra, rb):
            while True:
                if ra[1] < rb[0]:
                    return -1
                if rb[1] < ra[0]:
                    return 1
                # the real parts overlap; 2*Re values are roots of sum2
                a2 = (2 * ra[0], 2 * ra[1])
                b2 = (2 * rb[0], 2 * rb[1])
                if count2(*a2) == 1 and count2(*b2) == 1:
                    ilo, ihi = max(a2[0], b2[0]), min(a2[1], b2[1])
                    if ilo < ihi and count2(ilo, ihi) >= 1:
                        # equal real parts: order by imaginary part
                        while not (ra[3] < rb[2] or rb[3] < ra[2]):
                            ra = _refine_rect(p, ra, (ra[3] - ra[2]) / 4)
                            rb = _refine_rect(p, rb, (rb[3] - rb[2]) / 4)
                        return -1 if ra[3] < rb[2] else 1
                ra = _refine_rect(p, ra, (ra[1] - ra[0]) / 4)
                rb = _refine_rect(p, rb, (rb[1] - rb[0]) / 4)

        return sorted(uppers, key=functools.cmp_to_key(cmp))

    def _reduction_table(self) -> list:
        """Coordinates of beta^k for 0 <= k <= 2m-2, reduced mod minpoly."""
        m = self.degree
        if m == 1:
            return [[Fraction(1)]]
        top = [-c for c in self.monic_minpoly[:-1]]
        table = []
        cur = [Fraction(0)] * m
        cur[0] = Fraction(1)
        for _ in range(2 * m - 1):
            table.append(list(cur))
            carry = cur[m - 1]
            cur = [Fraction(0)] + cur[:-1]
            if carry:
                cur = [c + carry * t for c, t in zip(cur, top)]
        return table

    def _pick_distinguished(self, distinguished, require_real) -> int:
        r1 = self.signature[0]
        if isinstance(distinguished, int):
            if not 0 <= distinguished < self.degree:
                raise ValueError("distinguished root index out of range")
            if require_real and self._roots[distinguished].kind != "real":
                raise NoRealRoot("requested distinguished root is not real")
            return distinguished
        if r1 == 0:
            if require_real:
                raise NoRealRoot("polynomial has no real root")
            return 0
        if r1 == 1:
            return 0
        # real root of largest |.|; exact ties prefer the positive root
        S = polys.squarefree_part(polys.sum_poly(self._sqfree, self._sqfree))
        chainS = polys.sturm_chain(S)
        s_at_0 = polys.eval_at(S, Fraction(0)) == 0

        def sum_is_zero(i, j, width):
            """Decide sign of r_i + r_j, or 0 on exact tie."""
            while True:
                li, hi_ = self._refine_real(i, width)
                lj, hj = self._refine_real(j, width)
                lo, hi = li + lj, hi_ + hj
                if lo > 0:
                    return 1
                if hi < 0:
                    return -1
                if s_at_0 and lo < 0 < hi:
                    bump = (hi - lo) / 1009
                    a, b = lo, hi
                    while polys.eval_at(S, a) == 0:
                        a -= bump
                    while polys.eval_at(S, b) == 0:
                        b += bump
                    if polys.count_roots(chainS, a, b) == 1:
                        return 0  # the unique enclosed root of S is 0 itself
                width /= 16

        best = 0
        for j in range(1, r1):
            # roots are ordered ascending; compare |best| against |r_j|
            width = Fraction(1, 16)
            while True:
                lb, hb = self._refine_real(best, width)
                lj, hj = self._refine_real(j, width)
                ab = (Fraction(0) if lb < 0 < hb else min(abs(lb), abs(hb)),
                      max(abs(lb), abs(hb)))
                aj = (Fraction(0) if lj < 0 < hj else min(abs(lj), abs(hj)),
                      max(abs(lj), abs(hj)))
                if ab[1] < aj[0]:
                    best = j
                    break
                if aj[1] < ab[0]:
                    break
                if (hb < 0) != (hj < 0) and (lb > 0) != (lj > 0):
                    # opposite signs: |r_best| vs |r_j| via the sign of the sum
                    s = sum_is_zero(best, j, width)
                    if s == 0:
                        best = j if lj > 0 else best  # tie: take the positive
                        break
                    # r_best < 0 < r_j here since roots ascend
                    if s > 0:
                        best = j
                        break
                    break
                width /= 16
        return best

    # -- root access ----------------------------------------------------------

    def is_real_root(self, j: int) -> bool:
        return self._roots[j].kind == "real"

    def conj_index(self, j: int) -> int:
        r = self._roots[j]
        return j if r.kind == "real" else r.pair

    def real_root_indices(self) -> list:
        return [j for j in range(self.degree) if self.is_real_root(j)]

    def upper_root_indices(self) -> list:
        return [j for j in range(self.degree) if self._roots[j].kind == "upper"]

    def _refine_real(self, j: int, width: Fraction) -> tuple:
        r = self._roots[j]
        with self._lock:
            lo, hi = r.interval
            if hi - lo > width:
                r.interval = polys.refine_root(self._sqfree, lo, hi, width)
        return r.interval

    def _refine_complex(self, j: int, width: Fraction) -> tuple:
        r = self._roots[j]
        base = r if r.kind == "upper" else self._roots[r.pair]
        with self._lock:
            if max(base.rect[1] - base.rect[0], base.rect[3] - base.rect[2]) > width:
                base.rect = _refine_rect(self.minpoly_int, base.rect, width)
        return base.rect

    def root_box(self, j: int, width: Fraction = Fraction(1, 2 ** 30)):
        """Certified enclosure of the j-th conjugate of beta."""
        r = self._roots[j]
        if r.kind == "real":
            return RatInterval(*self._refine_real(j, width))
        xlo, xhi, ylo, yhi = self._refine_complex(j, width)
        im = RatInterval(ylo, yhi)
        if r.kind == "lower":
            im = -im
        return ComplexBox(RatInterval(xlo, xhi), im)

    # -- elements -------------------------------------------------------------

    def element(self, coords) -> FieldElement:
        if isinstance(coords, FieldElement):
            if coords.field != self:
                raise FieldMismatch("element from a different field")
            return coords
        if isinstance(coords, (int, Fraction, str)):
            v = [Fraction(0)] * self.degree
            v[0] = Fraction(coords)
            return FieldElement(self, tuple(v))
        v = [Fraction(c) for c in coords]
        if len(v) != self.degree:
            raise ValueError("coordinate vector has wrong length")
        return FieldElement(self, tuple(v))

    @property
    def zero(self) -> FieldElement:
        return self.element(0)

    @property
    def one(self) -> FieldElement:
        return self.element(1)

    @property
    def beta(self) -> FieldElement:
        if self.degree == 1:
            return self.element(-self.monic_minpoly[0])
        v = [Fraction(0)] * self.degree
        v[1] = Fraction(1)
        return FieldElement(self, tuple(v))

    @property
    def unit_rank(self) -> int:
        r1, r2 = self.signature
        return r1 + r2 - 1

    @property
    def has_rank_one_units(self) -> bool:
        return self.unit_rank == 1

    def power_sums(self, upto: int) -> list:
        """Traces of beta^k for 0 <= k <= upto, by Newton's identities."""
        m, a = self.degree, self.monic_minpoly
        ps = [Fraction(m)]
        for k in range(1, upto + 1):
            acc = Fraction(0)
            for i in range(1, min(k - 1, m) + 1):
                acc += a[m - i] * ps[k - i]
            if k <= m:
                ps.append(-k * a[m - k] - acc)
            else:
                ps.append(-acc)
        return ps

    def __eq__(self, other):
        return (isinstance(other, NumberField)
                and self.minpoly_int == other.minpoly_int
                and self.distinguished == other.distinguished)

    def __hash__(self):
        return hash((self.minpoly_int, self.distinguished))

    def __repr__(self):
        terms = " + ".join(
            f"{c}*x^{i}" if i else str(c)
            for i, c in enumerate(self.minpoly_int) if c)
        return f"NumberField({terms}, signature={self.signature})"


class FieldElement:
    __slots__ = ("field", "coords")

    def __init__(self, field: NumberField, coords: tuple):
        self.field = field
        self.coords = coords

    # -- ring structure -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch("elements of different fields")
            return other
        if isinstance(other, (int, Fraction, str)):
            return self.field.element(Fraction(other))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.field,
                            tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.coords))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return FieldElement(self.field, tuple(a * q for a in self.coords))
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        m = self.field.degree
        prod = [Fraction(0)] * (2 * m - 1)
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(o.coords):
                    if b:
                        prod[i + j] += a * b
        red = self.field._red
        out = [Fraction(0)] * m
        for k, c in enumerate(prod):
            if c:
                row = red[k]
                for t in range(m):
                    if row[t]:
                        out[t] += c * row[t]
        return FieldElement(self.field, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> FieldElement:
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        if self.field.degree == 1:
            return self.field.element(1 / self.coords[0])
        a = polys.mk(self.coords)
        b = self.field.monic_minpoly
        s0, s1 = polys.ONE, polys.ZERO
        r0, r1 = a, b
        while not polys.is_zero(r1):
            q, r = polys.divmod_(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, polys.sub(s0, polys.mul(q, s1))
        if polys.degree(r0) != 0:
            # a nontrivial gcd with the defining polynomial exposes a factor
            raise ReducibleDetected(
                f"element exposes factor with coefficients {list(r0)}")
        inv = polys.scale(s0, 1 / r0[0])
        rem = polys.divmod_(inv, b)[1]
        coords = list(rem) + [Fraction(0)] * (self.field.degree - len(rem))
        return FieldElement(self.field, tuple(coords[:self.field.degree]))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.field.element(Fraction(other)) / self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.element(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field == other.field and self.coords == other.coords

    def __hash__(self):
        return hash((self.field, self.coords))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coords[0]

    # -- invariants -------------------------------------------------------

    def mult_matrix(self) -> list:
        """Matrix of multiplication by self in the power basis."""
        m = self.field.degree
        cols = []
        cur = self
        beta = self.field.beta
        for k in range(m):
            cols.append(cur.coords)
            if k < m - 1:
                cur = cur * beta
        return [[cols[j][i] for j in range(m)] for i in range(m)]

    def trace(self) -> Fraction:
        M = self.mult_matrix()
        return sum(M[i][i] for i in range(len(M)))

    def norm(self) -> Fraction:
        M = [row[:] for row in self.mult_matrix()]
        m = len(M)
        det = Fraction(1)
        for c in range(m):
            piv = next((r for r in range(c, m) if M[r][c] != 0), None)
            if piv is None:
                return Fraction(0)
            if piv != c:
                M[c], M[piv] = M[piv], M[c]
                det = -det
            det *= M[c][c]
            inv = 1 / M[c][c]
            for r in range(c + 1, m):
                if M[r][c]:
                    f = M[r][c] * inv
                    for k in range(c, m):
                        M[r][k] -= f * M[c][k]
        return det

    def char_poly(self) -> tuple:
        """Characteristic polynomial of the multiplication matrix, monic of
        degree m, ascending coefficients (Faddeev-LeVerrier)."""
        M = self.mult_matrix()
        m = len(M)
        coeffs = [Fraction(0)] * (m + 1)
        coeffs[m] = Fraction(1)
        N = [row[:] for row in M]
        for k in range(1, m + 1):
            c = -sum(N[i][i] for i in range(m)) / k
            coeffs[m - k] = c
            if k < m:
                for i in range(m):
                    N[i][i] += c
                N = [[sum(M[i][t] * N[t][j] for t in range(m)) for j in range(m)]
                     for i in range(m)]
        return polys.mk(coeffs)

    def minimal_poly(self) -> tuple:
        """Monic minimal polynomial over Q."""
        return polys.squarefree_part(self.char_poly())

    def is_algebraic_integer(self) -> bool:
        return all(c.denominator == 1 for c in self.char_poly())

    def is_unit(self) -> bool:
        return self.is_algebraic_integer() and abs(self.norm()) == 1

    # -- embeddings ---------------------------------------------------------

    def embed(self, root_index: Optional[int] = None, prec_bits: int = 30):
        """Certified box around sigma_j(self); width at most 2**(1-prec_bits)."""
        f = self.field
        j = f.distinguished if root_index is None else root_index
        target = Fraction(1, 2 ** prec_bits)
        if self.is_rational():
            q = self.coords[0]
            return (RatInterval.point(q) if f.is_real_root(j)
                    else ComplexBox.point(q))
        width = Fraction(1, 2 ** 8)
        while True:
            if f.is_real_root(j):
                out = poly_interval(self.coords,
                                    RatInterval(*f._refine_real(j, width)))
            else:
                out = poly_complex_box(self.coords, f.root_box(j, width))
            if out.width <= 2 * target:
                return out
            width /= 2 ** 6

    def compare_rational(self, q, root_index: Optional[int] = None) -> int:
        """Exact sign of sigma_j(self) - q at a real embedding."""
        f = self.field
        j = f.distinguished if root_index is None else root_index
        if not f.is_real_root(j):
            raise ComplexEmbedding("comparison needs a real embedding")
        q = Fraction(q)
        if self.is_rational():
            return _sign(self.coords[0] - q)
        if self == q:
            return 0
        prec = 8
        while True:
            box = self.embed(j, prec)
            if box.lo > q:
                return 1
            if box.hi < q:
                return -1
            prec *= 2

    def __repr__(self):
        return f"FieldElement{self.coords}"


# ---------------------------------------------------------------------------
# certified integer-part primitives on real embeddings
# ---------------------------------------------------------------------------

def certified_floor(x: FieldElement, root_index: Optional[int] = None) -> int:
    """Exact floor of sigma_j(x) at a real embedding.

    The enclosure is refined until it pins a single unit interval; when it
    keeps straddling an integer n, the exact test x == n settles the hit.
    """
    f = x.field
    j = f.distinguished if root_index is None else root_index
    if not f.is_real_root(j):
        raise ComplexEmbedding("floor needs a real embedding")
    if x.is_rational():
        q = x.coords[0]
        return q.numerator // q.denominator
    prec = 8
    while True:
        box = x.embed(j, prec)
        flo = box.lo.numerator // box.lo.denominator
        fhi = box.hi.numerator // box.hi.denominator
        if flo == fhi:
            return flo
        if fhi - flo == 1 and x == fhi:
            return fhi
        prec *= 2


def certified_ceil(x: FieldElement, root_index: Optional[int] = None) -> int:
    return -certified_floor(-x, root_index)


def certified_nint(x: FieldElement, root_index: Optional[int] = None) -> int:
    """Nearest integer with halves rounding up: floor(x + 1/2)."""
    return certified_floor(x + Fraction(1, 2), root_index)


def certified_frac(x: FieldElement, root_index: Optional[int] = None) -> FieldElement:
    """x - floor(x), exactly, as a field element."""
    return x - certified_floor(x, root_index)


def certified_dist(x: FieldElement, root_index: Optional[int] = None) -> FieldElement:
    """Distance from sigma_j(x) to the nearest integer, as the exact field
    element |x - nint(x)|."""
    d = x - certified_nint(x, root_index)
    if d.is_zero() or d.compare_rational(0, root_index) >= 0:
        return d
    return -d


def compare_elements(x: FieldElement, y: FieldElement,
                     root_index: Optional[int] = None) -> int:
    """Exact sign of sigma_j(x) - sigma_j(y) at a shared real embedding."""
    d = x - y
    if d.is_zero():
        return 0
    return d.compare_rational(0, root_index)
