"""Linear recurrent sequences with Pisot or Salem characteristic polynomial.

Exact term generation, the trace representation n_i = Tr(beta^i x),
certified nearest-integer stepping with a sound onset index, transfer maps
between sequences sharing a recurrence, exact Salem power recovery with
the floor-correction family, value-set membership, and a desk-scale zero
scanner.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Callable, Optional, Sequence, Union

from . import polys
from .constructions import (SetPredicate, _sqrt_upper, pisot_unit_test,
                            power_set_predicate, salem_test)
from .errors import (DegreeMismatch, NotPisot, RankNotOne, SearchBoundExceeded,
                     SingularSystem, VandermondeSingular, ZeroSourceSequence,
                     ZeroTraceRep)
from .intervals import ComplexBox, RatInterval
from .numberfield import (FieldElement, NumberField, certified_floor,
                          certified_nint)


def _flog(q: Fraction) -> float:
    if q <= 0:
        raise ValueError("log of a nonpositive rational")
    return math.log(q.numerator) - math.log(q.denominator)


class LinRecSeq:
    """n_{i+m} = sum_j a_j n_{i+j}, encoded by the monic characteristic
    polynomial X^m - sum_j a_j X^j (ascending coefficients) and m initial
    terms.  Terms are exact rationals; the associated number field is
    built lazily (deep operations assume the polynomial is the minimal
    polynomial of its dominant root).

    The term cache grows monotonically and is not synchronized: share
    instances across threads only after warming the cache, or give each
    thread its own instance.
    """

    def __init__(self, charpoly: Sequence, initial: Sequence):
        p = polys.mk([Fraction(c) for c in charpoly])
        if polys.degree(p) < 1:
            raise DegreeMismatch("characteristic polynomial must have degree >= 1")
        p = polys.monic(p)
        if not polys.is_squarefree(p):
            from .errors import NotSquarefree
            raise NotSquarefree("characteristic polynomial has a repeated root")
        self.charpoly = p
        self.order = polys.degree(p)
        init = [Fraction(v) for v in initial]
        if len(init) != self.order:
            raise DegreeMismatch(
                f"need {self.order} initial terms, got {len(init)}")
        self._terms = init
        self._rec = [-c for c in p[:-1]]  # n_{i+m} = sum rec[j] * n_{i+j}
        self._field: Optional[NumberField] = None
        self._trace_rep: Optional[FieldElement] = None
        self._to_powers = None

    @property
    def field(self) -> NumberField:
        if self._field is None:
            self._field = NumberField(self.charpoly)
        return self._field

    def term(self, i: int) -> Fraction:
        if i < 0:
            raise IndexError("sequence indices start at 0")
        t, rec, m = self._terms, self._rec, self.order
        while len(t) <= i:
            nxt = sum(rec[j] * t[len(t) - m + j] for j in range(m))
            t.append(nxt)
        return t[i]

    def terms(self, upto: int) -> list:
        self.term(upto)
        return self._terms[:upto + 1]

    def is_zero_sequence(self) -> bool:
        return all(v == 0 for v in self._terms[:self.order])

    def integer_scale(self) -> Fraction:
        """s with s * n_i integral for all i (the characteristic polynomial
        is monic; denominators never grow past the initial ones)."""
        s = lcm(*[v.denominator for v in self._terms[:self.order]])
        return Fraction(s)

    def __repr__(self):
        return (f"LinRecSeq(charpoly={[str(c) for c in self.charpoly]}, "
                f"init={[str(v) for v in self._terms[:self.order]]})")


# ---------------------------------------------------------------------------
# trace representation
# ---------------------------------------------------------------------------

def _solve_trace_system(f: NumberField, rhs: list) -> FieldElement:
    """The unique y with Tr(beta^j y) = rhs[j] for 0 <= j < m."""
    m = f.degree
    ps = f.power_sums(2 * m)
    A = [[ps[j + k] for k in range(m)] + [rhs[j]] for j in range(m)]
    for c in range(m):
        piv = next((r for r in range(c, m) if A[r][c] != 0), None)
        if piv is None:
            raise SingularSystem("trace system is singular")
        A[c], A[piv] = A[piv], A[c]
        inv = 1 / A[c][c]
        A[c] = [v * inv for v in A[c]]
        for r in range(m):
            if r != c and A[r][c]:
                fac = A[r][c]
                A[r] = [v - fac * w for v, w in zip(A[r], A[c])]
    return f.element([A[k][m] for k in range(m)])


def trace_representation(seq: LinRecSeq) -> FieldElement:
    """The unique x in K with Tr(beta^i x) = n_i for all i."""
    if seq._trace_rep is None:
        rhs = [seq.term(i) for i in range(seq.order)]
        seq._trace_rep = _solve_trace_system(seq.field, rhs)
    return seq._trace_rep


# ---------------------------------------------------------------------------
# Pisot stepping
# ---------------------------------------------------------------------------

def _require_pisot_charpoly(f: NumberField) -> None:
    """The distinguished root exceeds 1 and every other conjugate has
    modulus certified below 1."""
    if not f.is_real_root(f.distinguished):
        raise NotPisot("no real dominant root")
    beta = f.beta
    if beta.compare_rational(1) <= 0:
        raise NotPisot("dominant root does not exceed 1")
    for j in range(f.degree):
        if j == f.distinguished:
            continue
        from .constructions import _abs_lt_one
        if not _abs_lt_one(beta, j):
            raise NotPisot(f"conjugate {j} has modulus >= 1")


def _conjugate_data(seq: LinRecSeq, bits: int = 48) -> list:
    """(index, |alpha| upper bound, |w_alpha| upper bound) over the
    non-distinguished conjugates, where w_alpha = sigma_alpha(trace rep)."""
    f = seq.field
    x = trace_representation(seq)
    out = []
    for j in range(f.degree):
        if j == f.distinguished:
            continue
        boxa = f.root_box(j, Fraction(1, 2 ** bits))
        ua = (_sqrt_upper(boxa.abs_sq().hi, bits) if isinstance(boxa, ComplexBox)
              else boxa.mag)
        boxw = x.embed(j, bits)
        uw = (_sqrt_upper(boxw.abs_sq().hi, bits) if isinstance(boxw, ComplexBox)
              else boxw.mag)
        out.append((j, ua, uw))
    return out


def verified_i0(seq: LinRecSeq, j: int) -> int:
    """A sound onset: for every i >= i0, n_{i+j} = nint(beta^j n_i).

    The certified bound sum |w_a| |a|^i (|a|^j + beta^j) < 1/2 is evaluated
    with rational upper bounds; it may overshoot the true minimal onset but
    never undershoots.
    """
    f = seq.field
    _require_pisot_charpoly(f)
    if j == 0:
        return 0
    if seq.is_zero_sequence():
        return 0
    bits = 48
    while True:
        data = _conjugate_data(seq, bits)
        if all(ua < 1 for _jj, ua, _uw in data):
            break
        bits *= 2
    bhi = f.beta.embed(None, bits).hi
    terms = [uw * (ua ** j + bhi ** j) for _jj, ua, uw in data]
    uas = [ua for _jj, ua, _uw in data]
    i = 0
    while True:
        if sum(terms) < Fraction(1, 2):
            return i
        terms = [t * ua for t, ua in zip(terms, uas)]
        i += 1


def pisot_step(beta: FieldElement, j: int, n) -> Fraction:
    """nint(beta^j * n), decided exactly."""
    return Fraction(certified_nint(beta ** j * Fraction(n)))


def true_onset(seq: LinRecSeq, j: int, window: int = 200) -> int:
    """The least onset observed on a finite window (scan; the verified
    bound from verified_i0 is sound, this reports the empirical minimum)."""
    i0 = verified_i0(seq, j)
    bj = seq.field.beta ** j
    first_bad = -1
    for i in range(i0 - 1, -1, -1):
        if certified_nint(bj * seq.term(i)) != seq.term(i + j):
            first_bad = i
            break
    return first_bad + 1


# ---------------------------------------------------------------------------
# transfer maps
# ---------------------------------------------------------------------------

class _NintCache:
    """Fast certified nint(beta^j * q) using a fixed high-precision
    enclosure (pure integer arithmetic for integer q), falling back to
    full refinement near half-integers."""

    def __init__(self, f: NumberField, j: int, bits: int = 160):
        self.elem = f.beta ** j
        self.box = self.elem.embed(None, bits)
        self.T = bits
        self.lo_num = (self.box.lo.numerator << bits) // self.box.lo.denominator
        self.hi_num = -((-self.box.hi.numerator << bits) // self.box.hi.denominator)

    def __call__(self, q) -> Fraction:
        if isinstance(q, int) or q.denominator == 1:
            zi = int(q)
            a, b = self.lo_num * zi, self.hi_num * zi
            if zi < 0:
                a, b = b, a
            T1 = self.T + 1
            half = 1 << self.T
            na = (2 * a + half) >> T1
            nb = (2 * b + half) >> T1
            if na == nb:
                return Fraction(na)
        else:
            iv = self.box * q + Fraction(1, 2)
            flo = iv.lo.numerator // iv.lo.denominator
            fhi = iv.hi.numerator // iv.hi.denominator
            if flo == fhi:
                return Fraction(flo)
        return Fraction(certified_nint(self.elem * Fraction(q)))


@dataclass
class TransferMap:
    """g(n) = sum_j w_j nint(beta^j n), valid from the onset index on the
    source sequence; the source is rescaled to integers internally."""
    field: NumberField
    coeffs: list                       # rationals or field elements
    onset: int
    scale: Fraction                    # integer-clearing scalar of the source
    _nints: list

    def apply(self, q) -> Union[Fraction, FieldElement]:
        z = Fraction(q) * self.scale
        acc = None
        for w, nint_j in zip(self.coeffs, self._nints):
            term = w * nint_j(z)
            acc = term if acc is None else acc + term
        return acc


def _hankel_rows(seq_terms: Callable, m: int) -> list:
    return [[seq_terms(i + j) for j in range(m)] for i in range(m)]


def _solve_rational_system(M: list, rhs: list):
    """Solve M w = rhs exactly; rhs entries may be rationals or field
    elements (the matrix is rational)."""
    n = len(M)
    A = [row[:] for row in M]
    b = list(rhs)
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c] != 0), None)
        if piv is None:
            raise SingularSystem("transfer system is singular")
        A[c], A[piv] = A[piv], A[c]
        b[c], b[piv] = b[piv], b[c]
        inv = 1 / A[c][c]
        A[c] = [v * inv for v in A[c]]
        b[c] = b[c] * inv
        for r in range(n):
            if r != c and A[r][c]:
                fac = A[r][c]
                A[r] = [v - fac * w for v, w in zip(A[r], A[c])]
                b[r] = b[r] - b[c] * fac
    return b


def transfer_map(src: LinRecSeq, dst: LinRecSeq) -> TransferMap:
    """g with g(src_i) = dst_i for all i >= onset (both sequences satisfy
    the same Pisot recurrence)."""
    if src.charpoly != dst.charpoly:
        raise DegreeMismatch("sequences satisfy different recurrences")
    if src.is_zero_sequence():
        raise ZeroSourceSequence("transfer source is identically zero")
    f = src.field
    _require_pisot_charpoly(f)
    s = src.integer_scale()
    zsrc = LinRecSeq(src.charpoly, [s * src.term(i) for i in range(src.order)])
    m = src.order
    M = _hankel_rows(zsrc.term, m)
    w = _solve_rational_system(M, [dst.term(i) for i in range(m)])
    onset = max(verified_i0(zsrc, j) for j in range(m))
    tm = TransferMap(f, w, onset, s, [_NintCache(f, j) for j in range(m)])
    for i in range(onset, onset + 2 * m):
        if tm.apply(src.term(i)) != dst.term(i):
            raise SingularSystem("transfer verification failed")  # alarm
    return tm


def transfer_to_powers(seq: LinRecSeq) -> TransferMap:
    """g with g(n_i) = beta^i (field-valued) for all i >= onset."""
    if seq._to_powers is not None:
        return seq._to_powers
    if seq.is_zero_sequence():
        raise ZeroSourceSequence("transfer source is identically zero")
    f = seq.field
    _require_pisot_charpoly(f)
    s = seq.integer_scale()
    zsrc = LinRecSeq(seq.charpoly, [s * seq.term(i) for i in range(seq.order)])
    m = seq.order
    M = _hankel_rows(zsrc.term, m)
    w = _solve_rational_system(M, [f.beta ** i for i in range(m)])
    onset = max(verified_i0(zsrc, j) for j in range(m))
    tm = TransferMap(f, w, onset, s, [_NintCache(f, j) for j in range(m)])
    for i in range(onset, onset + 2 * m):
        if tm.apply(seq.term(i)) != f.beta ** i:
            raise SingularSystem("transfer verification failed")  # alarm
    seq._to_powers = tm
    return tm


# ---------------------------------------------------------------------------
# Salem recovery
# ---------------------------------------------------------------------------

def salem_recover_exact(seq: LinRecSeq, i: int,
                        window: Optional[Sequence] = None) -> FieldElement:
    """beta^i from a window (n_i, ..., n_{i+m-1}), by solving the trace
    system exactly: the window determines beta^i x, divide by x."""
    x = trace_representation(seq)
    if x.is_zero():
        raise ZeroTraceRep("sequence is identically zero")
    m = seq.order
    if window is None:
        window = [seq.term(i + j) for j in range(m)]
    window = [Fraction(v) for v in window]
    if len(window) != m:
        raise DegreeMismatch(f"window must have {m} terms")
    y = _solve_trace_system(seq.field, window)
    return y / x


class SalemRecoveryFamily:
    """The finite family g_c(n) = sum_j gamma_j (floor(beta^j n) - c_j)
    indexed by integer correction tuples |c_j| <= C_j.

    gamma_j are the beta-row entries of the inverse of the conjugate
    matrix (w_alpha alpha^j), carried as certified complex boxes; every
    recovery is confirmed exactly through the window solve, so the boxes
    never decide anything alone.
    """

    def __init__(self, seq: LinRecSeq, verify_range: range = range(0, 51)):
        f = seq.field
        if not salem_test(f.beta):
            raise NotPisot("characteristic polynomial is not a Salem minimal polynomial")
        if seq.is_zero_sequence():
            raise ZeroTraceRep("sequence is identically zero")
        self.seq = seq
        self.field = f
        self.verify_range = verify_range
        x = trace_representation(seq)
        m = f.degree

        # analytic correction bounds: |floor(beta^j n_i) - n_{i+j}|
        #   <= 1 + (sum_{a != beta} |w_a|) (beta^j + 1)
        bits = 64
        wsum = Fraction(0)
        for j in range(m):
            if j == f.distinguished:
                continue
            box = x.embed(j, bits)
            wsum += (_sqrt_upper(box.abs_sq().hi, bits)
                     if isinstance(box, ComplexBox) else box.mag)
        bhi = f.beta.embed(None, bits).hi
        self.bounds = []
        for j in range(m):
            a_j = 1 + wsum * (bhi ** j + 1)
            self.bounds.append(int(a_j.numerator // a_j.denominator) + 1)
        self.candidate_count = math.prod(2 * c + 1 for c in self.bounds)

        self._x = x
        self._gamma_bits = 0
        self._gamma = None
        self._gamma_at(96)

    # -- interval solve for the gamma row ------------------------------------

    def _gamma_at(self, bits: int) -> list:
        if self._gamma is not None and self._gamma_bits >= bits:
            return self._gamma
        f, x, m = self.field, self._x, self.field.degree
        attempt = bits
        while attempt <= 4000:
            boxes_w = [x.embed(j, attempt) for j in range(m)]
            boxes_a = [f.root_box(j, Fraction(1, 2 ** attempt)) for j in range(m)]
            cboxes_w = [b if isinstance(b, ComplexBox)
                        else ComplexBox(b, RatInterval.point(0)) for b in boxes_w]
            cboxes_a = [b if isinstance(b, ComplexBox)
                        else ComplexBox(b, RatInterval.point(0)) for b in boxes_a]
            if any(bw.abs_sq().contains(0) for bw in cboxes_w):
                attempt *= 2
                continue  # w_alpha = 0 impossible for x != 0; refine
            M = []
            for j in range(m):
                M.append([cboxes_w[a] * cboxes_a[a].pow(j) for a in range(m)])
            try:
                inv = _invert_complex_interval(M)
            except ZeroDivisionError:
                attempt *= 2
                continue
            self.gamma_all = inv          # row alpha solves for alpha^i
            self._gamma = inv[self.field.distinguished]
            self._gamma_bits = attempt
            return self._gamma
        raise VandermondeSingular("conjugate matrix could not be certified invertible")

    def candidates(self):
        """Iterate the correction tuples (c_j) with |c_j| <= C_j; the count
        is the product of (2 C_j + 1) and is not materialized."""
        from itertools import product
        return product(*(range(-C, C + 1) for C in self.bounds))

    def correction_tuple(self, i: int) -> tuple:
        """The exact floor corrections c_j = floor(beta^j n_i) - n_{i+j}."""
        f, seq = self.field, self.seq
        n_i = seq.term(i)
        out = []
        for j in range(f.degree):
            fl = certified_floor(f.beta ** j * n_i)
            out.append(Fraction(fl) - seq.term(i + j))
        return tuple(out)

    def contains(self, c: Sequence) -> bool:
        return all(abs(Fraction(cj)) <= Cj for cj, Cj in zip(c, self.bounds))

    def g_value(self, n, c: Sequence, bits: int = 96) -> ComplexBox:
        """Certified enclosure of g_c(n)."""
        n = Fraction(n)
        gamma = self._gamma_at(bits)
        acc = ComplexBox.point(0)
        for j, (gj, cj) in enumerate(zip(gamma, c)):
            fl = certified_floor(self.field.beta ** j * n)
            acc = acc + gj * (Fraction(fl) - Fraction(cj))
        return acc

    def recover(self, i: int) -> tuple:
        """(c, enclosure) with g_c(n_i) certified consistent with beta^i and
        the window solve confirming beta^i exactly."""
        c = self.correction_tuple(i)
        if not self.contains(c):
            raise VandermondeSingular(
                f"audit failure: correction tuple at i={i} exceeds its bound")
        exact = salem_recover_exact(self.seq, i)
        if exact != self.field.beta ** i:
            raise VandermondeSingular(f"window solve failed at i={i}")  # alarm
        bits = 96
        beta_i = self.field.beta ** i
        while True:
            enc = self.g_value(self.seq.term(i), c, bits)
            target = beta_i.embed(None, bits)
            tbox = (target if isinstance(target, ComplexBox)
                    else ComplexBox(target, RatInterval.point(0)))
            # enclosure must meet the exact value's box...
            if (enc.re.overlaps(tbox.re) and enc.im.overlaps(tbox.im)):
                # ... and be narrower than the gap to the neighbours
                gap = (self.field.beta ** (i + 1) - beta_i).embed(None, 20)
                if enc.width * 4 < abs(gap.lo):
                    return c, enc
            bits *= 2
            if bits > 4000:
                raise VandermondeSingular("recovery enclosure will not converge")

    def verify(self) -> None:
        for i in self.verify_range:
            self.recover(i)


def _invert_complex_interval(M: list) -> list:
    """Inverse of a complex interval matrix by Gaussian elimination;
    raises ZeroDivisionError if a pivot box straddles zero."""
    n = len(M)
    A = [row[:] + [ComplexBox.point(1 if i == k else 0) for k in range(n)]
         for i, row in enumerate(M)]
    for c in range(n):
        piv = None
        for r in range(c, n):
            if not A[r][c].abs_sq().contains(0):
                piv = r
                break
        if piv is None:
            raise ZeroDivisionError
        A[c], A[piv] = A[piv], A[c]
        inv = A[c][c].recip()
        A[c] = [v * inv for v in A[c]]
        for r in range(n):
            if r != c:
                fac = A[r][c]
                A[r] = [v - fac * w for v, w in zip(A[r], A[c])]
    return [row[n:] for row in A]


def salem_recovery_family(seq: LinRecSeq,
                          verify_range: range = range(0, 51)) -> SalemRecoveryFamily:
    fam = SalemRecoveryFamily(seq, verify_range)
    fam.verify()
    return fam


# ---------------------------------------------------------------------------
# value-set membership
# ---------------------------------------------------------------------------

def _archimedean_constants(seq: LinRecSeq) -> tuple:
    """(B, wlo, log_beta_lo) with |n_k| >= wlo * beta^k - B for all k."""
    if not hasattr(seq, "_arch"):
        f = seq.field
        x = trace_representation(seq)
        bits = 48
        data = _conjugate_data(seq, bits)
        B = sum(uw for _j, _ua, uw in data)  # |alpha| <= 1: Pisot and Salem
        wbox = x.embed(None, bits)
        while wbox.lo <= 0 <= wbox.hi:
            bits *= 2
            wbox = x.embed(None, bits)
        blo = f.beta.embed(None, 48).lo
        seq._arch = (B, wbox.mig, _flog(blo))
    return seq._arch


def _index_window(seq: LinRecSeq, q: Fraction, search_bound: int) -> int:
    """A certified k_hi: any index k with n_k = q satisfies k <= k_hi."""
    B, wlo, log_blo = _archimedean_constants(seq)
    lim = (abs(q) + B) / wlo
    if lim <= 1:
        k_hi = 0
    else:
        k_hi = int(_flog(lim) / log_blo) + 2
    if k_hi > search_bound:
        raise SearchBoundExceeded(
            f"query size requires scanning up to index {k_hi} > bound {search_bound}")
    return k_hi


def _vsm_setup(seq: LinRecSeq) -> dict:
    """One-time constants for value-set membership queries."""
    if hasattr(seq, "_vsm"):
        return seq._vsm
    f = seq.field
    beta = f.beta
    cache = {"zero": seq.is_zero_sequence()}
    if not cache["zero"]:
        B, wlo, log_blo = _archimedean_constants(seq)
        cache.update(Bf=float(B), wlof=float(wlo), log_blo=log_blo)
        if salem_test(beta):
            cache["kind"] = "salem"
            cache["x"] = trace_representation(seq)
        else:
            _require_pisot_charpoly(f)
            if not (f.has_rank_one_units and pisot_unit_test(beta)):
                raise RankNotOne("value-set predicate needs a rank-one "
                                 "Pisot unit or a Salem number")
            cache["kind"] = "pisot"
            tm = transfer_to_powers(seq)
            cache["tm"] = tm
            cache["pre"] = {seq.term(i): i
                            for i in range(tm.onset + 2 * seq.order)}
            cache["pred"] = _power_pred(seq)
    seq._vsm = cache
    return cache


def _float_index_bound(cache: dict, q: Fraction) -> float:
    try:
        qa = abs(float(q))
    except OverflowError:
        return (_flog(abs(q)) + 1.0) / cache["log_blo"]
    lim = (qa + cache["Bf"]) / cache["wlof"]
    if lim <= 1.0:
        return 0.0
    return math.log(lim) / cache["log_blo"]


def value_set_membership(seq: LinRecSeq, q, search_bound: int = 10 ** 4) -> bool:
    """Is q a value of the sequence?  Exact.

    Pisot route: push q through the transfer map onto a candidate power
    beta^k, read off k with the power-set predicate, and confirm n_k = q
    exactly.  Salem route: bound the candidate index window through the
    archimedean size of q and confirm candidates with the exact window
    solve.  Small pre-onset indices are checked directly either way.
    """
    q = Fraction(q)
    cache = _vsm_setup(seq)
    if cache["zero"]:
        return q == 0
    f = seq.field
    beta = f.beta
    if _float_index_bound(cache, q) > search_bound - 4:
        raise SearchBoundExceeded(
            f"query size requires an index search beyond {search_bound}")
    if cache["kind"] == "salem":
        k_hi = _index_window(seq, q, search_bound)
        x = cache["x"]
        for k in range(0, k_hi + 1):
            if seq.term(k) == q:
                # confirm through the recovery route: the window solve must
                # return exactly beta^k and the trace close the loop
                y = salem_recover_exact(seq, k)
                if y == beta ** k and (y * x).trace() == q:
                    return True
        return False
    if q in cache["pre"]:
        return True
    tm = cache["tm"]
    y = tm.apply(q)
    k = cache["pred"].exponent_of(y)
    if k is not None and seq.term(k) == q:
        return True
    return False


def _power_pred(seq: LinRecSeq) -> SetPredicate:
    if not hasattr(seq, "_power_pred"):
        seq._power_pred = power_set_predicate(seq.field.beta)
    return seq._power_pred


# ---------------------------------------------------------------------------
# zero scanning (desk scale)
# ---------------------------------------------------------------------------

@dataclass
class ZeroReport:
    bound: int
    zeros: list
    progressions: list     # (modulus, residue) classes entirely zero on the window
    heuristic: bool = True


def sml_zeros(seq: LinRecSeq, bound: int) -> ZeroReport:
    """Scan [0, bound] for zero terms and flag residue classes (modulus up
    to 64) that vanish identically on the window.  A structure heuristic,
    not a decision procedure."""
    if bound > 10 ** 5:
        raise ValueError("bound is capped at 10^5 (desk scale)")
    zeros = [i for i in range(bound + 1) if seq.term(i) == 0]
    zset = set(zeros)
    progressions = []
    for d in range(1, 65):
        for r in range(d):
            idxs = range(r, bound + 1, d)
            if len(idxs) >= 3 and all(i in zset for i in idxs):
                if not any(d % d0 == 0 and r % d0 == r0
                           for d0, r0 in progressions):
                    progressions.append((d, r))
    return ZeroReport(bound=bound, zeros=zeros, progressions=progressions)
