"""Explicit set predicates on number fields.

Lattice / ring-of-integers / unit indicators, Pisot-unit and Salem
detectors, the predicate for the powers of a Pisot unit in a rank-one
field, and the hereditary predicate deciding membership in {beta^i : i in I}
for an arbitrary index set I with a decidability certificate.

Membership in the cyclic group generated by beta is decided by rounding a
certified logarithm to a candidate exponent and confirming with an exact
power comparison; the congruence-subgroup route this replaces is
nonconstructive but extensionally identical on the field.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Callable, Iterable, Optional

from .algebraic import abs_sq_of_embedding
from .errors import (DependentBasis, InvalidRho, RankNotOne,
                     ThresholdAmbiguous)
from .numberfield import FieldElement, NumberField, certified_dist
from . import polys

# ---------------------------------------------------------------------------
# predicates and index sets
# ---------------------------------------------------------------------------


class SetPredicate:
    """An exact membership function K -> {0, 1} with a provenance tag."""

    def __init__(self, name: str, field: NumberField, fn: Callable,
                 explain: Optional[Callable] = None,
                 exponent_of: Optional[Callable] = None):
        self.name = name
        self.field = field
        self._fn = fn
        self._explain = explain
        self.exponent_of = exponent_of

    def __call__(self, x: FieldElement) -> int:
        return 1 if self._fn(x) else 0

    def explain(self, x: FieldElement) -> dict:
        if self._explain is None:
            return {"predicate": self.name, "value": self(x)}
        return self._explain(x)

    def __repr__(self):
        return f"SetPredicate({self.name})"


class IndexSet:
    """A subset of the nonnegative integers with a decidability certificate:
    either an explicit finite set, or an eventually periodic description."""

    def __init__(self, kind: str, members=None, modulus=None, residues=None,
                 start: int = 0):
        self.kind = kind
        self.members = frozenset(members) if members is not None else None
        self.modulus = modulus
        self.residues = frozenset(residues) if residues is not None else None
        self.start = start

    @staticmethod
    def finite(members: Iterable) -> "IndexSet":
        ms = frozenset(int(i) for i in members)
        if any(i < 0 for i in ms):
            raise ValueError("index sets live in the nonnegative integers")
        return IndexSet("finite", members=ms)

    @staticmethod
    def periodic(modulus: int, residues: Iterable, start: int = 0) -> "IndexSet":
        if modulus < 1:
            raise ValueError("modulus must be positive")
        rs = frozenset(int(r) % modulus for r in residues)
        return IndexSet("periodic", modulus=modulus, residues=rs, start=start)

    @staticmethod
    def evens() -> "IndexSet":
        return IndexSet.periodic(2, [0])

    @staticmethod
    def from_bounded_predicate(fn: Callable, bound: int) -> "IndexSet":
        """A membership oracle promised empty beyond the bound."""
        return IndexSet.finite([i for i in range(bound + 1) if fn(i)])

    def contains(self, i: int) -> bool:
        if i < 0:
            return False
        if self.kind == "finite":
            return i in self.members
        return i >= self.start and i % self.modulus in self.residues

    __contains__ = contains

    def members_between(self, lo: int, hi: int) -> list:
        """Members in [lo, hi], ascending."""
        lo = max(lo, 0)
        return [i for i in range(lo, hi + 1) if self.contains(i)]

    def dilated_section(self, residue: int, modulus: int) -> "IndexSet":
        """The set {j : residue + j*modulus in self}."""
        if self.kind == "finite":
            return IndexSet.finite([(i - residue) // modulus for i in self.members
                                    if i >= residue and (i - residue) % modulus == 0])
        # membership of residue + j*modulus depends on j mod p (and the start)
        p = self.modulus // math.gcd(self.modulus, modulus)
        rs = [j for j in range(p) if (residue + j * modulus) % self.modulus in self.residues]
        start_j = 0
        while residue + start_j * modulus < self.start:
            start_j += 1
        return IndexSet.periodic(p, rs, start=start_j)

    def __repr__(self):
        if self.kind == "finite":
            return f"IndexSet({sorted(self.members)})"
        return (f"IndexSet(i ≡ {sorted(self.residues)} mod {self.modulus}"
                f"{f', i >= {self.start}' if self.start else ''})")


# ---------------------------------------------------------------------------
# indicators from linear algebra
# ---------------------------------------------------------------------------

def _invert_matrix(M: list) -> Optional[list]:
    n = len(M)
    A = [row[:] + [Fraction(1) if i == j else Fraction(0) for j in range(n)]
         for i, row in enumerate(M)]
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c] != 0), None)
        if piv is None:
            return None
        A[c], A[piv] = A[piv], A[c]
        inv = 1 / A[c][c]
        A[c] = [v * inv for v in A[c]]
        for r in range(n):
            if r != c and A[r][c]:
                f = A[r][c]
                A[r] = [v - f * w for v, w in zip(A[r], A[c])]
    return [row[n:] for row in A]


def lattice_indicator(field: NumberField, basis: list) -> SetPredicate:
    """Indicator of the Z-span of a Q-linearly independent family: the dual
    coordinates must be integers and the complementary coordinates zero."""
    r = len(basis)
    m = field.degree
    cols = [field.element(b).coords for b in basis]
    # extend with standard basis vectors, keeping the matrix invertible
    chosen = list(cols)
    for k in range(m):
        if len(chosen) == m:
            break
        e = tuple(Fraction(1) if t == k else Fraction(0) for t in range(m))
        trial = [list(col) for col in (*chosen, e)]
        Mt = [[trial[j][i] for j in range(len(trial))] for i in range(m)]
        # rank test on the current columns
        rank = _matrix_rank([row[:] for row in Mt])
        if rank == len(trial):
            chosen.append(e)
    if len(chosen) < m:
        raise DependentBasis("basis is Q-linearly dependent")
    M = [[chosen[j][i] for j in range(m)] for i in range(m)]
    Minv = _invert_matrix(M)
    if Minv is None:
        raise DependentBasis("basis is Q-linearly dependent")

    def fn(x: FieldElement) -> bool:
        x = field.element(x)
        c = [sum(Minv[i][j] * x.coords[j] for j in range(m)) for i in range(m)]
        return (all(ci.denominator == 1 for ci in c[:r])
                and all(ci == 0 for ci in c[r:]))

    return SetPredicate(f"lattice(rank {r})", field, fn)


def _matrix_rank(M: list) -> int:
    if not M:
        return 0
    rows, cols = len(M), len(M[0])
    rank = 0
    for c in range(cols):
        piv = next((r for r in range(rank, rows) if M[r][c] != 0), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = 1 / M[rank][c]
        for r in range(rank + 1, rows):
            if M[r][c]:
                f = M[r][c] * inv
                for k in range(c, cols):
                    M[r][k] -= f * M[rank][k]
        rank += 1
    return rank


def unit_indicator(field: NumberField) -> SetPredicate:
    """Indicator of the unit group: algebraic integers of norm +-1."""

    def fn(x: FieldElement) -> bool:
        x = field.element(x)
        return x.is_algebraic_integer() and abs(x.norm()) == 1

    return SetPredicate("units", field, fn)


# ---------------------------------------------------------------------------
# Pisot and Salem detectors
# ---------------------------------------------------------------------------

def _abs_lt_one(x: FieldElement, j: int) -> bool:
    """Exact test |sigma_j(x)| < 1 (any embedding)."""
    f = x.field
    if f.is_real_root(j):
        return (x.compare_rational(1, j) < 0 and
                x.compare_rational(-1, j) > 0)
    prec = 12
    while True:
        a = x.embed(j, prec).abs_sq()
        if a.hi < 1:
            return True
        if a.lo > 1:
            return False
        if abs_sq_of_embedding(x, j).compare_rational(1) == 0:
            return False
        prec *= 2


def pisot_unit_test(x: FieldElement) -> bool:
    """Is x a Pisot unit of the field: a unit whose distinguished real
    embedding exceeds 1 while every other embedding has modulus below 1.

    Each comparison is certified, with exact resolution of modulus-one
    ties.
    """
    f = x.field
    if x.is_zero() or not f.is_real_root(f.distinguished):
        return False
    if not x.is_unit():
        return False
    if x.compare_rational(1, f.distinguished) <= 0:
        return False
    seen_upper = set()
    for j in range(f.degree):
        if j == f.distinguished:
            continue
        if not f.is_real_root(j):
            pair = min(j, f.conj_index(j))
            if pair in seen_upper:
                continue
            seen_upper.add(pair)
        if not _abs_lt_one(x, j):
            return False
    return True


def _trace_polynomial(p: tuple) -> tuple:
    """For palindromic p of even degree 2k, the degree-k polynomial T with
    p(z) = z^k T(z + 1/z)."""
    d = polys.degree(p)
    k = d // 2
    # z^j + z^-j in terms of y = z + 1/z: Chebyshev-like recursion
    basis = [polys.mk([2]), polys.mk([0, 1])]
    while len(basis) <= k:
        basis.append(polys.sub(polys.mul(polys.mk([0, 1]), basis[-1]), basis[-2]))
    T = polys.scale(polys.ONE, p[k])
    for j in range(1, k + 1):
        T = polys.add(T, polys.scale(basis[j], p[k + j]))
    return T


def salem_test(x: FieldElement) -> bool:
    """Is x a Salem number generating the field: a unit exceeding 1 whose
    minimal polynomial is reciprocal with all conjugates except x and 1/x
    on the unit circle (decided exactly via the trace polynomial)."""
    f = x.field
    if x.is_zero() or not f.is_real_root(f.distinguished):
        return False
    if not x.is_unit():
        return False
    if x.compare_rational(1, f.distinguished) <= 0:
        return False
    mp = x.minimal_poly()
    d = polys.degree(mp)
    if d != f.degree or d < 4 or d % 2 != 0:
        return False
    mpi, _ = polys.to_int_primitive(mp)
    if any(mpi[i] != mpi[d - i] for i in range(d + 1)):
        return False  # 1/x is conjugate to x iff the minimal poly is reciprocal
    T = _trace_polynomial(mpi)
    if polys.eval_at(T, Fraction(2)) == 0 or polys.eval_at(T, Fraction(-2)) == 0:
        return False
    chain = polys.sturm_chain(T)
    inside = polys.count_roots(chain, Fraction(-2), Fraction(2))
    # k-1 of the k roots of T in (-2,2): those are the circle pairs; the
    # remaining root is x + 1/x > 2
    return inside == d // 2 - 1


# ---------------------------------------------------------------------------
# powers of a Pisot unit
# ---------------------------------------------------------------------------

def _flog(q: Fraction) -> float:
    return math.log(q.numerator) - math.log(q.denominator)


def power_set_predicate(beta: FieldElement) -> SetPredicate:
    """Indicator of {beta^i : i >= 0} for a Pisot unit beta in a rank-one
    field.  Membership is decided by rounding a certified logarithm to at
    most three candidate exponents and confirming by an exact power
    comparison."""
    f = beta.field
    if not f.has_rank_one_units:
        raise RankNotOne(f"unit rank is {f.unit_rank}, need 1")
    if not pisot_unit_test(beta):
        raise ValueError("beta must be a Pisot unit")
    log_beta = _flog(beta.embed(None, 40).mid)
    root_f = float(f.root_box(f.distinguished, Fraction(1, 2 ** 52)).mid)
    powers = {0: f.one, 1: beta}

    def power(k: int) -> FieldElement:
        if k not in powers:
            powers[k] = beta ** k
        return powers[k]

    def exponent_of(x) -> Optional[int]:
        x = f.element(x)
        if x == f.one:
            return 0
        if x.is_rational():
            return None
        # float estimate only nominates candidate exponents; the exact
        # power comparison is what decides
        k_est = None
        try:
            val = sum(float(c) * root_f ** t for t, c in enumerate(x.coords))
            if math.isfinite(val) and val > 1:
                k_est = round(math.log(val) / log_beta)
        except OverflowError:
            pass
        if k_est is None:
            if x.compare_rational(1) <= 0:
                return None
            box = x.embed(None, 40)
            if box.lo <= 0:
                return None
            k_est = round(_flog(box.mid) / log_beta)
        for k in (k_est, k_est - 1, k_est + 1):
            if k >= 1 and x == power(k):
                return k
        return None

    def fn(x) -> bool:
        return exponent_of(x) is not None

    return SetPredicate(f"powers of {beta!r}", f, fn, exponent_of=exponent_of)


# ---------------------------------------------------------------------------
# hereditary predicate for {beta^i : i in I}
# ---------------------------------------------------------------------------

def _sqrt_upper(q: Fraction, bits: int = 48) -> Fraction:
    """A rational upper bound for sqrt(q), within 2**(1-bits)."""
    if q <= 0:
        return Fraction(0)
    num = q.numerator << (2 * bits)
    r = math.isqrt(num // q.denominator) + 1
    return Fraction(r, 1 << bits)


def _conjugate_mod_bound(beta: FieldElement, bits: int = 48) -> Fraction:
    """A certified rational upper bound (tight to ~2**-bits) for the moduli
    of all non-distinguished conjugates."""
    f = beta.field
    u = Fraction(0)
    for j in range(f.degree):
        if j == f.distinguished:
            continue
        box = beta.embed(j, bits)
        sq = box.abs_sq() if hasattr(box, "abs_sq") else box.sq()
        u = max(u, _sqrt_upper(sq.hi, bits))
    return u


def default_rho(beta: FieldElement) -> Fraction:
    """A valid contraction rate: 1 < rho < beta with every other conjugate
    of modulus below 1/rho."""
    u = _conjugate_mod_bound(beta)
    inv_u = 1 / u if u > 0 else Fraction(10 ** 6)
    blo = beta.embed(None, 20).lo
    cand = min(blo, inv_u)
    if cand <= 1:
        raise InvalidRho("no valid contraction rate exists")
    rho = 1 + (cand - 1) / 2
    return rho.limit_denominator(10 ** 6)


def pisot_tail_constant(beta: FieldElement, rho: Fraction,
                        direct_window: int = 8) -> Fraction:
    """A rational C with dist(beta^(1+k)) * rho^|k| <= C for every nonzero
    integer k: small |k| are measured exactly, the tails are bounded
    analytically through the conjugate moduli."""
    f = beta.field
    m = f.degree
    if rho <= 1:
        raise InvalidRho("rho must exceed 1")
    if beta.compare_rational(rho) <= 0:
        raise InvalidRho("rho must be below beta")
    bits = 48
    while True:
        u = _conjugate_mod_bound(beta, bits)
        if u * rho < 1:
            break
        # either some conjugate really reaches 1/rho, or the bound is loose
        worst = max((abs_sq_of_embedding(beta, j).compare_rational(1 / rho ** 2))
                    for j in range(f.degree) if j != f.distinguished)
        if worst >= 0:
            raise InvalidRho("a conjugate has modulus at least 1/rho")
        bits *= 2
    C = Fraction(0)
    binv = beta.inverse()
    for k in range(1, direct_window + 1):
        for sign in (1, -1):
            e = 1 + sign * k
            el = beta ** e if e >= 0 else binv ** (-e)
            d = certified_dist(el)
            dhi = Fraction(0) if d.is_zero() else d.embed(None, 60).hi
            C = max(C, dhi * rho ** k)
    K0 = direct_window
    # k > K0: dist(beta^(1+k)) <= (m-1) u^(1+k), so the product is at most
    # (m-1) u (u rho)^k, decreasing in k
    C = max(C, (m - 1) * u * (u * rho) ** (K0 + 1))
    # k < -K0: dist(beta^(1-k)) <= beta^(1-k), product at most beta (rho/beta)^k
    bhi = beta.embed(None, 20).hi
    r = rho * binv.embed(None, 20).hi
    if r >= 1:
        raise InvalidRho("rho must be strictly below beta")
    C = max(C, bhi * r ** (K0 + 1))
    return C


def choose_m(beta: FieldElement, rho: Fraction,
             indices: Optional[IndexSet] = None) -> int:
    """The least power m for which the membership test separates: the tail
    bound 2 C rho^-m / (1 - rho^-m) must drop below dist(beta)/3.

    The index set does not enter the bound (it is worst-cased); the
    parameter is accepted for interface symmetry.
    """
    rho = Fraction(rho)
    C = pisot_tail_constant(beta, rho)
    target = certified_dist(beta) * Fraction(1, 3)
    m = 1
    while m < 10 ** 6:
        err = 2 * C * rho ** (-m) / (1 - rho ** (-m))
        if (target - err).compare_rational(0) > 0:
            return m
        m += 1
    raise ThresholdAmbiguous("no admissible power found below the cap")


@dataclass
class PisotSetSpec:
    """Everything needed to decide membership in {beta^(i m) : i in I}."""
    field: NumberField
    beta: FieldElement
    rho: Fraction
    m: int
    indices: IndexSet
    threshold: FieldElement = dc_field(init=False)
    tail_constant: Fraction = dc_field(init=False)

    def __post_init__(self):
        if not self.field.has_rank_one_units:
            raise RankNotOne(f"unit rank is {self.field.unit_rank}, need 1")
        if not pisot_unit_test(self.beta):
            raise ValueError("beta must be a Pisot unit")
        self.rho = Fraction(self.rho)
        self.tail_constant = pisot_tail_constant(self.beta, self.rho)
        dist_beta = certified_dist(self.beta)
        self.threshold = dist_beta * Fraction(2, 3)
        err = self.tail_error(0)
        if (dist_beta * Fraction(1, 3) - err).compare_rational(0) <= 0:
            raise ValueError(
                f"m = {self.m} is too small for rho = {self.rho}; "
                f"use choose_m")

    @classmethod
    def create(cls, beta: FieldElement, indices: IndexSet,
               rho: Optional[Fraction] = None,
               m: Optional[int] = None) -> "PisotSetSpec":
        rho = default_rho(beta) if rho is None else Fraction(rho)
        if m is None:
            m = choose_m(beta, rho)
        return cls(beta.field, beta, rho, m, indices)

    def tail_error(self, depth: int) -> Fraction:
        """Bound for the distance contribution of all terms beyond the
        given window depth."""
        rm = self.rho ** (-self.m)
        return 2 * self.tail_constant * rm ** (depth + 1) / (1 - rm)


def hereditary_predicate(spec: PisotSetSpec) -> SetPredicate:
    """Indicator of {beta^i : i in I} assembled as the union over residues
    a mod m of the dilated single-residue predicates.

    For x = gamma^j (gamma = beta^m) the test compares the distance of
    gamma^j xi to the nearest integer against (2/3) dist(beta), where
    xi = sum over i in I of beta gamma^-i; the near-diagonal terms are
    summed exactly and the tail is bounded geometrically, so the
    comparison is certified on both sides.
    """
    f = spec.field
    beta, m = spec.beta, spec.m
    gamma = beta ** m
    gamma_pred = power_set_predicate(gamma)
    binv = beta.inverse()
    beta_inv_pows = [binv ** a for a in range(m)]
    sections = [spec.indices.dilated_section(a, m) for a in range(m)]

    def xi_test(a: int, j: int) -> bool:
        section = sections[a]
        depth = 1
        while depth <= 300:
            window = section.members_between(j - depth, j + depth)
            S = f.zero
            for i in window:
                e = 1 + m * (j - i)
                S = S + (beta ** e if e >= 0 else binv ** (-e))
            distS = certified_dist(S)
            tail = spec.tail_error(depth)
            margin = distS - spec.threshold
            if margin.compare_rational(tail) > 0:
                return True
            if (-margin).compare_rational(tail) > 0:
                return False
            depth += 1
        raise ThresholdAmbiguous(
            "certified refinement could not separate the score from the "
            "threshold; construction invariants are violated")

    def locate(x) -> Optional[tuple]:
        x = f.element(x)
        for a in range(m):
            y = x * beta_inv_pows[a]
            k = gamma_pred.exponent_of(y)
            if k is not None:
                return a, k
        return None

    def fn(x) -> bool:
        loc = locate(x)
        if loc is None:
            return False
        a, j = loc
        return xi_test(a, j)

    def explain(x) -> dict:
        x = f.element(x)
        loc = locate(x)
        out = {"predicate": "hereditary", "m": m, "rho": str(spec.rho)}
        if loc is None:
            out.update(value=0, reason="not a power of beta")
            return out
        a, j = loc
        section = sections[a]
        depth = 4
        window = section.members_between(j - depth, j + depth)
        S = f.zero
        for i in window:
            e = 1 + m * (j - i)
            S = S + (beta ** e if e >= 0 else binv ** (-e))
        distS = certified_dist(S)
        box = distS.embed(None, 40)
        tail = spec.tail_error(depth)
        from .intervals import RatInterval
        score = RatInterval(max(box.lo - tail, 0), box.hi + tail)
        thr = spec.threshold.embed(None, 40)
        out.update(value=1 if xi_test(a, j) else 0,
                   exponent=a + j * m,
                   score_interval=[str(score.lo.limit_denominator(10 ** 12)),
                                   str(score.hi.limit_denominator(10 ** 12))],
                   score_approx=score.approx_str(10),
                   threshold_approx=RatInterval(thr.lo, thr.hi).approx_str(10))
        return out

    return SetPredicate(f"{{beta^i : i in {spec.indices!r}}}", f, fn,
                        explain=explain)


# ---------------------------------------------------------------------------
# trace collisions (desk-scale search)
# ---------------------------------------------------------------------------

def trace_collision_search(field: NumberField, x: FieldElement,
                           y: FieldElement, bound: int) -> list:
    """All pairs (i, j) with i, j <= bound and Tr(beta^i x) = Tr(beta^j y),
    by exhaustive exact search (hash join on exact rationals)."""
    if bound > 10 ** 4:
        raise ValueError("bound is capped at 10^4 (desk scale)")
    m = field.degree
    a = field.monic_minpoly

    def trace_seq(z: FieldElement) -> list:
        vals = []
        cur = field.element(z)
        beta = field.beta
        for i in range(min(m, bound + 1)):
            vals.append(cur.trace())
            cur = cur * beta
        while len(vals) <= bound:
            nxt = -sum(a[t] * vals[len(vals) - m + t] for t in range(m))
            vals.append(nxt)
        return vals

    tx = trace_seq(x)
    ty = trace_seq(y)
    where = {}
    for j, v in enumerate(ty):
        where.setdefault(v, []).append(j)
    out = []
    for i, v in enumerate(tx):
        for j in where.get(v, ()):
            out.append((i, j))
    return out
