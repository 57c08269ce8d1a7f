"""Cyclotomic sets in Z_{q^s}^m under multiplication by q.

Entries live in {0, 1, ..., Q-1} with Q = q^s: 0 is its own class and the
nonzero entries represent Z/(Q-1) with representatives 1..Q-1.
"""

from dataclasses import dataclass
from functools import lru_cache
import itertools

from .fields import field_for
from .projgeom import Poly


def mul_q(c, q, Q):
    """q * c for a single entry c of Z_Q."""
    if c == 0:
        return 0
    return (c * q - 1) % (Q - 1) + 1


def order_key(a):
    """Sort key for the order where a < b iff the rightmost nonzero entry of b - a is positive."""
    return tuple(reversed(a))


def order_lt(a, b):
    if len(a) != len(b):
        raise ValueError("vectors of different length")
    return order_key(a) < order_key(b)


def overline(b, Q):
    """Representative of b mod (Q-1) in 1..Q-1, or 0 when b = 0."""
    if b < 0 or b > 2 * (Q - 1):
        raise ValueError("%r outside [0, %d]" % (b, 2 * (Q - 1)))
    return 0 if b == 0 else (b - 1) % (Q - 1) + 1


def reduce_exp(e, Q):
    """x^e -> x^e' using x^Q = x; valid for any e >= 0."""
    return 0 if e == 0 else (e - 1) % (Q - 1) + 1


def conjugate(a, Q):
    return tuple(Q - 1 - c for c in a)


@dataclass(frozen=True)
class CycSet:
    min_rep: tuple
    elements: tuple
    max_rep: tuple
    index: int

    @property
    def n(self):
        return len(self.elements)

    @property
    def sums(self):
        return [sum(c) for c in self.elements]

    def __contains__(self, c):
        return tuple(c) in self.elements


class CycloData:
    """All minimal cyclotomic sets of Z_Q^m, sorted by minimal representative."""

    def __init__(self, q, s, m):
        self.q, self.s, self.m = q, s, m
        self.Q = Q = q ** s
        self.set_of_vec = {}
        sets = []
        for vec in itertools.product(range(Q), repeat=m):
            if vec in self.set_of_vec:
                continue
            orbit = [vec]
            cur = tuple(mul_q(c, q, Q) for c in vec)
            while cur != vec:
                orbit.append(cur)
                cur = tuple(mul_q(c, q, Q) for c in cur)
            lo = min(orbit, key=order_key)
            hi = max(orbit, key=order_key)
            start = orbit.index(lo)
            orbit = orbit[start:] + orbit[:start]
            sets.append((lo, tuple(orbit), hi))
            for v in orbit:
                self.set_of_vec[v] = None
        sets.sort(key=lambda t: order_key(t[0]))
        self.sets = [CycSet(lo, orb, hi, i) for i, (lo, orb, hi) in enumerate(sets)]
        for cs in self.sets:
            for v in cs.elements:
                self.set_of_vec[v] = cs
        assert sum(cs.n for cs in self.sets) == Q ** m
        self.by_min = {cs.min_rep: cs for cs in self.sets}

    def set_of(self, vec):
        return self.set_of_vec[tuple(vec)]

    @property
    def min_reps(self):
        return [cs.min_rep for cs in self.sets]

    @property
    def max_reps(self):
        return [cs.max_rep for cs in self.sets]


@lru_cache(maxsize=None)
def cyclo_data(q, s, m):
    return CycloData(q, s, m)


def minimal_sets(q, s, m):
    return cyclo_data(q, s, m).sets


def single_class_degree(d, q, s):
    """True iff the univariate set of d (1 <= d <= Q-1) has one element, via d = lam (Q-1)/(q-1)."""
    Q = q ** s
    step = (Q - 1) // (q - 1)
    fast = d % step == 0
    assert fast == (cyclo_data(q, s, 1).set_of((d,)).n == 1)
    return fast


@dataclass(frozen=True)
class DeltaFlags:
    subset_lt: bool
    subset_le: bool
    meets_lt: bool
    meets_le: bool
    meets_d: bool
    meets_dbar: bool


def delta_classify(cs, d, Q):
    sums = cs.sums
    dbar = overline(d, Q) if 0 <= d <= 2 * (Q - 1) else None
    return DeltaFlags(
        subset_lt=all(x < d for x in sums),
        subset_le=all(x <= d for x in sums),
        meets_lt=any(x < d for x in sums),
        meets_le=any(x <= d for x in sums),
        meets_d=any(x == d for x in sums),
        meets_dbar=dbar is not None and any(x == dbar for x in sums),
    )


def frobenius_sum(ctx, lam, gamma, n, projective=False, keep_x0=False):
    """sum_{l<n} (lam x^gamma)^{q^l} with exponents in the reduced convention.

    In the projective case variable 0 is x0, whose exponent reduces to
    min(e, 1) unless keep_x0 is set; the other exponents follow x^Q = x.
    """
    Q, q = ctx.Q, ctx.q
    terms = {}
    for l in range(n):
        k = q ** l
        exps = []
        for i, e in enumerate(gamma):
            if projective and i == 0:
                exps.append(e * k if keep_x0 else min(e, 1))
            else:
                exps.append(reduce_exp(e * k, Q))
        exps = tuple(exps)
        c = ctx.add(terms.get(exps, 0), ctx.frob(lam, l))
        if c:
            terms[exps] = c
        else:
            terms.pop(exps, None)
    return Poly(ctx, len(gamma), terms)


def trace_poly(ctx, a, lam, gamma, projective=False, keep_x0=False):
    """T_a(lam x^gamma), n_a conjugates; gamma's affine part must lie in I_a."""
    hat = tuple(gamma[1:]) if projective else tuple(gamma)
    red = tuple(reduce_exp(e, ctx.Q) for e in hat)
    if red not in a:
        raise ValueError("exponent %r is not in the cyclotomic set of %r" % (red, a.min_rep))
    return frobenius_sum(ctx, lam, gamma, a.n, projective, keep_x0)


def full_trace_poly(ctx, f):
    """f + f^q + ... + f^{q^{s-1}} with exponents in the reduced convention."""
    out = Poly.zero(ctx, f.nvars)
    g = f
    for _ in range(ctx.s):
        out = out + g
        g = g.frobenius()
    return out


def field_and_cyclo(q, s, m):
    return field_for(q, s), cyclo_data(q, s, m)
