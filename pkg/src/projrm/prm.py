"""Projective Reed-Muller codes, their subfield subcodes and explicit trace bases (m = 2)."""

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .codes import LinearCode, same_row_space, subfield_subcode
from .cyclo import cyclo_data, delta_classify, frobenius_sum, overline, reduce_exp
from .fields import field_for
from .ideal import monomials_of_degree, normal_form
from .projgeom import Poly, eval_points, standard_representatives

EMPTY, ALL_X0, NONE_X0, TWO_TYPES = "empty", "all_x0", "none_x0", "two_types"


@dataclass(frozen=True)
class PrmSpec:
    q: int
    s: int
    m: int
    d: int

    @property
    def Q(self):
        return self.q ** self.s

    @property
    def n(self):
        Q = self.Q
        return (Q ** (self.m + 1) - 1) // (Q - 1)

    @property
    def dperp(self):
        return self.m * (self.Q - 1) - self.d

    @property
    def ctx(self):
        return field_for(self.q, self.s)

    def check(self):
        if self.m < 1:
            raise ValueError("m must be at least 1")
        if not 1 <= self.d <= self.m * (self.Q - 1):
            raise ValueError("d=%d outside 1..%d; for larger d PRM_d(%d) is the whole space"
                             % (self.d, self.m * (self.Q - 1), self.m))
        return self

    def check_plane(self):
        if self.m != 2:
            raise ValueError("explicit bases implemented only for m=2")
        return self.check()


# -- codes ----------------------------------------------------------------------

def reduced_projective(e, Q):
    return (min(e[0], 1),) + tuple(reduce_exp(x, Q) for x in e[1:])


def projective_points(ctx, m):
    return standard_representatives(ctx, m)


def evaluation_rows(ctx, polys, pts):
    if not polys:
        return np.zeros((0, pts.n), dtype=np.int64)
    return np.array([eval_points(f, pts.points) for f in polys], dtype=np.int64)


def prm_code(spec):
    """Span of the evaluations of all degree-d monomials at the standard representatives."""
    spec.check()
    ctx = spec.ctx
    pts = projective_points(ctx, spec.m)
    monos = sorted({reduced_projective(e, spec.Q) for e in monomials_of_degree(spec.m + 1, spec.d)})
    rows = evaluation_rows(ctx, [Poly.monomial(ctx, e) for e in monos], pts)
    return LinearCode.from_rows(ctx, "Q", rows, pts.n, "PRM_%d(%d)" % (spec.d, spec.m))


def prm_subfield_subcode(spec):
    code = subfield_subcode(prm_code(spec))
    code.label = "PRM_%d^sigma(%d)" % (spec.d, spec.m)
    return code


def rm_affine_basis(ctx, m, d):
    """Traces T_a(xi_a^r x^a) for I_a inside degree <= d: a basis of RM_d^sigma(m)."""
    cyc = cyclo_data(ctx.q, ctx.s, m)
    out = []
    for a in cyc.sets:
        if delta_classify(a, d, ctx.Q).subset_le:
            xi = ctx.primitive_with_nonzero_trace(a.n)
            for r in range(a.n):
                out.append(frobenius_sum(ctx, ctx.pow(xi, r), a.min_rep, a.n))
    return out


# -- M_a(d) -----------------------------------------------------------------------

def classify_Ma(a, d, Q):
    """Which degree-d monomials have reduced exponent pair in I_a: none, all or some with x0."""
    f = delta_classify(a, d, Q)
    if not f.meets_le:
        return EMPTY
    x0_free = f.meets_d or f.meets_dbar
    if f.meets_lt:
        return TWO_TYPES if x0_free else ALL_X0
    return NONE_X0


def materialize_Ma(a, d, Q):
    """Degree-d monomials x0^b0 x1^b1 x2^b2 with (bar b1, bar b2) in I_a (debug path)."""
    out = []
    for b1 in range(d + 1):
        for b2 in range(d - b1 + 1):
            if (overline(b1, Q), overline(b2, Q)) in a:
                out.append((d - b1 - b2, b1, b2))
    return out


def classify_by_enumeration(a, d, Q):
    monos = materialize_Ma(a, d, Q)
    if not monos:
        return EMPTY
    with_x0 = any(b[0] > 0 for b in monos)
    without = any(b[0] == 0 for b in monos)
    if with_x0 and without:
        return TWO_TYPES
    return ALL_X0 if with_x0 else NONE_X0


# -- the sets U, V, Y, Y_{a2} -------------------------------------------------------

@dataclass
class PlaneSets:
    spec: PrmSpec
    U: list
    V: list
    Y: list
    Y_map: dict
    Yprime_map: dict
    A_lt: list
    A1_le: list
    dual_class: dict

    def pretty(self):
        def reps(xs):
            return [x.min_rep if len(x.min_rep) > 1 else x.min_rep[0] for x in xs]
        return {
            "U": reps(self.U), "V": reps(self.V), "Y": reps(self.Y),
            "Y_map": {k: reps(v) for k, v in self.Y_map.items()},
            "Yprime_map": {k: reps(v) for k, v in self.Yprime_map.items()},
        }


class Plane:
    """Cyclotomic data for m = 2 and one degree d, shared by the formulas and the bases."""

    def __init__(self, spec):
        spec.check_plane()
        self.spec = spec
        self.q, self.s, self.Q, self.d = spec.q, spec.s, spec.Q, spec.d
        self.cyc2 = cyclo_data(spec.q, spec.s, 2)
        self.cyc1 = cyclo_data(spec.q, spec.s, 1)

    def set2(self, c):
        return self.cyc2.set_of(c)

    def set1(self, c):
        return self.cyc1.set_of((c,))

    # primary side, degree d

    def subset_le(self, cs):
        return delta_classify(cs, self.d, self.Q).subset_le

    @cached_property
    def A_lt(self):
        return [a for a in self.cyc2.sets if delta_classify(a, self.d, self.Q).subset_lt]

    @cached_property
    def A_le(self):
        return [a for a in self.cyc2.sets if self.subset_le(a)]

    @cached_property
    def A1_le(self):
        return [a2 for a2 in self.cyc1.sets if all(c[0] <= self.d for c in a2.elements)]

    @cached_property
    def dbar_set(self):
        return self.set1(overline(self.d, self.Q))

    def condy(self, a2):
        """I_{(d-c2, c2)} inside degree <= d for every c2 in I_{a2} with c2 > d-(Q-1)."""
        d, Q = self.d, self.Q
        for (c2,) in a2.elements:
            if c2 > d - (Q - 1):
                if c2 > d:
                    return False
                if not self.subset_le(self.set2((d - c2, c2))):
                    return False
        return True

    @cached_property
    def Y(self):
        return [a2 for a2 in self.A1_le if a2 is not self.dbar_set and self.condy(a2)]

    def Y_of(self, a2, prime=False):
        d, Q = self.d, self.Q
        targets = {self.set2((overline(d - c2, Q), c2)) for (c2,) in a2.elements}
        lt = set(id(a) for a in self.A_lt)
        return [a for a in self.A_le if a in targets and not (prime and id(a) in lt)]

    # dual side, degree d_perp = 2(Q-1) - d

    @cached_property
    def dperp(self):
        return 2 * (self.Q - 1) - self.d

    @cached_property
    def dual_class(self):
        return {a.min_rep: classify_Ma(a, self.dperp, self.Q) for a in self.cyc2.sets}

    @cached_property
    def U(self):
        return [a for a in self.cyc2.sets if self.dual_class[a.min_rep] != EMPTY]

    @cached_property
    def two_types(self):
        return [a for a in self.cyc2.sets if self.dual_class[a.min_rep] == TWO_TYPES]

    @cached_property
    def dperp_bar_set(self):
        return self.set1(overline(self.dperp, self.Q))

    @cached_property
    def V(self):
        second = {a.min_rep[1] for a in self.two_types}
        return [a2 for a2 in self.cyc1.sets
                if a2 is not self.dperp_bar_set and a2.min_rep[0] in second]

    def d3_case(self):
        """'a.1', 'a.2' or 'b' for the extra dual polynomials attached to I_{bar d_perp}."""
        a2 = self.dperp_bar_set.min_rep[0]
        c0 = self.set2((0, a2))
        if self.dual_class[c0.min_rep] != TWO_TYPES:
            return "b"
        other = any(c is not c0 and c.min_rep[1] == a2 for c in self.two_types)
        return "a.1" if other else "a.2"

    def b3_case(self):
        """'a', 'b.1' or 'b.2' for the primary polynomials attached to I_{bar d}."""
        a2 = self.dbar_set
        if a2 not in self.A1_le:
            return "b.2"
        if self.subset_le(self.set2((self.Q - 1, overline(self.d, self.Q)))):
            return "a"
        if self.condy(a2):
            return "b.1"
        return "b.2"


def build_sets(spec):
    P = Plane(spec)
    return PlaneSets(
        spec=spec, U=P.U, V=P.V, Y=P.Y,
        Y_map={a2.min_rep[0]: P.Y_of(a2) for a2 in P.A1_le},
        Yprime_map={a2.min_rep[0]: P.Y_of(a2, prime=True) for a2 in P.A1_le},
        A_lt=P.A_lt, A1_le=P.A1_le, dual_class=P.dual_class,
    )


# -- dimension formulas -------------------------------------------------------------

def dim_primary(spec):
    P = Plane(spec)
    eps = {"a": P.dbar_set.n + 1, "b.1": 1, "b.2": 0}[P.b3_case()]
    return sum(a.n for a in P.A_lt) + sum(a2.n for a2 in P.Y) + eps


def dim_dual(spec):
    P = Plane(spec)
    eps3 = {"a.1": P.dperp_bar_set.n + 1, "a.2": P.dperp_bar_set.n, "b": 0}[P.d3_case()]
    eps4 = 1 if spec.d == spec.Q - 1 else 0
    return sum(a.n for a in P.U) + sum(a2.n for a2 in P.V) + eps3 + eps4


def distance_lower_bound(spec):
    """(Q-t) Q^(m-1-r) with d-1 = r(Q-1) + t, 0 <= t < Q-1."""
    Q = spec.Q
    r, t = divmod(spec.d - 1, Q - 1)
    return (Q - t) * Q ** (spec.m - 1 - r)


# -- explicit bases -------------------------------------------------------------------

@dataclass
class BasisSet:
    side: str
    parts: dict = field(default_factory=dict)
    notes: dict = field(default_factory=dict)

    @property
    def polys(self):
        return [f for part in self.parts.values() for f in part]

    def __len__(self):
        return sum(len(p) for p in self.parts.values())

    def sizes(self):
        return {k: len(v) for k, v in self.parts.items()}


class _Builder:
    def __init__(self, spec):
        self.P = Plane(spec)
        self.ctx = spec.ctx
        self.N = 3
        self.one = Poly.const(self.ctx, 3)
        self.x0 = Poly.var(self.ctx, 3, 0)
        self.x1 = Poly.var(self.ctx, 3, 1)

    def xi(self, n):
        return self.ctx.primitive_with_nonzero_trace(n)

    def tr(self, lam, gamma, n):
        return frobenius_sum(self.ctx, lam, gamma, n, projective=True)

    def h(self, a2, r, Ya):
        """x0 sum_{c in Ya} T_c(xi^r x^c) + (1 - x0) x1 T_{a2}(xi^r x2^{a2})."""
        ctx = self.ctx
        lam = ctx.pow(self.xi(a2.n), r)
        f = Poly.zero(ctx, 3)
        for c in Ya:
            f = f + self.tr(lam, (1,) + c.min_rep, c.n)
        uni = self.tr(lam, (0, 0, a2.min_rep[0]), a2.n)
        return f + (self.one - self.x0) * self.x1 * uni

    def l(self, a2, Ya):
        ctx, Q = self.ctx, self.P.Q
        f = self.h(a2, 0, Ya)
        dbar = overline(self.P.d, Q)
        return f + (self.one - self.x0) * (self.one - self.x1) * Poly.monomial(ctx, (0, 0, dbar))


def build_B(spec, simplified=False):
    """Basis of the subfield subcode of PRM_d(2): parts B1, B2, B3."""
    b = _Builder(spec)
    P, ctx = b.P, b.ctx
    B = BasisSet("primary")
    B1 = []
    for a in P.A_lt:
        xi = b.xi(a.n)
        for r in range(a.n):
            B1.append(b.tr(ctx.pow(xi, r), (1,) + a.min_rep, a.n))
    B2 = []
    for a2 in P.Y:
        Ya = P.Y_of(a2, prime=simplified)
        for r in range(a2.n):
            B2.append(b.h(a2, r, Ya))
    case = P.b3_case()
    a2 = P.dbar_set
    B3 = []
    if case != "b.2":
        Ya = P.Y_of(a2, prime=simplified)
        l = b.l(a2, Ya)
        if case == "a":
            c = P.set2((P.Q - 1, a2.min_rep[0]))
            B3.append(l - b.tr(1, (1, P.Q - 1, a2.min_rep[0]), c.n))
            for r in range(a2.n):
                B3.append(b.h(a2, r, Ya))
        else:
            B3.append(l)
    B.parts = {"B1": B1, "B2": B2, "B3": B3}
    B.notes = {"B3": "case %s" % case, "variant": "simplified" if simplified else "standard"}
    return B


def build_D(spec):
    """Basis of the dual of the subfield subcode of PRM_d(2): parts D1..D4."""
    b = _Builder(spec)
    P, ctx = b.P, b.ctx
    D1 = []
    for a in P.U:
        x0e = 1 if P.dual_class[a.min_rep] == ALL_X0 else 0
        xi = b.xi(a.n)
        for r in range(a.n):
            D1.append(b.tr(ctx.pow(xi, r), (x0e,) + a.min_rep, a.n))
    D2 = []
    x1m1 = b.x1 - b.one
    x0m1 = b.x0 - b.one
    for a2 in P.V:
        xi = b.xi(a2.n)
        for r in range(a2.n):
            lam = ctx.pow(xi, r)
            t = ctx.relative_trace(lam, a2.n)
            uni = b.tr(lam, (0, 0, a2.min_rep[0]), a2.n)
            D2.append(x0m1 * (uni + x1m1.scale(t)))
    case = P.d3_case()
    D3 = []
    if case != "b":
        a2 = P.dperp_bar_set
        xi = b.xi(a2.n)
        for r in range(a2.n):
            D3.append(b.tr(ctx.pow(xi, r), (1, 0, a2.min_rep[0]), a2.n))
        if case == "a.1":
            D3.append(x0m1 * x1m1)
    D4 = [b.one] if spec.d == spec.Q - 1 else []
    D = BasisSet("dual")
    D.parts = {"D1": D1, "D2": D2, "D3": D3, "D4": D4}
    D.notes = {"D3": "case %s" % case}
    return D


def basis_matrix(spec, basis):
    ctx = spec.ctx
    pts = projective_points(ctx, spec.m)
    return evaluation_rows(ctx, basis.polys, pts)


# -- general m ----------------------------------------------------------------------------

def dual_trace_generators(spec):
    """Normal forms of T(xi^r x^gamma) over degree-d_perp monomials, plus 1 when Q-1 divides d."""
    ctx, Q, m = spec.ctx, spec.Q, spec.m
    cyc = cyclo_data(spec.q, spec.s, m)
    monos = sorted({reduced_projective(e, Q) for e in monomials_of_degree(m + 1, spec.dperp)})
    out = []
    for e in monos:
        n = cyc.set_of(e[1:]).n
        xi = ctx.primitive_with_nonzero_trace(n)
        for r in range(n):
            f = frobenius_sum(ctx, ctx.pow(xi, r), e, n, projective=True)
            out.append(normal_form(f, m))
    if spec.d % (Q - 1) == 0:
        out.append(Poly.const(ctx, m + 1))
    return out


def subfield_subcode_general(spec, cross_check=True):
    """Subfield subcode of PRM_d(m) by the linear-algebra oracle, checked against trace generators."""
    code = prm_subfield_subcode(spec)
    if cross_check:
        ctx = spec.ctx
        pts = projective_points(ctx, spec.m)
        rows = evaluation_rows(ctx, dual_trace_generators(spec), pts)
        if not same_row_space(rows, code.dual().gen, code.F):
            raise AssertionError("trace generators do not span the dual of the subfield subcode")
    return code
