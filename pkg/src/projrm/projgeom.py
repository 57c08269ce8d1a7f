"""Sparse polynomials over F_{q^s}, standard representatives of P^m, evaluation."""

import itertools

import numpy as np


def _reduce_exp(e, Q):
    return 0 if e == 0 else (e - 1) % (Q - 1) + 1


class Poly:
    """Polynomial over ctx's top field as a dict {exponent tuple: nonzero coefficient}."""

    __slots__ = ("ctx", "nvars", "terms")

    def __init__(self, ctx, nvars, terms=None):
        self.ctx = ctx
        self.nvars = nvars
        self.terms = {}
        for exps, c in (terms or {}).items():
            if len(exps) != nvars:
                raise ValueError("exponent %r does not have %d entries" % (exps, nvars))
            if c:
                self.terms[tuple(exps)] = c

    @classmethod
    def zero(cls, ctx, nvars):
        return cls(ctx, nvars)

    @classmethod
    def const(cls, ctx, nvars, c=1):
        return cls(ctx, nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, ctx, exps, c=1):
        return cls(ctx, len(exps), {tuple(exps): c})

    @classmethod
    def var(cls, ctx, nvars, i):
        e = [0] * nvars
        e[i] = 1
        return cls(ctx, nvars, {tuple(e): 1})

    def copy(self):
        return Poly(self.ctx, self.nvars, self.terms)

    def is_zero(self):
        return not self.terms

    def _check(self, other):
        if self.nvars != other.nvars:
            raise ValueError("arity mismatch: %d vs %d" % (self.nvars, other.nvars))

    def __add__(self, other):
        self._check(other)
        add = self.ctx.add
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = add(out.get(e, 0), c)
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        r = Poly(self.ctx, self.nvars)
        r.terms = out
        return r

    def __neg__(self):
        r = Poly(self.ctx, self.nvars)
        r.terms = {e: self.ctx.neg(c) for e, c in self.terms.items()}
        return r

    def __sub__(self, other):
        return self + (-other)

    def scale(self, lam):
        if lam == 0:
            return Poly(self.ctx, self.nvars)
        r = Poly(self.ctx, self.nvars)
        r.terms = {e: self.ctx.mul(c, lam) for e, c in self.terms.items()}
        return r

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        ctx = self.ctx
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = ctx.add(out.get(e, 0), ctx.mul(c1, c2))
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        r = Poly(ctx, self.nvars)
        r.terms = out
        return r

    def __eq__(self, other):
        return isinstance(other, Poly) and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self, d=None):
        degs = {sum(e) for e in self.terms}
        if d is not None:
            return degs <= {d}
        return len(degs) <= 1

    def frobenius(self, k=1):
        """Coefficientwise f^{q^k} with exponents multiplied by q^k, then reduced."""
        ctx = self.ctx
        qk = ctx.q ** k
        out = {}
        for e, c in self.terms.items():
            ee = tuple(_reduce_exp(x * qk, ctx.Q) for x in e)
            v = ctx.add(out.get(ee, 0), ctx.frob(c, k))
            if v:
                out[ee] = v
            else:
                out.pop(ee, None)
        r = Poly(ctx, self.nvars)
        r.terms = out
        return r

    def reduce(self, projective=False):
        """Apply x^Q = x to every variable, and x0^k = x0 when projective."""
        Q = self.ctx.Q
        out = Poly(self.ctx, self.nvars)
        for e, c in self.terms.items():
            if projective:
                ee = (min(e[0], 1),) + tuple(_reduce_exp(x, Q) for x in e[1:])
            else:
                ee = tuple(_reduce_exp(x, Q) for x in e)
            out = out + Poly(self.ctx, self.nvars, {ee: c})
        return out

    def restrict(self, prefix):
        """Substitute constants for the leading variables; returns a poly in the rest."""
        ctx = self.ctx
        k = len(prefix)
        out = {}
        for e, c in self.terms.items():
            v = c
            for x, ex in zip(prefix, e[:k]):
                v = ctx.mul(v, ctx.pow(x, ex))
            if v:
                ee = e[k:]
                w = ctx.add(out.get(ee, 0), v)
                if w:
                    out[ee] = w
                else:
                    out.pop(ee, None)
        r = Poly(ctx, self.nvars - k)
        r.terms = out
        return r

    def homogenize(self, d):
        """x0^d f(x1/x0, ...); the result has one more variable."""
        if self.degree() > d:
            raise ValueError("degree %d exceeds homogenization degree %d" % (self.degree(), d))
        return Poly(self.ctx, self.nvars + 1,
                    {(d - sum(e),) + e: c for e, c in self.terms.items()})

    def coeff_str(self, c):
        ctx = self.ctx
        if c < ctx.p:
            return str(c)
        k = ctx.log_of(c)
        return "a" if k == 1 else "a^%d" % k

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda e: (-sum(e), tuple(-x for x in e))):
            c = self.terms[e]
            mono = "*".join(("x%d" % i) if x == 1 else ("x%d^%d" % (i, x))
                            for i, x in enumerate(e) if x)
            cs = self.coeff_str(c)
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            else:
                parts.append(cs + "*" + mono)
        return " + ".join(parts)

    __repr__ = __str__


SparsePoly = Poly


class ProjPointSet:
    """Standard representatives of P^m, listed cell by cell A_0, ..., A_m."""

    def __init__(self, ctx, m):
        if m < 1:
            raise ValueError("m must be at least 1")
        self.ctx, self.m = ctx, m
        elems = [0] + [ctx.elem(i) for i in range(ctx.order)]
        pts = []
        offsets = []
        for i in range(m + 1):
            offsets.append(len(pts))
            head = (0,) * i + (1,)
            for free in itertools.product(elems, repeat=m - i):
                pts.append(head + free)
        self.points = np.array(pts, dtype=np.int64)
        self.cell_offsets = offsets
        self.n = len(pts)
        assert self.n == (ctx.Q ** (m + 1) - 1) // (ctx.Q - 1)

    def __len__(self):
        return self.n

    def cell(self, i):
        end = self.cell_offsets[i + 1] if i < self.m else self.n
        return slice(self.cell_offsets[i], end)


def standard_representatives(ctx, m):
    return ProjPointSet(ctx, m)


def eval_points(f, points):
    """Evaluate f at every row of an (N, nvars) array of field elements."""
    ctx = f.ctx
    points = np.asarray(points, dtype=np.int64)
    if points.shape[1] != f.nvars:
        raise ValueError("arity mismatch: poly has %d variables, points have %d"
                         % (f.nvars, points.shape[1]))
    logs = ctx.log[points]
    zero = points == 0
    out = np.zeros(len(points), dtype=np.int64)
    for e, c in f.terms.items():
        e_arr = np.array(e, dtype=np.int64)
        used = e_arr > 0
        vanish = (zero & used[None, :]).any(axis=1)
        lg = (logs * e_arr[None, :]).sum(axis=1) + ctx.log_of(c)
        val = np.where(vanish, 0, ctx.exp[lg % ctx.order])
        out = ctx.vadd(out, val)
    return out


def evaluate(ctx, f, pts):
    return eval_points(f, pts.points)


def homogenize(f, d):
    return f.homogenize(d)


def affine_grid(ctx, k):
    elems = [0] + [ctx.elem(i) for i in range(ctx.order)]
    if k == 0:
        return np.zeros((1, 0), dtype=np.int64)
    return np.array(list(itertools.product(elems, repeat=k)), dtype=np.int64)


def in_base_field(ctx, vec):
    vec = np.asarray(vec)
    step = ctx.subfield_step[1]
    return bool(np.all((vec == 0) | (ctx.log[vec] % step == 0)))


def slice_criterion(ctx, f):
    """Per-cell test: f(0,..,0,1,x_{i+1},..) lands in F_q on every affine slice."""
    m = f.nvars - 1
    for i in range(m + 1):
        g = f.restrict((0,) * i + (1,))
        if g.nvars == 0:
            vals = np.array([g.terms.get((), 0)], dtype=np.int64)
        else:
            vals = eval_points(g, affine_grid(ctx, g.nvars))
        if not in_base_field(ctx, vals):
            return False
    return True


def evaluates_to_base(ctx, f, pts=None):
    """True iff every value of f on P^m lies in F_q; cross-checked against the slice test."""
    if pts is None:
        pts = standard_representatives(ctx, f.nvars - 1)
    direct = in_base_field(ctx, evaluate(ctx, f, pts))
    sliced = slice_criterion(ctx, f)
    if direct != sliced:
        raise AssertionError("direct and slice-wise base-field tests disagree")
    return direct
