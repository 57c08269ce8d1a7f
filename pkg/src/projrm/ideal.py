"""The universal Groebner basis of the vanishing ideal of P^m, division, normal forms."""

import itertools

from .projgeom import Poly, _reduce_exp

ORDERS = ("lex", "grlex", "grevlex")


def order_key(kind):
    """Sort key with x0 > x1 > ... > xm; larger key means larger monomial."""
    if kind == "lex":
        return lambda e: tuple(e)
    if kind == "grlex":
        return lambda e: (sum(e), tuple(e))
    if kind == "grevlex":
        return lambda e: (sum(e), tuple(-x for x in reversed(e)))
    raise ValueError("unknown monomial order %r" % (kind,))


def leading_term(f, kind):
    if f.is_zero():
        raise ValueError("zero polynomial has no leading term")
    e = max(f.terms, key=order_key(kind))
    return e, f.terms[e]


def _linear(ctx, nvars, i, c=0):
    """x_i - c."""
    return Poly.var(ctx, nvars, i) - Poly.const(ctx, nvars, c)


class GroebnerBasis:
    def __init__(self, ctx, m, generators):
        self.ctx, self.m = ctx, m
        self.generators = generators

    def leading_monomials(self, kind="grevlex"):
        return [leading_term(g, kind)[0] for g in self.generators]

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)


def groebner_generators(ctx, m):
    """x0^2 - x0, x_i^Q - x_i (1 <= i <= m), then g_k = (x0-1)...(x_{k-1}-1)(x_k^2 - x_k) and
    g_m = (x0-1)...(x_m-1)."""
    if m < 1:
        raise ValueError("m must be at least 1")
    N, Q = m + 1, ctx.Q
    one = Poly.const(ctx, N)
    gens = []
    x0 = Poly.var(ctx, N, 0)
    gens.append(x0 * x0 - x0)
    for i in range(1, N):
        e = [0] * N
        e[i] = Q
        gens.append(Poly.monomial(ctx, e) - Poly.var(ctx, N, i))
    prefix = one
    for k in range(1, m):
        prefix = prefix * _linear(ctx, N, k - 1, 1)
        xk = Poly.var(ctx, N, k)
        gens.append(prefix * (xk * xk - xk))
    prefix = prefix * _linear(ctx, N, m - 1, 1)
    gens.append(prefix * _linear(ctx, N, m, 1))
    return GroebnerBasis(ctx, m, gens)


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def divide(f, G, kind="grevlex"):
    """Multivariate division: f = sum q_i g_i + r, reducing by the first applicable generator."""
    G = list(G)
    ctx, N = f.ctx, f.nvars
    key = order_key(kind)
    lead = [leading_term(g, kind) for g in G]
    inv_lc = [ctx.inv(c) for _, c in lead]
    quots = [Poly.zero(ctx, N) for _ in G]
    rem = {}
    p = dict(f.terms)
    while p:
        e = max(p, key=key)
        c = p[e]
        for i, (le, _) in enumerate(lead):
            if _divides(le, e):
                shift = tuple(a - b for a, b in zip(e, le))
                coef = ctx.mul(c, inv_lc[i])
                quots[i] = quots[i] + Poly(ctx, N, {shift: coef})
                neg = ctx.neg(coef)
                for ge, gc in G[i].terms.items():
                    t = tuple(a + b for a, b in zip(ge, shift))
                    v = ctx.add(p.get(t, 0), ctx.mul(neg, gc))
                    if v:
                        p[t] = v
                    else:
                        p.pop(t, None)
                break
        else:
            rem[e] = c
            del p[e]
    r = Poly(ctx, N)
    r.terms = rem
    return quots, r


def s_polynomial(f, g, kind="grevlex"):
    ctx = f.ctx
    (ef, cf), (eg, cg) = leading_term(f, kind), leading_term(g, kind)
    lcm = tuple(max(a, b) for a, b in zip(ef, eg))
    mf = Poly(ctx, f.nvars, {tuple(a - b for a, b in zip(lcm, ef)): ctx.inv(cf)})
    mg = Poly(ctx, g.nvars, {tuple(a - b for a, b in zip(lcm, eg)): ctx.inv(cg)})
    return mf * f - mg * g


def verify_buchberger(ctx, m, kind="grevlex"):
    G = groebner_generators(ctx, m).generators
    for i, j in itertools.combinations(range(len(G)), 2):
        _, r = divide(s_polynomial(G[i], G[j], kind), G, kind)
        if not r.is_zero():
            return False
    return True


def quotient_basis(ctx, m):
    """Standard monomials: x0 x1 ... x_{j-1} x_{j+1}^{a_{j+1}} ... x_m^{a_m} for j = 0..m (x_{j} absent)."""
    N, Q = m + 1, ctx.Q
    out = []
    for j in range(N):
        head = (1,) * j + (0,)
        for tail in itertools.product(range(Q), repeat=m - j):
            out.append(head + tail)
    return out


def prereduce(mono, Q):
    """x0^k -> x0 and x_i^e -> x_i^{e'} with 1 <= e' <= Q-1, keeping zeros."""
    return (min(mono[0], 1),) + tuple(_reduce_exp(e, Q) for e in mono[1:])


def normal_form_closed(ctx, mono, m):
    """Remainder of a monomial modulo the Groebner basis without running division.

    With a0..al > 0 maximal, the result is prod_{i >= l+2} x_i^{a_i} * N_0 where
    N_j = prod_{i=j+1}^{l} x_i^{a_i} + (x_j - 1) N_{j+1}, ending with N_l = x_l
    when l < m and N_m = 1.
    """
    N = m + 1
    if len(mono) != N:
        raise ValueError("monomial %r does not have %d entries" % (mono, N))
    a = prereduce(tuple(mono), ctx.Q)
    if a[0] == 0:
        return Poly.monomial(ctx, a)
    l = 0
    while l + 1 < N and a[l + 1] > 0:
        l += 1
    if l == m:
        acc = Poly.const(ctx, N)
    else:
        acc = Poly.var(ctx, N, l)
    for j in range(l - 1, -1, -1):
        e = [0] * N
        for i in range(j + 1, l + 1):
            e[i] = a[i]
        acc = Poly.monomial(ctx, e) + _linear(ctx, N, j, 1) * acc
    tail = [0] * N
    for i in range(l + 2, N):
        tail[i] = a[i]
    return Poly.monomial(ctx, tail) * acc


def normal_form(f, m=None):
    """Normal form of a polynomial via the closed form, term by term."""
    ctx = f.ctx
    m = f.nvars - 1 if m is None else m
    out = Poly.zero(ctx, f.nvars)
    for e, c in f.terms.items():
        out = out + normal_form_closed(ctx, e, m).scale(c)
    return out


def monomials_up_to(nvars, dmax):
    """All exponent tuples with total degree <= dmax."""
    for d in range(dmax + 1):
        yield from monomials_of_degree(nvars, d)


def monomials_of_degree(nvars, d):
    if nvars == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(nvars - 1, d - first):
            yield (first,) + rest
