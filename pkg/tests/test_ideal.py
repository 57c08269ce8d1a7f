from math import comb

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from projrm.fields import field_for
from projrm.ideal import (ORDERS, divide, groebner_generators, leading_term, monomials_of_degree,
                          monomials_up_to, normal_form, normal_form_closed, quotient_basis,
                          s_polynomial, verify_buchberger)
from projrm.projgeom import Poly, evaluate, standard_representatives

FIELDS = [(2, 2), (2, 3), (3, 2)]


@pytest.mark.parametrize("q,s", FIELDS)
@pytest.mark.parametrize("m", [1, 2])
@pytest.mark.parametrize("kind", ORDERS)
def test_buchberger_criterion(q, s, m, kind):
    assert verify_buchberger(field_for(q, s), m, kind)


@pytest.mark.parametrize("q,s", FIELDS + [(2, 1)])
@pytest.mark.parametrize("m", [1, 2, 3])
def test_generators_vanish_and_quotient_size(q, s, m):
    F = field_for(q, s)
    P = standard_representatives(F, m)
    G = groebner_generators(F, m)
    assert len(G) == 2 * m + 1
    for g in G:
        assert not evaluate(F, g, P).any()
    assert len(quotient_basis(F, m)) == len(P)


@pytest.mark.parametrize("q,s", [(2, 2), (2, 3), (3, 2)])
@pytest.mark.parametrize("kind", ORDERS)
def test_basis_is_reduced_when_Q_above_2(q, s, kind):
    F = field_for(q, s)
    G = groebner_generators(F, 2).generators
    leads = [leading_term(g, kind) for g in G]
    assert all(c == 1 for _, c in leads)
    for i, g in enumerate(G):
        for e in g.terms:
            for j, (le, _) in enumerate(leads):
                if j != i:
                    assert not all(a <= b for a, b in zip(le, e))


def test_s_polynomial_cancels_leading_terms():
    F = field_for(2, 2)
    G = groebner_generators(F, 2).generators
    s = s_polynomial(G[0], G[3], "grevlex")
    lcm = tuple(max(a, b) for a, b in zip(leading_term(G[0], "grevlex")[0],
                                          leading_term(G[3], "grevlex")[0]))
    assert lcm not in s.terms


@pytest.mark.parametrize("q,s", FIELDS)
@settings(max_examples=20, deadline=None)
@given(data=st.data())
def test_division_identity(q, s, data):
    F = field_for(q, s)
    terms = data.draw(st.dictionaries(st.tuples(*[st.integers(0, 3 * F.Q)] * 3),
                                      st.integers(1, F.Q - 1), max_size=6))
    f = Poly(F, 3, terms)
    G = groebner_generators(F, 2).generators
    kind = data.draw(st.sampled_from(ORDERS))
    quots, r = divide(f, G, kind)
    total = r
    for qi, g in zip(quots, G):
        total = total + qi * g
    assert total == f
    standard = set(quotient_basis(F, 2))
    assert set(r.terms) <= standard
    assert normal_form(f) == r


@pytest.mark.parametrize("q,s", FIELDS)
@pytest.mark.parametrize("m", [1, 2])
def test_closed_normal_form_exhaustive(q, s, m):
    F = field_for(q, s)
    G = groebner_generators(F, m).generators
    P = standard_representatives(F, m)
    for mono in monomials_up_to(m + 1, 2 * (F.Q - 1)):
        nf = normal_form_closed(F, mono, m)
        f = Poly.monomial(F, mono)
        for kind in ORDERS:
            assert divide(f, G, kind)[1] == nf, (mono, kind)
        assert np.array_equal(evaluate(F, f, P), evaluate(F, nf, P))


def test_closed_normal_form_by_hand():
    F = field_for(2, 2)
    # prereduced to x0 x1^2 x2; N_1 = x2 + x1 + 1, N_0 = x1^2 x2 + (x0 + 1) N_1 over F_2
    nf = normal_form_closed(F, (3, 5, 4), 2)
    want = {(0, 2, 1): 1, (1, 1, 0): 1, (1, 0, 1): 1, (1, 0, 0): 1,
            (0, 1, 0): 1, (0, 0, 1): 1, (0, 0, 0): 1}
    assert nf == Poly(F, 3, want)
    assert normal_form_closed(F, (0, 5, 4), 2) == Poly(F, 3, {(0, 2, 1): 1})


def test_monomial_enumeration_counts():
    assert len(list(monomials_of_degree(3, 4))) == comb(6, 2)
    assert len(list(monomials_up_to(4, 6))) == comb(10, 4)


def test_invalid_inputs():
    F = field_for(2, 2)
    with pytest.raises(ValueError):
        groebner_generators(F, 0)
    with pytest.raises(ValueError):
        normal_form_closed(F, (1, 1), 2)
    with pytest.raises(ValueError):
        leading_term(Poly.zero(F, 2), "lex")
    with pytest.raises(ValueError):
        divide(Poly.var(F, 2, 0), [Poly.var(F, 2, 1)], "bogus")
