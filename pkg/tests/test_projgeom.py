import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from projrm.fields import field_for
from projrm.projgeom import (Poly, affine_grid, eval_points, evaluate, evaluates_to_base,
                             homogenize, in_base_field, standard_representatives)


@pytest.mark.parametrize("q,s,m", [(2, 2, 1), (2, 2, 2), (2, 2, 3), (3, 2, 2), (2, 3, 2)])
def test_standard_representatives(q, s, m):
    F = field_for(q, s)
    P = standard_representatives(F, m)
    Q = q ** s
    assert len(P) == (Q ** (m + 1) - 1) // (Q - 1)
    rows = {tuple(r) for r in P.points.tolist()}
    assert len(rows) == len(P)
    for r in rows:
        first = next(x for x in r if x)
        assert first == 1
    for i in range(m + 1):
        cell = P.points[P.cell(i)]
        assert len(cell) == Q ** (m - i)
        assert (cell[:, :i] == 0).all() and (cell[:, i] == 1).all()


def test_f4_plane_has_21_points():
    assert len(standard_representatives(field_for(2, 2), 2)) == 21


def test_arithmetic_and_printing():
    F = field_for(2, 2)
    x0, x1 = Poly.var(F, 2, 0), Poly.var(F, 2, 1)
    f = (x0 + x1) * (x0 + x1)
    assert f == x0 * x0 + x1 * x1
    assert str(Poly.const(F, 2, F.elem(1)) * x0) == "a*x0"
    assert (f - f).is_zero()
    assert f.is_homogeneous(2) and f.degree() == 2


def test_arity_mismatch():
    F = field_for(2, 2)
    with pytest.raises(ValueError):
        Poly.var(F, 2, 0) + Poly.var(F, 3, 0)
    with pytest.raises(ValueError):
        eval_points(Poly.var(F, 2, 0), np.zeros((3, 3), dtype=np.int64))


def test_homogenize():
    F = field_for(2, 2)
    f = Poly(F, 2, {(1, 1): 1, (1, 0): 1})
    h = homogenize(f, 3)
    assert h == Poly(F, 3, {(1, 1, 1): 1, (2, 1, 0): 1})
    with pytest.raises(ValueError):
        homogenize(f, 1)


def brute_eval(F, f, pt):
    v = 0
    for e, c in f.terms.items():
        t = c
        for x, k in zip(pt, e):
            t = F.mul(t, F.pow(x, k))
        v = F.add(v, t)
    return v


@pytest.mark.parametrize("q,s", [(2, 2), (3, 2), (2, 3)])
@settings(max_examples=25, deadline=None)
@given(data=st.data())
def test_evaluation_matches_scalar(q, s, data):
    F = field_for(q, s)
    terms = data.draw(st.dictionaries(
        st.tuples(*[st.integers(0, 2 * F.Q)] * 3), st.integers(1, F.Q - 1), max_size=5))
    f = Poly(F, 3, terms)
    P = standard_representatives(F, 2)
    vals = evaluate(F, f, P)
    for i in range(0, len(P), 7):
        assert vals[i] == brute_eval(F, f, P.points[i].tolist())


@pytest.mark.parametrize("q,s", [(2, 2), (3, 2)])
def test_reduce_preserves_evaluation(q, s):
    F = field_for(q, s)
    f = Poly(F, 3, {(3, 5, 7): 1, (0, 9, 1): F.elem(1), (2, 0, 0): 1})
    P = standard_representatives(F, 2)
    assert np.array_equal(evaluate(F, f, P), evaluate(F, f.reduce(projective=True), P))
    G = affine_grid(F, 3)
    assert np.array_equal(eval_points(f, G), eval_points(f.reduce(), G))


def test_frobenius_is_power_q_pointwise():
    F = field_for(2, 3)
    f = Poly(F, 2, {(1, 2): F.elem(3), (5, 0): 1})
    G = affine_grid(F, 2)
    assert np.array_equal(eval_points(f.frobenius(), G), F.vpow(eval_points(f, G), F.q))


def test_restrict():
    F = field_for(3, 2)
    f = Poly(F, 3, {(1, 1, 0): 2, (0, 2, 1): 1})
    g = f.restrict((0, 1))
    assert g == Poly(F, 1, {(1,): 1})


def test_base_field_evaluation_checks():
    F = field_for(2, 2)
    a = F.elem(1)
    assert in_base_field(F, [0, 1, 1])
    assert not in_base_field(F, [a])
    one = Poly.const(F, 3)
    assert evaluates_to_base(F, one)
    assert not evaluates_to_base(F, one.scale(a))
    x1 = Poly.var(F, 3, 1)
    assert not evaluates_to_base(F, x1)
    tr = x1 + x1 * x1
    assert evaluates_to_base(F, tr)
    assert not evaluates_to_base(F, x1 * Poly.var(F, 3, 2))
