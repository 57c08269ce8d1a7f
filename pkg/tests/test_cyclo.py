import pytest
from hypothesis import given, strategies as st

from projrm.cyclo import (conjugate, cyclo_data, delta_classify, frobenius_sum, full_trace_poly,
                          minimal_sets, mul_q, order_lt, overline, single_class_degree, trace_poly)
from projrm.fields import field_for
from projrm.projgeom import Poly, affine_grid, eval_points, in_base_field


def test_f4_plane_sets():
    sets = minimal_sets(2, 2, 2)
    assert [a.min_rep for a in sets] == [(0, 0), (1, 0), (3, 0), (0, 1), (1, 1), (2, 1),
                                         (3, 1), (0, 3), (1, 3), (3, 3)]
    assert {a.min_rep: a.max_rep for a in sets} == {
        (0, 0): (0, 0), (1, 0): (2, 0), (0, 1): (0, 2), (1, 1): (2, 2), (3, 0): (3, 0),
        (0, 3): (0, 3), (3, 3): (3, 3), (2, 1): (1, 2), (1, 3): (2, 3), (3, 1): (3, 2)}
    by = {a.min_rep: set(a.elements) for a in sets}
    assert by[(2, 1)] == {(2, 1), (1, 2)}
    assert by[(3, 1)] == {(3, 1), (3, 2)}


def test_f16_univariate_sets():
    sets = minimal_sets(2, 4, 1)
    got = {a.min_rep[0]: sorted(c[0] for c in a.elements) for a in sets}
    assert got == {0: [0], 1: [1, 2, 4, 8], 3: [3, 6, 9, 12], 5: [5, 10],
                   7: [7, 11, 13, 14], 15: [15]}


def test_f16_plane_orbits():
    cyc = cyclo_data(2, 4, 2)
    assert set(cyc.set_of((5, 1)).elements) == {(5, 1), (10, 2), (5, 4), (10, 8)}
    assert cyc.set_of((4, 2)).min_rep == (2, 1)
    assert cyc.set_of((2, 4)).min_rep == (8, 1)
    assert cyc.set_of((13, 8)).min_rep == (11, 1)
    assert set(cyc.set_of((15, 6)).elements) == {(15, 3), (15, 6), (15, 9), (15, 12)}


@pytest.mark.parametrize("q,s,m", [(2, 2, 2), (2, 3, 2), (3, 2, 2), (2, 2, 3), (2, 4, 1)])
def test_sets_partition_and_are_closed(q, s, m):
    Q = q ** s
    sets = minimal_sets(q, s, m)
    seen = [v for a in sets for v in a.elements]
    assert len(seen) == len(set(seen)) == Q ** m
    for a in sets:
        for v in a.elements:
            assert tuple(mul_q(c, q, Q) for c in v) in a
            assert not order_lt(v, a.min_rep)
            assert not order_lt(a.max_rep, v)
        assert s % a.n == 0
    # minimal representatives are sorted
    reps = [a.min_rep for a in sets]
    assert all(order_lt(x, y) for x, y in zip(reps, reps[1:]))


def test_order_is_rightmost_nonzero_difference():
    assert order_lt((3, 0), (0, 1))
    assert order_lt((1, 1), (2, 1))
    assert not order_lt((0, 1), (3, 0))
    with pytest.raises(ValueError):
        order_lt((1,), (1, 2))


@given(st.integers(0, 30))
def test_overline(b):
    Q = 16
    v = overline(b, Q)
    if b == 0:
        assert v == 0
    else:
        assert 1 <= v <= Q - 1 and (v - b) % (Q - 1) == 0


def test_overline_domain():
    with pytest.raises(ValueError):
        overline(31, 16)
    with pytest.raises(ValueError):
        overline(-1, 16)


def test_conjugate():
    assert conjugate((1, 3), 4) == (2, 0)


@pytest.mark.parametrize("q,s", [(2, 2), (2, 3), (2, 4), (3, 2)])
def test_single_class_degree(q, s):
    Q = q ** s
    for d in range(1, Q):
        single_class_degree(d, q, s)


def test_delta_classify():
    cyc = cyclo_data(2, 4, 2)
    a = cyc.set_of((1, 1))
    f = delta_classify(a, 21, 16)
    assert f.subset_lt and f.subset_le and not f.meets_d
    b = cyc.set_of((11, 1))
    f = delta_classify(b, 21, 16)
    assert f.subset_le and not f.subset_lt and f.meets_d


def test_trace_of_x1sq_x2_over_f4():
    F = field_for(2, 2)
    a = cyclo_data(2, 2, 2).set_of((2, 1))
    t = trace_poly(F, a, 1, (2, 1))
    assert t == Poly(F, 2, {(2, 1): 1, (1, 2): 1})


def test_trace_rejects_foreign_exponent():
    F = field_for(2, 2)
    a = cyclo_data(2, 2, 2).set_of((2, 1))
    with pytest.raises(ValueError):
        trace_poly(F, a, 1, (1, 1))


def test_homogenized_trace_keeps_x0_degree():
    F = field_for(2, 4)
    f = frobenius_sum(F, 1, (19, 1, 1), 4, projective=True, keep_x0=True)
    assert set(f.terms) == {(19, 1, 1), (38, 2, 2), (76, 4, 4), (152, 8, 8)}


@pytest.mark.parametrize("q,s", [(2, 2), (2, 3), (3, 2)])
def test_full_trace_values_lie_in_base_field(q, s):
    F = field_for(q, s)
    f = Poly(F, 1, {(1,): F.elem(1), (2,): 1})
    t = full_trace_poly(F, f)
    assert in_base_field(F, eval_points(t, affine_grid(F, 1)))
