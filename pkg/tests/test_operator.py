from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polycontract.catalog import get_operator, get_space, linf
from polycontract.errors import DimensionMismatch, IncompatibleFields, NormExceedsOne, ZeroOperator
from polycontract.linalg import dot
from polycontract.operator import Operator, active_set, apply, attainment_set, from_images, op_norm
from polycontract.scalar import parse_scalar
from polycontract.space import extreme_points, gauge


def V(*lits):
    return tuple(parse_scalar(str(x)) for x in lits)


X3 = V("-1/2", "1/2*sqrt(3)")


def test_apply_ex1(ex1):
    assert apply(ex1, [1, 0]) == V(1, -1, 0)
    assert apply(ex1, X3) == V(0, 1, 1)
    assert apply(ex1, [0, 0]) == V(0, 0, 0)
    with pytest.raises(DimensionMismatch):
        apply(ex1, [1, 0, 0])


def test_op_norm_examples(ex1):
    assert op_norm(ex1) == 1
    assert op_norm(Operator.zero(ex1.domain, ex1.codomain)) == 0
    assert op_norm(ex1 * 2) == 2


def test_attainment_ex1(ex1):
    assert set(attainment_set(ex1)) == set(extreme_points(ex1.domain))


def test_attainment_case_2a(hexagon, linf2):
    T = from_images(hexagon, linf2, [[1, 1], [1, 0]])
    assert apply(T, X3) == V(0, -1)
    assert len(attainment_set(T)) == 6


def test_attainment_case_i(hexagon, linf2):
    T = from_images(hexagon, linf2, [[1, 1], [1, 1]])
    assert apply(T, X3) == V(0, 0)
    xs = hexagon.generators
    assert set(attainment_set(T)) == {xs[0], xs[1], tuple(-x for x in xs[0]), tuple(-x for x in xs[1])}


def test_attainment_zero_operator(hexagon, linf2):
    with pytest.raises(ZeroOperator):
        attainment_set(Operator.zero(hexagon, linf2))


def test_active_set_examples(ex1, hexagon, linf2):
    assert len(active_set(Operator.zero(hexagon, linf2))) == 0
    assert active_set(ex1).generators() == {0, 1, 2}
    identity = Operator([[1, 0], [0, 1]], linf2, linf2)
    assert len(active_set(identity)) == 4
    with pytest.raises(NormExceedsOne):
        active_set(ex1 * 2)


def test_from_images_reproduces_quoted_images():
    ex2 = get_operator("ex2")
    assert apply(ex2, X3) == V("-1/2", 0, "1/2")
    ex3 = get_operator("ex3")
    assert ex3.matrix == (V(1, "1-sqrt(2)"), V("-1+sqrt(2)", 1))
    xs = ex3.domain.generators
    assert apply(ex3, xs[2]) == V("1-sqrt(2)", 1)
    assert apply(ex3, xs[3]) == V(-1, "-1+sqrt(2)")


def test_fields_must_agree():
    with pytest.raises(IncompatibleFields):
        Operator([[1, 0], [0, 1]], get_space("hexagon"), get_space("octagon"))


entries = st.fractions(min_value=-1, max_value=1, max_denominator=6)
matrices = st.lists(st.lists(entries, min_size=2, max_size=2), min_size=2, max_size=2)


@settings(max_examples=100, deadline=None)
@given(matrices, matrices)
def test_operator_norm_properties(A, B):
    X, Y = get_space("hexagon"), linf(2)
    S, T = Operator(A, X, Y), Operator(B, X, Y)
    # gauge-max and facet-max formulations coincide
    facet_max = max(dot(f, apply(S, x)) for x in extreme_points(X) for f in Y.facets)
    assert op_norm(S) == facet_max
    assert op_norm(S + T) <= op_norm(S) + op_norm(T)
    if op_norm(S):
        M = attainment_set(S)
        assert M and set(M) == {tuple(-c for c in x) for x in M}
        unit = S * (1 / op_norm(S))
        for i, _ in active_set(unit):
            assert X.generators[i] in set(attainment_set(unit))


def test_norm_scales_exactly(ex1):
    assert op_norm(ex1 * Fraction(3, 7)) == Fraction(3, 7)
    for x in extreme_points(ex1.domain):
        assert gauge(ex1.codomain, apply(ex1, x)) == 1
