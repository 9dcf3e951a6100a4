import itertools
from fractions import Fraction

import pytest

from polycontract.catalog import get_operator, get_space
from polycontract.enumeration import brute_force_vertices, build_ball, constraint_functional
from polycontract.errors import NormExceedsOne, NormNotOne
from polycontract.extremal import (
    check_certificate,
    is_extreme,
    lp_image_check,
    span_check,
    weak_lp_holds,
)
from polycontract.linalg import det
from polycontract.operator import Operator, apply, from_images, op_norm
from polycontract.space import gauge


@pytest.mark.parametrize("name", ["ex1", "ex2", "ex3"])
def test_catalog_operators_are_extreme_without_extreme_images(name):
    T = get_operator(name)
    cert = is_extreme(T)
    assert cert.is_extreme
    assert check_certificate(cert)
    assert not weak_lp_holds(T)
    assert not lp_image_check(T)
    assert span_check(T)


def test_case_i_operator(hexagon, linf2):
    T = from_images(hexagon, linf2, [[1, 1], [1, 1]])
    assert is_extreme(T).is_extreme
    assert not lp_image_check(T)
    assert span_check(T)


def test_weak_lp_witness(hexagon, linf2):
    T = from_images(hexagon, linf2, [[1, 1], [1, 0]])
    result = weak_lp_holds(T)
    assert result.holds and result.witness == hexagon.generators[0]


def test_interior_point_gets_midpoint_witness(ex1):
    half = ex1 * Fraction(1, 2)
    cert = is_extreme(half)
    assert not cert.is_extreme
    assert len(cert.active) == 0
    assert cert.direction.matrix[0][0] == 1
    assert cert.t1 + cert.t2 == half * 2
    assert check_certificate(cert)


def test_identity_on_linf2_is_lp(linf2):
    T = Operator([[1, 0], [0, 1]], linf2, linf2)
    assert lp_image_check(T)
    assert is_extreme(T).is_extreme


def test_rank_one_operator_fails_span_check(hexagon, linf2):
    T = Operator([[1, 0], [1, 0]], hexagon, linf2)
    norms = [gauge(linf2, apply(T, x)) for x in hexagon.generators]
    assert norms[0] == 1 and norms[1] < 1 and norms[2] < 1
    assert op_norm(T) == 1
    assert not span_check(T)
    assert not is_extreme(T).is_extreme


def test_errors(ex1):
    with pytest.raises(NormExceedsOne):
        is_extreme(ex1 * 2)
    with pytest.raises(NormNotOne):
        span_check(ex1 * Fraction(1, 2))


def test_tampered_certificates_are_rejected(ex1, hexagon, linf2):
    cert = is_extreme(ex1)
    bad = type(cert)(cert.verdict, cert.operator, cert.active, spanning=cert.spanning[:-1], determinant=cert.determinant)
    assert not check_certificate(bad)
    other = is_extreme(from_images(hexagon, linf2, [[1, 0], [0, 1]]) * Fraction(1, 2))
    forged = type(other)(other.verdict, other.operator, other.active, direction=other.direction,
                         epsilon=other.epsilon, t1=other.t1 * 2, t2=other.t2)
    assert not check_certificate(forged)


def test_certificate_determinant_matches(ex1):
    cert = is_extreme(ex1)
    rows = [constraint_functional(ex1.codomain.facets[j], ex1.domain.generators[i]) for i, j in cert.spanning]
    assert det(rows) == cert.determinant != 0


SMALL_PAIRS = [
    ("linf2", "linf1"),
    ("hexagon", "linf1"),
    ("hexagon", "linf2"),
    ("hexagon", "l1_2"),
    ("affine_hexagon", "l1_2"),
    ("octagon", "linf2"),
    ("xp8", "linf2"),
    ("linf1", "linf3"),
    ("l1_3", "linf2"),
]


@pytest.mark.parametrize("dom, cod", SMALL_PAIRS)
def test_agreement_with_brute_force(dom, cod):
    X, Y = get_space(dom), get_space(cod)
    vertices = brute_force_vertices(build_ball(X, Y))
    for T in vertices:
        cert = is_extreme(T)
        assert cert.is_extreme and check_certificate(cert)
        neg = is_extreme(-T)
        assert neg.is_extreme
    # midpoints of distinct vertices are never extreme
    for S, T in itertools.islice(itertools.combinations(vertices, 2), 60):
        mid = (S + T) * Fraction(1, 2)
        cert = is_extreme(mid)
        assert not cert.is_extreme and check_certificate(cert)
        assert not is_extreme(-mid).is_extreme
        assert mid not in vertices
