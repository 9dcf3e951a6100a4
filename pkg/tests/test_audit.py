import pytest

from polycontract.audit import (
    _has_heavy_triple,
    audit_pair,
    codomain_kind,
    image_preserving_operators,
    lemma_check,
    lemma_check_naive,
    verify_theorem_precondition,
)
from polycontract.catalog import get_operator, get_space
from polycontract.errors import PreconditionViolated, TooLarge
from polycontract.extremal import check_certificate, lp_image_check
from polycontract.serialize import dumps, report_to_json


def S(name):
    return get_space(name)


def test_weak_lp_holds_hexagon_linf2():
    report = audit_pair(S("hexagon"), S("linf2"), "weak-lp")
    assert report.verdict == "holds"
    assert report.vertex_count == 36 and not report.violations
    assert report.span_failures == 0


def test_weak_lp_fails_hexagon_linf3():
    report = audit_pair(S("hexagon"), S("linf3"), "weak-lp")
    assert report.verdict == "fails"
    ops = {v.operator for v in report.violations}
    ex1 = get_operator("ex1")
    assert ex1 in ops and -ex1 in ops
    for v in report.violations:
        assert v.certificate.is_extreme and check_certificate(v.certificate)
        assert v.operator in report.vertices


def test_weak_lp_fails_octagon_linf2():
    report = audit_pair(S("octagon"), S("linf2"), "weak-lp")
    assert report.verdict == "fails"
    assert get_operator("ex3") in {v.operator for v in report.violations}


def test_weak_lp_holds_hexagon_l1_2():
    assert audit_pair(S("hexagon"), S("l1_2"), "weak-lp").holds


def test_lp_audit_identity_space():
    report = audit_pair(S("linf2"), S("linf2"), "lp")
    assert report.holds and report.vertex_count == 16


def test_lp_audit_hexagon_linf2_fails_every_vertex():
    # every extreme contraction sends some extreme point to a non-extreme image
    report = audit_pair(S("hexagon"), S("linf2"), "lp")
    assert report.verdict == "fails"
    assert len(report.violations) == 36
    assert all(v.kind == "non-extreme-image" for v in report.violations)
    assert image_preserving_operators(S("hexagon"), S("linf2")) == []


def test_image_preserving_operators_are_vertices():
    ops = image_preserving_operators(S("l1_2"), S("linf2"))
    assert ops and all(lp_image_check(T) for T in ops)
    report = audit_pair(S("l1_2"), S("linf2"), "lp")
    assert not [v for v in report.violations if v.kind == "image-preserving-not-extreme"]


def test_preconditions():
    assert verify_theorem_precondition(S("hexagon"), S("linf2"), "th1")
    assert not verify_theorem_precondition(S("hexagon"), S("linf3"), "th1")
    assert not verify_theorem_precondition(S("octagon"), S("linf2"), "th1")
    assert verify_theorem_precondition(S("hexagon"), S("l1_2"), "th2")
    assert not verify_theorem_precondition(S("hexagon"), S("l1_3"), "th2")
    assert verify_theorem_precondition(S("xp8"), S("l1_2"), "th2")
    assert codomain_kind(S("hexagon")) is None


def test_audit_is_deterministic():
    a = dumps(report_to_json(audit_pair(S("octagon"), S("linf2"), "weak-lp")))
    b = dumps(report_to_json(audit_pair(S("octagon"), S("linf2"), "weak-lp")))
    assert a == b


def test_audit_threads_do_not_change_report(monkeypatch):
    single = dumps(report_to_json(audit_pair(S("hexagon"), S("linf3"), "weak-lp"), limit=None))
    monkeypatch.setenv("EC_THREADS", "4")
    multi = dumps(report_to_json(audit_pair(S("hexagon"), S("linf3"), "weak-lp"), limit=None))
    assert single == multi


@pytest.mark.parametrize("m, k, claim", [(2, 3, "i"), (2, 2, "ii"), (3, 7, "i"), (3, 6, "ii"), (3, 9, "i")])
def test_lemma_holds(m, k, claim):
    report = lemma_check(m, k, claim)
    assert report.holds and report.counterexample is None


def test_lemma_family_counts():
    # multisets of 7 from the 4 subsets of {1,2,3} with at least two elements
    assert lemma_check(3, 7, "i").families_checked == 120
    report = lemma_check(3, 6, "ii")
    assert report.surviving == [((1, 2), (1, 2), (1, 3), (1, 3), (2, 3), (2, 3))]


@pytest.mark.parametrize("m, k, claim", [(2, 3, "i"), (2, 2, "ii"), (3, 7, "i"), (3, 6, "ii"), (3, 8, "i")])
def test_lemma_matches_naive_enumeration(m, k, claim):
    fast, naive = lemma_check(m, k, claim), lemma_check_naive(m, k, claim)
    assert (fast.holds, fast.families_checked, fast.surviving) == (naive.holds, naive.families_checked, naive.surviving)


def test_heavy_triple_detection():
    # with k = m(m-1) the "each pair twice" family avoids heavy triples
    family = (0b011, 0b011, 0b101, 0b101, 0b110, 0b110)
    assert not _has_heavy_triple(family)
    assert _has_heavy_triple(family + (0b011,))


def test_lemma_preconditions():
    with pytest.raises(PreconditionViolated):
        lemma_check(3, 6, "i")
    with pytest.raises(PreconditionViolated):
        lemma_check(3, 7, "ii")
    with pytest.raises(PreconditionViolated):
        lemma_check(1, 1, "i")
    with pytest.raises(TooLarge):
        lemma_check(5, 21, "i")


def test_lemma_m4():
    assert lemma_check(4, 13, "i").holds
    report = lemma_check(4, 12, "ii")
    assert report.holds and len(report.surviving) == 1


@pytest.mark.slow
@pytest.mark.parametrize("k, claim", [(13, "i"), (12, "ii")])
def test_lemma_m4_naive(k, claim):
    naive = lemma_check_naive(4, k, claim)
    assert naive.holds
    assert naive.surviving == lemma_check(4, k, claim).surviving
