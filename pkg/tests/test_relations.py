import pytest

from lltpaths.coeffring import CoeffQT
from lltpaths.errors import BoundExceeded
from lltpaths.llt import chromatic, llt
from lltpaths.relations import (
    all_suites,
    dyck_path_graph_formula,
    recursion_evaluate,
    sarrus_terms,
    verify_bounce_A,
    verify_bounce_B,
    verify_bounce_nd,
    verify_chromatic_relations,
    verify_dual_bounce,
    verify_dyck_relations,
    verify_extended_bounce,
    verify_generalized_bounce,
    verify_unicellular,
)
from lltpaths.schroeder import enumerate_paths, parse

Q = CoeffQT.q()
ONE = CoeffQT.one()


def test_unicellular_smallest_instance():
    lhs = llt(parse("nnee")).convert("e") - llt(parse("nene")).convert("e")
    rhs = llt(parse("nde")).convert("e").scale(Q - 1)
    assert lhs == rhs


def test_unicellular_suite_small():
    for n in range(1, 5):
        report = verify_unicellular(n)
        assert report.passed and report.failures == []
    assert verify_unicellular(3).instances == 7


def test_unicellular_negative_control():
    def corrupted(p):
        if p.word == "nndee":
            return llt(parse("ndnee"))
        return llt(p)

    assert not verify_unicellular(3, llt_fn=corrupted).passed


def test_bounce_A_first_instance():
    # smallest admissible nn-instance: F(U nn V de W) = q F(U nn V ed W)
    lhs = llt(parse("nndee")).convert("e")
    rhs = llt(parse("nnede")).convert("e").scale(Q)
    assert lhs == rhs


def test_bounce_dn_instance():
    # smallest dn-instance: F(U dn V de W) = F(U nd V ed W)
    lhs = llt(parse("ndndee")).convert("e")
    rhs = llt(parse("nndede")).convert("e")
    assert lhs == rhs


def test_bounce_nd_instance():
    # smallest nd-instance of the two-term relation
    lhs = llt(parse("nnddee")).convert("e")
    rhs = llt(parse("nndede")).convert("e").scale(Q - 1) + llt(
        parse("ndnede")
    ).convert("e").scale(Q)
    assert lhs == rhs


def test_bounce_suites_small():
    for n in range(1, 6):
        for fn in (verify_bounce_A, verify_bounce_B, verify_bounce_nd):
            report = fn(n)
            assert report.passed, (n, report.suite, report.failures[:1])
    assert verify_bounce_A(4).instances == 6
    assert verify_bounce_nd(4).instances == 1


def test_generalized_bounce():
    # vacuous at n = 2
    assert verify_generalized_bounce(2).instances == 0
    for n in range(3, 6):
        report = verify_generalized_bounce(n)
        assert report.passed
    # the two-bounce-point worked instance
    lhs = llt(parse("nnddndeee")).convert("e")
    rhs = llt(parse("nnddnedee")).convert("e").scale(Q)
    assert lhs == rhs


def test_generalized_three_bounce_points():
    # the smallest admissible instance with three bounce points has size 7
    from lltpaths.schroeder import bounce_at

    p = parse("nndddddee")
    data = bounce_at(p, (5, 7))
    assert len(data.bounce_points) == 3
    u, s12, v, s34, w = data.decomposition
    assert s12 == "nn" and s34 == "de" and "e" not in v
    lhs = llt(p).convert("e")
    rhs = llt(parse(u + "nn" + v + "ed" + w)).convert("e").scale(Q)
    assert lhs == rhs


def test_mutation_breaks_generalized():
    def corrupted(p):
        if p.word == "nnddndeee":
            return llt(parse("nnddnedee"))
        return llt(p)

    assert not verify_generalized_bounce(6, llt_fn=corrupted).passed


def test_dyck_relations_small():
    for n in range(1, 6):
        report = verify_dyck_relations(n)
        assert report.passed, (n, report.failures[:1])
    # vacuous when no admissible point exists
    assert verify_dyck_relations(2).instances == 0


def test_modular_relation_smallest_instance():
    # F(nn nee) = (q+1) F(nn ene) - q F(nn een)
    lhs = llt(parse("nnnee" + "e")).convert("e")
    rhs = llt(parse("nnenee")).convert("e").scale(Q + 1) - llt(
        parse("nneene")
    ).convert("e").scale(Q)
    assert lhs == rhs


def test_sarrus_terms_shape():
    plus, minus = sarrus_terms("n", "", "e")
    assert plus == ["nennenee", "nnenneee", "nnneeene"]
    assert minus == ["nennneee", "nneneene", "nnneenee"]
    acc = None
    for word in plus:
        f = llt(parse(word)).convert("e")
        acc = f if acc is None else acc + f
    for word in minus:
        acc = acc - llt(parse(word)).convert("e")
    assert acc.is_zero()


def test_dual_suite_small():
    for n in range(1, 6):
        report = verify_dual_bounce(n)
        assert report.passed, (n, report.failures[:1])


def test_chromatic_suite_small():
    for n in range(1, 5):
        report = verify_chromatic_relations(n)
        assert report.passed, (n, report.failures[:1])


def test_chromatic_multiplicativity():
    f = chromatic(parse("nene")).convert("e")
    g = chromatic(parse("ne")).convert("e")
    assert f == g * g


def test_extended_suite_reported_separately():
    reports = all_suites(4, include_extended=True)
    names = [r.suite for r in reports]
    assert "extended" in names
    assert all(r.passed for r in reports)
    assert "extended" not in [r.suite for r in all_suites(4)]


def test_dyck_path_graph_formula():
    assert dyck_path_graph_formula(0).coeffs == {(1,): ONE}
    assert dyck_path_graph_formula(1).coeffs == {(1, 1): ONE, (2,): Q - 1}
    assert dyck_path_graph_formula(2) == llt(parse("nnenee")).convert("e")
    for k in range(0, 5):
        word = "n" + "ne" * k + "e"
        assert dyck_path_graph_formula(k) == llt(parse(word)).convert("e"), k


def test_recursion_evaluate_examples():
    assert recursion_evaluate("nde").coeffs == {(2,): ONE}
    assert recursion_evaluate("nndee").coeffs == {(2, 1): Q, (3,): Q * Q - Q}
    assert recursion_evaluate("nene").coeffs == {(1, 1): ONE}
    with pytest.raises(BoundExceeded):
        recursion_evaluate("n" * 8 + "e" * 8)


def test_recursion_evaluate_matches_colorings():
    for n in range(1, 6):
        for p in enumerate_paths(n):
            assert recursion_evaluate(p) == llt(p).convert("e"), p.word
