import math

import pytest

from spectradom.graphs import (
    add_isolated,
    cocktail_party,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    empty,
    path,
    star,
)
from spectradom.theorems import (
    EQ_TOL,
    THEOREM_ORDER,
    EqualityAuditError,
    TheoremVerdict,
    _audit,
    applicable_checks,
    check_brand_seifter,
    check_corollary_bipartite,
    check_lemma,
    check_ore,
    check_q_2n2,
    check_q_bipartite,
    check_remark_gamma1,
    check_theorem_L,
    check_theorem_Q,
    run_checks,
)


def test_theorem_L_strict_case():
    v = check_theorem_L(path(4))
    assert v.theorem_id == "T31"
    assert v.gamma == 2
    assert v.bound_value == 4.0
    assert v.computed_value == pytest.approx(2 + math.sqrt(2), abs=1e-9)
    assert v.bound_holds
    assert not v.equality
    assert not v.recognizer_accepts
    assert v.characterization_consistent


def test_theorem_L_equality_cases():
    v = check_theorem_L(cycle(4))
    assert v.equality and v.recognizer_accepts and v.characterization_consistent
    assert v.computed_value == pytest.approx(4.0, abs=EQ_TOL)

    g = add_isolated(complete_bipartite(2, 3), 1)  # n=6, gamma=3, bound 5
    v = check_theorem_L(g)
    assert v.gamma == 3
    assert v.bound_value == 5.0
    assert v.equality and v.recognizer_accepts


def test_theorem_L_rejects_bad_gamma():
    with pytest.raises(ValueError):
        check_theorem_L(complete(4))  # gamma = 1
    with pytest.raises(ValueError):
        check_theorem_L(empty(3))  # gamma = n


def test_remark_gamma1():
    v = check_remark_gamma1(complete(4))
    assert v.theorem_id == "T31"
    assert v.bound_value == 4.0
    assert v.equality and v.bound_holds and v.recognizer_accepts
    v = check_remark_gamma1(star(6))
    assert v.equality and v.recognizer_accepts and v.characterization_consistent
    with pytest.raises(ValueError):
        check_remark_gamma1(path(4))  # gamma = 2
    with pytest.raises(ValueError):
        check_remark_gamma1(complete(1))  # n = 1


def test_corollary_bipartite():
    g = add_isolated(complete_bipartite(2, 3), 1)
    v = check_corollary_bipartite(g)
    assert v.theorem_id == "C32"
    assert v.equality and v.recognizer_accepts

    v = check_corollary_bipartite(cycle(6))
    assert v.bound_value == 6.0
    assert v.computed_value == pytest.approx(4.0)
    assert not v.equality and not v.recognizer_accepts

    with pytest.raises(ValueError):
        check_corollary_bipartite(complete(3))  # odd cycle inside


def test_theorem_Q_strict_and_equality():
    v = check_theorem_Q(cycle(5))
    assert v.theorem_id == "T41"
    assert v.bound_value == 6.0
    assert v.computed_value == pytest.approx(4.0, abs=EQ_TOL)
    assert v.bound_holds and not v.equality and not v.recognizer_accepts

    v = check_theorem_Q(add_isolated(complete(4), 1))  # n=5, gamma=2
    assert v.bound_value == 6.0
    assert v.equality and v.recognizer_accepts

    v = check_theorem_Q(cocktail_party(3))  # n=6, gamma=2, q = 8
    assert v.bound_value == 8.0
    assert v.computed_value == pytest.approx(8.0, abs=EQ_TOL)
    assert v.equality and v.recognizer_accepts

    v = check_theorem_Q(complete(5))  # gamma = 1 allowed here
    assert v.bound_value == 8.0
    assert v.equality


def test_q_bipartite():
    v = check_q_bipartite(cycle(4))
    assert v.theorem_id == "Q_BIPARTITE"
    assert v.bound_value == 4.0
    assert v.equality and v.recognizer_accepts

    v = check_q_bipartite(path(4))
    assert not v.equality
    assert v.computed_value == pytest.approx(2 + math.sqrt(2), abs=1e-8)

    with pytest.raises(ValueError):
        check_q_bipartite(cycle(5))


def test_lemma_edge_growth():
    base = check_lemma(path(4), "L21")
    assert base.bound_holds
    # closing P_4 into C_4 lifts mu from 2 + sqrt(2) to 4
    v = check_lemma(path(4), "L21", edge=(0, 3))
    assert v.computed_value == pytest.approx(4.0)
    assert v.bound_value == pytest.approx(2 + math.sqrt(2))
    assert v.bound_holds
    with pytest.raises(ValueError):
        check_lemma(path(4), "L21", edge=(0, 1))  # already an edge
    with pytest.raises(ValueError):
        check_lemma(complete(4), "L21")  # nothing to add


def test_lemma_mu_at_most_n():
    v = check_lemma(complete(5), "L22")
    assert v.equality  # complement of K_5 is edgeless, disconnected
    assert v.computed_value == pytest.approx(5.0, abs=EQ_TOL)
    v = check_lemma(cycle(5), "L22")
    assert not v.equality
    assert v.bound_holds
    v = check_lemma(complete(1), "L22")
    assert not v.equality  # no claim for n = 1


def test_lemma_degree_bounds():
    v = check_lemma(star(4), "L23")
    assert v.bound_holds and not v.equality
    v = check_lemma(cycle(6), "L23")
    assert v.equality and v.recognizer_accepts  # connected regular
    # disconnected graph hitting q = 2*Delta while irregular: no claim
    g = disjoint_union(complete(3), empty(1))
    v = check_lemma(g, "L23")
    assert v.bound_holds
    assert not v.equality
    assert "disconnected" in v.detail


def test_lemma_neighborhood_union():
    v = check_lemma(path(3), "L31")
    assert v.bound_value == 3.0
    assert v.equality and v.recognizer_accepts and v.characterization_consistent
    v = check_lemma(path(4), "L31")
    assert not v.equality and not v.recognizer_accepts
    assert v.characterization_consistent
    v = check_lemma(cycle(5), "L31")
    assert v.bound_value == 4.0
    assert not v.equality
    with pytest.raises(ValueError):
        check_lemma(disjoint_union(complete(3), empty(1)), "L31")
    with pytest.raises(ValueError):
        check_lemma(path(4), "L22", edge=(0, 3))
    with pytest.raises(ValueError):
        check_lemma(path(4), "L99")


def test_q_2n2():
    v = check_q_2n2(complete(4))
    assert v.bound_value == 6.0
    assert v.equality and v.recognizer_accepts
    v = check_q_2n2(path(4))
    assert v.bound_holds and not v.equality


def test_brand_seifter():
    v = check_brand_seifter(path(7))  # gamma = 3
    assert v.bound_value == 6.0
    assert v.bound_holds  # strict: mu ~ 3.80 < 6
    assert not v.equality
    v = check_brand_seifter(cycle(9))  # gamma = 3, n = 9
    assert v.bound_value == 8.0
    assert v.bound_holds
    with pytest.raises(ValueError):
        check_brand_seifter(cycle(5))  # gamma = 2
    with pytest.raises(ValueError):
        check_brand_seifter(disjoint_union(path(7), path(7)))


def test_ore():
    v = check_ore(cycle(5))
    assert v.bound_value == 2.0 and v.computed_value == 2.0
    assert v.bound_holds and v.equality
    v = check_ore(star(4))
    assert v.bound_holds and not v.equality
    with pytest.raises(ValueError):
        check_ore(add_isolated(complete(3), 1))


def test_audit_raises_on_disagreement():
    g = complete(3)
    # structural says equality but the numbers are far apart
    with pytest.raises(EqualityAuditError) as exc:
        _audit("T41", g, True, 3.0, 4.0)
    assert "Bw" in str(exc.value)
    assert "T41" in str(exc.value)
    with pytest.raises(EqualityAuditError):
        _audit("T41", g, False, 4.0 - EQ_TOL / 2, 4.0)
    # agreement in both directions passes silently
    _audit("T41", g, True, 4.0, 4.0 + EQ_TOL / 2)
    _audit("T41", g, False, 3.0, 4.0)


def test_applicable_checks_gating():
    assert applicable_checks(empty(3)) == ()
    assert applicable_checks(complete(1)) == ()

    got = applicable_checks(complete(4))
    assert "T31" in got and "T41" in got and "ORE" in got
    assert "L21" not in got  # complete
    assert "C32" not in got and "Q_BIPARTITE" not in got
    assert "BRAND_SEIFTER" not in got  # gamma = 1

    got = applicable_checks(disjoint_union(complete(3), empty(1)))
    assert "L31" not in got  # disconnected
    assert "ORE" not in got  # isolated vertex
    assert "L21" in got and "T41" in got

    got = applicable_checks(path(7))
    assert "BRAND_SEIFTER" in got and "C32" in got

    # verdict order follows THEOREM_ORDER
    order = [v.theorem_id for v in run_checks(path(7))]
    assert order == [t for t in THEOREM_ORDER if t in got]


def test_run_checks_subset_and_errors():
    vs = run_checks(cycle(5), checks=["T41", "ORE"])
    assert [v.theorem_id for v in vs] == ["T41", "ORE"]
    assert run_checks(empty(4)) == []
    with pytest.raises(ValueError):
        run_checks(cycle(5), checks=["T99"])
    # requesting an inapplicable check silently yields nothing
    assert run_checks(complete(4), checks=["BRAND_SEIFTER"]) == []


def test_every_verdict_carries_context(census):
    for g in census[5]:
        for v in run_checks(g):
            assert isinstance(v, TheoremVerdict)
            assert v.n == 5
            assert 1 <= v.gamma <= 5
            assert v.bound_holds, (v.theorem_id, v.detail)
            assert v.characterization_consistent, (v.theorem_id, v.detail)
            assert v.detail
