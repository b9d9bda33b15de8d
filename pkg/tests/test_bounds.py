import pytest
from hypothesis import given

from kalliance.bounds import (
    BOUNDS,
    ClosedFormPremiseError,
    Status,
    closed_form_Kn,
    evaluate_all,
    evaluate_bound,
)
from kalliance.graph import Graph, generate, parse_gen
from kalliance.solver import compute

from conftest import graph_and_k

K5, C4 = generate("complete", 5), generate("cycle", 4)


def test_k5_tight_examples():
    e = evaluate_bound(K5, 1, "B3-lower")
    assert (e.bound_value, e.exact_value, e.status) == (3, 3, Status.TIGHT)
    e = evaluate_bound(K5, 1, "B4")
    assert (e.bound_value, e.exact_value, e.status) == (2.0, 2, Status.TIGHT)


def test_c4_examples():
    e = evaluate_bound(C4, 0, "B3-lower")
    assert (e.bound_value, e.exact_value, e.status) == (1, 2, Status.SLACK)
    e = evaluate_bound(C4, 0, "B7")
    assert (e.bound_value, e.exact_value, e.status) == (2, 2, Status.TIGHT)


def test_disconnected_is_premise_unmet():
    g = parse_gen("path:2-disjoint")
    for bid in ("B3-lower", "B3-upper", "B4", "B7"):
        e = evaluate_bound(g, 0, bid)
        assert e.status is Status.PREMISE_UNMET and not e.premises_met
        assert "connected" in e.reason


def test_unknown_bound():
    with pytest.raises(ValueError):
        evaluate_bound(K5, 0, "B9")


def test_evaluation_serializes():
    d = evaluate_bound(K5, 1, "B5").as_dict()
    assert d["status"] == "holds-tight" and d["inputs"]["n"] == 5


@given(graph_and_k(min_n=2, max_n=7))
def test_no_bound_is_violated(gk):
    g, k = gk
    for e in evaluate_all(g, [k]):
        assert e.status is not Status.VIOLATED, e


def test_b3_lower_is_b5_minus_one_on_corpus():
    # the B3 lower bound is the B5 bound shifted by one
    for text in ["complete:5", "cycle:6", "star:5", "c8-chords", "gnp:8,0.5,2", "grid:2x4"]:
        g = parse_gen(text)
        for k in range(-g.Delta, g.Delta + 1):
            b3 = BOUNDS["B3-lower"].value(evaluate_bound(g, k, "B5").inputs)
            b5 = evaluate_bound(g, k, "B5").bound_value
            assert b3 == b5 - 1


# -- statements that need an extra premise --------------------------------------


def test_b2_upper_needs_k_above_two_minus_delta():
    # at k = -Delta every singleton is an offensive alliance, so phi^o = 0 while
    # the formula gives floor((2n - (n-1) - (n-1) - 3)/2) = -1
    for n in range(3, 8):
        g = generate("complete", n)
        k = -(n - 1)
        value = BOUNDS["B2-upper"].value(evaluate_bound(g, k, "B1").inputs)
        assert value == -1 and compute(g, "phi_k^o", k).value == 0
        assert evaluate_bound(g, k, "B2-upper").status is Status.PREMISE_UNMET


def test_b7_needs_connectivity():
    g = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert compute(g, "phi_k", 0).value == 2
    assert BOUNDS["B7"].value(evaluate_bound(g, 0, "B1").inputs) == 3
    assert evaluate_bound(g, 0, "B7").status is Status.PREMISE_UNMET


# -- complete graph closed forms ----------------------------------------------------


def test_closed_form_examples():
    assert closed_form_Kn(5, 1, "phi_k") == 3
    assert closed_form_Kn(5, 1, "a_k") == 4
    assert closed_form_Kn(6, 2, "phi_k^go") == 3


def test_closed_form_premises():
    with pytest.raises(ClosedFormPremiseError):
        closed_form_Kn(5, 1, "phi_k^go")
    with pytest.raises(ClosedFormPremiseError):
        closed_form_Kn(5, -4, "gamma_k^o")
    with pytest.raises(ValueError):
        closed_form_Kn(5, 5, "phi_k")
    with pytest.raises(ValueError):
        closed_form_Kn(5, 0, "nope")


def test_go_formula_matches_solver_even_when_both_odd():
    # the parity premise is not needed for the value itself
    checked = 0
    for n in (3, 5, 7):
        g = generate("complete", n)
        for k in range(-(n - 1), n):
            if k % 2:
                assert compute(g, "phi_k^go", k).value == (n + k - 2) // 2
                checked += 1
    assert checked == 12
