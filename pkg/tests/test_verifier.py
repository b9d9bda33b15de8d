import json

import pytest

from kalliance import verifier
from kalliance.graph import GraphError, c8_chords, dominates, generate, parse_gen
from kalliance.logic import AllianceSpec, is_alliance_mask
from kalliance.solver import compute
from kalliance.verifier import THEOREMS, Tables, corpus_run, default_corpus, verify

C4, K5 = generate("cycle", 4), generate("complete", 5)


def test_oac_counterexample_on_c8_chords():
    r = verify(c8_chords(), "T-oac-counter", 0)
    assert r.status == "verified" and r.instances == 1
    assert r.witnesses[0]["complement"] == [0, 3, 7]


def test_oac_counter_elsewhere_is_not_applicable():
    assert verify(C4, "T-oac-counter", 0).status == "not-applicable"
    assert verify(c8_chords(), "T-oac-counter", 1).status == "not-applicable"


def test_dual_on_c4_covers_all_subsets():
    r = verify(C4, "T-dual", 0)
    # three families, sixteen subsets each
    assert (r.status, r.instances, r.counterexample_count) == ("verified", 48, 0)


def test_ext_daf_on_k5():
    r = verify(K5, "T-ext-daf", -1)
    assert r.status == "verified" and r.instances > 0


@pytest.mark.parametrize("tid", [t for t in THEOREMS if t.startswith(("T-", "C-"))])
def test_every_check_passes_on_a_small_graph(tid):
    g = parse_gen("gnp:7,0.5,4")
    t = Tables(g)
    for k in range(-g.Delta, g.Delta + 1):
        assert verify(g, tid, k, t).counterexample_count == 0


def test_out_of_range_k_is_reported():
    r = verify(C4, "T-13", 2)
    assert r.status == "out-of-range" and r.instances == 0


def test_errors():
    with pytest.raises(ValueError):
        verify(C4, "bogus-id", 0)
    with pytest.raises(GraphError):
        verify(generate("path", 11), "T-dual", 0)
    with pytest.raises(GraphError):
        verify(C4, "T-dual", 3)


def test_a_broken_predicate_is_caught(monkeypatch):
    monkeypatch.setattr(verifier, "dominates", lambda g, mask: False)
    r = verify(C4, "T-dom", 0)
    assert r.status == "failed" and r.counterexamples


def test_vacuous_run_is_flagged():
    # K_3 has no partition into two boundary offensive 0-alliances
    r = verify(generate("complete", 3), "T-front", 0)
    assert r.status == "vacuous" and r.instances == 0


# -- degenerate instances the nondegeneracy premise removes ------------------------


def test_singleton_alliance_breaks_domination_claim():
    # C_4 at k = -2: every vertex alone is a defensive alliance, the only
    # minimal cover is V and its complement dominates nothing
    t = Tables(C4)
    assert t.minimal_covers(AllianceSpec.defensive(-2)) == [C4.full]
    assert not dominates(C4, 0)
    r = verify(C4, "T-dom", -2)
    assert (r.excluded, r.instances, r.status) == (1, 0, "vacuous")
    r = verify(C4, "T-goa", -2)
    assert r.excluded == 1 and r.counterexample_count == 0


def test_ext_daf_needs_vertex_not_alone_an_alliance():
    # star:4 at k = -3, X empty, v a leaf: {v} is a defensive (-1)-alliance,
    # so X + v is not (-1)-alliance free
    g = generate("star", 4)
    assert is_alliance_mask(g, 1 << 1, AllianceSpec.defensive(-1))
    r = verify(g, "T-ext-daf", -3)
    assert r.excluded > 0 and r.counterexample_count == 0 and r.instances > 0


def test_goac_excludes_whole_vertex_set():
    # K_2 at k = 1: V is the minimal cover and its complement is empty
    g = generate("path", 2)
    r = verify(g, "T-goac", 1)
    assert r.excluded == 1 and r.instances == 0


def test_step_corollary_for_goaf_needs_room():
    # star:6, k = 1, r = 2: phi^go_1 = 4 but phi^go_5 = 5, not >= 6
    g = generate("star", 6)
    assert compute(g, "phi_k^go", 1).value == 4
    assert compute(g, "phi_k^go", 5).value == 5
    r = verify(g, "C-step-goaf", 1)
    assert r.excluded >= 1 and r.counterexample_count == 0


# -- corpus runs -------------------------------------------------------------------


def test_default_corpus_shape():
    corpus = default_corpus()
    names = [g.name for g in corpus]
    assert len(corpus) == 36 and "c8-chords" in names
    assert sum(n.startswith("gnp:8") for n in names) == 20
    assert max(g.n for g in corpus) <= verifier.MAX_N


def test_empty_theorem_list():
    r = corpus_run(default_corpus()[:3], [])
    assert r.tasks == [] and r.summary() == {} and r.ok


def test_disconnected_bound_is_premise_unmet():
    r = corpus_run([parse_gen("path:2-disjoint")], ["B3-lower"], [0])
    assert [t.status for t in r.tasks] == ["premise-unmet"]
    assert r.ok


def test_k_outside_range_is_listed_as_skipped():
    r = corpus_run([C4], ["T-oac2"], range(-3, 4))
    assert [s["k"] for s in r.skipped] == [-3, 3]
    assert {t.k for t in r.tasks} == {-2, -1, 0, 1, 2}


def test_parallel_run_is_identical():
    corpus = default_corpus()[:8]
    ids = ["T-dom", "T-13", "C-mono", "B7"]
    one = json.dumps(corpus_run(corpus, ids, workers=1).as_dict(), sort_keys=True)
    two = json.dumps(corpus_run(corpus, ids, workers=2).as_dict(), sort_keys=True)
    assert one == two


def test_c8_chords_complement_is_not_dominating():
    assert not dominates(c8_chords(), 0b10001001)
