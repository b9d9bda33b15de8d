"""Predicates against the set-based oracle, plus closure properties."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kalliance.graph import GraphError, generate, iter_members, parse_gen
from kalliance.logic import (
    AllianceSpec,
    Kind,
    contains_alliance,
    find_alliance,
    is_alliance,
    is_alliance_mask,
    is_boundary_offensive,
    is_cover,
    is_free,
    is_free_mask,
    is_maximal_free,
    is_minimal_cover,
    largest_alliance,
)
from kalliance.oracle import naive_is_alliance

from conftest import graph_and_k

FAMILIES = [(Kind.DEFENSIVE, False), (Kind.DEFENSIVE, True), (Kind.OFFENSIVE, False), (Kind.OFFENSIVE, True)]


def specs(k):
    return [AllianceSpec(kind, k, gl) for kind, gl in FAMILIES]


def members(mask):
    return frozenset(iter_members(mask))


def test_defensive_inequality_by_hand():
    g = generate("complete", 5)
    spec = AllianceSpec.defensive(1)
    # inside a 4-clique each member has 3 friends, 1 outside: 3 >= 1 + 1
    assert is_alliance(g, g.vertex_set([0, 1, 2, 3]), spec)
    # 3 friends in a triangle: 2 >= 2 + 1 fails
    assert not is_alliance(g, g.vertex_set([0, 1, 2]), spec)


def test_offensive_checks_boundary_only():
    g = generate("star", 5)
    leaves = g.vertex_set([1, 2, 3, 4])
    assert is_alliance(g, leaves, AllianceSpec.offensive(4))
    assert is_alliance(g, leaves, AllianceSpec.offensive(4, True))
    assert is_alliance(g, g.all_vertices(), AllianceSpec.offensive(4))


def test_empty_set_and_range_errors():
    g = generate("cycle", 4)
    with pytest.raises(GraphError):
        is_alliance(g, g.vertex_set(), AllianceSpec.defensive(0))
    with pytest.raises(GraphError):
        is_free(g, g.vertex_set(), AllianceSpec.defensive(3))
    assert is_free(g, g.vertex_set(), AllianceSpec.defensive(0))


def test_minimal_and_maximal_reject_wrong_inputs():
    g = generate("cycle", 4)
    spec = AllianceSpec.defensive(0)
    with pytest.raises(GraphError):
        is_minimal_cover(g, g.vertex_set([0]), spec)
    with pytest.raises(GraphError):
        is_maximal_free(g, g.vertex_set([0, 1]), spec)
    assert is_minimal_cover(g, g.vertex_set([0, 2]), spec)
    assert is_maximal_free(g, g.vertex_set([0, 2]), spec)


def test_boundary_offensive_on_c4():
    g = generate("cycle", 4)
    # outside vertices of {0, 1} each see one vertex in and one out
    assert is_boundary_offensive(g, g.vertex_set([0, 1]), 0)
    assert not is_boundary_offensive(g, g.vertex_set([0, 2]), 0)
    assert is_boundary_offensive(g, g.vertex_set([0, 2]), 2)


@given(graph_and_k(), st.data())
def test_mask_predicate_matches_oracle(gk, data):
    g, k = gk
    S = data.draw(st.integers(1, g.full))
    for spec in specs(k):
        assert is_alliance_mask(g, S, spec) == naive_is_alliance(g, members(S), spec)


@given(graph_and_k(max_n=6), st.data())
def test_free_matches_subset_enumeration(gk, data):
    g, k = gk
    X = data.draw(st.integers(0, g.full))
    for spec in specs(k):
        sub, found = X, False
        while True:
            if sub and naive_is_alliance(g, members(sub), spec):
                found = True
                break
            if not sub:
                break
            sub = (sub - 1) & X
        assert is_free_mask(g, X, spec) == (not found)
        assert contains_alliance(g, spec, X) == found


@given(graph_and_k(), st.data())
def test_union_of_alliances_is_alliance(gk, data):
    g, k = gk
    A = data.draw(st.integers(1, g.full))
    B = data.draw(st.integers(1, g.full))
    for kind in Kind:
        spec = AllianceSpec(kind, k)
        if is_alliance_mask(g, A, spec) and is_alliance_mask(g, B, spec):
            assert is_alliance_mask(g, A | B, spec)


@given(graph_and_k(), st.data())
def test_largest_alliance_contains_every_alliance_inside(gk, data):
    g, k = gk
    pool = data.draw(st.integers(0, g.full))
    for kind in Kind:
        spec = AllianceSpec(kind, k)
        L = largest_alliance(g, spec, pool)
        assert L & ~pool == 0
        assert L == 0 or is_alliance_mask(g, L, spec)
        S = data.draw(st.integers(0, g.full)) & pool
        if S and is_alliance_mask(g, S, spec):
            assert S & ~L == 0


@given(graph_and_k(), st.data())
def test_free_is_closed_under_subsets(gk, data):
    g, k = gk
    X = data.draw(st.integers(0, g.full))
    Y = data.draw(st.integers(0, g.full)) & X
    for spec in specs(k):
        if is_free_mask(g, X, spec):
            assert is_free_mask(g, Y, spec)


@given(graph_and_k(), st.data())
def test_cover_iff_complement_free(gk, data):
    g, k = gk
    Y = g.vertex_set(iter_members(data.draw(st.integers(0, g.full))))
    for spec in specs(k):
        assert is_cover(g, Y, spec) == is_free(g, Y.complement(), spec)


@given(graph_and_k(max_n=6), st.data())
def test_find_alliance_is_lexicographically_first(gk, data):
    g, k = gk
    spec = data.draw(st.sampled_from(specs(k)))
    size = data.draw(st.integers(1, g.n))
    found = find_alliance(g, spec, g.full, size=size)
    want = None
    for S in sorted((m for m in range(1, g.full + 1) if m.bit_count() == size), key=lambda m: sorted(iter_members(m))):
        if naive_is_alliance(g, members(S), spec):
            want = S
            break
    assert found == want


def test_find_alliance_with_required_and_pool():
    g = parse_gen("cycle:6")
    spec = AllianceSpec.defensive(0)
    assert find_alliance(g, spec, g.full, required=1 << 3, size=2) == 0b001100
    assert find_alliance(g, spec, 0b000111, required=1 << 4) is None
