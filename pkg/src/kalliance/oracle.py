"""Unpruned 2^n enumeration, kept deliberately naive.

Nothing here reuses the bitmask predicates of :mod:`kalliance.logic`; the
alliance test is re-derived from adjacency lists and Python sets so that it
can serve as ground truth for the pruned solvers.
"""

from __future__ import annotations

from itertools import combinations

from .graph import Graph, GraphError
from .logic import AllianceSpec, Kind

ORACLE_MAX_N = 12


def _check(g: Graph) -> None:
    if g.n > ORACLE_MAX_N:
        raise GraphError(f"oracle enumerates 2^n subsets; n={g.n} exceeds the cap of {ORACLE_MAX_N}")


def naive_is_alliance(g: Graph, S: frozenset[int], spec: AllianceSpec) -> bool:
    if not S:
        return False
    nbrs = [set(g.neighbors(v)) for v in range(g.n)]
    outside = set(range(g.n)) - S
    if spec.kind is Kind.DEFENSIVE:
        checked = S
    else:
        checked = {u for u in outside if nbrs[u] & S}
    for v in checked:
        if len(nbrs[v] & S) < len(nbrs[v] & outside) + spec.k:
            return False
    if spec.global_:
        return all(nbrs[u] & S for u in outside)
    return True


def all_subsets(n: int):
    """Every subset of ``range(n)`` as a sorted tuple, by size then lexicographically."""
    for size in range(n + 1):
        yield from combinations(range(n), size)


def alliance_table(g: Graph, spec: AllianceSpec) -> list[frozenset[int]]:
    """All alliances of the family, by size then lexicographically."""
    _check(g)
    return [frozenset(S) for S in all_subsets(g.n) if naive_is_alliance(g, frozenset(S), spec)]


def free_sets(g: Graph, spec: AllianceSpec) -> list[frozenset[int]]:
    alliances = alliance_table(g, spec)
    out = []
    for X in all_subsets(g.n):
        Xs = set(X)
        if not any(A <= Xs for A in alliances):
            out.append(frozenset(X))
    return out


def cover_sets(g: Graph, spec: AllianceSpec) -> list[frozenset[int]]:
    alliances = alliance_table(g, spec)
    return [frozenset(Y) for Y in all_subsets(g.n) if all(A & set(Y) for A in alliances)]


def oracle_min_alliance(g: Graph, spec: AllianceSpec) -> tuple[int, frozenset[int]] | None:
    """Smallest alliance, lexicographically first among ties; ``None`` when none exists."""
    for S in all_subsets(g.n):
        if naive_is_alliance(g, frozenset(S), spec):
            return len(S), frozenset(S)
    return None


def oracle_max_free(g: Graph, spec: AllianceSpec) -> tuple[int, frozenset[int]]:
    best: tuple[int, ...] = ()
    for X in free_sets(g, spec):
        if len(X) > len(best) or (len(X) == len(best) and sorted(X) < list(best)):
            best = tuple(sorted(X))
    return len(best), frozenset(best)
