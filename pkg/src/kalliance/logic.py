"""Alliance, alliance-free and alliance-cover predicates.

Every public predicate takes a :class:`~kalliance.graph.VertexSet`; the
``*_mask`` variants work on raw bitmasks and are what the solvers and the
verifier call in their inner loops.

Conventions for degenerate sets:

* the empty set is never an alliance;
* the empty set is always free;
* the empty set is a cover exactly when the graph has no alliance of the
  family at all;
* ``V`` has an empty boundary, so it is an offensive (and global offensive)
  k-alliance for every k. Consequently every offensive cover is nonempty.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .graph import Graph, GraphError, VertexSet, _bind, boundary_mask, dominates, iter_members

__all__ = [
    "AllianceSpec",
    "Kind",
    "is_alliance",
    "is_alliance_mask",
    "is_boundary_offensive",
    "is_cover",
    "is_free",
    "is_free_mask",
    "is_maximal_free",
    "is_minimal_cover",
    "contains_alliance",
    "find_alliance",
    "largest_alliance",
]


class Kind(str, Enum):
    DEFENSIVE = "defensive"
    OFFENSIVE = "offensive"


@dataclass(frozen=True)
class AllianceSpec:
    """Which alliance family a query is about."""

    kind: Kind
    k: int
    global_: bool = False

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        if not isinstance(self.k, int) or isinstance(self.k, bool):
            raise TypeError(f"k must be an int, got {self.k!r}")

    @classmethod
    def defensive(cls, k: int, global_: bool = False) -> AllianceSpec:
        return cls(Kind.DEFENSIVE, k, global_)

    @classmethod
    def offensive(cls, k: int, global_: bool = False) -> AllianceSpec:
        return cls(Kind.OFFENSIVE, k, global_)

    def with_k(self, k: int) -> AllianceSpec:
        return AllianceSpec(self.kind, k, self.global_)

    def check(self, g: Graph) -> None:
        """Raise unless ``-Delta <= k <= Delta`` for ``g``."""
        if not -g.Delta <= self.k <= g.Delta:
            raise GraphError(f"k={self.k} outside {{-{g.Delta}..{g.Delta}}} for this graph")

    @property
    def label(self) -> str:
        if self.kind is Kind.DEFENSIVE:
            return "global defensive" if self.global_ else "defensive"
        return "global offensive" if self.global_ else "offensive"

    def __str__(self) -> str:
        return f"{self.label} {self.k}-alliance"


def _holds(g: Graph, v: int, mask: int, k: int) -> bool:
    inside = (g.adj[v] & mask).bit_count()
    return 2 * inside >= g.adj[v].bit_count() + k


def is_alliance_mask(g: Graph, mask: int, spec: AllianceSpec) -> bool:
    if not mask:
        return False
    k = spec.k
    if spec.kind is Kind.DEFENSIVE:
        checked = mask
    else:
        checked = boundary_mask(g, mask)
    for v in iter_members(checked):
        if not _holds(g, v, mask, k):
            return False
    return not spec.global_ or dominates(g, mask)


def is_alliance(g: Graph, S: VertexSet, spec: AllianceSpec) -> bool:
    """Whether ``S`` is an alliance of the family ``spec``.

    Raises :class:`GraphError` for the empty set, which is never an alliance.
    """
    mask = _bind(g, S)
    spec.check(g)
    if not mask:
        raise GraphError("alliances are nonempty; got the empty set")
    return is_alliance_mask(g, mask, spec)


def is_boundary_offensive(g: Graph, S: VertexSet, k: int) -> bool:
    """Dominating ``S`` where every outside vertex has exactly k more neighbours in than out."""
    mask = _bind(g, S)
    if not mask:
        raise GraphError("boundary offensive alliances are nonempty; got the empty set")
    if not dominates(g, mask):
        return False
    for v in iter_members(g.full & ~mask):
        inside = (g.adj[v] & mask).bit_count()
        if inside != g.adj[v].bit_count() - inside + k:
            return False
    return True


def find_alliance(
    g: Graph,
    spec: AllianceSpec,
    pool: int,
    required: int = 0,
    size: int | None = None,
) -> int | None:
    """Lexicographically first alliance ``S`` with ``required <= S <= pool``.

    With ``size`` given only sets of exactly that many vertices count.
    Returns the mask or ``None``. Branches on vertices in increasing order,
    trying inclusion first, and cuts a branch as soon as a vertex that must
    satisfy the alliance inequality cannot do so even if every undecided
    neighbour joins.
    """
    if required & ~pool:
        return None
    k = spec.k
    defensive = spec.kind is Kind.DEFENSIVE
    adj = g.adj
    deg = [nb.bit_count() for nb in adj]
    order = list(iter_members(pool & ~required))
    n_free = len(order)
    # undecided[i]: pool vertices from order[i:] still open
    undecided = [0] * (n_free + 1)
    for i in range(n_free - 1, -1, -1):
        undecided[i] = undecided[i + 1] | 1 << order[i]
    outside_pool = g.full & ~pool

    def feasible(inc: int, exc: int, i: int) -> bool:
        open_ = undecided[i]
        room = n_free if size is None else size - inc.bit_count()
        if room < 0:
            return False
        if defensive:
            watch = inc
        else:
            watch = exc & boundary_mask(g, inc)
        for v in iter_members(watch):
            best = (adj[v] & inc).bit_count() + min((adj[v] & open_).bit_count(), room)
            if 2 * best < deg[v] + k:
                return False
        if spec.global_:
            reach = inc | open_
            for v in iter_members(exc):
                if not adj[v] & reach:
                    return False
        return True

    def search(i: int, inc: int, exc: int) -> int | None:
        if size is not None:
            have = inc.bit_count()
            if have > size or have + (n_free - i) < size:
                return None
        if not feasible(inc, exc, i):
            return None
        if i == n_free:
            if is_alliance_mask(g, inc, spec):
                return inc
            return None
        bit = 1 << order[i]
        found = search(i + 1, inc | bit, exc)
        if found is not None:
            return found
        return search(i + 1, inc, exc | bit)

    return search(0, required, outside_pool)


def largest_alliance(g: Graph, spec: AllianceSpec, pool: int) -> int:
    """Union of all non-global alliances of ``spec.kind`` inside ``pool`` (0 if none).

    A union of defensive (offensive) k-alliances is again one, so this set
    is itself an alliance whenever it is nonempty. It is found by peeling:
    a member that fails the defensive inequality, or every neighbour of a
    boundary vertex that fails the offensive inequality, cannot belong to
    any alliance inside the current set.
    """
    adj, k, T = g.adj, spec.k, pool
    if spec.kind is Kind.DEFENSIVE:
        changed = True
        while changed:
            changed = False
            for v in iter_members(T):
                if 2 * (adj[v] & T).bit_count() < adj[v].bit_count() + k:
                    T &= ~(1 << v)
                    changed = True
        return T
    changed = True
    while changed and T:
        changed = False
        for u in iter_members(boundary_mask(g, T)):
            if 2 * (adj[u] & T).bit_count() < adj[u].bit_count() + k:
                T &= ~adj[u]
                changed = True
    return T


def contains_alliance(g: Graph, spec: AllianceSpec, pool: int) -> bool:
    """Whether some alliance of the family is a subset of ``pool``."""
    L = largest_alliance(g, spec, pool)
    # global alliances are the dominating ones, and supersets of dominating sets dominate
    return L != 0 and (not spec.global_ or dominates(g, L))


def is_free_mask(g: Graph, mask: int, spec: AllianceSpec) -> bool:
    return not contains_alliance(g, spec, mask)


def is_free(g: Graph, X: VertexSet, spec: AllianceSpec) -> bool:
    """Whether ``X`` contains no alliance of the family as a subset."""
    mask = _bind(g, X)
    spec.check(g)
    return is_free_mask(g, mask, spec)


def is_cover(g: Graph, Y: VertexSet, spec: AllianceSpec) -> bool:
    """Whether ``Y`` meets every alliance of the family.

    Decided through the complement: ``Y`` is a cover iff ``V - Y`` is free.
    """
    mask = _bind(g, Y)
    spec.check(g)
    return is_free_mask(g, g.full & ~mask, spec)


def is_minimal_cover(g: Graph, Y: VertexSet, spec: AllianceSpec) -> bool:
    mask = _bind(g, Y)
    spec.check(g)
    if not is_free_mask(g, g.full & ~mask, spec):
        raise GraphError(f"{Y} is not a cover for {spec}")
    return all(not is_free_mask(g, g.full & ~(mask & ~(1 << v)), spec) for v in iter_members(mask))


def is_maximal_free(g: Graph, X: VertexSet, spec: AllianceSpec) -> bool:
    mask = _bind(g, X)
    spec.check(g)
    if not is_free_mask(g, mask, spec):
        raise GraphError(f"{X} is not free for {spec}")
    return all(not is_free_mask(g, mask | 1 << v, spec) for v in iter_members(g.full & ~mask))
