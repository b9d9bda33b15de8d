"""Simple undirected graphs, vertex sets and the generators used by the corpus.

Vertices are the integers ``0..n-1``. Vertex sets are stored as integer
bitmasks so that union, complement and subset tests are single word
operations; :class:`VertexSet` wraps a mask together with the order of the
graph it belongs to.
"""

from __future__ import annotations

import random
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from pathlib import Path

__all__ = [
    "Graph",
    "GraphError",
    "VertexSet",
    "boundary",
    "degree_in",
    "generate",
    "is_dominating",
    "iter_members",
    "mask_of",
    "parse_gen",
    "read_graph",
    "FAMILIES",
]


class GraphError(ValueError):
    """Invalid graph input: bad vertex, bad parameters or a malformed file."""


def iter_members(mask: int) -> Iterator[int]:
    """Yield the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``adj[v]`` is the neighbourhood of ``v`` as a bitmask.
    """

    n: int
    adj: tuple[int, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise GraphError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if nb >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in iter_members(nb):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], name: str = "") -> Graph:
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), name)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(nb.bit_count() for nb in self.adj)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    @property
    def delta(self) -> int:
        """Minimum degree (0 for the empty graph)."""
        return min(self.degrees, default=0)

    @property
    def Delta(self) -> int:
        """Maximum degree."""
        return max(self.degrees, default=0)

    @property
    def m(self) -> int:
        return sum(self.degrees) // 2

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_members(self.adj[u]) if u < v]

    def neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        return list(iter_members(self.adj[v]))

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = frontier = 1
        while frontier:
            nxt = 0
            for v in iter_members(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == self.full

    def vertex_set(self, vertices: Iterable[int] = ()) -> VertexSet:
        vs = list(vertices)
        for v in vs:
            self._check_vertex(v)
        return VertexSet(self.n, mask_of(vs))

    def all_vertices(self) -> VertexSet:
        return VertexSet(self.n, self.full)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range 0..{self.n - 1}")

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<Graph{label} n={self.n} m={self.m}>"


@dataclass(frozen=True, order=True)
class VertexSet:
    """A set of vertices of a graph with ``n`` vertices.

    Binary operations between sets of different orders raise
    :class:`GraphError`.
    """

    n: int
    mask: int = 0

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.n:
            raise GraphError(f"mask {self.mask:#x} has bits outside 0..{self.n - 1}")

    @classmethod
    def of(cls, n: int, vertices: Iterable[int]) -> VertexSet:
        vs = list(vertices)
        if any(not 0 <= v < n for v in vs):
            raise GraphError(f"vertex out of range 0..{n - 1}: {vs}")
        return cls(n, mask_of(vs))

    def _same(self, other: VertexSet) -> None:
        if not isinstance(other, VertexSet):
            raise TypeError(f"expected VertexSet, got {type(other).__name__}")
        if other.n != self.n:
            raise GraphError(f"vertex sets bound to different orders ({self.n} vs {other.n})")

    def complement(self) -> VertexSet:
        return VertexSet(self.n, ((1 << self.n) - 1) & ~self.mask)

    def __or__(self, other: VertexSet) -> VertexSet:
        self._same(other)
        return VertexSet(self.n, self.mask | other.mask)

    def __and__(self, other: VertexSet) -> VertexSet:
        self._same(other)
        return VertexSet(self.n, self.mask & other.mask)

    def __sub__(self, other: VertexSet) -> VertexSet:
        self._same(other)
        return VertexSet(self.n, self.mask & ~other.mask)

    def issubset(self, other: VertexSet) -> bool:
        self._same(other)
        return self.mask & ~other.mask == 0

    def add(self, v: int) -> VertexSet:
        return VertexSet.of(self.n, [*self, v])

    def remove(self, v: int) -> VertexSet:
        if v not in self:
            raise KeyError(v)
        return VertexSet(self.n, self.mask & ~(1 << v))

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.n and bool(self.mask >> v & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_members(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def sorted(self) -> list[int]:
        return list(iter_members(self.mask))

    def __repr__(self) -> str:
        return f"VertexSet({self.sorted()}, n={self.n})"


def _bind(g: Graph, S: VertexSet) -> int:
    if not isinstance(S, VertexSet):
        raise TypeError(f"expected VertexSet, got {type(S).__name__}")
    if S.n != g.n:
        raise GraphError(f"vertex set of order {S.n} used with a graph of order {g.n}")
    return S.mask


def degree_in(g: Graph, v: int, S: VertexSet) -> int:
    """Number of neighbours of ``v`` inside ``S`` (``v`` itself never counts)."""
    g._check_vertex(v)
    return (g.adj[v] & _bind(g, S)).bit_count()


def boundary_mask(g: Graph, mask: int) -> int:
    out = 0
    for v in iter_members(mask):
        out |= g.adj[v]
    return out & ~mask


def boundary(g: Graph, S: VertexSet) -> VertexSet:
    """Vertices outside ``S`` with at least one neighbour in ``S``."""
    return VertexSet(g.n, boundary_mask(g, _bind(g, S)))


def dominates(g: Graph, mask: int) -> bool:
    return boundary_mask(g, mask) | mask == g.full


def is_dominating(g: Graph, S: VertexSet) -> bool:
    return dominates(g, _bind(g, S))


# -- generators -------------------------------------------------------------


def complete(n: int) -> Graph:
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)), f"complete:{n}")


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)), f"cycle:{n}")


def path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)), f"path:{n}")


def star(n: int) -> Graph:
    """Star with centre 0 and ``n - 1`` leaves."""
    return Graph.from_edges(n, ((0, i) for i in range(1, n)), f"star:{n}")


def grid(rows: int, cols: int) -> Graph:
    def at(r, c):
        return r * cols + c

    edges = [(at(r, c), at(r, c + 1)) for r in range(rows) for c in range(cols - 1)]
    edges += [(at(r, c), at(r + 1, c)) for r in range(rows - 1) for c in range(cols)]
    return Graph.from_edges(rows * cols, edges, f"grid:{rows}x{cols}")


def gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p); the same ``(n, p, seed)`` always gives the same graph."""
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"edge probability {p} not in [0, 1]")
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges, f"gnp:{n},{p},{seed}")


def c8_chords() -> Graph:
    """The 8-cycle v1..v8 with the chords {v1,v3} and {v5,v7}.

    Vertex ``i`` here is ``v_{i+1}``, so the chords are {0,2} and {4,6}.
    """
    edges = [(i, (i + 1) % 8) for i in range(8)] + [(0, 2), (4, 6)]
    return Graph.from_edges(8, edges, "c8-chords")


def disjoint_union(*graphs: Graph) -> Graph:
    edges, offset = [], 0
    for h in graphs:
        edges += [(u + offset, v + offset) for u, v in h.edges]
        offset += h.n
    return Graph.from_edges(offset, edges, "+".join(h.name for h in graphs))


FAMILIES = ("complete", "cycle", "path", "star", "grid", "gnp", "c8-chords")


def generate(name: str, *params) -> Graph:
    """Build a graph of a named family.

    >>> generate("complete", 5).m
    10
    >>> generate("gnp", 8, 0.5, 3) == generate("gnp", 8, 0.5, 3)
    True
    """
    try:
        if name == "c8-chords":
            if params:
                raise GraphError("c8-chords takes no parameters")
            return c8_chords()
        if name == "gnp":
            n, p, seed = params
            n, p, seed = int(n), float(p), int(seed)
            _check_order(n)
            return gnp(n, p, seed)
        if name == "grid":
            rows, cols = (int(x) for x in params)
            _check_order(rows)
            _check_order(cols)
            return grid(rows, cols)
        builders = {"complete": complete, "cycle": cycle, "path": path, "star": star}
        if name not in builders:
            raise GraphError(f"unknown graph family {name!r}; known: {', '.join(FAMILIES)}")
        (n,) = params
        n = int(n)
        _check_order(n)
        return builders[name](n)
    except (TypeError, ValueError) as exc:
        if isinstance(exc, GraphError):
            raise
        raise GraphError(f"bad parameters for {name}: {params!r}") from exc


def _check_order(n: int) -> None:
    if n < 1:
        raise GraphError(f"order must be >= 1, got {n}")


def parse_gen(text: str) -> Graph:
    """Parse an inline generator like ``complete:5``, ``grid:2x3`` or ``gnp:8,0.5,1``.

    ``family:params-disjoint`` gives two disjoint copies, so ``path:2-disjoint``
    is a perfect matching on four vertices.
    """
    family, _, arg = text.strip().partition(":")
    copies = 1
    if arg.endswith("-disjoint"):
        arg, copies = arg[: -len("-disjoint")], 2
    if not arg:
        params = []
    elif family == "grid":
        params = arg.lower().replace("x", ",").split(",")
    else:
        params = arg.split(",")
    g = generate(family, *params)
    if copies == 2:
        g = disjoint_union(g, g)
        return Graph(g.n, g.adj, text.strip())
    return g


# -- file ingest -------------------------------------------------------------


def read_graph(path: str | Path) -> Graph:
    """Read an edge-list file, or a DIMACS ``.col`` file (1-indexed).

    Edge lists hold one ``u v`` pair per line, ``#`` comments, and an
    optional leading ``n <count>`` header; without the header the order is
    the largest label plus one.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise GraphError(f"cannot read {path}: {exc}") from exc
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if path.suffix == ".col" or any(ln.startswith("p ") for ln in lines):
        g = _parse_dimacs(lines, path)
    else:
        g = _parse_edge_list(lines, path)
    return Graph(g.n, g.adj, path.stem)


def _parse_edge_list(lines: list[str], path: Path) -> Graph:
    n = None
    edges = []
    for i, ln in enumerate(lines):
        parts = ln.split()
        try:
            if i == 0 and parts[0] == "n" and len(parts) == 2:
                n = int(parts[1])
                continue
            if len(parts) != 2:
                raise ValueError
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"{path}: malformed edge line {ln!r}") from None
        if u < 0 or v < 0:
            raise GraphError(f"{path}: negative vertex label in {ln!r}")
        edges.append((u, v))
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    return Graph.from_edges(n, _dedupe(edges), path.stem)


def _parse_dimacs(lines: list[str], path: Path) -> Graph:
    n = None
    edges = []
    for ln in lines:
        parts = ln.split()
        if parts[0] == "c":
            continue
        try:
            if parts[0] == "p":
                n = int(parts[2])
            elif parts[0] == "e":
                edges.append((int(parts[1]) - 1, int(parts[2]) - 1))
            else:
                raise ValueError
        except (ValueError, IndexError):
            raise GraphError(f"{path}: malformed DIMACS line {ln!r}") from None
    if n is None:
        raise GraphError(f"{path}: missing DIMACS 'p edge' line")
    return Graph.from_edges(n, _dedupe(edges), path.stem)


def _dedupe(edges):
    seen = set()
    for u, v in edges:
        key = (min(u, v), max(u, v))
        if key not in seen:
            seen.add(key)
            yield key
