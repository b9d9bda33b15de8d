"""Exact alliance numbers, free-set and cover-set numbers with witnesses.

Three searches cover all nine invariants:

``min_alliance``
    a_k, gamma_k, gamma_k^o (smallest alliance of a family)
``max_free``
    phi_k, phi_k^o, phi_k^go (largest alliance-free set)
``min_cover``
    zeta_k, zeta_k^o, zeta_k^go, obtained from ``max_free`` by complementing

Ties are broken towards the lexicographically smallest sorted vertex list,
so results are reproducible. Empty families are encoded so that
``max_free + min_cover == n`` always holds: ``min_alliance`` reports
``value=None`` (infeasible), ``max_free`` reports ``n`` with witness ``V`` and
``min_cover`` reports ``0`` with the empty witness.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

from .graph import Graph, VertexSet, iter_members
from .logic import AllianceSpec, Kind, contains_alliance, find_alliance
from . import oracle

__all__ = [
    "MAX_N",
    "InvariantResult",
    "Method",
    "SizeCapError",
    "compute",
    "invariant_name",
    "max_free",
    "min_alliance",
    "min_cover",
    "oracle_invariant",
    "parse_invariant",
]

MAX_N = 64


class SizeCapError(ValueError):
    """The graph is larger than an exact search accepts."""


class Method(str, Enum):
    SEARCH = "search"
    ORACLE = "oracle"
    CLOSED_FORM = "closed-form"


_SUFFIX = {
    (Kind.DEFENSIVE, False): "",
    (Kind.DEFENSIVE, True): "^gd",
    (Kind.OFFENSIVE, False): "^o",
    (Kind.OFFENSIVE, True): "^go",
}
_MIN_NAMES = {
    (Kind.DEFENSIVE, False): "a_k",
    (Kind.DEFENSIVE, True): "gamma_k",
    (Kind.OFFENSIVE, False): "a_k^o",
    (Kind.OFFENSIVE, True): "gamma_k^o",
}


def invariant_name(spec: AllianceSpec, which: str) -> str:
    """Name of the invariant ``which`` (alliance/free/cover) computes for ``spec``.

    >>> invariant_name(AllianceSpec.offensive(1, True), "free")
    'phi_k^go'
    """
    key = (spec.kind, spec.global_)
    if which == "alliance":
        return _MIN_NAMES[key]
    if which == "free":
        return "phi_k" + _SUFFIX[key]
    if which == "cover":
        return "zeta_k" + _SUFFIX[key]
    raise ValueError(f"unknown quantity {which!r}")


_NAME_RE = re.compile(r"^(a|gamma|phi|zeta)_k(\^(o|go|gd))?$")


def parse_invariant(name: str, k: int) -> tuple[str, AllianceSpec]:
    """Inverse of :func:`invariant_name`: ``'zeta_k^go'`` -> ``('cover', spec)``."""
    m = _NAME_RE.match(name)
    if not m:
        raise ValueError(f"unknown invariant {name!r}")
    base, sup = m.group(1), m.group(3) or ""
    if base == "gamma":
        if sup not in ("", "o"):
            raise ValueError(f"unknown invariant {name!r}")
        kind = Kind.OFFENSIVE if sup == "o" else Kind.DEFENSIVE
        return "alliance", AllianceSpec(kind, k, True)
    if base == "a":
        if sup not in ("", "o"):
            raise ValueError(f"unknown invariant {name!r}")
        return "alliance", AllianceSpec(Kind.OFFENSIVE if sup else Kind.DEFENSIVE, k, False)
    kind = Kind.DEFENSIVE if sup in ("", "gd") else Kind.OFFENSIVE
    which = "free" if base == "phi" else "cover"
    return which, AllianceSpec(kind, k, sup in ("go", "gd"))


@dataclass(frozen=True)
class InvariantResult:
    invariant: str
    spec: AllianceSpec
    value: int | None
    witness: VertexSet | None
    method: Method

    @property
    def feasible(self) -> bool:
        return self.value is not None

    def as_dict(self) -> dict:
        return {
            "invariant": self.invariant,
            "k": self.spec.k,
            "kind": self.spec.kind.value,
            "global": self.spec.global_,
            "value": self.value,
            "witness": None if self.witness is None else self.witness.sorted(),
            "method": self.method.value,
        }


def _check_size(g: Graph, cap: int = MAX_N) -> None:
    if g.n > cap:
        raise SizeCapError(f"exact search is capped at n <= {cap}; got n={g.n}")


def min_alliance(g: Graph, spec: AllianceSpec) -> InvariantResult:
    """Smallest alliance of the family (a_k, gamma_k, gamma_k^o)."""
    _check_size(g)
    spec.check(g)
    name = invariant_name(spec, "alliance")
    for size in range(1, g.n + 1):
        found = find_alliance(g, spec, g.full, size=size)
        if found is not None:
            return InvariantResult(name, spec, size, VertexSet(g.n, found), Method.SEARCH)
    return InvariantResult(name, spec, None, None, Method.SEARCH)


def _max_free_mask(g: Graph, spec: AllianceSpec) -> int:
    best = [-1, 0]

    def addable(X: int, v: int) -> bool:
        return not contains_alliance(g, spec, X | 1 << v)

    def grow(X: int, size: int, cand: int) -> None:
        # cand: vertices above the branching point that keep X free
        if size + cand.bit_count() <= best[0]:
            return
        if not cand:
            best[:] = [size, X]
            return
        low = cand & -cand
        v = low.bit_length() - 1
        rest = cand ^ low
        X2 = X | low
        cand2 = 0
        for u in iter_members(rest):
            if addable(X2, u):
                cand2 |= 1 << u
        grow(X2, size + 1, cand2)
        grow(X, size, rest)

    start = 0
    for v in range(g.n):
        if addable(0, v):
            start |= 1 << v
    grow(0, 0, start)
    return best[1]


def max_free(g: Graph, spec: AllianceSpec) -> InvariantResult:
    """Largest alliance-free set (phi_k, phi_k^o, phi_k^go).

    Branch and bound over vertices in increasing order, inclusion first.
    Freeness is inherited by subsets, so a vertex whose addition creates an
    alliance is dropped from the candidates of the whole subtree, and the
    bound is the current size plus the surviving candidates.
    """
    _check_size(g)
    spec.check(g)
    X = _max_free_mask(g, spec)
    return InvariantResult(
        invariant_name(spec, "free"), spec, X.bit_count(), VertexSet(g.n, X), Method.SEARCH
    )


def min_cover(g: Graph, spec: AllianceSpec) -> InvariantResult:
    """Smallest alliance cover (zeta_k, zeta_k^o, zeta_k^go), the complement of a maximum free set."""
    free = max_free(g, spec)
    Y = free.witness.complement()
    return InvariantResult(invariant_name(spec, "cover"), spec, len(Y), Y, Method.SEARCH)


def oracle_invariant(g: Graph, spec: AllianceSpec, which: str) -> InvariantResult:
    """Same contract as the searches, by full 2^n enumeration (n <= 12)."""
    spec.check(g)
    if which == "alliance":
        r = oracle.oracle_min_alliance(g, spec)
        name = invariant_name(spec, "alliance")
        if r is None:
            return InvariantResult(name, spec, None, None, Method.ORACLE)
        return InvariantResult(name, spec, r[0], VertexSet.of(g.n, r[1]), Method.ORACLE)
    if which in ("free", "cover"):
        size, X = oracle.oracle_max_free(g, spec)
        Xs = VertexSet.of(g.n, X)
        if which == "free":
            return InvariantResult(invariant_name(spec, "free"), spec, size, Xs, Method.ORACLE)
        # the lexicographically first maximum free set complements to a minimum cover
        return InvariantResult(
            invariant_name(spec, "cover"), spec, g.n - size, Xs.complement(), Method.ORACLE
        )
    raise ValueError(f"unknown quantity {which!r}; expected alliance, free or cover")


def compute(g: Graph, name: str, k: int) -> InvariantResult:
    """Evaluate an invariant by name, e.g. ``compute(g, "phi_k^go", 2)``."""
    which, spec = parse_invariant(name, k)
    if which == "alliance":
        return min_alliance(g, spec)
    if which == "free":
        return max_free(g, spec)
    return min_cover(g, spec)

