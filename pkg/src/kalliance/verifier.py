"""Exhaustive checks of the structural theorems on small graphs.

Every theorem check enumerates all ``2^n`` vertex subsets of a graph with
at most :data:`MAX_N` vertices, selects the instances that satisfy the
theorem's premises and tests its conclusion on each. A report counts the
instances checked, the instances set aside by a nondegeneracy premise
(``excluded``), and lists counterexamples.

Some statements need a premise that the published wording leaves implicit;
each one is spelled out next to the check that uses it:

* no vertex under consideration may form a defensive alliance on its own
  (``T-dom``, ``T-goa``, table rows 1, 2 and 4, ``T-ext-daf``);
* the minimal cover must be a proper subset of ``V`` (``T-goac``, row 5);
* ``n >= 2`` for ``T-oac2``.

The ``C-*`` checks test the corollaries at the level of invariant values
and use the branch and bound solver.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable

import numpy as np

from .bounds import BOUNDS, Status, evaluate_bound, graph_inputs
from .graph import Graph, GraphError, c8_chords, dominates, iter_members, parse_gen
from .logic import AllianceSpec, Kind, is_alliance_mask, is_free_mask
from .oracle import naive_is_alliance
from .solver import compute

__all__ = [
    "MAX_N",
    "THEOREMS",
    "CorpusReport",
    "TheoremReport",
    "corpus_run",
    "default_corpus",
    "verify",
]

MAX_N = 10
MAX_LISTED = 3


def _members(mask: int) -> list[int]:
    return list(iter_members(mask))


class Tables:
    """Per-graph lookup tables over all ``2^n`` subsets, cached per family."""

    def __init__(self, g: Graph):
        if g.n > MAX_N:
            raise GraphError(f"theorem checks enumerate 2^n subsets; n={g.n} exceeds {MAX_N}")
        self.g = g
        self.n = g.n
        self.full = g.full
        self.size = 1 << g.n
        self.deg = g.degrees
        self._flags: dict[AllianceSpec, bytearray] = {}
        self._free: dict[AllianceSpec, bytearray] = {}
        self._values: dict[tuple[str, int], int | None] = {}

    def flags(self, spec: AllianceSpec) -> bytearray:
        if spec not in self._flags:
            g = self.g
            self._flags[spec] = bytearray(is_alliance_mask(g, m, spec) for m in range(self.size))
        return self._flags[spec]

    def alliances(self, spec: AllianceSpec) -> np.ndarray:
        f = self.flags(spec)
        return np.array([m for m in range(self.size) if f[m]], dtype=np.int64)

    def free(self, spec: AllianceSpec) -> bytearray:
        """``free[m]`` is 1 iff ``m`` contains no alliance, by subset dynamic programming."""
        if spec not in self._free:
            a = self.flags(spec)
            contains = bytearray(self.size)
            for m in range(1, self.size):
                if a[m]:
                    contains[m] = 1
                    continue
                rest = m
                while rest:
                    low = rest & -rest
                    if contains[m ^ low]:
                        contains[m] = 1
                        break
                    rest ^= low
            self._free[spec] = bytearray(1 - c for c in contains)
        return self._free[spec]

    def is_cover(self, spec: AllianceSpec, Y: int) -> bool:
        return bool(self.free(spec)[self.full ^ Y])

    def minimal_covers(self, spec: AllianceSpec) -> list[int]:
        free, full = self.free(spec), self.full
        out = []
        for Y in range(self.size):
            if free[full ^ Y] and all(not free[full ^ (Y ^ 1 << v)] for v in iter_members(Y)):
                out.append(Y)
        return out

    def maximal_frees(self, spec: AllianceSpec) -> list[int]:
        free, full = self.free(spec), self.full
        out = []
        for X in range(self.size):
            if free[X] and all(not free[X | 1 << v] for v in iter_members(full & ~X)):
                out.append(X)
        return out

    def value(self, name: str, k: int) -> int | None:
        key = (name, k)
        if key not in self._values:
            self._values[key] = compute(self.g, name, k).value
        return self._values[key]

    @cached_property
    def bound_inputs(self):
        return graph_inputs(self.g, 0)

    @cached_property
    def is_c8_chords(self) -> bool:
        return self.g.adj == c8_chords().adj


@dataclass
class TheoremReport:
    theorem: str
    graph: str
    k: int
    status: str = "verified"
    instances: int = 0
    excluded: int = 0
    counterexample_count: int = 0
    counterexamples: list = field(default_factory=list)
    witnesses: list = field(default_factory=list)
    note: str = ""

    def check(self, ok: bool, detail) -> None:
        self.instances += 1
        if not ok:
            self.counterexample_count += 1
            if len(self.counterexamples) < MAX_LISTED:
                self.counterexamples.append(detail)

    def witness(self, detail) -> None:
        if len(self.witnesses) < MAX_LISTED:
            self.witnesses.append(detail)

    def finish(self) -> TheoremReport:
        if self.status in ("out-of-range", "not-applicable", "premise-unmet"):
            return self
        if self.counterexample_count:
            self.status = "failed"
        elif not self.instances:
            self.status = "vacuous"
        return self

    def as_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "graph": self.graph,
            "k": self.k,
            "status": self.status,
            "instances": self.instances,
            "excluded": self.excluded,
            "counterexample_count": self.counterexample_count,
            "counterexamples": self.counterexamples,
            "witnesses": self.witnesses,
            "note": self.note,
        }


def _D(k, gl=False):
    return AllianceSpec(Kind.DEFENSIVE, k, gl)


def _O(k, gl=False):
    return AllianceSpec(Kind.OFFENSIVE, k, gl)


def _out_of_range(r: TheoremReport, text: str) -> None:
    r.status = "out-of-range"
    r.note = text


# -- structural theorems -----------------------------------------------------


def _t_dual(t: Tables, k: int, r: TheoremReport) -> None:
    """Cover vs complement-free on every subset, three ways.

    ``logic`` decides freeness of the complement by peeling; the raw route
    checks that every alliance (from the set-based oracle predicate) meets
    ``Y``; the table route looks the complement up in the subset DP.
    """
    g, full = t.g, t.full
    Ys = np.arange(t.size, dtype=np.int64)
    for spec in (_D(k), _O(k), _O(k, True)):
        raw = [m for m in range(t.size) if naive_is_alliance(g, frozenset(_members(m)), spec)]
        A = np.array(raw, dtype=np.int64)
        if len(A):
            meets_all = ((Ys[:, None] & A[None, :]) != 0).all(axis=1)
        else:
            meets_all = np.ones(t.size, dtype=bool)
        free = t.free(spec)
        for Y in range(t.size):
            by_logic = is_free_mask(g, full ^ Y, spec)
            r.check(
                by_logic == bool(meets_all[Y]) == bool(free[full ^ Y]),
                {"family": spec.label, "Y": _members(Y)},
            )


def _t_rem1(t: Tables, k: int, r: TheoremReport) -> None:
    for spec in (_D(k), _O(k)):
        A = t.alliances(spec)
        for X in t.minimal_covers(spec):
            for v in iter_members(X):
                hit = A[(A & X) == (1 << v)]
                r.check(len(hit) > 0, {"part": "i", "family": spec.label, "X": _members(X), "v": v})
                if len(hit):
                    r.witness({"part": "i", "X": _members(X), "v": v, "S_v": _members(int(hit[0]))})
        for X in t.maximal_frees(spec):
            for v in iter_members(t.full & ~X):
                bit = 1 << v
                hit = A[((A & ~(X | bit)) == 0) & ((A & bit) != 0)]
                r.check(len(hit) > 0, {"part": "ii", "family": spec.label, "X": _members(X), "v": v})
                if len(hit):
                    r.witness({"part": "ii", "X": _members(X), "v": v, "S_v": _members(int(hit[0]) & ~bit)})


def _no_singleton_alliance(t: Tables, k: int, mask: int) -> bool:
    # {v} is a defensive k-alliance iff deg(v) <= -k
    return all(t.deg[v] > -k for v in iter_members(mask))


def _t_dom(t: Tables, k: int, r: TheoremReport) -> None:
    for X in t.minimal_covers(_D(k)):
        if not _no_singleton_alliance(t, k, X):
            r.excluded += 1
            continue
        r.check(dominates(t.g, t.full ^ X), {"X": _members(X)})


def _t_goa(t: Tables, k: int, r: TheoremReport) -> None:
    for X in t.minimal_covers(_D(k)):
        if not _no_singleton_alliance(t, k, X):
            r.excluded += 1
            continue
        r.check(is_alliance_mask(t.g, t.full ^ X, _O(k, True)), {"X": _members(X)})


def _t_oac_counter(t: Tables, k: int, r: TheoremReport) -> None:
    if not t.is_c8_chords or k != 0:
        r.status = "not-applicable"
        r.note = "fixed check on c8-chords with k = 0"
        return
    S = 0b01110110  # v2, v3, v5, v6, v7
    spec = _O(0)
    is_cover = t.is_cover(spec, S)
    minimal = is_cover and all(not t.is_cover(spec, S ^ 1 << v) for v in iter_members(S))
    comp_dominating = dominates(t.g, t.full ^ S)
    r.check(
        is_cover and minimal and not comp_dominating,
        {"S": _members(S), "cover": is_cover, "minimal": minimal, "complement_dominating": comp_dominating},
    )
    r.witness({"S": _members(S), "complement": _members(t.full ^ S)})


def _t_goac(t: Tables, k: int, r: TheoremReport) -> None:
    D = t.g.Delta
    if not 2 - D <= k <= D:
        return _out_of_range(r, "k in {2-Delta..Delta}")
    for X in t.minimal_covers(_O(k, True)):
        if X.bit_count() < 2:
            continue
        if X == t.full:
            r.excluded += 1
            continue
        comp = t.full ^ X
        r.check(is_alliance_mask(t.g, comp, _O(k - 2)), {"X": _members(X), "part": "offensive"})
        if k >= 3:
            r.check(is_alliance_mask(t.g, comp, _O(k - 2, True)), {"X": _members(X), "part": "global"})


def _t_13(t: Tables, k: int, r: TheoremReport) -> None:
    D = t.g.Delta
    if not 1 - D <= k <= D - 1:
        return _out_of_range(r, "k in {1-Delta..Delta-1}")
    free_d, free_go = t.free(_D(1 - k)), t.free(_O(1 - k, True))
    go, d = t.flags(_O(k, True)), t.flags(_D(k))
    for X in range(1, t.size):
        if go[X]:
            r.check(bool(free_d[t.full ^ X]), {"part": "i", "X": _members(X)})
        if d[X]:
            r.check(bool(free_go[t.full ^ X]), {"part": "ii", "X": _members(X)})


def _t_table(t: Tables, k: int, r: TheoremReport) -> None:
    g, full, D = t.g, t.full, t.g.Delta
    for X in t.maximal_frees(_D(k)):
        if not _no_singleton_alliance(t, k, full ^ X):
            r.excluded += 1
            continue
        r.check(dominates(g, X), {"row": 1, "X": _members(X)})
        r.check(is_alliance_mask(g, X, _O(k, True)), {"row": 2, "X": _members(X)})
    if 1 - D <= k <= D - 1:
        go = t.flags(_O(k, True))
        for X in range(1, t.size):
            if go[X]:
                r.check(t.is_cover(_D(1 - k), X), {"row": 3, "X": _members(X)})
        free = t.free(_D(1 - k))
        for X in t.minimal_covers(_D(k)):
            if not _no_singleton_alliance(t, k, X):
                r.excluded += 1
                continue
            r.check(bool(free[X]), {"row": 4, "X": _members(X)})
    if 3 <= k <= D:
        free = t.free(_D(3 - k))
        for X in t.minimal_covers(_O(k, True)):
            if X.bit_count() < 2:
                continue
            if X == full:
                r.excluded += 1
                continue
            r.check(bool(free[X]), {"row": 5, "X": _members(X)})


def _t_ext_goaf(t: Tables, k: int, r: TheoremReport) -> None:
    D = t.g.Delta
    if not 1 <= k <= D - 2:
        return _out_of_range(r, "k in {1..Delta-2}")
    free, nxt = t.free(_O(k, True)), t.free(_O(k + 2, True))
    for X in range(t.size):
        if not free[X] or X.bit_count() > t.n - 2:
            continue
        found = next((v for v in iter_members(t.full & ~X) if nxt[X | 1 << v]), None)
        r.check(found is not None, {"X": _members(X)})
        if found is not None:
            r.witness({"X": _members(X), "v": found})


def _t_ext_daf(t: Tables, k: int, r: TheoremReport) -> None:
    D = t.g.Delta
    if not -D <= k <= D - 2:
        return _out_of_range(r, "k in {-Delta..Delta-2}")
    free, nxt = t.free(_D(k)), t.free(_D(k + 2))
    for X in range(t.size):
        if not free[X]:
            continue
        for v in iter_members(t.full & ~X):
            # {v} alone would be a defensive (k+2)-alliance
            if t.deg[v] <= -k - 2:
                r.excluded += 1
                continue
            r.check(bool(nxt[X | 1 << v]), {"X": _members(X), "v": v})


def _t_oac2(t: Tables, k: int, r: TheoremReport) -> None:
    if not k <= t.g.delta or t.n < 2:
        return _out_of_range(r, "k <= delta and n >= 2")
    for X in t.minimal_covers(_O(k)):
        r.check(X.bit_count() >= 2, {"X": _members(X)})


def _boundary_offensive_0(g: Graph, S: int) -> bool:
    if not S or not dominates(g, S):
        return False
    for v in iter_members(g.full & ~S):
        inside = (g.adj[v] & S).bit_count()
        if 2 * inside != g.adj[v].bit_count():
            return False
    return True


def _t_front(t: Tables, k: int, r: TheoremReport) -> None:
    if k != 0:
        r.status = "not-applicable"
        r.note = "stated for k = 0 only"
        return
    g, full = t.g, t.full
    go = t.flags(_O(0, True))

    def minimal_goa(S):
        if not go[S]:
            return False
        sub = (S - 1) & S
        while sub:
            if go[sub]:
                return False
            sub = (sub - 1) & S
        return True

    # unordered partitions: the part holding vertex 0 comes first
    for X in range(1, t.size, 2):
        Y = full ^ X
        if Y and _boundary_offensive_0(g, X) and _boundary_offensive_0(g, Y):
            r.check(minimal_goa(X) and minimal_goa(Y), {"X": _members(X), "Y": _members(Y)})
            r.witness({"X": _members(X), "Y": _members(Y)})


# -- corollaries on invariant values -----------------------------------------


def _c_dual(t: Tables, k: int, r: TheoremReport) -> None:
    """Solver phi plus enumerated minimum cover size equals n."""
    for name, spec in (("phi_k", _D(k)), ("phi_k^o", _O(k)), ("phi_k^go", _O(k, True))):
        free = t.free(spec)
        zeta = min(Y.bit_count() for Y in range(t.size) if free[t.full ^ Y])
        phi = t.value(name, k)
        r.check(phi + zeta == t.n, {"invariant": name, "phi": phi, "zeta": zeta})


def _c_coro2(t: Tables, k: int, r: TheoremReport) -> None:
    # below 1 - delta some vertex is a defensive alliance on its own; at
    # k = -Delta phi_k = 0 while gamma_k^o >= 1
    if k < 1 - t.g.delta:
        return _out_of_range(r, "k >= 1 - delta (no singleton defensive k-alliance)")
    go, n = t.value("gamma_k^o", k), t.n
    r.check(t.value("phi_k", k) >= go, {"claim": "phi_k >= gamma_k^o"})
    r.check(t.value("zeta_k", k) <= n - go, {"claim": "zeta_k <= n - gamma_k^o"})


def _c_th2(t: Tables, k: int, r: TheoremReport) -> None:
    if not 3 <= k <= t.g.delta:
        return _out_of_range(r, "k in {3..delta}")
    go, n = t.value("gamma_k^o", k - 2), t.n
    r.check(t.value("phi_k^go", k) >= go, {"claim": "phi_k^go >= gamma_(k-2)^o"})
    r.check(t.value("zeta_k^go", k) <= n - go, {"claim": "zeta_k^go <= n - gamma_(k-2)^o"})


def _c_th3(t: Tables, k: int, r: TheoremReport) -> None:
    D = t.g.Delta
    if not 1 - D <= k <= D - 1:
        return _out_of_range(r, "k in {1-Delta..Delta-1}")
    go, n = t.value("gamma_k^o", k), t.n
    r.check(t.value("zeta_k", 1 - k) <= go, {"claim": "zeta_(1-k) <= gamma_k^o"})
    r.check(t.value("phi_k", 1 - k) >= n - go, {"claim": "phi_(1-k) >= n - gamma_k^o"})
    a = t.value("a_k", k)
    if a is None:
        r.excluded += 1
    else:
        r.check(t.value("zeta_k^go", 1 - k) <= a, {"claim": "zeta_(1-k)^go <= a_k"})


def _c_mono(t: Tables, k: int, r: TheoremReport) -> None:
    if k > t.g.Delta - 1:
        return _out_of_range(r, "k <= Delta - 1")
    for name in ("phi_k", "phi_k^go"):
        r.check(t.value(name, k) <= t.value(name, k + 1), {"invariant": name})


def _c_step_daf(t: Tables, k: int, r: TheoremReport) -> None:
    D, n = t.g.Delta, t.n
    if not -D <= k <= D - 2:
        return _out_of_range(r, "k in {-Delta..Delta-2}")
    phi = t.value("phi_k", k)
    for step in range(1, (D - k) // 2 + 1):
        # the extension step needs a vertex outside the free set that is not
        # itself a defensive (k+2)-alliance
        if k + 2 < 1 - t.g.delta or phi + step > n:
            r.excluded += 1
            continue
        r.check(phi + step <= t.value("phi_k", k + 2 * step), {"r": step})


def _c_step_goaf(t: Tables, k: int, r: TheoremReport) -> None:
    D, n = t.g.Delta, t.n
    if not 1 <= k <= min(t.g.delta, D - 2):
        return _out_of_range(r, "k in {1..min(delta, Delta-2)}")
    phi = t.value("phi_k^go", k)
    for step in range(1, (D - k) // 2 + 1):
        # each extension needs a free set of size <= n-2 (star:6, k=1, r=2 breaks without it)
        if phi + step > n - 1:
            r.excluded += 1
            continue
        r.check(phi + step <= t.value("phi_k^go", k + 2 * step), {"r": step})


THEOREMS: dict[str, Callable[[Tables, int, TheoremReport], None]] = {
    "T-dual": _t_dual,
    "T-rem1": _t_rem1,
    "T-dom": _t_dom,
    "T-goa": _t_goa,
    "T-oac-counter": _t_oac_counter,
    "T-goac": _t_goac,
    "T-13": _t_13,
    "T-table": _t_table,
    "T-ext-goaf": _t_ext_goaf,
    "T-ext-daf": _t_ext_daf,
    "T-oac2": _t_oac2,
    "T-front": _t_front,
    "C-dual": _c_dual,
    "C-coro2": _c_coro2,
    "C-th2": _c_th2,
    "C-th3": _c_th3,
    "C-mono": _c_mono,
    "C-step-daf": _c_step_daf,
    "C-step-goaf": _c_step_goaf,
}

# checked at k = 0 only
_FIXED_K = {"T-oac-counter", "T-front"}


def _bound_check(bound_id: str):
    def run(t: Tables, k: int, r: TheoremReport) -> None:
        e = evaluate_bound(t.g, k, bound_id, t.bound_inputs)
        if not e.premises_met:
            r.status = "premise-unmet"
            r.note = e.reason
            return
        r.check(e.status is not Status.VIOLATED, {"bound": e.bound_value, "exact": e.exact_value})
        r.witness({"bound": e.bound_value, "exact": e.exact_value, "status": e.status.value})

    run.__name__ = f"_bound_{bound_id}"
    return run


# bounds ride along so a corpus run can mix them with the theorem checks
for _bid in BOUNDS:
    THEOREMS[_bid] = _bound_check(_bid)


def _check_theorem(theorem_id: str) -> None:
    if theorem_id not in THEOREMS:
        raise ValueError(f"unknown theorem id {theorem_id!r}; known: {', '.join(THEOREMS)}")


def verify(g: Graph, theorem_id: str, k: int, tables: Tables | None = None) -> TheoremReport:
    """Check one theorem on one graph at one ``k``."""
    _check_theorem(theorem_id)
    if not -g.Delta <= k <= g.Delta:
        raise GraphError(f"k={k} outside {{-{g.Delta}..{g.Delta}}} for this graph")
    t = tables if tables is not None else Tables(g)
    r = TheoremReport(theorem_id, g.name, k)
    THEOREMS[theorem_id](t, k, r)
    return r.finish()


# -- corpus runs ---------------------------------------------------------------


def default_corpus() -> list[Graph]:
    """K_3..K_6, C_4..C_8, P_4..P_6, stars on 4..6 vertices, c8-chords and 20 seeded G(8, p)."""
    specs = [f"complete:{n}" for n in range(3, 7)]
    specs += [f"cycle:{n}" for n in range(4, 9)]
    specs += [f"path:{n}" for n in range(4, 7)]
    specs += [f"star:{n}" for n in range(4, 7)]
    specs += ["c8-chords"]
    ps = (0.3, 0.5, 0.7)
    specs += [f"gnp:8,{ps[seed % 3]},{seed}" for seed in range(20)]
    return [parse_gen(s) for s in specs]


@dataclass
class CorpusReport:
    tasks: list[TheoremReport]
    skipped: list[dict]
    theorems: list[str]

    @property
    def counterexamples(self) -> int:
        return sum(t.counterexample_count for t in self.tasks)

    @property
    def ok(self) -> bool:
        return self.counterexamples == 0

    def summary(self) -> dict[str, dict]:
        out = {}
        for tid in self.theorems:
            rows = [t for t in self.tasks if t.theorem == tid]
            checked = [t for t in rows if t.status not in _SKIPPED_STATUSES]
            instances = sum(t.instances for t in rows)
            bad = sum(t.counterexample_count for t in rows)
            out[tid] = {
                "tasks": len(checked),
                "instances": instances,
                "excluded": sum(t.excluded for t in rows),
                "counterexamples": bad,
                "vacuous_tasks": sum(t.status == "vacuous" for t in rows),
                "status": "failed" if bad else ("verified" if instances else "vacuous"),
            }
        return out

    def as_dict(self) -> dict:
        return {
            "schema_version": 1,
            "theorems": self.theorems,
            "summary": self.summary(),
            "counterexamples": self.counterexamples,
            "tasks": [t.as_dict() for t in self.tasks],
            "skipped": self.skipped,
        }


_SKIPPED_STATUSES = ("out-of-range", "not-applicable", "premise-unmet")


def _graph_job(args) -> tuple[list[TheoremReport], list[dict]]:
    index, g, theorems, ks = args
    t = Tables(g)
    reports, skipped = [], []
    wanted = range(-g.Delta, g.Delta + 1) if ks is None else ks
    for k in wanted:
        if not -g.Delta <= k <= g.Delta:
            skipped.append({"graph": g.name, "k": k, "reason": f"k outside {{-{g.Delta}..{g.Delta}}}"})
            continue
        for tid in theorems:
            if tid in _FIXED_K and k != 0:
                continue
            reports.append(verify(g, tid, k, t))
    return reports, skipped


def corpus_run(
    corpus: list[Graph],
    theorems: list[str],
    k_range: range | list[int] | None = None,
    workers: int | None = None,
) -> CorpusReport:
    """Run every theorem on every graph for every ``k`` (default: all of ``-Delta..Delta``).

    ``workers`` > 1 spreads graphs over processes (default from the
    ``KALLIANCE_WORKERS`` environment variable); the report is identical
    either way because tasks are merged in corpus, theorem and k order.
    """
    for tid in theorems:
        _check_theorem(tid)
    for g in corpus:
        if g.n > MAX_N:
            raise GraphError(f"{g.name or g}: n={g.n} exceeds the theorem-check cap of {MAX_N}")
    if workers is None:
        workers = int(os.environ.get("KALLIANCE_WORKERS", "1"))
    ks = None if k_range is None else list(k_range)
    jobs = [(i, g, list(theorems), ks) for i, g in enumerate(corpus)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_graph_job, jobs))
    else:
        results = [_graph_job(j) for j in jobs]
    order = {tid: i for i, tid in enumerate(theorems)}
    tasks, skipped = [], []
    for gi, (reports, skips) in enumerate(results):
        reports.sort(key=lambda rep: (order[rep.theorem], rep.k))
        tasks += reports
        skipped += skips
    return CorpusReport(tasks, skipped, list(theorems))
