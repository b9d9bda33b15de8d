"""Bounds on alliance invariants, evaluated against exact values.

Each bound knows the invariant it constrains, the direction, its premises
and its formula. Two-sided results are split into ``-lower`` and ``-upper``
halves so every evaluation compares one number with one exact value.

Ceilings and floors are taken after snapping reals that lie within 1e-6 of
an integer (``mu`` of ``K_n`` may come out as ``n - 1e-14``). The two
real-valued bounds (B4, B6) are not rounded; they are compared with a
1e-9 slack.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import Callable

from .graph import Graph
from .solver import compute
from .spectral import ceil_snap, laplacian_spectrum, snap

__all__ = [
    "BOUNDS",
    "Bound",
    "BoundEvaluation",
    "ClosedFormPremiseError",
    "Status",
    "closed_form_Kn",
    "evaluate_bound",
    "evaluate_all",
    "graph_inputs",
]

REAL_TOL = 1e-9


class Status(str, Enum):
    TIGHT = "holds-tight"
    SLACK = "holds-slack"
    PREMISE_UNMET = "premise-unmet"
    VIOLATED = "VIOLATED"


@dataclass(frozen=True)
class Inputs:
    n: int
    m: int
    delta: int
    Delta: int
    k: int
    connected: bool
    mu: float | None
    mu_star: float | None


def graph_inputs(g: Graph, k: int) -> Inputs:
    mu = mu_star = None
    if g.n >= 2:
        spec = laplacian_spectrum(g)
        mu, mu_star = spec.mu, spec.mu_star
    return Inputs(g.n, g.m, g.delta, g.Delta, k, g.is_connected(), mu, mu_star)


@dataclass(frozen=True)
class Bound:
    bound_id: str
    invariant: str
    lower: bool
    formula: str
    value: Callable[[Inputs], float]
    premises: tuple[tuple[str, Callable[[Inputs], bool]], ...] = ()
    real: bool = False


def _k_range(lo, hi):
    return lambda x: lo(x) <= x.k <= hi(x)


_CONNECTED = ("graph is connected", lambda x: x.connected)
_ORDER2 = ("n >= 2", lambda x: x.n >= 2)
_HAS_EDGE = ("graph has an edge", lambda x: x.m > 0)
_K_NONNEG = ("k in {0..Delta}", _k_range(lambda x: 0, lambda x: x.Delta))

BOUNDS: dict[str, Bound] = {
    b.bound_id: b
    for b in [
        Bound(
            "B1", "phi_k^go", True, "floor(n/2) + floor(k/2) - 1",
            lambda x: x.n // 2 + x.k // 2 - 1,
            (_K_NONNEG,),
        ),
        Bound(
            "B2-lower", "phi_k^o", True, "ceil((delta + k - 2)/2)",
            lambda x: math.ceil((x.delta + x.k - 2) / 2),
        ),
        # for k <= 2 - Delta every singleton is an offensive alliance, the only
        # free set is empty and the argument behind the upper half has no vertex to use
        Bound(
            "B2-upper", "phi_k^o", False, "floor((2n - delta + k - 3)/2)",
            lambda x: math.floor((2 * x.n - x.delta + x.k - 3) / 2),
            (("k >= 3 - Delta (a nonempty offensive k-alliance free set exists)",
              lambda x: x.k >= 3 - x.Delta),),
        ),
        Bound(
            "B3-lower", "phi_k", True, "ceil((n(k + mu) - mu)/(n + mu))",
            lambda x: ceil_snap((x.n * (x.k + x.mu) - x.mu) / (x.n + x.mu)),
            (_ORDER2, _CONNECTED),
        ),
        Bound(
            "B3-upper", "phi_k", False, "floor((2n + k - delta - 1)/2)",
            lambda x: math.floor((2 * x.n + x.k - x.delta - 1) / 2),
            (_ORDER2, _CONNECTED),
        ),
        Bound(
            "B4", "zeta_k", False, "(n/mu_star)(mu_star - ceil((delta + k)/2))",
            lambda x: snap(x.n / x.mu_star * (x.mu_star - math.ceil((x.delta + x.k) / 2))),
            (_ORDER2, _CONNECTED),
            real=True,
        ),
        Bound(
            "B5", "a_k", True, "ceil(n(mu + k + 1)/(n + mu))",
            lambda x: ceil_snap(x.n * (x.mu + x.k + 1) / (x.n + x.mu)),
            (_ORDER2,),
        ),
        Bound(
            "B6", "gamma_k^o", True, "(n/mu_star) ceil((delta + k)/2)",
            lambda x: snap(x.n / x.mu_star * math.ceil((x.delta + x.k) / 2)),
            (_ORDER2, _HAS_EDGE),
            real=True,
        ),
        # fails on two disjoint triangles (phi_0 = 2 < 3), so connectivity is required
        Bound(
            "B7", "phi_k", True, "floor(n/2) + floor(k/2)",
            lambda x: x.n // 2 + x.k // 2,
            (_K_NONNEG, _CONNECTED),
        ),
    ]
}


@dataclass(frozen=True)
class BoundEvaluation:
    bound_id: str
    invariant: str
    premises_met: bool
    reason: str
    bound_value: float | int | None
    exact_value: int | None
    status: Status
    inputs: Inputs = field(repr=False)

    def as_dict(self) -> dict:
        d = asdict(self)
        d["status"] = self.status.value
        d["inputs"] = asdict(self.inputs)
        return d


def _classify(b: Bound, bound: float, exact: int | None) -> Status:
    if exact is None:
        # only minimum-alliance numbers are ever infeasible; min over an empty family is +inf
        return Status.SLACK if b.lower else Status.VIOLATED
    if b.real:
        if abs(exact - bound) <= REAL_TOL:
            return Status.TIGHT
        ok = exact >= bound - REAL_TOL if b.lower else exact <= bound + REAL_TOL
    else:
        if exact == bound:
            return Status.TIGHT
        ok = exact >= bound if b.lower else exact <= bound
    return Status.SLACK if ok else Status.VIOLATED


def evaluate_bound(g: Graph, k: int, bound_id: str, inputs: Inputs | None = None) -> BoundEvaluation:
    """Evaluate one bound at ``k`` and compare it with the exact invariant.

    >>> from kalliance.graph import generate
    >>> e = evaluate_bound(generate("complete", 5), 1, "B3-lower")
    >>> (e.bound_value, e.exact_value, e.status.value)
    (3, 3, 'holds-tight')
    """
    try:
        b = BOUNDS[bound_id]
    except KeyError:
        raise ValueError(f"unknown bound {bound_id!r}; known: {', '.join(BOUNDS)}") from None
    x = inputs if inputs is not None else graph_inputs(g, k)
    if x.k != k:
        x = Inputs(**{**asdict(x), "k": k})
    exact = compute(g, b.invariant, k).value
    failed = [text for text, test in b.premises if not test(x)]
    if failed:
        return BoundEvaluation(
            bound_id, b.invariant, False, "unmet: " + "; ".join(failed), None, exact,
            Status.PREMISE_UNMET, x,
        )
    reason = "; ".join(text for text, _ in b.premises) or "no premise"
    bound = b.value(x)
    if not b.real:
        bound = int(bound)
    return BoundEvaluation(bound_id, b.invariant, True, reason, bound, exact, _classify(b, bound, exact), x)


def evaluate_all(g: Graph, ks, bound_ids=None) -> list[BoundEvaluation]:
    """All requested bounds for every ``k`` in ``ks``, sharing one spectrum."""
    ids = list(bound_ids or BOUNDS)
    base = graph_inputs(g, 0)
    return [evaluate_bound(g, k, bid, base) for k in ks for bid in ids]


# -- complete graphs ---------------------------------------------------------


class ClosedFormPremiseError(ValueError):
    """A closed form for K_n was requested outside the range where it holds."""


def _ceil_half(x: int) -> int:
    return -(-x // 2)


_KN_FORMULAS: dict[str, Callable[[int, int], int]] = {
    "a_k": lambda n, k: _ceil_half(n + k + 1),
    "phi_k": lambda n, k: _ceil_half(n + k - 1),
    "zeta_k": lambda n, k: _ceil_half(n - k),
    "gamma_k^o": lambda n, k: _ceil_half(n + k - 1),
    "phi_k^o": lambda n, k: _ceil_half(n + k - 3),
    "zeta_k^o": lambda n, k: n - _ceil_half(n + k - 3),
    "phi_k^go": lambda n, k: (n + k - 2) // 2,
    "zeta_k^go": lambda n, k: n - (n + k - 2) // 2,
}

# at k = -(n-1) every singleton is an offensive alliance: phi^o and phi^go
# are 0 there and gamma^o is 1, one above what the formulas give
_FLOOR = {"a_k": 1, "gamma_k^o": 1, "phi_k^o": 0, "phi_k^go": 0}


def closed_form_Kn(n: int, k: int, invariant: str) -> int:
    """Exact value of an invariant on the complete graph K_n.

    Raises :class:`ClosedFormPremiseError` when the formula is not claimed
    (phi_k^go with n and k both odd) or when it leaves the range the
    invariant can take: at ``k = -(n-1)`` the offensive formulas drop one
    below the smallest possible value.

    >>> closed_form_Kn(5, 1, "phi_k"), closed_form_Kn(5, 1, "a_k"), closed_form_Kn(6, 2, "phi_k^go")
    (3, 4, 3)
    """
    if n < 2:
        raise ValueError("closed forms need n >= 2")
    if not -(n - 1) <= k <= n - 1:
        raise ValueError(f"k={k} outside {{-{n - 1}..{n - 1}}} for K_{n}")
    try:
        f = _KN_FORMULAS[invariant]
    except KeyError:
        raise ValueError(f"no closed form for {invariant!r}; known: {', '.join(_KN_FORMULAS)}") from None
    if invariant in ("phi_k^go", "zeta_k^go") and n % 2 == 1 and k % 2 != 0:
        raise ClosedFormPremiseError(f"{invariant}(K_{n}) is only claimed when n and k are not both odd")
    value = f(n, k)
    base = invariant.replace("zeta", "phi")
    if base in _FLOOR and _KN_FORMULAS[base](n, k) < _FLOOR[base]:
        raise ClosedFormPremiseError(
            f"{invariant}(K_{n}) formula gives {value} at k={k}, outside the attainable range"
        )
    return value
