"""``kalliance`` command line: compute, bounds, verify.

JSON goes to stdout with sorted keys, so identical inputs give identical
bytes. A one-line human summary goes to stderr. Wall-clock numbers are
only emitted with ``--timing``.

Exit codes: 0 ok, 1 a bound VIOLATED or a counterexample found, 2 bad
input (flags, graph files, k, theorem ids), 3 graph over a size cap.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from pathlib import Path

from .bounds import BOUNDS, Status, evaluate_all
from .graph import FAMILIES, Graph, GraphError, parse_gen, read_graph
from .logic import AllianceSpec, Kind
from .solver import MAX_N as SOLVER_MAX_N
from .solver import SizeCapError, max_free, min_alliance, min_cover
from .verifier import MAX_N as VERIFY_MAX_N
from .verifier import THEOREMS, corpus_run, default_corpus

SCHEMA_VERSION = 1
STRUCTURAL = [t for t in THEOREMS if t not in BOUNDS]
CORPUS_SUFFIXES = {".edges", ".txt", ".el", ".col", ".dimacs"}


class UsageError(Exception):
    """Bad flags or inputs; exit status 2."""


class CapError(Exception):
    """Graph too large for the requested operation; exit status 3."""


def split_gens(text: str) -> list[str]:
    """Split ``path:2,path:2-disjoint`` into generators.

    A comma starts a new generator only when the next token names a family,
    so ``gnp:8,0.5,1`` stays one item.
    """
    out: list[str] = []
    for token in text.split(","):
        head = token.split(":", 1)[0].strip()
        if out and head not in FAMILIES:
            out[-1] += "," + token
        else:
            out.append(token.strip())
    return [t for t in out if t]


def parse_k_range(text: str | None) -> list[int] | None:
    if text is None:
        return None
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo_i, hi_i = int(lo), int(hi)
            if lo_i > hi_i:
                raise UsageError(f"empty k range {text!r}")
            return list(range(lo_i, hi_i + 1))
        return [int(text)]
    except ValueError:
        raise UsageError(f"cannot parse k range {text!r}; use a..b or a single integer") from None


def load_config(path: str) -> dict[str, str]:
    """``key = value`` lines, ``#`` comments; keys are long flag names."""
    out = {}
    try:
        lines = Path(path).read_text().splitlines()
    except OSError as e:
        raise UsageError(f"cannot read config {path}: {e.strerror}") from None
    for num, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise UsageError(f"{path}:{num}: expected key = value")
        out[key.strip().replace("-", "_")] = value.strip()
    return out


def _graphs(args) -> list[Graph]:
    graphs = []
    try:
        for text in args.gen or []:
            graphs += [parse_gen(s) for s in split_gens(text)]
        for path in args.graph or []:
            graphs.append(read_graph(path))
    except (GraphError, ValueError, TypeError) as e:
        raise UsageError(str(e)) from None
    except OSError as e:
        raise UsageError(f"cannot read graph: {e}") from None
    if not graphs:
        raise UsageError("no graph given; use --gen family:params or --graph FILE")
    return graphs


def _k_values(g: Graph, ks: list[int] | None) -> tuple[list[int], list[dict]]:
    if ks is None:
        return list(range(-g.Delta, g.Delta + 1)), []
    keep = [k for k in ks if -g.Delta <= k <= g.Delta]
    skipped = [
        {"graph": g.name, "k": k, "reason": f"k outside {{-{g.Delta}..{g.Delta}}}"}
        for k in ks
        if k not in keep
    ]
    return keep, skipped


def _emit(doc: dict, fmt: str = "json", rows: list[dict] | None = None, columns=()) -> None:
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(columns), lineterminator="\n", extrasaction="ignore")
        w.writeheader()
        for row in rows or []:
            w.writerow(row)
        sys.stdout.write(buf.getvalue())
    else:
        sys.stdout.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")


# -- subcommands ----------------------------------------------------------------

_QUANTITY = {"a": "alliance", "gamma": "alliance", "phi": "free", "zeta": "cover"}


def cmd_compute(args) -> int:
    graphs = _graphs(args)
    ks = parse_k_range(args.k)
    which = _QUANTITY[args.invariant]
    global_ = args.invariant == "gamma" or args.global_
    run = {"alliance": min_alliance, "free": max_free, "cover": min_cover}[which]
    rows, skipped = [], []
    for g in graphs:
        if g.n > SOLVER_MAX_N:
            raise CapError(f"{g.name}: exact search is capped at n <= {SOLVER_MAX_N}; got n={g.n}")
        wanted, skip = _k_values(g, ks)
        if ks is not None and not wanted:
            raise UsageError(f"no requested k lies in {{-{g.Delta}..{g.Delta}}} for {g.name}")
        skipped += skip
        for k in wanted:
            spec = AllianceSpec(Kind(args.kind), k, global_)
            start = time.perf_counter()
            res = run(g, spec)
            row = {"graph": g.name, "n": g.n, **res.as_dict()}
            if args.timing:
                row["elapsed_ms"] = round((time.perf_counter() - start) * 1000, 3)
            rows.append(row)
            value = "infeasible" if res.value is None else res.value
            print(f"{g.name} {res.invariant} k={k}: {value} witness={row['witness']}", file=sys.stderr)
    cols = ["graph", "n", "invariant", "k", "kind", "global", "value", "witness", "method"]
    if args.timing:
        cols.append("elapsed_ms")
    _emit({"schema_version": SCHEMA_VERSION, "results": rows, "skipped": skipped}, args.format, rows, cols)
    return 0


def cmd_bounds(args) -> int:
    graphs = _graphs(args)
    ks = parse_k_range(args.k)
    ids = list(BOUNDS) if args.bounds in (None, "all") else [b.strip() for b in args.bounds.split(",")]
    unknown = [b for b in ids if b not in BOUNDS]
    if unknown:
        raise UsageError(f"unknown bound id(s) {', '.join(unknown)}; known: {', '.join(BOUNDS)}")
    rows, skipped = [], []
    for g in graphs:
        if g.n > SOLVER_MAX_N:
            raise CapError(f"{g.name}: exact search is capped at n <= {SOLVER_MAX_N}; got n={g.n}")
        wanted, skip = _k_values(g, ks)
        skipped += skip
        for e in evaluate_all(g, wanted, ids):
            d = e.as_dict()
            d["graph"] = g.name
            d["k"] = e.inputs.k
            rows.append(d)
    violated = sum(r["status"] == Status.VIOLATED.value for r in rows)
    counts = {s.value: sum(r["status"] == s.value for r in rows) for s in Status}
    print(f"bounds: {len(rows)} rows, " + ", ".join(f"{v} {k}" for k, v in counts.items()), file=sys.stderr)
    cols = ["graph", "k", "bound_id", "invariant", "bound_value", "exact_value", "status", "premises_met", "reason"]
    _emit(
        {"schema_version": SCHEMA_VERSION, "rows": rows, "skipped": skipped, "violated": violated},
        args.format, rows, cols,
    )
    return 1 if violated else 0


def _corpus(args) -> list[Graph]:
    spec = args.corpus
    if spec is None:
        return _graphs(args)
    if spec == "default":
        graphs = default_corpus()
    elif spec.startswith("dir:"):
        root = Path(spec[4:])
        if not root.is_dir():
            raise UsageError(f"corpus directory {root} does not exist")
        files = sorted(p for p in root.iterdir() if p.suffix in CORPUS_SUFFIXES)
        if not files:
            raise UsageError(f"no graph files ({', '.join(sorted(CORPUS_SUFFIXES))}) in {root}")
        try:
            graphs = [read_graph(p) for p in files]
        except (GraphError, ValueError) as e:
            raise UsageError(str(e)) from None
    else:
        raise UsageError(f"unknown corpus {spec!r}; use default or dir:<path>")
    if args.gen or args.graph:
        graphs += _graphs(args)
    return graphs


def cmd_verify(args) -> int:
    if args.theorems in (None, "all"):
        theorems = list(STRUCTURAL)
    else:
        theorems = []
        for item in args.theorems.split(","):
            item = item.strip()
            theorems += list(BOUNDS) if item == "bounds" else [item]
        unknown = [t for t in theorems if t not in THEOREMS]
        if unknown:
            raise UsageError(f"unknown theorem id(s) {', '.join(unknown)}; known: {', '.join(THEOREMS)}")
    ks = parse_k_range(args.k)
    graphs = _corpus(args)
    for g in graphs:
        if g.n > VERIFY_MAX_N:
            raise CapError(f"{g.name}: theorem checks are capped at n <= {VERIFY_MAX_N}; got n={g.n}")
    start = time.perf_counter()
    report = corpus_run(graphs, theorems, ks, workers=args.workers)
    doc = report.as_dict()
    elapsed = time.perf_counter() - start
    if args.timing:
        doc["elapsed_ms"] = round(elapsed * 1000, 3)
    summary = report.summary()
    vacuous = [t for t, s in summary.items() if s["status"] == "vacuous"]
    line = f"verify: {len(graphs)} graphs, {len(theorems)} checks, {report.counterexamples} counterexamples"
    if vacuous:
        line += f", vacuous: {', '.join(vacuous)}"
    print(line + f" ({elapsed:.1f}s)", file=sys.stderr)
    if args.format == "csv":
        rows = [{"theorem": t, **s} for t, s in summary.items()]
        _emit(doc, "csv", rows, ["theorem", "status", "tasks", "instances", "excluded", "counterexamples", "vacuous_tasks"])
    else:
        _emit(doc)
    return 0 if report.ok else 1


# -- argument parsing ---------------------------------------------------------------


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--gen", action="append", help="inline generator(s), e.g. complete:5 or path:2,cycle:4")
    p.add_argument("--graph", action="append", help="edge-list or DIMACS file")
    p.add_argument("--k", help="a single k or an inclusive range a..b (default: every valid k)")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--timing", action="store_true", help="add wall-clock milliseconds to the output")
    p.add_argument("--config", help="key = value file with defaults for these flags")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kalliance", description="Exact k-alliance invariants, bounds and theorem checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="exact value and witness of one invariant")
    _common(p)
    p.add_argument("--kind", choices=[k.value for k in Kind], default="defensive")
    p.add_argument("--invariant", choices=sorted(_QUANTITY), default="a",
                   help="a: min alliance, gamma: min global alliance, phi: max free set, zeta: min cover")
    p.add_argument("--global", dest="global_", action="store_true", help="use global alliances")
    p.set_defaults(func=cmd_compute, subparser=p)

    p = sub.add_parser("bounds", help="evaluate B1..B7 against exact values")
    _common(p)
    p.add_argument("--bounds", help="comma separated bound ids (default: all)")
    p.set_defaults(func=cmd_bounds, subparser=p)

    p = sub.add_parser("verify", help="check theorems by enumeration over a corpus")
    _common(p)
    p.add_argument("--corpus", help="default or dir:<path>")
    p.add_argument("--theorems", help="all, or comma separated ids (bound ids and 'bounds' allowed)")
    p.add_argument("--workers", type=int, help="processes (default: KALLIANCE_WORKERS or 1)")
    p.set_defaults(func=cmd_verify, subparser=p)
    return parser


_LIST_KEYS = {"gen", "graph"}
_BOOL_KEYS = {"timing", "global_"}


def _apply_config(args) -> None:
    """Fill flags left at their defaults from the config file."""
    config = load_config(args.config)
    defaults = args.subparser
    known = {a.dest for a in defaults._actions}
    for key, value in config.items():
        key = "global_" if key == "global" else key
        if key not in known or key in ("config", "help", "func", "subparser"):
            raise UsageError(f"unknown config key {key!r} for {args.command}")
        current = getattr(args, key)
        if key in _LIST_KEYS:
            if current is None:
                setattr(args, key, [value])
        elif key in _BOOL_KEYS:
            if not current:
                setattr(args, key, value.lower() in ("1", "true", "yes", "on"))
        elif current is None or current == defaults.get_default(key):
            if key == "workers":
                try:
                    value = int(value)
                except ValueError:
                    raise UsageError(f"workers must be an integer, got {value!r}") from None
            elif key == "format" and value not in ("json", "csv"):
                raise UsageError(f"format must be json or csv, got {value!r}")
            setattr(args, key, value)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        if args.config:
            _apply_config(args)
        return args.func(args)
    except UsageError as e:
        print(f"kalliance: error: {e}", file=sys.stderr)
        return 2
    except (GraphError, ValueError) as e:
        if isinstance(e, SizeCapError):
            print(f"kalliance: error: {e}", file=sys.stderr)
            return 3
        print(f"kalliance: error: {e}", file=sys.stderr)
        return 2
    except CapError as e:
        print(f"kalliance: error: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
