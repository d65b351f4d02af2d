"""Command-line front end: epolab csf|epos|connparts|prove|sweep|trees-scan|sixm.

Exit codes: 0 success / positive outcome, 1 negative finding (not e-positive,
missing type, sweep failure, theorem not applicable), 2 usage or parse error,
3 size-guard violation.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from . import __version__
from .graphs import (
    CutProfile,
    Graph,
    cut_profiles,
    has_connected_partition,
    is_connected as is_graph_connected,
    max_degree,
    missing_types,
    enumerate_free_trees,
    path_graph,
    spider,
    star_graph,
    tree_canonical_key,
)
from .obstructions import (
    describe_inapplicability,
    sixm_full_check,
    sweep_c40,
    sweep_c500,
    theorem_decide,
)
from .partitions import format_parts, parse_partition
from .symfunc import csf_e, is_e_positive

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_GUARD = 3


@dataclass
class RunConfig:
    """Resolved invocation: what to run, where I/O goes, how parallel."""

    command: str
    source: Optional[str] = None
    json_out: bool = False
    jobs: int = 1
    mode: str = "full"
    cache: Optional[str] = None

    def __post_init__(self):
        if self.jobs < 1:
            raise ValueError("parallelism must be >= 1")


class SpecError(ValueError):
    """Raised for malformed graph/profile shorthands or files."""


def parse_graph_spec(spec: str) -> Graph:
    """Accept "spider:6,4,1,1", "path:7", "star:5", or a graph file path."""
    if ":" in spec:
        kind, _, rest = spec.partition(":")
        kind = kind.strip().lower()
        try:
            if kind == "spider":
                legs = sorted((int(t) for t in rest.split(",")), reverse=True)
                return spider(legs)
            if kind == "path":
                return path_graph(int(rest))
            if kind == "star":
                return star_graph(int(rest))
        except (ValueError, TypeError) as exc:
            raise SpecError(f"bad {kind} shorthand {spec!r}: {exc}") from None
        raise SpecError(f"unknown graph shorthand kind {kind!r}")
    path = Path(spec)
    if not path.exists():
        raise SpecError(f"no such graph file: {spec}")
    try:
        return Graph.from_text(path.read_text())
    except ValueError as exc:
        raise SpecError(str(exc)) from None


def parse_profile_spec(spec: str) -> CutProfile:
    """Parse "profile:a=6,b=4,cs=1,1"."""
    body = spec.partition(":")[2]
    fields = {}
    key = None
    for tok in body.split(","):
        if "=" in tok:
            key, _, val = tok.partition("=")
            fields[key.strip()] = [val.strip()]
        elif key is not None:
            fields[key.strip()].append(tok.strip())
        else:
            raise SpecError(f"bad profile spec {spec!r}")
    try:
        a = int(fields["a"][0])
        b = int(fields["b"][0])
        cs = [int(v) for v in fields["cs"]]
        return CutProfile(a, b, cs)
    except (KeyError, ValueError) as exc:
        raise SpecError(f"bad profile spec {spec!r}: {exc}") from None


# ---------------------------------------------------------------------------
# Result cache (append-only JSON lines)


class ResultCache:
    """Append-only JSONL cache keyed by (command, canonical input, version)."""

    def __init__(self, path: Optional[str]):
        self.path = Path(path) if path else None
        self._records = {}
        if self.path and self.path.exists():
            for line in self.path.read_text().splitlines():
                if not line.strip():
                    continue
                rec = json.loads(line)
                self._records[(rec["command"], rec["key"], rec["version"])] = rec["result"]

    def get(self, command: str, key: str):
        return self._records.get((command, key, __version__))

    def put(self, command: str, key: str, result) -> None:
        if (command, key, __version__) in self._records:
            return
        self._records[(command, key, __version__)] = result
        if self.path:
            with self.path.open("a") as fh:
                fh.write(
                    json.dumps(
                        {"command": command, "key": key, "version": __version__, "result": result},
                        sort_keys=True,
                    )
                    + "\n"
                )


def _tree_cache_key(G: Graph) -> str:
    canon = tree_canonical_key(G)
    digest = hashlib.sha256(repr(canon).encode()).hexdigest()[:24]
    return f"n{G.n}-{digest}"


# ---------------------------------------------------------------------------
# Subcommands


def cmd_csf(args) -> int:
    try:
        G = parse_graph_spec(args.graph)
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if G.n > 20:
        print(f"error: size guard, n={G.n} > 20", file=sys.stderr)
        return EXIT_GUARD
    X = csf_e(G)
    if args.json:
        print(json.dumps(X.to_json_dict()))
    else:
        print(X.to_text())
    return EXIT_OK


def cmd_epos(args) -> int:
    try:
        G = parse_graph_spec(args.graph)
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if G.n > 20:
        print(f"error: size guard, n={G.n} > 20", file=sys.stderr)
        return EXIT_GUARD
    verdict = is_e_positive(G)
    if args.json:
        print(
            json.dumps(
                {
                    "e_positive": verdict.positive,
                    "negatives": [
                        {"lambda": list(lam), "coeff": str(c)} for lam, c in verdict.negatives
                    ],
                }
            )
        )
    elif verdict.positive:
        print("e-positive")
    else:
        print("not e-positive; negative terms:")
        for lam, c in verdict.negatives:
            print(f"{c} * e_{format_parts(lam)}")
    return EXIT_OK if verdict.positive else EXIT_NEGATIVE


def cmd_connparts(args) -> int:
    try:
        G = parse_graph_spec(args.graph)
        lam = parse_partition(args.type) if args.type else None
    except (SpecError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if G.n > 25:
        print(f"error: size guard, n={G.n} > 25", file=sys.stderr)
        return EXIT_GUARD
    if not is_graph_connected(G):
        print("error: graph must be connected", file=sys.stderr)
        return EXIT_USAGE
    if lam is not None:
        if lam.total != G.n:
            print(f"error: type {lam} does not sum to n={G.n}", file=sys.stderr)
            return EXIT_USAGE
        witness = has_connected_partition(G, lam)
        if args.json:
            blocks = [sorted(b) for b in witness.blocks] if witness else None
            print(json.dumps({"type": list(lam.parts), "present": witness is not None, "blocks": blocks}))
        elif witness is None:
            print(f"absent: no connected partition of type {lam}")
        else:
            print(f"present: {', '.join(str(sorted(b)) for b in witness.blocks)}")
        return EXIT_OK if witness is not None else EXIT_NEGATIVE
    missing = missing_types(G)
    if args.json:
        print(json.dumps({"n": G.n, "missing": [list(lam.parts) for lam in missing]}))
    elif missing:
        print(f"{len(missing)} missing type(s):")
        for lam in missing:
            print(str(lam))
    else:
        print("complete: a connected partition exists for every type")
    return EXIT_OK if not missing else EXIT_NEGATIVE


def cmd_prove(args) -> int:
    spec = args.spec
    try:
        if spec.startswith("profile:"):
            profiles = [(None, parse_profile_spec(spec))]
        else:
            G = parse_graph_spec(spec)
            if not is_graph_connected(G):
                print("error: graph must be connected", file=sys.stderr)
                return EXIT_USAGE
            profiles = cut_profiles(G)
            if not profiles:
                print("NOT-APPLICABLE: no cut vertex splits the graph into >= 3 components")
                return EXIT_NEGATIVE
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    for _, profile in profiles:
        cert = theorem_decide(profile)
        if cert is not None:
            print(json.dumps(cert.to_json_dict()))
            return EXIT_OK
    reasons = "; ".join(
        f"(a={p.a},b={p.b},cs={list(p.cs)}): {describe_inapplicability(p)}"
        for _, p in profiles
    )
    print(f"NOT-APPLICABLE: {reasons}")
    return EXIT_NEGATIVE


def _tree_scan_worker(payload):
    n, idx, edges = payload
    from .graphs import Graph as _G

    G = _G(n, edges)
    verdict = is_e_positive(G)
    return (idx, verdict.positive)


def cmd_trees_scan(args) -> int:
    n_max = args.n_max
    if not 1 <= n_max <= 14:
        print(f"error: size guard, n_max={n_max} > 14", file=sys.stderr)
        return EXIT_GUARD
    cache = ResultCache(args.cache)
    counterexamples = []
    rows = []
    for n in range(1, n_max + 1):
        qualifying = []
        keys = []
        for G in enumerate_free_trees(n):
            if max_degree(G) >= 4:
                qualifying.append(G)
                keys.append(_tree_cache_key(G))
        results = {}
        todo = []
        for i, (G, key) in enumerate(zip(qualifying, keys)):
            hit = cache.get("trees-scan", key)
            if hit is not None:
                results[i] = hit["e_positive"]
            else:
                todo.append((n, i, sorted(G.edges)))
        if todo:
            if args.jobs > 1 and len(todo) > 1:
                from concurrent.futures import ProcessPoolExecutor

                with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                    outcomes = list(pool.map(_tree_scan_worker, todo))
            else:
                outcomes = [_tree_scan_worker(p) for p in todo]
            for idx, positive in outcomes:
                results[idx] = positive
                cache.put(
                    "trees-scan",
                    keys[idx],
                    {"n": n, "max_degree": max_degree(qualifying[idx]), "e_positive": positive},
                )
        bad = [qualifying[i] for i, positive in results.items() if positive]
        counterexamples.extend(bad)
        rows.append((n, len(qualifying), len(bad)))
    if args.json:
        print(
            json.dumps(
                {
                    "n_max": n_max,
                    "rows": [
                        {"n": n, "degree4_trees": q, "counterexamples": b} for n, q, b in rows
                    ],
                    "counterexamples": [sorted(g.edges) for g in counterexamples],
                }
            )
        )
    else:
        print(f"{'n':>3} {'deg>=4 trees':>13} {'e-positive (unexpected)':>24}")
        for n, q, b in rows:
            print(f"{n:>3} {q:>13} {b:>24}")
        if counterexamples:
            print("counterexamples found:")
            for g in counterexamples:
                print(f"  {sorted(g.edges)}")
        else:
            print("no counterexamples: every scanned tree with a degree-4 vertex fails e-positivity")
    return EXIT_NEGATIVE if counterexamples else EXIT_OK


def _parse_range(text: Optional[str], lo_default: int, hi_default: int):
    if not text:
        return lo_default, hi_default
    try:
        lo, _, hi = text.partition("..")
        return int(lo), int(hi)
    except ValueError:
        raise SpecError(f"bad range {text!r}, expected LO..HI") from None


def cmd_sweep(args) -> int:
    try:
        if args.kind == "c40":
            lo, hi = _parse_range(args.range, 2, 40)
            report = sweep_c40(lo, hi, jobs=args.jobs)
        else:
            lo, hi = _parse_range(args.range, 41, 500)
            report = sweep_c500(lo, hi, mode=args.mode, jobs=args.jobs)
    except (SpecError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    payload = json.dumps(report.to_json_dict(), sort_keys=True)
    if args.out:
        Path(args.out).write_text(payload + "\n")
    print(payload)
    if args.csv:
        with open(args.csv, "w") as fh:
            if args.kind == "c40":
                fh.write("c,b,n_lo,n_hi,cells,failures\n")
            else:
                fh.write("c,b,q\n")
            for row in report.per_cell:
                fh.write(",".join(str(v) for v in row) + "\n")
    return EXIT_OK if report.ok else EXIT_NEGATIVE


def cmd_sixm(args) -> int:
    if not 1 <= args.m <= 3:
        print(f"error: need 1 <= m <= 3, got {args.m}", file=sys.stderr)
        return EXIT_USAGE
    report = sixm_full_check(args.m)
    agree = None
    if args.cross_check:
        if args.m != 1:
            print("error: --cross-check is only feasible for m=1", file=sys.stderr)
            return EXIT_USAGE
        from .partitions import partitions_of

        G = spider((6, 4, 1, 1))
        agree = all(
            has_connected_partition(G, lam) is not None for lam in partitions_of(13)
        )
    if args.json:
        out = report.to_json_dict()
        if agree is not None:
            out["brute_force_agrees"] = agree
        print(json.dumps(out))
    else:
        print(f"m={args.m}: {report.total - len(report.failures)}/{report.total} types realized")
        for case, count in sorted(report.case_tallies.items()):
            print(f"  {case:>24}: {count}")
        if args.m == 1:
            print(f"  materialized and validated on S(6,4,1,1): {report.materialized}")
        if agree is not None:
            print(f"  brute-force search agrees: {agree}")
        for lam, err in report.failures:
            print(f"  FAILURE at {lam}: {err}")
    if report.failures or agree is False:
        return EXIT_NEGATIVE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="epolab",
        description="Chromatic symmetric functions, connected partitions, and missing-type certificates.",
    )
    parser.add_argument("--version", action="version", version=f"epolab {__version__}")
    default_jobs = int(os.environ.get("EPOLAB_JOBS", "1"))
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("csf", help="print the e-basis expansion of X_G")
    p.add_argument("graph", help="spider:6,4,1,1 | path:7 | star:5 | FILE")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_csf)

    p = sub.add_parser("epos", help="decide e-positivity (exit 0 yes, 1 no)")
    p.add_argument("graph")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_epos)

    p = sub.add_parser("connparts", help="missing types, or a witness for --type")
    p.add_argument("graph")
    p.add_argument("--type", help='partition such as "(3,2,2)"')
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_connparts)

    p = sub.add_parser("prove", help="missing-type certificate for a graph or profile")
    p.add_argument("spec", help="graph spec or profile:a=6,b=4,cs=1,1")
    p.set_defaults(fn=cmd_prove)

    p = sub.add_parser("sweep", help="exhaustive certificate sweeps")
    p.add_argument("kind", choices=["c40", "c500"])
    p.add_argument("range", nargs="?", help="LO..HI (defaults: 2..40 / 41..500)")
    p.add_argument("--mode", choices=["full", "sampled"], default="full")
    p.add_argument("--jobs", type=int, default=default_jobs)
    p.add_argument("--out", help="write the JSON report to this file")
    p.add_argument("--csv", help="write per-cell rows to this CSV file")
    p.set_defaults(fn=cmd_sweep)

    p = sub.add_parser("trees-scan", help="degree>=4 trees are never e-positive")
    p.add_argument("n_max", type=int)
    p.add_argument("--jobs", type=int, default=default_jobs)
    p.add_argument("--cache", help="append-only JSONL result cache")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_trees_scan)

    p = sub.add_parser("sixm", help="every type of 12m+1 embeds in S(6m,6m-2,1,1)")
    p.add_argument("m", type=int)
    p.add_argument("--cross-check", action="store_true", dest="cross_check")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_sixm)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.config = RunConfig(
            command=args.command,
            source=getattr(args, "graph", None) or getattr(args, "spec", None),
            json_out=getattr(args, "json", False),
            jobs=getattr(args, "jobs", 1),
            mode=getattr(args, "mode", "full"),
            cache=getattr(args, "cache", None),
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = EXIT_USAGE
    else:
        code = args.fn(args)
    if argv is None:
        sys.exit(code)
    return code
