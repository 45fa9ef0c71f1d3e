"""Command-line interface: ``pardual <subcommand> ...``.

Exit codes: 0 success; 1 a proven statement failed during ``verify``;
2 bad input or parameters; 3 ``scan-conjecture`` found a counterexample.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from itertools import chain
from typing import Iterable

from . import corpus as corpora
from .checks import THEOREM_IDS
from .errors import CapacityError, DomainError, PardualError
from .families import BASIC_FAMILIES, CATALOG_NAMES, FAMILY_TAGS, FamilySpec
from .graph import (Graph, encode_edgelist, encode_graph6, is_connected, is_planar, parse_edgelist,
                    parse_graph6, read_graph6_lines)
from .ribbon import (EmbeddingSpec, enumerate_partial_dual_genus, map_from_rotation,
                     planar_embeddings)
from .trees import decay_number
from .verify import (DEFAULT_EMBEDDINGS, DEFAULT_MAX_DUAL_EDGES, DEFAULT_MAX_EDGES, HARD_MAX_DUAL_EDGES,
                     HARD_MAX_EDGES, full_report, random_compositional, resolve_theorems, scan,
                     scan_conjecture)

ENV_MAX_EDGES = "PARDUAL_MAX_EDGES"


class UsageError(Exception):
    """Bad input or parameters; reported on stderr with exit code 2."""


# ---------------------------------------------------------------------------
# Input
# ---------------------------------------------------------------------------

def _read_text(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="ascii") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except UnicodeDecodeError as exc:
        raise UsageError(f"{path}: non-ASCII byte at offset {exc.start}") from None


def read_graphs(text: str, fmt: str) -> list[Graph]:
    if fmt == "edgelist":
        try:
            return [parse_edgelist(text)] if text.strip() else []
        except (PardualError, ValueError) as exc:
            raise UsageError(f"edge list: {exc}") from None
    out = []
    lines = text.splitlines()
    try:
        for _, g in read_graph6_lines(lines):
            out.append(g)
    except PardualError as exc:
        raise UsageError(str(exc)) from None
    return out


def _capacity(args) -> tuple[int, int]:
    value = args.max_edges
    if value is None and os.environ.get(ENV_MAX_EDGES):
        try:
            value = int(os.environ[ENV_MAX_EDGES])
        except ValueError:
            raise UsageError(f"{ENV_MAX_EDGES} must be an integer") from None
    if value is None:
        value = DEFAULT_MAX_EDGES
    if not 0 < value <= HARD_MAX_EDGES:
        raise UsageError(f"max edges must be in 1..{HARD_MAX_EDGES}")
    if value > DEFAULT_MAX_EDGES:
        print(f"warning: subset capacity raised to {value} edges; runs may be slow", file=sys.stderr)
    dual = args.max_dual_edges if args.max_dual_edges is not None else DEFAULT_MAX_DUAL_EDGES
    if not 0 < dual <= HARD_MAX_DUAL_EDGES:
        raise UsageError(f"max dual edges must be in 1..{HARD_MAX_DUAL_EDGES}")
    if dual > DEFAULT_MAX_DUAL_EDGES:
        print(f"warning: partial-dual capacity raised to {dual} edges; runs may be slow", file=sys.stderr)
    return value, dual


def _corpus(args) -> tuple[Iterable[Graph], str]:
    """Chain every requested corpus source; returns (graphs, description)."""
    parts, desc = [], []
    if args.exhaustive_n is not None:
        parts.append(corpora.exhaustive_connected(args.exhaustive_n))
        desc.append(f"labeled connected n<={args.exhaustive_n}")
    if args.max_n is not None:
        if args.max_n > corpora.ATLAS_MAX_N:
            raise UsageError(f"--max-n is limited to {corpora.ATLAS_MAX_N} (graph atlas)")
        parts.append(corpora.atlas_connected(args.max_n))
        desc.append(f"non-isomorphic connected n<={args.max_n}")
    if args.random:
        orders = [int(x) for x in args.orders.split(",")]
        parts.append(corpora.random_connected(args.random, orders, args.seed, args.random_max_m))
        desc.append(f"{args.random} random connected n in {orders}, m<={args.random_max_m}")
    if args.random_planar:
        orders = [int(x) for x in args.planar_orders.split(",")]
        parts.append(corpora.random_planar(args.random_planar, orders, args.seed))
        desc.append(f"{args.random_planar} random planar n in {orders}")
    if args.corpus:
        try:
            graphs = [g for _, g in corpora.read_corpus(args.corpus)]
        except OSError as exc:
            raise UsageError(f"cannot read {args.corpus}: {exc.strerror}") from None
        except PardualError as exc:
            raise UsageError(f"{args.corpus}: {exc}") from None
        parts.append(graphs)
        desc.append(f"file {os.path.basename(args.corpus)}")
    if args.input is not None:
        parts.append(read_graphs(_read_text(args.input), args.format))
        desc.append("input graphs")
    return chain.from_iterable(parts), "; ".join(desc) or "empty"


# ---------------------------------------------------------------------------
# Output
# ---------------------------------------------------------------------------

def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for r in rows:
        w.writerow(["" if x is None else x for x in r])
    return buf.getvalue()


def _human_report(rep, checks, skipped) -> str:
    d = rep.to_dict()
    width = max(len(k) for k in d)
    lines = [f"{k.ljust(width)}  {v}" for k, v in d.items()]
    for c in checks:
        if c.applicable:
            verdict = "pass" if c.passed else "FAIL"
            tight = " (tight)" if c.tight else ""
            lines.append(f"{c.theorem_id:<17} {verdict}{tight}: {c.lhs} {c.relation} {c.rhs}  {c.note}")
        else:
            lines.append(f"{c.theorem_id:<17} n/a: {c.note}")
    for s in skipped:
        lines.append(f"{s['theorem_id']:<17} skipped: {s['reason']}")
    return "\n".join(lines) + "\n"


def _human_scan(rep) -> str:
    lines = [f"corpus: {rep.corpus}", f"seed: {rep.seed}", f"graphs: {rep.graphs}",
             f"checks: {rep.checked} (passed {rep.passed}, failed {rep.failed}, "
             f"n/a {rep.not_applicable}, skipped {rep.skipped})"]
    for tid, t in rep.to_dict()["per_theorem"].items():
        lines.append(f"  {tid:<17} checked {t['checked']:>6}  pass {t['passed']:>6}  fail {t['failed']:>4}"
                     f"  n/a {t['not_applicable']:>6}  skip {t['skipped']:>4}  tight {t['tight']:>6}"
                     f"  min slack {t['min_slack']}")
    for f in rep.failures:
        lines.append(f"FAIL {f['check']['theorem_id']} on {f['graph6']}: {f['check']['note']}")
    for f in rep.findings:
        lines.append(f"FINDING {f['check']['theorem_id']} on {f['graph6']}: "
                     f"{f['check']['lhs']} > {f['check']['rhs']}")
    return "\n".join(lines) + "\n"


def _emit_scan(rep, out: str) -> str:
    if out == "csv":
        return _csv(rep.csv_rows())
    if out == "human":
        return _human_scan(rep)
    return _dump_json(rep.to_dict())


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_invariants(args) -> int:
    max_edges, max_dual = _capacity(args)
    graphs = read_graphs(_read_text(args.input), args.format)
    theorems = resolve_theorems(args.theorem)
    results = [full_report(g, theorems, oracle=args.oracle, max_edges=max_edges,
                           max_dual_edges=max_dual, embeddings=args.embeddings, seed=args.seed)
               for g in graphs]
    if args.out == "json":
        doc = [{"invariants": r.to_dict(), "checks": [c.to_dict() for c in cs], "skipped": sk}
               for r, cs, sk in results]
        sys.stdout.write(_dump_json(doc))
    elif args.out == "csv":
        rows = [["graph6", "theorem_id", "applicable", "lhs", "rhs", "slack", "pass"]]
        for r, cs, _ in results:
            rows += [[r.graph6, c.theorem_id, c.applicable, c.lhs, c.rhs, c.slack, c.passed] for c in cs]
        sys.stdout.write(_csv(rows))
    else:
        sys.stdout.write("\n".join(_human_report(*r) for r in results))
    return 0


def cmd_verify(args) -> int:
    max_edges, max_dual = _capacity(args)
    graphs, desc = _corpus(args)
    rep = scan(graphs, args.theorem, desc, args.seed, args.parallel, keep_rows=args.out == "csv",
               max_edges=max_edges, max_dual_edges=max_dual, embeddings=args.embeddings)
    if args.compositional:
        for c in random_compositional(args.compositional, args.seed):
            rep.add(c.witness_data["graph6"], [c], [])
        rep.corpus += f"; {args.compositional} random compositional constructions"
    sys.stdout.write(_emit_scan(rep, args.out))
    return 1 if rep.proven_failures else 0


def cmd_scan_conjecture(args) -> int:
    max_edges, max_dual = _capacity(args)
    graphs, desc = _corpus(args)
    rep = scan_conjecture(graphs, desc, args.seed, args.parallel, keep_rows=args.out == "csv",
                          max_edges=max_edges, max_dual_edges=max_dual)
    sys.stdout.write(_emit_scan(rep, args.out))
    return 3 if rep.findings else 0


def _parse_pairs(text: str | None) -> list[tuple[int, int]]:
    if not text:
        return []
    out = []
    for tok in text.split(","):
        u, sep, v = tok.partition(":")
        if not sep:
            raise UsageError(f"cross pair {tok!r} must look like u:v")
        out.append((int(u), int(v)))
    return out


def cmd_construct(args) -> int:
    spec = FamilySpec(args.family, n=args.n, base=args.base, t=args.t)
    if args.family in ("identify", "cut_join"):
        if not args.parts:
            raise UsageError(f"{args.family} needs --parts (comma-separated graph6 strings)")
        try:
            parts = [parse_graph6(p) for p in args.parts.split(",")]
        except PardualError as exc:
            raise UsageError(str(exc)) from None
        if args.family == "identify":
            vs = [int(v) for v in args.vertices.split(",")] if args.vertices else [0] * len(parts)
            if len(vs) != len(parts):
                raise UsageError("--vertices needs one vertex per part")
            spec.parts = list(zip(parts, vs))
        else:
            if len(parts) != 2:
                raise UsageError("cut_join needs exactly two parts")
            spec.parts = parts
            spec.cross = _parse_pairs(args.cross)
    try:
        g = spec.build()
    except (ValueError, PardualError) as exc:
        raise UsageError(str(exc)) from None
    sys.stdout.write(encode_edgelist(g) if args.format == "edgelist" else encode_graph6(g) + "\n")
    return 0


def cmd_partial_duals(args) -> int:
    _, max_dual = _capacity(args)
    graphs = read_graphs(_read_text(args.input), args.format)
    if not graphs:
        raise UsageError("no input graph")
    g = graphs[0]
    if not is_connected(g):
        raise UsageError("partial-dual enumeration needs a connected graph")
    if g.m > max_dual:
        raise UsageError(f"{g.m} edges exceeds partial-dual capacity {max_dual} (see --max-dual-edges)")
    planar = is_planar(g)
    if args.embedding:
        try:
            spec = EmbeddingSpec.from_text(_read_text(args.embedding), g.n)
            maps = [map_from_rotation(g, spec)]
        except (ValueError, PardualError) as exc:
            raise UsageError(f"embedding: {exc}") from None
    elif planar:
        maps = planar_embeddings(g, k=args.embeddings, seed=args.seed)
    else:
        raise UsageError("graph is not planar: the formula n - x_G requires planarity; "
                         "supply --embedding to enumerate a given map")
    formula = g.n - decay_number(g).value if planar else None
    runs = []
    for mp in maps:
        s = enumerate_partial_dual_genus(mp, max_dual)
        runs.append({"embedding_genus": mp.genus(), "rotation": mp.rotation_spec().to_text(),
                     "max_genus": s.max_genus, "witness": s.witness_edges(),
                     "histogram": {str(k): v for k, v in sorted(s.histogram.items())}})
    doc = {"graph6": encode_graph6(g), "n": g.n, "m": g.m, "planar": planar,
           "formula_n_minus_x": formula, "max_genus": runs[0]["max_genus"],
           "witness": runs[0]["witness"], "histogram": runs[0]["histogram"],
           "agrees": None if formula is None else all(r["max_genus"] == formula for r in runs),
           "embeddings": runs}
    if args.out == "json":
        sys.stdout.write(_dump_json(doc))
    elif args.out == "csv":
        sys.stdout.write(_csv([["genus", "count"]] + [[k, v] for k, v in doc["histogram"].items()]))
    else:
        lines = [f"graph {doc['graph6']}  n={g.n} m={g.m}",
                 f"max partial-dual genus {doc['max_genus']}  witness {doc['witness']}",
                 f"formula n - x_G        {formula}"]
        for i, r in enumerate(runs):
            lines.append(f"embedding {i}: max {r['max_genus']}  histogram {r['histogram']}")
        sys.stdout.write("\n".join(lines) + "\n")
    return 0


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def _common(p, out_default="json"):
    p.add_argument("--in", dest="input", metavar="PATH", help="input file ('-' for stdin)")
    p.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    p.add_argument("--out", choices=("json", "csv", "human"), default=out_default)
    p.add_argument("--max-edges", type=int, help=f"subset-search capacity (default {DEFAULT_MAX_EDGES}, "
                                                 f"hard limit {HARD_MAX_EDGES}; env {ENV_MAX_EDGES})")
    p.add_argument("--max-dual-edges", type=int,
                   help=f"partial-dual capacity (default {DEFAULT_MAX_DUAL_EDGES}, hard limit {HARD_MAX_DUAL_EDGES})")
    p.add_argument("--seed", type=int, default=corpora.DEFAULT_SEED)
    p.add_argument("--embeddings", type=int, default=DEFAULT_EMBEDDINGS,
                   help="plane embeddings per graph for the partial-dual oracle")


def _corpus_flags(p):
    p.add_argument("--exhaustive-n", type=int, help="all labeled connected graphs up to this order")
    p.add_argument("--max-n", type=int, help="one graph per isomorphism class up to this order (<= 7)")
    p.add_argument("--corpus", metavar="PATH", help="graph6 file")
    p.add_argument("--random", type=int, default=0, help="number of seeded random connected graphs")
    p.add_argument("--orders", default="7,8,9", help="orders for --random")
    p.add_argument("--random-max-m", type=int, default=30, help="edge cap for --random")
    p.add_argument("--random-planar", type=int, default=0, help="number of seeded random planar graphs")
    p.add_argument("--planar-orders", default="7,8", help="orders for --random-planar")
    p.add_argument("--parallel", type=int, default=1, help="worker processes")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pardual", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="invariants and checks for each input graph")
    _common(p)
    p.add_argument("--theorem", default="all", help="theorem ids (comma-separated) or all")
    p.add_argument("--oracle", action="store_true", help="also enumerate partial duals")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("verify", help="run theorem checks over a corpus")
    _common(p)
    _corpus_flags(p)
    p.add_argument("--theorem", default="all", help=f"one of {', '.join(THEOREM_IDS)}, a list, or all")
    p.add_argument("--compositional", type=int, default=0,
                   help="also run this many random cut-join / identification constructions")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan-conjecture", help="scan the clique-cover conjecture over a corpus")
    _common(p)
    _corpus_flags(p)
    p.set_defaults(func=cmd_scan_conjecture)

    p = sub.add_parser("construct", help="build a named graph")
    p.add_argument("--family", required=True, choices=FAMILY_TAGS)
    p.add_argument("--n", type=int)
    p.add_argument("--base", help=f"base graph: {', '.join(CATALOG_NAMES + BASIC_FAMILIES)}")
    p.add_argument("--t", type=int)
    p.add_argument("--parts", help="graph6 strings, comma-separated (identify, cut_join)")
    p.add_argument("--vertices", help="chosen vertex per part (identify)")
    p.add_argument("--cross", help="cross pairs u:v,u:v (cut_join)")
    p.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("partial-duals", help="enumerate the genus of every partial dual")
    _common(p)
    p.add_argument("--embedding", metavar="PATH", help="rotation system ('v: e1 e2 ...' per line)")
    p.set_defaults(func=cmd_partial_duals)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"pardual: error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, CapacityError, ValueError) as exc:
        print(f"pardual: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
