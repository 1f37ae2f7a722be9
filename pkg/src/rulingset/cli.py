"""Command-line front end.

Exit codes: 0 success/valid, 1 verification failed or witness found,
2 usage or parse error, 3 size cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
import time
from pathlib import Path

from rulingset.domination import (
    DEFAULT_MAX_EXACT_N,
    SizeLimitError,
    greedy_dominating_set,
    is_dominating,
    min_dominating_set,
)
from rulingset.edgelist import (
    LabeledGraph,
    format_vertex_set,
    parse_edge_list,
    parse_vertex_set,
    serialize_edge_list,
)
from rulingset.generators import FAMILIES, GeneratorSpec, generate
from rulingset.graph import GraphError
from rulingset.independence import greedy_mis, is_maximal_independent, luby_mis
from rulingset.power import PowerMode, power_graph, reduce_k_graph
from rulingset.ruling import (
    DEFAULT_MAX_ORACLE_N,
    RulingReport,
    alpha_ruling_set,
    brute_force_min_k_ruling,
    find_beta_mismatch_witness,
    min_k_ruling_set,
    verify_alpha_beta,
    verify_k_ruling,
)

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

BENCH_HEADER = ["family", "n", "p", "seed", "k_or_alpha", "method", "size", "valid", "elapsed_ms"]


class _Out:
    def __init__(self, stdout, stderr):
        self.stdout = stdout
        self.stderr = stderr

    def emit(self, text: str) -> None:
        print(text, file=self.stdout)

    def note(self, text: str) -> None:
        print(text, file=self.stderr)


def _read_text(path: str | None) -> str:
    if path in (None, "-"):
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _load(args) -> LabeledGraph:
    return parse_edge_list(_read_text(args.input))


def _write(path: str | None, text: str, out: _Out) -> None:
    if path in (None, "-"):
        out.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _report_dict(lg: LabeledGraph, spec: dict, method: str, s, valid: bool, optimal: bool,
                 elapsed_ms: float, seed: int | None = None) -> dict:
    doc = {
        "n": lg.graph.n,
        "m": lg.graph.m,
        **spec,
        "method": method,
        "set": sorted(s),
        "labels": [lg.labels[v] for v in sorted(s)],
        "size": len(s),
        "valid": valid,
        "optimal": optimal,
        "elapsed_ms": round(elapsed_ms, 3),
    }
    if seed is not None:
        doc["seed"] = seed
    return doc


def _emit_report(args, out: _Out, lg: LabeledGraph, doc: dict) -> int:
    if args.json:
        out.emit(json.dumps(doc))
    else:
        out.emit(format_vertex_set(doc["set"], lg.labels))
        out.note(f"size={doc['size']} valid={doc['valid']} optimal={doc['optimal']} "
                 f"method={doc['method']} elapsed_ms={doc['elapsed_ms']}")
    return EXIT_OK if doc["valid"] else EXIT_INVALID


def _ruling_doc(lg: LabeledGraph, rep: RulingReport) -> dict:
    return _report_dict(lg, rep.spec.as_dict(), rep.method, rep.set, rep.valid, rep.optimal,
                        rep.elapsed_ms, rep.seed)


def cmd_gen(args, out: _Out) -> int:
    spec = GeneratorSpec(args.family, args.n, args.p, args.seed, args.rows, args.cols)
    g = generate(spec)
    _write(args.output, serialize_edge_list(g), out)
    return EXIT_OK


def cmd_power(args, out: _Out) -> int:
    lg = _load(args)
    start = time.perf_counter()
    if args.mode == "iterative":
        gk, deltas = reduce_k_graph(lg.graph, args.k)
        rounds = len(deltas)
    else:
        gk, rounds = power_graph(lg.graph, args.k, PowerMode.BFS), None
    elapsed = (time.perf_counter() - start) * 1e3
    _write(args.output, serialize_edge_list(gk, lg.labels), out)
    if args.json:
        doc = {"n": gk.n, "m_in": lg.graph.m, "m": gk.m, "k": args.k, "mode": args.mode,
               "rounds": rounds, "elapsed_ms": round(elapsed, 3)}
        print(json.dumps(doc), file=out.stderr if args.output in (None, "-") else out.stdout)
    return EXIT_OK


def cmd_solve(args, out: _Out) -> int:
    lg = _load(args)
    rep = min_k_ruling_set(lg.graph, args.k, args.method, max_exact_n=args.max_exact_n)
    return _emit_report(args, out, lg, _ruling_doc(lg, rep))


def cmd_solve_alpha(args, out: _Out) -> int:
    lg = _load(args)
    rep = alpha_ruling_set(lg.graph, args.alpha, args.method, args.seed)
    return _emit_report(args, out, lg, _ruling_doc(lg, rep))


def cmd_mds(args, out: _Out) -> int:
    lg = _load(args)
    start = time.perf_counter()
    if args.method == "exact":
        res = min_dominating_set(lg.graph, max_n=args.max_exact_n)
    else:
        res = greedy_dominating_set(lg.graph)
    elapsed = (time.perf_counter() - start) * 1e3
    valid = is_dominating(lg.graph, res.set)[0]
    doc = _report_dict(lg, {"k": 1}, args.method, res.set, valid, res.optimal, elapsed)
    return _emit_report(args, out, lg, doc)


def cmd_mis(args, out: _Out) -> int:
    lg = _load(args)
    start = time.perf_counter()
    res = luby_mis(lg.graph, args.seed) if args.method == "luby" else greedy_mis(lg.graph)
    elapsed = (time.perf_counter() - start) * 1e3
    valid = is_maximal_independent(lg.graph, res.set)[0]
    doc = _report_dict(lg, {"rounds": res.rounds}, args.method, res.set, valid, False, elapsed,
                       res.seed)
    return _emit_report(args, out, lg, doc)


def cmd_verify(args, out: _Out) -> int:
    lg = _load(args)
    s = parse_vertex_set(Path(args.set).read_text(encoding="utf-8"), lg)
    labels = lg.labels
    if args.k is not None:
        check = verify_k_ruling(lg.graph, s, args.k)
        doc = {"k": args.k, "valid": check.ok, "violators": [labels[v] for v in check.violators]}
    else:
        check = verify_alpha_beta(lg.graph, s, args.alpha, args.beta)
        doc = {
            "alpha": args.alpha,
            "beta": args.beta,
            "valid": check.ok,
            "close_pairs": [[labels[u], labels[w], d] for u, w, d in check.close_pairs],
            "violators": [labels[v] for v in check.uncovered],
        }
    if args.json:
        out.emit(json.dumps(doc))
    else:
        out.emit("valid" if check.ok else "invalid")
        if doc.get("close_pairs"):
            out.emit("too close: " + ", ".join(f"{u}-{w} (d={d})" for u, w, d in doc["close_pairs"]))
        if doc["violators"]:
            out.emit("uncovered: " + " ".join(doc["violators"]))
    return EXIT_OK if check.ok else EXIT_INVALID


def cmd_oracle(args, out: _Out) -> int:
    lg = _load(args)
    rep = brute_force_min_k_ruling(lg.graph, args.k, max_n=args.max_oracle_n)
    return _emit_report(args, out, lg, _ruling_doc(lg, rep))


def cmd_witness(args, out: _Out) -> int:
    families = [f.strip() for f in args.family.split(",") if f.strip()]
    w = find_beta_mismatch_witness(families, args.alpha, args.beta, args.budget, args.seed)
    if w is None:
        doc = {"alpha": args.alpha, "beta": args.beta, "found": False, "budget": args.budget}
        out.emit(json.dumps(doc) if args.json else f"no witness within {args.budget} instances")
        return EXIT_OK
    doc = {
        "alpha": args.alpha,
        "beta": args.beta,
        "found": True,
        "instance": w.instance,
        "index": w.index,
        "pipeline": w.pipeline,
        "n": w.graph.n,
        "edges": [list(e) for e in w.graph.sorted_edges()],
        "set": sorted(w.set),
        "close_pairs": [list(p) for p in w.check.close_pairs],
        "violators": list(w.check.uncovered),
    }
    if args.out:
        Path(f"{args.out}.edges").write_text(serialize_edge_list(w.graph), encoding="utf-8")
        Path(f"{args.out}.set").write_text(format_vertex_set(w.set, [str(v) for v in w.graph.vertices]) + "\n",
                                           encoding="utf-8")
    if args.json:
        out.emit(json.dumps(doc))
    else:
        out.emit(f"witness: {w.instance} (instance #{w.index}), pipeline {w.pipeline}")
        out.emit(f"set: {' '.join(map(str, sorted(w.set)))}")
        if w.check.close_pairs:
            out.emit("too close: " + ", ".join(f"{u}-{v} (d={d})" for u, v, d in w.check.close_pairs))
        if w.check.uncovered:
            out.emit("uncovered: " + " ".join(map(str, w.check.uncovered)))
    return EXIT_INVALID


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def bench_rows(families, sizes, ks, alphas, seeds, p, max_exact_n=DEFAULT_MAX_EXACT_N):
    for family in families:
        for n in sizes:
            for seed in seeds:
                rows = cols = None
                if family == "grid":
                    rows = cols = math.isqrt(n)
                spec = GeneratorSpec(family, n, p if family == "random_gnp" else None, seed, rows, cols)
                g = generate(spec)
                p_col = "" if spec.p is None else spec.p
                for k in ks:
                    for method in ("exact", "greedy"):
                        if method == "exact" and g.n > max_exact_n:
                            yield [family, n, p_col, seed, k, method, "", "cap", ""]
                            continue
                        rep = min_k_ruling_set(g, k, method, max_exact_n=max_exact_n)
                        yield [family, n, p_col, seed, k, method, rep.size, rep.valid,
                               f"{rep.elapsed_ms:.3f}"]
                for alpha in alphas:
                    for method in ("luby", "greedy"):
                        rep = alpha_ruling_set(g, alpha, method, seed)
                        yield [family, n, p_col, seed, alpha, f"alpha-{method}", rep.size, rep.valid,
                               f"{rep.elapsed_ms:.3f}"]


def cmd_bench(args, out: _Out) -> int:
    families = [f.strip() for f in args.families.split(",") if f.strip()]
    rows = bench_rows(families, _int_list(args.sizes), _int_list(args.ks), _int_list(args.alphas),
                      _int_list(args.seeds), args.p, args.max_exact_n)
    handle = out.stdout if args.output in (None, "-") else open(args.output, "w", newline="")
    try:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(BENCH_HEADER)
        for row in rows:
            writer.writerow(row)
    finally:
        if handle is not out.stdout:
            handle.close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rulingset", description="k-ruling and (alpha, alpha-1) ruling sets")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_cmd(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("-i", "--input", default="-", help="edge-list file (default: stdin)")
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        return p

    p = sub.add_parser("gen", help="generate a graph family")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--rows", type=int, default=None)
    p.add_argument("--cols", type=int, default=None)
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_gen)

    p = graph_cmd("power", "write the k-th power graph")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mode", choices=[m.value for m in PowerMode], default="bfs")
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_power)

    p = graph_cmd("solve", "minimum k-ruling set via power graph + dominating set")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=["exact", "greedy"], default="exact")
    p.add_argument("--max-exact-n", type=int, default=DEFAULT_MAX_EXACT_N)
    p.set_defaults(func=cmd_solve)

    p = graph_cmd("solve-alpha", "(alpha, alpha-1) ruling set via power graph + MIS")
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--method", choices=["luby", "greedy"], default="luby")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_solve_alpha)

    p = graph_cmd("mds", "minimum dominating set")
    p.add_argument("--method", choices=["exact", "greedy"], default="exact")
    p.add_argument("--max-exact-n", type=int, default=DEFAULT_MAX_EXACT_N)
    p.set_defaults(func=cmd_mds)

    p = graph_cmd("mis", "maximal independent set")
    p.add_argument("--method", choices=["luby", "greedy"], default="luby")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_mis)

    p = graph_cmd("verify", "check a vertex set against a ruling-set condition")
    p.add_argument("--set", required=True, help="file of whitespace-separated vertex labels")
    p.add_argument("--k", type=int)
    p.add_argument("--alpha", type=int)
    p.add_argument("--beta", type=int)
    p.set_defaults(func=cmd_verify)

    p = graph_cmd("oracle", "brute-force minimum k-ruling set")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max-oracle-n", type=int, default=DEFAULT_MAX_ORACLE_N)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("witness", help="search for a failing instance when beta != alpha-1")
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--beta", type=int, required=True)
    p.add_argument("--budget", type=int, default=100)
    p.add_argument("--family", default="path,cycle,random", help="comma-separated families")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None, help="write PREFIX.edges and PREFIX.set")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("bench", help="CSV of sizes and timings over generated instances")
    p.add_argument("--families", default="path,cycle,random_gnp")
    p.add_argument("--sizes", default="8,12,16")
    p.add_argument("--ks", default="1,2,3")
    p.add_argument("--alphas", default="2,3")
    p.add_argument("--seeds", default="0")
    p.add_argument("--p", type=float, default=0.2)
    p.add_argument("--max-exact-n", type=int, default=DEFAULT_MAX_EXACT_N)
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_bench)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    out = _Out(stdout or sys.stdout, stderr or sys.stderr)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.command == "verify" and (args.k is None) == (args.alpha is None or args.beta is None):
        out.note("verify: pass either --k K or both --alpha A --beta B")
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except SizeLimitError as exc:
        out.note(f"error: {exc}")
        return EXIT_CAP
    except (GraphError, ValueError, OSError) as exc:
        out.note(f"error: {exc}")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
