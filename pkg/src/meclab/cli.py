"""Command-line front end.

Exit status: 0 on success, 2 for invalid input (unparsable files, graphs
that are not chordal or not connected where a UCCG is required, bad
budgets), 3 when an internal invariant check fails.
"""
from __future__ import annotations

import argparse
import contextlib
import logging
import sys
from pathlib import Path

from . import _backend, bench, oracle
from .counting import mec_count
from .design import CostModel, Objective, active_best_target, parse_costs, passive_best_set
from .errors import InvariantViolation, MeclabError
from .generate import GenSpec, gen_chordal
from .graph import PdGraph, bits, format_graph, parse_graph, require_uccg
from .lazyiter import check_invariants, lazy_iter

VALUE_LABEL = {Objective.MEC: "worst_mec_size", Objective.EDGES: "worst_directed"}


class UsageError(MeclabError):
    pass


def _read_graph(path) -> PdGraph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse_graph(text)


def _fmt_set(nodes) -> str:
    return ",".join(str(x) for x in sorted(nodes))


def _fmt_edges(g: PdGraph) -> str:
    parts = [f"{a}-{b}" for a, b in g.undirected_edges()]
    parts += [f"{a}>{b}" for a, b in g.directed_edges()]
    return ",".join(sorted(parts, key=lambda s: tuple(int(t) for t in s.replace(">", "-").split("-"))))


def _iter_line(v, parents, graph) -> str:
    adj = graph.adj_masks()
    P = sum(1 << p for p in parents)
    children = [c for c in bits(adj[v]) if not P >> c & 1]
    fields = [f"parents={_fmt_set(parents)}", f"children={_fmt_set(children)}"]
    fields.append(f"directed={len(graph.directed_edges())}")
    fields.append(f"edges={_fmt_edges(graph)}")
    return " ".join(fields)


# -- command handlers ------------------------------------------------------

def cmd_count(args, out):
    g = _read_graph(args.graph)
    out.write(f"{mec_count(g)}\n")


def cmd_iter(args, out):
    g = _read_graph(args.graph)
    _check_node(g, args.node)
    for r in lazy_iter(g, args.node):
        check_invariants(r, g)
        out.write(_iter_line(args.node, r.parents, r.graph) + "\n")


def cmd_active(args, out):
    g = _read_graph(args.graph)
    obj = Objective.parse(args.objective)
    v, val = active_best_target(g, obj, jobs=args.jobs)
    out.write(f"node={v} {VALUE_LABEL[obj]}={val}\n")


def _cost_model(args, n) -> CostModel:
    if args.budget < 0:
        raise UsageError("budget must be nonnegative")
    if args.costs:
        try:
            text = Path(args.costs).read_text(encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot read {args.costs}: {exc.strerror}") from None
        return parse_costs(text, n, args.budget)
    return CostModel.unit(n, args.budget)


def cmd_passive(args, out):
    g = _read_graph(args.graph)
    obj = Objective.parse(args.objective)
    costs = _cost_model(args, g.n)
    targets, val = passive_best_set(g, costs, obj)
    out.write(f"targets={_fmt_set(targets)} {VALUE_LABEL[obj]}={val}\n")


def cmd_gen(args, out):
    if args.count < 1:
        raise UsageError("--count must be at least 1")
    if args.count > 1 and not args.out:
        raise UsageError("--count above 1 needs --out")
    graphs = [gen_chordal(GenSpec(args.nodes, args.density, args.seed + i)) for i in range(args.count)]
    if not args.out:
        out.write(format_graph(graphs[0]))
        return
    d = Path(args.out)
    try:
        d.mkdir(parents=True, exist_ok=True)
        for i, g in enumerate(graphs):
            p = d / f"graph_{i:03d}.txt"
            p.write_text(format_graph(g), encoding="utf-8")
            out.write(f"{p}\n")
    except OSError as exc:
        raise UsageError(f"cannot write to {d}: {exc.strerror}") from None


def cmd_bench(args, out):
    if args.reps < 1 or args.graphs < 1:
        raise UsageError("--reps and --graphs must be at least 1")
    backends = None
    if args.backend == "both":
        backends = sorted(_backend.available)
    elif args.backend:
        backends = [args.backend]
    try:
        rows = bench.run_suite(args.suite, args.nodes, args.density, args.seed, args.reps,
                               graphs=args.graphs, backends=backends)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    try:
        bench.write_csv(args.csv, args.suite, rows)
    except OSError as exc:
        raise UsageError(f"cannot write {args.csv}: {exc.strerror}") from None
    out.write(f"rows={len(rows)} csv={args.csv}\n")


def cmd_oracle_count(args, out):
    out.write(f"{oracle.oracle_count(_read_graph(args.graph))}\n")


def cmd_oracle_iter(args, out):
    g = _read_graph(args.graph)
    require_uccg(g, "oracle iter")
    _check_node(g, args.node)
    graphs = oracle.result_space(g, args.node)
    rows = sorted((tuple(sorted(r.parents(args.node))), r) for r in graphs)
    for parents, r in rows:
        out.write(_iter_line(args.node, parents, r) + "\n")


def cmd_oracle_active(args, out):
    g = _read_graph(args.graph)
    require_uccg(g, "oracle active")
    obj = Objective.parse(args.objective)
    v, val = oracle.oracle_active(g, obj.value)
    out.write(f"node={v} {VALUE_LABEL[obj]}={val}\n")


def cmd_oracle_passive(args, out):
    g = _read_graph(args.graph)
    require_uccg(g, "oracle passive")
    obj = Objective.parse(args.objective)
    costs = _cost_model(args, g.n)
    targets, val = oracle.oracle_passive_best(g, costs.costs, costs.budget, obj.value)
    out.write(f"targets={_fmt_set(targets)} {VALUE_LABEL[obj]}={val}\n")


def _check_node(g, v):
    if not 0 <= v < g.n:
        raise UsageError(f"--node must be in 0..{g.n - 1}")


# -- parser ----------------------------------------------------------------

def _objective(p):
    p.add_argument("--objective", choices=["mec", "edges"], required=True)


def _passive_flags(p):
    p.add_argument("--budget", type=int, required=True)
    p.add_argument("--costs", help="file of 'node cost' lines; unlisted nodes cost 1")
    _objective(p)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="meclab", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="log diagnostics to stderr")
    parser.add_argument("--backend", dest="kernels", choices=["python", "compiled"],
                        help="kernel implementation for all commands (default: compiled if built)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="number of DAGs represented by a chain graph")
    p.add_argument("graph")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("iter", help="intervention results for one target node")
    p.add_argument("graph")
    p.add_argument("--node", type=int, required=True)
    p.set_defaults(func=cmd_iter)

    p = sub.add_parser("active", help="best single intervention target")
    p.add_argument("graph")
    _objective(p)
    p.add_argument("--jobs", type=int, default=1, help="worker processes for the roots")
    p.set_defaults(func=cmd_active)

    p = sub.add_parser("passive", help="best budgeted set of single-node interventions")
    p.add_argument("graph")
    _passive_flags(p)
    p.set_defaults(func=cmd_passive)

    p = sub.add_parser("gen", help="random connected chordal graphs")
    p.add_argument("--nodes", type=int, required=True)
    p.add_argument("--density", type=float, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("oracle", help="brute-force reference answers for small graphs")
    osub = p.add_subparsers(dest="oracle_command", required=True)
    q = osub.add_parser("count")
    q.add_argument("graph")
    q.set_defaults(func=cmd_oracle_count)
    q = osub.add_parser("iter")
    q.add_argument("graph")
    q.add_argument("--node", type=int, required=True)
    q.set_defaults(func=cmd_oracle_iter)
    q = osub.add_parser("active")
    q.add_argument("graph")
    _objective(q)
    q.set_defaults(func=cmd_oracle_active)
    q = osub.add_parser("passive")
    q.add_argument("graph")
    _passive_flags(q)
    q.set_defaults(func=cmd_oracle_passive)

    p = sub.add_parser("bench", help="time algorithms on generated graphs, write CSV")
    p.add_argument("--suite", choices=["lazyiter", "count"], required=True)
    p.add_argument("--nodes", type=int, required=True)
    p.add_argument("--density", type=float, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--reps", type=int, required=True)
    p.add_argument("--csv", required=True)
    p.add_argument("--graphs", type=int, default=1, help="graphs to generate, seeds seed..seed+graphs-1")
    p.add_argument("--backend", choices=["python", "compiled", "both"],
                   help="kernel implementation(s) to time (default: the active one)")
    p.set_defaults(func=cmd_bench)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=err)
    saved = _backend.kernels
    try:
        if args.kernels:
            try:
                _backend.kernels = _backend.get(args.kernels)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
        args.func(args, out)
    except InvariantViolation as exc:
        err.write(f"meclab: internal invariant violated: {exc}\n")
        return 3
    except MeclabError as exc:
        err.write(f"meclab: {exc}\n")
        return 2
    except Exception as exc:  # anything else is a bug
        err.write(f"meclab: internal error: {exc!r}\n")
        return 3
    finally:
        _backend.kernels = saved
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
