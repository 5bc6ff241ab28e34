"""Command-line entry point: ``cdlabel <subcommand> ...``.

Exit codes: 0 success, 1 negative answer (labeling invalid, unsatisfiable),
2 budget exhausted, 64 usage error, 70 falsification event, 74 I/O error.
"""
from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path
from typing import Sequence

from . import constructions as cons
from .bounds import best_upper_bound
from .cnf import CnfFormula, DimacsError, dump_dimacs, parse_dimacs
from .conflict import chromatic_lower_bound, derive_forced, dump_witnesses
from .errors import Falsification
from .graph import Graph, GraphFormatError, dump_graph, load_graph, split_partition
from .labeling import (
    distinct_value_count,
    dump_labeling,
    dump_lists,
    load_labeling,
    load_lists,
    verify_list,
    verify_multiset,
    verify_sum,
)
from .reductions import (
    WITNESS_MAPS,
    ReductionOutput,
    reduce_monotone_nae,
    reduce_planar_3sat,
    reduce_t_colorability,
)
from .roles import dump_roles, load_roles
from .solver import (
    Budget,
    CnfExportError,
    DecisionInstance,
    compute_dis,
    compute_dis_s,
    decide,
    dump_varmap,
    export_cnf,
)

EXIT_OK, EXIT_NO, EXIT_BUDGET = 0, 1, 2
EXIT_USAGE, EXIT_FALSIFIED, EXIT_IO = 64, 70, 74

FAMILIES = ("t1", "tj1", "t6", "split-greedy", "split-strong", "bipartite-2")
REDUCTIONS = {"planar3sat": "planar3sat", "mnae3sat": "nae", "tcolor": "tcolor"}


class UsageError(Exception):
    pass


class InputError(Exception):
    """Unreadable or malformed input file."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse exits with 2 by default
        raise UsageError(message)


class Out:
    """Human output prints free text; porcelain prints ``key<TAB>value`` lines."""

    def __init__(self, porcelain: bool):
        self.porcelain = porcelain

    def fact(self, key: str, value, human: str | None = None) -> None:
        if self.porcelain:
            print(f"{key}\t{value}")
        else:
            print(human if human is not None else f"{key}: {value}")

    def text(self, s: str) -> None:
        if not self.porcelain:
            print(s)


# ------------------------------------------------------------------ file helpers


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from None


def _write(path: str | Path, text: str) -> None:
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from None


def _graph(path: str) -> Graph:
    try:
        return load_graph(_read(path))
    except GraphFormatError as exc:
        raise InputError(f"{path}: {exc}") from None


def _labeling(path: str, g: Graph) -> list[int]:
    try:
        f = load_labeling(_read(path))
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from None
    if len(f) != g.n:
        raise InputError(f"{path}: {len(f)} labels for a graph on {g.n} vertices")
    return f


def _lists(path: str, g: Graph) -> list[frozenset[int]]:
    try:
        lists = load_lists(_read(path))
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from None
    if len(lists) != g.n:
        raise InputError(f"{path}: {len(lists)} lists for a graph on {g.n} vertices")
    return lists


def _formula(path: str) -> CnfFormula:
    try:
        return parse_dimacs(_read(path))
    except DimacsError as exc:
        raise InputError(f"{path}: {exc}") from None


def _outdir(path: str) -> Path:
    d = Path(path)
    try:
        d.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from None
    return d


def _budget(args) -> Budget:
    return Budget(max_nodes=args.max_nodes, max_seconds=args.max_seconds)


def _load_meta(d: Path) -> dict[str, str]:
    meta = {}
    for line in _read(str(d / "meta.txt")).splitlines():
        if line.strip():
            key, _, value = line.partition("\t")
            meta[key] = value
    return meta


def _dump_meta(meta: dict) -> str:
    return "".join(f"{k}\t{v}\n" for k, v in meta.items())


def _report_budget(out: Out, b: Budget) -> None:
    out.fact("budget_nodes", b.max_nodes, f"budget: {b.max_nodes} nodes, {b.max_seconds:g} s")
    if out.porcelain:
        out.fact("budget_seconds", f"{b.max_seconds:g}")


# ------------------------------------------------------------------ subcommands


def cmd_verify(args, out: Out) -> int:
    g = _graph(args.graph)
    f = _labeling(args.labeling, g)
    if args.mode == "list":
        if not args.lists:
            raise UsageError("--mode list needs --lists")
        bad = verify_list(g, f, _lists(args.lists, g))
    elif args.mode == "multiset":
        bad = verify_multiset(g, f)
    else:
        bad = verify_sum(g, f)
    if bad is None:
        out.fact("result", "ok")
        return EXIT_OK
    out.fact("result", "violation", f"violation: {bad}")
    if out.porcelain:
        out.fact("certificate", bad)
    return EXIT_NO


def cmd_solve(args, out: Out) -> int:
    g = _graph(args.graph)
    if (args.k is None) == (args.lists is None):
        raise UsageError("give exactly one of --k and --lists")
    if args.lists:
        inst = DecisionInstance.with_lists(g, _lists(args.lists, g), args.mode)
    else:
        if args.k < 1:
            raise UsageError("--k must be positive")
        inst = DecisionInstance.uniform(g, args.k, args.mode)
    budget = _budget(args)
    res = decide(inst, budget)
    _report_budget(out, budget)
    out.fact("nodes", res.stats.nodes)
    if res.status == "budget":
        out.fact("result", "BUDGET", "budget exhausted (unknown)")
        return EXIT_BUDGET
    if res.status == "unsat":
        out.fact("result", "UNSAT")
        return EXIT_NO
    out.fact("result", "SAT")
    if args.out:
        _write(args.out, dump_labeling(res.labeling))
        out.fact("witness_file", args.out)
    else:
        out.fact("witness", " ".join(map(str, res.labeling)))
    return EXIT_OK


def _cmd_minimise(args, out: Out, strong: bool) -> int:
    g = _graph(args.graph)
    budget = _budget(args)
    res = (compute_dis_s if strong else compute_dis)(g, budget)
    _report_budget(out, budget)
    name = "dis_s" if strong else "dis"
    if res.status == "budget":
        out.fact("result", "BUDGET", f"budget exhausted: {res.lower} <= {name} <= {res.upper}")
        out.fact("lower", res.lower)
        out.fact("upper", res.upper)
        return EXIT_BUDGET
    out.fact(name, res.value, str(res.value))
    witness = res.revaluation if strong else res.witness
    if strong and out.porcelain:
        out.fact("coloring", " ".join(map(str, res.witness)))
    if args.out:
        _write(args.out, dump_labeling(witness))
        out.fact("witness_file", args.out)
    else:
        out.fact("witness", " ".join(map(str, witness)))
    return EXIT_OK


def cmd_bounds(args, out: Out) -> int:
    report = best_upper_bound(_graph(args.graph))
    print(report.porcelain() if out.porcelain else report.table(), end="" if out.porcelain else "\n")
    return EXIT_OK


def cmd_conflict_lb(args, out: Out) -> int:
    g = _graph(args.graph)
    cg = derive_forced(g)
    budget = _budget(args)
    bound = chromatic_lower_bound(cg, budget)
    out.fact("bound", bound.value, f"dis >= {bound.value} ({bound.kind})")
    out.fact("kind", bound.kind)
    out.fact("clique", " ".join(map(str, bound.clique)))
    out.fact("forced_pairs", len(cg.witnesses))
    if bound.coloring is not None and out.porcelain:
        out.fact("coloring", " ".join(map(str, bound.coloring)))
    if args.out:
        d = _outdir(args.out)
        _write(d / "conflict.txt", dump_graph(cg.graph, ["forced-inequality graph"]))
        _write(d / "witnesses.txt", dump_witnesses(cg))
        out.fact("written", str(d))
    return EXIT_OK


def _gen_graph_input(args, rng: random.Random) -> Graph:
    if args.graph:
        return _graph(args.graph)
    if args.family.startswith("split"):
        return cons.random_split_graph(args.omega, args.s_size, rng)
    raise UsageError(f"family {args.family} needs --graph")


def cmd_gen(args, out: Out) -> int:
    d = _outdir(args.out)
    rng = random.Random(args.seed)
    meta: dict[str, object] = {"family": args.family}
    lists = None
    fam = args.family
    if fam in ("t1", "tj1", "t6"):
        if args.t is None:
            raise UsageError(f"family {fam} needs --t")
        meta["t"] = args.t
        if fam == "t1":
            gen = cons.gen_t1(args.t)
            g, roles, f, lists = gen.graph, gen.roles, gen.canonical, gen.lists
        elif fam == "tj1":
            gen = cons.gen_tj1(args.t, pruned=not args.full)
            meta["pruned"] = int(not args.full)
            g, roles, f = gen.graph, gen.roles, None
        else:
            gen = cons.gen_t6(args.t, max_t=args.max_t)
            g, roles, f = gen.graph, gen.roles, gen.strong
    else:
        g = _gen_graph_input(args, rng)
        meta["seed"] = args.seed
        if fam == "bipartite-2":
            f = cons.bipartite_two_value_labeling(g)
            roles = [f"v{v}" for v in range(g.n)]
        else:
            part = split_partition(g)
            if part is None:
                raise UsageError("input graph is not split")
            roles = [("K" if v in part.clique else "S") + str(v) for v in range(g.n)]
            f = cons.split_greedy_labeling(g) if fam == "split-greedy" else cons.split_strong_labeling(g)
    _write(d / "graph.txt", dump_graph(g, [f"family {fam}"]))
    _write(d / "roles.txt", dump_roles(roles))
    if f is not None:
        _write(d / "labeling.txt", dump_labeling(f))
    if lists is not None:
        _write(d / "lists.txt", dump_lists(lists))
    _write(d / "meta.txt", _dump_meta(meta))
    out.fact("family", fam)
    out.fact("n", g.n)
    out.fact("m", g.m)
    out.fact("written", str(d))
    return EXIT_OK


def cmd_certify(args, out: Out) -> int:
    d = Path(args.dir)
    meta = _load_meta(d)
    fam = args.family
    if meta.get("family") != fam:
        raise UsageError(f"{d} holds family {meta.get('family')!r}, not {fam!r}")
    g = _graph(str(d / "graph.txt"))
    roles = load_roles(_read(str(d / "roles.txt")))
    if len(roles) != g.n:
        raise InputError("role map size does not match the graph")
    rng = random.Random(args.seed)
    ok = True
    if fam in ("t1", "tj1", "t6"):
        t = int(meta["t"])
        if fam == "t1":
            gen = cons.gen_t1(t)
        elif fam == "tj1":
            gen = cons.gen_tj1(t, pruned=meta.get("pruned", "1") == "1")
        else:
            gen = cons.gen_t6(t, max_t=max(t, 6))
        same = gen.graph == g and gen.roles == roles
        out.fact("matches_generator", same)
        ok &= same
        shipped = d / "labeling.txt"
        if fam != "tj1" and shipped.exists():
            file_ok = verify_sum(g, _labeling(str(shipped), g)) is None
            out.fact("labeling_verifies", file_ok)
            ok &= file_ok
        if fam == "t1":
            cert = cons.certify_list_gap(gen)
            out.fact("canonical_verifies", cert.canonical_verifies)
            out.fact("max_label", cert.max_label)
            out.fact("conflict_bound", cert.conflict_bound)
            out.fact("dis_certified", cert.dis_certified)
            ok &= cert.dis_certified
            via = {}
            for _ in range(args.samples):
                r = cons.certify_t1_list_obstruction(gen, cons.random_list_labeling(gen, rng))
                via[r.via] = via.get(r.via, 0) + 1
            out.fact("refuted", args.samples)
            out.fact("refuted_via", " ".join(f"{k}={v}" for k, v in sorted(via.items())))
        elif fam == "tj1":
            structure = cons.check_bipartite_hard(gen)
            out.fact("structure_ok", structure)
            ok &= structure
            for _ in range(args.samples):
                cons.refute_tj1(gen, cons.random_small_labeling(gen, rng))
            out.fact("refuted", args.samples)
        else:
            structure = cons.check_strong_gap(gen)
            good = verify_sum(g, gen.strong) is None and distinct_value_count(gen.strong) == 2
            out.fact("structure_ok", structure)
            out.fact("strong_labeling_ok", good)
            out.fact("counting_lower_bound", cons.t6_counting_lower_bound(t))
            ok &= structure and good
    else:
        f = _labeling(str(d / "labeling.txt"), g)
        valid = verify_sum(g, f) is None
        out.fact("labeling_verifies", valid)
        ok &= valid
        if fam == "split-greedy":
            part = split_partition(g)
            cap = max(1, len(part.clique)) ** 2 if part else 0
            out.fact("max_label", max(f, default=0))
            out.fact("omega_squared", cap)
            ok &= part is not None and max(f, default=1) <= cap
        elif fam == "split-strong":
            out.fact("distinct_values", distinct_value_count(f))
        else:
            out.fact("distinct_values", distinct_value_count(f))
            ok &= distinct_value_count(f) <= 2
    out.fact("certified", ok)
    return EXIT_OK if ok else EXIT_NO


def _build_reduction(kind: str, source: str, t: int | None) -> ReductionOutput:
    if kind == "tcolor":
        if t is None:
            raise UsageError("tcolor needs --t")
        return reduce_t_colorability(_graph(source), t)
    phi = _formula(source)
    return reduce_planar_3sat(phi) if kind == "planar3sat" else reduce_monotone_nae(phi)


def cmd_reduce(args, out: Out) -> int:
    kind = REDUCTIONS[args.type]
    red = _build_reduction(kind, args.input, args.t)
    d = _outdir(args.out)
    _write(d / "graph.txt", dump_graph(red.graph, [f"reduction {args.type}"]))
    _write(d / "roles.txt", dump_roles(red.roles))
    _write(d / "meta.txt", _dump_meta({"type": args.type, **red.params}))
    out.fact("type", args.type)
    out.fact("n", red.graph.n)
    out.fact("m", red.graph.m)
    out.fact("max_degree", red.graph.max_degree)
    for k, v in red.params.items():
        out.fact(k, v)
    out.fact("written", str(d))
    return EXIT_OK


def _load_assignment(path: str, num_vars: int) -> dict[int, bool]:
    """Signed literals, whitespace separated; a trailing 0 and a leading ``v`` are ignored."""
    gamma: dict[int, bool] = {}
    for tok in _read(path).split():
        if tok in ("v", "s", "SAT"):
            continue
        try:
            lit = int(tok)
        except ValueError:
            raise InputError(f"{path}: bad literal {tok!r}") from None
        if lit == 0:
            continue
        if abs(lit) > num_vars:
            raise InputError(f"{path}: variable {abs(lit)} out of range")
        gamma[abs(lit)] = lit > 0
    return gamma


def _dump_assignment(gamma: dict[int, bool]) -> str:
    return " ".join(str(x if gamma[x] else -x) for x in sorted(gamma)) + " 0\n"


def cmd_witness_map(args, out: Out) -> int:
    kind = REDUCTIONS[args.type]
    red = _build_reduction(kind, args.source, args.t)
    forward, backward = WITNESS_MAPS[kind]
    if args.direction == "forward":
        if kind == "tcolor":
            witness = _labeling(args.witness, red.source)
        else:
            witness = _load_assignment(args.witness, red.source.num_vars)
        f = forward(red, witness)
        valid = verify_sum(red.graph, f) is None
        text = dump_labeling(f)
        out.fact("labeling_verifies", valid)
        status = EXIT_OK if valid else EXIT_NO
    else:
        f = _labeling(args.witness, red.graph)
        try:
            back = backward(red, f)
        except ValueError as exc:
            out.fact("result", "invalid", f"invalid labeling: {exc}")
            return EXIT_NO
        text = dump_labeling(back) if kind == "tcolor" else _dump_assignment(back)
        status = EXIT_OK
    if args.out:
        _write(args.out, text)
        out.fact("written", args.out)
    else:
        out.fact("witness", text.strip().replace("\n", " "))
    return status


def cmd_export_cnf(args, out: Out) -> int:
    g = _graph(args.graph)
    if args.k < 1:
        raise UsageError("--k must be positive")
    try:
        export = export_cnf(DecisionInstance.uniform(g, args.k, "sum"), args.limit)
    except CnfExportError as exc:
        out.fact("result", "too-large", f"cannot export: {exc}")
        return EXIT_NO
    dimacs = dump_dimacs(export.formula, [f"closed distinguishing labeling, k={args.k}"])
    if args.out:
        _write(f"{args.out}.cnf", dimacs)
        _write(f"{args.out}.map", dump_varmap(export))
        out.fact("variables", export.formula.num_vars)
        out.fact("clauses", len(export.formula.clauses))
        out.fact("written", f"{args.out}.cnf {args.out}.map")
    else:
        sys.stdout.write(dimacs)
    return EXIT_OK


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--porcelain", action="store_true", help="key<TAB>value output")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled experiments")
    common.add_argument("--max-nodes", type=int, default=10**8, help="search node budget")
    common.add_argument("--max-seconds", type=float, default=60.0, help="search time budget")

    p = _Parser(prog="cdlabel", description="Closed distinguishing labelings of graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("verify", parents=[common], help="check a labeling")
    s.add_argument("graph")
    s.add_argument("labeling")
    s.add_argument("--mode", choices=("sum", "multiset", "list"), default="sum")
    s.add_argument("--lists")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("solve", parents=[common], help="decide whether labels 1..k (or lists) suffice")
    s.add_argument("graph")
    s.add_argument("--k", type=int)
    s.add_argument("--lists")
    s.add_argument("--mode", choices=("sum", "multiset"), default="sum")
    s.add_argument("-o", "--out", help="write the witness labeling here")
    s.set_defaults(func=cmd_solve)

    for name, strong in (("dis", False), ("dis-s", True)):
        s = sub.add_parser(name, parents=[common], help=f"compute {name}")
        s.add_argument("graph")
        s.add_argument("-o", "--out", help="write the witness labeling here")
        s.set_defaults(func=lambda a, o, strong=strong: _cmd_minimise(a, o, strong))

    s = sub.add_parser("bounds", parents=[common], help="closed-form upper bounds")
    s.add_argument("graph")
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("conflict-lb", parents=[common], help="forced-inequality lower bound")
    s.add_argument("graph")
    s.add_argument("-o", "--out", help="directory for the conflict graph and witnesses")
    s.set_defaults(func=cmd_conflict_lb)

    s = sub.add_parser("gen", parents=[common], help="generate an extremal family member")
    s.add_argument("family", choices=FAMILIES)
    s.add_argument("--t", type=int)
    s.add_argument("--full", action="store_true", help="tj1: all subset pairs instead of the pruned set")
    s.add_argument("--max-t", type=int, default=6, help="t6 size guard")
    s.add_argument("--graph", help="input graph for split/bipartite families")
    s.add_argument("--omega", type=int, default=4, help="random split graph clique size")
    s.add_argument("--s-size", type=int, default=6, help="random split graph independent set size")
    s.add_argument("-o", "--out", required=True, help="output directory")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("certify", parents=[common], help="run a family's certifier on a generated directory")
    s.add_argument("family", choices=FAMILIES)
    s.add_argument("dir")
    s.add_argument("--samples", type=int, default=1000, help="random labelings for the refuters")
    s.set_defaults(func=cmd_certify)

    s = sub.add_parser("reduce", parents=[common], help="compile a hardness reduction")
    s.add_argument("type", choices=tuple(REDUCTIONS))
    s.add_argument("input", help="DIMACS formula, or graph file for tcolor")
    s.add_argument("--t", type=int)
    s.add_argument("-o", "--out", required=True, help="output directory")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("witness-map", parents=[common], help="map witnesses through a reduction")
    s.add_argument("type", choices=tuple(REDUCTIONS))
    s.add_argument("direction", choices=("forward", "backward"))
    s.add_argument("source", help="the reduction input (formula or graph)")
    s.add_argument("witness", help="assignment/colouring (forward) or labeling (backward)")
    s.add_argument("--t", type=int)
    s.add_argument("-o", "--out")
    s.set_defaults(func=cmd_witness_map)

    s = sub.add_parser("export-cnf", parents=[common], help="DIMACS encoding of a k-labeling instance")
    s.add_argument("graph")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--limit", type=int, default=12, help="max symmetric-difference size per edge")
    s.add_argument("-o", "--out", help="prefix for PREFIX.cnf and PREFIX.map")
    s.set_defaults(func=cmd_export_cnf)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"cdlabel: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    out = Out(getattr(args, "porcelain", False))
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"cdlabel: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InputError as exc:
        print(f"cdlabel: input error: {exc}", file=sys.stderr)
        return EXIT_IO
    except Falsification as exc:
        print("cdlabel: FALSIFICATION: a certifier contradicted a claimed property", file=sys.stderr)
        print(f"cdlabel: {exc}", file=sys.stderr)
        return EXIT_FALSIFIED
    except ValueError as exc:
        print(f"cdlabel: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
