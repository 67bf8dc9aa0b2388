"""Command line entry point: ``blocktrans <command> --n N ...``.

Exit codes: 0 all checks pass, 1 at least one check fails, 2 usage or
bound error.  Reports go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence, TextIO

from . import aut
from .cuts import PartitionClass, as_permutation, classify, enumerate_tn
from .graphs import (
    DEFAULT_MAX_CAYLEY_N,
    BoundError,
    Graph,
    build_bt_graph,
    build_btv_graph,
    build_cayley,
    export,
    hamiltonian_cycle_V,
    validate_cycle,
)
from .perm import Permutation
from .report import all_passed, render_json, render_text
from .sortdist import distance, sorting_sequence
from .verify import Options, run_suite, suite_names

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _graph_for(kind: str, n: int, max_cayley_n: int | None, convention: str = "left") -> Graph:
    if kind == "bt":
        return build_bt_graph(n)
    if kind == "btv":
        if n < 4:
            raise UsageError("btv needs n >= 4")
        return build_btv_graph(n)
    if kind == "cayley":
        bound = max_cayley_n if max_cayley_n is not None else DEFAULT_MAX_CAYLEY_N
        return build_cayley(n, convention, max_n=bound)  # type: ignore[arg-type]
    raise UsageError(f"unknown graph kind {kind!r}")


def cmd_enumerate(args: argparse.Namespace, out: TextIO) -> int:
    if args.n < 2:
        raise UsageError("enumerate needs n >= 2")
    rows = [c for c in enumerate_tn(args.n)
            if args.cls is None or classify(c) is PartitionClass(args.cls)]
    if args.json:
        doc = [dict(c.to_dict(), **{"class": str(classify(c)), "perm": str(as_permutation(c))})
               for c in rows]
        out.write(json.dumps(doc) + "\n")
    else:
        for c in rows:
            out.write(f"{c}  {classify(c)}  {as_permutation(c)}\n")
    return EXIT_OK


def cmd_graph(args: argparse.Namespace, out: TextIO) -> int:
    if args.n < 2:
        raise UsageError("graph needs n >= 2")
    g = _graph_for(args.kind, args.n, args.max_cayley_n, args.convention)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            export(g, args.format, fh)
    else:
        export(g, args.format, out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    opts = Options(threads=args.threads, max_cayley_n=args.max_cayley_n,
                   samples=args.samples, seed=args.seed)
    claims, notes = run_suite(args.suite, args.n, opts)
    for note in notes:
        print(note, file=sys.stderr)
    out.write(render_json(claims) if args.json else render_text(claims))
    return EXIT_OK if all_passed(claims) else EXIT_FAIL


def cmd_distance(args: argparse.Namespace, out: TextIO) -> int:
    p = Permutation.parse(args.perm)
    if p.n != args.n:
        raise UsageError(f"--perm has degree {p.n}, expected {args.n}")
    if not args.trace:
        d = distance(p)
        out.write(json.dumps({"perm": str(p), "distance": d}) + "\n" if args.json else f"{d}\n")
        return EXIT_OK
    trace = sorting_sequence(p)
    if args.json:
        doc = {"perm": str(p), "distance": len(trace),
               "moves": [m.to_dict() for m in trace.moves],
               "states": [str(s) for s in trace.replay()[1:]]}
        out.write(json.dumps(doc) + "\n")
    else:
        out.write(f"{len(trace)}\n")
        for line in trace.lines():
            out.write(line + "\n")
    return EXIT_OK


def _cycles(mapping: Sequence[int]) -> str:
    seen, parts = set(), []
    for v in range(len(mapping)):
        if v in seen or mapping[v] == v:
            continue
        cyc, w = [], v
        while w not in seen:
            seen.add(w)
            cyc.append(w)
            w = mapping[w]
        parts.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(parts) or "()"


def cmd_aut(args: argparse.Namespace, out: TextIO) -> int:
    n, kind = args.n, args.kind
    g = _graph_for(kind, n, args.max_cayley_n)
    names: dict = {}
    if kind in ("bt", "btv"):
        for e, vm in aut.dihedral_as_vertex_maps(n, graph=build_bt_graph(n)):
            if kind == "bt":
                names[vm] = e
            else:
                full = build_bt_graph(n)
                names[aut.VertexMap(tuple(
                    g.index[full.legend[vm(full.index[c])]] for c in g.legend))] = e
    if kind == "cayley":
        iota = g.index[Permutation(tuple(range(1, n + 1)))]
        group = aut.stabilizer_fixing(g, [iota], threads=args.threads,
                                      max_vertices=max(aut.DEFAULT_MAX_VERTICES, g.vertex_count))
        for e in aut.dihedral_group(n, "left"):
            names[aut.VertexMap(tuple(g.index[aut.act_on_perm(e, p)] for p in g.legend))] = e
        group.generators = aut.pick_generators(group.elements, key=aut.dihedral_name_key(names))
        total = group.order * g.vertex_count
        summary = {"graph": g.name, "stabilizer_of_identity_order": group.order,
                   "order": total,
                   "generators": [str(names.get(x, _cycles(x.mapping))) for x in group.generators]}
        if args.json:
            out.write(json.dumps(summary) + "\n")
        else:
            out.write(f"order {total} (= {g.vertex_count} * stabilizer of identity {group.order}); "
                      f"stabilizer generators: {', '.join(summary['generators'])}\n")
        return EXIT_OK
    group = aut.automorphism_group(g, threads=args.threads, generator_key=aut.dihedral_name_key(names))
    labels = [str(names[x]) if x in names else _cycles(x.mapping) for x in group.generators]
    if args.json:
        out.write(json.dumps({"graph": g.name, "order": group.order, "generators": labels}) + "\n")
    else:
        out.write(f"order {group.order}; generators: {', '.join(labels) if labels else '(none)'}\n")
    return EXIT_OK


def cmd_hampath(args: argparse.Namespace, out: TextIO) -> int:
    if args.n < 5:
        raise UsageError("hampath needs n >= 5")
    cycle = hamiltonian_cycle_V(args.n)
    g = build_btv_graph(args.n)
    problems = validate_cycle(g, cycle)
    ok = not problems and len(cycle) == 2 * (args.n + 1)
    if args.json:
        out.write(json.dumps({"n": args.n, "cycle": [str(c) for c in cycle],
                              "valid": ok, "problems": problems}) + "\n")
    else:
        for c in cycle:
            out.write(f"{c}\n")
        verdict = "yes" if ok else "NO: " + "; ".join(problems)
        out.write(f"# {len(cycle)}-vertex cycle back to {cycle[0]}; "
                  f"every consecutive pair adjacent in BTbar_{args.n}(V): {verdict}\n")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="blocktrans", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--json", action="store_true")
        p.add_argument("--threads", type=int, default=os.cpu_count() or 1)
        p.add_argument("--max-cayley-n", type=int, default=None)

    p = sub.add_parser("enumerate", help="list T_n with partition classes")
    common(p)
    p.add_argument("--class", dest="cls", choices=[c.value for c in PartitionClass])
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("graph", help="export a graph")
    common(p)
    p.add_argument("--kind", choices=["bt", "cayley", "btv"], default="bt")
    p.add_argument("--format", choices=["edges", "dot", "json"], default="edges")
    p.add_argument("--convention", choices=["left", "right"], default="left",
                   help="Cayley graph convention (bt is always right-invariant)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("verify", help="re-check claims, one CLAIM line each")
    common(p)
    p.add_argument("--suite", choices=suite_names(), default="all")
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("distance", help="block transposition distance of a permutation")
    common(p)
    p.add_argument("--perm", required=True)
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("aut", help="automorphism group of a graph")
    common(p)
    p.add_argument("--graph", "--kind", dest="kind", choices=["bt", "btv", "cayley"], default="bt")
    p.set_defaults(func=cmd_aut)

    p = sub.add_parser("hampath", help="Hamiltonian cycle of BTbar(V)")
    common(p)
    p.set_defaults(func=cmd_hampath)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = out if out is not None else sys.stdout
    try:
        return args.func(args, out)
    except (UsageError, BoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
