"""Command-line front end: ``symdepth <command> ...``.

Exit status is 0 when every non-skipped verification row passes, 1 when some
row fails and 2 on invalid input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from dataclasses import asdict

from . import bipartite as bp
from .betti import DEFAULT_LATTICE_CAP, LatticeTooLarge, betti_table, depth_rows, graph_power
from .graph import Graph, GraphError, parse_graph
from .linalg import FieldSpec
from .monomial import MonomialIdeal
from .simplicial import (ComplexError, SimplicialComplex, reduced_homology_dims,
                         stanley_reisner_complex)
from .symbolic import symbolic_power
from .verify import (DEFAULT_ROW_TIMEOUT, LEMMAS, VERIFY_LATTICE_CAP, run_conjecture_scan,
                     verify_cycle, verify_example_w, verify_lemma, verify_whisker)


def _ints(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(",") if x.strip())


def _load_json(path: str) -> dict:
    with open(path) as fh:
        return json.load(fh)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def cmd_symbolic(args) -> int:
    G = parse_graph(args.graph)
    I = symbolic_power(G, args.s, args.method)
    if args.format == "json":
        _emit(json.dumps(I.to_json()), args.out)
    else:
        _emit(f"{len(I.gens)} generators\n" + "\n".join(str(MonomialIdeal(I.n, (g,)))[1:-1]
                                                      for g in I.gens), args.out)
    return 0


def cmd_homology(args) -> int:
    if args.complex:
        delta = SimplicialComplex.from_json(_load_json(args.complex))
    else:
        delta = stanley_reisner_complex(MonomialIdeal.from_json(_load_json(args.ideal)))
    h = reduced_homology_dims(delta, args.field)
    print(json.dumps({"field": str(args.field), "reduced_homology": {str(q): v for q, v in h.items()}}))
    return 0


def cmd_depth(args) -> int:
    if args.ideal:
        I = MonomialIdeal.from_json(_load_json(args.ideal))
    else:
        if args.s is None:
            raise SystemExit("--graph needs --s")
        I = graph_power(parse_graph(args.graph), args.s, args.kind)
    table = betti_table(I, args.field, args.cap)
    out = {"vars": I.n, "depth": table.depth, "pd": table.pd, "field": str(args.field)}
    if args.betti:
        out["betti"] = {str(i): v for i, v in sorted(table.totals().items())}
    print(json.dumps(out))
    return 0


def cmd_table(args) -> int:
    G = parse_graph(args.graph)
    rows = depth_rows(G, args.kind, args.smax, args.field, args.cap, s_min=args.smin)
    cols = ["s", "depth", "pd", "field", "method", "seconds"]
    if args.format == "json":
        text = json.dumps([asdict(r) for r in rows], indent=2)
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for r in rows:
            w.writerow([r.s, r.depth, r.pd, r.field, r.method, f"{r.seconds:.3f}"])
        text = buf.getvalue().rstrip("\n")
    else:
        lines = [f"{args.kind} powers of {args.graph}", "  s  depth  pd  field     seconds"]
        lines += [f"{r.s:3d}  {r.depth:5d}  {r.pd:2d}  {r.field:8s}  {r.seconds:7.2f}" for r in rows]
        text = "\n".join(lines)
    _emit(text, args.out)
    return 0


def cmd_bc(args) -> int:
    G = parse_graph(args.graph)
    b, w = bp.bc(G)
    bprime, wp = bp.bc_prime(G)
    data = {"bc": b, "bc_witness": w.to_json(), "bc_prime": bprime, "bc_prime_witness": wp.to_json()}
    if args.witnesses:
        data["witnesses"] = [bp.with_bouquets(G, x).to_json() for x in bp.maximal_induced_bipartite(G)]
    if args.format == "json":
        print(json.dumps(data, indent=2))
    else:
        print(f"bc  = {b}   witness {sorted(w.vertices)}")
        print(f"bc' = {bprime}   witness {sorted(wp.vertices)} (bouquets {wp.bouquet_count})")
        for x in data.get("witnesses", []):
            print(f"  {x['vertices']}  c={x['c']}  c'={x['c_prime']}")
    return 0


def _finish(report, args) -> int:
    _emit(report.render(args.format), args.out)
    return 0 if report.ok else 1


def cmd_verify(args) -> int:
    timeout = args.timeout if args.timeout > 0 else None
    if args.target == "cycle":
        report = verify_cycle(args.n, args.smax, args.field,
                              ordinary=args.ordinary or args.ordinary_only,
                              t_max=args.tmax, symbolic=not args.ordinary_only,
                              timeout=timeout, cap=args.cap)
    elif args.target == "whisker":
        report = verify_whisker(_ints(args.a), args.smax, args.field, timeout=timeout, cap=args.cap)
    elif args.target == "example-w":
        report = verify_example_w(args.smax, args.field, timeout=timeout,
                                  allow_large=args.allow_large, cap=args.cap)
    else:
        params = {"field": args.field, "graph_arg": args.graph}
        if args.graph:
            params["graph"] = parse_graph(args.graph)
            params["label"] = args.graph
        if args.s is not None:
            params["s"] = args.s
        if args.n is not None:
            params["n"] = args.n
        if args.a:
            params["a"] = _ints(args.a)
        if args.vertices:
            params["vertices"] = _ints(args.vertices)
        if args.edge:
            params["edge"] = _ints(args.edge)
        try:
            report = verify_lemma(args.name, **params)
        except KeyError as exc:
            raise SystemExit(f"lemma {args.name} needs --{exc.args[0]}")
    return _finish(report, args)


def _conjecture_graphs(spec: str) -> list[tuple[str, Graph]]:
    if os.path.isdir(spec):
        names = sorted(f for f in os.listdir(spec) if f.endswith(".json"))
        return [(f, parse_graph(os.path.join(spec, f))) for f in names]
    return [(t, parse_graph(t)) for t in spec.split(";") if t.strip()]


def cmd_conjecture(args) -> int:
    timeout = args.timeout if args.timeout > 0 else None
    report, _ = run_conjecture_scan(_conjecture_graphs(args.graphs), args.field, args.smax,
                                    timeout, args.cap)
    return _finish(report, args)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="symdepth",
                                description="Exact depth of symbolic powers of edge ideals.")
    p.add_argument("--field", type=FieldSpec.parse, default=None,
                   help="gf:<prime> or qq (default: $SYMDEPTH_FIELD or gf:32003)")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fmt=("table", "csv", "json"), cap=DEFAULT_LATTICE_CAP):
        sp.add_argument("--field", type=FieldSpec.parse, default=argparse.SUPPRESS)
        sp.add_argument("--format", choices=fmt, default=fmt[0])
        sp.add_argument("--out", help="write to this file instead of stdout")
        sp.add_argument("--cap", type=int, default=cap, help="LCM lattice size cap")

    sp = sub.add_parser("symbolic", help="generators of I(G)^(s)")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--method", default="intersection",
                    help="intersection, ghos-odd-cycle or sullivant-chordal")
    common(sp, fmt=("text", "json"))
    sp.set_defaults(func=cmd_symbolic)

    sp = sub.add_parser("homology", help="reduced homology of a complex")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--complex", help="complex JSON file")
    g.add_argument("--ideal", help="squarefree ideal JSON file (uses its Stanley-Reisner complex)")
    sp.add_argument("--field", type=FieldSpec.parse, default=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_homology)

    sp = sub.add_parser("depth", help="depth and pd of S/I")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--ideal", help="ideal JSON file")
    g.add_argument("--graph")
    sp.add_argument("--s", type=int)
    sp.add_argument("--kind", choices=("symbolic", "ordinary"), default="symbolic")
    sp.add_argument("--betti", action="store_true", help="also print total Betti numbers")
    sp.add_argument("--field", type=FieldSpec.parse, default=argparse.SUPPRESS)
    sp.add_argument("--cap", type=int, default=DEFAULT_LATTICE_CAP)
    sp.set_defaults(func=cmd_depth)

    sp = sub.add_parser("table", help="depth sequence over s")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--kind", choices=("symbolic", "ordinary"), default="symbolic")
    sp.add_argument("--smax", type=int, required=True)
    sp.add_argument("--smin", type=int, default=1)
    common(sp)
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("bc", help="bc(G) and bc'(G) with witnesses")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--witnesses", action="store_true", help="list every maximal bipartite set")
    sp.add_argument("--format", choices=("table", "json"), default="table")
    sp.set_defaults(func=cmd_bc)

    sp = sub.add_parser("verify", help="compare against closed forms and lemma identities")
    vsub = sp.add_subparsers(dest="target", required=True)

    def vcommon(vp):
        common(vp, cap=VERIFY_LATTICE_CAP)
        vp.add_argument("--timeout", type=float, default=DEFAULT_ROW_TIMEOUT,
                        help="seconds per row before it is marked skipped (0 = none)")
        vp.set_defaults(func=cmd_verify)

    vp = vsub.add_parser("cycle")
    vp.add_argument("--n", type=int, required=True)
    vp.add_argument("--smax", type=int, required=True)
    vp.add_argument("--ordinary", action="store_true", help="add ordinary-power rows")
    vp.add_argument("--ordinary-only", action="store_true", help="skip symbolic rows")
    vp.add_argument("--tmax", type=int)
    vcommon(vp)

    vp = vsub.add_parser("whisker")
    vp.add_argument("--a", required=True, help="comma-separated whisker counts")
    vp.add_argument("--smax", type=int, required=True)
    vcommon(vp)

    vp = vsub.add_parser("example-w")
    vp.add_argument("--smax", type=int, default=3)
    vp.add_argument("--allow-large", action="store_true")
    vcommon(vp)

    vp = vsub.add_parser("lemma")
    vp.add_argument("--name", required=True, choices=LEMMAS)
    vp.add_argument("--graph")
    vp.add_argument("--s", type=int)
    vp.add_argument("--n", type=int)
    vp.add_argument("--a")
    vp.add_argument("--vertices", help="comma-separated vertex set of H")
    vp.add_argument("--edge", help="leaf edge as i,j")
    vcommon(vp)

    sp = sub.add_parser("conjecture", help="compare the depth limit with bc'")
    sp.add_argument("--graphs", required=True,
                    help="directory of graph JSON files or ';'-separated shorthands")
    sp.add_argument("--smax", type=int, help="largest s (default: proven window or 3)")
    sp.add_argument("--timeout", type=float, default=DEFAULT_ROW_TIMEOUT)
    common(sp, cap=VERIFY_LATTICE_CAP)
    sp.set_defaults(func=cmd_conjecture)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "field", None) is None:
        args.field = FieldSpec.default()
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (GraphError, ComplexError, LatticeTooLarge, ValueError, OSError) as exc:
        print(f"symdepth: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
