"""Command line interface: ``lfec gen|solve|verify|construct|audit|medial``."""

from __future__ import annotations

import argparse
import logging
import sys

from . import discharge, embed, exact, genio, reduce
from .facial import verify


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def _read_graph(path: str) -> embed.PlaneGraph:
    return genio.read_pg(path)


def _out(text: str, path: str | None) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_gen(args) -> int:
    params = {"l": args.l, "seed": args.seed}
    if args.n is not None:
        params["n"] = args.n
    G = genio.generate(genio.GeneratorSpec(args.family, params))
    _out(genio.serialize(G), args.output)
    return 0


def cmd_solve(args) -> int:
    G = _read_graph(args.graph)
    rep = exact.min_colors(G, args.l, args.max_colors, budget=args.budget, jobs=args.jobs)
    if rep.status == "optimal":
        print(f"chi={rep.chi}")
    elif rep.status == "above_kmax":
        print(f"chi>{args.max_colors if args.max_colors is not None else 3 * args.l + 3}")
    else:
        print(f"chi=unknown lower_bound={rep.lower_bound}")
    print(f"nodes={rep.nodes_explored} elapsed={rep.elapsed:.3f}s")
    if rep.witness is not None and args.output:
        genio.write_col(rep.witness, args.output)
    return 0 if rep.status == "optimal" else 1


def cmd_verify(args) -> int:
    G = _read_graph(args.graph)
    phi = genio.read_col(args.coloring)
    try:
        bad = verify(G, args.l, phi)
    except ValueError as exc:
        print(f"invalid: {exc}")
        return 1
    for v in bad:
        print(f"conflict edges {v.e} {v.f} face {v.face} distance {v.distance}")
    print("valid" if not bad else f"invalid: {len(bad)} conflicts")
    return 0 if not bad else 1


def cmd_construct(args) -> int:
    G = _read_graph(args.graph)
    try:
        phi, trace = reduce.construct_7_coloring(G)
    except reduce.ReductionError as exc:
        print(f"construct failed: {exc}", file=sys.stderr)
        return 1
    _out(genio.serialize_coloring(phi), args.output)
    if args.trace:
        _out(trace.text(), args.trace)
    print(
        f"colors={len(phi.colors_used())} steps={len(trace.steps)} "
        f"detect_gaps={trace.detect_gaps}",
        file=sys.stderr,
    )
    return 0


def cmd_audit(args) -> int:
    G = _read_graph(args.graph)
    rep = discharge.audit(G)
    sys.stdout.write(rep.text())
    return 0 if rep.conserved else 1


def cmd_medial(args) -> int:
    G = _read_graph(args.graph)
    _out(genio.serialize(embed.medial_graph(G)), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="lfec", description="Facial edge colorings of plane graphs.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="generate a plane graph")
    g.add_argument("--family", required=True, choices=genio.FAMILIES)
    g.add_argument("--n", type=int)
    g.add_argument("--l", type=int, default=2)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("solve", help="exact l-facial chromatic index")
    s.add_argument("graph")
    s.add_argument("--l", type=int, default=2)
    s.add_argument("--max-colors", type=int)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--budget", type=int, default=-1, help="search node budget per k (-1: none)")
    s.add_argument("-o", "--output", help="write an optimal coloring here")
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="check an l-facial edge coloring")
    v.add_argument("graph")
    v.add_argument("coloring")
    v.add_argument("--l", type=int, default=2)
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("construct", help="2-facial 7-coloring by reductions")
    c.add_argument("graph")
    c.add_argument("-o", "--output")
    c.add_argument("--trace")
    c.set_defaults(func=cmd_construct)

    a = sub.add_parser("audit", help="discharging audit")
    a.add_argument("graph")
    a.set_defaults(func=cmd_audit)

    m = sub.add_parser("medial", help="medial graph")
    m.add_argument("graph")
    m.add_argument("-o", "--output")
    m.set_defaults(func=cmd_medial)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except genio.ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
