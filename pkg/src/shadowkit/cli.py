"""``shadowkit`` command line.

Exit status is 0 on success, 1 when an operation rejects its input (the
error class name is printed on stderr) and 2 on usage errors.
"""
from __future__ import annotations

import argparse
import itertools
import sys

from . import census, circles, moves, realization
from .errors import ShadowError
from .projection import (
    Arc,
    canonical_code,
    connected_sum,
    parse_gauss,
    serialize_gauss,
)

MODES = ("weak", "strong", "full", "ri")


class UsageError(Exception):
    pass


def _arc(text: str, flag: str) -> Arc:
    try:
        edge, side = text.split(":")
        side = side.upper()
        if side not in ("L", "R"):
            raise ValueError
        return Arc(int(edge), side)
    except ValueError:
        raise UsageError(f"{flag}: expected EDGE:SIDE such as 0:L, got {text!r}") from None


def _echo(P) -> str:
    return f"{serialize_gauss(P)}\t{canonical_code(P).hex()}"


def cmd_parse(args, out):
    out.append(_echo(parse_gauss(args.code)))


def cmd_validate(args, out):
    P = parse_gauss(args.code)
    out.append(f"valid n={P.n} faces={len(P.faces)}")


def cmd_reduce(args, out):
    P = parse_gauss(args.code)
    for step in moves.reduction_steps(P, args.mode):
        if args.trace:
            arcs = " ".join(f"{a.edge}:{a.side}" for a in step.site.arcs)
            where = f"face {step.site.face}" + (f" arcs {arcs}" if arcs else "")
            out.append(f"{step.kind}\t{where}\t-> {serialize_gauss(step.result)}")
        P = step.result
    out.append(serialize_gauss(P))


def cmd_equiv(args, out):
    P, Q = parse_gauss(args.code1), parse_gauss(args.code2)
    test = moves.weak_equiv if args.mode == "weak" else moves.strong_equiv
    out.append("true" if test(P, Q) else "false")


def cmd_tau(args, out):
    A = circles.non_seifert_resolve(parse_gauss(args.code))
    out.append(f"circle_number {A.circles}")
    out.append(f"arrangement {A.name}")
    out.append(f"ahu {A.ahu}")
    if args.dot:
        out.append(circles.arrangement_dot(A))


def cmd_xinv(args, out):
    x, x2 = circles.x_invariant(parse_gauss(args.code))
    out.append(f"X {x}")
    out.append(f"X_mod2 {x2}")


def cmd_sum(args, out):
    P, Q = parse_gauss(args.code1), parse_gauss(args.code2)
    R = connected_sum(P, _arc(args.arc1, "--arc1"), Q, _arc(args.arc2, "--arc2"))
    out.append(serialize_gauss(R))


def cmd_realize(args, out):
    try:
        edges = circles.parse_tree(args.tree)
    except ValueError as exc:
        raise UsageError(f"--tree: {exc}") from None
    build = realization.realize_prime if args.prime else realization.realize_arrangement
    out.append(serialize_gauss(build(edges)))


def cmd_primify(args, out):
    out.append(serialize_gauss(realization.primify(parse_gauss(args.code))))


def cmd_enumerate(args, out):
    found = census.enumerate_projections(args.max_n, prime=args.prime,
                                         no_onegon=args.no_1gon, workers=args.workers)
    if args.format == "text":
        out.extend(serialize_gauss(P) for P in found)
        return
    records = [census.invariant_record(P) for P in found]
    if args.format == "csv":
        out.append(census.records_csv(records).rstrip("\n"))
    else:
        out.append(census.records_jsonl(records).rstrip("\n"))


def cmd_table(args, out):
    table = census.tabulate(args.max_n, args.connect_budget, workers=args.workers)
    if args.dot:
        out.append(census.connections_dot(table))
        return
    out.append("idx\tn\tcircles\tname\tX\tweak\tstrong\tgauss")
    for i, r in enumerate(table.records):
        out.append(f"{i}\t{r.n}\t{r.circle_number}\t{r.arrangement_name}\t{r.x}\t"
                   f"{str(r.weak_trivial).lower()}\t{str(r.strong_trivial).lower()}\t{r.gauss}")
    out.append(f"# connections (1a budget {table.budget}); {table.note}")
    for c in table.connections:
        out.append(f"{c.a} -{c.kind}- {c.b}\t{c.moves} moves")


def cmd_movegraph(args, out):
    if args.codes:
        projections = [parse_gauss(c) for c in args.codes]
    else:
        projections = census.enumerate_projections(args.max_n, prime=True, no_onegon=True)
    out.append("graph moves {")
    for i, P in enumerate(projections):
        out.append(f'  p{i} [label="{serialize_gauss(P)}"];')
    for (i, P), (j, Q) in itertools.combinations(enumerate(projections), 2):
        for kind in ("s2a", "w2a"):
            path = moves.connect_search(P, Q, kind, args.budget)
            if path is not None:
                out.append(f'  p{i} -- p{j} [label="{kind[0]}", moves={len(path)}];')
    out.append(f"  // 1a budget {args.budget}; missing edges were not found, not disproved")
    out.append("}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="shadowkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    def verb(name, func, help, codes=1):
        p = sub.add_parser(name, help=help)
        if codes == 1:
            p.add_argument("code", help='Gauss code such as "3; 1 2 3 1 2 3; + - +"')
        elif codes == 2:
            p.add_argument("code1")
            p.add_argument("code2")
        p.set_defaults(func=func)
        return p

    verb("parse", cmd_parse, "normalised Gauss code and canonical code")
    verb("validate", cmd_validate, "check that a Gauss code is a spherical projection")
    p = verb("reduce", cmd_reduce, "reduced form under a move alphabet")
    p.add_argument("--mode", choices=MODES, default="full")
    p.add_argument("--trace", action="store_true", help="print every move applied")
    p = verb("equiv", cmd_equiv, "decide weak or strong (1, 2) homotopy", codes=2)
    p.add_argument("--mode", choices=("weak", "strong"), required=True)
    p = verb("tau", cmd_tau, "circle number and circle arrangement")
    p.add_argument("--dot", action="store_true", help="also print the tree in DOT")
    verb("xinv", cmd_xinv, "number of interlaced chord pairs")
    p = verb("sum", cmd_sum, "connected sum at two arcs", codes=2)
    p.add_argument("--arc1", required=True, metavar="E:S")
    p.add_argument("--arc2", required=True, metavar="E:S")
    p = verb("realize", cmd_realize, "projection with a given circle arrangement", codes=0)
    p.add_argument("--tree", required=True, help='nested parentheses, e.g. "(()()())"')
    p.add_argument("--prime", action="store_true", help="return a prime projection")
    verb("primify", cmd_primify, "prime projection strongly homotopic to the input")
    p = verb("enumerate", cmd_enumerate, "census of projections", codes=0)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--prime", action="store_true")
    p.add_argument("--no-1gon", action="store_true")
    p.add_argument("--format", choices=("text", "records", "csv"), default="text")
    p.add_argument("--workers", type=int, default=1)
    p = verb("table", cmd_table, "invariant table with s/w connections", codes=0)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--connect-budget", type=int, default=2)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--dot", action="store_true", help="print the connection graph in DOT")
    p = verb("movegraph", cmd_movegraph, "pairwise connection search", codes=0)
    p.add_argument("codes", nargs="*", help="projections (default: the prime census)")
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--budget", type=int, default=2)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out: list[str] = []
    try:
        args.func(args, out)
    except UsageError as exc:
        parser.error(str(exc))
    except ShadowError as exc:
        print(f"error: {exc.name}: {exc}", file=sys.stderr)
        return 1
    print("\n".join(out))
    return 0


if __name__ == "__main__":
    sys.exit(main())
