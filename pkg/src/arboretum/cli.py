"""Command-line front end: ``arboretum <verb> [options] [EXPR ...]``.

Exit status is 0 on success, 1 on a domain error (bad expression, failed
check) and 2 on a usage error.  An EXPR of ``-`` reads one expression per
line from standard input.
"""

from __future__ import annotations

import argparse
import sys
from typing import TextIO

from . import checks, hopf, operad
from .dot import render_dot
from .enumeration import SizeKey, count, generate
from .linear import LinComb
from .rotation import phi, phi_inv
from .trees import HYPER, REDUCED, Forest, ParseError, is_unit, kind_of, parse_forest, parse_tree, to_text

__all__ = ["run", "main", "build_parser"]


class DomainError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="arboretum", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    def verb(name: str, help: str, exprs: str | None = "*") -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        if exprs is not None:
            p.add_argument("exprs", nargs=exprs, metavar="EXPR")
        return p

    p = verb("parse", "print the canonical form of expressions")
    p.add_argument("--kind", choices=(REDUCED, HYPER))

    p = verb("rotate", "apply phi (or its inverse with --inverse)")
    p.add_argument("--inverse", action="store_true")

    for name, help in (("coproduct", "coproduct of a forest"), ("antipode", "antipode of a forest")):
        p = verb(name, help)
        p.add_argument("--side", choices=(REDUCED, HYPER))

    p = verb("prelie", "left pre-Lie product t -> u (t grafted on u)", exprs=None)
    p.add_argument("--side", choices=(REDUCED, HYPER))
    p.add_argument("exprs", nargs=2, metavar="EXPR")

    p = verb("compose", "partial composition SIGMA o_INDEX TAU", exprs=None)
    p.add_argument("--side", choices=(REDUCED, HYPER))
    p.add_argument("sigma", metavar="SIGMA")
    p.add_argument("index", type=int, metavar="INDEX")
    p.add_argument("tau", metavar="TAU")

    p = verb("enumerate", "list every tree of a size class", exprs=None)
    p.add_argument("--kind", required=True, choices=("binary", "reduced", "rootedtree", "hyper"))
    p.add_argument("--measure", required=True, choices=("leaves", "vertices", "edges", "internal"))
    p.add_argument("--size", required=True, type=int)
    p.add_argument("--count-only", action="store_true")

    p = verb("check", "run an exhaustive property suite", exprs=None)
    p.add_argument("--suite", required=True, choices=tuple(checks.SUITES))
    p.add_argument("--max-grade", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)

    verb("dot", "Graphviz rendering of expressions")
    return parser


def _expressions(exprs: list[str], stdin: TextIO) -> list[str]:
    out = []
    for e in exprs:
        if e == "-":
            out.extend(line.strip() for line in stdin if line.strip())
        else:
            out.append(e)
    if not out:
        raise DomainError("no expression given")
    return out


def _forest(text: str, kind: str | None) -> Forest:
    return parse_forest(text, kind)


def _print_lincomb(x: LinComb, out: TextIO) -> None:
    lines = x.lines()
    for line in lines or ["0"]:
        print(line, file=out)


def _dispatch(args: argparse.Namespace, out: TextIO, stdin: TextIO) -> int:
    verb = args.verb
    if verb == "parse":
        for e in _expressions(args.exprs, stdin):
            print(to_text(_forest(e, args.kind)), file=out)
    elif verb == "rotate":
        kind = HYPER if args.inverse else REDUCED
        f = phi_inv if args.inverse else phi
        for e in _expressions(args.exprs, stdin):
            forest = _forest(e, kind)
            if forest.kind != kind:
                raise DomainError(f"rotate{' --inverse' if args.inverse else ''} expects a {kind} expression")
            image = Forest.of(*(f(t) for t in forest.trees), kind=REDUCED if args.inverse else HYPER)
            print(to_text(image), file=out)
    elif verb in ("coproduct", "antipode"):
        op = hopf.coproduct if verb == "coproduct" else hopf.antipode
        for e in _expressions(args.exprs, stdin):
            _print_lincomb(op(_forest(e, args.side)), out)
    elif verb == "prelie":
        t, u = (parse_tree(e, args.side) for e in args.exprs)
        if is_unit(t) or is_unit(u):
            raise DomainError("the pre-Lie product needs non-unit trees")
        op = hopf.pre_lie_hyper if kind_of(t) == HYPER else hopf.pre_lie_graft
        _print_lincomb(op(t, u), out)
    elif verb == "compose":
        sigma, tau = parse_tree(args.sigma, args.side), parse_tree(args.tau, args.side)
        result = operad.partial_compose(sigma, args.index, tau)
        print(to_text(result), file=out)
    elif verb == "enumerate":
        key = SizeKey(args.kind, args.measure, args.size)
        if args.count_only:
            print(count(key), file=out)
        else:
            for t in generate(key):
                print(to_text(t), file=out)
    elif verb == "check":
        failure = checks.run_suite(args.suite, args.max_grade, args.seed)
        if failure is not None:
            print(f"FAIL {args.suite}: {failure}", file=out)
            return 1
        print(f"ok {args.suite} (max grade {args.max_grade})", file=out)
    elif verb == "dot":
        for e in _expressions(args.exprs, stdin):
            f = _forest(e, None)
            out.write(render_dot(f.trees[0] if len(f) == 1 else f))
    return 0


def run(argv: list[str] | None = None, stdout: TextIO | None = None, stdin: TextIO | None = None,
        stderr: TextIO | None = None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _dispatch(args, out, stdin or sys.stdin)
    except (ParseError, DomainError, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=err)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
