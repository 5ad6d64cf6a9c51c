"""Command-line front end: check, norm, eq, laws, bench.

Exit codes: 0 success (or equal), 1 error (or a law counterexample), 2 distinct.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

from .cwf import infer_itm
from .normalize import EquationTypeError, norm
from .syntax import O, Arrow, ContractError, SubList, T, V, expr_nodes, infer_expr, sort_of
from .text import (
    ParseError,
    ScopeError,
    parse_con,
    parse_expr,
    parse_itm,
    render_con,
    render_expr,
    render_ty,
)

EXIT_OK, EXIT_ERROR, EXIT_DISTINCT = 0, 1, 2


class UserError(Exception):
    """A diagnosable problem with the command line or its input."""


def _read(value: str) -> str:
    return sys.stdin.read() if value == "-" else value


def _parse(what: str, fn, text: str, *args):
    try:
        return fn(text, *args)
    except ParseError as exc:
        line = text.splitlines()[exc.span.line - 1] if text.strip() else ""
        caret = " " * (exc.span.column - 1) + "^"
        raise UserError(f"parse error in {what} at {exc.span.line}:{exc.span.column}: "
                        f"{exc.message}\n  {line}\n  {caret}") from None
    except ScopeError as exc:
        raise UserError(f"type error in {what}: {exc}") from None


# -- check / norm / eq ------------------------------------------------------------


def cmd_check(args, out) -> int:
    ctx = _parse("--ctx", parse_con, args.ctx)
    text = _read(args.term)
    if args.explicit:
        t = _parse("--term", parse_itm, text, ctx)
        ty = infer_itm(ctx, t)
    else:
        t = _parse("--term", parse_expr, text, ctx)
        ty = infer_expr(ctx, t)
    if ty is None:
        raise UserError(f"type error: term does not typecheck in {render_con(ctx)}")
    print(render_ty(ty), file=out)
    return EXIT_OK


def cmd_norm(args, out) -> int:
    ctx = _parse("--ctx", parse_con, args.ctx)
    t = _parse("--term", parse_itm, _read(args.term), ctx)
    print(render_expr(norm(ctx, t)), file=out)
    return EXIT_OK


def cmd_eq(args, out) -> int:
    ctx = _parse("--ctx", parse_con, args.ctx)
    lhs = _parse("--lhs", parse_itm, _read(args.lhs), ctx)
    rhs = _parse("--rhs", parse_itm, _read(args.rhs), ctx)
    ta, tb = infer_itm(ctx, lhs), infer_itm(ctx, rhs)
    if ta != tb:
        raise UserError(f"type error: sides have different types, {render_ty(ta)} and {render_ty(tb)}")
    a, b = norm(ctx, lhs), norm(ctx, rhs)
    print("EQUAL" if a == b else "DISTINCT", file=out)
    print(f"lhs: {render_expr(a)}", file=out)
    print(f"rhs: {render_expr(b)}", file=out)
    return EXIT_OK if a == b else EXIT_DISTINCT


# -- laws -----------------------------------------------------------------------------


def _law_json(rep, timings: bool, verified=None, budgeted=False) -> dict:
    obj = {"law": rep.law_name, "checked": rep.instances_checked}
    if budgeted:
        obj["complete"] = rep.complete
        obj["verified"] = None if verified is None else _bounds(verified)
    if rep.first_counterexample is not None:
        c = rep.first_counterexample
        obj["counterexample"] = {"instance": c.instance, "lhs": c.lhs, "rhs": c.rhs}
    obj["elapsed_ms"] = round(rep.elapsed * 1000, 3) if timings else None
    return obj


def _bounds(cfg) -> dict:
    return {
        "max_type_depth": cfg.max_type_depth,
        "max_ctx_len": cfg.max_ctx_len,
        "max_expr_size": cfg.max_expr_size,
        "max_sub_entry_size": cfg.max_sub_entry_size,
        "max_itm_size": cfg.max_itm_size,
    }


def _law_line(rep, timings: bool, verified=None, budgeted=False) -> str:
    if rep.first_counterexample is not None:
        status = "FAIL"
    elif not rep.complete:
        status = "OPEN"
    else:
        status = "ok"
    line = f"{status:4}  {rep.law_name:20} {rep.instances_checked:>10} instances"
    if budgeted and verified is not None and not rep.complete:
        b = _bounds(verified)
        line += "  (complete up to " + ", ".join(f"{k}={v}" for k, v in b.items()) + ")"
    if timings:
        line += f"  {rep.elapsed * 1000:.1f} ms"
    c = rep.first_counterexample
    if c is not None:
        line += f"\n      instance: {c.instance}\n      lhs: {c.lhs}\n      rhs: {c.rhs}"
    return line


def cmd_laws(args, out) -> int:
    from .laws.enumerate import EnumConfig
    from .laws.registry import run_budgeted, run_law, run_sampled, select

    sorts = tuple({"V": V, "T": T}[s] for s in args.sorts.split(",") if s)
    try:
        cfg = EnumConfig(args.max_type_depth, args.max_ctx_len, args.max_expr_size,
                         args.max_sub_entry_size, args.max_itm_size, sorts)
        laws = select(args.law or None, args.group or None)
    except (ValueError, KeyError) as exc:
        raise UserError(exc.args[0] if exc.args else str(exc)) from None

    rows = []  # (report, verified)
    budgeted = args.time_budget is not None
    if args.random is not None:
        rows = [(run_sampled(law, args.random, args.seed), None) for law in laws]
    elif budgeted:
        rows = [(b.report, b.verified) for b in run_budgeted(laws, cfg, args.time_budget)]
    else:
        rows = [(run_law(law, cfg), cfg) for law in laws]

    failures = sum(rep.first_counterexample is not None for rep, _ in rows)
    if args.json:
        payload = [_law_json(rep, args.timings, v, budgeted) for rep, v in rows]
        json.dump(payload, out, indent=2)
        out.write("\n")
    else:
        for rep, v in rows:
            print(_law_line(rep, args.timings, v, budgeted), file=out)
        open_ = sum(not rep.complete for rep, _ in rows)
        summary = f"{len(rows)} laws, {failures} with counterexamples"
        if open_:
            summary += f", {open_} not checked to completion"
        print(summary, file=out)
    return EXIT_ERROR if failures else EXIT_OK


# -- bench -----------------------------------------------------------------------------

# Ambient and target contexts for the benchmark: every type in the source
# also occurs in the target, so random renamings always exist.
_BENCH_SRC = (O, Arrow(O, O), Arrow(O, Arrow(O, O)), O)
_BENCH_TGT = (Arrow(O, Arrow(O, O)), O, Arrow(O, O), O, O)


class _VisitCounter:
    """Counts Python-level calls into one module while installed as profiler."""

    def __init__(self, module_file: str):
        self.file = module_file
        self.count = 0

    def __call__(self, frame, event, arg):
        if event == "call" and frame.f_code.co_filename == self.file:
            self.count += 1


def _measure(fn, module_file: str):
    counter = _VisitCounter(module_file)
    sys.setprofile(counter)
    try:
        fn()
    finally:
        sys.setprofile(None)
    start = time.perf_counter()
    result = fn()
    return result, time.perf_counter() - start, counter.count


def bench_case(size: int, seed: int, sort) -> dict:
    from . import engine, naive
    from .laws.sample import random_term, random_var
    from .laws.registry import naive_apply

    rng = random.Random(f"{seed}:{size}:{sort.value}")
    x = random_term(rng, _BENCH_SRC, O, size)
    if sort is V:
        entries = tuple(random_var(rng, _BENCH_TGT, a) for a in _BENCH_SRC)
    else:
        entries = tuple(random_term(rng, _BENCH_TGT, a, 5) for a in _BENCH_SRC)
    ys = SubList(sort, entries, _BENCH_TGT)

    def factored():
        engine._weakened_identity.cache_clear()
        return engine.subst_apply(x, ys)

    a, ta, va = _measure(factored, engine.__file__)
    b, tb, vb = _measure(lambda: naive_apply(x, ys), naive.__file__)
    return {
        "size": size,
        "nodes": expr_nodes(x),
        "sub": "renaming" if sort is V else "substitution",
        "factored_ms": round(ta * 1000, 3),
        "naive_ms": round(tb * 1000, 3),
        "factored_visits": va,
        "naive_visits": vb,
        "equal": a == b and sort_of(a) is T,
    }


def cmd_bench(args, out) -> int:
    try:
        sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    except ValueError:
        raise UserError(f"--sizes must be comma-separated integers, got {args.sizes!r}") from None
    if any(n < 1 for n in sizes):
        raise UserError("--sizes must be positive")
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 100_000))
    rows = [bench_case(n, args.seed, q) for n in sizes for q in (V, T)]
    if args.json:
        json.dump(rows, out, indent=2)
        out.write("\n")
    else:
        print(f"{'size':>6} {'nodes':>6} {'sub':12} {'factored ms':>12} {'naive ms':>10} "
              f"{'factored visits':>16} {'naive visits':>13}  equal", file=out)
        for r in rows:
            print(f"{r['size']:>6} {r['nodes']:>6} {r['sub']:12} {r['factored_ms']:>12.3f} "
                  f"{r['naive_ms']:>10.3f} {r['factored_visits']:>16} {r['naive_visits']:>13}  "
                  f"{'yes' if r['equal'] else 'NO'}", file=out)
    return EXIT_OK if all(r["equal"] for r in rows) else EXIT_ERROR


# -- entry point ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    # usage errors exit 1; argparse's own 2 would read as "distinct"
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    from .laws.enumerate import DEFAULT

    p = _Parser(prog="sortsubst", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="cmd", required=True)

    c = sub.add_parser("check", help="infer the type of a term")
    c.add_argument("--ctx", default="[]")
    c.add_argument("--term", required=True, help='term text, or "-" for stdin')
    c.add_argument("--explicit", action="store_true", help="parse as an explicit-substitution term")
    c.set_defaults(run=cmd_check)

    n = sub.add_parser("norm", help="normalize an explicit-substitution term")
    n.add_argument("--ctx", default="[]")
    n.add_argument("--term", required=True)
    n.set_defaults(run=cmd_norm)

    e = sub.add_parser("eq", help="decide equality of two explicit terms")
    e.add_argument("--ctx", default="[]")
    e.add_argument("--lhs", required=True)
    e.add_argument("--rhs", required=True)
    e.set_defaults(run=cmd_eq)

    la = sub.add_parser("laws", help="run the property registry")
    la.add_argument("--max-type-depth", type=int, default=DEFAULT.max_type_depth)
    la.add_argument("--max-ctx-len", type=int, default=DEFAULT.max_ctx_len)
    la.add_argument("--max-expr-size", type=int, default=DEFAULT.max_expr_size)
    la.add_argument("--max-sub-entry-size", type=int, default=DEFAULT.max_sub_entry_size)
    la.add_argument("--max-itm-size", type=int, default=DEFAULT.max_itm_size)
    la.add_argument("--sorts", default="V,T", help="comma-separated subset of V,T")
    la.add_argument("--law", action="append", help="run only this law (repeatable)")
    la.add_argument("--group", action="append",
                    choices=("subst", "oracle", "types", "cwf", "embed", "norm"))
    la.add_argument("--time-budget", type=float, metavar="SECONDS",
                    help="climb the bounds ladder until the budget runs out")
    la.add_argument("--random", type=int, metavar="TRIALS",
                    help="seeded random mode: TRIALS draws per law at larger sizes")
    la.add_argument("--seed", type=int, default=0)
    la.add_argument("--json", action="store_true")
    la.add_argument("--timings", action="store_true",
                    help="report wall times (makes output run-dependent)")
    la.set_defaults(run=cmd_laws)

    b = sub.add_parser("bench", help="time the factored engine against the naive one")
    b.add_argument("--sizes", default="10,100,1000")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--json", action="store_true")
    b.set_defaults(run=cmd_bench)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.run(args, out)
    except UserError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (ContractError, EquationTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
