"""Command-line interface.

Exit codes: 0 success, 1 a check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from .core_algebra import FormalSum
from .diagrams import (
    CupDiagram,
    DiagramError,
    check_mk,
    diagram_to_obj,
    diagram_to_seq,
    emit_json,
    enumerate_at_most,
    enumerate_basis,
    enumerate_ckl,
    parse_diagram,
    render_ascii,
)
from .homology import homology_class_to_json
from .report import SUITES, RunReport, timed

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _parse_range(text: str) -> list[int]:
    """'4', '4..6' or '4,5,6'."""
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return list(range(int(lo), int(hi) + 1))
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"cannot parse range {text!r}") from None


def _emit(obj, as_json: bool, text: str | None = None) -> None:
    if as_json:
        print(json.dumps(obj, indent=2, sort_keys=False))
    else:
        print(text if text is not None else json.dumps(obj))


def _class_text(x: FormalSum) -> str:
    if not x:
        return "0"
    return "\n".join(f"{c} * {diagram_to_seq(a)}" for a, c in x.items())


def _resolve_k(m: int, k: int | None) -> int:
    k = m if k is None else k
    try:
        check_mk(m, k)
    except DiagramError as e:
        raise UsageError(f"{e}; k must satisfy 1 <= k <= m and be odd unless k = m") from None
    return k


def _diagram_arg(args, m: int | None = None, k: int | None = None) -> CupDiagram:
    if getattr(args, "diagram", None):
        d = parse_diagram(args.diagram)
    elif getattr(args, "index", None) is not None:
        if m is None:
            raise UsageError("--index needs --m")
        basis = enumerate_at_most(m, k) if k is not None else enumerate_ckl(m)
        if not 0 <= args.index < len(basis):
            raise UsageError(f"index {args.index} out of range 0..{len(basis) - 1}")
        d = basis[args.index]
    else:
        raise UsageError("give --diagram or --index")
    if m is not None and d.m != m:
        raise UsageError(f"diagram has {d.m} vertices, expected {m}")
    return d


# --- commands ------------------------------------------------------------------------


def cmd_enumerate(args) -> int:
    if args.m < 1:
        raise UsageError("m must be at least 1")
    if args.k is not None:
        k = _resolve_k(args.m, args.k)
        ds = enumerate_at_most(args.m, k) if args.at_most else enumerate_basis(args.m, k)
    else:
        ds = enumerate_ckl(args.m)
    if args.cups is not None:
        ds = [d for d in ds if d.ncups == args.cups]
    if args.json:
        _emit({"m": args.m, "count": len(ds), "diagrams": [diagram_to_obj(d) for d in ds]}, True)
    else:
        blocks = [f"[{i}] {diagram_to_seq(d)}\n{render_ascii(d)}" for i, d in enumerate(ds)]
        print(f"{len(ds)} diagrams")
        print("\n\n".join(blocks))
    return EXIT_OK


def cmd_act(args) -> int:
    from .springer_action import ENGINES, act_class, component_act, parse_word

    k = _resolve_k(args.m, args.k) if args.m is not None else None
    if args.all:
        if args.m is None:
            raise UsageError("--all needs --m")
        inputs = enumerate_at_most(args.m, k)
    else:
        inputs = [_diagram_arg(args, args.m, k)]
    word = parse_word(args.word or "")
    for g in word:
        g.check(inputs[0].m)
    rep = RunReport("act", {"m": inputs[0].m, "k": k, "word": " ".join(map(str, word)), "engine": args.engine})
    results = []
    for a in inputs:
        x = FormalSum.basis(a)
        if args.component:
            x = x.map_keys(component_act)
        y = act_class(x, word, args.engine)
        if args.compare:
            for other in ENGINES:
                if other != args.engine:
                    rep.add(f"{diagram_to_seq(a)}: {args.engine} = {other}", act_class(x, word, other) == y)
        results.append((a, y))
    if args.json:
        rep.payload = [{"input": diagram_to_obj(a), "output": homology_class_to_json(y)} for a, y in results]
        _emit(rep.to_json(), True)
    else:
        for a, y in results:
            print(f"{diagram_to_seq(a)} . [{' '.join(map(str, word))}]{' after component' if args.component else ''} =")
            print(_class_text(y))
        if args.compare:
            print(f"engines agree: {rep.ok}")
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_matrix(args) -> int:
    from .springer_action import generator_matrix, graded_basis, parse_word

    k = _resolve_k(args.m, args.k)
    gens = parse_word(args.gen)
    if len(gens) != 1:
        raise UsageError("--gen takes exactly one generator")
    g = gens[0]
    g.check(args.m)
    M = generator_matrix(args.m, k, g, args.degree, args.engine)
    basis = graded_basis(args.m, k, args.degree)
    labels = [diagram_to_seq(a) for a in basis]
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([""] + labels)
        for lab, row in zip(labels, M.to_json()):
            w.writerow([lab] + row)
        sys.stdout.write(buf.getvalue())
    elif args.format == "json" or args.json:
        _emit({"m": args.m, "k": k, "generator": str(g), "degree": args.degree, "basis": labels,
               "rows": M.to_json()}, True)
    else:
        width = max(len(x) for x in labels) if labels else 1
        for lab, row in zip(labels, M.to_json()):
            print(lab.ljust(width), " ".join(x.rjust(2) for x in row))
    return EXIT_OK


def cmd_verify(args) -> int:
    ms = _parse_range(args.m)
    names = list(SUITES) if args.suite == "all" else [args.suite]
    rep = RunReport("verify", {"suite": args.suite, "m": ms})

    def run(r: RunReport) -> None:
        for n in names:
            SUITES[n](r, ms)

    timed(rep, run)
    if args.json:
        _emit(rep.to_json(args.timing), True)
    else:
        for c in rep.checks:
            print(f"{'PASS' if c.ok else 'FAIL'}  {c.name}" + (f"  ({c.detail})" if c.detail and not c.ok else ""))
        print(f"{sum(c.ok for c in rep.checks)}/{len(rep.checks)} checks passed")
        if args.timing:
            print(f"wall time {rep.wall_time:.2f}s")
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_hecke_act(args) -> int:
    from .hecke import hecke_act_word, hecke_to_json
    from .springer_action import parse_word

    a = _diagram_arg(args, args.m)
    word = [(g.family, g.index) for g in parse_word(args.word or "")]
    y = hecke_act_word(FormalSum.basis(a), word)
    if args.json:
        _emit({"input": diagram_to_obj(a), "word": args.word or "", "output": hecke_to_json(y)}, True)
    else:
        print("0" if not y else "\n".join(f"({c}) * {diagram_to_seq(b)}" for b, c in y.items()))
    return EXIT_OK


def cmd_shoji(args) -> int:
    from .shoji import shoji_stable

    if args.lam < 0 or args.mu < 0:
        raise UsageError("parts must be non-negative")
    sp = shoji_stable(args.lam, args.mu)
    _emit(sp.to_json(), True)
    return EXIT_OK


def cmd_dims(args) -> int:
    from .cohomology import cell_count_total, dim_formula, quotient_graded_dims, reconcile

    k = _resolve_k(args.m, args.k)
    if args.method == "all":
        r = reconcile(args.m, k)
        out = r.to_json()
        code = EXIT_OK if r.ok else EXIT_FAIL
    elif args.method == "quotient":
        if args.m == k:
            raise UsageError("the quotient presentation needs m != k")
        d = quotient_graded_dims(args.m, k)
        out, code = {"m": args.m, "k": k, "by_degree": d, "total": sum(d)}, EXIT_OK
    elif args.method == "formula":
        out, code = {"m": args.m, "k": k, "total": dim_formula(args.m, k)}, EXIT_OK
    elif args.method == "cells":
        out, code = {"m": args.m, "k": k, "total": cell_count_total(args.m, k)}, EXIT_OK
    else:
        out, code = {"m": args.m, "k": k, "total": len(enumerate_at_most(args.m, k))}, EXIT_OK
    _emit(out, True)
    return code


def cmd_render(args) -> int:
    a = _diagram_arg(args, args.m)
    print(render_ascii(a))
    return EXIT_OK


def cmd_convert(args) -> int:
    a = _diagram_arg(args, args.m)
    if args.to == "json":
        print(emit_json(a))
    elif args.to == "seq":
        print(diagram_to_seq(a))
    else:
        _emit({"sequence": diagram_to_seq(a), "diagram": diagram_to_obj(a)}, True)
    return EXIT_OK


# --- parser -----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="springer-cups", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def diag_opts(sp, need_m=False):
        sp.add_argument("--m", type=int, required=need_m)
        sp.add_argument("--diagram", help="JSON object or a sequence over 'v' and '^'")
        sp.add_argument("--index", type=int, help="position in the canonical basis order")

    e = sub.add_parser("enumerate", help="list cup diagrams")
    e.add_argument("--m", type=int, required=True)
    e.add_argument("--k", type=int)
    e.add_argument("--cups", type=int)
    e.add_argument("--at-most", action="store_true", help="with --k: at most floor(k/2) cups")
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=cmd_enumerate)

    a = sub.add_parser("act", help="act with a Weyl group word")
    diag_opts(a)
    a.add_argument("--k", type=int)
    a.add_argument("--word", default="", help="e.g. 'd0 d1 c2'")
    a.add_argument("--engine", choices=["table", "skein", "gamma"], default="table")
    a.add_argument("--compare", action="store_true", help="check the other engines agree")
    a.add_argument("--component", action="store_true", help="apply the component-group generator first")
    a.add_argument("--all", action="store_true", help="every basis diagram for --m/--k")
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_act)

    mx = sub.add_parser("matrix", help="generator matrix on the cup basis")
    mx.add_argument("--m", type=int, required=True)
    mx.add_argument("--k", type=int)
    mx.add_argument("--gen", required=True)
    mx.add_argument("--degree", type=int, help="cup count of the graded piece")
    mx.add_argument("--engine", choices=["table", "skein", "gamma"], default="table")
    mx.add_argument("--format", choices=["text", "json", "csv"], default="text")
    mx.add_argument("--json", action="store_true")
    mx.set_defaults(func=cmd_matrix)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", choices=["all"] + list(SUITES), default="all")
    v.add_argument("--m", default="4..5", help="'4', '4..6' or '4,6'")
    v.add_argument("--timing", action="store_true", help="report wall time (not deterministic)")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    h = sub.add_parser("hecke-act", help="act with Kazhdan-Lusztig generators")
    diag_opts(h)
    h.add_argument("--word", default="", help="e.g. 'D0 D1 C0'")
    h.add_argument("--json", action="store_true")
    h.set_defaults(func=cmd_hecke_act)

    s = sub.add_parser("shoji", help="stable pair of a one-row bipartition")
    s.add_argument("--lambda", dest="lam", type=int, required=True)
    s.add_argument("--mu", type=int, required=True)
    s.set_defaults(func=cmd_shoji)

    d = sub.add_parser("dims", help="Betti number reconciliation")
    d.add_argument("--m", type=int, required=True)
    d.add_argument("--k", type=int)
    d.add_argument("--method", choices=["all", "quotient", "formula", "cells", "basis"], default="all")
    d.set_defaults(func=cmd_dims)

    r = sub.add_parser("render", help="draw a diagram")
    diag_opts(r)
    r.set_defaults(func=cmd_render)

    c = sub.add_parser("convert", help="convert between JSON and sequences")
    diag_opts(c)
    c.add_argument("--to", choices=["json", "seq", "both"], default="both")
    c.set_defaults(func=cmd_convert)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except (UsageError, DiagramError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
