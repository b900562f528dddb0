"""Command-line interface.

    tt check FILE                 exit 0 ok / 1 type error / 2 parse error
    tt normalize FILE -e EXPR [-t TYPE] [--oracle]
                                  prints the normal form; with --oracle
                                  also rewrites independently, exit 3 on
                                  disagreement
    tt equal FILE -e E1 -e E2 [-t TYPE]
                                  exit 0 equal / 3 not equal
    tt fuzz FILE [--count N] [--seed S] [--size K]
                                  runs the property suites over FILE's
                                  signature

Any command accepts --json and emits {status, output, error{code, line,
col}}. The environment variable TT_FUEL overrides the oracle's fuel.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from . import gen
from .check import check, check_ty, conv_tm, infer
from .errors import KernelError, ParseError
from .nbe import normalize_tm
from .normal import erase, is_normal
from .rewrite import DEFAULT_FUEL, oracle_equal, rw_normalize
from .signature import Signature
from .surface import (
    elab_tm,
    elab_ty,
    elaborate,
    parse,
    parse_expression,
    parse_type,
    print_nf,
    print_tm,
)
from .syntax import Context, alpha_eq


def _fuel() -> int:
    return int(os.environ.get("TT_FUEL", DEFAULT_FUEL))


def _emit(args, status: str, output: str | None, error: KernelError | None, code: int) -> int:
    if args.json:
        record = {
            "status": status,
            "output": output,
            "error": None
            if error is None
            else {"code": error.code, "line": error.line, "col": error.col},
        }
        print(json.dumps(record))
    else:
        if output is not None:
            print(output)
        if error is not None:
            where = f"{error.line}:{error.col}: " if error.line is not None else ""
            print(f"error[{error.code}]: {where}{error}", file=sys.stderr)
    return code


def _load(path: str) -> Signature:
    with open(path, encoding="utf-8") as fh:
        return elaborate(parse(fh.read()))


def _expr_at(sig, text, ty_text):
    t = elab_tm(sig, (), parse_expression(text))
    if ty_text is not None:
        ty = elab_ty(sig, (), parse_type(ty_text))
        check_ty(sig, Context(), ty)
        check(sig, Context(), t, ty)
    else:
        ty = infer(sig, Context(), t)
    return t, ty


def _cmd_check(args) -> int:
    sig = _load(args.file)
    return _emit(args, "ok", f"ok: {len(sig.decls)} declaration(s)", None, 0)


def _cmd_normalize(args) -> int:
    sig = _load(args.file)
    t, ty = _expr_at(sig, args.expr, args.type)
    nf = normalize_tm(sig, Context(), ty, t)
    out = print_nf(nf)
    if args.oracle:
        rewritten = rw_normalize(sig, Context(), ty, t, _fuel())
        if not alpha_eq(erase(nf), rewritten):
            both = f"nbe:    {out}\noracle: {print_tm(rewritten)}"
            return _emit(args, "oracle-mismatch", both, None, 3)
    return _emit(args, "ok", out, None, 0)


def _cmd_equal(args) -> int:
    sig = _load(args.file)
    if len(args.expr) != 2:
        raise ParseError("equal needs exactly two -e expressions")
    t, ty = _expr_at(sig, args.expr[0], args.type)
    u = elab_tm(sig, (), parse_expression(args.expr[1]))
    check(sig, Context(), u, ty)
    if conv_tm(sig, Context(), ty, t, u):
        return _emit(args, "ok", "equal", None, 0)
    return _emit(args, "not-equal", "not equal", None, 3)


def _cmd_fuzz(args) -> int:
    sig = _load(args.file)
    rng = random.Random(args.seed)
    ran, stuck, failures = 0, 0, []
    while ran < args.count and stuck < 10 * args.count:
        ctx = gen.gen_context(sig, rng, max_len=3, size=4)
        ty = gen.gen_type(sig, ctx, rng, size=4)
        try:
            t = gen.gen_term(sig, ctx, ty, args.size, rng)
        except gen.GenerationStuck:
            stuck += 1
            continue
        ran += 1
        nf = normalize_tm(sig, ctx, ty, t)
        back = erase(nf)
        if not is_normal(sig, ctx, ty, back):
            failures.append(f"not normal: {t!r}")
        elif not oracle_equal(sig, ctx, ty, back, t, _fuel()):
            failures.append(f"oracle disagrees: {t!r}")
        elif normalize_tm(sig, ctx, ty, back) != nf:
            failures.append(f"not idempotent: {t!r}")
        else:
            try:
                check(sig, ctx, back, ty)
            except KernelError as e:
                failures.append(f"normal form fails to recheck: {t!r} ({e})")
    summary = f"{ran} case(s), {len(failures)} failure(s)"
    if failures:
        detail = summary + "\n" + "\n".join(failures[:10])
        return _emit(args, "error", detail, KernelError("property failure"), 1)
    return _emit(args, "ok", summary, None, 0)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="tt", description="tiny type theory kernel")
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="typecheck a file")
    p_check.add_argument("file")

    p_norm = sub.add_parser("normalize", help="print a normal form")
    p_norm.add_argument("file")
    p_norm.add_argument("-e", "--expr", required=True)
    p_norm.add_argument("-t", "--type", default=None)
    p_norm.add_argument("--oracle", action="store_true", help="cross-check with the rewriting oracle")

    p_eq = sub.add_parser("equal", help="decide definitional equality")
    p_eq.add_argument("file")
    p_eq.add_argument("-e", "--expr", action="append", default=[])
    p_eq.add_argument("-t", "--type", default=None)

    p_fuzz = sub.add_parser("fuzz", help="run the property suites")
    p_fuzz.add_argument("file")
    p_fuzz.add_argument("--count", type=int, default=100)
    p_fuzz.add_argument("--seed", type=int, default=0)
    p_fuzz.add_argument("--size", type=int, default=8)

    for p in (p_check, p_norm, p_eq, p_fuzz):
        p.add_argument("--json", action="store_true")

    args = parser.parse_args(argv)
    commands = {
        "check": _cmd_check,
        "normalize": _cmd_normalize,
        "equal": _cmd_equal,
        "fuzz": _cmd_fuzz,
    }
    try:
        return commands[args.command](args)
    except ParseError as e:
        return _emit(args, "parse-error", None, e, 2)
    except KernelError as e:
        return _emit(args, "type-error", None, e, 1)
    except FileNotFoundError as e:
        return _emit(args, "error", None, KernelError(str(e)), 1)


def entry():  # console-script hook
    sys.exit(main())


if __name__ == "__main__":
    entry()
