"""Bidirectional typechecker with conversion by normal-form comparison."""

from __future__ import annotations

from .errors import (
    ArityMismatch,
    CannotInfer,
    Mismatch,
    MotiveMismatch,
    NotAFunction,
    UnboundVariable,
    UnknownConstant,
)
from .nbe import normalize_tm, normalize_ty
from .normal import NfTy, erase
from .signature import PostulateTm, PostulateTy, Signature
from .syntax import (
    App,
    Context,
    Lam,
    Nat,
    NatInd,
    Pi,
    Succ,
    Term,
    TmConst,
    Ty,
    TyConst,
    Var,
    Zero,
    inst_params,
    motive_succ_case,
    subst1,
)


def check_ty(sig: Signature, ctx: Context, ty: Ty) -> None:
    """Check that ``ty`` is a well-formed type."""
    match ty:
        case Pi(dom, cod):
            check_ty(sig, ctx, dom)
            check_ty(sig, ctx.extend(dom), cod)
        case Nat():
            pass
        case TyConst(name, args):
            decl = sig.get(name)
            if not isinstance(decl, PostulateTy):
                raise UnknownConstant(f"'{name}' is not a type constant")
            _check_args(sig, ctx, name, decl.params, args)
        case _:
            raise AssertionError(f"not a type: {ty!r}")


def _check_args(sig, ctx, name, params, args):
    if len(params) != len(args):
        raise ArityMismatch(
            f"'{name}' expects {len(params)} argument(s), got {len(args)}"
        )
    for i, a in enumerate(args):
        check(sig, ctx, a, inst_params(params[i], tuple(args[:i])))


def infer(sig: Signature, ctx: Context, t: Term) -> Ty:
    """Synthesize a type, or fail; lambdas are check-only."""
    match t:
        case Var(i):
            if not 0 <= i < len(ctx):
                raise UnboundVariable(f"unbound variable {i}")
            return ctx.var_type(i)
        case Lam(_):
            raise CannotInfer("cannot infer the type of a lambda; annotate it")
        case App(f, a):
            fn_ty = erase(normalize_ty(sig, ctx, infer(sig, ctx, f)))
            if not isinstance(fn_ty, Pi):
                raise NotAFunction("application head is not a function")
            check(sig, ctx, a, fn_ty.dom)
            return subst1(fn_ty.cod, a)
        case Zero():
            return Nat()
        case Succ(p):
            check(sig, ctx, p, Nat())
            return Nat()
        case NatInd(scrut, motive, zcase, scase):
            check(sig, ctx, scrut, Nat())
            check_ty(sig, ctx.extend(Nat()), motive)
            try:
                check(sig, ctx, zcase, subst1(motive, Zero()))
            except Mismatch as e:
                raise MotiveMismatch(f"zero case does not match the motive: {e}") from e
            ctx2 = ctx.extend(Nat()).extend(motive)
            try:
                check(sig, ctx2, scase, motive_succ_case(motive))
            except Mismatch as e:
                raise MotiveMismatch(f"successor case does not match the motive: {e}") from e
            return subst1(motive, scrut)
        case TmConst(name, args):
            decl = sig.get(name)
            if not isinstance(decl, PostulateTm):
                raise UnknownConstant(f"'{name}' is not a term constant")
            _check_args(sig, ctx, name, decl.params, args)
            return inst_params(decl.result, args)
    raise AssertionError(f"not a term: {t!r}")


def check(sig: Signature, ctx: Context, t: Term, ty: Ty) -> None:
    """Check ``t`` against ``ty``; conversion sees through beta/iota/eta."""
    if isinstance(t, Lam):
        if not isinstance(ty, Pi):
            raise Mismatch(
                f"function literal checked against {_ty_str(sig, ctx, ty)}",
                expected_nf=normalize_ty(sig, ctx, ty),
            )
        check(sig, ctx.extend(ty.dom), t.body, ty.cod)
        return
    actual = infer(sig, ctx, t)
    expected_nf = normalize_ty(sig, ctx, ty)
    actual_nf = normalize_ty(sig, ctx, actual)
    if expected_nf != actual_nf:
        raise Mismatch(
            f"expected {_nf_str(expected_nf, ctx)}, got {_nf_str(actual_nf, ctx)}",
            expected_nf=expected_nf,
            actual_nf=actual_nf,
        )


def conv_ty(sig: Signature, ctx: Context, a: Ty, b: Ty) -> bool:
    """Definitional equality of well-formed types."""
    return normalize_ty(sig, ctx, a) == normalize_ty(sig, ctx, b)


def conv_tm(sig: Signature, ctx: Context, ty: Ty, t: Term, u: Term) -> bool:
    """Definitional equality of terms checked at ``ty``."""
    return normalize_tm(sig, ctx, ty, t) == normalize_tm(sig, ctx, ty, u)


def _nf_str(nf: NfTy, ctx: Context) -> str:
    from .surface import print_nf  # late import: surface depends on this module

    return print_nf(nf, tuple(f"v{i}" for i in range(len(ctx))))


def _ty_str(sig, ctx, ty) -> str:
    return _nf_str(normalize_ty(sig, ctx, ty), ctx)
