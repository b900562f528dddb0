"""Normalization by evaluation.

Evaluation sends well-typed syntax into the semantic domain, computing
the beta rules of application and the Nat eliminator on the way; reify
reads values back as eta-long normal forms, minting fresh variables as
de Bruijn levels from the current depth. ``normalize_tm`` composes the
two over the identity environment of a context.
"""

from __future__ import annotations

from .domain import (
    BiClosure,
    Closure,
    DConst,
    DNat,
    DPi,
    Env,
    NApp,
    NConst,
    NNatInd,
    NVar,
    Neutral,
    ReflectClosure,
    SemTy,
    TyClosure,
    Value,
    VLam,
    VNe,
    VSucc,
    VZero,
    env_lookup,
    var_value,
)
from .normal import (
    AppNe,
    FunNf,
    LamNf,
    NatIndNe,
    NatNf,
    NeConst,
    NeNat,
    NeTm,
    NfTm,
    NfTy,
    SuccNf,
    TmConstNe,
    TyConstNf,
    VarNe,
    ZeroNf,
)
from .signature import PostulateTm, Signature
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
)


def eval_ty(sig: Signature, env: Env, ty: Ty) -> SemTy:
    match ty:
        case Pi(dom, cod):
            return DPi(eval_ty(sig, env, dom), TyClosure(env, cod))
        case Nat():
            return DNat()
        case TyConst(name, args):
            return DConst(name, tuple(eval_tm(sig, env, a) for a in args))
    raise AssertionError(f"not a type: {ty!r}")


def eval_tm(sig: Signature, env: Env, t: Term) -> Value:
    match t:
        case Var(i):
            return env_lookup(env, i)
        case Lam(body):
            return VLam(Closure(env, body))
        case App(f, a):
            return apply(sig, eval_tm(sig, env, f), eval_tm(sig, env, a))
        case Zero():
            return VZero()
        case Succ(p):
            return VSucc(eval_tm(sig, env, p))
        case NatInd(scrut, motive, z, s):
            return _nat_ind(sig, env, motive, z, s, eval_tm(sig, env, scrut))
        case TmConst(name, args):
            decl = sig.lookup(name)
            assert isinstance(decl, PostulateTm), f"'{name}' is not a term constant"
            values = tuple(eval_tm(sig, env, a) for a in args)
            result_ty = eval_ty(sig, values, decl.result)
            return reflect(result_ty, NConst(name, values))
    raise AssertionError(f"not a term: {t!r}")


def _nat_ind(sig, env, motive, zcase, scase, scrut: Value) -> Value:
    match scrut:
        case VZero():
            return eval_tm(sig, env, zcase)
        case VSucc(p):
            rec = _nat_ind(sig, env, motive, zcase, scase, p)
            return eval_tm(sig, env + (p, rec), scase)
        case VNe(_, ne):
            blocked = NNatInd(ne, TyClosure(env, motive), eval_tm(sig, env, zcase), BiClosure(env, scase))
            return reflect(eval_ty(sig, env + (scrut,), motive), blocked)
    raise AssertionError(f"eliminating a non-Nat value: {scrut!r}")


def apply(sig: Signature, fn: Value, arg: Value, arg_ty: SemTy | None = None) -> Value:
    """Apply a semantic function value to an argument.

    ``arg_ty`` only matters for reflected neutrals, whose closures
    already record their domain; passing it is optional.
    """
    assert isinstance(fn, VLam), f"applying a non-function: {fn!r}"
    clo = fn.clo
    if isinstance(clo, Closure):
        return eval_tm(sig, clo.env + (arg,), clo.body)
    result_ty = eval_ty(sig, clo.cod.env + (arg,), clo.cod.body)
    return reflect(result_ty, NApp(clo.ne, arg, arg_ty if arg_ty is not None else clo.dom))


def reflect(ty: SemTy, ne: Neutral) -> Value:
    """Embed a neutral at a semantic type.

    At a function type this produces a lambda whose body re-reflects the
    application spine; at Nat and at type constants it is the neutral
    constructor itself.
    """
    match ty:
        case DPi(dom, cod):
            return VLam(ReflectClosure(ne, dom, cod))
        case DNat() | DConst():
            return VNe(ty, ne)
    raise AssertionError(f"not a semantic type: {ty!r}")


def reify(sig: Signature, depth: int, ty: SemTy, v: Value) -> NfTm:
    """Read a value back as an eta-long normal form under ``depth`` binders."""
    match ty:
        case DPi(dom, cod):
            fresh = var_value(dom, depth)
            body = apply(sig, v, fresh, dom)
            body_ty = eval_ty(sig, cod.env + (fresh,), cod.body)
            return LamNf(reify(sig, depth + 1, body_ty, body))
        case DNat():
            match v:
                case VZero():
                    return ZeroNf()
                case VSucc(p):
                    return SuccNf(reify(sig, depth, ty, p))
                case VNe(_, ne):
                    return NeNat(reify_ne(sig, depth, ne))
            raise AssertionError(f"not a Nat value: {v!r}")
        case DConst(name, args):
            assert isinstance(v, VNe), f"not a neutral at a constant type: {v!r}"
            return NeConst(name, _reify_const_args(sig, depth, name, args), reify_ne(sig, depth, v.ne))
    raise AssertionError(f"not a semantic type: {ty!r}")


def reify_ne(sig: Signature, depth: int, ne: Neutral) -> NeTm:
    """Read a neutral back, converting levels to indices."""
    match ne:
        case NVar(level):
            assert level < depth, f"level {level} escapes depth {depth}"
            return VarNe(depth - 1 - level)
        case NApp(fn, arg, arg_ty):
            return AppNe(reify_ne(sig, depth, fn), reify(sig, depth, arg_ty, arg))
        case NNatInd(scrut, motive, zcase, scase):
            fresh_n = var_value(DNat(), depth)
            motive_nf = nfty(sig, depth + 1, eval_ty(sig, motive.env + (fresh_n,), motive.body))
            zcase_nf = reify(sig, depth, eval_ty(sig, motive.env + (VZero(),), motive.body), zcase)
            fresh_ih = var_value(eval_ty(sig, motive.env + (fresh_n,), motive.body), depth + 1)
            body = eval_tm(sig, scase.env + (fresh_n, fresh_ih), scase.body)
            body_ty = eval_ty(sig, motive.env + (VSucc(fresh_n),), motive.body)
            scase_nf = reify(sig, depth + 2, body_ty, body)
            return NatIndNe(reify_ne(sig, depth, scrut), motive_nf, zcase_nf, scase_nf)
        case NConst(name, args):
            return TmConstNe(name, _reify_const_args(sig, depth, name, args))
    raise AssertionError(f"not a neutral: {ne!r}")


def _reify_const_args(sig, depth, name, args) -> tuple[NfTm, ...]:
    params = sig.lookup(name).params
    nfs = []
    for i, v in enumerate(args):
        param_ty = eval_ty(sig, tuple(args[:i]), params[i])
        nfs.append(reify(sig, depth, param_ty, v))
    return tuple(nfs)


def nfty(sig: Signature, depth: int, ty: SemTy) -> NfTy:
    """Read a semantic type back as a normal type."""
    match ty:
        case DNat():
            return NatNf()
        case DConst(name, args):
            return TyConstNf(name, _reify_const_args(sig, depth, name, args))
        case DPi(dom, cod):
            fresh = var_value(dom, depth)
            cod_sem = eval_ty(sig, cod.env + (fresh,), cod.body)
            return FunNf(nfty(sig, depth, dom), nfty(sig, depth + 1, cod_sem))
    raise AssertionError(f"not a semantic type: {ty!r}")


def id_env(sig: Signature, ctx: Context) -> Env:
    """Environment sending each context variable to its own reflection."""
    env: Env = ()
    for level, entry in enumerate(ctx.entries):
        env += (var_value(eval_ty(sig, env, entry), level),)
    return env


def normalize_tm(sig: Signature, ctx: Context, ty: Ty, t: Term) -> NfTm:
    env = id_env(sig, ctx)
    return reify(sig, len(ctx), eval_ty(sig, env, ty), eval_tm(sig, env, t))


def normalize_ty(sig: Signature, ctx: Context, ty: Ty) -> NfTy:
    return nfty(sig, len(ctx), eval_ty(sig, id_env(sig, ctx), ty))
