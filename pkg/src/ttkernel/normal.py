"""Normal forms: mutually inductive grammars of normal types, normal
terms and neutral terms, with erasure back to core syntax.

A normal term is beta/iota-free and eta-long: at a function type the
only normal inhabitants are lambdas, and a blocked elimination (a spine
headed by a variable or a term constant) is coerced into normal form
only at Nat or at a type constant. ``NeConst`` records the normal forms
of the type constant's arguments alongside the neutral itself.
"""

from __future__ import annotations

from dataclasses import dataclass

from .signature import PostulateTm, PostulateTy, Signature
from .syntax import (
    App,
    Context,
    Lam,
    Nat,
    NatInd,
    Pi,
    Renaming,
    Succ,
    Term,
    TmConst,
    Ty,
    TyConst,
    Var,
    Zero,
    alpha_eq,
    inst_params,
    motive_succ_case,
    subst1,
)


class NfTy:
    """Normal types."""


class NfTm:
    """Normal terms."""


class NeTm:
    """Neutral terms: blocked eliminations headed by a variable or constant."""


@dataclass(frozen=True)
class FunNf(NfTy):
    dom: NfTy
    cod: NfTy  # binds 1


@dataclass(frozen=True)
class NatNf(NfTy):
    pass


@dataclass(frozen=True)
class TyConstNf(NfTy):
    name: str
    args: tuple[NfTm, ...] = ()


@dataclass(frozen=True)
class LamNf(NfTm):
    body: NfTm  # binds 1


@dataclass(frozen=True)
class ZeroNf(NfTm):
    pass


@dataclass(frozen=True)
class SuccNf(NfTm):
    pred: NfTm


@dataclass(frozen=True)
class NeNat(NfTm):
    """A neutral coerced to normal form at type Nat."""

    ne: NeTm


@dataclass(frozen=True)
class NeConst(NfTm):
    """A neutral coerced to normal form at a type constant.

    ``index_nfs`` are the normal forms of the type's arguments.
    """

    name: str
    index_nfs: tuple[NfTm, ...]
    ne: NeTm


@dataclass(frozen=True)
class VarNe(NeTm):
    index: int


@dataclass(frozen=True)
class AppNe(NeTm):
    fn: NeTm
    arg: NfTm


@dataclass(frozen=True)
class NatIndNe(NeTm):
    scrut: NeTm
    motive: NfTy  # binds 1
    zcase: NfTm
    scase: NfTm  # binds 2


@dataclass(frozen=True)
class TmConstNe(NeTm):
    name: str
    args: tuple[NfTm, ...] = ()


def erase(n):
    """Forget normality structure; coercions erase to their payloads."""
    match n:
        case FunNf(d, c):
            return Pi(erase(d), erase(c))
        case NatNf():
            return Nat()
        case TyConstNf(c, args):
            return TyConst(c, tuple(erase(a) for a in args))
        case LamNf(b):
            return Lam(erase(b))
        case ZeroNf():
            return Zero()
        case SuccNf(p):
            return Succ(erase(p))
        case NeNat(e):
            return erase(e)
        case NeConst(_, _, e):
            return erase(e)
        case VarNe(i):
            return Var(i)
        case AppNe(f, a):
            return App(erase(f), erase(a))
        case NatIndNe(s, m, z, sc):
            return NatInd(erase(s), erase(m), erase(z), erase(sc))
        case TmConstNe(c, args):
            return TmConst(c, tuple(erase(a) for a in args))
    raise AssertionError(f"not a normal form: {n!r}")


def _map_nf(n, depth: int, on_var):
    match n:
        case FunNf(d, c):
            return FunNf(_map_nf(d, depth, on_var), _map_nf(c, depth + 1, on_var))
        case NatNf() | ZeroNf():
            return n
        case TyConstNf(c, args):
            return TyConstNf(c, tuple(_map_nf(a, depth, on_var) for a in args))
        case LamNf(b):
            return LamNf(_map_nf(b, depth + 1, on_var))
        case SuccNf(p):
            return SuccNf(_map_nf(p, depth, on_var))
        case NeNat(e):
            return NeNat(_map_nf(e, depth, on_var))
        case NeConst(c, idx, e):
            return NeConst(
                c,
                tuple(_map_nf(a, depth, on_var) for a in idx),
                _map_nf(e, depth, on_var),
            )
        case VarNe(i):
            return VarNe(on_var(i, depth))
        case AppNe(f, a):
            return AppNe(_map_nf(f, depth, on_var), _map_nf(a, depth, on_var))
        case NatIndNe(s, m, z, sc):
            return NatIndNe(
                _map_nf(s, depth, on_var),
                _map_nf(m, depth + 1, on_var),
                _map_nf(z, depth, on_var),
                _map_nf(sc, depth + 2, on_var),
            )
        case TmConstNe(c, args):
            return TmConstNe(c, tuple(_map_nf(a, depth, on_var) for a in args))
    raise AssertionError(f"not a normal form: {n!r}")


def rename_nf(r: Renaming, n):
    """Apply a renaming to a normal-form tree; commutes with erase."""

    def on_var(i, d):
        return i if i < d else r.map[i - d] + d

    return _map_nf(n, 0, on_var)


# ---------------------------------------------------------------------------
# Type-directed recognition of normal forms.
#
# to_nf reconstructs the unique normal-form tree over a term, or returns
# None if the term is not in the grammar. It assumes the type arguments
# occurring in ctx and ty are themselves normal terms, which holds for
# every type this kernel produces; with a non-normal type argument in
# the input the check is conservative.


def to_nf(sig: Signature, ctx: Context, ty: Ty, t: Term) -> NfTm | None:
    match ty:
        case Pi(dom, cod):
            if not isinstance(t, Lam):
                return None  # eta-long: normal inhabitants of Pi are lambdas
            body = to_nf(sig, ctx.extend(dom), cod, t.body)
            return None if body is None else LamNf(body)
        case Nat():
            match t:
                case Zero():
                    return ZeroNf()
                case Succ(p):
                    pnf = to_nf(sig, ctx, ty, p)
                    return None if pnf is None else SuccNf(pnf)
                case _:
                    spine = _to_ne(sig, ctx, t)
                    if spine is None or not isinstance(spine[1], Nat):
                        return None
                    return NeNat(spine[0])
        case TyConst(name, args):
            spine = _to_ne(sig, ctx, t)
            if spine is None or not alpha_eq(spine[1], ty):
                return None
            idx = _const_arg_nfs(sig, ctx, name, args)
            return None if idx is None else NeConst(name, idx, spine[0])
    raise AssertionError(f"not a type: {ty!r}")


def to_nf_ty(sig: Signature, ctx: Context, ty: Ty) -> NfTy | None:
    match ty:
        case Pi(dom, cod):
            dnf = to_nf_ty(sig, ctx, dom)
            cnf = to_nf_ty(sig, ctx.extend(dom), cod)
            return None if dnf is None or cnf is None else FunNf(dnf, cnf)
        case Nat():
            return NatNf()
        case TyConst(name, args):
            idx = _const_arg_nfs(sig, ctx, name, args)
            return None if idx is None else TyConstNf(name, idx)
    raise AssertionError(f"not a type: {ty!r}")


def _const_arg_nfs(sig, ctx, name, args) -> tuple[NfTm, ...] | None:
    decl = sig.get(name)
    if not isinstance(decl, PostulateTy) or len(decl.params) != len(args):
        return None
    nfs = []
    for i, a in enumerate(args):
        anf = to_nf(sig, ctx, inst_params(decl.params[i], tuple(args[:i])), a)
        if anf is None:
            return None
        nfs.append(anf)
    return tuple(nfs)


def _to_ne(sig: Signature, ctx: Context, t: Term) -> tuple[NeTm, Ty] | None:
    """Parse a neutral spine, returning its tree and its inferred type."""
    match t:
        case Var(i):
            if not 0 <= i < len(ctx):
                return None
            return VarNe(i), ctx.var_type(i)
        case App(f, a):
            head = _to_ne(sig, ctx, f)
            if head is None or not isinstance(head[1], Pi):
                return None
            anf = to_nf(sig, ctx, head[1].dom, a)
            if anf is None:
                return None
            return AppNe(head[0], anf), subst1(head[1].cod, a)
        case NatInd(scrut, motive, z, s):
            head = _to_ne(sig, ctx, scrut)
            if head is None or not isinstance(head[1], Nat):
                return None
            mnf = to_nf_ty(sig, ctx.extend(Nat()), motive)
            znf = to_nf(sig, ctx, subst1(motive, Zero()), z)
            ctx2 = ctx.extend(Nat()).extend(motive)
            snf = to_nf(sig, ctx2, motive_succ_case(motive), s)
            if mnf is None or znf is None or snf is None:
                return None
            return NatIndNe(head[0], mnf, znf, snf), subst1(motive, scrut)
        case TmConst(name, args):
            decl = sig.get(name)
            if not isinstance(decl, PostulateTm) or len(decl.params) != len(args):
                return None
            nfs = []
            for i, a in enumerate(args):
                anf = to_nf(sig, ctx, inst_params(decl.params[i], tuple(args[:i])), a)
                if anf is None:
                    return None
                nfs.append(anf)
            return TmConstNe(name, tuple(nfs)), inst_params(decl.result, args)
        case _:
            return None


def is_normal(sig: Signature, ctx: Context, ty: Ty, t: Term) -> bool:
    """Is ``t`` the erasure of a well-typed normal-form tree at ``ty``?"""
    return to_nf(sig, ctx, ty, t) is not None


def is_normal_ty(sig: Signature, ctx: Context, ty: Ty) -> bool:
    return to_nf_ty(sig, ctx, ty) is not None
