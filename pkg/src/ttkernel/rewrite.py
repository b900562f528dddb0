"""Rewriting oracle: an independent judge of definitional equality.

Normalization here is leftmost-outermost beta/iota rewriting to a
reduced form, followed by a type-directed eta-expansion pass, so the
result is comparable with the eta-long output of the evaluator. The
oracle never touches the semantic domain; it computes the types it
needs by rewriting alone.
"""

from __future__ import annotations

from .errors import FuelExhausted
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
    alpha_eq,
    inst_params,
    motive_succ_case,
    shift,
    subst1,
    subst_many,
)

DEFAULT_FUEL = 100_000


def step(sig: Signature, t: Term) -> Term | None:
    """Contract the leftmost-outermost redex, or return None if reduced."""
    match t:
        case App(Lam(body), arg):
            return subst1(body, arg)
        case NatInd(Zero(), _, zcase, _):
            return zcase
        case NatInd(Succ(n), motive, zcase, scase):
            rec = NatInd(n, motive, zcase, scase)
            return subst_many(scase, (rec, n))
    match t:
        case Var(_) | Zero():
            return None
        case Lam(body):
            b = step(sig, body)
            return None if b is None else Lam(b)
        case Succ(p):
            p2 = step(sig, p)
            return None if p2 is None else Succ(p2)
        case App(f, a):
            f2 = step(sig, f)
            if f2 is not None:
                return App(f2, a)
            a2 = step(sig, a)
            return None if a2 is None else App(f, a2)
        case NatInd(scrut, motive, zcase, scase):
            s2 = step(sig, scrut)
            if s2 is not None:
                return NatInd(s2, motive, zcase, scase)
            m2 = step_ty(sig, motive)
            if m2 is not None:
                return NatInd(scrut, m2, zcase, scase)
            z2 = step(sig, zcase)
            if z2 is not None:
                return NatInd(scrut, motive, z2, scase)
            sc2 = step(sig, scase)
            return None if sc2 is None else NatInd(scrut, motive, zcase, sc2)
        case TmConst(name, args):
            args2 = _step_args(sig, args)
            return None if args2 is None else TmConst(name, args2)
    raise AssertionError(f"not a term: {t!r}")


def step_ty(sig: Signature, ty: Ty) -> Ty | None:
    """Contract the leftmost redex inside a type's term arguments."""
    match ty:
        case Nat():
            return None
        case Pi(dom, cod):
            d2 = step_ty(sig, dom)
            if d2 is not None:
                return Pi(d2, cod)
            c2 = step_ty(sig, cod)
            return None if c2 is None else Pi(dom, c2)
        case TyConst(name, args):
            args2 = _step_args(sig, args)
            return None if args2 is None else TyConst(name, args2)
    raise AssertionError(f"not a type: {ty!r}")


def _step_args(sig, args):
    for i, a in enumerate(args):
        a2 = step(sig, a)
        if a2 is not None:
            return args[:i] + (a2,) + args[i + 1 :]
    return None


class _Fuel:
    def __init__(self, amount: int):
        self.remaining = amount

    def spend(self):
        self.remaining -= 1
        if self.remaining < 0:
            raise FuelExhausted("rewriting did not terminate within the fuel limit")


def _reduce(sig, t: Term, fuel: _Fuel) -> Term:
    while (t2 := step(sig, t)) is not None:
        fuel.spend()
        t = t2
    return t


def _reduce_ty(sig, ty: Ty, fuel: _Fuel) -> Ty:
    while (ty2 := step_ty(sig, ty)) is not None:
        fuel.spend()
        ty = ty2
    return ty


def rw_normalize(sig: Signature, ctx: Context, ty: Ty, t: Term, fuel: int = DEFAULT_FUEL) -> Term:
    """Normalize by rewriting: beta/iota to a reduced form, then eta-expand.

    Raises FuelExhausted if the step budget runs out, which cannot happen
    on well-typed input.
    """
    tank = _Fuel(fuel)
    reduced = _reduce(sig, t, tank)
    return _eta_tm(sig, ctx, _reduce_ty(sig, ty, tank), reduced, tank)


def _eta_tm(sig, ctx: Context, ty: Ty, t: Term, fuel: _Fuel) -> Term:
    # ty is beta/iota-reduced, t is beta/iota-reduced
    match ty:
        case Pi(dom, cod):
            body = t.body if isinstance(t, Lam) else App(shift(t, 1), Var(0))
            return Lam(_eta_tm(sig, ctx.extend(dom), cod, body, fuel))
        case Nat():
            match t:
                case Zero():
                    return t
                case Succ(p):
                    return Succ(_eta_tm(sig, ctx, ty, p, fuel))
                case _:
                    return _eta_ne(sig, ctx, t, fuel)[0]
        case TyConst(_, _):
            return _eta_ne(sig, ctx, t, fuel)[0]
    raise AssertionError(f"not a type: {ty!r}")


def _eta_ne(sig, ctx: Context, t: Term, fuel: _Fuel) -> tuple[Term, Ty]:
    """Eta-expand the arguments of a neutral spine; returns its type too."""
    match t:
        case Var(i):
            return t, _reduce_ty(sig, ctx.var_type(i), fuel)
        case App(f, a):
            f2, f_ty = _eta_ne(sig, ctx, f, fuel)
            assert isinstance(f_ty, Pi), f"spine head is not a function: {f_ty!r}"
            a2 = _eta_tm(sig, ctx, f_ty.dom, a, fuel)
            return App(f2, a2), _reduce_ty(sig, subst1(f_ty.cod, a2), fuel)
        case NatInd(scrut, motive, zcase, scase):
            scrut2, _ = _eta_ne(sig, ctx, scrut, fuel)
            motive2 = _eta_ty(sig, ctx.extend(Nat()), _reduce_ty(sig, motive, fuel), fuel)
            zcase2 = _eta_tm(sig, ctx, _reduce_ty(sig, subst1(motive2, Zero()), fuel), zcase, fuel)
            ctx2 = ctx.extend(Nat()).extend(motive2)
            scase_ty = _reduce_ty(sig, motive_succ_case(motive2), fuel)
            scase2 = _eta_tm(sig, ctx2, scase_ty, scase, fuel)
            result = _reduce_ty(sig, subst1(motive2, scrut2), fuel)
            return NatInd(scrut2, motive2, zcase2, scase2), result
        case TmConst(name, args):
            decl = sig.lookup(name)
            assert isinstance(decl, PostulateTm), f"'{name}' is not a term constant"
            args2 = _eta_args(sig, ctx, decl.params, args, fuel)
            return TmConst(name, args2), _reduce_ty(sig, inst_params(decl.result, args2), fuel)
    raise AssertionError(f"not a neutral spine: {t!r}")


def _eta_ty(sig, ctx: Context, ty: Ty, fuel: _Fuel) -> Ty:
    match ty:
        case Nat():
            return ty
        case Pi(dom, cod):
            dom2 = _eta_ty(sig, ctx, dom, fuel)
            return Pi(dom2, _eta_ty(sig, ctx.extend(dom2), _reduce_ty(sig, cod, fuel), fuel))
        case TyConst(name, args):
            decl = sig.lookup(name)
            assert isinstance(decl, PostulateTy)
            return TyConst(name, _eta_args(sig, ctx, decl.params, args, fuel))
    raise AssertionError(f"not a type: {ty!r}")


def _eta_args(sig, ctx, params, args, fuel):
    out = []
    for i, a in enumerate(args):
        param_ty = _reduce_ty(sig, inst_params(params[i], tuple(out)), fuel)
        out.append(_eta_tm(sig, ctx, param_ty, _reduce(sig, a, fuel), fuel))
    return tuple(out)


def oracle_equal(
    sig: Signature, ctx: Context, ty: Ty, t: Term, u: Term, fuel: int = DEFAULT_FUEL
) -> bool:
    """Definitional equality by rewriting both sides to normal form."""
    return alpha_eq(rw_normalize(sig, ctx, ty, t, fuel), rw_normalize(sig, ctx, ty, u, fuel))
