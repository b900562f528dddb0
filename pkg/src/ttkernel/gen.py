"""Typed term generators and enumerators for the property suites.

Generation is by typed synthesis: lambdas at function types, then a
weighted choice among constructors and spines whose (possibly
instantiated) result type matches the target. Enumeration goes the
other way: every well-scoped tree up to a node-count bound is produced
and filtered through the checker, which makes completeness immediate.
"""

from __future__ import annotations

import random
from itertools import product

from .check import check_ty, conv_ty
from .errors import KernelError
from .nbe import normalize_ty
from .normal import erase
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
    node_count,
    rename_with,
    shift,
    subst1,
    uses_index,
)


class GenerationStuck(Exception):
    """No synthesis rule applies at the requested type."""


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


# ---------------------------------------------------------------------------
# Random generation


def gen_term(sig: Signature, ctx: Context, ty: Ty, size: int, seed=0) -> Term:
    """A random well-typed term at ``ty``; deterministic per seed.

    ``size`` guides the node count. Raises GenerationStuck at an
    uninhabited type (say, a constant type in an empty context).
    """
    return _gen_term(sig, ctx, ty, max(size, 1), _rng(seed))


def _gen_term(sig, ctx, ty, size, rng) -> Term:
    if isinstance(ty, Pi):
        return Lam(_gen_term(sig, ctx.extend(ty.dom), ty.cod, size - 1, rng))
    heads = _spine_heads(sig, ctx, ty)
    if size < 2:
        # no budget to generate arguments, so only fully determined spines
        heads = [h for h in heads if len(h[2]) == len(h[1])]
    options = []
    if isinstance(ty, Nat):
        options.append("zero")
        if size >= 2:
            options += ["succ", "succ"]
    if heads:
        options += ["spine"] * 3
    if size >= 5:
        options += ["ind"]
    while options:
        pick = rng.choice(options)
        try:
            if pick == "zero":
                return Zero()
            if pick == "succ":
                return Succ(_gen_term(sig, ctx, ty, size - 1, rng))
            if pick == "spine":
                return _gen_spine(sig, ctx, rng.choice(heads), size, rng)
            return _gen_ind(sig, ctx, ty, size, rng)
        except GenerationStuck:
            options = [o for o in options if o != pick]
    if isinstance(ty, Nat):
        return Zero()
    raise GenerationStuck(f"no inhabitant found at {ty!r}")


def _peel(ty: Ty) -> tuple[tuple[Ty, ...], Ty]:
    tele = []
    while isinstance(ty, Pi):
        tele.append(ty.dom)
        ty = ty.cod
    return tuple(tele), ty


def _spine_heads(sig, ctx, ty):
    """Heads whose result type can be made to match ``ty``."""
    heads = []
    for i in range(len(ctx)):
        tele, result = _peel(ctx.var_type(i))
        binds = _match_result(result, ty, len(tele))
        if binds is not None:
            heads.append((Var(i), tele, binds))
    for d in sig.decls:
        if isinstance(d, PostulateTm):
            binds = _match_result(d.result, ty, len(d.params))
            if binds is not None:
                heads.append((d.name, d.params, binds))
    return heads


def _gen_spine(sig, ctx, head, size, rng) -> Term:
    name_or_var, tele, binds = head
    k = len(tele)
    committed = sum(node_count(a) for a in binds.values())
    free = max(k - len(binds), 1)
    share = max(1, (size - 1 - committed) // free)
    args = []
    for j in range(k):
        if j in binds:
            args.append(binds[j])
        else:
            args.append(_gen_term(sig, ctx, inst_params(tele[j], tuple(args)), share, rng))
    if isinstance(name_or_var, Var):
        t: Term = name_or_var
        for a in args:
            t = App(t, a)
        return t
    return TmConst(name_or_var, tuple(args))


def _match_result(pattern: Ty, target: Ty, k: int):
    """Match a head's result type against the target.

    Returns telescope-position bindings for the parameters that occur in
    the result, or None when the head cannot produce the target.
    """
    binds: dict[int, Term] = {}
    if not _match_ty(pattern, target, k, binds):
        return None
    return {k - 1 - idx: t for idx, t in binds.items()}


def _match_ty(pat, tgt, k, binds) -> bool:
    if k == 0:
        return alpha_eq(pat, tgt)
    match (pat, tgt):
        case (Nat(), Nat()):
            return True
        case (TyConst(c1, pas), TyConst(c2, tas)) if c1 == c2 and len(pas) == len(tas):
            return all(_match_tm(p, t, k, binds) for p, t in zip(pas, tas))
        case (Pi(_, _), Pi(_, _)):
            return _param_free_eq(pat, tgt, k)
    return False


def _match_tm(pat, tgt, k, binds) -> bool:
    match pat:
        case Var(j) if j < k:
            if j in binds:
                return alpha_eq(binds[j], tgt)
            binds[j] = tgt
            return True
        case Var(j):
            return tgt == Var(j - k)
        case Zero():
            return tgt == Zero()
        case Succ(p):
            return isinstance(tgt, Succ) and _match_tm(p, tgt.pred, k, binds)
        case App(f, a):
            return (
                isinstance(tgt, App)
                and _match_tm(f, tgt.fn, k, binds)
                and _match_tm(a, tgt.arg, k, binds)
            )
        case TmConst(c, pas):
            return (
                isinstance(tgt, TmConst)
                and tgt.name == c
                and len(tgt.args) == len(pas)
                and all(_match_tm(p, t, k, binds) for p, t in zip(pas, tgt.args))
            )
        case Lam(_) | NatInd(_, _, _, _):
            return _param_free_eq(pat, tgt, k)
    return False


def _param_free_eq(pat, tgt, k) -> bool:
    # binders inside a result type: only match when no parameter occurs
    if any(uses_index(pat, j) for j in range(k)):
        return False
    return alpha_eq(shift(pat, -k), tgt)


def _gen_ind(sig, ctx, ty, size, rng) -> Term:
    scrut = _gen_term(sig, ctx, Nat(), max(1, (size - 2) // 4), rng)
    motive = shift(ty, 1)
    if rng.random() < 0.3:
        dependent = [
            m
            for m in ty_abstractions(ty, scrut)
            if uses_index(m, 0) and _wf_motive(sig, ctx, m)
        ]
        if dependent:
            motive = rng.choice(dependent)
    budget = max(1, (size - 1 - node_count(scrut) - node_count(motive)) // 2)
    zcase = _gen_term(sig, ctx, subst1(motive, Zero()), budget, rng)
    ctx2 = ctx.extend(Nat()).extend(motive)
    scase = _gen_term(sig, ctx2, motive_succ_case(motive), budget, rng)
    return NatInd(scrut, motive, zcase, scase)


def _wf_motive(sig, ctx, motive) -> bool:
    # abstracting only some occurrences of the scrutinee can break a
    # dependency between a spine's arguments, so re-check the family
    try:
        check_ty(sig, ctx.extend(Nat()), motive)
    except KernelError:
        return False
    return True


def gen_type(sig: Signature, ctx: Context, rng=None, size: int = 4) -> Ty:
    """A random well-formed type; Pi nesting is bounded by ``size``."""
    rng = _rng(rng if rng is not None else 0)
    choices = ["nat", "nat"]
    ty_consts = [d for d in sig.decls if isinstance(d, PostulateTy)]
    if ty_consts:
        choices += ["const", "const"]
    if size >= 3:
        choices += ["pi", "pi"]
    while choices:
        pick = rng.choice(choices)
        if pick == "nat":
            return Nat()
        if pick == "pi":
            dom = gen_type(sig, ctx, rng, (size - 1) // 2)
            cod = gen_type(sig, ctx.extend(dom), rng, size - 1 - node_count(dom))
            return Pi(dom, cod)
        d = rng.choice(ty_consts)
        try:
            args = []
            for i, p in enumerate(d.params):
                args.append(_gen_term(sig, ctx, inst_params(p, tuple(args)), 2, rng))
            return TyConst(d.name, tuple(args))
        except GenerationStuck:
            choices = [c for c in choices if c != "const"]
    return Nat()


def gen_context(sig: Signature, rng=None, max_len: int = 3, size: int = 4) -> Context:
    rng = _rng(rng if rng is not None else 0)
    ctx = Context()
    for _ in range(rng.randint(0, max_len)):
        ctx = ctx.extend(gen_type(sig, ctx, rng, size))
    return ctx


def gen_renaming(sig: Signature, seed=0) -> tuple[Context, Context, Renaming]:
    """A target telescope, an induced source, and a type-respecting map.

    The construction walks source slots, picks a target variable whose
    type's support already has preimages, and pulls the type back along
    the map; repeats give contractions, skips give weakenings, and the
    order gives exchanges.
    """
    rng = _rng(seed)
    for _ in range(100):
        tgt = gen_context(sig, rng, max_len=3, size=3)
        n_t = len(tgt)
        if n_t == 0:
            continue
        lvl_map: list[int] = []  # source level -> target level
        entries: list[Ty] = []
        for i in range(rng.randint(0, n_t + 1)):
            candidates = []
            for lvl in range(n_t):
                entry = tgt.entries[lvl]
                needed = [u for u in range(lvl) if uses_index(entry, u)]
                if all(any(m == lvl - 1 - u for m in lvl_map) for u in needed):
                    candidates.append(lvl)
            if not candidates:
                break
            lvl = rng.choice(candidates)
            entry = tgt.entries[lvl]
            inverse = []
            for u in range(lvl):
                pre = [kk for kk, m in enumerate(lvl_map) if m == lvl - 1 - u]
                k_src = rng.choice(pre) if pre else 0  # unused when u is not free
                inverse.append(max(i - 1 - k_src, 0) if not pre else i - 1 - k_src)
            entries.append(rename_with(tuple(inverse), entry))
            lvl_map.append(lvl)
        src = Context(tuple(entries))
        n_s = len(entries)
        idx_map = tuple(n_t - 1 - lvl_map[n_s - 1 - v] for v in range(n_s))
        return src, tgt, Renaming(src, tgt, idx_map)
    raise GenerationStuck("could not generate a renaming")


# ---------------------------------------------------------------------------
# Abstraction: every one-binder family whose instantiation gives back ``ty``


def ty_abstractions(ty: Ty, u: Term) -> list[Ty]:
    """All types B binding one variable with subst1(B, u) == ty.

    Purely syntactic: a partial abstraction can be ill-formed when the
    occurrences it skips carry a dependency, so callers who need a
    well-formed family must re-check the candidates.
    """
    return _dedup(_abs_ty(ty, u, 0))


def _abs_ty(ty, u, d) -> list:
    match ty:
        case Nat():
            return [Nat()]
        case Pi(dom, cod):
            return [Pi(a, b) for a in _abs_ty(dom, u, d) for b in _abs_ty(cod, u, d + 1)]
        case TyConst(c, args):
            return [TyConst(c, t) for t in _abs_args(args, u, d)]
    raise AssertionError(f"not a type: {ty!r}")


def _abs_tm(t, u, d) -> list:
    out = []
    if t == shift(u, d):
        out.append(Var(d))
    match t:
        case Var(i):
            out.append(Var(i + 1) if i >= d else Var(i))
        case Zero():
            out.append(Zero())
        case Succ(p):
            out += [Succ(q) for q in _abs_tm(p, u, d)]
        case Lam(b):
            out += [Lam(q) for q in _abs_tm(b, u, d + 1)]
        case App(f, a):
            out += [App(g, b) for g in _abs_tm(f, u, d) for b in _abs_tm(a, u, d)]
        case NatInd(n, m, z, s):
            out += [
                NatInd(*combo)
                for combo in product(
                    _abs_tm(n, u, d), _abs_ty(m, u, d + 1), _abs_tm(z, u, d), _abs_tm(s, u, d + 2)
                )
            ]
        case TmConst(c, args):
            out += [TmConst(c, t) for t in _abs_args(args, u, d)]
    return out


def _abs_args(args, u, d) -> list:
    return [tuple(combo) for combo in product(*(_abs_tm(a, u, d) for a in args))] if args else [()]


def _dedup(items: list) -> list:
    seen = set()
    out = []
    for x in items:
        if x not in seen:
            seen.add(x)
            out.append(x)
    return out


# ---------------------------------------------------------------------------
# Declarative typability.
#
# The kernel's checker is strictly bidirectional, so it rejects bare
# beta-redexes like (\x. x) zero even though the theory types them. The
# enumerator wants those terms (equivalence classes under conversion are
# only interesting with redexes in them), so it filters with a liberal
# judge: bidirectional rules plus inference of a lambda-headed
# application by synthesizing the argument's type.


def typable(sig: Signature, ctx: Context, t: Term, ty: Ty) -> bool:
    """Declarative well-typedness at ``ty`` (checker rules + redex rule)."""
    if isinstance(t, Lam):
        return isinstance(ty, Pi) and typable(sig, ctx.extend(ty.dom), t.body, ty.cod)
    got = _infer_liberal(sig, ctx, t)
    if got is None:
        return False
    try:
        return conv_ty(sig, ctx, got, ty)
    except KernelError:
        return False


def _infer_liberal(sig, ctx, t) -> Ty | None:
    match t:
        case Var(i):
            return ctx.var_type(i) if 0 <= i < len(ctx) else None
        case Lam(_):
            return None
        case App(Lam(body), a):
            a_ty = _infer_liberal(sig, ctx, a)
            if a_ty is None or not _wf_liberal(sig, ctx, a_ty):
                return None
            b_ty = _infer_liberal(sig, ctx.extend(a_ty), body)
            return None if b_ty is None else subst1(b_ty, a)
        case App(f, a):
            f_ty = _infer_liberal(sig, ctx, f)
            if f_ty is None:
                return None
            f_ty = erase(normalize_ty(sig, ctx, f_ty))
            if not isinstance(f_ty, Pi) or not typable(sig, ctx, a, f_ty.dom):
                return None
            return subst1(f_ty.cod, a)
        case Zero():
            return Nat()
        case Succ(p):
            return Nat() if typable(sig, ctx, p, Nat()) else None
        case NatInd(scrut, motive, zcase, scase):
            if not typable(sig, ctx, scrut, Nat()):
                return None
            if not _wf_liberal(sig, ctx.extend(Nat()), motive):
                return None
            if not typable(sig, ctx, zcase, subst1(motive, Zero())):
                return None
            ctx2 = ctx.extend(Nat()).extend(motive)
            if not typable(sig, ctx2, scase, motive_succ_case(motive)):
                return None
            return subst1(motive, scrut)
        case TmConst(name, args):
            decl = sig.get(name)
            if not isinstance(decl, PostulateTm) or len(decl.params) != len(args):
                return None
            for i, a in enumerate(args):
                if not typable(sig, ctx, a, inst_params(decl.params[i], tuple(args[:i]))):
                    return None
            return inst_params(decl.result, args)
    return None


def _wf_liberal(sig, ctx, ty) -> bool:
    match ty:
        case Nat():
            return True
        case Pi(dom, cod):
            return _wf_liberal(sig, ctx, dom) and _wf_liberal(sig, ctx.extend(dom), cod)
        case TyConst(name, args):
            decl = sig.get(name)
            if not isinstance(decl, PostulateTy) or len(decl.params) != len(args):
                return False
            return all(
                typable(sig, ctx, a, inst_params(decl.params[i], tuple(args[:i])))
                for i, a in enumerate(args)
            )
    return False


# ---------------------------------------------------------------------------
# Exhaustive enumeration


class _RawEnum:
    """All well-scoped trees of an exact node count, memoized by depth."""

    def __init__(self, sig: Signature):
        self.tm_consts = [d for d in sig.decls if isinstance(d, PostulateTm)]
        self.ty_consts = [d for d in sig.decls if isinstance(d, PostulateTy)]
        self._terms: dict[tuple[int, int], tuple] = {}
        self._types: dict[tuple[int, int], tuple] = {}

    def terms(self, n: int, s: int) -> tuple:
        key = (n, s)
        if key in self._terms:
            return self._terms[key]
        out: list[Term] = []
        if s == 1:
            out += [Var(i) for i in range(n)]
            out.append(Zero())
            out += [TmConst(d.name) for d in self.tm_consts if not d.params]
        elif s >= 2:
            out += [Succ(p) for p in self.terms(n, s - 1)]
            out += [Lam(b) for b in self.terms(n + 1, s - 1)]
            for s1 in range(1, s - 1):
                for f in self.terms(n, s1):
                    out += [App(f, a) for a in self.terms(n, s - 1 - s1)]
            for d in self.tm_consts:
                if d.params:
                    out += [
                        TmConst(d.name, args)
                        for args in self._arg_tuples(n, len(d.params), s - 1)
                    ]
            for sizes in _compositions(s - 1, 4):
                for scrut in self.terms(n, sizes[0]):
                    for motive in self.types(n + 1, sizes[1]):
                        for z in self.terms(n, sizes[2]):
                            out += [
                                NatInd(scrut, motive, z, sc)
                                for sc in self.terms(n + 2, sizes[3])
                            ]
        result = tuple(out)
        self._terms[key] = result
        return result

    def types(self, n: int, s: int) -> tuple:
        key = (n, s)
        if key in self._types:
            return self._types[key]
        out: list[Ty] = []
        if s == 1:
            out.append(Nat())
            out += [TyConst(d.name) for d in self.ty_consts if not d.params]
        elif s >= 2:
            for d in self.ty_consts:
                if d.params:
                    out += [
                        TyConst(d.name, args)
                        for args in self._arg_tuples(n, len(d.params), s - 1)
                    ]
            for s1 in range(1, s - 1):
                for dom in self.types(n, s1):
                    out += [Pi(dom, cod) for cod in self.types(n + 1, s - 1 - s1)]
        result = tuple(out)
        self._types[key] = result
        return result

    def _arg_tuples(self, n: int, k: int, budget: int):
        for sizes in _compositions(budget, k):
            yield from product(*(self.terms(n, sz) for sz in sizes))


def _compositions(total: int, parts: int):
    """All tuples of ``parts`` positive integers summing to ``total``."""
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enum_terms(sig: Signature, ctx: Context, ty: Ty, max_size: int) -> list[Term]:
    """Every well-typed term at ``ty`` with node count <= ``max_size``."""
    raw = _RawEnum(sig)
    out = []
    for s in range(1, max_size + 1):
        out += [t for t in raw.terms(len(ctx), s) if typable(sig, ctx, t, ty)]
    return out


def enum_types(sig: Signature, ctx: Context, max_size: int) -> list[Ty]:
    """Every well-formed type with node count <= ``max_size``."""
    raw = _RawEnum(sig)
    out = []
    for s in range(1, max_size + 1):
        out += [ty for ty in raw.types(len(ctx), s) if _wf_liberal(sig, ctx, ty)]
    return out
