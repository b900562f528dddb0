"""Core syntax: terms, types, contexts, renamings, substitution.

Terms and types are well-scoped de Bruijn trees: ``Var(0)`` is the
innermost binder. A context is a telescope ordered outermost-first, so
``Var(i)`` refers to ``entries[len(entries) - 1 - i]``. Everything is an
immutable, hashable dataclass; structural equality is alpha-equivalence
for free.
"""

from __future__ import annotations

from dataclasses import dataclass


class Ty:
    """Base class for types."""


class Term:
    """Base class for terms."""


@dataclass(frozen=True)
class Pi(Ty):
    dom: Ty
    cod: Ty  # binds 1


@dataclass(frozen=True)
class Nat(Ty):
    pass


@dataclass(frozen=True)
class TyConst(Ty):
    name: str
    args: tuple[Term, ...] = ()


@dataclass(frozen=True)
class Var(Term):
    index: int


@dataclass(frozen=True)
class Lam(Term):
    body: Term  # binds 1


@dataclass(frozen=True)
class App(Term):
    fn: Term
    arg: Term


@dataclass(frozen=True)
class Zero(Term):
    pass


@dataclass(frozen=True)
class Succ(Term):
    pred: Term


@dataclass(frozen=True)
class NatInd(Term):
    """Fully annotated eliminator for Nat.

    ``motive`` binds the scrutinee variable. ``scase`` binds two
    variables: the predecessor (index 1) and the recursive result
    (index 0).
    """

    scrut: Term
    motive: Ty  # binds 1
    zcase: Term
    scase: Term  # binds 2


@dataclass(frozen=True)
class TmConst(Term):
    name: str
    args: tuple[Term, ...] = ()


@dataclass(frozen=True)
class Context:
    """A telescope: entry i is scoped over the entries before it."""

    entries: tuple[Ty, ...] = ()

    def __len__(self) -> int:
        return len(self.entries)

    def extend(self, ty: Ty) -> Context:
        return Context(self.entries + (ty,))

    def var_type(self, index: int) -> Ty:
        """Type of ``Var(index)``, weakened to the whole context."""
        n = len(self.entries)
        if not 0 <= index < n:
            raise IndexError(f"variable {index} in context of length {n}")
        return shift(self.entries[n - 1 - index], index + 1)


EMPTY = Context()


def numeral(n: int) -> Term:
    t: Term = Zero()
    for _ in range(n):
        t = Succ(t)
    return t


# ---------------------------------------------------------------------------
# Variable traversals.  All index manipulation funnels through one generic
# walk so scoping stays consistent across the binders of Lam, Pi and NatInd.


def _map_term(t: Term, depth: int, on_var) -> Term:
    match t:
        case Var(i):
            return on_var(i, depth)
        case Lam(b):
            return Lam(_map_term(b, depth + 1, on_var))
        case App(f, a):
            return App(_map_term(f, depth, on_var), _map_term(a, depth, on_var))
        case Zero():
            return t
        case Succ(p):
            return Succ(_map_term(p, depth, on_var))
        case NatInd(n, motive, z, s):
            return NatInd(
                _map_term(n, depth, on_var),
                _map_ty(motive, depth + 1, on_var),
                _map_term(z, depth, on_var),
                _map_term(s, depth + 2, on_var),
            )
        case TmConst(c, args):
            return TmConst(c, tuple(_map_term(a, depth, on_var) for a in args))
    raise AssertionError(f"not a term: {t!r}")


def _map_ty(ty: Ty, depth: int, on_var) -> Ty:
    match ty:
        case Pi(dom, cod):
            return Pi(_map_ty(dom, depth, on_var), _map_ty(cod, depth + 1, on_var))
        case Nat():
            return ty
        case TyConst(c, args):
            return TyConst(c, tuple(_map_term(a, depth, on_var) for a in args))
    raise AssertionError(f"not a type: {ty!r}")


def _map(t, on_var):
    if isinstance(t, Ty):
        return _map_ty(t, 0, on_var)
    return _map_term(t, 0, on_var)


def shift(t, by: int, cutoff: int = 0):
    """Add ``by`` to every free index >= ``cutoff``."""
    if by == 0:
        return t

    def on_var(i, d):
        return Var(i + by) if i >= cutoff + d else Var(i)

    return _map(t, on_var)


def subst_many(t, sigma: tuple[Term, ...]):
    """Simultaneously replace ``Var(j)`` by ``sigma[j]``; higher indices drop."""
    k = len(sigma)

    def on_var(i, d):
        if i < d:
            return Var(i)
        j = i - d
        if j < k:
            return shift(sigma[j], d)
        return Var(i - k)

    return _map(t, on_var)


def subst1(body, arg: Term):
    """Capture-avoiding substitution of ``arg`` for the innermost binder."""
    return subst_many(body, (arg,))


def inst_params(t, args: tuple[Term, ...]):
    """Instantiate a term/type scoped in a parameter telescope.

    ``args`` is in telescope order (outermost parameter first), so the
    innermost index 0 receives the last argument.
    """
    return subst_many(t, tuple(reversed(args)))


def motive_succ_case(motive: Ty) -> Ty:
    """Expected type of a NatInd successor case, scoped over (n, ih)."""
    return subst1(shift(motive, 2, cutoff=1), Succ(Var(1)))


def uses_index(t, i: int) -> bool:
    """Does the free variable ``i`` occur in ``t``?"""
    found = False

    def on_var(j, d):
        nonlocal found
        if j == i + d:
            found = True
        return Var(j)

    _map(t, on_var)
    return found


def node_count(t) -> int:
    """Size of a term or type: nodes including binders."""
    match t:
        case Var(_) | Zero() | Nat():
            return 1
        case Lam(b):
            return 1 + node_count(b)
        case Succ(p):
            return 1 + node_count(p)
        case App(f, a):
            return 1 + node_count(f) + node_count(a)
        case NatInd(n, motive, z, s):
            return 1 + node_count(n) + node_count(motive) + node_count(z) + node_count(s)
        case TmConst(_, args) | TyConst(_, args):
            return 1 + sum(node_count(a) for a in args)
        case Pi(dom, cod):
            return 1 + node_count(dom) + node_count(cod)
    raise AssertionError(f"not syntax: {t!r}")


def alpha_eq(a, b) -> bool:
    """Alpha-equivalence: plain structural equality of de Bruijn trees."""
    return a == b


# ---------------------------------------------------------------------------
# Renamings


def rename_with(mapping: tuple[int, ...], t):
    """Apply a raw variable map (index i goes to mapping[i])."""

    def on_var(i, d):
        if i < d:
            return Var(i)
        return Var(mapping[i - d] + d)

    return _map(t, on_var)


@dataclass(frozen=True)
class Renaming:
    """A type-respecting variable map between contexts.

    ``map[i]`` is the target index of source variable i. Weakening,
    exchange and contraction are all representable.
    """

    source: Context
    target: Context
    map: tuple[int, ...]

    def __post_init__(self):
        assert len(self.map) == len(self.source), "map length must match source"
        for i, j in enumerate(self.map):
            assert 0 <= j < len(self.target), f"map[{i}]={j} escapes the target"
            src_ty = rename_with(self.map, self.source.var_type(i))
            assert src_ty == self.target.var_type(j), (
                f"renaming does not respect the type of variable {i}"
            )

    @staticmethod
    def identity(ctx: Context) -> Renaming:
        return Renaming(ctx, ctx, tuple(range(len(ctx))))

    @staticmethod
    def weakening(ctx: Context, ty: Ty) -> Renaming:
        return Renaming(ctx, ctx.extend(ty), tuple(i + 1 for i in range(len(ctx))))

    def lift(self, dom: Ty) -> Renaming:
        """Extend under one binder of type ``dom`` (scoped in the source)."""
        return Renaming(
            self.source.extend(dom),
            self.target.extend(rename_with(self.map, dom)),
            (0,) + tuple(j + 1 for j in self.map),
        )

    def compose(self, first: Renaming) -> Renaming:
        """``self`` after ``first``."""
        assert first.target == self.source
        return Renaming(first.source, self.target, tuple(self.map[j] for j in first.map))


def rename(r: Renaming, t):
    """Apply a renaming to a term or type."""
    return rename_with(r.map, t)
