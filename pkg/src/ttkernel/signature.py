"""Signatures: ordered, checked collections of postulated constants.

A signature realizes the free-model setting: type constants with term
telescopes, term constants with a telescope and a result type, and
transparent definitions (expanded during elaboration, so checked bodies
never mention other definitions).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DuplicateName, UnknownName
from .syntax import Context, Term, Ty


class Declaration:
    """Base class for signature entries."""

    name: str


@dataclass(frozen=True)
class PostulateTy(Declaration):
    name: str
    params: tuple[Ty, ...] = ()  # telescope


@dataclass(frozen=True)
class PostulateTm(Declaration):
    name: str
    params: tuple[Ty, ...]
    result: Ty  # scoped in params


@dataclass(frozen=True)
class Define(Declaration):
    name: str
    declared_type: Ty
    body: Term


@dataclass(frozen=True)
class Signature:
    decls: tuple[Declaration, ...] = ()

    def get(self, name: str) -> Declaration | None:
        for d in self.decls:
            if d.name == name:
                return d
        return None

    def lookup(self, name: str) -> Declaration:
        d = self.get(name)
        if d is None:
            raise UnknownName(f"unknown name '{name}'")
        return d

    def names(self) -> tuple[str, ...]:
        return tuple(d.name for d in self.decls)


EMPTY_SIG = Signature()


def declare(sig: Signature, decl: Declaration) -> Signature:
    """Check ``decl`` against ``sig`` and append it."""
    from .check import check, check_ty  # late import: the checker depends on signatures

    if sig.get(decl.name) is not None:
        raise DuplicateName(f"duplicate name '{decl.name}'")
    match decl:
        case PostulateTy(_, params):
            _check_telescope(sig, params)
        case PostulateTm(_, params, result):
            ctx = _check_telescope(sig, params)
            check_ty(sig, ctx, result)
        case Define(_, declared_type, body):
            check_ty(sig, Context(), declared_type)
            check(sig, Context(), body, declared_type)
        case _:
            raise AssertionError(f"not a declaration: {decl!r}")
    return Signature(sig.decls + (decl,))


def _check_telescope(sig: Signature, params: tuple[Ty, ...]) -> Context:
    from .check import check_ty

    ctx = Context()
    for ty in params:
        check_ty(sig, ctx, ty)
        ctx = ctx.extend(ty)
    return ctx


def validate(sig: Signature) -> None:
    """Re-check prefix-closed well-formedness from scratch."""
    rebuilt = Signature()
    for d in sig.decls:
        rebuilt = declare(rebuilt, d)
