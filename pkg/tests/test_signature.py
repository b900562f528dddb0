"""Signatures: declaration checking, lookup, definition expansion."""

import pytest

from ttkernel.errors import CheckError, DuplicateName, UnknownName
from ttkernel.signature import (
    Define,
    PostulateTm,
    PostulateTy,
    Signature,
    declare,
    validate,
)
from ttkernel.syntax import Lam, Nat, TyConst, Var, Zero, numeral


def test_declare_free_model_constants():
    sig = declare(Signature(), PostulateTy("A"))
    assert sig.names() == ("A",)
    sig = declare(sig, PostulateTy("B", (TyConst("A"),)))
    assert sig.names() == ("A", "B")
    sig = declare(sig, PostulateTm("f", (TyConst("A"),), TyConst("B", (Var(0),))))
    assert sig.names() == ("A", "B", "f")


def test_declare_rejects_duplicates(sig_abf):
    with pytest.raises(DuplicateName):
        declare(sig_abf, PostulateTy("A"))


def test_declare_rejects_ill_formed():
    with pytest.raises(CheckError):
        declare(Signature(), PostulateTy("B", (TyConst("A"),)))  # A not declared yet
    sig = declare(Signature(), PostulateTy("A"))
    with pytest.raises(CheckError):
        # Zero : Nat cannot index B, which expects an A
        declare(
            declare(sig, PostulateTy("B", (TyConst("A"),))),
            PostulateTm("f", (), TyConst("B", (Zero(),))),
        )


def test_lookup(sig_abf):
    f = sig_abf.lookup("f")
    assert isinstance(f, PostulateTm)
    b = sig_abf.lookup("B")
    assert isinstance(b, PostulateTy) and len(b.params) == 1
    with pytest.raises(UnknownName):
        sig_abf.lookup("g")
    assert sig_abf.get("g") is None


def test_declare_checks_definitions():
    d = Define("two", Nat(), numeral(2))
    sig = declare(Signature(), d)
    assert sig.lookup("two") is d
    with pytest.raises(CheckError):
        declare(Signature(), Define("bad", Nat(), Lam(Var(0))))


def test_validate_rechecks_from_scratch(sig_walkthrough):
    validate(sig_walkthrough)


def test_dropping_definitions_leaves_valid_signature(sig_walkthrough):
    # definition bodies are pre-expanded, so postulates never mention them
    pruned = Signature(
        tuple(d for d in sig_walkthrough.decls if not isinstance(d, Define))
    )
    validate(pruned)


def test_definition_bodies_are_definition_free(sig_walkthrough):
    from ttkernel.syntax import TmConst

    def const_names(t, acc):
        if isinstance(t, TmConst):
            acc.add(t.name)
        for f in getattr(t, "__dataclass_fields__", ()):
            v = getattr(t, f)
            if isinstance(v, tuple):
                for x in v:
                    const_names(x, acc)
            elif hasattr(v, "__dataclass_fields__"):
                const_names(v, acc)
        return acc

    for d in sig_walkthrough.decls:
        if isinstance(d, Define):
            used = const_names(d.body, set())
            for name in used:
                assert not isinstance(sig_walkthrough.lookup(name), Define)
