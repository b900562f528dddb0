"""Bidirectional checking and conversion."""

import random

import pytest

from ttkernel.check import check, check_ty, conv_tm, conv_ty, infer
from ttkernel.errors import (
    ArityMismatch,
    CannotInfer,
    CheckError,
    Mismatch,
    MotiveMismatch,
    NotAFunction,
    UnboundVariable,
    UnknownConstant,
)
from ttkernel.gen import GenerationStuck, gen_context, gen_term, gen_type
from ttkernel.nbe import normalize_tm
from ttkernel.normal import erase
from ttkernel.rewrite import oracle_equal
from ttkernel.syntax import (
    App,
    Context,
    Lam,
    Nat,
    NatInd,
    Pi,
    Succ,
    TmConst,
    TyConst,
    Var,
    Zero,
)

NN = Pi(Nat(), Nat())
A = TyConst("A")


def test_check_ty_nat(sig_empty):
    check_ty(sig_empty, Context(), Nat())


def test_check_ty_rejects_wrong_index(sig_abf):
    with pytest.raises(Mismatch):
        check_ty(sig_abf, Context(), TyConst("B", (Zero(),)))


def test_check_ty_constant_function_type(sig_abf):
    check_ty(sig_abf, Context(), Pi(A, TyConst("B", (Var(0),))))


def test_check_ty_arity(sig_abf):
    with pytest.raises(ArityMismatch):
        check_ty(sig_abf, Context(), TyConst("B", ()))


def test_check_ty_unknown(sig_empty):
    with pytest.raises(UnknownConstant):
        check_ty(sig_empty, Context(), TyConst("A"))


def test_infer_zero(sig_empty):
    assert infer(sig_empty, Context(), Zero()) == Nat()


def test_infer_eliminator(sig_empty):
    t = NatInd(Var(0), Nat(), Zero(), Succ(Var(0)))
    assert infer(sig_empty, Context((Nat(),)), t) == Nat()


def test_infer_lambda_fails(sig_empty):
    with pytest.raises(CannotInfer):
        infer(sig_empty, Context(), Lam(Var(0)))


def test_infer_unbound(sig_empty):
    with pytest.raises(UnboundVariable):
        infer(sig_empty, Context(), Var(0))


def test_infer_not_a_function(sig_empty):
    with pytest.raises(NotAFunction):
        infer(sig_empty, Context(), App(Zero(), Zero()))


def test_infer_motive_mismatch(sig_empty):
    bad = NatInd(Zero(), Nat(), Lam(Var(0)), Var(0))
    with pytest.raises(MotiveMismatch):
        infer(sig_empty, Context(), bad)


def test_infer_constant_arity(sig_abf):
    with pytest.raises(ArityMismatch):
        infer(sig_abf, Context(), TmConst("f", ()))


def test_check_lambda(sig_empty):
    check(sig_empty, Context(), Lam(Var(0)), NN)


def test_check_mismatch(sig_empty):
    with pytest.raises(Mismatch):
        check(sig_empty, Context(), Succ(Zero()), NN)


def test_check_sees_through_redex_in_expected_type(sig_abf):
    ctx = Context((A,))
    check(sig_abf, ctx, TmConst("f", (Var(0),)), TyConst("B", (App(Lam(Var(0)), Var(0)),)))


def test_conv_beta(sig_empty):
    assert conv_tm(sig_empty, Context(), Nat(), App(Lam(Var(0)), Zero()), Zero())


def test_conv_eta(sig_empty):
    ctx = Context((NN,))
    assert conv_tm(sig_empty, ctx, NN, Var(0), Lam(App(Var(1), Var(0))))


def test_conv_distinguishes_numerals(sig_empty):
    assert not conv_tm(sig_empty, Context(), Nat(), Zero(), Succ(Zero()))


def test_conv_ty_through_index_redex(sig_abf):
    ctx = Context((A,))
    assert conv_ty(
        sig_abf, ctx, TyConst("B", (Var(0),)), TyConst("B", (App(Lam(Var(0)), Var(0)),))
    )
    assert not conv_ty(sig_abf, Context((A, A)), TyConst("B", (Var(0),)), TyConst("B", (Var(1),)))


def _cases(sig, count, seed, size=8):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        ctx = gen_context(sig, rng, max_len=2, size=4)
        ty = gen_type(sig, ctx, rng, size=4)
        try:
            t = gen_term(sig, ctx, ty, size, rng)
            u = gen_term(sig, ctx, ty, size, rng)
        except GenerationStuck:
            continue
        out.append((ctx, ty, t, u))
    return out


def test_conv_is_equivalence_and_congruence(sig_abf):
    for ctx, ty, t, u in _cases(sig_abf, 60, seed=1):
        assert conv_tm(sig_abf, ctx, ty, t, t)
        assert conv_tm(sig_abf, ctx, ty, t, u) == conv_tm(sig_abf, ctx, ty, u, t)
        # congruence under the successor and under abstraction
        if ty == Nat():
            assert conv_tm(sig_abf, ctx, ty, t, u) == conv_tm(
                sig_abf, ctx, ty, Succ(t), Succ(u)
            )


def test_conv_agrees_with_oracle(sig_abf):
    for ctx, ty, t, u in _cases(sig_abf, 80, seed=2):
        assert conv_tm(sig_abf, ctx, ty, t, u) == oracle_equal(sig_abf, ctx, ty, t, u)


def test_subject_reduction_through_normal_form(sig_abf):
    for ctx, ty, t, _ in _cases(sig_abf, 60, seed=3):
        back = erase(normalize_tm(sig_abf, ctx, ty, t))
        check(sig_abf, ctx, back, ty)


def test_checker_error_carries_normal_forms(sig_empty):
    try:
        check(sig_empty, Context(), Succ(Zero()), NN)
    except Mismatch as e:
        assert e.expected_nf is not None and e.actual_nf is not None
        assert "Nat -> Nat" in str(e)
    else:
        raise AssertionError("expected a Mismatch")


def test_check_rejects_ill_typed_constant_argument(sig_abf):
    with pytest.raises(CheckError):
        infer(sig_abf, Context(), TmConst("f", (Zero(),)))
