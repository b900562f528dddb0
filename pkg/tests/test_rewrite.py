"""The rewriting oracle: stepping, normalization, equality."""

import random

import pytest

from ttkernel.errors import FuelExhausted
from ttkernel.gen import GenerationStuck, gen_context, gen_term, gen_type
from ttkernel.normal import is_normal
from ttkernel.check import check
from ttkernel.rewrite import oracle_equal, rw_normalize, step
from ttkernel.syntax import (
    App,
    Context,
    Lam,
    Nat,
    NatInd,
    Pi,
    Succ,
    Var,
    Zero,
    numeral,
)

NN = Pi(Nat(), Nat())


def test_step_beta(sig_empty):
    assert step(sig_empty, App(Lam(Var(0)), Zero())) == Zero()


def test_step_ind_zero(sig_empty):
    t = NatInd(Zero(), Nat(), Succ(Zero()), Succ(Var(0)))
    assert step(sig_empty, t) == Succ(Zero())


def test_step_ind_succ(sig_empty):
    t = NatInd(Succ(Zero()), Nat(), Zero(), Succ(Var(0)))
    rec = NatInd(Zero(), Nat(), Zero(), Succ(Var(0)))
    assert step(sig_empty, t) == Succ(rec)


def test_step_is_leftmost_outermost(sig_empty):
    inner = App(Lam(Var(0)), Zero())
    t = App(Lam(Var(0)), inner)
    assert step(sig_empty, t) == inner  # the root redex fires first
    two = App(inner, inner)
    assert step(sig_empty, two) == App(Zero(), inner)  # then left before right


def test_step_none_on_normal(sig_empty):
    assert step(sig_empty, Lam(Var(0))) is None
    assert step(sig_empty, numeral(3)) is None


def test_rw_normalize_counts_three_steps(sig_empty):
    # 2 + 1 via the eliminator: two successor steps and one zero step
    t = NatInd(numeral(2), Nat(), numeral(1), Succ(Var(0)))
    seen = 0
    u = t
    while (v := step(sig_empty, u)) is not None:
        u = v
        seen += 1
    assert seen == 3
    assert u == numeral(3)
    assert rw_normalize(sig_empty, Context(), Nat(), t) == numeral(3)


def test_rw_normalize_pure_eta(sig_empty):
    ctx = Context((NN,))
    assert rw_normalize(sig_empty, ctx, NN, Var(0)) == Lam(App(Var(1), Var(0)))


def test_rw_normalize_fixed_point(sig_empty):
    assert rw_normalize(sig_empty, Context(), Nat(), Zero()) == Zero()


def test_rw_normalize_eta_under_nested_functions(sig_empty):
    ctx = Context((Pi(NN, Nat()),))
    got = rw_normalize(sig_empty, ctx, Pi(NN, Nat()), Var(0))
    # \g. x0 (\y. g y): both the outer variable and its argument eta-expand
    assert got == Lam(App(Var(1), Lam(App(Var(1), Var(0)))))


def test_oracle_equal_basics(sig_empty):
    assert oracle_equal(sig_empty, Context(), Nat(), Zero(), App(Lam(Var(0)), Zero()))
    assert not oracle_equal(sig_empty, Context(), Nat(), Zero(), Succ(Zero()))
    ctx = Context((NN,))
    assert oracle_equal(sig_empty, ctx, NN, Var(0), Lam(App(Var(1), Var(0))))


def test_output_is_normal_and_well_typed(sig_abf):
    rng = random.Random(4)
    done = 0
    while done < 100:
        ctx = gen_context(sig_abf, rng, max_len=3, size=4)
        ty = gen_type(sig_abf, ctx, rng, size=4)
        try:
            t = gen_term(sig_abf, ctx, ty, 9, rng)
        except GenerationStuck:
            continue
        done += 1
        out = rw_normalize(sig_abf, ctx, ty, t)
        assert is_normal(sig_abf, ctx, ty, out)
        check(sig_abf, ctx, out, ty)
        # determinism: a second run returns the same term
        assert rw_normalize(sig_abf, ctx, ty, t) == out


def test_fuel_exhaustion_signals(sig_empty):
    with pytest.raises(FuelExhausted):
        rw_normalize(sig_empty, Context(), Nat(), NatInd(numeral(9), Nat(), Zero(), Var(0)), fuel=2)


def test_dependent_eliminator_oracle(sig_dep):
    from ttkernel.syntax import TmConst, TyConst

    C = TyConst("C", (Var(0),))
    t = NatInd(numeral(2), C, TmConst("c0"), TmConst("h", (Succ(Var(1)),)))
    got = rw_normalize(sig_dep, Context(), TyConst("C", (numeral(2),)), t)
    assert got == TmConst("h", (numeral(2),))
