"""Normal-form trees: erasure, renaming, the recognition predicate."""

from ttkernel.gen import gen_renaming, gen_term, GenerationStuck
from ttkernel.nbe import normalize_tm, normalize_ty
from ttkernel.normal import (
    AppNe,
    FunNf,
    LamNf,
    NatNf,
    NeNat,
    SuccNf,
    VarNe,
    ZeroNf,
    erase,
    is_normal,
    is_normal_ty,
    rename_nf,
    to_nf,
    to_nf_ty,
)
from ttkernel.syntax import (
    App,
    Context,
    Lam,
    Nat,
    Pi,
    Renaming,
    Succ,
    Var,
    Zero,
    numeral,
    rename,
)

NN = Pi(Nat(), Nat())


def test_erase_homomorphic():
    assert erase(SuccNf(ZeroNf())) == Succ(Zero())


def test_erase_forgets_coercions():
    assert erase(NeNat(VarNe(0))) == Var(0)


def test_erase_layers():
    n = LamNf(NeNat(AppNe(VarNe(1), NeNat(VarNe(0)))))
    assert erase(n) == Lam(App(Var(1), Var(0)))


def test_rename_nf_identity():
    ctx = Context((Nat(),))
    n = NeNat(VarNe(0))
    assert rename_nf(Renaming.identity(ctx), n) == n


def test_rename_nf_weakening():
    r = Renaming.weakening(Context((Nat(),)), Nat())
    assert rename_nf(r, NeNat(VarNe(0))) == NeNat(VarNe(1))


def test_rename_nf_swap():
    ctx = Context((NN, Nat()))  # f : Nat -> Nat, x : Nat
    swapped = Context((Nat(), NN))
    r = Renaming(ctx, swapped, (1, 0))
    n = NeNat(AppNe(VarNe(1), NeNat(VarNe(0))))  # f x
    assert rename_nf(r, n) == NeNat(AppNe(VarNe(0), NeNat(VarNe(1))))


def test_rename_nf_commutes_with_erase(sig_abf):
    import random

    rng = random.Random(5)
    done = 0
    seed = 0
    while done < 50:
        seed += 1
        src, tgt, r = gen_renaming(sig_abf, seed)
        try:
            t = gen_term(sig_abf, src, Nat(), 6, rng)
        except GenerationStuck:
            continue
        done += 1
        n = normalize_tm(sig_abf, src, Nat(), t)
        assert erase(rename_nf(r, n)) == rename(r, erase(n))


def test_is_normal_numeral(sig_empty):
    assert is_normal(sig_empty, Context(), Nat(), Succ(Zero()))


def test_is_normal_rejects_beta_redex(sig_empty):
    assert not is_normal(sig_empty, Context(), Nat(), App(Lam(Var(0)), Zero()))


def test_is_normal_rejects_bare_neutral_at_function_type(sig_empty):
    # eta-long discipline: a variable of function type is not yet normal
    ctx = Context((NN,))
    assert not is_normal(sig_empty, ctx, NN, Var(0))
    assert is_normal(sig_empty, ctx, NN, Lam(App(Var(1), Var(0))))


def test_is_normal_rejects_reducible_eliminator(sig_empty):
    from ttkernel.syntax import NatInd

    t = NatInd(Zero(), Nat(), Zero(), Var(0))
    assert not is_normal(sig_empty, Context(), Nat(), t)


def test_is_normal_ty(sig_abf):
    from ttkernel.syntax import TyConst

    ctx = Context((TyConst("A"),))
    assert is_normal_ty(sig_abf, ctx, TyConst("B", (Var(0),)))
    assert not is_normal_ty(
        sig_abf, ctx, TyConst("B", (App(Lam(Var(0)), Var(0)),))
    )


def test_roundtrip_unique_reconstruction(sig_abf):
    # the tree rebuilt from an erased normal form is the original tree
    import random

    from ttkernel.gen import gen_context, gen_type

    rng = random.Random(11)
    done = 0
    while done < 100:
        ctx = gen_context(sig_abf, rng, max_len=3, size=4)
        ty = gen_type(sig_abf, ctx, rng, size=4)
        try:
            t = gen_term(sig_abf, ctx, ty, 8, rng)
        except GenerationStuck:
            continue
        done += 1
        n = normalize_tm(sig_abf, ctx, ty, t)
        back = erase(normalize_ty(sig_abf, ctx, ty))
        assert to_nf(sig_abf, ctx, back, erase(n)) == n
        assert to_nf_ty(sig_abf, ctx, back) == normalize_ty(sig_abf, ctx, ty)


def test_erase_injective_small(sig_empty):
    # exhaustively: distinct normal trees at a fixed type erase differently
    from ttkernel.gen import enum_terms

    ctx = Context((Nat(),))
    seen = {}
    for t in enum_terms(sig_empty, ctx, Nat(), 5):
        n = normalize_tm(sig_empty, ctx, Nat(), t)
        e = erase(n)
        assert seen.setdefault(e, n) == n


def test_numeral_roundtrip(sig_empty):
    n = normalize_tm(sig_empty, Context(), Nat(), numeral(4))
    assert n == SuccNf(SuccNf(SuccNf(SuccNf(ZeroNf()))))
    assert to_nf(sig_empty, Context(), Nat(), numeral(4)) == n


def test_fun_nf_shape(sig_empty):
    assert to_nf_ty(sig_empty, Context(), NN) == FunNf(NatNf(), NatNf())
