import pytest

from ttkernel.signature import PostulateTm, PostulateTy, Signature, declare
from ttkernel.surface import elaborate, parse
from ttkernel.syntax import Nat, TyConst, Var, Zero

WALKTHROUGH = r"""
-- free-model constants plus arithmetic
postulate A
postulate B (x : A)
postulate f : (x : A) -> B x
def add : Nat -> Nat -> Nat := \m. \n. ind(m; _. Nat; n; p r. succ r)
def mul : Nat -> Nat -> Nat := \m. \n. ind(m; _. Nat; zero; p r. add n r)
"""


@pytest.fixture(scope="session")
def sig_empty():
    return Signature()


@pytest.fixture(scope="session")
def sig_abf():
    sig = declare(Signature(), PostulateTy("A"))
    sig = declare(sig, PostulateTy("B", (TyConst("A"),)))
    return declare(sig, PostulateTm("f", (TyConst("A"),), TyConst("B", (Var(0),))))


@pytest.fixture(scope="session")
def sig_walkthrough():
    return elaborate(parse(WALKTHROUGH))


@pytest.fixture(scope="session")
def sig_dep():
    """A signature with a Nat-indexed constant, for dependent motives."""
    sig = declare(Signature(), PostulateTy("C", (Nat(),)))
    sig = declare(sig, PostulateTm("c0", (), TyConst("C", (Zero(),))))
    sig = declare(sig, PostulateTm("h", (Nat(),), TyConst("C", (Var(0),))))
    # g's second parameter depends on its first: partial abstractions of
    # its spines are ill-formed, which the generators must respect
    return declare(sig, PostulateTm("g", (Nat(), TyConst("C", (Var(0),))), Nat()))
