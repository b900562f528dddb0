"""A tiny dependent type theory kernel.

Dependent functions, natural numbers with induction, and user-declared
constants; definitional equality decided by normalization by
evaluation, cross-validated against an independent rewriting oracle.
"""

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
    numeral,
    rename,
    shift,
    subst1,
)
from .signature import Define, PostulateTm, PostulateTy, Signature, declare
from .normal import NeTm, NfTm, NfTy, erase, is_normal, rename_nf
from .nbe import normalize_tm, normalize_ty
from .check import check, check_ty, conv_tm, conv_ty, infer
from .rewrite import oracle_equal, rw_normalize, step
from .surface import elaborate, parse, print_nf

__all__ = [
    "App",
    "Context",
    "Define",
    "Lam",
    "Nat",
    "NatInd",
    "NeTm",
    "NfTm",
    "NfTy",
    "Pi",
    "PostulateTm",
    "PostulateTy",
    "Renaming",
    "Signature",
    "Succ",
    "Term",
    "TmConst",
    "Ty",
    "TyConst",
    "Var",
    "Zero",
    "alpha_eq",
    "check",
    "check_ty",
    "conv_tm",
    "conv_ty",
    "declare",
    "elaborate",
    "erase",
    "infer",
    "is_normal",
    "normalize_tm",
    "normalize_ty",
    "numeral",
    "oracle_equal",
    "parse",
    "print_nf",
    "rename",
    "rename_nf",
    "rw_normalize",
    "shift",
    "step",
    "subst1",
]
