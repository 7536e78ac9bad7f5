"""Unary constructions: duals, opposites, Yau twists, regular actions.

The dual basis is always the coordinate basis of the primal's chosen
basis; all dual-side structure maps are plain transposes, which keeps
every construction purely tensorial.
"""

from __future__ import annotations

from .errors import DimMismatch, NotAutomorphism
from .hom_core import (ActionMap, HomAlgebra, HomBialgebra, HomCoalgebra,
                       HomHopfAlgebra)
from .kernel import Tensor, ein, mat_inverse, mat_power, permute


def dual_label(label: str) -> str:
    return label[:-1] if label.endswith("*") else label + "*"


def op_label(label: str) -> str:
    return label[:-3] if label.endswith("^op") else label + "^op"


def dual_automorphism(H) -> Tensor:
    """The dual carries the transpose of beta^-1."""
    return permute(mat_inverse(H.beta), (1, 0))


def dual_hopf(H: HomHopfAlgebra) -> HomHopfAlgebra:
    """Dual Hopf structure on the coordinate functionals.

    Multiplication is convolution (transpose of the primal coproduct),
    unit is the primal counit, comultiplication is the transpose of the
    primal product, counit is evaluation at the primal unit, the antipode
    and automorphism are transposes of S and beta^-1.
    """
    lab = dual_label(H.label)
    delta = dual_automorphism(H)
    alg = HomAlgebra(H.dim, permute(H.comult, (1, 2, 0)), H.counit, delta, lab)
    coa = HomCoalgebra(H.dim, permute(H.mult, (2, 0, 1)), H.unit, delta, lab)
    return HomHopfAlgebra(HomBialgebra(alg, coa), permute(H.antipode, (1, 0)))


def opposite(H, derive_antipode=False):
    """Reverse the multiplication; coalgebra data is unchanged.

    No antipode is attached by default.  With derive_antipode=True the
    inverse of S is attached (raising Singular if S is not bijective);
    that choice is a derived convenience, not part of the construction.
    """
    lab = op_label(H.label)
    alg = HomAlgebra(H.dim, permute(H.mult, (1, 0, 2)), H.unit, H.beta, lab)
    coa = HomCoalgebra(H.dim, H.comult, H.counit, H.beta, lab)
    bi = HomBialgebra(alg, coa)
    if not derive_antipode:
        return bi
    return HomHopfAlgebra(bi, mat_inverse(H.antipode))


def _check_hopf_automorphism(H: HomHopfAlgebra, auto: Tensor):
    m, u, d, e, S = H.mult, H.unit, H.comult, H.counit, H.antipode
    checks = [
        ("auto.invertible", None, None),
        ("auto.mult", ein("abk,ko->abo", m, auto),
         ein("ai,bj,ijo->abo", auto, auto, m)),
        ("auto.unit", ein("i,ij->j", u, auto), u),
        ("auto.comult", ein("cx,xab->cab", auto, d),
         ein("cab,ax,by->cxy", d, auto, auto)),
        ("auto.counit", ein("ij,j->i", auto, e), e),
        ("auto.antipode", ein("ij,jk->ik", auto, S), ein("ij,jk->ik", S, auto)),
    ]
    for law, lhs, rhs in checks:
        if law == "auto.invertible":
            try:
                mat_inverse(auto)
            except Exception:
                raise NotAutomorphism(law) from None
            continue
        if lhs != rhs:
            raise NotAutomorphism(law)


def yau_twist(classical: HomHopfAlgebra, auto: Tensor) -> HomHopfAlgebra:
    """Deform a classical Hopf algebra (beta = id) along one of its
    Hopf automorphisms: new product auto . m, new coproduct Delta . auto^-1,
    twisting automorphism auto, antipode unchanged."""
    ident = Tensor.identity(classical.field, classical.dim)
    if classical.beta != ident:
        raise NotAutomorphism("classical.beta-id",
                              "yau_twist needs a classical input (beta = id)")
    _check_hopf_automorphism(classical, auto)
    inv = mat_inverse(auto)
    alg = HomAlgebra(classical.dim,
                     ein("abk,ko->abo", classical.mult, auto),
                     classical.unit, auto, classical.label)
    coa = HomCoalgebra(classical.dim,
                       ein("ix,xab->iab", inv, classical.comult),
                       classical.counit, auto, classical.label)
    return HomHopfAlgebra(HomBialgebra(alg, coa), classical.antipode)


def regular_action_left(H, i: int) -> ActionMap:
    """H acting on its dual from the left:
    (h -| u)(h') = u(beta^-2(h') beta^i(h))."""
    t = ein("px,ay,xym->amp",
            mat_power(H.beta, -2), mat_power(H.beta, i), H.mult)
    return ActionMap(H.label, dual_label(H.label), dual_automorphism(H),
                     "left", t)


def regular_action_right(H, j: int) -> ActionMap:
    """H acting on its dual from the right:
    (u <| h)(h') = u(beta^j(h) beta^-2(h'))."""
    t = ein("ax,py,xym->map",
            mat_power(H.beta, j), mat_power(H.beta, -2), H.mult)
    return ActionMap(H.label, dual_label(H.label), dual_automorphism(H),
                     "right", t)


def convolve(u: Tensor, v: Tensor, H) -> Tensor:
    """Convolution product of two dual vectors: (u . v)(h) = u(h1)v(h2)."""
    if u.shape != (H.dim,) or v.shape != (H.dim,):
        raise DimMismatch(
            f"convolution needs two {H.dim}-vectors, got {u.shape}, {v.shape}")
    return ein("kab,a,b->k", H.comult, u, v)
