"""Duals, opposites, Yau twists, regular actions, convolution."""

import random

import numpy as np
import pytest

from hombox.constructions import (convolve, dual_hopf, opposite,
                                  regular_action_left, regular_action_right,
                                  yau_twist)
from hombox.errors import NotAutomorphism, Singular
from hombox.hom_core import (HomAlgebra, HomBialgebra, HomCoalgebra,
                             HomHopfAlgebra, check_structure)
from hombox.kernel import QQ, Tensor, ein, permute
from hombox.zoo import BUILTIN_NAMES, builtin


def same_constants(a, b):
    keys = ["mult", "unit", "comult", "counit", "beta"]
    if hasattr(a, "antipode") and hasattr(b, "antipode"):
        keys.append("antipode")
    return all(getattr(a, k) == getattr(b, k) for k in keys)


# -- duals ----------------------------------------------------------------

def test_dual_of_point():
    k = builtin("k")
    assert same_constants(dual_hopf(k), k)


def test_dual_of_c2_convolution_table():
    H = builtin("group-c2")
    D = dual_hopf(H)
    d1 = Tensor.from_nested(QQ, [1, 0])   # delta_1
    dg = Tensor.from_nested(QQ, [0, 1])   # delta_g
    assert convolve(dg, dg, H) == dg
    assert convolve(d1, dg, H) == Tensor.zeros(QQ, (2,))
    assert D.unit == Tensor.from_nested(QQ, [1, 1])  # delta_1 + delta_g


def test_duals_pass_hopf(builtins):
    for H in builtins.values():
        assert check_structure(dual_hopf(H), "hopf").passed


def test_double_dual_identity(builtins):
    for H in builtins.values():
        assert same_constants(dual_hopf(dual_hopf(H)), H)


def test_dual_exchanges_op_and_cop(builtins):
    for H in builtins.values():
        Dop = dual_hopf(opposite(H, derive_antipode=True))
        D = dual_hopf(H)
        assert Dop.mult == D.mult
        assert Dop.comult == permute(D.comult, (0, 2, 1))


# -- opposites ----------------------------------------------------------------

def test_opposite_of_commutative_unchanged():
    H = builtin("group-c3")
    assert opposite(H).mult == H.mult


def test_opposite_involution():
    H = builtin("sweedler4")
    assert same_constants(opposite(opposite(H)), H.bialgebra)


def test_opposite_reverses_factors():
    H = builtin("sweedler4")
    op = opposite(H)
    g, x = 1, 2
    assert list(op.mult.data[g, x]) == list(H.mult.data[x, g])


def test_opposite_derived_antipode():
    H = builtin("sweedler4")
    op = opposite(H, derive_antipode=True)
    ident = Tensor.identity(QQ, 4)
    assert ein("ij,jk->ik", H.antipode, op.antipode) == ident
    bad_alg = HomAlgebra(H.dim, H.mult, H.unit, H.beta, "bad")
    bad_coa = HomCoalgebra(H.dim, H.comult, H.counit, H.beta, "bad")
    bad = HomHopfAlgebra(HomBialgebra(bad_alg, bad_coa),
                         Tensor.zeros(QQ, (4, 4)))
    with pytest.raises(Singular):
        opposite(bad, derive_antipode=True)


# -- Yau twist ------------------------------------------------------------------

def test_yau_identity_automorphism():
    H = builtin("classical-sweedler4")
    assert same_constants(yau_twist(H, Tensor.identity(QQ, 4)), H)


def test_yau_builds_the_twisted_builtins():
    cs = builtin("classical-sweedler4")
    auto = Tensor.from_nested(QQ, [[1, 0, 0, 0], [0, 1, 0, 0],
                                   [0, 0, 2, 0], [0, 0, 0, 2]])
    assert same_constants(yau_twist(cs, auto), builtin("sweedler4"))
    c3 = builtin("group-c3")
    inv = Tensor.from_nested(QQ, [[1, 0, 0], [0, 0, 1], [0, 1, 0]])
    assert same_constants(yau_twist(c3, inv), builtin("group-c3-inv"))


def test_yau_rejects_non_automorphisms():
    cs = builtin("classical-sweedler4")
    swap_gx = Tensor.from_nested(QQ, [[1, 0, 0, 0], [0, 0, 1, 0],
                                      [0, 1, 0, 0], [0, 0, 0, 1]])
    with pytest.raises(NotAutomorphism) as exc:
        yau_twist(cs, swap_gx)
    assert exc.value.law.startswith("auto.")
    with pytest.raises(NotAutomorphism):
        yau_twist(cs, Tensor.zeros(QQ, (4, 4)))
    with pytest.raises(NotAutomorphism):
        yau_twist(builtin("sweedler4"), Tensor.identity(QQ, 4))  # beta != id


# -- regular actions -----------------------------------------------------------

def test_left_regular_action_on_c2():
    H = builtin("group-c2")
    act = regular_action_left(H, 0)
    # (g -| delta_1) = delta_g: tensor slot [actor=g, in=delta_1, out]
    assert list(act.tensor.data[1, 0]) == [QQ.zero, QQ.one]


def test_right_regular_action_on_c2():
    H = builtin("group-c2")
    act = regular_action_right(H, 0)
    # (delta_1 <| g) = delta_g: tensor slot [in=delta_1, actor=g, out]
    assert list(act.tensor.data[0, 1]) == [QQ.zero, QQ.one]


def test_action_of_point_is_trivial():
    k = builtin("k")
    act = regular_action_left(k, 3)
    assert act.tensor == Tensor.from_nested(QQ, [[[1]]])


def test_heisenberg_parameterization_is_regular_action():
    # the arrow actions at parameter -n-1 are plain parameter substitutions
    H = builtin("sweedler4")
    for n in (-1, 0, 1):
        l1 = regular_action_left(H, -n - 1)
        l2 = regular_action_left(H, -(n + 1))
        assert l1.tensor == l2.tensor
        Bj = H.beta_pow(-n - 1).tolist()
        B2i = H.beta_pow(-2).tolist()
        m = H.mult.tolist()
        t = regular_action_right(H, -n - 1).tensor
        for uin in range(4):
            for h in range(4):
                for g in range(4):
                    val = QQ.zero
                    for x in range(4):
                        for y in range(4):
                            if Bj[h][x] and B2i[g][y]:
                                val = val + Bj[h][x] * B2i[g][y] * m[x][y][uin]
                    assert t[uin, h, g] == val


# -- convolution -----------------------------------------------------------------

def test_convolution_unit_law(builtins):
    rnd = random.Random(9)
    for H in builtins.values():
        D = dual_hopf(H)
        eps = H.counit  # the unit of the dual algebra
        v = Tensor.from_flat(QQ, (H.dim,),
                             [rnd.randint(-3, 3) for _ in range(H.dim)])
        # Hom-unit law in the dual: 1 . v = beta_dual(v)
        assert convolve(eps, v, H) == ein("ij,j->i",
                                          permute(D.beta, (1, 0)), v)
        assert convolve(v, Tensor.zeros(QQ, (H.dim,)), H) == \
            Tensor.zeros(QQ, (H.dim,))


def test_convolve_dimension_check():
    H = builtin("group-c2")
    from hombox.errors import DimMismatch
    with pytest.raises(DimMismatch):
        convolve(Tensor.from_nested(QQ, [1, 0, 0]),
                 Tensor.from_nested(QQ, [1, 0]), H)
