"""Smash products, bicrossproducts, canonical data, condition sets."""

import numpy as np
import pytest

from hombox.constructions import opposite
from hombox.errors import LawViolation, MissingStructure, SideMismatch
from hombox.hom_core import ActionMap, CoactionMap, check_structure
from hombox.kernel import QQ, Tensor, ein, mat_inverse, mat_power
from hombox.products import (bicross_left, bicross_right,
                             canonical_action_coaction, canonical_bicross,
                             check_condition_set, composite_tensor,
                             smash_coproduct_left, smash_product_right)
from hombox.zoo import builtin
from hombox.braiding import BilinearForm


def tensor_hopf(A, B):
    """The plain tensor-product Hopf structure, for comparison."""
    m6 = ein("abo,hgp->ahbgop", A.mult, B.mult)
    d6 = ein("aij,hpq->ahipjq", A.comult, B.comult)
    return (composite_tensor(m6, A.dim, B.dim, 3),
            composite_tensor(d6, A.dim, B.dim, 3))


# -- smash product ----------------------------------------------------------

def test_smash_with_trivial_action_is_tensor_algebra():
    H = builtin("classical-sweedler4")
    Hop = opposite(H, derive_antipode=True)
    # trivial action h <| a = eps(a) beta(h)
    t = ein("a,mo->mao", H.counit, H.beta)
    act = ActionMap(H.label, Hop.label, Hop.beta, "right", t)
    sp = smash_product_right(H, Hop.algebra, act)
    assert check_structure(sp, "algebra").passed
    m_ref, _ = tensor_hopf(H, Hop)
    assert sp.mult == m_ref  # beta = id here


def test_smash_of_points():
    k = builtin("k")
    act, _ = canonical_action_coaction(k, 0, "right")
    sp = smash_product_right(k, opposite(k, True).algebra, act)
    assert sp.dim == 1 and sp.mult == Tensor.from_nested(QQ, [[[1]]])


def test_smash_rejects_non_module_algebra():
    H = builtin("group-c2")
    Hop = opposite(H, derive_antipode=True)
    zero = ActionMap(H.label, Hop.label, Hop.beta, "right",
                     Tensor.zeros(QQ, (2, 2, 2)))
    with pytest.raises(LawViolation) as exc:
        smash_product_right(H, Hop.algebra, zero)
    assert "modalg.unit" in exc.value.report.failed_ids()


def test_smash_needs_right_action():
    H = builtin("group-c2")
    act, _ = canonical_action_coaction(H, 0, "left")
    with pytest.raises(SideMismatch):
        smash_product_right(H, opposite(H, True).algebra, act)


# -- smash coproduct ----------------------------------------------------------

def test_smash_coproduct_with_trivial_coaction_is_tensor_coalgebra():
    H = builtin("classical-sweedler4")
    Hop = opposite(H, derive_antipode=True)
    Bi = mat_inverse(H.beta)
    r = ein("z,ma->mza", Hop.unit, Bi)  # rho(a) = 1 (x) lambda^-1(a)
    coact = CoactionMap(Hop.label, H.label, H.beta, "left", r)
    sc = smash_coproduct_left(H, Hop, coact)
    assert check_structure(sc, "coalgebra").passed
    _, d_ref = tensor_hopf(H, Hop)
    assert sc.comult == d_ref


def test_smash_coproduct_canonical_dim9():
    H = builtin("group-c3")
    _, coact = canonical_action_coaction(H, 0, "right")
    sc = smash_coproduct_left(H, opposite(H, True), coact)
    assert sc.dim == 9
    assert check_structure(sc, "coalgebra").passed


# -- condition sets --------------------------------------------------------------

def test_canonical_conditions_pass(builtins):
    for name, H in builtins.items():
        Hop = opposite(H, derive_antipode=True)
        for n in (-1, 0, 1):
            act, coact = canonical_action_coaction(H, n, "right")
            rep = check_condition_set(
                "bicross_right", {"A": H, "H": Hop, "act": act,
                                  "coact": coact})
            assert rep.passed, f"{name} n={n}\n{rep.format()}"
            actl, coactl = canonical_action_coaction(H, n, "left")
            repl = check_condition_set(
                "bicross_left", {"A": Hop, "H": H, "act": actl,
                                 "coact": coactl})
            assert repl.passed, f"{name} n={n}\n{repl.format()}"


def test_condition_set_missing_structure():
    H = builtin("group-c2")
    with pytest.raises(MissingStructure):
        check_condition_set("bicross_right", {"A": H, "H": H})
    with pytest.raises(MissingStructure):
        check_condition_set("nonsense", {})


def test_cqt_conditions_on_zero_form():
    H = builtin("group-c2")
    zero = BilinearForm(H.label, Tensor.zeros(QQ, (2, 2)))
    rep = check_condition_set("cqt", {"H": H, "zeta": zero})
    by_id = {v.law_id: v for v in rep.verdicts}
    assert by_id["5.1"].passed          # trivially 0 = 0
    assert not by_id["conv.inv"].passed
    assert not rep.passed


# -- canonical action/coaction ------------------------------------------------------

def test_conjugation_trivial_on_abelian_group():
    H = builtin("group-c3")
    act, _ = canonical_action_coaction(H, 0, "right")
    # x <| h = eps(h) x on a commutative classical algebra
    expect = ein("h,xo->xho", H.counit, Tensor.identity(QQ, 3))
    assert act.tensor == expect


def test_canonical_on_point():
    k = builtin("k")
    act, coact = canonical_action_coaction(k, 0, "left")
    assert act.tensor == Tensor.from_nested(QQ, [[[1]]])
    assert coact.tensor == Tensor.from_nested(QQ, [[[1]]])


def test_canonical_laws_sweedler_negative_n():
    H = builtin("sweedler4")
    canonical_action_coaction(H, -1, "right")  # check=True validates laws
    canonical_action_coaction(H, -1, "left")


# -- bicrossproducts ---------------------------------------------------------------

def test_canonical_bicross_point():
    k = builtin("k")
    B = canonical_bicross(k, 0, "right")
    assert B.dim == 1 and check_structure(B, "hopf").passed


def test_canonical_bicross_c2_equals_tensor_hopf():
    H = builtin("group-c2")
    Hop = opposite(H, derive_antipode=True)
    B = canonical_bicross(H, 0, "right")
    m_ref, d_ref = tensor_hopf(H, Hop)
    assert B.mult == m_ref and B.comult == d_ref
    assert check_structure(B, "hopf").passed


@pytest.mark.parametrize("n", [-1, 0, 1])
@pytest.mark.parametrize("side", ["right", "left"])
def test_canonical_bicross_sweedler(n, side):
    H = builtin("sweedler4")
    B = canonical_bicross(H, n, side)
    assert B.dim == 16
    assert check_structure(B, "hopf").passed


def test_bicross_matches_displayed_composite():
    # the worked right-bicross product/coproduct written out elementwise
    H = builtin("sweedler4")
    d, m, B = H.comult, H.mult, H.beta
    Si = H.antipode_inv()
    for n in (-1, 0, 1):
        Bn, Bn1 = mat_power(B, n), mat_power(B, n + 1)
        Bnm1, Bi, Bi2 = mat_power(B, n - 1), mat_inverse(B), mat_power(B, -2)
        B2 = mat_power(B, 2)
        BB = canonical_bicross(H, n, "right")
        # (h |><| x)(g |><| y) = h b(g1) |><| y (b^{n+1}S^-1(g22)(b^-2(x) b^n(g21)))
        t1 = ein("gab,bcd->gacd", d, d)
        lhs1 = ein("gacd,ax,hxo->hgcdo", t1, B, m)
        inner = ein("xq,cw,qwv->xcv", Bi2, Bn, m)
        srt = ein("ds,se->de", Si, Bn1)
        act_part = ein("de,xcv,evz->dxcz", srt, inner, m)
        prod2 = ein("dxcz,yzf->dxcyf", act_part, m)
        disp6 = ein("hgcdo,dxcyf->hxgyof", lhs1, prod2)
        assert composite_tensor(disp6, 4, 4, 3) == BB.mult
        # Delta(h |><| x) = (h1 |><| b^-1(x1)(b^n S^-1(h222) b^{n-1}(h21)))
        #                    (x) (b^2(h221) |><| x2)
        t2 = ein("hab,bcd,def->hacef", d, d, d)
        co_inner = ein("fs,sp,cq,pqz->fcz", Si, Bn, Bnm1, m)
        co_first = ein("xuv,uw,wzj->xvzj", d, Bi, m)
        disp_d6 = ein("hacef,fcz,xvzj,eG->hxajGv", t2, co_inner, co_first, B2)
        assert composite_tensor(disp_d6, 4, 4, 3) == BB.comult


def test_bicross_shares_smash_assembly():
    H = builtin("sweedler4")
    Hop = opposite(H, derive_antipode=True)
    act, coact = canonical_action_coaction(H, 0, "right")
    B = canonical_bicross(H, 0, "right")
    assert B.mult == smash_product_right(H, Hop.algebra, act).mult
    assert B.comult == smash_coproduct_left(H, Hop, coact).comult


def test_perturbed_coaction_fails_conditions_and_suite():
    H = builtin("sweedler4")
    Hop = opposite(H, derive_antipode=True)
    act, coact = canonical_action_coaction(H, 0, "right")
    arr = np.array(coact.tensor.data, dtype=object)
    idx = next(i for i, v in np.ndenumerate(arr) if v)
    arr[idx] = arr[idx] + QQ.one
    bad = CoactionMap(coact.coactor, coact.carrier, coact.carrier_auto,
                      coact.side, Tensor(QQ, arr))
    rep = check_condition_set(
        "bicross_right", {"A": H, "H": Hop, "act": act, "coact": bad})
    assert not rep.passed
    with pytest.raises(LawViolation):
        bicross_right(H, Hop, act, bad)
    forced = bicross_right(H, Hop, act, bad, force=True)
    assert not check_structure(forced, "hopf").passed


def test_bicross_left_side_checks():
    H = builtin("group-c2")
    Hop = opposite(H, derive_antipode=True)
    act, coact = canonical_action_coaction(H, 0, "right")
    with pytest.raises(SideMismatch):
        bicross_left(Hop, H, act, coact)
