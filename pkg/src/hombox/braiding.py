"""Coquasitriangular forms, 2-cocycles, twists, and Heisenberg doubles.

Convolution-unit convention: the convolution f * g of bilinear forms on a
coalgebra C uses the tensor-square coalgebra of C, and "f is invertible"
means f * x = x * f = (eps . lambda^k) (x) (eps . lambda^k).  Since
eps . lambda = eps holds in every Hom-coalgebra, all candidate powers k
coincide; direct computation on the codoubles of the builtins confirms
the stated inverses verify against this unit, so k = 0 is frozen as the
library default.  A form whose stated inverse fails the frozen unit
raises ConventionMismatch rather than being silently accepted.
"""

from __future__ import annotations

from dataclasses import dataclass

from .constructions import dual_label, regular_action_left, regular_action_right
from .errors import (ConventionMismatch, DimMismatch, LawViolation,
                     NotInvertible, Singular)
from .hom_core import (CheckReport, CoactionMap, HomAlgebra, Verdict,
                       check_coaction_laws, compare_law)
from .kernel import Tensor, ein, mat_power, permute, solve
from .codouble import drinfeld_codouble
from .products import (_outer_mat, _outer_vec, check_condition_set,
                       composite_tensor, _need)

CONVOLUTION_UNIT_POWER = 0


@dataclass(frozen=True)
class BilinearForm:
    """A bilinear pairing on one space: matrix[i,j] = f(e_i, e_j)."""
    space: str
    matrix: Tensor

    @property
    def dim(self):
        return self.matrix.shape[0]


def _form_matrix(f):
    return f.matrix if isinstance(f, BilinearForm) else f


def convolution_unit(C, k=CONVOLUTION_UNIT_POWER) -> Tensor:
    """The unit form (eps . lambda^k) (x) (eps . lambda^k) on C (x) C."""
    v = ein("ix,x->i", mat_power(C.beta, k), C.counit)
    return ein("i,j->ij", v, v)


def convolve_forms(C, f, g) -> Tensor:
    """(f * g)(c (x) d) = f(c1 (x) d1) g(c2 (x) d2)."""
    d = C.comult
    return ein("iab,jcd,ac,bd->ij", d, d, _form_matrix(f), _form_matrix(g))


def convolution_inverse(f, C) -> BilinearForm:
    """Solve f * x = unit exactly; NotInvertible when no solution exists."""
    d = C.comult
    fm = _form_matrix(f)
    n = C.dim
    M = ein("iab,jcd,ac->ijbd", d, d, fm)
    M2 = Tensor(M.field, M.data.reshape(n * n, n * n))
    rhs = convolution_unit(C)
    rhs1 = Tensor(rhs.field, rhs.data.reshape(n * n))
    try:
        x = solve(M2, rhs1)
    except Singular as exc:
        raise NotInvertible(f"no convolution inverse: {exc}") from None
    mat = Tensor(x.field, x.data.reshape(n, n))
    return BilinearForm(getattr(f, "space", C.label), mat)


# ----------------------------------------------------------------------
# condition sets (invoked through products.check_condition_set)


def cqt_conditions(data, aw=False) -> CheckReport:
    """Coquasitriangularity of a form zeta on a Hopf object:

      (5.1)  zeta(b(h), b(g)) = zeta(h, g)
      (5.2)  zeta(h1, g1) g2 h2 = h1 g1 zeta(h2, g2)
      (5.3)  zeta(b^-1(h), gk) = zeta(h1, b(g)) zeta(h2, b(k))
      (5.4)  zeta(hg, b^-1(k)) = zeta(b(h), k2) zeta(b(g), k1)

    plus convolution-invertibility against the frozen unit convention."""
    C, Z = _need(data, "H", "zeta")
    Z = _form_matrix(Z)
    m, d, B = C.mult, C.comult, C.beta
    Bi = C.beta_inv()
    verdicts = [
        compare_law("5.1", "zeta(b(h), b(g)) = zeta(h, g)",
                    ein("ha,gb,ab->hg", B, B, Z), Z, 2, aw),
        compare_law("5.2", "zeta(h1, g1) g2 h2 = h1 g1 zeta(h2, g2)",
                    ein("hab,gce,ac,ebo->hgo", d, d, Z, m),
                    ein("hab,gce,aco,be->hgo", d, d, m, Z), 2, aw),
        compare_law("5.3", "zeta(b^-1(h), gk) = zeta(h1, b(g)) zeta(h2, b(k))",
                    ein("hp,gkj,pj->hgk", Bi, m, Z),
                    ein("hab,gc,ke,ac,be->hgk", d, B, B, Z, Z), 3, aw),
        compare_law("5.4", "zeta(hg, b^-1(k)) = zeta(b(h), k2) zeta(b(g), k1)",
                    ein("hgj,kp,jp->hgk", m, Bi, Z),
                    ein("kab,hc,gd,cb,da->hgk", d, B, B, Z, Z), 3, aw),
    ]
    unit = convolution_unit(C)
    if "zeta_inv" in data:
        Zi = _form_matrix(data["zeta_inv"])
        verdicts.append(compare_law(
            "conv.unit-r", "zeta * zeta^-1 = eps (x) eps",
            convolve_forms(C, Z, Zi), unit, 2, aw))
        verdicts.append(compare_law(
            "conv.unit-l", "zeta^-1 * zeta = eps (x) eps",
            convolve_forms(C, Zi, Z), unit, 2, aw))
    else:
        try:
            inv = convolution_inverse(Z, C)
            ok = convolve_forms(C, inv, Z) == unit
            verdicts.append(Verdict("conv.inv", "zeta is convolution invertible",
                                    ok, (), 0 if ok else 1))
        except NotInvertible:
            verdicts.append(Verdict("conv.inv", "zeta is convolution invertible",
                                    False, (((), "no inverse", "inverse"),), 1))
    return CheckReport(f"cqt[{C.label}]", tuple(verdicts))


def cocycle_conditions(name, data, aw=False) -> CheckReport:
    """Twisted 2-cocycle identities plus normality for a form sigma."""
    C, Sg = _need(data, "H", "sigma")
    Sg = _form_matrix(Sg)
    m, d, B, u, e = C.mult, C.comult, C.beta, C.unit, C.counit
    verdicts = [
        compare_law("5.5", "sigma(b(h), b(g)) = sigma(h, g)",
                    ein("ha,gb,ab->hg", B, B, Sg), Sg, 2, aw),
    ]
    if name == "cocycle_left":
        verdicts.append(compare_law(
            "5.6L", "sigma(h1,g1) sigma(h2 g2, k) = sigma(g1,k1) sigma(h, g2 k2)",
            ein("hab,gce,ac,bej,jk->hgk", d, d, Sg, m, Sg),
            ein("gce,kfw,cf,ewj,hj->hgk", d, d, Sg, m, Sg), 3, aw))
    else:
        verdicts.append(compare_law(
            "5.6R", "sigma(h1 g1, k) sigma(h2, g2) = sigma(h, g1 k1) sigma(g2, k2)",
            ein("hab,gce,acj,jk,be->hgk", d, d, m, Sg, Sg),
            ein("gce,kfw,cfj,hj,ew->hgk", d, d, m, Sg, Sg), 3, aw))
    verdicts.append(compare_law(
        "norm.l", "sigma(1, h) = eps(h)",
        ein("i,ih->h", u, Sg), e, 1, aw))
    verdicts.append(compare_law(
        "norm.r", "sigma(h, 1) = eps(h)",
        ein("i,hi->h", u, Sg), e, 1, aw))
    side = "left" if name == "cocycle_left" else "right"
    return CheckReport(f"cocycle-{side}[{C.label}]", tuple(verdicts))


# ----------------------------------------------------------------------
# the codouble forms


def codouble_cqt_matrices(TH, H, n: int, variant: str = "T"):
    """The stated coquasitriangular form and inverse, unvalidated."""
    Bmn = mat_power(H.beta, -n)
    BmnS = ein("hx,xq->hq", Bmn, H.antipode)
    uH, eH = H.unit, H.counit
    dim = H.dim
    if variant == "T":
        z4 = ein("hq,p,g->hpgq", Bmn, uH, eH)
        zi4 = ein("hq,p,g->hpgq", BmnS, uH, eH)
    elif variant == "That":
        z4 = ein("u,hv,k->uhvk", uH, Bmn, eH)
        zi4 = ein("u,hv,k->uhvk", uH, BmnS, eH)
    else:
        raise ValueError(f"bad codouble variant {variant!r}")
    return (BilinearForm(TH.label, composite_tensor(z4, dim, dim, 2)),
            BilinearForm(TH.label, composite_tensor(zi4, dim, dim, 2)))


def codouble_cqt_form(TH, H, n: int, variant: str = "T"):
    """The coquasitriangular form on a codouble and its stated inverse.

      variant 'T'   : zeta(h (x) p, g (x) q) = <q, b^-n(h)> p(1) eps(g)
      variant 'That': zeta(u (x) h, v (x) k) = <v, b^-n(h)> u(1) eps(k)

    with inverses using S* on the paired functional.  Both are checked:
    the cqt conditions must hold and the stated inverse must verify
    against the frozen convolution unit; otherwise ConventionMismatch."""
    zeta, zeta_inv = codouble_cqt_matrices(TH, H, n, variant)
    rep = check_condition_set("cqt", {"H": TH, "zeta": zeta,
                                      "zeta_inv": zeta_inv})
    if not rep.passed:
        bad = rep.failed_ids()
        if set(bad) <= {"conv.unit-r", "conv.unit-l"}:
            raise ConventionMismatch(
                f"stated inverse fails the unit convention: {bad}")
        raise LawViolation(rep)
    return zeta, zeta_inv


def cocycle_from_cqt(zeta: BilinearForm, side: str, C) -> BilinearForm:
    """sigma = zeta . flip (left cocycle) or sigma = zeta (right cocycle);
    the result is validated against the matching cocycle suite."""
    if side == "left":
        sigma = BilinearForm(zeta.space, permute(zeta.matrix, (1, 0)))
        rep = check_condition_set("cocycle_left", {"H": C, "sigma": sigma})
    elif side == "right":
        sigma = BilinearForm(zeta.space, zeta.matrix)
        rep = check_condition_set("cocycle_right", {"H": C, "sigma": sigma})
    else:
        raise ValueError(f"bad side {side!r}")
    if not rep.passed:
        raise LawViolation(rep)
    return sigma


def eq57_cocycle(H, n: int) -> BilinearForm:
    """sigma(h (x) p, g (x) q) = <p, b^-n(g)> q(1) eps(h) on T(H)."""
    Bmn = mat_power(H.beta, -n)
    s4 = ein("gp,q,h->hpgq", Bmn, H.unit, H.counit)
    lab = f"T({H.label})"
    return BilinearForm(lab, composite_tensor(s4, H.dim, H.dim, 2))


def eq58_cocycle(H, n: int) -> BilinearForm:
    """sigma(u (x) h, v (x) k) = <v, b^-n(h)> u(1) eps(k) on T-hat(H)."""
    Bmn = mat_power(H.beta, -n)
    s4 = ein("u,hv,k->uhvk", H.unit, Bmn, H.counit)
    lab = f"That({H.label})"
    return BilinearForm(lab, composite_tensor(s4, H.dim, H.dim, 2))


# ----------------------------------------------------------------------
# twists and Heisenberg doubles


def twist(H, sigma: BilinearForm, side: str, check=True) -> HomAlgebra:
    """Deform the product of H by a normal 2-cocycle:

      left : h . g = sigma(h1, g1) beta(h2 g2)
      right: h . g = beta(h1 g1) sigma(h2, g2)

    Same carrier, same unit, same automorphism."""
    Sg = _form_matrix(sigma)
    if check:
        suite = "cocycle_left" if side == "left" else "cocycle_right"
        rep = check_condition_set(suite, {"H": H, "sigma": Sg})
        if not rep.passed:
            raise LawViolation(rep)
    d, m, B = H.comult, H.mult, H.beta
    if side == "left":
        mt = ein("hab,gce,ac,bev,vo->hgo", d, d, Sg, m, B)
    elif side == "right":
        mt = ein("hab,gce,acv,vo,be->hgo", d, d, m, B, Sg)
    else:
        raise ValueError(f"bad side {side!r}")
    return HomAlgebra(H.dim, mt, H.unit, B, H.label)


def heisenberg_double(H, n: int, variant: str = "H") -> HomAlgebra:
    """The smash product of H with its dual under the regular actions:

      variant 'H'    on H (x) H*:  (h # p)(g # q) = h b(g1) # (p.b <- g2) . q
      variant 'Hdual' on H* (x) H: (u # h)(v # k) = u . (h1 -> v.b) # b(h2) k

    where <- and -> are the regular actions at parameter -n-1 and p.b is
    the covector p precomposed with beta, exactly as displayed."""
    dd_mult = permute(H.comult, (1, 2, 0))  # convolution product on H*
    d, m, B = H.comult, H.mult, H.beta
    BT = permute(B, (1, 0))
    dim = H.dim
    delta = permute(H.beta_inv(), (1, 0))
    if variant == "H":
        t = regular_action_right(H, -n - 1).tensor
        m6 = ein("gab,ax,hxo,pm,mbw,wqr->hpgqor", d, B, m, BT, t, dd_mult)
        unit = _outer_vec(H.unit, H.counit)
        beta = _outer_mat(B, delta)
        lab = f"{H.label}(x){dual_label(H.label)}"
    elif variant == "Hdual":
        t = regular_action_left(H, -n - 1).tensor
        m6 = ein("hab,vm,amw,uwr,bx,xks->uhvkrs", d, BT, t, dd_mult, B, m)
        unit = _outer_vec(H.counit, H.unit)
        beta = _outer_mat(delta, B)
        lab = f"{dual_label(H.label)}(x){H.label}"
    else:
        raise ValueError(f"bad Heisenberg variant {variant!r}")
    return HomAlgebra(dim * dim, composite_tensor(m6, dim, dim, 3),
                      unit, beta, lab)


# ----------------------------------------------------------------------
# the Heisenberg/codouble comparison and the comodule-algebra check


def verify_thm510(H, n: int, variant: str = "T") -> CheckReport:
    """Compare the twisted codouble product with the Heisenberg product.

    variant 'T':    left twist of T(H) by the flip cocycle  vs  H # H*
    variant 'That': right twist of T-hat(H) by its cocycle  vs  H* # H

    The two carriers share coordinates (the opposite algebra keeps its
    basis), so the multiplication tensors are compared entrywise."""
    TH = drinfeld_codouble(H, n, variant)
    if variant == "T":
        sigma = eq57_cocycle(H, n)
        tw = twist(TH, sigma, "left")
        hd = heisenberg_double(H, n, "H")
        law = ("5.10(1)",
               "left-twisted codouble product = Heisenberg product on H (x) H*")
    else:
        sigma = eq58_cocycle(H, n)
        tw = twist(TH, sigma, "right")
        hd = heisenberg_double(H, n, "Hdual")
        law = ("5.10(2)",
               "right-twisted codouble product = Heisenberg product on H* (x) H")
    verdict = compare_law(law[0], law[1], tw.mult, hd.mult, 2)
    return CheckReport(
        f"thm510[{variant}, {H.label}, n={n}; carriers identified on "
        "shared coordinates]", (verdict,))


def comodule_algebra_from_twist(twisted: HomAlgebra, source,
                                side: str = "right") -> CheckReport:
    """Read the source coproduct as a coaction on the twisted algebra and
    run the comodule-algebra laws.

    side='right': Delta : twisted -> twisted (x) source
    side='left' : Delta : twisted -> source (x) twisted
    """
    if twisted.dim != source.dim:
        raise DimMismatch(
            f"twisted dim {twisted.dim} != source dim {source.dim}")
    if twisted.beta != source.beta:
        raise DimMismatch("twisted algebra and source carry different "
                          "automorphisms")
    if side == "right":
        r = permute(source.comult, (0, 2, 1))
    elif side == "left":
        r = source.comult
    else:
        raise ValueError(f"bad side {side!r}")
    coact = CoactionMap(source.label, twisted.label, twisted.beta, side, r)
    bi = source.bialgebra if hasattr(source, "bialgebra") else source
    return check_coaction_laws(coact, bi, twisted, "comodule_algebra")
