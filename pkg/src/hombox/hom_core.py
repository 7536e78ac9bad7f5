"""Structure types and executable law suites.

A structure is a bundle of structure-constant tensors.  Conventions, fixed
everywhere:

  mult[i,j,k]    coefficient of e_k in e_i * e_j
  comult[i,j,k]  coefficient of e_j (x) e_k in Delta(e_i)
  matrix[i,j]    coefficient of e_j in M(e_i); vectors act as rows
  action         left:  t[actor, carrier-in, carrier-out]
                 right: t[carrier-in, actor, carrier-out]
  coaction       t[carrier-in, coactor-out, carrier-out] for both sides

Every law below is a multilinear identity, so checking it on all basis
tuples is complete; each law is assembled once as a pair of tensors and
compared entrywise.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimMismatch, MissingStructure, SideMismatch, Singular
from .kernel import Tensor, ein, mat_inverse, mat_power

# ----------------------------------------------------------------------
# structure types


@dataclass(frozen=True)
class HomAlgebra:
    dim: int
    mult: Tensor
    unit: Tensor
    beta: Tensor
    label: str = ""

    def __post_init__(self):
        d = self.dim
        if self.mult.shape != (d, d, d):
            raise DimMismatch(f"mult shape {self.mult.shape}, dim {d}")
        if self.unit.shape != (d,):
            raise DimMismatch(f"unit shape {self.unit.shape}, dim {d}")
        if self.beta.shape != (d, d):
            raise DimMismatch(f"beta shape {self.beta.shape}, dim {d}")

    @property
    def field(self):
        return self.mult.field

    def beta_inv(self):
        return mat_inverse(self.beta)

    def beta_pow(self, k):
        return mat_power(self.beta, k)


@dataclass(frozen=True)
class HomCoalgebra:
    dim: int
    comult: Tensor
    counit: Tensor
    beta: Tensor
    label: str = ""

    def __post_init__(self):
        d = self.dim
        if self.comult.shape != (d, d, d):
            raise DimMismatch(f"comult shape {self.comult.shape}, dim {d}")
        if self.counit.shape != (d,):
            raise DimMismatch(f"counit shape {self.counit.shape}, dim {d}")
        if self.beta.shape != (d, d):
            raise DimMismatch(f"beta shape {self.beta.shape}, dim {d}")

    @property
    def field(self):
        return self.comult.field

    def beta_inv(self):
        return mat_inverse(self.beta)

    def beta_pow(self, k):
        return mat_power(self.beta, k)


@dataclass(frozen=True)
class HomBialgebra:
    algebra: HomAlgebra
    coalgebra: HomCoalgebra

    def __post_init__(self):
        a, c = self.algebra, self.coalgebra
        if a.dim != c.dim:
            raise DimMismatch(f"algebra dim {a.dim} != coalgebra dim {c.dim}")
        if a.beta != c.beta:
            raise DimMismatch("algebra and coalgebra carry different automorphisms")
        if a.label != c.label:
            raise DimMismatch(f"labels differ: {a.label!r} vs {c.label!r}")

    dim = property(lambda self: self.algebra.dim)
    mult = property(lambda self: self.algebra.mult)
    unit = property(lambda self: self.algebra.unit)
    comult = property(lambda self: self.coalgebra.comult)
    counit = property(lambda self: self.coalgebra.counit)
    beta = property(lambda self: self.algebra.beta)
    label = property(lambda self: self.algebra.label)
    field = property(lambda self: self.algebra.field)

    def beta_inv(self):
        return self.algebra.beta_inv()

    def beta_pow(self, k):
        return self.algebra.beta_pow(k)


@dataclass(frozen=True)
class HomHopfAlgebra:
    bialgebra: HomBialgebra
    antipode: Tensor

    def __post_init__(self):
        d = self.bialgebra.dim
        if self.antipode.shape != (d, d):
            raise DimMismatch(f"antipode shape {self.antipode.shape}, dim {d}")

    algebra = property(lambda self: self.bialgebra.algebra)
    coalgebra = property(lambda self: self.bialgebra.coalgebra)
    dim = property(lambda self: self.bialgebra.dim)
    mult = property(lambda self: self.bialgebra.mult)
    unit = property(lambda self: self.bialgebra.unit)
    comult = property(lambda self: self.bialgebra.comult)
    counit = property(lambda self: self.bialgebra.counit)
    beta = property(lambda self: self.bialgebra.beta)
    label = property(lambda self: self.bialgebra.label)
    field = property(lambda self: self.bialgebra.field)

    def beta_inv(self):
        return self.bialgebra.beta_inv()

    def beta_pow(self, k):
        return self.bialgebra.beta_pow(k)

    def antipode_inv(self):
        return mat_inverse(self.antipode)


@dataclass(frozen=True)
class ActionMap:
    """A module action: `side` says which slot the actor occupies."""
    actor: str
    carrier: str
    carrier_auto: Tensor
    side: str  # "left" | "right"
    tensor: Tensor

    def __post_init__(self):
        if self.side not in ("left", "right"):
            raise SideMismatch(f"bad side {self.side!r}")


@dataclass(frozen=True)
class CoactionMap:
    """A comodule coaction, stored as (carrier-in, coactor-out, carrier-out)."""
    coactor: str
    carrier: str
    carrier_auto: Tensor
    side: str  # "left" | "right"
    tensor: Tensor

    def __post_init__(self):
        if self.side not in ("left", "right"):
            raise SideMismatch(f"bad side {self.side!r}")


# ----------------------------------------------------------------------
# verdicts and reports


@dataclass(frozen=True)
class Verdict:
    law_id: str
    statement: str
    passed: bool
    witnesses: tuple = ()
    violations: int = 0

    @property
    def witness(self):
        return self.witnesses[0] if self.witnesses else None


@dataclass(frozen=True)
class CheckReport:
    suite: str
    verdicts: tuple

    @property
    def passed(self):
        return all(v.passed for v in self.verdicts)

    def failed_ids(self):
        return [v.law_id for v in self.verdicts if not v.passed]

    def format(self):
        lines = [f"suite: {self.suite}"]
        for v in self.verdicts:
            line = f"LAW {v.law_id} '{v.statement}' {'PASS' if v.passed else 'FAIL'}"
            if not v.passed and v.witnesses:
                idx, lhs, rhs = v.witnesses[0]
                line += f" witness={idx} lhs={lhs} rhs={rhs} violations={v.violations}"
            lines.append(line)
        lines.append(f"result: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)

    def __str__(self):
        return self.format()


def _fmt(field, arr):
    if np.ndim(arr) == 0:
        return field.format(arr.item() if hasattr(arr, "item") else arr)
    return "[" + ", ".join(_fmt(field, sub) for sub in arr) + "]"


def compare_law(law_id, statement, lhs: Tensor, rhs: Tensor, n_inputs,
                all_witnesses=False) -> Verdict:
    """Compare two composed law sides; inputs are the leading axes."""
    if lhs.shape != rhs.shape:
        raise DimMismatch(f"{law_id}: law sides have shapes {lhs.shape} vs {rhs.shape}")
    neq = lhs.data != rhs.data
    out_axes = tuple(range(n_inputs, lhs.ndim))
    if lhs.ndim == 0:
        if not bool(neq):
            return Verdict(law_id, statement, True)
        w = ((), _fmt(lhs.field, lhs.data), _fmt(rhs.field, rhs.data))
        return Verdict(law_id, statement, False, (w,), 1)
    mask = neq.any(axis=out_axes) if out_axes else neq
    if n_inputs == 0:
        if not bool(mask):
            return Verdict(law_id, statement, True)
        w = ((), _fmt(lhs.field, lhs.data), _fmt(rhs.field, rhs.data))
        return Verdict(law_id, statement, False, (w,), 1)
    bad = np.argwhere(mask)
    if len(bad) == 0:
        return Verdict(law_id, statement, True)
    picks = bad if all_witnesses else bad[:1]
    ws = tuple((tuple(int(i) for i in idx),
                _fmt(lhs.field, lhs.data[tuple(idx)]),
                _fmt(rhs.field, rhs.data[tuple(idx)]))
               for idx in picks)
    return Verdict(law_id, statement, False, ws, int(len(bad)))


def _invertibility(law_id, statement, matrix):
    try:
        mat_inverse(matrix)
        return Verdict(law_id, statement, True)
    except Singular:
        return Verdict(law_id, statement, False, (((), "singular", "invertible"),), 1)


# ----------------------------------------------------------------------
# law suites


def _algebra_verdicts(alg: HomAlgebra, aw=False):
    m, u, B = alg.mult, alg.unit, alg.beta
    out = [_invertibility("alg.beta-inv", "beta is invertible", B)]
    if not out[0].passed:
        return out
    out.append(compare_law(
        "alg.beta-unit", "beta(1) = 1",
        ein("i,ij->j", u, B), u, 0, aw))
    out.append(compare_law(
        "alg.beta-mult", "beta(ab) = beta(a)beta(b)",
        ein("abk,ko->abo", m, B), ein("ai,bj,ijo->abo", B, B, m), 2, aw))
    out.append(compare_law(
        "alg.assoc", "beta(a)(bc) = (ab)beta(c)",
        ein("ax,bcj,xjo->abco", B, m, m),
        ein("abk,cy,kyo->abco", m, B, m), 3, aw))
    out.append(compare_law(
        "alg.unit-r", "a1 = beta(a)",
        ein("j,ajo->ao", u, m), B, 1, aw))
    out.append(compare_law(
        "alg.unit-l", "1a = beta(a)",
        ein("j,jao->ao", u, m), B, 1, aw))
    return out


def _coalgebra_verdicts(coa: HomCoalgebra, aw=False):
    d, e, L = coa.comult, coa.counit, coa.beta
    out = [_invertibility("coa.lambda-inv", "lambda is invertible", L)]
    if not out[0].passed:
        return out
    Li = mat_inverse(L)
    out.append(compare_law(
        "coa.coassoc", "lambda^-1(c1) (x) Delta(c2) = Delta(c1) (x) lambda^-1(c2)",
        ein("cab,ax,byz->cxyz", d, Li, d),
        ein("cab,axy,bz->cxyz", d, d, Li), 1, aw))
    out.append(compare_law(
        "coa.counit-l", "eps(c1)c2 = lambda^-1(c)",
        ein("cab,a->cb", d, e), Li, 1, aw))
    out.append(compare_law(
        "coa.counit-r", "c1 eps(c2) = lambda^-1(c)",
        ein("cab,b->ca", d, e), Li, 1, aw))
    out.append(compare_law(
        "coa.comult-lambda", "Delta(lambda(c)) = lambda(c1) (x) lambda(c2)",
        ein("cx,xab->cab", L, d),
        ein("cab,ax,by->cxy", d, L, L), 1, aw))
    out.append(compare_law(
        "coa.counit-lambda", "eps(lambda(c)) = eps(c)",
        ein("cx,x->c", L, e), e, 1, aw))
    return out


def _bialgebra_verdicts(bi: HomBialgebra, aw=False):
    m, u = bi.mult, bi.unit
    d, e = bi.comult, bi.counit
    one = Tensor.from_nested(bi.field, 1)
    return [
        compare_law(
            "bia.comult-mult", "Delta(hk) = Delta(h)Delta(k)",
            ein("abk,kuv->abuv", m, d),
            ein("aij,bkl,iku,jlv->abuv", d, d, m, m), 2, aw),
        compare_law(
            "bia.comult-unit", "Delta(1) = 1 (x) 1",
            ein("k,kuv->uv", u, d), ein("u,v->uv", u, u), 0, aw),
        compare_law(
            "bia.counit-mult", "eps(hk) = eps(h)eps(k)",
            ein("abk,k->ab", m, e), ein("a,b->ab", e, e), 2, aw),
        compare_law(
            "bia.counit-unit", "eps(1) = 1",
            ein("k,k->", u, e), one, 0, aw),
    ]


def _hopf_verdicts(H: HomHopfAlgebra, aw=False):
    m, u, d, e = H.mult, H.unit, H.comult, H.counit
    S, B = H.antipode, H.beta
    rhs = ein("h,o->ho", e, u)
    return [
        compare_law(
            "hopf.antipode-l", "S(h1)h2 = eps(h)1",
            ein("hab,ax,xbo->ho", d, S, m), rhs, 1, aw),
        compare_law(
            "hopf.antipode-r", "h1 S(h2) = eps(h)1",
            ein("hab,bx,axo->ho", d, S, m), rhs, 1, aw),
        compare_law(
            "hopf.S-beta", "beta(S(h)) = S(beta(h))",
            ein("ij,jk->ik", S, B), ein("ij,jk->ik", B, S), 1, aw),
    ]


_SUITES = ("algebra", "coalgebra", "bialgebra", "hopf")


def check_structure(obj, suite: str, all_witnesses=False) -> CheckReport:
    """Run the displayed laws of one structure level, exactly, on all bases."""
    if suite not in _SUITES:
        raise MissingStructure(f"unknown suite {suite!r}")
    aw = all_witnesses
    label = getattr(obj, "label", "")
    verdicts = []
    if suite in ("algebra", "bialgebra", "hopf"):
        alg = obj if isinstance(obj, HomAlgebra) else getattr(obj, "algebra", None)
        if alg is None:
            raise MissingStructure(f"{suite} suite needs an algebra part")
        verdicts += _algebra_verdicts(alg, aw)
    if suite in ("coalgebra", "bialgebra", "hopf"):
        coa = obj if isinstance(obj, HomCoalgebra) else getattr(obj, "coalgebra", None)
        if coa is None:
            raise MissingStructure(f"{suite} suite needs a coalgebra part")
        verdicts += _coalgebra_verdicts(coa, aw)
    if suite in ("bialgebra", "hopf"):
        bi = obj if isinstance(obj, HomBialgebra) else getattr(obj, "bialgebra", None)
        if bi is None:
            raise MissingStructure(f"{suite} suite needs a bialgebra part")
        if all(v.passed for v in verdicts):
            verdicts += _bialgebra_verdicts(bi, aw)
    if suite == "hopf":
        if not isinstance(obj, HomHopfAlgebra):
            raise MissingStructure("hopf suite needs an antipode")
        if all(v.passed for v in verdicts):
            verdicts += _hopf_verdicts(obj, aw)
    return CheckReport(f"{suite}[{label}]", tuple(verdicts))


# ----------------------------------------------------------------------
# module / comodule law suites


def check_action_laws(act: ActionMap, actor: HomBialgebra, carrier: HomAlgebra,
                      level: str, side=None, all_witnesses=False) -> CheckReport:
    """Hom-module laws, plus module-algebra laws at level 'module_algebra'."""
    if level not in ("module", "module_algebra"):
        raise MissingStructure(f"unknown action law level {level!r}")
    if side is not None and side != act.side:
        raise SideMismatch(f"action is {act.side}-sided, laws requested for {side}")
    aw = all_witnesses
    t = act.tensor
    da, dc = actor.dim, carrier.dim
    want = (da, dc, dc) if act.side == "left" else (dc, da, dc)
    if t.shape != want:
        raise DimMismatch(f"action tensor shape {t.shape}, expected {want}")
    if act.carrier_auto.shape != (dc, dc):
        raise DimMismatch("carrier automorphism has wrong shape")
    B, u = actor.beta, actor.unit
    mH = actor.mult
    Mu = act.carrier_auto
    verdicts = []
    if act.side == "left":
        verdicts += [
            compare_law(
                "mod.assoc", "alpha(a).(b.m) = (ab).mu(m)",
                ein("ax,bmj,xjo->abmo", B, t, t),
                ein("abk,my,kyo->abmo", mH, Mu, t), 3, aw),
            compare_law(
                "mod.unit", "1.m = mu(m)",
                ein("a,amo->mo", u, t), Mu, 1, aw),
            compare_law(
                "mod.auto", "mu(a.m) = alpha(a).mu(m)",
                ein("amj,jo->amo", t, Mu),
                ein("ax,my,xyo->amo", B, Mu, t), 2, aw),
        ]
    else:
        verdicts += [
            compare_law(
                "mod.assoc", "(m.a).alpha(b) = mu(m).(ab)",
                ein("maj,bx,jxo->mabo", t, B, t),
                ein("my,abk,yko->mabo", Mu, mH, t), 3, aw),
            compare_law(
                "mod.unit", "m.1 = mu(m)",
                ein("a,mao->mo", u, t), Mu, 1, aw),
            compare_law(
                "mod.auto", "mu(m.a) = mu(m).alpha(a)",
                ein("maj,jo->mao", t, Mu),
                ein("my,ax,yxo->mao", Mu, B, t), 2, aw),
        ]
    if level == "module_algebra":
        mM, uM = carrier.mult, carrier.unit
        dA, eA = actor.comult, actor.counit
        if act.side == "left":
            verdicts += [
                compare_law(
                    "modalg.mult", "h.(ab) = (h1.a)(h2.b)",
                    ein("abk,hko->habo", mM, t),
                    ein("hij,iax,jby,xyo->habo", dA, t, t, mM), 3, aw),
                compare_law(
                    "modalg.unit", "h.1 = eps(h)1",
                    ein("j,hjo->ho", uM, t),
                    ein("h,o->ho", eA, uM), 1, aw),
            ]
        else:
            verdicts += [
                compare_law(
                    "modalg.mult", "(hg).a = (h.a1)(g.a2)",
                    ein("hgk,kao->hgao", mM, t),
                    ein("aij,hix,gjy,xyo->hgao", dA, t, t, mM), 3, aw),
                compare_law(
                    "modalg.unit", "1.a = eps(a)1",
                    ein("j,jao->ao", uM, t),
                    ein("a,o->ao", eA, uM), 1, aw),
            ]
    return CheckReport(
        f"{level}[{act.side}] {act.actor} on {act.carrier}", tuple(verdicts))


def check_coaction_laws(coact: CoactionMap, coactor: HomBialgebra, carrier,
                        level: str, side=None, all_witnesses=False) -> CheckReport:
    """Hom-comodule laws plus the selected level's compatibility laws.

    `carrier` is a HomAlgebra for comodule_algebra, a HomCoalgebra for
    comodule_coalgebra, and either for the bare comodule level.
    """
    if level not in ("comodule", "comodule_algebra", "comodule_coalgebra"):
        raise MissingStructure(f"unknown coaction law level {level!r}")
    if side is not None and side != coact.side:
        raise SideMismatch(f"coaction is {coact.side}-sided, laws requested for {side}")
    aw = all_witnesses
    r = coact.tensor
    dh, dc = coactor.dim, carrier.dim
    if r.shape != (dc, dh, dc):
        raise DimMismatch(f"coaction tensor shape {r.shape}, expected {(dc, dh, dc)}")
    Mu = coact.carrier_auto
    if Mu.shape != (dc, dc):
        raise DimMismatch("carrier automorphism has wrong shape")
    Mui = mat_inverse(Mu)
    d, e, L = coactor.comult, coactor.counit, coactor.beta
    Li = mat_inverse(L)
    verdicts = []
    if coact.side == "right":
        verdicts += [
            compare_law(
                "com.coassoc",
                "mu^-1(m0) (x) Delta(m1) = m00 (x) m01 (x) lambda^-1(m1)",
                ein("mca,ab,cxy->mbxy", r, Mui, d),
                ein("mca,axb,cy->mbxy", r, r, Li), 1, aw),
            compare_law(
                "com.auto", "rho(mu(m)) = mu(m0) (x) lambda(m1)",
                ein("mj,jca->mca", Mu, r),
                ein("mca,cx,ab->mxb", r, L, Mu), 1, aw),
            compare_law(
                "com.counit", "m0 eps(m1) = mu^-1(m)",
                ein("mca,c->ma", r, e), Mui, 1, aw),
        ]
    else:
        verdicts += [
            compare_law(
                "com.coassoc",
                "Delta(m-1) (x) mu^-1(m0) = lambda^-1(m-1) (x) m0-1 (x) m00",
                ein("mca,cxy,ab->mxyb", r, d, Mui),
                ein("mca,cx,ayb->mxyb", r, Li, r), 1, aw),
            compare_law(
                "com.auto", "rho(mu(m)) = lambda(m-1) (x) mu(m0)",
                ein("mj,jca->mca", Mu, r),
                ein("mca,cx,ab->mxb", r, L, Mu), 1, aw),
            compare_law(
                "com.counit", "eps(m-1) m0 = mu^-1(m)",
                ein("mca,c->ma", r, e), Mui, 1, aw),
        ]
    if level == "comodule_algebra":
        if not hasattr(carrier, "mult"):
            raise MissingStructure("comodule_algebra level needs an algebra carrier")
        mM, uM = carrier.mult, carrier.unit
        mC, uC = coactor.mult, coactor.unit
        verdicts += [
            compare_law(
                "comalg.mult", "rho(cd) = (c-leg d-leg) (x) (c0 d0)",
                ein("cdk,kza->cdza", mM, r),
                ein("cxa,dyb,xyz,abo->cdzo", r, r, mC, mM), 2, aw),
            compare_law(
                "comalg.unit", "rho(1) = 1 (x) 1",
                ein("k,kza->za", uM, r),
                ein("z,a->za", uC, uM), 0, aw),
        ]
    if level == "comodule_coalgebra":
        if not hasattr(carrier, "comult"):
            raise MissingStructure("comodule_coalgebra level needs a coalgebra carrier")
        dM, eM = carrier.comult, carrier.counit
        mC, uC = coactor.mult, coactor.unit
        if coact.side == "left":
            verdicts += [
                compare_law(
                    "comcoalg.comult",
                    "c-1 (x) Delta(c0) = c1-1 c2-1 (x) c10 (x) c20",
                    ein("mca,axy->mcxy", r, dM),
                    ein("mij,icx,jdy,cdz->mzxy", dM, r, r, mC), 1, aw),
                compare_law(
                    "comcoalg.counit", "c-1 eps(c0) = eps(c) 1",
                    ein("mca,a->mc", r, eM),
                    ein("m,c->mc", eM, uC), 1, aw),
            ]
        else:
            verdicts += [
                compare_law(
                    "comcoalg.comult",
                    "Delta(c0) (x) c1 = c10 (x) c20 (x) c11 c21",
                    ein("mca,axy->mxyc", r, dM),
                    ein("mij,icx,jdy,cdz->mxyz", dM, r, r, mC), 1, aw),
                compare_law(
                    "comcoalg.counit", "eps(c0) c1 = eps(c) 1",
                    ein("mca,a->mc", r, eM),
                    ein("m,c->mc", eM, uC), 1, aw),
            ]
    return CheckReport(
        f"{level}[{coact.side}] {coact.coactor} coacting on {coact.carrier}",
        tuple(verdicts))
