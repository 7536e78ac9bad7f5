"""The builtin zoo: small validated structures used throughout.

Every builtin passes the full hopf suite before it is handed out; a
failing builtin raises BuiltinValidationError carrying the report.
"""

from __future__ import annotations

import functools

from .constructions import dual_hopf, yau_twist
from .errors import BadParam, BuiltinValidationError, UnknownBuiltin
from .hom_core import (HomAlgebra, HomBialgebra, HomCoalgebra,
                       HomHopfAlgebra, check_structure)
from .kernel import QQ, Tensor, field_from_tag

BUILTIN_NAMES = ("k", "group-c2", "group-c3", "group-c3-inv",
                 "sweedler4", "classical-sweedler4")


def make_hopf(field, label, dim, mult, unit, comult, counit, beta,
              antipode) -> HomHopfAlgebra:
    alg = HomAlgebra(dim, Tensor.from_nested(field, mult),
                     Tensor.from_nested(field, unit),
                     Tensor.from_nested(field, beta), label)
    coa = HomCoalgebra(dim, Tensor.from_nested(field, comult),
                       Tensor.from_nested(field, counit),
                       Tensor.from_nested(field, beta), label)
    return HomHopfAlgebra(HomBialgebra(alg, coa),
                          Tensor.from_nested(field, antipode))


def _zeros3(n):
    return [[[0] * n for _ in range(n)] for _ in range(n)]


def _eye(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _group_algebra(field, n, label):
    """Group algebra of the cyclic group of order n, classical structure."""
    mult = _zeros3(n)
    comult = _zeros3(n)
    antipode = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            mult[i][j][(i + j) % n] = 1
        comult[i][i][i] = 1
        antipode[i][(-i) % n] = 1
    unit = [1] + [0] * (n - 1)
    counit = [1] * n
    return make_hopf(field, label, n, mult, unit, comult, counit,
                     _eye(n), antipode)


def _classical_sweedler(field):
    """The four-dimensional algebra on 1, g, x, gx with g^2 = 1, x^2 = 0,
    xg = -gx, Delta(g) = g (x) g, Delta(x) = x (x) 1 + g (x) x."""
    mult = _zeros3(4)
    table = {
        (0, 0): [(0, 1)], (0, 1): [(1, 1)], (0, 2): [(2, 1)], (0, 3): [(3, 1)],
        (1, 0): [(1, 1)], (1, 1): [(0, 1)], (1, 2): [(3, 1)], (1, 3): [(2, 1)],
        (2, 0): [(2, 1)], (2, 1): [(3, -1)], (2, 2): [], (2, 3): [],
        (3, 0): [(3, 1)], (3, 1): [(2, -1)], (3, 2): [], (3, 3): [],
    }
    for (i, j), terms in table.items():
        for k, c in terms:
            mult[i][j][k] = c
    comult = _zeros3(4)
    comult[0][0][0] = 1
    comult[1][1][1] = 1
    comult[2][2][0] = 1
    comult[2][1][2] = 1
    comult[3][3][1] = 1
    comult[3][0][3] = 1
    unit = [1, 0, 0, 0]
    counit = [1, 1, 0, 0]
    antipode = [[0] * 4 for _ in range(4)]
    antipode[0][0] = 1
    antipode[1][1] = 1
    antipode[2][3] = -1
    antipode[3][2] = 1
    return make_hopf(field, "H4", 4, mult, unit, comult, counit, _eye(4),
                     antipode)


def _validated(obj) -> HomHopfAlgebra:
    report = check_structure(obj, "hopf")
    if not report.passed:
        raise BuiltinValidationError(report)
    return obj


@functools.lru_cache(maxsize=None)
def _builtin(name, lam_str, field_tag):
    field = field_from_tag(field_tag)
    if name == "k":
        return _validated(make_hopf(
            field, "k", 1, [[[1]]], [1], [[[1]]], [1], [[1]], [[1]]))
    if name == "group-c2":
        return _validated(_group_algebra(field, 2, "kC2"))
    if name == "group-c3":
        return _validated(_group_algebra(field, 3, "kC3"))
    if name == "group-c3-inv":
        base = _group_algebra(field, 3, "kC3i")
        inv = Tensor.from_nested(field, [[1, 0, 0], [0, 0, 1], [0, 1, 0]])
        return _validated(yau_twist(base, inv))
    if name == "classical-sweedler4":
        return _validated(_classical_sweedler(field))
    if name == "sweedler4":
        lam = field.parse(lam_str)
        if not lam:
            raise BadParam("sweedler4 needs a nonzero automorphism parameter")
        base = _classical_sweedler(field)
        zero, one = field.zero, field.one
        auto = Tensor(field, [[one, zero, zero, zero],
                              [zero, one, zero, zero],
                              [zero, zero, lam, zero],
                              [zero, zero, zero, lam]])
        return _validated(yau_twist(base, auto))
    if name.startswith("dual-of:"):
        return _validated(dual_hopf(_builtin(name[8:], lam_str, field_tag)))
    raise UnknownBuiltin(f"no builtin named {name!r}")


def builtin(name, lam="2", field=QQ) -> HomHopfAlgebra:
    """Fetch a validated builtin; `lam` applies to sweedler4 only."""
    return _builtin(name, str(lam), field.tag)
