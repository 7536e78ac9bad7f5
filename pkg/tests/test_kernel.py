import random

import pytest

from hombox.errors import AxisMismatch, BadPermutation, BadScalar, Singular
from hombox.kernel import (QQ, PrimeField, Rational, Tensor, contract, ein,
                           field_from_tag, mat_inverse, mat_power, permute,
                           tensor_product)


def rnd_tensor(rnd, *shape):
    size = 1
    for s in shape:
        size *= s
    return Tensor.from_flat(QQ, shape, [rnd.randint(-3, 3) for _ in range(size)])


# -- scalars -------------------------------------------------------------

def test_rational_canonical_form():
    assert Rational("6/4") == Rational(3, 2)
    x = Rational(1, -2)
    assert x.denominator > 0 and x == Rational(-1, 2)
    z = Rational(0)
    assert z.numerator == 0 and z.denominator == 1
    assert str(Rational(-3, 4)) == "-3/4" and str(Rational(6, 2)) == "3"


def test_rational_parse_errors():
    with pytest.raises(BadScalar):
        QQ.parse("1/0")
    with pytest.raises(BadScalar):
        QQ.parse("abc")


def test_prime_field():
    F7 = PrimeField(7)
    x = F7.parse("3/4")
    assert x * F7.convert(4) == F7.convert(3)
    assert F7.format(F7.parse("-1")) == "6"
    assert field_from_tag("Fp:7") == F7
    with pytest.raises(BadScalar):
        PrimeField(4)
    with pytest.raises(BadScalar):
        F7.parse("1/7")


# -- tensor product --------------------------------------------------------

def test_tensor_product_examples():
    a = Tensor.from_nested(QQ, [1, 2])
    b = Tensor.from_nested(QQ, [3])
    tp = tensor_product(a, b)
    assert tp.shape == (2, 1) and tp.flat() == [Rational(3), Rational(6)]

    one = Tensor.from_nested(QQ, 1)  # 0-axis scalar
    assert tensor_product(a, one) == a

    e0 = Tensor.from_nested(QQ, [1, 0])
    e1 = Tensor.from_nested(QQ, [0, 1])
    m = tensor_product(e0, e1)
    assert m.tolist() == [[0, 1], [0, 0]]


# -- contract ---------------------------------------------------------------

def test_contract_identity():
    v = Tensor.from_nested(QQ, [5, 7])
    assert contract(Tensor.identity(QQ, 2), v, [(1, 0)]) == v


def test_contract_group_multiplication():
    # multiplication tensor of the order-2 group algebra, from its table
    table = {(0, 0): 0, (0, 1): 1, (1, 0): 1, (1, 1): 0}
    arr = [[[0, 0], [0, 0]], [[0, 0], [0, 0]]]
    for (i, j), k in table.items():
        arr[i][j][k] = 1
    mult = Tensor.from_nested(QQ, arr)
    g = Tensor.from_nested(QQ, [0, 1])
    gg = contract(contract(mult, g, [(0, 0)]), g, [(0, 0)])
    assert gg == Tensor.from_nested(QQ, [1, 0])  # g * g = 1


def test_contract_counit_unit():
    eps = Tensor.from_nested(QQ, [1, 1])
    unit = Tensor.from_nested(QQ, [1, 0])
    s = contract(eps, unit, [(0, 0)])
    assert s.ndim == 0 and s.data.item() == Rational(1)


def test_contract_axis_mismatch():
    a = Tensor.from_nested(QQ, [[1, 2, 3]])
    b = Tensor.from_nested(QQ, [1, 2])
    with pytest.raises(AxisMismatch):
        contract(a, b, [(1, 0)])


def test_contract_bilinear():
    rnd = random.Random(3)
    for _ in range(10):
        a = rnd_tensor(rnd, 2, 3)
        a2 = rnd_tensor(rnd, 2, 3)
        b = rnd_tensor(rnd, 3, 2)
        lhs = contract(a + a2, b, [(1, 0)])
        rhs = contract(a, b, [(1, 0)]) + contract(a2, b, [(1, 0)])
        assert lhs == rhs


# -- permute -----------------------------------------------------------------

def test_permute():
    m = Tensor.from_nested(QQ, [[1, 2, 3], [4, 5, 6]])
    t = permute(m, (1, 0))
    assert t.shape == (3, 2) and t.tolist()[0] == [1, 4]
    assert permute(m, (0, 1)) == m
    assert permute(t, (1, 0)) == m


def test_permute_inverse_roundtrip():
    rnd = random.Random(5)
    x = rnd_tensor(rnd, 2, 3, 4)
    perm = [2, 0, 1]
    inv = [perm.index(i) for i in range(3)]
    assert permute(permute(x, perm), inv) == x


def test_permute_bad():
    m = Tensor.from_nested(QQ, [[1, 2], [3, 4]])
    with pytest.raises(BadPermutation):
        permute(m, (0, 0))


# -- inverse / powers ----------------------------------------------------------

def test_mat_inverse():
    ident = Tensor.identity(QQ, 3)
    assert mat_inverse(ident) == ident
    d = Tensor.from_nested(QQ, [[2, 0], [0, 3]])
    assert mat_inverse(d) == Tensor.from_nested(QQ, [["1/2", 0], [0, "1/3"]])
    swap = Tensor.from_nested(QQ, [[0, 1], [1, 0]])
    assert mat_inverse(swap) == swap
    with pytest.raises(Singular):
        mat_inverse(Tensor.from_nested(QQ, [[1, 2], [2, 4]]))


def test_mat_power():
    swap = Tensor.from_nested(QQ, [[0, 1], [1, 0]])
    assert mat_power(swap, 0) == Tensor.identity(QQ, 2)
    assert mat_power(swap, 2) == Tensor.identity(QQ, 2)
    d = Tensor.from_nested(QQ, [[2, 0], [0, 3]])
    assert mat_power(d, -1) == Tensor.from_nested(QQ, [["1/2", 0], [0, "1/3"]])


def test_mat_power_additive():
    rnd = random.Random(11)
    m = Tensor.from_nested(QQ, [[1, 1], [0, 1]])
    for _ in range(5):
        while True:
            cand = rnd_tensor(rnd, 2, 2)
            try:
                mat_inverse(cand)
                break
            except Singular:
                continue
        for i in range(-2, 3):
            for j in range(-2, 3):
                lhs = mat_power(cand, i + j)
                rhs = contract(mat_power(cand, i), mat_power(cand, j), [(1, 0)])
                assert lhs == rhs
    assert mat_power(m, 3) == Tensor.from_nested(QQ, [[1, 3], [0, 1]])


# -- the sparse multi-contraction vs the dense kernel path ----------------------

def test_ein_matches_dense_composition():
    rnd = random.Random(17)
    for _ in range(8):
        a = rnd_tensor(rnd, 3, 4)
        b = rnd_tensor(rnd, 4, 2, 3)
        c = rnd_tensor(rnd, 2, 5)
        got = ein("ij,jki,kl->il", a, b, c)
        # dense path: diagonalize the repeated i by explicit slicing
        rows = []
        for i in range(3):
            ai = Tensor(QQ, a.data[i])
            bi = Tensor(QQ, b.data[:, :, i])
            t = contract(ai, bi, [(0, 0)])       # over j -> [k]
            t = contract(t, c, [(0, 0)])         # over k -> [l]
            rows.append(t.data)
        dense = Tensor(QQ, [list(r) for r in rows])
        assert got == dense


def test_ein_outer_and_trace_like():
    rnd = random.Random(23)
    a = rnd_tensor(rnd, 3, 3)
    summed = ein("ij->", a)
    assert summed.data.item() == sum(a.flat(), QQ.zero)
    u = rnd_tensor(rnd, 2)
    v = rnd_tensor(rnd, 3)
    assert ein("i,j->ij", u, v) == tensor_product(u, v)
