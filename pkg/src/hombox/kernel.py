"""Exact scalars and dense labeled tensors.

Everything else in the library is phrased as contractions of small dense
tensors over an exact field: the rationals by default, or a prime field as
a speed escape hatch.  Tensors are immutable; every operation returns a
new value, so values can be shared freely.
"""

from __future__ import annotations

import numpy as np

from .errors import AxisMismatch, BadPermutation, BadScalar, Singular

try:
    from gmpy2 import mpq as Rational
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as Rational


# ----------------------------------------------------------------------
# fields

class RationalField:
    """Arbitrary-precision exact rationals, canonical form p/q with q > 0."""

    tag = "Q"

    def __init__(self):
        self.zero = Rational(0)
        self.one = Rational(1)

    def convert(self, v):
        if isinstance(v, str):
            return self.parse(v)
        return Rational(v)

    def parse(self, s):
        try:
            return Rational(s.strip())
        except (ValueError, ZeroDivisionError, TypeError) as exc:
            raise BadScalar(f"cannot parse rational {s!r}: {exc}") from None

    def format(self, x):
        return str(x)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")


class FpElement:
    """Residue in Z/p.  Immutable, interoperates with int literals."""

    __slots__ = ("v", "p")

    def __init__(self, v, p):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise BadScalar("mixed prime fields")
            return other.v
        if isinstance(other, int):
            return other % self.p
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FpElement(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FpElement(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FpElement(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FpElement(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o == 0:
            raise BadScalar("division by zero in prime field")
        return FpElement(self.v * pow(o, self.p - 2, self.p), self.p)

    def __neg__(self):
        return FpElement(-self.v, self.p)

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __repr__(self):
        return f"{self.v}~{self.p}"


class PrimeField:
    """Z/p for a prime p < 2**31; scalars parse as p/q with q inverted mod p."""

    def __init__(self, p):
        if p < 2 or p >= 2**31:
            raise BadScalar(f"prime out of range: {p}")
        if any(p % d == 0 for d in range(2, min(p, 1 + int(p**0.5) + 1))):
            raise BadScalar(f"{p} is not prime")
        self.p = p
        self.tag = f"Fp:{p}"
        self.zero = FpElement(0, p)
        self.one = FpElement(1, p)

    def convert(self, v):
        if isinstance(v, FpElement):
            if v.p != self.p:
                raise BadScalar("mixed prime fields")
            return v
        if isinstance(v, str):
            return self.parse(v)
        if isinstance(v, int):
            return FpElement(v, self.p)
        # exact rational -> residue
        num, den = v.numerator, v.denominator
        return FpElement(int(num), self.p) / FpElement(int(den), self.p)

    def parse(self, s):
        s = s.strip()
        try:
            if "/" in s:
                num, den = s.split("/")
                return self.convert(int(num)) / self.convert(int(den))
            return FpElement(int(s), self.p)
        except (ValueError, BadScalar) as exc:
            raise BadScalar(f"cannot parse {s!r} in {self.tag}: {exc}") from None

    def format(self, x):
        return str(x.v)

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(self.tag)


QQ = RationalField()


def field_from_tag(tag):
    if tag == "Q":
        return QQ
    if tag.startswith("Fp:"):
        try:
            return PrimeField(int(tag[3:]))
        except ValueError:
            raise BadScalar(f"bad field tag {tag!r}") from None
    raise BadScalar(f"unknown field tag {tag!r}")


# ----------------------------------------------------------------------
# tensors

class Tensor:
    """Dense multi-axis array of exact scalars with per-axis space labels.

    Axis labels name the vector space each axis indexes; they are metadata
    carried through operations and ignored by equality.
    """

    __slots__ = ("field", "data", "labels")

    def __init__(self, field, data, labels=None):
        arr = np.asarray(data, dtype=object)
        if labels is None:
            labels = ("",) * arr.ndim
        labels = tuple(labels)
        if len(labels) != arr.ndim:
            raise AxisMismatch(f"{len(labels)} labels for {arr.ndim} axes")
        self.field = field
        self.data = arr
        self.labels = labels
        arr.setflags(write=False)

    # -- constructors ---------------------------------------------------

    @classmethod
    def from_nested(cls, field, nested, labels=None):
        """Build from nested lists; entries may be ints or scalar strings."""
        arr = np.array(nested, dtype=object)
        flat = [field.convert(v) for v in arr.ravel()]
        out = np.array(flat, dtype=object).reshape(arr.shape)
        return cls(field, out, labels)

    @classmethod
    def from_flat(cls, field, shape, entries, labels=None):
        entries = [field.convert(v) for v in entries]
        want = 1
        for s in shape:
            want *= s
        if len(entries) != want:
            raise AxisMismatch(f"{len(entries)} entries for shape {tuple(shape)}")
        return cls(field, np.array(entries, dtype=object).reshape(shape), labels)

    @classmethod
    def zeros(cls, field, shape, labels=None):
        return cls(field, np.full(shape, field.zero, dtype=object), labels)

    @classmethod
    def identity(cls, field, dim, labels=None):
        arr = np.full((dim, dim), field.zero, dtype=object)
        for i in range(dim):
            arr[i, i] = field.one
        return cls(field, arr, labels)

    @classmethod
    def basis_vector(cls, field, dim, i, label=""):
        arr = np.full((dim,), field.zero, dtype=object)
        arr[i] = field.one
        return cls(field, arr, (label,))

    # -- views ------------------------------------------------------------

    @property
    def shape(self):
        return self.data.shape

    @property
    def ndim(self):
        return self.data.ndim

    def __getitem__(self, idx):
        return self.data[idx]

    def flat(self):
        return list(self.data.ravel())

    def tolist(self):
        return self.data.tolist()

    def relabel(self, labels):
        return Tensor(self.field, self.data, labels)

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        if self.field != other.field or self.shape != other.shape:
            return False
        return bool((self.data == other.data).all())

    __hash__ = None

    def __add__(self, other):
        if self.shape != other.shape:
            raise AxisMismatch(f"{self.shape} + {other.shape}")
        return Tensor(self.field, self.data + other.data, self.labels)

    def __sub__(self, other):
        if self.shape != other.shape:
            raise AxisMismatch(f"{self.shape} - {other.shape}")
        return Tensor(self.field, self.data - other.data, self.labels)

    def scale(self, c):
        c = self.field.convert(c)
        return Tensor(self.field, self.data * c, self.labels)

    def __repr__(self):
        lab = ",".join(self.labels)
        return f"Tensor{self.shape}[{lab}]"


# ----------------------------------------------------------------------
# operations

def tensor_product(a: Tensor, b: Tensor) -> Tensor:
    """Outer product; axes and labels of `a` followed by those of `b`."""
    if a.field != b.field:
        raise AxisMismatch("mixed scalar fields")
    return Tensor(a.field, np.multiply.outer(a.data, b.data), a.labels + b.labels)


def contract(a: Tensor, b: Tensor, pairs) -> Tensor:
    """Sum over paired axes; survivors keep order, a's then b's."""
    if a.field != b.field:
        raise AxisMismatch("mixed scalar fields")
    ax_a = [p[0] for p in pairs]
    ax_b = [p[1] for p in pairs]
    for i, j in pairs:
        if not (0 <= i < a.ndim and 0 <= j < b.ndim):
            raise AxisMismatch(f"axis pair ({i},{j}) out of range")
        if a.shape[i] != b.shape[j]:
            raise AxisMismatch(
                f"axis sizes differ: a.shape[{i}]={a.shape[i]} b.shape[{j}]={b.shape[j]}")
    if len(set(ax_a)) != len(ax_a) or len(set(ax_b)) != len(ax_b):
        raise AxisMismatch("repeated axis in contraction")
    data = np.tensordot(a.data, b.data, axes=(ax_a, ax_b))
    labels = tuple(l for k, l in enumerate(a.labels) if k not in set(ax_a)) + \
        tuple(l for k, l in enumerate(b.labels) if k not in set(ax_b))
    return Tensor(a.field, data, labels)


def permute(a: Tensor, perm) -> Tensor:
    """Rearrange axes; result axis k is input axis perm[k]."""
    perm = tuple(perm)
    if sorted(perm) != list(range(a.ndim)):
        raise BadPermutation(f"{perm} is not a permutation of {a.ndim} axes")
    return Tensor(a.field, np.transpose(a.data, perm),
                  tuple(a.labels[p] for p in perm))


def solve(a: Tensor, b: Tensor) -> Tensor:
    """Exact solution X of a @ X = b for square invertible a (Gauss-Jordan)."""
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise AxisMismatch(f"solve needs a square matrix, got {a.shape}")
    n = a.shape[0]
    if b.shape[0] != n:
        raise AxisMismatch("right-hand side has wrong leading dimension")
    rhs_shape = b.shape[1:]
    m = int(np.prod(rhs_shape)) if rhs_shape else 1
    A = [list(row) for row in a.data]
    B = [list(row) for row in b.data.reshape(n, m)]
    zero = a.field.zero
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col]), None)
        if piv is None:
            raise Singular(f"matrix is singular at column {col}")
        if piv != col:
            A[col], A[piv] = A[piv], A[col]
            B[col], B[piv] = B[piv], B[col]
        inv = a.field.one / A[col][col]
        A[col] = [x * inv for x in A[col]]
        B[col] = [x * inv for x in B[col]]
        for r in range(n):
            if r != col and A[r][col]:
                f = A[r][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
                B[r] = [x - f * y for x, y in zip(B[r], B[col])]
    out = np.array(B, dtype=object).reshape((n,) + rhs_shape) if rhs_shape \
        else np.array([row[0] for row in B], dtype=object)
    labels = (a.labels[1],) + tuple(b.labels[1:])
    return Tensor(a.field, out, labels[:out.ndim])


def mat_inverse(m: Tensor) -> Tensor:
    """Exact inverse of a square matrix; raises Singular when det = 0."""
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise AxisMismatch(f"mat_inverse needs a square matrix, got {m.shape}")
    ident = Tensor.identity(m.field, m.shape[0])
    return solve(m, ident).relabel((m.labels[1], m.labels[0]))


def mat_power(m: Tensor, k: int) -> Tensor:
    """k-th power for k in Z; mat_power(m, 0) is the identity."""
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise AxisMismatch(f"mat_power needs a square matrix, got {m.shape}")
    if k == 0:
        return Tensor.identity(m.field, m.shape[0], m.labels)
    base = m if k > 0 else mat_inverse(m)
    out = base
    for _ in range(abs(k) - 1):
        out = contract(out, base, [(1, 0)])
    return out


# ----------------------------------------------------------------------
# multi-operand contraction
#
# Law checking composes many small structure tensors.  Doing that densely
# costs dim^5..dim^7 scalar multiplies on composite spaces, so the helper
# below joins operands on their nonzero entries instead.  Storage stays
# dense; this only skips multiplications by zero.  kernel.contract keeps
# the plain dense path and doubles as an independent cross-check in tests.

def _nonzeros(arr):
    nz = {}
    for idx, v in np.ndenumerate(arr):
        if v:
            nz[idx] = v
    return nz


def ein(spec: str, *tensors) -> Tensor:
    """Einstein-summation contraction of several tensors, exact scalars.

    `spec` is an einsum string like 'aij,jzw,zy->ayw'.  Each index letter
    must have a consistent size; letters absent from the output are summed.
    Repeated letters within one operand are not supported.
    """
    lhs, rhs = spec.replace(" ", "").split("->")
    subs = lhs.split(",")
    if len(subs) != len(tensors):
        raise AxisMismatch(f"{len(subs)} operand specs for {len(tensors)} tensors")
    field = tensors[0].field
    dims = {}
    for sub, t in zip(subs, tensors):
        if len(sub) != t.ndim:
            raise AxisMismatch(f"spec {sub!r} does not match rank-{t.ndim} tensor")
        if len(set(sub)) != len(sub):
            raise AxisMismatch(f"repeated index in operand spec {sub!r}")
        for ch, d in zip(sub, t.shape):
            if dims.setdefault(ch, d) != d:
                raise AxisMismatch(f"index {ch!r} has sizes {dims[ch]} and {d}")
    for ch in rhs:
        if ch not in dims:
            raise AxisMismatch(f"output index {ch!r} not among inputs")

    ops = [(sub, _nonzeros(t.data)) for sub, t in zip(subs, tensors)]
    cur_sub, cur = ops.pop(0)

    while ops:
        # prefer the operand sharing the most indices with the partial result
        j = max(range(len(ops)),
                key=lambda i: sum(c in cur_sub for c in ops[i][0]))
        sub2, nz2 = ops.pop(j)
        shared = [c for c in sub2 if c in cur_sub]
        rest2 = [c for c in sub2 if c not in cur_sub]
        pos_shared2 = [sub2.index(c) for c in shared]
        pos_rest2 = [sub2.index(c) for c in rest2]
        lookup = {}
        for idx, v in nz2.items():
            key = tuple(idx[p] for p in pos_shared2)
            lookup.setdefault(key, []).append(
                (tuple(idx[p] for p in pos_rest2), v))

        needed = set(rhs)
        for s, _ in ops:
            needed.update(s)
        union = cur_sub + "".join(rest2)
        keep = [c for c in union if c in needed]
        keep_from_cur = [(i, c) for i, c in enumerate(cur_sub) if c in needed]
        keep_from_rest = [(i, c) for i, c in enumerate(rest2) if c in needed]
        order = {c: k for k, c in enumerate(keep)}
        pos_shared1 = [cur_sub.index(c) for c in shared]

        new = {}
        for idx1, v1 in cur.items():
            key = tuple(idx1[p] for p in pos_shared1)
            hits = lookup.get(key)
            if not hits:
                continue
            base = [None] * len(keep)
            for p, c in keep_from_cur:
                base[order[c]] = idx1[p]
            for idx2, v2 in hits:
                out = list(base)
                for p, c in keep_from_rest:
                    out[order[c]] = idx2[p]
                k = tuple(out)
                prod = v1 * v2
                if k in new:
                    new[k] = new[k] + prod
                else:
                    new[k] = prod
        cur_sub, cur = "".join(keep), new

    # sum out leftovers not in the output (single-operand specs)
    if set(cur_sub) - set(rhs):
        pos_keep = [i for i, c in enumerate(cur_sub) if c in rhs]
        folded = {}
        for idx, v in cur.items():
            k = tuple(idx[p] for p in pos_keep)
            folded[k] = folded[k] + v if k in folded else v
        cur_sub = "".join(c for c in cur_sub if c in rhs)
        cur = folded

    perm = [cur_sub.index(c) for c in rhs]
    shape = tuple(dims[c] for c in rhs)
    out = np.full(shape, field.zero, dtype=object)
    for idx, v in cur.items():
        if v:
            out[tuple(idx[p] for p in perm)] = v
    return Tensor(field, out)
