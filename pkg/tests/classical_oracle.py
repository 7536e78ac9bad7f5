"""Independent classical-formula evaluator.

Implements the smash product, codouble, cocycle, twist, and Heisenberg
double with every twisting-automorphism power deleted, using plain
nested-list loops (no tensor engine), for cross-checking the library on
inputs whose automorphism is the identity.
"""


def invert_matrix(rows):
    """Tiny exact Gauss-Jordan on nested lists (for S^-1)."""
    n = len(rows)
    a = [list(r) for r in rows]
    one = None
    for r in a:
        for v in r:
            if v:
                one = v / v
                break
        if one is not None:
            break
    zero = one - one
    inv = [[one if i == j else zero for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col])
        a[col], a[piv] = a[piv], a[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        f = one / a[col][col]
        a[col] = [x * f for x in a[col]]
        inv[col] = [x * f for x in inv[col]]
        for r in range(n):
            if r != col and a[r][col]:
                g = a[r][col]
                a[r] = [x - g * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - g * y for x, y in zip(inv[r], inv[col])]
    return inv


class ClassicalHopf:
    """Plain-data view of a classical Hopf algebra (identity automorphism)."""

    def __init__(self, H):
        self.dim = H.dim
        self.m = H.mult.tolist()
        self.d = H.comult.tolist()
        self.u = H.unit.tolist()
        self.e = H.counit.tolist()
        self.S = H.antipode.tolist()
        self.Si = invert_matrix(self.S)
        self.zero = H.field.zero
        nz = next(v for v in self.u if v)
        self.one = nz / nz
        # dual data: convolution product and its coalgebra
        self.md = [[[self.d[w][i][j] for w in range(self.dim)]
                    for j in range(self.dim)] for i in range(self.dim)]
        self.dd = [[[self.m[a][b][w] for b in range(self.dim)]
                    for a in range(self.dim)] for w in range(self.dim)]

    def vmul(self, m, x, y):
        n = self.dim
        out = [self.zero] * n
        for i in range(n):
            if not x[i]:
                continue
            for j in range(n):
                if not y[j]:
                    continue
                for k in range(n):
                    if m[i][j][k]:
                        out[k] = out[k] + x[i] * y[j] * m[i][j][k]
        return out

    def app(self, M, x):
        n = self.dim
        out = [self.zero] * n
        for i in range(n):
            if x[i]:
                for j in range(n):
                    if M[i][j]:
                        out[j] = out[j] + x[i] * M[i][j]
        return out

    def basis(self, i):
        v = [self.zero] * self.dim
        v[i] = self.one
        return v

    def conj_action(self, x, h):
        """x <| h = S^-1(h2)(x h1), all classical."""
        n = self.dim
        out = [self.zero] * n
        for h1 in range(n):
            for h2 in range(n):
                c = self.d[h][h1][h2]
                if not c:
                    continue
                t = self.vmul(self.m, self.basis(x), self.basis(h1))
                t = self.vmul(self.m, self.app(self.Si, self.basis(h2)), t)
                for k in range(n):
                    if t[k]:
                        out[k] = out[k] + c * t[k]
        return out

    def left_regular_dual_action(self, h, p):
        """(p <- h)(g) = p(hg): the classical regular action on the dual."""
        n = self.dim
        out = [self.zero] * n
        for g in range(n):
            for k in range(n):
                if self.m[h][g][k] and p[k]:
                    out[g] = out[g] + self.m[h][g][k] * p[k]
        return out


def classical_smash_mult(C: ClassicalHopf):
    """(a # x)(b # y) = a b1 # (x <| b2) y on H (x) H^op, conjugation
    action; returns the composite multiplication as nested lists."""
    n = C.dim
    D = n * n
    out = [[[C.zero] * D for _ in range(D)] for _ in range(D)]
    for a in range(n):
        for x in range(n):
            for b in range(n):
                for y in range(n):
                    row = [C.zero] * D
                    for b1 in range(n):
                        for b2 in range(n):
                            c = C.d[b][b1][b2]
                            if not c:
                                continue
                            left = C.vmul(C.m, C.basis(a), C.basis(b1))
                            acted = C.conj_action(x, b2)
                            # product in H^op: u *op v = v u in H
                            for xi in range(n):
                                if not acted[xi]:
                                    continue
                                right = C.vmul(C.m, C.basis(y), C.basis(xi))
                                for o1 in range(n):
                                    if not left[o1]:
                                        continue
                                    for o2 in range(n):
                                        if right[o2]:
                                            row[o1 * n + o2] = (
                                                row[o1 * n + o2]
                                                + c * left[o1] * acted[xi]
                                                * right[o2])
                    out[a * n + x][b * n + y] = row
    return out


def classical_codouble(C: ClassicalHopf):
    """T(H) classically: product (h (x) p)(g (x) q) = gh (x) p q and
    Delta(h (x) u) = h1 (x) e^t.(u1.e^s) (x) S^-1(e_s)(h2 e_t) (x) u2."""
    n = C.dim
    D = n * n
    mult = [[[C.zero] * D for _ in range(D)] for _ in range(D)]
    for h in range(n):
        for p in range(n):
            for g in range(n):
                for q in range(n):
                    row = [C.zero] * D
                    hv = C.vmul(C.m, C.basis(g), C.basis(h))
                    pv = C.vmul(C.md, C.basis(p), C.basis(q))
                    for o1 in range(n):
                        if not hv[o1]:
                            continue
                        for o2 in range(n):
                            if pv[o2]:
                                row[o1 * n + o2] = (row[o1 * n + o2]
                                                    + hv[o1] * pv[o2])
                    mult[h * n + p][g * n + q] = row
    comult = [[[C.zero] * D for _ in range(D)] for _ in range(D)]
    for h in range(n):
        for u in range(n):
            block = [[C.zero] * D for _ in range(D)]
            for h1 in range(n):
                for h2 in range(n):
                    ch = C.d[h][h1][h2]
                    if not ch:
                        continue
                    for u1 in range(n):
                        for u2 in range(n):
                            cu = C.dd[u][u1][u2]
                            if not cu:
                                continue
                            for s in range(n):
                                for t in range(n):
                                    inner = C.vmul(C.md, C.basis(u1),
                                                   C.basis(s))
                                    y1 = C.vmul(C.md, C.basis(t), inner)
                                    he = C.vmul(C.m, C.basis(h2), C.basis(t))
                                    x2 = C.vmul(C.m,
                                                C.app(C.Si, C.basis(s)), he)
                                    for a in range(n):
                                        if not y1[a]:
                                            continue
                                        for b in range(n):
                                            if x2[b]:
                                                block[h1 * n + a][b * n + u2] \
                                                    = (block[h1 * n + a]
                                                       [b * n + u2]
                                                       + ch * cu * y1[a]
                                                       * x2[b])
            comult[h * n + u] = block
    return mult, comult


def classical_cocycle(C: ClassicalHopf):
    """sigma(h (x) p, g (x) q) = <p, g> q(1) eps(h)."""
    n = C.dim
    D = n * n
    out = [[C.zero] * D for _ in range(D)]
    for h in range(n):
        for p in range(n):
            for g in range(n):
                for q in range(n):
                    out[h * n + p][g * n + q] = (
                        (C.one if p == g else C.zero) * C.u[q] * C.e[h])
    return out


def classical_twist(mult, comult, sigma, zero):
    """h . g = sigma(h1, g1) h2 g2 on the same carrier."""
    D = len(mult)
    out = [[[zero] * D for _ in range(D)] for _ in range(D)]
    for h in range(D):
        for g in range(D):
            for h1 in range(D):
                for h2 in range(D):
                    c1 = comult[h][h1][h2]
                    if not c1:
                        continue
                    for g1 in range(D):
                        sig = sigma[h1][g1]
                        if not sig:
                            continue
                        for g2 in range(D):
                            c2 = comult[g][g1][g2]
                            if not c2:
                                continue
                            for o in range(D):
                                if mult[h2][g2][o]:
                                    out[h][g][o] = (out[h][g][o]
                                                    + c1 * c2 * sig
                                                    * mult[h2][g2][o])
    return out


def classical_heisenberg(C: ClassicalHopf):
    """(h # p)(g # q) = h g1 # (p <- g2) . q with (p <- h)(g) = p(hg)."""
    n = C.dim
    D = n * n
    out = [[[C.zero] * D for _ in range(D)] for _ in range(D)]
    for h in range(n):
        for p in range(n):
            for g in range(n):
                for q in range(n):
                    row = [C.zero] * D
                    for g1 in range(n):
                        for g2 in range(n):
                            c = C.d[g][g1][g2]
                            if not c:
                                continue
                            left = C.vmul(C.m, C.basis(h), C.basis(g1))
                            acted = C.left_regular_dual_action(g2, C.basis(p))
                            right = C.vmul(C.md, acted, C.basis(q))
                            for o1 in range(n):
                                if not left[o1]:
                                    continue
                                for o2 in range(n):
                                    if right[o2]:
                                        row[o1 * n + o2] = (
                                            row[o1 * n + o2]
                                            + c * left[o1] * right[o2])
                    out[h * n + p][g * n + q] = row
    return out
