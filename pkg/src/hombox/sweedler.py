"""Executable index notation for coproduct and coaction legs.

`sweedler_eval` evaluates a term such as "eps(h1)*h2" or "S(h1)*h2" for
one binding of each variable to a basis index.  Subscript digits over
{1,2} are applied literally as nested coproducts, never reassociated:
coassociativity here is twisted, so "h12" and "h21" name different legs
of different splittings.  Bracketed selectors pick coaction legs and come
after all coproduct digits: [-1]/[0] for a left coaction, (0)/(1) for a
right one.

The evaluator is deliberately naive: it enumerates the nonzero splitting
paths of every variable and evaluates the term once per joint assignment.
That keeps it independent of the contraction engine, so the two can be
cross-checked.
"""

from __future__ import annotations

import re
from itertools import product as iproduct

import numpy as np

from .errors import MalformedIndexWord, UnboundVariable
from .kernel import Tensor

_UNICODE = {
    "ε": "eps", "·": "*", "−": "-",
    "₀": "0", "₁": "1", "₂": "2",
    "₋": "-", "⁻": "-", "¹": "1", "²": "2",
}


def _ascii(expr):
    for k, v in _UNICODE.items():
        expr = expr.replace(k, v)
    return expr


# -- parsing ------------------------------------------------------------

_TOKEN = re.compile(r"""
    (?P<name>[A-Za-z]+\d*(\^-?\d+)?)   # identifiers with leg digits, powers
  | (?P<sub>\[-?\d\]|\(\d\))           # coaction selectors
  | (?P<op>[*(),<>])
  | (?P<ws>\s+)
""", re.VERBOSE)

_MAPS = ("eps", "S", "Sinv", "beta", "alpha", "mu")


class _Leg:
    def __init__(self, var, word, selectors):
        self.var = var
        self.word = word
        self.selectors = tuple(selectors)
        self.key = (var, word, self.selectors)


class _Apply:
    def __init__(self, fn, power, arg):
        self.fn = fn
        self.power = power
        self.arg = arg


class _Mul:
    def __init__(self, left, right):
        self.left = left
        self.right = right


class _Pair:
    def __init__(self, dual, vec):
        self.dual = dual
        self.vec = vec


def _tokenize(expr):
    out, pos = [], 0
    while pos < len(expr):
        m = _TOKEN.match(expr, pos)
        if not m:
            raise MalformedIndexWord(f"cannot tokenize at {expr[pos:]!r}")
        pos = m.end()
        if m.lastgroup != "ws":
            out.append((m.lastgroup, m.group()))
    return out


class _Parser:
    def __init__(self, tokens):
        self.toks = tokens
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, kind=None, value=None):
        k, v = self.peek()
        if kind and k != kind or value and v != value:
            raise MalformedIndexWord(f"expected {value or kind}, got {v!r}")
        self.i += 1
        return v

    def parse(self):
        node = self.term()
        if self.i != len(self.toks):
            raise MalformedIndexWord(f"trailing input {self.toks[self.i]!r}")
        return node

    def term(self):
        node = self.factor()
        while self.peek() == ("op", "*"):
            self.take()
            node = _Mul(node, self.factor())
        return node

    def factor(self):
        k, v = self.peek()
        if k == "op" and v == "(":
            self.take()
            node = self.term()
            self.take("op", ")")
            return node
        if k == "op" and v == "<":
            self.take()
            dual = self.term()
            self.take("op", ",")
            vec = self.term()
            self.take("op", ">")
            return _Pair(dual, vec)
        if k == "name":
            base = v.split("^")[0]
            if base in _MAPS:
                self.take()
                power = int(v.split("^")[1]) if "^" in v else 1
                self.take("op", "(")
                arg = self.term()
                self.take("op", ")")
                return _Apply(base, power, arg)
            return self.leg()
        raise MalformedIndexWord(f"unexpected token {v!r}")

    def leg(self):
        name = self.take("name")
        if "^" in name:
            raise MalformedIndexWord(f"bad variable {name!r}")
        var = name[0]
        word = name[1:]
        if not all(c in "12" for c in word):
            raise MalformedIndexWord(
                f"coproduct word {word!r} must use digits 1 and 2")
        sels = []
        while self.peek()[0] == "sub":
            sels.append(self.take())
        return _Leg(var, word, sels)


# -- leg-tree bookkeeping -------------------------------------------------

def _word_tree_leaves(words):
    """Validate that a set of words is the leaf set of a full binary tree
    and return it sorted; '' alone is the trivial tree."""
    words = set(words)
    if words == {""}:
        return [""]
    stack, leaves = [""], []
    while stack:
        node = stack.pop()
        if node in words:
            leaves.append(node)
            continue
        if len(node) > 6:
            raise MalformedIndexWord(f"missing leg {node!r}")
        stack.extend([node + "2", node + "1"])
    if set(leaves) != words:
        raise MalformedIndexWord(f"inconsistent coproduct words {sorted(words)}")
    return sorted(leaves)


def _expand_delta(space, index, words):
    """All nonzero iterated-coproduct paths: dict leaf-word -> index, with
    a scalar weight, expanding splits in the literal nesting order."""
    leaves = _word_tree_leaves(words)
    states = [({"": index}, space.field.one)]
    frontier = [""]
    while frontier:
        node = frontier.pop()
        if node in leaves:
            continue
        d = space.comult
        new = []
        for assign, w in states:
            i = assign[node]
            rest = {k2: v2 for k2, v2 in assign.items() if k2 != node}
            for (j, k), v in np.ndenumerate(d.data[i]):
                if v:
                    a2 = dict(rest)
                    a2[node + "1"] = j
                    a2[node + "2"] = k
                    new.append((a2, w * v))
        states = new
        frontier.extend([node + "1", node + "2"])
    return leaves, states


# -- evaluation ------------------------------------------------------------


def _collect_legs(node, out):
    if isinstance(node, _Leg):
        out.append(node)
    elif isinstance(node, _Apply):
        _collect_legs(node.arg, out)
    elif isinstance(node, _Mul):
        _collect_legs(node.left, out)
        _collect_legs(node.right, out)
    elif isinstance(node, _Pair):
        _collect_legs(node.dual, out)
        _collect_legs(node.vec, out)


def _carrier_selector(side):
    """Which coaction slot continues the carrier: [0] for left, (0) for
    right coactions."""
    return "[0]" if side == "left" else "(0)"


def sweedler_eval(expr: str, bindings: dict, structures: dict) -> Tensor:
    """Evaluate a Sweedler term for one binding of variables to indices.

    `structures` maps each variable to its space (anything with comult,
    counit, mult, unit, beta, antipode as needed) or to a dict
    {"space": ..., "coaction": CoactionMap} when bracket selectors occur.
    Returns a vector in the space where the term lands, or a 0-axis
    scalar tensor.
    """
    tree = _Parser(_tokenize(_ascii(expr))).parse()
    legs = []
    _collect_legs(tree, legs)
    if not legs:
        raise MalformedIndexWord("term references no variables")

    def var_space(v):
        if v not in structures:
            raise UnboundVariable(f"no structure for variable {v!r}")
        entry = structures[v]
        return entry["space"] if isinstance(entry, dict) else entry

    def var_coaction(v):
        entry = structures.get(v)
        if isinstance(entry, dict) and "coaction" in entry:
            return entry["coaction"]
        raise UnboundVariable(f"variable {v!r} has no coaction in scope")

    field = var_space(legs[0].var).field

    # group legs by variable, validate words, expand coproduct paths
    by_var = {}
    for leg in legs:
        if leg.var not in bindings:
            raise UnboundVariable(f"variable {leg.var!r} is not bound")
        by_var.setdefault(leg.var, []).append(leg)
    seen = set()
    for leg in legs:
        if leg.key in seen:
            raise MalformedIndexWord(
                f"leg {leg.var}{leg.word}{''.join(leg.selectors)} used twice")
        seen.add(leg.key)

    var_states = {}
    for v, vlegs in by_var.items():
        space = var_space(v)
        words = {l.word for l in vlegs}
        # selectors on the same delta word must agree in count structure
        leaves, states = _expand_delta(space, bindings[v], words)
        # apply coaction selectors leg by leg
        sel_map = {}
        for l in vlegs:
            sel_map.setdefault(l.word, []).append(l.selectors)
        for word, sel_lists in sel_map.items():
            depths = {len(s) for s in sel_lists}
            if depths == {0}:
                continue
            coact = var_coaction(v)
            cont = _carrier_selector(coact.side)
            co_leg = "[-1]" if coact.side == "left" else "(1)"
            # selectors must form a chain: k applications produce legs
            # cont*i + co_leg (i < k) and cont*k
            k = max(depths)
            want = {tuple([cont] * i + [co_leg]) for i in range(k)}
            want.add(tuple([cont] * k))
            got = {tuple(s) for s in sel_lists}
            if got != want:
                raise MalformedIndexWord(
                    f"coaction selectors on {v}{word} do not tile: "
                    f"{sorted(got)} vs {sorted(want)}")
            r = coact.tensor
            new_states = []
            for assign, w in states:
                base = [(dict(assign), w)]
                for i in range(k):
                    expanded = []
                    key_in = word + cont * i
                    for a, wt in base:
                        idx = a.pop(key_in)
                        for (c, m2), val in np.ndenumerate(r.data[idx]):
                            if val:
                                a2 = dict(a)
                                a2[word + cont * i + co_leg] = c
                                a2[word + cont * (i + 1)] = m2
                                expanded.append((a2, wt * val))
                    base = expanded
                new_states.extend(base)
            states = new_states
        var_states[v] = states

    # joint assignments over variables
    def leg_index(assign_map, leg):
        key = leg.word + "".join(leg.selectors)
        amap = assign_map[leg.var]
        if key not in amap:
            raise MalformedIndexWord(
                f"leg {leg.var}{key} not produced by its splitting")
        return amap[key]

    def leg_space(leg):
        space = var_space(leg.var)
        if leg.selectors:
            coact = var_coaction(leg.var)
            co_leg = "[-1]" if coact.side == "left" else "(1)"
            if leg.selectors[-1] == co_leg:
                return structures[leg.var]["coactor_space"]
        return space

    def eval_node(node, assign_map):
        """Return (kind, value): 'scalar' or ('vec', space, coords list)."""
        if isinstance(node, _Leg):
            space = leg_space(node)
            dim = space.dim
            coords = [field.zero] * dim
            coords[leg_index(assign_map, node)] = field.one
            return ("vec", space, coords)
        if isinstance(node, _Apply):
            if node.fn == "eps":
                kind, space, coords = eval_node(node.arg, assign_map)
                e = space.counit.data
                return ("scalar", sum((c * e[i] for i, c in enumerate(coords)
                                       if c), field.zero))
            kind, space, coords = eval_node(node.arg, assign_map)
            if node.fn in ("beta", "alpha", "mu"):
                mat = space.beta_pow(node.power)
            elif node.fn == "S":
                mat = space.antipode
                if node.power != 1:
                    raise MalformedIndexWord("powers of S are not supported")
            elif node.fn == "Sinv":
                mat = space.antipode_inv()
            else:
                raise MalformedIndexWord(f"unknown map {node.fn!r}")
            md = mat.data
            out = [field.zero] * space.dim
            for i, c in enumerate(coords):
                if c:
                    for j in range(space.dim):
                        if md[i, j]:
                            out[j] = out[j] + c * md[i, j]
            return ("vec", space, out)
        if isinstance(node, _Mul):
            lk = eval_node(node.left, assign_map)
            rk = eval_node(node.right, assign_map)
            if lk[0] == "scalar" and rk[0] == "scalar":
                return ("scalar", lk[1] * rk[1])
            if lk[0] == "scalar":
                _, space, coords = rk
                return ("vec", space, [lk[1] * c for c in coords])
            if rk[0] == "scalar":
                _, space, coords = lk
                return ("vec", space, [rk[1] * c for c in coords])
            _, space, a = lk
            _, space2, b = rk
            if space.dim != space2.dim:
                raise MalformedIndexWord("product of vectors in different spaces")
            m = space.mult.data
            out = [field.zero] * space.dim
            for i, ci in enumerate(a):
                if not ci:
                    continue
                for j, cj in enumerate(b):
                    if not cj:
                        continue
                    for k in range(space.dim):
                        if m[i, j, k]:
                            out[k] = out[k] + ci * cj * m[i, j, k]
            return ("vec", space, out)
        if isinstance(node, _Pair):
            _, dspace, dc = eval_node(node.dual, assign_map)
            _, vspace, vc = eval_node(node.vec, assign_map)
            if dspace.dim != vspace.dim:
                raise MalformedIndexWord("pairing of mismatched spaces")
            return ("scalar",
                    sum((a * b for a, b in zip(dc, vc) if a and b),
                        field.zero))
        raise MalformedIndexWord(f"cannot evaluate node {node!r}")

    varnames = sorted(var_states)
    total = None
    for combo in iproduct(*(var_states[v] for v in varnames)):
        weight = field.one
        assign_map = {}
        for v, (assign, w) in zip(varnames, combo):
            weight = weight * w
            assign_map[v] = assign
        if not weight:
            continue
        kind = eval_node(tree, assign_map)
        if kind[0] == "scalar":
            term = ("scalar", weight * kind[1])
        else:
            term = ("vec", kind[1], [weight * c for c in kind[2]])
        if total is None:
            total = term
        elif total[0] == "scalar":
            total = ("scalar", total[1] + term[1])
        else:
            total = ("vec", total[1],
                     [a + b for a, b in zip(total[2], term[2])])
    if total is None:
        raise MalformedIndexWord("term evaluated to an empty sum")
    if total[0] == "scalar":
        return Tensor(field, np.array(total[1], dtype=object))
    return Tensor(field, np.array(total[2], dtype=object))
