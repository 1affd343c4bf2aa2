"""Constructor expressions for semigroups.

Grammar (``x`` binds tighter than ``+``, both associative)::

    expr   := term ('+' term)*          disjoint ordered union, left operand first
    term   := factor ('x' factor)*      direct product
    factor := NAME [int | '(' int ')'] | '(' expr ')'

Names: ``C`` cyclic group, ``L`` linear semilattice, ``N`` null semigroup,
``Z`` left-zero band, ``D`` dihedral group (argument is the order), ``E``
elementary abelian 2-group (argument is the rank), ``V`` the three-element
semilattice ``{x, y, xy}`` (no argument). ``C(2)`` and ``C2`` are the same.
"""

from __future__ import annotations

import re

from sext.errors import SextError
from sext.semigroup import (
    FiniteSemigroup,
    direct_product,
    disjoint_ordered_union,
    make_cyclic,
    make_dihedral,
    make_left_zero,
    make_linear_semilattice,
    make_null,
)

_TOKEN = re.compile(r"\s*(?:(?P<name>[CLNZDEV])|(?P<int>\d+)|(?P<op>[+x×*()]))")


def make_v_semilattice() -> FiniteSemigroup:
    """``x``, ``y`` and their meet ``xy``, in that order."""
    return FiniteSemigroup([[0, 2, 2], [2, 1, 2], [2, 2, 2]], ["x", "y", "xy"], check=False)


def make_elementary_abelian(rank: int) -> FiniteSemigroup:
    """``C2^rank``; element bits select generators ``a, b, c, ...``."""
    if rank < 0 or rank > 6:
        raise SextError("rank must be in 0..6")
    letters = "abcdef"
    n = 1 << rank
    labels = ["".join(letters[i] for i in range(rank) if k >> i & 1) or "e" for k in range(n)]
    return FiniteSemigroup([[i ^ j for j in range(n)] for i in range(n)], labels, check=False)


def _dihedral_by_order(order: int) -> FiniteSemigroup:
    if order < 2 or order % 2:
        raise SextError("D(n) needs an even order n >= 2")
    return make_dihedral(order // 2)


_CONSTRUCTORS = {
    "C": make_cyclic,
    "L": make_linear_semilattice,
    "N": make_null,
    "Z": make_left_zero,
    "D": _dihedral_by_order,
    "E": make_elementary_abelian,
}


def _tokenize(text: str) -> list[tuple[str, str]]:
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise SextError(f"cannot parse expression at {text[pos:]!r}")
        kind = m.lastgroup
        val = m.group(kind)
        if kind == "op" and val in "×*":
            val = "x"
        out.append((kind, val))
        pos = m.end()
    return out


def parse_expr(text: str) -> FiniteSemigroup:
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, None)

    def take(expected=None):
        nonlocal pos
        tok = peek()
        if tok[0] is None or (expected is not None and tok[1] != expected):
            raise SextError(f"unexpected {'end' if tok[0] is None else repr(tok[1])} in {text!r}")
        pos += 1
        return tok

    def expr():
        s = term()
        while peek() == ("op", "+"):
            take()
            s = disjoint_ordered_union(s, term())
        return s

    def term():
        s = factor()
        while peek() == ("op", "x"):
            take()
            s = direct_product(s, factor())
        return s

    def factor():
        kind, val = take()
        if (kind, val) == ("op", "("):
            s = expr()
            take(")")
            return s
        if kind != "name":
            raise SextError(f"unexpected {val!r} in {text!r}")
        if val == "V":
            return make_v_semilattice()
        if peek() == ("op", "("):
            take()
            k, num = take()
            if k != "int":
                raise SextError(f"expected a number after {val}( in {text!r}")
            take(")")
        else:
            k, num = take()
            if k != "int":
                raise SextError(f"expected a number after {val} in {text!r}")
        return _CONSTRUCTORS[val](int(num))

    result = expr()
    if pos != len(tokens):
        raise SextError(f"trailing input in {text!r}")
    return result
