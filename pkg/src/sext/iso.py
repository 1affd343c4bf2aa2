"""Isomorphism search for finite semigroups.

Backtracking over element images. Every assignment is closed under products
(``h(xy)`` is forced once ``h(x)`` and ``h(y)`` are known), and candidate images
are pruned by an element signature that any isomorphism must preserve.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from sext.semigroup import FiniteSemigroup


@dataclass(frozen=True)
class IsoWitness:
    mapping: tuple[int, ...]
    verified: bool


def is_homomorphism(x: FiniteSemigroup, y: FiniteSemigroup, h: Sequence[int]) -> bool:
    tx, ty = x.table, y.table
    n = x.order
    return all(h[tx[i][j]] == ty[h[i]][h[j]] for i in range(n) for j in range(n))


def element_signatures(s: FiniteSemigroup) -> list[tuple]:
    """Isomorphism-invariant data per element."""
    n = s.order
    if n == 0:
        return []
    a = s.array
    idx = np.arange(n)
    squares = a[idx, idx]
    sq_count = np.bincount(squares, minlength=n)
    left_fix = (a == idx[:, None]).sum(axis=1)        # #y with x*y = x
    right_fix = (a == idx[None, :]).sum(axis=0)       # #y with y*x = x
    left_id = (a == idx[None, :]).sum(axis=1)         # #y with x*y = y
    right_id = (a == idx[:, None]).sum(axis=0)        # #y with y*x = y
    image_count = np.bincount(a.ravel(), minlength=n)
    sigs = []
    for x in range(n):
        seen = {}
        p, k = x, 1
        while p not in seen:
            seen[p] = k
            p = s.table[p][x]
            k += 1
        index, period = seen[p], k - seen[p]
        sigs.append((
            int(squares[x] == x), index, period,
            int(left_fix[x]), int(right_fix[x]), int(left_id[x]), int(right_id[x]),
            int(sq_count[x]), int(image_count[x]),
            len(set(s.table[x])), len({row[x] for row in s.table}),
        ))
    return sigs


def find_isomorphism(x: FiniteSemigroup, y: FiniteSemigroup, *,
                     use_signatures: bool = True, anti: bool = False) -> Optional[IsoWitness]:
    """A verified isomorphism ``x -> y``, or None once the search space is exhausted.

    With ``anti=True`` the search targets the transposed table of ``y``, i.e.
    anti-isomorphisms.
    """
    if anti:
        y = y.transpose()
    n = x.order
    if n != y.order:
        return None
    if n == 0:
        return IsoWitness((), True)
    tx, ty = x.table, y.table
    if use_signatures:
        sx, sy = element_signatures(x), element_signatures(y)
        if Counter(sx) != Counter(sy):
            return None
        allowed = [frozenset(j for j in range(n) if sy[j] == sx[i]) for i in range(n)]
        order = sorted(range(n), key=lambda i: (len(allowed[i]), i))
    else:
        everything = frozenset(range(n))
        allowed = [everything] * n
        order = list(range(n))

    h = [-1] * n
    used = [False] * n
    assigned: list[int] = []

    def assign(i: int, j: int, trail: list[int]) -> bool:
        """Set h(i) = j and close under products; record new assignments in trail."""
        queue = [(i, j)]
        while queue:
            u, v = queue.pop()
            if h[u] != -1:
                if h[u] != v:
                    return False
                continue
            if used[v] or v not in allowed[u]:
                return False
            h[u] = v
            used[v] = True
            trail.append(u)
            assigned.append(u)
            for w in assigned:
                hw = h[w]
                queue.append((tx[u][w], ty[v][hw]))
                queue.append((tx[w][u], ty[hw][v]))
        return True

    def undo(trail: list[int]) -> None:
        for u in trail:
            used[h[u]] = False
            h[u] = -1
        del assigned[len(assigned) - len(trail):]

    def search(pos: int) -> bool:
        while pos < n and h[order[pos]] != -1:
            pos += 1
        if pos == n:
            return True
        i = order[pos]
        for j in sorted(allowed[i]):
            if used[j]:
                continue
            trail: list[int] = []
            if assign(i, j, trail) and search(pos + 1):
                return True
            undo(trail)
        return False

    if not search(0):
        return None
    mapping = tuple(h)
    if not is_homomorphism(x, y, mapping) or sorted(mapping) != list(range(n)):
        raise AssertionError("isomorphism search produced an invalid mapping")
    return IsoWitness(mapping, True)


# -- named families ----------------------------------------------------------------

def _fixed(name: str, order: int):
    return lambda k: name if k == order else None


# family name -> instance expression at a given order (None if it has no member of that order)
FAMILY_INSTANCES = {
    "C2": _fixed("C2", 2),
    "C3": _fixed("C3", 3),
    "C4": _fixed("C4", 4),
    "C2xC2": _fixed("C2xC2", 4),
    "L2xC2": _fixed("L2xC2", 4),
    "L1+C2": _fixed("L1+C2", 3),
    "Ln": lambda k: f"L{k}" if k >= 0 else None,
    "C2+Ln": lambda k: f"C2+L{k - 2}" if k >= 2 else None,
    "Ln+C2": lambda k: f"L{k - 2}+C2" if k >= 2 else None,
}

THEOREM_FAMILIES = {
    "t1l": ("C2", "C3", "C4", "C2xC2", "L2xC2", "L1+C2", "Ln", "C2+Ln"),
    "t1f": ("C2", "Ln", "Ln+C2"),
    "t1n": ("C2", "Ln"),
    "t1u": ("Ln",),
}


def family_instances(family: Sequence[str], order: int) -> list[str]:
    out = []
    for name in family:
        inst = FAMILY_INSTANCES[name](order)
        if inst is not None:
            out.append(inst)
    return out


def family_matches(x: FiniteSemigroup, family: Sequence[str]) -> list[str]:
    """Every family instance of order ``|x|`` isomorphic to ``x``, in family order."""
    from sext.expr import parse_expr

    return [inst for inst in family_instances(family, x.order)
            if find_isomorphism(x, parse_expr(inst)) is not None]


def is_isomorphic_to_family(x: FiniteSemigroup, family: Sequence[str]) -> Optional[str]:
    """The first family instance isomorphic to ``x``, or None."""
    from sext.expr import parse_expr

    for inst in family_instances(family, x.order):
        if find_isomorphism(x, parse_expr(inst)) is not None:
            return inst
    return None
