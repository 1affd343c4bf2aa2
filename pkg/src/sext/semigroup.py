"""Finite semigroups given by Cayley tables, constructors and property predicates.

Elements are the indices ``0..order-1``; ``table[i][j]`` is the index of the
product of element ``i`` and element ``j``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product as cartesian
from typing import Iterable, Optional, Sequence

import numpy as np

from sext.errors import NotAssociativeError, SextError

Table = tuple[tuple[int, ...], ...]


def _normalize_table(table: Sequence[Sequence[int]]) -> Table:
    rows = tuple(tuple(int(v) for v in row) for row in table)
    n = len(rows)
    for i, row in enumerate(rows):
        if len(row) != n:
            raise SextError(f"table is not square: row {i} has {len(row)} entries, expected {n}")
        for v in row:
            if not 0 <= v < n:
                raise SextError(f"table entry {v} in row {i} is out of range 0..{n - 1}")
    return rows


def check_associative(table: Sequence[Sequence[int]]) -> tuple[bool, Optional[tuple[int, int, int]]]:
    """Return ``(True, None)`` or ``(False, (i, j, k))`` for the first failing triple.

    Triples are scanned in lexicographic order.
    """
    rows = _normalize_table(table)
    n = len(rows)
    if n == 0:
        return True, None
    t = np.array(rows, dtype=np.int32)
    # process in slabs of i so that large tables stay within memory
    step = max(1, 2_000_000 // (n * n))
    for start in range(0, n, step):
        sl = t[start:start + step]          # sl[i, j] = i*j
        left = t[sl]                        # left[i, j, k] = (i*j)*k
        right = sl[:, t]                    # right[i, j, k] = i*(j*k)
        bad = np.argwhere(left != right)
        if len(bad):
            i, j, k = (int(v) for v in bad[0])
            return False, (start + i, j, k)
    return True, None


class FiniteSemigroup:
    """An associative Cayley table with optional element labels."""

    def __init__(self, table: Sequence[Sequence[int]], labels: Optional[Iterable[str]] = None,
                 *, check: bool = True):
        self.table: Table = _normalize_table(table)
        n = len(self.table)
        if labels is None:
            self.labels = tuple(str(i) for i in range(n))
        else:
            self.labels = tuple(str(s) for s in labels)
            if len(self.labels) != n:
                raise SextError(f"expected {n} labels, got {len(self.labels)}")
        if check:
            ok, triple = check_associative(self.table)
            if not ok:
                raise NotAssociativeError(triple)

    @property
    def order(self) -> int:
        return len(self.table)

    def __len__(self) -> int:
        return len(self.table)

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def power(self, x: int, k: int) -> int:
        if k < 1:
            raise ValueError("powers start at 1")
        p = x
        for _ in range(k - 1):
            p = self.table[p][x]
        return p

    @cached_property
    def array(self) -> np.ndarray:
        a = np.array(self.table, dtype=np.int64).reshape(self.order, self.order)
        a.setflags(write=False)
        return a

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def transpose(self) -> "FiniteSemigroup":
        """The anti-isomorphic semigroup (x*y := y*x)."""
        n = self.order
        return FiniteSemigroup([[self.table[j][i] for j in range(n)] for i in range(n)],
                               self.labels, check=False)

    def __eq__(self, other):
        if not isinstance(other, FiniteSemigroup):
            return NotImplemented
        return self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return f"FiniteSemigroup(order={self.order}, table={[list(r) for r in self.table]})"


# -- constructors -----------------------------------------------------------

def make_cyclic(n: int) -> FiniteSemigroup:
    """Cyclic group of order ``n``; element ``i`` is the ``i``-th power of the generator."""
    if n < 1:
        raise SextError("C(n) requires n >= 1")
    labels = ["e", "a"] + [f"a{k}" for k in range(2, n)]
    return FiniteSemigroup([[(i + j) % n for j in range(n)] for i in range(n)],
                           labels[:n], check=False)


def make_linear_semilattice(n: int) -> FiniteSemigroup:
    """``{0, ..., n-1}`` under minimum. ``n = 0`` gives the empty semigroup."""
    if n < 0:
        raise SextError("L(n) requires n >= 0")
    return FiniteSemigroup([[min(i, j) for j in range(n)] for i in range(n)], check=False)


def make_null(n: int) -> FiniteSemigroup:
    """Null semigroup: every product is element 0."""
    if n < 1:
        raise SextError("null semigroup requires n >= 1")
    return FiniteSemigroup([[0] * n for _ in range(n)], check=False)


def make_left_zero(n: int) -> FiniteSemigroup:
    return FiniteSemigroup([[i] * n for i in range(n)], check=False)


def make_dihedral(m: int) -> FiniteSemigroup:
    """Dihedral group of order ``2m``.

    Element ``s*m + i`` stands for ``a^i b^s`` where ``a`` has order ``m``,
    ``b`` has order 2 and ``b a = a^-1 b``.
    """
    if m < 1:
        raise SextError("dihedral group requires m >= 1")

    def mul(x, y):
        s, i = divmod(x, m)
        t, j = divmod(y, m)
        k = (i + (j if s == 0 else -j)) % m
        return ((s + t) % 2) * m + k

    labels = []
    for s in range(2):
        for i in range(m):
            a = "" if i == 0 else ("a" if i == 1 else f"a{i}")
            b = "b" if s else ""
            labels.append((a + b) or "e")
    n = 2 * m
    return FiniteSemigroup([[mul(x, y) for y in range(n)] for x in range(n)], labels)


def _distinct_labels(left: Sequence[str], right: Sequence[str]) -> list[str]:
    taken = set(left)
    out = []
    for s in right:
        while s in taken:
            s += "'"
        taken.add(s)
        out.append(s)
    return list(left) + out


def disjoint_ordered_union(x: FiniteSemigroup, y: FiniteSemigroup) -> FiniteSemigroup:
    """X-elements first; a mixed product returns the X-side factor."""
    n, m = x.order, y.order
    table = []
    for i in range(n + m):
        row = []
        for j in range(n + m):
            if i < n and j < n:
                row.append(x.table[i][j])
            elif i < n:
                row.append(i)
            elif j < n:
                row.append(j)
            else:
                row.append(n + y.table[i - n][j - n])
        table.append(row)
    return FiniteSemigroup(table, _distinct_labels(x.labels, y.labels), check=False)


def direct_product(x: FiniteSemigroup, y: FiniteSemigroup) -> FiniteSemigroup:
    """Componentwise product; pair ``(i, j)`` has index ``i * |Y| + j``."""
    n, m = x.order, y.order
    table = [[x.table[a // m][b // m] * m + y.table[a % m][b % m] for b in range(n * m)]
             for a in range(n * m)]
    labels = [f"({x.labels[a // m]},{y.labels[a % m]})" for a in range(n * m)]
    return FiniteSemigroup(table, labels, check=False)


def subsemigroup(x: FiniteSemigroup, elements: Iterable[int]) -> FiniteSemigroup:
    """Restrict ``x`` to a multiplicatively closed subset, keeping the given order."""
    elems = list(elements)
    pos = {e: k for k, e in enumerate(elems)}
    if len(pos) != len(elems):
        raise SextError("subsemigroup elements must be distinct")
    table = []
    for a in elems:
        row = []
        for b in elems:
            c = x.table[a][b]
            if c not in pos:
                raise SextError(f"subset is not closed: {a}*{b} = {c}")
            row.append(pos[c])
        table.append(row)
    return FiniteSemigroup(table, [x.labels[e] for e in elems], check=False)


def is_ideal(x: FiniteSemigroup, ideal: Iterable[int]) -> bool:
    members = set(ideal)
    if not members:
        raise SextError("an ideal must be non-empty")
    for i in members:
        for s in range(x.order):
            if x.table[s][i] not in members or x.table[i][s] not in members:
                return False
    return True


def reduced_product(x: FiniteSemigroup, ideal: Iterable[int], y: FiniteSemigroup) -> FiniteSemigroup:
    """The reduced product of ``x`` and ``y`` over the ideal ``ideal`` of ``x``.

    Elements: the ideal (ascending ``x``-index) followed by the pairs
    ``(p, g)`` with ``p`` outside the ideal, row-major. Products whose
    ``x``-component falls into the ideal collapse onto it.
    """
    inside = sorted(set(ideal))
    if not inside:
        raise SextError("reduced product requires a non-empty ideal")
    if not is_ideal(x, inside):
        raise SextError(f"{inside} is not an ideal")
    outside = [p for p in range(x.order) if p not in set(inside)]
    m = y.order
    elems: list[tuple[int, Optional[int]]] = [(p, None) for p in inside]
    elems += [(p, g) for p in outside for g in range(m)]
    pos = {e: k for k, e in enumerate(elems)}
    in_ideal = set(inside)
    table = []
    for p, g in elems:
        row = []
        for q, h in elems:
            r = x.table[p][q]
            if r in in_ideal:
                row.append(pos[(r, None)])
            else:
                row.append(pos[(r, y.table[g][h])])
        table.append(row)
    labels = [x.labels[p] if g is None else f"({x.labels[p]},{y.labels[g]})" for p, g in elems]
    return FiniteSemigroup(table, labels)


# -- element-level predicates -----------------------------------------------

def is_regular_element(x: int, s: FiniteSemigroup) -> bool:
    if not 0 <= x < s.order:
        raise SextError(f"element {x} out of range")
    t = s.table
    row = t[x]
    return any(t[row[y]][x] == x for y in range(s.order))


def idempotents(s: FiniteSemigroup) -> tuple[int, ...]:
    return tuple(x for x in range(s.order) if s.table[x][x] == x)


def idempotent_chain(s: FiniteSemigroup) -> Optional[tuple[int, ...]]:
    """The idempotents sorted bottom-up if they form a linear semilattice, else None.

    In the returned chain ``e_i * e_j = e_j * e_i = e_i`` for ``i < j``.
    """
    es = idempotents(s)
    t = s.table
    for e in es:
        for f in es:
            ef = t[e][f]
            if ef != t[f][e] or ef not in (e, f):
                return None
    return tuple(sorted(es, key=lambda e: -sum(1 for f in es if t[e][f] == e)))


def maximal_subgroup(s: FiniteSemigroup, e: int) -> tuple[int, ...]:
    """Group of units of the local monoid ``eSe``."""
    if not 0 <= e < s.order or s.table[e][e] != e:
        raise SextError(f"element {e} is not an idempotent")
    a = s.array
    local = np.flatnonzero((a[e, :] == np.arange(s.order)) & (a[:, e] == np.arange(s.order)))
    sub = a[np.ix_(local, local)]
    units = local[((sub == e) & (sub.T == e)).any(axis=1)]
    return tuple(int(u) for u in units)


def _powers(s: FiniteSemigroup, x: int, count: int) -> list[int]:
    """``[x^0 placeholder, x^1, ..., x^count]``; index 0 is unused (-1)."""
    out = [-1, x]
    t = s.table
    for _ in range(count - 1):
        out.append(t[out[-1]][x])
    return out


# -- classification -----------------------------------------------------------

@dataclass
class PropertyReport:
    commutative: bool
    idempotents_commute: bool
    regular: bool
    inverse: bool
    clifford: bool
    sub_clifford: bool
    boolean: bool
    linear: bool
    semilattice: bool
    idempotent_set: tuple[int, ...]
    witness: dict[str, tuple[int, ...]] = field(default_factory=dict)

    FLAGS = ("commutative", "idempotents_commute", "regular", "inverse", "clifford",
             "sub_clifford", "boolean", "linear", "semilattice")

    def flags(self) -> dict[str, bool]:
        return {name: getattr(self, name) for name in self.FLAGS}

    def to_dict(self, labels: Optional[Sequence[str]] = None) -> dict:
        out: dict = dict(self.flags())
        out["idempotents"] = list(self.idempotent_set)
        out["witness"] = {k: list(v) for k, v in sorted(self.witness.items())}
        if labels is not None:
            out["witness_labels"] = {
                k: [labels[i] for i in v] for k, v in sorted(self.witness.items())
                if k != "sub_clifford"
            }
        return out


class ClassificationMismatch(AssertionError):
    """Two independent routes to the same property disagreed."""


def _unique_inverse_holds(s: FiniteSemigroup) -> bool:
    a = s.array
    n = s.order
    for x in range(n):
        xy = a[x, :]                       # x*y for every y
        xyx = a[xy, x]                     # (x*y)*x
        yx = a[:, x]                       # y*x
        yxy = a[yx, np.arange(n)]          # (y*x)*y
        if int(np.count_nonzero((xyx == x) & (yxy == np.arange(n)))) != 1:
            return False
    return True


def classify(s: FiniteSemigroup) -> PropertyReport:
    """Compute every property flag, with a witness for each flag that fails.

    Inverse and Clifford are each computed along two independent routes;
    disagreement raises :class:`ClassificationMismatch`.
    """
    n = s.order
    t = s.table
    w: dict[str, tuple[int, ...]] = {}
    es = idempotents(s)

    def first_pair(pred, items):
        for i, x in enumerate(items):
            for y in items[i + 1:]:
                if pred(x, y):
                    return (x, y)
        return None

    elems = list(range(n))
    bad = first_pair(lambda x, y: t[x][y] != t[y][x], elems)
    commutative = bad is None
    if bad:
        w["commutative"] = bad

    bad = first_pair(lambda e, f: t[e][f] != t[f][e], list(es))
    idem_commute = bad is None
    if bad:
        w["idempotents_commute"] = bad

    regular = True
    for x in elems:
        if not is_regular_element(x, s):
            regular = False
            w["regular"] = (x,)
            break

    inverse = regular and idem_commute
    if (n == 0 or _unique_inverse_holds(s)) != inverse:
        raise ClassificationMismatch("inverse: unique-inverse search disagrees with regular+commuting idempotents")
    if not inverse:
        w["inverse"] = w.get("idempotents_commute") or w["regular"]

    # Clifford: every x satisfies x^m = x for some m >= 2
    clifford = True
    for x in elems:
        p = _powers(s, x, n + 1)
        if x not in p[2:]:
            clifford = False
            w["clifford"] = (x,)
            break
    # cross-check: x lies in the maximal subgroup of some idempotent
    groups = [set(maximal_subgroup(s, e)) for e in es]
    in_group = all(any(x in g for g in groups) for x in elems)
    if in_group != clifford:
        raise ClassificationMismatch("clifford: power criterion disagrees with maximal subgroup cover")

    # sub-Clifford: x^(k+1) = x^(l+1) implies x^k = x^l for 1 <= k < l <= 2n
    sub_clifford = True
    top = 2 * n
    if n:
        ks = np.arange(1, top + 1)
        upper = ks[:, None] < ks[None, :]
    for x in elems:
        p = np.array(_powers(s, x, top + 1))
        shifted = p[2:top + 2]             # x^(k+1) for k = 1..top
        base = p[1:top + 1]                # x^k
        viol = upper & (shifted[:, None] == shifted[None, :]) & (base[:, None] != base[None, :])
        hit = np.argwhere(viol)
        if len(hit):
            sub_clifford = False
            k, l = (int(v) + 1 for v in hit[0])
            w["sub_clifford"] = (x, k, l)
            break

    boolean = True
    for x in elems:
        if t[t[x][x]][x] != x:
            boolean = False
            w["boolean"] = (x,)
            break

    linear = True
    for x, y in cartesian(elems, repeat=2):
        if t[x][y] not in (x, y):
            linear = False
            w["linear"] = (x, y)
            break

    semilattice = commutative and len(es) == n
    if not semilattice:
        if not commutative:
            w["semilattice"] = w["commutative"]
        else:
            w["semilattice"] = (next(x for x in elems if t[x][x] != x),)

    return PropertyReport(
        commutative=commutative,
        idempotents_commute=idem_commute,
        regular=regular,
        inverse=inverse,
        clifford=clifford,
        sub_clifford=sub_clifford,
        boolean=boolean,
        linear=linear,
        semilattice=semilattice,
        idempotent_set=es,
        witness=w,
    )


# -- .cay text format -------------------------------------------------------

def parse_cay(text: str) -> FiniteSemigroup:
    """Parse the ``.cay`` format: order, optional ``labels:`` line, then the rows."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise SextError("empty .cay input")
    try:
        n = int(lines[0])
    except ValueError:
        raise SextError(f"first line must be the order, got {lines[0]!r}") from None
    rest = lines[1:]
    labels = None
    if rest and rest[0].startswith("labels:"):
        labels = rest[0][len("labels:"):].split()
        rest = rest[1:]
    if len(rest) != n:
        raise SextError(f"expected {n} table rows, got {len(rest)}")
    try:
        table = [[int(v) for v in row.split()] for row in rest]
    except ValueError as exc:
        raise SextError(f"bad table entry: {exc}") from None
    return FiniteSemigroup(table, labels)


def format_cay(s: FiniteSemigroup, with_labels: bool = True) -> str:
    out = [str(s.order)]
    if with_labels:
        out.append(("labels: " + " ".join(s.labels)).rstrip())
    out.extend(" ".join(str(v) for v in row) for row in s.table)
    return "\n".join(out) + "\n"
