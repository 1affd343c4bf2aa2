"""Upfamilies on a finite ground set ``{0, ..., n-1}``.

A subset is an ``int`` bitmask (bit ``i`` set iff element ``i`` is present).
An upfamily is stored canonically by its minimal members: an antichain of
non-empty masks sorted by (popcount, value). Membership of a set ``A`` means
some minimal member is contained in ``A``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Callable, Iterable, NamedTuple, Optional, Sequence

from sext import config
from sext.errors import CapExceededError, SextError
from sext.semigroup import FiniteSemigroup

CLASSES = ("upfamily", "linked", "maximal-linked", "filter", "ultrafilter")


# -- subset masks -------------------------------------------------------------

def popcount(m: int) -> int:
    return bin(m).count("1")


def mask_key(m: int) -> tuple[int, int]:
    return popcount(m), m


def to_mask(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << e
    return m


def elements_of(m: int) -> tuple[int, ...]:
    out = []
    i = 0
    while m:
        if m & 1:
            out.append(i)
        m >>= 1
        i += 1
    return tuple(out)


def minimal_masks(masks: Iterable[int]) -> tuple[int, ...]:
    """Minimal elements under inclusion, in canonical order."""
    kept: list[int] = []
    for m in sorted(set(masks), key=mask_key):
        if not any(k & m == k for k in kept):
            kept.append(m)
    return tuple(kept)


def _check_ground(n: int) -> None:
    if n < 0:
        raise SextError("ground size must be non-negative")
    if n > config.cap("ground"):
        raise CapExceededError(f"ground size {n} exceeds cap {config.cap('ground')}")


@lru_cache(maxsize=None)
def _upsets(n: int) -> tuple[int, ...]:
    """``_upsets(n)[A]`` is the bitmask over all subsets of the supersets of ``A``."""
    full = (1 << n) - 1
    out = []
    for a in range(1 << n):
        rest = full & ~a
        bits = 0
        sub = rest
        while True:
            bits |= 1 << (a | sub)
            if sub == 0:
                break
            sub = (sub - 1) & rest
        out.append(bits)
    return tuple(out)


# -- the upfamily type ----------------------------------------------------------

@dataclass(frozen=True)
class Upfamily:
    """Canonical upfamily. Build it with :func:`generate` or :func:`parse_literal`;
    the constructor itself trusts that ``minimal_sets`` is already canonical."""

    n: int
    minimal_sets: tuple[int, ...]

    @cached_property
    def members(self) -> int:
        """Bitmask over the ``2**n`` subsets: bit ``A`` is set iff ``A`` is a member."""
        ups = _upsets(self.n)
        bits = 0
        for m in self.minimal_sets:
            bits |= ups[m]
        return bits

    def __contains__(self, a: int) -> bool:
        return bool(self.members >> a & 1)

    def member_sets(self) -> list[int]:
        return [a for a in range(1 << self.n) if self.members >> a & 1]

    def sort_key(self) -> tuple:
        return tuple(mask_key(m) for m in self.minimal_sets)

    def __lt__(self, other: "Upfamily") -> bool:
        return (self.n, self.sort_key()) < (other.n, other.sort_key())

    def issubfamily(self, other: "Upfamily") -> bool:
        """Every member of ``self`` is a member of ``other``."""
        return self.members & ~other.members == 0

    def literal(self, labels: Optional[Sequence[str]] = None) -> str:
        def name(i):
            return str(i) if labels is None else labels[i]
        return "{" + ",".join("{" + ",".join(name(i) for i in elements_of(m)) + "}"
                              for m in self.minimal_sets) + "}"

    def __str__(self):
        return self.literal()


def generate(n: int, generators: Iterable[int]) -> Upfamily:
    """The upfamily of all supersets of the given generator masks."""
    _check_ground(n)
    gens = list(generators)
    if not gens:
        raise SextError("an upfamily needs at least one generator")
    full = (1 << n) - 1
    for g in gens:
        if g == 0:
            raise SextError("generators must be non-empty sets")
        if g & ~full:
            raise SextError(f"generator {elements_of(g)} is not a subset of a {n}-element set")
    return Upfamily(n, minimal_masks(gens))


def principal(n: int, x: int) -> Upfamily:
    """The ultrafilter of all sets containing ``x``."""
    return generate(n, [1 << x])


def from_members(n: int, members: int) -> Upfamily:
    """Canonical upfamily from a member bitmask (which must be up-closed)."""
    mins = []
    for a in range(1, 1 << n):
        if members >> a & 1:
            if not any(members >> (a & ~(1 << i)) & 1 for i in elements_of(a)):
                mins.append(a)
    if not mins:
        raise SextError("no non-empty members")
    return Upfamily(n, tuple(sorted(mins, key=mask_key)))


def member(u: Upfamily, a: int, n: Optional[int] = None) -> bool:
    if n is not None and n != u.n:
        raise SextError(f"ground-size mismatch: {n} != {u.n}")
    if a < 0 or a >> u.n:
        raise SextError(f"set {a:b} is not over a {u.n}-element ground set")
    return any(m & a == m for m in u.minimal_sets)


_SET_RE = re.compile(r"\{([^{}]*)\}")


def parse_literal(text: str, n: int) -> Upfamily:
    """Parse ``{{0,1},{0,2}}``; non-canonical input is canonicalized."""
    s = text.strip()
    if not (s.startswith("{") and s.endswith("}")):
        raise SextError(f"bad upfamily literal {text!r}")
    inner = s[1:-1]
    if _SET_RE.sub("", inner).replace(",", "").strip():
        raise SextError(f"bad upfamily literal {text!r}")
    gens = []
    for body in _SET_RE.findall(inner):
        items = [tok.strip() for tok in body.split(",") if tok.strip()]
        try:
            idx = [int(tok) for tok in items]
        except ValueError:
            raise SextError(f"bad element in upfamily literal {text!r}") from None
        if any(not 0 <= i < n for i in idx):
            raise SextError(f"element out of range in {text!r}")
        gens.append(to_mask(idx))
    return generate(n, gens)


# -- classification -------------------------------------------------------------

class UpfamilyKind(NamedTuple):
    is_linked: bool
    is_maximal_linked: bool
    is_filter: bool
    is_ultrafilter: bool


def is_linked(u: Upfamily) -> bool:
    ms = u.minimal_sets
    return all(a & b for i, a in enumerate(ms) for b in ms[i:])


def is_maximal_linked(u: Upfamily) -> bool:
    """Linked, and every set meeting all members is itself a member."""
    if not is_linked(u):
        return False
    for a in range(1, 1 << u.n):
        if all(a & m for m in u.minimal_sets) and a not in u:
            return False
    return True


def kind(u: Upfamily) -> UpfamilyKind:
    filt = len(u.minimal_sets) == 1
    return UpfamilyKind(
        is_linked=is_linked(u),
        is_maximal_linked=is_maximal_linked(u),
        is_filter=filt,
        is_ultrafilter=filt and popcount(u.minimal_sets[0]) == 1,
    )


def in_class(u: Upfamily, cls: str) -> bool:
    k = kind(u)
    return {
        "upfamily": True,
        "linked": k.is_linked,
        "maximal-linked": k.is_maximal_linked,
        "filter": k.is_filter,
        "ultrafilter": k.is_ultrafilter,
    }[cls]


# -- the extension product ------------------------------------------------------

@lru_cache(maxsize=64)
def left_translations(s: FiniteSemigroup) -> tuple[tuple[int, ...], ...]:
    """``left_translations(s)[x][A]`` is the mask of ``x*A``."""
    n = s.order
    out = []
    for x in range(n):
        row = s.table[x]
        img = [0] * (1 << n)
        for a in range(1, 1 << n):
            low = a & -a
            img[a] = img[a ^ low] | (1 << row[low.bit_length() - 1])
        out.append(tuple(img))
    return tuple(out)


def _check_pair(s: FiniteSemigroup, a: Upfamily, b: Upfamily) -> None:
    if a.n != s.order or b.n != s.order:
        raise SextError(f"upfamilies over {a.n} and {b.n} points, semigroup has {s.order}")


def product(s: FiniteSemigroup, a: Upfamily, b: Upfamily) -> Upfamily:
    """The extension product: generated by the unions of ``x*B_x`` over ``x`` in a
    member ``A`` of ``a``, with every ``B_x`` a member of ``b``.

    Only minimal members need to be tried: any other choice yields a superset
    of some union built from minimal ones. Partial unions that contain another
    partial union are dropped for the same reason.
    """
    _check_pair(s, a, b)
    lt = left_translations(s)
    full = (1 << s.order) - 1
    bmins = b.minimal_sets
    found: set[int] = set()
    for aset in a.minimal_sets:
        partial: tuple[int, ...] = (0,)
        for x in elements_of(aset):
            row = lt[x]
            images = {row[m] for m in bmins}
            partial = minimal_masks(p | t for p in partial for t in images)
            if partial == (full,):
                break
        found.update(partial)
    return Upfamily(s.order, minimal_masks(found))


def product_by_definition(s: FiniteSemigroup, a: Upfamily, b: Upfamily) -> Upfamily:
    """Reference product straight from the definition, over *all* members and
    all choice functions. Exponential; meant as a test oracle for tiny ground sets."""
    _check_pair(s, a, b)
    lt = left_translations(s)
    bsets = b.member_sets()
    unions: set[int] = set()
    for aset in a.member_sets():
        partial = {0}
        for x in elements_of(aset):
            partial = {p | lt[x][m] for p in partial for m in bsets}
        unions |= partial
    return generate(s.order, unions)


@lru_cache(maxsize=64)
def _left_preimages(s: FiniteSemigroup) -> tuple[tuple[int, ...], ...]:
    """``_left_preimages(s)[x][C]`` is the mask of ``{y : x*y in C}``."""
    n = s.order
    out = []
    for x in range(n):
        row = s.table[x]
        out.append(tuple(to_mask(y for y in range(n) if c >> row[y] & 1) for c in range(1 << n)))
    return tuple(out)


def product_by_preimage(s: FiniteSemigroup, a: Upfamily, b: Upfamily) -> Upfamily:
    """Second independent route: ``C`` is a member of ``a*b`` iff the set of
    ``x`` whose left preimage ``{y : x*y in C}`` belongs to ``b`` is a member of ``a``."""
    _check_pair(s, a, b)
    pre = _left_preimages(s)
    n = s.order
    amem, bmem = a.members, b.members
    bits = 0
    for c in range(1, 1 << n):
        good = 0
        for x in range(n):
            if bmem >> pre[x][c] & 1:
                good |= 1 << x
        if amem >> good & 1:
            bits |= 1 << c
    return from_members(n, bits)


# -- induced maps and invariance ----------------------------------------------------

def induced_map(f: Sequence[int], u: Upfamily, target_size: int) -> Upfamily:
    """Push ``u`` forward along ``f``: all ``A`` with ``f^-1(A)`` in ``u``.

    ``f^-1(A)`` contains a minimal member ``M`` exactly when ``f(M)`` is inside
    ``A``, so the images of the minimal members generate the result.
    """
    if len(f) != u.n:
        raise SextError(f"map has {len(f)} entries, upfamily is over {u.n} points")
    if any(not 0 <= y < target_size for y in f):
        raise SextError("map leaves the target set")
    return generate(target_size, [to_mask(f[i] for i in elements_of(m)) for m in u.minimal_sets])


def induced_map_by_definition(f: Sequence[int], u: Upfamily, target_size: int) -> Upfamily:
    """Scan every subset of the target against the definition."""
    bits = 0
    for a in range(1 << target_size):
        pre = to_mask(i for i in range(u.n) if a >> f[i] & 1)
        if pre in u:
            bits |= 1 << a
    return from_members(target_size, bits)


def translate(s: FiniteSemigroup, x: int, u: Upfamily) -> Upfamily:
    """``x*u``: the product of the principal ultrafilter at ``x`` with ``u``."""
    lt = left_translations(s)[x]
    return Upfamily(u.n, minimal_masks(lt[m] for m in u.minimal_sets))


def is_left_invariant(g: FiniteSemigroup, u: Upfamily) -> bool:
    return all(translate(g, x, u) == u for x in range(g.order))


# -- enumeration ---------------------------------------------------------------------

_ENUM_CAP = {
    "upfamily": "enum_upfamily",
    "linked": "enum_linked",
    "maximal-linked": "enum_maximal_linked",
    "filter": "enum_filter",
    "ultrafilter": "enum_ultrafilter",
}


def enumerate_class(n: int, cls: str, *, limit: Optional[int] = None) -> list[Upfamily]:
    """Every upfamily of class ``cls`` over an ``n``-element set, canonically sorted.

    ``limit`` overrides the configured size cap for this call.
    """
    if cls not in CLASSES:
        raise SextError(f"unknown class {cls!r}; expected one of {', '.join(CLASSES)}")
    top = config.cap(_ENUM_CAP[cls]) if limit is None else limit
    if n > top:
        raise CapExceededError(f"enumerating {cls} on {n} points exceeds cap {top}")
    _check_ground(n)
    if n == 0:
        return []
    if cls == "ultrafilter":
        out = [principal(n, i) for i in range(n)]
    elif cls == "filter":
        out = [Upfamily(n, (a,)) for a in range(1, 1 << n)]
    elif cls == "maximal-linked":
        out = _maximal_linked(n)
    else:
        out = _antichains(n, linked=(cls == "linked"))
    return sorted(out, key=Upfamily.sort_key)


def _antichains(n: int, linked: bool) -> list[Upfamily]:
    cands = sorted(range(1, 1 << n), key=mask_key)
    k = len(cands)
    conflict = []
    for i, a in enumerate(cands):
        bits = 0
        for j, b in enumerate(cands):
            if a & b == a or a & b == b or (linked and not a & b):
                bits |= 1 << j
        conflict.append(bits)
    out: list[Upfamily] = []

    def walk(start: int, chosen: tuple[int, ...], blocked: int) -> None:
        for i in range(start, k):
            if blocked >> i & 1:
                continue
            nxt = chosen + (cands[i],)
            out.append(Upfamily(n, nxt))
            walk(i + 1, nxt, blocked | conflict[i])

    walk(0, (), 0)
    return out


def _maximal_linked(n: int) -> list[Upfamily]:
    """Pick exactly one set from each complementary pair, propagating up-closure.

    An upfamily holding exactly one of ``A`` and its complement for every ``A``
    is automatically linked (two disjoint members would force a member and its
    complement), and conversely every maximal linked system has that shape.
    """
    full = (1 << n) - 1
    ups = _upsets(n)
    downs = [0] * (1 << n)
    for a in range(1 << n):
        # subsets of a are the complements of the supersets of full^a
        bits = ups[full ^ a]
        d = 0
        while bits:
            low = bits & -bits
            d |= 1 << (full ^ (low.bit_length() - 1))
            bits ^= low
        downs[a] = d
    pairs = sorted({min(a, full ^ a, key=mask_key) for a in range(1, full)}, key=mask_key)
    out: list[Upfamily] = []

    def walk(idx: int, inside: int, outside: int) -> None:
        while idx < len(pairs) and (inside | outside) >> pairs[idx] & 1:
            idx += 1
        if idx == len(pairs):
            out.append(from_members(n, inside))
            return
        a = pairs[idx]
        for pick in (a, full ^ a):
            ins = inside | ups[pick]
            outs = outside | downs[full ^ pick]
            if not ins & outs:
                walk(idx + 1, ins, outs)

    walk(0, ups[full], downs[0])
    return out


def enumerate_by_predicate(n: int, pred: Callable[[Upfamily], bool]) -> list[Upfamily]:
    """Brute-force filter over all upfamilies; an oracle for the fast enumerators."""
    return [u for u in _antichains(n, linked=False) if pred(u)]
