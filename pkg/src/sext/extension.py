"""Materialize an extension class over a finite semigroup as a Cayley table."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from sext import config
from sext.errors import CapExceededError, ClosureError, SextError
from sext.semigroup import FiniteSemigroup
from sext.upfamily import (
    Upfamily,
    elements_of,
    enumerate_class,
    minimal_masks,
    principal,
    product,
    to_mask,
)


class ExtensionClass(str, enum.Enum):
    BETA = "beta"
    PHI = "phi"
    N2 = "n2"
    LAMBDA = "lambda"
    UPSILON = "upsilon"

    @property
    def upfamily_class(self) -> str:
        return _UPCLASS[self]

    @classmethod
    def parse(cls, text: str) -> "ExtensionClass":
        try:
            return cls(text.lower())
        except ValueError:
            raise SextError(f"unknown extension class {text!r}; "
                            f"expected one of {', '.join(c.value for c in cls)}") from None


_UPCLASS = {
    ExtensionClass.BETA: "ultrafilter",
    ExtensionClass.PHI: "filter",
    ExtensionClass.N2: "linked",
    ExtensionClass.LAMBDA: "maximal-linked",
    ExtensionClass.UPSILON: "upfamily",
}

# element-set inclusions between the classes
CONTAINED_IN = {
    ExtensionClass.BETA: {ExtensionClass.BETA, ExtensionClass.PHI, ExtensionClass.LAMBDA,
                          ExtensionClass.N2, ExtensionClass.UPSILON},
    ExtensionClass.PHI: {ExtensionClass.PHI, ExtensionClass.N2, ExtensionClass.UPSILON},
    ExtensionClass.LAMBDA: {ExtensionClass.LAMBDA, ExtensionClass.N2, ExtensionClass.UPSILON},
    ExtensionClass.N2: {ExtensionClass.N2, ExtensionClass.UPSILON},
    ExtensionClass.UPSILON: {ExtensionClass.UPSILON},
}


@dataclass(frozen=True)
class LabeledExtension:
    semigroup: FiniteSemigroup
    elements: tuple[Upfamily, ...]
    base: FiniteSemigroup
    ext: ExtensionClass
    embed_index: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def index_of(self, u: Upfamily) -> int:
        try:
            return self._positions()[u]
        except KeyError:
            raise SextError(f"{u} is not an element of {self.ext.value}(X)") from None

    def _positions(self) -> dict[Upfamily, int]:
        pos = self.__dict__.get("_pos")
        if pos is None:
            pos = {u: i for i, u in enumerate(self.elements)}
            object.__setattr__(self, "_pos", pos)
        return pos

    def __contains__(self, u: Upfamily) -> bool:
        return u in self._positions()

    def mul(self, i: int, j: int) -> int:
        return self.semigroup.table[i][j]


def build_extension(x: FiniteSemigroup, ext: ExtensionClass | str,
                    *, limit: Optional[int] = None) -> LabeledExtension:
    """Enumerate the class over ``x``, fill the table with the extension product,
    and verify closure and associativity.

    ``limit`` overrides the configured cap on ``|x|`` for this class.
    """
    ext = ExtensionClass.parse(ext) if isinstance(ext, str) else ext
    top = config.cap(ext.value) if limit is None else limit
    if x.order > top:
        raise CapExceededError(f"{ext.value}(X) with |X| = {x.order} exceeds cap {top}")
    return _build(x, ext)


@lru_cache(maxsize=128)
def _build(x: FiniteSemigroup, ext: ExtensionClass) -> LabeledExtension:
    n = x.order
    if ext is ExtensionClass.BETA:
        elems = [principal(n, i) for i in range(n)]
    else:
        elems = enumerate_class(n, ext.upfamily_class, limit=n)
    elems = tuple(sorted(elems, key=Upfamily.sort_key))
    pos = {u: i for i, u in enumerate(elems)}
    table = []
    for a in elems:
        row = []
        for b in elems:
            c = product(x, a, b)
            try:
                row.append(pos[c])
            except KeyError:
                raise ClosureError(f"{a} * {b} = {c} is not in {ext.value}(X)") from None
        table.append(row)
    s = FiniteSemigroup(table, [u.literal() for u in elems], check=True)
    embed = tuple(pos[principal(n, i)] for i in range(n))
    return LabeledExtension(s, elems, x, ext, embed)


def embed(e: LabeledExtension, x: int) -> int:
    """Index of the principal ultrafilter at ``x``."""
    if not 0 <= x < e.base.order:
        raise SextError(f"element {x} out of range")
    return e.embed_index[x]


def regular_in(sub: LabeledExtension, ambient: LabeledExtension, i: int) -> bool:
    """Is ``sub.elements[i]`` regular in the ambient extension (some ``u`` with ``a*u*a = a``)?"""
    if sub.base != ambient.base:
        raise SextError("extensions are over different base semigroups")
    if ambient.ext not in CONTAINED_IN[sub.ext]:
        raise SextError(f"{sub.ext.value}(X) is not contained in {ambient.ext.value}(X)")
    a = sub.elements[i]
    k = ambient.index_of(a)
    t = ambient.semigroup.table
    row = t[k]
    return any(t[row[u]][k] == k for u in range(len(ambient)))


def all_regular_in(sub: LabeledExtension, ambient: LabeledExtension) -> tuple[bool, Optional[int]]:
    """``(True, None)`` or ``(False, i)`` for the first element of ``sub`` not regular in ``ambient``."""
    for i in range(len(sub)):
        if not regular_in(sub, ambient, i):
            return False, i
    return True, None


def restrict_to_subsemigroup(b: Upfamily, z: Sequence[int]) -> Upfamily:
    """Members of ``b`` lying inside ``z``, re-indexed to positions in ``z``."""
    zs = list(z)
    zmask = to_mask(zs)
    pos = {e: k for k, e in enumerate(zs)}
    inside = [m for m in b.minimal_sets if m & zmask == m]
    if not inside:
        raise SextError("no member of the upfamily lies inside the subsemigroup")
    return Upfamily(len(zs), minimal_masks(to_mask(pos[e] for e in elements_of(m)) for m in inside))
