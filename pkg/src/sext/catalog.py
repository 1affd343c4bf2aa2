"""Catalogs of small semigroups: exhaustive up to isomorphism, or curated by name."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as cartesian

from sext.errors import SextError
from sext.expr import parse_expr
from sext.iso import element_signatures, find_isomorphism
from sext.semigroup import FiniteSemigroup

EXHAUSTIVE_MAX = 3

# named families up to order 5, then the documented counterexamples
CURATED = (
    "L0", "L1",
    "C2", "L2", "N2", "Z2",
    "C3", "L3", "L1+C2", "C2+L1", "V", "N3",
    "C4", "C2xC2", "L2xC2", "L4", "C2+L2", "L2+C2",
    "L1+C3", "C3+L1", "C2+C2", "L1+C2+L1", "L1+V", "V+L1", "N4", "Z2xC2",
    "C5", "C2+L3", "L3+C2", "L1+(C2xC2)",
    "D6", "E3",
)


@dataclass
class CatalogEntry:
    name: str
    semigroup: FiniteSemigroup
    aliases: tuple[str, ...] = ()


@dataclass
class Catalog:
    entries: list[CatalogEntry]
    provenance: str
    selector: str = ""

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def names(self) -> list[str]:
        return [e.name for e in self.entries]


def _associative(table: list[list[int]], n: int) -> bool:
    r = range(n)
    return all(table[table[i][j]][k] == table[i][table[j][k]] for i in r for j in r for k in r)


def associative_tables(n: int):
    """All associative ``n x n`` tables in lexicographic order of the flattened table."""
    for flat in cartesian(range(n), repeat=n * n):
        table = [list(flat[i * n:(i + 1) * n]) for i in range(n)]
        if _associative(table, n):
            yield table


def _invariant(s: FiniteSemigroup) -> tuple:
    return tuple(sorted(element_signatures(s)))


def exhaustive_catalog(max_order: int) -> Catalog:
    """One representative per isomorphism class, orders ``1..max_order``.

    The representative is the first table met in lexicographic order.
    """
    if max_order > EXHAUSTIVE_MAX:
        raise SextError(f"exhaustive catalogs stop at order {EXHAUSTIVE_MAX}")
    if max_order < 1:
        raise SextError("max_order must be at least 1")
    known = {}
    for expr in CURATED:
        s = parse_expr(expr)
        if 1 <= s.order <= max_order:
            known.setdefault(s.order, []).append((expr, s))
    entries = []
    for n in range(1, max_order + 1):
        reps: list[FiniteSemigroup] = []
        buckets: dict[tuple, list[FiniteSemigroup]] = {}
        for table in associative_tables(n):
            s = FiniteSemigroup(table, check=False)
            key = _invariant(s)
            bucket = buckets.setdefault(key, [])
            if any(find_isomorphism(s, r) is not None for r in bucket):
                continue
            bucket.append(s)
            reps.append(s)
        for k, s in enumerate(reps):
            aliases = tuple(expr for expr, t in known.get(n, []) if find_isomorphism(s, t) is not None)
            entries.append(CatalogEntry(f"S{n}.{k:02d}", s, aliases))
    return Catalog(entries, f"exhaustive order <= {max_order}, deduplicated up to isomorphism",
                   f"exhaustive:{max_order}")


def curated_catalog(max_order: int = 4) -> Catalog:
    entries = []
    for expr in CURATED:
        s = parse_expr(expr)
        if s.order <= max_order:
            entries.append(CatalogEntry(expr, s))
    return Catalog(entries, "curated", f"curated:{max_order}")


def catalog_from_selector(selector: str) -> Catalog:
    """``exhaustive:K`` or ``curated[:K]`` (curated defaults to order 4)."""
    mode, _, arg = selector.partition(":")
    try:
        k = int(arg) if arg else None
    except ValueError:
        raise SextError(f"bad catalog selector {selector!r}") from None
    if mode == "exhaustive":
        return exhaustive_catalog(EXHAUSTIVE_MAX if k is None else k)
    if mode == "curated":
        return curated_catalog(4 if k is None else k)
    raise SextError(f"bad catalog selector {selector!r}; use exhaustive:K or curated[:K]")
