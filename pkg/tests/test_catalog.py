import itertools
import json
from pathlib import Path

import pytest

from oracles import count_semigroups_up_to_iso
from sext.catalog import (
    CURATED,
    associative_tables,
    catalog_from_selector,
    curated_catalog,
    exhaustive_catalog,
)
from sext.errors import SextError
from sext.expr import parse_expr
from sext.iso import find_isomorphism
from sext.semigroup import check_associative, classify

GOLDEN = json.loads((Path(__file__).parent / "golden" / "catalog_counts.json").read_text())


def test_exhaustive_counts_match_frozen_values():
    cat = exhaustive_catalog(3)
    by_order = {}
    for e in cat:
        by_order[e.semigroup.order] = by_order.get(e.semigroup.order, 0) + 1
    assert {str(k): v for k, v in by_order.items()} == GOLDEN["orders"]
    assert len(cat) == GOLDEN["total_up_to_3"]
    assert "relabelling" in GOLDEN["source"]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_exhaustive_counts_match_orbit_oracle(n):
    assert sum(1 for e in exhaustive_catalog(n) if e.semigroup.order == n) == count_semigroups_up_to_iso(n)


def test_associative_table_counts():
    for n, want in GOLDEN["associative_tables"].items():
        assert sum(1 for _ in associative_tables(int(n))) == want


def test_exhaustive_entries_pairwise_non_isomorphic():
    entries = [e.semigroup for e in exhaustive_catalog(3)]
    for x, y in itertools.combinations(entries, 2):
        assert find_isomorphism(x, y) is None
    for s in entries:
        assert check_associative(s.table)[0]


def test_order_two_representatives():
    names = {a for e in exhaustive_catalog(2) for a in e.aliases}
    assert {"L1", "N2", "L2", "Z2", "C2"} <= names
    # the right-zero band is the remaining order-2 class
    two = [e for e in exhaustive_catalog(2) if e.semigroup.order == 2]
    assert len(two) == 5
    rz = parse_expr("Z2").transpose()
    assert sum(find_isomorphism(e.semigroup, rz) is not None for e in two) == 1


def test_exhaustive_rejects_large_orders():
    with pytest.raises(SextError):
        exhaustive_catalog(4)
    with pytest.raises(SextError):
        exhaustive_catalog(0)


def test_curated_catalog():
    cat = curated_catalog(4)
    assert cat.provenance == "curated"
    assert all(e.semigroup.order <= 4 for e in cat)
    for name in ("C4", "C2xC2", "L2xC2", "L4", "C2+L2", "L2+C2", "V", "N3"):
        assert name in cat.names()
    full = curated_catalog(8)
    assert "D6" in full.names() and "E3" in full.names()
    for e in full:
        assert check_associative(e.semigroup.table)[0]


def test_selectors():
    assert catalog_from_selector("exhaustive:2").selector == "exhaustive:2"
    assert len(catalog_from_selector("curated")) == len(curated_catalog(4))
    for bad in ("exhaustive:x", "everything", "exhaustive:9"):
        with pytest.raises(SextError):
            catalog_from_selector(bad)


def test_curated_names_parse():
    for name in CURATED:
        parse_expr(name)


# -- expression grammar ------------------------------------------------------------------

def test_expression_forms_agree():
    assert parse_expr("C(3)").table == parse_expr("C3").table
    assert parse_expr("L(2)xC(2)").table == parse_expr("L2 × C2").table == parse_expr("L2*C2").table


def test_product_binds_tighter_than_union():
    a = parse_expr("L1+C2xC2")
    b = parse_expr("L1+(C2xC2)")
    assert a.table == b.table
    assert parse_expr("(L1+C2)xC2").order == 6


def test_named_constructors():
    assert parse_expr("D6").order == 6 and not classify(parse_expr("D6")).commutative
    assert parse_expr("E3").order == 8 and classify(parse_expr("E3")).boolean
    assert parse_expr("V").labels == ("x", "y", "xy")
    assert classify(parse_expr("Z2")).idempotents_commute is False
    assert parse_expr("N3").table == ((0, 0, 0),) * 3


@pytest.mark.parametrize("bad", ["", "C", "C(", "C2+", "Q2", "C2)", "(C2", "C(x)", "D3"])
def test_expression_errors(bad):
    with pytest.raises(SextError):
        parse_expr(bad)
