import itertools

import pytest
from hypothesis import given, settings, strategies as st

from sext.catalog import curated_catalog, exhaustive_catalog
from sext.expr import parse_expr
from sext.extension import ExtensionClass, build_extension
from sext.iso import (
    THEOREM_FAMILIES,
    element_signatures,
    family_instances,
    family_matches,
    find_isomorphism,
    is_homomorphism,
    is_isomorphic_to_family,
)
from sext.semigroup import FiniteSemigroup

POOL = [e.semigroup for e in exhaustive_catalog(3)] + [e.semigroup for e in curated_catalog(5)]


def relabel(s: FiniteSemigroup, perm) -> FiniteSemigroup:
    inv = [0] * len(perm)
    for i, p in enumerate(perm):
        inv[p] = i
    n = s.order
    table = [[perm[s.table[inv[i]][inv[j]]] for j in range(n)] for i in range(n)]
    return FiniteSemigroup(table, [s.labels[inv[i]] for i in range(n)])


def test_lambda_c3_witness():
    lam = build_extension(parse_expr("C3"), ExtensionClass.LAMBDA).semigroup
    w = find_isomorphism(lam, parse_expr("L1+C3"))
    assert w is not None and w.verified
    assert is_homomorphism(lam, parse_expr("L1+C3"), w.mapping)


def test_c4_is_not_klein():
    assert find_isomorphism(parse_expr("C4"), parse_expr("C2xC2")) is None


def test_lambda_l2_c2_witness():
    lam = build_extension(parse_expr("L2xC2"), ExtensionClass.LAMBDA).semigroup
    target = parse_expr("(L1+(L2xL2)+L1)xC2")
    assert lam.order == 12
    assert find_isomorphism(lam, target) is not None


def test_different_orders():
    assert find_isomorphism(parse_expr("C2"), parse_expr("C3")) is None


def test_anti_isomorphism_flag():
    left = parse_expr("Z2")
    right = left.transpose()
    assert find_isomorphism(left, right) is None
    assert find_isomorphism(left, right, anti=True) is not None


@pytest.mark.parametrize("s", POOL, ids=lambda s: f"n{s.order}")
def test_self_isomorphism(s):
    w = find_isomorphism(s, s)
    assert w is not None and is_homomorphism(s, s, w.mapping)


def test_symmetry_over_pool():
    for x, y in itertools.combinations(POOL, 2):
        if x.order != y.order:
            continue
        assert (find_isomorphism(x, y) is None) == (find_isomorphism(y, x) is None)


def test_signatures_are_an_optimisation_only():
    by_order = {}
    for s in POOL:
        by_order.setdefault(s.order, []).append(s)
    for group in by_order.values():
        for x, y in itertools.product(group, repeat=2):
            fast = find_isomorphism(x, y)
            slow = find_isomorphism(x, y, use_signatures=False)
            assert (fast is None) == (slow is None)
            if slow is not None:
                assert is_homomorphism(x, y, slow.mapping)


@settings(max_examples=150, deadline=None)
@given(st.sampled_from([s for s in POOL if s.order >= 2]), st.data())
def test_relabelled_copies_are_found(s, data):
    perm = data.draw(st.permutations(list(range(s.order))))
    t = relabel(s, perm)
    w = find_isomorphism(s, t)
    assert w is not None and is_homomorphism(s, t, w.mapping)
    assert find_isomorphism(s, t, use_signatures=False) is not None
    assert sorted(element_signatures(s)) == sorted(element_signatures(t))


def test_family_lookup():
    assert is_isomorphic_to_family(parse_expr("C2"), ["C2"]) == "C2"
    assert is_isomorphic_to_family(parse_expr("L3"), ["Ln"]) == "L3"
    order3 = family_instances(THEOREM_FAMILIES["t1l"], 3)
    assert set(order3) == {"C3", "L1+C2", "L3", "C2+L1"}
    assert is_isomorphic_to_family(parse_expr("V"), THEOREM_FAMILIES["t1l"]) is None


def test_c2_matches_both_names_in_the_filter_family():
    assert family_matches(parse_expr("C2"), THEOREM_FAMILIES["t1f"]) == ["C2", "L0+C2"]
