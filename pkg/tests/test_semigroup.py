import itertools

import pytest
from hypothesis import given, settings, strategies as st

from oracles import table_associative
from sext.catalog import exhaustive_catalog, curated_catalog
from sext.errors import NotAssociativeError, SextError
from sext.expr import parse_expr
from sext.semigroup import (
    FiniteSemigroup,
    check_associative,
    classify,
    direct_product,
    disjoint_ordered_union,
    format_cay,
    idempotent_chain,
    idempotents,
    is_ideal,
    is_regular_element,
    make_cyclic,
    make_linear_semilattice,
    make_null,
    maximal_subgroup,
    parse_cay,
    reduced_product,
)


def all_catalog_semigroups():
    seen = [e.semigroup for e in exhaustive_catalog(3)]
    seen += [e.semigroup for e in curated_catalog(6)]
    return seen


CATALOG = all_catalog_semigroups()


# -- constructors --------------------------------------------------------------

def test_cyclic_tables():
    assert make_cyclic(1).table == ((0,),)
    assert make_cyclic(2).table == ((0, 1), (1, 0))
    c4 = make_cyclic(4)
    assert c4.mul(1, 1) == 2 and c4.mul(2, 2) == 0
    assert c4.power(1, 4) == 0


def test_cyclic_rejects_zero():
    with pytest.raises(SextError):
        make_cyclic(0)


def test_linear_semilattice():
    assert make_linear_semilattice(0).order == 0
    assert make_linear_semilattice(2).table == ((0, 0), (0, 1))
    r = classify(make_linear_semilattice(3))
    assert r.linear and r.semilattice and r.boolean


def test_ordered_union_l1_c2_has_absorbing_zero():
    x = disjoint_ordered_union(make_linear_semilattice(1), make_cyclic(2))
    assert x.order == 3
    assert all(x.mul(0, j) == 0 == x.mul(j, 0) for j in range(3))
    assert x.mul(2, 2) == 1


def test_ordered_union_c2_l1_is_monoid():
    x = disjoint_ordered_union(make_cyclic(2), make_linear_semilattice(1))
    one = 2
    assert all(x.mul(one, j) == j == x.mul(j, one) for j in range(3))


@pytest.mark.parametrize("a,b,c", list(itertools.product(["C2", "C3", "L1", "L2"], repeat=3)))
def test_ordered_union_is_associative_as_an_operation(a, b, c):
    x, y, z = parse_expr(a), parse_expr(b), parse_expr(c)
    left = disjoint_ordered_union(disjoint_ordered_union(x, y), z)
    right = disjoint_ordered_union(x, disjoint_ordered_union(y, z))
    assert left.table == right.table


def test_direct_products():
    k = direct_product(make_cyclic(2), make_cyclic(2))
    assert k.order == 4 and all(k.mul(i, i) == 0 for i in range(4))
    l2c2 = direct_product(make_linear_semilattice(2), make_cyclic(2))
    assert idempotents(l2c2) == (l2c2.index("(0,e)"), l2c2.index("(1,e)"))
    for name in ("C3", "L2", "V"):
        x = parse_expr(name)
        assert direct_product(make_linear_semilattice(1), x).table == x.table


def test_reduced_product_examples():
    l2, c2 = make_linear_semilattice(2), make_cyclic(2)
    r = reduced_product(l2, [0], c2)
    assert r.order == 3
    # elements: 0, (1,e), (1,a)
    assert r.mul(1, 2) == 2 and r.mul(2, 2) == 1 and r.mul(2, 0) == 0
    x = make_cyclic(3)
    assert reduced_product(x, [0, 1, 2], make_cyclic(2)).table == x.table


def test_reduced_product_rejects_non_ideal():
    with pytest.raises(SextError):
        reduced_product(make_linear_semilattice(2), [1], make_cyclic(2))
    with pytest.raises(SextError):
        reduced_product(make_linear_semilattice(2), [], make_cyclic(2))


# -- associativity -------------------------------------------------------------

def test_check_associative_examples():
    assert check_associative(make_cyclic(3).table) == (True, None)
    assert check_associative([[0, 1], [0, 0]])[0] is False
    ok, w = check_associative([[1, 0], [0, 0]])
    assert not ok and w == (0, 0, 1)


def test_construction_rejects_non_associative_with_triple():
    with pytest.raises(NotAssociativeError) as info:
        FiniteSemigroup([[1, 0], [0, 0]])
    assert info.value.triple == (0, 0, 1)


def test_malformed_tables():
    with pytest.raises(SextError):
        FiniteSemigroup([[0, 1]])
    with pytest.raises(SextError):
        FiniteSemigroup([[0, 2], [0, 0]])


def first_violation(table):
    n = len(table)
    for i, j, k in itertools.product(range(n), repeat=3):
        if table[table[i][j]][k] != table[i][table[j][k]]:
            return (i, j, k)
    return None


def test_check_associative_matches_oracle_on_all_order_2_tables():
    for flat in itertools.product(range(2), repeat=4):
        t = [list(flat[:2]), list(flat[2:])]
        ok, w = check_associative(t)
        assert ok == table_associative(t)
        assert w == first_violation(t)


@settings(max_examples=300, deadline=None)
@given(st.integers(3, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(0, n - 1), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_check_associative_matches_oracle_random(table):
    ok, w = check_associative(table)
    assert ok == table_associative(table)
    assert w == first_violation(table)


# -- element-level predicates ----------------------------------------------------

def test_regular_elements():
    for s in CATALOG:
        for e in idempotents(s):
            assert is_regular_element(e, s)
    n2 = make_null(2)
    assert not is_regular_element(1, n2)
    with pytest.raises(SextError):
        is_regular_element(5, n2)


def test_idempotents_and_chain():
    assert idempotents(make_cyclic(4)) == (0,)
    assert idempotent_chain(make_linear_semilattice(3)) == (0, 1, 2)
    assert idempotent_chain(parse_expr("V")) is None
    x = parse_expr("L2+C2")
    assert [x.labels[i] for i in idempotent_chain(x)] == ["0", "1", "e"]


def test_maximal_subgroups():
    assert maximal_subgroup(make_cyclic(4), 0) == (0, 1, 2, 3)
    l2c2 = parse_expr("L2xC2")
    h = maximal_subgroup(l2c2, l2c2.index("(0,e)"))
    assert [l2c2.labels[i] for i in h] == ["(0,e)", "(0,a)"]
    assert maximal_subgroup(make_linear_semilattice(3), 1) == (1,)
    with pytest.raises(SextError):
        maximal_subgroup(make_cyclic(2), 1)


def test_ideals():
    assert is_ideal(make_linear_semilattice(3), [0])
    x = parse_expr("L1+C2")
    assert is_ideal(x, [0])
    assert not is_ideal(x, [1, 2])
    assert not is_ideal(make_cyclic(2), [0])
    with pytest.raises(SextError):
        is_ideal(x, [])


# -- classification --------------------------------------------------------------

def test_classify_examples():
    r = classify(make_cyclic(2))
    assert r.commutative and r.inverse and r.clifford and r.regular and not r.linear
    v = parse_expr("V")
    r = classify(v)
    assert r.semilattice and not r.linear
    assert r.witness["linear"] == (v.index("x"), v.index("y"))


def test_classify_empty_semigroup():
    r = classify(make_linear_semilattice(0))
    assert all(r.flags().values())


def test_classify_null_semigroup_witnesses():
    r = classify(make_null(2))
    assert not r.regular and r.witness["regular"] == (1,)
    assert not r.clifford and not r.sub_clifford


@pytest.mark.parametrize("s", CATALOG, ids=lambda s: f"n{s.order}")
def test_classification_invariants(s):
    r = classify(s)
    assert r.inverse == (r.regular and r.idempotents_commute)
    assert r.clifford == r.sub_clifford
    if r.semilattice:
        assert r.commutative and r.boolean
    if r.linear and r.commutative:
        assert r.semilattice
    if r.boolean:
        assert r.clifford
    assert r.idempotent_set == idempotents(s)
    for flag, value in r.flags().items():
        if not value and s.order:
            assert flag in r.witness


def unique_inverse_oracle(s):
    t = s.table
    n = s.order
    return all(sum(1 for y in range(n) if t[t[x][y]][x] == x and t[t[y][x]][y] == y) == 1 for x in range(n))


def clifford_by_subgroups(s):
    cover = set()
    for e in idempotents(s):
        cover.update(maximal_subgroup(s, e))
    return cover == set(range(s.order))


@pytest.mark.parametrize("s", CATALOG, ids=lambda s: f"n{s.order}")
def test_inverse_and_clifford_cross_checks(s):
    r = classify(s)
    assert r.inverse == unique_inverse_oracle(s)
    assert r.clifford == clifford_by_subgroups(s)


# -- .cay format -------------------------------------------------------------------

def test_cay_roundtrip():
    for s in CATALOG:
        back = parse_cay(format_cay(s))
        assert back.table == s.table and back.labels == s.labels


def test_cay_rejects_non_associative_with_witness():
    with pytest.raises(NotAssociativeError, match=r"\(0\*0\)\*1"):
        parse_cay("2\n1 0\n0 0\n")


def test_cay_comments_and_errors():
    s = parse_cay("# C2\n2\nlabels: e a\n0 1\n1 0\n")
    assert s.labels == ("e", "a")
    for bad in ("", "x\n", "2\n0 1\n", "2\n0 z\n1 0\n"):
        with pytest.raises(SextError):
            parse_cay(bad)
