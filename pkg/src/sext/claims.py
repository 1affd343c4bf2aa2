"""Spot checks of explicit upfamily computations on small semigroups.

Each check builds the printed maximal linked systems or filters from element
labels, computes the relevant products directly and compares with the
expected values. A check passes only if every fact in it holds.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

from sext.expr import parse_expr
from sext.extension import ExtensionClass, build_extension
from sext.semigroup import FiniteSemigroup
from sext.upfamily import Upfamily, enumerate_class, generate, is_maximal_linked, product, to_mask


@dataclass
class Fact:
    description: str
    holds: bool
    detail: str = ""

    def to_dict(self) -> dict:
        return {"description": self.description, "holds": self.holds, "detail": self.detail}


@dataclass
class ClaimCheck:
    key: str
    title: str
    semigroup: str
    facts: list[Fact] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.facts) and all(f.holds for f in self.facts)

    def to_dict(self) -> dict:
        return {
            "key": self.key,
            "title": self.title,
            "semigroup": self.semigroup,
            "passed": self.passed,
            "facts": [f.to_dict() for f in self.facts],
        }


class _Ctx:
    """Label-level helpers bound to one semigroup."""

    def __init__(self, s: FiniteSemigroup):
        self.s = s

    def up(self, *sets: Sequence[str]) -> Upfamily:
        return generate(self.s.order, [to_mask(self.s.index(x) for x in group) for group in sets])

    def mask(self, *labels: str) -> int:
        return to_mask(self.s.index(x) for x in labels)

    def mul(self, *fams: Upfamily) -> Upfamily:
        out = fams[0]
        for f in fams[1:]:
            out = product(self.s, out, f)
        return out

    def show(self, u: Upfamily) -> str:
        return u.literal(self.s.labels)

    def idempotent(self, u: Upfamily) -> bool:
        return self.mul(u, u) == u

    def regular_in(self, u: Upfamily, pool: Iterable[Upfamily]) -> Optional[Upfamily]:
        """Some v in pool with u*v*u = u, or None."""
        for v in pool:
            if self.mul(u, v, u) == u:
                return v
        return None


def _eq(c: _Ctx, desc: str, got: Upfamily, want: Upfamily) -> Fact:
    return Fact(desc, got == want, f"got {c.show(got)}, expected {c.show(want)}")


def _neq(c: _Ctx, desc: str, left: Upfamily, right: Upfamily) -> Fact:
    return Fact(desc, left != right, f"{c.show(left)} vs {c.show(right)}")


def _not_regular(c: _Ctx, desc: str, u: Upfamily, pool: Iterable[Upfamily]) -> Fact:
    v = c.regular_in(u, pool)
    return Fact(desc, v is None, "no inverse candidate found" if v is None else f"u*v*u = u for v = {c.show(v)}")


def _is_ml(c: _Ctx, name: str, u: Upfamily) -> Fact:
    return Fact(f"{name} is maximal linked", is_maximal_linked(u), c.show(u))


def _extension_pool(s: FiniteSemigroup, ext: ExtensionClass) -> list[Upfamily]:
    return list(build_extension(s, ext).elements)


# -- the checks ----------------------------------------------------------------------

def check_v_semilattice() -> ClaimCheck:
    s = parse_expr("V")
    c = _Ctx(s)
    res = ClaimCheck("a", "non-linear idempotents give L != L*L = <{xy}> = L*L*L", "V")
    ll = c.up(["x", "y"], ["x", "xy"], ["y", "xy"])
    sq = c.mul(ll, ll)
    res.facts += [
        _is_ml(c, "L", ll),
        _eq(c, "L*L = <{xy}>", sq, c.up(["xy"])),
        _eq(c, "L*L*L = L*L", c.mul(ll, ll, ll), sq),
        _neq(c, "L != L*L", ll, sq),
        _not_regular(c, "L is not regular in upsilon(V)", ll, _extension_pool(s, ExtensionClass.UPSILON)),
    ]
    return res


def check_dihedral() -> ClaimCheck:
    s = parse_expr("D6")
    c = _Ctx(s)
    res = ClaimCheck("b", "two non-commuting idempotents in lambda(D6)", "D6")
    delta = c.up(["e", "a"], ["e", "a2"], ["a", "a2"])
    lam = c.up(["e", "b"], ["e", "ab"], ["e", "a", "a2"], ["a", "b", "ab"], ["a2", "b", "ab"])
    t = c.mask("e", "a", "ab")
    dl, ld = c.mul(delta, lam), c.mul(lam, delta)
    res.facts += [
        _is_ml(c, "Delta", delta),
        _is_ml(c, "Lambda", lam),
        Fact("Delta is idempotent", c.idempotent(delta)),
        Fact("Lambda is idempotent", c.idempotent(lam)),
        Fact("{e,a,ab} in Delta*Lambda", t in dl, c.show(dl)),
        Fact("{e,a,ab} not in Lambda*Delta", t not in ld, c.show(ld)),
        _neq(c, "Delta*Lambda != Lambda*Delta", dl, ld),
        Fact("{e,a,ab} is a minimal set of Delta*Lambda but not of Lambda*Delta",
             t in dl.minimal_sets and t not in ld.minimal_sets),
    ]
    return res


def check_elementary_abelian() -> ClaimCheck:
    s = parse_expr("E3")
    c = _Ctx(s)
    res = ClaimCheck("c", "two non-commuting idempotents in lambda(C2^3)", "E3")
    box_b = c.up(["e", "a"], ["e", "b"], ["e", "ab"], ["a", "b", "ab"])
    box_c = c.up(["e", "a"], ["e", "c"], ["e", "ac"], ["a", "c", "ac"])
    t = c.mask("e", "c", "b", "ab")
    bc, cb = c.mul(box_b, box_c), c.mul(box_c, box_b)
    res.facts += [
        _is_ml(c, "box_b", box_b),
        _is_ml(c, "box_c", box_c),
        Fact("box_b is idempotent", c.idempotent(box_b)),
        Fact("box_c is idempotent", c.idempotent(box_c)),
        Fact("{e,c,b,ab} in box_b*box_c", t in bc, c.show(bc)),
        Fact("{e,c,b,ab} not in box_c*box_b", t not in cb, c.show(cb)),
        _neq(c, "box_b*box_c != box_c*box_b", bc, cb),
        Fact("{e,c,b,ab} is a minimal set of box_b*box_c but not of box_c*box_b",
             t in bc.minimal_sets and t not in cb.minimal_sets),
    ]
    return res


def check_top_group_of_order_two() -> ClaimCheck:
    # chain e1 < e2 < e3 = e with a in the top group: L2 + C2, e1 = 0, e2 = 1
    s = parse_expr("L2+C2")
    c = _Ctx(s)
    res = ClaimCheck("d", "a non-trivial top group above two idempotents breaks commutation", "L2+C2")
    box = c.up(["0", "a"], ["0", "1"], ["0", "e"], ["a", "1", "e"])
    delta = c.up(["1", "a"], ["1", "e"], ["a", "e"])
    bd = c.mul(box, delta)
    res.facts += [
        _is_ml(c, "box", box),
        _is_ml(c, "Delta", delta),
        Fact("box is idempotent", c.idempotent(box)),
        Fact("Delta is idempotent", c.idempotent(delta)),
        _eq(c, "box*Delta = <{1,0},{1,a},{1,e},{0,a,e}>", bd, c.up(["1", "0"], ["1", "a"], ["1", "e"], ["0", "a", "e"])),
        _eq(c, "Delta*box = box", c.mul(delta, box), box),
        _neq(c, "box*Delta != box", bd, box),
    ]
    return res


def check_linked_counterexample() -> ClaimCheck:
    # {0, 1, -1} with 1 = e and -1 = a
    s = parse_expr("L1+C2")
    c = _Ctx(s)
    res = ClaimCheck("e", "Delta and <X> do not commute in N2(L1+C2)", "L1+C2")
    delta = c.up(["0", "e"], ["0", "a"], ["e", "a"])
    full = c.up(["0", "e", "a"])
    res.facts += [
        Fact("Delta is idempotent", c.idempotent(delta)),
        Fact("<X> is idempotent", c.idempotent(full)),
        _eq(c, "Delta*<X> = <X>", c.mul(delta, full), full),
        _eq(c, "<X>*Delta = <{0,1},{0,-1}>", c.mul(full, delta), c.up(["0", "e"], ["0", "a"])),
        _neq(c, "<X> != <{0,1},{0,-1}>", full, c.up(["0", "e"], ["0", "a"])),
    ]
    return res


def check_group_filters(name: str) -> ClaimCheck:
    s = parse_expr(name)
    c = _Ctx(s)
    res = ClaimCheck("f", "<H> and all non-empty subsets do not commute in upsilon(H)", name)
    f = c.up(list(s.labels))
    u = c.up(*[[x] for x in s.labels])
    res.facts += [
        Fact("F is idempotent", c.idempotent(f)),
        Fact("U is idempotent", c.idempotent(u)),
        _eq(c, "F*U = U", c.mul(f, u), u),
        _eq(c, "U*F = F", c.mul(u, f), f),
        _neq(c, "U != F", u, f),
    ]
    return res


def check_two_groups_of_order_two() -> ClaimCheck:
    # H1 = {e, a} lies below H2 = {e', a'} and a'e = e
    s = parse_expr("C2+C2")
    c = _Ctx(s)
    res = ClaimCheck("g", "two groups of order two with a2*e1 = e1 give non-commuting idempotents", "C2+C2")
    box_e = c.up(["e", "a"], ["e", "a'"], ["e", "e'"], ["a", "a'", "e'"])
    box_a = c.up(["a", "e"], ["a", "e'"], ["a", "a'"], ["e", "e'", "a'"])
    res.facts += [
        Fact("a'*e = e", s.mul(s.index("a'"), s.index("e")) == s.index("e")),
        _is_ml(c, "box_e", box_e),
        _is_ml(c, "box_a", box_a),
        Fact("box_e is idempotent", c.idempotent(box_e)),
        Fact("box_a is idempotent", c.idempotent(box_a)),
        _eq(c, "box_e*box_a = box_a", c.mul(box_e, box_a), box_a),
        _eq(c, "box_a*box_e = box_e", c.mul(box_a, box_e), box_e),
    ]
    return res


def check_cyclic_five() -> ClaimCheck:
    """Search lambda(C5) for Theta, Z with L*Theta = Z for every non-principal L."""
    s = parse_expr("C5")
    ext = build_extension(s, ExtensionClass.LAMBDA)
    c = _Ctx(s)
    res = ClaimCheck("h", "lambda(C5) has a non-regular Theta with L*Theta constant", "C5")
    elems = list(ext.elements)
    principal = set(ext.embed_index)
    free = [i for i in range(len(elems)) if i not in principal]
    tab = ext.semigroup.table
    found = []
    for t in range(len(elems)):
        col = {tab[i][t] for i in free}
        if len(col) == 1 and col != {t}:
            found.append((t, col.pop()))
    res.facts.append(Fact("lambda(C5) has 81 elements", len(elems) == 81, str(len(elems))))
    res.facts.append(Fact("some Theta != Z with L*Theta = Z for all non-principal L", bool(found),
                          f"{len(found)} candidates"))
    if found:
        t, z = found[0]
        theta = elems[t]
        zz = elems[z]
        res.facts += [
            Fact("Z is the zero of lambda(C5)", all(tab[z][i] == z == tab[i][z] for i in range(len(elems))),
                 c.show(zz)),
            _eq(c, "Theta*Theta = Z", c.mul(theta, theta), zz),
            _eq(c, "Theta*Theta*Theta = Z", c.mul(theta, theta, theta), zz),
            _not_regular(c, "Theta is not regular in lambda(C5)", theta, elems),
        ]
    return res


def check_trivial_middle_group() -> ClaimCheck:
    s = parse_expr("L1+C2+L1")
    c = _Ctx(s)
    res = ClaimCheck("i", "a non-trivial middle group gives a non-regular Delta", "L1+C2+L1")
    top = s.labels[3]
    delta = c.up(["0", "a"], ["a", top], ["0", top])
    res.facts += [
        _is_ml(c, "Delta", delta),
        _not_regular(c, "Delta is not regular in lambda(X)", delta, _extension_pool(s, ExtensionClass.LAMBDA)),
    ]
    return res


def check_cyclic_top_group() -> ClaimCheck:
    s = parse_expr("L1+C3")
    c = _Ctx(s)
    res = ClaimCheck("j", "a cyclic top group of order three gives a non-regular Delta", "L1+C3")
    delta = c.up(["a", "0"], ["a", "e"], ["0", "e"])
    res.facts += [
        _is_ml(c, "Delta", delta),
        _not_regular(c, "Delta is not regular in lambda(X)", delta, _extension_pool(s, ExtensionClass.LAMBDA)),
    ]
    return res


def check_klein_top_group() -> ClaimCheck:
    s = parse_expr("L1+(C2xC2)")
    c = _Ctx(s)
    res = ClaimCheck("k", "a Klein top group gives a non-regular box", "L1+(C2xC2)")
    a, b, ab = "(a,e)", "(e,a)", "(a,a)"
    box = c.up(["0", a], ["0", b], ["0", ab], [a, b, ab])
    res.facts += [
        _is_ml(c, "box", box),
        _not_regular(c, "box is not regular in lambda(X)", box, _extension_pool(s, ExtensionClass.LAMBDA)),
    ]
    return res


def check_large_bottom_group() -> ClaimCheck:
    s = parse_expr("C3+L1")
    c = _Ctx(s)
    res = ClaimCheck("l", "a bottom group of order three gives a non-regular Delta", "C3+L1")
    delta = c.up(["a", "a2"], ["a", "0"], ["a2", "0"])
    res.facts += [
        _is_ml(c, "Delta", delta),
        _not_regular(c, "Delta is not regular in lambda(X)", delta, _extension_pool(s, ExtensionClass.LAMBDA)),
    ]
    return res


def check_v_filter() -> ClaimCheck:
    s = parse_expr("V")
    c = _Ctx(s)
    res = ClaimCheck("m", "the filter <{x,y}> on V is not regular and F != F*F = F*F*F", "V")
    f = c.up(["x", "y"])
    sq = c.mul(f, f)
    res.facts += [
        _eq(c, "F*F = <{x,y,xy}>", sq, c.up(["x", "y", "xy"])),
        _eq(c, "F*F*F = F*F", c.mul(f, f, f), sq),
        _neq(c, "F != F*F", f, sq),
        _not_regular(c, "F is not regular in upsilon(V)", f, _extension_pool(s, ExtensionClass.UPSILON)),
    ]
    return res


def check_large_group_filter() -> ClaimCheck:
    s = parse_expr("C3")
    c = _Ctx(s)
    res = ClaimCheck("n", "a co-singleton filter in C3 is not regular in N2", "C3")
    f = c.up(["e", "a"])
    h = c.up(list(s.labels))
    res.facts += [
        _eq(c, "F*F = <H>", c.mul(f, f), h),
        _eq(c, "F*F*F = <H>", c.mul(f, f, f), h),
        _neq(c, "F != <H>", f, h),
        _not_regular(c, "F is not regular in N2(C3)", f, _extension_pool(s, ExtensionClass.N2)),
    ]
    return res


def check_lower_group_filter() -> ClaimCheck:
    s = parse_expr("C2+L1")
    c = _Ctx(s)
    res = ClaimCheck("o", "a non-trivial lower group gives a non-regular filter in N2", "C2+L1")
    f = c.up(["a", "0"])
    res.facts.append(_not_regular(c, "<{a,e2}> is not regular in N2(X)", f,
                                  _extension_pool(s, ExtensionClass.N2)))
    return res


CHECKS: tuple[Callable[[], ClaimCheck], ...] = (
    check_v_semilattice,
    check_dihedral,
    check_elementary_abelian,
    check_top_group_of_order_two,
    check_linked_counterexample,
    lambda: check_group_filters("C2"),
    lambda: check_group_filters("C3"),
    check_two_groups_of_order_two,
    check_cyclic_five,
    check_trivial_middle_group,
    check_cyclic_top_group,
    check_klein_top_group,
    check_large_bottom_group,
    check_v_filter,
    check_large_group_filter,
    check_lower_group_filter,
)


def spotcheck_claims() -> list[ClaimCheck]:
    return [fn() for fn in CHECKS]


def maximal_linked_count(n: int) -> int:
    return len(enumerate_class(n, "maximal-linked", limit=n))
