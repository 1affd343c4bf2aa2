"""Slow, definition-level reference implementations used to derive and check frozen values.

Nothing here shares code with the fast paths in ``sext`` beyond the
``Upfamily``/``FiniteSemigroup`` containers.
"""

from itertools import product as cartesian

from sext.semigroup import FiniteSemigroup
from sext.upfamily import Upfamily, from_members


def upclosed_member_sets(n):
    """Every non-degenerate up-closed family on ``n`` points, as a member bitmask over subsets."""
    size = 1 << n
    full = size - 1
    out = []
    for members in range(1 << size):
        if members & 1 or not members >> full & 1:
            continue  # contains the empty set, or is empty
        ok = True
        for a in range(size):
            if members >> a & 1:
                for b in range(size):
                    if b & a == a and not members >> b & 1:
                        ok = False
                        break
            if not ok:
                break
        if ok:
            out.append(members)
    return out


def all_upfamilies(n):
    return [from_members(n, m) for m in upclosed_member_sets(n)]


def member_list(u: Upfamily):
    return [a for a in range(1 << u.n) if u.members >> a & 1]


def linked_by_members(u: Upfamily) -> bool:
    ms = member_list(u)
    return all(a & b for a in ms for b in ms)


def maximal_linked_by_members(u: Upfamily, universe) -> bool:
    """Linked, and no strictly larger linked family in ``universe``."""
    if not linked_by_members(u):
        return False
    return not any(v.members != u.members and v.members & u.members == u.members and linked_by_members(v)
                   for v in universe)


def filter_by_members(u: Upfamily) -> bool:
    ms = member_list(u)
    return all(u.members >> (a & b) & 1 for a in ms for b in ms)


def table_associative(table) -> bool:
    n = len(table)
    return all(table[table[i][j]][k] == table[i][table[j][k]]
               for i in range(n) for j in range(n) for k in range(n))


def count_semigroups_up_to_iso(n):
    """Orbit count of associative tables under relabelling, by brute force over permutations."""
    from itertools import permutations

    seen = set()
    classes = 0
    perms = list(permutations(range(n)))
    for flat in cartesian(range(n), repeat=n * n):
        if flat in seen:
            continue
        table = [flat[i * n:(i + 1) * n] for i in range(n)]
        if not table_associative(table):
            continue
        classes += 1
        for p in perms:
            inv = [0] * n
            for i, v in enumerate(p):
                inv[v] = i
            img = tuple(p[table[inv[i]][inv[j]]] for i in range(n) for j in range(n))
            seen.add(img)
    return classes


def product_by_members(s: FiniteSemigroup, a: Upfamily, b: Upfamily) -> Upfamily:
    """Extension product with every member set of A and every choice of B_x from all members of B."""
    n = s.order
    bm = member_list(b)
    out = 0
    for big_a in member_list(a):
        pts = [x for x in range(n) if big_a >> x & 1]
        for choice in cartesian(bm, repeat=len(pts)):
            u = 0
            for x, bx in zip(pts, choice):
                for y in range(n):
                    if bx >> y & 1:
                        u |= 1 << s.table[x][y]
            out |= 1 << u
    # close upward
    size = 1 << n
    closed = 0
    for c in range(size):
        if out >> c & 1:
            for d in range(size):
                if d & c == c:
                    closed |= 1 << d
    return from_members(n, closed)
