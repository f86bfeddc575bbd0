"""Exact asymmetrizing numbers via the twin-class product recursion.

For a rooted tree the number of inequivalent distinguishing sets is

    a(T,w) = 2 * prod over similarity classes c of the root's children
             of C(a(rep_c), mu_c)

applied recursively, with C(a, mu) = 0 whenever mu > a, which makes
non-2-distinguishability propagate automatically. The unrooted number
follows from the center: a vertex center gives a(T) = a(T,w); an edge
center uv gives C(a(T^u), 2) when the halves are isomorphic and
a(T^u) * a(T^v) otherwise (the stabilizer of the edge is the direct
product of the two rooted groups). Everything is exact integer math.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from weakref import WeakKeyDictionary

from .autom import aut_order
from .canon import child_classes, root_code_excluding, subtree_codes
from .trees import RootedTree, Tree, VertexCenter, center, root_at

_a_cache: "WeakKeyDictionary[RootedTree, tuple[int, ...]]" = WeakKeyDictionary()


def a_values(rt: RootedTree) -> tuple[int, ...]:
    """a(T^x, x) for every vertex x, memoized on subtree codes."""
    cached = _a_cache.get(rt)
    if cached is not None:
        return cached
    codes = subtree_codes(rt)
    vals = [0] * rt.tree.n
    memo: dict[bytes, int] = {}
    for v in reversed(rt.bfs_order):
        code = codes[v]
        known = memo.get(code)
        if known is not None:
            vals[v] = known
            continue
        acc = 2
        for cls in child_classes(rt, v):
            acc *= comb(vals[cls.rep], cls.multiplicity)
            if acc == 0:
                break
        vals[v] = acc
        memo[code] = acc
    result = tuple(vals)
    _a_cache[rt] = result
    return result


def asym_rooted(rt: RootedTree) -> int:
    """a(T,w): inequivalent distinguishing sets under the root stabilizer."""
    return a_values(rt)[rt.root]


def a_root_excluding(rt: RootedTree, skip: int) -> int:
    """a of the root's half when the branch through ``skip`` is removed."""
    vals = a_values(rt)
    acc = 2
    for cls in child_classes(rt, rt.root, skip=skip):
        acc *= comb(vals[cls.rep], cls.multiplicity)
        if acc == 0:
            break
    return acc


def asym_unrooted(t: Tree) -> int:
    """a(T): inequivalent distinguishing sets under the full group."""
    c = center(t)
    if isinstance(c, VertexCenter):
        return asym_rooted(root_at(t, c.vertex))
    rt = root_at(t, c.u)
    a_u = a_root_excluding(rt, c.v)
    a_v = a_values(rt)[c.v]
    if root_code_excluding(rt, c.v) == subtree_codes(rt)[c.v]:
        return comb(a_u, 2)
    return a_u * a_v


def is_2_distinguishable(t: Tree) -> bool:
    return asym_unrooted(t) > 0


@dataclass(frozen=True)
class GroupOrderBound:
    """Witnesses for the group-order bound |Aut(T)| * a(T) <= 2^n."""

    holds: bool
    product: int
    bound: int


def group_order_bound_check(t: Tree) -> GroupOrderBound:
    """Check |Aut(T)| * a(T) <= 2^n; requires a 2-distinguishable tree."""
    a = asym_unrooted(t)
    if a == 0:
        raise ValueError("tree is not 2-distinguishable; the bound does not apply")
    product = aut_order(t) * a
    bound = 1 << t.n
    return GroupOrderBound(product <= bound, product, bound)
