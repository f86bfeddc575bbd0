"""Automorphism group order, motion, and exhaustive automorphism enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .canon import child_classes, root_code_excluding, subtree_codes
from .trees import EdgeCenter, RootedTree, Tree, VertexCenter, center, root_at


@dataclass(frozen=True)
class Motion:
    """Minimum number of vertices moved by a non-identity automorphism.

    ``moved is None`` encodes the asymmetric case (identity-only group),
    which by convention compares greater than every finite value, so
    ``m >= threshold`` style checks hold vacuously for asymmetric trees.
    """

    moved: int | None = None

    def __post_init__(self):
        if self.moved is not None:
            if self.moved < 2:
                raise ValueError("a non-identity tree automorphism moves at least 2 vertices")
            if self.moved % 2 != 0:
                raise ValueError("tree motion must be even")

    @property
    def is_asymmetric(self) -> bool:
        return self.moved is None

    def __lt__(self, other: "Motion") -> bool:
        if self.moved is None:
            return False
        if other.moved is None:
            return True
        return self.moved < other.moved

    def __le__(self, other: "Motion") -> bool:
        return self == other or self < other

    def __gt__(self, other: "Motion") -> bool:
        return other < self

    def __ge__(self, other: "Motion") -> bool:
        return other <= self

    def to_json(self):
        return "asymmetric" if self.moved is None else self.moved


ASYMMETRIC = Motion(None)

_aut_cache = {}


def aut_order_rooted(rt: RootedTree) -> int:
    """|Aut(T,w)| by the twin-class product: prod mu! * |Aut(rep)|^mu."""
    return _aut_values(rt)[rt.root]


def _aut_values(rt: RootedTree) -> list[int]:
    codes = subtree_codes(rt)
    vals = [1] * rt.tree.n
    memo: dict[bytes, int] = {}
    for v in reversed(rt.bfs_order):
        code = codes[v]
        known = memo.get(code)
        if known is not None:
            vals[v] = known
            continue
        acc = 1
        for cls in child_classes(rt, v):
            mu = cls.multiplicity
            acc *= factorial(mu) * vals[cls.rep] ** mu
        vals[v] = acc
        memo[code] = acc
    return vals


def _aut_root_excluding(rt: RootedTree, skip: int, vals) -> int:
    acc = 1
    for cls in child_classes(rt, rt.root, skip=skip):
        mu = cls.multiplicity
        acc *= factorial(mu) * vals[cls.rep] ** mu
    return acc


def aut_order(t: Tree) -> int:
    """Exact |Aut(T)| for the unrooted tree."""
    c = center(t)
    if isinstance(c, VertexCenter):
        return aut_order_rooted(root_at(t, c.vertex))
    rt = root_at(t, c.u)
    vals = _aut_values(rt)
    a_u = _aut_root_excluding(rt, c.v, vals)
    a_v = vals[c.v]
    order = a_u * a_v
    if root_code_excluding(rt, c.v) == subtree_codes(rt)[c.v]:
        order *= 2
    return order


def motion(t: Tree) -> Motion:
    """Motion from the twin structure at the center.

    Every non-identity automorphism either fixes the center pointwise, in
    which case it moves at least 2 * |T^x| vertices for some twin pair at x
    (and the bare twin swap achieves exactly that), or it swaps the two
    halves of an edge center, moving all n vertices. The minimum over these
    candidates is therefore the motion; the oracle suite cross-checks this
    closed form exhaustively.
    """
    if aut_order(t) == 1:
        return ASYMMETRIC
    c = center(t)
    if isinstance(c, VertexCenter):
        rt = root_at(t, c.vertex)
        skip = None
    else:
        rt = root_at(t, c.u)
        skip = c.v
    best: int | None = None
    for y in rt.bfs_order:
        for cls in child_classes(rt, y, skip=skip if y == rt.root else None):
            if cls.multiplicity >= 2:
                size = rt.subtree_size[cls.rep]
                if best is None or size < best:
                    best = size
    candidates = []
    if best is not None:
        candidates.append(2 * best)
    if isinstance(c, EdgeCenter):
        if root_code_excluding(rt, c.v) == subtree_codes(rt)[c.v]:
            candidates.append(t.n)
    if not candidates:
        raise AssertionError("non-trivial automorphism group without a motion candidate")
    return Motion(min(candidates))


class AutomorphismLimitExceeded(RuntimeError):
    """The enumeration would yield more automorphisms than the caller allowed."""

    def __init__(self, limit: int):
        self.limit = limit
        super().__init__(f"automorphism count exceeds limit {limit}")


def enumerate_automorphisms(t: Tree, limit: int | None = None, pinned: int | None = None):
    """Yield every automorphism of T exactly once as an image tuple.

    Backtracks over a BFS vertex order; a candidate image must match the
    current vertex's degree and be adjacent to the image of its BFS parent,
    which for trees checks each edge exactly once. With ``pinned`` only
    automorphisms fixing that vertex are produced. Raises
    AutomorphismLimitExceeded before yielding past ``limit``.
    """
    n = t.n
    adj = t.adj
    deg = [len(a) for a in adj]
    start = pinned if pinned is not None else 0
    rt = root_at(t, start)
    order = rt.bfs_order
    par = rt.parent

    mapping = [-1] * n
    used = [False] * n
    if pinned is not None:
        first = [pinned]
    else:
        first = [v for v in range(n) if deg[v] == deg[start]]

    def candidates(k: int):
        v = order[k]
        if k == 0:
            return first
        img_parent = mapping[par[v]]
        dv = deg[v]
        return [y for y in adj[img_parent] if not used[y] and deg[y] == dv]

    count = 0
    stack = [(0, iter(candidates(0)))]
    while stack:
        k, it = stack[-1]
        v = order[k]
        advanced = False
        for y in it:
            mapping[v] = y
            used[y] = True
            if k + 1 == n:
                count += 1
                if limit is not None and count > limit:
                    raise AutomorphismLimitExceeded(limit)
                yield tuple(mapping)
                used[y] = False
                mapping[v] = -1
                continue
            stack.append((k + 1, iter(candidates(k + 1))))
            advanced = True
            break
        if not advanced:
            stack.pop()
            if stack:
                pk, _ = stack[-1]
                pv = order[pk]
                used[mapping[pv]] = False
                mapping[pv] = -1
