"""Canonical parenthesis codes for rooted subtrees, twin classes, isomorphism.

A rooted subtree's code is the classic balanced-parenthesis string: a leaf is
``()`` and an internal vertex wraps the lexicographically sorted codes of its
children. Equal codes mean isomorphic rooted trees, so sibling grouping by
code is exactly the twin (similarity-class) partition. Codes are interned per
tree so equal codes within one analysis share a single bytes object.
"""

from __future__ import annotations

from dataclasses import dataclass
from weakref import WeakKeyDictionary

from .trees import Coloring, RootedTree, Tree, VertexCenter, center, root_at

CanonCode = bytes

_code_cache: "WeakKeyDictionary[RootedTree, tuple[bytes, ...]]" = WeakKeyDictionary()


def subtree_codes(rt: RootedTree) -> tuple[bytes, ...]:
    """Code of (T^x, x) for every vertex x; the root entry codes the whole tree."""
    cached = _code_cache.get(rt)
    if cached is not None:
        return cached
    codes: list[bytes] = [b""] * rt.tree.n
    interned: dict[bytes, bytes] = {}
    for v in reversed(rt.bfs_order):
        kids = rt.children[v]
        if not kids:
            raw = b"()"
        else:
            raw = b"(" + b"".join(sorted(codes[c] for c in kids)) + b")"
        codes[v] = interned.setdefault(raw, raw)
    result = tuple(codes)
    _code_cache[rt] = result
    return result


def canon_code(rt: RootedTree, x: int) -> CanonCode:
    return subtree_codes(rt)[x]


def root_code_excluding(rt: RootedTree, skip_child: int) -> CanonCode:
    """Code of the root's subtree with one child branch removed.

    Used for the two halves of an edge-centered tree: rooting at u, the
    u-half is the root minus the branch through v.
    """
    codes = subtree_codes(rt)
    kids = [c for c in rt.children[rt.root] if c != skip_child]
    return b"(" + b"".join(sorted(codes[c] for c in kids)) + b")"


@dataclass(frozen=True)
class TwinClass:
    """One similarity class among the children of a vertex."""

    rep: int
    members: tuple[int, ...]

    @property
    def multiplicity(self) -> int:
        return len(self.members)


def child_classes(rt: RootedTree, y: int, skip: int | None = None) -> tuple[TwinClass, ...]:
    """Children of y grouped by subtree code, ordered by representative id."""
    codes = subtree_codes(rt)
    groups: dict[bytes, list[int]] = {}
    for c in rt.children[y]:
        if c == skip:
            continue
        groups.setdefault(codes[c], []).append(c)
    classes = [TwinClass(members[0], tuple(members)) for members in groups.values()]
    classes.sort(key=lambda cl: cl.rep)
    return tuple(classes)


@dataclass(frozen=True)
class SimilarityPartition:
    """Twin classes for every vertex that has children."""

    by_vertex: dict[int, tuple[TwinClass, ...]]

    def classes_at(self, y: int) -> tuple[TwinClass, ...]:
        return self.by_vertex.get(y, ())


def twin_classes(rt: RootedTree) -> SimilarityPartition:
    by_vertex = {
        y: child_classes(rt, y) for y in rt.bfs_order if rt.children[y]
    }
    return SimilarityPartition(by_vertex)


def unrooted_code(t: Tree) -> CanonCode:
    """Canonical code of the unrooted isomorphism type (rooted at the center)."""
    c = center(t)
    if isinstance(c, VertexCenter):
        rt = root_at(t, c.vertex)
        return subtree_codes(rt)[c.vertex]
    cu = subtree_codes(root_at(t, c.u))[c.u]
    cv = subtree_codes(root_at(t, c.v))[c.v]
    return min(cu, cv)


def is_isomorphic(t1: Tree, t2: Tree) -> bool:
    if t1.n != t2.n:
        return False
    return unrooted_code(t1) == unrooted_code(t2)


def colored_subtree_codes(rt: RootedTree, coloring: Coloring) -> tuple[bytes, ...]:
    """Codes refined by vertex color; equal iff color-preserving isomorphic."""
    if coloring.n != rt.tree.n:
        raise ValueError("coloring length does not match tree")
    codes: list[bytes] = [b""] * rt.tree.n
    for v in reversed(rt.bfs_order):
        col = b"1" if coloring.is_black(v) else b"0"
        kids = rt.children[v]
        if not kids:
            codes[v] = b"(" + col + b")"
        else:
            codes[v] = b"(" + col + b"".join(sorted(codes[c] for c in kids)) + b")"
    return tuple(codes)


def colored_root_code_excluding(rt: RootedTree, coloring: Coloring, skip_child: int) -> bytes:
    codes = colored_subtree_codes(rt, coloring)
    col = b"1" if coloring.is_black(rt.root) else b"0"
    kids = [c for c in rt.children[rt.root] if c != skip_child]
    return b"(" + col + b"".join(sorted(codes[c] for c in kids)) + b")"


def colored_unrooted_code(t: Tree, coloring: Coloring) -> bytes:
    """Canonical form of a colored tree; equal iff a color-preserving isomorphism exists."""
    c = center(t)
    if isinstance(c, VertexCenter):
        rt = root_at(t, c.vertex)
        return colored_subtree_codes(rt, coloring)[c.vertex]
    cu = colored_subtree_codes(root_at(t, c.u), coloring)[c.u]
    cv = colored_subtree_codes(root_at(t, c.v), coloring)[c.v]
    return min(cu, cv)
