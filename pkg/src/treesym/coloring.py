"""Distinguishing 2-colorings: unranking, construction, verification, ray extension.

The unranking realizes the counting product a(T,w) = 2 * prod C(a(x), mu(x))
as an explicit bijection: one low-order bit picks the root color (0 = black),
then each similarity class consumes one mixed-radix digit that is decoded in
the combinatorial number system (colexicographic) into an unordered set of
mu distinct sub-coloring classes, handed to the twins in ascending vertex-id
order. Verification is collision detection on color-refined canonical codes:
a color-preserving non-identity automorphism exists iff two twins somewhere
share a colored code, or an edge-center half swap preserves colored codes.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .asym import a_root_excluding, a_values, asym_unrooted
from .canon import (
    child_classes,
    colored_root_code_excluding,
    colored_subtree_codes,
    root_code_excluding,
    subtree_codes,
)
from .trees import Coloring, RootedTree, Tree, VertexCenter, center, root_at


def combinadic_unrank(rank: int, universe: int, k: int) -> tuple[int, ...]:
    """rank -> the rank-th k-subset of {0..universe-1} in colexicographic order.

    Decodes rank = sum C(c_i, i) with c_1 < ... < c_k by binary search per
    element, so huge universes (a-values reach 2^n) cost O(k log universe).
    """
    if k < 0 or universe < 0 or rank < 0 or rank >= comb(universe, k):
        raise ValueError(f"rank {rank} out of range for C({universe}, {k})")
    out = []
    hi = universe - 1
    for i in range(k, 0, -1):
        lo = i - 1
        # largest c in [lo, hi] with C(c, i) <= rank
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if comb(mid, i) <= rank:
                lo = mid
            else:
                hi = mid - 1
        out.append(lo)
        rank -= comb(lo, i)
        hi = lo - 1
    out.reverse()
    return tuple(out)


def _unrank_into(rt: RootedTree, x: int, index: int, colors: list[int | None], skip: int | None = None):
    """Write the index-th inequivalent distinguishing coloring of (T^x, x).

    ``skip`` removes one child branch of x (used for edge-center halves).
    Iterative so deep chains cannot hit the recursion limit.
    """
    vals = a_values(rt)
    stack: list[tuple[int, int, int | None]] = [(x, index, skip)]
    while stack:
        v, k, skp = stack.pop()
        bit = k & 1
        k >>= 1
        colors[v] = 0 if bit else 1
        for cls in child_classes(rt, v, skip=skp):
            cap = comb(vals[cls.rep], cls.multiplicity)
            digit = k % cap
            k //= cap
            chosen = combinadic_unrank(digit, vals[cls.rep], cls.multiplicity)
            for member, sub in zip(cls.members, chosen):
                stack.append((member, sub, None))
        if k:
            raise AssertionError("index not fully consumed")


def unrank_distinguishing(rt: RootedTree, index: int) -> Coloring:
    """The index-th of the a(T,w) coloring classes, one concrete coloring each."""
    total = a_values(rt)[rt.root]
    if not (0 <= index < total):
        raise IndexError(f"index {index} out of range [0, {total})")
    colors: list[int | None] = [None] * rt.tree.n
    _unrank_into(rt, rt.root, index, colors)
    assert all(c is not None for c in colors)
    return Coloring.from_black(rt.tree.n, (v for v, c in enumerate(colors) if c))


def unrank_unrooted(t: Tree, index: int) -> Coloring:
    """Unranking adapted to the center kind, bijective onto the a(T) classes."""
    c = center(t)
    if isinstance(c, VertexCenter):
        return unrank_distinguishing(root_at(t, c.vertex), index)
    rt = root_at(t, c.u)
    a_u = a_root_excluding(rt, c.v)
    a_v = a_values(rt)[c.v]
    iso = root_code_excluding(rt, c.v) == subtree_codes(rt)[c.v]
    total = comb(a_u, 2) if iso else a_u * a_v
    if not (0 <= index < total):
        raise IndexError(f"index {index} out of range [0, {total})")
    if iso:
        s_u, s_v = combinadic_unrank(index, a_u, 2)
    else:
        s_u, s_v = index % a_u, index // a_u
    colors: list[int | None] = [None] * t.n
    _unrank_into(rt, c.u, s_u, colors, skip=c.v)
    _unrank_into(rt, c.v, s_v, colors)
    assert all(col is not None for col in colors)
    return Coloring.from_black(t.n, (v for v, col in enumerate(colors) if col))


def construct_distinguishing(t: Tree) -> Coloring | None:
    """A verified distinguishing coloring when one exists (index-0 unranking)."""
    if asym_unrooted(t) == 0:
        return None
    coloring = unrank_unrooted(t, 0)
    assert verify_distinguishing(t, coloring)
    return coloring


def _twin_collision(rt: RootedTree, coloring: Coloring, skip_at_root: int | None = None) -> bool:
    colored = colored_subtree_codes(rt, coloring)
    for y in rt.bfs_order:
        skip = skip_at_root if y == rt.root else None
        for cls in child_classes(rt, y, skip=skip):
            if cls.multiplicity < 2:
                continue
            seen = set()
            for m in cls.members:
                code = colored[m]
                if code in seen:
                    return True
                seen.add(code)
    return False


def verify_distinguishing(t: Tree, coloring: Coloring, pinned: int | None = None) -> bool:
    """True iff no non-identity automorphism (fixing ``pinned``) preserves the colors."""
    if coloring.n != t.n:
        raise ValueError("coloring length does not match tree")
    if pinned is not None:
        return not _twin_collision(root_at(t, pinned), coloring)
    c = center(t)
    if isinstance(c, VertexCenter):
        return not _twin_collision(root_at(t, c.vertex), coloring)
    rt = root_at(t, c.u)
    if _twin_collision(rt, coloring, skip_at_root=c.v):
        return False
    if root_code_excluding(rt, c.v) == subtree_codes(rt)[c.v]:
        colored_u = colored_root_code_excluding(rt, coloring, c.v)
        colored_v = colored_subtree_codes(rt, coloring)[c.v]
        if colored_u == colored_v:
            return False
    return True


@dataclass(frozen=True)
class OneEndedTruncation:
    """Finite stand-in for a one-ended tree: a ray plus a rayless lobe per ray vertex.

    ``ray`` is a path v_0..v_D with deg(v_0) = 1; ``lobes[i]`` is the vertex
    set of the component of T minus the ray edges that contains ray[i].
    """

    tree: Tree
    ray: tuple[int, ...]
    lobes: tuple[tuple[int, ...], ...]


def one_ended_truncation(tree: Tree, ray) -> OneEndedTruncation:
    ray = tuple(ray)
    if len(ray) < 1 or len(set(ray)) != len(ray):
        raise ValueError("ray must be a nonempty sequence of distinct vertices")
    for v in ray:
        if not (0 <= v < tree.n):
            raise ValueError(f"ray vertex {v} out of range")
    for a, b in zip(ray, ray[1:]):
        if b not in tree.adj[a]:
            raise ValueError(f"ray vertices {a}, {b} are not adjacent")
    if tree.degree(ray[0]) != 1:
        raise ValueError("ray origin must have degree 1")
    ray_edges = {frozenset(e) for e in zip(ray, ray[1:])}
    comp = [-1] * tree.n
    lobes = []
    for i, anchor in enumerate(ray):
        if comp[anchor] != -1:
            raise ValueError("ray vertices must lie in distinct lobes")
        stack = [anchor]
        comp[anchor] = i
        members = [anchor]
        while stack:
            u = stack.pop()
            for w in tree.adj[u]:
                if frozenset((u, w)) in ray_edges or comp[w] != -1:
                    continue
                comp[w] = i
                members.append(w)
                stack.append(w)
        lobes.append(tuple(sorted(members)))
    if any(c == -1 for c in comp):
        raise ValueError("lobes do not cover the tree; ray is not spanning")
    return OneEndedTruncation(tree, ray, tuple(lobes))


class LobeAssignmentError(RuntimeError):
    """Certificate that some lobe family cannot receive inequivalent colorings.

    Cannot occur when the truncation has finite motion m and maximum degree
    at most 2^(m/2); surfaced instead of assumed.
    """

    def __init__(self, ray_vertex: int, branch_rep: int, needed: int, available: int):
        self.ray_vertex = ray_vertex
        self.branch_rep = branch_rep
        self.needed = needed
        self.available = available
        super().__init__(
            f"at ray vertex {ray_vertex}: need {needed} inequivalent distinguishing "
            f"colorings for the branch family at {branch_rep}, only {available} exist"
        )


def extend_ray_coloring(tr: OneEndedTruncation, ray_colors) -> Coloring:
    """Extend a coloring of the ray to one that distinguishes (T, v_D).

    Walks v_1..v_D; at each step the branches hanging at v_i (all except the
    one toward v_{i+1}) are grouped into twin classes. The class containing
    the already-colored branch toward v_{i-1} receives fresh sub-colorings
    inequivalent to it; every other class receives pairwise inequivalent
    sub-colorings by unranking 0, 1, .... The result provably breaks every
    automorphism fixing v_D, and is verified before being returned.
    """
    tree = tr.tree
    ray = tr.ray
    ray_colors = tuple(bool(b) for b in ray_colors)
    if len(ray_colors) != len(ray):
        raise ValueError("ray coloring length must match the ray")
    colors: list[int | None] = [None] * tree.n
    for v, black in zip(ray, ray_colors):
        colors[v] = 1 if black else 0

    for i in range(1, len(ray)):
        v_i = ray[i]
        rt = root_at(tree, v_i)
        vals = a_values(rt)
        skip = ray[i + 1] if i + 1 < len(ray) else None
        back = ray[i - 1]
        colored_now: tuple[bytes, ...] | None = None
        for cls in child_classes(rt, v_i, skip=skip):
            if back in cls.members:
                others = [m for m in cls.members if m != back]
                if not others:
                    continue
                need = cls.multiplicity
                avail = vals[cls.rep]
                if avail < need:
                    raise LobeAssignmentError(v_i, cls.rep, need, avail)
                if colored_now is None:
                    colored_now = _partial_colored_codes(rt, colors)
                back_code = colored_now[back]
                next_index = 0
                for m in others:
                    while True:
                        _unrank_into(rt, m, next_index, colors)
                        next_index += 1
                        if _branch_colored_code(rt, colors, m) != back_code:
                            break
            else:
                if vals[cls.rep] < cls.multiplicity:
                    raise LobeAssignmentError(v_i, cls.rep, cls.multiplicity, vals[cls.rep])
                if cls.multiplicity == 1 and vals[cls.rep] == 1 << rt.subtree_size[cls.rep]:
                    # asymmetric lone branch: any coloring works; all-white for determinism
                    _whiten_branch(rt, cls.rep, colors)
                    continue
                for j, m in enumerate(cls.members):
                    _unrank_into(rt, m, j, colors)

    assert all(c is not None for c in colors)
    result = Coloring.from_black(tree.n, (v for v, c in enumerate(colors) if c))
    assert verify_distinguishing(tree, result, pinned=ray[-1])
    return result


def _whiten_branch(rt: RootedTree, x: int, colors):
    stack = [x]
    while stack:
        v = stack.pop()
        colors[v] = 0
        stack.extend(rt.children[v])


def _partial_colored_codes(rt: RootedTree, colors) -> tuple[bytes, ...]:
    """Colored codes over the already-colored region; uncolored vertices get a wildcard.

    Only queried for fully colored branches, where no wildcard can appear.
    """
    codes: list[bytes] = [b""] * rt.tree.n
    for v in reversed(rt.bfs_order):
        col = b"?" if colors[v] is None else (b"1" if colors[v] else b"0")
        kids = rt.children[v]
        codes[v] = b"(" + col + b"".join(sorted(codes[c] for c in kids)) + b")"
    return tuple(codes)


def _branch_colored_code(rt: RootedTree, colors, x: int) -> bytes:
    """Colored code of the (fully colored) branch rooted at x."""
    out: dict[int, bytes] = {}
    stack = [(x, False)]
    while stack:
        v, expanded = stack.pop()
        if expanded:
            col = b"1" if colors[v] else b"0"
            out[v] = b"(" + col + b"".join(sorted(out[c] for c in rt.children[v])) + b")"
        else:
            stack.append((v, True))
            for c in rt.children[v]:
                stack.append((c, False))
    return out[x]


def to_dot(t: Tree, coloring: Coloring | None = None) -> str:
    """DOT rendering with filled nodes for black vertices (write-only artifact)."""
    lines = ["graph tree {", "  node [shape=circle];"]
    for v in range(t.n):
        if coloring is not None and coloring.is_black(v):
            lines.append(f"  {v} [style=filled fillcolor=black fontcolor=white];")
        else:
            lines.append(f"  {v};")
    for u, v in sorted(t.edges()):
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
