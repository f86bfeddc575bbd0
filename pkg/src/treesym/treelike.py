"""Finite tree-like graph analysis: witness test, spanning forest, distinguishing.

A rooted graph is tree-like when every vertex y has a neighbor x such that y
lies on all shortest x-to-root paths, i.e. a child of which it is the only
parent in the BFS shortest-path DAG. The edges realizing that condition form
a forest F; the distinguishing procedure colors F's components pairwise
inequivalently under admissibility restrictions and then verifies the union
against the brute-force automorphism list. On finite inputs success is
verified, never assumed.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .canon import colored_unrooted_code, unrooted_code
from .coloring import verify_distinguishing
from .oracle import brute_graph_aut
from .trees import Coloring, EdgeListParseError, Tree, read_edge_lines


@dataclass(frozen=True)
class RootedGraph:
    """Connected simple graph on dense ids 0..n-1 with a distinguished root."""

    n: int
    adj: tuple[tuple[int, ...], ...]
    root: int

    @staticmethod
    def from_edges(n: int, edges, root: int) -> "RootedGraph":
        if n <= 0:
            raise ValueError("vertex count must be at least 1")
        if not (0 <= root < n):
            raise ValueError(f"root {root} out of range 0..{n - 1}")
        seen: set[tuple[int, int]] = set()
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"vertex id out of range in edge ({u}, {v})")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge ({key[0]}, {key[1]})")
            seen.add(key)
            nbrs[u].append(v)
            nbrs[v].append(u)
        g = RootedGraph(n, tuple(tuple(sorted(a)) for a in nbrs), root)
        if n > 1 and len(_bfs_dist(g.adj, root)[1]) != n:
            raise ValueError("graph is disconnected")
        return g


def parse_graph_edge_list(text: str, root: int = 0) -> RootedGraph:
    """Same wire format as trees, with the cycle check relaxed (graphs allowed)."""
    n, rows = read_edge_lines(text)
    g = RootedGraph.from_edges(n, [(u, v) for _, u, v in rows], root)
    dist, reach = _bfs_dist(g.adj, root)
    if len(reach) != n:
        raise EdgeListParseError("graph is disconnected")
    return g


def _bfs_dist(adj, start: int):
    n = len(adj)
    dist = [-1] * n
    dist[start] = 0
    order = [start]
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                order.append(v)
                queue.append(v)
    return dist, order


@dataclass(frozen=True)
class TreelikeReport:
    """Per-vertex witnesses: witness[y] is a child x with y as unique parent, or None."""

    treelike: bool
    witnesses: tuple[int | None, ...]


def is_treelike(g: RootedGraph) -> TreelikeReport:
    """Does every vertex have a child of which it is the only parent?

    y lies on all shortest x-to-root paths iff dist(x) = dist(y) + 1 and y
    is x's unique predecessor in the BFS DAG. The root is included in the
    test; any depth-1 neighbor witnesses it, since the root is its unique
    predecessor.
    """
    dist, _ = _bfs_dist(g.adj, g.root)
    pred_count = [0] * g.n
    for x in range(g.n):
        for y in g.adj[x]:
            if dist[y] == dist[x] - 1:
                pred_count[x] += 1
    witnesses: list[int | None] = [None] * g.n
    for y in range(g.n):
        for x in g.adj[y]:
            if dist[x] == dist[y] + 1 and pred_count[x] == 1:
                witnesses[y] = x
                break
    return TreelikeReport(all(w is not None for w in witnesses), tuple(witnesses))


@dataclass(frozen=True)
class ForestExtraction:
    """The spanning forest of unique-parent edges, plus its components."""

    edges: tuple[tuple[int, int], ...]
    components: tuple[tuple[int, ...], ...]


def extract_forest(g: RootedGraph) -> ForestExtraction:
    """Edges yx with y on all shortest x-to-root paths; verified acyclic and spanning."""
    dist, _ = _bfs_dist(g.adj, g.root)
    preds: list[list[int]] = [[] for _ in range(g.n)]
    for x in range(g.n):
        for y in g.adj[x]:
            if dist[y] == dist[x] - 1:
                preds[x].append(y)
    edges = []
    nbrs: list[list[int]] = [[] for _ in range(g.n)]
    for x in range(g.n):
        if len(preds[x]) == 1:
            y = preds[x][0]
            edges.append((min(x, y), max(x, y)))
            nbrs[x].append(y)
            nbrs[y].append(x)
    comp = [-1] * g.n
    components = []
    for v in range(g.n):
        if comp[v] != -1:
            continue
        cid = len(components)
        comp[v] = cid
        stack = [v]
        members = [v]
        while stack:
            u = stack.pop()
            for w in nbrs[u]:
                if comp[w] == -1:
                    comp[w] = cid
                    members.append(w)
                    stack.append(w)
        components.append(tuple(sorted(members)))
    for members in components:
        inside = sum(1 for u, v in edges if comp[u] == comp[v] == comp[members[0]])
        if inside != len(members) - 1:
            raise AssertionError("forest extraction produced a cycle")
    return ForestExtraction(tuple(sorted(edges)), tuple(components))


MAX_TREELIKE_VERTICES = 12


def _component_tree(g: ForestExtraction, members: tuple[int, ...]) -> tuple[Tree, dict[int, int]]:
    local = {v: i for i, v in enumerate(members)}
    edges = [(local[u], local[v]) for u, v in g.edges if u in local and v in local]
    return Tree.from_edges(len(members), edges), local


def treelike_distinguish(g: RootedGraph) -> Coloring | None:
    """Color F's components admissibly and pairwise inequivalently, then verify.

    The root's component admits distinguishing sets in which every chosen
    vertex other than the root keeps a neighbor outside the set (any set at
    all when the root has degree 1); other components require that of every
    chosen vertex. The union is accepted only if no non-identity graph
    automorphism preserves it. Absence is a valid outcome: the procedure's
    guarantee needs infinite components, so here it is exploratory.
    """
    if g.n > MAX_TREELIKE_VERTICES:
        raise ValueError(f"n = {g.n} exceeds cap {MAX_TREELIKE_VERTICES}")
    auts = brute_graph_aut(g.adj)
    if len(auts) == 1:
        return Coloring(g.n, 0)
    forest = extract_forest(g)
    adjsets = [set(a) for a in g.adj]

    chosen_masks: list[tuple[tuple[int, ...], int]] = []
    used_codes: dict[bytes, set[bytes]] = {}
    ordered = sorted(forest.components, key=lambda ms: (g.root not in ms, ms))
    root_deg = len(g.adj[g.root])
    for members in ordered:
        tree, local = _component_tree(forest, members)
        holds_root = g.root in local
        shape = unrooted_code(tree)
        taken = used_codes.setdefault(shape, set())
        pick = None
        for mask in range(1 << tree.n):
            cand = Coloring(tree.n, mask)
            if not verify_distinguishing(tree, cand):
                continue
            if not _admissible(cand, members, adjsets, holds_root, root_deg):
                continue
            code = colored_unrooted_code(tree, cand)
            if code in taken:
                continue
            pick = (cand, code)
            break
        if pick is None:
            return None
        taken.add(pick[1])
        chosen_masks.append((members, pick[0].mask))

    mask = 0
    for members, local_mask in chosen_masks:
        for i, v in enumerate(members):
            if local_mask >> i & 1:
                mask |= 1 << v
    for sigma in auts:
        if all(sigma[i] == i for i in range(g.n)):
            continue
        image = 0
        for v in range(g.n):
            if mask >> v & 1:
                image |= 1 << sigma[v]
        if image == mask:
            return None
    return Coloring(g.n, mask)


def _admissible(cand: Coloring, members, adjsets, holds_root: bool, root_deg: int) -> bool:
    """Buried = a chosen vertex with no in-component neighbor outside the set.

    Root component: any set when the root has degree 1, else at most one
    buried vertex. Other components: no buried vertex at all.
    """
    if holds_root and root_deg == 1:
        return True
    member_set = set(members)
    inside = {v for i, v in enumerate(members) if cand.is_black(i)}
    buried = 0
    for v in inside:
        if not any(w in member_set and w not in inside for w in adjsets[v]):
            buried += 1
    if holds_root:
        return buried <= 1
    return buried == 0
