"""Tree data model: parsing, serialization, centers, rooting, colorings."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass


class EdgeListParseError(ValueError):
    """Malformed edge-list input. Carries the 1-based offending line, if any."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Tree:
    """Unrooted tree on dense vertex ids 0..n-1.

    Adjacency lists are sorted ascending and symmetric; the structure is
    validated on construction via :meth:`from_edges` (connected, acyclic,
    no self-loops, no duplicate edges).
    """

    n: int
    adj: tuple[tuple[int, ...], ...]

    @staticmethod
    def from_edges(n: int, edges) -> "Tree":
        if n <= 0:
            raise ValueError("vertex count must be at least 1")
        edges = list(edges)
        if len(edges) != n - 1:
            raise ValueError(f"edge count {len(edges)} != n-1 = {n - 1}")
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
        tree = Tree(n, tuple(tuple(sorted(a)) for a in nbrs))
        if n > 1 and not _connected(tree.adj):
            raise ValueError("edges do not form a connected tree")
        return tree

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def delta(self) -> int:
        """Maximum degree."""
        return max(len(a) for a in self.adj)

    def edges(self):
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)


def _connected(adj) -> bool:
    n = len(adj)
    seen = [False] * n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if not seen[v]:
                seen[v] = True
                count += 1
                queue.append(v)
    return count == n


def read_edge_lines(text: str):
    """Shared reader for edge-list text: returns (n, [(line_no, u, v), ...]).

    Validates header, id ranges, self-loops and duplicates with line numbers.
    Connectivity and count rules are left to the callers (tree vs graph).
    """
    lines = text.splitlines()
    header_idx = None
    n = None
    for i, raw in enumerate(lines):
        if raw.strip() == "":
            continue
        try:
            n = int(raw.strip())
        except ValueError:
            raise EdgeListParseError(f"expected vertex count, got {raw.strip()!r}", i + 1)
        header_idx = i
        break
    if n is None:
        raise EdgeListParseError("empty input: expected vertex count on first line")
    if n <= 0:
        raise EdgeListParseError("vertex count must be at least 1", header_idx + 1)
    out = []
    seen: set[tuple[int, int]] = set()
    for i in range(header_idx + 1, len(lines)):
        raw = lines[i].strip()
        if raw == "":
            continue
        parts = raw.split()
        if len(parts) != 2:
            raise EdgeListParseError(f"expected 'u v', got {raw!r}", i + 1)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(f"non-integer vertex id in {raw!r}", i + 1)
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListParseError(f"vertex id out of range 0..{n - 1} in edge ({u}, {v})", i + 1)
        if u == v:
            raise EdgeListParseError(f"self-loop at vertex {u}", i + 1)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise EdgeListParseError(f"duplicate edge ({key[0]}, {key[1]})", i + 1)
        seen.add(key)
        out.append((i + 1, u, v))
    return n, out


def parse_edge_list(text: str) -> Tree:
    """Parse "n" followed by one "u v" edge per line into a validated Tree.

    Tolerates blank lines and CRLF. Errors carry line numbers: duplicate
    edges, out-of-range ids, cycles (reported at the closing edge), and a
    final edge-count check.
    """
    n, rows = read_edge_lines(text)
    # Union-find so a cycle is reported at the line that closes it.
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    edges = []
    for line_no, u, v in rows:
        ru, rv = find(u), find(v)
        if ru == rv:
            raise EdgeListParseError(f"cycle detected at edge ({u}, {v})", line_no)
        parent[ru] = rv
        edges.append((u, v))
    if len(edges) != n - 1:
        raise EdgeListParseError(f"edge count {len(edges)} != n-1 = {n - 1}")
    roots = {find(x) for x in range(n)}
    if len(roots) > 1:
        raise EdgeListParseError("graph is disconnected")
    return Tree.from_edges(n, edges)


def serialize_edge_list(t: Tree) -> str:
    """Inverse of parse_edge_list; edges ascending by (min, max). Bit-exact."""
    lines = [str(t.n)]
    lines.extend(f"{u} {v}" for u, v in sorted(t.edges()))
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class VertexCenter:
    vertex: int


@dataclass(frozen=True)
class EdgeCenter:
    u: int
    v: int


Center = VertexCenter | EdgeCenter


def center(t: Tree) -> Center:
    """Center by iterated leaf removal: a single vertex or an adjacent pair."""
    n = t.n
    if n == 1:
        return VertexCenter(0)
    deg = [len(a) for a in t.adj]
    removed = [False] * n
    layer = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        nxt = []
        for u in layer:
            removed[u] = True
            for v in t.adj[u]:
                if not removed[v]:
                    deg[v] -= 1
                    if deg[v] == 1:
                        nxt.append(v)
        remaining -= len(layer)
        layer = nxt
    live = sorted(v for v in range(n) if not removed[v])
    if len(live) == 1:
        return VertexCenter(live[0])
    u, v = live
    return EdgeCenter(u, v)


@dataclass(frozen=True, eq=False)
class RootedTree:
    """Tree with a distinguished root and parent/child orientation.

    ``children`` lists are in ascending id order; canonical ordering is the
    canon module's job. ``bfs_order`` starts at the root, so its reverse is
    a valid bottom-up evaluation order. Identity-based equality so canonical
    caches can key on instances.
    """

    tree: Tree
    root: int
    parent: tuple[int | None, ...]
    children: tuple[tuple[int, ...], ...]
    subtree_size: tuple[int, ...]
    bfs_order: tuple[int, ...]


def root_at(t: Tree, w: int) -> RootedTree:
    if not (0 <= w < t.n):
        raise ValueError(f"root {w} out of range 0..{t.n - 1}")
    n = t.n
    parent: list[int | None] = [None] * n
    children: list[tuple[int, ...]] = [()] * n
    order = []
    queue = deque([w])
    seen = [False] * n
    seen[w] = True
    while queue:
        u = queue.popleft()
        order.append(u)
        kids = tuple(v for v in t.adj[u] if not seen[v])
        children[u] = kids
        for v in kids:
            seen[v] = True
            parent[v] = u
            queue.append(v)
    size = [1] * n
    for u in reversed(order):
        for v in children[u]:
            size[u] += size[v]
    return RootedTree(t, w, tuple(parent), tuple(children), tuple(size), tuple(order))


@dataclass(frozen=True)
class Coloring:
    """2-coloring of vertices as a bit mask; bit v set means v is black."""

    n: int
    mask: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("coloring needs at least one vertex")
        if not (0 <= self.mask < (1 << self.n)):
            raise ValueError("mask out of range for vertex count")

    @staticmethod
    def from_bits(bits: str) -> "Coloring":
        if not bits or any(ch not in "01" for ch in bits):
            raise ValueError(f"expected a nonempty 0/1 string, got {bits!r}")
        mask = 0
        for v, ch in enumerate(bits):
            if ch == "1":
                mask |= 1 << v
        return Coloring(len(bits), mask)

    @staticmethod
    def from_black(n: int, blacks) -> "Coloring":
        mask = 0
        for v in blacks:
            mask |= 1 << v
        return Coloring(n, mask)

    def is_black(self, v: int) -> bool:
        return bool(self.mask >> v & 1)

    def bits(self) -> str:
        return "".join("1" if self.mask >> v & 1 else "0" for v in range(self.n))

    def complement(self) -> "Coloring":
        return Coloring(self.n, self.mask ^ ((1 << self.n) - 1))

    def blacks(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if self.mask >> v & 1)


def relabel(t: Tree, perm) -> Tree:
    """Apply permutation perm (old id -> new id) to the vertex set."""
    edges = [(perm[u], perm[v]) for u, v in t.edges()]
    return Tree.from_edges(t.n, edges)
