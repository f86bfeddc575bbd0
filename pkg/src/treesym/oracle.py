"""Brute-force ground truth: exhaustive colorings, orbit counts, graph automorphisms.

Everything here is deliberately dumb: subsets are enumerated as bit
counters, automorphisms come from plain backtracking, and orbit
representatives are minimum bit patterns. The fast modules are validated
against these results, never the other way around.
"""

from __future__ import annotations

from dataclasses import dataclass

from .autom import ASYMMETRIC, AutomorphismLimitExceeded, Motion, enumerate_automorphisms
from .trees import Tree

MAX_ORACLE_VERTICES = 16
DEFAULT_AUT_LIMIT = 2_000_000


class OracleSizeError(ValueError):
    """Input exceeds the exhaustive-enumeration budget."""


@dataclass(frozen=True)
class OrbitReport:
    """Exhaustive census of distinguishing sets of one (possibly pinned) tree."""

    n: int
    total_colorings: int
    distinguishing_count: int
    orbit_count: int
    aut_order: int
    orbit_reps: tuple[int, ...]

    def __post_init__(self):
        # Regular action of the group on each orbit of distinguishing sets:
        # this is the claim under test, so it is asserted on every run.
        if self.distinguishing_count != self.orbit_count * self.aut_order:
            raise AssertionError(
                "regular action violated: "
                f"{self.distinguishing_count} != {self.orbit_count} * {self.aut_order}"
            )
        if self.total_colorings != 1 << self.n:
            raise AssertionError("total colorings must be 2^n")

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "total_colorings": str(self.total_colorings),
            "distinguishing_count": str(self.distinguishing_count),
            "orbit_count": str(self.orbit_count),
            "aut_order": str(self.aut_order),
        }


def _moved(sigma) -> int:
    return sum(1 for i, y in enumerate(sigma) if i != y)


def _mask_images(sigma) -> list[int]:
    return [1 << y for y in sigma]


def _apply(tbl, mask: int) -> int:
    out = 0
    while mask:
        low = mask & -mask
        out |= tbl[low.bit_length() - 1]
        mask ^= low
    return out


def brute_asym(t: Tree, pinned: int | None = None, aut_limit: int = DEFAULT_AUT_LIMIT) -> OrbitReport:
    """Count distinguishing sets and their orbits by full enumeration.

    A subset is distinguishing iff no non-identity automorphism (fixing
    ``pinned`` when given) maps it to itself; a distinguishing subset is an
    orbit representative iff no automorphism maps it to a smaller bit
    pattern. Automorphisms are scanned in ascending order of moved-vertex
    count so that fixed subsets bail out early on small twin swaps.
    """
    if t.n > MAX_ORACLE_VERTICES:
        raise OracleSizeError(f"n = {t.n} exceeds oracle cap {MAX_ORACLE_VERTICES}")
    try:
        auts = list(enumerate_automorphisms(t, limit=aut_limit, pinned=pinned))
    except AutomorphismLimitExceeded as exc:
        raise OracleSizeError(str(exc)) from exc
    auts.sort(key=_moved)
    tables = [_mask_images(s) for s in auts[1:]]

    dist_count = 0
    orbit_count = 0
    reps: list[int] = []
    for mask in range(1 << t.n):
        fixed = False
        for tbl in tables:
            if _apply(tbl, mask) == mask:
                fixed = True
                break
        if fixed:
            continue
        dist_count += 1
        is_rep = True
        for tbl in tables:
            if _apply(tbl, mask) < mask:
                is_rep = False
                break
        if is_rep:
            orbit_count += 1
            reps.append(mask)
    return OrbitReport(
        n=t.n,
        total_colorings=1 << t.n,
        distinguishing_count=dist_count,
        orbit_count=orbit_count,
        aut_order=len(auts),
        orbit_reps=tuple(reps),
    )


def brute_motion(t: Tree, aut_limit: int = DEFAULT_AUT_LIMIT) -> Motion:
    """Minimum moved-vertex count over enumerated non-identity automorphisms."""
    best: int | None = None
    try:
        for sigma in enumerate_automorphisms(t, limit=aut_limit):
            moved = _moved(sigma)
            if moved and (best is None or moved < best):
                best = moved
    except AutomorphismLimitExceeded as exc:
        raise OracleSizeError(str(exc)) from exc
    return ASYMMETRIC if best is None else Motion(best)


def brute_graph_aut(
    adj,
    pinned: int | None = None,
    limit: int = 500_000,
    forced: dict[int, int] | None = None,
) -> list[tuple[int, ...]]:
    """All adjacency-preserving permutations of a connected simple graph.

    Plain degree-pruned backtracking over a BFS vertex order; every mapped
    neighbor of the current vertex is checked against the candidate image.
    ``forced`` optionally pre-pins images of individual vertices.
    """
    n = len(adj)
    if n > 12:
        raise OracleSizeError(f"n = {n} exceeds graph automorphism cap 12")
    adjsets = [set(a) for a in adj]
    deg = [len(a) for a in adj]
    start = pinned if pinned is not None else 0
    order, par = _bfs_order(adj, start)
    if len(order) != n:
        raise ValueError("graph must be connected")
    forced = dict(forced or {})
    if pinned is not None:
        forced[pinned] = pinned

    mapping = [-1] * n
    used = [False] * n
    out: list[tuple[int, ...]] = []

    def consistent(v: int, y: int) -> bool:
        if deg[y] != deg[v]:
            return False
        want = forced.get(v)
        if want is not None and want != y:
            return False
        for z in adj[v]:
            mz = mapping[z]
            if mz >= 0 and mz not in adjsets[y]:
                return False
        return True

    def rec(k: int):
        if k == n:
            out.append(tuple(mapping))
            if len(out) > limit:
                raise AutomorphismLimitExceeded(limit)
            return
        v = order[k]
        pool = range(n) if k == 0 else adj[mapping[par[v]]]
        for y in pool:
            if not used[y] and consistent(v, y):
                mapping[v] = y
                used[y] = True
                rec(k + 1)
                used[y] = False
                mapping[v] = -1

    rec(0)
    return out


def exists_automorphism(adj, pinned: int | None = None, forced: dict[int, int] | None = None) -> bool:
    """Feasibility query: is there any automorphism honoring pins and forces?

    Same search as brute_graph_aut but stops at the first solution, which
    keeps child-orbit checks cheap even for very symmetric inputs.
    """
    n = len(adj)
    adjsets = [set(a) for a in adj]
    deg = [len(a) for a in adj]
    start = pinned if pinned is not None else 0
    order, par = _bfs_order(adj, start)
    if len(order) != n:
        raise ValueError("graph must be connected")
    forced = dict(forced or {})
    if pinned is not None:
        forced[pinned] = pinned

    mapping = [-1] * n
    used = [False] * n

    def rec(k: int) -> bool:
        if k == n:
            return True
        v = order[k]
        pool = range(n) if k == 0 else adj[mapping[par[v]]]
        want = forced.get(v)
        for y in pool:
            if used[y] or deg[y] != deg[v]:
                continue
            if want is not None and want != y:
                continue
            ok = True
            for z in adj[v]:
                mz = mapping[z]
                if mz >= 0 and mz not in adjsets[y]:
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = y
            used[y] = True
            if rec(k + 1):
                return True
            used[y] = False
            mapping[v] = -1
        return False

    return rec(0)


def _bfs_order(adj, start: int):
    n = len(adj)
    order = [start]
    par = [-1] * n
    seen = [False] * n
    seen[start] = True
    head = 0
    while head < len(order):
        u = order[head]
        head += 1
        for v in adj[u]:
            if not seen[v]:
                seen[v] = True
                par[v] = u
                order.append(v)
    return order, par
