"""Tree corpora (random, exhaustive, extremal families) and property suites."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator

import networkx as nx

from .asym import a_values, asym_unrooted, group_order_bound_check
from .autom import aut_order, motion
from .canon import child_classes
from .coloring import (
    OneEndedTruncation,
    construct_distinguishing,
    one_ended_truncation,
    verify_distinguishing,
)
from .trees import Tree, VertexCenter, center, root_at, serialize_edge_list

ALL_TREES_MAX = 12

FAMILIES = ("random-prufer", "all-trees", "kary", "caterpillar", "lobed-extremal", "spider")


@dataclass(frozen=True)
class CorpusSpec:
    """Parameters for one generated family; validated in generate()."""

    family: str
    n: int | None = None
    arity: int | None = None
    m: int | None = None
    count: int | None = None
    seed: int = 0


def tree_from_pruefer(n: int, seq) -> Tree:
    """Decode a Pruefer sequence over 0..n-1 (length n-2) into a labeled tree."""
    if n == 1:
        return Tree.from_edges(1, [])
    if n == 2:
        return Tree.from_edges(2, [(0, 1)])
    seq = list(seq)
    if len(seq) != n - 2 or any(not 0 <= a < n for a in seq):
        raise ValueError("sequence must have length n-2 with entries in 0..n-1")
    deg = [1] * n
    for a in seq:
        deg[a] += 1
    edges = []
    for a in seq:
        for j in range(n):
            if deg[j] == 1:
                edges.append((a, j))
                deg[a] -= 1
                deg[j] -= 1
                break
    u, v = (j for j in range(n) if deg[j] == 1)
    edges.append((u, v))
    return Tree.from_edges(n, edges)


def random_tree(rng: random.Random, n: int) -> Tree:
    if n <= 2:
        return tree_from_pruefer(n, [])
    return tree_from_pruefer(n, [rng.randrange(n) for _ in range(n - 2)])


def all_trees(n: int) -> Iterator[Tree]:
    """Every non-isomorphic free tree of order n, exactly once."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > ALL_TREES_MAX:
        raise ValueError(f"exhaustive enumeration capped at n = {ALL_TREES_MAX}")
    if n == 1:
        yield Tree.from_edges(1, [])
        return
    for g in nx.nonisomorphic_trees(n):
        yield Tree.from_edges(n, list(g.edges()))


def lobed_extremal(m: int) -> Tree:
    """Root with 2^(m/2) hanging paths of order m/2: motion m, max degree 2^(m/2), a = 2."""
    if m < 2 or m % 2 != 0:
        raise ValueError("m must be an even integer >= 2")
    lobes = 1 << (m // 2)
    path_len = m // 2
    edges = []
    nxt = 1
    for _ in range(lobes):
        prev = 0
        for _ in range(path_len):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Tree.from_edges(nxt, edges)


def kary_tree(n: int, arity: int) -> Tree:
    """Complete arity-ary tree on n vertices filled in breadth-first order."""
    if arity < 1:
        raise ValueError("arity must be at least 1")
    edges = [(child, (child - 1) // arity) for child in range(1, n)]
    return Tree.from_edges(n, edges)


def caterpillar(n: int, rng: random.Random) -> Tree:
    """Random caterpillar: a spine with the remaining vertices as random legs."""
    if n <= 2:
        return tree_from_pruefer(n, [])
    spine_len = rng.randint(2, n)
    edges = [(i, i + 1) for i in range(spine_len - 1)]
    for v in range(spine_len, n):
        edges.append((rng.randrange(spine_len), v))
    return Tree.from_edges(n, edges)


def spider(n: int, legs: int) -> Tree:
    """Center vertex with ``legs`` paths of near-equal length, n vertices total."""
    if legs < 1 or n < legs + 1:
        raise ValueError("need n >= legs + 1")
    base, extra = divmod(n - 1, legs)
    edges = []
    nxt = 1
    for i in range(legs):
        length = base + (1 if i < extra else 0)
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Tree.from_edges(n, edges)


def generate(spec: CorpusSpec) -> Iterator[Tree]:
    """Deterministic stream of trees for one family spec."""
    if spec.family not in FAMILIES:
        raise ValueError(f"unknown family {spec.family!r}; expected one of {FAMILIES}")
    if spec.family == "all-trees":
        if spec.n is None:
            raise ValueError("all-trees requires n")
        yield from all_trees(spec.n)
        return
    if spec.family == "lobed-extremal":
        if spec.m is None:
            raise ValueError("lobed-extremal requires m")
        yield lobed_extremal(spec.m)
        return
    if spec.family == "kary":
        if spec.n is None or spec.arity is None:
            raise ValueError("kary requires n and arity")
        yield kary_tree(spec.n, spec.arity)
        return
    if spec.family == "spider":
        if spec.n is None or spec.arity is None:
            raise ValueError("spider requires n and arity")
        yield spider(spec.n, spec.arity)
        return
    if spec.n is None:
        raise ValueError(f"{spec.family} requires n")
    count = spec.count if spec.count is not None else 1
    rng = random.Random(spec.seed)
    for _ in range(count):
        if spec.family == "random-prufer":
            yield random_tree(rng, spec.n)
        else:
            yield caterpillar(spec.n, rng)


@dataclass(frozen=True)
class TreeRecord:
    """Per-tree facts plus the outcome of each applicable check."""

    n: int
    delta: int
    motion: int | str
    aut_order: int
    a: int
    hypothesis: str  # met | not-met | vacuous-asymmetric
    checks: tuple[tuple[str, str], ...]  # (name, pass|fail|skip)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "delta": self.delta,
            "motion": self.motion,
            "aut_order": str(self.aut_order),
            "a": str(self.a),
            "hypothesis": self.hypothesis,
            "checks": {name: outcome for name, outcome in self.checks},
        }


@dataclass
class SuiteReport:
    records: list[TreeRecord] = field(default_factory=list)
    counterexamples: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def counts(self) -> dict:
        out = {"trees": len(self.records), "hypothesis_met": 0, "checks_passed": 0, "checks_failed": 0}
        for rec in self.records:
            if rec.hypothesis == "met":
                out["hypothesis_met"] += 1
            for _, outcome in rec.checks:
                if outcome == "pass":
                    out["checks_passed"] += 1
                elif outcome == "fail":
                    out["checks_failed"] += 1
        return out

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "counts": self.counts(),
            "records": [r.to_json() for r in self.records],
            "counterexamples": self.counterexamples,
        }

    def summary(self) -> str:
        c = self.counts()
        lines = [
            f"trees analyzed:   {c['trees']}",
            f"hypothesis met:   {c['hypothesis_met']}",
            f"checks passed:    {c['checks_passed']}",
            f"checks failed:    {c['checks_failed']}",
        ]
        for ce in self.counterexamples:
            lines.append(f"COUNTEREXAMPLE [{ce['check']}]: {ce['tree']!r}")
        return "\n".join(lines)


def run_theorem_suite(trees: Iterable[Tree]) -> SuiteReport:
    """Check the degree/motion bounds on every tree in the stream.

    With finite motion m and max degree at most 2^(m/2): the tree must be
    2-distinguishable and the constructed coloring must verify; at each
    center root w with deg(w) < 2^(m/2), a(T,w) >= 2 * 2^(m/2). The group
    bound |Aut| * a <= 2^n applies whenever a > 0. Asymmetric trees pass
    the degree hypothesis vacuously and must achieve a = 2^n.
    """
    report = SuiteReport()
    for t in trees:
        mot = motion(t)
        aut = aut_order(t)
        a = asym_unrooted(t)
        checks: list[tuple[str, str]] = []

        def record(name: str, passed: bool):
            checks.append((name, "pass" if passed else "fail"))
            if not passed:
                report.counterexamples.append({"check": name, "tree": serialize_edge_list(t)})

        if mot.is_asymmetric:
            hypothesis = "vacuous-asymmetric"
            record("asymmetric-a-equals-2^n", a == 1 << t.n)
            _check_construct(t, record)
        else:
            m = mot.moved
            threshold = 1 << (m // 2)
            if t.delta <= threshold:
                hypothesis = "met"
                record("two-distinguishable", a > 0)
                _check_construct(t, record)
                c = center(t)
                roots = [c.vertex] if isinstance(c, VertexCenter) else [c.u, c.v]
                for w in roots:
                    if t.degree(w) < threshold:
                        a_w = a_values(root_at(t, w))[w]
                        record("rooted-lower-bound", a_w >= 2 * threshold)
            else:
                hypothesis = "not-met"
                checks.append(("two-distinguishable", "skip"))
        if a > 0:
            record("group-order-bound", group_order_bound_check(t).holds)
            if aut == 1:
                record("group-order-bound-equality", aut * a == 1 << t.n)
        report.records.append(
            TreeRecord(t.n, t.delta, mot.to_json(), aut, a, hypothesis, tuple(checks))
        )
    return report


def _check_construct(t: Tree, record):
    coloring = construct_distinguishing(t)
    record(
        "construct-verifies",
        coloring is not None and verify_distinguishing(t, coloring),
    )


@dataclass(frozen=True)
class ConjectureReport:
    """Local twin condition vs global 2-distinguishability for one tree.

    The local condition: for every vertex w and neighbor x, the similarity
    multiplicity of x among w's neighbors is at most a(T^x). ``consistent``
    means the local condition and a(T) > 0 agree; a mismatch is a research
    finding and is surfaced with a witness.
    """

    consistent: bool
    local_ok: bool
    distinguishable: bool
    violation: tuple[int, int, int, int] | None  # (w, x, mu, a_x)

    def to_json(self) -> dict:
        return {
            "consistent": self.consistent,
            "local_condition": self.local_ok,
            "two_distinguishable": self.distinguishable,
            "violation": list(self.violation) if self.violation else None,
        }


def conjecture_check(t: Tree) -> ConjectureReport:
    violation = None
    for w in range(t.n):
        rt = root_at(t, w)
        vals = a_values(rt)
        for cls in child_classes(rt, w):
            if cls.multiplicity > vals[cls.rep]:
                violation = (w, cls.rep, cls.multiplicity, vals[cls.rep])
                break
        if violation:
            break
    local_ok = violation is None
    dist = asym_unrooted(t) > 0
    return ConjectureReport(local_ok == dist, local_ok, dist, violation)


def random_one_ended_truncation(
    rng: random.Random, max_ray: int = 20, max_lobe: int = 6
) -> tuple[OneEndedTruncation, tuple[bool, ...]]:
    """A seeded truncation satisfying the motion/degree hypothesis, plus ray colors.

    Designs bias toward motion-4 and motion-6 shapes (twin hanging paths of
    order 2 or 3) interleaved with bare stretches; candidates violating
    max-degree <= 2^(motion/2) are rejected and regenerated, so every
    returned truncation satisfies the hypothesis or is asymmetric.
    """
    for _ in range(500):
        ray_len = rng.randint(4, max_ray)
        chain = rng.choice((2, 2, 3))  # twin path order: motion 4 or 6
        max_fams = (max_lobe - 1) // chain
        edges = [(i, i + 1) for i in range(ray_len - 1)]
        nxt = ray_len
        for i in range(1, ray_len):
            if rng.random() < 0.45:
                continue
            fams = rng.randint(1, max(1, max_fams))
            for _ in range(fams):
                prev = i
                for _ in range(chain):
                    edges.append((prev, nxt))
                    prev = nxt
                    nxt += 1
        t = Tree.from_edges(nxt, edges)
        mot = motion(t)
        if not mot.is_asymmetric and t.delta > (1 << (mot.moved // 2)):
            continue
        tr = one_ended_truncation(t, tuple(range(ray_len)))
        colors = tuple(rng.random() < 0.5 for _ in range(ray_len))
        return tr, colors
    raise RuntimeError("could not generate a hypothesis-satisfying truncation")
