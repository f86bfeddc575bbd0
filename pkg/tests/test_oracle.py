import pytest

from treesym import (
    Motion,
    OracleSizeError,
    Tree,
    brute_asym,
    brute_graph_aut,
    brute_motion,
    enumerate_automorphisms,
    exists_automorphism,
)
from treesym.oracle import OrbitReport

from .conftest import trees_up_to


def test_brute_asym_k1(k1):
    rep = brute_asym(k1)
    assert (rep.total_colorings, rep.distinguishing_count, rep.orbit_count, rep.aut_order) == (
        2, 2, 2, 1,
    )


def test_brute_asym_p3(p3):
    rep = brute_asym(p3)
    assert (rep.total_colorings, rep.distinguishing_count, rep.orbit_count, rep.aut_order) == (
        8, 4, 2, 2,
    )


def test_brute_asym_k13(k13):
    rep = brute_asym(k13)
    assert rep.distinguishing_count == 0
    assert rep.orbit_count == 0
    assert rep.aut_order == 6


def test_orbit_reps_are_distinguishing_minima(p4):
    rep = brute_asym(p4)
    auts = list(enumerate_automorphisms(p4))
    for mask in rep.orbit_reps:
        images = {sum(1 << s[v] for v in range(p4.n) if mask >> v & 1) for s in auts}
        assert min(images) == mask


def test_regular_action_asserted():
    with pytest.raises(AssertionError):
        OrbitReport(2, 4, distinguishing_count=3, orbit_count=1, aut_order=2, orbit_reps=())


def test_brute_motion_examples(p3, p4, asym7):
    assert brute_motion(p3) == Motion(2)
    assert brute_motion(p4) == Motion(4)
    assert brute_motion(asym7).is_asymmetric


def test_size_cap():
    big = Tree.from_edges(17, [(i, i + 1) for i in range(16)])
    with pytest.raises(OracleSizeError):
        brute_asym(big)


def test_brute_graph_aut_examples(k1, p3):
    square = [(0, 1), (1, 2), (2, 3), (3, 0)]
    adj = [[] for _ in range(4)]
    for u, v in square:
        adj[u].append(v)
        adj[v].append(u)
    assert len(brute_graph_aut(adj)) == 8
    assert brute_graph_aut(k1.adj) == [(0,)]
    assert len(brute_graph_aut(p3.adj)) == 2


def test_brute_graph_aut_pinned_and_forced(p3):
    assert len(brute_graph_aut(p3.adj, pinned=0)) == 2
    assert len(brute_graph_aut(p3.adj, pinned=1)) == 1
    assert exists_automorphism(p3.adj, pinned=0, forced={1: 2})
    assert not exists_automorphism(p3.adj, forced={0: 1})


def test_graph_aut_matches_tree_enumeration():
    for t in trees_up_to(7):
        assert set(brute_graph_aut(t.adj)) == set(enumerate_automorphisms(t))
        for w in range(t.n):
            assert set(brute_graph_aut(t.adj, pinned=w)) == set(
                enumerate_automorphisms(t, pinned=w)
            )


def test_graph_aut_size_cap():
    adj = [[j for j in range(13) if j != i] for i in range(13)]
    with pytest.raises(OracleSizeError):
        brute_graph_aut(adj)
