import pytest
from hypothesis import strategies as st

from treesym import Tree, all_trees, tree_from_pruefer

# named fixtures for the small trees every module's examples use


@pytest.fixture
def k1():
    return Tree.from_edges(1, [])


@pytest.fixture
def k2():
    return Tree.from_edges(2, [(0, 1)])


@pytest.fixture
def p3():
    # center at 0
    return Tree.from_edges(3, [(0, 1), (0, 2)])


@pytest.fixture
def p3_path():
    # path labeling 0-1-2, center at 1
    return Tree.from_edges(3, [(0, 1), (1, 2)])


@pytest.fixture
def p4():
    return Tree.from_edges(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def p6():
    return Tree.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)])


@pytest.fixture
def k13():
    return Tree.from_edges(4, [(0, 1), (0, 2), (0, 3)])


@pytest.fixture
def k14():
    return Tree.from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)])


@pytest.fixture
def asym7():
    # the smallest asymmetric tree
    return Tree.from_edges(7, [(0, 1), (1, 2), (2, 3), (2, 4), (4, 5), (5, 6)])


def path(n: int) -> Tree:
    return Tree.from_edges(n, [(i, i + 1) for i in range(n - 1)])


_CORPUS_CACHE: dict[int, list[Tree]] = {}


def trees_up_to(max_n: int) -> list[Tree]:
    out = []
    for n in range(1, max_n + 1):
        if n not in _CORPUS_CACHE:
            _CORPUS_CACHE[n] = list(all_trees(n))
        out.extend(_CORPUS_CACHE[n])
    return out


@st.composite
def random_trees(draw, min_n: int = 1, max_n: int = 10):
    n = draw(st.integers(min_n, max_n))
    if n <= 2:
        return path(n)
    seq = draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
    return tree_from_pruefer(n, seq)


@st.composite
def trees_with_permutation(draw, min_n: int = 1, max_n: int = 10):
    t = draw(random_trees(min_n, max_n))
    perm = draw(st.permutations(list(range(t.n))))
    return t, list(perm)
