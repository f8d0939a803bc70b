import pytest

from arquot.dynkin import FLIP, IDENTITY, coxeter_number, diagram, diagram_automorphism, is_tree
from arquot.errors import InvalidRank, NoSuchAutomorphism


def all_diagrams(max_rank=12):
    out = [diagram("A", n) for n in range(1, max_rank + 1)]
    out += [diagram("D", n) for n in range(4, max_rank + 1)]
    out += [diagram("E", n) for n in (6, 7, 8)]
    return out


def test_a1_is_a_single_vertex():
    d = diagram("A", 1)
    assert list(d.vertices) == [1]
    assert d.edges == frozenset()


def test_d4_edges():
    assert diagram("D", 4).edges == {(1, 2), (2, 3), (2, 4)}


def test_e6_edges():
    assert diagram("E", 6).edges == {(1, 2), (2, 3), (3, 4), (4, 5), (3, 6)}


@pytest.mark.parametrize("family,rank", [("A", 0), ("D", 3), ("D", 2), ("E", 5), ("E", 9), ("B", 3)])
def test_invalid_rank(family, rank):
    with pytest.raises(InvalidRank):
        diagram(family, rank)


@pytest.mark.parametrize("d", all_diagrams(), ids=lambda d: d.name)
def test_tree_and_flip_involution(d):
    assert is_tree(d)
    assert len(d.edges) == d.rank - 1
    try:
        g = diagram_automorphism(d, FLIP)
    except NoSuchAutomorphism:
        assert d.name in ("E7", "E8")
        return
    assert all(g[g[j]] == j for j in d.vertices)
    assert {tuple(sorted((g[a], g[b]))) for a, b in d.edges} == d.edges


def test_flip_examples():
    assert diagram_automorphism(diagram("A", 3), FLIP) == {1: 3, 2: 2, 3: 1}
    assert diagram_automorphism(diagram("D", 5), FLIP) == {1: 1, 2: 2, 3: 3, 4: 5, 5: 4}
    assert diagram_automorphism(diagram("E", 6), FLIP) == {1: 5, 2: 4, 3: 3, 4: 2, 5: 1, 6: 6}
    with pytest.raises(NoSuchAutomorphism):
        diagram_automorphism(diagram("E", 7), FLIP)
    assert diagram_automorphism(diagram("E", 8), IDENTITY) == {j: j for j in range(1, 9)}


def test_coxeter_numbers():
    assert coxeter_number(diagram("A", 5)) == 6
    assert coxeter_number(diagram("D", 4)) == 6
    assert coxeter_number(diagram("E", 8)) == 30
    assert diagram("E", 6).coxeter_number == 12
    assert diagram("E", 7).coxeter_number == 18
