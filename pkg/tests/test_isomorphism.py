from hypothesis import given, settings
from hypothesis import strategies as st

from arquot.dynkin import diagram
from arquot.isomorphism import check_isomorphism, is_isomorphic
from arquot.tquiver import delete_tau_stable, orbit_quiver, relabel
from arquot.ztrans import phi, tau_power


def oq(family, rank, u):
    d = diagram(family, rank)
    return orbit_quiver(d, phi(d, u), level=u)


def test_reflexive_gives_identity():
    q = oq("D", 5, 1)
    assert is_isomorphic(q, q) == tuple(range(q.n))


def test_d5_levels_differ():
    assert is_isomorphic(oq("D", 5, 1), oq("D", 5, 2)) is None


def test_same_size_different_structure():
    # both have 15 vertices
    a = oq("A", 3, 2)
    d = diagram("A", 1)
    b = orbit_quiver(d, tau_power(d, -15))
    assert a.n == b.n == 15
    assert is_isomorphic(a, b) is None


def test_deletion_matches_smaller_cluster_quiver():
    q = oq("A", 5, 1)
    r = delete_tau_stable(q, q.vertices_in_rows([1, 2, 4, 5]))
    f = is_isomorphic(r, oq("A", 1, 3))
    assert f is not None and check_isomorphism(r, oq("A", 1, 3), f)


def test_check_rejects_non_witness():
    q = oq("D", 4, 1)
    # row 1 and row 2 vertices have different degrees
    assert len(q.out_neighbors[0]) != len(q.out_neighbors[1])
    swap = (1, 0) + tuple(range(2, q.n))
    assert not check_isomorphism(q, q, swap)


@settings(max_examples=25, deadline=None)
@given(
    st.sampled_from([("A", 4, 1), ("A", 3, 2), ("D", 4, 1), ("D", 5, 1), ("E", 6, 1)]),
    st.randoms(use_true_random=False),
)
def test_relabelling_invariance_and_symmetry(key, rnd):
    q = oq(*key)
    perm = list(range(q.n))
    rnd.shuffle(perm)
    p = relabel(q, perm)
    f = is_isomorphic(q, p)
    assert f is not None and check_isomorphism(q, p, f)
    g = is_isomorphic(p, q)
    assert g is not None and check_isomorphism(p, q, g)
