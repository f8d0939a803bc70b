import pytest

from arquot.errors import HypothesisViolated, RankTooSmall
from arquot.theorems import (
    corollary_params,
    search_quotients,
    verify_theorem_A,
    verify_theorem_D,
    verify_theorem_E,
)


def test_a_example():
    r = verify_theorem_A(3, 1, 1, 5)
    assert r.isomorphic and r.quotient_vertices == 4 and r.tau_stable
    assert r.deletion_rows == [1, 2, 4, 5]
    assert all(ok for _, ok in r.checklist)


def test_a_degenerate_same_category():
    r = verify_theorem_A(2, 2, 3, 3, check_hom=True)
    assert r.deleted_vertices == [] and r.iso_witness == tuple(range(r.quotient_vertices))
    assert r.hom_checked is True


def test_a_parity_violation():
    with pytest.raises(HypothesisViolated) as info:
        verify_theorem_A(3, 2, 1, 5)
    assert "mod 2" in info.value.name


def test_a_arithmetic_violation():
    with pytest.raises(HypothesisViolated):
        verify_theorem_A(3, 1, 1, 6)


@pytest.mark.parametrize("params", [(3, 1, 4, 10), (4, 2, 4, 7)])
def test_d_examples(params):
    r = verify_theorem_D(*params)
    assert r.isomorphic and r.open_question is None


def test_d_rank_too_small():
    with pytest.raises(RankTooSmall):
        verify_theorem_D(1, 1, 3, 3)


def test_d_boundary_probe():
    r = verify_theorem_D(2, 1, 5, 9)
    assert not r.isomorphic
    assert r.exceptional_orbits == {"quotient": [18], "target": [9, 9]}
    assert r.open_question
    assert all(ok for _, ok in r.hypotheses)


def test_e_requires_even_u():
    with pytest.raises(HypothesisViolated):
        verify_theorem_E("E6_from_E8", 5, 2)


def test_e_rejects_unknown_case():
    with pytest.raises(ValueError):
        verify_theorem_E("E5_from_E6", 2, 2)


def test_corollary_params():
    assert corollary_params("A", 3, 1) == (1, 5)
    assert corollary_params("A", 2, 7) == (2, 7)
    assert corollary_params("D", 4, 4) == (2, 7)
    with pytest.raises(RankTooSmall):
        corollary_params("D", 3, 3)


def test_search_rediscovers_a_deletion():
    found = search_quotients(("A", 5, 1), ("A", 1, 3))
    assert any(w.rows == (1, 2, 4, 5) for w in found)


def test_search_identity():
    found = search_quotients(("D", 4, 1), ("D", 4, 1))
    assert found and found[0].orbits == () and found[0].deleted_vertices == 0


def test_search_mixed_type():
    # removing both exceptional rows of ZD_5 leaves ZA_3 with the doubled period
    found = search_quotients(("D", 5, 1), ("A", 3, 2))
    assert found and all(set(w.rows) == {4, 5} for w in found)
