import pytest

from arquot.dynkin import diagram
from arquot.errors import DiagramMismatch, NotAnAutomorphism
from arquot.ztrans import (
    AffineAutomorphism,
    ZVertex,
    compose,
    identity,
    mesh_property_holds,
    phi,
    power,
    sigma,
    tau,
    tau_automorphism,
    tau_inverse,
    tau_inverse_automorphism,
    tau_power,
    zd_arrows_in,
    zd_arrows_out,
)
from test_dynkin import all_diagrams


def test_arrow_examples():
    a2, d4 = diagram("A", 2), diagram("D", 4)
    assert zd_arrows_out(a2, (0, 1)) == [(0, 2)]
    assert zd_arrows_out(a2, (0, 2)) == [(1, 1)]
    assert zd_arrows_out(d4, (0, 2)) == [(0, 3), (0, 4), (1, 1)]
    assert zd_arrows_out(d4, (0, 3)) == [(1, 2)]
    assert zd_arrows_in(d4, (1, 2)) == [(0, 3), (0, 4), (1, 1)]


def test_tau():
    v = ZVertex(0, 3)
    assert tau_inverse(v) == (1, 3)
    assert tau(tau_inverse(v)) == v
    d = diagram("A", 4)
    assert tau_automorphism(d).shift == (-1,) * 4
    assert compose(tau_automorphism(d), tau_inverse_automorphism(d)) == identity(d)


@pytest.mark.parametrize("d", all_diagrams(), ids=lambda d: d.name)
def test_mesh_property_of_zd(d):
    assert mesh_property_holds(d, range(-d.coxeter_number, d.coxeter_number + 1))


@pytest.mark.parametrize("d", all_diagrams(), ids=lambda d: d.name)
def test_sigma_squared_is_tau_minus_h(d):
    s = sigma(d)
    assert power(s, 2) == tau_power(d, -d.coxeter_number)
    assert compose(s, tau_automorphism(d)) == compose(tau_automorphism(d), s)


def test_sigma_formulas():
    for n in range(1, 9):
        d = diagram("A", n)
        assert sigma(d).shift == tuple(range(1, n + 1))
        assert sigma(d).g == tuple(range(n, 0, -1))
    assert sigma(diagram("A", 2))((0, 1)) == (1, 2)
    assert sigma(diagram("D", 4))((0, 3)) == (3, 3)
    assert sigma(diagram("D", 5)).g == (1, 2, 3, 5, 4)
    assert sigma(diagram("E", 7)) == tau_power(diagram("E", 7), -9)
    assert sigma(diagram("E", 8)) == tau_power(diagram("E", 8), -15)
    e6 = sigma(diagram("E", 6))
    assert e6.g == (5, 4, 3, 2, 1, 6)
    assert e6.s(3) == e6.s(6) == 6


def test_constant_shift_flip_is_rejected_on_e6():
    d = diagram("E", 6)
    with pytest.raises(NotAnAutomorphism):
        AffineAutomorphism(d, (5, 4, 3, 2, 1, 6), (6,) * 6)


def test_power_and_phi():
    a5 = diagram("A", 5)
    assert power(sigma(a5), 0) == identity(a5)
    assert power(sigma(a5), 2) == tau_power(a5, -6)
    f = phi(a5, 1)
    assert f.g == (5, 4, 3, 2, 1) and f.shift == (2, 3, 4, 5, 6)
    assert power(f, 2) == tau_power(a5, -8)
    assert phi(diagram("E", 8), 2) == tau_power(diagram("E", 8), -31)
    assert phi(diagram("D", 6), 3) == tau_power(diagram("D", 6), -16)


@pytest.mark.parametrize("d", all_diagrams(), ids=lambda d: d.name)
def test_phi_is_rightward(d):
    for u in range(1, 7):
        assert min(phi(d, u).shift) >= 1


def test_compose_mismatch():
    with pytest.raises(DiagramMismatch):
        compose(sigma(diagram("A", 2)), sigma(diagram("A", 3)))


def test_inverse():
    f = phi(diagram("E", 6), 1)
    assert compose(f, f.inverse()) == identity(f.diagram)
