from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mfprincipal.errors import InvalidRank
from mfprincipal.rootsys import (
    GroupType,
    build,
    dominant_rep,
    in_root_lattice,
    is_dominant,
    is_restricted,
    orbit,
    pairing,
    weight_to_root_coords,
)

ALL_TYPES = (
    [f"A{n}" for n in range(1, 9)] + [f"B{n}" for n in range(2, 9)]
    + [f"C{n}" for n in range(3, 9)] + [f"D{n}" for n in range(4, 9)]
    + ["E6", "E7", "E8", "F4", "G2"]
)

COXETER = {"E6": 12, "E7": 18, "E8": 30, "F4": 12, "G2": 6}


def _coxeter(name):
    fam, n = name[0], int(name[1:])
    return COXETER.get(name) or {"A": n + 1, "B": 2 * n, "C": 2 * n, "D": 2 * n - 2}[fam]


@pytest.mark.parametrize("name", ALL_TYPES)
def test_structure(name):
    rs = build(name)
    n = rs.rank
    assert all(rs.cartan[i][i] == 2 for i in range(n))
    assert all(rs.cartan[i][j] <= 0 for i in range(n) for j in range(n) if i != j)
    assert rs.coxeter_number == _coxeter(name)
    assert rs.rho == (1,) * n
    top = rs.highest_root
    for a in rs.positive_roots:
        assert all(c >= 0 for c in a)
        assert all(t >= c for t, c in zip(top, a))
    # long roots have squared length 2
    assert max(rs.root_norm(a) for a in rs.positive_roots) == 2


@pytest.mark.parametrize("bad", [("B", 1), ("C", 2), ("D", 3), ("E", 5), ("E", 9), ("F", 3), ("G", 3), ("A", 0), ("X", 2)])
def test_invalid_rank(bad):
    with pytest.raises(InvalidRank):
        GroupType(*bad)


def test_small_cases():
    assert len(build("A", 2).positive_roots) == 3 and build("A2").coxeter_number == 3
    assert len(build("G2").positive_roots) == 6 and build("G2").coxeter_number == 6
    assert len(build("B2").positive_roots) == 4 and build("B2").coxeter_number == 4
    assert build("B2").cartan == ((2, -2), (-1, 2))
    assert build("G2").cartan == ((2, -1), (-3, 2))
    assert str(GroupType.parse("e8")) == "E8"


def test_pairing_and_coords():
    a2 = build("A2")
    assert pairing(a2, (1, 0), (1, 0)) == 1
    assert pairing(a2, (1, 0), (1, 1)) == 1
    assert pairing(a2, (0, 0), (1, 1)) == 0
    with pytest.raises(ValueError):
        pairing(a2, (1, 0), (2, 1))
    assert weight_to_root_coords(a2, (1, 0)) == (Fraction(2, 3), Fraction(1, 3))
    b2 = build("B2")
    assert weight_to_root_coords(b2, (0, 1)) == (Fraction(1, 2), Fraction(1))
    assert not in_root_lattice(b2, (0, 1)) and in_root_lattice(b2, (0, 2))
    assert weight_to_root_coords(b2, b2.simple_roots[0]) == (1, 0)


def test_dominant_rep_and_orbit():
    a2, b2 = build("A2"), build("B2")
    assert dominant_rep(a2, (2, 1)) == ((2, 1), 0)
    assert dominant_rep(a2, a2.reflect((1, 0), 0)) == ((1, 0), 1)
    assert dominant_rep(b2, (-2, 0))[0] == (2, 0)
    assert len(orbit(a2, (1, 0))) == 3
    assert orbit(b2, (1, 0)) == {(1, 0), (-1, 2), (1, -2), (-1, 0)}
    assert orbit(build("E8"), (0,) * 8) == {(0,) * 8}
    for name, order in [("A2", 6), ("B2", 8), ("G2", 12), ("A3", 24), ("B3", 48)]:
        rs = build(name)
        assert len(orbit(rs, rs.rho)) == order


def test_predicates():
    assert is_dominant((0, 3)) and not is_dominant((1, -1))
    assert is_restricted((2, 4), 5) and not is_restricted((5, 0), 5)


def test_principal_grading_is_twice_root_height():
    for name in ALL_TYPES:
        rs = build(name)
        for i in range(rs.rank):
            e = tuple(int(k == i) for k in range(rs.rank))
            assert rs.principal_grading[i] == 2 * sum(weight_to_root_coords(rs, e))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["A3", "B3", "C3", "G2", "F4", "D4"]), st.data())
def test_weyl_invariance(name, data):
    rs = build(name)
    mu = tuple(data.draw(st.lists(st.integers(-4, 4), min_size=rs.rank, max_size=rs.rank)))
    nu = tuple(data.draw(st.lists(st.integers(-4, 4), min_size=rs.rank, max_size=rs.rank)))
    i = data.draw(st.integers(0, rs.rank - 1))
    assert rs.reflect(rs.reflect(mu, i), i) == mu
    assert rs.inner(rs.reflect(mu, i), rs.reflect(nu, i)) == rs.inner(mu, nu)
    dom, _ = dominant_rep(rs, mu)
    assert is_dominant(dom) and mu in orbit(rs, dom)
