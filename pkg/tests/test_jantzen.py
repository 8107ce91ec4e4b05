import itertools
import random

import pytest

from mfprincipal.charalg import freudenthal
from mfprincipal.errors import Inconclusive, NotDominant
from mfprincipal.jantzen import (
    dot_reflect,
    irr_character,
    is_weyl_irreducible,
    jsf_lower_bound,
    jsf_sum,
    p_valuation,
    simple_solve,
)
from mfprincipal.principal import restrict_weight
from mfprincipal.rootsys import build


def test_p_valuation():
    assert p_valuation(9, 3) == 2 and p_valuation(10, 3) == 0 and p_valuation(50, 5) == 2


def test_dot_reflect():
    a2 = build("A2")
    assert dot_reflect(a2, (2, 1)) == (1, (2, 1))
    assert dot_reflect(a2, (-1, 0)) == (0, None)
    assert dot_reflect(a2, (-1, 5)) == (0, None)
    assert dot_reflect(a2, (-5, 6)) == (-1, (3, 2))  # s_1 . (3,2)


def test_jsf_examples():
    a2, b2 = build("A2"), build("B2")
    assert jsf_sum(a2, (1, 1), 3).terms == {(0, 0): 1}
    for p in (7, 11, 13):
        for a, b in itertools.product(range(p), repeat=2):
            if a + b + 2 < p < 2 * a + b + 3:
                assert jsf_sum(b2, (a, b), p).terms == {(p - a - b - 3, b): 1}
    with pytest.raises(NotDominant):
        jsf_sum(a2, (-1, 0), 3)


def test_weyl_irreducibility():
    b2 = build("B2")
    for p in (5, 7, 11):
        assert all(is_weyl_irreducible(b2, (0, c), p) for c in range(p))
        assert not is_weyl_irreducible(b2, (1, p - 2), p)


def test_r_below_p_is_irreducible():
    rng = random.Random(1)
    names = ["A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4"]
    primes = [p for p in range(2, 400) if all(p % q for q in range(2, p))]
    checked = 0
    while checked < 100:
        rs = build(rng.choice(names))
        lam = tuple(rng.randint(0, 4) for _ in range(rs.rank))
        r = restrict_weight(rs, lam)
        bigger = [p for p in primes if p > r]
        if not bigger:
            continue
        assert is_weyl_irreducible(rs, lam, rng.choice(bigger[:5]))
        checked += 1


def test_simple_solve_examples():
    a2, b2 = build("A2"), build("B2")
    for p in (5, 7, 11):
        for a in range(p - 1):
            b = p - 1 - a
            if a > 0 and b > 0:
                assert dict(simple_solve(a2, (a, b), p).factors) == {(a, b): 1, (a - 1, b - 1): 1}
        for a in range(p - 1):
            if 2 * a + p + 2 > 2 * p:
                fac = dict(simple_solve(b2, (a, p - 1), p).factors)
                assert fac == {(a, p - 1): 1, (p - a - 2, p - 1): 1}
    assert simple_solve(a2, (1, 0), 5).irreducible


def test_irr_character_examples():
    a2, b2 = build("A2"), build("B2")
    ch = irr_character(a2, (1, 1), 3)
    assert ch.dim() == 7 and ch.mult((0, 0)) == 1
    assert irr_character(b2, (2, 0), 5).dim() == 13
    assert irr_character(a2, (2, 1), 11) == freudenthal(a2, (2, 1))


def test_inconclusive_is_reported():
    g2 = build("G2")
    with pytest.raises(Inconclusive):
        simple_solve(g2, (3, 3), 7)


def test_lower_bound_is_below_known_characters():
    for name, p in [("A2", 5), ("B2", 7), ("G2", 7), ("A3", 5)]:
        rs = build(name)
        for lam in itertools.product(range(p), repeat=rs.rank):
            if sum(lam) > 8:
                continue
            low = jsf_lower_bound(rs, lam, p)
            try:
                ch = irr_character(rs, lam, p)
            except Inconclusive:
                continue
            assert all(ch.mult(mu) >= m for mu, m in low.mults.items())
            assert low.mult(lam) == 1
