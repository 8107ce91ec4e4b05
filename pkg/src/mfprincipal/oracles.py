"""Closed-form weight-space dimensions and composition factors at rank 2.

These encode known results as independent predictions: dimensions of a few
weight spaces of L(lam) in characteristic p, the B2 Weyl-module alcove
rules, the G2 weight table and the G2 composition-factor criterion.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .errors import NotApplicable
from .jantzen import CompSeries
from .rootsys import GroupType, RootSystem, Weight, build, weight_to_root_coords


# -- subdiagram reduction -------------------------------------------------

@dataclass(frozen=True)
class SubdiagramReduction:
    system: RootSystem
    nodes: tuple[int, ...]  # nodes of the big diagram, in the sub-diagram's Bourbaki order
    lam: Weight
    mu: Weight


def _classify(rs: RootSystem, nodes: list[int]) -> tuple[GroupType, list[int]]:
    """Bourbaki type and node order of a connected sub-diagram (A_n, B2, G2 only)."""
    n = len(nodes)
    cart = rs.cartan
    if n == 1:
        return GroupType("A", 1), nodes
    if n == 2:
        i, j = nodes
        prod = cart[i][j] * cart[j][i]
        long_first = rs.lengths[i] >= rs.lengths[j]
        if prod == 1:
            return GroupType("A", 2), nodes
        if prod == 2:
            return GroupType("B", 2), nodes if long_first else nodes[::-1]
        if prod == 3:
            return GroupType("G", 2), nodes[::-1] if long_first else nodes
        raise NotApplicable("disconnected sub-diagram")
    nbrs = {i: [j for j in nodes if rs.adjacent(i, j)] for i in nodes}
    if any(len(v) > 2 for v in nbrs.values()):
        raise NotApplicable("sub-diagram is not a string")
    if any(cart[i][j] * cart[j][i] != 1 for i in nodes for j in nbrs[i]):
        raise NotApplicable("sub-diagram has a multiple bond")
    ends = [i for i in nodes if len(nbrs[i]) == 1]
    if len(ends) != 2:
        raise NotApplicable("sub-diagram is not connected")
    order = [min(ends)]
    while len(order) < n:
        order.append(next(j for j in nbrs[order[-1]] if j not in order))
    return GroupType("A", n), order


def subdiagram(rs: RootSystem, lam: Iterable[int], mu: Iterable[int]) -> SubdiagramReduction:
    """Transport the weight mu of L(lam) to the Levi subgroup on supp(lam - mu)."""
    lam, mu = tuple(lam), tuple(mu)
    diff = weight_to_root_coords(rs, [a - b for a, b in zip(lam, mu)])
    if any(c.denominator != 1 or c < 0 for c in diff):
        raise NotApplicable("mu is not below lam")
    support = [i for i, c in enumerate(diff) if c]
    if not support:
        raise NotApplicable("mu equals lam")
    t, order = _classify(rs, support)
    sub = build(t)
    lam_s = tuple(lam[i] for i in order)
    coeffs = [int(diff[i]) for i in order]
    mu_s = tuple(
        lam_s[k] - sum(coeffs[m] * sub.cartan[m][k] for m in range(len(order)))
        for k in range(len(order))
    )
    return SubdiagramReduction(sub, tuple(order), lam_s, mu_s)


# -- weight-space dimension oracles ----------------------------------------

def _offset(rs: RootSystem, lam: Weight, mu: Weight) -> tuple[int, ...]:
    return tuple(int(c) for c in weight_to_root_coords(rs, [a - b for a, b in zip(lam, mu)]))


def lambda_minus_ij_dim(long_short_ratio: int, c_long: int, c_short: int, p: int | None) -> int:
    """dim L(lam)_{lam - alpha_i - alpha_j} for adjacent i, j with c_i c_j != 0.

    ``long_short_ratio`` is (alpha_i, alpha_i) / (alpha_j, alpha_j) >= 1; in
    the equal-length case the two coefficients are interchangeable.
    """
    if p is None:
        return 2
    k = long_short_ratio
    if k == 1:
        return 1 if c_long + c_short == p - 1 else 2
    return 1 if (k * c_long + c_short + k) % p == 0 else 2


def rank2_dim_oracles(rs: RootSystem, lam: Iterable[int], mu: Iterable[int], p: int | None) -> int:
    """Predicted dim L(lam)_mu from the closed-form lemmas, or raise NotApplicable.

    ``p=None`` means characteristic zero.
    """
    lam, mu = tuple(lam), tuple(mu)
    red = subdiagram(rs, lam, mu)
    sub, sl = red.system, red.lam
    off = _offset(sub, sl, red.mu)
    t = sub.group_type
    if t.rank == 2 and off == (1, 1) and sl[0] and sl[1]:
        ratio = {"A": 1, "B": 2, "G": 3}[t.family]
        if t.family == "G":
            return lambda_minus_ij_dim(ratio, sl[1], sl[0], p)
        return lambda_minus_ij_dim(ratio, sl[0], sl[1], p)
    if t.family == "A" and all(c == 1 for c in off):
        nz = [k for k, c in enumerate(sl) if c]
        if len(nz) == 2:
            i, j = nz
            if p is None or (sl[i] + sl[j] + j - i) % p:
                return j - i + 1
            return j - i
    if t.family == "G":
        a, b = sl
        if off == (2, 1) and b >= 1:
            if a == 1:
                if p is None:
                    return 2
                return 1 if (3 * b + 4) % p == 0 else 2
            if a >= 2:
                if p is None:
                    return 3
                if (a + 3 * b + 3) % p == 0 or (2 * a + 3 * b + 4) % p == 0:
                    return 2
                return 3
        if off == (1, 2) and a >= 1 and b >= 2:
            if p is None:
                return 2
            return 1 if (a + 3 * b + 3) % p == 0 else 2
    raise NotApplicable(f"no closed form for {lam} - {off} in {t}")


# -- B2 Weyl modules ---------------------------------------------------------

def b2_alcove(a: int, b: int, p: int) -> str:
    if b == p - 1 and 2 * a + (p - 1) + 3 > 2 * p and a < p - 1:
        return "wall"
    if 2 * a + b + 3 < p:
        return "C0"
    if a + b + 2 < p < 2 * a + b + 3:
        return "C1"
    if b + 1 < p < a + b + 2 and 2 * a + b + 3 < 2 * p:
        return "C2"
    if 2 * a + b + 3 > 2 * p and max(a + 1, b + 1) < p:
        return "C3"
    return "none"


def b2_weyl_factors(a: int, b: int, p: int) -> CompSeries:
    """Composition factors of the B2 Weyl module Delta(a, b) for p-restricted (a, b)."""
    lam = (a, b)
    second = {
        "C1": (p - a - b - 3, b),
        "C2": (a, 2 * p - 2 * a - b - 4),
        "C3": (2 * p - a - b - 3, b),
        "wall": (p - a - 2, p - 1),
    }.get(b2_alcove(a, b, p))
    factors = {lam: 1}
    if second is not None:
        factors[second] = 1
    return CompSeries(lam, p, factors)


# -- G2 weight table and composition-factor filter ---------------------------

def _delta(x: int, y: int) -> int:
    return int(x == y)


@dataclass(frozen=True)
class G2Row:
    applies: Callable[[int, int], bool]
    offset: tuple[int, int]  # nu = lam - offset[0] alpha_1 - offset[1] alpha_2
    weyl_mult: Callable[[int, int], int]
    seitz_value: Callable[[int, int], Fraction]
    label: str


G2_TABLE = (
    G2Row(lambda a, b: a >= 1 and b >= 1, (2, 1), lambda a, b: 3 - _delta(a, 1),
          lambda a, b: Fraction(2 * a + 3 * b + 4, 3), "a>=1, b>=1"),
    G2Row(lambda a, b: a >= 1 and b >= 2, (1, 2), lambda a, b: 2,
          lambda a, b: Fraction(a + 6 * b, 3), "a>=1, b>=2"),
    G2Row(lambda a, b: a >= 1 and b >= 1, (2, 2), lambda a, b: 4 - _delta(a, 1) - _delta(b, 1),
          lambda a, b: Fraction(2 * a + 6 * b + 4, 3), "a>=1, b>=1"),
    G2Row(lambda a, b: a == 0 and b >= 2, (2, 2), lambda a, b: 2,
          lambda a, b: Fraction(6 * b + 4, 3), "a=0, b>=2"),
    G2Row(lambda a, b: a >= 1 and b >= 2, (1, 3), lambda a, b: 2 - _delta(b, 2),
          lambda a, b: Fraction(a + 9 * b - 9, 3), "a>=1, b>=2"),
    G2Row(lambda a, b: a >= 1 and b >= 2, (3, 2), lambda a, b: 7 - 2 * _delta(a, 1) - _delta(a, 2),
          lambda a, b: Fraction(a + 2 * b + 2), "a>=1, b>=2"),
    G2Row(lambda a, b: a >= 1 and b >= 3, (2, 3), lambda a, b: 4 - _delta(a, 1),
          lambda a, b: Fraction(2 * a + 9 * b - 2, 3), "a>=1, b>=3"),
    G2Row(lambda a, b: a == 1 and b >= 3, (1, 4), lambda a, b: 2 - _delta(b, 3),
          lambda a, b: Fraction(a + 12 * b - 24, 3), "a=1, b>=3"),
)

# The G2 criterion is stated with (alpha_2, alpha_2) = 1; our global form has
# long roots of squared length 2.
SEITZ_SCALE = Fraction(1, 2)


def seitz_quantity(a: int, b: int, nu_offset: tuple[int, int], scale: Fraction = SEITZ_SCALE) -> Fraction:
    """2(lam+rho, lam-nu) - (lam-nu, lam-nu) for G2, lam = (a, b)."""
    rs = build("G2")
    diff = rs.root_to_weight(nu_offset)
    lam_rho = (a + 1, b + 1)
    return scale * (2 * rs.inner(lam_rho, diff) - rs.inner(diff, diff))


def seitz_filter_g2(a: int, b: int, nu_offset: tuple[int, int], p: int) -> bool:
    """False when L(lam - nu_offset) cannot be a composition factor of Delta(a, b)."""
    if p <= 3:
        raise ValueError("the G2 criterion needs p > 3")
    q = seitz_quantity(a, b, nu_offset) * 6 / p
    return q.denominator == 1
