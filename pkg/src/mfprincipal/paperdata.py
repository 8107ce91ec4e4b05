"""Stored classification data and the final MF decision procedure.

The stored classification lists the dominant weights (up to graph automorphism) whose
characteristic-zero restriction to the principal A1 is multiplicity free.
The decision for p-restricted weights in characteristic p reduces to it,
with two small-prime exceptions; arbitrary weights are handled layer by
layer through Steinberg's tensor product theorem.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import permutations
from typing import Callable, Iterable, Mapping

from . import a1mod
from .charalg import _require_dominant
from .errors import NotRestricted, PBelowCoxeter, SeparationViolated
from .oracles import (  # re-exported rank-2 oracles
    G2_TABLE,
    G2Row,
    b2_weyl_factors,
    rank2_dim_oracles,
    seitz_filter_g2,
    seitz_quantity,
)
from .principal import Verdict, char0_factors, p_adic_layers, restrict_weight
from .rootsys import GroupType, RootSystem, Weight, is_restricted

__all__ = [
    "TABLE1", "Table1Entry", "table1_contains", "char0_mf", "theorem_verdict",
    "corollary_verdict", "tensor_split_mf", "table2_closed_form", "G2_TABLE", "G2Row",
    "b2_weyl_factors", "rank2_dim_oracles", "seitz_filter_g2", "seitz_quantity",
]


# -- characteristic-zero classification --

@dataclass(frozen=True)
class Table1Entry:
    """A family/rank constraint and a weight pattern.

    ``pattern`` maps 1-based nodes (``"l"`` for the last node) to a fixed
    coefficient or to a parameter range ``(lo, hi)`` (``hi=None`` unbounded).
    """

    family: str
    label: str
    pattern: tuple[tuple[object, object], ...]
    rank_ok: Callable[[int], bool] = lambda ell: True

    def nodes(self, ell: int) -> dict[int, object]:
        return {(ell if k == "l" else k) - 1: v for k, v in self.pattern}

    def matches(self, t: GroupType, lam: Weight) -> bool:
        if t.family != self.family or not self.rank_ok(t.rank):
            return False
        want = self.nodes(t.rank)
        if len(want) != len(self.pattern):  # e.g. w1 + wl collapsing when l = 1
            return False
        for i, c in enumerate(lam):
            spec = want.get(i, 0)
            if isinstance(spec, tuple):
                lo, hi = spec
                if c < lo or (hi is not None and c > hi):
                    return False
            elif c != spec:
                return False
        return True


def _E(fam, label, pattern, rank_ok=lambda ell: True):
    return Table1Entry(fam, label, tuple(pattern.items()), rank_ok)


TABLE1: tuple[Table1Entry, ...] = (
    _E("A", "ω1", {1: 1}),
    _E("A", "ω2", {2: 1}, lambda l: l >= 2),
    _E("A", "2ω1", {1: 2}),
    _E("A", "ω1+ωℓ", {1: 1, "l": 1}, lambda l: l >= 2),
    _E("A", "ω3 (5≤ℓ≤7)", {3: 1}, lambda l: 5 <= l <= 7),
    _E("A", "3ω1 (ℓ≤5)", {1: 3}, lambda l: l <= 5),
    _E("A", "4ω1 (ℓ≤3)", {1: 4}, lambda l: l <= 3),
    _E("A", "5ω1 (ℓ≤3)", {1: 5}, lambda l: l <= 3),
    _E("A", "110 (A3)", {1: 1, 2: 1}, lambda l: l == 3),
    _E("A", "c1 (A2)", {1: (0, None), 2: 1}, lambda l: l == 2),
    _E("A", "c0 (A2)", {1: (1, None)}, lambda l: l == 2),
    _E("B", "ω1", {1: 1}),
    _E("B", "ω2", {2: 1}, lambda l: l >= 3),
    _E("B", "2ω1", {1: 2}),
    _E("B", "ωℓ (ℓ≤8)", {"l": 1}, lambda l: l <= 8),
    _E("B", "101 (B3)", {1: 1, 3: 1}, lambda l: l == 3),
    _E("B", "002 (B3)", {3: 2}, lambda l: l == 3),
    _E("B", "300 (B3)", {1: 3}, lambda l: l == 3),
    _E("B", "b0 (B2, 1≤b≤5)", {1: (1, 5)}, lambda l: l == 2),
    _E("B", "0b (B2, 1≤b≤5)", {2: (1, 5)}, lambda l: l == 2),
    _E("B", "11 (B2)", {1: 1, 2: 1}, lambda l: l == 2),
    _E("B", "12 (B2)", {1: 1, 2: 2}, lambda l: l == 2),
    _E("B", "21 (B2)", {1: 2, 2: 1}, lambda l: l == 2),
    _E("C", "ω1", {1: 1}),
    _E("C", "ω2", {2: 1}),
    _E("C", "2ω1", {1: 2}),
    _E("C", "ω3 (3≤ℓ≤5)", {3: 1}, lambda l: 3 <= l <= 5),
    _E("C", "ωℓ (ℓ=4,5)", {"l": 1}, lambda l: l in (4, 5)),
    _E("C", "300 (C3)", {1: 3}, lambda l: l == 3),
    _E("D", "ω1", {1: 1}),
    _E("D", "ω2 (ℓ odd)", {2: 1}, lambda l: l % 2 == 1),
    _E("D", "2ω1 (ℓ even)", {1: 2}, lambda l: l % 2 == 0),
    _E("D", "ωℓ (ℓ≤9)", {"l": 1}, lambda l: l <= 9),
    _E("E", "ω1 (E6)", {1: 1}, lambda l: l == 6),
    _E("E", "ω2 (E6)", {2: 1}, lambda l: l == 6),
    _E("E", "ω1 (E7)", {1: 1}, lambda l: l == 7),
    _E("E", "ω7 (E7)", {7: 1}, lambda l: l == 7),
    _E("E", "ω8 (E8)", {8: 1}, lambda l: l == 8),
    _E("F", "ω1", {1: 1}),
    _E("F", "ω4", {4: 1}),
    _E("G", "10", {1: 1}),
    _E("G", "01", {2: 1}),
    _E("G", "11", {1: 1, 2: 1}),
    _E("G", "20", {1: 2}),
    _E("G", "02", {2: 2}),
    _E("G", "30", {1: 3}),
)


def graph_automorphisms(t: GroupType) -> list[tuple[int, ...]]:
    """Node permutations (0-based) of the Dynkin diagram."""
    n = t.rank
    ident = tuple(range(n))
    if t.family == "A" and n >= 2:
        return [ident, ident[::-1]]
    if t.family == "D":
        if n == 4:
            out = []
            for perm in permutations((0, 2, 3)):
                m = list(ident)
                for src, dst in zip((0, 2, 3), perm):
                    m[src] = dst
                out.append(tuple(m))
            return out
        swap = list(ident)
        swap[n - 2], swap[n - 1] = n - 1, n - 2
        return [ident, tuple(swap)]
    if t.family == "E" and n == 6:
        return [ident, (5, 1, 4, 3, 2, 0)]
    return [ident]


def table1_contains(rs: RootSystem, lam: Iterable[int]) -> bool:
    """Membership in the stored classification, up to graph automorphisms."""
    lam = _require_dominant(lam)
    t = rs.group_type
    images = {tuple(lam[perm[i]] for i in range(len(lam))) for perm in graph_automorphisms(t)}
    return any(e.matches(t, mu) for e in TABLE1 for mu in images)


# -- principal grading closed forms --

_EXCEPTIONAL_R = {
    ("G", 2): (6, 10),
    ("F", 4): (22, 42, 30, 16),
    ("E", 6): (16, 22, 30, 42, 30, 16),
    ("E", 7): (34, 49, 66, 96, 75, 52, 27),
    ("E", 8): (92, 136, 182, 270, 220, 168, 114, 58),
}


def table2_coefficients(t: GroupType) -> tuple[int, ...]:
    """Coefficients of c_i in the closed form for r = lam restricted to T_A."""
    fam, l = t.family, t.rank
    if (fam, l) in _EXCEPTIONAL_R:
        return _EXCEPTIONAL_R[(fam, l)]
    idx = range(1, l + 1)
    if fam == "A":
        return tuple(i * (l + 1 - i) for i in idx)
    if fam == "B":
        return tuple(i * (2 * l + 1 - i) for i in range(1, l)) + (l * (l + 1) // 2,)
    if fam == "C":
        return tuple(i * (2 * l - i) for i in idx)
    if fam == "D":
        half = l * (l - 1) // 2
        return tuple(i * (2 * l - 1 - i) for i in range(1, l - 1)) + (half, half)
    raise ValueError(f"no closed form for {t}")


def table2_closed_form(t: GroupType, lam: Iterable[int]) -> int:
    return sum(k * c for k, c in zip(table2_coefficients(t), lam))


# -- characteristic zero -------------------------------------------------------

def char0_mf(rs: RootSystem, lam: Iterable[int], method: str = "product") -> bool:
    """Whether Delta_K(lam) restricted to A_K is multiplicity free.

    ``method="product"`` reads n_d off the principal specialization of the
    Weyl character; ``"freudenthal"`` projects the Freudenthal multiplicities.
    """
    lam = _require_dominant(lam)
    if method == "product":
        return all(m <= 1 for m in char0_factors(rs, lam).values())
    if method == "freudenthal":
        from .charalg import freudenthal
        from .principal import project

        n = project(rs, freudenthal(rs, lam)).n_sequence(restrict_weight(rs, lam))
        return all(n[d] - (n[d - 1] if d else 0) <= 1 for d in range(len(n) // 2 + 1))
    raise ValueError(f"unknown method {method!r}")


# -- the decision procedure -------------------------------------------------

_EXCEPTIONS = {
    (GroupType("A", 2), (1, 1), 3): ("ii", (4, 2)),
    (GroupType("B", 2), (2, 0), 5): ("iii", (8, 4)),
}


def _check_p(rs: RootSystem, p: int) -> None:
    if p < rs.coxeter_number:
        raise PBelowCoxeter(f"p={p} is below the Coxeter number {rs.coxeter_number} of {rs.group_type}")


def _restricted_layer(rs: RootSystem, lam: Weight, p: int) -> tuple[str, tuple[int, ...] | None]:
    """(branch, factors) for a p-restricted weight; factors None when not MF."""
    if not any(lam):
        return "i", (0,)
    exc = _EXCEPTIONS.get((rs.group_type, lam, p))
    if exc:
        return exc
    if p > restrict_weight(rs, lam):
        factors = char0_factors(rs, lam)
        if a1mod.is_mf(factors):
            return "i", tuple(a1mod.sorted_factors(factors))
    return "none", None


def theorem_verdict(rs: RootSystem, lam: Iterable[int], p: int) -> Verdict:
    """MF iff p > r with an MF characteristic-zero restriction, or one of two exceptions."""
    lam = _require_dominant(lam)
    _check_p(rs, p)
    if not is_restricted(lam, p):
        raise NotRestricted(f"{lam} is not {p}-restricted")
    branch, factors = _restricted_layer(rs, lam, p)
    r = restrict_weight(rs, lam)
    if factors is None:
        return Verdict("NotMF", "TheoremBranch", r, branch="none")
    return Verdict("MF", "TheoremBranch", r, branch=branch, factors=factors)


def _multiset(factors: Iterable[int] | Mapping[int, int]) -> Counter:
    return Counter(factors) if not isinstance(factors, Mapping) else Counter(dict(factors))


def tensor_split_mf(factors_low, factors_high, p: int, s: int) -> bool:
    """MF of V1 (x) V2 where V2 is a p^(s+1) Frobenius twist and V1 lies below p^(s+1).

    ``factors_high`` holds the A1 highest weights of V2 itself (already
    twisted).  An empty high part stands for the trivial module.
    """
    low, high = _multiset(factors_low), _multiset(factors_high)
    bound = p ** (s + 1)
    if any(t >= bound for t in low):
        raise SeparationViolated(f"low factor {max(low)} is not below {bound}")
    if any(t % bound for t in high):
        raise SeparationViolated(f"high factors must be multiples of {bound}")
    if not high:
        return a1mod.is_mf(low)
    if not (a1mod.is_mf(low) and a1mod.is_mf(high)):
        return False
    sums = [a + b for a in low for b in high]
    return len(sums) == len(set(sums))


def _tensor_sums(low: Iterable[int], high: Iterable[int]) -> list[int]:
    return [a + b for a in low for b in high]


_LAYER_SETS = {
    "ii": (GroupType("A", 2), 3, (1, 1), {(0, 0), (1, 1), (1, 0), (0, 1)}, {(0, 0)}),
    "iii": (GroupType("B", 2), 5, (2, 0), {(0, 0), (2, 0), (1, 0), (0, 1)}, {(0, 0), (0, 1)}),
}


def corollary_verdict(rs: RootSystem, lam: Iterable[int], p: int) -> Verdict:
    """MF decision for an arbitrary dominant weight via its p-adic layers."""
    lam = _require_dominant(lam)
    _check_p(rs, p)
    layers = p_adic_layers(lam, p)
    r = restrict_weight(rs, lam)
    t = rs.group_type

    branch = None
    if all(restrict_weight(rs, mu) < p and all(m <= 1 for m in char0_factors(rs, mu).values())
           for mu in layers):
        branch = "i"
    else:
        for name, (gt, prime, special, allowed, after) in _LAYER_SETS.items():
            if t != gt or p != prime or special not in layers:
                continue
            if any(mu not in allowed for mu in layers):
                continue
            if any(mu == special and nxt not in after for mu, nxt in zip(layers, layers[1:])):
                continue
            branch = name
    if branch is None:
        return Verdict("NotMF", "TheoremBranch", r, branch="none")

    factors = [0]
    for i, mu in enumerate(layers):
        _, layer_factors = _restricted_layer(rs, mu, p)
        factors = _tensor_sums(factors, [p**i * f for f in layer_factors])
    return Verdict("MF", "TheoremBranch", r, branch=branch,
                   factors=tuple(sorted(factors, reverse=True)))


def verdict(rs: RootSystem, lam: Iterable[int], p: int) -> Verdict:
    """Restricted weights go straight to the branch rules; others are split into p-adic layers."""
    lam = _require_dominant(lam)
    if is_restricted(lam, p):
        return theorem_verdict(rs, lam, p)
    return corollary_verdict(rs, lam, p)


# -- classification sweep --

SWEEP_TYPES = tuple(
    [GroupType(f, l) for f, lo in (("A", 2), ("B", 2), ("C", 3), ("D", 4)) for l in range(lo, 10)]
    + [GroupType("E", 6), GroupType("E", 7), GroupType("E", 8), GroupType("F", 4), GroupType("G", 2)]
)


def sweep_weights(rs: RootSystem, max_coeff: int, max_r: int) -> list[Weight]:
    """Nonzero weights with coordinates <= max_coeff and r <= max_r that pass the support filter.

    Weights with three or more nonzero coordinates always fail the filter,
    so only supports of size one and two are enumerated.
    """
    from .principal import support_filter

    n = rs.rank
    g = rs.principal_grading
    out = []
    for i in range(n):
        for ci in range(1, max_coeff + 1):
            if ci * g[i] > max_r:
                break
            lam = tuple(ci if k == i else 0 for k in range(n))
            out.append(lam)
            for j in range(i + 1, n):
                for cj in range(1, max_coeff + 1):
                    if ci * g[i] + cj * g[j] > max_r:
                        break
                    mu = tuple(ci if k == i else cj if k == j else 0 for k in range(n))
                    if support_filter(rs, mu):
                        out.append(mu)
    return sorted(out)


@dataclass(frozen=True)
class Table1Diff:
    group_type: GroupType
    computed: tuple[Weight, ...]
    stored: tuple[Weight, ...]

    @property
    def missing(self) -> tuple[Weight, ...]:
        """Stored entries that the computation does not find MF."""
        return tuple(sorted(set(self.stored) - set(self.computed)))

    @property
    def extra(self) -> tuple[Weight, ...]:
        """Computed MF weights absent from the stored table."""
        return tuple(sorted(set(self.computed) - set(self.stored)))

    @property
    def empty(self) -> bool:
        return not self.missing and not self.extra


def table1_diff(t: GroupType, max_coeff: int = 6, max_r: int = 100) -> Table1Diff:
    from .rootsys import build

    rs = build(t)
    weights = sweep_weights(rs, max_coeff, max_r)
    computed = tuple(mu for mu in weights if char0_mf(rs, mu))
    stored = tuple(mu for mu in weights if table1_contains(rs, mu))
    return Table1Diff(t, computed, stored)
