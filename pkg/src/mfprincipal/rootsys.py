"""Root data for the simple types, Bourbaki labelling.

Weights are tuples of integers in the fundamental-weight basis.  Roots are
tuples of integers in the simple-root basis.  Node indices are 0-based in
code; node ``i`` here is Bourbaki node ``i + 1``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable

from .errors import InvalidRank

Weight = tuple[int, ...]
Root = tuple[int, ...]

_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4}
_FIXED_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


@dataclass(frozen=True, order=True)
class GroupType:
    family: str
    rank: int

    def __post_init__(self):
        fam = self.family.upper() if isinstance(self.family, str) else self.family
        object.__setattr__(self, "family", fam)
        if fam in _MIN_RANK:
            ok = self.rank >= _MIN_RANK[fam]
        elif fam in _FIXED_RANKS:
            ok = self.rank in _FIXED_RANKS[fam]
        else:
            raise InvalidRank(f"unknown family {self.family!r}")
        if not ok:
            raise InvalidRank(f"{fam}{self.rank} is not a valid simple type")

    def __str__(self):
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> "GroupType":
        """Parse ``"B2"`` style names."""
        text = text.strip()
        return cls(text[0], int(text[1:]))


def _diagram(t: GroupType) -> tuple[list[Fraction], list[tuple[int, int]]]:
    """Squared root lengths (long roots = 2) and Dynkin edges, Bourbaki order."""
    n, fam = t.rank, t.family
    two, one = Fraction(2), Fraction(1)
    lengths = [two] * n
    edges = [(i, i + 1) for i in range(n - 1)]
    if fam == "B":
        lengths[-1] = one
    elif fam == "C":
        lengths = [one] * (n - 1) + [two]
    elif fam == "D":
        edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    elif fam == "E":
        edges = [(0, 2), (2, 3), (3, 4), (1, 3)] + [(i, i + 1) for i in range(4, n - 1)]
    elif fam == "F":
        lengths = [two, two, one, one]
    elif fam == "G":
        lengths = [Fraction(2, 3), two]
    return lengths, edges


def _fraction_inverse(mat) -> tuple[tuple[Fraction, ...], ...]:
    import sympy

    inv = sympy.Matrix(mat).inv()
    n = inv.rows
    return tuple(
        tuple(Fraction(int(inv[i, j].p), int(inv[i, j].q)) for j in range(n)) for i in range(n)
    )


@dataclass(frozen=True, eq=False)
class RootSystem:
    group_type: GroupType
    cartan: tuple[tuple[int, ...], ...]  # cartan[i][j] = <alpha_i, alpha_j^vee>
    positive_roots: tuple[Root, ...]
    form: tuple[tuple[Fraction, ...], ...]  # (alpha_i, alpha_j)
    coxeter_number: int
    rho: Weight
    lengths: tuple[Fraction, ...] = field(repr=False)

    def __eq__(self, other):
        return isinstance(other, RootSystem) and other.group_type == self.group_type

    def __hash__(self):
        return hash(("RootSystem", self.group_type))

    def __repr__(self):
        return f"RootSystem({self.group_type})"

    @property
    def rank(self) -> int:
        return self.group_type.rank

    @cached_property
    def cartan_inverse(self) -> tuple[tuple[Fraction, ...], ...]:
        return _fraction_inverse(self.cartan)

    @cached_property
    def simple_roots(self) -> tuple[Weight, ...]:
        """Simple roots written in the fundamental-weight basis."""
        return tuple(tuple(row) for row in self.cartan)

    @cached_property
    def weight_gram(self) -> tuple[tuple[Fraction, ...], ...]:
        """Gram matrix (omega_i, omega_j)."""
        n = self.rank
        return tuple(
            tuple(self.cartan_inverse[i][j] * self.lengths[j] / 2 for j in range(n))
            for i in range(n)
        )

    @cached_property
    def positive_root_weights(self) -> tuple[Weight, ...]:
        return tuple(self.root_to_weight(a) for a in self.positive_roots)

    @cached_property
    def positive_coroots(self) -> tuple[tuple[int, ...], ...]:
        """alpha^vee in the simple-coroot basis, one per positive root."""
        out = []
        for a in self.positive_roots:
            norm = self.root_norm(a)
            co = [Fraction(c) * self.lengths[i] / norm for i, c in enumerate(a)]
            assert all(x.denominator == 1 for x in co)
            out.append(tuple(int(x) for x in co))
        return tuple(out)

    @cached_property
    def highest_root(self) -> Root:
        return max(self.positive_roots, key=sum)

    @cached_property
    def principal_grading(self) -> tuple[int, ...]:
        """T_A-weight of each fundamental weight: omega_i -> <omega_i, 2 rho^vee>."""
        vals = [2 * sum(row) for row in self.cartan_inverse]
        assert all(v.denominator == 1 for v in vals)
        return tuple(int(v) for v in vals)

    def neighbours(self, i: int) -> list[int]:
        return [j for j in range(self.rank) if j != i and self.cartan[i][j] != 0]

    def is_end_node(self, i: int) -> bool:
        return len(self.neighbours(i)) <= 1

    def adjacent(self, i: int, j: int) -> bool:
        return i != j and self.cartan[i][j] != 0

    def root_norm(self, a: Iterable[int]) -> Fraction:
        a = tuple(a)
        n = self.rank
        return sum(
            (a[i] * a[j] * self.form[i][j] for i in range(n) for j in range(n) if a[i] and a[j]),
            Fraction(0),
        )

    def root_to_weight(self, a: Iterable[int]) -> Weight:
        a = tuple(a)
        n = self.rank
        return tuple(sum(a[k] * self.cartan[k][j] for k in range(n)) for j in range(n))

    def inner(self, mu: Iterable, nu: Iterable) -> Fraction:
        """(mu, nu) for weights given in fundamental coordinates."""
        mu, nu = tuple(mu), tuple(nu)
        g = self.weight_gram
        n = self.rank
        return sum(
            (mu[i] * nu[j] * g[i][j] for i in range(n) if mu[i] for j in range(n) if nu[j]),
            Fraction(0),
        )

    def reflect(self, mu: Weight, i: int) -> Weight:
        c = mu[i]
        if c == 0:
            return mu
        row = self.cartan[i]
        return tuple(m - c * a for m, a in zip(mu, row))


def _positive_roots(cartan: tuple[tuple[int, ...], ...]) -> tuple[Root, ...]:
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    found = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                pairing = sum(beta[j] * cartan[j][i] for j in range(n))
                q = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in found:
                        q += 1
                    else:
                        break
                if q - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in found:
                        found.add(up)
                        nxt.append(up)
        layer = nxt
    return tuple(sorted(found, key=lambda a: (sum(a), a)))


_ROOT_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


@lru_cache(maxsize=None)
def build(t: GroupType | str, rank: int | None = None) -> RootSystem:
    """Root system of type ``t`` (``build("B", 2)``, ``build("B2")`` or a GroupType)."""
    if not isinstance(t, GroupType):
        t = GroupType(t, rank) if rank is not None else GroupType.parse(t)
    lengths, edges = _diagram(t)
    n = t.rank
    form = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        form[i][i] = lengths[i]
    for i, j in edges:
        form[i][j] = form[j][i] = -max(lengths[i], lengths[j]) / 2
    cartan = tuple(tuple(int(2 * form[i][j] / form[j][j]) for j in range(n)) for i in range(n))
    roots = _positive_roots(cartan)
    if len(roots) != _ROOT_COUNTS[t.family](n):
        raise AssertionError(f"root generation for {t} gave {len(roots)} roots")
    h = 2 * len(roots) // n
    return RootSystem(
        group_type=t,
        cartan=cartan,
        positive_roots=roots,
        form=tuple(tuple(row) for row in form),
        coxeter_number=h,
        rho=(1,) * n,
        lengths=tuple(lengths),
    )


def pairing(rs: RootSystem, mu: Iterable[int], alpha: Iterable[int]) -> int:
    """<mu, alpha^vee> for a positive root alpha given in simple-root coordinates."""
    alpha = tuple(alpha)
    try:
        co = rs.positive_coroots[rs.positive_roots.index(alpha)]
    except ValueError:
        raise ValueError(f"{alpha} is not a positive root of {rs.group_type}") from None
    return sum(m * c for m, c in zip(mu, co))


def weight_to_root_coords(rs: RootSystem, mu: Iterable[int]) -> tuple[Fraction, ...]:
    mu = tuple(mu)
    inv = rs.cartan_inverse
    n = rs.rank
    return tuple(sum((mu[i] * inv[i][k] for i in range(n)), Fraction(0)) for k in range(n))


def in_root_lattice(rs: RootSystem, mu: Iterable[int]) -> bool:
    return all(a.denominator == 1 for a in weight_to_root_coords(rs, mu))


def is_dominant(mu: Iterable[int]) -> bool:
    return all(c >= 0 for c in mu)


def is_restricted(mu: Iterable[int], p: int) -> bool:
    return all(0 <= c < p for c in mu)


def dominant_rep(rs: RootSystem, mu: Iterable[int]) -> tuple[Weight, int]:
    """Dominant weight in the W-orbit of mu and the parity (0/1) of a reducing word."""
    mu = tuple(mu)
    parity = 0
    cartan = rs.cartan
    while True:
        for i, c in enumerate(mu):
            if c < 0:
                row = cartan[i]
                mu = tuple(m - c * a for m, a in zip(mu, row))
                parity ^= 1
                break
        else:
            return mu, parity


def orbit(rs: RootSystem, mu: Iterable[int]) -> frozenset[Weight]:
    mu, _ = dominant_rep(rs, mu)
    seen = {mu}
    stack = [mu]
    n = rs.rank
    while stack:
        w = stack.pop()
        for i in range(n):
            if w[i] > 0:
                v = rs.reflect(w, i)
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
    return frozenset(seen)
