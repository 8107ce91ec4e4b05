"""Characters of Weyl modules: degree formula, Freudenthal, saturated weight sets."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import lcm
from typing import Iterable, Iterator, Mapping

from .errors import NotDominant
from .rootsys import RootSystem, Weight, dominant_rep, is_dominant, orbit


@lru_cache(maxsize=200_000)
def cached_orbit(rs: RootSystem, mu: Weight) -> frozenset[Weight]:
    return orbit(rs, mu)


@dataclass(frozen=True)
class Character:
    """W-invariant character stored on its dominant support.

    ``mults`` maps dominant weights to nonzero integer coefficients.  Positive
    coefficients throughout means an honest module character; a
    VirtualCharacter allows negative ones.
    """

    system: RootSystem
    mults: Mapping[Weight, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "mults", {tuple(k): v for k, v in self.mults.items() if v})

    def mult(self, mu: Iterable[int]) -> int:
        rep, _ = dominant_rep(self.system, mu)
        return self.mults.get(rep, 0)

    __getitem__ = mult

    def support(self) -> set[Weight]:
        return set(self.mults)

    def expanded(self) -> Iterator[tuple[Weight, int]]:
        for mu, m in self.mults.items():
            for w in cached_orbit(self.system, mu):
                yield w, m

    def dim(self) -> int:
        return sum(m * len(cached_orbit(self.system, mu)) for mu, m in self.mults.items())

    def highest_weights(self) -> list[Weight]:
        """Maximal elements of the support under the dominance order."""
        rs = self.system
        grading = rs.principal_grading
        sup = sorted(self.mults, key=lambda mu: -_grade(grading, mu))
        out = []
        for mu in sup:
            if not any(_dominates(rs, nu, mu) for nu in out):
                out.append(mu)
        return out

    def _combine(self, other: "Character", sign: int):
        if other.system != self.system:
            raise ValueError("characters of different root systems")
        acc = Counter(self.mults)
        for k, v in other.mults.items():
            acc[k] += sign * v
        return acc

    def __add__(self, other):
        return _wrap(self.system, self._combine(other, 1))

    def __sub__(self, other):
        return _wrap(self.system, self._combine(other, -1))

    def scaled(self, c: int) -> "Character":
        return _wrap(self.system, {k: c * v for k, v in self.mults.items()})

    def is_effective(self) -> bool:
        return all(v > 0 for v in self.mults.values())

    def __eq__(self, other):
        return (
            isinstance(other, Character)
            and other.system == self.system
            and dict(other.mults) == dict(self.mults)
        )

    def __hash__(self):
        return hash((self.system, frozenset(self.mults.items())))


class VirtualCharacter(Character):
    """Integer combination of characters; coefficients may be negative."""


def _wrap(rs, mults) -> Character:
    mults = {k: v for k, v in mults.items() if v}
    if all(v > 0 for v in mults.values()):
        return Character(rs, mults)
    return VirtualCharacter(rs, mults)


def _grade(grading, mu) -> int:
    return sum(g * m for g, m in zip(grading, mu))


def _dominates(rs: RootSystem, nu: Weight, mu: Weight) -> bool:
    from .rootsys import weight_to_root_coords

    diff = weight_to_root_coords(rs, [a - b for a, b in zip(nu, mu)])
    return all(c.denominator == 1 and c >= 0 for c in diff)


def _require_dominant(lam) -> Weight:
    lam = tuple(int(c) for c in lam)
    if not is_dominant(lam):
        raise NotDominant(f"{lam} is not dominant")
    return lam


def weyl_dim(rs: RootSystem, lam: Iterable[int]) -> int:
    lam = _require_dominant(lam)
    num = den = 1
    for co in rs.positive_coroots:
        num *= sum((l + 1) * c for l, c in zip(lam, co))
        den *= sum(co)
    q, rem = divmod(num, den)
    assert rem == 0
    return q


@lru_cache(maxsize=4096)
def _weight_set(rs: RootSystem, lam: Weight) -> frozenset[Weight]:
    roots = rs.positive_root_weights
    seen = {lam}
    stack = [lam]
    while stack:
        mu = stack.pop()
        for a in roots:
            nu = tuple(m - x for m, x in zip(mu, a))
            if nu not in seen and all(c >= 0 for c in nu):
                seen.add(nu)
                stack.append(nu)
    return frozenset(seen)


def weight_set(rs: RootSystem, lam: Iterable[int]) -> frozenset[Weight]:
    """Dominant weights mu <= lam in lam + (root lattice).

    Every such mu is reached from lam by subtracting positive roots one at a
    time without leaving the dominant chamber, so a flood fill suffices.
    """
    return _weight_set(rs, _require_dominant(lam))


@dataclass(frozen=True)
class _IntForm:
    scale: int
    gram: tuple[tuple[int, ...], ...]  # scale * (omega_i, omega_j)
    root_pair: tuple[tuple[int, ...], ...]  # scale * (omega_j, alpha) per positive root
    root_norm: tuple[int, ...]  # scale * (alpha, alpha)


@lru_cache(maxsize=None)
def _int_form(rs: RootSystem) -> _IntForm:
    g = rs.weight_gram
    n = rs.rank
    scale = lcm(*(x.denominator for row in g for x in row))
    gram = tuple(tuple(int(x * scale) for x in row) for row in g)
    pairs = []
    norms = []
    for a in rs.positive_roots:
        pairs.append(tuple(int(a[j] * rs.lengths[j] / 2 * scale) for j in range(n)))
        norms.append(int(rs.root_norm(a) * scale))
    return _IntForm(scale, gram, tuple(pairs), tuple(norms))


def _norm_sq(form: _IntForm, mu) -> int:
    g = form.gram
    n = len(mu)
    return sum(mu[i] * mu[j] * g[i][j] for i in range(n) if mu[i] for j in range(n) if mu[j])


@lru_cache(maxsize=4096)
def _freudenthal(rs: RootSystem, lam: Weight) -> Character:
    form = _int_form(rs)
    sat = _weight_set(rs, lam)
    grading = rs.principal_grading
    order = sorted(sat, key=lambda mu: (-_grade(grading, mu), mu))
    roots = rs.positive_root_weights
    lr = tuple(l + 1 for l in lam)
    top = _norm_sq(form, lr)
    mults: dict[Weight, int] = {lam: 1}
    for mu in order[1:]:
        acc = 0
        for a, pair, norm in zip(roots, form.root_pair, form.root_norm):
            base = sum(m * c for m, c in zip(mu, pair))
            k = 1
            nu = mu
            while True:
                nu = tuple(x + y for x, y in zip(nu, a))
                rep, _ = dominant_rep(rs, nu)
                m = mults.get(rep)
                if m is None:
                    if rep not in sat:
                        break
                    raise AssertionError(f"multiplicity of {rep} needed before it was computed")
                acc += m * (base + k * norm)
                k += 1
        denom = top - _norm_sq(form, tuple(m + 1 for m in mu))
        val, rem = divmod(2 * acc, denom)
        if rem:
            raise ArithmeticError(f"Freudenthal division inexact at {mu} in {rs.group_type}{lam}")
        mults[mu] = val
    return Character(rs, mults)


def freudenthal(rs: RootSystem, lam: Iterable[int]) -> Character:
    """Weight multiplicities of the Weyl module with highest weight lam."""
    return _freudenthal(rs, _require_dominant(lam))


def weyl_character(rs: RootSystem, lam: Iterable[int]) -> Character:
    return freudenthal(rs, lam)


def tensor_weights(rs: RootSystem, lam1: Iterable[int], lam2: Iterable[int]) -> Character:
    """Character of Delta(lam1) (x) Delta(lam2), collected on dominant weights."""
    c1 = freudenthal(rs, lam1)
    c2 = freudenthal(rs, lam2)
    acc: Counter = Counter()
    for w1, m1 in c1.expanded():
        for mu2, m2 in c2.mults.items():
            # sum over the orbit of mu2 but keep only the dominant results
            for w2 in cached_orbit(rs, mu2):
                s = tuple(x + y for x, y in zip(w1, w2))
                if all(c >= 0 for c in s):
                    acc[s] += m1 * m2
    return Character(rs, acc)


def principal_specialization(rs: RootSystem, lam: Iterable[int]) -> list[int]:
    """Coefficients n_0..n_r of prod_{alpha>0} (1 - q^<lam+rho,alpha^vee>)/(1 - q^<rho,alpha^vee>).

    n_d is the dimension of the T_A-weight space r - 2d of the Weyl module,
    obtained without any weight multiplicities.
    """
    lam = _require_dominant(lam)
    hs, h0s = [], []
    for co in rs.positive_coroots:
        hs.append(sum((l + 1) * c for l, c in zip(lam, co)))
        h0s.append(sum(co))
    deg = sum(hs) - sum(h0s)
    poly = [0] * (sum(hs) + 1)
    poly[0] = 1
    top = 0
    for h in hs:
        # multiply by (1 - q^h)
        for i in range(top, -1, -1):
            if poly[i]:
                poly[i + h] -= poly[i]
        top += h
    for h in h0s:
        # divide by (1 - q^h): running sum with stride h
        for i in range(h, len(poly)):
            poly[i] += poly[i - h]
    out = poly[: deg + 1]
    assert all(c == 0 for c in poly[deg + 1 : deg + 1 + max(h0s)])
    return out
