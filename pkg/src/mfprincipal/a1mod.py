"""Modular representation theory of SL2 / A1.

Irreducible characters come from Steinberg's tensor product theorem:
(t) = (a0) (x) (a1)^[p] (x) ... for the base-p digits a_i of t.
"""
from __future__ import annotations

import bisect
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterable, Mapping

from .errors import NegativeRemainder


@dataclass(frozen=True)
class A1Char:
    """Finite map integer weight -> multiplicity (zero entries dropped)."""

    mults: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "mults", {int(k): int(v) for k, v in self.mults.items() if v})

    def __getitem__(self, w: int) -> int:
        return self.mults.get(w, 0)

    def __eq__(self, other):
        return isinstance(other, A1Char) and dict(self.mults) == dict(other.mults)

    def __hash__(self):
        return hash(frozenset(self.mults.items()))

    def __add__(self, other: "A1Char") -> "A1Char":
        acc = Counter(self.mults)
        acc.update(other.mults)
        return A1Char(acc)

    def __mul__(self, other: "A1Char") -> "A1Char":
        acc: Counter = Counter()
        for w1, m1 in self.mults.items():
            for w2, m2 in other.mults.items():
                acc[w1 + w2] += m1 * m2
        return A1Char(acc)

    def twist(self, q: int) -> "A1Char":
        """Frobenius twist: scale every weight by q."""
        return A1Char({w * q: m for w, m in self.mults.items()})

    def dim(self) -> int:
        return sum(self.mults.values())

    def top(self) -> int:
        return max(self.mults) if self.mults else 0

    def is_symmetric(self) -> bool:
        return all(self.mults.get(-w, 0) == m for w, m in self.mults.items())

    def single_parity(self) -> bool:
        return len({w % 2 for w in self.mults}) <= 1

    def n_sequence(self, r: int | None = None) -> list[int]:
        """[mult(r), mult(r-2), ..., mult(-r)] with r the top weight by default."""
        if r is None:
            r = self.top()
        return [self[r - 2 * d] for d in range(r + 1)]


def p_digits(t: int, p: int) -> list[int]:
    if t < 0:
        raise ValueError("t must be nonnegative")
    if t == 0:
        return [0]
    out = []
    while t:
        t, a = divmod(t, p)
        out.append(a)
    return out


def dim_irr(t: int, p: int) -> int:
    d = 1
    for a in p_digits(t, p):
        d *= a + 1
    return d


@lru_cache(maxsize=100_000)
def _irr_weights(t: int, p: int) -> tuple[int, ...]:
    ws = [0]
    q = 1
    for a in p_digits(t, p):
        ws = [w + (a - 2 * i) * q for w in ws for i in range(a + 1)]
        q *= p
    return tuple(sorted(ws))


def irr_weights(t: int, p: int) -> tuple[int, ...]:
    """Sorted weights of (t) in characteristic p (all multiplicity one)."""
    return _irr_weights(t, p)


def irr_char(t: int, p: int) -> A1Char:
    return A1Char({w: 1 for w in _irr_weights(t, p)})


def weyl_char(t: int) -> A1Char:
    return A1Char({t - 2 * i: 1 for i in range(t + 1)})


@dataclass(frozen=True)
class Gaps:
    t: int
    p: int
    intervals: tuple[tuple[int, int], ...]  # open intervals (delta, gamma), sorted

    def contains(self, w: int) -> bool:
        """True if w lies strictly inside one of the gaps."""
        iv = self.intervals
        k = bisect.bisect_left(iv, (w, w)) - 1
        for j in (k, k + 1):
            if 0 <= j < len(iv) and iv[j][0] < w < iv[j][1]:
                return True
        return False

    def is_weight(self, w: int) -> bool:
        t = self.t
        return abs(w) <= t and (t - w) % 2 == 0 and not self.contains(w)


@lru_cache(maxsize=100_000)
def gaps(t: int, p: int) -> Gaps:
    """Gaps of (t), built from the digit patterns.

    For a cut position j (digits 0..j all at their extreme), a digit
    a_{j+1} lowered by 2*i_{j+1} + 2 with i_{j+1} < a_{j+1}, and arbitrary
    lower choices above, the gap runs from
    delta = [a0..aj, a_{j+1} - 2i_{j+1} - 2, ...] to
    gamma = [-a0..-aj, a_{j+1} - 2i_{j+1}, ...].
    """
    digits = p_digits(t, p)
    m = len(digits)
    found = set()
    for j in range(-1, m - 1):
        low = sum(digits[k] * p**k for k in range(j + 1))
        q = p ** (j + 1)
        ranges = [range(digits[j + 1])] + [range(digits[k] + 1) for k in range(j + 2, m)]
        for choice in product(*ranges):
            high = (digits[j + 1] - 2 * choice[0]) * q
            for off, i_k in enumerate(choice[1:]):
                k = j + 2 + off
                high += (digits[k] - 2 * i_k) * p**k
            gamma = high - low
            delta = high - 2 * q + low
            if gamma - delta > 2:
                found.add((delta, gamma))
    return Gaps(t, p, tuple(sorted(found)))


def tilting_reducible(r: int, p: int) -> bool:
    """T(r) for SL2 is reducible iff r >= p and r is not -1 mod p."""
    return r >= p and (r + 1) % p != 0


def bound_B(r: int, p: int) -> int:
    return sum(dim_irr(r - 2 * k, p) for k in range(r // 2 + 1))


def bound_BK(r: int) -> int:
    if r % 2 == 0:
        return (r // 2 + 1) ** 2
    return (r + 1) // 2 * (r + 3) // 2


def _peel(ch: A1Char, piece) -> Counter:
    if not ch.is_symmetric():
        raise ValueError("character is not symmetric")
    if not ch.single_parity():
        raise ValueError("character mixes weight parities")
    rem = Counter(ch.mults)
    factors: Counter = Counter()
    while True:
        live = [w for w, m in rem.items() if m]
        if not live:
            return factors
        t = max(live)
        k = rem[t]
        if k < 0 or min(live) < -t or rem[-t] < 0:
            raise NegativeRemainder(f"negative multiplicity at weight {t if k < 0 else -t}")
        for w in piece(t):
            rem[w] -= k
            if rem[w] < 0:
                raise NegativeRemainder(f"negative multiplicity at weight {w} after removing ({t})")
        factors[t] += k


def decompose(ch: A1Char, p: int) -> Counter:
    """Composition-factor multiset {highest weight: multiplicity} in characteristic p."""
    return _peel(ch, lambda t: _irr_weights(t, p))


def char0_decompose(ch: A1Char) -> Counter:
    return _peel(ch, lambda t: range(-t, t + 1, 2))


def is_mf(factors: Mapping[int, int]) -> bool:
    return all(m <= 1 for m in factors.values())


def sorted_factors(factors: Mapping[int, int]) -> list[int]:
    """Multiset as a descending list with repeats."""
    return sorted((t for t, m in factors.items() for _ in range(m)), reverse=True)


def char_from_factors(factors: Iterable[int] | Mapping[int, int], p: int | None) -> A1Char:
    if isinstance(factors, Mapping):
        factors = [t for t, m in factors.items() for _ in range(m)]
    acc: Counter = Counter()
    for t in factors:
        acc.update(irr_char(t, p).mults if p else weyl_char(t).mults)
    return A1Char(acc)
