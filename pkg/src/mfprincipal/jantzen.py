"""Jantzen sum formula and composition series of Weyl modules in easy cases."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping

from .charalg import Character, freudenthal, _require_dominant
from .errors import Inconclusive
from .rootsys import RootSystem, Weight, dominant_rep


def p_valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def dot_reflect(rs: RootSystem, mu: Iterable[int]) -> tuple[int, Weight | None]:
    """Move mu into the dominant chamber under the rho-shifted action.

    Returns (sign, w.mu) with sign = (-1)^len(w), or (0, None) when mu + rho
    lies on a reflecting hyperplane, in which case chi(mu) = 0.
    """
    shifted = tuple(m + 1 for m in mu)
    rep, parity = dominant_rep(rs, shifted)
    if any(c == 0 for c in rep):
        return 0, None
    return (-1 if parity else 1), tuple(c - 1 for c in rep)


@dataclass(frozen=True)
class JsfSum:
    lam: Weight
    p: int
    terms: Mapping[Weight, int] = field(default_factory=dict)

    @property
    def is_empty(self) -> bool:
        return not self.terms


@lru_cache(maxsize=None)
def _jsf(rs: RootSystem, lam: Weight, p: int) -> JsfSum:
    acc: Counter = Counter()
    lam_rho = tuple(l + 1 for l in lam)
    for alpha, co in zip(rs.positive_root_weights, rs.positive_coroots):
        n = sum(x * c for x, c in zip(lam_rho, co))
        for mp in range(p, n, p):
            shift = n - mp
            mu = tuple(l - shift * a for l, a in zip(lam, alpha))
            sign, dom = dot_reflect(rs, mu)
            if sign:
                acc[dom] += sign * p_valuation(mp, p)
    return JsfSum(lam, p, {k: v for k, v in sorted(acc.items()) if v})


def jsf_sum(rs: RootSystem, lam: Iterable[int], p: int) -> JsfSum:
    """sum_{alpha>0} sum_{0<mp<<lam+rho,alpha^vee>} nu_p(mp) chi(lam - (<lam+rho,alpha^vee> - mp) alpha)."""
    return _jsf(rs, _require_dominant(lam), p)


def is_weyl_irreducible(rs: RootSystem, lam: Iterable[int], p: int) -> bool:
    return jsf_sum(rs, lam, p).is_empty


@dataclass(frozen=True)
class CompSeries:
    """Composition factors [Delta(lam) : L(mu)] of a Weyl module."""

    lam: Weight
    p: int
    factors: Mapping[Weight, int]

    def __iter__(self):
        return iter(sorted(self.factors.items(), key=lambda kv: kv[0], reverse=True))

    @property
    def irreducible(self) -> bool:
        return dict(self.factors) == {self.lam: 1}


@lru_cache(maxsize=None)
def _solve(rs: RootSystem, lam: Weight, p: int) -> CompSeries:
    js = _jsf(rs, lam, p)
    if js.is_empty:
        return CompSeries(lam, p, {lam: 1})
    # Rewrite sum c_mu chi(mu) in the basis of simple characters.  Each
    # factor of rad Delta(lam) is counted at least once in the sum, and a
    # coefficient of exactly one pins its multiplicity down.
    in_simples: Counter = Counter()
    for mu, c in js.terms.items():
        sub = _solve(rs, mu, p)
        for nu, k in sub.factors.items():
            in_simples[nu] += c * k
    if any(v < 0 for v in in_simples.values()):
        raise ArithmeticError(f"Jantzen sum for {lam} at p={p} is not an effective character")
    bad = {nu: v for nu, v in in_simples.items() if v not in (0, 1)}
    if bad:
        raise Inconclusive(
            f"Jantzen sum for {lam} at p={p} has simple coefficients {bad}; "
            "composition factors not determined"
        )
    factors = {lam: 1}
    factors.update({nu: 1 for nu, v in in_simples.items() if v == 1})
    return CompSeries(lam, p, factors)


def simple_solve(rs: RootSystem, lam: Iterable[int], p: int) -> CompSeries:
    """Composition factors of Delta(lam), or raise Inconclusive."""
    return _solve(rs, _require_dominant(lam), p)


@lru_cache(maxsize=None)
def _irr(rs: RootSystem, lam: Weight, p: int) -> Character:
    series = _solve(rs, lam, p)
    ch = freudenthal(rs, lam)
    for mu, k in series.factors.items():
        if mu != lam:
            ch = ch - _irr(rs, mu, p).scaled(k)
    if not ch.is_effective() or ch.mult(lam) != 1:
        raise ArithmeticError(f"irreducible character of {lam} at p={p} came out non-effective")
    return Character(rs, ch.mults)


def irr_character(rs: RootSystem, lam: Iterable[int], p: int) -> Character:
    """ch L(lam) whenever simple_solve succeeds; Inconclusive otherwise."""
    return _irr(rs, _require_dominant(lam), p)


def jsf_lower_bound(rs: RootSystem, lam: Iterable[int], p: int) -> Character:
    """Weightwise lower bound chi(lam) - JSF for ch L(lam), clipped at zero.

    ch rad Delta(lam) is bounded above by the Jantzen sum, so the difference
    bounds ch L(lam) from below with no further structural input.
    """
    lam = _require_dominant(lam)
    js = _jsf(rs, lam, p)
    bound = Counter(freudenthal(rs, lam).mults)
    for mu, c in js.terms.items():
        for nu, m in freudenthal(rs, mu).mults.items():
            bound[nu] -= c * m
    return Character(rs, {k: v for k, v in bound.items() if v > 0})
