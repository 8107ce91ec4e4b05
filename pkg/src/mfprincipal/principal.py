"""Restriction to the principal A1-subgroup.

Every simple root takes the value 2 on the torus T_A of the principal A1,
so a weight lam - sum a_i alpha_i lands on r - 2 sum a_i.  This module
pushes G-characters down to A1Char, decomposes the result, and, when no
full character is at hand, builds replayable "not MF" certificates.

Characteristic zero is ``p=None`` throughout.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Any, Iterable, Mapping

from . import a1mod, ingest
from .a1mod import A1Char
from .charalg import (
    Character,
    _grade,
    _require_dominant,
    cached_orbit,
    freudenthal,
    principal_specialization,
    weight_set,
    weyl_dim,
)
from .errors import (
    CharacterUnavailable,
    Inconclusive,
    NegativeMultiplicity,
    NotApplicable,
    NotRestricted,
    PBelowCoxeter,
)
from .jantzen import irr_character, is_weyl_irreducible, jsf_lower_bound
from .oracles import rank2_dim_oracles
from .rootsys import GroupType, RootSystem, Weight, build, in_root_lattice, is_restricted

EXACT = "Exact"
LOWER_BOUND = "LowerBound"


def restrict_weight(rs: RootSystem, lam: Iterable[int]) -> int:
    """r = lam restricted to T_A, i.e. twice the sum of the root coordinates of lam."""
    lam = _require_dominant(lam)
    return _grade(rs.principal_grading, lam)


def p_adic_layers(lam: Iterable[int], p: int) -> list[Weight]:
    """[lam_0, lam_1, ...] with lam = sum p^i lam_i and each lam_i p-restricted."""
    lam = list(lam)
    layers = []
    while any(lam) or not layers:
        layers.append(tuple(c % p for c in lam))
        lam = [c // p for c in lam]
    return layers


# -- projection ---------------------------------------------------------------

@lru_cache(maxsize=200_000)
def _orbit_levels(rs: RootSystem, mu: Weight) -> tuple[tuple[int, int], ...]:
    g = rs.principal_grading
    hist = Counter(_grade(g, w) for w in cached_orbit(rs, mu))
    return tuple(hist.items())


def project(rs: RootSystem, ch: Character) -> A1Char:
    """Push a G-character forward to the T_A-weights of the principal A1."""
    acc: Counter = Counter()
    for mu, m in ch.mults.items():
        for level, k in _orbit_levels(rs, mu):
            acc[level] += m * k
    return A1Char(acc)


# -- n-sequences ----------------------------------------------------------------

@dataclass(frozen=True)
class NSequence:
    """n[d] = multiplicity of the T_A-weight r - 2d, for 0 <= d <= r."""

    r: int
    n: tuple[int, ...]
    exact: bool
    source: str

    def __getitem__(self, d: int) -> int:
        return self.n[d] if 0 <= d < len(self.n) else 0

    @property
    def exactness(self) -> str:
        return EXACT if self.exact else LOWER_BOUND

    def half(self) -> tuple[int, ...]:
        return self.n[: self.r // 2 + 1]

    def total(self) -> int:
        return sum(self.n)

    @classmethod
    def from_a1char(cls, ch: A1Char, r: int, exact: bool, source: str) -> "NSequence":
        return cls(r, tuple(ch.n_sequence(r)), exact, source)


def _irreducible_character(rs: RootSystem, lam: Weight, p: int | None) -> tuple[Character, str]:
    """ch L(lam) for one p-adic layer, or raise CharacterUnavailable."""
    if p is None:
        return freudenthal(rs, lam), "weyl"
    table = ingest.lookup(rs, lam, p)
    if table is not None:
        return table.character(), "ingested"
    if is_weyl_irreducible(rs, lam, p):
        return freudenthal(rs, lam), "weyl-irreducible"
    try:
        return irr_character(rs, lam, p), "jantzen"
    except Inconclusive as exc:
        raise CharacterUnavailable(str(exc)) from None


def irreducible_projection(rs: RootSystem, lam: Iterable[int], p: int | None) -> tuple[A1Char, str]:
    """L(lam) restricted to T_A, built layer by layer via Steinberg's tensor product theorem."""
    lam = _require_dominant(lam)
    if p is None:
        return project(rs, freudenthal(rs, lam)), "weyl"
    total = A1Char({0: 1})
    sources = []
    for i, layer in enumerate(p_adic_layers(lam, p)):
        if not any(layer):
            continue
        ch, src = _irreducible_character(rs, layer, p)
        total = total * project(rs, ch).twist(p**i)
        sources.append(src)
    return total, "+".join(dict.fromkeys(sources)) or "trivial"


def _lower_bound_projection(rs: RootSystem, lam: Weight, p: int) -> A1Char:
    bound = Counter(project(rs, jsf_lower_bound(rs, lam, p)).mults)
    if is_restricted(lam, p) and p >= rs.coxeter_number:
        # L(lam) and Delta(lam) share their weight set, each weight at least once
        once = Character(rs, {mu: 1 for mu in weight_set(rs, lam)})
        for w, k in project(rs, once).mults.items():
            bound[w] = max(bound[w], k)
    return A1Char(bound)


def n_sequence(rs: RootSystem, lam: Iterable[int], p: int | None, source: str = "weyl") -> NSequence:
    """n-sequence of the Weyl module (``source="weyl"``) or of L(lam) (``"irreducible"``).

    The irreducible case degrades to a LowerBound sequence when no exact
    character is available.
    """
    lam = _require_dominant(lam)
    r = restrict_weight(rs, lam)
    if source == "weyl":
        return NSequence(r, tuple(principal_specialization(rs, lam)), True, "weyl")
    if source != "irreducible":
        raise ValueError(f"unknown source {source!r}")
    try:
        ch, src = irreducible_projection(rs, lam, p)
        return NSequence.from_a1char(ch, r, True, src)
    except CharacterUnavailable:
        if len(p_adic_layers(lam, p)) > 1:
            raise
        return NSequence.from_a1char(_lower_bound_projection(rs, lam, p), r, False, "lower-bound")


# -- decompositions -------------------------------------------------------------

def _s_value(factors: Mapping[int, int], w: int, p: int | None) -> int:
    if p is None:
        return 0
    return sum(k for t, k in factors.items() if t > w and a1mod.gaps(t, p).contains(w))


def recurrence_decompose(ns: NSequence, p: int | None, upto: int | None = None) -> Counter:
    """Composition factors from m_d = n_d - n_{d-1} + s_d - s_{d-1}.

    s_d is recomputed at every d by exact gap membership in the factors
    found so far.  ``upto`` stops the run early (inclusive).
    """
    if not ns.exact:
        raise ValueError("the recurrence needs an exact n-sequence")
    r = ns.r
    last = r // 2 if upto is None else min(upto, r // 2)
    factors: Counter = Counter()
    prev_n = prev_s = 0
    for d in range(last + 1):
        w = r - 2 * d
        s = _s_value(factors, w, p)
        m = ns[d] - prev_n + s - prev_s
        if m < 0:
            raise NegativeMultiplicity(f"m_{d} = {m} < 0 at T_A-weight {w}")
        if m:
            factors[w] += m
        prev_n, prev_s = ns[d], s
    return factors


def decompose_projection(ch: A1Char, p: int | None) -> Counter:
    return a1mod.char0_decompose(ch) if p is None else a1mod.decompose(ch, p)


def char0_factors(rs: RootSystem, lam: Iterable[int]) -> Counter:
    """Composition factors of Delta_K(lam) restricted to A_K, from m_d = n_d - n_{d-1}."""
    n = principal_specialization(rs, lam)
    r = len(n) - 1
    return Counter({r - 2 * d: n[d] - (n[d - 1] if d else 0)
                    for d in range(r // 2 + 1) if n[d] != (n[d - 1] if d else 0)})


# -- certificates and verdicts --------------------------------------------------

CERTIFICATE_KINDS = ("Tilting", "DimBound", "DimBoundOmega", "WeightCount", "Recurrence")


@dataclass(frozen=True)
class Certificate:
    kind: str
    group: str
    lam: Weight
    p: int
    data: Mapping[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "group": self.group, "lambda": list(self.lam),
                "p": self.p, "data": dict(self.data)}

    @classmethod
    def from_dict(cls, d: Mapping) -> "Certificate":
        return cls(d["kind"], d["group"], tuple(d["lambda"]), d["p"], dict(d["data"]))


@dataclass(frozen=True)
class Verdict:
    status: str  # MF | NotMF | Unknown
    provenance: str  # TheoremBranch | ComputedDecomposition | Certificate | None
    r: int
    branch: str | None = None
    factors: tuple[int, ...] | None = None
    certificate: Certificate | None = None
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "verdict": self.status,
            "provenance": self.provenance,
            "branch": self.branch,
            "r": self.r,
            "factors": list(self.factors) if self.factors is not None else None,
            "certificate": self.certificate.to_dict() if self.certificate else None,
        }


def _check_p(rs: RootSystem, p: int) -> None:
    if p < rs.coxeter_number:
        raise PBelowCoxeter(f"p={p} is below the Coxeter number {rs.coxeter_number} of {rs.group_type}")


def mf_decide_computed(rs: RootSystem, lam: Iterable[int], p: int | None) -> Verdict:
    """Decide MF by decomposing the projected character of L(lam)."""
    lam = _require_dominant(lam)
    r = restrict_weight(rs, lam)
    if not any(lam):
        return Verdict("MF", "ComputedDecomposition", 0, factors=(0,))
    ch, src = irreducible_projection(rs, lam, p)
    factors = decompose_projection(ch, p)
    again = recurrence_decompose(NSequence.from_a1char(ch, r, True, src), p)
    if again != factors:
        raise AssertionError(f"recurrence {dict(again)} disagrees with peeling {dict(factors)}")
    status = "MF" if a1mod.is_mf(factors) else "NotMF"
    return Verdict(status, "ComputedDecomposition", r,
                   factors=tuple(a1mod.sorted_factors(factors)), note=src)


def _dim_evidence(rs: RootSystem, lam: Weight, p: int) -> tuple[int, bool, str]:
    """(dim, exact?, source) for L(lam)."""
    if is_weyl_irreducible(rs, lam, p):
        return weyl_dim(rs, lam), True, "weyl-irreducible"
    ns = n_sequence(rs, lam, p, "irreducible")
    return ns.total(), ns.exact, ns.source


def _tilting(rs: RootSystem, lam: Weight, p: int, r: int) -> dict | None:
    if r < p or (r + 1) % p == 0 or not is_weyl_irreducible(rs, lam, p):
        return None
    lattice = in_root_lattice(rs, lam)
    fam, ell = rs.group_type.family, rs.rank
    extra = None
    if not lattice and fam in "BD":
        extra = comb(ell + 1, 2) if fam == "B" else comb(ell, 2)
        if p <= extra:
            return None
    return {"r": r, "r_mod_p": r % p, "weyl_irreducible": True,
            "in_root_lattice": lattice, "prime_bound": extra}


def _single_support(lam: Weight) -> int | None:
    nz = [i for i, c in enumerate(lam) if c]
    return nz[0] if len(nz) == 1 else None


def certify_not_mf(rs: RootSystem, lam: Iterable[int], p: int) -> Certificate | None:
    """First applicable certificate, in the order Tilting, DimBound, DimBoundOmega,
    WeightCount, Recurrence; None when nothing applies."""
    lam = _require_dominant(lam)
    _check_p(rs, p)
    if not is_restricted(lam, p):
        raise NotRestricted(f"{lam} is not {p}-restricted")
    if not any(lam):
        return None
    r = restrict_weight(rs, lam)
    mk = lambda kind, data: Certificate(kind, str(rs.group_type), lam, p, data)

    tilt = _tilting(rs, lam, p, r)
    if tilt:
        return mk("Tilting", tilt)

    dim, dim_exact, dim_src = _dim_evidence(rs, lam, p)
    B = a1mod.bound_B(r, p)
    if dim > B:
        return mk("DimBound", {"r": r, "dim": dim, "dim_exact": dim_exact,
                               "dim_source": dim_src, "B": B})
    if _single_support(lam) is not None and r % p and r >= 2:
        bound = B - a1mod.dim_irr(r - 2, p)
        if dim > bound:
            return mk("DimBoundOmega", {"r": r, "dim": dim, "dim_exact": dim_exact,
                                        "dim_source": dim_src, "B": B,
                                        "dim_r_minus_2": a1mod.dim_irr(r - 2, p)})

    ns = n_sequence(rs, lam, p, "irreducible")
    for d in range(r // 2 + 1):
        if ns[d] > d + 1:
            return mk("WeightCount", {"r": r, "d": d, "n_d": ns[d],
                                      "exactness": ns.exactness, "source": ns.source})

    if ns.exact:
        factors: Counter = Counter()
        for d in range(r // 2 + 1):
            factors = recurrence_decompose(ns, p, upto=d)
            if factors[r - 2 * d] >= 2:
                diff = ns[d] - ns[d - 1]
                part = "ii" if diff >= 2 and 1 <= d < min((r + 2) // 2, p) else None
                return mk("Recurrence", {"r": r, "d": d, "n_prefix": list(ns.n[: d + 1]),
                                         "m_d": factors[r - 2 * d], "lemma_part": part,
                                         "source": ns.source})
    return None


def verify_certificate(cert: Certificate) -> bool:
    """Re-derive every claim of a certificate from its group, weight and prime."""
    rs = build(GroupType.parse(cert.group))
    lam, p, data = tuple(cert.lam), cert.p, cert.data
    if p < rs.coxeter_number or not is_restricted(lam, p) or not any(lam):
        return False
    r = restrict_weight(rs, lam)
    if data.get("r") != r:
        return False
    kind = cert.kind
    if kind == "Tilting":
        return _tilting(rs, lam, p, r) is not None
    if kind in ("DimBound", "DimBoundOmega"):
        dim, _, _ = _dim_evidence(rs, lam, p)
        if dim < data["dim"]:
            return False
        bound = a1mod.bound_B(r, p)
        if kind == "DimBoundOmega":
            if _single_support(lam) is None or r % p == 0 or r < 2:
                return False
            bound -= a1mod.dim_irr(r - 2, p)
        return data["dim"] > bound
    if kind == "WeightCount":
        ns = n_sequence(rs, lam, p, "irreducible")
        d = data["d"]
        return ns[d] >= data["n_d"] > d + 1
    if kind == "Recurrence":
        ns = n_sequence(rs, lam, p, "irreducible")
        d = data["d"]
        if not ns.exact or list(ns.n[: d + 1]) != list(data["n_prefix"]):
            return False
        return recurrence_decompose(ns, p, upto=d)[r - 2 * d] >= 2
    return False


def decide(rs: RootSystem, lam: Iterable[int], p: int) -> Verdict:
    """Computational verdict: a decomposition when L(lam) is known, else a certificate."""
    lam = _require_dominant(lam)
    try:
        return mf_decide_computed(rs, lam, p)
    except CharacterUnavailable as exc:
        cert = certify_not_mf(rs, lam, p)
        r = restrict_weight(rs, lam)
        if cert is not None:
            return Verdict("NotMF", "Certificate", r, certificate=cert)
        return Verdict("Unknown", "None", r, note=str(exc))


# -- support filter ------------------------------------------------------------

@dataclass(frozen=True)
class FilterResult:
    passed: bool
    clause: str | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.passed


def _ij_mult(rs: RootSystem, lam: Weight, i: int, j: int, p: int | None) -> int:
    mu = tuple(c - a - b for c, a, b in zip(lam, rs.cartan[i], rs.cartan[j]))
    try:
        return rank2_dim_oracles(rs, lam, mu, p)
    except NotApplicable:
        # adjacent pairs always reduce to a rank 2 closed form; keep a safe fallback
        return freudenthal(rs, lam).mult(mu)


def support_filter(rs: RootSystem, lam: Iterable[int], p: int | None = None) -> FilterResult:
    """Necessary conditions on a two-node support for V restricted to A to be MF.

    With ``p`` given, lam must be p-restricted and p >= h so that L(lam)
    has the weights of Delta(lam).
    """
    lam = _require_dominant(lam)
    if p is not None:
        _check_p(rs, p)
        if not is_restricted(lam, p):
            raise NotRestricted(f"{lam} is not {p}-restricted")
    nz = [k for k, c in enumerate(lam) if c]
    if len(nz) <= 1:
        return FilterResult(True)
    if len(nz) > 2:
        return FilterResult(False, "i", "more than two nonzero coefficients")
    i, j = nz
    ci, cj = lam[i], lam[j]
    adjacent = rs.adjacent(i, j)
    end_i, end_j = rs.is_end_node(i), rs.is_end_node(j)
    if not adjacent and (ci > 1 or cj > 1):
        return FilterResult(False, "ii", "non-adjacent nodes need both coefficients 1")
    if not adjacent and not (end_i and end_j):
        return FilterResult(False, "iii", "non-adjacent nodes must both be end-nodes")
    if not (end_i or end_j):
        return FilterResult(False, "iv", "neither node is an end-node")
    if ci > 1 and cj > 1:
        if rs.rank != 2:
            return FilterResult(False, "v", "both coefficients exceed 1 outside rank 2")
        if _ij_mult(rs, lam, i, j, p) != 1:
            return FilterResult(False, "v", "lambda - alpha_i - alpha_j has multiplicity 2")
    if (ci > 1 or cj > 1) and rs.rank != 2:
        if _ij_mult(rs, lam, i, j, p) != 1:
            return FilterResult(False, "vi", "lambda - alpha_i - alpha_j has multiplicity 2")
    return FilterResult(True)
