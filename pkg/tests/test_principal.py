import itertools
import random
from collections import Counter

import pytest

from mfprincipal import a1mod
from mfprincipal.a1mod import A1Char
from mfprincipal.charalg import Character, freudenthal, weyl_dim
from mfprincipal.errors import (
    CharacterUnavailable,
    Inconclusive,
    NegativeMultiplicity,
    NotRestricted,
    PBelowCoxeter,
)
from mfprincipal.jantzen import irr_character, is_weyl_irreducible
from mfprincipal.principal import (
    Certificate,
    NSequence,
    certify_not_mf,
    char0_factors,
    decide,
    irreducible_projection,
    mf_decide_computed,
    n_sequence,
    p_adic_layers,
    project,
    recurrence_decompose,
    restrict_weight,
    support_filter,
    verify_certificate,
)
from mfprincipal.rootsys import build


def sym(d):
    return A1Char({**d, **{-w: m for w, m in d.items()}})


def test_restrict_weight():
    assert restrict_weight(build("G2"), (1, 0)) == 6
    assert restrict_weight(build("E8"), (0,) * 7 + (1,)) == 58
    assert restrict_weight(build("F4"), (0,) * 4) == 0


def test_p_adic_layers():
    assert p_adic_layers((4, 4), 3) == [(1, 1), (1, 1)]
    assert p_adic_layers((10, 10), 3) == [(1, 1), (0, 0), (1, 1)]
    assert p_adic_layers((0, 0), 5) == [(0, 0)]


def test_project_examples():
    b2, a2 = build("B2"), build("A2")
    assert project(b2, freudenthal(b2, (2, 0))) == sym({8: 1, 6: 1, 4: 2, 2: 2, 0: 2})
    assert project(a2, irr_character(a2, (1, 1), 3)) == sym({4: 1, 2: 2, 0: 1})
    assert project(a2, Character(a2, {(0, 0): 3})) == A1Char({0: 3})


def test_n_sequence_a2_pattern():
    a2 = build("A2")
    for p in (5, 7, 11):
        for b in range(1, p):
            a = p - 1 - b
            if a >= b > 0:
                ns = n_sequence(a2, (a, b), p, "irreducible")
                assert ns.exact
                assert [ns[d] for d in range(b + 1)] == [d + 1 for d in range(b + 1)]


def test_n_sequence_b2_c1_pattern():
    b2 = build("B2")
    for c in range(1, 6):
        p = 2 * c + 3
        if all(p % q for q in range(2, p)):
            ns = n_sequence(b2, (c, 1), p, "irreducible")
            assert ns.exact
            assert all(ns[d] == (2 * d + 1) // 3 + 1 for d in range(1, c + 1))
            assert ns[0] == 1


def test_n_sequence_flags():
    g2 = build("G2")
    weyl = n_sequence(g2, (3, 3), 7)
    assert weyl.exact and weyl.n == weyl.n[::-1] and weyl.total() == weyl_dim(g2, (3, 3))
    low = n_sequence(g2, (3, 3), 7, "irreducible")
    assert not low.exact and low.exactness == "LowerBound" and low[0] == 1
    assert all(x <= y for x, y in zip(low.n, weyl.n))
    with pytest.raises(ValueError):
        n_sequence(g2, (1, 0), 7, "other")


def test_recurrence_examples():
    # irreducible sequences
    assert recurrence_decompose(NSequence(4, (1, 2, 1, 2, 1), True, "t"), 3) == Counter({4: 1, 2: 1})
    ns = NSequence(8, (1, 1, 2, 2, 1, 2, 2, 1, 1), True, "t")
    assert recurrence_decompose(ns, 5) == Counter({8: 1, 4: 1})
    # the Weyl module Delta(2,0) at p=5 carries the extra trivial factor
    weyl = n_sequence(build("B2"), (2, 0), 5)
    assert weyl.half() == (1, 1, 2, 2, 2)
    assert recurrence_decompose(weyl, 5) == Counter({8: 1, 4: 1, 0: 1})
    single = NSequence.from_a1char(a1mod.irr_char(22, 5), 22, True, "t")
    assert recurrence_decompose(single, 5) == Counter({22: 1})
    with pytest.raises(NegativeMultiplicity):
        recurrence_decompose(NSequence(4, (1, 2, 1, 2, 1), True, "t"), 5)
    with pytest.raises(ValueError):
        recurrence_decompose(NSequence(2, (1, 1, 1), False, "t"), 5)


def test_mf_decide_examples():
    a2, b2 = build("A2"), build("B2")
    v = mf_decide_computed(a2, (1, 1), 3)
    assert v.status == "MF" and v.factors == (4, 2) and v.provenance == "ComputedDecomposition"
    v = mf_decide_computed(b2, (2, 0), 5)
    assert v.status == "MF" and v.factors == (8, 4)
    v = mf_decide_computed(b2, (0, 2), 5)
    assert v.status == "NotMF" and len(set(v.factors)) < len(v.factors)
    assert mf_decide_computed(a2, (0, 0), 3).factors == (0,)
    with pytest.raises(CharacterUnavailable):
        mf_decide_computed(build("G2"), (3, 3), 7)


def test_certificates():
    b2 = build("B2")
    c = certify_not_mf(b2, (0, 2), 5)
    assert c.kind == "Tilting" and c.data["r"] == 6 and verify_certificate(c)
    c = certify_not_mf(b2, (0, 3), 5)
    assert c.kind == "DimBoundOmega" and c.data["dim"] == 20
    assert c.data["B"] - c.data["dim_r_minus_2"] == 18 and verify_certificate(c)
    a3 = build("A3")
    for p in (5, 7, 11, 13):
        c = certify_not_mf(a3, (p - 2, 1, 0), p)
        assert c.kind == "DimBound" and verify_certificate(c)
        assert c.data["dim"] == (p - 1) * (p * p + 7 * p + 18) // 6
        assert c.data["B"] == (p + 1) * (3 * p - 1) // 2
    assert certify_not_mf(build("A2"), (1, 1), 3) is None
    with pytest.raises(PBelowCoxeter):
        certify_not_mf(build("G2"), (1, 0), 5)
    with pytest.raises(NotRestricted):
        certify_not_mf(b2, (5, 0), 5)


def test_tampered_certificates_fail():
    b2 = build("B2")
    c = certify_not_mf(b2, (0, 3), 5)
    bad = Certificate(c.kind, c.group, c.lam, c.p, {**c.data, "dim": 18})
    assert not verify_certificate(bad)
    moved = Certificate("Tilting", "B2", (0, 3), 5, {"r": 9})
    assert not verify_certificate(moved)
    assert verify_certificate(Certificate.from_dict(c.to_dict()))


def test_lower_bound_certificate_on_inconclusive_weight():
    g2 = build("G2")
    v = decide(g2, (3, 3), 7)
    assert v.status == "NotMF" and v.provenance == "Certificate"
    assert verify_certificate(v.certificate)


def test_support_filter():
    assert support_filter(build("A4"), (0, 1, 0, 1)).clause == "iii"
    assert support_filter(build("A3"), (2, 2, 0)).clause == "v"
    assert support_filter(build("A5"), (0, 0, 4, 0, 0))
    assert support_filter(build("A3"), (1, 1, 1)).clause == "i"
    assert support_filter(build("A4"), (2, 0, 0, 1)).clause == "ii"
    assert support_filter(build("D5"), (0, 1, 1, 0, 0)).clause == "iv"
    assert support_filter(build("A3"), (2, 1, 0)).clause == "vi"
    # lambda - 12 has multiplicity 1 when a + b = p - 1
    assert support_filter(build("A2"), (3, 3), 7) and not support_filter(build("A2"), (3, 3))
    with pytest.raises(NotRestricted):
        support_filter(build("A2"), (7, 0), 7)


def _random_instances(rng, count):
    names = ["A2", "B2", "G2", "A3", "B3", "C3"]
    primes = {"A2": [3, 5, 7, 11], "B2": [5, 7, 11], "G2": [7, 11, 13], "A3": [5, 7], "B3": [7, 11], "C3": [7, 11]}
    out = []
    while len(out) < count:
        name = rng.choice(names)
        rs = build(name)
        p = rng.choice(primes[name])
        lam = tuple(rng.randrange(p) for _ in range(rs.rank))
        if rs.rank > 2 and sum(lam) > 5:
            continue
        out.append((rs, lam, p))
    return out


def test_recurrence_agrees_with_peeling_randomized():
    rng = random.Random(7)
    done = 0
    for rs, lam, p in _random_instances(rng, 700):
        try:
            ch, _ = irreducible_projection(rs, lam, p)
        except CharacterUnavailable:
            continue
        r = restrict_weight(rs, lam)
        ns = NSequence.from_a1char(ch, r, True, "t")
        assert recurrence_decompose(ns, p) == a1mod.decompose(ch, p)
        done += 1
    assert done >= 500


def test_mf_implies_weight_bound_and_certificates_agree():
    rng = random.Random(11)
    for rs, lam, p in _random_instances(rng, 300):
        try:
            v = mf_decide_computed(rs, lam, p)
        except CharacterUnavailable:
            continue
        ns = n_sequence(rs, lam, p, "irreducible")
        cert = certify_not_mf(rs, lam, p)
        if v.status == "MF":
            assert all(ns[d] <= d + 1 for d in range(ns.r // 2 + 1))
            assert cert is None
        elif cert is not None:
            assert verify_certificate(cert)


def test_char0_branch():
    for name in ["A2", "A3", "B2", "G2", "C3"]:
        rs = build(name)
        for lam in itertools.product(range(3), repeat=rs.rank):
            ch = project(rs, freudenthal(rs, lam))
            n = ch.n_sequence(restrict_weight(rs, lam))
            expected = Counter({len(n) - 1 - 2 * d: n[d] - (n[d - 1] if d else 0)
                                for d in range(len(n) // 2 + 1)})
            expected = +expected
            assert all(n[d] >= (n[d - 1] if d else 0) for d in range(len(n) // 2 + 1))
            assert a1mod.char0_decompose(ch) == expected == char0_factors(rs, lam)


def test_steinberg_layers():
    a2 = build("A2")
    ch, _ = irreducible_projection(a2, (4, 4), 3)
    assert ch == project(a2, irr_character(a2, (1, 1), 3)) * project(a2, irr_character(a2, (1, 1), 3)).twist(3)
    v = mf_decide_computed(a2, (10, 10), 3)
    assert v.status == "MF" and v.factors == (40, 38, 22, 20)
