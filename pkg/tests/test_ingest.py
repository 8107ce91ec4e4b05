import pytest

from mfprincipal import ingest
from mfprincipal.errors import IngestError
from mfprincipal.jantzen import irr_character
from mfprincipal.principal import mf_decide_computed, n_sequence
from mfprincipal.rootsys import GroupType, build


@pytest.fixture(autouse=True)
def _clean():
    ingest.clear_registry()
    yield
    ingest.clear_registry()


def test_round_trip():
    a2 = build("A2")
    ch = irr_character(a2, (1, 1), 3)
    text = ingest.dump(GroupType("A", 2), (1, 1), 3, ch.mults)
    assert text.splitlines()[0] == "#group A 2 1,1 3"
    t = ingest.parse(text.splitlines(keepends=True))
    assert t.p == 3 and t.character() == ch
    assert ingest.dump(t.group_type, t.lam, t.p, dict(t.rows)) == text


def test_characteristic_zero_header():
    t = ingest.parse(["#group A 2 1,0 0", "1,0\t1"])
    assert t.p is None and t.character().dim() == 3


@pytest.mark.parametrize("lines, where, fragment", [
    (["1,0\t1"], 1, "before header"),
    (["#group A 2 1,0 3", "1,0\t1", "1,0\t1"], 3, "repeats line 2"),
    (["#group A 2 1,1 3", "1,1\t1", "0,0\t0"], 3, "not positive"),
    (["#group A 2 1,1 3", "1,1\t1", "2,-1\t1"], 3, "not dominant"),
    (["#group A 2 1,1 3", "1,1\t1", "3,0\t1"], 3, "not below"),
    (["#group A 2 1,1 3", "1,1\t1", "1;1\t1"], 3, "unparseable"),
    (["#group A 2 1,1 3", "0,0\t1"], 1, "highest weight"),
    (["#group A 2 1 3"], 1, "not a dominant weight"),
    (["#group Q 2 1,1 3"], 1, "bad header"),
])
def test_rejections_carry_line_numbers(lines, where, fragment):
    with pytest.raises(IngestError) as exc:
        ingest.parse(lines)
    assert any(no == where and fragment in msg for no, msg in exc.value.problems)
    assert f"line {where}" in str(exc.value)


def test_registered_table_feeds_engine(tmp_path):
    g2 = build("G2")
    low = n_sequence(g2, (3, 3), 7, "irreducible")
    assert not low.exact
    # stand-in data: the Weyl character, only to check the plumbing
    from mfprincipal.charalg import freudenthal
    path = tmp_path / "g2.tsv"
    path.write_text(ingest.dump(GroupType("G", 2), (3, 3), 7, freudenthal(g2, (3, 3)).mults))
    ingest.load(path)
    ns = n_sequence(g2, (3, 3), 7, "irreducible")
    assert ns.exact and ns.source == "ingested"
    assert mf_decide_computed(g2, (3, 3), 7).status == "NotMF"
