"""Ingestion of externally computed weight multiplicities of L(lam).

File format (UTF-8, LF line endings)::

    #group <family> <rank> <lambda> <p>
    <mu coords, comma separated><TAB><multiplicity>
    ...

``p`` is 0 for characteristic zero.  Blank lines and further ``#`` lines
are ignored.  Validated tables go into a process-wide registry that the
restriction engine consults before giving up on an irreducible character.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping

from .charalg import Character, _weight_set
from .errors import IngestError, MFError
from .rootsys import GroupType, RootSystem, Weight, build, is_dominant

HEADER = "#group"


@dataclass(frozen=True)
class IngestedTable:
    group_type: GroupType
    lam: Weight
    p: int | None  # None: characteristic zero
    rows: tuple[tuple[Weight, int], ...]

    @property
    def system(self) -> RootSystem:
        return build(self.group_type)

    def character(self) -> Character:
        return Character(self.system, dict(self.rows))

    @property
    def key(self) -> tuple[GroupType, Weight, int | None]:
        return (self.group_type, self.lam, self.p)


_REGISTRY: dict[tuple[GroupType, Weight, int | None], IngestedTable] = {}


def register(table: IngestedTable) -> None:
    _REGISTRY[table.key] = table


def lookup(rs: RootSystem, lam: Weight, p: int | None) -> IngestedTable | None:
    return _REGISTRY.get((rs.group_type, tuple(lam), p))


def clear_registry() -> None:
    _REGISTRY.clear()


def _coords(text: str) -> Weight:
    return tuple(int(x) for x in text.split(","))


def parse(lines: Iterable[str]) -> IngestedTable:
    problems: list[tuple[int, str]] = []
    header = None
    rows: dict[Weight, int] = {}
    where: dict[Weight, int] = {}
    for no, raw in enumerate(lines, start=1):
        line = raw.rstrip("\n").rstrip("\r")
        if not line.strip():
            continue
        if line.startswith(HEADER):
            if header is not None:
                problems.append((no, "duplicate header"))
                continue
            parts = line.split()
            if len(parts) != 5:
                problems.append((no, "header must read '#group family rank lambda p'"))
                continue
            try:
                t = GroupType(parts[1], int(parts[2]))
                lam = _coords(parts[3])
                p = int(parts[4])
            except (ValueError, MFError) as exc:
                problems.append((no, f"bad header: {exc}"))
                continue
            if len(lam) != t.rank or not is_dominant(lam):
                problems.append((no, f"lambda {parts[3]} is not a dominant weight of {t}"))
                continue
            if p < 0:
                problems.append((no, "p must be a prime or 0"))
                continue
            header = (t, lam, p or None, no)
            continue
        if line.startswith("#"):
            continue
        if header is None:
            problems.append((no, "data row before header"))
            continue
        cells = line.split("\t")
        if len(cells) != 2:
            problems.append((no, "expected 'mu<TAB>mult'"))
            continue
        try:
            mu = _coords(cells[0])
            mult = int(cells[1])
        except ValueError:
            problems.append((no, f"unparseable row {line!r}"))
            continue
        if len(mu) != header[0].rank:
            problems.append((no, f"weight {cells[0]} has the wrong length"))
        elif not is_dominant(mu):
            problems.append((no, f"weight {cells[0]} is not dominant"))
        elif mult <= 0:
            problems.append((no, f"multiplicity {mult} is not positive"))
        elif mu in rows:
            problems.append((no, f"weight {cells[0]} repeats line {where[mu]}"))
        else:
            rows[mu] = mult
            where[mu] = no
    if header is None:
        problems.append((0, "missing '#group' header"))
        raise IngestError(problems)
    t, lam, p, hline = header
    allowed = _weight_set(build(t), lam)
    for mu, no in where.items():
        if mu not in allowed:
            problems.append((no, f"weight {mu} is not below {lam} in its root-lattice coset"))
    if rows.get(lam) != 1:
        problems.append((hline, "highest weight must be present with multiplicity 1"))
    if problems:
        raise IngestError(sorted(problems))
    return IngestedTable(t, lam, p, tuple(sorted(rows.items(), reverse=True)))


def load(path: str | Path, *, register_table: bool = True) -> IngestedTable:
    with open(path, encoding="utf-8") as fh:
        table = parse(fh)
    if register_table:
        register(table)
    return table


def dump(t: GroupType, lam: Weight, p: int | None, mults: Mapping[Weight, int]) -> str:
    """Serialize a character of L(lam) in the ingestion format."""
    head = f"{HEADER} {t.family} {t.rank} {','.join(map(str, lam))} {p or 0}\n"
    body = "".join(
        f"{','.join(map(str, mu))}\t{m}\n" for mu, m in sorted(mults.items(), reverse=True)
    )
    return head + body
