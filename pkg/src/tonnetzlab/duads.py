"""Duads, synthemes and totals on six tags, and the letter tables they induce.

A duad is a pair of tags from 1-6, a syntheme is three disjoint duads, and a
total is five synthemes covering all fifteen duads.  There are six totals;
labelling them a-f turns pairs of letters back into synthemes and triples of
letter pairs back into duads.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

__all__ = [
    "Duad",
    "Syntheme",
    "Total",
    "TotalsError",
    "LetterTables",
    "TAGS",
    "LETTERS",
    "duads",
    "synthemes",
    "find_totals",
    "label_totals",
    "letter_tables",
    "duad_text",
    "syntheme_text",
    "parse_duad",
]

TAGS = (1, 2, 3, 4, 5, 6)
LETTERS = ("a", "b", "c", "d", "e", "f")

Duad = tuple[int, int]
Syntheme = tuple[Duad, Duad, Duad]

# Column order of the "numbers as totals of letter-synthemes" table: for each
# number, the partner numbers whose duads fill its five columns, as laid out
# in the standard printed table (cyclic from n+1, except row 2 which is sorted).
TABLE_III_PARTNERS: dict[int, tuple[int, ...]] = {
    1: (2, 3, 4, 5, 6),
    2: (1, 3, 4, 5, 6),
    3: (4, 5, 6, 1, 2),
    4: (5, 6, 1, 2, 3),
    5: (6, 1, 2, 3, 4),
    6: (1, 2, 3, 4, 5),
}


class TotalsError(ValueError):
    pass


def duads(tags: Sequence = TAGS) -> list[tuple]:
    return list(combinations(tags, 2))


def synthemes(tags: Sequence = TAGS) -> list[tuple]:
    """All perfect matchings of the six tags, as sorted duad triples, sorted."""
    out = []
    for trio in combinations(duads(tags), 3):
        if len({t for d in trio for t in d}) == 6:
            out.append(tuple(sorted(trio)))
    return sorted(out)


def duad_text(d) -> str:
    return "".join(str(t) for t in d)


def parse_duad(text: str) -> Duad:
    if len(text) != 2 or text[0] == text[1]:
        raise ValueError(f"not a duad: {text!r}")
    a, b = sorted(text)
    return (int(a), int(b)) if a.isdigit() else (a, b)


def syntheme_text(s) -> str:
    return ", ".join(duad_text(d) for d in sorted(s))


@dataclass(frozen=True)
class Total:
    letter: str
    synthemes: tuple[Syntheme, ...]


def find_totals(tags: Sequence = TAGS) -> list[tuple[Syntheme, ...]]:
    """All five-syntheme families covering every duad exactly once."""
    syn = synthemes(tags)
    out = []
    for five in combinations(syn, 5):
        if len({d for s in five for d in s}) == 15:
            out.append(tuple(sorted(five)))
    return sorted(out)


def _validate_family(family: list[tuple[Syntheme, ...]]) -> None:
    valid_synthemes = set(synthemes())
    all_duads = set(duads())
    if len(family) != 6:
        raise TotalsError(f"expected 6 totals, got {len(family)}")
    for tot in family:
        if len(tot) != 5 or any(s not in valid_synthemes for s in tot):
            raise TotalsError(f"not a family of five synthemes: {tot}")
        if {d for s in tot for d in s} != all_duads:
            raise TotalsError(f"synthemes {tot} do not cover every duad once")
    if len(set(family)) != 6:
        raise TotalsError("repeated total")
    for t1, t2 in combinations(family, 2):
        if len(set(t1) & set(t2)) != 1:
            raise TotalsError("two totals must share exactly one syntheme")


def label_totals(family: Iterable[Iterable[Syntheme]] | None = None) -> list[Total]:
    """Assign letters a-f canonically.

    ``a`` is the lexicographically least total; the other five letters follow
    the order of the synthemes of ``a``, each naming the total that shares that
    syntheme with ``a``.  Input letters, if any, are ignored.
    """
    if family is None:
        family = find_totals()
    fam = [tuple(sorted(tuple(sorted(tuple(sorted(d)) for d in s)) for s in (t.synthemes if isinstance(t, Total) else t))) for t in family]
    _validate_family(fam)
    fam.sort()
    first = fam[0]
    ordered = [first]
    for s in first:
        ordered.append(next(t for t in fam if t is not first and s in t))
    return [Total(letter, tot) for letter, tot in zip(LETTERS, ordered)]


@dataclass(frozen=True)
class LetterTables:
    letter_totals: dict[str, tuple[Syntheme, ...]]  # letter -> five synthemes
    letter_duads: dict[str, Syntheme]  # "ab" -> syntheme
    number_totals: dict[int, tuple[tuple[str, str, str], ...]]  # number -> five letter-synthemes
    number_duads: dict[str, tuple[str, str, str]]  # "12" -> letter-syntheme

    def syntheme_of(self, letter_duad: str) -> Syntheme:
        key = "".join(sorted(letter_duad))
        try:
            return self.letter_duads[key]
        except KeyError:
            raise KeyError(f"unknown letter duad {letter_duad!r}") from None

    def letter_duad_of(self, s: Syntheme) -> str:
        s = tuple(sorted(s))
        for k, v in self.letter_duads.items():
            if v == s:
                return k
        raise KeyError(s)

    def render_table_i(self) -> str:
        lines = [f"{letter} | " + " | ".join(syntheme_text(s) for s in row) for letter, row in self.letter_totals.items()]
        return "\n".join(lines) + "\n"

    def render_table_ii(self) -> str:
        return _three_columns([(k, syntheme_text(v)) for k, v in self.letter_duads.items()])

    def render_table_iii(self) -> str:
        lines = [
            f"{n} | " + " | ".join(", ".join(ls) for ls in row) for n, row in self.number_totals.items()
        ]
        return "\n".join(lines) + "\n"

    def render_table_iv(self) -> str:
        return _three_columns([(k, ", ".join(v)) for k, v in self.number_duads.items()])

    def render(self) -> str:
        parts = [
            ("Table I: letters as totals of number-synthemes", self.render_table_i()),
            ("Table II: duads of letters as synthemes of numbers", self.render_table_ii()),
            ("Table III: numbers as totals of letter-synthemes", self.render_table_iii()),
            ("Table IV: duads of numbers as synthemes of letters", self.render_table_iv()),
        ]
        return "\n".join(f"{title}\n{body}" for title, body in parts)


def _three_columns(entries: list[tuple[str, str]]) -> str:
    rows = (len(entries) + 2) // 3
    cols = [entries[i * rows : (i + 1) * rows] for i in range(3)]
    lines = []
    for r in range(rows):
        cells = [f"{c[r][0]} | {c[r][1]}" for c in cols if r < len(c)]
        lines.append(" || ".join(cells))
    return "\n".join(lines) + "\n"


def letter_tables(totals: Sequence[Total] | None = None) -> LetterTables:
    totals = label_totals(totals)
    by_letter = {t.letter: t.synthemes for t in totals}
    letter_duads: dict[str, Syntheme] = {}
    for x, y in combinations(LETTERS, 2):
        shared = set(by_letter[x]) & set(by_letter[y])
        letter_duads[x + y] = shared.pop()
    letter_totals = {
        x: tuple(letter_duads["".join(sorted(x + y))] for y in LETTERS if y != x) for x in LETTERS
    }
    number_duads: dict[str, tuple[str, str, str]] = {}
    for d in duads():
        hits = tuple(sorted(k for k, s in letter_duads.items() if d in s))
        if len(hits) != 3 or len({c for k in hits for c in k}) != 6:
            raise TotalsError(f"duad {duad_text(d)} does not map to a letter-syntheme")
        number_duads[duad_text(d)] = hits
    number_totals = {
        n: tuple(number_duads[duad_text(tuple(sorted((n, j))))] for j in TABLE_III_PARTNERS[n]) for n in TAGS
    }
    return LetterTables(letter_totals, letter_duads, number_totals, number_duads)
