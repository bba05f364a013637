import random
from itertools import combinations
from pathlib import Path

import pytest

from tonnetzlab.duads import (
    TotalsError,
    duads,
    find_totals,
    label_totals,
    letter_tables,
    parse_duad,
    synthemes,
)

GOLDEN = Path(__file__).parent / "golden"


def test_counts():
    assert len(duads()) == 15
    assert len(synthemes()) == 15
    assert len(find_totals()) == 6


def test_duad_in_three_synthemes():
    syn = synthemes()
    for d in duads():
        assert sum(d in s for s in syn) == 3
    assert [s for s in syn if (1, 2) in s] == [((1, 2), (3, 4), (5, 6)), ((1, 2), (3, 5), (4, 6)), ((1, 2), (3, 6), (4, 5))]


def test_synthemes_share_at_most_one_duad():
    pairs = list(combinations(synthemes(), 2))
    assert len(pairs) == 105
    assert all(len(set(a) & set(b)) <= 1 for a, b in pairs)


def test_totals_pairwise_share_one_syntheme():
    for a, b in combinations(find_totals(), 2):
        assert len(set(a) & set(b)) == 1


@pytest.mark.parametrize("n,render", [("i", "render_table_i"), ("ii", "render_table_ii"),
                                      ("iii", "render_table_iii"), ("iv", "render_table_iv")])
def test_tables_byte_for_byte(n, render):
    expected = (GOLDEN / f"table_{n}.txt").read_bytes()
    assert getattr(letter_tables(), render)().encode() == expected


def test_table_examples():
    t = letter_tables()
    assert t.syntheme_of("cd") == ((1, 2), (3, 6), (4, 5))
    assert t.syntheme_of("ef") == ((1, 2), (3, 5), (4, 6))
    assert t.syntheme_of("ba") == ((1, 2), (3, 4), (5, 6))
    assert t.number_duads["16"] == ("af", "bc", "de")
    assert t.number_totals[1] == (("ab", "cd", "ef"), ("ac", "be", "df"), ("ad", "bf", "ce"),
                                  ("ae", "bd", "cf"), ("af", "bc", "de"))
    with pytest.raises(KeyError):
        t.syntheme_of("aa")


def test_table_iv_inverts_table_ii():
    t = letter_tables()
    for ld, syn in t.letter_duads.items():
        for d in syn:
            assert ld in t.number_duads["".join(map(str, d))]
        assert t.letter_duad_of(syn) == ld


def test_labelling_ignores_input_order():
    fam = find_totals()
    shuffled = list(fam)
    random.Random(3).shuffle(shuffled)
    shuffled = [tuple(reversed(t)) for t in shuffled]
    assert label_totals(shuffled) == label_totals(fam)


def test_invalid_families():
    fam = find_totals()
    with pytest.raises(TotalsError):
        label_totals(fam[:5])
    with pytest.raises(TotalsError):
        label_totals(fam[:5] + [fam[0]])
    broken = list(fam)
    broken[0] = broken[0][:4] + (broken[1][0],)
    with pytest.raises(TotalsError):
        label_totals(broken)


@pytest.mark.parametrize("bad", ["1", "11", "123"])
def test_parse_duad_errors(bad):
    with pytest.raises(ValueError):
        parse_duad(bad)


def test_parse_duad():
    assert parse_duad("21") == (1, 2)
    assert parse_duad("ba") == ("a", "b")
