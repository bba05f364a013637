import json
import math

import pytest

from tonnetzlab.catalog import build_pentatonic_tonnetz, heawood_graph, tutte_eight_cage
from tonnetzlab.incidence import (
    Block,
    IncidenceError,
    IncidenceStructure,
    biregularity,
    count_tetracycles,
    dual,
    dumps,
    girth,
    incidence_from_levi,
    is_configuration,
    levi_from_incidence,
    loads,
)

FANO_LINES = [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5)]


def fano():
    return IncidenceStructure(
        "fano", tuple(str(i) for i in range(1, 8)), tuple(Block(f"L{i}", pts) for i, pts in enumerate(FANO_LINES))
    )


def path_structure(n_points, blocks):
    return IncidenceStructure("p", tuple(f"p{i}" for i in range(n_points)),
                              tuple(Block(f"b{i}", b) for i, b in enumerate(blocks)))


def test_fano_levi_counts():
    g = levi_from_incidence(fano())
    assert g.num_vertices == 14
    assert len(g.edges) == 21
    assert g.n_white == 7 and g.n_black == 7


def test_empty_structure():
    s = IncidenceStructure("empty", (), ())
    g = levi_from_incidence(s)
    assert g.num_vertices == 0 and not g.edges
    assert girth(g) == math.inf


def test_pentatonic_has_thirty_incidences():
    g = levi_from_incidence(build_pentatonic_tonnetz())
    assert g.num_vertices == 20
    assert len(g.edges) == 30


def test_round_trip_through_levi():
    s = fano()
    back = incidence_from_levi(levi_from_incidence(s))
    assert back.point_labels == s.point_labels
    assert back.block_labels == s.block_labels
    assert [b.points for b in back.blocks] == [b.points for b in s.blocks]


def test_blocks_are_sorted_sets():
    b = Block("x", (3, 1, 2))
    assert b.points == (1, 2, 3)


@pytest.mark.parametrize(
    "points, blocks, needle",
    [
        (("a", "a"), [], "a"),
        (("a", "b"), [("L", (0, 1)), ("L", (0,))], "L"),
        (("a", "b"), [("L", (0, 0))], "L"),
        (("a", "b"), [("L", (0, 5))], "L"),
        (("a", "b"), [("L", (0, 1)), ("M", (1, 0))], "M"),
    ],
)
def test_invalid_structures_name_the_label(points, blocks, needle):
    with pytest.raises(IncidenceError, match=needle):
        IncidenceStructure("bad", points, tuple(Block(lab, pts) if len(set(pts)) == len(pts) else _raw(lab, pts)
                                               for lab, pts in blocks))


def _raw(label, pts):
    b = Block.__new__(Block)
    object.__setattr__(b, "label", label)
    object.__setattr__(b, "points", tuple(pts))
    return b


def test_biregularity_reports():
    rep = biregularity(levi_from_incidence(fano()))
    assert rep.is_biregular and rep.is_square
    assert (rep.m, rep.n, rep.r, rep.k) == (7, 7, 3, 3)
    assert rep.m * rep.r == rep.n * rep.k


def test_path_on_three_vertices_is_biregular():
    # a-L-b: white degrees 1 and 1, black degree 2, so the degrees are uniform per side
    rep = biregularity(levi_from_incidence(path_structure(2, [(0, 1)])))
    assert rep.is_biregular
    assert (rep.r, rep.k) == (1, 2)


def test_path_on_four_vertices_is_not_biregular():
    # a-L-b-M : white degrees 1 and 2
    rep = biregularity(levi_from_incidence(path_structure(2, [(0, 1), (1,)])))
    assert not rep.is_biregular
    assert rep.r is None and rep.k is None


def test_girth_values():
    assert girth(levi_from_incidence(fano())) == 6
    assert girth(heawood_graph()) == 6
    assert girth(tutte_eight_cage()) == 8
    assert girth(levi_from_incidence(path_structure(2, [(0, 1)]))) == math.inf


def test_is_configuration_examples():
    assert is_configuration(levi_from_incidence(fano()))
    hexa = path_structure(3, [(0, 1), (1, 2), (0, 2)])
    assert is_configuration(levi_from_incidence(hexa))
    assert biregularity(levi_from_incidence(hexa)).symbol == "{3_2}"
    # two blocks sharing two points give a 4-cycle
    square = path_structure(3, [(0, 1, 2), (0, 1)])
    assert not is_configuration(levi_from_incidence(square))


def test_dual_transposes():
    s = path_structure(3, [(0, 1), (1, 2)])
    d = dual(s)
    assert d.point_labels == s.block_labels
    assert d.block_labels == s.point_labels
    assert [b.points for b in d.blocks] == [(0,), (0, 1), (1,)]
    dd = dual(d)
    assert [b.points for b in dd.blocks] == [b.points for b in s.blocks]


def test_tetracycles_of_heawood_and_small_cases():
    assert count_tetracycles(heawood_graph())[0] == 0
    edge = IncidenceStructure.from_sets("k", ["a", "b"], [("L", ["a", "b"])])
    assert count_tetracycles(levi_from_incidence(edge)) == (0, [])
    n, cyc = count_tetracycles(levi_from_incidence(path_structure(3, [(0, 1, 2), (0, 1)])))
    assert n == 1
    assert set(cyc[0]) == {"p0", "p1", "b0", "b1"}


def test_json_round_trip():
    s = fano()
    text = dumps(s)
    assert loads(text) == s
    doc = json.loads(text)
    assert set(doc) == {"name", "points", "blocks"}
    assert doc["blocks"][0] == {"label": "L0", "points": [0, 1, 2]}


def test_json_rejects_duplicate_labels():
    doc = {"name": "x", "points": ["a", "a"], "blocks": []}
    with pytest.raises(IncidenceError, match="'a'"):
        loads(json.dumps(doc))
    doc = {"name": "x", "points": ["a", "b"], "blocks": [{"label": "L", "points": [0]}, {"label": "L", "points": [1]}]}
    with pytest.raises(IncidenceError, match="'L'"):
        loads(json.dumps(doc))
