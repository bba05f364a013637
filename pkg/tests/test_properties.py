"""Randomised invariants over small incidence structures."""

from hypothesis import assume, given, settings, strategies as st

from oracles import brute_tetracycles, naive_cycles, naive_girth
from tonnetzlab.canonical import are_isomorphic, canonical_form
from tonnetzlab.cycles import enumerate_cycles
from tonnetzlab.incidence import (
    IncidenceStructure,
    LeviGraph,
    count_tetracycles,
    dual,
    girth,
    is_configuration,
    levi_from_incidence,
    loads,
    dumps,
    biregularity,
)


@st.composite
def structures(draw, max_points=6, max_blocks=6):
    n = draw(st.integers(1, max_points))
    subsets = st.frozensets(st.integers(0, n - 1), min_size=1, max_size=n)
    blocks = draw(st.lists(subsets, min_size=1, max_size=max_blocks, unique=True))
    return IncidenceStructure(
        "h", tuple(f"p{i}" for i in range(n)), tuple((f"b{j}", tuple(sorted(b))) for j, b in enumerate(blocks))
    )


def relabel(g: LeviGraph, perm_w, perm_b) -> LeviGraph:
    perm = list(perm_w) + [g.n_white + x for x in perm_b]
    labels = [None] * g.num_vertices
    for v, p in enumerate(perm):
        labels[p] = g.labels[v]
    edges = frozenset((perm[u], perm[w]) for u, w in g.edges)
    return LeviGraph(tuple(labels), g.n_white, edges, g.name)


def distinct_columns(s):
    cols = [frozenset(b.label for b in s.blocks if i in b.points) for i in range(s.num_points)]
    return len(set(cols)) == len(cols)


@settings(max_examples=150, deadline=None)
@given(structures())
def test_edges_count_incidences(s):
    g = levi_from_incidence(s)
    assert len(g.edges) == sum(len(b.points) for b in s.blocks)


@settings(max_examples=150, deadline=None)
@given(structures())
def test_json_round_trip(s):
    assert loads(dumps(s)) == s


@settings(max_examples=150, deadline=None)
@given(structures())
def test_girth_even_and_matches_oracle(s):
    g = levi_from_incidence(s)
    gi = girth(g)
    assert gi == naive_girth(g.adjacency)
    assert gi == float("inf") or gi % 2 == 0


@settings(max_examples=150, deadline=None)
@given(structures())
def test_configuration_equivalence(s):
    g = levi_from_incidence(s)
    shares_two = any(len(set(a.points) & set(b.points)) >= 2 for i, a in enumerate(s.blocks) for b in s.blocks[i + 1:])
    rep = biregularity(g)
    assert is_configuration(g) == (rep.is_biregular and rep.is_square and not shares_two and girth(g) >= 6)
    if not shares_two:
        assert girth(g) >= 6


@settings(max_examples=100, deadline=None)
@given(structures())
def test_dual_is_an_involution(s):
    assume(distinct_columns(s) and all(any(i in b.points for b in s.blocks) for i in range(s.num_points)))
    g = levi_from_incidence(s)
    assert are_isomorphic(levi_from_incidence(dual(dual(s))), g) is not None
    d = levi_from_incidence(dual(s))
    assert are_isomorphic(d, g, respect_colors=False) is not None


@settings(max_examples=100, deadline=None)
@given(structures(), st.randoms(use_true_random=False))
def test_canonical_form_relabel_invariant(s, rnd):
    g = levi_from_incidence(s)
    pw = list(range(g.n_white))
    pb = list(range(g.n_black))
    rnd.shuffle(pw)
    rnd.shuffle(pb)
    h = relabel(g, pw, pb)
    assert canonical_form(g) == canonical_form(h)
    phi = are_isomorphic(g, h)
    assert phi is not None
    for u, w in g.edges:
        assert h.index(phi[g.labels[w]]) in h.adjacency[h.index(phi[g.labels[u]])]


@settings(max_examples=100, deadline=None)
@given(structures())
def test_cycles_match_oracle(s):
    g = levi_from_incidence(s)
    got = {frozenset(frozenset(e) for e in c.edges()) for c in enumerate_cycles(g)}
    assert got == naive_cycles(g.adjacency)


@settings(max_examples=100, deadline=None)
@given(structures())
def test_tetracycles_match_oracle(s):
    g = levi_from_incidence(s)
    n, cyc = count_tetracycles(g)
    assert n == len(brute_tetracycles(g.adjacency)) == len(cyc)
