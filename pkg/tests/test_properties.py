"""Randomised properties over small graphs."""

import itertools

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from tr2dom.graph_core import Graph, canonical_form, relabel
from tr2dom.labeling import Labeling, is_R2DF, is_TR2DF, is_TRDF, is_near_TR2DF
from tr2dom.solvers import STANDARD_KINDS, ParameterKind, brute_force, exact

K = ParameterKind
SETTINGS = settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, k in zip(pairs, keep) if k])


@st.composite
def graph_and_labeling(draw):
    g = draw(graphs(max_n=7))
    vals = draw(st.lists(st.integers(0, 2), min_size=g.n, max_size=g.n))
    return g, Labeling(tuple(vals))


@SETTINGS
@given(graphs())
def test_exact_agrees_with_brute_force(g):
    for kind in ParameterKind:
        vertex = g.n - 1 if kind is K.GAMMA_TR2_NEAR else None
        a, b = exact(g, kind, vertex), brute_force(g, kind, vertex)
        assert (a.feasible, a.value, a.witness) == (b.feasible, b.value, b.witness)


@SETTINGS
@given(graphs(), st.randoms(use_true_random=False))
def test_values_invariant_under_relabelling(g, rng):
    perm = list(range(g.n))
    rng.shuffle(perm)
    h = relabel(g, perm)
    assert canonical_form(h) == canonical_form(g)
    for kind in STANDARD_KINDS:
        assert exact(g, kind).value == exact(h, kind).value


@SETTINGS
@given(graphs(min_n=2), st.data())
def test_adding_an_edge_never_increases_a_parameter(g, data):
    missing = [(u, v) for u, v in itertools.combinations(range(g.n), 2) if not g.has_edge(u, v)]
    if not missing:
        return
    e = data.draw(st.sampled_from(missing))
    h = Graph.from_edges(g.n, list(g.edges()) + [e])
    for kind in STANDARD_KINDS:
        a, b = exact(g, kind), exact(h, kind)
        if a.feasible:
            assert b.feasible and b.value <= a.value


@SETTINGS
@given(graph_and_labeling())
def test_predicate_hierarchy(gf):
    g, f = gf
    if is_TRDF(g, f):
        assert is_TR2DF(g, f)
    if is_TR2DF(g, f):
        assert is_R2DF(g, f)
        assert all(is_near_TR2DF(g, f, v) for v in range(g.n))


@SETTINGS
@given(graphs(min_n=2, max_n=8))
def test_near_value_at_most_full_value(g):
    full = exact(g, K.GAMMA_TR2)
    for v in range(g.n):
        near = exact(g, K.GAMMA_TR2_NEAR, v)
        if full.feasible:
            assert near.feasible and near.value <= full.value
