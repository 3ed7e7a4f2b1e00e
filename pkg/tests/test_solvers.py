import itertools
import random

import pytest

from tr2dom.families import complete, cycle, empty, figure1_graph, path, random_graph, star
from tr2dom.graph_core import Graph, SizeLimitError
from tr2dom.labeling import Labeling
from tr2dom.solvers import (
    STANDARD_KINDS,
    InfeasibleError,
    ParameterKind,
    all_optimal,
    brute_force,
    closed_form,
    exact,
    near_stable_vertices,
    predicate,
    special_vertex_sets,
)

K = ParameterKind
ALL_KINDS = list(ParameterKind)


def naive_optima(g: Graph, kind: ParameterKind, vertex=None) -> list[Labeling]:
    """Every optimal labeling, straight from the definition predicates."""
    top = 1 if kind.is_set else 2
    ok = predicate(kind, vertex)
    found = [Labeling(v) for v in itertools.product(range(top + 1), repeat=g.n) if ok(g, Labeling(v))]
    if not found:
        return []
    best = min(f.weight for f in found)
    return sorted(f for f in found if f.weight == best)


FIG1 = {K.GAMMA: 3, K.GAMMA_T: 4, K.GAMMA_R2: 5, K.GAMMA_TR2: 6, K.GAMMA_TR: 7, K.GAMMA_X2: 8}


@pytest.mark.parametrize("kind", list(FIG1))
def test_figure1_values(backend, kind):
    res = exact(figure1_graph(), kind)
    assert res.value == FIG1[kind]
    assert res.feasible and res.witness.weight == FIG1[kind]
    assert brute_force(figure1_graph(), kind).value == FIG1[kind]


def test_small_named_values(backend):
    assert exact(path(2), K.GAMMA_TR2).value == 2
    assert exact(path(3), K.GAMMA_TR2).value == 3
    assert exact(cycle(4), K.GAMMA_TR2).value == 3
    assert exact(cycle(4), K.GAMMA_T).value == 2
    assert exact(cycle(5), K.GAMMA_TR2).value == 4
    assert exact(star(6), K.GAMMA_TR2).value == 3
    assert exact(star(6), K.GAMMA_R2).value == 2
    assert exact(complete(5), K.GAMMA_TR2).value == 2


@pytest.mark.parametrize("seed", range(25))
def test_exact_matches_definition_oracle(backend, seed):
    rng = random.Random(seed)
    g = random_graph(rng.randint(1, 6), rng.uniform(0.2, 0.9), seed)
    for kind in ALL_KINDS:
        vertex = rng.randrange(g.n) if kind is K.GAMMA_TR2_NEAR else None
        optima = naive_optima(g, kind, vertex)
        res = exact(g, kind, vertex)
        if not optima:
            assert not res.feasible and res.value is None
            continue
        assert res.value == optima[0].weight
        # the reported witness is the lexicographically smallest optimum
        assert res.witness == optima[0]
        assert all_optimal(g, kind, vertex) == optima


@pytest.mark.parametrize("seed", range(20))
def test_exact_matches_kernel_brute_force(backend, seed):
    rng = random.Random(1000 + seed)
    g = random_graph(rng.randint(2, 9), rng.uniform(0.2, 0.8), seed)
    for kind in ALL_KINDS:
        vertex = 0 if kind is K.GAMMA_TR2_NEAR else None
        a, b = exact(g, kind, vertex), brute_force(g, kind, vertex)
        assert (a.value, a.witness) == (b.value, b.witness)


def test_backends_agree_on_node_counts():
    from tr2dom.solvers import backend as be

    if len(be.available()) < 2:
        pytest.skip("compiled kernel not built")
    g = random_graph(14, 0.3, 7)
    out = []
    for name in ("compiled", "python"):
        k = be.get(name)
        order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
        out.append(k.search_min(list(g.adj), g.n, K.GAMMA_TR2.code, -1, order, g.n))
    assert out[0] == out[1]


def test_infeasible_total_kinds():
    g = Graph.from_edges(3, [(0, 1)])
    for kind in STANDARD_KINDS:
        res = exact(g, kind)
        assert res.feasible == (not kind.is_total)
    with pytest.raises(InfeasibleError):
        all_optimal(g, K.GAMMA_TR2)
    assert exact(empty(1), K.GAMMA).value == 1
    assert exact(empty(1), K.GAMMA_R2).value == 1  # a lone 1 leaves no zero to cover


def test_threads_do_not_change_results():
    g = random_graph(16, 0.25, 3)
    for kind in STANDARD_KINDS:
        a, b = exact(g, kind, threads=1), exact(g, kind, threads=4)
        assert (a.value, a.witness, a.feasible) == (b.value, b.witness, b.feasible)


def test_limits_and_argument_errors():
    with pytest.raises(SizeLimitError):
        exact(path(31), K.GAMMA)
    assert exact(path(31), K.GAMMA, limit=40).value == 11
    with pytest.raises(SizeLimitError):
        brute_force(path(17), K.GAMMA)
    with pytest.raises(ValueError):
        exact(path(3), K.GAMMA_TR2_NEAR)
    with pytest.raises(ValueError):
        exact(path(3), K.GAMMA_TR2_NEAR, 3)


def test_parameter_kind_names():
    assert K.from_cli("gamma-tr2") is K.GAMMA_TR2
    assert K.GAMMA_X2.cli_name == "gamma-x2"
    with pytest.raises(ValueError):
        K.from_cli("gamma-q")


@pytest.mark.parametrize("n", range(2, 13))
def test_closed_forms_paths(n):
    for kind in (K.GAMMA_TR2, K.GAMMA_X2):
        assert exact(path(n), kind).value == closed_form(kind, "path", n)


@pytest.mark.parametrize("n", range(3, 13))
def test_closed_forms_cycles(n):
    for kind in (K.GAMMA_TR2, K.GAMMA_X2):
        assert exact(cycle(n), kind).value == closed_form(kind, "cycle", n)


def test_closed_form_errors():
    with pytest.raises(ValueError):
        closed_form(K.GAMMA, "path", 4)
    with pytest.raises(ValueError):
        closed_form(K.GAMMA_TR2, "cycle", 2)


def test_special_sets_p4_and_star():
    s = special_vertex_sets(path(4))
    assert s.S_tR2 == {1, 2} and s.L_tR1 == {0, 3}
    assert s.S_1 == frozenset() and s.W_0 == frozenset()
    s = special_vertex_sets(star(4))
    assert s.S_tR2 == {0}
    s = special_vertex_sets(path(2))
    assert s.S_1 == {0, 1}


def test_near_stable_examples():
    # every leaf of a star of order >= 4 is near stable
    assert {1, 2, 3, 4} <= near_stable_vertices(star(5))
    assert near_stable_vertices(path(2)) == {0, 1}
    # P_3: relaxing an end lets 011 work, so the ends are not near stable
    assert near_stable_vertices(path(3)) == {1}


def test_fallback_selected_without_extension():
    import subprocess
    import sys

    code = (
        "import sys; sys.modules['tr2dom.solvers._kernel'] = None\n"
        "from tr2dom.solvers import available_backends, current_backend, exact, ParameterKind\n"
        "from tr2dom.families import figure1_graph\n"
        "assert available_backends() == ['python'] and current_backend() == 'python'\n"
        "print(exact(figure1_graph(), ParameterKind.GAMMA_TR2).value)\n"
    )
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "6"
