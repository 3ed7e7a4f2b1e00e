import pytest

from tr2dom.families import cycle, figure1_graph, path, star
from tr2dom.graph_core import Graph
from tr2dom.labeling import (
    Labeling,
    indicator,
    is_DF,
    is_double_dominating_set,
    is_dominating_set,
    is_near_TR2DF,
    is_R2DF,
    is_TDF,
    is_total_dominating_set,
    is_TR2DF,
    is_TRDF,
    private_neighbors,
    weight,
    weight_on,
)


def L(s: str) -> Labeling:
    return Labeling(tuple(int(c) for c in s))


def test_labeling_validation_and_parts():
    with pytest.raises(ValueError):
        Labeling((0, 3))
    f = L("2100")
    assert f.part(2) == {0} and f.part(1) == {1} and f.part(0) == {2, 3}
    assert f.weight == weight(f) == 3
    assert weight_on(f, [0, 2]) == 2
    assert str(f) == "2100"
    assert L("0111") < L("1011")


def test_v02_v01():
    g = path(4)
    f = L("0201")
    assert f.v02(g) == {0, 2}
    assert L("1100").v01(g) == {2, 3}


def test_size_mismatch_rejected():
    with pytest.raises(ValueError):
        is_TR2DF(path(3), L("11"))


def test_p3_examples():
    g = path(3)
    assert is_TR2DF(g, L("111"))
    assert not is_TR2DF(g, L("020"))  # 2 isolated among positives
    assert is_R2DF(g, L("020"))
    assert is_TRDF(g, L("021")) and is_TR2DF(g, L("021"))
    assert is_TRDF(g, L("111"))  # no zeros, all positives adjacent to positives
    assert is_DF(g, L("010")) and not is_TDF(g, L("010"))


def test_tr2df_is_weaker_than_trdf():
    # centre 1 with two ones on the sides of C_4: zero at 2 sees 1+1
    g = cycle(4)
    f = L("1101")
    assert is_TR2DF(g, f)
    assert not is_TRDF(g, f)  # the zero at 2 has no neighbour labelled 2
    f2 = L("1010")
    assert not is_TR2DF(g, f2)  # positives 0 and 2 are not adjacent
    assert is_R2DF(g, f2)
    h = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3), (0, 3)])
    assert is_TR2DF(h, L("1010"))  # the chord 0-2 makes the positives adjacent


def test_near_tr2df_relaxes_only_v():
    g = star(4)  # centre 0, leaves 1..3
    f = L("1100")  # leaves 2, 3 see a sum of 1
    assert not is_TR2DF(g, f)
    assert not is_near_TR2DF(g, f, 2)  # leaf 3 is still short
    g2 = path(3)
    f2 = L("011")
    assert not is_TR2DF(g2, f2)
    assert is_near_TR2DF(g2, f2, 0)
    with pytest.raises(IndexError):
        is_near_TR2DF(g2, f2, 5)


def test_set_predicates():
    g = figure1_graph()
    assert is_dominating_set(g, {0, 3, 4})
    assert not is_total_dominating_set(g, {0, 3, 4})
    assert is_total_dominating_set(g, {0, 1, 3, 4})
    assert is_double_dominating_set(g, {0, 2, 3, 4, 5, 6, 7, 8})
    assert indicator(4, [1, 2]).values == (0, 1, 1, 0)


def test_private_neighbours():
    g = path(5)
    pn, epn = private_neighbors(g, 1, [1, 3])
    # 0 and 2 see only 1 (2 also sees 3, so it is not private)
    assert pn == {0} and epn == {0}
    pn, epn = private_neighbors(g, 1, [1, 2])
    assert pn == {0, 2} and epn == {0}
    with pytest.raises(ValueError):
        private_neighbors(g, 4, [1])
