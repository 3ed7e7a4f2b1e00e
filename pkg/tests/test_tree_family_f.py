import pytest

from tr2dom.families import cycle, double_star, enumerate_trees, path, star
from tr2dom.graph_core import NotATreeError, SizeLimitError, canonical_form, is_tree
from tr2dom.solvers import ParameterKind, exact
from tr2dom.tree_family_f import (
    FCertificate,
    PreconditionError,
    TreeOp,
    applicable_targets,
    apply_op,
    check_2gamma_t,
    check_characterization,
    completeness_report,
    generate_F,
)

K = ParameterKind


def same(a, b) -> bool:
    return canonical_form(a) == canonical_form(b)


def test_tree_op_validation():
    with pytest.raises(ValueError):
        TreeOp("F8", 0)
    with pytest.raises(ValueError):
        TreeOp("F1", 0)
    with pytest.raises(ValueError):
        TreeOp("F2", 0, r=2)
    assert TreeOp("F1", 3, 2).added() == 9


def test_f4_on_p2_gives_p4():
    assert same(apply_op(path(2), TreeOp("F4", 0)), path(4))


def test_f3_on_p2_gives_p3():
    assert applicable_targets(path(2), "F3") == {0, 1}
    assert same(apply_op(path(2), TreeOp("F3", 1)), path(3))


def test_f2_on_p4_gives_double_star():
    p4 = path(4)
    assert applicable_targets(p4, "F2") == {1, 2}
    assert same(apply_op(p4, TreeOp("F2", 1)), double_star(2, 1))


def test_f1_attaches_r_r_by_its_hub():
    t = apply_op(path(2), TreeOp("F1", 0, 1))
    assert t.n == 7 and is_tree(t)
    assert t.has_edge(0, 2)  # hub of R_1 is vertex 2
    hub_neighbours = set(t.neighbors(2)) - {0}
    assert hub_neighbours == {3}


def test_f5_gives_leaf_two_pendants():
    p4 = path(4)
    assert 0 in applicable_targets(p4, "F5")
    t = apply_op(p4, TreeOp("F5", 0))
    assert t.n == 6 and set(t.neighbors(0)) == {1, 4, 5}


def test_f6_and_f7_shapes():
    t = apply_op(path(2), TreeOp("F6", 0))
    assert same(t, path(4))
    p4 = path(4)
    w0 = applicable_targets(p4, "F7")
    assert w0 == frozenset()  # every vertex of P_4 is positive in some optimum


def test_preconditions_enforced():
    with pytest.raises(PreconditionError):
        apply_op(path(4), TreeOp("F2", 0))
    with pytest.raises(PreconditionError):
        apply_op(path(4), TreeOp("F3", 1))
    # skipping the check still builds the graph
    assert apply_op(path(4), TreeOp("F2", 0), check=False).n == 5
    with pytest.raises(NotATreeError):
        apply_op(cycle(4), TreeOp("F1", 0, 1))
    with pytest.raises(ValueError):
        apply_op(path(2), TreeOp("F2", 5))


def test_generate_small_orders():
    assert set(generate_F(2).members) == {canonical_form(path(2))}
    f4 = generate_F(4)
    assert {canonical_form(t) for t in (path(2), path(3), path(4), star(4))} == set(f4.members)
    with pytest.raises(SizeLimitError):
        generate_F(15)


def test_generated_members_are_sound():
    fam = generate_F(10)
    for t in fam.members.values():
        assert exact(t, K.GAMMA_TR2).value == exact(t, K.GAMMA_TR).value


def test_certificates_replay():
    fam = generate_F(10)
    for key, cert in fam.certificates.items():
        assert canonical_form(cert.replay()) == key
    cert = fam.certificate(star(4))
    # P_2 with two pendants on one end is K_{1,3}
    assert [op.kind for op, _ in cert.steps] == ["F5"]
    assert same(cert.replay(), star(4))


def test_certificate_replay_detects_divergence():
    bad = FCertificate(((TreeOp("F4", 0), canonical_form(path(3))),))
    with pytest.raises(ValueError):
        bad.replay()


def test_r_r_members():
    fam = generate_F(11)
    # R_r attached to P_2 by its hub
    assert apply_op(path(2), TreeOp("F1", 0, 2)) in fam


@pytest.mark.parametrize("t,expected", [(path(2), (True, True)), (path(4), (True, True)), (path(6), None), (star(5), (True, True))])
def test_characterization_examples(t, expected):
    res = check_characterization(t)
    assert res.agrees
    if expected is not None:
        assert (res.equality, res.in_F) == expected
    assert res.gamma_tr2 <= res.gamma_tr


def test_characterization_p6_values():
    res = check_characterization(path(6))
    assert res.gamma_tr2 == 5
    assert res.equality == (res.gamma_tr == 5)


def test_characterization_limits():
    with pytest.raises(SizeLimitError):
        check_characterization(path(13))
    with pytest.raises(NotATreeError):
        check_characterization(cycle(4))


def test_two_gamma_t_examples():
    r = check_2gamma_t(path(2))
    assert (r.equality_2t, r.gamma_eq) == (False, False) and r.holds
    r = check_2gamma_t(path(4))
    assert r.equality_2t and r.equality_tr and r.gamma_eq and r.holds
    r = check_2gamma_t(star(4))
    assert not r.equality_2t and not r.gamma_eq and r.holds


@pytest.mark.parametrize("n", range(2, 10))
def test_two_gamma_t_on_all_trees(n):
    for t in enumerate_trees(n):
        assert check_2gamma_t(t).holds


def test_completeness_to_order_8():
    rep = completeness_report(8)
    assert rep.ok and rep.trees_checked == sum([1, 1, 2, 3, 6, 11, 23])
