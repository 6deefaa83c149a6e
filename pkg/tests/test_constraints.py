import pytest

from blockarg.config import Constraint, SolverConfig, parse_constraints
from blockarg.constraints import (
    constraint_instances,
    constraint_report,
    eq_classes,
    g_table,
    satisfies_g,
    satisfies_s,
    satisfies_star,
)
from blockarg.labelling import MINUS, PLUS, UNDEC, Label, Labelling, label_dominates
from blockarg.standard import enumerate_standard_complete_labellings

from conftest import load_flat


def pairs(instances):
    return {(i.constrained, i.constrainer) for i in instances}


@pytest.mark.parametrize(
    "l1, l2, expected",
    [
        (PLUS, PLUS, True), (PLUS, MINUS, False), (PLUS, UNDEC, False),
        (MINUS, PLUS, False), (MINUS, MINUS, True), (MINUS, UNDEC, False),
        (UNDEC, PLUS, True), (UNDEC, MINUS, True), (UNDEC, UNDEC, True),
    ],
)
def test_label_dominates_table(l1, l2, expected):
    assert label_dominates(l1, l2) is expected


def test_label_dominates_is_a_partial_order():
    labels = list(Label)
    for a in labels:
        assert label_dominates(a, a)
        for b in labels:
            if label_dominates(a, b) and label_dominates(b, a):
                assert a == b
            for c in labels:
                if label_dominates(a, b) and label_dominates(b, c):
                    assert label_dominates(a, c)


def test_parse_constraints():
    assert parse_constraints("G,S") == {Constraint.G, Constraint.S}
    assert parse_constraints("*") == {Constraint.STAR}
    assert parse_constraints("none") == frozenset()
    with pytest.raises(ValueError):
        parse_constraints("Q")


def test_g_on_fig_b():
    flat = load_flat("fig_b")
    g = g_table(flat)
    assert g[(0, 1, 1)] and g[(0, 2, 2)]
    # a_6 has a supported child, a_7 an attacked one; both fail and so does the root
    assert not g[(0, 1)] and not g[(0, 2)] and not g[(0,)]
    assert satisfies_g(flat, (0, 1, 2))


def test_g_on_fig_a():
    # a_8 is built from a_6 and a_7, both wired the same way in the root block
    flat = load_flat("fig_a")
    assert all(g_table(flat).values())
    assert satisfies_g(flat, (0,))


def test_s_instances_on_fig_d():
    flat = load_flat("fig_d")
    expected = {((0, 1, 1), (0, 4)), ((0, 1, 2), (0, 5))}
    assert pairs(constraint_instances(flat, Constraint.S)) == expected
    assert pairs(constraint_instances(flat, Constraint.S, SolverConfig(s_dominance="scope"))) == expected
    assert constraint_instances(flat, Constraint.S, SolverConfig(s_dominance="prefix")) == []


def test_star_instances_on_fig_f():
    flat = load_flat("fig_f")
    assert pairs(constraint_instances(flat, Constraint.STAR)) == {
        ((0, 1), (0, 3)), ((0, 3), (0, 1)), ((0, 4), (0, 5)), ((0, 5), (0, 4)),
    }
    classes = eq_classes(flat)
    assert classes[(0, 1)] == classes[(0, 3)] != classes[(0, 2)]


def test_g_has_no_instances():
    with pytest.raises(ValueError):
        constraint_instances(load_flat("fig_d"), Constraint.G)


def test_fig_d_labelling_fails_s():
    flat = load_flat("fig_d")
    lam = enumerate_standard_complete_labellings(flat)[0]
    assert lam[(0, 4)] is MINUS and lam[(0, 1, 1)] is PLUS
    assert not satisfies_s(flat, lam, (0, 1, 1))
    assert not satisfies_s(flat, lam, (0, 1, 2))
    assert satisfies_s(flat, lam, (0, 2))
    report = constraint_report(flat, lam, [Constraint.S])
    assert {(v.position, v.witness) for v in report} == {((0, 1, 1), (0, 4)), ((0, 1, 2), (0, 5))}


def test_fig_f_standard_labelling_fails_star():
    flat = load_flat("fig_f")
    [lam] = enumerate_standard_complete_labellings(flat)
    assert satisfies_star(flat, lam, (0, 1))
    assert not satisfies_star(flat, lam, (0, 4))
    report = constraint_report(flat, lam, [Constraint.STAR])
    assert {v.position for v in report} == {(0, 4), (0, 5)}


def test_report_with_g():
    flat = load_flat("fig_b")
    [lam] = enumerate_standard_complete_labellings(flat)
    report = constraint_report(flat, lam, [Constraint.G])
    assert (0,) in {v.position for v in report}
    assert all(v.rule == "G" and lam[v.position] is PLUS for v in report)


def test_undecided_is_never_the_violator_by_default():
    flat = load_flat("fig_f")
    lab = Labelling({p: PLUS for p in flat}).with_label((0, 4), UNDEC)
    default = constraint_report(flat, lab, [Constraint.STAR])
    literal = constraint_report(flat, lab, [Constraint.STAR], include_undecided=True)
    assert {v.position for v in default} == {(0, 5)}
    assert {v.position for v in literal} == {(0, 4), (0, 5)}


def test_empty_constraint_set_reports_nothing():
    flat = load_flat("fig_d")
    for lam in enumerate_standard_complete_labellings(flat):
        assert constraint_report(flat, lam, []) == []
