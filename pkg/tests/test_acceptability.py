from blockarg.acceptability import (
    SemanticsResult,
    collapse_map,
    divergence_notes,
    maximal_sets,
    minimal_sets,
    semantics_report,
    sort_family,
)
from blockarg.config import SolverConfig
from blockarg.io import load_fixture
from blockarg.model import AtomDef, BlockDef, FrameworkDoc

from conftest import load_flat


def fam(*sets):
    return [frozenset(s) for s in sets]


def test_two_incomparable_sets():
    result = SemanticsResult.from_family(fam({"a"}, {"b"}), SolverConfig())
    assert result.grounded == frozenset()
    assert not result.grounded_is_complete
    assert result.semi_grounded == fam({"a"}, {"b"})
    assert result.preferred == fam({"a"}, {"b"})


def test_empty_family():
    result = SemanticsResult.from_family([], SolverConfig())
    assert result.complete == [] and result.grounded is None
    assert result.semi_grounded == [] and result.preferred == []
    assert result.to_json()["grounded"] is None


def test_nested_family():
    result = SemanticsResult.from_family(fam({"a"}, {"a", "b"}, {"a", "c"}), SolverConfig())
    assert result.grounded == frozenset({"a"}) and result.grounded_is_complete
    assert result.semi_grounded == fam({"a"})
    assert result.preferred == fam({"a", "b"}, {"a", "c"})


def test_min_max_and_sort():
    family = fam({"b"}, {"a", "b"}, set(), {"c"})
    assert sort_family(family) == fam(set(), {"a", "b"}, {"b"}, {"c"})
    assert minimal_sets(family) == fam(set())
    assert maximal_sets(family) == fam({"a", "b"}, {"c"})


def test_fig_a_report():
    result = semantics_report(load_fixture("fig_a"))
    expected = frozenset({"a_1", "a_4", "a_5", "a_7", "a_8"})
    assert result.complete == [expected]
    assert result.grounded == expected and result.grounded_is_complete
    assert result.semi_grounded == [expected] and result.preferred == [expected]
    assert result.notes == []


def test_fig_d_report_under_s_has_a_note():
    result = semantics_report(load_fixture("fig_d"), SolverConfig(constraints="S"))
    assert result.complete == fam({"a_0"}, {"a_0", "a_2", "a_4"}, {"a_0", "a_3"})
    assert result.grounded == frozenset({"a_0"})
    assert {n["field"] for n in result.notes} >= {"complete"}


def test_reference_override_suppresses_notes():
    doc = load_fixture("fig_d")
    result = semantics_report(doc, SolverConfig(constraints="S"), reference=[])
    assert result.notes == []


def test_divergence_notes_on_mismatch():
    flat = load_flat("fig_a")
    result = semantics_report(flat)
    reference = [{"requires": [], "forbids": ["G", "S", "STAR"], "complete": [["a_1"]]}]
    notes = divergence_notes(flat, result.labellings, SolverConfig(), reference)
    assert len(notes) == 1 and notes[0]["field"] == "complete"
    assert notes[0]["reference"] == [["a_1"]]


def test_collapse_map_on_fig_f():
    flat = load_flat("fig_f")
    rename = collapse_map(flat)
    assert rename["a_7"] == "a_5" and rename["a_9"] == "a_8"
    assert rename["a_6"] == "a_6"


def test_collapse_eq_in_report():
    config = SolverConfig(constraints="STAR", collapse_eq=True)
    result = semantics_report(load_fixture("fig_f"), config)
    assert result.complete == fam(set(), {"a_5"})


def test_report_accepts_documents_without_meta():
    doc = FrameworkDoc({"x": AtomDef("x"), "y": AtomDef("y"), "F": BlockDef(("x", "y"), (("x", "y"), ("y", "x")))}, "F")
    result = semantics_report(doc)
    assert result.complete == fam(set(), {"x"}, {"y"})
    assert result.grounded == frozenset() and result.grounded_is_complete
    assert result.semi_grounded == fam(set())
    assert result.preferred == fam({"x"}, {"y"})


def test_semi_grounded_can_be_ambiguous_without_constraints():
    # a is unattacked and attacks b; c supports b; d and e attack each other;
    # d attacks c; b attacks f
    names = ["a", "b", "c", "d", "e", "f"]
    defs = {n: AtomDef(n) for n in names}
    defs["F"] = BlockDef(
        tuple(names),
        (("a", "b"), ("d", "e"), ("e", "d"), ("d", "c"), ("b", "f")),
        (("c", "b"),),
    )
    result = semantics_report(FrameworkDoc(defs, "F"))
    assert result.complete == fam({"a", "c", "e"}, {"a", "d", "f"}, {"a", "f"})
    assert result.semi_grounded == fam({"a", "c", "e"}, {"a", "f"})
    assert result.grounded == frozenset({"a"}) and not result.grounded_is_complete
