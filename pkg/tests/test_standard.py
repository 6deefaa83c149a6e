import random

import pytest

from blockarg.errors import NotComplete, UnitaryPosition
from blockarg.flatrep import ROOT, flatten
from blockarg.generate import random_corpus
from blockarg.labelling import MINUS, PLUS, UNDEC, Labelling
from blockarg.model import AtomDef, BlockDef, FrameworkDoc, validate
from blockarg.standard import (
    defends_in,
    enumerate_standard_complete_labellings,
    extension_of_labelling,
    is_standard_complete_labelling,
    labelling_from_set,
    standard_complete_sets_in,
)

from conftest import load_flat


def occ(flat, name, p=ROOT):
    return next(flat.occurrence(q) for q in flat.children(p) if flat.name(q) == name)


def occs(flat, *names, p=ROOT):
    return frozenset(occ(flat, n, p) for n in names)


def as_names(sets):
    return [sorted(o.name for o in s) for s in sets]


def block_doc(names, attacks=(), supports=()):
    defs = {n: AtomDef(n) for n in names}
    defs["F"] = BlockDef(tuple(names), tuple(attacks), tuple(supports))
    return flatten(validate(FrameworkDoc(defs, "F")))


A_LABELS = {"a_1": "+", "a_4": "+", "a_5": "+", "a_7": "+", "a_8": "+", "a_6": "-", "a_2": "?", "a_3": "?"}


def fig_a_labelling(**overrides):
    flat = load_flat("fig_a")
    labels = dict(A_LABELS, **overrides)
    out = {ROOT: PLUS}
    for q in flat.children(ROOT):
        out[q] = labels[flat.name(q)]
    # inner blocks: a_1 supports a_2, a_4 attacks a_2, a_7 attacks a_6
    out.update({
        (0, 6, 1): PLUS, (0, 6, 2): PLUS,
        (0, 7, 1): MINUS, (0, 7, 2): PLUS,
        (0, 8, 1): MINUS, (0, 8, 2): PLUS,
        (0, 8, 1, 1): PLUS, (0, 8, 1, 2): PLUS,
        (0, 8, 2, 1): MINUS, (0, 8, 2, 2): PLUS,
    })
    return flat, Labelling(out)


def test_defends_in_examples():
    flat = load_flat("fig_a")
    a3 = occ(flat, "a_3")
    assert defends_in(flat, ROOT, occs(flat, "a_4"), a3)
    assert not defends_in(flat, ROOT, occs(flat, "a_1", "a_4"), a3)
    assert defends_in(flat, ROOT, frozenset(), occ(flat, "a_1"))


def test_fig_a_single_complete_set():
    flat = load_flat("fig_a")
    assert as_names(standard_complete_sets_in(flat, ROOT)) == [["a_1", "a_4", "a_5", "a_7", "a_8"]]


def test_member_defence_is_required():
    # without the admissibility clause {a_2} would count as complete
    flat = load_flat("fig_a")
    assert occs(flat, "a_2") not in standard_complete_sets_in(flat, ROOT)


def test_trivial_block():
    flat = block_doc(["x"])
    assert as_names(standard_complete_sets_in(flat, ROOT)) == [["x"]]


def test_fig_d_complete_sets():
    flat = load_flat("fig_d")
    assert as_names(standard_complete_sets_in(flat, ROOT)) == [["a_0"], ["a_0", "a_2", "a_4"], ["a_0", "a_3"]]


def test_complete_sets_need_a_block():
    with pytest.raises(UnitaryPosition):
        standard_complete_sets_in(load_flat("fig_a"), (0, 1))


def test_fig_a_labelling_checks():
    flat, lab = fig_a_labelling()
    assert is_standard_complete_labelling(flat, lab)
    assert enumerate_standard_complete_labellings(flat) == [lab]
    flat, bad = fig_a_labelling(a_2="-")
    verdict = is_standard_complete_labelling(flat, bad)
    assert not verdict
    assert any(v.position == (0, 2) for v in verdict.violations)


def test_all_undecided_fails_with_an_unattacked_child():
    flat = block_doc(["x", "y"], [("x", "y")])
    lab = Labelling({p: UNDEC for p in flat})
    assert not is_standard_complete_labelling(flat, lab)


def test_fig_f_unique_labelling():
    flat = load_flat("fig_f")
    [lab] = enumerate_standard_complete_labellings(flat)
    assert {flat.name(q) for q in lab.positions_with(PLUS) if q != ROOT} == {"a_5", "a_7", "a_9"}
    assert {flat.name(q) for q in lab.positions_with(MINUS)} == {"a_6", "a_8", "a_10"}


def test_unconnected_block_is_all_plus():
    flat = block_doc(["x", "y", "z"])
    assert enumerate_standard_complete_labellings(flat) == [Labelling({p: PLUS for p in flat})]


def test_extension_and_set_round_trip():
    flat, lab = fig_a_labelling()
    ext = extension_of_labelling(flat, lab, ROOT)
    assert {o.name for o in ext} == {"a_1", "a_4", "a_5", "a_7", "a_8"}
    assert labelling_from_set(flat, ROOT, ext) == lab


def test_mutual_attack_cycle_gives_an_all_undecided_piece():
    flat = block_doc(["x", "y", "z"], [("x", "y"), ("y", "z"), ("z", "x")])
    lab = labelling_from_set(flat, ROOT, frozenset())
    assert [lab[q] for q in flat.children(ROOT)] == [UNDEC] * 3


def test_labelling_from_set_rejects_incomplete_sets():
    flat = load_flat("fig_a")
    with pytest.raises(NotComplete):
        labelling_from_set(flat, ROOT, occs(flat, "a_2"))


def test_attacked_but_supported_target_stays_undecided():
    # x attacks z, y supports z; {x, y} is complete and z must not be -
    flat = block_doc(["x", "y", "z"], [("x", "z")], [("y", "z")])
    members = occs(flat, "x", "y")
    assert members in standard_complete_sets_in(flat, ROOT)
    lab = labelling_from_set(flat, ROOT, members)
    assert is_standard_complete_labelling(flat, lab)
    assert lab[(0, 3)] is UNDEC


def test_support_cycle_block_has_no_complete_set():
    # x attacks y, y attacks z, z supports y: no standard complete labelling exists
    flat = block_doc(["x", "y", "z"], [("x", "y"), ("y", "z")], [("z", "y")])
    assert standard_complete_sets_in(flat, ROOT) == []
    assert enumerate_standard_complete_labellings(flat) == []


def test_round_trip_on_random_frameworks():
    checked = 0
    for doc in random_corpus(200, 21, max_children=8, max_depth=3):
        flat = flatten(validate(doc))
        if not enumerate_standard_complete_labellings(flat):
            continue
        for p in flat.block_positions():
            for s in standard_complete_sets_in(flat, p):
                assert extension_of_labelling(flat, labelling_from_set(flat, p, s), p) == s
                checked += 1
    assert checked > 200
