import random

import pytest

from blockarg.errors import SizeCapExceeded, UnitaryPosition
from blockarg.flatrep import (
    ROOT,
    Order,
    args_in,
    attacks_in,
    flatten,
    occurrence_count,
    position_order,
    supports_in,
)
from blockarg.generate import random_framework
from blockarg.model import AtomDef, BlockDef, FrameworkDoc, validate

from conftest import load_flat


def names(occs):
    return {o.name for o in occs}


def pair_names(pairs):
    return {(a.name, b.name) for a, b in pairs}


def test_single_atom_root():
    flat = flatten(validate(FrameworkDoc({"a": AtomDef("a")}, "a")))
    assert flat.positions == (ROOT,)


def test_fig_e_positions():
    flat = load_flat("fig_e")
    assert flat.positions == ((0,), (0, 1), (0, 2))
    assert [flat.name(p) for p in flat] == ["a_0", "a_3", "a_4"]


def test_fig_a_has_19_occurrences():
    flat = load_flat("fig_a")
    assert len(flat) == 19
    assert len([p for p in flat if len(p) <= 3]) == 15


def test_size_cap():
    fw = validate(FrameworkDoc({"a": AtomDef("a"), "b": BlockDef(("a",))}, "b"))
    assert occurrence_count(fw) == 2
    with pytest.raises(SizeCapExceeded):
        flatten(fw, max_occurrences=1)


def test_size_cap_is_checked_before_expanding():
    # a chain of blocks each holding two copies of the next one
    defs = {"l0": AtomDef("x"), "m0": AtomDef("y")}
    for i in range(1, 40):
        defs[f"l{i}"] = BlockDef((f"l{i-1}", f"m{i-1}"))
        defs[f"m{i}"] = BlockDef((f"l{i-1}", f"m{i-1}"), (), ((f"l{i-1}", f"m{i-1}"),))
    with pytest.raises(SizeCapExceeded):
        flatten(validate(FrameworkDoc(defs, "l39")))


@pytest.mark.parametrize(
    "p, q, expected",
    [
        ((0,), (0, 8, 1), Order.ABOVE),
        ((0, 8, 1), (0,), Order.BELOW),
        ((0, 3), (0, 0, 1), Order.INCOMPARABLE),
        ((0, 7), (0, 7), Order.EQUAL),
    ],
)
def test_position_order(p, q, expected):
    assert position_order(p, q) == expected


def test_position_order_is_a_partial_order():
    rng = random.Random(5)
    pos = {(0,) + tuple(rng.randint(0, 2) for _ in range(rng.randint(0, 3))) for _ in range(60)}
    pos = sorted(pos)
    above = {(p, q) for p in pos for q in pos if position_order(p, q) in (Order.ABOVE, Order.EQUAL)}
    for p in pos:
        assert (p, p) in above
    for p, q in above:
        if (q, p) in above:
            assert p == q
        for r in pos:
            if (q, r) in above:
                assert (p, r) in above


def test_args_in_examples():
    flat = load_flat("fig_a")
    assert names(args_in(flat, (0,))) == {f"a_{i}" for i in range(1, 9)}
    assert names(args_in(flat, (0, 7))) == {"a_2", "a_4"}
    with pytest.raises(UnitaryPosition):
        args_in(flat, (0, 1))


def test_attacks_and_supports_in():
    flat = load_flat("fig_a")
    assert pair_names(attacks_in(flat, (0,))) == {("a_4", "a_2"), ("a_2", "a_3"), ("a_7", "a_6")}
    assert pair_names(supports_in(flat, (0,))) == {("a_1", "a_2"), ("a_8", "a_5")}
    assert attacks_in(flat, (0, 6)) == frozenset()
    assert pair_names(supports_in(flat, (0, 6))) == {("a_1", "a_2")}
    with pytest.raises(UnitaryPosition):
        attacks_in(flat, (0, 2))


def _walk(fw, name, pos, out):
    out[pos] = name
    d = fw.definitions[name]
    if isinstance(d, BlockDef):
        for i, c in enumerate(d.args):
            _walk(fw, c, pos + (i + 1,), out)
    return out


def test_flatten_matches_a_recursive_walk():
    for seed in range(50):
        fw = validate(random_framework(random.Random(seed), max_children=4))
        flat = flatten(fw, 10**6)
        assert flat.entries == _walk(fw, fw.root, ROOT, {})
        assert len(flat) == occurrence_count(fw)
        for p in flat:
            if p != ROOT:
                assert p[:-1] in flat
        assert flatten(fw, 10**6) == flat


def test_subtree_and_json():
    flat = load_flat("fig_a")
    assert flat.subtree((0, 8)) == ((0, 8, 1), (0, 8, 1, 1), (0, 8, 1, 2), (0, 8, 2), (0, 8, 2, 1), (0, 8, 2, 2))
    assert flat.to_json()[0] == {"pos": [0], "name": "F"}
