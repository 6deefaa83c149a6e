"""Flat assumption-based argumentation and its encoding as a block framework.

Tree arguments are built bottom-up from rules; an argument attacks another
when its head is the contrary of an assumption the other one rests on.
:func:`encode_to_bba` turns every tree into a block in which the block of its
sub-trees supports its conclusion, and places all trees side by side under a
root that carries the ABA attacks.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Iterable, Mapping

from .errors import NonTerminating, SizeCapExceeded, ValidationError
from .flatrep import ROOT, flatten
from .model import AtomDef, BlockDef, FrameworkDoc, validate
from .standard import standard_complete_sets_in

MAX_TREES = 256
MAX_DIRECT_TREES = 16
ENCODED_MAX_OCCURRENCES = 1_000_000


@dataclass(frozen=True)
class Rule:
    head: str
    body: frozenset[str] = frozenset()


@dataclass(frozen=True)
class ABADoc:
    sentences: tuple[str, ...]
    rules: tuple[Rule, ...]
    assumptions: frozenset[str]
    contrary: Mapping[str, str] = field(default_factory=dict, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "sentences", tuple(self.sentences))
        object.__setattr__(self, "assumptions", frozenset(self.assumptions))
        object.__setattr__(
            self, "rules", tuple(Rule(r.head, frozenset(r.body)) for r in self.rules)
        )
        object.__setattr__(self, "contrary", dict(self.contrary))


@dataclass(frozen=True)
class TreeArgument:
    head: str
    children: frozenset["TreeArgument"] = frozenset()

    @cached_property
    def key(self) -> tuple:
        return (self.head, tuple(sorted(c.key for c in self.children)))

    def __lt__(self, other: "TreeArgument") -> bool:
        return self.key < other.key

    def __str__(self):
        if not self.children:
            return self.head
        return f"{self.head}({', '.join(str(c) for c in sorted(self.children))})"


def validate_aba(aba: ABADoc) -> ABADoc:
    sentences = set(aba.sentences)
    if len(sentences) != len(aba.sentences):
        raise ValidationError("sentences must be distinct")
    if not aba.assumptions:
        raise ValidationError("at least one assumption is required")
    if not aba.assumptions <= sentences:
        raise ValidationError("assumptions must be sentences")
    for r in aba.rules:
        if r.head not in sentences or not r.body <= sentences:
            raise ValidationError(f"rule {r.head} <- {sorted(r.body)} uses an unknown sentence")
        if r.body and r.head in aba.assumptions:
            raise ValidationError(f"assumption {r.head} heads a rule with a body")
    for a, h in aba.contrary.items():
        if a not in aba.assumptions or h not in sentences:
            raise ValidationError(f"bad contrary {a} -> {h}")
    _check_rule_cycles(aba)
    return aba


def _check_rule_cycles(aba: ABADoc) -> None:
    deps: dict[str, set[str]] = {s: set() for s in aba.sentences}
    for r in aba.rules:
        deps[r.head] |= r.body
    state: dict[str, int] = {}

    def visit(s: str, path: list[str]) -> None:
        state[s] = 1
        path.append(s)
        for t in sorted(deps[s]):
            if state.get(t) == 1:
                raise NonTerminating(f"rule cycle: {' -> '.join(path[path.index(t):] + [t])}")
            if t not in state:
                visit(t, path)
        path.pop()
        state[s] = 2

    for s in aba.sentences:
        if s not in state:
            visit(s, [])


def build_tree_arguments(aba: ABADoc, max_trees: int = MAX_TREES) -> list[TreeArgument]:
    """Every tree argument, in canonical order."""
    validate_aba(aba)
    memo: dict[str, list[TreeArgument]] = {}
    total = 0

    def trees(s: str) -> list[TreeArgument]:
        nonlocal total
        if s in memo:
            return memo[s]
        out: set[TreeArgument] = set()
        if s in aba.assumptions:
            out.add(TreeArgument(s))
        for r in aba.rules:
            if r.head != s:
                continue
            options = [trees(b) for b in sorted(r.body)]
            for combo in itertools.product(*options):
                out.add(TreeArgument(s, frozenset(combo)))
                if len(out) + total > max_trees:
                    raise SizeCapExceeded(f"more than {max_trees} tree arguments")
        memo[s] = sorted(out)
        total += len(out)
        return memo[s]

    result: set[TreeArgument] = set()
    for s in aba.sentences:
        result.update(trees(s))
    return sorted(result)


def assumptions_of(t: TreeArgument, aba: ABADoc) -> frozenset[str]:
    if not t.children:
        return frozenset({t.head}) if t.head in aba.assumptions else frozenset()
    return frozenset().union(*(assumptions_of(c, aba) for c in t.children))


def aba_attacks(t1: TreeArgument, t2: TreeArgument, aba: ABADoc) -> bool:
    """``t1`` concludes the contrary of some assumption ``t2`` rests on."""
    return any(aba.contrary.get(a) == t1.head for a in assumptions_of(t2, aba))


def aba_complete_sets(aba: ABADoc, trees: list[TreeArgument] | None = None) -> list[frozenset[TreeArgument]]:
    """Complete sets of tree arguments by exhaustive subset search.

    A set is complete when it is conflict free, defends each member and
    contains every tree it defends.
    """
    trees = build_tree_arguments(aba) if trees is None else trees
    n = len(trees)
    if n > MAX_DIRECT_TREES:
        raise SizeCapExceeded(f"{n} trees exceed the direct search cap of {MAX_DIRECT_TREES}")
    attackers = [
        [j for j in range(n) if aba_attacks(trees[j], trees[i], aba)] for i in range(n)
    ]
    out = []
    for mask in range(1 << n):
        inside = {i for i in range(n) if mask >> i & 1}
        if any(j in inside for i in inside for j in attackers[i]):
            continue
        defended = {
            i for i in range(n)
            if all(any(k in inside for k in attackers[j]) for j in attackers[i])
        }
        if defended == inside:
            out.append(frozenset(trees[i] for i in inside))
    return sorted(out, key=lambda s: sorted(t.key for t in s))


# -- encoding -------------------------------------------------------------------


def encode_to_bba(aba: ABADoc) -> FrameworkDoc:
    """Encode the ABA framework as a block framework rooted at ``aba``.

    Names are deterministic: ``asm<k>`` and ``s<k>`` are atoms for
    assumptions and other sentences (by sentence order), ``t<i>`` encodes the
    i-th tree in canonical order and ``b<i>`` is its body block. The tree
    behind each root child is recorded in ``meta["aba_trees"]``.
    """
    trees = build_tree_arguments(aba)
    index = {t: i for i, t in enumerate(trees)}
    defs: dict[str, Any] = {}
    sentence_atom = {}
    for k, s in enumerate(aba.sentences):
        if s in aba.assumptions:
            sentence_atom[s] = f"asm{k}"
            defs[f"asm{k}"] = AtomDef(f"asm:{s}")
        else:
            sentence_atom[s] = f"s{k}"
            defs[f"s{k}"] = AtomDef(f"sent:{s}")

    def name(t: TreeArgument) -> str:
        if not t.children and t.head in aba.assumptions:
            return sentence_atom[t.head]
        return f"t{index[t]}"

    for t in trees:
        if not t.children and t.head in aba.assumptions:
            continue
        head = sentence_atom[t.head]
        if not t.children:
            defs[name(t)] = BlockDef((head,))
            continue
        body = f"b{index[t]}"
        defs[body] = BlockDef(tuple(name(c) for c in sorted(t.children)))
        defs[name(t)] = BlockDef((body, head), supports=((body, head),))

    root_args = tuple(name(t) for t in trees)
    attacks = tuple(
        (name(t1), name(t2)) for t1 in trees for t2 in trees if aba_attacks(t1, t2, aba)
    )
    defs["aba"] = BlockDef(root_args, attacks)
    meta = {"aba_trees": {name(t): tree_to_json(t) for t in trees}}
    return FrameworkDoc(defs, "aba", meta)


def decode_extension(doc: FrameworkDoc, names: Iterable[str]) -> frozenset[TreeArgument]:
    table = doc.meta["aba_trees"]
    return frozenset(tree_from_json(table[n]) for n in names)


def encoded_complete_sets(aba: ABADoc) -> list[frozenset[TreeArgument]]:
    """Standard complete sets at the root of the encoding, decoded to trees."""
    doc = encode_to_bba(aba)
    flat = flatten(validate(doc), ENCODED_MAX_OCCURRENCES)
    out = [
        decode_extension(doc, (o.name for o in s))
        for s in standard_complete_sets_in(flat, ROOT)
    ]
    return sorted(out, key=lambda s: sorted(t.key for t in s))


# -- JSON -------------------------------------------------------------------------


def tree_to_json(t: TreeArgument) -> dict:
    return {"head": t.head, "children": [tree_to_json(c) for c in sorted(t.children)]}


def tree_from_json(data: dict) -> TreeArgument:
    return TreeArgument(data["head"], frozenset(tree_from_json(c) for c in data.get("children", ())))


def aba_from_json(data: Any) -> ABADoc:
    try:
        return ABADoc(
            sentences=tuple(data["sentences"]),
            rules=tuple(Rule(r["head"], frozenset(r.get("body", ()))) for r in data.get("rules", ())),
            assumptions=frozenset(data["assumptions"]),
            contrary=dict(data.get("contrary", {})),
        )
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"malformed ABA document: {exc}") from None


def aba_to_json(aba: ABADoc) -> dict:
    return {
        "sentences": list(aba.sentences),
        "rules": [{"head": r.head, "body": sorted(r.body)} for r in aba.rules],
        "assumptions": sorted(aba.assumptions),
        "contrary": dict(sorted(aba.contrary.items())),
    }


def load_aba(text: str) -> ABADoc:
    return validate_aba(aba_from_json(json.loads(text)))
