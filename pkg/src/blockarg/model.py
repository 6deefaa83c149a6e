"""Framework documents, recursive argument values, Eq and sub-argumentation.

A document names its arguments: each name is bound either to an atom (an
opaque content id) or to a block listing child names plus local attack and
support pairs. Names carry occurrence identity; :class:`Atom` and
:class:`Block` carry content, and two different names may resolve to equal
content.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping, Union

from .errors import (
    BadEdge,
    CyclicDefinition,
    DanglingName,
    DuplicateChild,
    EmptyBlock,
    InvalidName,
)

NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


# -- document level ---------------------------------------------------------


@dataclass(frozen=True)
class AtomDef:
    content: str


@dataclass(frozen=True)
class BlockDef:
    args: tuple[str, ...]
    attacks: tuple[tuple[str, str], ...] = ()
    supports: tuple[tuple[str, str], ...] = ()


Definition = Union[AtomDef, BlockDef]


@dataclass(frozen=True)
class FrameworkDoc:
    """The on-disk unit: named definitions plus a designated root.

    ``meta`` holds free-form annotations (provenance, reference results) and
    takes no part in equality.
    """

    definitions: Mapping[str, Definition]
    root: str
    meta: Mapping = field(default_factory=dict, compare=False)


# -- resolved argument values -------------------------------------------------


@dataclass(frozen=True, eq=True)
class Atom:
    content: str


@dataclass(frozen=True, eq=True)
class Block:
    """A block argument; attack and support pairs index into ``members``."""

    members: tuple["Arg", ...]
    attacks: frozenset[tuple[int, int]] = frozenset()
    supports: frozenset[tuple[int, int]] = frozenset()
    _hash: int = field(default=0, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "attacks", frozenset(self.attacks))
        object.__setattr__(self, "supports", frozenset(self.supports))
        object.__setattr__(
            self, "_hash", hash((self.members, self.attacks, self.supports))
        )

    def __hash__(self):
        return self._hash


Arg = Union[Atom, Block]


def is_unitary(arg: Arg) -> bool:
    return isinstance(arg, Atom)


# -- validation -----------------------------------------------------------------


class Framework:
    """A document that passed :func:`validate`. Treat as immutable."""

    def __init__(self, doc: FrameworkDoc):
        self.doc = doc
        self.root = doc.root
        self.definitions = doc.definitions
        self._terms: dict[str, Arg] = {}

    def __repr__(self):
        return f"Framework(root={self.root!r}, {len(self.definitions)} definitions)"

    def term(self, name: str) -> Arg:
        """Resolve ``name`` to its recursive argument value."""
        cached = self._terms.get(name)
        if cached is not None:
            return cached
        d = self.definitions[name]
        if isinstance(d, AtomDef):
            t: Arg = Atom(d.content)
        else:
            index = {child: i for i, child in enumerate(d.args)}
            t = Block(
                tuple(self.term(c) for c in d.args),
                frozenset((index[a], index[b]) for a, b in d.attacks),
                frozenset((index[a], index[b]) for a, b in d.supports),
            )
        self._terms[name] = t
        return t


def validate(doc: FrameworkDoc) -> Framework:
    """Check every document invariant and wrap the document.

    Raises the first problem found: an :class:`InvalidName`,
    :class:`DanglingName`, :class:`EmptyBlock`, :class:`DuplicateChild`,
    :class:`BadEdge` or :class:`CyclicDefinition`.
    """
    defs = doc.definitions
    for name, d in defs.items():
        if not isinstance(name, str) or not NAME_RE.match(name):
            raise InvalidName(f"bad argument name {name!r}")
        if isinstance(d, AtomDef):
            if not isinstance(d.content, str) or not d.content:
                raise InvalidName(f"{name}: atom content must be a non-empty string")
            continue
        if not isinstance(d, BlockDef):
            raise InvalidName(f"{name}: unknown definition type {type(d).__name__}")
        if not d.args:
            raise EmptyBlock(f"{name}: a block needs at least one child")
        if len(set(d.args)) != len(d.args):
            raise DuplicateChild(f"{name}: children must be distinct")
        for child in d.args:
            if child not in defs:
                raise DanglingName(f"{name}: child {child!r} is not defined")
        members = set(d.args)
        for kind, pairs in (("attack", d.attacks), ("support", d.supports)):
            for a, b in pairs:
                if a not in members or b not in members:
                    raise BadEdge(f"{name}: {kind} ({a}, {b}) leaves the block")
    if doc.root not in defs:
        raise DanglingName(f"root {doc.root!r} is not defined")
    _check_acyclic(defs)
    return Framework(doc)


def _check_acyclic(defs: Mapping[str, Definition]) -> None:
    WHITE, GREY, BLACK = 0, 1, 2
    colour = dict.fromkeys(defs, WHITE)
    for start in defs:
        if colour[start] != WHITE:
            continue
        colour[start] = GREY
        stack = [(start, iter(_children(defs[start])))]
        while stack:
            node, it = stack[-1]
            child = next(it, None)
            if child is None:
                colour[node] = BLACK
                stack.pop()
            elif colour[child] == GREY:
                path = [n for n, _ in stack]
                raise CyclicDefinition(path[path.index(child):] + [child])
            elif colour[child] == WHITE:
                colour[child] = GREY
                stack.append((child, iter(_children(defs[child]))))


def _children(d: Definition) -> tuple[str, ...]:
    return d.args if isinstance(d, BlockDef) else ()


# -- Eq and sub-argumentation ----------------------------------------------------


@lru_cache(maxsize=1 << 16)
def signature(arg: Arg) -> tuple:
    """An Eq-invariant fingerprint: Eq-equal arguments share a signature."""
    if isinstance(arg, Atom):
        return ("atom", arg.content)
    n = len(arg.members)
    out_a, in_a, out_s, in_s = [0] * n, [0] * n, [0] * n, [0] * n
    for i, j in arg.attacks:
        out_a[i] += 1
        in_a[j] += 1
    for i, j in arg.supports:
        out_s[i] += 1
        in_s[j] += 1
    local = sorted(
        (signature(m), out_a[i], in_a[i], out_s[i], in_s[i])
        for i, m in enumerate(arg.members)
    )
    return ("block", n, len(arg.attacks), len(arg.supports), tuple(local))


@lru_cache(maxsize=1 << 16)
def eq(a: Arg, b: Arg) -> bool:
    """Structural argument equality.

    Atoms are equal iff their contents are. Blocks are equal iff some
    bijection between members preserves Eq recursively as well as every
    attack and support pair in both directions.
    """
    if a is b or a == b:
        return True
    if isinstance(a, Atom) or isinstance(b, Atom):
        return False
    if signature(a) != signature(b):
        return False
    n = len(a.members)
    candidates = [
        [j for j in range(n) if eq(a.members[i], b.members[j])] for i in range(n)
    ]
    # most constrained member first
    order = sorted(range(n), key=lambda i: len(candidates[i]))
    mapping: dict[int, int] = {}
    used = [False] * n

    def consistent(i: int, j: int) -> bool:
        for rel_a, rel_b in ((a.attacks, b.attacks), (a.supports, b.supports)):
            if ((i, i) in rel_a) != ((j, j) in rel_b):
                return False
            for k, m in mapping.items():
                if ((i, k) in rel_a) != ((j, m) in rel_b):
                    return False
                if ((k, i) in rel_a) != ((m, j) in rel_b):
                    return False
        return True

    def extend(pos: int) -> bool:
        if pos == n:
            return True
        i = order[pos]
        for j in candidates[i]:
            if not used[j] and consistent(i, j):
                used[j] = True
                mapping[i] = j
                if extend(pos + 1):
                    return True
                del mapping[i]
                used[j] = False
        return False

    return extend(0)


def sub_argumentation(a1: Arg, a2: Arg) -> bool:
    """True iff ``a2`` is a sub-argumentation of ``a1``.

    Matching is not required to be injective: every member of ``a2`` needs an
    Eq partner in ``a1`` and every attack (support) pair of ``a2`` needs an
    attack (support) pair of ``a1`` with Eq-matching endpoints. Atoms are
    only sub-argumentations of Eq-equal atoms.
    """
    if isinstance(a1, Atom) or isinstance(a2, Atom):
        return eq(a1, a2)
    if len(a2.members) > len(a1.members):
        return False
    match = [
        {j for j, m1 in enumerate(a1.members) if eq(m2, m1)} for m2 in a2.members
    ]
    if not all(match):
        return False
    for rel1, rel2 in ((a1.attacks, a2.attacks), (a1.supports, a2.supports)):
        for i1, i2 in rel2:
            if not any(j1 in match[i1] and j2 in match[i2] for j1, j2 in rel1):
                return False
    return True
