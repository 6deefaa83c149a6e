"""Flat representation: every argument occurrence indexed by its position.

A position is a tuple of naturals starting with 0. The root occupies ``(0,)``
and the i-th child (1-based, document order) of the block at ``p`` occupies
``p + (i,)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator

from .errors import SizeCapExceeded, UnitaryPosition
from .model import Arg, BlockDef, Definition, Framework

Position = tuple[int, ...]
ROOT: Position = (0,)

DEFAULT_MAX_OCCURRENCES = 64


@dataclass(frozen=True)
class Occurrence:
    pos: Position
    name: str
    value: Definition


class Order(str, enum.Enum):
    EQUAL = "equal"
    ABOVE = "strict-above"
    BELOW = "strict-below"
    INCOMPARABLE = "incomparable"


def is_prefix(p: Position, q: Position) -> bool:
    return len(p) <= len(q) and q[: len(p)] == p


def position_order(p: Position, q: Position) -> Order:
    """Compare two positions under the prefix order."""
    if p == q:
        return Order.EQUAL
    if is_prefix(p, q):
        return Order.ABOVE
    if is_prefix(q, p):
        return Order.BELOW
    return Order.INCOMPARABLE


class FlatRep:
    """All occurrences of a validated framework, keyed by position."""

    def __init__(self, framework: Framework, entries: dict[Position, str]):
        self.framework = framework
        self.entries = dict(sorted(entries.items()))
        self.positions: tuple[Position, ...] = tuple(self.entries)
        self._children: dict[Position, tuple[Position, ...]] = {}
        self._attackers: dict[Position, tuple[Position, ...]] = {}
        self._supporters: dict[Position, tuple[Position, ...]] = {}
        self._memo: dict = {}
        for p in self.positions:
            d = self.definition(p)
            if isinstance(d, BlockDef):
                kids = tuple(p + (i,) for i in range(1, len(d.args) + 1))
                self._children[p] = kids
                where = dict(zip(d.args, kids))
                for k in kids:
                    self._attackers[k] = ()
                    self._supporters[k] = ()
                for a, b in d.attacks:
                    self._attackers[where[b]] += (where[a],)
                for a, b in d.supports:
                    self._supporters[where[b]] += (where[a],)

    def __len__(self):
        return len(self.positions)

    def __iter__(self) -> Iterator[Position]:
        return iter(self.positions)

    def __contains__(self, p) -> bool:
        return p in self.entries

    def __eq__(self, other):
        if not isinstance(other, FlatRep):
            return NotImplemented
        return self.entries == other.entries and all(
            self.definition(p) == other.definition(p) for p in self.positions
        )

    __hash__ = object.__hash__

    def __repr__(self):
        return f"FlatRep({len(self)} occurrences, root={self.name(ROOT)!r})"

    def name(self, p: Position) -> str:
        return self.entries[p]

    def definition(self, p: Position) -> Definition:
        return self.framework.definitions[self.entries[p]]

    def term(self, p: Position) -> Arg:
        return self.framework.term(self.entries[p])

    def occurrence(self, p: Position) -> Occurrence:
        return Occurrence(p, self.entries[p], self.definition(p))

    def is_block(self, p: Position) -> bool:
        return p in self._children

    def block_positions(self) -> tuple[Position, ...]:
        return tuple(p for p in self.positions if p in self._children)

    def children(self, p: Position) -> tuple[Position, ...]:
        return self._children.get(p, ())

    def attackers(self, q: Position) -> tuple[Position, ...]:
        """Positions of the local attackers of ``q`` inside its parent block."""
        return self._attackers.get(q, ())

    def supporters(self, q: Position) -> tuple[Position, ...]:
        return self._supporters.get(q, ())

    def subtree(self, p: Position) -> tuple[Position, ...]:
        """Strict descendants of ``p`` in lexicographic order."""
        out: list[Position] = []
        stack = list(reversed(self.children(p)))
        while stack:
            q = stack.pop()
            out.append(q)
            stack.extend(reversed(self.children(q)))
        return tuple(out)

    def to_json(self) -> list[dict]:
        return [{"pos": list(p), "name": n} for p, n in self.entries.items()]


def occurrence_count(framework: Framework) -> int:
    sizes: dict[str, int] = {}

    def size(name: str) -> int:
        if name not in sizes:
            d = framework.definitions[name]
            kids = d.args if isinstance(d, BlockDef) else ()
            sizes[name] = 1 + sum(size(c) for c in kids)
        return sizes[name]

    return size(framework.root)


def flatten(
    framework: Framework, max_occurrences: int = DEFAULT_MAX_OCCURRENCES
) -> FlatRep:
    """Expand a framework into its flat representation.

    Raises :class:`SizeCapExceeded` before expanding when the number of
    occurrences would exceed ``max_occurrences``.
    """
    total = occurrence_count(framework)
    if total > max_occurrences:
        raise SizeCapExceeded(
            f"{total} occurrences exceed the cap of {max_occurrences}"
        )
    entries: dict[Position, str] = {}
    stack = [(ROOT, framework.root)]
    while stack:
        pos, name = stack.pop()
        entries[pos] = name
        d = framework.definitions[name]
        if isinstance(d, BlockDef):
            for i, child in enumerate(d.args, start=1):
                stack.append((pos + (i,), child))
    return FlatRep(framework, entries)


def _require_block(flat: FlatRep, p: Position) -> BlockDef:
    if p not in flat:
        raise KeyError(p)
    d = flat.definition(p)
    if not isinstance(d, BlockDef):
        raise UnitaryPosition(f"position {p} holds atom {flat.name(p)!r}")
    return d


def args_in(flat: FlatRep, p: Position) -> frozenset[Occurrence]:
    """The child occurrences of the block at ``p``."""
    _require_block(flat, p)
    return frozenset(flat.occurrence(q) for q in flat.children(p))


def _lift(flat: FlatRep, p: Position, pairs) -> frozenset[tuple[Occurrence, Occurrence]]:
    d = flat.definition(p)
    where = {
        name: flat.occurrence(q) for name, q in zip(d.args, flat.children(p))
    }
    return frozenset((where[a], where[b]) for a, b in pairs)


def attacks_in(flat: FlatRep, p: Position) -> frozenset[tuple[Occurrence, Occurrence]]:
    return _lift(flat, p, _require_block(flat, p).attacks)


def supports_in(flat: FlatRep, p: Position) -> frozenset[tuple[Occurrence, Occurrence]]:
    return _lift(flat, p, _require_block(flat, p).supports)
