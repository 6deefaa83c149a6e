"""Three-valued labels and total labellings over a flat representation."""

from __future__ import annotations

import enum
from typing import Iterable, Iterator, Mapping

from .flatrep import Position


class Label(str, enum.Enum):
    PLUS = "+"
    MINUS = "-"
    UNDEC = "?"

    @classmethod
    def parse(cls, text: str) -> "Label":
        return cls("-" if text == "−" else text)

    def __str__(self):
        return self.value


PLUS, MINUS, UNDEC = Label.PLUS, Label.MINUS, Label.UNDEC

# canonical enumeration order: + < - < ?
RANK = {PLUS: 0, MINUS: 1, UNDEC: 2}


def label_dominates(l1: Label, l2: Label) -> bool:
    """``?`` dominates every label; ``+`` and ``-`` dominate only themselves."""
    return l1 is UNDEC or l1 == l2


class Labelling(Mapping[Position, Label]):
    """An immutable map from positions to labels."""

    __slots__ = ("_map", "_hash")

    def __init__(self, items: Mapping[Position, Label] | Iterable[tuple[Position, Label]]):
        pairs = items.items() if isinstance(items, Mapping) else items
        self._map = {tuple(p): Label(l) for p, l in sorted(pairs)}
        self._hash = hash(tuple(self._map.items()))

    def __getitem__(self, p: Position) -> Label:
        return self._map[p]

    def __iter__(self) -> Iterator[Position]:
        return iter(self._map)

    def __len__(self):
        return len(self._map)

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if isinstance(other, Labelling):
            return self._map == other._map
        return NotImplemented

    def __repr__(self):
        body = ", ".join(
            f"{'.'.join(map(str, p))}:{l.value}" for p, l in self._map.items()
        )
        return f"Labelling({body})"

    def sort_key(self) -> tuple:
        return tuple(RANK[l] for l in self._map.values())

    def replace(self, changes: Mapping[Position, Label]) -> "Labelling":
        merged = dict(self._map)
        merged.update(changes)
        return Labelling(merged)

    def with_label(self, p: Position, label: Label) -> "Labelling":
        return self.replace({p: label})

    def positions_with(self, label: Label) -> tuple[Position, ...]:
        return tuple(p for p, l in self._map.items() if l == label)

    def to_json(self) -> list[dict]:
        return [{"pos": list(p), "label": l.value} for p, l in self._map.items()]

    @classmethod
    def from_json(cls, data: list[dict]) -> "Labelling":
        return cls((tuple(e["pos"]), Label.parse(e["label"])) for e in data)


def sort_labellings(labellings: Iterable[Labelling]) -> list[Labelling]:
    """Deduplicate and sort lexicographically by position, ``+ < - < ?``."""
    return sorted(set(labellings), key=Labelling.sort_key)
