"""Exhaustive reference enumerators used by the differential tests.

Nothing here is clever on purpose.
"""

from __future__ import annotations

import itertools
from typing import Callable

from .errors import OracleCapExceeded
from .flatrep import FlatRep, Occurrence, Position, _require_block
from .labelling import MINUS, PLUS, UNDEC, Labelling

MAX_POSITIONS = 12
MAX_CHILDREN = 16


def brute_force_labellings(
    flat: FlatRep, predicate: Callable[[Labelling], object]
) -> list[Labelling]:
    """Every total labelling accepted by ``predicate``, in lexicographic order."""
    positions = flat.positions
    if len(positions) > MAX_POSITIONS:
        raise OracleCapExceeded(f"{len(positions)} positions exceed the oracle cap of {MAX_POSITIONS}")
    out = []
    for labels in itertools.product((PLUS, MINUS, UNDEC), repeat=len(positions)):
        lab = Labelling(zip(positions, labels))
        if predicate(lab):
            out.append(lab)
    return out


def brute_force_subsets(
    flat: FlatRep, p: Position, predicate: Callable[[frozenset[Occurrence]], object]
) -> list[frozenset[Occurrence]]:
    """Every subset of the children of ``p`` accepted by ``predicate``."""
    _require_block(flat, p)
    kids = [flat.occurrence(q) for q in flat.children(p)]
    if len(kids) > MAX_CHILDREN:
        raise OracleCapExceeded(f"{len(kids)} children exceed the oracle cap of {MAX_CHILDREN}")
    out = []
    for mask in range(1 << len(kids)):
        cand = frozenset(k for i, k in enumerate(kids) if mask >> i & 1)
        if predicate(cand):
            out.append(cand)
    return out
