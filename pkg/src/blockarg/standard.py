"""Standard complete sets and standard complete labellings (no constraints)."""

from __future__ import annotations

from typing import AbstractSet

from .config import SolverConfig
from .errors import NotComplete
from .flatrep import ROOT, FlatRep, Occurrence, Position, _require_block
from .labelling import MINUS, PLUS, UNDEC, Labelling
from .report import Verdict, Violation
from .search import enumerate_labellings

OccSet = frozenset[Occurrence]


def _local(flat: FlatRep, p: Position):
    """Children of ``p`` with local attacker and supporter position lists."""
    _require_block(flat, p)
    kids = flat.children(p)
    return kids, {q: flat.attackers(q) for q in kids}, {q: flat.supporters(q) for q in kids}


def defends_in(
    flat: FlatRep, p: Position, members: AbstractSet[Occurrence], arg: Occurrence
) -> bool:
    """Every attacker of ``arg`` in ``p`` is attacked by some member and
    supported by none."""
    _require_block(flat, p)
    inside = {o.pos for o in members}
    for b in flat.attackers(arg.pos):
        if not any(c in inside for c in flat.attackers(b)):
            return False
        if any(s in inside for s in flat.supporters(b)):
            return False
    return True


def is_conflict_free(flat: FlatRep, p: Position, members: AbstractSet[Occurrence]) -> bool:
    inside = {o.pos for o in members}
    return not any(a in inside for q in inside for a in flat.attackers(q))


def is_standard_complete_set(
    flat: FlatRep, p: Position, members: AbstractSet[Occurrence]
) -> bool:
    """Conflict-free, every member defended, and every defended argument included."""
    kids, _, _ = _local(flat, p)
    if any(o.pos not in kids for o in members):
        return False
    if not is_conflict_free(flat, p, members):
        return False
    for q in kids:
        occ = flat.occurrence(q)
        if (occ in members) != defends_in(flat, p, members, occ):
            return False
    return True


def standard_complete_sets_in(flat: FlatRep, p: Position) -> list[OccSet]:
    """All standard complete sets of the block at ``p``.

    Include/exclude backtracking over the children with conflict pruning;
    defence and closure are checked on complete candidates.
    """
    kids, att, _ = _local(flat, p)
    chosen: list[Position] = []
    out: list[OccSet] = []

    def go(k: int) -> None:
        if k == len(kids):
            cand = frozenset(flat.occurrence(q) for q in chosen)
            if is_standard_complete_set(flat, p, cand):
                out.append(cand)
            return
        q = kids[k]
        inside = set(chosen)
        if q not in att[q] and not any(a in inside for a in att[q]) and not any(
            q in att[c] for c in chosen
        ):
            chosen.append(q)
            go(k + 1)
            chosen.pop()
        go(k + 1)

    go(0)
    return sorted(out, key=lambda s: sorted(o.pos for o in s))


def is_standard_complete_labelling(flat: FlatRep, labelling: Labelling) -> Verdict:
    """Check the standard complete conditions at every block position.

    A child is ``+`` exactly when all its local attackers are ``-``, and ``-``
    exactly when some local attacker is ``+`` and no local supporter is
    ``+``. The root, having no attackers, must be ``+``.
    """
    if set(labelling) != set(flat.positions):
        return Verdict.of([Violation(ROOT, "domain", "labelling is not total on the flat representation")])
    violations = []
    if labelling[ROOT] is not PLUS:
        violations.append(Violation(ROOT, "+", "the root is unattacked and must be +"))
    for p in flat.block_positions():
        kids, att, sup = _local(flat, p)
        for q in kids:
            plus = all(labelling[a] is MINUS for a in att[q])
            minus = any(labelling[a] is PLUS for a in att[q]) and not any(
                labelling[s] is PLUS for s in sup[q]
            )
            lq = labelling[q]
            if (lq is PLUS) != plus:
                violations.append(Violation(q, "+", f"labelled {lq}, + condition is {plus}"))
            if (lq is MINUS) != minus:
                violations.append(Violation(q, "-", f"labelled {lq}, - condition is {minus}"))
    return Verdict.of(violations)


def enumerate_standard_complete_labellings(
    flat: FlatRep, config: SolverConfig | None = None
) -> list[Labelling]:
    """Every standard complete labelling, in canonical order.

    Only the caps of ``config`` are used; its constraints are ignored.
    """
    base = config.with_(constraints=frozenset()) if config else SolverConfig()
    return enumerate_labellings(flat, base)


def extension_of_labelling(flat: FlatRep, labelling: Labelling, p: Position) -> OccSet:
    """The ``+`` children of the block at ``p``."""
    _require_block(flat, p)
    return frozenset(flat.occurrence(q) for q in flat.children(p) if labelling[q] is PLUS)


def _local_labels(flat: FlatRep, p: Position, members: OccSet) -> dict[Position, object]:
    inside = {o.pos for o in members}
    out = {}
    for q in flat.children(p):
        if q in inside:
            out[q] = PLUS
        elif any(a in inside for a in flat.attackers(q)) and not any(
            s in inside for s in flat.supporters(q)
        ):
            out[q] = MINUS
        else:
            out[q] = UNDEC
    return out


def labelling_from_set(flat: FlatRep, p: Position, members: AbstractSet[Occurrence]) -> Labelling:
    """Build a standard complete labelling whose ``+`` children at ``p`` are ``members``.

    At ``p``: ``+`` on the members, ``-`` on children attacked by the set and
    supported by no member, ``?`` elsewhere. Every other block position gets
    its first standard complete set in canonical order, labelled the same way.
    """
    members = frozenset(members)
    if not is_standard_complete_set(flat, p, members):
        raise NotComplete(f"set is not standard complete at {p}")
    labels = {ROOT: PLUS}
    for b in flat.block_positions():
        if b == p:
            chosen = members
        else:
            sets = standard_complete_sets_in(flat, b)
            if not sets:
                raise NotComplete(f"block at {b} has no standard complete set")
            chosen = sets[0]
        labels.update(_local_labels(flat, b, chosen))
    return Labelling(labels)
