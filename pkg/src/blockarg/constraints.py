"""The graphical constraint G and the semantic constraints S and STAR."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .config import Constraint, SolverConfig
from .flatrep import ROOT, FlatRep, Position, is_prefix
from .labelling import UNDEC, Label, Labelling, label_dominates
from .model import eq, signature, sub_argumentation
from .report import Violation

__all__ = [
    "ConstraintInstance",
    "constraint_instances",
    "constraint_report",
    "eq_classes",
    "g_table",
    "label_dominates",
    "s_constrainers",
    "satisfies_g",
    "satisfies_s",
    "satisfies_star",
    "star_partners",
]


@dataclass(frozen=True)
class ConstraintInstance:
    kind: Constraint
    constrained: Position
    constrainer: Position


def eq_classes(flat: FlatRep) -> dict[Position, int]:
    """Partition positions by Eq on their occupants; returns a class id per position."""
    memo = flat._memo
    if "eq_classes" in memo:
        return memo["eq_classes"]
    reps: dict[tuple, list[tuple[int, Position]]] = {}
    out: dict[Position, int] = {}
    next_id = 0
    for p in flat.positions:
        term = flat.term(p)
        bucket = reps.setdefault(signature(term), [])
        for cid, rep in bucket:
            if eq(flat.term(rep), term):
                out[p] = cid
                break
        else:
            bucket.append((next_id, p))
            out[p] = next_id
            next_id += 1
    memo["eq_classes"] = out
    return out


def g_table(flat: FlatRep) -> dict[Position, bool]:
    """G satisfaction for every position, computed leaves first."""
    memo = flat._memo
    if "g" in memo:
        return memo["g"]
    table: dict[Position, bool] = {}
    for p in sorted(flat.positions, key=len, reverse=True):
        term = flat.term(p)
        if p == ROOT or not flat.is_block(p):
            local = True
        else:
            local = any(
                sub_argumentation(flat.term(p[:k]), term) for k in range(1, len(p))
            )
        table[p] = local and all(table[c] for c in flat.children(p))
    memo["g"] = table
    return table


def satisfies_g(flat: FlatRep, p: Position) -> bool:
    """G at ``p``: a non-root block occupant must be a sub-argumentation of
    some occurrence strictly above it, and every child must satisfy G."""
    return g_table(flat)[p]


def _dominates_position(p: Position, q: Position, mode: str) -> bool:
    if mode == "depth":
        return len(p) < len(q)
    if mode == "prefix":
        return len(p) < len(q) and is_prefix(p, q)
    if mode == "scope":
        return len(p) > 1 and len(p) < len(q) and is_prefix(p[:-1], q[:-1])
    raise ValueError(f"unknown S dominance {mode!r}")


def _tables(flat: FlatRep, s_dominance: str) -> tuple[dict, dict]:
    key = ("instances", s_dominance)
    memo = flat._memo
    if key in memo:
        return memo[key]
    classes = eq_classes(flat)
    by_class: dict[int, list[Position]] = {}
    for p in flat.positions:
        by_class.setdefault(classes[p], []).append(p)
    s_map: dict[Position, tuple[Position, ...]] = {}
    star_map: dict[Position, tuple[Position, ...]] = {}
    for q in flat.positions:
        same = by_class[classes[q]]
        s_map[q] = tuple(p for p in same if _dominates_position(p, q, s_dominance))
        star_map[q] = tuple(
            p for p in same if p != q and len(p) == len(q) and p[:-1] == q[:-1]
        )
    memo[key] = (s_map, star_map)
    return s_map, star_map


def s_constrainers(flat: FlatRep, q: Position, s_dominance: str = "depth") -> tuple[Position, ...]:
    return _tables(flat, s_dominance)[0][q]


def star_partners(flat: FlatRep, q: Position) -> tuple[Position, ...]:
    return _tables(flat, "depth")[1][q]


def constraint_instances(
    flat: FlatRep, kind: Constraint, config: SolverConfig | None = None
) -> list[ConstraintInstance]:
    """Every (constrained, constrainer) pair of the given semantic constraint."""
    config = config or SolverConfig()
    kind = Constraint(kind)
    s_map, star_map = _tables(flat, config.s_dominance)
    table = {Constraint.S: s_map, Constraint.STAR: star_map}.get(kind)
    if table is None:
        raise ValueError("only S and STAR have instances")
    return [
        ConstraintInstance(kind, q, p) for q in flat.positions for p in table[q]
    ]


def satisfies_s(
    flat: FlatRep, labelling: Labelling, q: Position, config: SolverConfig | None = None
) -> bool:
    """Every S-constrainer of ``q`` carries a label dominating ``q``'s label."""
    dominance = (config or SolverConfig()).s_dominance
    lq = labelling[q]
    return all(label_dominates(labelling[p], lq) for p in s_constrainers(flat, q, dominance))


def satisfies_star(flat: FlatRep, labelling: Labelling, q: Position) -> bool:
    """Every Eq-equal sibling of ``q`` carries exactly ``q``'s label."""
    lq = labelling[q]
    return all(labelling[p] == lq for p in star_partners(flat, q))


def constraint_report(
    flat: FlatRep,
    labelling: Labelling,
    constraints: Iterable[Constraint] | None = None,
    config: SolverConfig | None = None,
    *,
    include_undecided: bool = False,
) -> list[Violation]:
    """List every constraint violation of ``labelling``.

    By default an occurrence labelled ``?`` never counts as the violating
    party of S or STAR, since it makes no claim; pass
    ``include_undecided=True`` to report raw predicate failures instead.
    """
    config = config or SolverConfig()
    cs = config.constraints if constraints is None else frozenset(Constraint(c) for c in constraints)
    s_map, star_map = _tables(flat, config.s_dominance)
    g = g_table(flat) if Constraint.G in cs else None
    out: list[Violation] = []
    for q in flat.positions:
        lq = labelling[q]
        if lq is UNDEC and not include_undecided:
            pass
        else:
            if Constraint.STAR in cs:
                for p in star_map[q]:
                    if labelling[p] != lq:
                        out.append(Violation(q, "STAR", f"{lq} vs {labelling[p]}", p))
            if Constraint.S in cs:
                for p in s_map[q]:
                    if not label_dominates(labelling[p], lq):
                        out.append(Violation(q, "S", f"{labelling[p]} does not dominate {lq}", p))
        if g is not None and lq == Label.PLUS and not g[q]:
            out.append(Violation(q, "G", "+ on an occurrence failing G"))
    return out
