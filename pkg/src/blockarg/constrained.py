"""Complete labellings under a constraint set.

Two strategies are offered. ``fixpoint`` enumerates every labelling meeting
the constrained biconditionals directly. ``repair`` starts from each
standard complete labelling, demotes constraint-violating labels to ``?``
until nothing triggers, and then returns the most informative compliant
labellings lying between the demoted labelling and the original one.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

import networkx as nx
from networkx.utils import UnionFind

from .config import Constraint, SolverConfig
from .constraints import (
    _tables,
    constraint_report,
    g_table,
    s_constrainers,
    satisfies_s,
    satisfies_star,
    star_partners,
)
from .errors import DomainMismatch, SizeCapExceeded
from .flatrep import ROOT, FlatRep, Position
from .labelling import MINUS, PLUS, UNDEC, Label, Labelling, label_dominates, sort_labellings
from .oracle import brute_force_labellings
from .report import Verdict, Violation
from .search import enumerate_labellings
from .standard import enumerate_standard_complete_labellings, is_standard_complete_labelling

MAX_REPAIR_FREE = 16


def _fails_semantic(flat: FlatRep, get, r: Position, config: SolverConfig) -> bool:
    """Literal S/STAR failure at ``r``, reading labels through ``get``."""
    cs = config.constraints
    s_map, star_map = _tables(flat, config.s_dominance)
    lr = get(r)
    if Constraint.S in cs and any(not label_dominates(get(c), lr) for c in s_map[r]):
        return True
    if Constraint.STAR in cs and any(get(c) != lr for c in star_map[r]):
        return True
    return False


def sem_veto(
    flat: FlatRep, labelling: Labelling, p: Position, label: Label, config: SolverConfig
) -> bool:
    """Would labelling ``p`` with ``label`` break a semantic constraint in C?

    ``local`` scope consults only the instances where ``p`` is the
    constrained party. ``enclosing`` scope also refuses ``+`` to a block
    whose strict subtree holds an occurrence failing S or STAR.
    """
    if label not in (PLUS, MINUS):
        raise ValueError("only + and - can be vetoed")

    def get(r: Position) -> Label:
        return label if r == p else labelling[r]

    if _fails_semantic(flat, get, p, config):
        return True
    if config.scope == "enclosing" and label is PLUS and flat.is_block(p):
        return any(_fails_semantic(flat, get, r, config) for r in flat.subtree(p))
    return False


def is_complete_under_c(
    flat: FlatRep, labelling: Labelling, config: SolverConfig, *, first_only: bool = False
) -> Verdict:
    """Check the constrained complete conditions at every position.

    ``+`` holds exactly when every local attacker is ``-``, the occurrence
    satisfies G (if G is in C) and ``+`` is not vetoed; ``-`` holds exactly
    when some local attacker is ``+``, no local supporter is ``+`` and ``-``
    is not vetoed.
    """
    if set(labelling) != set(flat.positions):
        return Verdict.of([Violation(ROOT, "domain", "labelling is not total")])
    use_g = Constraint.G in config.constraints
    g = g_table(flat) if use_g else None
    violations: list[Violation] = []
    for q in flat.positions:
        lq = labelling[q]
        g_ok = g is None or g[q]
        if q == ROOT:
            plus, minus = g_ok and not sem_veto(flat, labelling, q, PLUS, config), False
        else:
            att, sup = flat.attackers(q), flat.supporters(q)
            plus = (
                all(labelling[a] is MINUS for a in att)
                and g_ok
                and not sem_veto(flat, labelling, q, PLUS, config)
            )
            minus = (
                any(labelling[a] is PLUS for a in att)
                and not any(labelling[s] is PLUS for s in sup)
                and not sem_veto(flat, labelling, q, MINUS, config)
            )
        if (lq is PLUS) != plus:
            violations.append(Violation(q, "+", f"labelled {lq}, + condition is {plus}"))
        if (lq is MINUS) != minus:
            violations.append(Violation(q, "-", f"labelled {lq}, - condition is {minus}"))
        if violations and first_only:
            break
    return Verdict.of(violations)


def enumerate_complete_under_c(flat: FlatRep, config: SolverConfig) -> list[Labelling]:
    """Fixpoint mode: every labelling accepted by :func:`is_complete_under_c`.

    The list may be empty; callers report that rather than treat it as an error.
    """
    return enumerate_labellings(flat, config)


def more_informative(l1: Labelling, l2: Labelling) -> bool:
    """True iff ``l1`` keeps every ``+``/``-`` of ``l2`` (it may refine ``?``)."""
    if set(l1) != set(l2):
        raise DomainMismatch("labellings are over different positions")
    return all(label_dominates(l2[p], l1[p]) for p in l1)


# -- repair ----------------------------------------------------------------------


@dataclass(frozen=True)
class DownStep:
    labelling: Labelling
    trigger: Position
    case: str
    forced: tuple[Position, ...]


def _stabilize(flat: FlatRep, labels: dict[Position, Label]) -> None:
    """Demote, in place, every ``+``/``-`` whose standard condition no longer holds.

    Labels only move towards ``?``, so the result is the most informative
    labelling below the input whose decided labels are all justified.
    """
    changed = True
    while changed:
        changed = False
        for q in flat.positions:
            if q == ROOT:
                continue
            lq = labels[q]
            if lq is PLUS:
                if any(labels[a] is not MINUS for a in flat.attackers(q)):
                    labels[q] = UNDEC
                    changed = True
            elif lq is MINUS:
                if not any(labels[a] is PLUS for a in flat.attackers(q)) or any(
                    labels[s] is PLUS for s in flat.supporters(q)
                ):
                    labels[q] = UNDEC
                    changed = True


def _find_trigger(
    flat: FlatRep, labelling: Labelling, config: SolverConfig
) -> tuple[Position, str, tuple[Position, ...]] | None:
    cs = config.constraints
    g = g_table(flat) if Constraint.G in cs else None
    for q in flat.positions:
        lq = labelling[q]
        if lq is UNDEC:
            continue
        if Constraint.STAR in cs and not satisfies_star(flat, labelling, q):
            return q, "STAR", (q,) + star_partners(flat, q)
        if Constraint.S in cs and not satisfies_s(flat, labelling, q, config):
            return q, "S", (q,)
        if g is not None and lq is PLUS and not g[q]:
            return q, "G", (q,)
    return None


def down_step(flat: FlatRep, labelling: Labelling, config: SolverConfig) -> DownStep | None:
    """One repair step, or ``None`` when no occurrence triggers.

    The first triggering occurrence in position order is forced to ``?``
    (for STAR together with all its Eq-equal siblings), then every decided
    label that lost its justification is demoted in turn.
    """
    hit = _find_trigger(flat, labelling, config)
    if hit is None:
        return None
    trigger, case, forced = hit
    labels = dict(labelling.items())
    for p in forced:
        labels[p] = UNDEC
    _stabilize(flat, labels)
    return DownStep(Labelling(labels), trigger, case, tuple(sorted(forced)))


def down_fixpoint(flat: FlatRep, labelling: Labelling, config: SolverConfig) -> list[DownStep]:
    """Iterate :func:`down_step` until it stops; returns the trace."""
    trace = []
    current = labelling
    while (step := down_step(flat, current, config)) is not None:
        trace.append(step)
        current = step.labelling
    return trace


def _coupled(flat: FlatRep, config: SolverConfig) -> set[Position]:
    cs = config.constraints
    out: set[Position] = set()
    for q in flat.positions:
        partners: tuple = ()
        if Constraint.S in cs:
            partners += s_constrainers(flat, q, config.s_dominance)
        if Constraint.STAR in cs:
            partners += star_partners(flat, q)
        if partners:
            out.add(q)
            out.update(partners)
    return out


def _repair_bounds(
    flat: FlatRep, standard: Labelling, config: SolverConfig
) -> tuple[dict[Position, Label], list[Position]]:
    """The demoted floor (with harmless labels restored) and the open positions.

    An open position may either keep its standard label or stay ``?``.
    """
    trace = down_fixpoint(flat, standard, config)
    floor = trace[-1].labelling if trace else standard
    g = g_table(flat) if Constraint.G in config.constraints else None
    coupled = _coupled(flat, config)
    base = dict(floor.items())
    open_: list[Position] = []
    for p in flat.positions:
        if floor[p] is not UNDEC or standard[p] is UNDEC:
            continue
        if g is not None and standard[p] is PLUS and not g[p]:
            continue
        if p in coupled:
            open_.append(p)
        else:
            # touches no semantic constraint: keeping its label never hurts
            base[p] = standard[p]
    return base, open_


def _maximal_keeps_brute(flat, standard, config, base, open_) -> list[frozenset[Position]]:
    if len(open_) > MAX_REPAIR_FREE:
        raise SizeCapExceeded(f"repair would explore 2^{len(open_)} candidates")
    found: list[frozenset[Position]] = []
    for size in range(len(open_), -1, -1):
        for kept in combinations(open_, size):
            kept_set = frozenset(kept)
            if any(kept_set <= f for f in found):
                continue
            cand = dict(base)
            for p in kept:
                cand[p] = standard[p]
            if not constraint_report(flat, Labelling(cand), config=config):
                found.append(kept_set)
    return found


def _maximal_keeps(flat, standard, config, base, open_) -> list[frozenset[Position]]:
    """Maximal sets of open positions that can keep their standard label.

    Every S or STAR violation involves two positions, so the instances
    reduce to exclusions (a position can never keep its label), requirements,
    conflicts (two positions cannot both keep theirs) and STAR links (kept
    together). The answer is then the maximal independent sets of the
    conflict graph over linked groups.
    """
    cs = config.constraints
    s_map, star_map = _tables(flat, config.s_dominance)
    is_open = set(open_)
    excluded: set[Position] = set()
    required: set[Position] = set()
    conflicts: set[tuple[Position, Position]] = set()
    uf = UnionFind(open_)

    def fixed(p):
        return None if p in is_open else base[p]

    for q in flat.positions:
        if Constraint.S in cs:
            for p in s_map[q]:
                lq = standard[q] if q in is_open else fixed(q)
                lp = standard[p] if p in is_open else fixed(p)
                if lq is UNDEC or lp is UNDEC or lq == lp:
                    continue
                if q in is_open and p in is_open:
                    conflicts.add((q, p))
                elif q in is_open:
                    excluded.add(q)
                elif p in is_open:
                    excluded.add(p)
                else:
                    return []
        if Constraint.STAR in cs:
            for p in star_map[q]:
                if q in is_open:
                    lp = standard[p] if p in is_open else fixed(p)
                    if lp != standard[q]:
                        excluded.add(q)
                    elif p in is_open:
                        uf.union(q, p)
                elif fixed(q) is not UNDEC:
                    if p in is_open and standard[p] == fixed(q):
                        required.add(p)
                    elif fixed(p) != fixed(q):
                        return []

    groups: dict[Position, set[Position]] = {}
    for p in open_:
        groups.setdefault(uf[p], set()).add(p)
    bad = {uf[p] for p in excluded}
    for a, b in conflicts:
        if uf[a] == uf[b]:
            bad.add(uf[a])
    need = {uf[p] for p in required}
    if need & bad:
        return []
    adj: dict[Position, set[Position]] = {g: set() for g in groups}
    for a, b in conflicts:
        ga, gb = uf[a], uf[b]
        if ga != gb:
            adj[ga].add(gb)
            adj[gb].add(ga)
    for g in need:
        bad |= adj[g]
    if need & bad:
        return []
    live = [g for g in groups if g not in bad]
    if not live:
        return [frozenset()]
    # maximal independent sets of the conflict graph are the maximal cliques
    # of its complement
    compat = nx.Graph()
    compat.add_nodes_from(live)
    compat.add_edges_from(
        (g, h) for i, g in enumerate(live) for h in live[i + 1:] if h not in adj[g]
    )
    return [frozenset().union(*(groups[g] for g in clique)) for clique in nx.find_cliques(compat)]


def repair_from(
    flat: FlatRep, standard: Labelling, config: SolverConfig, *, exhaustive: bool = False
) -> list[Labelling]:
    """Repair one standard labelling into its maximal compliant labellings.

    ``exhaustive`` scans every subset of the open positions instead of
    solving the pairwise conflict structure; it is the reference method.
    """
    base, open_ = _repair_bounds(flat, standard, config)
    search = _maximal_keeps_brute if exhaustive else _maximal_keeps
    out = []
    for kept in search(flat, standard, config, base, open_):
        lab = Labelling({**base, **{p: standard[p] for p in kept}})
        if constraint_report(flat, lab, config=config):
            raise AssertionError("repair produced a violating labelling")
        out.append(lab)
    return out


def repair_complete(
    flat: FlatRep,
    config: SolverConfig,
    standard: Iterable[Labelling] | None = None,
    *,
    exhaustive: bool = False,
) -> list[Labelling]:
    """Repair mode over every standard complete labelling."""
    if standard is None:
        standard = enumerate_standard_complete_labellings(flat, config)
    out: list[Labelling] = []
    for lam in standard:
        out.extend(repair_from(flat, lam, config, exhaustive=exhaustive))
    return sort_labellings(out)


def solve_labellings(
    flat: FlatRep, config: SolverConfig, engine: str = "search"
) -> list[Labelling]:
    """Dispatch on mode and engine; ``oracle`` swaps in exhaustive enumeration."""
    if engine not in ("search", "oracle"):
        raise ValueError(f"unknown engine {engine!r}")
    if config.mode == "fixpoint":
        if engine == "oracle":
            return brute_force_labellings(
                flat, lambda lab: is_complete_under_c(flat, lab, config, first_only=True)
            )
        return enumerate_complete_under_c(flat, config)
    standard = None
    if engine == "oracle":
        standard = brute_force_labellings(flat, lambda lab: is_standard_complete_labelling(flat, lab))
    return repair_complete(flat, config, standard, exhaustive=engine == "oracle")
