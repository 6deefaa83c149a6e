"""Backtracking enumeration of labellings satisfying the per-position conditions.

Positions are assigned breadth first, so siblings are contiguous and
S-constrainers (always shallower) are assigned before the positions they
constrain. Each position's condition is checked as soon as the last position
it depends on has been assigned.
"""

from __future__ import annotations

import time

from .config import Constraint, SolverConfig
from .constraints import _tables, g_table
from .errors import SolverTimeout
from .flatrep import ROOT, FlatRep, Position
from .labelling import Label, Labelling, sort_labellings

P, M, U = 0, 1, 2
LABELS = (Label.PLUS, Label.MINUS, Label.UNDEC)
_TIME_CHECK_EVERY = 2048


class _Compiled:
    def __init__(self, flat: FlatRep, config: SolverConfig):
        cs = config.constraints
        self.order: list[Position] = sorted(flat.positions, key=lambda p: (len(p), p))
        idx = {p: i for i, p in enumerate(self.order)}
        s_map, star_map = _tables(flat, config.s_dominance)
        use_s = Constraint.S in cs
        use_star = Constraint.STAR in cs
        g = g_table(flat) if Constraint.G in cs else None
        enclosing = config.scope == "enclosing" and (use_s or use_star)

        n = len(self.order)
        self.att = [tuple(idx[a] for a in flat.attackers(p)) for p in self.order]
        self.sup = [tuple(idx[s] for s in flat.supporters(p)) for p in self.order]
        self.s = [tuple(idx[c] for c in s_map[p]) if use_s else () for p in self.order]
        self.star = [tuple(idx[c] for c in star_map[p]) if use_star else () for p in self.order]
        self.g_ok = [True if g is None else g[p] for p in self.order]
        self.is_root = [p == ROOT for p in self.order]
        self.sub = [
            tuple(idx[r] for r in flat.subtree(p)) if enclosing and flat.is_block(p) else ()
            for p in self.order
        ]

        # which checks fire once position i is assigned
        self.fire: list[list[int]] = [[] for _ in range(n)]
        for i in range(n):
            deps = {i, *self.att[i], *self.sup[i], *self.s[i], *self.star[i]}
            for r in self.sub[i]:
                deps.add(r)
                deps.update(self.s[r])
                deps.update(self.star[r])
            self.fire[max(deps)].append(i)

    def _fails(self, r: int, L: list[int]) -> bool:
        lr = L[r]
        for c in self.s[r]:
            if L[c] != U and L[c] != lr:
                return True
        for c in self.star[r]:
            if L[c] != lr:
                return True
        return False

    def _veto(self, i: int, label: int, L: list[int]) -> bool:
        for c in self.s[i]:
            if L[c] != U and L[c] != label:
                return True
        for c in self.star[i]:
            if L[c] != label:
                return True
        if label == P:
            for r in self.sub[i]:
                if self._fails(r, L):
                    return True
        return False

    def ok(self, i: int, L: list[int]) -> bool:
        li = L[i]
        if self.is_root[i]:
            plus = self.g_ok[i] and not self._veto(i, P, L)
            return (li == P) == plus and li != M
        plus = self.g_ok[i] and all(L[a] == M for a in self.att[i]) and not self._veto(i, P, L)
        if (li == P) != plus:
            return False
        minus = (
            any(L[a] == P for a in self.att[i])
            and not any(L[s] == P for s in self.sup[i])
            and not self._veto(i, M, L)
        )
        return (li == M) == minus


def enumerate_labellings(
    flat: FlatRep, config: SolverConfig | None = None
) -> list[Labelling]:
    """All labellings meeting the (possibly constrained) complete conditions.

    With no constraints these are the standard complete labellings.
    """
    config = config or SolverConfig()
    comp = _Compiled(flat, config)
    n = len(comp.order)
    L = [U] * n
    found: list[Labelling] = []
    deadline = None if config.timeout is None else time.monotonic() + config.timeout
    choice = [-1] * (n + 1)
    steps = 0
    i = 0
    while i >= 0:
        if i == n:
            found.append(Labelling(zip(comp.order, (LABELS[x] for x in L))))
            i -= 1
            continue
        steps += 1
        if deadline is not None and steps % _TIME_CHECK_EVERY == 0 and time.monotonic() > deadline:
            raise SolverTimeout(f"search exceeded {config.timeout}s")
        choice[i] += 1
        if choice[i] > U:
            choice[i] = -1
            L[i] = U
            i -= 1
            continue
        L[i] = choice[i]
        if all(comp.ok(j, L) for j in comp.fire[i]):
            i += 1
    return sort_labellings(found)
