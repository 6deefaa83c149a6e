"""Solver configuration: which constraints apply and how to read them."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from typing import Iterable

from .flatrep import DEFAULT_MAX_OCCURRENCES


class Constraint(str, enum.Enum):
    G = "G"
    S = "S"
    STAR = "STAR"

    def __str__(self):
        return self.value


MODES = ("fixpoint", "repair")
# depth: constrainer strictly shallower; prefix: constrainer is a proper
# ancestor; scope: constrainer's parent block is a proper ancestor of the
# constrained occurrence's parent block.
S_DOMINANCE = ("depth", "prefix", "scope")
SCOPES = ("local", "enclosing")


def parse_constraints(text: str | Iterable[str] | None) -> frozenset[Constraint]:
    """Parse ``"none"``, ``""`` or a comma list such as ``"G,S,STAR"``."""
    if text is None:
        return frozenset()
    if isinstance(text, str):
        items = [t.strip() for t in text.split(",")]
    else:
        items = [str(t).strip() for t in text]
    out = set()
    for item in items:
        if item in ("", "none", "NONE"):
            continue
        key = {"*": "STAR", "⋆": "STAR", "star": "STAR"}.get(item, item.upper())
        try:
            out.add(Constraint(key))
        except ValueError:
            raise ValueError(f"unknown constraint {item!r}") from None
    return frozenset(out)


def format_constraints(cs: Iterable[Constraint]) -> str:
    names = [c.value for c in Constraint if c in set(cs)]
    return ",".join(names) if names else "none"


@dataclass(frozen=True)
class SolverConfig:
    constraints: frozenset[Constraint] = field(default_factory=frozenset)
    mode: str = "fixpoint"
    s_dominance: str = "depth"
    scope: str = "local"
    collapse_eq: bool = False
    max_occurrences: int = DEFAULT_MAX_OCCURRENCES
    timeout: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "constraints", parse_constraints(self.constraints))
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        if self.s_dominance not in S_DOMINANCE:
            raise ValueError(f"s_dominance must be one of {S_DOMINANCE}")
        if self.scope not in SCOPES:
            raise ValueError(f"scope must be one of {SCOPES}")
        if self.max_occurrences < 1:
            raise ValueError("max_occurrences must be positive")

    def with_(self, **changes) -> "SolverConfig":
        return replace(self, **changes)

    def to_json(self) -> dict:
        return {
            "constraints": format_constraints(self.constraints),
            "mode": self.mode,
            "s_dominance": self.s_dominance,
            "scope": self.scope,
            "collapse_eq": self.collapse_eq,
            "max_occurrences": self.max_occurrences,
            "timeout": self.timeout,
        }
