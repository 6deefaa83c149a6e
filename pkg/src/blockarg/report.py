from __future__ import annotations

from dataclasses import dataclass, field

from .flatrep import Position


@dataclass(frozen=True)
class Violation:
    position: Position
    rule: str
    detail: str = ""
    witness: Position | None = None

    def to_json(self) -> dict:
        out = {"pos": list(self.position), "rule": self.rule, "detail": self.detail}
        if self.witness is not None:
            out["witness"] = list(self.witness)
        return out


@dataclass(frozen=True)
class Verdict:
    ok: bool
    violations: tuple[Violation, ...] = field(default=())

    def __bool__(self):
        return self.ok

    @classmethod
    def of(cls, violations) -> "Verdict":
        violations = tuple(violations)
        return cls(not violations, violations)
