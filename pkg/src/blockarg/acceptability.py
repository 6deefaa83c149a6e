"""Root-level extensions: complete, grounded, semi-grounded and preferred."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .config import Constraint, SolverConfig
from .constrained import solve_labellings
from .constraints import eq_classes
from .flatrep import ROOT, FlatRep, flatten
from .labelling import PLUS, Labelling
from .model import Framework, FrameworkDoc, validate

Extension = frozenset[str]


def sort_family(family: Iterable[Extension]) -> list[Extension]:
    return sorted(set(family), key=lambda s: sorted(s))


def collapse_map(flat: FlatRep) -> dict[str, str]:
    """Map each root child name to the first root child with Eq-equal content."""
    classes = eq_classes(flat)
    first: dict[int, str] = {}
    out = {}
    for q in flat.children(ROOT):
        rep = first.setdefault(classes[q], flat.name(q))
        out[flat.name(q)] = rep
    return out


def extensions_at_root(
    flat: FlatRep, labellings: Iterable[Labelling], collapse_eq: bool = False
) -> list[Extension]:
    """The names of the ``+`` root children of each labelling, deduplicated."""
    rename = collapse_map(flat) if collapse_eq else None
    kids = flat.children(ROOT)
    family = []
    for lab in labellings:
        names = (flat.name(q) for q in kids if lab[q] is PLUS)
        family.append(frozenset(rename[n] for n in names) if rename else frozenset(names))
    return sort_family(family)


def minimal_sets(family: Iterable[Extension]) -> list[Extension]:
    family = set(family)
    return sort_family(s for s in family if not any(t < s for t in family))


def maximal_sets(family: Iterable[Extension]) -> list[Extension]:
    family = set(family)
    return sort_family(s for s in family if not any(s < t for t in family))


@dataclass
class SemanticsResult:
    complete: list[Extension]
    grounded: Extension | None
    grounded_is_complete: bool
    semi_grounded: list[Extension]
    preferred: list[Extension]
    config: SolverConfig
    labellings: list[Labelling] = field(default_factory=list)
    notes: list[dict] = field(default_factory=list)

    @classmethod
    def from_family(
        cls, complete: Iterable[Extension], config: SolverConfig, **extra
    ) -> "SemanticsResult":
        complete = sort_family(complete)
        grounded = frozenset.intersection(*complete) if complete else None
        return cls(
            complete=complete,
            grounded=grounded,
            grounded_is_complete=grounded in complete,
            semi_grounded=minimal_sets(complete),
            preferred=maximal_sets(complete),
            config=config,
            **extra,
        )

    def family(self, name: str):
        return {
            "complete": self.complete,
            "grounded": self.grounded,
            "semi_grounded": self.semi_grounded,
            "preferred": self.preferred,
        }[name]

    def to_json(self, *, with_labellings: bool = False) -> dict:
        def fam(f):
            return [sorted(s) for s in f]

        out = {
            "config": self.config.to_json(),
            "complete": fam(self.complete),
            "grounded": None if self.grounded is None else sorted(self.grounded),
            "grounded_is_complete": self.grounded_is_complete,
            "semi_grounded": fam(self.semi_grounded),
            "semi_grounded_count": len(self.semi_grounded),
            "preferred": fam(self.preferred),
            "notes": self.notes,
        }
        if with_labellings:
            out["labellings"] = [lab.to_json() for lab in self.labellings]
        return out


# -- reference comparison -----------------------------------------------------------


def _entry_applies(entry: dict, config: SolverConfig) -> bool:
    cs = config.constraints
    requires = {Constraint(c) for c in entry.get("requires", ())}
    forbids = {Constraint(c) for c in entry.get("forbids", ())}
    if not requires <= cs or forbids & cs:
        return False
    return entry.get("mode", config.mode) == config.mode


def _as_family(raw, rename) -> list[Extension]:
    return sort_family(frozenset(rename.get(n, n) for n in s) for s in raw)


def divergence_notes(
    flat: FlatRep, labellings: list[Labelling], config: SolverConfig, reference: Iterable[dict]
) -> list[dict]:
    """Compare derived families with reference entries that apply to ``config``.

    Each entry names the constraints it ``requires`` and ``forbids``, an
    optional ``mode`` and ``collapse_eq`` flag, and any of the fields
    ``complete``, ``grounded``, ``semi_grounded``, ``preferred``. One note
    is produced per field that differs.
    """
    notes = []
    for entry in reference:
        if not _entry_applies(entry, config):
            continue
        collapse = bool(entry.get("collapse_eq", config.collapse_eq))
        rename = collapse_map(flat) if collapse else {}
        derived = SemanticsResult.from_family(
            extensions_at_root(flat, labellings, collapse), config
        )
        for key in ("complete", "grounded", "semi_grounded", "preferred"):
            if key not in entry:
                continue
            if key == "grounded":
                expected = frozenset(rename.get(n, n) for n in entry[key])
                got = derived.grounded
                same = got == expected
                ref_out, got_out = sorted(expected), None if got is None else sorted(got)
            else:
                expected = _as_family(entry[key], rename)
                got = derived.family(key)
                same = got == expected
                ref_out, got_out = [sorted(s) for s in expected], [sorted(s) for s in got]
            if not same:
                note = {
                    "field": key,
                    "reference": ref_out,
                    "derived": got_out,
                    "collapse_eq": collapse,
                }
                if "note" in entry:
                    note["note"] = entry["note"]
                notes.append(note)
    return notes


def semantics_report(
    framework: FrameworkDoc | Framework | FlatRep,
    config: SolverConfig | None = None,
    *,
    engine: str = "search",
    reference: Iterable[dict] | None = None,
) -> SemanticsResult:
    """Solve, then derive all four root-level families.

    Reference entries default to the document's ``meta["reference"]``.
    """
    config = config or SolverConfig()
    if isinstance(framework, FlatRep):
        flat = framework
    else:
        fw = framework if isinstance(framework, Framework) else validate(framework)
        flat = flatten(fw, config.max_occurrences)
    if reference is None:
        reference = flat.framework.doc.meta.get("reference", ())
    labellings = solve_labellings(flat, config, engine)
    result = SemanticsResult.from_family(
        extensions_at_root(flat, labellings, config.collapse_eq),
        config,
        labellings=labellings,
    )
    result.notes = divergence_notes(flat, labellings, config, reference)
    return result
