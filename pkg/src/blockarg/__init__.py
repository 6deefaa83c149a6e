"""Block bipolar argumentation: nested frameworks, constraints and semantics."""

from .acceptability import SemanticsResult, extensions_at_root, semantics_report
from .config import Constraint, SolverConfig, parse_constraints
from .constrained import (
    down_step,
    enumerate_complete_under_c,
    is_complete_under_c,
    more_informative,
    repair_complete,
    sem_veto,
    solve_labellings,
)
from .constraints import constraint_report, satisfies_g, satisfies_s, satisfies_star
from .flatrep import ROOT, FlatRep, flatten
from .io import load_fixture, load_path
from .labelling import Label, Labelling
from .model import AtomDef, BlockDef, FrameworkDoc, eq, sub_argumentation, validate
from .standard import (
    enumerate_standard_complete_labellings,
    is_standard_complete_labelling,
    labelling_from_set,
    standard_complete_sets_in,
)

__all__ = [
    "AtomDef",
    "BlockDef",
    "Constraint",
    "FlatRep",
    "FrameworkDoc",
    "Label",
    "Labelling",
    "ROOT",
    "SemanticsResult",
    "SolverConfig",
    "constraint_report",
    "down_step",
    "enumerate_complete_under_c",
    "enumerate_standard_complete_labellings",
    "eq",
    "extensions_at_root",
    "flatten",
    "is_complete_under_c",
    "is_standard_complete_labelling",
    "labelling_from_set",
    "load_fixture",
    "load_path",
    "more_informative",
    "parse_constraints",
    "repair_complete",
    "satisfies_g",
    "satisfies_s",
    "satisfies_star",
    "sem_veto",
    "semantics_report",
    "solve_labellings",
    "standard_complete_sets_in",
    "sub_argumentation",
    "validate",
]
