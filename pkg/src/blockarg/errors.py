"""Exception hierarchy for blockarg."""

from __future__ import annotations


class BlockArgError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(BlockArgError):
    pass


class InvalidName(ValidationError):
    pass


class CyclicDefinition(ValidationError):
    def __init__(self, cycle: list[str]):
        self.cycle = cycle
        super().__init__("cyclic definition: " + " -> ".join(cycle))


class DanglingName(ValidationError):
    pass


class DuplicateChild(ValidationError):
    pass


class EmptyBlock(ValidationError):
    pass


class BadEdge(ValidationError):
    """An attack or support endpoint is not a child of its block."""


class ParseError(BlockArgError):
    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(f"{message} (line {line}, column {column})")


class UnitaryPosition(BlockArgError):
    """The position is occupied by an atom, which has no inner argumentation."""


class NotComplete(BlockArgError):
    pass


class DomainMismatch(BlockArgError):
    pass


class SizeCapExceeded(BlockArgError):
    pass


class OracleCapExceeded(SizeCapExceeded):
    pass


class SolverTimeout(BlockArgError):
    pass


class NonTerminating(ValidationError):
    """The ABA rule dependency graph has a cycle, so the tree set is infinite."""
