"""Exception hierarchy shared by every module."""

from __future__ import annotations


class TrapsemError(Exception):
    """Base class for all errors raised by trapsem."""


class ProgramSyntaxError(TrapsemError):
    """Malformed program text, with a 1-based source position."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.reason = message


class NonGroundError(ProgramSyntaxError):
    """A variable (uppercase-initial token) appeared in the input."""


class InterpretationError(TrapsemError, ValueError):
    """An interpretation string could not be decoded against an atom table."""


class ResourceCapError(TrapsemError):
    """A configured size cap would be exceeded."""

    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what}: {size} exceeds cap {cap}")
        self.what = what
        self.size = size
        self.cap = cap


class InconsistentError(TrapsemError, ValueError):
    """Interpretations disagree on a defined atom."""

    def __init__(self, atom: int, name: str | None = None):
        label = name if name is not None else f"#{atom}"
        super().__init__(f"interpretations disagree on atom {label}")
        self.atom = atom


class PreconditionError(TrapsemError, ValueError):
    """An operation was called on an input violating its precondition."""


class UnsupportedError(TrapsemError, ValueError):
    """The requested semantics/method combination does not exist."""
