"""Trap space semantics for ground normal logic programs."""

from .dynamics import Kind, TransitionGraph, build_graph, orbit_closure, strict_classes
from .errors import (
    InconsistentError,
    NonGroundError,
    PreconditionError,
    ProgramSyntaxError,
    ResourceCapError,
    TrapsemError,
    UnsupportedError,
)
from .interp import Interp3, Value3, format_state, parse_interp, parse_state
from .program import (
    AtomTable,
    Completion,
    NegativeProgram,
    Program,
    Rule,
    completion,
    format_program,
    is_uni_rule,
    lfp_transform,
    parse_program,
)
from .semantics import Method, ModelSet, Semantics, enumerate_models
from .trapspaces import (
    TrapSpaceSet,
    cover,
    enumerate_trap_spaces,
    is_stable_trap_space,
    is_supported_trap_space,
    minimal_trap_spaces,
    percolate_to_supported_partial,
    u_minimal_stable_trap_spaces,
)

__version__ = "0.1.0"
