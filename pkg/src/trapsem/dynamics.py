"""Stable and supported transition graphs over all ``2**n`` states."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Collection, Iterable, Sequence

from .errors import PreconditionError, ResourceCapError
from .interp import format_state
from .operators import step_F, step_T
from .program import AtomTable, Program

DEFAULT_MAX_ATOMS_GRAPH = 16

StateSet = frozenset  # frozenset[int] of state bit patterns


class Kind(str, enum.Enum):
    STABLE = "stable"
    SUPPORTED = "supported"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class TransitionGraph:
    kind: Kind
    atoms: AtomTable
    succ: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.atoms)

    def label(self, state: int) -> str:
        return format_state(state, self.n)


def step(p: Program, kind: Kind | str, state: int) -> int:
    return step_F(p, state) if Kind(kind) is Kind.STABLE else step_T(p, state)


def build_graph(p: Program, kind: Kind | str, max_atoms: int = DEFAULT_MAX_ATOMS_GRAPH) -> TransitionGraph:
    kind = Kind(kind)
    if p.n > max_atoms:
        raise ResourceCapError("transition graph atom count", p.n, max_atoms)
    op = step_F if kind is Kind.STABLE else step_T
    return TransitionGraph(kind, p.atoms, tuple(op(p, s) for s in range(1 << p.n)))


def strict_classes(g: TransitionGraph) -> list[StateSet]:
    """Terminal cycles of the functional graph, sorted by smallest member.

    These are the subset-minimal trap sets, i.e. the strict classes.
    """
    succ = g.succ
    color = [0] * len(succ)
    cycles = []
    for start in range(len(succ)):
        if color[start]:
            continue
        run = start + 1
        s = start
        while not color[s]:
            color[s] = run
            s = succ[s]
        if color[s] == run:
            cycle = [s]
            t = succ[s]
            while t != s:
                cycle.append(t)
                t = succ[t]
            cycles.append(frozenset(cycle))
    return sorted(cycles, key=min)


def _check_nonempty(states: Collection[int]):
    if not states:
        raise PreconditionError("state set must be non-empty")


def image(g: TransitionGraph, states: Iterable[int]) -> StateSet:
    return frozenset(g.succ[s] for s in states)


def is_trap_set(g: TransitionGraph, states: Collection[int]) -> bool:
    _check_nonempty(states)
    states = frozenset(states)
    return image(g, states) <= states


def is_class(g: TransitionGraph, states: Collection[int]) -> bool:
    _check_nonempty(states)
    states = frozenset(states)
    return image(g, states) == states


def is_strict_class(g: TransitionGraph, states: Collection[int]) -> bool:
    """Every member's orbit closure is the whole set."""
    _check_nonempty(states)
    states = frozenset(states)
    return all(orbit_closure(g, s) == states for s in states)


def orbit_closure(g: TransitionGraph, s0: int) -> StateSet:
    seen = set()
    s = s0
    while s not in seen:
        seen.add(s)
        s = g.succ[s]
    return frozenset(seen)


def _dot_id(state: int) -> str:
    return f"s{state}"


def to_dot(g: TransitionGraph, highlight: Sequence[Collection[int]] = ()) -> str:
    lines = [f'digraph "{g.kind}" {{', "  node [shape=box];"]
    marked = set()
    for k, group in enumerate(highlight):
        lines.append(f"  subgraph cluster_{k} {{")
        lines.append(f'    label="class {k}";')
        for s in sorted(group):
            marked.add(s)
            lines.append(f'    {_dot_id(s)} [label="{g.label(s)}", peripheries=2];')
        lines.append("  }")
    for s in range(len(g.succ)):
        if s not in marked:
            lines.append(f'  {_dot_id(s)} [label="{g.label(s)}"];')
    for s, t in enumerate(g.succ):
        lines.append(f"  {_dot_id(s)} -> {_dot_id(t)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_json(g: TransitionGraph) -> str:
    return json.dumps({"kind": str(g.kind), "atoms": list(g.atoms), "succ": list(g.succ)})


def graph_from_json(text: str) -> TransitionGraph:
    data = json.loads(text)
    return TransitionGraph(Kind(data["kind"]), AtomTable(tuple(data["atoms"])), tuple(data["succ"]))
