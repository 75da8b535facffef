"""Stable and supported trap spaces.

A three-valued interpretation is a trap space when the set of states it
represents is closed under the transition operator. For the supported
kind this is checked locally, atom by atom, against the completion; the
stable kind reduces to the supported check on the least-fixpoint
transformation of the program, whose supported graph is the stable graph
of the original program.

The local check is sound but not complete. Kleene logic gives U for a
right-hand side like ``not b | b`` when ``b`` is U, although the formula
is true on every represented state, so a closed cube such as ``a=1, b=U``
for ``{a :- not b. a :- b.}`` is rejected. The closure oracle in
:mod:`trapsem.oracle` gives the exact answer.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .dynamics import DEFAULT_MAX_ATOMS_GRAPH, Kind, build_graph, strict_classes
from .errors import PreconditionError, ResourceCapError
from .interp import Interp3, eval_all3, join_states, leq_s, leq_u, minimal_elements
from .operators import step_f3
from .program import DEFAULT_MAX_LFP_RULES, AtomTable, Completion, Program, lfp_transform

DEFAULT_MAX_ATOMS_ENUM3 = 12


@dataclass(frozen=True)
class TrapSpaceSet:
    kind: Kind
    method: str
    atoms: AtomTable
    items: tuple[Interp3, ...]

    def __iter__(self):
        return iter(self.items)

    def __len__(self):
        return len(self.items)

    def strings(self) -> list[str]:
        return [str(i) for i in self.items]

    def to_json(self) -> str:
        return json.dumps({
            "kind": str(self.kind),
            "method": self.method,
            "items": self.strings(),
            "atoms": list(self.atoms),
        })


def _sorted_unique(items) -> tuple[Interp3, ...]:
    return tuple(sorted(dict.fromkeys(items), key=str))


def kind_completion(p: Program, kind: Kind | str, max_lfp_rules: int = DEFAULT_MAX_LFP_RULES) -> Completion:
    """Completion whose local check decides trap spaces of the given kind."""
    if Kind(kind) is Kind.SUPPORTED:
        return p.completion
    return _lfp_completion(p, max_lfp_rules)


@lru_cache(maxsize=256)
def _lfp_completion(p: Program, max_lfp_rules: int) -> Completion:
    return lfp_transform(p, max_lfp_rules).completion


def _local_check(c: Completion, i3: Interp3) -> bool:
    # every defined atom must get back its own value from its rhs
    rhs = eval_all3(c, i3)
    return i3.defined & ~(rhs.defined & ~(rhs.truth ^ i3.truth)) == 0


def is_supported_trap_space(p: Program, i3: Interp3) -> bool:
    return _local_check(p.completion, i3)


def is_stable_trap_space(p: Program, i3: Interp3, max_lfp_rules: int = DEFAULT_MAX_LFP_RULES) -> bool:
    return _local_check(kind_completion(p, Kind.STABLE, max_lfp_rules), i3)


def is_trap_space(p: Program, kind: Kind | str, i3: Interp3, max_lfp_rules: int = DEFAULT_MAX_LFP_RULES) -> bool:
    return _local_check(kind_completion(p, kind, max_lfp_rules), i3)


def _percolate(c: Completion, start: Interp3) -> Interp3:
    cur = start
    while True:
        rhs = eval_all3(c, cur)
        bad = cur.defined & ~(rhs.defined & ~(rhs.truth ^ cur.truth))
        if not bad:
            return cur
        keep = cur.defined & ~bad
        cur = Interp3(cur.n, keep, cur.truth & keep)


def cover(
    p: Program,
    kind: Kind | str,
    states: Sequence[int],
    max_lfp_rules: int = DEFAULT_MAX_LFP_RULES,
) -> Interp3:
    """Smallest locally checked trap space (w.r.t. ``<=s``) holding ``states``.

    Starts from the join of the states and keeps releasing to ``*`` every
    defined atom whose right-hand side disagrees with it. Kleene evaluation
    is monotone in information, so each release is forced for every
    covering interpretation that passes the local check, and the fixpoint
    is the least of those. Where the local check misses a closed cube (see
    the module docstring) the exact cover can be strictly smaller.
    """
    if not states:
        raise PreconditionError("cover needs at least one state")
    return _percolate(kind_completion(p, kind, max_lfp_rules), join_states(states, p.n))


def _cover_with(c: Completion, states, n: int) -> Interp3:
    return _percolate(c, join_states(states, n))


def minimal_trap_spaces(
    p: Program,
    kind: Kind | str,
    max_atoms: int = DEFAULT_MAX_ATOMS_GRAPH,
    max_lfp_rules: int = DEFAULT_MAX_LFP_RULES,
) -> TrapSpaceSet:
    """The ``<=s``-minimal trap spaces, via covers of the strict classes.

    Every trap space contains a strict class, so each minimal one is the
    cover of some strict class; the minimal covers are exactly the answer.
    """
    kind = Kind(kind)
    c = kind_completion(p, kind, max_lfp_rules)
    g = build_graph(p, kind, max_atoms)
    covers = [_cover_with(c, cls, p.n) for cls in strict_classes(g)]
    return TrapSpaceSet(kind, "percolation", p.atoms, _sorted_unique(minimal_elements(covers, leq_s)))


def u_minimal_stable_trap_spaces(
    p: Program,
    max_atoms: int = DEFAULT_MAX_ATOMS_GRAPH,
    max_lfp_rules: int = DEFAULT_MAX_LFP_RULES,
) -> TrapSpaceSet:
    """Stable trap spaces with a subset-minimal undefined set.

    Computed among the ``<=s``-minimal stable trap spaces (the regular
    models), whose ``<=u``-minimal members coincide with those of the
    whole trap-space set.
    """
    regular = minimal_trap_spaces(p, Kind.STABLE, max_atoms, max_lfp_rules)
    items = _sorted_unique(minimal_elements(regular.items, leq_u))
    return TrapSpaceSet(Kind.STABLE, "percolation", p.atoms, items)


def all_interpretations(n: int) -> Iterator[Interp3]:
    """Every three-valued interpretation over ``n`` atoms."""
    for d in range(1 << n):
        # truth ranges over the submasks of d
        t = d
        while True:
            yield Interp3(n, d, t)
            if t == 0:
                break
            t = (t - 1) & d


def enumerate_trap_spaces(
    p: Program,
    kind: Kind | str,
    max_atoms: int = DEFAULT_MAX_ATOMS_ENUM3,
    max_lfp_rules: int = DEFAULT_MAX_LFP_RULES,
) -> TrapSpaceSet:
    kind = Kind(kind)
    if p.n > max_atoms:
        raise ResourceCapError("three-valued enumeration atom count", p.n, max_atoms)
    c = kind_completion(p, kind, max_lfp_rules)
    items = [i for i in all_interpretations(p.n) if _local_check(c, i)]
    return TrapSpaceSet(kind, "local", p.atoms, _sorted_unique(items))


def f3_orbit(p: Program, i3: Interp3) -> list[Interp3]:
    """``[I, f(I), f(f(I)), ...]`` up to and including the first fixpoint.

    ``I`` must be a supported trap space; the sequence then grows in
    information at every step, so it has at most ``n + 1`` elements.
    """
    if not is_supported_trap_space(p, i3):
        raise PreconditionError(f"{i3} is not a supported trap space")
    c = p.completion
    seq = [i3]
    while True:
        nxt = step_f3(c, seq[-1])
        if nxt == seq[-1]:
            return seq
        if len(seq) > p.n + 1:
            raise AssertionError("f_P iteration failed to converge within n+1 steps")
        seq.append(nxt)


def percolate_to_supported_partial(p: Program, i3: Interp3) -> Interp3:
    """The unique supported partial model below a supported trap space."""
    return f3_orbit(p, i3)[-1]
