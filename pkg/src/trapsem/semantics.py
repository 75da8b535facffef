"""Model checks and enumeration for the six model-theoretic semantics.

Every semantics has a ``direct`` route (exhaustive scan with the defining
check). ``trap`` computes regular and L-stable models (and the two-valued
models) from minimal trap spaces, and ``oracle`` re-derives the result
through an independent characterization from :mod:`trapsem.oracle`.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Callable, Iterable

from .dynamics import DEFAULT_MAX_ATOMS_GRAPH, Kind
from .errors import ResourceCapError, UnsupportedError
from .interp import Interp3, eval_all3, leq_s, leq_u, minimal_elements, state_atoms
from .operators import least3_of_reduct, step_F, step_T
from .program import DEFAULT_MAX_LFP_RULES, AtomTable, Program
from .trapspaces import (
    DEFAULT_MAX_ATOMS_ENUM3,
    all_interpretations,
    minimal_trap_spaces,
    u_minimal_stable_trap_spaces,
)

DEFAULT_MAX_ATOMS_ENUM2 = 20


class Semantics(str, enum.Enum):
    STABLE = "stable"
    SUPPORTED = "supported"
    STABLE_PARTIAL = "stable-partial"
    SUPPORTED_PARTIAL = "supported-partial"
    REGULAR = "regular"
    L_STABLE = "l-stable"

    def __str__(self) -> str:
        return self.value

    @property
    def two_valued(self) -> bool:
        return self in (Semantics.STABLE, Semantics.SUPPORTED)


class Method(str, enum.Enum):
    DIRECT = "direct"
    TRAP = "trap"
    ORACLE = "oracle"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class ModelSet:
    semantics: Semantics
    method: Method
    atoms: AtomTable
    items: tuple[Interp3, ...]

    def __iter__(self):
        return iter(self.items)

    def __len__(self):
        return len(self.items)

    def strings(self) -> list[str]:
        return [str(i) for i in self.items]

    def to_dict(self) -> dict:
        out = {
            "semantics": str(self.semantics),
            "method": str(self.method),
            "items": self.strings(),
            "count": len(self.items),
            "atoms": list(self.atoms),
        }
        if self.semantics.two_valued:
            out["true_atoms"] = [state_atoms(i.truth, self.atoms) for i in self.items]
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def is_stable_model(p: Program, state: int) -> bool:
    return step_F(p, state) == state


def is_supported_model(p: Program, state: int) -> bool:
    return step_T(p, state) == state


def is_supported_partial(p: Program, i3: Interp3) -> bool:
    return eval_all3(p.completion, i3) == i3


def is_stable_partial(p: Program, i3: Interp3) -> bool:
    return least3_of_reduct(p, i3) == i3


def _scan2(p: Program, check: Callable[[Program, int], bool], cap: int) -> list[Interp3]:
    if p.n > cap:
        raise ResourceCapError("two-valued enumeration atom count", p.n, cap)
    return [Interp3.from_state(s, p.n) for s in range(1 << p.n) if check(p, s)]


def _scan3(p: Program, check: Callable[[Program, Interp3], bool], cap: int) -> list[Interp3]:
    if p.n > cap:
        raise ResourceCapError("three-valued enumeration atom count", p.n, cap)
    return [i for i in all_interpretations(p.n) if check(p, i)]


def _u_minimal(items: Iterable[Interp3]) -> list[Interp3]:
    return minimal_elements(items, leq_u)


def enumerate_models(
    p: Program,
    semantics: Semantics | str,
    method: Method | str = Method.DIRECT,
    *,
    max_atoms_enum2: int = DEFAULT_MAX_ATOMS_ENUM2,
    max_atoms_enum3: int = DEFAULT_MAX_ATOMS_ENUM3,
    max_atoms_graph: int = DEFAULT_MAX_ATOMS_GRAPH,
    max_lfp_rules: int = DEFAULT_MAX_LFP_RULES,
) -> ModelSet:
    from . import oracle

    sem = Semantics(semantics)
    meth = Method(method)

    def spm_direct():
        return _scan3(p, is_stable_partial, max_atoms_enum3)

    def spm_oracle():
        return _scan3(p, oracle.oracle_stable_partial, max_atoms_enum3)

    def trap_min(kind):
        return list(minimal_trap_spaces(p, kind, max_atoms_graph, max_lfp_rules).items)

    S, M = Semantics, Method
    routes: dict[tuple[Semantics, Method], Callable[[], list[Interp3]]] = {
        (S.STABLE, M.DIRECT): lambda: _scan2(p, is_stable_model, max_atoms_enum2),
        (S.STABLE, M.TRAP): lambda: [i for i in trap_min(Kind.STABLE) if i.is_two_valued],
        (S.STABLE, M.ORACLE): lambda: _scan2(p, oracle.oracle_stable_model, max_atoms_enum2),
        (S.SUPPORTED, M.DIRECT): lambda: _scan2(p, is_supported_model, max_atoms_enum2),
        (S.SUPPORTED, M.TRAP): lambda: [i for i in trap_min(Kind.SUPPORTED) if i.is_two_valued],
        (S.SUPPORTED, M.ORACLE): lambda: _scan2(p, oracle.oracle_supported_model, max_atoms_enum2),
        (S.STABLE_PARTIAL, M.DIRECT): spm_direct,
        (S.STABLE_PARTIAL, M.ORACLE): spm_oracle,
        (S.SUPPORTED_PARTIAL, M.DIRECT): lambda: _scan3(p, is_supported_partial, max_atoms_enum3),
        (S.SUPPORTED_PARTIAL, M.ORACLE): lambda: _scan3(p, oracle.oracle_supported_partial, max_atoms_enum3),
        (S.REGULAR, M.DIRECT): lambda: minimal_elements(spm_direct(), leq_s),
        (S.REGULAR, M.TRAP): lambda: trap_min(Kind.STABLE),
        (S.REGULAR, M.ORACLE): lambda: minimal_elements(spm_oracle(), leq_s),
        (S.L_STABLE, M.DIRECT): lambda: _u_minimal(spm_direct()),
        (S.L_STABLE, M.TRAP): lambda: list(
            u_minimal_stable_trap_spaces(p, max_atoms_graph, max_lfp_rules).items
        ),
        (S.L_STABLE, M.ORACLE): lambda: _u_minimal(spm_oracle()),
    }
    try:
        route = routes[sem, meth]
    except KeyError:
        raise UnsupportedError(f"no {meth} route for {sem} models") from None
    items = tuple(sorted(dict.fromkeys(route()), key=str))
    return ModelSet(sem, meth, p.atoms, items)


def format_models_text(ms: ModelSet) -> str:
    lines = []
    for i in ms.items:
        if ms.semantics.two_valued:
            lines.append(f"{i} {{{', '.join(state_atoms(i.truth, ms.atoms))}}}")
        else:
            lines.append(str(i))
    return "".join(line + "\n" for line in lines)

