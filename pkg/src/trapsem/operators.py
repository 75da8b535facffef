"""Reducts, least models of positive programs, and the state operators.

``step_F`` maps a state to the least model of its Gelfond-Lifschitz
reduct, ``step_T`` applies the completion right-hand sides, and
``step_f3`` does the same on three-valued interpretations with Kleene
logic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .interp import Interp3, eval_all3
from .program import AtomTable, Completion, Program, Rule


@dataclass(frozen=True)
class PositiveProgram3:
    """A positive program where some rule bodies also contain the constant
    ``u`` (always undefined); ``u_flag`` marks those rules."""

    atoms: AtomTable
    rules: tuple[tuple[int, frozenset[int], bool], ...]

    @property
    def n(self) -> int:
        return len(self.atoms)


def reduct2(p: Program, state: int) -> Program:
    kept = [Rule(r.head, r.pos) for r, (_, _, nm) in zip(p.rules, p.masks) if not nm & state]
    return Program(p.atoms, tuple(kept))


def reduct3(p: Program, i3: Interp3) -> PositiveProgram3:
    rules = []
    for r, (_, _, nm) in zip(p.rules, p.masks):
        if nm & i3.truth:
            continue
        rules.append((r.head, r.pos, bool(nm & i3.undefined)))
    return PositiveProgram3(p.atoms, tuple(dict.fromkeys(rules)))


def _least_model(rules: Iterable[tuple[int, int]]) -> int:
    pending = list(rules)
    model = 0
    changed = True
    while changed:
        changed = False
        rest = []
        for h, pm in pending:
            if pm & ~model == 0:
                if not model >> h & 1:
                    model |= 1 << h
                    changed = True
            else:
                rest.append((h, pm))
        pending = rest
    return model


def least2(pp: Program) -> int:
    """Least two-valued model of a positive program."""
    if not pp.is_positive:
        raise ValueError("least2 needs a positive program")
    return _least_model((h, pm) for h, pm, _ in pp.masks)


def _least3_masks(rules: list[tuple[int, int, bool]], n: int) -> Interp3:
    # Jacobi iteration of the three-valued immediate consequence operator
    # from all-false; ``tr`` holds true atoms, ``nf`` holds not-false atoms.
    tr = nf = 0
    while True:
        new_tr = new_nf = 0
        for h, pm, uflag in rules:
            if pm & ~nf:
                continue
            new_nf |= 1 << h
            if not uflag and pm & ~tr == 0:
                new_tr |= 1 << h
        if new_tr == tr and new_nf == nf:
            break
        tr, nf = new_tr, new_nf
    full = (1 << n) - 1
    return Interp3(n, full & ~(nf & ~tr), tr)


def least3(pp: PositiveProgram3) -> Interp3:
    """Least three-valued model (w.r.t. the truth order) of ``pp``."""
    rules = [(h, sum(1 << a for a in pos), u) for h, pos, u in pp.rules]
    return _least3_masks(rules, pp.n)


def step_F(p: Program, state: int) -> int:
    return _least_model((h, pm) for h, pm, nm in p.masks if not nm & state)


def step_T(p: Program, state: int) -> int:
    out = 0
    for h, pm, nm in p.masks:
        if pm & ~state == 0 and not nm & state:
            out |= 1 << h
    return out


def step_f3(c: Completion | Program, i3: Interp3) -> Interp3:
    return eval_all3(c, i3)


def least3_of_reduct(p: Program, i3: Interp3) -> Interp3:
    """``least3(reduct3(p, i3))`` without materialising the reduct."""
    tr, un = i3.truth, i3.undefined
    rules = [(h, pm, bool(nm & un)) for h, pm, nm in p.masks if not nm & tr]
    return _least3_masks(rules, i3.n)
