"""Brute-force reference implementations and a seeded program generator.

Nothing here goes through the least-fixpoint transformation or the
bitmask completion evaluator; the stable kind applies ``step_F`` to
states directly. These routes exist to cross-check the fast paths.
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass
from typing import Sequence

from .dynamics import Kind, TransitionGraph, step
from .errors import ResourceCapError
from .interp import DEFAULT_MAX_CSET, Interp3, Value3, cset_contains, cset_iter, intersect
from .program import Program
from .trapspaces import all_interpretations

ORACLE_COVER_MAX_ATOMS = 6


def oracle_trap_space(p: Program, kind: Kind | str, i3: Interp3, cap: int = DEFAULT_MAX_CSET) -> bool:
    """Is the represented state set closed under the kind's operator?"""
    return all(cset_contains(i3, step(p, kind, s)) for s in cset_iter(i3, cap))


def oracle_trap_spaces(p: Program, kind: Kind | str, max_atoms: int = ORACLE_COVER_MAX_ATOMS) -> list[Interp3]:
    """Every interpretation whose state set is closed, by brute force."""
    if p.n > max_atoms:
        raise ResourceCapError("oracle trap-space atom count", p.n, max_atoms)
    succ = [step(p, kind, s) for s in range(1 << p.n)]
    return [
        i for i in all_interpretations(p.n)
        if all(cset_contains(i, succ[s]) for s in cset_iter(i))
    ]


def oracle_cover(
    p: Program,
    kind: Kind | str,
    states: Sequence[int],
    max_atoms: int = ORACLE_COVER_MAX_ATOMS,
    trap_spaces: Sequence[Interp3] | None = None,
) -> Interp3:
    """Intersection of every trap space whose state set holds ``states``.

    ``trap_spaces`` may carry a precomputed :func:`oracle_trap_spaces`
    result when many covers of the same program are needed.
    """
    if trap_spaces is None:
        trap_spaces = oracle_trap_spaces(p, kind, max_atoms)
    return intersect([i for i in trap_spaces if all(cset_contains(i, s) for s in states)])


# ---------------------------------------------------------------------------
# alternative characterizations of the model semantics


def _gamma(p: Program, x: frozenset[int]) -> frozenset[int]:
    """Least model of the Gelfond-Lifschitz reduct of ``p`` w.r.t. ``x``."""
    rules = [r for r in p.rules if not (r.neg & x)]
    model: set[int] = set()
    while True:
        new = {r.head for r in rules if r.pos <= model}
        if new <= model:
            return frozenset(model)
        model |= new


def _split(i3: Interp3) -> tuple[frozenset[int], frozenset[int]]:
    true = frozenset(a for a in range(i3.n) if i3[a] is Value3.T)
    not_false = frozenset(a for a in range(i3.n) if i3[a] is not Value3.F)
    return true, not_false


def oracle_stable_partial(p: Program, i3: Interp3) -> bool:
    """Alternating-fixpoint test: true atoms are exactly those derivable
    when every not-false atom blocks its negation, and not-false atoms are
    those derivable when only true atoms block."""
    true, not_false = _split(i3)
    return _gamma(p, not_false) == true and _gamma(p, true) == not_false


def oracle_stable_model(p: Program, state: int) -> bool:
    return oracle_stable_partial(p, Interp3.from_state(state, p.n))


def kleene_rhs(p: Program, a: int, i3: Interp3) -> Value3:
    """Value of the completion right-hand side of ``a``, literal by literal."""
    best = Value3.F
    for r in p.rules:
        if r.head != a:
            continue
        body = Value3.T
        for b in r.pos:
            body = min(body, i3[b], key=lambda v: v.t_rank)
        for b in r.neg:
            body = min(body, ~i3[b], key=lambda v: v.t_rank)
        best = max(best, body, key=lambda v: v.t_rank)
    return best


def oracle_supported_partial(p: Program, i3: Interp3) -> bool:
    return all(kleene_rhs(p, a, i3) is i3[a] for a in range(p.n))


def oracle_supported_model(p: Program, state: int) -> bool:
    return oracle_supported_partial(p, Interp3.from_state(state, p.n))


# ---------------------------------------------------------------------------
# second cycle finder


def strict_classes_pointer_jumping(g: TransitionGraph) -> list[frozenset[int]]:
    """Terminal cycles found by repeated squaring of the successor map.

    After ``n`` squarings every state has been moved ``2**n`` steps, which
    lands it on a cycle; the image is therefore the set of cyclic states.
    """
    jump = list(g.succ)
    for _ in range(g.n):
        jump = [jump[j] for j in jump]
    cyclic = set(jump)
    cycles = []
    while cyclic:
        s = min(cyclic)
        cycle = {s}
        t = g.succ[s]
        while t != s:
            cycle.add(t)
            t = g.succ[t]
        cyclic -= cycle
        cycles.append(frozenset(cycle))
    return sorted(cycles, key=min)


# ---------------------------------------------------------------------------
# random programs


@dataclass(frozen=True)
class GenConfig:
    seed: int
    n_atoms: int
    n_rules: int
    max_body: int = 3
    neg_prob: float = 0.5

    def __post_init__(self):
        if self.n_atoms < 1 and self.n_rules > 0:
            raise ValueError("rules need at least one atom")
        if not 0.0 <= self.neg_prob <= 1.0:
            raise ValueError("neg_prob must lie in [0, 1]")

    def to_dict(self) -> dict:
        return asdict(self)


def gen_program(cfg: GenConfig) -> Program:
    """Deterministic random ground program for ``cfg``.

    Heads are uniform over the atoms and bodies are sampled without
    replacement. When ``neg_prob > 0`` at least one literal is negative
    (if any body literal exists at all). Atoms that end up unused do not
    enter the atom table.
    """
    rng = random.Random(cfg.seed)
    width = len(str(max(cfg.n_atoms - 1, 0)))
    names = [f"a{i:0{width}d}" for i in range(cfg.n_atoms)]
    rules = []
    for _ in range(cfg.n_rules):
        head = rng.randrange(cfg.n_atoms)
        k = rng.randint(0, min(cfg.max_body, cfg.n_atoms))
        body = rng.sample(range(cfg.n_atoms), k)
        signs = [rng.random() < cfg.neg_prob for _ in body]
        rules.append([head, body, signs])
    if cfg.neg_prob > 0 and not any(any(signs) for _, _, signs in rules):
        candidates = [r for r in rules if r[1]]
        if candidates:
            r = rng.choice(candidates)
            r[2][rng.randrange(len(r[2]))] = True
    return Program.from_named_rules(
        (
            names[h],
            [names[b] for b, neg in zip(body, signs) if not neg],
            [names[b] for b, neg in zip(body, signs) if neg],
        )
        for h, body, signs in rules
    )
