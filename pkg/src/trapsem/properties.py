"""Cross-route property checks on a single program, as run by ``verify``."""

from __future__ import annotations

from itertools import combinations
from typing import Callable, Iterator

from .dynamics import Kind, build_graph, is_class, is_strict_class, strict_classes
from .interp import cset_contains, consistent, leq_s, minimal_elements
from .oracle import oracle_cover, oracle_trap_space, oracle_trap_spaces, strict_classes_pointer_jumping
from .program import Program, is_uni_rule, lfp_transform
from .semantics import (
    Semantics,
    enumerate_models,
    is_stable_partial,
    is_supported_partial,
)
from .trapspaces import (
    all_interpretations,
    cover,
    enumerate_trap_spaces,
    f3_orbit,
    is_trap_space,
    minimal_trap_spaces,
)

KINDS = (Kind.STABLE, Kind.SUPPORTED)


def _models(p, sem, method="direct"):
    return set(enumerate_models(p, sem, method).items)


def _regular_trap_eq_direct(p):
    return _models(p, "regular", "trap") == _models(p, "regular", "direct")


def _lstable_trap_eq_direct(p):
    return _models(p, "l-stable", "trap") == _models(p, "l-stable", "direct")


def _oracle_routes_agree(p):
    return all(
        _models(p, sem, "oracle") == _models(p, sem, "direct")
        for sem in Semantics
    )


def _local_eq_closure(p):
    for kind in KINDS:
        for i in all_interpretations(p.n):
            if is_trap_space(p, kind, i) != oracle_trap_space(p, kind, i):
                return False
    return True


def _local_sound(p):
    # the half of the local characterization that holds unconditionally
    for kind in KINDS:
        for i in all_interpretations(p.n):
            if is_trap_space(p, kind, i) and not oracle_trap_space(p, kind, i):
                return False
    return True


def _lfp_graph_invariance(p):
    lfp = lfp_transform(p)
    if build_graph(p, Kind.STABLE).succ != build_graph(lfp, Kind.STABLE).succ:
        return False
    return build_graph(lfp, Kind.STABLE).succ == build_graph(lfp, Kind.SUPPORTED).succ


def _model_inclusions(p):
    return (
        _models(p, "stable") <= _models(p, "supported")
        and _models(p, "stable-partial") <= _models(p, "supported-partial")
    )


def _strict_classes_ok(p):
    for kind in KINDS:
        g = build_graph(p, kind)
        classes = strict_classes(g)
        if not classes or classes != strict_classes_pointer_jumping(g):
            return False
        if any(a & b for a, b in combinations(classes, 2)):
            return False
        if not all(is_strict_class(g, c) for c in classes):
            return False
        # unions of strict classes are classes but never strict
        for a, b in combinations(classes, 2):
            if not is_class(g, a | b) or is_strict_class(g, a | b):
                return False
    return True


def _minimal_inconsistent(p):
    for kind in KINDS:
        items = minimal_trap_spaces(p, kind).items
        if not items or any(consistent(x, y) for x, y in combinations(items, 2)):
            return False
    return True


def _trap_spaces_contain_class(p):
    for kind in KINDS:
        classes = strict_classes(build_graph(p, kind))
        for i in enumerate_trap_spaces(p, kind):
            if not any(all(cset_contains(i, s) for s in c) for c in classes):
                return False
    return True


def _class_covers_are_partial_models(p):
    check = {Kind.STABLE: is_stable_partial, Kind.SUPPORTED: is_supported_partial}
    for kind in KINDS:
        for c in strict_classes(build_graph(p, kind)):
            if not check[kind](p, cover(p, kind, sorted(c))):
                return False
    return True


def _existence(p):
    return bool(_models(p, "regular", "trap")) and bool(_models(p, "l-stable", "trap"))


def _f3_convergence(p):
    for i in enumerate_trap_spaces(p, Kind.SUPPORTED):
        seq = f3_orbit(p, i)
        last = seq[-1]
        if len(seq) - 1 > p.n + 1 or not is_supported_partial(p, last) or not leq_s(last, i):
            return False
    return True


def _supported_minimal_eq_partial(p):
    spm = enumerate_models(p, "supported-partial").items
    return set(minimal_elements(spm, leq_s)) == set(minimal_trap_spaces(p, Kind.SUPPORTED).items)


def _cover_eq_oracle(p):
    states = range(1 << p.n)
    for kind in KINDS:
        closed = oracle_trap_spaces(p, kind)
        for size in (1, 2, 3):
            for subset in combinations(states, size):
                if cover(p, kind, subset) != oracle_cover(p, kind, subset, trap_spaces=closed):
                    return False
    return True


def _uni_rule_lstable(p):
    return not is_uni_rule(p) or bool(_models(p, "l-stable", "trap"))


# (name, max atoms, check)
PROPERTIES: list[tuple[str, int, Callable[[Program], bool]]] = [
    ("regular-trap-eq-direct", 8, _regular_trap_eq_direct),
    ("l-stable-trap-eq-direct", 8, _lstable_trap_eq_direct),
    ("oracle-routes-agree", 8, _oracle_routes_agree),
    ("local-sound", 7, _local_sound),
    ("local-eq-closure", 7, _local_eq_closure),
    ("lfp-graph-invariance", 10, _lfp_graph_invariance),
    ("model-inclusions", 8, _model_inclusions),
    ("strict-classes", 10, _strict_classes_ok),
    ("minimal-trap-spaces-inconsistent", 10, _minimal_inconsistent),
    ("trap-spaces-contain-strict-class", 8, _trap_spaces_contain_class),
    ("class-covers-are-partial-models", 10, _class_covers_are_partial_models),
    ("existence", 10, _existence),
    ("f3-convergence", 7, _f3_convergence),
    ("supported-minimal-eq-partial", 8, _supported_minimal_eq_partial),
    ("cover-eq-oracle", 5, _cover_eq_oracle),
    ("uni-rule-l-stable", 10, _uni_rule_lstable),
]


def check_program(p: Program) -> Iterator[tuple[str, str]]:
    """Yield ``(property, "pass" | "FAIL" | "skip")`` for each property."""
    for name, max_atoms, fn in PROPERTIES:
        if p.n > max_atoms:
            yield name, "skip"
        else:
            yield name, "pass" if fn(p) else "FAIL"
