import json

import pytest

from trapsem import PreconditionError, ResourceCapError, build_graph, parse_program, parse_state, strict_classes
from trapsem.dynamics import (
    graph_from_json,
    graph_to_json,
    image,
    is_class,
    is_strict_class,
    is_trap_set,
    orbit_closure,
    to_dot,
)
from trapsem.oracle import strict_classes_pointer_jumping


def S(text):
    return parse_state(text, len(text))


def labels(g, sets):
    return [sorted(g.label(s) for s in c) for c in sets]


def test_p1_supported_graph(p1):
    g = build_graph(p1, "supported")
    assert g.succ[S("01")] == S("10") and g.succ[S("10")] == S("01")
    assert g.succ[S("00")] == S("00") and g.succ[S("11")] == S("11")


def test_p1_stable_graph_is_constant(p1):
    assert set(build_graph(p1, "stable").succ) == {S("00")}


def test_p2_stable_graph_two_cycles(p2):
    g = build_graph(p2, "stable")
    assert labels(g, strict_classes(g)) == [["000", "111"], ["100", "101"], ["010", "011"], ["001", "110"]]


def test_strict_classes_p1(p1):
    g = build_graph(p1, "stable")
    assert labels(g, strict_classes(g)) == [["00"]]
    g = build_graph(p1, "supported")
    assert labels(g, strict_classes(g)) == [["00"], ["01", "10"], ["11"]]


def test_two_cycle_finders_agree(p1, p2):
    for p in (p1, p2):
        for kind in ("stable", "supported"):
            g = build_graph(p, kind)
            assert strict_classes(g) == strict_classes_pointer_jumping(g)


def test_trap_set_and_class_predicates(p1):
    st = build_graph(p1, "stable")
    assert is_trap_set(st, {S("00"), S("10")})
    assert not is_class(st, {S("00"), S("10")})
    sp = build_graph(p1, "supported")
    assert is_class(sp, {S("01"), S("10")}) and is_strict_class(sp, {S("01"), S("10")})
    assert is_class(sp, {S("00"), S("11")}) and not is_strict_class(sp, {S("00"), S("11")})


def test_empty_state_set_rejected(p1):
    g = build_graph(p1, "stable")
    for fn in (is_trap_set, is_class, is_strict_class):
        with pytest.raises(PreconditionError):
            fn(g, set())


def test_orbit_closure_examples(p1):
    sp = build_graph(p1, "supported")
    assert orbit_closure(sp, S("01")) == {S("01"), S("10")}
    assert orbit_closure(sp, S("11")) == {S("11")}
    assert orbit_closure(build_graph(p1, "stable"), S("11")) == {S("11"), S("00")}


def test_orbit_closure_is_trap_set(p2):
    for kind in ("stable", "supported"):
        g = build_graph(p2, kind)
        for s in range(8):
            c = orbit_closure(g, s)
            assert image(g, c) <= c


def test_graph_cap():
    p = parse_program("".join(f"a{i} :- not a{i}.\n" for i in range(5)))
    with pytest.raises(ResourceCapError):
        build_graph(p, "stable", max_atoms=4)


def test_dot_p1_stable(p1):
    dot = to_dot(build_graph(p1, "stable"))
    assert dot.startswith('digraph "stable" {')
    assert dot.count("[label=") == 4
    assert dot.count("-> s0;") == 4
    assert "s0 -> s0;" in dot


def test_dot_empty_program():
    dot = to_dot(build_graph(parse_program(""), "supported"))
    assert 's0 [label=""];' in dot and "s0 -> s0;" in dot


def test_dot_highlight(p1):
    g = build_graph(p1, "supported")
    dot = to_dot(g, strict_classes(g))
    assert dot.count("subgraph cluster_") == 3
    assert dot.count("peripheries=2") == 4


def test_json_round_trip(p2):
    g = build_graph(p2, "stable")
    data = json.loads(graph_to_json(g))
    assert set(data) == {"kind", "atoms", "succ"}
    assert graph_from_json(graph_to_json(g)) == g
