import json

import pytest

from trapsem import (
    PreconditionError,
    Program,
    ResourceCapError,
    cover,
    enumerate_trap_spaces,
    is_stable_trap_space,
    is_supported_trap_space,
    minimal_trap_spaces,
    parse_interp,
    parse_program,
    parse_state,
    percolate_to_supported_partial,
    u_minimal_stable_trap_spaces,
)
from trapsem.oracle import oracle_cover, oracle_trap_space
from trapsem.trapspaces import f3_orbit


def S(text):
    return parse_state(text, len(text))


def I(text):
    return parse_interp(text, len(text))


def test_supported_local_check(p1, p2):
    assert is_supported_trap_space(p1, I("**"))
    assert not is_supported_trap_space(p1, I("0*"))
    assert is_supported_trap_space(p2, I("01*"))


def test_stable_local_check(p1, p2):
    assert is_stable_trap_space(p1, I("0*"))
    assert not is_stable_trap_space(p1, I("11"))
    assert is_stable_trap_space(p2, I("01*"))


def test_kleene_check_misses_tautological_rhs():
    # rhs(a) = not b | b is true on every state, but Kleene logic gives U at b=U
    p = parse_program("a :- not b.\na :- b.\n")
    i = I("1*")
    assert oracle_trap_space(p, "supported", i)
    assert not is_supported_trap_space(p, i)
    assert cover(p, "supported", [S("10"), S("11")]) == I("**")
    assert oracle_cover(p, "supported", [S("10"), S("11")]) == I("1*")


def test_cover_examples(p1, p2):
    assert cover(p1, "supported", [S("01"), S("10")]) == I("**")
    assert cover(p2, "stable", [S("010"), S("011")]) == I("01*")
    assert cover(p1, "supported", [S("11")]) == I("11")
    assert cover(p1, "stable", [S("00")]) == I("00")


def test_cover_needs_states(p1):
    with pytest.raises(PreconditionError):
        cover(p1, "stable", [])


def test_minimal_trap_spaces_examples(p1, p2):
    assert minimal_trap_spaces(p1, "stable").strings() == ["00"]
    assert minimal_trap_spaces(p1, "supported").strings() == ["00", "11"]
    assert minimal_trap_spaces(p2, "stable").strings() == ["01*", "10*"]


def test_u_minimal_examples(p2, p3):
    assert u_minimal_stable_trap_spaces(p2).strings() == ["01*", "10*"]
    assert u_minimal_stable_trap_spaces(p3).strings() == ["*"]
    p = parse_program("a :- not b.\nb :- not a.\nc :- a.")
    assert all(i.is_two_valued for i in u_minimal_stable_trap_spaces(p))


def test_enumerate_examples(p1):
    assert set(enumerate_trap_spaces(p1, "supported").strings()) == {"00", "11", "**"}
    assert set(enumerate_trap_spaces(p1, "stable").strings()) == {"00", "0*", "*0", "**"}
    q = Program.from_named_rules([], extra_atoms=["a"])
    for kind in ("stable", "supported"):
        assert set(enumerate_trap_spaces(q, kind).strings()) == {"0", "*"}


def test_enumerate_cap():
    p = parse_program("".join(f"a{i} :- not a{i}.\n" for i in range(4)))
    with pytest.raises(ResourceCapError):
        enumerate_trap_spaces(p, "supported", max_atoms=3)


def test_json_schema(p2):
    data = json.loads(minimal_trap_spaces(p2, "stable").to_json())
    assert data == {"kind": "stable", "method": "percolation", "items": ["01*", "10*"], "atoms": ["a", "b", "c"]}


def test_percolate_examples(p1):
    assert percolate_to_supported_partial(p1, I("**")) == I("**")


def test_percolate_with_extra_atom():
    p = parse_program("a :- b.\nb :- a.\nc :- not a.")
    i = I("00*")
    seq = f3_orbit(p, i)
    assert len(seq) <= p.n + 1
    assert str(seq[-1]) == "001"


def test_percolate_from_strict_class_cover(p1):
    for c in (["00"], ["01", "10"], ["11"]):
        i = cover(p1, "supported", [S(x) for x in c])
        assert f3_orbit(p1, i) == [i]


def test_percolate_precondition(p1):
    with pytest.raises(PreconditionError):
        percolate_to_supported_partial(p1, I("0*"))
