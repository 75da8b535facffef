import pytest

from trapsem import InconsistentError, Interp3, Value3, parse_interp, parse_program, parse_state
from trapsem.errors import InterpretationError, ResourceCapError
from trapsem.interp import (
    consistent,
    cset_contains,
    cset_iter,
    cset_size,
    eval_rhs2,
    eval_rhs3,
    format_state,
    intersect,
    join_states,
    leq_i,
    leq_s,
    leq_t,
    leq_u,
    minimal_elements,
    value_leq_i,
    value_leq_s,
    value_leq_t,
    value_leq_u,
)
from trapsem.program import AtomTable

F, T, U = Value3.F, Value3.T, Value3.U


def I(text):
    return parse_interp(text, len(text))


def test_negation():
    assert ~T is F and ~F is T and ~U is U


def test_value_orders():
    assert value_leq_t(F, U) and value_leq_t(U, T) and not value_leq_t(T, U)
    assert value_leq_s(F, U) and value_leq_s(T, U) and not value_leq_s(F, T) and not value_leq_s(U, F)
    assert value_leq_i(U, F) and value_leq_i(U, T) and not value_leq_i(F, T)
    # 0 and 1 sit below each other under <=u
    assert value_leq_u(F, T) and value_leq_u(T, F) and value_leq_u(F, U) and not value_leq_u(U, T)


def test_codec_round_trip():
    i = I("01*")
    assert str(i) == "01*"
    assert i.values() == [F, T, U]
    assert I("f1u") == i


def test_explicit_form():
    atoms = AtomTable(("p", "q", "r"))
    assert str(parse_interp("p=1, q=0, r=*", atoms)) == "10*"
    with pytest.raises(InterpretationError):
        parse_interp("p=1,q=0", atoms)
    with pytest.raises(InterpretationError):
        parse_interp("p=1,q=0,z=1", atoms)


def test_bad_inputs():
    with pytest.raises(InterpretationError):
        parse_interp("01", 3)
    with pytest.raises(InterpretationError):
        parse_interp("0x1", 3)
    with pytest.raises(InterpretationError):
        parse_state("0*", 2)


def test_canonical_form_enforced():
    with pytest.raises(ValueError):
        Interp3(2, 0b01, 0b10)


def test_state_strings():
    assert format_state(0b001, 3) == "100"
    assert parse_state("100", 3) == 0b001


def test_cset_mixed_example():
    atoms = AtomTable(("p", "q", "r"))
    i = parse_interp("p=1,q=0,r=*", atoms)
    assert [format_state(s, 3) for s in cset_iter(i)] == ["100", "101"]


def test_cset_fully_defined_and_all_undefined():
    assert list(cset_iter(I("101"))) == [0b101]
    assert list(cset_iter(Interp3.all_undefined(3))) == list(range(8))
    assert cset_size(Interp3.all_undefined(3)) == 8


def test_cset_membership():
    i = I("1*0")
    assert cset_contains(i, parse_state("110", 3))
    assert not cset_contains(i, parse_state("111", 3))


def test_cset_cap():
    with pytest.raises(ResourceCapError):
        list(cset_iter(Interp3.all_undefined(5), cap=16))


def test_order_examples():
    assert leq_s(I("01*"), I("***"))
    assert leq_i(I("***"), I("01*"))
    assert leq_s(I("01*"), I("***")) == leq_i(I("***"), I("01*"))
    assert leq_u(I("01*"), I("10*")) and leq_u(I("10*"), I("01*"))
    assert leq_t(I("0*1"), I("*11")) and not leq_t(I("1"), I("*"))


def test_consistency_examples():
    assert consistent(I("01*"), I("0**"))
    assert not consistent(I("01*"), I("10*"))
    assert consistent(I("01*"), I("01*"))


def test_intersect_examples():
    assert intersect([I("0**"), I("*1*")]) == I("01*")
    assert intersect([I("***"), I("01*")]) == I("01*")
    assert intersect([I("0**"), I("**0"), I("0*0")]) == I("0*0")


def test_intersect_inconsistent_names_atom():
    atoms = AtomTable(("a", "b", "c"))
    with pytest.raises(InconsistentError, match="atom b"):
        intersect([I("01*"), I("*0*")], atoms)


def test_join_states():
    assert join_states([0b010, 0b110], 3) == I("01*")
    assert join_states([0b101], 3) == I("101")


def test_minimal_elements_handles_preorder():
    items = [I("01*"), I("10*"), I("***")]
    assert set(minimal_elements(items, leq_s)) == {I("01*"), I("10*")}
    # mutually <=u-equivalent elements both survive
    assert set(minimal_elements(items, leq_u)) == {I("01*"), I("10*")}


def test_eval_examples(p1, p2):
    assert eval_rhs3(p2, 2, I("***")) is U
    assert eval_rhs3(p1, 0, I("01")) is T
    assert eval_rhs2(p1, 0, parse_state("01", 2))
    p = parse_program("a :- b.")
    for text in ("00", "01", "10", "11", "**", "0*"):
        assert eval_rhs3(p, 1, I(text)) is F


def test_eval_empty_body_is_true():
    p = parse_program("a.")
    assert eval_rhs3(p, 0, I("*")) is T
