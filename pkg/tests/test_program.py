import pytest

from trapsem import (
    NonGroundError,
    Program,
    ProgramSyntaxError,
    ResourceCapError,
    Rule,
    completion,
    format_program,
    is_uni_rule,
    lfp_transform,
    parse_program,
)
from trapsem.program import AtomTable, NegativeProgram, format_completion


def rules_of(p):
    """Rules as (head, sorted pos, sorted neg) name triples, as a set."""
    names = p.atoms
    return {
        (names[r.head], tuple(names[a] for a in sorted(r.pos)), tuple(names[a] for a in sorted(r.neg)))
        for r in p.rules
    }


def test_parse_two_cycle(p1):
    assert list(p1.atoms) == ["a", "b"]
    assert rules_of(p1) == {("a", ("b",), ()), ("b", ("a",), ())}


def test_parse_empty():
    p = parse_program("")
    assert p.n == 0 and p.rules == ()


def test_parse_negative_example(p2):
    assert p2.n == 3
    assert len(p2.rules) == 3
    assert p2.is_negative


def test_tilde_and_not_are_the_same():
    assert parse_program("a :- ~b.") == parse_program("a :- not b.")


def test_comments_and_facts():
    p = parse_program("% header\na.  % a fact\nb :- a.\n")
    assert rules_of(p) == {("a", (), ()), ("b", ("a",), ())}
    assert p.rules[0].is_fact


def test_duplicate_rules_collapse():
    p = parse_program("a :- b.\na :- b.\na :- b, b.\n")
    assert len(p.rules) == 1


def test_pos_neg_overlap_is_legal():
    p = parse_program("a :- b, not b.")
    assert rules_of(p) == {("a", ("b",), ("b",))}


def test_nested_ground_arguments_are_opaque_atoms():
    p = parse_program("p(s(0)) :- q( a , f(b) ).")
    assert list(p.atoms) == ["p(s(0))", "q(a,f(b))"]


def test_atom_ids_follow_byte_order():
    p = parse_program("zeta :- alpha.\nb2 :- alpha.\nb10.")
    assert list(p.atoms) == ["alpha", "b10", "b2", "zeta"]


def test_variable_rejected():
    with pytest.raises(NonGroundError, match="ground programs only") as err:
        parse_program("p(X) :- q(X).")
    assert err.value.line == 1 and err.value.column == 3


def test_syntax_error_position():
    with pytest.raises(ProgramSyntaxError) as err:
        parse_program("a :- b.\nc :- d\n")
    assert err.value.line == 3


def test_missing_dot():
    with pytest.raises(ProgramSyntaxError):
        parse_program("a")


def test_not_as_head_rejected():
    with pytest.raises(ProgramSyntaxError):
        parse_program("not a.")


def test_format_program_canonical():
    p = parse_program("b :- ~a.\na :- c, not b.\nc.")
    assert format_program(p) == "a :- c, not b.\nb :- not a.\nc.\n"


def test_round_trip(p2):
    assert parse_program(format_program(p2)) == p2


def test_program_equality_ignores_order():
    assert parse_program("a.\nb :- a.") == parse_program("b :- a.\na.")


def test_atom_table_must_be_sorted():
    with pytest.raises(ValueError):
        AtomTable(("b", "a"))


def test_completion_examples(p1, p2):
    c = completion(p1)
    assert c.rhs("a") == ((frozenset({1}), frozenset()),)
    assert c.rhs("b") == ((frozenset({0}), frozenset()),)
    assert completion(parse_program("a.")).rhs("a") == ((frozenset(), frozenset()),)
    assert completion(p2).rhs("c") == ((frozenset(), frozenset({2})),)


def test_completion_of_headless_atom_is_empty():
    c = completion(parse_program("a :- b."))
    assert c.rhs("b") == ()


def test_completion_keeps_rule_order():
    p = parse_program("a :- c.\na :- not b.\n")
    assert completion(p).rhs("a") == ((frozenset({2}), frozenset()), (frozenset(), frozenset({1})))


def test_format_completion():
    p = parse_program("a :- b, not c.\na :- not b.\nb.")
    assert format_completion(completion(p)) == "a <-> (b & not c) | not b\nb <-> true\nc <-> false\n"


def test_lfp_chain():
    q = lfp_transform(parse_program("a :- not b.\nb :- a."))
    assert isinstance(q, NegativeProgram)
    assert rules_of(q) == {("a", (), ("b",)), ("b", (), ("b",))}


def test_lfp_positive_cycle_is_empty(p1):
    q = lfp_transform(p1)
    assert q.rules == () and list(q.atoms) == ["a", "b"]


def test_lfp_of_negative_program_is_itself(p2):
    assert lfp_transform(p2) == p2


def test_lfp_combines_alternatives():
    p = parse_program("a :- b, c.\nb :- not x.\nb :- not y.\nc :- not z.")
    assert rules_of(lfp_transform(p)) == {
        ("a", (), ("x", "z")),
        ("a", (), ("y", "z")),
        ("b", (), ("x",)),
        ("b", (), ("y",)),
        ("c", (), ("z",)),
    }


def test_lfp_facts_propagate():
    q = lfp_transform(parse_program("a.\nb :- a.\nc :- b, not a."))
    assert rules_of(q) == {("a", (), ()), ("b", (), ()), ("c", (), ("a",))}


def test_lfp_cap():
    # 2 alternatives for each of 8 body atoms -> 256 bodies for h
    text = "h :- " + ", ".join(f"x{i}" for i in range(8)) + ".\n"
    text += "".join(f"x{i} :- not y{i}.\nx{i} :- not z{i}.\n" for i in range(8))
    p = parse_program(text)
    with pytest.raises(ResourceCapError):
        lfp_transform(p, max_rules=100)
    assert len(lfp_transform(p).rules) == 256 + 16


def test_negative_program_rejects_positive_body():
    with pytest.raises(ValueError):
        NegativeProgram(AtomTable(("a",)), (Rule(0, frozenset({0})),))


def test_uni_rule(p2):
    assert is_uni_rule(p2)
    assert is_uni_rule(Program(AtomTable()))
    assert not is_uni_rule(parse_program("a :- not b.\na :- not c."))
