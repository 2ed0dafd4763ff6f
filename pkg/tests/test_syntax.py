import pytest
from hypothesis import given

from lprevise.syntax import (
    Literal,
    ParseError,
    Program,
    Rule,
    atoms_of,
    constraint,
    fact,
    lit,
    parse_literals,
    parse_program,
    render_program,
)

from conftest import literals, programs


def test_reference_program_parses():
    p = parse_program("a. b :- a, not c. c :- not b.")
    assert len(p) == 3
    assert p.rules[0] == fact("a")
    assert p.rules[1].pbody == {lit("a")} and p.rules[1].nbody == {lit("c")}
    assert p.rules[2] == Rule(lit("c"), frozenset(), frozenset({lit("b")}))


def test_empty_text():
    assert parse_program("") == Program()
    assert parse_program("  % only a comment\n") == Program()


def test_classical_negation_head():
    (r,) = parse_program("-a :- b.")
    assert r.head == Literal("a", True)
    assert r.pbody == {lit("b")} and not r.nbody


def test_constraint_and_flags():
    (r,) = parse_program(":- a, not -b.")
    assert r.is_constraint and not r.is_positive and not r.is_fact
    assert r.nbody == {Literal("b", True)}
    assert fact("a").is_fact and fact("a").is_positive


@pytest.mark.parametrize(
    "text, line, col",
    [
        (":- .", 1, 1),
        ("a :- .", 1, 6),
        ("a", 1, 2),
        ("a.\nb :- c,\n  D.", 3, 3),
        ("a. :-", 1, 6),
        ("a :- b c.", 1, 8),
        ("a. # b.", 1, 4),
    ],
)
def test_parse_errors_carry_position(text, line, col):
    with pytest.raises(ParseError) as exc:
        parse_program(text)
    assert (exc.value.line, exc.value.column) == (line, col)


def test_comments_and_whitespace():
    p = parse_program("% facts\na.  % trailing\n\n  b :-\n a .")
    assert p == Program((fact("a"), Rule(lit("b"), frozenset({lit("a")}))))


def test_not_is_keyword_only_before_a_literal():
    (r,) = parse_program("a :- not.")
    assert r.pbody == {lit("not")}
    (r,) = parse_program("a :- not -b, nota.")
    assert r.nbody == {lit("-b")} and r.pbody == {lit("nota")}


def test_render():
    assert render_program(Program()) == ""
    assert render_program(parse_program("a :- not b.")) == "a :- not b."
    assert render_program(Program((constraint("a", "b"),))) == ":- a, b."
    assert str(parse_program("x :- not c, -b, not a, b.")) == "x :- b, -b, not a, not c."


def test_atoms_of():
    assert atoms_of(parse_program("b. c :- not d.")) == {"b", "c", "d"}
    assert atoms_of(Program()) == set()
    assert atoms_of(parse_program("-a :- b.")) == {"a", "b"}


def test_program_is_a_set_for_equality():
    p = parse_program("a. b :- a. a.")
    assert len(p) == 3
    assert p == parse_program("b :- a. a.")
    assert hash(p) == hash(parse_program("b :- a. a."))
    assert p.distinct() == (fact("a"), parse_program("b :- a.").rules[0])


def test_parse_literals():
    assert parse_literals("a, -b") == {lit("a"), lit("-b")}
    assert parse_literals("{}") == frozenset()


@given(literals())
def test_complement_involution(l):
    assert l.complement().complement() == l
    assert l.complement().atom == l.atom


@given(programs())
def test_round_trip(p):
    assert parse_program(render_program(p)) == p


@given(programs(), programs())
def test_atoms_of_union(p, q):
    assert atoms_of(p.union(q)) == atoms_of(p) | atoms_of(q)


def test_literal_ordering_puts_negation_after_atom():
    assert sorted([lit("b"), lit("-a"), lit("a"), lit("-b")]) == [lit("a"), lit("-a"), lit("b"), lit("-b")]


def test_invalid_atom_names_rejected():
    with pytest.raises(ValueError):
        Literal("Abc")
