from hypothesis import given
from hypothesis import strategies as st

from lprevise.semantics import (
    LATTICE,
    AnswerSetResult,
    ClosureResult,
    SEModel,
    answer_sets,
    consequences,
    equivalent,
    is_consistent,
    reduct,
    se_models,
    strongly_equivalent,
)
from lprevise.syntax import Program, lit, literal_set, parse_program

from conftest import programs
from oracles import L, oracle_answer_sets, oracle_se_models

P = parse_program


def sets(*xs):
    return AnswerSetResult.of(literal_set(x) for x in xs)


class TestConsequences:
    def test_naf_literals_never_fire(self):
        assert consequences(P("a. b :- a. c :- not d.")) == ClosureResult.consistent(literal_set("ab"))

    def test_empty(self):
        assert consequences(Program()) == ClosureResult.consistent([])

    def test_complementary_pair(self):
        assert consequences(P("a. -a.")) == ClosureResult.INCONSISTENT

    def test_constraint_fires(self):
        assert consequences(P("a. :- a.")) == ClosureResult.VIOLATED

    def test_pair_takes_precedence_over_constraint(self):
        assert consequences(P("a. -a. :- a.")) == ClosureResult.INCONSISTENT


class TestReduct:
    def test_reference_program(self):
        assert reduct(P("a. b :- a, not c. c :- not b."), literal_set("ab")) == P("a. b :- a.")

    def test_positive_program_unchanged(self):
        p = P("a. b :- a, -c. :- b.")
        assert reduct(p, literal_set(["a", "-c"])) == p

    def test_rule_deleted(self):
        assert reduct(P("c :- not b."), literal_set("b")) == Program()


class TestAnswerSets:
    def test_reference_program(self):
        assert answer_sets(P("a. b :- a, not c. c :- not b.")) == sets("ab", "ac")

    def test_empty_program(self):
        assert answer_sets(Program()) == sets("")

    def test_contradiction_gives_lattice(self):
        assert answer_sets(P("a. -a.")) == AnswerSetResult.INCONSISTENT

    def test_odd_loop_has_none(self):
        assert answer_sets(P("a :- not a.")) == AnswerSetResult.NONE

    def test_constraint_filters(self):
        assert answer_sets(P("a :- not b. b :- not a. :- a.")) == sets("b")
        assert answer_sets(P("a. :- a.")) == AnswerSetResult.NONE

    def test_classical_negation_in_bodies(self):
        assert answer_sets(P("-a :- not a. b :- -a.")) == sets(["-a", "b"])

    def test_canonical_order(self):
        res = answer_sets(P("a :- not b. b :- not a. c :- not d. d :- not c."))
        assert [sorted(map(str, s)) for s in res.sets] == [
            ["a", "c"], ["a", "d"], ["b", "c"], ["b", "d"]
        ]


def test_consistency():
    assert is_consistent(P("a."))
    assert not is_consistent(P("a. -a."))
    assert not is_consistent(P("a :- not a."))


def test_equivalence():
    assert equivalent(P("a."), P("a. a :- a."))
    assert equivalent(P("a :- not b."), P("a :- not c."))
    assert not equivalent(P("a."), P("b."))


class TestSEModels:
    def test_empty_program_over_a(self):
        models = se_models(Program(), base=[lit("a")])
        assert models == {
            SEModel(frozenset(), frozenset()),
            SEModel(frozenset(), literal_set("a")),
            SEModel(literal_set("a"), literal_set("a")),
        }

    def test_fact(self):
        assert se_models(P("a.")) == {SEModel(literal_set("a"), literal_set("a"))}

    def test_constraint(self):
        assert se_models(P(":- a."), base=[lit("a")]) == {SEModel(frozenset(), frozenset())}

    def test_strong_equivalence_examples(self):
        p = P("a :- not b. b :- c.")
        assert strongly_equivalent(p, p)
        assert strongly_equivalent(P("a :- a."), Program())
        assert not strongly_equivalent(P("a :- not b."), P("a :- not c."))


@given(programs())
def test_answer_sets_match_brute_force(p):
    assert answer_sets(p).family() == {LATTICE if x == L else x for x in oracle_answer_sets(p)}


@given(programs())
def test_answer_sets_are_self_supporting_and_incomparable(p):
    res = answer_sets(p)
    for x in res.sets:
        assert consequences(reduct(p, x)) == ClosureResult.consistent(x)
        assert not any(x < y for y in res.sets)


@given(programs(), programs())
def test_equivalence_relation(p, q):
    assert equivalent(p, p)
    assert equivalent(p, q) == equivalent(q, p)
    if strongly_equivalent(p, q):
        assert equivalent(p, q)


@given(programs(max_rules=3))
def test_se_models_match_brute_force(p):
    base = p.literals()
    expected = oracle_se_models(p, base)
    assert {(m.here, m.there) for m in se_models(p)} == expected


@given(programs(atoms="abc", max_rules=3), st.data())
def test_strong_equivalence_survives_additions(p, data):
    # build q strongly equivalent to p, then check against random contexts
    q = p.union(P("a :- a, b. c :- b, not b."))
    assert strongly_equivalent(p, q)
    for _ in range(3):
        r = data.draw(programs(atoms="abc", max_rules=3))
        assert equivalent(p.union(r), q.union(r))


@given(programs(atoms="abc", max_rules=3), programs(atoms="abc", max_rules=3),
       st.lists(programs(atoms="abc", max_rules=2), min_size=3, max_size=3))
def test_sampled_strong_equivalence_definition(p, q, contexts):
    if strongly_equivalent(p, q):
        for r in contexts:
            assert equivalent(p.union(r), q.union(r))
