import json
import random

import pytest

from lprevise.postulates import (
    POSTULATES,
    GeneratorConfig,
    UnknownPostulate,
    check_postulate,
    fuzz_postulates,
    generate_inputs,
    random_program,
    strongly_equivalent_variant,
)
from lprevise.revision import revise_pair
from lprevise.semantics import equivalent, is_consistent, strongly_equivalent
from lprevise.syntax import Program, atoms_of, literal_set, parse_program, render_program

P = parse_program


def test_initialisation_example():
    assert check_postulate("initialisation", [P("a :- not b.")]).holds


def test_success_on_blocked_naf():
    report = check_postulate("A2", [P("b. c :- not d."), P("a :- not b.")])
    assert report.holds and report.precondition_met
    assert report.lhs == {literal_set("a")}
    assert report.rhs == {literal_set("ac")}


def test_disjointness_degenerate_case_fails():
    report = check_postulate("disjointness", [Program(), P("p."), P("q :- not r.")])
    assert report.precondition_met and not report.holds
    assert report.witness


def test_tautology_fails_for_inconsistent_base():
    report = check_postulate("tautology", [P("a. -a."), P("p :- p.")])
    assert not report.holds
    assert report.lhs == {literal_set("a"), literal_set(["-a"])}
    assert report.witness == "{{a}, {-a}} != {L}"


def test_tautology_holds_for_consistent_base():
    assert check_postulate("tautology", [P("a :- not b. b :- not a."), P("p :- p. q :- q, not a.")]).holds


def test_a6_needs_strong_equivalence():
    # weakly equivalent revising programs give different revisions
    p1, p2, p3 = P("b."), P("a :- not b."), P("a :- not c.")
    assert equivalent(p2, p3)
    assert revise_pair(p1, p2).answer_sets != revise_pair(p1, p3).answer_sets
    report = check_postulate("A6", [p1, p2, p3])
    assert not report.precondition_met and report.holds


def test_a6_holds_on_strongly_equivalent_pair():
    report = check_postulate("A6", [P("b. c :- not d."), P("a :- not b."), P("a :- not b. a :- a, c.")])
    assert report.precondition_met and report.holds


def test_a5_cases():
    assert check_postulate("A5a", [P("a."), P("b. -b.")]).holds
    assert check_postulate("A5b", [P("a."), P("b :- not b.")]).holds
    assert check_postulate("A5a", [P("a. -a."), P("b.")]).holds


def test_name_and_arity_errors():
    with pytest.raises(UnknownPostulate):
        check_postulate("K7", [Program(), Program()])
    with pytest.raises(ValueError):
        check_postulate("A2", [Program()])
    assert check_postulate("a*2", [Program(), Program()]).postulate == "A2"


def test_report_json():
    report = check_postulate("tautology", [P("a. -a."), P("p :- p.")])
    data = json.loads(json.dumps(report.to_json()))
    assert data["lhs"] == [["a"], ["-a"]] and data["rhs"] == ["L"]
    assert data["programs"] == ["a.\n-a.", "p :- p."]


class TestGenerator:
    def test_zero_rules(self):
        assert random_program(GeneratorConfig(max_rules=0)) == Program()

    def test_deterministic(self):
        cfg = GeneratorConfig(seed=99)
        assert render_program(random_program(cfg)) == render_program(random_program(cfg))

    def test_snapshot(self):
        cfg = GeneratorConfig(seed=1, max_atoms=3, max_rules=4)
        assert render_program(random_program(cfg)) == "-a2.\na3 :- a2, -a2, not a3."

    def test_no_bodyless_constraints(self):
        cfg = GeneratorConfig(prob_constraint=0.9)
        for seed in range(200):
            for r in random_program(GeneratorConfig(seed=seed, prob_constraint=0.9)):
                assert r.head is not None or r.pbody or r.nbody

    def test_config_validation(self):
        with pytest.raises(ValueError):
            GeneratorConfig(seed=-1)
        with pytest.raises(ValueError):
            GeneratorConfig(prob_naf=1.5)
        with pytest.raises(ValueError):
            random_program(GeneratorConfig(max_atoms=0))

    def test_variants_are_strongly_equivalent(self):
        rng = random.Random(3)
        atoms = ["a1", "a2", "a3", "a4", "a5"]
        for seed in range(60):
            p = random_program(GeneratorConfig(seed=seed))
            assert strongly_equivalent(p, strongly_equivalent_variant(p, rng, atoms, GeneratorConfig()))

    def test_disjoint_inputs(self):
        for seed in range(30):
            _, p2, p3 = generate_inputs("non-interference", GeneratorConfig(seed=seed))
            assert not atoms_of(p2) & atoms_of(p3)
            p1, p2, _ = generate_inputs("disjointness", GeneratorConfig(seed=seed))
            assert not atoms_of(p1) & atoms_of(p2)


class TestFuzz:
    def test_idempotency_single_iteration(self):
        res = fuzz_postulates(GeneratorConfig(seed=4), 1, ["idempotency"])
        assert res["idempotency"].passes == 1

    def test_a1_always_passes(self):
        s = fuzz_postulates(GeneratorConfig(seed=11), 30, ["A1"])["A1"]
        assert s.passes == 30 and not s.counterexamples

    def test_augmentation_failures_recorded(self):
        s = fuzz_postulates(GeneratorConfig(seed=1), 60, ["augmentation"])["augmentation"]
        assert s.failures > 0
        assert s.passes + s.failures + s.precondition_unmet == 60
        assert len(s.counterexamples) == s.failures

    def test_counterexamples_replay(self):
        res = fuzz_postulates(GeneratorConfig(seed=2), 40, ["disjointness", "parallelism", "tautology"])
        for s in res.values():
            for r in s.counterexamples:
                again = check_postulate(r.postulate, [P(render_program(p)) for p in r.programs])
                assert not again.holds and (again.lhs, again.rhs) == (r.lhs, r.rhs)

    def test_deterministic_summary(self):
        a = fuzz_postulates(GeneratorConfig(seed=8), 15, ["associativity"])
        b = fuzz_postulates(GeneratorConfig(seed=8), 15, ["associativity"])
        assert a["associativity"].to_json() == b["associativity"].to_json()

    def test_tautology_failures_have_inconsistent_base(self):
        s = fuzz_postulates(GeneratorConfig(seed=5), 100, ["tautology"])["tautology"]
        assert s.passes > 0
        assert all(not is_consistent(r.programs[0]) for r in s.counterexamples)

    def test_non_interference_holds_with_consistent_programs(self):
        rng = random.Random(21)
        checked = 0
        while checked < 100:
            ps = generate_inputs("non-interference", GeneratorConfig(seed=rng.getrandbits(64)))
            if is_consistent(ps[1]) and is_consistent(ps[2]):
                assert check_postulate("non-interference", ps).holds
                checked += 1

    def test_summary_json_schema(self):
        s = fuzz_postulates(GeneratorConfig(seed=1), 10, ["parallelism"])["parallelism"]
        data = s.to_json()
        assert set(data) >= {"postulate", "passes", "failures", "counterexamples"}
        for c in data["counterexamples"]:
            assert set(c) == {"programs", "lhs", "rhs"}

    def test_bad_iterations(self):
        with pytest.raises(ValueError):
            fuzz_postulates(GeneratorConfig(), 0, ["A1"])


def test_every_postulate_runs():
    for name in POSTULATES:
        s = fuzz_postulates(GeneratorConfig(seed=3), 3, [name])[name]
        assert s.passes + s.failures + s.precondition_unmet == 3
