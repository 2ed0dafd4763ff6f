"""Executable postulate checks and a seeded random-program fuzzer.

Postulate names: A1, A2, A5a, A5b, A6 (core AGM analogues) and initialisation,
idempotency, tautology, non-interference, SAbsorption, absorption,
augmentation, disjointness, parallelism, associativity (update postulates).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from typing import Callable, Iterable, Optional, Sequence

from .revision import merged_program, revise_pair, revise_sequence
from .semantics import (
    LATTICE,
    answer_sets,
    format_family,
    set_sort_key,
    strongly_equivalent,
)
from .syntax import Literal, Program, Rule, atoms_of, is_consistent_set, render_program


class UnknownPostulate(KeyError):
    pass


@dataclass(frozen=True)
class PostulateReport:
    postulate: str
    programs: tuple[Program, ...]
    holds: bool
    precondition_met: bool = True
    lhs: Optional[frozenset] = None
    rhs: Optional[frozenset] = None
    witness: Optional[str] = None

    def to_json(self) -> dict:
        return {
            "postulate": self.postulate,
            "programs": [render_program(p) for p in self.programs],
            "holds": self.holds,
            "precondition_met": self.precondition_met,
            "lhs": _family_json(self.lhs),
            "rhs": _family_json(self.rhs),
            "witness": self.witness,
        }


def _family_json(family):
    if family is None:
        return None
    members = sorted(family, key=lambda m: (0, ()) if m is LATTICE else (1, set_sort_key(m)))
    return ["L" if m is LATTICE else [str(l) for l in sorted(m)] for m in members]


def _as(*programs: Program) -> frozenset:
    if len(programs) == 1:
        return answer_sets(programs[0]).family()
    return revise_sequence(programs).answer_sets.family()


def _compare(name, programs, lhs, rhs) -> PostulateReport:
    holds = lhs == rhs
    witness = None if holds else f"{format_family(lhs)} != {format_family(rhs)}"
    return PostulateReport(name, tuple(programs), holds, True, lhs, rhs, witness)


def _unmet(name, programs, why) -> PostulateReport:
    return PostulateReport(name, tuple(programs), True, False, witness=f"precondition unmet: {why}")


def _a1(p1, p2):
    result = revise_pair(p1, p2).answer_sets
    problems = []
    if result.is_sets:
        if not result.sets:
            problems.append("empty SETS result")
        problems += [f"inconsistent member {sorted(map(str, s))}"
                     for s in result.sets if not is_consistent_set(s)]
    elif result.sets:
        problems.append(f"{result.status.value} result carries sets")
    fam = result.family()
    return PostulateReport("A1", (p1, p2), not problems, True, fam, None,
                           "; ".join(problems) or None)


def _a2(p1, p2):
    base = answer_sets(p2)
    revised = revise_pair(p1, p2).answer_sets
    if not base.is_sets:
        return _unmet("A2", (p1, p2), "revising program has no consistent answer set")
    missing = [x for x in base.sets if not any(x <= y for y in revised.sets)]
    witness = None
    if missing:
        witness = "no revised superset of " + ", ".join(
            "{" + ", ".join(map(str, sorted(x))) + "}" for x in missing)
    return PostulateReport("A2", (p1, p2), not missing, True, base.family(), revised.family(), witness)


def _status_iff(name, attr):
    def check(p1, p2):
        base = answer_sets(p2)
        revised = revise_pair(p1, p2).answer_sets
        holds = getattr(revised, attr) == getattr(base, attr)
        witness = None if holds else (
            f"revision is {revised.status.value}, revising program is {base.status.value}")
        return PostulateReport(name, (p1, p2), holds, True, revised.family(), base.family(), witness)
    return check


def _a6(p1, p2, p3):
    if not strongly_equivalent(p2, p3):
        return _unmet("A6", (p1, p2, p3), "P2 and P3 are not strongly equivalent")
    return _compare("A6", (p1, p2, p3), _as(p1, p2), _as(p1, p3))


def _initialisation(p):
    return _compare("initialisation", (p,), _as(Program(), p), _as(p))


def _idempotency(p):
    return _compare("idempotency", (p,), _as(p, p), _as(p))


def _tautology(p1, p2):
    if not all(r.head is not None and r.head in r.pbody for r in p2):
        return _unmet("tautology", (p1, p2), "P2 has a rule whose head is not in its positive body")
    return _compare("tautology", (p1, p2), _as(p1, p2), _as(p1))


def _disjoint(a: Program, b: Program) -> bool:
    return not (atoms_of(a) & atoms_of(b))


def _non_interference(p1, p2, p3):
    if not _disjoint(p2, p3):
        return _unmet("non-interference", (p1, p2, p3), "atoms of P2 and P3 overlap")
    return _compare("non-interference", (p1, p2, p3), _as(p1, p2, p3), _as(p1, p3, p2))


def _sabsorption(p1, p2, p3):
    if not strongly_equivalent(p2, p3):
        return _unmet("SAbsorption", (p1, p2, p3), "P2 and P3 are not strongly equivalent")
    return _compare("SAbsorption", (p1, p2, p3), _as(p1, p2, p3), _as(p1, p2))


def _absorption(p1, p2, p3):
    if answer_sets(p2) != answer_sets(p3):
        return _unmet("absorption", (p1, p2, p3), "AS(P2) != AS(P3)")
    return _compare("absorption", (p1, p2, p3), _as(p1, p2, p3), _as(p1, p2))


def _augmentation(p1, p2, p3):
    if not _as(p2) <= _as(p3):
        return _unmet("augmentation", (p1, p2, p3), "AS(P2) is not a subset of AS(P3)")
    return _compare("augmentation", (p1, p2, p3), _as(p1, p2, p3), _as(p1, p3))


def _disjointness(p1, p2, p3):
    if not _disjoint(p1, p2):
        return _unmet("disjointness", (p1, p2, p3), "atoms of P1 and P2 overlap")
    return _compare("disjointness", (p1, p2, p3), _as(p1.union(p2), p3), _as(p1, p3) | _as(p2, p3))


def _parallelism(p1, p2, p3):
    if not _disjoint(p2, p3):
        return _unmet("parallelism", (p1, p2, p3), "atoms of P2 and P3 overlap")
    return _compare("parallelism", (p1, p2, p3), _as(p1, p2.union(p3)), _as(p1, p2) | _as(p1, p3))


def _revise_by_outcome(p1: Program, outcome) -> frozenset:
    """Revise ``p1`` by a revision result, one merged program per trace."""
    if not outcome.answer_sets.is_sets:
        return outcome.answer_sets.family()
    family = frozenset()
    for t in outcome.traces:
        family |= _as(p1, merged_program(t))
    return family


def _associativity(p1, p2, p3):
    # A revision result is not a program; each side revises with (or by) the
    # merged program of every trace of the inner revision.
    lhs = _revise_by_outcome(p1, revise_sequence([p2, p3]))
    inner = revise_sequence([p1, p2])
    if inner.answer_sets.is_sets:
        rhs = frozenset()
        for t in inner.traces:
            rhs |= _as(merged_program(t), p3)
    else:
        # no program to carry forward; fall back to the plain sequence
        rhs = _as(p1, p2, p3)
    return _compare("associativity", (p1, p2, p3), lhs, rhs)


POSTULATES: dict[str, tuple[int, Callable[..., PostulateReport]]] = {
    "A1": (2, _a1),
    "A2": (2, _a2),
    "A5a": (2, _status_iff("A5a", "is_inconsistent")),
    "A5b": (2, _status_iff("A5b", "is_none")),
    "A6": (3, _a6),
    "initialisation": (1, _initialisation),
    "idempotency": (1, _idempotency),
    "tautology": (2, _tautology),
    "non-interference": (3, _non_interference),
    "SAbsorption": (3, _sabsorption),
    "absorption": (3, _absorption),
    "augmentation": (3, _augmentation),
    "disjointness": (3, _disjointness),
    "parallelism": (3, _parallelism),
    "associativity": (3, _associativity),
}

_ALIASES = {k.lower().replace("*", "").replace("_", "-"): k for k in POSTULATES}
_ALIASES.update({"noninterference": "non-interference", "initialization": "initialisation"})


def canonical_name(name: str) -> str:
    key = name.strip().lower().replace("*", "").replace("_", "-")
    try:
        return _ALIASES[key]
    except KeyError:
        raise UnknownPostulate(name) from None


def arity(name: str) -> int:
    return POSTULATES[canonical_name(name)][0]


def check_postulate(name: str, programs: Sequence[Program]) -> PostulateReport:
    key = canonical_name(name)
    n, check = POSTULATES[key]
    if len(programs) != n:
        raise ValueError(f"{key} takes {n} program(s), got {len(programs)}")
    return check(*programs)


@dataclass(frozen=True)
class GeneratorConfig:
    seed: int = 0
    max_atoms: int = 5
    max_rules: int = 6
    max_body: int = 3
    prob_classical_negation: float = 0.2
    prob_naf: float = 0.4
    prob_constraint: float = 0.1

    def __post_init__(self):
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        for p in (self.prob_classical_negation, self.prob_naf, self.prob_constraint):
            if not 0.0 <= p <= 1.0:
                raise ValueError("probabilities must lie in [0, 1]")


def atom_pool(n: int, offset: int = 0) -> list[str]:
    return [f"a{i}" for i in range(offset + 1, offset + n + 1)]


def _random_literal(rng: random.Random, atoms: Sequence[str], cfg: GeneratorConfig) -> Literal:
    return Literal(rng.choice(atoms), rng.random() < cfg.prob_classical_negation)


def random_program(cfg: GeneratorConfig, atoms: Optional[Sequence[str]] = None) -> Program:
    """Deterministic random program; ``atoms`` defaults to a1..a<max_atoms>."""
    if cfg.max_atoms < 1:
        raise ValueError("max_atoms must be at least 1")
    atoms = list(atoms) if atoms is not None else atom_pool(cfg.max_atoms)
    rng = random.Random(cfg.seed)
    if cfg.max_rules == 0:
        return Program()
    rules = []
    for _ in range(rng.randint(1, cfg.max_rules)):
        is_constraint = cfg.max_body > 0 and rng.random() < cfg.prob_constraint
        size = rng.randint(1 if is_constraint else 0, cfg.max_body)
        pos, neg = set(), set()
        for _ in range(size):
            l = _random_literal(rng, atoms, cfg)
            (neg if rng.random() < cfg.prob_naf else pos).add(l)
        head = None if is_constraint else _random_literal(rng, atoms, cfg)
        rules.append(Rule(head, frozenset(pos), frozenset(neg)))
    return Program(tuple(rules))


def tautological_program(cfg: GeneratorConfig, atoms: Optional[Sequence[str]] = None) -> Program:
    """Random program in which every rule has its head in its positive body."""
    base = random_program(cfg, atoms)
    rng = random.Random(cfg.seed ^ 0x7A07)
    atoms = list(atoms) if atoms is not None else atom_pool(cfg.max_atoms)
    rules = []
    for r in base:
        head = r.head if r.head is not None else _random_literal(rng, atoms, cfg)
        rules.append(Rule(head, r.pbody | {head}, r.nbody))
    return Program(tuple(rules))


def strongly_equivalent_variant(p: Program, rng: random.Random, atoms: Sequence[str],
                                cfg: GeneratorConfig) -> Program:
    """A program strongly equivalent to ``p`` by construction.

    Adds some of: tautologies (head in positive body), rules whose body holds a
    literal both positively and under naf, weakened copies of existing rules
    (one extra positive body literal), and duplicates of existing rules.
    """
    rules = list(p)
    for _ in range(rng.randint(1, 3)):
        kind = rng.randrange(4) if rules else rng.randrange(2)
        if kind == 0:
            head = _random_literal(rng, atoms, cfg)
            extra = {_random_literal(rng, atoms, cfg) for _ in range(rng.randint(0, 1))}
            naf = {_random_literal(rng, atoms, cfg) for _ in range(rng.randint(0, 1))}
            rules.append(Rule(head, frozenset({head} | extra), frozenset(naf - {head} - extra)))
        elif kind == 1:
            l = _random_literal(rng, atoms, cfg)
            head = None if rng.random() < cfg.prob_constraint else _random_literal(rng, atoms, cfg)
            rules.append(Rule(head, frozenset({l}), frozenset({l})))
        elif kind == 2:
            r = rng.choice(rules)
            rules.append(Rule(r.head, r.pbody | {_random_literal(rng, atoms, cfg)}, r.nbody))
        else:
            rules.append(rng.choice(rules))
    rng.shuffle(rules)
    return Program(tuple(rules))


def generate_inputs(name: str, cfg: GeneratorConfig) -> tuple[Program, ...]:
    """One input tuple for ``name``, shaped to make its precondition hold."""
    key = canonical_name(name)
    rng = random.Random(cfg.seed)
    seeds = [rng.getrandbits(64) for _ in range(4)]
    atoms = atom_pool(cfg.max_atoms)
    half = max(1, (len(atoms) + 1) // 2)
    low, high = atoms[:half], atoms[half:] or atom_pool(1, offset=len(atoms))

    def prog(i, pool=None):
        return random_program(replace(cfg, seed=seeds[i]), pool)

    if key in ("initialisation", "idempotency"):
        return (prog(0),)
    if key in ("A1", "A2", "A5a", "A5b"):
        return (prog(0), prog(1))
    if key == "tautology":
        return (prog(0), tautological_program(replace(cfg, seed=seeds[1])))
    if key in ("A6", "SAbsorption"):
        p2 = prog(1)
        return (prog(0), p2, strongly_equivalent_variant(p2, random.Random(seeds[2]), atoms, cfg))
    if key in ("non-interference", "parallelism"):
        return (prog(0), prog(1, low), prog(2, high))
    if key == "disjointness":
        return (prog(0, low), prog(1, high), prog(2))
    if key == "absorption":
        p2 = prog(1)
        if rng.random() < 0.5:
            return (prog(0), p2, strongly_equivalent_variant(p2, random.Random(seeds[2]), atoms, cfg))
        return (prog(0), p2, prog(2))
    return (prog(0), prog(1), prog(2))


@dataclass
class FuzzSummary:
    postulate: str
    passes: int = 0
    failures: int = 0
    precondition_unmet: int = 0
    counterexamples: list[PostulateReport] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "postulate": self.postulate,
            "passes": self.passes,
            "failures": self.failures,
            "precondition_unmet": self.precondition_unmet,
            "counterexamples": [
                {
                    "programs": [render_program(p) for p in r.programs],
                    "lhs": _family_json(r.lhs),
                    "rhs": _family_json(r.rhs),
                }
                for r in self.counterexamples
            ],
        }

    def __str__(self):
        return (f"{self.postulate}: {self.passes} passed, {self.failures} failed, "
                f"{self.precondition_unmet} vacuous")


def fuzz_postulates(cfg: GeneratorConfig, iterations: int,
                    postulate_set: Iterable[str]) -> dict[str, FuzzSummary]:
    """Run each postulate on ``iterations`` generated inputs and tally the verdicts.

    Failures never abort the run; every counterexample is kept, sorted by its
    rendered programs.
    """
    if iterations < 1:
        raise ValueError("iterations must be at least 1")
    out = {}
    for name in postulate_set:
        key = canonical_name(name)
        summary = FuzzSummary(key)
        rng = random.Random(f"{cfg.seed}:{key}")
        for _ in range(iterations):
            programs = generate_inputs(key, replace(cfg, seed=rng.getrandbits(64)))
            report = check_postulate(key, programs)
            if not report.precondition_met:
                summary.precondition_unmet += 1
            elif report.holds:
                summary.passes += 1
            else:
                summary.failures += 1
                summary.counterexamples.append(report)
        summary.counterexamples.sort(key=lambda r: [render_program(p) for p in r.programs])
        out[key] = summary
    return out
