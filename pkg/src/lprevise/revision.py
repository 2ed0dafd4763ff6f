"""Remainders, revision of program sequences, traces and merged programs.

Sequences are given lowest priority first: ``[p1, ..., pn]`` stands for
``p1 * ... * pn`` and ``pn`` wins every conflict.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .semantics import AnswerSetResult, AnswerStatus, answer_sets, is_consistent
from .syntax import Program, literal_set, parse_program, render_program
from .threeval import (
    ThreeValuedInterpretation,
    canonical_program,
    three_valued_answer_sets,
)


@dataclass(frozen=True)
class RemainderResult:
    """Either the remainder programs, or ``lattice`` when the base program is inconsistent."""

    programs: tuple[Program, ...] = ()
    lattice: bool = False

    def __iter__(self):
        return iter(self.programs)

    def __len__(self):
        return len(self.programs)


RemainderResult.LATTICE = RemainderResult(lattice=True)


def remainders(p1: Program, p2: Program) -> RemainderResult:
    """``p2`` joined with each subset-maximal part of ``p1`` that keeps it consistent.

    Subsets of ``p1`` are tried largest first; a subset is skipped when an
    accepted one already contains it.
    """
    if not is_consistent(p2):
        return RemainderResult.LATTICE
    rules = p1.distinct()
    accepted: list[frozenset[int]] = []
    out: list[Program] = []
    for k in range(len(rules), -1, -1):
        for idx in combinations(range(len(rules)), k):
            chosen = frozenset(idx)
            if any(chosen <= a for a in accepted):
                continue
            candidate = Program(tuple(rules[i] for i in idx)).union(p2)
            if is_consistent(candidate):
                accepted.append(chosen)
                if candidate not in out:
                    out.append(candidate)
    return RemainderResult(tuple(out))


@dataclass(frozen=True)
class TraceStep:
    index: int
    program: Program
    interpretation: ThreeValuedInterpretation

    def to_json(self) -> dict:
        return {
            "index": self.index,
            "program": render_program(self.program),
            "plus": [str(l) for l in sorted(self.interpretation.plus)],
            "minus": [str(l) for l in sorted(self.interpretation.minus)],
        }


@dataclass(frozen=True)
class RevisionTrace:
    """Steps of one revision, ordered from step n (the top program) down to step 1."""

    steps: tuple[TraceStep, ...]

    @property
    def first(self) -> TraceStep:
        """Step 1, whose plus part is the answer set this trace yields."""
        return self.steps[-1]

    def step(self, i: int) -> TraceStep:
        return self.steps[len(self.steps) - i]

    def to_json(self) -> list[dict]:
        return [s.to_json() for s in self.steps]

    @classmethod
    def from_json(cls, data: list[dict]) -> RevisionTrace:
        return cls(tuple(
            TraceStep(
                d["index"],
                parse_program(d["program"]),
                ThreeValuedInterpretation(literal_set(d["plus"]), literal_set(d["minus"])),
            )
            for d in data
        ))

    def __str__(self):
        lines = []
        for s in self.steps:
            lines.append(f"step {s.index}: {s.interpretation}")
            lines += ["    " + line for line in render_program(s.program).splitlines()]
        return "\n".join(lines)


@dataclass(frozen=True)
class RevisionOutcome:
    answer_sets: AnswerSetResult
    traces: tuple[RevisionTrace, ...] = ()

    def to_json(self) -> dict:
        return {
            "status": self.answer_sets.status.value,
            "answer_sets": [[str(l) for l in sorted(s)] for s in self.answer_sets.sets],
            "traces": [t.to_json() for t in self.traces],
        }


def _outcome(traces: list[RevisionTrace]) -> RevisionOutcome:
    unique = list(dict.fromkeys(traces))
    result = AnswerSetResult.of(t.first.interpretation.plus for t in unique)
    return RevisionOutcome(result, tuple(unique))


def _degenerate(top: Program) -> RevisionOutcome | None:
    status = answer_sets(top).status
    if status is AnswerStatus.NONE:
        return RevisionOutcome(AnswerSetResult.NONE)
    if status is AnswerStatus.INCONSISTENT:
        return RevisionOutcome(AnswerSetResult.INCONSISTENT)
    return None


def revise_sequence(programs: Sequence[Program]) -> RevisionOutcome:
    """Answer sets of ``programs[0] * ... * programs[-1]`` with every trace.

    An inconsistent top program decides the outcome outright: no answer sets
    stay ``NONE`` and the inconsistent set stays ``INCONSISTENT``.

    Each recorded interpretation keeps the assumptions of the step above it
    in ``minus`` as well as its own minimal ones. Those assumptions are already
    constraints of the step program, so this changes no answer set.
    """
    programs = list(programs)
    if not programs:
        raise ValueError("revision needs at least one program")
    n = len(programs)
    top = programs[-1]
    early = _degenerate(top)
    if early is not None:
        return early

    traces: list[RevisionTrace] = []

    def descend(i: int, steps: list[TraceStep]):
        if i == 0:
            traces.append(RevisionTrace(tuple(steps)))
            return
        above = steps[-1]
        rem = remainders(programs[i - 1], above.program.union(canonical_program(above.interpretation)))
        # the program above always keeps its own answer set, so no lattice here
        assert not rem.lattice
        for prog in rem:
            for x in three_valued_answer_sets(prog):
                carried = ThreeValuedInterpretation(x.plus, x.minus | above.interpretation.minus)
                descend(i - 1, steps + [TraceStep(i, prog, carried)])

    for x in three_valued_answer_sets(top):
        descend(n - 1, [TraceStep(n, top, x)])
    return _outcome(traces)


def revise_pair(p1: Program, p2: Program) -> RevisionOutcome:
    """``p1 * p2`` taken directly from the binary definition.

    The answer sets are those of each remainder program; the traces are built
    the same way as in ``revise_sequence``.
    """
    early = _degenerate(p2)
    if early is not None:
        return early
    found = []
    traces = []
    for x2 in three_valued_answer_sets(p2):
        for prog in remainders(p1, p2.union(canonical_program(x2))):
            found.extend(answer_sets(prog).sets)
            for x1 in three_valued_answer_sets(prog):
                carried = ThreeValuedInterpretation(x1.plus, x1.minus | x2.minus)
                traces.append(RevisionTrace((TraceStep(2, p2, x2), TraceStep(1, prog, carried))))
    return RevisionOutcome(AnswerSetResult.of(found), tuple(dict.fromkeys(traces)))


def revise(*programs: Program) -> AnswerSetResult:
    return revise_sequence(programs).answer_sets


def merged_program(trace: RevisionTrace) -> Program:
    """Union of all step programs, starting from step 1."""
    return Program(()).union(*(s.program for s in reversed(trace.steps)))

