"""Min-reduct, three-valued answer sets and the canonical program of an interpretation."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from . import _kernel
from .semantics import (
    AnswerStatus,
    ClosureResult,
    Encoding,
    answer_sets,
    consequences,
    encode,
    set_sort_key,
)
from .syntax import Literal, Program, Rule, format_literals, is_consistent_set, literal_set


@dataclass(frozen=True)
class ThreeValuedInterpretation:
    """A pair ``(plus, minus)``: literals held true and naf assumptions.

    ``lattice`` marks the interpretation standing for the inconsistent answer
    set; it has empty ``plus`` and ``minus``.
    """

    plus: frozenset[Literal] = frozenset()
    minus: frozenset[Literal] = frozenset()
    lattice: bool = False

    def __post_init__(self):
        object.__setattr__(self, "plus", literal_set(self.plus))
        object.__setattr__(self, "minus", literal_set(self.minus))
        if self.plus & self.minus:
            raise ValueError("plus and minus must be disjoint")
        if not is_consistent_set(self.plus):
            raise ValueError("plus must be consistent")

    def sort_key(self):
        return (self.lattice, set_sort_key(self.plus), set_sort_key(self.minus))

    def __str__(self):
        if self.lattice:
            return "(L ; {})"
        return f"({format_literals(self.plus)} ; {format_literals(self.minus)})"


LATTICE_INTERPRETATION = ThreeValuedInterpretation(lattice=True)


def interp(plus: Iterable[Literal | str] = (), minus: Iterable[Literal | str] = ()):
    return ThreeValuedInterpretation(literal_set(plus), literal_set(minus))


def min_reduct(p: Program, x: ThreeValuedInterpretation) -> Program:
    """Drop rules whose naf part meets ``x.plus``; erase naf literals in ``x.minus``."""
    return Program(tuple(
        Rule(r.head, r.pbody, r.nbody - x.minus)
        for r in p
        if not (r.nbody & x.plus)
    ))


def _positive_part(p: Program) -> Program:
    return Program(tuple(Rule(r.head, r.pbody) for r in p))


def is_three_valued_answer_set(p: Program, x: ThreeValuedInterpretation) -> bool:
    if x.lattice:
        return answer_sets(p).is_inconsistent
    d = min_reduct(p, x)
    target = ClosureResult.consistent(x.plus)
    if consequences(_positive_part(d)) != target or consequences(d) != target:
        return False
    # Cn of the min-reduct only grows with the erased set, so it is enough to
    # drop one literal of minus at a time.
    for l in x.minus:
        y = ThreeValuedInterpretation(x.plus, x.minus - {l})
        if consequences(min_reduct(p, y)) == target:
            return False
    return True


def relevance_base(p: Program, plus: Iterable[Literal]) -> frozenset[Literal]:
    plus = frozenset(plus)
    return frozenset(l for r in p for l in r.nbody if l not in plus)


@lru_cache(maxsize=4096)
def three_valued_answer_sets(p: Program) -> tuple[ThreeValuedInterpretation, ...]:
    """All 3-valued answer sets of ``p`` in canonical order.

    For a program whose only answer set is the inconsistent set this is the
    single ``LATTICE_INTERPRETATION``; with no answer sets it is empty.
    """
    result = answer_sets(p)
    if result.status is AnswerStatus.INCONSISTENT:
        return (LATTICE_INTERPRETATION,)
    enc: Encoding = encode(p)
    out = []
    for plus in result.sets:
        pm = enc.mask(plus)
        base = enc.mask(relevance_base(p, plus))
        for m in _kernel.minimal_erasures(enc.rules, enc.n_atoms, pm, base):
            out.append(ThreeValuedInterpretation(plus, enc.decode(m)))
    return tuple(sorted(out, key=ThreeValuedInterpretation.sort_key))


def canonical_program(x: ThreeValuedInterpretation) -> Program:
    """Facts for ``x.plus`` followed by constraints ``:- l.`` for ``x.minus``."""
    rules = [Rule(l) for l in sorted(x.plus)]
    rules += [Rule(None, frozenset([l])) for l in sorted(x.minus)]
    return Program(tuple(rules))
