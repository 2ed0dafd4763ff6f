"""Consequence, reduct, answer sets, and (strong) equivalence.

The inconsistent set of all literals is never materialised. Results that
would equal it carry a status flag instead (``ClosureStatus.INCONSISTENT``,
``AnswerStatus.INCONSISTENT``).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

from . import _kernel
from .syntax import Literal, Program, Rule, format_literals

__all__ = [
    "ClosureStatus",
    "ClosureResult",
    "AnswerStatus",
    "AnswerSetResult",
    "SEModel",
    "LATTICE",
    "consequences",
    "reduct",
    "answer_sets",
    "is_consistent",
    "equivalent",
    "se_models",
    "strongly_equivalent",
    "canonical_sets",
    "set_sort_key",
]


class _Lattice:
    """Stands for the inconsistent set of all literals inside answer-set families."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "LATTICE"

    __str__ = lambda self: "L"  # noqa: E731


LATTICE = _Lattice()


def set_sort_key(literals: Iterable[Literal]):
    return tuple(sorted(literals))


def canonical_sets(sets: Iterable[Iterable[Literal]]) -> tuple[frozenset[Literal], ...]:
    unique = {frozenset(s) for s in sets}
    return tuple(sorted(unique, key=set_sort_key))


class ClosureStatus(enum.Enum):
    CONSISTENT = "consistent"
    INCONSISTENT = "inconsistent"
    VIOLATED = "violated"


@dataclass(frozen=True)
class ClosureResult:
    status: ClosureStatus
    literals: frozenset[Literal] = frozenset()

    @classmethod
    def consistent(cls, literals: Iterable[Literal]) -> ClosureResult:
        return cls(ClosureStatus.CONSISTENT, frozenset(literals))

    @property
    def is_consistent(self) -> bool:
        return self.status is ClosureStatus.CONSISTENT

    def __str__(self):
        if self.status is ClosureStatus.CONSISTENT:
            return format_literals(self.literals)
        return self.status.value


ClosureResult.INCONSISTENT = ClosureResult(ClosureStatus.INCONSISTENT)
ClosureResult.VIOLATED = ClosureResult(ClosureStatus.VIOLATED)


class AnswerStatus(enum.Enum):
    SETS = "sets"
    INCONSISTENT = "inconsistent"
    NONE = "none"


@dataclass(frozen=True)
class AnswerSetResult:
    """Answer sets of a program (or of a revision).

    ``SETS`` always comes with at least one consistent set, canonically ordered.
    ``INCONSISTENT`` means the only answer set is the set of all literals and
    ``NONE`` means there are no answer sets at all.
    """

    status: AnswerStatus
    sets: tuple[frozenset[Literal], ...] = ()

    @classmethod
    def of(cls, sets: Iterable[Iterable[Literal]]) -> AnswerSetResult:
        sets = canonical_sets(sets)
        if not sets:
            return cls.NONE
        return cls(AnswerStatus.SETS, sets)

    @classmethod
    def from_family(cls, family: Iterable) -> AnswerSetResult:
        members = list(family)
        if any(m is LATTICE for m in members):
            if len(members) > 1:
                raise ValueError("family mixes the inconsistent set with consistent sets")
            return cls.INCONSISTENT
        return cls.of(members)

    @property
    def is_sets(self) -> bool:
        return self.status is AnswerStatus.SETS

    @property
    def is_inconsistent(self) -> bool:
        return self.status is AnswerStatus.INCONSISTENT

    @property
    def is_none(self) -> bool:
        return self.status is AnswerStatus.NONE

    def family(self) -> frozenset:
        """The answer sets as a plain set; the inconsistent set appears as ``LATTICE``."""
        if self.status is AnswerStatus.INCONSISTENT:
            return frozenset([LATTICE])
        return frozenset(self.sets)

    def __iter__(self):
        return iter(self.sets)

    def __len__(self):
        return len(self.sets)

    def __str__(self):
        if self.status is AnswerStatus.INCONSISTENT:
            return "{L}"
        return "{" + ", ".join(format_literals(s) for s in self.sets) + "}"


AnswerSetResult.NONE = AnswerSetResult(AnswerStatus.NONE)
AnswerSetResult.INCONSISTENT = AnswerSetResult(AnswerStatus.INCONSISTENT)


def format_family(family: Iterable) -> str:
    members = sorted(family, key=lambda m: (0, ()) if m is LATTICE else (1, set_sort_key(m)))
    return "{" + ", ".join("L" if m is LATTICE else format_literals(m) for m in members) + "}"


class Encoding:
    """Bitmask view of a program over the atoms it mentions (plus any extras)."""

    def __init__(self, rules: Iterable[Rule], extra: Iterable[Literal] = ()):
        rules = tuple(dict.fromkeys(rules))
        atoms = {l.atom for r in rules for l in r.literals()} | {l.atom for l in extra}
        self.atoms = sorted(atoms)
        self.n_atoms = len(self.atoms)
        index = {a: i for i, a in enumerate(self.atoms)}
        self.literals = [
            Literal(a, neg) for a in self.atoms for neg in (False, True)
        ]
        self._bit = {l: 2 * index[l.atom] + l.negative for l in self.literals}
        self.rules = [
            (
                -1 if r.head is None else self._bit[r.head],
                self.mask(r.pbody),
                self.mask(r.nbody),
            )
            for r in rules
        ]
        self.naf = 0
        for _, _, neg in self.rules:
            self.naf |= neg
        self.full = (1 << (2 * self.n_atoms)) - 1

    def mask(self, literals: Iterable[Literal]) -> int:
        """Mask of the literals known to this encoding; unknown ones are dropped."""
        m = 0
        for l in literals:
            b = self._bit.get(l)
            if b is not None:
                m |= 1 << b
        return m

    def covers(self, literals: Iterable[Literal]) -> bool:
        return all(l in self._bit for l in literals)

    def decode(self, mask: int) -> frozenset[Literal]:
        out = []
        i = 0
        while mask:
            if mask & 1:
                out.append(self.literals[i])
            mask >>= 1
            i += 1
        return frozenset(out)

    def closure(self, block: int, erase: int) -> ClosureResult:
        status, s = _kernel.closure(self.rules, self.n_atoms, block, erase)
        if status == _kernel.INCONSISTENT:
            return ClosureResult.INCONSISTENT
        if status == _kernel.VIOLATED:
            return ClosureResult.VIOLATED
        return ClosureResult.consistent(self.decode(s))


@lru_cache(maxsize=8192)
def encode(p: Program) -> Encoding:
    return Encoding(p.distinct())


def consequences(p: Program) -> ClosureResult:
    """Cn with each ``not l`` read as an underivable fresh atom.

    A derived complementary pair gives ``INCONSISTENT``; otherwise a constraint
    whose body is derived gives ``VIOLATED``.
    """
    return encode(p).closure(0, 0)


def reduct(p: Program, x: Iterable[Literal]) -> Program:
    x = frozenset(x)
    return Program(tuple(Rule(r.head, r.pbody) for r in p if not (r.nbody & x)))


def reduct_to_lattice(p: Program) -> Program:
    """Reduct relative to the set of all literals: only naf-free rules survive."""
    return Program(tuple(r for r in p if not r.nbody))


@lru_cache(maxsize=8192)
def answer_sets(p: Program) -> AnswerSetResult:
    enc = encode(p)
    lattice, masks = _kernel.answer_sets(enc.rules, enc.n_atoms, enc.naf)
    if lattice:
        return AnswerSetResult.INCONSISTENT
    return AnswerSetResult.of(enc.decode(m) for m in masks)


@lru_cache(maxsize=8192)
def is_consistent(p: Program) -> bool:
    """True iff ``p`` has an answer set other than the inconsistent set."""
    enc = encode(p)
    lattice, masks = _kernel.answer_sets(enc.rules, enc.n_atoms, enc.naf, 1)
    return not lattice and bool(masks)


def equivalent(p: Program, q: Program) -> bool:
    return answer_sets(p) == answer_sets(q)


@dataclass(frozen=True)
class SEModel:
    here: frozenset[Literal]
    there: frozenset[Literal]

    def __str__(self):
        return f"({format_literals(self.here)}, {format_literals(self.there)})"


def _se_masks(enc: Encoding, base: int):
    even = (4 ** enc.n_atoms - 1) // 3
    rules = enc.rules
    t = 0
    while True:
        if not t & (t >> 1) & even and _satisfies(rules, t, t):
            h = t
            while True:
                if _satisfies(rules, h, t):
                    yield h, t
                if h == 0:
                    break
                h = (h - 1) & t
        if t == base:
            break
        t = (t - base) & base


def _satisfies(rules, h: int, t: int) -> bool:
    """``h`` is a classical model of the reduct of the rules by ``t``.

    With ``h == t`` this is plain classical satisfaction by ``t``.
    """
    for head, pos, neg in rules:
        if neg & t or pos & h != pos:
            continue
        if head < 0 or not h >> head & 1:
            return False
    return True


def se_models(p: Program, base: Optional[Iterable[Literal]] = None) -> set[SEModel]:
    """Here-and-there models ``(H, T)`` with literals read as atoms.

    ``T`` ranges over consistent subsets of ``base`` (default: the literals of
    ``p``) and ``H`` over subsets of ``T``.
    """
    base = set(p.literals() if base is None else base)
    enc = Encoding(p.distinct(), extra=base)
    return {
        SEModel(enc.decode(h), enc.decode(t)) for h, t in _se_masks(enc, enc.mask(base))
    }


def strongly_equivalent(p: Program, q: Program) -> bool:
    """SE-model equality over the joint literal base of ``p`` and ``q``."""
    base = p.literals() | q.literals()
    rules = p.distinct() + q.distinct()
    enc = Encoding(rules, extra=base)
    ep = [(h, enc.mask(pb), enc.mask(nb)) for h, pb, nb in _rules_of(enc, p)]
    eq = [(h, enc.mask(pb), enc.mask(nb)) for h, pb, nb in _rules_of(enc, q)]
    full = enc.mask(base)
    even = (4 ** enc.n_atoms - 1) // 3
    t = 0
    while True:
        if not t & (t >> 1) & even:
            tp, tq = _satisfies(ep, t, t), _satisfies(eq, t, t)
            if tp != tq:
                return False
            if tp:
                h = t
                while True:
                    if _satisfies(ep, h, t) != _satisfies(eq, h, t):
                        return False
                    if h == 0:
                        break
                    h = (h - 1) & t
        if t == full:
            return True
        t = (t - full) & full


def _rules_of(enc: Encoding, p: Program):
    for r in p.distinct():
        head = -1 if r.head is None else enc.mask([r.head]).bit_length() - 1
        yield head, r.pbody, r.nbody
