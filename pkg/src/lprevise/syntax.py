"""Object language: atoms, literals, rules and programs, plus the text format.

Grammar::

    program := (rule | comment)*          comment := "%" to end of line
    rule    := head "." | head ":-" body "." | ":-" body "."
    head    := literal                    body    := ext ("," ext)*
    ext     := "not" literal | literal    literal := "-"? atom
    atom    := [a-z][A-Za-z0-9_]*
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

ATOM_RE = re.compile(r"[a-z][A-Za-z0-9_]*")


class ParseError(ValueError):
    """Malformed program text. Carries a 1-based line and column."""

    def __init__(self, message: str, line: int, column: int, source: str = ""):
        where = f"{source}:" if source else ""
        super().__init__(f"{where}{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column
        self.source = source


@dataclass(frozen=True, order=True)
class Literal:
    """An atom or its classical negation.

    Ordering puts ``a`` right before ``-a`` and otherwise follows atom names.
    """

    atom: str
    negative: bool = False

    def __post_init__(self):
        if not ATOM_RE.fullmatch(self.atom):
            raise ValueError(f"invalid atom name {self.atom!r}")

    def complement(self) -> Literal:
        return Literal(self.atom, not self.negative)

    def __str__(self):
        return ("-" if self.negative else "") + self.atom

    def __repr__(self):
        return f"Literal({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> Literal:
        text = text.strip()
        if text.startswith("-"):
            return cls(text[1:], True)
        return cls(text)


def lit(text: str) -> Literal:
    return Literal.parse(text)


def literal_set(items: Iterable[Literal | str]) -> frozenset[Literal]:
    return frozenset(x if isinstance(x, Literal) else Literal.parse(x) for x in items)


def is_consistent_set(literals: Iterable[Literal]) -> bool:
    s = set(literals)
    return not any(l.complement() in s for l in s)


def sort_literals(literals: Iterable[Literal]) -> list[Literal]:
    return sorted(literals)


def format_literals(literals: Iterable[Literal]) -> str:
    return "{" + ", ".join(str(l) for l in sorted(literals)) + "}"


@dataclass(frozen=True)
class Rule:
    """``head <- pbody, not nbody``. A ``None`` head is the constraint marker."""

    head: Optional[Literal]
    pbody: frozenset[Literal] = frozenset()
    nbody: frozenset[Literal] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "pbody", frozenset(self.pbody))
        object.__setattr__(self, "nbody", frozenset(self.nbody))

    @property
    def is_constraint(self) -> bool:
        return self.head is None

    @property
    def is_positive(self) -> bool:
        return not self.nbody

    @property
    def is_fact(self) -> bool:
        return self.head is not None and not self.pbody and not self.nbody

    def literals(self) -> set[Literal]:
        out = set(self.pbody) | set(self.nbody)
        if self.head is not None:
            out.add(self.head)
        return out

    def sort_key(self):
        head = (0,) if self.head is None else (1, self.head)
        return (head, sorted(self.pbody), sorted(self.nbody))

    def __str__(self):
        body = [str(l) for l in sorted(self.pbody)]
        body += ["not " + str(l) for l in sorted(self.nbody)]
        head = "" if self.head is None else str(self.head)
        if not body:
            return head + "."
        if head:
            return f"{head} :- {', '.join(body)}."
        return f":- {', '.join(body)}."


def fact(l: Literal | str) -> Rule:
    return Rule(l if isinstance(l, Literal) else Literal.parse(l))


def constraint(*body: Literal | str) -> Rule:
    return Rule(None, literal_set(body))


@dataclass(frozen=True, eq=False)
class Program:
    """A finite set of rules.

    Rule order is kept for printing only; equality and hashing use the rule set,
    so duplicates carry no meaning.
    """

    rules: tuple[Rule, ...] = ()
    _set: frozenset[Rule] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(self.rules))
        object.__setattr__(self, "_set", frozenset(self.rules))

    def __iter__(self) -> Iterator[Rule]:
        return iter(self.rules)

    def __len__(self):
        return len(self.rules)

    def __contains__(self, rule):
        return rule in self._set

    def __eq__(self, other):
        if not isinstance(other, Program):
            return NotImplemented
        return self._set == other._set

    def __hash__(self):
        return hash(self._set)

    def __le__(self, other: Program) -> bool:
        return self._set <= other._set

    def __lt__(self, other: Program) -> bool:
        return self._set < other._set

    @property
    def rule_set(self) -> frozenset[Rule]:
        return self._set

    def distinct(self) -> tuple[Rule, ...]:
        """Rules in first-occurrence order without duplicates."""
        return tuple(dict.fromkeys(self.rules))

    def union(self, *others: Program | Iterable[Rule]) -> Program:
        rules: dict[Rule, None] = dict.fromkeys(self.rules)
        for o in others:
            rules.update(dict.fromkeys(o))
        return Program(tuple(rules))

    __or__ = union

    def literals(self) -> set[Literal]:
        out: set[Literal] = set()
        for r in self.rules:
            out |= r.literals()
        return out

    def __str__(self):
        return render_program(self)


def program(*rules: Rule) -> Program:
    return Program(tuple(rules))


def atoms_of(p: Program | Iterable[Rule]) -> set[str]:
    """Atom names occurring anywhere in ``p``; classical negation is stripped."""
    return {l.atom for r in p for l in r.literals()}


def render_program(p: Program | Iterable[Rule]) -> str:
    return "\n".join(str(r) for r in p)


_TOKEN_RE = re.compile(
    r"(?P<ws>[ \t\r\n]+)|(?P<comment>%[^\n]*)|(?P<if>:-)|(?P<dot>\.)|(?P<comma>,)"
    r"|(?P<neg>-)|(?P<ident>[a-z][A-Za-z0-9_]*)"
)


def _tokenize(text: str):
    pos = 0
    line, line_start = 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        col = pos - line_start + 1
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        if kind not in ("ws", "comment"):
            yield kind, m.group(), line, col
        chunk = m.group()
        nl = chunk.count("\n")
        if nl:
            line += nl
            line_start = pos + chunk.rindex("\n") + 1
        pos = m.end()
    yield "eof", "", line, pos - line_start + 1


class _Parser:
    def __init__(self, text: str):
        self.tokens = list(_tokenize(text))
        self.i = 0

    def peek(self, k: int = 0):
        return self.tokens[min(self.i + k, len(self.tokens) - 1)]

    def next(self):
        tok = self.peek()
        self.i += 1
        return tok

    def fail(self, message: str, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, tok[2], tok[3])

    def expect(self, kind: str, what: str):
        tok = self.peek()
        if tok[0] != kind:
            found = "end of input" if tok[0] == "eof" else repr(tok[1])
            self.fail(f"expected {what}, found {found}")
        return self.next()

    def literal(self) -> Literal:
        negative = False
        if self.peek()[0] == "neg":
            self.next()
            negative = True
        tok = self.expect("ident", "atom")
        return Literal(tok[1], negative)

    def body(self):
        pos, neg = [], []
        while True:
            kind, value, *_ = self.peek()
            nxt = self.peek(1)[0]
            if kind == "ident" and value == "not" and nxt in ("ident", "neg"):
                self.next()
                neg.append(self.literal())
            else:
                pos.append(self.literal())
            if self.peek()[0] != "comma":
                return pos, neg
            self.next()

    def rule(self) -> Rule:
        start = self.peek()
        if start[0] == "if":
            self.next()
            if self.peek()[0] == "dot":
                self.fail("constraint with empty body", start)
            pos, neg = self.body()
            self.expect("dot", "'.'")
            return Rule(None, frozenset(pos), frozenset(neg))
        head = self.literal()
        if self.peek()[0] == "if":
            self.next()
            pos, neg = self.body()
        else:
            pos, neg = [], []
        self.expect("dot", "'.' or ':-'")
        return Rule(head, frozenset(pos), frozenset(neg))

    def program(self) -> Program:
        rules = []
        while self.peek()[0] != "eof":
            rules.append(self.rule())
        return Program(tuple(rules))


def parse_program(text: str) -> Program:
    """Parse program text; rules keep their textual order."""
    return _Parser(text).program()


def parse_rule(text: str) -> Rule:
    p = parse_program(text)
    if len(p) != 1:
        raise ValueError(f"expected exactly one rule, got {len(p)}")
    return p.rules[0]


def parse_literals(text: str) -> frozenset[Literal]:
    """Parse a comma-separated literal list such as ``"a, -b"``; blank means empty."""
    items = [t.strip() for t in text.replace("{", "").replace("}", "").split(",")]
    return literal_set(t for t in items if t)
