"""Ground normal logic programs: representation, parsing, completion and the
least-fixpoint transformation."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import NonGroundError, ProgramSyntaxError, ResourceCapError

DEFAULT_MAX_LFP_RULES = 100_000


def _byte_key(name: str) -> bytes:
    return name.encode("utf-8")


@dataclass(frozen=True)
class AtomTable:
    """Sorted, duplicate-free atom names; an atom's id is its position."""

    names: tuple[str, ...] = ()

    def __post_init__(self):
        keys = [_byte_key(n) for n in self.names]
        if any(a >= b for a, b in zip(keys, keys[1:])):
            raise ValueError("atom names must be distinct and byte-wise sorted")

    @classmethod
    def from_names(cls, names: Iterable[str]) -> "AtomTable":
        return cls(tuple(sorted(set(names), key=_byte_key)))

    @cached_property
    def index(self) -> Mapping[str, int]:
        return {name: i for i, name in enumerate(self.names)}

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def __getitem__(self, i: int) -> str:
        return self.names[i]


@dataclass(frozen=True)
class Rule:
    head: int
    pos: frozenset[int] = frozenset()
    neg: frozenset[int] = frozenset()

    @property
    def is_fact(self) -> bool:
        return not self.pos and not self.neg

    def sort_key(self) -> tuple:
        return (self.head, sorted(self.pos), sorted(self.neg))


@dataclass(frozen=True, eq=False)
class Program:
    """A finite set of ground rules over an atom table.

    Rules keep their input order (the completion lists disjuncts in that
    order) but equality is set equality, as programs are rule sets.
    """

    atoms: AtomTable
    rules: tuple[Rule, ...] = ()

    def __post_init__(self):
        n = len(self.atoms)
        seen = set()
        deduped = []
        for r in self.rules:
            if not 0 <= r.head < n or any(not 0 <= a < n for a in r.pos | r.neg):
                raise ValueError(f"rule {r} refers to an atom outside the table")
            if r not in seen:
                seen.add(r)
                deduped.append(r)
        object.__setattr__(self, "rules", tuple(deduped))

    @classmethod
    def from_named_rules(
        cls,
        rules: Iterable[tuple[str, Iterable[str], Iterable[str]]],
        extra_atoms: Iterable[str] = (),
    ) -> "Program":
        """Build a program from ``(head, positive, negative)`` name triples."""
        rules = [(h, tuple(p), tuple(q)) for h, p, q in rules]
        names = set(extra_atoms)
        for h, p, q in rules:
            names.add(h)
            names.update(p)
            names.update(q)
        table = AtomTable.from_names(names)
        idx = table.index
        return cls(
            table,
            tuple(
                Rule(idx[h], frozenset(idx[a] for a in p), frozenset(idx[a] for a in q))
                for h, p, q in rules
            ),
        )

    @property
    def n(self) -> int:
        return len(self.atoms)

    def __eq__(self, other):
        if not isinstance(other, Program):
            return NotImplemented
        return self.atoms == other.atoms and frozenset(self.rules) == frozenset(other.rules)

    def __hash__(self):
        return hash((self.atoms, frozenset(self.rules)))

    def __repr__(self):
        return f"Program({format_program(self)!r})"

    @property
    def is_positive(self) -> bool:
        return all(not r.neg for r in self.rules)

    @property
    def is_negative(self) -> bool:
        return all(not r.pos for r in self.rules)

    @cached_property
    def masks(self) -> tuple[tuple[int, int, int], ...]:
        """Rules as ``(head, positive-body bitmask, negative-body bitmask)``."""
        return tuple((r.head, _mask(r.pos), _mask(r.neg)) for r in self.rules)

    @cached_property
    def completion(self) -> "Completion":
        return completion(self)


@dataclass(frozen=True, eq=False)
class NegativeProgram(Program):
    """A program whose rules all have an empty positive body."""

    def __post_init__(self):
        super().__post_init__()
        bad = [r for r in self.rules if r.pos]
        if bad:
            raise ValueError(f"negative program has a positive body literal in {bad[0]}")


@dataclass(frozen=True)
class Completion:
    """Clark's completion: for each atom, the bodies of the rules defining it.

    An empty disjunct list stands for ``a <-> false``; a disjunct with
    empty positive and negative parts stands for ``true``.
    """

    atoms: AtomTable
    disjuncts: tuple[tuple[tuple[frozenset[int], frozenset[int]], ...], ...]

    def rhs(self, a: int | str) -> tuple[tuple[frozenset[int], frozenset[int]], ...]:
        if isinstance(a, str):
            a = self.atoms.index[a]
        return self.disjuncts[a]

    @cached_property
    def masks(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        return tuple(tuple((_mask(p), _mask(q)) for p, q in ds) for ds in self.disjuncts)


def _mask(ids: Iterable[int]) -> int:
    m = 0
    for i in ids:
        m |= 1 << i
    return m


# ---------------------------------------------------------------------------
# parsing


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.line = 1
        self.col = 1

    def error(self, message: str, cls=ProgramSyntaxError):
        raise cls(message, self.line, self.col)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def advance(self) -> str:
        ch = self.text[self.pos]
        self.pos += 1
        if ch == "\n":
            self.line += 1
            self.col = 1
        else:
            self.col += 1
        return ch

    def skip_ws(self):
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            if ch == "%":
                while self.pos < len(self.text) and self.text[self.pos] != "\n":
                    self.advance()
            elif ch.isspace():
                self.advance()
            else:
                break

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def expect(self, token: str):
        self.skip_ws()
        if not self.text.startswith(token, self.pos):
            found = self.peek() or "end of input"
            self.error(f"expected {token!r}, found {found!r}")
        for _ in token:
            self.advance()

    def word(self) -> str:
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] in "_'"):
            self.advance()
        return self.text[start:self.pos]

    def variable(self):
        line, col = self.line, self.col
        raise NonGroundError(f"variable {self.word()!r}: ground programs only", line, col)

    def term(self) -> str:
        self.skip_ws()
        ch = self.peek()
        if ch.isupper() or ch == "_":
            self.variable()
        if ch == "-" or ch.isdigit():
            start = self.pos
            self.advance()
            while self.peek().isdigit():
                self.advance()
            num = self.text[start:self.pos]
            if num == "-":
                self.error("expected a number after '-'")
            return num
        if not (ch.isalpha() and ch.islower()):
            self.error(f"expected a term, found {ch or 'end of input'!r}")
        name = self.word()
        return name + self.args()

    def args(self) -> str:
        if self.peek() != "(":
            return ""
        self.advance()
        parts = [self.term()]
        while True:
            self.skip_ws()
            if self.peek() == ",":
                self.advance()
                parts.append(self.term())
            elif self.peek() == ")":
                self.advance()
                return "(" + ",".join(parts) + ")"
            else:
                self.error(f"expected ',' or ')', found {self.peek() or 'end of input'!r}")

    def atom(self) -> str:
        self.skip_ws()
        ch = self.peek()
        if ch.isupper() or ch == "_":
            self.variable()
        if not (ch.isalpha() and ch.islower()):
            self.error(f"expected an atom, found {ch or 'end of input'!r}")
        return self.word() + self.args()

    def literal(self) -> tuple[bool, str]:
        self.skip_ws()
        if self.peek() == "~":
            self.advance()
            return False, self.atom()
        save = (self.pos, self.line, self.col)
        name = self.atom()
        if name == "not":
            self.skip_ws()
            ch = self.peek()
            if ch.isalpha() or ch == "_":
                return False, self.atom()
            self.pos, self.line, self.col = save
            name = self.atom()
        return True, name


def parse_program(text: str) -> Program:
    """Parse ground program text into a :class:`Program`.

    Grammar: ``head.`` or ``head :- lit, ..., lit.`` where a literal is an
    atom, ``not atom`` or ``~atom``. ``%`` starts a comment.
    """
    sc = _Scanner(text)
    parsed: list[tuple[str, list[str], list[str]]] = []
    while not sc.at_end():
        head = sc.atom()
        if head == "not":
            sc.error("'not' cannot be a rule head")
        pos: list[str] = []
        neg: list[str] = []
        sc.skip_ws()
        if sc.text.startswith(":-", sc.pos):
            sc.expect(":-")
            while True:
                positive, name = sc.literal()
                (pos if positive else neg).append(name)
                sc.skip_ws()
                if sc.peek() == ",":
                    sc.advance()
                    continue
                break
        sc.expect(".")
        parsed.append((head, pos, neg))
    return Program.from_named_rules(parsed)


def format_rule(rule: Rule, atoms: AtomTable) -> str:
    body = [atoms[a] for a in sorted(rule.pos)] + [f"not {atoms[a]}" for a in sorted(rule.neg)]
    if not body:
        return f"{atoms[rule.head]}."
    return f"{atoms[rule.head]} :- {', '.join(body)}."


def format_program(p: Program) -> str:
    """Canonical text: rules sorted by head, ``not`` for negation."""
    lines = [format_rule(r, p.atoms) for r in sorted(p.rules, key=Rule.sort_key)]
    return "".join(line + "\n" for line in lines)


# ---------------------------------------------------------------------------
# transformations


def completion(p: Program) -> Completion:
    per_atom: list[list[tuple[frozenset[int], frozenset[int]]]] = [[] for _ in range(p.n)]
    for r in p.rules:
        per_atom[r.head].append((r.pos, r.neg))
    return Completion(p.atoms, tuple(tuple(ds) for ds in per_atom))


def format_completion(c: Completion) -> str:
    lines = []
    names = c.atoms
    for a, ds in enumerate(c.disjuncts):
        if not ds:
            rhs = "false"
        else:
            parts = []
            for pos, neg in ds:
                lits = [names[b] for b in sorted(pos)] + [f"not {names[b]}" for b in sorted(neg)]
                parts.append(" & ".join(lits) if lits else "true")
            rhs = " | ".join(f"({x})" if " & " in x and len(ds) > 1 else x for x in parts)
        lines.append(f"{names[a]} <-> {rhs}")
    return "".join(line + "\n" for line in lines)


def _transl(p: Program, q: Mapping[int, Sequence[frozenset[int]]], cap: int) -> set[tuple[int, frozenset[int]]]:
    out: set[tuple[int, frozenset[int]]] = set()
    for r in p.rules:
        bodies = {r.neg}
        for b in r.pos:
            options = q.get(b)
            if not options:
                bodies = set()
                break
            bodies = {x | y for x in bodies for y in options}
            if len(bodies) > cap:
                raise ResourceCapError("lfp transformation rule count", len(bodies), cap)
        out.update((r.head, body) for body in bodies)
        if len(out) > cap:
            raise ResourceCapError("lfp transformation rule count", len(out), cap)
    return out


def lfp_transform(p: Program, max_rules: int = DEFAULT_MAX_LFP_RULES) -> NegativeProgram:
    """Least fixpoint of the positive-body substitution ``transl``.

    Starting from the empty rule set, every positive body atom is replaced
    by the (negative) body of each rule already derived for it, until no
    new rule appears. The atom table is kept unchanged.
    """
    current: set[tuple[int, frozenset[int]]] = set()
    while True:
        by_head: dict[int, list[frozenset[int]]] = {}
        for h, body in current:
            by_head.setdefault(h, []).append(body)
        nxt = _transl(p, by_head, max_rules)
        if nxt == current:
            break
        current = nxt
    rules = sorted((Rule(h, frozenset(), body) for h, body in current), key=Rule.sort_key)
    return NegativeProgram(p.atoms, tuple(rules))


def is_uni_rule(p: Program) -> bool:
    heads = [r.head for r in p.rules]
    return len(heads) == len(set(heads))
