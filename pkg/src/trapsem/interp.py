"""Two- and three-valued interpretations over an atom table.

A two-valued interpretation (a *state*) is a plain ``int`` whose bit ``i``
is set iff atom ``i`` is true. A three-valued interpretation is an
:class:`Interp3` holding a ``defined`` mask and a ``truth`` mask.

Text forms use ``0``, ``1`` and ``*`` (undefined), one character per atom
in atom-table order, or the explicit ``a=1,b=0,c=*`` form.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import InconsistentError, InterpretationError, ResourceCapError
from .program import AtomTable, Completion, Program

DEFAULT_MAX_CSET = 1 << 20


class Value3(enum.Enum):
    F = "0"
    T = "1"
    U = "*"

    def __invert__(self) -> "Value3":
        return {Value3.F: Value3.T, Value3.T: Value3.F, Value3.U: Value3.U}[self]

    @property
    def t_rank(self) -> int:
        return _T_RANK[self]

    @classmethod
    def parse(cls, ch: str) -> "Value3":
        try:
            return _CHAR_VALUES[ch]
        except KeyError:
            raise InterpretationError(f"bad truth value {ch!r}") from None


_T_RANK = {Value3.F: 0, Value3.U: 1, Value3.T: 2}
_CHAR_VALUES = {
    "0": Value3.F, "f": Value3.F, "F": Value3.F,
    "1": Value3.T, "t": Value3.T, "T": Value3.T,
    "*": Value3.U, "u": Value3.U, "U": Value3.U,
}


def value_leq_t(x: Value3, y: Value3) -> bool:
    return x.t_rank <= y.t_rank


def value_leq_s(x: Value3, y: Value3) -> bool:
    return y is Value3.U or x is y


def value_leq_i(x: Value3, y: Value3) -> bool:
    return value_leq_s(y, x)


def value_leq_u(x: Value3, y: Value3) -> bool:
    # 0 and 1 are mutually below each other, so only U matters
    return y is Value3.U or x is not Value3.U


@dataclass(frozen=True, slots=True)
class Interp3:
    n: int
    defined: int
    truth: int

    def __post_init__(self):
        full = (1 << self.n) - 1
        if self.defined & ~full or self.truth & ~self.defined:
            raise ValueError("non-canonical three-valued interpretation")

    @classmethod
    def from_values(cls, values: Sequence[Value3]) -> "Interp3":
        d = t = 0
        for i, v in enumerate(values):
            if v is not Value3.U:
                d |= 1 << i
                if v is Value3.T:
                    t |= 1 << i
        return cls(len(values), d, t)

    @classmethod
    def from_state(cls, state: int, n: int) -> "Interp3":
        return cls(n, (1 << n) - 1, state)

    @classmethod
    def all_undefined(cls, n: int) -> "Interp3":
        return cls(n, 0, 0)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def undefined(self) -> int:
        return self.full & ~self.defined

    @property
    def false(self) -> int:
        return self.defined & ~self.truth

    @property
    def is_two_valued(self) -> bool:
        return self.defined == self.full

    def undefined_atoms(self) -> frozenset[int]:
        return frozenset(i for i in range(self.n) if self.undefined >> i & 1)

    def __getitem__(self, i: int) -> Value3:
        if not 0 <= i < self.n:
            raise IndexError(i)
        if not self.defined >> i & 1:
            return Value3.U
        return Value3.T if self.truth >> i & 1 else Value3.F

    def values(self) -> list[Value3]:
        return [self[i] for i in range(self.n)]

    def __str__(self) -> str:
        return "".join(v.value for v in self.values())


def format_state(state: int, n: int) -> str:
    return "".join("1" if state >> i & 1 else "0" for i in range(n))


def state_atoms(state: int, atoms: AtomTable) -> list[str]:
    return [name for i, name in enumerate(atoms) if state >> i & 1]


def parse_interp(text: str, atoms: AtomTable | int) -> Interp3:
    """Decode a compact (``01*``) or explicit (``a=1,b=*``) interpretation."""
    text = text.strip()
    n = atoms if isinstance(atoms, int) else len(atoms)
    if "=" in text:
        if isinstance(atoms, int):
            raise InterpretationError("explicit form needs atom names")
        values: list[Value3 | None] = [None] * n
        for part in text.split(","):
            name, sep, val = part.partition("=")
            name = name.strip()
            if name not in atoms.index:
                raise InterpretationError(f"unknown atom {name!r}")
            values[atoms.index[name]] = Value3.parse(val.strip())
        missing = [atoms[i] for i, v in enumerate(values) if v is None]
        if missing:
            raise InterpretationError(f"no value given for atom(s) {', '.join(missing)}")
        return Interp3.from_values(values)  # type: ignore[arg-type]
    if len(text) != n:
        raise InterpretationError(f"expected {n} values, got {len(text)} in {text!r}")
    return Interp3.from_values([Value3.parse(ch) for ch in text])


def parse_state(text: str, atoms: AtomTable | int) -> int:
    i = parse_interp(text, atoms)
    if not i.is_two_valued:
        raise InterpretationError(f"{text!r} is not two-valued")
    return i.truth


# ---------------------------------------------------------------------------
# represented state sets


def cset_contains(i3: Interp3, state: int) -> bool:
    return (state ^ i3.truth) & i3.defined == 0


def cset_size(i3: Interp3) -> int:
    return 1 << bin(i3.undefined).count("1")


def cset_iter(i3: Interp3, cap: int = DEFAULT_MAX_CSET) -> Iterator[int]:
    """All states agreeing with ``i3`` on its defined atoms, ascending."""
    size = cset_size(i3)
    if size > cap:
        raise ResourceCapError("represented state count", size, cap)
    free = [1 << i for i in range(i3.n) if i3.undefined >> i & 1]
    for k in range(size):
        s = i3.truth
        for j, bit in enumerate(free):
            if k >> j & 1:
                s |= bit
        yield s


# ---------------------------------------------------------------------------
# orders


def leq_t(x: Interp3, y: Interp3) -> bool:
    return not (x.truth & ~y.truth) and not (x.undefined & y.false)


def leq_s(x: Interp3, y: Interp3) -> bool:
    """``x <=s y`` pointwise; equivalently C(x) is a subset of C(y)."""
    return y.defined & ~(x.defined & ~(x.truth ^ y.truth)) == 0


def leq_i(x: Interp3, y: Interp3) -> bool:
    return leq_s(y, x)


def leq_u(x: Interp3, y: Interp3) -> bool:
    return x.undefined & ~y.undefined == 0


def consistent(x: Interp3, y: Interp3) -> bool:
    return x.defined & y.defined & (x.truth ^ y.truth) == 0


def intersect(es: Iterable[Interp3], atoms: AtomTable | None = None) -> Interp3:
    """Pointwise ``<=s``-minimum of mutually consistent interpretations."""
    es = list(es)
    if not es:
        raise ValueError("intersect needs at least one interpretation")
    n = es[0].n
    d = t = 0
    for x in es:
        clash = d & x.defined & (t ^ x.truth)
        if clash:
            atom = (clash & -clash).bit_length() - 1
            raise InconsistentError(atom, atoms[atom] if atoms is not None else None)
        d |= x.defined
        t |= x.truth
    return Interp3(n, d, t)


def join_states(states: Iterable[int], n: int) -> Interp3:
    """Smallest interpretation whose C-set holds every given state."""
    states = list(states)
    if not states:
        raise ValueError("need at least one state")
    all_and = all_or = states[0]
    for s in states[1:]:
        all_and &= s
        all_or |= s
    full = (1 << n) - 1
    defined = full & ~(all_and ^ all_or)
    return Interp3(n, defined, all_and & defined)


def minimal_elements(items: Iterable[Interp3], leq) -> list[Interp3]:
    """Elements with no other element strictly below them under ``leq``."""
    items = list(dict.fromkeys(items))
    out = []
    for x in items:
        if not any(y != x and leq(y, x) and not leq(x, y) for y in items):
            out.append(x)
    return out


# ---------------------------------------------------------------------------
# evaluation of completion right-hand sides


def _completion(c: Completion | Program) -> Completion:
    return c.completion if isinstance(c, Program) else c


def _eval_disjuncts3(ds: Sequence[tuple[int, int]], tr: int, fa: int) -> Value3:
    result = Value3.F
    for pm, nm in ds:
        if pm & fa or nm & tr:
            continue
        if pm & ~tr == 0 and nm & ~fa == 0:
            return Value3.T
        result = Value3.U
    return result


def eval_rhs3(c: Completion | Program, a: int, i3: Interp3) -> Value3:
    """Kleene value of the completion right-hand side of atom ``a``."""
    return _eval_disjuncts3(_completion(c).masks[a], i3.truth, i3.false)


def eval_rhs2(c: Completion | Program, a: int, state: int) -> bool:
    return any(pm & ~state == 0 and nm & state == 0 for pm, nm in _completion(c).masks[a])


def eval_all3(c: Completion | Program, i3: Interp3) -> Interp3:
    """Evaluate every right-hand side at once."""
    masks = _completion(c).masks
    tr, fa = i3.truth, i3.false
    d = t = 0
    for a, ds in enumerate(masks):
        v = _eval_disjuncts3(ds, tr, fa)
        if v is Value3.T:
            d |= 1 << a
            t |= 1 << a
        elif v is Value3.F:
            d |= 1 << a
    return Interp3(i3.n, d, t)
