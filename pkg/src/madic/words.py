"""Exact algebra of the m-adic tree.

Elements are finite words over the alphabet {0, ..., m-1} (tree nodes) and
eventually periodic infinite words (tree branches).  The module provides the
prefix order, meets (longest common prefixes), incidence pairs (the first
moves two elements take after splitting), the length-then-lexicographic well
order, and meet closures of finite node sets.

All values are immutable and hashable; all operations are pure.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Union


class AlphabetError(ValueError):
    """A letter is outside its alphabet, or operands mix alphabets."""


class IncidenceUndefinedError(ValueError):
    """The incidence of an element with itself is undefined."""


class OrientationError(ValueError):
    """incidence(a, b) with a strictly below b: the extending element must
    come first.  Callers holding a comparable pair must flip the arguments
    rather than rely on a silent swap."""


def _check_letters(letters: tuple[int, ...], m: int) -> None:
    for a in letters:
        if not 0 <= a < m:
            raise AlphabetError(f"letter {a} outside alphabet of size {m}")


@dataclass(frozen=True, slots=True)
class Word:
    """A node of the m-adic tree: a finite word over {0, ..., m-1}."""

    m: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.m < 1:
            raise AlphabetError(f"alphabet size must be positive, got {self.m}")
        if not isinstance(self.letters, tuple):
            object.__setattr__(self, "letters", tuple(self.letters))
        _check_letters(self.letters, self.m)

    def __len__(self) -> int:
        return len(self.letters)

    def letter(self, i: int) -> int:
        return self.letters[i]

    def prefix(self, n: int) -> "Word":
        return Word(self.m, self.letters[:n])

    def child(self, letter: int) -> "Word":
        return Word(self.m, self.letters + (letter,))

    def __repr__(self) -> str:
        body = "".join(str(a) for a in self.letters) if self.letters else "()"
        return f"Word[{self.m}]({body})"


def _primitive_period(period: tuple[int, ...]) -> tuple[int, ...]:
    n = len(period)
    for d in range(1, n + 1):
        if n % d == 0 and period == period[:d] * (n // d):
            return period[:d]
    return period


@dataclass(frozen=True, slots=True)
class Branch:
    """An eventually periodic branch of the m-adic tree: stem + period,
    normalised so the period is primitive and the stem is shortest.

    Equality and hashing act on the normal form, so two descriptions of the
    same infinite word compare equal regardless of how far the period was
    unrolled into the stem.
    """

    m: int
    stem: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.m < 1:
            raise AlphabetError(f"alphabet size must be positive, got {self.m}")
        stem = tuple(self.stem)
        period = tuple(self.period)
        if not period:
            raise AlphabetError("branch period must be nonempty")
        _check_letters(stem, self.m)
        _check_letters(period, self.m)
        period = _primitive_period(period)
        # Roll trailing stem letters into the (rotated) period: s.(p)^w with
        # s ending in p's last letter equals a shorter-stem description.
        while stem and stem[-1] == period[-1]:
            stem = stem[:-1]
            period = (period[-1],) + period[:-1]
        object.__setattr__(self, "stem", stem)
        object.__setattr__(self, "period", period)

    def letter(self, i: int) -> int:
        if i < len(self.stem):
            return self.stem[i]
        return self.period[(i - len(self.stem)) % len(self.period)]

    def head(self, n: int) -> tuple[int, ...]:
        if n <= len(self.stem):
            return self.stem[:n]
        reps = itertools.islice(itertools.cycle(self.period), n - len(self.stem))
        return self.stem + tuple(reps)

    def prefix(self, n: int) -> Word:
        return Word(self.m, self.head(n))

    def __repr__(self) -> str:
        s = "".join(str(a) for a in self.stem)
        p = "".join(str(a) for a in self.period)
        return f"Branch[{self.m}]({s}({p})*)"


Element = Union[Word, Branch]


class PrefixRelation(enum.Enum):
    EQUAL = "equal"
    A_LEQ_B = "a_leq_b"
    B_LEQ_A = "b_leq_a"
    INCOMPARABLE = "incomparable"


def _same_alphabet(a: Element, b: Element) -> int:
    if a.m != b.m:
        raise AlphabetError(f"alphabet mismatch: {a.m} vs {b.m}")
    return a.m


def concat(s: Word, t: Element) -> Element:
    """s followed by t.  The right operand may be a word or a branch."""
    m = _same_alphabet(s, t)
    if isinstance(t, Word):
        return Word(m, s.letters + t.letters)
    return Branch(m, s.letters + t.stem, t.period)


def _lcp_len(xs: tuple[int, ...], ys: tuple[int, ...]) -> int:
    n = min(len(xs), len(ys))
    for i in range(n):
        if xs[i] != ys[i]:
            return i
    return n


def branch_meet_horizon(a: Branch, b: Branch) -> int:
    """Scan depth that decides equality of two eventually periodic branches:
    if they agree this far they agree everywhere."""
    return len(a.stem) + len(b.stem) + math.lcm(len(a.period), len(b.period))


def _branch_mismatch(a: Branch, b: Branch) -> int | None:
    h = branch_meet_horizon(a, b)
    xs = a.head(h)
    ys = b.head(h)
    for i in range(h):
        if xs[i] != ys[i]:
            return i
    return None


def prefix_cmp(a: Element, b: Element) -> PrefixRelation:
    """Compare a and b in the prefix (initial segment) order."""
    _same_alphabet(a, b)
    if isinstance(a, Word) and isinstance(b, Word):
        k = _lcp_len(a.letters, b.letters)
        if k == len(a) and k == len(b):
            return PrefixRelation.EQUAL
        if k == len(a):
            return PrefixRelation.A_LEQ_B
        if k == len(b):
            return PrefixRelation.B_LEQ_A
        return PrefixRelation.INCOMPARABLE
    if isinstance(a, Word):
        if b.head(len(a)) == a.letters:
            return PrefixRelation.A_LEQ_B
        return PrefixRelation.INCOMPARABLE
    if isinstance(b, Word):
        if a.head(len(b)) == b.letters:
            return PrefixRelation.B_LEQ_A
        return PrefixRelation.INCOMPARABLE
    # Two branches: they are infinite, so comparable means equal.
    if _branch_mismatch(a, b) is None:
        return PrefixRelation.EQUAL
    return PrefixRelation.INCOMPARABLE


def is_prefix(t: Word, a: Element) -> bool:
    rel = prefix_cmp(t, a)
    return rel in (PrefixRelation.EQUAL, PrefixRelation.A_LEQ_B)


def meet(a: Element, b: Element) -> Element:
    """Longest common prefix.  A word except when both operands are the same
    branch, in which case the branch itself is returned."""
    m = _same_alphabet(a, b)
    if isinstance(a, Word) and isinstance(b, Word):
        return Word(m, a.letters[:_lcp_len(a.letters, b.letters)])
    if isinstance(a, Word):
        return Word(m, a.letters[:_lcp_len(a.letters, b.head(len(a)))])
    if isinstance(b, Word):
        return Word(m, b.letters[:_lcp_len(b.letters, a.head(len(b)))])
    i = _branch_mismatch(a, b)
    if i is None:
        return a
    return Word(m, a.head(i))


def _letter_at(a: Element, i: int) -> int:
    return a.letters[i] if isinstance(a, Word) else a.letter(i)


def incidence(a: Element, b: Element) -> tuple[int, int]:
    """First moves of a and b after their meet.

    If the meet is strictly below both, the result is the pair of next
    letters (i, j) taken by a and b.  If b is strictly below a, the result is
    (i, i) where i is a's next letter after b.  Calling with a strictly below
    b is an orientation error, and incidence(a, a) is undefined.
    """
    _same_alphabet(a, b)
    rel = prefix_cmp(a, b)
    if rel is PrefixRelation.EQUAL:
        raise IncidenceUndefinedError("incidence of an element with itself")
    if rel is PrefixRelation.A_LEQ_B:
        raise OrientationError(
            "incidence(a, b) with a strictly below b: pass the extending element first"
        )
    if rel is PrefixRelation.B_LEQ_A:
        i = _letter_at(a, len(b))  # type: ignore[arg-type]
        return (i, i)
    r = meet(a, b)
    d = len(r)
    return (_letter_at(a, d), _letter_at(b, d))


def well_order_key(w: Word) -> tuple[int, tuple[int, ...]]:
    """Sort key for the well order: by length, then as base-m numerals."""
    return (len(w.letters), w.letters)


def well_order_cmp(s: Word, t: Word) -> int:
    """-1, 0 or 1 as s precedes, equals or follows t in the well order."""
    _same_alphabet(s, t)
    ks, kt = well_order_key(s), well_order_key(t)
    if ks < kt:
        return -1
    if ks > kt:
        return 1
    return 0


def meet_closure(words: Iterable[Word]) -> frozenset[Word]:
    """Least meet-closed superset of the given nodes: all pairwise meets."""
    ws = list(words)
    out = set(ws)
    for s, t in itertools.combinations(ws, 2):
        out.add(meet(s, t))
    return frozenset(out)
