"""Shared helpers: independent little oracles and random object factories.

The oracles deliberately avoid the library's own traversal code; they
expand branches letter by letter and compare sequences directly, so that
agreement with the fast implementations is evidence, not circularity.
"""

from __future__ import annotations

import itertools
import random

from madic import Branch, DisjointFamily, PartitionTable, Word


def expand(x: Branch, n: int) -> tuple[int, ...]:
    """First n letters of a branch, by literally cycling the period."""
    letters = list(x.stem)
    for a in itertools.cycle(x.period):
        if len(letters) >= n:
            break
        letters.append(a)
    return tuple(letters[:n])


def meet_oracle(a, b, horizon: int = 64) -> tuple[int, ...]:
    """Longest common prefix by letterwise scan over expanded sequences."""
    left = expand(a, horizon) if isinstance(a, Branch) else a.letters
    right = expand(b, horizon) if isinstance(b, Branch) else b.letters
    out = []
    for u, v in zip(left, right):
        if u != v:
            break
        out.append(u)
    return tuple(out)


def numeral(w: Word) -> int:
    value = 0
    for a in w.letters:
        value = value * w.m + a
    return value


def random_word(rng: random.Random, m: int, max_len: int = 5) -> Word:
    return Word(m, tuple(rng.randrange(m) for _ in range(rng.randint(0, max_len))))


def random_branch(rng: random.Random, m: int, max_len: int = 3) -> Branch:
    stem = tuple(rng.randrange(m) for _ in range(rng.randint(0, max_len)))
    period = tuple(rng.randrange(m) for _ in range(rng.randint(1, max_len)))
    return Branch(m, stem, period)


def random_table(rng: random.Random, m: int, n: int) -> PartitionTable:
    """Random surjective colouring; colours are exactly 0..n-1."""
    cells = [(i, j) for i in range(m) for j in range(m)]
    assert len(cells) >= n
    rng.shuffle(cells)
    values = [[0] * m for _ in range(m)]
    for colour, (i, j) in enumerate(cells[:n]):
        values[i][j] = colour
    for i, j in cells[n:]:
        values[i][j] = rng.randrange(n)
    return PartitionTable(m, tuple(tuple(row) for row in values))


def random_family(rng: random.Random, m: int) -> DisjointFamily:
    letters = list(range(m))
    rng.shuffle(letters)
    classes = []
    while letters and (not classes or rng.random() < 0.7):
        take = rng.randint(1, min(2, len(letters)))
        classes.append(frozenset(letters[:take]))
        del letters[:take]
    if not classes:
        classes.append(frozenset({0}))
    return DisjointFamily(m, tuple(classes))
