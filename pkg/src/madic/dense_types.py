"""Classification data for the minimal everywhere-dense colourings.

A dense type on n colours splits them into five roles: A-colours double as
alphabet letters whose mutual orientations are coloured freely by psi;
C-colours pair up into blocks, each block becoming one letter that colours
its two orientations by the block's endpoints; D-colours are letters whose
upward orientation is borrowed through gamma from a B- or E-colour; B- and
E-colours never name letters themselves.  Every type induces a concrete
alphabet and a surjective pair colouring whose partition space has exactly
n classes and minimal open degree among its kind.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .spaces import PartitionTable


class TypeError_(ValueError):
    """Dense-type data that violates the axioms."""


@dataclass(frozen=True)
class DenseType:
    """A partition of range(n) into roles A..E with psi, blocks and gamma.

    psi is stored as sorted (i, j, value) triples over the ordered distinct
    pairs of A; blocks as sorted tuples partitioning C; gamma as sorted
    (d, value) pairs over D.  Construction normalises the sort order so
    equality and hashing are structural.
    """

    n: int
    A: frozenset[int]
    B: frozenset[int]
    C: frozenset[int]
    D: frozenset[int]
    E: frozenset[int]
    psi: tuple[tuple[int, int, int], ...]
    blocks: tuple[tuple[int, ...], ...]
    gamma: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "A", frozenset(self.A))
        object.__setattr__(self, "B", frozenset(self.B))
        object.__setattr__(self, "C", frozenset(self.C))
        object.__setattr__(self, "D", frozenset(self.D))
        object.__setattr__(self, "E", frozenset(self.E))
        object.__setattr__(
            self, "psi", tuple(sorted(tuple(t) for t in self.psi))
        )
        object.__setattr__(
            self,
            "blocks",
            tuple(sorted(tuple(sorted(b)) for b in self.blocks)),
        )
        object.__setattr__(
            self, "gamma", tuple(sorted(tuple(g) for g in self.gamma))
        )

    @property
    def psi_map(self) -> dict[tuple[int, int], int]:
        return {(i, j): v for i, j, v in self.psi}

    @property
    def gamma_map(self) -> dict[int, int]:
        return dict(self.gamma)

    def encoding(self) -> tuple:
        return (
            self.n,
            tuple(sorted(self.A)),
            tuple(sorted(self.B)),
            tuple(sorted(self.C)),
            tuple(sorted(self.D)),
            tuple(sorted(self.E)),
            self.psi,
            self.blocks,
            self.gamma,
        )


def validate_type(t: DenseType) -> list[str]:
    """All axiom violations of the given data; empty means valid."""
    out: list[str] = []
    parts = [t.A, t.B, t.C, t.D, t.E]
    union: set[int] = set()
    total = 0
    for p in parts:
        union |= p
        total += len(p)
    if union != set(range(t.n)) or total != t.n:
        out.append("A..E must partition the colours 0..n-1")
        return out
    pairs = {(i, j) for i in t.A for j in t.A if i != j}
    psi = t.psi_map
    if set(psi) != pairs:
        out.append("psi must be defined on exactly the ordered pairs of A")
    if not set(psi.values()) <= t.B:
        out.append("psi values must lie in B")
    if set(psi.values()) != t.B:
        out.append("psi must be surjective onto B")
    covered: set[int] = set()
    for b in t.blocks:
        if len(b) not in (1, 2) or len(set(b)) != len(b):
            out.append(f"block {b} must have one or two distinct colours")
            continue
        if covered & set(b):
            out.append(f"block {b} overlaps another block")
        covered |= set(b)
    if covered != t.C:
        out.append("blocks must partition C")
    gamma = t.gamma_map
    if set(gamma) != t.D:
        out.append("gamma must be defined on exactly D")
    if not set(gamma.values()) <= t.B | t.E:
        out.append("gamma values must lie in B or E")
    for k in t.E:
        if sum(1 for v in gamma.values() if v == k) < 2:
            out.append(f"colour {k} in E needs at least two gamma preimages")
    if not t.A:
        if t.B or t.D or t.E:
            out.append("with A empty, B, D and E must be empty")
        if any(len(b) != 2 for b in t.blocks):
            out.append("with A empty, every block must have two colours")
    return out


def _block_partitions(items: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All partitions of items into blocks of size one or two."""
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for tail in _block_partitions(rest):
        yield ((first,),) + tail
    for idx in range(len(rest)):
        pair = (first, rest[idx])
        remaining = rest[:idx] + rest[idx + 1 :]
        for tail in _block_partitions(remaining):
            yield (pair,) + tail


def _surjections(domain: Sequence, codomain: Sequence[int]) -> Iterator[dict]:
    if not codomain:
        if not domain:
            yield {}
        return
    for values in itertools.product(codomain, repeat=len(domain)):
        if set(values) == set(codomain):
            yield dict(zip(domain, values))


def _gammas(domain: Sequence[int], b: frozenset[int], e: frozenset[int]) -> Iterator[dict]:
    codomain = sorted(b | e)
    if not codomain:
        if not domain:
            yield {}
        return
    for values in itertools.product(codomain, repeat=len(domain)):
        ok = all(sum(1 for v in values if v == k) >= 2 for k in e)
        if ok:
            yield dict(zip(domain, values))


def permute_type(t: DenseType, pi: Sequence[int]) -> DenseType:
    """Relabel every colour through the permutation pi."""
    return DenseType(
        t.n,
        frozenset(pi[a] for a in t.A),
        frozenset(pi[a] for a in t.B),
        frozenset(pi[a] for a in t.C),
        frozenset(pi[a] for a in t.D),
        frozenset(pi[a] for a in t.E),
        tuple((pi[i], pi[j], pi[v]) for i, j, v in t.psi),
        tuple(tuple(pi[a] for a in b) for b in t.blocks),
        tuple((pi[d], pi[v]) for d, v in t.gamma),
    )


def canonical_form(t: DenseType) -> DenseType:
    """Least relabelling of the type under all colour permutations."""
    best = None
    for pi in itertools.permutations(range(t.n)):
        cand = permute_type(t, pi)
        if best is None or cand.encoding() < best.encoding():
            best = cand
    return best  # type: ignore[return-value]


def enumerate_types(n: int) -> tuple[DenseType, ...]:
    """All dense types on n colours, one canonical member per relabelling
    class, sorted by their encodings."""
    if n < 2:
        raise TypeError_("need at least two colours")
    found: dict[tuple, DenseType] = {}
    colours = range(n)
    for assignment in itertools.product(range(5), repeat=n):
        sets: list[set[int]] = [set(), set(), set(), set(), set()]
        for c, which in zip(colours, assignment):
            sets[which].add(c)
        a, b, c_, d, e = (frozenset(s) for s in sets)
        pairs = sorted((i, j) for i in a for j in a if i != j)
        if (not pairs and b) or (pairs and not b):
            continue
        if not a and (b or d or e):
            continue
        if not a and len(c_) % 2 == 1:
            continue
        for psi in _surjections(pairs, sorted(b)):
            for blocks in _block_partitions(tuple(sorted(c_))):
                if not a and any(len(blk) != 2 for blk in blocks):
                    continue
                for gamma in _gammas(sorted(d), b, e):
                    t = DenseType(
                        n,
                        a,
                        b,
                        c_,
                        d,
                        e,
                        tuple((i, j, v) for (i, j), v in psi.items()),
                        blocks,
                        tuple(gamma.items()),
                    )
                    if validate_type(t):
                        continue
                    rep = canonical_form(t)
                    found.setdefault(rep.encoding(), rep)
    return tuple(found[k] for k in sorted(found))


# -- the induced alphabet and colouring ---------------------------------------


@dataclass(frozen=True)
class ConcreteAlphabet:
    """Letters induced by a dense type, with their colour pair.

    Each letter carries sigma (its diagonal colour, also the colour shown
    toward letters of smaller sigma) and tau (the colour shown toward
    letters of larger sigma; None for the free letters, which colour their
    mutual orientations by psi instead).
    """

    n: int
    elements: tuple[tuple[str, tuple[int, ...]], ...]
    sigma: tuple[int, ...]
    tau: tuple[Optional[int], ...]

    @property
    def m(self) -> int:
        return len(self.elements)


def concrete_alphabet(t: DenseType) -> ConcreteAlphabet:
    """Alphabet of a dense type: free letters, then blocks by least colour,
    then gamma letters, ascending."""
    elements: list[tuple[str, tuple[int, ...]]] = []
    sigma: list[int] = []
    tau: list[Optional[int]] = []
    free = sorted(t.A) if t.A else [0]
    tag = "free" if t.A else "anchor"
    for k in free:
        elements.append((tag, (k,)))
        sigma.append(k if t.A else 0)
        tau.append(None)
    for blk in sorted(t.blocks, key=min):
        elements.append(("block", blk))
        sigma.append(min(blk))
        tau.append(max(blk))
    gamma = t.gamma_map
    for d in sorted(t.D):
        elements.append(("linked", (d,)))
        sigma.append(d)
        tau.append(gamma[d])
    return ConcreteAlphabet(t.n, tuple(elements), tuple(sigma), tuple(tau))


def partition_from_type(t: DenseType) -> tuple[ConcreteAlphabet, PartitionTable]:
    """The surjective pair colouring induced by the type.

    Diagonals take sigma.  Two free letters take psi.  Otherwise the letter
    that is not free and has the smaller sigma shows its sigma, and the
    other shows its tau.  Totality needs sigma injective away from the free
    letters, which holds because block minima, gamma letters and free
    letters are pairwise disjoint colours.
    """
    problems = validate_type(t)
    if problems:
        raise TypeError_("; ".join(problems))
    alph = concrete_alphabet(t)
    m = alph.m
    free_count = len(t.A) if t.A else 1
    non_free = [alph.sigma[i] for i in range(free_count, m)]
    assert len(set(non_free)) == len(non_free)
    psi = t.psi_map
    values = []
    for i in range(m):
        row = []
        for j in range(m):
            row.append(_colour_of(alph, psi, free_count, i, j))
        values.append(tuple(row))
    table = PartitionTable(m, tuple(values))
    if table.colors != tuple(range(t.n)):
        raise TypeError_("induced colouring failed to reach every colour")
    return alph, table


def _colour_of(
    alph: ConcreteAlphabet,
    psi: dict[tuple[int, int], int],
    free_count: int,
    i: int,
    j: int,
) -> int:
    # A lone anchor letter (empty A) plays the free letters' role in the
    # side conditions below, but never reaches the psi case: it cannot pair
    # with itself off the diagonal.
    if i == j:
        return alph.sigma[i]
    i_star = i < free_count
    j_star = j < free_count
    if i_star and j_star:
        return psi[(alph.sigma[i], alph.sigma[j])]
    if not i_star and (j_star or alph.sigma[i] < alph.sigma[j]):
        return alph.sigma[i]
    if not j_star and (i_star or alph.sigma[i] > alph.sigma[j]):
        tau = alph.tau[j]
        assert tau is not None
        return tau
    raise AssertionError("colouring cases are not total")
