"""Comb prototypes, first-move equivalence, pattern search, generators."""

import random

import pytest

from madic import (
    Branch,
    Comb,
    CombGenerator,
    DoubleComb,
    FirstMoveMap,
    GeneratorError,
    GeneratorExhaustedError,
    SplitDoubleComb,
    Word,
    canonical_pattern,
    check_first_move_map,
    comb_nodes,
    extend_generator,
    find_pattern,
    incidence,
    meet,
    subtree_embedding,
    well_order_key,
)
from conftest import random_word

W2 = lambda *letters: Word(2, letters)


# -- canonical patterns ----------------------------------------------------------


def test_comb_prototype():
    got = canonical_pattern(Comb(0, 1), 3, 2)
    assert set(got) == {W2(1), W2(0, 0, 1), W2(0, 0, 0, 0, 1)}
    assert list(got) == sorted(got, key=well_order_key)


def test_diagonal_comb_prototype():
    assert set(canonical_pattern(Comb(1, 1), 2, 2)) == {W2(1), W2(1, 1, 1)}


def test_double_comb_prototype():
    got = set(canonical_pattern(DoubleComb(0, 1, 1, 0), 2, 2))
    assert got == {
        W2(1),
        W2(0, 0, 1, 1, 1),
        W2(0, 0, 0),
        W2(0, 0, 1, 1, 0, 0, 0),
    }


def test_split_double_comb_prototype():
    got = set(canonical_pattern(SplitDoubleComb(0, 1, 0, 1, 1, 0), 1, 2))
    assert got == {W2(0, 1), W2(1, 0)}
    with pytest.raises(ValueError):
        SplitDoubleComb(1, 1, 0, 1, 1, 0)


def test_pattern_size_must_be_positive():
    with pytest.raises(ValueError):
        canonical_pattern(Comb(0, 1), 0, 2)


# -- first-move maps -------------------------------------------------------------


def test_identity_map_is_valid():
    rng = random.Random(3)
    for _ in range(25):
        nodes = {random_word(rng, 3) for _ in range(rng.randint(1, 6))}
        fmm = FirstMoveMap(tuple((w, w) for w in nodes))
        assert check_first_move_map(fmm).valid


def test_prefix_map_is_valid():
    rng = random.Random(4)
    shift = Word(2, (1,))
    for _ in range(25):
        nodes = {random_word(rng, 2) for _ in range(rng.randint(1, 6))}
        fmm = FirstMoveMap(tuple((w, subtree_embedding(shift, w)) for w in nodes))
        assert check_first_move_map(fmm).valid


def test_swap_map_breaks_incidences():
    fmm = FirstMoveMap(((W2(0), W2(1)), (W2(1), W2(0))))
    got = check_first_move_map(fmm)
    assert not got.valid
    assert got.condition == 3
    assert got.witness == (W2(0), W2(1))
    assert incidence(W2(0), W2(1)) == (0, 1)
    assert incidence(W2(1), W2(0)) == (1, 0)


def test_length_inversion_breaks_well_order():
    # meets and incidences survive but lengths flip between the two teeth
    fmm = FirstMoveMap(((W2(0), W2(0, 0)), (W2(1, 1), W2(1))))
    got = check_first_move_map(fmm)
    assert not got.valid
    assert got.condition == 2


def test_meet_conflict_reports_condition_one():
    # (00) and (01) force image of (0); (00) and (011) force a different one
    fmm = FirstMoveMap(
        (
            (W2(0, 0), W2(0, 0)),
            (W2(0, 1), W2(0, 1)),
            (W2(1), W2(0, 1, 1)),
        )
    )
    got = check_first_move_map(fmm)
    assert not got.valid
    assert got.condition == 1


def test_non_bijective_map_rejected():
    with pytest.raises(ValueError):
        FirstMoveMap(((W2(0), W2(1)), (W2(1), W2(1))))


def test_valid_extension_covers_closures():
    pattern = canonical_pattern(Comb(0, 1), 3, 2)
    shifted = tuple(subtree_embedding(W2(1), t) for t in pattern)
    got = check_first_move_map(FirstMoveMap(tuple(zip(pattern, shifted))))
    assert got.valid
    assert set(got.extension) == {meet(a, b) for a in pattern for b in pattern}


def test_composition_and_inverse_stay_valid():
    rng = random.Random(5)
    for _ in range(20):
        nodes = sorted(
            {random_word(rng, 2) for _ in range(rng.randint(2, 6))},
            key=well_order_key,
        )
        first = {w: subtree_embedding(W2(1), w) for w in nodes}
        second = {v: subtree_embedding(W2(0, 1), v) for v in first.values()}
        composed = FirstMoveMap(tuple((w, second[first[w]]) for w in nodes))
        assert check_first_move_map(composed).valid
        inverse = FirstMoveMap(tuple((v, w) for w, v in first.items()))
        assert check_first_move_map(inverse).valid


# -- pattern search --------------------------------------------------------------


def test_find_pattern_identity_case():
    pattern = canonical_pattern(Comb(0, 1), 3, 2)
    got = find_pattern(pattern, Comb(0, 1), 3, 2)
    assert got is not None
    assert got.nodes == pattern
    assert dict(got.map.pairs) == {t: t for t in pattern}


def test_find_pattern_accepts_stretched_comb():
    # same meets ordering, longer teeth: still the (0,1)-comb shape
    nodes = {W2(1), W2(0, 0, 1), W2(0, 0, 0, 1)}
    got = find_pattern(nodes, Comb(0, 1), 3, 2)
    assert got is not None
    assert check_first_move_map(got.map).valid


def test_find_pattern_rejects_well_order_flip():
    # meets and incidences look comb-like, but the closure elements (0) and
    # (1) compare the other way round after mapping, so this is no comb
    nodes = {W2(1), W2(0, 1, 1), W2(0, 0, 0, 1)}
    assert find_pattern(nodes, Comb(0, 1), 3, 2) is None


def test_find_pattern_rejects_chain():
    chain = {W2(0), W2(0, 0), W2(0, 0, 0)}
    assert find_pattern(chain, Comb(0, 1), 3, 2) is None


def test_find_pattern_inside_larger_set():
    noise = {W2(0), W2(1, 1), W2(0, 1)}
    pattern = set(canonical_pattern(Comb(0, 1), 2, 2))
    got = find_pattern(noise | pattern, Comb(0, 1), 2, 2)
    assert got is not None
    assert check_first_move_map(got.map).valid
    assert set(got.nodes) <= noise | pattern


def test_found_subsets_always_revalidate():
    rng = random.Random(6)
    kinds = [Comb(0, 1), Comb(1, 0), Comb(0, 0), DoubleComb(0, 1, 1, 0)]
    for _ in range(40):
        nodes = {random_word(rng, 2, 6) for _ in range(rng.randint(3, 9))}
        kind = rng.choice(kinds)
        got = find_pattern(nodes, kind, 2, 2)
        if got is not None:
            assert set(got.nodes) <= nodes
            assert check_first_move_map(got.map).valid


# -- subtree embeddings ----------------------------------------------------------


def test_subtree_embedding_examples():
    t = W2(0, 1)
    assert subtree_embedding(W2(), t) == t
    assert subtree_embedding(W2(1), t) == W2(1, 0, 1)
    nodes = (W2(0), W2(1), W2(0, 0))
    fmm = FirstMoveMap(tuple((w, subtree_embedding(W2(1), w)) for w in nodes))
    assert check_first_move_map(fmm).valid


def test_subtree_embedding_on_branch():
    x = Branch(2, (), (0,))
    assert subtree_embedding(W2(1), x) == Branch(2, (1,), (0,))


# -- comb generators -------------------------------------------------------------


def test_comb_nodes_splitting_example():
    gen = CombGenerator(Branch(2, (), (0,)), 0, 1, (0, 1, 2))
    assert comb_nodes(gen) == (W2(1), W2(0, 1), W2(0, 0, 1))


def test_comb_nodes_diagonal_example():
    gen = CombGenerator(Branch(2, (), (0,)), 0, 0, (1, 2))
    assert comb_nodes(gen) == (W2(0), W2(0, 0))


def test_generator_requires_matching_letters():
    with pytest.raises(GeneratorError):
        CombGenerator(Branch(2, (), (1,)), 0, 1, (0,))
    with pytest.raises(GeneratorError):
        CombGenerator(Branch(2, (), (0,)), 0, 1, (1, 1))


def test_generator_exhaustion():
    x = Branch(2, (0,), (1,))  # letter 0 appears once, in the stem
    assert CombGenerator.over(x, 0, 1, 1).depths == (0,)
    with pytest.raises(GeneratorExhaustedError):
        CombGenerator.over(x, 0, 1, 2)
    with pytest.raises(GeneratorExhaustedError):
        extend_generator(CombGenerator.over(x, 0, 1, 1), 2)


def test_extend_generator_keeps_prefix():
    gen = CombGenerator.over(Branch(2, (), (0, 1)), 0, 1, 2)
    bigger = extend_generator(gen, 5)
    assert bigger.depths[:2] == gen.depths
    assert bigger.size() == 5
    assert extend_generator(bigger, 3) is bigger


def test_comb_nodes_meet_and_incidence_facts():
    rng = random.Random(8)
    for _ in range(60):
        m = rng.randint(2, 4)
        stem = tuple(rng.randrange(m) for _ in range(rng.randint(0, 3)))
        period = tuple(rng.randrange(m) for _ in range(rng.randint(1, 3)))
        x = Branch(m, stem, period)
        i = rng.choice(sorted(set(period)))
        j = rng.randrange(m)
        gen = CombGenerator.over(x, i, j, rng.randint(1, 4))
        teeth = comb_nodes(gen)
        for d, tooth in zip(gen.depths, teeth):
            assert incidence(x, tooth) == (i, j)
            assert len(meet(x, tooth)) == d
    # teeth at the prototype's own spacing form the pattern; consecutive
    # depths do not, because the closure interleaves differently under the
    # well order ((0) sorts before tooth (1), unlike the prototype's (0,0))
    spaced = CombGenerator(Branch(2, (), (0,)), 0, 1, (0, 2, 4))
    assert comb_nodes(spaced) == canonical_pattern(Comb(0, 1), 3, 2)
    assert find_pattern(comb_nodes(spaced), Comb(0, 1), 3, 2) is not None
    packed = CombGenerator(Branch(2, (), (0,)), 0, 1, (0, 1, 2))
    assert find_pattern(comb_nodes(packed), Comb(0, 1), 3, 2) is None
