from __future__ import annotations

import itertools
import random
from collections import Counter
from fractions import Fraction
from math import factorial

import pytest

from twisted_hurwitz.errors import DomainError, ResourceError
from twisted_hurwitz.hurwitz import (
    TranspositionSequence,
    admissible_transpositions,
    enumerate_hurwitz,
    hurwitz_enumerated,
    product_word,
    workload,
)
from twisted_hurwitz.partitions import Partition, partitions_of
from twisted_hurwitz.permutations import Transposition, doubled_type, signed_permutation


def T(a, b):
    return Transposition(a, b)


def literal_counts(n, m):
    """Oracle: build every sequence and multiply the word out factor by factor."""
    alphabet = admissible_transpositions(n)
    tally = Counter()
    for word in itertools.product(alphabet, repeat=m):
        tally[doubled_type(product_word(TranspositionSequence(n, word)), n)] += 1
    return {lam: tally.get(lam, 0) for lam in partitions_of(n)}


def test_admissible_transpositions():
    assert admissible_transpositions(1) == []
    assert set(admissible_transpositions(2)) == {T(1, 2), T(1, 4), T(2, 3), T(3, 4)}
    for n in range(1, 8):
        ts = admissible_transpositions(n)
        assert len(ts) == len(set(ts)) == 2 * n * (n - 1)


def test_sequence_validation():
    assert TranspositionSequence(2, (T(1, 2), T(2, 3))).m == 2
    with pytest.raises(DomainError):
        TranspositionSequence(2, (T(1, 3),))
    with pytest.raises(DomainError):
        TranspositionSequence(2, (T(1, 5),))
    with pytest.raises(DomainError):
        TranspositionSequence(0, ())


def test_product_word_examples():
    assert product_word(TranspositionSequence(3, ())).is_identity()
    assert product_word(TranspositionSequence(2, (T(1, 2), T(1, 2)))).is_identity()
    u = product_word(TranspositionSequence(2, (T(1, 2), T(2, 3))))
    assert doubled_type(u, 2) == (2,)


def test_example_counts():
    assert enumerate_hurwitz(2, 2).counts == {(2,): 8, (1, 1): 8}
    values = enumerate_hurwitz(3, 2).values
    assert values == {(3,): 16, (2, 1): 4, (1, 1, 1): 4}


@pytest.mark.parametrize("n", range(2, 6))
def test_single_transposition_values(n):
    values = enumerate_hurwitz(n, 1).values
    target = Partition((2,) + (1,) * (n - 2))
    for lam, v in values.items():
        assert v == (Fraction(2, factorial(n - 2)) if lam == target else 0)


@pytest.mark.parametrize("n,m", [(1, 2), (2, 0), (2, 3), (3, 1), (3, 2), (4, 1)])
def test_fast_tally_matches_literal_products(n, m):
    assert enumerate_hurwitz(n, m).counts == literal_counts(n, m)


@pytest.mark.parametrize("n,m", [(n, m) for n in range(1, 6) for m in range(4)])
def test_total_mass(n, m):
    result = enumerate_hurwitz(n, m)
    assert result.total == (2 * n * (n - 1)) ** m == workload(n, m)
    assert all(result.values[lam] == Fraction(c, factorial(n)) for lam, c in result.counts.items())


@pytest.mark.parametrize("n", range(1, 6))
def test_zero_transpositions(n):
    counts = enumerate_hurwitz(n, 0).counts
    assert counts[Partition((1,) * n)] == 1 and sum(counts.values()) == 1


@pytest.mark.parametrize("n,m", [(3, 3), (4, 2)])
def test_parallel_matches_serial(n, m):
    serial = enumerate_hurwitz(n, m)
    parallel = enumerate_hurwitz(n, m, workers=3)
    assert parallel.counts == serial.counts
    assert list(parallel.counts) == list(serial.counts)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_conjugation_invariance(n):
    rng = random.Random(100 + n)
    alphabet = admissible_transpositions(n)
    for _ in range(200):
        x = signed_permutation(rng.sample(range(1, n + 1), n), [rng.random() < 0.5 for _ in range(n)])
        xi = x.inverse()
        word = [rng.choice(alphabet) for _ in range(rng.randint(0, 4))]
        moved = []
        for s in word:
            image = x * s.as_permutation(2 * n) * xi
            a, b = (p for p in range(1, 2 * n + 1) if image(p) != p)
            moved.append(Transposition.of(a, b))
        before = doubled_type(product_word(TranspositionSequence(n, word)), n)
        after = doubled_type(product_word(TranspositionSequence(n, moved)), n)
        assert before == after


def test_budget():
    with pytest.raises(ResourceError) as info:
        enumerate_hurwitz(5, 9)
    assert info.value.workload == 40**9
    with pytest.raises(ResourceError):
        enumerate_hurwitz(3, 3, max_work=100)
    with pytest.raises(ResourceError):
        hurwitz_enumerated(3, (3,), max_work=100)


def test_hurwitz_enumerated():
    assert hurwitz_enumerated(0, (1, 1, 1)) == Fraction(1, 6)
    assert hurwitz_enumerated(1, (2,)) == 2
    assert hurwitz_enumerated(2, (3,)) == 16
    with pytest.raises(DomainError):
        hurwitz_enumerated(1, ())
    with pytest.raises(DomainError):
        enumerate_hurwitz(2, -1)
