"""Enumeration model: tally transposition sequences by the doubled cycle type of

    u = s_1 ... s_m tau s_m ... s_1 tau

over all sequences of admissible transpositions (a, b), b != tau(a).
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence

from .errors import DomainError, ResourceError
from .partitions import Partition, partitions_of
from .permutations import Permutation, Transposition, _classify, compose, tau, tau_point

DEFAULT_MAX_WORK = 10**9


@dataclass(frozen=True)
class TranspositionSequence:
    n: int
    sigmas: tuple[Transposition, ...]

    def __post_init__(self):
        object.__setattr__(self, "sigmas", tuple(self.sigmas))
        if self.n < 1:
            raise DomainError(f"n must be positive, got {self.n}")
        for k, s in enumerate(self.sigmas, start=1):
            if s.b > 2 * self.n:
                raise DomainError(f"sigma_{k} = {s} exceeds 2n = {2 * self.n}")
            if s.b == tau_point(s.a, self.n):
                raise DomainError(f"sigma_{k} = {s} is a factor of tau, not admissible")

    @property
    def m(self) -> int:
        return len(self.sigmas)


@dataclass(frozen=True)
class HurwitzCount:
    n: int
    m: int
    counts: dict[Partition, int] = field(repr=False)

    @property
    def values(self) -> dict[Partition, Fraction]:
        nf = factorial(self.n)
        return {lam: Fraction(c, nf) for lam, c in self.counts.items()}

    @property
    def total(self) -> int:
        return sum(self.counts.values())


def admissible_transpositions(n: int) -> list[Transposition]:
    """All (a, b), 1 <= a < b <= 2n, with b != tau(a); there are 2n(n-1) of them."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    return [
        Transposition(a, b)
        for a in range(1, 2 * n + 1)
        for b in range(a + 1, 2 * n + 1)
        if b != tau_point(a, n)
    ]


def product_word(seq: TranspositionSequence) -> Permutation:
    """The permutation u = s_1 ... s_m tau s_m ... s_1 tau, checked to lie in B~_n."""
    size = 2 * seq.n
    t = tau(seq.n)
    factors = [s.as_permutation(size) for s in seq.sigmas]
    u = Permutation.identity(size)
    for f in factors:
        u = compose(u, f)
    u = compose(u, t)
    for f in reversed(factors):
        u = compose(u, f)
    u = compose(u, t)
    if _classify(u.images, seq.n).doubled_type is None:
        raise AssertionError(f"product word of {seq} has a tau-self-symmetric cycle")
    return u


def workload(n: int, m: int) -> int:
    return (2 * n * (n - 1)) ** m


def _check_budget(n: int, m: int, max_work: int) -> None:
    work = workload(n, m)
    if work > max_work:
        raise ResourceError(
            f"enumerating n={n}, m={m} needs {work} products, above the budget of {max_work}",
            workload=work,
        )


def _tally_subtree(n: int, m: int, first: int | None) -> Counter:
    """Depth-first tally of all sequences, optionally with sigma_1 fixed to index ``first``.

    With P = s_1 ... s_k the word is u = (P tau P^-1) tau, so only the
    fixed-point-free involution psi = P tau P^-1 matters.  Right-multiplying
    P by (a b) conjugates psi by the transposition of the values P(a), P(b),
    which keeps each step O(1).  Types are memoized per psi; there are at
    most (2n-1)!! distinct ones.
    """
    size = 2 * n
    pairs = [(t.a - 1, t.b - 1) for t in admissible_transpositions(n)]
    tally: Counter = Counter()
    types: dict[tuple[int, ...], Partition] = {}
    p = list(range(size))
    psi = [(x + n) % size for x in range(size)]

    def step(a: int, b: int) -> None:
        # applying the same step twice restores both p and psi
        x, y = p[a], p[b]
        p[a], p[b] = y, x
        px, py = psi[x], psi[y]
        if px != y:
            psi[x], psi[py], psi[y], psi[px] = py, x, px, y

    def leaf() -> None:
        key = tuple(psi)
        lam = types.get(key)
        if lam is None:
            u = tuple(psi[(x + n) % size] + 1 for x in range(size))
            lam = _classify(u, n).doubled_type
            if lam is None:
                raise AssertionError(f"product word {u} has a tau-self-symmetric cycle")
            types[key] = lam
        tally[lam] += 1

    def rec(depth: int) -> None:
        if depth == m:
            leaf()
            return
        for a, b in pairs:
            step(a, b)
            rec(depth + 1)
            step(a, b)

    if m == 0:
        leaf()
    elif first is None:
        rec(0)
    else:
        step(*pairs[first])
        rec(1)
    return tally


def _tally_branch(args: tuple[int, int, int]) -> Counter:
    return _tally_subtree(*args)


def enumerate_hurwitz(
    n: int, m: int, *, workers: int = 1, max_work: int = DEFAULT_MAX_WORK
) -> HurwitzCount:
    """Count all (2n(n-1))^m admissible sequences by the doubled type of their product word.

    With ``workers > 1`` the choices of sigma_1 are spread over a process pool;
    every worker owns its tally and the merged result equals the serial one.
    """
    if n < 1 or m < 0:
        raise DomainError(f"need n >= 1 and m >= 0, got n={n}, m={m}")
    _check_budget(n, m, max_work)
    if workers > 1 and m > 0 and n > 1:
        branches = [(n, m, k) for k in range(2 * n * (n - 1))]
        tally: Counter = Counter()
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_tally_branch, branches):
                tally.update(part)
    else:
        tally = _tally_subtree(n, m, None)
    counts = {lam: tally.get(lam, 0) for lam in partitions_of(n)}
    return HurwitzCount(n, m, counts)


@lru_cache(maxsize=None)
def _cached_counts(n: int, m: int) -> HurwitzCount:
    return enumerate_hurwitz(n, m)


def hurwitz_enumerated(m: int, lam: Sequence[int], *, max_work: int = DEFAULT_MAX_WORK) -> Fraction:
    """h~_{m,lam} from the enumeration model."""
    lam = Partition(lam)
    n = lam.weight
    if n < 1:
        raise DomainError("the enumeration model needs |lambda| >= 1")
    _check_budget(n, m, max_work)
    return _cached_counts(n, m).values[lam]
