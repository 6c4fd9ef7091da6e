"""Integer partitions, Young-diagram statistics and hook-type products.

Partitions are plain tuples underneath, so they hash and compare exactly like
the tuple of their parts.  Every table in the package lists partitions of a
fixed weight in reverse-lexicographic order, largest first:

    >>> [tuple(p) for p in partitions_of(4)]
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, NamedTuple

from .errors import DomainError

RationalLike = int | Fraction | str


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(parts)
        for k, part in enumerate(parts):
            if not isinstance(part, int) or isinstance(part, bool) or part < 1:
                raise DomainError(f"partition parts must be positive integers, got {parts!r}")
            if k and parts[k - 1] < part:
                raise DomainError(f"partition parts must be weakly decreasing, got {parts!r}")
        return super().__new__(cls, parts)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        """Build a partition from parts given in any order."""
        return cls(sorted(parts, reverse=True))

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicities(self) -> dict[int, int]:
        return multiplicities(self)

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for part in self if part >= j) for j in range(1, self[0] + 1))

    def cells(self) -> list["Cell"]:
        return [Cell(i, j) for i, row in enumerate(self, start=1) for j in range(1, row + 1)]

    def dominates(self, other: "Partition") -> bool:
        """True when ``other <= self`` in dominance order (weights must agree)."""
        if self.weight != sum(other):
            return False
        a = b = 0
        for k in range(max(len(self), len(other))):
            a += self[k] if k < len(self) else 0
            b += other[k] if k < len(other) else 0
            if a < b:
                return False
        return True

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return ",".join(map(str, self))


class Cell(NamedTuple):
    """Young-diagram cell in English coordinates: row ``i`` holds ``λ_i`` cells."""

    i: int
    j: int


def parse_partition(text: str) -> Partition:
    """Parse the comma-separated syntax ("3,1,1"); the empty string is the empty partition."""
    text = text.strip()
    if not text:
        return Partition()
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise DomainError(f"cannot parse partition {text!r}") from None
    if any(part < 1 for part in parts):
        raise DomainError(f"partition parts must be positive: {text!r}")
    return Partition.from_parts(parts)


def to_fraction(value: RationalLike) -> Fraction:
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise DomainError(f"not a rational number: {value!r}") from None


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        out.extend((first,) + rest for rest in _partitions(n - first, first))
    return tuple(out)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order."""
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    return [Partition(p) for p in _partitions(n, n)]


def multiplicities(lam: Iterable[int]) -> dict[int, int]:
    """Map part size to the number of parts of that size."""
    return dict(Counter(lam))


def arm_leg(lam: Partition, cell: tuple[int, int]) -> tuple[int, int]:
    i, j = cell
    if not (1 <= i <= len(lam) and 1 <= j <= lam[i - 1]):
        raise DomainError(f"cell {tuple(cell)} is outside the diagram of {tuple(lam)}")
    arm = lam[i - 1] - j
    leg = sum(1 for row in lam[i:] if row >= j)
    return arm, leg


def hook_products(lam: Partition, alpha: RationalLike) -> tuple[Fraction, Fraction]:
    """Return ``(H, H')`` with H = prod(alpha*a + l + 1), H' = prod(alpha*a + l + alpha)."""
    alpha = to_fraction(alpha)
    h = hp = Fraction(1)
    for cell in Partition(lam).cells():
        arm, leg = arm_leg(lam, cell)
        h *= alpha * arm + leg + 1
        hp *= alpha * arm + leg + alpha
    return h, hp


def lb_eigenvalue(lam: Iterable[int], alpha: RationalLike) -> Fraction:
    """Eigenvalue of the Laplace-Beltrami operator on the Jack polynomial indexed by ``lam``."""
    alpha = to_fraction(alpha)
    return sum(
        (part * (alpha * part + 2 - 2 * i - alpha) for i, part in enumerate(lam, start=1)),
        Fraction(0),
    )
