"""Permutations of {1..2n}, the involution tau, and the twisted centralizer of tau.

Composition is fixed once for the whole package: ``(p * q)(x) = p(q(x))``,
the rightmost factor acts first.

A permutation ``s`` lies in the twisted centralizer C~(tau) when
``tau s tau = s^-1``.  Its cycles then come in tau-symmetric pairs
``(u1 .. uk)``, ``(tau(uk) .. tau(u1))`` or are tau-self-symmetric, and
the set B~_n consists of those elements without self-symmetric cycles.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import DomainError, ResourceError
from .partitions import Partition

MAX_B_TWISTED_N = 6

Cycle = tuple[int, ...]


class Permutation:
    """A bijection of {1..N} stored as the tuple of images of 1, 2, .., N."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise DomainError(f"not a permutation of 1..{len(images)}: {images!r}")
        self.images = images

    @classmethod
    def _trusted(cls, images: tuple[int, ...]) -> "Permutation":
        obj = cls.__new__(cls)
        obj.images = images
        return obj

    @classmethod
    def identity(cls, size: int) -> "Permutation":
        return cls._trusted(tuple(range(1, size + 1)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], size: int) -> "Permutation":
        images = list(range(1, size + 1))
        seen: set[int] = set()
        for cycle in cycles:
            for k, point in enumerate(cycle):
                if not 1 <= point <= size or point in seen:
                    raise DomainError(f"bad cycle {tuple(cycle)} for size {size}")
                seen.add(point)
                images[point - 1] = cycle[(k + 1) % len(cycle)]
        return cls._trusted(tuple(images))

    @classmethod
    def transposition(cls, a: int, b: int, size: int) -> "Permutation":
        return cls.from_cycles([(a, b)], size)

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for x, y in enumerate(self.images, start=1):
            inv[y - 1] = x
        return Permutation._trusted(tuple(inv))

    def is_identity(self) -> bool:
        return all(x == y for x, y in enumerate(self.images, start=1))

    def cycles(self) -> list[Cycle]:
        return cycle_decomposition(self)

    def cycle_type(self) -> Partition:
        return Partition.from_parts(len(c) for c in self.cycles())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({self.images!r})"

    def __str__(self) -> str:
        return format_cycles(self)


@dataclass(frozen=True, order=True)
class Transposition:
    a: int
    b: int

    def __post_init__(self):
        if not 1 <= self.a < self.b:
            raise DomainError(f"transposition needs 1 <= a < b, got ({self.a}, {self.b})")

    @classmethod
    def of(cls, x: int, y: int) -> "Transposition":
        return cls(min(x, y), max(x, y))

    def as_permutation(self, size: int) -> Permutation:
        if self.b > size:
            raise DomainError(f"transposition {self} does not fit on {size} points")
        return Permutation.transposition(self.a, self.b, size)

    def conjugate_by_tau(self, n: int) -> "Transposition":
        return Transposition.of(tau_point(self.a, n), tau_point(self.b, n))

    def __str__(self) -> str:
        return f"({self.a} {self.b})"


@dataclass(frozen=True)
class TwistedClassification:
    symmetric_pairs: tuple[tuple[Cycle, Cycle], ...]
    self_symmetric_cycles: tuple[Cycle, ...]
    doubled_type: Partition | None


def tau_point(x: int, n: int) -> int:
    return x + n if x <= n else x - n


def tau(n: int) -> Permutation:
    """The fixed-point-free involution (1,n+1)(2,n+2)...(n,2n)."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    return Permutation._trusted(tuple(range(n + 1, 2 * n + 1)) + tuple(range(1, n + 1)))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """The product p*q, acting as x -> p(q(x))."""
    if p.size != q.size:
        raise DomainError(f"cannot compose permutations of sizes {p.size} and {q.size}")
    pi = p.images
    return Permutation._trusted(tuple(pi[y - 1] for y in q.images))


def _cycles_of(images: Sequence[int]) -> list[Cycle]:
    # images are 1-based; starting from the smallest unvisited point yields the normal form directly
    seen = [False] * (len(images) + 1)
    out = []
    for start in range(1, len(images) + 1):
        if seen[start]:
            continue
        cycle = []
        x = start
        while not seen[x]:
            seen[x] = True
            cycle.append(x)
            x = images[x - 1]
        out.append(tuple(cycle))
    return out


def cycle_decomposition(p: Permutation) -> list[Cycle]:
    """Disjoint cycles including fixed points, each starting at its minimum, sorted by minimum."""
    return _cycles_of(p.images)


def _rotate_to_min(cycle: Sequence[int]) -> Cycle:
    k = cycle.index(min(cycle))
    return tuple(cycle[k:]) + tuple(cycle[:k])


def in_twisted_centralizer(images: Sequence[int], n: int) -> bool:
    # tau s tau = s^-1  <=>  (s tau)^2 = id
    for x in range(1, 2 * n + 1):
        y = images[tau_point(x, n) - 1]
        if images[tau_point(y, n) - 1] != x:
            return False
    return True


def _classify(images: Sequence[int], n: int) -> TwistedClassification:
    if len(images) != 2 * n:
        raise DomainError(f"permutation has {len(images)} points, expected {2 * n}")
    if not in_twisted_centralizer(images, n):
        raise DomainError("permutation is not in the twisted centralizer of tau")
    cycles = _cycles_of(images)
    by_min = {c[0]: c for c in cycles}
    pairs = []
    selfsym = []
    done: set[int] = set()
    for c in cycles:
        if c[0] in done:
            continue
        mirror = _rotate_to_min([tau_point(u, n) for u in reversed(c)])
        if mirror == c:
            selfsym.append(c)
        else:
            # membership in the twisted centralizer makes the mirror a cycle too
            assert by_min.get(mirror[0]) == mirror, (c, mirror)
            pairs.append((c, mirror))
            done.add(mirror[0])
        done.add(c[0])
    doubled = None if selfsym else Partition.from_parts(len(c) for c, _ in pairs)
    return TwistedClassification(tuple(pairs), tuple(selfsym), doubled)


def classify_twisted(p: Permutation, n: int) -> TwistedClassification:
    """Split the cycles of ``p`` in C~(tau) into tau-symmetric pairs and self-symmetric cycles."""
    return _classify(p.images, n)


def doubled_type(p: Permutation, n: int) -> Partition | None:
    return _classify(p.images, n).doubled_type


def canonical_representative(lam: Partition) -> Permutation:
    """A fixed element of B~_lam: consecutive blocks (v1..vk) paired with tau c^-1 tau."""
    n = sum(lam)
    images = list(range(1, 2 * n + 1))
    start = 1
    for part in lam:
        block = list(range(start, start + part))
        for k, v in enumerate(block):
            w = block[(k + 1) % part]
            images[v - 1] = w
            # tau c^-1 tau sends tau(w) to tau(v)
            images[w + n - 1] = v + n
        start += part
    return Permutation._trusted(tuple(images))


def involutions(size: int, fixed_point_free: bool = False) -> Iterator[tuple[int, ...]]:
    """Yield every involution of {1..size} as a tuple of images."""
    images = [0] * size

    def rec(free: list[int]) -> Iterator[tuple[int, ...]]:
        if not free:
            yield tuple(images)
            return
        x, rest = free[0], free[1:]
        if not fixed_point_free:
            images[x - 1] = x
            yield from rec(rest)
        for k, y in enumerate(rest):
            images[x - 1], images[y - 1] = y, x
            yield from rec(rest[:k] + rest[k + 1:])

    yield from rec(list(range(1, size + 1)))


def count_b_twisted(n: int) -> int:
    """Count B~_n exhaustively.

    Every element of C~(tau) is psi*tau for an involution psi, so the loop runs
    over all involutions of {1..2n} (fixed points allowed) and keeps the
    products without self-symmetric cycles.
    """
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if n > MAX_B_TWISTED_N:
        raise ResourceError(f"count_b_twisted refuses n={n} > {MAX_B_TWISTED_N}")
    t = tau(n).images
    count = 0
    for psi in involutions(2 * n):
        sigma = tuple(psi[y - 1] for y in t)
        if _classify(sigma, n).doubled_type is not None:
            count += 1
    return count


def involution_of(p: Permutation, n: int) -> Permutation:
    """The map B~_n -> fixed-point-free involutions, p -> p*tau."""
    cls = classify_twisted(p, n)
    if cls.doubled_type is None:
        raise DomainError("permutation has tau-self-symmetric cycles, so it is not in B~_n")
    return compose(p, tau(n))


def signed_permutation(perm: Sequence[int], flips: Sequence[bool]) -> Permutation:
    """The element of the centralizer C(tau) sending i to perm[i-1] (shifted by n if flipped)."""
    n = len(perm)
    images = [0] * (2 * n)
    for i, (target, flip) in enumerate(zip(perm, flips), start=1):
        image = target + n if flip else target
        images[i - 1] = image
        images[i + n - 1] = tau_point(image, n)
    return Permutation(images)


def format_cycles(p: Permutation) -> str:
    """Cycle notation without fixed points, e.g. "(1 3)(2 4)"; the identity prints as "()"."""
    parts = ["(" + " ".join(map(str, c)) + ")" for c in cycle_decomposition(p) if len(c) > 1]
    return "".join(parts) or "()"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, size: int) -> Permutation:
    """Parse cycle notation such as "(1 3)(2 4)" or "(1,3)(2,4)" on ``size`` points."""
    stripped = text.strip()
    if _CYCLE_RE.sub("", stripped).strip():
        raise DomainError(f"cannot parse cycle notation {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(stripped):
        tokens = body.replace(",", " ").split()
        try:
            cycles.append([int(tok) for tok in tokens])
        except ValueError:
            raise DomainError(f"cannot parse cycle ({body})") from None
    return Permutation.from_cycles([c for c in cycles if c], size)
