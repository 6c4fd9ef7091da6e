"""Ribbon decompositions: words of ribbon gluings G[i,j]^{eps,delta} applied to n disks.

A word is listed in gluing order (the first entry is glued first).  Signed
labels follow i^+ = i and i^- = tau(i) = i + n.  Everything topological is
read off the word combinatorially: Euler characteristic from counting disks
and ribbons, orientability from the connectivity of the orientation cover,
and boundary circles from the cycles of the cover's boundary permutation.
"""

from __future__ import annotations

import itertools
import re
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import DomainError, ResourceError
from .hurwitz import DEFAULT_MAX_WORK, TranspositionSequence
from .partitions import Partition, partitions_of
from .permutations import Permutation, Transposition, _classify, tau_point

_SIGN_CHARS = {"+": 1, "-": -1, "−": -1}


def _sign_char(s: int) -> str:
    return "+" if s > 0 else "-"


@dataclass(frozen=True)
class Gluing:
    i: int
    j: int
    eps: int = 1
    delta: int = 1

    def __post_init__(self):
        if self.eps not in (1, -1) or self.delta not in (1, -1):
            raise DomainError(f"gluing signs must be +1 or -1, got {self.eps}, {self.delta}")
        if self.i < 1 or self.j < 1:
            raise DomainError(f"gluing labels must be positive, got {self.i}, {self.j}")
        if self.i == self.j:
            raise DomainError(f"a ribbon cannot join marked point {self.i} to itself")

    @property
    def twisted(self) -> bool:
        return self.eps != self.delta

    def flipped(self) -> "Gluing":
        return Gluing(self.i, self.j, -self.eps, -self.delta)

    def __str__(self) -> str:
        return f"G[{self.i},{self.j}]^{{{_sign_char(self.eps)}{_sign_char(self.delta)}}}"


@dataclass(frozen=True)
class RibbonDecomposition:
    n: int
    gluings: tuple[Gluing, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "gluings", tuple(self.gluings))
        if self.n < 1:
            raise DomainError(f"n must be positive, got {self.n}")
        for k, g in enumerate(self.gluings, start=1):
            if max(g.i, g.j) > self.n:
                raise DomainError(f"gluing {k} ({g}) uses a label above n = {self.n}")

    @property
    def m(self) -> int:
        return len(self.gluings)

    def __str__(self) -> str:
        return ";".join(map(str, self.gluings))


@dataclass(frozen=True)
class ComponentReport:
    disks: tuple[int, ...]
    euler_characteristic: int
    orientable: bool
    boundary_partition: Partition
    classification: str

    def to_dict(self) -> dict:
        return {
            "disks": list(self.disks),
            "euler_characteristic": self.euler_characteristic,
            "orientable": self.orientable,
            "boundary_partition": list(self.boundary_partition),
            "classification": self.classification,
        }


@dataclass(frozen=True)
class SurfaceReport:
    n: int
    m: int
    components: tuple[ComponentReport, ...]
    boundary_type: Partition
    cover_boundary_type: Partition = field(default=Partition())

    @property
    def euler_characteristic(self) -> int:
        return sum(c.euler_characteristic for c in self.components)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "euler_characteristic": self.euler_characteristic,
            "boundary_type": list(self.boundary_type),
            "cover_boundary_type": list(self.cover_boundary_type),
            "components": [c.to_dict() for c in self.components],
        }


def signed_label(i: int, sign: int, n: int) -> int:
    return i if sign > 0 else tau_point(i, n)


_GLUING_RE = re.compile(r"\s*G\[\s*(\d+)\s*,\s*(\d+)\s*\]\^\{([+\-−])([+\-−])\}\s*")


def parse_word(text: str, n: int | None = None) -> RibbonDecomposition:
    """Parse "G[1,2]^{++};G[2,3]^{++};G[1,3]^{+-}"; ``n`` defaults to the largest label used."""
    gluings = []
    pos = 0
    if text.strip():
        for chunk in text.split(";"):
            match = _GLUING_RE.fullmatch(chunk)
            if not match:
                raise DomainError(f"cannot parse gluing {chunk.strip()!r} at position {pos}")
            i, j, e, d = match.groups()
            try:
                gluings.append(Gluing(int(i), int(j), _SIGN_CHARS[e], _SIGN_CHARS[d]))
            except DomainError as exc:
                raise DomainError(f"invalid gluing at position {pos}: {exc}") from None
            pos += len(chunk) + 1
    if n is None:
        if not gluings:
            raise DomainError("an empty word needs an explicit n")
        n = max(max(g.i, g.j) for g in gluings)
    return RibbonDecomposition(n, tuple(gluings))


def orientation_cover(rd: RibbonDecomposition) -> RibbonDecomposition:
    """Decomposition of the orientation cover on 2n disks; every gluing is non-twisted.

    Positions 1..m glue (i_k^{-eps_k}, j_k^{-delta_k}) for k = m..1, then
    positions m+1..2m glue (i_k^{eps_k}, j_k^{delta_k}) for k = 1..m.
    """
    n = rd.n
    lower = [
        Gluing(signed_label(g.i, -g.eps, n), signed_label(g.j, -g.delta, n))
        for g in reversed(rd.gluings)
    ]
    upper = [Gluing(signed_label(g.i, g.eps, n), signed_label(g.j, g.delta, n)) for g in rd.gluings]
    return RibbonDecomposition(2 * n, tuple(lower + upper))


def xi(rd: RibbonDecomposition) -> TranspositionSequence:
    """The transposition sequence (i_k^{eps_k} j_k^{delta_k})_k of a ribbon decomposition."""
    n = rd.n
    sigmas = []
    for k, g in enumerate(rd.gluings, start=1):
        a, b = signed_label(g.i, g.eps, n), signed_label(g.j, g.delta, n)
        if a == tau_point(b, n):
            raise DomainError(f"gluing {k} ({g}) maps to a factor of tau")
        sigmas.append(Transposition.of(a, b))
    return TranspositionSequence(n, tuple(sigmas))


def _cover_boundary_images(pairs: Sequence[tuple[int, int]], n: int) -> tuple[int, ...]:
    # s_1 ... s_m (tau s_m tau) ... (tau s_1 tau); the rightmost factor acts first
    factors = list(pairs) + [(tau_point(a, n), tau_point(b, n)) for a, b in reversed(pairs)]
    images = list(range(1, 2 * n + 1))
    for a, b in reversed(factors):
        # left-multiply by the transposition (a b)
        images = [b if y == a else a if y == b else y for y in images]
    return tuple(images)


def boundary_permutation_cover(rd: RibbonDecomposition) -> Permutation:
    """Boundary permutation s_1 ... s_m (tau s_m tau) ... (tau s_1 tau) of the orientation cover."""
    seq = xi(rd)
    images = _cover_boundary_images([(s.a, s.b) for s in seq.sigmas], rd.n)
    if _classify(images, rd.n).doubled_type is None:
        raise AssertionError(f"cover boundary permutation of {rd} has a tau-self-symmetric cycle")
    return Permutation(images)


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size + 1))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)


def _plural(k: int, word: str) -> str:
    return f"{k} {word}" if k == 1 else f"{k} {word}s"


def classify_surface(chi: int, orientable: bool, b: int) -> str:
    """Name a compact connected surface with ``b`` boundary circles from chi and orientability."""
    defect = 2 - chi - b
    if orientable:
        if defect < 0 or defect % 2:
            raise AssertionError(f"no orientable surface has chi={chi} with {b} boundary circles")
        return f"genus {defect // 2}, {_plural(b, 'boundary circle')}"
    if defect < 1:
        raise AssertionError(f"no non-orientable surface has chi={chi} with {b} boundary circles")
    return f"{_plural(defect, 'cross-cap')}, {_plural(b, 'boundary circle')}"


def analyze(rd: RibbonDecomposition) -> SurfaceReport:
    n = rd.n
    base = _UnionFind(n)
    for g in rd.gluings:
        base.union(g.i, g.j)
    cover = _UnionFind(2 * n)
    for g in orientation_cover(rd).gluings:
        cover.union(g.i, g.j)

    sigma = boundary_permutation_cover(rd)
    cls = _classify(sigma.images, n)
    circles: dict[int, list[int]] = {}
    for c, _ in cls.symmetric_pairs:
        disk = c[0] if c[0] <= n else c[0] - n
        circles.setdefault(base.find(disk), []).append(len(c))

    members: dict[int, list[int]] = {}
    for disk in range(1, n + 1):
        members.setdefault(base.find(disk), []).append(disk)
    ribbons = Counter(base.find(g.i) for g in rd.gluings)

    components = []
    for root in sorted(members):
        disks = tuple(members[root])
        chi = len(disks) - ribbons[root]
        orientable = cover.find(root) != cover.find(root + n)
        boundary = Partition.from_parts(circles.get(root, []))
        components.append(
            ComponentReport(disks, chi, orientable, boundary, classify_surface(chi, orientable, len(boundary)))
        )
    return SurfaceReport(n, rd.m, tuple(components), cls.doubled_type, sigma.cycle_type())


def gluing_alphabet(n: int) -> list[Gluing]:
    """All gluings with i < j and free signs; ``xi`` maps them one-to-one onto admissible transpositions."""
    return [
        Gluing(i, j, e, d)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        for e in (1, -1)
        for d in (1, -1)
    ]


def _alphabet_pairs(n: int) -> list[tuple[int, int]]:
    return [(signed_label(g.i, g.eps, n), signed_label(g.j, g.delta, n)) for g in gluing_alphabet(n)]


def _tally_words(args: tuple[int, int, int | None]) -> Counter:
    n, m, first = args
    pairs = _alphabet_pairs(n)
    heads = [pairs[first]] if first is not None else None
    tally: Counter = Counter()
    if heads is None:
        suffixes = itertools.product(pairs, repeat=m)
    else:
        suffixes = (tuple(heads) + rest for rest in itertools.product(pairs, repeat=m - 1))
    for word in suffixes:
        tally[_classify(_cover_boundary_images(word, n), n).doubled_type] += 1
    return tally


def count_decompositions(
    n: int, m: int, *, workers: int = 1, max_work: int = DEFAULT_MAX_WORK
) -> dict[Partition, int]:
    """Tally every gluing word of length m over ``gluing_alphabet(n)`` by its boundary type.

    With ``workers > 1`` the first gluing is fixed per task; merged tallies are
    independent of scheduling.
    """
    if n < 1 or m < 0:
        raise DomainError(f"need n >= 1 and m >= 0, got n={n}, m={m}")
    letters = 2 * n * (n - 1)
    work = letters**m
    if work > max_work:
        raise ResourceError(f"{work} words for n={n}, m={m} exceed the budget of {max_work}", workload=work)
    if workers > 1 and m > 0 and letters:
        tally: Counter = Counter()
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_tally_words, [(n, m, k) for k in range(letters)]):
                tally.update(part)
    else:
        tally = _tally_words((n, m, None))
    return {lam: tally.get(lam, 0) for lam in partitions_of(n)}


def vertex_orderings(rd: RibbonDecomposition) -> dict[int, list[int]]:
    """Left-to-right edge numbers at each marked point: a + side appends, a - side prepends."""
    orders: dict[int, list[int]] = {k: [] for k in range(1, rd.n + 1)}
    for k, g in enumerate(rd.gluings, start=1):
        for vertex, sign in ((g.i, g.eps), (g.j, g.delta)):
            if sign > 0:
                orders[vertex].append(k)
            else:
                orders[vertex].insert(0, k)
    return orders


def is_anti_unimodal(seq: Sequence[int]) -> bool:
    if not seq:
        return True
    p = seq.index(min(seq))
    return all(seq[k] > seq[k + 1] for k in range(p)) and all(
        seq[k] < seq[k + 1] for k in range(p, len(seq) - 1)
    )


def check_diagonal_graph(
    rd: RibbonDecomposition, orders: dict[int, list[int]] | None = None
) -> bool:
    """Anti-unimodality at every vertex and the twisting rule for every edge.

    ``orders`` defaults to the orderings reconstructed from the word itself.
    """
    if orders is None:
        orders = vertex_orderings(rd)
    sides: dict[tuple[int, int], set[str]] = {}
    for vertex, seq in orders.items():
        if not is_anti_unimodal(seq):
            return False
        if not seq:
            continue
        p = seq.index(min(seq))
        for pos, edge in enumerate(seq):
            s = set()
            if pos <= p:
                s.add("-")
            if pos >= p:
                s.add("+")
            sides[(edge, vertex)] = s
    for k, g in enumerate(rd.gluings, start=1):
        if (k, g.i) not in sides or (k, g.j) not in sides:
            return False
        at_i, at_j = sides[(k, g.i)], sides[(k, g.j)]
        if g.twisted:
            ok = ("+" in at_i and "-" in at_j) or ("-" in at_i and "+" in at_j)
        else:
            ok = bool(at_i & at_j)
        if not ok:
            return False
    return True


def words(n: int, m: int) -> Iterable[RibbonDecomposition]:
    """Every decomposition of length m over ``gluing_alphabet(n)``."""
    alphabet = gluing_alphabet(n)
    for word in itertools.product(alphabet, repeat=m):
        yield RibbonDecomposition(n, word)
