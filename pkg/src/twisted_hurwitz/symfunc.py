"""Sparse polynomials in the power sums p_1, p_2, ... and the Laplace-Beltrami family.

The operator family acting on C[p] is

    D_alpha = sum_{i,j>=1} (i+j) (p_i p_j + (alpha-1) p_{i+j}) d/dp_{i+j}
              + alpha i j p_{i+j} d^2/(dp_i dp_j)

D_1 is the classical cut-and-join operator and D_2 the twisted one.  Matrix
elements are oriented by the operator action itself:

    CJ~(p_lam) = sum_mu entry(lam -> mu) p_mu
"""

from __future__ import annotations

import re
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, Mapping

from .errors import DomainError, ResourceError
from .partitions import Partition, RationalLike, multiplicities, partitions_of, to_fraction
from .permutations import _classify, canonical_representative, tau_point

MAX_DIRECT_N = 6


def partition_key(lam: Partition) -> tuple:
    """Sort key: degree first, then reverse-lexicographic within a degree."""
    return (sum(lam), tuple(-x for x in lam))


class PSeries:
    """Exact rational linear combination of monomials p_lam; zero coefficients are never stored."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[Iterable[int], RationalLike] | None = None):
        c: dict[Partition, Fraction] = {}
        for lam, value in (coeffs or {}).items():
            lam = Partition.from_parts(lam)
            value = c.get(lam, Fraction(0)) + to_fraction(value)
            if value:
                c[lam] = value
            else:
                c.pop(lam, None)
        self._c = c

    @classmethod
    def _wrap(cls, c: dict[Partition, Fraction]) -> "PSeries":
        obj = cls.__new__(cls)
        obj._c = {lam: v for lam, v in c.items() if v}
        return obj

    @classmethod
    def zero(cls) -> "PSeries":
        return cls._wrap({})

    def coeff(self, lam: Iterable[int]) -> Fraction:
        return self._c.get(Partition.from_parts(lam), Fraction(0))

    def items(self) -> list[tuple[Partition, Fraction]]:
        return sorted(self._c.items(), key=lambda kv: partition_key(kv[0]))

    def __iter__(self) -> Iterator[Partition]:
        return iter(sorted(self._c, key=partition_key))

    def __len__(self) -> int:
        return len(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def degrees(self) -> set[int]:
        return {sum(lam) for lam in self._c}

    def homogeneous_part(self, degree: int) -> "PSeries":
        return PSeries._wrap({lam: v for lam, v in self._c.items() if sum(lam) == degree})

    def truncate(self, max_degree: int) -> "PSeries":
        return PSeries._wrap({lam: v for lam, v in self._c.items() if sum(lam) <= max_degree})

    def __add__(self, other: "PSeries") -> "PSeries":
        c = dict(self._c)
        for lam, v in other._c.items():
            c[lam] = c.get(lam, Fraction(0)) + v
        return PSeries._wrap(c)

    def __neg__(self) -> "PSeries":
        return PSeries._wrap({lam: -v for lam, v in self._c.items()})

    def __sub__(self, other: "PSeries") -> "PSeries":
        return self + (-other)

    def scale(self, factor: RationalLike) -> "PSeries":
        factor = to_fraction(factor)
        return PSeries._wrap({lam: factor * v for lam, v in self._c.items()})

    def __mul__(self, other):
        if isinstance(other, PSeries):
            c: dict[Partition, Fraction] = {}
            for lam, u in self._c.items():
                for mu, v in other._c.items():
                    key = Partition.from_parts(lam + mu)
                    c[key] = c.get(key, Fraction(0)) + u * v
            return PSeries._wrap(c)
        return self.scale(other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "PSeries":
        out = p_monomial(())
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PSeries) and self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __repr__(self) -> str:
        return f"PSeries({format_series(self)!r})"

    def __str__(self) -> str:
        return format_series(self)


def p_monomial(lam: Iterable[int], coeff: RationalLike = 1) -> PSeries:
    return PSeries({tuple(lam): coeff})


def exp_p1(max_degree: int) -> PSeries:
    """exp(p_1) truncated to degrees <= max_degree."""
    return PSeries({(1,) * k: Fraction(1, factorial(k)) for k in range(max_degree + 1)})


def _fmt_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_series(series: PSeries) -> str:
    """Golden-file text: "c * p[l1,l2,...]" terms in canonical order joined by " + "."""
    if not series:
        return "0"
    return " + ".join(f"{_fmt_rational(v)} * p[{','.join(map(str, lam))}]" for lam, v in series.items())


_TERM_RE = re.compile(r"^\s*(-?\d+(?:/\d+)?)\s*\*\s*p\[([\d,\s]*)\]\s*$")


def parse_series(text: str) -> PSeries:
    text = text.strip()
    if text == "0":
        return PSeries.zero()
    coeffs: dict[tuple[int, ...], Fraction] = {}
    for term in text.split(" + "):
        match = _TERM_RE.match(term)
        if not match:
            raise DomainError(f"cannot parse term {term!r}")
        parts = tuple(int(x) for x in match.group(2).split(",") if x.strip())
        key = tuple(sorted(parts, reverse=True))
        coeffs[key] = coeffs.get(key, Fraction(0)) + Fraction(match.group(1))
    return PSeries(coeffs)


def _remove(counts: Counter, *parts: int) -> None:
    for part in parts:
        counts[part] -= 1


def _as_partition(counts: Counter) -> Partition:
    return Partition.from_parts(part for part, k in counts.items() for _ in range(k))


@lru_cache(maxsize=None)
def _lb_on_monomial(lam: Partition, alpha: Fraction) -> tuple[tuple[Partition, Fraction], ...]:
    a = Counter(lam)
    out: dict[Partition, Fraction] = {}

    def add(mu: Partition, value) -> None:
        out[mu] = out.get(mu, Fraction(0)) + value

    # first-order terms: d/dp_k removes one part k with weight a_k
    for k, ak in a.items():
        for i in range(1, k):
            rest = a.copy()
            _remove(rest, k)
            rest[i] += 1
            rest[k - i] += 1
            add(_as_partition(rest), k * ak)
        add(lam, (alpha - 1) * k * (k - 1) * ak)
    # second-order terms over ordered pairs (i, j)
    for i, ai in a.items():
        for j, aj in a.items():
            weight = ai * (ai - 1) if i == j else ai * aj
            if not weight:
                continue
            rest = a.copy()
            _remove(rest, i, j)
            rest[i + j] += 1
            add(_as_partition(rest), alpha * i * j * weight)
    return tuple((mu, v) for mu, v in out.items() if v)


def apply_laplace_beltrami(alpha: RationalLike, series: PSeries) -> PSeries:
    alpha = to_fraction(alpha)
    out: dict[Partition, Fraction] = {}
    for lam, coeff in series._c.items():
        for mu, v in _lb_on_monomial(lam, alpha):
            out[mu] = out.get(mu, Fraction(0)) + coeff * v
    return PSeries._wrap(out)


def apply_twisted_cutjoin(series: PSeries) -> PSeries:
    return apply_laplace_beltrami(2, series)


def cj_matrix_element_formula(lam: Iterable[int], mu: Iterable[int]) -> int:
    """Closed-form coefficient of p_mu in CJ~(p_lam), by the cut / join / diagonal case."""
    lam, mu = Partition.from_parts(lam), Partition.from_parts(mu)
    if lam.weight != mu.weight:
        raise DomainError(f"weights differ: |{tuple(lam)}| != |{tuple(mu)}|")
    a = multiplicities(lam)
    if lam == mu:
        return sum(l * (l - 1) * al for l, al in a.items())
    la, ma = Counter(lam), Counter(mu)
    removed = sorted((la - ma).elements())
    added = sorted((ma - la).elements())
    if len(removed) == 1 and len(added) == 2 and sum(added) == removed[0]:
        ell = removed[0]
        small, big = added
        return ell * a[ell] if small == big else 2 * ell * a[ell]
    if len(removed) == 2 and len(added) == 1 and sum(removed) == added[0]:
        small, big = removed
        if small == big:
            return 2 * small * small * a[small] * (a[small] - 1)
        return 4 * small * big * a[small] * a[big]
    return 0


def _swap(x: int, p: int, q: int) -> int:
    return q if x == p else p if x == q else x


def _direct_pair_counts(lam: Partition, mu: Partition) -> tuple[int, int]:
    """Ordered and unordered pairs (i, j), j not in {i, tau(i)}, with (i j) s (tau i tau j) in B~_mu."""
    n = lam.weight
    if n != mu.weight:
        raise DomainError(f"weights differ: |{tuple(lam)}| != |{tuple(mu)}|")
    if n > MAX_DIRECT_N:
        raise ResourceError(f"direct matrix elements are limited to n <= {MAX_DIRECT_N}, got {n}")
    sigma = list(canonical_representative(lam).images)
    ordered = unordered = 0
    for i in range(1, 2 * n + 1):
        ti = tau_point(i, n)
        for j in range(1, 2 * n + 1):
            if j == i or j == ti:
                continue
            tj = tau_point(j, n)
            images = tuple(_swap(sigma[_swap(x, ti, tj) - 1], i, j) for x in range(1, 2 * n + 1))
            if _classify(images, n).doubled_type == mu:
                ordered += 1
                unordered += i < j
    return ordered, unordered


def cj_matrix_element_direct(lam: Iterable[int], mu: Iterable[int]) -> int:
    """Half the number of ordered pairs carrying the canonical element of B~_lam into B~_mu."""
    ordered, _ = _direct_pair_counts(Partition.from_parts(lam), Partition.from_parts(mu))
    if ordered % 2:
        raise AssertionError(f"odd ordered-pair count {ordered} for {lam} -> {mu}")
    return ordered // 2


@lru_cache(maxsize=None)
def _cutjoin_iterate(n: int, m: int) -> PSeries:
    if m == 0:
        return p_monomial((1,) * n, Fraction(1, factorial(n)))
    return apply_twisted_cutjoin(_cutjoin_iterate(n, m - 1))


def hurwitz_by_cutjoin(m: int, lam: Iterable[int]) -> Fraction:
    """h~_{m,lam} as the coefficient of p_lam in (CJ~)^m (p_1^n / n!)."""
    if m < 0:
        raise DomainError(f"m must be non-negative, got {m}")
    lam = Partition.from_parts(lam)
    return _cutjoin_iterate(lam.weight, m).coeff(lam)


def generating_series(n_max: int, m_max: int) -> list[PSeries]:
    """Truncations of sum_m beta^m/m! (CJ~)^m exp(p_1): the beta^m coefficient for m = 0..m_max."""
    out = []
    current = exp_p1(n_max)
    for m in range(m_max + 1):
        out.append(current.scale(Fraction(1, factorial(m))))
        current = apply_twisted_cutjoin(current)
    return out


def generating_table(n_max: int, m_max: int) -> list[tuple[int, Partition, Fraction]]:
    """All h~_{m,lam} with 1 <= |lam| <= n_max and m <= m_max, ordered by m, |lam|, then lam."""
    if n_max < 0 or m_max < 0:
        raise DomainError("table bounds must be non-negative")
    return [
        (m, lam, hurwitz_by_cutjoin(m, lam))
        for m in range(m_max + 1)
        for n in range(1, n_max + 1)
        for lam in partitions_of(n)
    ]
