"""Jack polynomials as eigenvectors of the Laplace-Beltrami operator, in the power-sum basis.

The operator is not triangular on power sums, but it is triangular on the
monomial symmetric functions m_nu with respect to dominance order.  So the
eigenvector is found by back-substitution on m-coordinates and then rewritten
over power sums through the (also triangular) transition p_mu = sum L[mu,nu] m_nu.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable

from .errors import DegeneracyError, DomainError
from .partitions import Partition, RationalLike, hook_products, lb_eigenvalue, partitions_of, to_fraction
from .symfunc import PSeries, _lb_on_monomial, p_monomial

MAX_JACK_N = 12

Matrix = list[list[Fraction]]


@dataclass(frozen=True)
class JackPolynomial:
    partition: Partition
    alpha: Fraction
    expansion: PSeries

    @property
    def eigenvalue(self) -> Fraction:
        return lb_eigenvalue(self.partition, self.alpha)

    def coeff(self, mu: Iterable[int]) -> Fraction:
        return self.expansion.coeff(mu)


def _count_fillings(parts: tuple[int, ...], targets: tuple[int, ...]) -> int:
    """Number of maps parts -> boxes with box sums equal to ``targets``."""
    if not parts:
        return int(not any(targets))
    first, rest = parts[0], parts[1:]
    total = 0
    for k, room in enumerate(targets):
        if room >= first:
            total += _count_fillings(rest, targets[:k] + (room - first,) + targets[k + 1:])
    return total


@lru_cache(maxsize=None)
def p_to_m_matrix(n: int) -> tuple[tuple[Partition, ...], tuple[tuple[int, ...], ...]]:
    """L[mu][nu] = coefficient of m_nu in p_mu, both indexed by partitions_of(n)."""
    basis = tuple(partitions_of(n))
    rows = tuple(tuple(_count_fillings(tuple(mu), tuple(nu)) for nu in basis) for mu in basis)
    return basis, rows


def monomial_expansion(series: PSeries, n: int) -> dict[Partition, Fraction]:
    """Coefficients on m_nu of the degree-n part of ``series``."""
    basis, rows = p_to_m_matrix(n)
    index = {lam: k for k, lam in enumerate(basis)}
    out = {nu: Fraction(0) for nu in basis}
    for mu, c in series.homogeneous_part(n).items():
        for nu, entry in zip(basis, rows[index[mu]]):
            if entry:
                out[nu] += c * entry
    return {nu: v for nu, v in out.items() if v}


def _invert(rows: Matrix, basis: tuple[Partition, ...]) -> Matrix:
    """Exact Gauss-Jordan inverse."""
    size = len(rows)
    aug = [list(r) + [Fraction(int(i == j)) for j in range(size)] for i, r in enumerate(rows)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if aug[r][col]), None)
        if pivot is None:
            raise DegeneracyError(f"transition matrix in degree {sum(basis[0])} is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv_p = 1 / aug[col][col]
        aug[col] = [x * inv_p for x in aug[col]]
        for r in range(size):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[size:] for row in aug]


@lru_cache(maxsize=None)
def _m_to_p(n: int) -> tuple[tuple[Fraction, ...], ...]:
    basis, rows = p_to_m_matrix(n)
    inv = _invert([[Fraction(x) for x in r] for r in rows], basis)
    return tuple(tuple(r) for r in inv)


@lru_cache(maxsize=None)
def lb_matrix_monomial(n: int, alpha: Fraction) -> tuple[tuple[Fraction, ...], ...]:
    """D_m[nu][kappa]: coefficient of m_kappa in D_alpha(m_nu), via D_m = L^-1 D_p L."""
    basis, L = p_to_m_matrix(n)
    index = {lam: k for k, lam in enumerate(basis)}
    size = len(basis)
    dp = [[Fraction(0)] * size for _ in range(size)]
    for r, mu in enumerate(basis):
        for kappa, v in _lb_on_monomial(mu, alpha):
            dp[r][index[kappa]] += v
    linv = _m_to_p(n)
    dpl = [[sum((dp[r][k] * L[k][c] for k in range(size)), Fraction(0)) for c in range(size)] for r in range(size)]
    return tuple(
        tuple(sum((linv[r][k] * dpl[k][c] for k in range(size)), Fraction(0)) for c in range(size))
        for r in range(size)
    )


@lru_cache(maxsize=None)
def _jack_cached(lam: Partition, alpha: Fraction) -> JackPolynomial:
    n = lam.weight
    if n == 0:
        return JackPolynomial(lam, alpha, p_monomial(()))
    basis, _ = p_to_m_matrix(n)
    dm = lb_matrix_monomial(n, alpha)
    for r, nu in enumerate(basis):
        for c, kappa in enumerate(basis):
            if dm[r][c] and not nu.dominates(kappa):
                raise DegeneracyError(
                    f"Laplace-Beltrami operator is not dominance-triangular at alpha={alpha}: "
                    f"m_{tuple(nu)} -> m_{tuple(kappa)}"
                )
    ev = lb_eigenvalue(lam, alpha)
    top = basis.index(lam)
    if dm[top][top] != ev:
        raise DegeneracyError(f"diagonal entry {dm[top][top]} differs from e({tuple(lam)}, {alpha}) = {ev}")
    # c_kappa (e - D[kappa][kappa]) = sum_{nu above kappa} c_nu D[nu][kappa], walking down dominance
    coeffs = [Fraction(0)] * len(basis)
    coeffs[top] = Fraction(1)
    for c in range(top + 1, len(basis)):
        kappa = basis[c]
        if not lam.dominates(kappa):
            continue
        rhs = sum((coeffs[r] * dm[r][c] for r in range(top, c)), Fraction(0))
        gap = ev - dm[c][c]
        if gap == 0:
            raise DegeneracyError(
                f"e({tuple(lam)}, {alpha}) = e({tuple(kappa)}, {alpha}) = {ev}; the eigenvector is not unique"
            )
        coeffs[c] = rhs / gap
    linv = _m_to_p(n)
    pcoeffs = {
        mu: sum((coeffs[r] * linv[r][k] for r in range(len(basis)) if coeffs[r]), Fraction(0))
        for k, mu in enumerate(basis)
    }
    norm = pcoeffs[Partition((1,) * n)]
    if norm == 0:
        raise DegeneracyError(f"J_{tuple(lam)} has zero coefficient at p_1^{n}; cannot normalize")
    expansion = PSeries({mu: v / norm for mu, v in pcoeffs.items()})
    return JackPolynomial(lam, alpha, expansion)


def jack_polynomial(lam: Iterable[int], alpha: RationalLike) -> JackPolynomial:
    """J_lam^(alpha) over power sums, normalized so that [p_1^n] = 1."""
    lam = Partition.from_parts(lam)
    alpha = to_fraction(alpha)
    if alpha <= 0:
        raise DomainError(f"alpha must be positive, got {alpha}")
    if lam.weight > MAX_JACK_N:
        raise DomainError(f"Jack polynomials are limited to |lambda| <= {MAX_JACK_N}")
    return _jack_cached(lam, alpha)


def zonal(lam: Iterable[int]) -> JackPolynomial:
    return jack_polynomial(lam, 2)


def cauchy_sum(n: int, alpha: RationalLike) -> PSeries:
    """sum_{|lam|=n} alpha^n J_lam / (H_lam H'_lam)."""
    alpha = to_fraction(alpha)
    total = PSeries.zero()
    for lam in partitions_of(n):
        h, hp = hook_products(lam, alpha)
        total = total + jack_polynomial(lam, alpha).expansion.scale(alpha**n / (h * hp))
    return total


def verify_cauchy(n: int, alpha: RationalLike) -> bool:
    """Check that the degree-n Cauchy sum equals p_1^n / n! exactly."""
    return cauchy_sum(n, alpha) == p_monomial((1,) * n, Fraction(1, factorial(n)))


def hurwitz_by_zonal(m: int, lam: Iterable[int]) -> Fraction:
    """h~_{m,lam} = sum_mu e(mu,2)^m 2^n [p_lam] Z_mu / (H_mu(2) H'_mu(2))."""
    if m < 0:
        raise DomainError(f"m must be non-negative, got {m}")
    lam = Partition.from_parts(lam)
    n = lam.weight
    total = Fraction(0)
    for mu in partitions_of(n):
        c = zonal(mu).coeff(lam)
        if not c:
            continue
        h, hp = hook_products(mu, 2)
        total += lb_eigenvalue(mu, 2) ** m * 2**n * c / (h * hp)
    return total


def exponential_form(lam: Iterable[int]) -> dict[Fraction, Fraction]:
    """Map exponent e(mu,2) to its coefficient c in sum_m h~_{m,lam} beta^m/m! = sum c exp(e beta)."""
    lam = Partition.from_parts(lam)
    n = lam.weight
    out: dict[Fraction, Fraction] = {}
    for mu in partitions_of(n):
        c = zonal(mu).coeff(lam)
        if c:
            h, hp = hook_products(mu, 2)
            e = lb_eigenvalue(mu, 2)
            out[e] = out.get(e, Fraction(0)) + 2**n * c / (h * hp)
    return {e: c for e, c in out.items() if c}
