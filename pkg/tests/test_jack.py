from __future__ import annotations

from fractions import Fraction
from math import factorial

import pytest

from twisted_hurwitz.errors import DegeneracyError, DomainError
from twisted_hurwitz.hurwitz import enumerate_hurwitz
from twisted_hurwitz.jack import (
    _jack_cached,
    exponential_form,
    hurwitz_by_zonal,
    jack_polynomial,
    monomial_expansion,
    verify_cauchy,
    zonal,
)
from twisted_hurwitz.partitions import Partition, hook_products, lb_eigenvalue, partitions_of
from twisted_hurwitz.symfunc import PSeries, apply_laplace_beltrami, hurwitz_by_cutjoin, p_monomial

ALPHAS = [1, 2, 3, Fraction(1, 2)]


def z_factor(mu):
    out = 1
    for k in set(mu):
        a = mu.count(k)
        out *= k**a * factorial(a)
    return out


def mn_character(lam, mu):
    """Murnaghan-Nakayama rule on beta-sets: chi^lam at cycle type mu."""
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    k = len(lam)
    beta = {lam[i] + k - 1 - i for i in range(k)}
    total = 0
    for b in beta:
        if b - r >= 0 and b - r not in beta:
            sign = (-1) ** sum(1 for c in beta if b - r < c < b)
            new_beta = sorted((beta - {b}) | {b - r}, reverse=True)
            parts = [x - (k - 1 - i) for i, x in enumerate(new_beta)]
            total += sign * mn_character(tuple(p for p in parts if p), rest)
    return total


def schur_normalized(lam):
    """s_lam in power sums scaled so that [p_1^n] = 1 (equals J^(1)_lam)."""
    n = sum(lam)
    coeffs = {mu: Fraction(mn_character(tuple(lam), tuple(mu)), z_factor(mu)) for mu in partitions_of(n)}
    top = coeffs[Partition((1,) * n)]
    return PSeries({mu: c / top for mu, c in coeffs.items()})


REFERENCE_ZONAL = {
    (1,): ({(1,): 1}, 2),
    (1, 1): ({(1, 1): 1, (2,): -1}, 12),
    (2,): ({(1, 1): 1, (2,): 2}, 24),
    (1, 1, 1): ({(1, 1, 1): 1, (2, 1): -3, (3,): 2}, 144),
    (2, 1): ({(1, 1, 1): 1, (2, 1): 1, (3,): -2}, 80),
    (3,): ({(1, 1, 1): 1, (2, 1): 6, (3,): 8}, 720),
}


@pytest.mark.parametrize("lam", list(REFERENCE_ZONAL))
def test_zonal_table(lam):
    series, hooks = REFERENCE_ZONAL[lam]
    assert zonal(lam).expansion == PSeries(series)
    h, hp = hook_products(Partition(lam), 2)
    assert h * hp == hooks


def test_jack_examples():
    for alpha in ALPHAS:
        assert jack_polynomial((1,), alpha).expansion == p_monomial((1,))
    assert jack_polynomial((2, 1), 2).expansion == PSeries({(1, 1, 1): 1, (2, 1): 1, (3,): -2})
    assert jack_polynomial((), 2).expansion == p_monomial(())


@pytest.mark.parametrize("n", range(0, 8))
@pytest.mark.parametrize("alpha", ALPHAS)
def test_eigenvector_and_normalization(n, alpha):
    for lam in partitions_of(n):
        j = jack_polynomial(lam, alpha)
        assert j.coeff((1,) * n) == 1
        assert j.eigenvalue == lb_eigenvalue(lam, alpha)
        assert apply_laplace_beltrami(alpha, j.expansion) == j.expansion.scale(j.eigenvalue)
        assert j.expansion.degrees() <= {n}


@pytest.mark.parametrize("n", range(1, 8))
def test_alpha_one_is_schur(n):
    for lam in partitions_of(n):
        assert jack_polynomial(lam, 1).expansion == schur_normalized(lam)


@pytest.mark.parametrize("n", range(1, 8))
@pytest.mark.parametrize("alpha", [1, 2, Fraction(1, 2)])
def test_monomial_dominance_support(n, alpha):
    for lam in partitions_of(n):
        m_coeffs = monomial_expansion(jack_polynomial(lam, alpha).expansion, n)
        for nu, c in m_coeffs.items():
            if c:
                assert lam.dominates(nu)


def test_power_sum_support_is_not_dominance_triangular():
    # p_(2) appears in Z_(1,1) although (2) is not dominated by (1,1)
    assert zonal((1, 1)).coeff((2,)) == -1
    assert not Partition((1, 1)).dominates(Partition((2,)))


@pytest.mark.parametrize("n", range(1, 8))
@pytest.mark.parametrize("alpha", [1, 2, Fraction(1, 2)])
def test_cauchy_identity(n, alpha):
    assert verify_cauchy(n, alpha)


def test_cauchy_by_hand_n3():
    total = sum((zonal(lam).expansion.scale(Fraction(8, hooks)) for lam, (_, hooks) in REFERENCE_ZONAL.items() if sum(lam) == 3), PSeries.zero())
    assert total == p_monomial((1, 1, 1), Fraction(1, 6))


def test_hurwitz_by_zonal_examples():
    for n in range(1, 6):
        assert hurwitz_by_zonal(0, (1,) * n) == Fraction(1, factorial(n))
    assert hurwitz_by_zonal(2, (2, 1)) == 4
    assert hurwitz_by_zonal(1, (2,)) == 2


@pytest.mark.parametrize("n", range(1, 7))
def test_zonal_matches_cutjoin(n):
    for m in range(7):
        for lam in partitions_of(n):
            assert hurwitz_by_zonal(m, lam) == hurwitz_by_cutjoin(m, lam)


@pytest.mark.parametrize("n", range(1, 5))
def test_zonal_matches_enumeration(n):
    for m in range(4):
        values = enumerate_hurwitz(n, m).values
        assert {lam: hurwitz_by_zonal(m, lam) for lam in partitions_of(n)} == values


REFERENCE_EXPONENTIAL = {
    (1, 1): {-2: Fraction(2, 6), 4: Fraction(1, 6)},
    (2,): {-2: Fraction(-1, 3), 4: Fraction(1, 3)},
    (1, 1, 1): {2: Fraction(9, 90), 12: Fraction(1, 90), -6: Fraction(5, 90)},
    (2, 1): {12: Fraction(2, 30), 2: Fraction(3, 30), -6: Fraction(-5, 30)},
    (3,): {12: Fraction(4, 45), 2: Fraction(-9, 45), -6: Fraction(5, 45)},
}


@pytest.mark.parametrize("lam", list(REFERENCE_EXPONENTIAL))
def test_exponential_form(lam):
    form = exponential_form(lam)
    assert form == REFERENCE_EXPONENTIAL[lam]
    for m in range(7):
        assert sum(c * e**m for e, c in form.items()) == hurwitz_by_zonal(m, lam)


def test_input_errors():
    with pytest.raises(DomainError):
        jack_polynomial((2,), 0)
    with pytest.raises(DomainError):
        jack_polynomial((2,), -1)
    with pytest.raises(DomainError):
        jack_polynomial((13,), 1)
    with pytest.raises(DomainError):
        hurwitz_by_zonal(-1, (1,))


def test_degeneracy_is_reported():
    # at alpha = -1 the eigenvalues of (2) and (1,1) coincide
    assert lb_eigenvalue((2,), -1) == lb_eigenvalue((1, 1), -1)
    with pytest.raises(DegeneracyError):
        _jack_cached(Partition((2,)), Fraction(-1))
