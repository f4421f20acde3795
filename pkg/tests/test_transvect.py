import random
from fractions import Fraction
from math import comb, factorial

import pytest

from binform.exactnum import fact_product
from binform.forms import BinaryForm, generic_form, mobius_act, monomial, random_form, random_unimodular
from binform.polyring import MultiPoly
from binform.transvect import t_coeff, transvectant

X14 = BinaryForm([1, 0, 0, 0, 1])  # x1^4 + x2^4


# -- independent oracle: bivariate dict polynomials -------------------------

def _dmul(p, q):
    out = {}
    for (a, b), c in p.items():
        for (e, f), d in q.items():
            key = (a + e, b + f)
            out[key] = out.get(key, Fraction(0)) + c * d
    return {k: v for k, v in out.items() if v}


def _dd(p, var):
    out = {}
    for (a, b), c in p.items():
        if var == 0 and a:
            out[(a - 1, b)] = out.get((a - 1, b), Fraction(0)) + c * a
        if var == 1 and b:
            out[(a, b - 1)] = out.get((a, b - 1), Fraction(0)) + c * b
    return out


def _dively(p, n1, n2):
    for _ in range(n1):
        p = _dd(p, 0)
    for _ in range(n2):
        p = _dd(p, 1)
    return p


def _brute_transvectant(f: BinaryForm, g: BinaryForm, k: int) -> BinaryForm:
    m, n = f.degree, g.degree
    pf = {(m - i, i): c for i, c in enumerate(f.coeffs) if c}
    pg = {(n - j, j): c for j, c in enumerate(g.coeffs) if c}
    pre = Fraction(factorial(m - k) * factorial(n - k), factorial(m) * factorial(n))
    total = {}
    for l in range(k + 1):
        term = _dmul(_dively(dict(pf), k - l, l), _dively(dict(pg), l, k - l))
        for key, v in term.items():
            total[key] = total.get(key, Fraction(0)) + (-1) ** l * comb(k, l) * v
    order = m + n - 2 * k
    coeffs = [Fraction(0)] * (order + 1)
    for (_, b), v in total.items():
        coeffs[b] = pre * v
    return BinaryForm(coeffs)


def test_matches_brute_force_on_random_forms():
    rng = random.Random(0)
    for _ in range(20):
        m, n = rng.randint(1, 6), rng.randint(1, 6)
        k = rng.randint(0, min(m, n))
        f, g = random_form(m, rng), random_form(n, rng)
        assert transvectant(f, g, k) == _brute_transvectant(f, g, k)


@pytest.mark.parametrize("m,n,k", [(4, 3, 2), (5, 5, 5), (2, 6, 1)])
def test_pure_power_monomials(m, n, k):
    got = transvectant(monomial(m, 0), monomial(n, n), k)
    assert got == monomial(m + n - 2 * k, n - k)


def test_quartic_self_transvectants():
    assert transvectant(X14, X14, 4).constant() == 2
    expected = BinaryForm([0, 0, 2, 0, 0])
    assert transvectant(X14, X14, 2) == expected


def test_zeroth_transvectant_is_product():
    rng = random.Random(1)
    f, g = random_form(3, rng), random_form(2, rng)
    prod = transvectant(f, g, 0)
    assert prod.degree == 5
    assert t_coeff(0, 0, 7, 5, 0) == 1


def test_t_coeff_examples():
    assert t_coeff(2, 0, 4, 2, 2) == Fraction(1, 6)
    assert t_coeff(2, 2, 4, 2, 2) == Fraction(1, 6)
    # same value through the explicit factorial ratio
    assert t_coeff(2, 2, 4, 2, 2) == fact_product([2, 2, 2], [4, 2, 0])


def test_t_coeff_range_errors():
    with pytest.raises(ValueError):
        t_coeff(5, 0, 4, 2, 2)
    with pytest.raises(ValueError):
        t_coeff(0, 0, 4, 2, 3)
    with pytest.raises(ValueError):
        transvectant(X14, X14, 5)


def test_t_coeff_agrees_with_transvectant_on_monomials():
    for m in range(7):
        for n in range(7):
            for k in range(min(m, n) + 1):
                for i in range(m + 1):
                    for j in range(n + 1):
                        got = transvectant(monomial(m, i), monomial(n, j), k)
                        expect = [Fraction(0)] * (m + n - 2 * k + 1)
                        pos = i + j - k
                        if 0 <= pos <= m + n - 2 * k:
                            expect[pos] = t_coeff(i, j, m, n, k)
                        else:
                            assert t_coeff(i, j, m, n, k) == 0
                        assert got == BinaryForm(expect)


@pytest.mark.parametrize("k", [2, 4, 6])
def test_single_term_closed_form(k):
    # for the (2k, k, k) case the internal sum collapses to one term
    for i in range(k + 1):
        for j in range(k + 1):
            closed = (-1) ** j * fact_product([k, k - i + j, k + i - j], [2 * k, i, k - i])
            assert t_coeff(i - j + k, j, 2 * k, k, k) == closed


def test_symmetry_sign():
    rng = random.Random(2)
    for _ in range(15):
        m, n = rng.randint(1, 8), rng.randint(1, 8)
        k = rng.randint(0, min(m, n))
        f, g = random_form(m, rng), random_form(n, rng)
        assert transvectant(f, g, k) == (-1) ** k * transvectant(g, f, k)


@pytest.mark.parametrize("d", [2, 3, 4, 5, 6, 7, 8])
def test_odd_self_transvectants_vanish_symbolically(d):
    f = generic_form(d)
    for k in range(1, d + 1, 2):
        assert transvectant(f, f, k).is_zero()


def test_equivariance_under_the_group_action():
    rng = random.Random(3)
    f = random_form(5, rng)
    g_form = random_form(3, rng)
    for _ in range(10):
        u = random_unimodular(rng)
        for k in (0, 1, 2, 3):
            lhs = mobius_act(u, transvectant(f, g_form, k))
            rhs = transvectant(mobius_act(u, f), mobius_act(u, g_form), k)
            assert lhs == rhs


def test_symbolic_and_numeric_paths_agree():
    f = generic_form(4)
    sym = transvectant(f, f, 4).constant()
    assert isinstance(sym, MultiPoly)
    rng = random.Random(4)
    for _ in range(5):
        point = [Fraction(rng.randint(-5, 5)) for _ in range(5)]
        numeric = transvectant(BinaryForm(point), BinaryForm(point), 4).constant()
        assert sym.evaluate(point) == numeric
