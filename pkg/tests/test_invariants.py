import random
from fractions import Fraction

import pytest

from binform.exactnum import alt_sign, binom_ext
from binform.forms import (
    BinaryForm,
    generic_form,
    mobius_act,
    monomial,
    random_form,
    random_unimodular,
    unstable_form,
)
from binform.invariants import (
    charpoly_invariant,
    charpoly_invariants,
    octavic_identity_report,
    p2_closed_form,
    shioda_invariant,
    trace_invariant,
    transvection_matrix,
)
from binform.polyring import MultiPoly
from binform.transvect import transvectant

X14 = BinaryForm([1, 0, 0, 0, 1])  # x1^4 + x2^4
X18 = BinaryForm([1] + [0] * 7 + [1])  # x1^8 + x2^8


def test_matrix_single_coefficient_form():
    m = transvection_matrix(monomial(4, 4), 2)  # F = x2^4
    entries = {(i, j): m[i, j] for i in range(3) for j in range(3) if m[i, j]}
    assert entries == {(2, 0): Fraction(1)}


def test_matrix_at_unstable_form():
    m = transvection_matrix(unstable_form(2), 2)
    assert m[1, 0] == Fraction(1, 2)
    assert m[2, 1] == Fraction(-1, 4)
    nonzero = [(i, j) for i in range(3) for j in range(3) if m[i, j]]
    assert nonzero == [(1, 0), (2, 1)]


def test_matrix_subdiagonal_closed_form_at_unstable():
    for k in (2, 4):
        m = transvection_matrix(unstable_form(k), k)
        for i in range(k + 1):
            for j in range(k + 1):
                expect = Fraction(0)
                if i == j + 1:
                    expect = Fraction(alt_sign(j) * binom_ext(k, j + 1), binom_ext(2 * k, k + 1))
                assert m[i, j] == expect


def test_matrix_generic_entry():
    m = transvection_matrix(generic_form(4), 2)
    f2 = MultiPoly.variable(tuple(f"f{i}" for i in range(5)), 2)
    assert m[0, 0] == f2 * Fraction(1, 6)


def test_matrix_columns_equal_direct_transvectants():
    # dual route: the closed-form entries against (F, x1^(n-j) x2^j)_k
    rng = random.Random(0)
    for d, n in ((4, 2), (4, 3), (8, 4)):
        f = random_form(d, rng)
        m = transvection_matrix(f, n)
        for j in range(n + 1):
            col = transvectant(f, monomial(n, j), d // 2)
            for i in range(n + 1):
                assert m[i, j] == col.coeffs[i]


def test_matrix_preconditions():
    with pytest.raises(ValueError):
        transvection_matrix(random_form(6, random.Random(0)), 3)  # k = 3 odd
    with pytest.raises(ValueError):
        transvection_matrix(X14, 1)  # n < k


def test_trace_invariant_values():
    assert trace_invariant(X14, 2, 2) == 2
    assert trace_invariant(X14, 2, 3) == 0
    for k in (2, 4):
        f = unstable_form(k)
        for p in range(1, k + 2):
            assert trace_invariant(f, k, p) == 0


def test_trace_linear_invariant_vanishes_symbolically():
    for d, n in ((4, 2), (4, 3), (8, 4)):
        assert trace_invariant(generic_form(d), n, 1) == 0


def test_trace_invariant_is_homogeneous_of_degree_p():
    for d, n, p in ((4, 2, 2), (4, 3, 3), (8, 4, 4)):
        value = trace_invariant(generic_form(d), n, p)
        assert {sum(exp) for exp in value.terms} == {p}


def test_charpoly_invariants():
    assert charpoly_invariants(unstable_form(2), 2) == [0, 0, 0, 1]
    rng = random.Random(1)
    f = random_form(4, rng)
    coeffs = charpoly_invariants(f, 2)
    assert coeffs[-1] == 1  # monic
    assert charpoly_invariant(f, 2, 0) == 1
    assert charpoly_invariant(f, 2, 1) == 0  # no linear invariant
    # Newton link against the power traces
    e = [alt_sign(i) * coeffs[3 - i] for i in range(4)]
    traces = [trace_invariant(f, 2, p) for p in (1, 2, 3)]
    for i in (1, 2, 3):
        assert i * e[i] == sum(alt_sign(j - 1) * e[i - j] * traces[j - 1] for j in range(1, i + 1))


def test_charpoly_needs_numeric_form():
    with pytest.raises(ValueError):
        charpoly_invariants(generic_form(4), 2)


def test_quartic_identities_symbolic():
    f = generic_form(4)
    assert trace_invariant(f, 2, 2) == transvectant(f, f, 4).constant()
    nested = transvectant(f, transvectant(f, f, 2), 4).constant()
    assert trace_invariant(f, 2, 3) == nested


def test_shioda_values():
    assert shioda_invariant(2, X18) == 2
    with pytest.raises(ValueError):
        shioda_invariant(2, X14)
    with pytest.raises(ValueError):
        shioda_invariant(6, X18)


def test_octavic_low_identities_symbolic():
    f = generic_form(8)
    assert trace_invariant(f, 4, 2) == shioda_invariant(2, f)
    assert trace_invariant(f, 4, 3) == shioda_invariant(3, f)


def test_octavic_report_all_pass():
    report = octavic_identity_report()
    assert len(report) == 10
    for entry in report:
        assert entry["pass"], entry["identity"]
        assert entry["lhs_sha256"] == entry["rhs_sha256"]


def test_p2_closed_form_constant_is_one_at_n_equals_k():
    rng = random.Random(2)
    for d in (4, 8):
        f = random_form(d, rng)
        k = d // 2
        assert p2_closed_form(f, k) == transvectant(f, f, d).constant()


def test_p2_closed_form_matches_trace_symbolically():
    f = generic_form(4)
    for n in (2, 3, 4):
        assert p2_closed_form(f, n) == trace_invariant(f, n, 2)


def test_p2_closed_form_vanishes_on_unstable():
    for n in (2, 3, 5):
        assert p2_closed_form(unstable_form(2), n) == 0


def test_cubic_trace_vanishes_for_quartics_at_n3():
    # the (k, n) = (2, 3) zero, symbolically over f0..f4
    assert trace_invariant(generic_form(4), 3, 3) == 0


def test_cubic_trace_proportionality():
    rng = random.Random(3)
    for k, n in ((2, 4), (2, 5), (4, 5), (4, 6)):
        for _ in range(5):
            f = random_form(2 * k, rng)
            g = random_form(2 * k, rng)
            det = trace_invariant(f, n, 3) * trace_invariant(g, k, 3) - trace_invariant(
                g, n, 3
            ) * trace_invariant(f, k, 3)
            assert det == 0


def test_invariance_under_group_action_spot():
    rng = random.Random(4)
    for d, n, p in ((4, 2, 2), (4, 2, 3), (8, 4, 2)):
        f = random_form(d, rng)
        for _ in range(3):
            g = random_unimodular(rng)
            assert trace_invariant(mobius_act(g, f), n, p) == trace_invariant(f, n, p)
    f8 = random_form(8, rng)
    base = {idx: shioda_invariant(idx, f8) for idx in (2, 3, 4, 5)}
    for _ in range(20):
        g = random_unimodular(rng)
        acted = mobius_act(g, f8)
        for idx in (2, 3, 4, 5):
            assert shioda_invariant(idx, acted) == base[idx]
