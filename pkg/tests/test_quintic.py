"""Tests for the square-quadric pencil, the C invariant, the projective counts
feeding the closed form, the exponential-sum dispatch, and the worked family."""

import itertools
import random
from fractions import Fraction

import pytest

from qexp.apolar import catalecticant_rank, waring_type
from qexp.ff import inv_mod, legendre
from qexp.forms import BinaryForm, DualForm, multiply, pair
from qexp.oracle import exp_sum_oracle
from qexp.quintic import (
    apolar_square_quadrics,
    c_value,
    example_family,
    exp_sum,
    n_tilde_counts,
    sign_variant_discriminants,
)


def _all_duals(p):
    for coeffs in itertools.product(range(p), repeat=6):
        yield DualForm(p, 5, coeffs)


def _random_dual(rng, p):
    return DualForm(p, 5, tuple(rng.randrange(p) for _ in range(6)))


def _projective_forms(p, degree):
    out = []
    for coeffs in itertools.product(range(p), repeat=degree + 1):
        if any(coeffs) and next(c for c in coeffs if c) == 1:
            out.append(BinaryForm(p, degree, coeffs))
    return out


def _brute_square_quadrics(w):
    """Projective quadrics whose square pairs to zero against w, lex order."""
    return [
        q.coeffs
        for q in _projective_forms(w.p, 2)
        if pair(w, multiply(q, q)).is_zero
    ]


def test_apolar_square_quadrics_match_brute_force():
    """The pencil solver finds exactly the quadrics with apolar squares."""
    rng = random.Random(21)
    cases = list(_all_duals(2)) + list(_all_duals(3))
    cases += [_random_dual(rng, p) for p in (5, 7, 11) for _ in range(25)]
    for w in cases:
        got = [q.coeffs for q in apolar_square_quadrics(w)]
        assert got == sorted(_brute_square_quadrics(w))
        assert got == sorted(got)
    with pytest.raises(ValueError):
        apolar_square_quadrics(DualForm(7, 4, (1, 0, 0, 0, 0)))


def test_c_value_requires_rank_at_least_two():
    """The invariant is undefined for the zero vector and rank-1 vectors."""
    with pytest.raises(ValueError):
        c_value(DualForm(7, 5, (0,) * 6))
    with pytest.raises(ValueError):
        c_value(DualForm(7, 5, (0, 0, 0, 0, 0, 1)))
    with pytest.raises(ValueError):
        c_value(DualForm(7, 4, (1, 0, 0, 0, 0)))


def test_c_value_worked_cases():
    """Hand-verified invariant values for specific vectors."""
    cases = [
        ((0, 0, 0, 1, 1, 5), 7, "1^3", 0),
        ((0, 0, 0, 1, 1, 0), 7, "1^3", -1),
        ((0, 0, 0, 1, 1, 1), 7, "1^3", 1),
        ((18, 0, 0, 0, 1, 2), 19, "1^2,1", -3),
        ((6, 0, 0, 0, 1, 3), 7, "1^2,1", -2),
        ((10, 0, 0, 0, 1, 4), 11, "1^2,1", 0),
        ((6, 0, 0, 0, 1, 1), 7, "1^2,1", 1),
    ]
    for coeffs, p, label, expected in cases:
        w = DualForm(p, 5, coeffs)
        assert waring_type(w).label() == label
        assert c_value(w) == expected


def _brute_n_tilde(w):
    """Recount the three decomposition counts by direct pairing."""
    p = w.p
    lines = _projective_forms(p, 1)
    lin = sum(1 for l in lines if pair(w, multiply(l, l)).is_zero)
    sq = len(_brute_square_quadrics(w))
    pairs = 0
    for l1 in lines:
        sq1 = multiply(l1, l1)
        for l2 in lines:
            if pair(w, multiply(sq1, multiply(l2, l2))).is_zero:
                pairs += 1
    return lin, sq, pairs


def test_n_tilde_counts_match_brute_force():
    """Square-line, square-quadric, and square-pair counts agree pointwise."""
    rng = random.Random(22)
    cases = list(_all_duals(2)) + [_random_dual(rng, p) for p in (3, 5) for _ in range(20)]
    for w in cases:
        counts = n_tilde_counts(w)
        triple = (counts.square_lines, counts.square_quadrics, counts.square_line_pairs)
        assert triple == _brute_n_tilde(w)
    with pytest.raises(ValueError):
        n_tilde_counts(DualForm(3, 4, (1, 0, 0, 0, 0)))


def test_n_tilde_counts_zero_vector():
    """The zero vector sees every line, quadric, and ordered pair."""
    for p in (2, 3, 5):
        counts = n_tilde_counts(DualForm(p, 5, (0,) * 6))
        assert counts.square_lines == p + 1
        assert counts.square_quadrics == p * p + p + 1
        assert counts.square_line_pairs == (p + 1) ** 2


def test_exp_sum_zero_vector():
    """The trivial character contributes p^5 + p^4 - p^3 exactly."""
    for p in (2, 3, 5, 7):
        value = exp_sum(DualForm(p, 5, (0,) * 6))
        assert value.value == p**5 + p**4 - p**3
        assert value.waring.label() == "0"
        assert value.c_value is None
        assert value.power_form() == "p^5 + p^4 - p^3"
        assert value.phi_hat == Fraction(p**5 + p**4 - p**3, p**6)


def test_exp_sum_rank_low_cases():
    """Rank-1 and pure-square vectors both give p^4 - p^3."""
    for p in (2, 3, 7):
        rank_one = exp_sum(DualForm(p, 5, (0, 0, 0, 0, 0, 1)))
        assert rank_one.value == p**4 - p**3
        assert rank_one.waring.label() == "1"
        assert rank_one.c_value is None
        square = exp_sum(DualForm(p, 5, (0, 1, 0, 0, 0, 0)))
        assert square.value == p**4 - p**3
        assert square.waring.label() == "1^2"
        assert square.power_form() == "p^4 - p^3"


def test_exp_sum_generic_case_and_phi_hat():
    """A rank-3 vector evaluates to C * p^2 and scales to the normalized sum."""
    w = DualForm(7, 5, (6, 0, 0, 0, 1, 3))
    value = exp_sum(w)
    assert catalecticant_rank(w) == 3
    assert value.c_value == -2
    assert value.value == -2 * 49 == -98
    assert value.power_form() == "-2 * p^2"
    assert value.phi_hat == Fraction(-98, 7**6)
    assert exp_sum_oracle(w).value == -98
    with pytest.raises(ValueError):
        exp_sum(DualForm(7, 4, (1, 0, 0, 0, 0)))


def test_example_family_construction():
    """Diagonal parameters map to inverse squares and the known C at 337."""
    p = 337
    w = example_family(1, 2, 3, p)
    a = inv_mod(1, p)
    b = inv_mod(4, p)
    c = inv_mod(9, p)
    assert w.coeffs == tuple(
        (x - c) % p for x in (a, 0, 0, 0, 0, b)
    )
    assert exp_sum(w).c_value == -4
    with pytest.raises(ValueError):
        example_family(1, 2, 3, 2)
    with pytest.raises(ValueError):
        example_family(1, 2, 7, 7)


def test_sign_variant_discriminants():
    """Hand-computed integer discriminants for the first parameter triple."""
    assert sign_variant_discriminants(1, 2, 3) == (-8, 28, 24, 12)
    # D is symmetric in its arguments, so swapping the second and third
    # parameters permutes the four variants among themselves.
    d1 = set(sign_variant_discriminants(1, 2, 5))
    d2 = set(sign_variant_discriminants(1, 5, 2))
    assert d1 == d2


def test_family_c_matches_symbol_sum():
    """C equals minus the sum of the four sign-variant Legendre symbols."""
    rng = random.Random(23)
    primes = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 71, 97]
    trials = 0
    while trials < 50:
        p = rng.choice(primes)
        alpha, beta, gamma = (rng.randrange(1, p) for _ in range(3))
        w = example_family(alpha, beta, gamma, p)
        try:
            c = c_value(w)
        except ValueError:
            continue  # degenerate parameters collapsed the rank below 2
        if len(apolar_square_quadrics(w)) != 4:
            continue  # sign variants coincide; the four-term identity needs all four
        discs = sign_variant_discriminants(alpha, beta, gamma)
        assert c == -sum(legendre(d, p) for d in discs)
        trials += 1
