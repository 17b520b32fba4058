"""Tests for prime-field arithmetic against trial-division and counting oracles."""

import random

import pytest

from qexp.ff import Fp, arith, inv_mod, is_prime, legendre, require_prime, sqrt_mod

ODD_PRIMES = (3, 5, 7, 11, 13, 17, 29, 41, 97)


def _trial_division_prime(n: int) -> bool:
    """Decide primality by trial division."""
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def test_is_prime_matches_trial_division():
    """Exhaustive agreement with trial division below 2000."""
    for n in range(2000):
        assert is_prime(n) == _trial_division_prime(n), n


def test_is_prime_stress_values():
    """Known primes and Carmichael numbers far beyond the exhaustive range."""
    assert is_prime(2**61 - 1)
    assert is_prime(10**9 + 7)
    for carmichael in (561, 1105, 1729, 2465, 41041):
        assert not is_prime(carmichael)


def test_require_prime_validation():
    """Composites, oversized moduli, and non-int inputs are rejected."""
    assert require_prime(13) == 13
    with pytest.raises(ValueError):
        require_prime(1)
    with pytest.raises(ValueError):
        require_prime(100)
    with pytest.raises(ValueError):
        require_prime(2**61)
    with pytest.raises(TypeError):
        require_prime(True)
    with pytest.raises(TypeError):
        require_prime("7")


@pytest.mark.parametrize("p", (2,) + ODD_PRIMES)
def test_inv_mod_all_units(p):
    """Every unit times its inverse is 1; zero is rejected."""
    for a in range(1, p):
        inv = inv_mod(a, p)
        assert 0 < inv < p
        assert a * inv % p == 1
    assert inv_mod(-1, p) == inv_mod(p - 1, p)
    with pytest.raises(ZeroDivisionError):
        inv_mod(0, p)
    with pytest.raises(ZeroDivisionError):
        inv_mod(p, p)


@pytest.mark.parametrize("p", ODD_PRIMES)
def test_legendre_matches_square_counting(p):
    """The symbol is 1 exactly on nonzero squares, 0 at zero, -1 elsewhere."""
    squares = {x * x % p for x in range(1, p)}
    for a in range(p):
        expected = 0 if a == 0 else (1 if a in squares else -1)
        assert legendre(a, p) == expected, (a, p)


def test_legendre_multiplicative():
    """The symbol is multiplicative on every pair of residues."""
    for p in (7, 13):
        for a in range(p):
            for b in range(p):
                assert legendre(a * b, p) == legendre(a, p) * legendre(b, p)


def test_legendre_rejects_bad_moduli():
    """Even and composite moduli are rejected."""
    with pytest.raises(ValueError):
        legendre(1, 2)
    with pytest.raises(ValueError):
        legendre(2, 9)


@pytest.mark.parametrize("p", (2,) + ODD_PRIMES)
def test_sqrt_mod_complete(p):
    """Square roots exist exactly for residues and are the smaller of the pair."""
    for a in range(p):
        r = sqrt_mod(a, p)
        if p > 2 and legendre(a, p) == -1:
            assert r is None
        else:
            assert r is not None
            assert r * r % p == a
            assert r <= (p - r) % p or a == 0


def test_fp_construction_and_reduction():
    """Values reduce into 0..p-1 and composite moduli are rejected."""
    assert Fp(10, 7).value == 3
    assert Fp(-1, 7).value == 6
    with pytest.raises(ValueError):
        Fp(1, 6)


def test_fp_arithmetic_matches_integers():
    """Field operations agree with integer arithmetic mod p."""
    rng = random.Random(1)
    for _ in range(200):
        p = rng.choice(ODD_PRIMES)
        a, b = rng.randrange(p), rng.randrange(1, p)
        x, y = Fp(a, p), Fp(b, p)
        assert (x + y).value == (a + b) % p
        assert (x - y).value == (a - b) % p
        assert (x * y).value == (a * b) % p
        assert ((x / y) * y).value == a % p
        assert (-x).value == (-a) % p
        assert (x + b).value == (a + b) % p
        assert (b + x).value == (a + b) % p
        assert (b - x).value == (b - a) % p
        assert (b * x).value == (a * b) % p
        assert ((b / y) * y).value == b % p


def test_fp_pow_and_inverse():
    """Powers, negative powers, and inverses are consistent."""
    x = Fp(3, 7)
    assert (x**6).value == 1
    assert (x**-1).value == 5
    assert (x.inverse() * x).value == 1
    assert (x**-2).value == (x.inverse() ** 2).value


def test_fp_mixing_rules():
    """Mismatched moduli and non-integer operands are rejected."""
    with pytest.raises(ValueError):
        Fp(1, 3) + Fp(1, 5)
    with pytest.raises(TypeError):
        Fp(1, 3) + True
    with pytest.raises(TypeError):
        Fp(1, 3) + "x"


def test_fp_symbol_helpers():
    """Legendre and square-root helpers delegate correctly."""
    assert Fp(2, 7).legendre() == 1
    assert Fp(3, 7).legendre() == -1
    assert Fp(4, 7).sqrt().value == 2
    assert Fp(3, 5).sqrt() is None
    assert str(Fp(4, 7)) == "4 (mod 7)"


def test_arith_dispatch():
    """Named operations match the operators and unknown names are rejected."""
    a, b = Fp(3, 11), Fp(4, 11)
    assert arith(a, b, "add") == a + b
    assert arith(a, b, "sub") == a - b
    assert arith(a, b, "mul") == a * b
    assert arith(a, b, "div") == a / b
    with pytest.raises(ValueError):
        arith(a, b, "pow")
