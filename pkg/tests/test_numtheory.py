import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from padiknot.numtheory import (
    DomainError,
    factorize,
    is_prime,
    jacobi,
    legendre,
    primes_up_to,
    sqrt_mod_p,
    square_free_part,
)


def brute_squares(p):
    return {x * x % p for x in range(p)}


class TestIsPrime:
    def test_known_values(self):
        assert is_prime(8191)
        assert not is_prime(1)
        assert is_prime(521)
        assert is_prime(2)
        assert not is_prime(0)
        assert not is_prime(-7)

    def test_against_sieve(self):
        sieve = set(primes_up_to(5000))
        for n in range(5000):
            assert is_prime(n) == (n in sieve)

    def test_large_semiprime(self):
        p, q = 1000003, 1000033
        assert not is_prime(p * q)
        assert is_prime(p) and is_prime(q)


class TestFactorize:
    def test_examples(self):
        assert str(factorize(12)) == "2^2*3"
        assert factorize(1008).factors == ((2, 4), (3, 2), (7, 1))
        assert factorize(-5).sign == -1
        assert factorize(-5).factors == ((5, 1),)

    def test_unit_values(self):
        assert factorize(1).factors == ()
        assert factorize(-1).value() == -1

    def test_zero_rejected(self):
        with pytest.raises(DomainError):
            factorize(0)

    def test_roundtrip_range(self):
        rng = random.Random(7)
        samples = [rng.randrange(-10**6, 10**6) for _ in range(300)]
        samples += [1, -1, 2, -4, 999983, -999966, 2**20, 3**12]
        for n in samples:
            if n == 0:
                continue
            fact = factorize(n)
            assert fact.complete
            assert fact.value() == n
            primes = [p for p, _ in fact.factors]
            assert primes == sorted(primes)
            assert all(is_prime(p) for p in primes)

    def test_perfect_square_splits(self):
        n = 999983**2
        fact = factorize(n)
        assert fact.factors == ((999983, 2),)

    def test_budget_exhaustion_flags(self):
        # a semiprime with ~30-digit factors is far beyond a tiny budget
        p = 1000000000000000003
        n = p * (p + 6)
        fact = factorize(n, budget=16)
        assert not fact.complete
        assert fact.composite_cofactors
        assert fact.value() == n


class TestSquareFreePart:
    def test_examples(self):
        assert square_free_part(12) == 3
        assert square_free_part(1008) == 7
        assert square_free_part(-5) == -5
        assert square_free_part(-4) == -1
        assert square_free_part(1) == 1

    def test_zero_rejected(self):
        with pytest.raises(DomainError):
            square_free_part(0)

    @given(
        st.integers(min_value=-500, max_value=500).filter(lambda a: a != 0),
        st.integers(min_value=1, max_value=40),
    )
    @settings(max_examples=120, deadline=None)
    def test_square_factor_invariant(self, a, c):
        assert square_free_part(a * c * c) == square_free_part(a)

    def test_result_is_square_free(self):
        for a in list(range(-60, 0)) + list(range(1, 200)):
            r = square_free_part(a)
            for p, e in factorize(r).factors:
                assert e == 1


class TestLegendre:
    def test_examples(self):
        assert legendre(3, 13) == 1
        assert legendre(18, 7) == 1
        assert legendre(26, 13) == 0

    def test_rejects_bad_modulus(self):
        with pytest.raises(DomainError):
            legendre(3, 2)
        with pytest.raises(DomainError):
            legendre(3, 15)

    def test_euler_criterion(self):
        rng = random.Random(11)
        primes = [p for p in primes_up_to(10**4) if p > 2]
        for _ in range(400):
            p = rng.choice(primes)
            a = rng.randrange(-10**6, 10**6)
            expected = pow(a, (p - 1) // 2, p)
            sym = legendre(a, p)
            assert sym % p == expected

    def test_jacobi_bottom_validation(self):
        with pytest.raises(DomainError):
            jacobi(5, 12)


class TestSqrtModP:
    def test_examples(self):
        assert sqrt_mod_p(3, 11) == 5
        assert sqrt_mod_p(5, 7) is None
        assert sqrt_mod_p(0, 11) == 0
        assert sqrt_mod_p(0, 2) == 0
        assert sqrt_mod_p(3, 2) == 1

    def test_exhaustive_small_primes(self):
        for p in primes_up_to(500):
            if p == 2:
                continue
            squares = brute_squares(p)
            for a in range(p):
                root = sqrt_mod_p(a, p)
                if a == 0:
                    assert root == 0
                elif a in squares:
                    assert root is not None
                    assert root * root % p == a
                    assert root <= p - root  # smaller representative
                    assert legendre(a, p) == 1
                else:
                    assert root is None
                    assert legendre(a, p) == -1

    def test_tonelli_branch_large(self):
        # p = 1 mod 4 exercises the full Tonelli-Shanks loop
        p = 1000033
        assert p % 4 == 1
        for a in (2, 3, 5, 123456, 999999):
            root = sqrt_mod_p(a, p)
            if legendre(a, p) == 1:
                assert root is not None and root * root % p == a % p
            else:
                assert root is None
