import random

import pytest

from padiknot.knots import chebyshev_S
from padiknot.numtheory import DomainError
from padiknot.polynomials import (
    BiPoly,
    UniPoly,
    compose_uni_into_bi,
    reduce_mod_p,
    resultant,
    roots_mod_p,
    t_power_minus_one,
)


def random_unipoly(rng, max_deg=8, bound=100):
    deg = rng.randrange(0, max_deg + 1)
    coeffs = [rng.randrange(-bound, bound + 1) for _ in range(deg)]
    coeffs.append(rng.randrange(1, bound + 1) * rng.choice((1, -1)))
    return UniPoly(tuple(coeffs))


def power_sum_resultant(n, g):
    """Independent oracle for Res(t^n - 1, g) with quadratic g = c2 t^2 + c1 t + c0.

    Tracks q_j = c2^j (b1^j + b2^j) by the integer recurrence
    q_{j+1} = -c1 q_j - c0 c2 q_{j-1}; then the resultant is
    c0^n - q_n + c2^n.
    """
    c0, c1, c2 = g.coeffs
    q_prev, q = 2, -c1
    if n == 0:
        q = q_prev
    for _ in range(n - 1):
        q_prev, q = q, -c1 * q - c0 * c2 * q_prev
    return c0**n - q + c2**n


class TestUniPoly:
    def test_canonical_trim(self):
        assert UniPoly((1, 2, 0, 0)).coeffs == (1, 2)
        assert UniPoly((0, 0)).is_zero
        assert UniPoly(()).degree == -1

    def test_ring_ops(self):
        t = UniPoly.variable()
        assert ((t + 1) * (t - 1)).coeffs == (-1, 0, 1)
        f = UniPoly((3, -1, 2))
        assert (f + UniPoly.zero()) == f
        assert (f - f).is_zero
        assert (2 * f).coeffs == (6, -2, 4)
        assert (f**2) == f * f

    def test_eval_and_derivative(self):
        f = UniPoly((1, -3, 0, 2))
        assert f(2) == 1 - 6 + 16
        assert f.derivative().coeffs == (-3, 0, 6)
        assert f.evaluate_mod(10, 7) == f(10) % 7

    def test_str_ascending(self):
        assert str(UniPoly((1, -4, 3))) == "1 - 4*t + 3*t^2"
        assert str(UniPoly.zero()) == "0"
        assert str(UniPoly((0, 1), "x")) == "x"

    def test_variable_mismatch(self):
        with pytest.raises(DomainError):
            UniPoly((0, 1), "t") + UniPoly((0, 1), "x")
        # constants mix freely
        assert (UniPoly((5,), "t") + UniPoly((0, 1), "x")).var == "x"


class TestBiPoly:
    def test_square_of_sum(self):
        s = BiPoly.x() + BiPoly.y()
        assert (s * s) == BiPoly.from_terms({(2, 0): 1, (1, 1): 2, (0, 2): 1})

    def test_add_identity(self):
        f = BiPoly.from_terms({(2, 1): 3, (0, 0): -1})
        assert f + BiPoly.zero() == f
        assert (f - f).is_zero

    def test_specialize_and_eval(self):
        f = BiPoly.from_terms({(2, 0): 1, (0, 1): -1, (0, 0): -1})  # x^2 - y - 1
        assert f.specialize_y(2).coeffs == (-3, 0, 1)
        assert f.evaluate(4, 2) == 13
        assert f.evaluate_mod(4, 2, 13) == 0

    def test_shift_y(self):
        f = BiPoly.from_terms({(1, 2): 2, (0, 1): 1, (2, 0): -3})
        g = f.shift_y(2)
        for xv in range(-3, 4):
            for yv in range(-3, 4):
                assert g.evaluate(xv, yv) == f.evaluate(xv, yv + 2)

    def test_str_descending(self):
        f = BiPoly.from_terms({(2, 0): 1, (0, 1): -1, (0, 0): -1})
        assert str(f) == "x^2 - y - 1"


class TestCompose:
    def test_outer_square(self):
        outer = UniPoly((0, 0, 1), "z")
        inner = BiPoly.x() + BiPoly.y()
        assert compose_uni_into_bi(outer, inner) == inner * inner

    def test_identity_outer(self):
        inner = BiPoly.from_terms({(1, 1): 4, (0, 0): -2})
        assert compose_uni_into_bi(chebyshev_S(1), inner) == inner

    def test_constant_inner(self):
        two = BiPoly.constant(2)
        out = compose_uni_into_bi(chebyshev_S(2), two)
        assert out == BiPoly.constant(3)

    def test_chebyshev_recurrence_through_composition(self):
        inner = BiPoly.from_terms({(1, 0): 1, (0, 1): 1, (0, 0): -1})
        for n in range(-3, 8):
            lhs = compose_uni_into_bi(chebyshev_S(n + 1), inner)
            rhs = inner * compose_uni_into_bi(chebyshev_S(n), inner) - compose_uni_into_bi(
                chebyshev_S(n - 1), inner
            )
            assert lhs == rhs


class TestResultant:
    def test_linear_factor(self):
        rng = random.Random(3)
        for _ in range(40):
            a = rng.randrange(-30, 31)
            g = random_unipoly(rng, max_deg=5, bound=30)
            assert resultant(UniPoly((-a, 1)), g) == g(a)

    def test_cyclic_cubic_against_power_sums(self):
        g = UniPoly((-1, 3, -1))
        value = resultant(t_power_minus_one(3), g)
        assert value == power_sum_resultant(3, g)
        assert abs(value) == 16

    def test_power_sum_oracle_sweep(self):
        rng = random.Random(5)
        for _ in range(25):
            c2 = rng.choice([c for c in range(-9, 10) if c])
            g = UniPoly((rng.randrange(-9, 10), rng.randrange(-9, 10), c2))
            for n in (1, 2, 3, 5, 8):
                assert resultant(t_power_minus_one(n), g) == power_sum_resultant(n, g)

    def test_quintic_against_genus_two_alexander(self):
        delta = UniPoly((-1, 3, -3, 3, -1))
        assert abs(resultant(t_power_minus_one(5), delta)) == 16

    def test_antisymmetry_sign_law(self):
        rng = random.Random(9)
        for _ in range(60):
            f = random_unipoly(rng)
            g = random_unipoly(rng)
            sign = -1 if (f.degree * g.degree) % 2 else 1
            assert resultant(f, g) == sign * resultant(g, f)

    def test_multiplicativity(self):
        rng = random.Random(13)
        for _ in range(40):
            f = random_unipoly(rng, max_deg=4, bound=12)
            g = random_unipoly(rng, max_deg=3, bound=12)
            h = random_unipoly(rng, max_deg=3, bound=12)
            assert resultant(f, g * h) == resultant(f, g) * resultant(f, h)

    def test_common_root_vanishes(self):
        f = UniPoly((-1, 1)) * UniPoly((2, 1))
        g = UniPoly((-1, 1)) * UniPoly((5, 3))
        assert resultant(f, g) == 0

    def test_degenerate_inputs(self):
        with pytest.raises(DomainError):
            resultant(UniPoly.zero(), UniPoly.zero())
        assert resultant(UniPoly.zero(), UniPoly((1, 1))) == 0
        assert resultant(UniPoly((3,)), UniPoly((1, 2, 1))) == 9
        assert resultant(UniPoly((1, 2, 1)), UniPoly((3,))) == 9


class TestReduceModP:
    def test_trivial_reductions(self):
        assert reduce_mod_p(UniPoly((0, 0, 0)), 5).is_zero
        assert reduce_mod_p(UniPoly((7, 14, 21)), 7).is_zero
        f = UniPoly((1, 2, 3))
        assert reduce_mod_p(f, 5) == f
        g = BiPoly.from_terms({(1, 1): 10, (0, 0): 3})
        assert reduce_mod_p(g, 5) == BiPoly.constant(3)


class TestRootsModP:
    def test_examples(self):
        assert roots_mod_p(UniPoly((-3, 0, 1), "x"), 11) == [(5, True), (6, True)]
        double = UniPoly((1, -2, 1), "x")  # (x-1)^2
        assert roots_mod_p(double, 5) == [(1, False)]
        assert roots_mod_p(UniPoly((1, 0, 1), "x"), 7) == []

    def test_agreement_with_evaluation(self):
        rng = random.Random(17)
        for p in (3, 5, 11, 13, 31):
            f = random_unipoly(rng, max_deg=6, bound=20)
            if f.reduce_mod(p).is_zero:
                continue
            roots = {r for r, _ in roots_mod_p(f, p)}
            for x in range(p):
                assert (f.evaluate_mod(x, p) == 0) == (x in roots)

    def test_identically_zero_rejected(self):
        with pytest.raises(DomainError):
            roots_mod_p(UniPoly((5, 10)), 5)

    def test_cap_enforced(self):
        with pytest.raises(DomainError):
            roots_mod_p(UniPoly((1, 1)), 1000003)


class TestTPowerMinusOne:
    def test_small(self):
        assert t_power_minus_one(1).coeffs == (-1, 1)
        assert t_power_minus_one(2).coeffs == (-1, 0, 1)
        assert t_power_minus_one(5).coeffs == (-1, 0, 0, 0, 0, 1)
        with pytest.raises(DomainError):
            t_power_minus_one(0)
