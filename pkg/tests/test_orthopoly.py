"""Orthogonal-polynomial evaluators: cross-path agreement and closed forms."""

import itertools
import random
from fractions import Fraction

import pytest

from qdetlab import I, ONE, PoleError, ZERO, GaussianRational
from qdetlab.orthopoly import (
    AWParams,
    al_salam_chihara,
    andrews_rhs,
    askey_wilson,
    aw_params,
    continuous_hahn,
    mehta_wang_d,
    nishizawa_d,
    wilson,
)
from qdetlab.qseries import factorial, hyper_f, rising_factorial


def frac(num, den=1):
    return GaussianRational(Fraction(num, den))


def rand_scalar(rng):
    return frac(rng.choice([k for k in range(-9, 10) if k != 0]), rng.randint(1, 9))


def rand_q(rng):
    while True:
        v = rand_scalar(rng)
        if v != ONE and v != -ONE:
            return v


def rand_aw(rng):
    return aw_params(*(rand_scalar(rng) for _ in range(4)), rand_q(rng), rand_scalar(rng))


class TestAskeyWilson:
    def test_degree_zero_and_minus_one(self):
        p = rand_aw(random.Random(1))
        assert askey_wilson(0, p, "recurrence") == ONE
        assert askey_wilson(0, p, "hypergeometric") == ONE
        assert askey_wilson(-1, p, "recurrence") == ZERO

    def test_methods_agree(self):
        rng = random.Random(2)
        done = 0
        while done < 10:
            p = rand_aw(rng)
            n = rng.randint(1, 8)
            try:
                rec = askey_wilson(n, p, "recurrence")
                hyp = askey_wilson(n, p, "hypergeometric")
            except PoleError:
                continue
            assert rec == hyp
            done += 1

    def test_parameter_permutation_symmetry(self):
        rng = random.Random(3)
        done = 0
        while done < 3:
            p = rand_aw(rng)
            n = rng.randint(1, 4)
            try:
                values = {
                    askey_wilson(n, AWParams(a, b, c, d, p.q, p.x), "hypergeometric")
                    for a, b, c, d in itertools.permutations((p.a, p.b, p.c, p.d))
                }
            except PoleError:
                continue
            assert len(values) == 1
            done += 1

    def test_complex_parameters(self):
        rng = random.Random(4)
        a = rand_scalar(rng) * I
        p = AWParams(a, -a, rand_scalar(rng), rand_q(rng), rand_q(rng), rand_scalar(rng))
        assert askey_wilson(3, p, "recurrence") == askey_wilson(3, p, "hypergeometric")

    def test_guard_rejects_vanishing_division(self):
        # ab q^{n-1} = 1 at n = 1 makes the printed middle-coefficient division vanish
        p = aw_params(2, frac(1, 2), 3, 5, frac(1, 7), 1)
        with pytest.raises(PoleError):
            askey_wilson(2, p, "recurrence")


class TestAlSalamChihara:
    def test_degree_zero(self):
        assert al_salam_chihara(0, 1, 2, 3, frac(1, 2)) == ONE

    def test_degree_one_recurrence_step(self):
        x, a, b = frac(5, 7), frac(2, 3), frac(3)
        q = frac(2)
        assert al_salam_chihara(1, x, a, b, q) == 2 * x - (a + b)

    def test_three_paths_agree(self):
        rng = random.Random(5)
        done = 0
        while done < 8:
            x, a, b, q = rand_scalar(rng), rand_scalar(rng), rand_scalar(rng), rand_q(rng)
            n = rng.randint(1, 4)
            try:
                paths = {
                    al_salam_chihara(n, x, a, b, q, m)
                    for m in ("recurrence", "hypergeometric", "aw_special")
                }
            except PoleError:
                continue
            assert len(paths) == 1
            done += 1

    def test_equals_askey_wilson_with_trailing_zeros(self):
        rng = random.Random(6)
        x, a, b, q = rand_scalar(rng), rand_scalar(rng), rand_scalar(rng), rand_q(rng)
        for n in range(6):
            assert al_salam_chihara(n, x, a, b, q) == askey_wilson(
                n, AWParams(a, b, ZERO, ZERO, q, x), "recurrence"
            )


class TestAndrews:
    def test_odd_degree_vanishes(self):
        assert andrews_rhs(1, frac(2), frac(3), frac(5)) == ZERO
        assert andrews_rhs(5, frac(2), frac(3), frac(5)) == ZERO

    def test_empty_product(self):
        assert andrews_rhs(0, frac(2), frac(3), frac(5)) == ONE

    def test_closed_form_at_two(self):
        a, b, q = frac(2), frac(3), frac(5)
        expected = -(ONE - q) * (ONE + a * a) * (ONE + b * b) * (ONE - a * a * b * b * q * q)
        assert andrews_rhs(2, a, b, q) == expected

    def test_matches_askey_wilson_at_origin(self):
        rng = random.Random(7)
        done = 0
        while done < 6:
            a, b, q = rand_scalar(rng), rand_scalar(rng), rand_q(rng)
            n = rng.randint(0, 8)
            try:
                value = askey_wilson(n, AWParams(a, -a, b, -b, q, ZERO), "hypergeometric")
            except PoleError:
                continue
            assert value == andrews_rhs(n, a, b, q)
            done += 1


class TestContinuousHahn:
    def test_degree_zero(self):
        assert continuous_hahn(0, frac(1, 3), frac(1), frac(2), frac(3), frac(4)) == ONE

    def test_degree_one_two_term(self):
        t, a, b, c, d = frac(1, 3), frac(1, 2), frac(2), frac(3), frac(5, 2)
        expected = I * (a + c) * (a + d) * (
            ONE - (a + b + c + d) * (a + t) / ((a + c) * (a + d))
        )
        assert continuous_hahn(1, t, a, b, c, d) == expected

    def test_degree_two_against_term_sum(self):
        t, a, b, c, d = frac(2, 3), frac(1, 4), frac(3, 2), frac(2), frac(5, 3)
        n = 2
        total = ZERO
        for k in range(n + 1):
            total = total + (
                rising_factorial(-n, k)
                * rising_factorial(a + b + c + d + n - 1, k)
                * rising_factorial(a + t, k)
                / (
                    rising_factorial(a + c, k)
                    * rising_factorial(a + d, k)
                    * factorial(k)
                )
            )
        pre = I**n * rising_factorial(a + c, n) * rising_factorial(a + d, n) / factorial(n)
        assert continuous_hahn(n, t, a, b, c, d) == pre * total


class TestWilson:
    def test_degree_zero(self):
        assert wilson(0, frac(1, 2), frac(1), frac(2), frac(3), frac(4)) == ONE

    def test_degree_one_two_term(self):
        t, al, be, ga, de = frac(1, 5), frac(1, 2), frac(2), frac(3), frac(4)
        pre = (al + be) * (al + ga) * (al + de)
        expected = pre * (
            ONE
            - (al + be + ga + de) * (al + t) * (al - t) / ((al + be) * (al + ga) * (al + de))
        )
        assert wilson(1, t, al, be, ga, de) == expected

    def test_root_sign_immaterial(self):
        rng = random.Random(8)
        done = 0
        while done < 4:
            t, al, be, ga, de = (rand_scalar(rng) for _ in range(5))
            try:
                for n in range(4):
                    assert wilson(n, t, al, be, ga, de) == wilson(n, -t, al, be, ga, de)
            except PoleError:
                continue
            done += 1

    def test_argument_zero_degenerates_to_squared_pair(self):
        al, be, ga, de = frac(1, 2), frac(2), frac(3), frac(4)
        n = 3
        direct = wilson(n, ZERO, al, be, ga, de)
        pre = (
            rising_factorial(al + be, n)
            * rising_factorial(al + ga, n)
            * rising_factorial(al + de, n)
        )
        oracle = pre * hyper_f(
            [-n, al + be + ga + de + n - 1, al, al],
            [al + be, al + ga, al + de],
            1,
        )
        assert direct == oracle


class TestMehtaWangD:
    def test_first_values(self):
        a, b = frac(2, 3), frac(5, 7)
        assert mehta_wang_d(-1, a, b) == ZERO
        assert mehta_wang_d(0, a, b) == ONE
        assert mehta_wang_d(1, a, b) == a
        assert mehta_wang_d(2, a, b) == a * a + b

    def test_sum_path_low_orders(self):
        a, b = frac(3, 4), frac(7, 2)
        assert mehta_wang_d(1, a, b, "sum") == a
        assert mehta_wang_d(0, a, b, "sum") == ONE

    def test_paths_agree_to_ten(self):
        rng = random.Random(9)
        for _ in range(6):
            a, b = rand_scalar(rng), rand_scalar(rng)
            for n in range(11):
                assert mehta_wang_d(n, a, b, "recurrence") == mehta_wang_d(n, a, b, "sum")


class TestNishizawaD:
    def test_first_values(self):
        s, t, q = frac(2, 3), frac(3, 5), frac(2)
        assert nishizawa_d(-1, s, t, q) == ZERO
        assert nishizawa_d(0, s, t, q) == ONE
        s2 = s * s
        assert nishizawa_d(1, s, t, q) == (ONE - s2) / (s2 * (ONE - q))

    def test_three_paths_agree_to_ten(self):
        rng = random.Random(10)
        done = 0
        while done < 5:
            s, t, q = rand_scalar(rng), rand_scalar(rng), rand_q(rng)
            try:
                for n in range(11):
                    rec = nishizawa_d(n, s, t, q, "recurrence")
                    assert rec == nishizawa_d(n, s, t, q, "explicit")
                    assert rec == nishizawa_d(n, s, t, q, "al_salam_chihara")
            except PoleError:
                continue
            done += 1

    def test_rejects_degenerate_parameters(self):
        with pytest.raises(PoleError):
            nishizawa_d(2, 0, 1, 2)
        with pytest.raises(PoleError):
            nishizawa_d(2, frac(1, 2), frac(1, 3), 1)
