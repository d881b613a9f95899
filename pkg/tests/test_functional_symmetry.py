import unittest

import numpy as np

from zetabench.errors import DomainError, PoleError
from zetabench.records import CONVENTION_HALF, CONVENTION_UNIT, FAMILY_C_POW_X, FAMILY_X_POW_X
from zetabench.symmetry.functional_symmetry import (
    xi, functional_equation_residual, xi_symmetry_residual, conjugate_symmetry_residual,
    eq12_check, branch_curves, t_of_s, s_of_t
)

FIRST_ZERO = 14.134725


class TestXi(unittest.TestCase):

    def test_xi_examples(self):
        xi_0 = xi(0)
        assert xi_0.prefactor_convention == CONVENTION_HALF
        assert abs(xi_0.value - 0.5) < 1e-10
        assert abs(xi(1).value - xi_0.value) < 1e-10
        assert abs(xi(complex(0.5, FIRST_ZERO)).value) < 1e-6

    def test_conventions(self):
        s = complex(0.3, 4.0)
        half = xi(s, CONVENTION_HALF).value
        unit = xi(s, CONVENTION_UNIT).value
        assert abs(unit - 2 * half) < 1e-15 * max(1.0, abs(unit))
        assert abs(xi(0, CONVENTION_UNIT).value - 1.0) < 1e-10
        with self.assertRaises(DomainError):
            xi(2, 'third')

    def test_removable_points(self):
        for s in (-2, -4):
            value = xi(s).value
            assert abs(value - xi(1 - s).value) < 1e-9
            assert np.isfinite(value.real)

    def test_symmetry_examples(self):
        assert xi_symmetry_residual(complex(0.5, 5.0)) < 1e-12
        assert xi_symmetry_residual(complex(0.2, 3.0)) < 1e-9
        assert xi_symmetry_residual(2) < 1e-9

    def test_symmetry_grid(self):
        """
        xi(s) = xi(1 - s) over a 50 x 50 grid
        :return:
        """
        for re in np.linspace(-4, 5, 50):
            for im in np.linspace(0, 30, 50):
                assert xi_symmetry_residual(complex(re, im)) < 1e-9

    def test_real_on_critical_line(self):
        for t in np.arange(0, 60.5, 0.5):
            assert abs(xi(complex(0.5, t)).value.imag) < 1e-10


class TestFunctionalEquation(unittest.TestCase):

    def test_residual_examples(self):
        assert functional_equation_residual(complex(0.3, 2.0)) < 1e-8
        assert functional_equation_residual(-1) < 1e-8
        assert functional_equation_residual(complex(0.5, 10.0)) < 1e-8

    def test_random_points(self):
        rng = np.random.RandomState(2024)
        checked = 0
        for re, im in zip(rng.uniform(-3, 4, 100), rng.uniform(-10, 10, 100)):
            s = complex(re, im)
            assert functional_equation_residual(s) < 1e-8
            checked += 1
        assert checked == 100

    def test_pole_neighborhoods(self):
        for s in (0, 1, 2, 3 + 1e-7):
            with self.assertRaises(PoleError):
                functional_equation_residual(s)


class TestConjugateSymmetry(unittest.TestCase):

    def test_examples(self):
        assert conjugate_symmetry_residual(0) == 0
        assert conjugate_symmetry_residual(6) < 1e-10
        assert conjugate_symmetry_residual(FIRST_ZERO) < 1e-10

    def test_critical_line(self):
        for y in np.arange(0, 60.5, 0.5):
            assert conjugate_symmetry_residual(y) < 1e-10


class TestEq12(unittest.TestCase):

    def test_examples(self):
        lhs, rhs, residual = eq12_check(2, 3, 1)
        assert lhs == 8 and rhs == 8
        assert residual < 1e-12
        lhs, rhs, residual = eq12_check(3, 0.5, 1)
        assert abs(lhs - 1.732050808) < 1e-9
        assert abs(rhs - 1.732050808) < 1e-9

    def test_even_branch_breaks_equality(self):
        lhs, rhs, residual = eq12_check(2, 3, 6)
        assert abs(rhs + 8) < 1e-12
        assert abs(residual - 16) < 1e-12
        assert residual > 1

    def test_principal_branch_real_exponents(self):
        """
        Equality on the principal branch for real k
        :return:
        """
        rng = np.random.RandomState(99)
        f_values = 10 * (1 - rng.uniform(0, 1, 1000))
        k_values = rng.uniform(-10, 10, 1000)
        for f, k in zip(f_values, k_values):
            lhs, _, residual = eq12_check(f, k, 1)
            assert residual < 1e-12 * max(1.0, abs(lhs))

    def test_odd_branches_integer_exponents(self):
        rng = np.random.RandomState(100)
        f_values = 10 * (1 - rng.uniform(0, 1, 1000))
        k_values = rng.randint(-10, 11, 1000)
        n_values = rng.choice([1, 3, 5, -1], 1000)
        for f, k, n in zip(f_values, k_values, n_values):
            lhs, _, residual = eq12_check(f, int(k), int(n))
            assert residual < 1e-12 * max(1.0, abs(lhs))

    def test_domain(self):
        with self.assertRaises(DomainError):
            eq12_check(0, 2)
        with self.assertRaises(DomainError):
            eq12_check(-1.5, 2)


class TestBranchCurves(unittest.TestCase):

    def test_examples(self):
        curve = branch_curves(FAMILY_C_POW_X, -4, 1, -2.5, 2.5, 11)
        samples = {x: (re, im) for x, re, im in curve.samples}
        assert abs(samples[0.5][0]) < 1e-12
        assert abs(samples[0.5][1] - 2) < 1e-12
        assert samples[0.0] == (1.0, 0.0)
        assert curve.c == -4

        curve = branch_curves(FAMILY_X_POW_X, None, 1, 0, 2, 3)
        assert curve.samples[0] == (0.0, 1.0, 0.0)
        assert curve.samples[-1] == (2.0, 4.0, 0.0)
        assert curve.c is None

    def test_half_integer_crossings(self):
        """
        Re (-4)^x vanishes at half-odd integers, Im at integers
        :return:
        """
        curve = branch_curves(FAMILY_C_POW_X, -4, 1, -2.5, 2.5, 11)
        for x, re, im in curve.samples:
            if x % 1 == 0.5:
                assert abs(re) < 1e-10
            else:
                assert abs(im) < 1e-10
        for x in (-0.5, 0.5, 1.5):
            assert abs(dict((s[0], s[1]) for s in curve.samples)[x]) < 1e-12

    def test_re_zeros_at_im_maxima(self):
        curve = branch_curves(FAMILY_C_POW_X, -4, 1, -2, 2, 401)
        x = np.array([s[0] for s in curve.samples])
        re = np.array([s[1] for s in curve.samples])
        im = np.array([s[2] for s in curve.samples])
        scaled_im = np.abs(im) / 4.0 ** x
        scaled_re = np.abs(re) / 4.0 ** x
        for m in range(-2, 2):
            window = (x > m) & (x < m + 1)
            peak = np.argmax(np.where(window, scaled_im, -1.0))
            assert abs(x[peak] - (m + 0.5)) < 1e-12
            assert scaled_re[peak] < 1e-12

    def test_increasing_samples(self):
        curve = branch_curves(FAMILY_X_POW_X, None, 3, -3, 3, 61)
        xs = [s[0] for s in curve.samples]
        assert all(a < b for a, b in zip(xs, xs[1:]))
        assert all(np.isfinite(re) and np.isfinite(im) for _, re, im in curve.samples)

    def test_errors(self):
        with self.assertRaises(DomainError):
            branch_curves('sin', None, 1, 0, 1, 10)
        with self.assertRaises(DomainError):
            branch_curves(FAMILY_C_POW_X, 0, 1, 0, 1, 10)
        with self.assertRaises(DomainError):
            branch_curves(FAMILY_X_POW_X, None, 1, 0, 1, 1)


class TestTCoordinate(unittest.TestCase):

    def test_examples(self):
        assert t_of_s(0.5) == 0
        assert abs(t_of_s(complex(0.5, FIRST_ZERO)) - FIRST_ZERO) < 1e-15
        assert s_of_t(FIRST_ZERO) == complex(0.5, FIRST_ZERO)

    def test_round_trip(self):
        rng = np.random.RandomState(8)
        for re, im in rng.uniform(-20, 20, size=(100, 2)):
            s = complex(re, im)
            assert abs(s_of_t(t_of_s(s)) - s) < 1e-15 * max(1.0, abs(s))
