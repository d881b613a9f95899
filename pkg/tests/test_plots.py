import math
import unittest

import numpy as np
from bs4 import BeautifulSoup

from zetabench.errors import ArityError, ConfigError
from zetabench.records import GridField, KIND_RE_ZERO, KIND_IM_ZERO
from zetabench.plots.contour import extract_zero_curves, approximate_zeros
from zetabench.plots.emit import emit_csv, emit_svg, parse_csv
from zetabench.plots.grid_field import grid_eval
from zetabench.plots.profile import line_profile, line_profiles
from zetabench.zeta.zeta_engine import zeta

FIRST_ZERO = (0.5, 14.134725)


def synthetic_field(re_fn, im_fn, n: int = 5) -> GridField:
    xs = np.linspace(0.0, 1.0, n)
    ys = np.linspace(0.0, 1.0, n)
    re_values = np.array([re_fn(x, y) for y in ys for x in xs])
    im_values = np.array([im_fn(x, y) for y in ys for x in xs])
    return GridField(0.0, 1.0, 0.0, 1.0, n, n, re_values, im_values)


class TestGridEval(unittest.TestCase):

    def test_minimal_grid(self):
        field = grid_eval((2.0, 3.0, 0.0, 1.0), 2, 2)
        assert field.re_values.shape == (4,)
        assert not field.mask.any()
        # bottom row sits on the real axis
        assert all(v > 1 for v in field.re_values[:2])
        assert all(abs(v) < 1e-12 for v in field.im_values[:2])
        assert abs(field.re_values[0] - math.pi ** 2 / 6) < 1e-10

    def test_samples_match_zeta(self):
        field = grid_eval((-1.0, 2.0, 5.0, 7.0), 4, 3, tol=1e-10)
        for j in range(field.ny):
            for i in range(field.nx):
                value = zeta(complex(field.x_at(i), field.y_at(j)), 1e-10).value
                k = j * field.nx + i
                assert field.re_values[k] == value.real
                assert field.im_values[k] == value.imag

    def test_pole_masked(self):
        field = grid_eval((0.0, 2.0, -1.0, 1.0), 3, 3)
        assert field.mask.tolist() == [False] * 4 + [True] + [False] * 4
        assert math.isnan(field.re_values[4])
        assert field.rows()[4] == (1.0, 0.0, '', '', 1)
        assert abs(field.re_values[3] + 0.5) < 1e-12

    def test_sign_changes_near_first_zero(self):
        field = grid_eval((0.0, 1.0, 13.0, 15.0), 50, 50)
        for values in (field.values(KIND_RE_ZERO), field.values(KIND_IM_ZERO)):
            assert (values > 0).any() and (values < 0).any()

    def test_bad_grid(self):
        with self.assertRaises(ConfigError):
            grid_eval((0.0, 1.0, 0.0, 1.0), 1, 5)


class TestContours(unittest.TestCase):

    def test_straight_lines(self):
        field = synthetic_field(lambda x, y: x - 0.3, lambda x, y: y - 0.6)
        curves = extract_zero_curves(field)
        assert [c.kind for c in curves] == [KIND_RE_ZERO, KIND_IM_ZERO]
        re_line, im_line = curves
        assert len(re_line) == 5
        assert all(abs(x - 0.3) < 1e-12 for x, _ in re_line.points)
        assert [y for _, y in re_line.points] == sorted(y for _, y in re_line.points)
        assert all(abs(y - 0.6) < 1e-12 for _, y in im_line.points)
        hits = approximate_zeros(curves)
        assert len(hits) == 1
        assert abs(hits[0][0] - 0.3) < 1e-12 and abs(hits[0][1] - 0.6) < 1e-12

    def test_no_sign_change(self):
        field = synthetic_field(lambda x, y: 1.0 + x, lambda x, y: 2.0)
        assert extract_zero_curves(field) == []

    def test_closed_loop(self):
        field = synthetic_field(lambda x, y: (x - 0.5) ** 2 + (y - 0.5) ** 2 - 0.1, lambda x, y: 1.0, n=9)
        curves = extract_zero_curves(field)
        assert len(curves) == 1
        loop = curves[0]
        assert loop.kind == KIND_RE_ZERO
        assert loop.points[0] == loop.points[-1]
        for x, y in loop.points:
            assert abs(math.hypot(x - 0.5, y - 0.5) - math.sqrt(0.1)) < 0.02

    def test_saddle(self):
        re_values = np.array([1.0, -1.0, -1.0, 1.0])
        field = GridField(0.0, 1.0, 0.0, 1.0, 2, 2, re_values, np.ones(4))
        curves = extract_zero_curves(field)
        assert len(curves) == 2
        assert all(len(c) == 2 for c in curves)

    def test_masked_cells_skipped(self):
        field = synthetic_field(lambda x, y: x - 0.3, lambda x, y: 1.0)
        field.mask[1] = True
        re_line = extract_zero_curves(field)[0]
        # the bottom cell row touching the masked corner drops out
        assert len(re_line) == 4
        assert min(y for _, y in re_line.points) == 0.25

    def test_first_zero_crossing(self):
        """
        Re and Im zero curves meet within one cell of the first zero
        :return:
        """
        field = grid_eval((0.0, 1.0, 12.0, 16.0), 41, 41)
        curves = extract_zero_curves(field)
        assert any(c.kind == KIND_RE_ZERO for c in curves)
        assert any(c.kind == KIND_IM_ZERO for c in curves)
        hits = approximate_zeros(curves)
        assert any(abs(x - FIRST_ZERO[0]) <= field.dx and abs(y - FIRST_ZERO[1]) <= field.dy for x, y in hits)

    def test_trivial_zero(self):
        field = grid_eval((-5.0, -3.0, -0.5, 0.5), 20, 20)
        hits = approximate_zeros(extract_zero_curves(field))
        assert any(abs(x + 4) <= field.dx and abs(y) <= field.dy for x, y in hits)

    def test_interpolation_consistency(self):
        field = grid_eval((0.0, 1.0, 13.0, 15.0), 21, 21)
        for curve in extract_zero_curves(field):
            values = field.values(curve.kind)
            step = max(np.nanmax(np.abs(np.diff(values, axis=0))), np.nanmax(np.abs(np.diff(values, axis=1))))
            for x, y in curve.points:
                value = zeta(complex(x, y)).value
                component = value.real if curve.kind == KIND_RE_ZERO else value.imag
                assert abs(component) < 10 * step


class TestLineProfiles(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        # 31 samples 0.01 apart, the middle one on the first zero
        cls.profiles = line_profiles([0.4, 0.5, 0.6], FIRST_ZERO[1] - 0.15, FIRST_ZERO[1] + 0.15, 31)

    def test_layout(self):
        assert [p.x for p in self.profiles] == [0.4, 0.5, 0.6]
        for profile in self.profiles:
            assert len(profile) == 31
            assert not profile.mask.any()
            assert abs(profile.ts[15] - FIRST_ZERO[1]) < 1e-12

    def test_both_parts_vanish_together_on_the_critical_line(self):
        t, modulus = self.profiles[1].closest_approach()
        assert abs(t - FIRST_ZERO[1]) < 1e-9
        assert modulus < 1e-5
        re_line = self.profiles[1].re_values
        im_line = self.profiles[1].im_values
        assert (re_line > 0).any() and (re_line < 0).any()
        assert (im_line > 0).any() and (im_line < 0).any()

    def test_off_line_stays_away_from_zero(self):
        for profile in (self.profiles[0], self.profiles[2]):
            assert profile.closest_approach()[1] > 1e-2

    def test_samples_match_zeta(self):
        profile = self.profiles[0]
        for k in (0, 7, 30):
            value = zeta(complex(0.4, profile.ts[k]), 1e-10).value
            assert profile.re_values[k] == value.real
            assert profile.im_values[k] == value.imag

    def test_pole_masked(self):
        profile = line_profile(1.0, -1.0, 1.0, 3)
        assert profile.mask.tolist() == [False, True, False]
        assert profile.rows()[1] == (1.0, 0.0, '', '', 1)
        assert profile.closest_approach()[0] != 0.0

    def test_bad_profile(self):
        with self.assertRaises(ConfigError):
            line_profile(0.5, 10.0, 10.0, 5)
        with self.assertRaises(ConfigError):
            line_profile(0.5, 0.0, 10.0, 1)


class TestEmit(unittest.TestCase):

    def test_csv_example(self):
        data = emit_csv([(1, 14.134725, 3e-09)], ['index', 't', 'residual'])
        assert data == b"index,t,residual\n1,14.134725,3e-09\n"

    def test_csv_empty(self):
        assert emit_csv([], ['k', 'primes_up_to_t_k', 't_k']) == b"k,primes_up_to_t_k,t_k\n"

    def test_csv_formatting(self):
        data = emit_csv([(-0.0, 1.0 / 3.0, np.int64(7), np.float64(2.5))], ['a', 'b', 'c', 'd'])
        assert data == b"a,b,c,d\n0,0.333333333333,7,2.5\n"

    def test_csv_arity(self):
        with self.assertRaises(ArityError):
            emit_csv([(1, 2)], ['a', 'b', 'c'])

    def test_csv_round_trip(self):
        rows = [[1, 14.134725, 3e-09], [2, 21.02204, 1.5e-10], [3, -0.25, '']]
        header, parsed = parse_csv(emit_csv(rows, ['index', 't', 'residual']))
        assert header == ['index', 't', 'residual']
        assert parsed == rows

    def test_grid_rows_round_trip(self):
        field = grid_eval((0.0, 2.0, -1.0, 1.0), 3, 3)
        header = ['x', 'y', 're', 'im', 'masked']
        _, parsed = parse_csv(emit_csv(field.rows(), header))
        assert parsed[4] == [1, 0, '', '', 1]
        assert abs(parsed[3][2] + 0.5) < 1e-11

    def test_svg(self):
        field = grid_eval((0.0, 1.0, 12.0, 16.0), 21, 21)
        curves = extract_zero_curves(field)
        data = emit_svg(field, curves)
        soup = BeautifulSoup(data, 'xml')
        paths = soup.find_all('path')
        assert len(paths) >= 2
        for path in soup.find_all('path', attrs={'class': KIND_RE_ZERO}):
            assert not path.has_attr('stroke-dasharray')
        dotted = soup.find_all('path', attrs={'class': KIND_IM_ZERO})
        assert dotted and all(p['stroke-dasharray'] == '2,3' for p in dotted)
        assert soup.find('rect', attrs={'class': 'frame'}) is not None
        assert soup.find('line', attrs={'class': 'critical-line'}) is not None
        assert emit_svg(field, curves) == data

    def test_svg_without_critical_line(self):
        field = synthetic_field(lambda x, y: x - 0.3, lambda x, y: y - 0.6)
        field.x_min, field.x_max = 2.0, 3.0
        soup = BeautifulSoup(emit_svg(field, extract_zero_curves(field)), 'xml')
        assert soup.find('line', attrs={'class': 'critical-line'}) is None
        assert len(soup.find_all('path')) == 2
