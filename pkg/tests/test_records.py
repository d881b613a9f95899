import json
import unittest

import numpy as np

from zetabench.errors import ConfigError
from zetabench.records import (
    BranchSpec, EvalResult, GridField, LineProfile, PrimeStats, ScanConfig, XiValue, ZeroRecord, Polyline,
    METHOD_DIRICHLET, KIND_RE_ZERO
)
from zetabench.utils.format_util import dump_json, format_number, jsonable, round_sig


class TestRecords(unittest.TestCase):

    def test_scan_config(self):
        config = ScanConfig()
        assert config.t_max == 40.0 and config.step == 0.1
        with self.assertRaises(ConfigError):
            ScanConfig(step=0)
        with self.assertRaises(ConfigError):
            ScanConfig(t_max=0.05, step=0.1)
        with self.assertRaises(ConfigError):
            ScanConfig(refine_tol=-1)
        config = ScanConfig.from_dict({"t_max": 15, "nx": 9})
        assert config.t_max == 15.0
        assert config.with_t_max(50).t_max == 50.0
        assert config.as_json() == {"t_max": 15.0, "step": 0.1, "refine_tol": 1e-8}

    def test_eval_result(self):
        result = EvalResult(complex(1.5, -0.0), METHOD_DIRICHLET, 0, -1e-13)
        assert result.terms_used == 1
        assert result.est_error == 1e-13
        assert result.as_json()["value"] == {"re": 1.5, "im": -0.0}

    def test_grid_field(self):
        field = GridField(0, 1, 0, 2, 2, 3, np.zeros(6), np.ones(6))
        assert field.dx == 1.0 and field.dy == 1.0
        assert field.values(KIND_RE_ZERO).shape == (3, 2)
        assert field.rows()[5] == (1.0, 2.0, 0.0, 1.0, 0)
        with self.assertRaises(ConfigError):
            GridField(0, 1, 0, 1, 2, 2, np.zeros(3), np.zeros(4))
        with self.assertRaises(ConfigError):
            GridField(1, 0, 0, 1, 2, 2, np.zeros(4), np.zeros(4))

    def test_prime_stats(self):
        stats = PrimeStats(100, 25, 30.1261415840796)
        assert abs(stats.ratio_li - 25 / 30.1261415840796) < 1e-15
        assert abs(stats.ratio_pnt - 25 / (100 / np.log(100))) < 1e-15
        assert set(stats.as_json()) == {"x", "pi_x", "li_x", "x_over_ln_x", "ratio_li", "ratio_pnt", "gap"}

    def test_small_records(self):
        assert BranchSpec().n_phase == 1.0
        assert BranchSpec(3).as_json() == {"n_phase": 3.0}
        assert XiValue(0.5).as_json()["prefactor_convention"] == 'half'
        record = ZeroRecord(1, 14.134725, 1e-9, (14.1, 14.2))
        assert record.as_json()["bracket"] == [14.1, 14.2]
        assert len(Polyline(KIND_RE_ZERO, [(0, 0), (1, 1)])) == 2

    def test_line_profile(self):
        profile = LineProfile(0.5, [1.0, 2.0, 3.0], [0.3, -0.1, 0.2], [0.4, 0.0, -0.2], [False, False, True])
        assert len(profile) == 3
        assert profile.closest_approach() == (2.0, 0.1)
        assert profile.rows()[2] == (0.5, 3.0, '', '', 1)
        assert profile.as_json() == {"x": 0.5, "samples": 3, "closest_t": 2.0, "closest_modulus": 0.1}
        with self.assertRaises(ConfigError):
            LineProfile(0.5, [1.0], [0.0], [0.0])
        with self.assertRaises(ConfigError):
            LineProfile(0.5, [1.0, 2.0], [0.0], [0.0, 0.0])


class TestFormatting(unittest.TestCase):

    def test_format_number(self):
        assert format_number(np.float64(np.pi)) == '3.14159265359'
        assert format_number(-0.0) == '0'
        assert format_number(True) == '1'
        assert format_number('') == ''

    def test_round_sig(self):
        assert round_sig(1.0 / 3.0) == 0.333333333333

    def test_json(self):
        obj = {"z": complex(1.0 / 3.0, -0.0), "n": np.int64(4), "flag": np.bool_(True), "xs": (0.1, 2)}
        assert jsonable(obj) == {"z": {"re": 0.333333333333, "im": 0.0}, "n": 4, "flag": True, "xs": [0.1, 2]}
        text = dump_json(obj)
        assert text.endswith('}\n')
        assert json.loads(text)["n"] == 4
