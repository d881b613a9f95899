"""
zetabench record classes
"""

from typing import Dict, List, Optional, Tuple

import numpy as np

from zetabench.config import *
from zetabench.errors import ConfigError


METHOD_DIRICHLET = 'dirichlet'
METHOD_ETA = 'eta'
METHOD_THETA = 'theta_integral'
METHOD_REFLECTION = 'reflection'
METHOD_AUTO = 'auto'
EVAL_METHODS = {METHOD_DIRICHLET, METHOD_ETA, METHOD_THETA, METHOD_REFLECTION, METHOD_AUTO}

CONVENTION_HALF = 'half'
CONVENTION_UNIT = 'unit'
XI_CONVENTIONS = {CONVENTION_HALF: 0.5, CONVENTION_UNIT: 1.0}

FAMILY_X_POW_X = 'x_pow_x'
FAMILY_C_POW_X = 'c_pow_x'
BRANCH_FAMILIES = {FAMILY_X_POW_X, FAMILY_C_POW_X}

KIND_RE_ZERO = 're_zero'
KIND_IM_ZERO = 'im_zero'


def complex_json(z: complex) -> Dict:
    return {"re": z.real, "im": z.imag}


class BranchSpec:
    """
    Branch of the complex logarithm: -1 is represented as e^{i pi n_phase}

    n_phase = 1 is the principal branch. n_phase is any real number.
    """
    def __init__(self, n_phase: float = 1.0):
        self.n_phase = float(n_phase)

    def __repr__(self):
        return f'BranchSpec(n_phase={self.n_phase})'

    def as_json(self):
        return {"n_phase": self.n_phase}


PRINCIPAL = BranchSpec(1.0)


class EvalResult:
    """
    Class for representing a zeta value together with how it was obtained

    An example json representation:

    {
        "value": {"re": 1.64493406685, "im": 0.0},
        "method": "dirichlet",
        "terms_used": 4369,
        "est_error": 9.7e-13
    }
    """
    def __init__(
            self,
            value: complex,
            method: str,
            terms_used: int,
            est_error: float
    ):
        assert method in EVAL_METHODS
        self.value = complex(value)
        self.method = method
        self.terms_used = max(int(terms_used), 1)
        self.est_error = abs(float(est_error))

    def __repr__(self):
        return f'EvalResult({self.value!r}, {self.method!r}, terms_used={self.terms_used}, est_error={self.est_error:.3g})'

    def as_json(self):
        return {
            "value": complex_json(self.value),
            "method": self.method,
            "terms_used": self.terms_used,
            "est_error": self.est_error
        }


class XiValue:
    """
    Class for representing a value of the completed xi function
    """
    def __init__(self, value: complex, prefactor_convention: str = CONVENTION_HALF):
        assert prefactor_convention in XI_CONVENTIONS
        self.value = complex(value)
        self.prefactor_convention = prefactor_convention

    def as_json(self):
        return {
            "value": complex_json(self.value),
            "prefactor_convention": self.prefactor_convention
        }


class BranchCurve:
    """
    Class for representing a sampled branch-resolved power curve

    samples: list of (x, re, im), strictly increasing in x
    """
    def __init__(
            self,
            family: str,
            c: Optional[float],
            n_phase: float,
            samples: List[Tuple[float, float, float]]
    ):
        assert family in BRANCH_FAMILIES
        self.family = family
        self.c = c
        self.n_phase = n_phase
        self.samples = samples

    def rows(self) -> List[Tuple[float, float, float]]:
        return list(self.samples)

    def as_json(self):
        return {
            "family": self.family,
            "c": self.c,
            "n_phase": self.n_phase,
            "samples": [{"x": x, "re": re, "im": im} for x, re, im in self.samples]
        }


class ScanConfig:
    """
    Class for representing the critical-line scan settings
    """
    def __init__(
            self,
            t_max: float = DEFAULT_SCAN_CONFIG["t_max"],
            step: float = DEFAULT_SCAN_CONFIG["step"],
            refine_tol: float = DEFAULT_SCAN_CONFIG["refine_tol"],
            progress: bool = DEFAULT_SCAN_CONFIG["progress"]
    ):
        if not step > 0:
            raise ConfigError(f"step must be positive, got {step}")
        if not refine_tol > 0:
            raise ConfigError(f"refine_tol must be positive, got {refine_tol}")
        if not t_max > step:
            raise ConfigError(f"t_max must exceed step, got t_max={t_max}, step={step}")
        self.t_max = float(t_max)
        self.step = float(step)
        self.refine_tol = float(refine_tol)
        self.progress = progress

    @classmethod
    def from_dict(cls, config: Dict) -> 'ScanConfig':
        merged = dict(DEFAULT_SCAN_CONFIG)
        merged.update({k: v for k, v in config.items() if k in DEFAULT_SCAN_CONFIG})
        return cls(**merged)

    def with_t_max(self, t_max: float) -> 'ScanConfig':
        return ScanConfig(t_max, self.step, self.refine_tol, self.progress)

    def as_json(self):
        return {
            "t_max": self.t_max,
            "step": self.step,
            "refine_tol": self.refine_tol
        }


class ZeroRecord:
    """
    Class for representing a refined nontrivial zero on the critical line

    An example json representation:

    {
        "index": 1,
        "t": 14.1347251417,
        "residual": 3.1e-09,
        "bracket": [14.1, 14.2]
    }
    """
    def __init__(
            self,
            index: int,
            t: float,
            residual: float,
            bracket: Tuple[float, float]
    ):
        self.index = index
        self.t = t
        self.residual = residual
        self.bracket = (bracket[0], bracket[1])

    def __repr__(self):
        return f'ZeroRecord(index={self.index}, t={self.t:.9f}, residual={self.residual:.2g})'

    def as_json(self):
        return {
            "index": self.index,
            "t": self.t,
            "residual": self.residual,
            "bracket": list(self.bracket)
        }


class PrimeStats:
    """
    Class for representing prime counting statistics at one abscissa
    """
    def __init__(self, x: float, pi_x: int, li_x: float):
        self.x = float(x)
        self.pi_x = int(pi_x)
        self.li_x = float(li_x)
        self.x_over_ln_x = self.x / np.log(self.x)
        self.ratio_li = self.pi_x / self.li_x
        self.ratio_pnt = self.pi_x / self.x_over_ln_x
        self.gap = self.li_x - self.pi_x

    def as_json(self):
        return {
            "x": self.x,
            "pi_x": self.pi_x,
            "li_x": self.li_x,
            "x_over_ln_x": self.x_over_ln_x,
            "ratio_li": self.ratio_li,
            "ratio_pnt": self.ratio_pnt,
            "gap": self.gap
        }


class GridField:
    """
    Class for representing a rectangular sample of Re zeta and Im zeta

    Values are row-major over y: sample (i, j) sits at index j * nx + i, at
    x = x_min + i * dx and y = y_min + j * dy. Masked samples hold NaN and are
    flagged in `mask`; they never enter contouring.
    """
    def __init__(
            self,
            x_min: float,
            x_max: float,
            y_min: float,
            y_max: float,
            nx: int,
            ny: int,
            re_values: np.ndarray,
            im_values: np.ndarray,
            mask: Optional[np.ndarray] = None
    ):
        if nx < 2 or ny < 2:
            raise ConfigError(f"grid needs nx, ny >= 2, got {nx}x{ny}")
        if x_max < x_min or y_max < y_min:
            raise ConfigError("grid region bounds are reversed")
        re_values = np.asarray(re_values, dtype=float)
        im_values = np.asarray(im_values, dtype=float)
        if re_values.shape != (nx * ny,) or im_values.shape != (nx * ny,):
            raise ConfigError(f"grid arrays must have length {nx * ny}")
        self.x_min = float(x_min)
        self.x_max = float(x_max)
        self.y_min = float(y_min)
        self.y_max = float(y_max)
        self.nx = nx
        self.ny = ny
        self.re_values = re_values
        self.im_values = im_values
        self.mask = np.zeros(nx * ny, dtype=bool) if mask is None else np.asarray(mask, dtype=bool)

    @property
    def dx(self) -> float:
        return (self.x_max - self.x_min) / (self.nx - 1)

    @property
    def dy(self) -> float:
        return (self.y_max - self.y_min) / (self.ny - 1)

    def x_at(self, i: float) -> float:
        return self.x_min + i * self.dx

    def y_at(self, j: float) -> float:
        return self.y_min + j * self.dy

    def values(self, kind: str) -> np.ndarray:
        """(ny, nx) view of the field named by a polyline kind"""
        flat = self.re_values if kind == KIND_RE_ZERO else self.im_values
        return flat.reshape(self.ny, self.nx)

    def rows(self) -> List[Tuple]:
        rows = []
        for j in range(self.ny):
            for i in range(self.nx):
                k = j * self.nx + i
                if self.mask[k]:
                    rows.append((self.x_at(i), self.y_at(j), '', '', 1))
                else:
                    rows.append((self.x_at(i), self.y_at(j), self.re_values[k], self.im_values[k], 0))
        return rows


class Polyline:
    """
    Class for representing a zero curve of Re zeta or Im zeta
    """
    def __init__(self, kind: str, points: List[Tuple[float, float]]):
        assert kind in {KIND_RE_ZERO, KIND_IM_ZERO}
        self.kind = kind
        self.points = points

    def __len__(self):
        return len(self.points)

    def as_json(self):
        return {
            "kind": self.kind,
            "points": [list(p) for p in self.points]
        }


class LineProfile:
    """
    Class for representing Re zeta and Im zeta sampled against t along re(s) = x

    Samples where zeta could not be evaluated hold NaN and are flagged in `mask`.
    """
    def __init__(
            self,
            x: float,
            ts: np.ndarray,
            re_values: np.ndarray,
            im_values: np.ndarray,
            mask: Optional[np.ndarray] = None
    ):
        ts = np.asarray(ts, dtype=float)
        re_values = np.asarray(re_values, dtype=float)
        im_values = np.asarray(im_values, dtype=float)
        if ts.ndim != 1 or len(ts) < 2:
            raise ConfigError("a line profile needs at least two samples")
        if re_values.shape != ts.shape or im_values.shape != ts.shape:
            raise ConfigError(f"profile arrays must have length {len(ts)}")
        self.x = float(x)
        self.ts = ts
        self.re_values = re_values
        self.im_values = im_values
        self.mask = np.zeros(len(ts), dtype=bool) if mask is None else np.asarray(mask, dtype=bool)

    def __len__(self):
        return len(self.ts)

    def closest_approach(self) -> Tuple[float, float]:
        """(t, |zeta|) at the unmasked sample of smallest modulus"""
        modulus = np.where(self.mask, np.inf, np.hypot(self.re_values, self.im_values))
        k = int(np.argmin(modulus))
        return float(self.ts[k]), float(modulus[k])

    def rows(self) -> List[Tuple]:
        rows = []
        for k, t in enumerate(self.ts):
            if self.mask[k]:
                rows.append((self.x, t, '', '', 1))
            else:
                rows.append((self.x, t, self.re_values[k], self.im_values[k], 0))
        return rows

    def as_json(self):
        t_min, modulus = self.closest_approach()
        return {
            "x": self.x,
            "samples": len(self.ts),
            "closest_t": t_min,
            "closest_modulus": modulus
        }
