ZETABENCH_NAME_STRING = 'zetabench'
ZETABENCH_VERSION_STRING = '0.1.0'

# base precision of the core functions
DEFAULT_TOL = 1e-12

# core numerics
GAMMA_POLE_TOL = 1e-12
HYPERBOLIC_OVERFLOW = 709.78

# zeta engine
ZETA_POLE_RADIUS = 1e-9
DIRICHLET_MARGIN = 0.05
DIRICHLET_MAX_TERMS = 2 ** 23
TERMWISE_MIN_RE = 1.05
THETA_IM_LIMIT = 12.0
ETA_FACTOR_MIN = 1e-3
FINITE_DIFF_STEP = 1e-5
LAURENT_POLE_MARGIN = 0.1
LAURENT_MIN_NODES = 64

# functional symmetry
XI_REMOVABLE_RADIUS = 1e-9
XI_LIMIT_STEP = 1e-6
FUNCTIONAL_POLE_RADIUS = 1e-6

# zero locator
XI_LINE_IMAG_TOL = 1e-9
MAX_SCAN_STEP = 0.25
MAX_COUNT_T = 120.0

# prime side
SIEVE_CAP = 10 ** 8
SIEVE_SEGMENT = 10 ** 6
LI_MAX_ALPHA = 0.1
# quad rejects epsrel below 50 machine epsilons when epsabs is 0
LI_QUAD_EPSREL = 1e-13
GRID_POINTS_PER_DECADE = 200

# plots and emission
GRID_MASK_RADIUS = 1e-3
SIG_DIGITS = 12

DEFAULT_SCAN_CONFIG = {
    "t_max": 40.0,
    "step": 0.1,
    "refine_tol": 1e-8,
    "progress": False,
}

DEFAULT_GRID_CONFIG = {
    "nx": 41,
    "ny": 41,
    "tol": 1e-10,
    "progress": False,
}

DEFAULT_PROFILE_CONFIG = {
    "xs": [0.4, 0.5, 0.6],
    "t_min": 0.0,
    "t_max": 40.0,
    "samples": 401,
}
