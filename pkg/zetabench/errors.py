"""
Typed errors raised by zetabench

Every numeric failure is one of these; nothing is returned as NaN or inf.
"""


class ZetaBenchError(Exception):
    """Base class for all numeric and input errors"""


class DomainError(ZetaBenchError, ValueError):
    """Argument outside the domain of the operation (log of 0, li below 1, ...)"""


class PoleError(ZetaBenchError, ZeroDivisionError):
    """Argument at a pole (zeta at s = 1, gamma at 0, -1, -2, ...)"""


class RemovablePointError(ZetaBenchError):
    """Argument at a removable point of the representation in use"""


class RegionError(ZetaBenchError):
    """Evaluation method used outside its region of validity"""


class RadiusError(ZetaBenchError):
    """Expansion point outside the radius of convergence"""


class ContourError(ZetaBenchError):
    """Integration contour passes too close to a pole"""


class NumericOverflowError(ZetaBenchError, OverflowError):
    """Intermediate quantity beyond double precision range"""


class ConsistencyError(ZetaBenchError):
    """A computed value violates an identity it must satisfy"""


class RangeError(ZetaBenchError):
    """Argument beyond a desk-scale cap"""


class ZeroTableParseError(ZetaBenchError):
    """Malformed line in a zero table"""

    def __init__(self, line_no: int, line: str):
        self.line_no = line_no
        self.line = line
        super().__init__(f"line {line_no}: cannot parse ordinate from {line!r}")


class MonotonicityError(ZetaBenchError):
    """Zero table ordinates not strictly increasing"""

    def __init__(self, line_no: int, previous: float, current: float):
        self.line_no = line_no
        self.previous = previous
        self.current = current
        super().__init__(f"line {line_no}: ordinate {current} does not exceed previous {previous}")


class ArityError(ZetaBenchError):
    """Row length does not match the header"""


class ConfigError(ZetaBenchError, ValueError):
    """Invalid configuration values"""
