"""Finite quandles: orbit series, reductivity and congruences.

Elements are 0-based throughout; .qnd files and the qnd CLI are 1-based.
"""

from ._core import *  # noqa: F401,F403
from ._core import (
    AxiomViolation,
    CapExceeded,
    InvalidInput,
    NotACongruence,
    ParseError,
    QuandleError,
    UnknownName,
)
