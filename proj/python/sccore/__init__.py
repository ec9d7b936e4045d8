"""Counts of self-conjugate t-core partitions, with the scans behind them."""

import json

from . import _sccore
from ._sccore import (
    Error,
    assemble,
    c_t,
    coefficients,
    conjugate,
    is_t_core,
    sc_large,
    sc_recursive,
    sc_t,
    t_core,
    t_quotient,
    zero_set,
)

__all__ = [
    "Error",
    "assemble",
    "c_t",
    "characterization_check",
    "coefficients",
    "conjugate",
    "cross_validate",
    "is_t_core",
    "monotonicity_scan",
    "sc_large",
    "sc_recursive",
    "sc_t",
    "t_core",
    "t_quotient",
    "verify_growth",
    "zero_set",
]


def characterization_check(t, n_max, timing=True):
    return json.loads(_sccore.characterization_check(t, n_max, timing))


def monotonicity_scan(family, n_max, workers=1, timing=True):
    return json.loads(_sccore.monotonicity_scan(family, n_max, workers, timing))


def verify_growth(n_lo, n_hi, workers=1, timing=True):
    return json.loads(_sccore.verify_growth(n_lo, n_hi, workers, timing))


def cross_validate(t_max, n_max, timing=True):
    return json.loads(_sccore.cross_validate(t_max, n_max, timing))
