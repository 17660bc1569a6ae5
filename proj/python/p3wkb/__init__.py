"""Exact WKB data of the Painleve III equations of type D6 and D7."""

import json as _json

from ._p3wkb import (
    DegenerateError,
    DomainError,
    Error,
    UnsupportedError,
    borel_sum,
    classify,
    connection_multiplier,
    format_complex,
    jumping_coefficients,
    laplace_oracle,
    parse_complex,
    run_suite,
    suite_names,
    voros_coefficients,
    voros_oracle,
)
from ._p3wkb import stokes_diagram as _stokes_diagram_json


def stokes_diagram(c_inf, c_0=0, d7=False):
    """Traced Stokes diagram as a dict (D7 takes its parameter as c_inf)."""
    return _json.loads(_stokes_diagram_json(c_inf, c_0, d7))


__all__ = [
    "DegenerateError",
    "DomainError",
    "Error",
    "UnsupportedError",
    "borel_sum",
    "classify",
    "connection_multiplier",
    "format_complex",
    "jumping_coefficients",
    "laplace_oracle",
    "parse_complex",
    "run_suite",
    "stokes_diagram",
    "suite_names",
    "voros_coefficients",
    "voros_oracle",
]
