"""Periodic virtual knot diagrams: Gauss codes, Wirtinger presentations and
finite-quotient checks. Thin wrappers over the compiled ``_perioknot`` module."""

import json

from ._perioknot import (
    GaussCode,
    GaussError,
    NotKnotLikeError,
    ResourceLimitError,
    TorusParameterError,
    count_homs,
    detect_periodicity,
    is_periodic,
    symmetrize as _symmetrize,
    torus_periods,
)
from . import _perioknot


def parse(text):
    return GaussCode(text)


def quotient(code, p):
    """Voltage code of the quotient diagram as a dict."""
    return json.loads(_perioknot.quotient_json(_as_code(code), p))


def symmetrize(voltage):
    """p-fold cover of a voltage code given as a dict or JSON text."""
    text = voltage if isinstance(voltage, str) else json.dumps(voltage)
    return _symmetrize(text)


def presentation(code, p=0):
    return json.loads(_perioknot.presentation_json(_as_code(code), p))


def alexander(code):
    """Normalized Alexander polynomial as a coefficient list (lowest degree first)."""
    _, coefficients = _perioknot.alexander(_as_code(code))
    return list(coefficients)


def certify(code, p, dmax=5, budget=10_000_000):
    return json.loads(_perioknot.certify_json(_as_code(code), p, dmax, budget))


def _as_code(code):
    return code if isinstance(code, GaussCode) else GaussCode(code)


__all__ = [
    "GaussCode",
    "GaussError",
    "NotKnotLikeError",
    "ResourceLimitError",
    "TorusParameterError",
    "alexander",
    "certify",
    "count_homs",
    "detect_periodicity",
    "is_periodic",
    "parse",
    "presentation",
    "quotient",
    "symmetrize",
    "torus_periods",
]
