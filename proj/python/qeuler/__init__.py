"""Exact and p-adic twisted (h, q)-Euler numbers, q-Bernstein integrals and
an exact identity checker."""

from fractions import Fraction

from ._qeuler import (
    THEOREMS,
    CycloRF,
    DivisionByZero,
    NonUnitError,
    ParameterError,
    ParseError,
    PoleError,
    RatFunc,
    bernstein,
    bernstein_integral,
    euler_number,
    euler_poly,
    fermionic_integral_truncated,
    numeric_crosscheck,
    q_number,
    run_grid,
    specialize,
    verify,
)

__version__ = "0.1.0"


def at_q(value, q):
    """Coefficients of a CycloRF (or the value of a RatFunc) at a rational q, as Fractions."""
    if isinstance(value, RatFunc):
        return Fraction(value.eval(q))
    return [Fraction(c) for c in value.eval_at_q(q)]


__all__ = [
    "THEOREMS",
    "CycloRF",
    "DivisionByZero",
    "Fraction",
    "NonUnitError",
    "ParameterError",
    "ParseError",
    "PoleError",
    "RatFunc",
    "at_q",
    "bernstein",
    "bernstein_integral",
    "euler_number",
    "euler_poly",
    "fermionic_integral_truncated",
    "numeric_crosscheck",
    "q_number",
    "run_grid",
    "specialize",
    "verify",
]
