"""Exact continued fraction laboratory for quartic power series over F_p."""

from ._core import (
    Poly,
    convergents,
    expand,
    measure,
    omega_build,
    open_question_check,
    openq,
    square,
    verify,
    w1_quotients,
    w2_quotients,
)

__all__ = [
    "Poly",
    "convergents",
    "expand",
    "measure",
    "omega_build",
    "open_question_check",
    "openq",
    "square",
    "verify",
    "w1_quotients",
    "w2_quotients",
]
