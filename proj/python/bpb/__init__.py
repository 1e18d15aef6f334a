"""Python access to the bpb corrector.

Documents are plain dicts in the same JSON layout the ``bpb`` tool reads and
writes. Rationals travel as "p/q" strings; ``fraction`` and ``ratio`` convert.
"""

from fractions import Fraction

from ._core import (
    BpbError,
    attainment_gap,
    counterexample,
    generate,
    generate_lemma,
    identity_norm,
    lemma,
    norm,
    sweep,
    tnorm,
)
from ._core import correct as _correct

__all__ = [
    "BpbError",
    "attainment_gap",
    "correct",
    "counterexample",
    "error_code",
    "fraction",
    "generate",
    "generate_lemma",
    "identity_norm",
    "lemma",
    "norm",
    "ratio",
    "sweep",
    "tnorm",
]


def fraction(value):
    """Fraction from a "p/q" string, an int or a float."""
    return Fraction(value)


def ratio(value):
    """Render a number as "p/q"."""
    f = Fraction(value)
    return f"{f.numerator}/{f.denominator}"


def correct(instance, eps=None, mode=None, normalize=False, c0=False, exact_cap=20):
    if eps is not None and not isinstance(eps, str):
        eps = ratio(eps)
    return _correct(instance, eps=eps, mode=mode, normalize=normalize, c0=c0, exact_cap=exact_cap)


def error_code(exc):
    """The error name at the front of a BpbError message, e.g. "NotUnitNorm"."""
    return str(exc).split(":", 1)[0]
