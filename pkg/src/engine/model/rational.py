"""
Exact rational helpers: input coercion, canonical text, decimal rendering and
likelihood ratios that may be infinite.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Union

import mpmath

from src.engine.errors import InstanceError

RationalLike = Union[int, str, Fraction]


def to_fraction(value: RationalLike | float) -> Fraction:
    """
    Convert an integer, a decimal string or a "p/q" string to an exact Fraction.

    Floats are accepted through their shortest repr so that JSON literals such
    as 0.25 become 1/4 and not the binary expansion.
    """
    if isinstance(value, bool):
        raise InstanceError(f"not a rational: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if value != value or value in (float("inf"), float("-inf")):
            raise InstanceError(f"not a finite rational: {value!r}")
        return Fraction(repr(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise InstanceError(f"not a rational: {value!r}") from e
    raise InstanceError(f"not a rational: {value!r}")


def fraction_text(value: Fraction) -> str:
    """Canonical text: reduced "p/q" with positive denominator, or an integer."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def decimal_text(value: Fraction, digits: int = 12) -> str:
    """Decimal approximation with `digits` significant digits."""
    with mpmath.workdps(digits + 20):
        return mpmath.nstr(mpmath.mpf(value.numerator) / value.denominator, digits)


@total_ordering
@dataclass(frozen=True)
class ExtendedRatio:
    """A nonnegative likelihood ratio p/q where q = 0 < p maps to +inf."""

    value: Fraction | None  # None is +inf

    @classmethod
    def of(cls, numerator: Fraction, denominator: Fraction) -> ExtendedRatio:
        if denominator == 0:
            if numerator == 0:
                raise ValueError("0/0 likelihood ratio")
            return cls(None)
        return cls(Fraction(numerator) / denominator)

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, ExtendedRatio):
            return NotImplemented
        if self.value is None:
            return False
        if other.value is None:
            return True
        return self.value < other.value

    def __str__(self) -> str:
        return "inf" if self.value is None else fraction_text(self.value)
