"""
Contract curves: payment as a function of the realized reward, evaluated
exactly. Crossing search and the no-proper-crossing (NPC) check live here.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from src.engine.errors import ContractError, PreconditionError
from src.engine.model.rational import RationalLike, fraction_text, to_fraction

ZERO = Fraction(0)


class CurveKind(str, Enum):
    LINEAR = "linear"
    POWER = "power"
    POLYNOMIAL = "polynomial"
    TABLE = "table"


def evaluate_polynomial(coefficients: Sequence[Fraction], x: Fraction) -> Fraction:
    """sum_k coefficients[k] * x**k by Horner's rule."""
    value = ZERO
    for a in reversed(coefficients):
        value = value * x + a
    return value


@dataclass(frozen=True)
class ContractCurve:
    """
    A payment curve t(x) over nonnegative rewards.

    Linear and power curves are stored as polynomials with a single
    nonzero coefficient; `alpha` and `degree` keep the family parameters.
    Table curves are defined only at their listed points.
    """

    kind: CurveKind
    coefficients: tuple[Fraction, ...] = ()
    points: tuple[tuple[Fraction, Fraction], ...] = ()
    alpha: Fraction | None = None
    degree: int | None = None

    def __post_init__(self):
        if self.kind == CurveKind.TABLE:
            xs = [x for x, _ in self.points]
            if not xs:
                raise ContractError("table curve needs at least one point")
            if len(set(xs)) != len(xs):
                raise ContractError("table curve has repeated x values")
            if any(x < 0 or y < 0 for x, y in self.points):
                raise ContractError("table curve needs nonnegative points")
        else:
            if not self.coefficients:
                raise ContractError("polynomial curve needs coefficients")
            if any(a < 0 for a in self.coefficients):
                raise ContractError("curve coefficients must be nonnegative")

    @classmethod
    def linear(cls, alpha: RationalLike) -> ContractCurve:
        a = to_fraction(alpha)
        return cls(CurveKind.LINEAR, (ZERO, a), alpha=a, degree=1)

    @classmethod
    def power(cls, alpha: RationalLike, degree: int) -> ContractCurve:
        if isinstance(degree, bool) or not isinstance(degree, int) or degree < 0:
            raise ContractError(f"power degree must be a nonnegative integer, got {degree!r}")
        a = to_fraction(alpha)
        return cls(CurveKind.POWER, tuple([ZERO] * degree + [a]), alpha=a, degree=degree)

    @classmethod
    def polynomial(cls, coefficients: Sequence[RationalLike]) -> ContractCurve:
        return cls(CurveKind.POLYNOMIAL, tuple(to_fraction(a) for a in coefficients))

    @classmethod
    def table(cls, points: Sequence[tuple[RationalLike, RationalLike]]) -> ContractCurve:
        return cls(CurveKind.TABLE, points=tuple((to_fraction(x), to_fraction(y)) for x, y in points))

    def defined_at(self, x: Fraction) -> bool:
        if x < 0:
            return False
        if self.kind == CurveKind.TABLE:
            return any(px == x for px, _ in self.points)
        return True

    def __call__(self, x: RationalLike) -> Fraction:
        x = to_fraction(x)
        if not self.defined_at(x):
            raise PreconditionError(f"curve {self.describe()} is not defined at {fraction_text(x)}")
        if self.kind == CurveKind.TABLE:
            return next(y for px, y in self.points if px == x)
        return evaluate_polynomial(self.coefficients, x)

    def describe(self) -> str:
        if self.kind == CurveKind.LINEAR:
            return f"{fraction_text(self.alpha)}*x"
        if self.kind == CurveKind.POWER:
            return f"{fraction_text(self.alpha)}*x^{self.degree}"
        if self.kind == CurveKind.POLYNOMIAL:
            terms = [
                f"{fraction_text(a)}*x^{k}" if k else fraction_text(a)
                for k, a in enumerate(self.coefficients)
                if a
            ]
            return " + ".join(terms) or "0"
        return "table{" + ", ".join(f"{fraction_text(x)}:{fraction_text(y)}" for x, y in self.points) + "}"


def crossing_points(
    t: ContractCurve, u: ContractCurve, grid: Sequence[RationalLike]
) -> tuple[Fraction, Fraction] | None:
    """First grid point where t > u and first where t < u, if both exist."""
    if not grid:
        raise PreconditionError("crossing search needs a nonempty grid")
    above = below = None
    for raw in grid:
        x = to_fraction(raw)
        if not (t.defined_at(x) and u.defined_at(x)):
            continue
        a, b = t(x), u(x)
        if above is None and a > b:
            above = x
        if below is None and a < b:
            below = x
    if above is None or below is None:
        return None
    return above, below


@dataclass(frozen=True)
class CurveFamily:
    """A one-parameter family ordered pointwise by its coefficient."""

    kind: CurveKind
    degree: int = 1

    @classmethod
    def linear(cls) -> CurveFamily:
        return cls(CurveKind.LINEAR, 1)

    @classmethod
    def power(cls, degree: int) -> CurveFamily:
        if degree < 0:
            raise ContractError("power degree must be nonnegative")
        return cls(CurveKind.POWER, degree)


class NpcVerdict(str, Enum):
    HOLDS_ANALYTICALLY = "holds_analytically"
    HOLDS_ON_GRID = "holds_on_grid"
    VIOLATED = "violated"


@dataclass(frozen=True)
class NpcResult:
    verdict: NpcVerdict
    pair: tuple[int, int] | None = None
    points: tuple[Fraction, Fraction] | None = None


def _single_parameter(curves: Sequence[ContractCurve]) -> bool:
    if all(c.kind == CurveKind.LINEAR for c in curves):
        return True
    return all(c.kind == CurveKind.POWER for c in curves) and len({c.degree for c in curves}) == 1


def npc_check(
    curves: CurveFamily | Sequence[ContractCurve], grid: Sequence[RationalLike] = ()
) -> NpcResult:
    """
    No proper crossing. Families ordered by a single coefficient hold
    analytically; anything else is checked pairwise on the grid, which can
    refute NPC but never prove it.
    """
    if isinstance(curves, CurveFamily):
        return NpcResult(NpcVerdict.HOLDS_ANALYTICALLY)
    if _single_parameter(curves):
        return NpcResult(NpcVerdict.HOLDS_ANALYTICALLY)
    if not grid:
        raise PreconditionError("a grid is needed to check a general curve class")
    for a, b in combinations(range(len(curves)), 2):
        points = crossing_points(curves[a], curves[b], grid)
        if points is not None:
            return NpcResult(NpcVerdict.VIOLATED, (a, b), points)
    return NpcResult(NpcVerdict.HOLDS_ON_GRID)
