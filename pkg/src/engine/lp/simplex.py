"""
Exact two-phase simplex over Fractions with Bland's rule.

Problems are minimizations. Variables carry lower bounds (default 0) and are
shifted to start at zero before the tableau is built. Every optimal answer is
substituted back into the original constraints; a mismatch raises
InternalInconsistency.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Sequence

from src.engine.errors import InternalInconsistency, LpError
from src.engine.model.rational import RationalLike, fraction_text, to_fraction
from src.utils.core.logger import get_logger

logger = get_logger(__name__)

ZERO = Fraction(0)
ONE = Fraction(1)


class Relation(str, Enum):
    LE = "<="
    GE = ">="
    EQ = "="


@dataclass(frozen=True)
class LpConstraint:
    coeffs: tuple[Fraction, ...]
    relation: Relation
    rhs: Fraction

    @classmethod
    def of(cls, coeffs: Sequence[RationalLike], relation: Relation | str, rhs: RationalLike) -> LpConstraint:
        return cls(tuple(to_fraction(a) for a in coeffs), Relation(relation), to_fraction(rhs))

    def holds(self, x: Sequence[Fraction]) -> bool:
        lhs = sum((a * v for a, v in zip(self.coeffs, x)), ZERO)
        if self.relation == Relation.LE:
            return lhs <= self.rhs
        if self.relation == Relation.GE:
            return lhs >= self.rhs
        return lhs == self.rhs


@dataclass(frozen=True)
class LpProblem:
    """min objective·x subject to constraints, x >= lower_bounds."""

    objective: tuple[Fraction, ...]
    constraints: tuple[LpConstraint, ...] = ()
    lower_bounds: tuple[Fraction, ...] = ()

    def __post_init__(self):
        k = len(self.objective)
        if k == 0:
            raise LpError("LP needs at least one variable")
        for r, con in enumerate(self.constraints):
            if len(con.coeffs) != k:
                raise LpError(f"constraint {r} has {len(con.coeffs)} coefficients, expected {k}")
        if not self.lower_bounds:
            object.__setattr__(self, "lower_bounds", tuple(ZERO for _ in range(k)))
        elif len(self.lower_bounds) != k:
            raise LpError(f"{len(self.lower_bounds)} lower bounds for {k} variables")

    @classmethod
    def of(
        cls,
        objective: Sequence[RationalLike],
        constraints: Sequence[LpConstraint] = (),
        lower_bounds: Sequence[RationalLike] | None = None,
    ) -> LpProblem:
        return cls(
            tuple(to_fraction(a) for a in objective),
            tuple(constraints),
            tuple(to_fraction(b) for b in lower_bounds) if lower_bounds else (),
        )

    @property
    def num_vars(self) -> int:
        return len(self.objective)


class LpStatus(str, Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LpSolution:
    status: LpStatus
    value: Fraction | None = None
    assignment: tuple[Fraction, ...] = ()
    pivots: int = field(default=0, compare=False)

    @property
    def optimal(self) -> bool:
        return self.status == LpStatus.OPTIMAL


class _Tableau:
    """Dense tableau in canonical form: basis columns are unit vectors."""

    def __init__(self, rows: list[list[Fraction]], basis: list[int], num_cols: int):
        self.rows = rows
        self.basis = basis
        self.num_cols = num_cols
        self.pivots = 0

    def pivot(self, r: int, j: int) -> None:
        row = self.rows[r]
        p = row[j]
        if p != ONE:
            self.rows[r] = row = [a / p for a in row]
        for k, other in enumerate(self.rows):
            if k == r:
                continue
            f = other[j]
            if f != 0:
                self.rows[k] = [a - f * b for a, b in zip(other, row)]
        self.basis[r] = j
        self.pivots += 1

    def reduced_cost(self, cost: Sequence[Fraction], j: int) -> Fraction:
        return cost[j] - sum(
            (cost[b] * row[j] for b, row in zip(self.basis, self.rows) if cost[b] != 0),
            ZERO,
        )

    def objective(self, cost: Sequence[Fraction]) -> Fraction:
        return sum((cost[b] * row[-1] for b, row in zip(self.basis, self.rows)), ZERO)

    def optimize(self, cost: Sequence[Fraction], allowed: Sequence[bool]) -> bool:
        """Run primal simplex for `cost`. Returns False when unbounded."""
        while True:
            basic = set(self.basis)
            entering = None
            for j in range(self.num_cols):
                if allowed[j] and j not in basic and self.reduced_cost(cost, j) < 0:
                    entering = j
                    break
            if entering is None:
                return True

            leave = None
            best: tuple[Fraction, int] | None = None
            for r, row in enumerate(self.rows):
                a = row[entering]
                if a > 0:
                    key = (row[-1] / a, self.basis[r])
                    if best is None or key < best:
                        best, leave = key, r
            if leave is None:
                return False
            self.pivot(leave, entering)


def simplex_solve(problem: LpProblem) -> LpSolution:
    """Solve `problem` exactly. Status is reported in-band."""
    k = problem.num_vars
    lb = problem.lower_bounds

    # shift x = y + lb so that y >= 0
    normalized: list[tuple[list[Fraction], Relation, Fraction]] = []
    for con in problem.constraints:
        rhs = con.rhs - sum((a * b for a, b in zip(con.coeffs, lb)), ZERO)
        coeffs = list(con.coeffs)
        relation = con.relation
        if rhs < 0:
            coeffs = [-a for a in coeffs]
            rhs = -rhs
            if relation == Relation.LE:
                relation = Relation.GE
            elif relation == Relation.GE:
                relation = Relation.LE
        normalized.append((coeffs, relation, rhs))

    num_slack = sum(1 for _, rel, _ in normalized if rel != Relation.EQ)
    num_art = sum(1 for _, rel, _ in normalized if rel != Relation.LE)
    num_cols = k + num_slack + num_art
    art_start = k + num_slack

    rows: list[list[Fraction]] = []
    basis: list[int] = []
    s_col, a_col = k, art_start
    for coeffs, relation, rhs in normalized:
        row = coeffs + [ZERO] * (num_slack + num_art) + [rhs]
        if relation == Relation.LE:
            row[s_col] = ONE
            basis.append(s_col)
            s_col += 1
        elif relation == Relation.GE:
            row[s_col] = -ONE
            row[a_col] = ONE
            basis.append(a_col)
            s_col += 1
            a_col += 1
        else:
            row[a_col] = ONE
            basis.append(a_col)
            a_col += 1
        rows.append(row)

    tab = _Tableau(rows, basis, num_cols)

    if num_art:
        phase1 = [ZERO] * art_start + [ONE] * num_art
        tab.optimize(phase1, [True] * num_cols)
        if tab.objective(phase1) > 0:
            logger.debug("LP infeasible after %d pivots", tab.pivots)
            return LpSolution(LpStatus.INFEASIBLE, pivots=tab.pivots)

        # drive zero-valued artificials out of the basis; drop redundant rows
        r = 0
        while r < len(tab.rows):
            if tab.basis[r] >= art_start:
                j = next((j for j in range(art_start) if tab.rows[r][j] != 0), None)
                if j is None:
                    del tab.rows[r]
                    del tab.basis[r]
                    continue
                tab.pivot(r, j)
            r += 1

    cost = list(problem.objective) + [ZERO] * (num_slack + num_art)
    allowed = [j < art_start for j in range(num_cols)]
    if not tab.optimize(cost, allowed):
        logger.debug("LP unbounded after %d pivots", tab.pivots)
        return LpSolution(LpStatus.UNBOUNDED, pivots=tab.pivots)

    y = [ZERO] * num_cols
    for b, row in zip(tab.basis, tab.rows):
        y[b] = row[-1]
    x = tuple(y[j] + lb[j] for j in range(k))
    value = sum((c * v for c, v in zip(problem.objective, x)), ZERO)

    bad = [r for r, con in enumerate(problem.constraints) if not con.holds(x)]
    if bad or any(v < b for v, b in zip(x, lb)):
        raise InternalInconsistency(
            "simplex solution violates its own constraints",
            {"violated_rows": bad, "assignment": [fraction_text(v) for v in x]},
        )

    logger.debug("LP optimal value %s after %d pivots", fraction_text(value), tab.pivots)
    return LpSolution(LpStatus.OPTIMAL, value, x, tab.pivots)
