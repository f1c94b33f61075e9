"""Exact Gauss-Jordan elimination over any of the scalar fields.

The solver never approximates and never reorders anything for magnitude:
rows are processed in input order, each expressing one of its own unknowns
(the first in variable order that survives reduction), so outputs are fully
deterministic.  The outcome explicitly distinguishes the three
possibilities: a unique assignment, a parametric family (free variables
plus affine expressions for the bound ones), or inconsistency with the
offending reduced row.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .fields import zero_like


@dataclass(frozen=True)
class LinearSystem:
    """Rows of (coefficient vector, right-hand side) over a common field."""

    variables: tuple[str, ...]
    rows: tuple[tuple[tuple, object], ...]

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        rows = tuple((tuple(coeffs), rhs) for coeffs, rhs in self.rows)
        for coeffs, _ in rows:
            if len(coeffs) != len(self.variables):
                raise ValueError(
                    f"row has {len(coeffs)} coefficients for "
                    f"{len(self.variables)} variables"
                )
        object.__setattr__(self, "rows", rows)

    def dump(self) -> str:
        """Debug text, one row per line."""
        lines = []
        for coeffs, rhs in self.rows:
            terms = " + ".join(f"({c})*{v}" for c, v in zip(coeffs, self.variables))
            lines.append(f"{terms} = {rhs}")
        return "\n".join(lines)


class AffineExpr:
    """constant + sum of coeff * free-variable, used by parametric outcomes."""

    __slots__ = ("constant", "coeffs")

    def __init__(self, constant, coeffs=None):
        object.__setattr__(self, "constant", constant)
        clean = {}
        for var, c in (coeffs or {}).items():
            if c != zero_like(c):
                clean[var] = c
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("AffineExpr is immutable")

    def coefficient(self, var: str):
        return self.coeffs.get(var, zero_like(self.constant))

    def eval(self, valuation):
        total = self.constant
        for var, c in self.coeffs.items():
            total = total + c * valuation[var]
        return total

    def __eq__(self, other):
        if not isinstance(other, AffineExpr):
            return NotImplemented
        if self.constant != other.constant:
            return False
        keys = set(self.coeffs) | set(other.coeffs)
        return all(self.coefficient(k) == other.coefficient(k) for k in keys)

    def __repr__(self):
        parts = [f"{self.constant}"]
        parts += [f"({c})*{v}" for v, c in self.coeffs.items()]
        return " + ".join(parts)


@dataclass(frozen=True)
class Unique:
    assignment: dict


@dataclass(frozen=True)
class Parametric:
    free: tuple[str, ...]
    bound: dict


@dataclass(frozen=True)
class Inconsistent:
    row_index: int
    reduced_row: tuple = field(default=())


SolveOutcome = Unique | Parametric | Inconsistent


def gauss_jordan(system: LinearSystem) -> SolveOutcome:
    """Full elimination, equation by equation in input order.

    Each row in turn expresses one of its unknowns -- the first, in variable
    order, that originally appears in the row and still survives reduction
    -- and that unknown is eliminated from every other row.  Rows that
    reduce to 0 = 0 are dropped; a row reducing to 0 = nonzero makes the
    system inconsistent and is reported by its original index.  Variables no
    row ever expressed come back as the free variables of a parametric
    outcome.
    """
    variables = system.variables
    nvars = len(variables)
    rows = [(list(coeffs), rhs) for coeffs, rhs in system.rows]
    pivot_row_of_var: dict[int, int] = {}

    for i in range(len(rows)):
        coeffs, rhs = rows[i]
        zero = zero_like(rhs)
        pivot = None
        for j in range(nvars):
            if system.rows[i][0][j] != zero and coeffs[j] != zero:
                pivot = j
                break
        if pivot is None:
            for j in range(nvars):
                if coeffs[j] != zero:
                    pivot = j
                    break
        if pivot is None:
            if rhs != zero:
                return Inconsistent(i, (tuple(coeffs), rhs))
            continue  # 0 = 0, drop the row
        p = coeffs[pivot]
        coeffs = [c / p for c in coeffs]
        rhs = rhs / p
        rows[i] = (coeffs, rhs)
        for k in range(len(rows)):
            if k == i:
                continue
            ck, rk = rows[k]
            f = ck[pivot]
            if f == zero:
                continue
            rows[k] = ([a - f * b for a, b in zip(ck, coeffs)], rk - f * rhs)
        pivot_row_of_var[pivot] = i

    free = tuple(variables[j] for j in range(nvars) if j not in pivot_row_of_var)
    if not free:
        assignment = {
            variables[j]: rows[i][1] for j, i in pivot_row_of_var.items()
        }
        return Unique(assignment)

    free_idx = [j for j in range(nvars) if j not in pivot_row_of_var]
    bound = {}
    for j, i in pivot_row_of_var.items():
        coeffs, rhs = rows[i]
        expr_coeffs = {variables[k]: -coeffs[k] for k in free_idx}
        bound[variables[j]] = AffineExpr(rhs, expr_coeffs)
    return Parametric(free, bound)


def substitute_and_verify(system: LinearSystem, outcome: SolveOutcome) -> bool:
    """Exact regression check: does the outcome satisfy every original row?

    Unique assignments are substituted directly; parametric outcomes are
    checked as identities in the free variables; an Inconsistent outcome
    verifies by re-deriving inconsistency.
    """
    if isinstance(outcome, Inconsistent):
        return isinstance(gauss_jordan(system), Inconsistent)

    if isinstance(outcome, Unique):
        for coeffs, rhs in system.rows:
            total = zero_like(rhs)
            for c, var in zip(coeffs, system.variables):
                total = total + c * outcome.assignment[var]
            if total != rhs:
                return False
        return True

    for coeffs, rhs in system.rows:
        const = zero_like(rhs)
        acc: dict[str, object] = {}
        for c, var in zip(coeffs, system.variables):
            if var in outcome.bound:
                e = outcome.bound[var]
                const = const + c * e.constant
                for fv, fc in e.coeffs.items():
                    acc[fv] = acc.get(fv, zero_like(rhs)) + c * fc
            else:
                acc[var] = acc.get(var, zero_like(rhs)) + c
        if const != rhs:
            return False
        if any(v != zero_like(v) for v in acc.values()):
            return False
    return True
