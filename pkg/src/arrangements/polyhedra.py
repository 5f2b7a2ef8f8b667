"""Exact feasibility of linear constraint systems over Q.

Constraints are rows (coeffs, rhs, strict) meaning a.x < b when strict and
a.x <= b otherwise; equalities enter as two opposite non-strict rows.
Feasibility runs Fourier-Motzkin elimination, and a rational witness point
is reconstructed by back substitution.  Everything is deterministic and
exact; sizes stay at desk scale so the doubly exponential worst case never
bites.
"""

from __future__ import annotations

from fractions import Fraction


class Constraint:
    __slots__ = ("coeffs", "rhs", "strict")

    def __init__(self, coeffs, rhs, strict):
        self.coeffs = tuple(Fraction(c) for c in coeffs)
        self.rhs = Fraction(rhs)
        self.strict = bool(strict)

    def evaluate(self, point):
        return sum(c * x for c, x in zip(self.coeffs, point))

    def holds(self, point):
        v = self.evaluate(point)
        return v < self.rhs if self.strict else v <= self.rhs


def less_than(coeffs, rhs):
    return Constraint(coeffs, rhs, True)


def greater_than(coeffs, rhs):
    return Constraint([-Fraction(c) for c in coeffs], -Fraction(rhs), True)


def at_most(coeffs, rhs):
    return Constraint(coeffs, rhs, False)


def at_least(coeffs, rhs):
    return Constraint([-Fraction(c) for c in coeffs], -Fraction(rhs), False)


def equal_to(coeffs, rhs):
    return [at_most(coeffs, rhs), at_least(coeffs, rhs)]


def _eliminate(constraints, var):
    """Project out one variable, Fourier-Motzkin style."""
    zero_rows, pos, neg = [], [], []
    for c in constraints:
        a = c.coeffs[var]
        if a == 0:
            zero_rows.append(c)
        elif a > 0:
            pos.append(c)
        else:
            neg.append(c)
    out = list(zero_rows)
    for p in pos:
        ap = p.coeffs[var]
        for q in neg:
            aq = -q.coeffs[var]
            coeffs = [aq * x + ap * y for x, y in zip(p.coeffs, q.coeffs)]
            rhs = aq * p.rhs + ap * q.rhs
            out.append(Constraint(coeffs, rhs, p.strict or q.strict))
    return out


def _constants_consistent(constraints):
    for c in constraints:
        if c.strict:
            if not Fraction(0) < c.rhs:
                return False
        elif not Fraction(0) <= c.rhs:
            return False
    return True


def find_point(constraints, nvars):
    """A rational point satisfying every constraint, or None.

    Variables are eliminated from the highest index down; levels[k] is the
    system in variables 0..nvars-1-k.  Back substitution then assigns
    variable v from levels[nvars-1-v], where only variables below v (already
    chosen) appear alongside it.
    """
    levels = [list(constraints)]
    for var in range(nvars - 1, -1, -1):
        levels.append(_eliminate(levels[-1], var))
    if not _constants_consistent(levels[-1]):
        return None
    point = [Fraction(0)] * nvars
    for var in range(nvars):
        system = levels[nvars - 1 - var]
        lower, lower_strict = None, False
        upper, upper_strict = None, False
        for c in system:
            a = c.coeffs[var]
            if a == 0:
                continue
            rest = c.rhs - sum(c.coeffs[k] * point[k] for k in range(var))
            bound = rest / a
            if a > 0:  # x at most bound
                if upper is None or bound < upper:
                    upper, upper_strict = bound, c.strict
                elif bound == upper:
                    upper_strict = upper_strict or c.strict
            else:      # x at least bound
                if lower is None or bound > lower:
                    lower, lower_strict = bound, c.strict
                elif bound == lower:
                    lower_strict = lower_strict or c.strict
        value = _choose(lower, lower_strict, upper, upper_strict)
        if value is None:
            raise AssertionError("back substitution hit an empty interval")
        point[var] = value
    for c in constraints:
        if not c.holds(point):
            raise AssertionError("witness reconstruction failed")
    return tuple(point)


def _choose(lower, lower_strict, upper, upper_strict):
    if lower is None and upper is None:
        return Fraction(0)
    if lower is None:
        return upper - 1 if upper_strict else upper
    if upper is None:
        return lower + 1 if lower_strict else lower
    if lower > upper:
        return None
    if lower == upper:
        if lower_strict or upper_strict:
            return None
        return lower
    return (lower + upper) / 2


def feasible(constraints, nvars):
    return find_point(constraints, nvars) is not None
