#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: lp.py
#
# Copyright 2026 nnreachlib contributors
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
#  of this software and associated documentation files (the "Software"), to
#  deal in the Software without restriction, including without limitation the
#  rights to use, copy, modify, merge, publish, distribute, sublicense, and/or
#  sell copies of the Software, and to permit persons to whom the Software is
#  furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in
#  all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
#  IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
#  FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
#  AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
#  LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
#  FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER
#  DEALINGS IN THE SOFTWARE.
#

"""
Exact feasibility of linear programs over the rationals.

Rows are affine expressions read as ``expression <= 0``. :func:`feasible`
first eliminates the equalities hidden in the program (a row together with
its negation) by exact substitution, then runs phase one of a tableau
simplex with Bland's rule on what is left and substitutes back.
:func:`fourier_motzkin_feasible` is an independent, exponential oracle for
small programs.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import logging
from collections import defaultdict
from fractions import Fraction

from . import configuration
from .model import ZERO, as_rational, format_rational
from .nnreachlibexceptions import DimensionMismatch, SolverAborted

__author__ = '''nnreachlib contributors'''
__docformat__ = '''google'''
__date__ = '''18-10-2026'''
__copyright__ = '''Copyright 2026, nnreachlib contributors'''
__credits__ = ["nnreachlib contributors"]
__license__ = '''MIT'''
__maintainer__ = '''nnreachlib contributors'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".


# This is the main prefix used for logging
LOGGER_BASENAME = '''nnreachlib'''
LOGGER = logging.getLogger(LOGGER_BASENAME)
LOGGER.addHandler(logging.NullHandler())


class AffineExpr:
    """``constant + sum(coefficient * x_variable)`` with exact coefficients.

    Terms are kept sorted by variable id, repeated variables are summed and
    zero coefficients dropped, so equal expressions compare equal.
    """

    __slots__ = ('_constant', '_terms')

    def __init__(self, constant=0, terms=()):
        self._constant = as_rational(constant)
        collected = {}
        for coefficient, variable in terms:
            coefficient = as_rational(coefficient)
            if coefficient:
                collected[variable] = collected.get(variable, ZERO) + coefficient
        self._terms = tuple((coefficient, variable)
                            for variable, coefficient in sorted(collected.items())
                            if coefficient)

    @classmethod
    def from_coefficients(cls, constant, coefficients):
        """Builds an expression out of a variable to coefficient mapping."""
        expression = cls.__new__(cls)
        expression._constant = Fraction(constant)  # pylint: disable=protected-access
        expression._terms = tuple((coefficient, variable)  # pylint: disable=protected-access
                                  for variable, coefficient in sorted(coefficients.items())
                                  if coefficient)
        return expression

    @classmethod
    def variable(cls, variable, coefficient=1):
        """The expression ``coefficient * x_variable``."""
        return cls(0, [(coefficient, variable)])

    @property
    def constant(self):
        """The constant part."""
        return self._constant

    @property
    def terms(self):
        """The (coefficient, variable id) pairs sorted by variable id."""
        return self._terms

    def coefficients(self):
        """A fresh variable id to coefficient mapping."""
        return {variable: coefficient for coefficient, variable in self._terms}

    def variables(self):
        """The variable ids with a non zero coefficient."""
        return tuple(variable for _, variable in self._terms)

    def evaluate(self, point):
        """The value of the expression at a point indexed by variable id."""
        return sum((coefficient * point[variable] for coefficient, variable in self._terms), self._constant)

    def scaled(self, factor):
        """The expression multiplied by a rational factor."""
        factor = as_rational(factor)
        return AffineExpr.from_coefficients(self._constant * factor,
                                            {variable: coefficient * factor
                                             for coefficient, variable in self._terms})

    def __neg__(self):
        return self.scaled(-1)

    def __add__(self, other):
        if not isinstance(other, AffineExpr):
            return NotImplemented
        coefficients = self.coefficients()
        for coefficient, variable in other.terms:
            coefficients[variable] = coefficients.get(variable, ZERO) + coefficient
        return AffineExpr.from_coefficients(self._constant + other.constant, coefficients)

    def __sub__(self, other):
        if not isinstance(other, AffineExpr):
            return NotImplemented
        return self + (-other)

    def render(self, names=None):
        """Renders the expression, using the variable names if given."""
        parts = ['{}*{}'.format(format_rational(coefficient),
                                names[variable] if names else 'v{}'.format(variable))
                 for coefficient, variable in self._terms]
        if self._constant or not parts:
            parts.append(format_rational(self._constant))
        return ' + '.join(parts)

    def __eq__(self, other):
        if not isinstance(other, AffineExpr):
            return NotImplemented
        return (self._constant, self._terms) == (other.constant, other.terms)

    def __hash__(self):
        return hash((self._constant, self._terms))

    def __repr__(self):
        return 'AffineExpr({})'.format(self.render())


class LinearProgram:
    """A conjunction of rows ``expression <= 0`` over ``var_count`` free variables."""

    def __init__(self, var_count, inequalities):
        self._var_count = var_count
        self._inequalities = tuple(inequalities)
        for row in self._inequalities:
            if any(variable >= var_count or variable < 0 for variable in row.variables()):
                raise DimensionMismatch('Row {} references a variable out of range'.format(row.render()))

    @property
    def var_count(self):
        """The number of variables."""
        return self._var_count

    @property
    def inequalities(self):
        """The rows of the program."""
        return self._inequalities

    def __len__(self):
        return len(self._inequalities)


class FeasibilityResult:
    """Either a feasible point or the statement that there is none."""

    __slots__ = ('_feasible', '_point')

    def __init__(self, is_feasible, point=None):
        self._feasible = is_feasible
        self._point = tuple(point) if point is not None else None

    @classmethod
    def infeasible(cls):
        """The infeasible result."""
        return cls(False)

    @property
    def is_feasible(self):
        """Whether a point was found."""
        return self._feasible

    @property
    def point(self):
        """The feasible point indexed by variable id, None when infeasible."""
        return self._point

    def __eq__(self, other):
        if not isinstance(other, FeasibilityResult):
            return NotImplemented
        return (self._feasible, self._point) == (other.is_feasible, other.point)

    def __hash__(self):
        return hash((self._feasible, self._point))

    def __repr__(self):
        if not self._feasible:
            return 'FeasibilityResult(infeasible)'
        return 'FeasibilityResult(feasible, ({}))'.format(', '.join(format_rational(value)
                                                                    for value in self._point))


def check_point(program, point):
    """Whether the point satisfies every row of the program exactly.

    :raises: DimensionMismatch if the point does not have one value per variable
    """
    if len(point) != program.var_count:
        raise DimensionMismatch('Expected {} values, got {}'.format(program.var_count, len(point)))
    return all(row.evaluate(point) <= 0 for row in program.inequalities)


def _split_equalities(rows):
    """Separates the rows that come with their negation from the plain inequalities."""
    present = set(rows)
    paired = set()
    equalities = []
    for row in rows:
        if row in paired or not row.terms:
            continue
        negation = -row
        if negation in present:
            equalities.append(row)
            paired.update((row, negation))
    return equalities, [row for row in rows if row not in paired]


class _Eliminator:
    """Keeps every eliminated variable as an affine function of the variables still free."""

    def __init__(self):
        self._substitutions = {}
        self._occurrences = defaultdict(set)

    @property
    def eliminated(self):
        """The eliminated variable ids."""
        return self._substitutions.keys()

    def reduce(self, constant, coefficients):
        """Rewrites an expression over free variables only."""
        result = {}
        for variable, coefficient in coefficients.items():
            substitution = self._substitutions.get(variable)
            if substitution is None:
                result[variable] = result.get(variable, ZERO) + coefficient
                continue
            offset, mapping = substitution
            constant += coefficient * offset
            for other, weight in mapping.items():
                result[other] = result.get(other, ZERO) + coefficient * weight
        return constant, {variable: value for variable, value in result.items() if value}

    def add(self, expression):
        """Eliminates one variable using ``expression = 0``.

        :return: False if the equality reduces to a false constant statement
        """
        constant, coefficients = self.reduce(expression.constant, expression.coefficients())
        if not coefficients:
            return constant == 0
        pivot = max(coefficients)
        factor = coefficients.pop(pivot)
        offset = -constant / factor
        mapping = {variable: -coefficient / factor for variable, coefficient in coefficients.items()}
        for other in self._occurrences.pop(pivot, ()):
            other_offset, other_mapping = self._substitutions[other]
            weight = other_mapping.pop(pivot)
            for variable, coefficient in mapping.items():
                value = other_mapping.get(variable, ZERO) + weight * coefficient
                if value:
                    other_mapping[variable] = value
                    self._occurrences[variable].add(other)
                else:
                    other_mapping.pop(variable, None)
                    self._occurrences[variable].discard(other)
            self._substitutions[other] = (other_offset + weight * offset, other_mapping)
        self._substitutions[pivot] = (offset, mapping)
        for variable in mapping:
            self._occurrences[variable].add(pivot)
        return True

    def complete(self, values, var_count):
        """Extends values of the free variables to a full point."""
        point = [ZERO] * var_count
        for variable, value in values.items():
            point[variable] = value
        for variable, (offset, mapping) in self._substitutions.items():
            point[variable] = sum((weight * point[other] for other, weight in mapping.items()), offset)
        return point


class _PhaseOne:  # pylint: disable=too-few-public-methods
    """Phase one of the tableau simplex with Bland's rule over free variables.

    Each free variable is split into two non negative parts, every row gets a
    slack and rows with a negative right hand side an artificial variable.
    """

    def __init__(self, rows, pivot_limit):
        self._columns = sorted({variable for _, coefficients in rows for variable in coefficients})
        self._pivot_limit = pivot_limit
        self._pivots = 0
        width = len(self._columns)
        position = {variable: index for index, variable in enumerate(self._columns)}
        artificial_rows = [index for index, (constant, _) in enumerate(rows) if constant > 0]
        self._artificial_start = 2 * width + len(rows)
        column_count = self._artificial_start + len(artificial_rows)
        self._tableau = []
        self._basis = []
        for index, (constant, coefficients) in enumerate(rows):
            row = [ZERO] * (column_count + 1)
            bound = -constant
            sign = 1 if bound >= 0 else -1
            for variable, coefficient in coefficients.items():
                row[position[variable]] = sign * coefficient
                row[width + position[variable]] = -sign * coefficient
            row[2 * width + index] = Fraction(sign)
            row[-1] = sign * bound
            if sign > 0:
                self._basis.append(2 * width + index)
            else:
                artificial = self._artificial_start + artificial_rows.index(index)
                row[artificial] = Fraction(1)
                self._basis.append(artificial)
            self._tableau.append(row)
        self._cost = [ZERO] * (column_count + 1)
        for row, basic in zip(self._tableau, self._basis):
            if basic >= self._artificial_start:
                self._cost = [cost - value for cost, value in zip(self._cost, row)]
        for column in range(self._artificial_start, column_count):
            self._cost[column] = ZERO

    def _pivot(self, row_index, column):
        pivot_row = self._tableau[row_index]
        factor = pivot_row[column]
        pivot_row = [value / factor for value in pivot_row]
        self._tableau[row_index] = pivot_row
        for index, row in enumerate(self._tableau):
            if index == row_index or not row[column]:
                continue
            weight = row[column]
            self._tableau[index] = [value - weight * pivot_value for value, pivot_value in zip(row, pivot_row)]
        if self._cost[column]:
            weight = self._cost[column]
            self._cost = [value - weight * pivot_value for value, pivot_value in zip(self._cost, pivot_row)]
        self._basis[row_index] = column
        self._pivots += 1
        if self._pivots > self._pivot_limit:
            raise SolverAborted('Simplex exceeded {} pivots'.format(self._pivot_limit))

    def _leaving_row(self, column):
        best = None
        best_ratio = None
        for index, row in enumerate(self._tableau):
            if row[column] <= 0:
                continue
            ratio = row[-1] / row[column]
            if best is None or ratio < best_ratio or (ratio == best_ratio and self._basis[index] < self._basis[best]):
                best, best_ratio = index, ratio
        return best

    def solve(self):
        """Runs phase one.

        :return: Mapping of variable id to value for a feasible point, None if infeasible
        """
        while True:
            entering = next((column for column, cost in enumerate(self._cost[:-1]) if cost < 0), None)
            if entering is None:
                break
            leaving = self._leaving_row(entering)
            if leaving is None:
                raise SolverAborted('Phase one objective is unbounded')
            self._pivot(leaving, entering)
        if self._cost[-1] < 0:
            return None
        width = len(self._columns)
        values = [ZERO] * (2 * width)
        for row, basic in zip(self._tableau, self._basis):
            if basic < 2 * width:
                values[basic] = row[-1]
        LOGGER.debug('Phase one finished after %s pivots', self._pivots)
        return {variable: values[index] - values[width + index] for index, variable in enumerate(self._columns)}


def feasible(program, pivot_limit=None):
    """Decides whether the linear program has a solution.

    :param program: The LinearProgram
    :param pivot_limit: Maximum number of simplex pivots, defaults to the configured limit
    :return: FeasibilityResult with an exact point satisfying every row, or the infeasible result

    :raises: SolverAborted if the pivot limit is exceeded, ValueError for a negative or non integer limit
    """
    limit = configuration.SIMPLEX_PIVOT_LIMIT if pivot_limit is None else pivot_limit
    if isinstance(limit, bool) or not isinstance(limit, int) or limit < 0:
        raise ValueError('Pivot limit must be a non negative integer, got :{}'.format(limit))
    equalities, inequalities = _split_equalities(program.inequalities)
    eliminator = _Eliminator()
    for equality in equalities:
        if not eliminator.add(equality):
            return FeasibilityResult.infeasible()
    rows = []
    for row in inequalities:
        constant, coefficients = eliminator.reduce(row.constant, row.coefficients())
        if coefficients:
            rows.append((constant, coefficients))
        elif constant > 0:
            return FeasibilityResult.infeasible()
    values = _PhaseOne(rows, limit).solve() if rows else {}
    if values is None:
        return FeasibilityResult.infeasible()
    point = eliminator.complete(values, program.var_count)
    if not check_point(program, point):
        raise SolverAborted('Computed point violates the program')
    return FeasibilityResult(True, point)


def _normalized(constant, coefficients):
    """Scales a row by a positive factor so that its first coefficient is +1 or -1."""
    terms = sorted((variable, coefficient) for variable, coefficient in coefficients.items() if coefficient)
    if not terms:
        return (Fraction(1) if constant > 0 else ZERO), ()
    scale = abs(terms[0][1])
    return constant / scale, tuple((variable, coefficient / scale) for variable, coefficient in terms)


def fourier_motzkin_feasible(program):
    """Decides feasibility by eliminating the variables one after the other.

    Exponential in the number of variables, meant as an oracle for small programs.
    """
    rows = {_normalized(row.constant, row.coefficients()) for row in program.inequalities}
    variables = sorted({variable for _, terms in rows for variable, _ in terms})
    for variable in variables:
        upper, lower, kept = [], [], set()
        for constant, terms in rows:
            coefficient = dict(terms).get(variable, ZERO)
            if coefficient > 0:
                upper.append((constant, dict(terms), coefficient))
            elif coefficient < 0:
                lower.append((constant, dict(terms), coefficient))
            else:
                kept.add((constant, terms))
        for upper_constant, upper_terms, upper_coefficient in upper:
            for lower_constant, lower_terms, lower_coefficient in lower:
                combined = {}
                for other in set(upper_terms) | set(lower_terms):
                    if other == variable:
                        continue
                    combined[other] = (upper_terms.get(other, ZERO) / upper_coefficient +
                                       lower_terms.get(other, ZERO) / -lower_coefficient)
                kept.add(_normalized(upper_constant / upper_coefficient + lower_constant / -lower_coefficient,
                                     combined))
        if any(not terms and constant > 0 for constant, terms in kept):
            return False
        rows = {row for row in kept if row[1] or row[0] > 0}
    return all(constant <= 0 for constant, _ in rows)
