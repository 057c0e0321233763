#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: sat.py
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
Brute force satisfiability for 3-CNF formulas and the formula corpora.

The oracles are deliberately simple: an exhaustive scan over clause bitmasks
and an independently written recursive splitting procedure. Both return the
lexicographically first model, variable 0 being the most significant.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import logging
import random
from itertools import combinations, product

from . import configuration
from .formats import CnfFormula
from .nnreachlibexceptions import DimensionMismatch, InvalidCnf, OracleLimitExceeded

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


class SatResult:
    """Sat with a model or Unsat."""

    def __init__(self, is_sat, assignment=None):
        self._is_sat = bool(is_sat)
        self._assignment = tuple(assignment) if is_sat else None

    @classmethod
    def sat(cls, assignment):
        """A satisfiable result with its model."""
        return cls(True, assignment)

    @classmethod
    def unsat(cls):
        """An unsatisfiable result."""
        return cls(False)

    @property
    def is_sat(self):
        """Whether a model exists."""
        return self._is_sat

    @property
    def assignment(self):
        """The model as 0/1 bits, None if unsatisfiable."""
        return self._assignment

    def render(self):
        """``SAT <bits>`` or ``UNSAT``."""
        if not self._is_sat:
            return 'UNSAT'
        return ' '.join(['SAT'] + [str(bit) for bit in self._assignment])

    def __eq__(self, other):
        if not isinstance(other, SatResult):
            return NotImplemented
        return (self._is_sat, self._assignment) == (other.is_sat, other.assignment)

    def __hash__(self):
        return hash((self._is_sat, self._assignment))

    def __repr__(self):
        return 'SatResult({})'.format(self.render())


def _literal_holds(literal, assignment):
    value = assignment[abs(literal) - 1]
    return bool(value) if literal > 0 else not value


def check_assignment(cnf, assignment):
    """Whether every clause has a true literal under the assignment.

    :raises: DimensionMismatch if the assignment length differs from the variable count
    """
    assignment = tuple(assignment)
    if len(assignment) != cnf.var_count:
        raise DimensionMismatch('Expected {} values, got {}'.format(cnf.var_count, len(assignment)))
    return all(any(_literal_holds(literal, assignment) for literal in clause) for clause in cnf.clauses)


def _check_cap(cnf):
    if cnf.var_count > configuration.SAT_VARIABLE_CAP:
        raise OracleLimitExceeded('{} variables exceed the oracle cap of {}'.format(cnf.var_count,
                                                                                    configuration.SAT_VARIABLE_CAP))


def brute_force_sat(cnf):
    """Scans all assignments in lexicographic order.

    :raises: OracleLimitExceeded above the configured variable cap
    """
    _check_cap(cnf)
    count = cnf.var_count
    masks = []
    for clause in cnf.clauses:
        positive = negative = 0
        for literal in clause:
            bit = 1 << (count - abs(literal))
            if literal > 0:
                positive |= bit
            else:
                negative |= bit
        masks.append((positive, negative))
    everything = (1 << count) - 1
    for candidate in range(1 << count):
        if all(candidate & positive or ~candidate & everything & negative for positive, negative in masks):
            assignment = tuple((candidate >> (count - 1 - index)) & 1 for index in range(count))
            LOGGER.debug('Found model %s', assignment)
            return SatResult.sat(assignment)
    return SatResult.unsat()


def _split(clauses, assigned, count):
    if any(not clause for clause in clauses):
        return None
    if len(assigned) == count:
        return assigned
    variable = len(assigned) + 1
    for value in (0, 1):
        true_literal = variable if value else -variable
        remaining = [tuple(literal for literal in clause if literal != -true_literal)
                     for clause in clauses if true_literal not in clause]
        model = _split(remaining, assigned + (value,), count)
        if model is not None:
            return model
    return None


def recursive_sat(cnf):
    """Splits on variables in order, false first, dropping satisfied clauses.

    :raises: OracleLimitExceeded above the configured variable cap
    """
    _check_cap(cnf)
    model = _split([tuple(clause) for clause in cnf.clauses], (), cnf.var_count)
    return SatResult.sat(model) if model is not None else SatResult.unsat()


def random_cnf(var_count, clause_count, seed):
    """A seeded random formula.

    Each clause picks three distinct variables when there are at least three,
    otherwise variables may repeat, and independent signs.

    :raises: InvalidCnf for non positive counts
    """
    if var_count < 1 or clause_count < 1:
        raise InvalidCnf('Need at least one variable and one clause, got {} and {}'.format(var_count,
                                                                                           clause_count))
    rng = random.Random(seed)
    clauses = []
    for _ in range(clause_count):
        if var_count >= 3:
            variables = rng.sample(range(1, var_count + 1), 3)
        else:
            variables = [rng.randint(1, var_count) for _ in range(3)]
        clauses.append(tuple(variable if rng.random() < 0.5 else -variable for variable in variables))
    return CnfFormula(var_count, clauses)


def all_clauses(var_count, short_clauses=False):
    """Every clause over three distinct variables, in canonical order.

    With ``short_clauses`` the clauses over one or two distinct variables come
    first, padded to three literals by repeating the last one as DIMACS
    padding does.
    """
    sizes = (1, 2, 3) if short_clauses else (3,)
    clauses = []
    for size in sizes:
        for variables in combinations(range(1, var_count + 1), size):
            for signs in product((1, -1), repeat=size):
                literals = [variable * sign for variable, sign in zip(variables, signs)]
                clauses.append(tuple(literals + [literals[-1]] * (3 - size)))
    return clauses


def enumerate_cnfs(var_count, max_clauses, short_clauses=False):
    """Yields every formula made of at most ``max_clauses`` distinct clauses of :func:`all_clauses`.

    Over distinct variables alone every formula with fewer than eight clauses
    is satisfiable, ``short_clauses`` brings in unsatisfiable ones such as
    ``x1`` together with ``not x1``.

    :raises: InvalidCnf for fewer than three variables without short clauses
    """
    if var_count < 1 or (var_count < 3 and not short_clauses):
        raise InvalidCnf('Clauses over distinct variables need three variables, got {}'.format(var_count))
    clauses = all_clauses(var_count, short_clauses)
    for size in range(max_clauses + 1):
        for chosen in combinations(clauses, size):
            yield CnfFormula(var_count, chosen)
