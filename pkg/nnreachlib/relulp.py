#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: relulp.py
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
ReLU-linear programs built from reachability instances.

A program has one variable per network input and one per node output. Every
identity node contributes its defining equality as a pair of inequalities,
every ReLU node a ReLU-equality ``ReLU(expression) = variable`` and both
specifications their conjuncts. Fixing an activation pattern replaces each
ReLU-equality by linear rows and leaves a plain linear program.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import logging
from collections.abc import Mapping

from .evaluator import forward_trace
from .lp import AffineExpr, LinearProgram
from .model import as_rational, relu
from .nnreachlibexceptions import DimensionMismatch, MissingVariable, PatternLengthMismatch

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


class ReluEquality:
    """The row ``ReLU(expression) = x_target``."""

    __slots__ = ('_expression', '_target')

    def __init__(self, expression, target):
        self._expression = expression
        self._target = target

    @property
    def expression(self):
        """The affine argument of the ReLU."""
        return self._expression

    @property
    def target(self):
        """The id of the variable equal to the ReLU output."""
        return self._target

    def holds(self, point):
        """Whether the point satisfies the ReLU-equality exactly."""
        return relu(self._expression.evaluate(point)) == point[self._target]

    def fixed(self, bit):
        """The linear rows replacing the ReLU-equality for an activation bit.

        Active: expression >= 0 and expression = x_target.
        Inactive: expression <= 0 and x_target = 0.
        """
        expression = self._expression
        target = AffineExpr.variable(self._target)
        if bit:
            return (-expression, expression - target, target - expression)
        return (expression, target, -target)

    def implied(self):
        """The rows every ReLU output satisfies: x_target >= 0 and x_target >= expression."""
        target = AffineExpr.variable(self._target)
        return (-target, self._expression - target)

    def __eq__(self, other):
        if not isinstance(other, ReluEquality):
            return NotImplemented
        return (self._expression, self._target) == (other.expression, other.target)

    def __hash__(self):
        return hash((self._expression, self._target))


class ReluLinearProgram:
    """Inequalities ``expression <= 0`` and ReLU-equalities over numbered variables.

    Rows keep the order they were built in, so fixing a pattern replaces each
    ReLU-equality in place.
    """

    def __init__(self, variable_names, rows, input_ids=(), output_ids=()):
        self._names = tuple(variable_names)
        self._rows = tuple(rows)
        self._input_ids = tuple(input_ids)
        self._output_ids = tuple(output_ids)
        self._relu_equalities = tuple(row for row in self._rows if isinstance(row, ReluEquality))
        self._inequalities = tuple(row for row in self._rows if not isinstance(row, ReluEquality))
        groups = {}
        for position, row in enumerate(self._relu_equalities):
            groups.setdefault(row.expression, []).append(position)
        self._relu_groups = tuple(tuple(group) for group in groups.values())

    @property
    def var_count(self):
        """The number of variables."""
        return len(self._names)

    @property
    def variable_names(self):
        """The names of the variables by id."""
        return self._names

    @property
    def rows(self):
        """All rows in build order."""
        return self._rows

    @property
    def inequalities(self):
        """The linear rows, each meaning ``expression <= 0``."""
        return self._inequalities

    @property
    def relu_equalities(self):
        """The ReLU-equalities in network ReLU order."""
        return self._relu_equalities

    @property
    def input_ids(self):
        """The variable ids of the network inputs."""
        return self._input_ids

    @property
    def output_ids(self):
        """The variable ids of the network outputs."""
        return self._output_ids

    @property
    def relu_groups(self):
        """Positions of the ReLU-equalities sharing one expression, in order of first occurrence.

        All members of a group have the same output value and can share one activation bit.
        """
        return self._relu_groups

    def listing(self):
        """An LP style text listing with one row per line."""
        lines = ['vars {}'.format(' '.join(self._names))]
        for row in self._rows:
            if isinstance(row, ReluEquality):
                lines.append('relu({}) = {}'.format(row.expression.render(self._names), self._names[row.target]))
            else:
                lines.append('{} <= 0'.format(row.render(self._names)))
        return '\n'.join(lines) + '\n'


def _spec_rows(specification, variable_ids):
    for conjunct in specification:
        terms = [(coefficient, variable_ids[variable.index]) for coefficient, variable in conjunct.terms]
        yield AffineExpr(-conjunct.bound, terms)


def build_program(instance):
    """Builds the ReLU-linear program whose solutions project onto the witnesses of the instance.

    :param instance: The reachability instance
    :return: The ReluLinearProgram
    """
    network = instance.network
    names = ['x{}'.format(index) for index in range(network.input_dim)]
    previous = list(range(network.input_dim))
    input_ids = tuple(previous)
    rows = []
    for layer_index, layer in enumerate(network.layers, 1):
        current = []
        for node_index, node in enumerate(layer):
            target = len(names)
            names.append('n{}_{}'.format(layer_index, node_index))
            expression = AffineExpr(node.bias, zip(node.weights, previous))
            if node.is_relu:
                rows.append(ReluEquality(expression, target))
            else:
                difference = expression - AffineExpr.variable(target)
                rows.extend((difference, -difference))
            current.append(target)
        previous = current
    rows.extend(_spec_rows(instance.input_spec, input_ids))
    rows.extend(_spec_rows(instance.output_spec, previous))
    program = ReluLinearProgram(names, rows, input_ids, previous)
    LOGGER.debug('Built program with %s variables, %s inequalities and %s ReLU-equalities',
                 program.var_count, len(program.inequalities), len(program.relu_equalities))
    return program


def _fixed_bits(program, bits):
    count = len(program.relu_equalities)
    if isinstance(bits, Mapping):
        outside = [position for position in bits if not 0 <= position < count]
        if outside:
            raise PatternLengthMismatch('No ReLU-equality at position {} of {}'.format(outside[0], count))
        return dict(bits)
    bits = tuple(bits)
    if len(bits) > count:
        raise PatternLengthMismatch('Got {} bits for {} ReLU-equalities'.format(len(bits), count))
    return dict(enumerate(bits))


def relax(program, bits, bounded=False):
    """Fixes some ReLU-equalities and drops the remaining ones.

    ``bits`` is either a prefix fixing the first ``len(bits)`` ReLU-equalities
    or a mapping of ReLU-equality position to bit. With ``bounded`` a dropped
    ReLU-equality leaves its implied rows behind (see :meth:`ReluEquality.implied`)
    and its output is tied to the output of the first member of its group.
    Both relaxations keep every solution of the program.

    :raises: PatternLengthMismatch if more bits than ReLU-equalities or an unknown position is given
    """
    fixed = _fixed_bits(program, bits)
    inequalities = []
    position = 0
    for row in program.rows:
        if not isinstance(row, ReluEquality):
            inequalities.append(row)
            continue
        if position in fixed:
            inequalities.extend(row.fixed(fixed[position]))
        elif bounded:
            inequalities.extend(row.implied())
        position += 1
    if bounded:
        for first, *others in program.relu_groups:
            leader = AffineExpr.variable(program.relu_equalities[first].target)
            for member in others:
                if member not in fixed:
                    difference = AffineExpr.variable(program.relu_equalities[member].target) - leader
                    inequalities.extend((difference, -difference))
    return LinearProgram(program.var_count, inequalities)


def fix_pattern(program, bits):
    """The linear program of a complete activation pattern.

    :raises: PatternLengthMismatch if the pattern length differs from the ReLU-equality count
    """
    bits = tuple(bits)
    if len(bits) != len(program.relu_equalities):
        raise PatternLengthMismatch('Got {} bits for {} ReLU-equalities'.format(len(bits),
                                                                                len(program.relu_equalities)))
    return relax(program, bits)


def relu_equalities_hold(program, point):
    """Whether the point satisfies every ReLU-equality of the program."""
    if len(point) != program.var_count:
        raise DimensionMismatch('Expected {} values, got {}'.format(program.var_count, len(point)))
    return all(row.holds(point) for row in program.relu_equalities)


def is_solution(program, point):
    """Whether the point satisfies every row of the program."""
    return (relu_equalities_hold(program, point) and
            all(row.evaluate(point) <= 0 for row in program.inequalities))


def project_to_inputs(assignment, instance):
    """The input part of a program assignment.

    :param assignment: A sequence indexed by variable id or a mapping of variable id to value
    :param instance: The instance the program was built from
    :return: The input vector

    :raises: MissingVariable if the assignment does not cover every program variable
    """
    network = instance.network
    var_count = network.input_dim + network.node_count
    if isinstance(assignment, Mapping):
        missing = [index for index in range(var_count) if index not in assignment]
        if missing:
            raise MissingVariable('No value for variable id {}'.format(missing[0]))
    elif len(assignment) < var_count:
        raise MissingVariable('Assignment covers {} of {} variables'.format(len(assignment), var_count))
    return tuple(as_rational(assignment[index]) for index in range(network.input_dim))


def extend_assignment(program, instance, values):
    """The full program assignment obtained by evaluating the network on the input."""
    trace = forward_trace(instance.network, values)
    point = [as_rational(value) for value in values]
    for step in trace:
        point.extend(step.outputs)
    if len(point) != program.var_count:
        raise DimensionMismatch('Program has {} variables, assignment {}'.format(program.var_count, len(point)))
    return tuple(point)

