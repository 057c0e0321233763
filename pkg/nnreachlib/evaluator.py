#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: evaluator.py
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
Exact forward evaluation of networks and truth of specifications.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import logging
from collections import namedtuple

from .model import VarKind, VarRef, as_rational, relu
from .nnreachlibexceptions import DimensionMismatch, UnboundVariable

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

LayerTrace = namedtuple('LayerTrace', ['pre_activations', 'outputs'])


def _inputs_of(network, values):
    values = tuple(as_rational(value) for value in values)
    if len(values) != network.input_dim:
        raise DimensionMismatch('Network expects {} inputs, got {}'.format(network.input_dim, len(values)))
    return values


def forward_trace(network, values):
    """Evaluates the network layer by layer.

    :param network: The network
    :param values: The input vector
    :return: One LayerTrace per layer after the input layer, holding the
        pre-activation sums and the outputs of its nodes

    :raises: DimensionMismatch if the input vector has the wrong length
    """
    current = _inputs_of(network, values)
    trace = []
    for layer in network.layers:
        sums = tuple(node.pre_activation(current) for node in layer)
        current = tuple(relu(total) if node.is_relu else total for node, total in zip(layer, sums))
        trace.append(LayerTrace(sums, current))
    return trace


def eval_network(network, values):
    """The output vector of the network for the input vector."""
    return forward_trace(network, values)[-1].outputs


def bind(kind, values):
    """Maps every value of a vector to its input or output variable."""
    kind = VarKind(kind)
    return {VarRef(kind, index): as_rational(value) for index, value in enumerate(values)}


def spec_holds(specification, values):
    """Whether every conjunct of the specification holds exactly.

    :param specification: The specification
    :param values: Mapping of VarRef to its value
    :return: True if all conjuncts are satisfied

    :raises: UnboundVariable if a referenced variable has no value
    """
    for conjunct in specification:
        total = 0
        for coefficient, variable in conjunct.terms:
            try:
                total += coefficient * values[variable]
            except KeyError:
                raise UnboundVariable('No value for variable {}'.format(variable)) from None
        if total > conjunct.bound:
            return False
    return True


def check_witness(instance, values):
    """Whether the input satisfies the input specification and its output the output specification."""
    values = _inputs_of(instance.network, values)
    if not spec_holds(instance.input_spec, bind(VarKind.INPUT, values)):
        return False
    outputs = eval_network(instance.network, values)
    return spec_holds(instance.output_spec, bind(VarKind.OUTPUT, outputs))


def activation_pattern_of(network, values):
    """The activation pattern the network shows on the input.

    One bit per ReLU node in layer-major order, 1 when the pre-activation sum
    is non negative.
    """
    return tuple(1 if total >= 0 else 0
                 for layer, step in zip(network.layers, forward_trace(network, values))
                 for node, total in zip(layer, step.pre_activations)
                 if node.is_relu)
