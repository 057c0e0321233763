#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: gadgets.py
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
Gadgets of the 3SAT reductions.

A gadget is a small fragment of a network implementing one logical function.
The ``add_*`` builders wire a gadget into a :class:`~nnreachlib.graph.NetworkGraph`
and return its output port, a tuple of node references whose values are
summed by the consumer with one common weight. The ``gadget_*`` factories
build stand alone gadgets that can be inspected and evaluated.

The Boolean family only uses the constants -1, -1/2, 0, 1/2 and 1. The
restricted family only uses -c, 0 and d, composite constants like d*c**2 come
from chains of identity nodes started by a node with bias d or -c and
multiplied by -c at every step.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import logging
from enum import Enum
from fractions import Fraction

from .evaluator import eval_network
from .graph import NetworkGraph
from .model import Activation, as_rational
from .nnreachlibexceptions import InvalidGadgetParameter, LayeringError

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

RELU = Activation.RELU
IDENTITY = Activation.IDENTITY

HALF = Fraction(1, 2)

BOOLEAN_CONSTANTS = frozenset(Fraction(value) for value in (-1, -HALF, 0, HALF, 1))


class BooleanKind(Enum):
    """The gadgets combining Boolean values."""

    NOT = 'not'
    OR3 = 'or3'
    AND = 'and'


class RestrictedKind(Enum):
    """The gadgets of the restricted weight family."""

    DISC = 'disc'
    NORM = 'norm'
    NORM_BAR = 'norm_bar'
    EQ0 = 'eq0'
    OR_A = 'or_a'
    OR_B = 'or_b'
    AND_R = 'and_r'


def wire(ports, weight):
    """The (reference, weight) sources connecting every node of the ports with one weight."""
    return [(reference, weight) for port in ports for reference in port]


def restricted_constants(c, d):
    """The constants the restricted family may use."""
    return frozenset((-c, Fraction(0), d))


def positive_parameter(value, name):
    """Coerces a gadget parameter and checks that it is strictly positive."""
    value = as_rational(value)
    if value <= 0:
        raise InvalidGadgetParameter('Parameter {} must be positive, got :{}'.format(name, value))
    return value


class Gadget:
    """A stand alone gadget with named input and output ports."""

    def __init__(self, name, input_names, builder, allowed_constants=None):
        self._name = name
        self._input_names = tuple(input_names)
        self._builder = builder
        self._allowed = frozenset(allowed_constants) if allowed_constants is not None else None
        self._graph, self._ports = self._build()

    def _build(self):
        graph = NetworkGraph(len(self._input_names))
        ports = self._builder(graph, [(graph.input(index),) for index in range(len(self._input_names))])
        return graph, dict(ports)

    @property
    def name(self):
        """The name of the gadget."""
        return self._name

    @property
    def input_names(self):
        """The names of the input ports in input order."""
        return self._input_names

    @property
    def output_names(self):
        """The names of the output ports in output order."""
        return tuple(self._ports)

    @property
    def graph(self):
        """The graph of the gadget."""
        return self._graph

    @property
    def allowed_constants(self):
        """The constants the gadget family may use, None if unrestricted."""
        return self._allowed

    def port(self, name):
        """The node references of an output port."""
        return self._ports[name]

    def constants(self):
        """The weights and biases of the gadget nodes."""
        return self._graph.constants()

    def respects_constants(self):
        """Whether only allowed constants are used."""
        return self._allowed is None or self.constants() <= self._allowed

    def to_network(self):
        """The gadget as a layered network with one output per port.

        Ports made of several nodes are summed by an extra identity node.
        """
        graph, ports = self._build()
        for port in ports.values():
            if len(port) == 1:
                graph.add_output(port[0])
            else:
                graph.add_output(graph.add_node(IDENTITY, 0, wire([port], 1)))
        return graph.to_network(pass_through=True)

    def evaluate(self, *values):
        """The port values for the given inputs."""
        return eval_network(self.to_network(), values)

    def __repr__(self):
        return 'Gadget({}, inputs={}, outputs={})'.format(self._name, self._input_names, self.output_names)


# Boolean family

def add_bool_star_relus(graph, source):
    """The two ReLU nodes max(0, 1/2 - x) and max(0, x - 1/2)."""
    low = graph.add_node(RELU, HALF, [(source, -1)])
    high = graph.add_node(RELU, -HALF, [(source, 1)])
    return low, high


def add_bool_star(graph, source):
    """z = max(0, 1/2 - x) + max(0, x - 1/2) - 1/2, zero exactly for x in {0, 1}."""
    relus = add_bool_star_relus(graph, source)
    return (graph.add_node(IDENTITY, -HALF, wire([relus], 1)),)


def add_flawed_bool(graph, source, epsilon):
    """z = max(0, epsilon - x) + max(0, x - 1 + epsilon)."""
    low = graph.add_node(RELU, epsilon, [(source, -1)])
    high = graph.add_node(RELU, epsilon - 1, [(source, 1)])
    return (graph.add_node(IDENTITY, 0, [(low, 1), (high, 1)]),)


def add_not(graph, port):
    """1 - x."""
    return (graph.add_node(IDENTITY, 1, wire([port], -1)),)


def add_or3(graph, ports):
    """1 - max(0, 1 - sum of inputs), the disjunction on Boolean inputs."""
    inner = graph.add_node(RELU, 1, wire(ports, -1))
    return (graph.add_node(IDENTITY, 1, [(inner, -1)]),)


def add_and(graph, ports, weight=1, min_depth=1):
    """The weighted sum of all inputs."""
    return (graph.add_node(IDENTITY, 0, wire(ports, weight), min_depth=min_depth),)


def gadget_bool_star():
    """The discretizing gadget, output 0 exactly at inputs 0 and 1."""
    return Gadget('bool*', ('x',), lambda graph, inputs: {'z': add_bool_star(graph, inputs[0][0])},
                  BOOLEAN_CONSTANTS)


def gadget_flawed_bool(epsilon):
    """The discretizing gadget with the epsilon margin, output in [0, epsilon] on all of [0, 1].

    :raises: InvalidGadgetParameter unless 0 < epsilon <= 1/2
    """
    epsilon = as_rational(epsilon)
    if not 0 < epsilon <= HALF:
        raise InvalidGadgetParameter('Epsilon must be in (0, 1/2], got :{}'.format(epsilon))
    return Gadget('bool-eps', ('x',), lambda graph, inputs: {'z': add_flawed_bool(graph, inputs[0][0], epsilon)})


def gadget_boolean(kind, fan_in=3):
    """NOT, three input OR or a fan_in input AND.

    :raises: InvalidGadgetParameter for an AND without inputs
    """
    kind = BooleanKind(kind)
    if kind is BooleanKind.NOT:
        return Gadget('not', ('x',), lambda graph, inputs: {'out': add_not(graph, inputs[0])}, BOOLEAN_CONSTANTS)
    if kind is BooleanKind.OR3:
        return Gadget('or3', ('x0', 'x1', 'x2'), lambda graph, inputs: {'out': add_or3(graph, inputs)},
                      BOOLEAN_CONSTANTS)
    if isinstance(fan_in, bool) or not isinstance(fan_in, int) or fan_in < 1:
        raise InvalidGadgetParameter('AND needs at least one input, got :{}'.format(fan_in))
    return Gadget('and', ['x{}'.format(index) for index in range(fan_in)],
                  lambda graph, inputs: {'out': add_and(graph, inputs)}, BOOLEAN_CONSTANTS)


# Restricted family

class ConstantPool:
    """Chains of identity nodes producing constants out of -c and d.

    A chain starts with an input free node with bias d or -c and every further
    node multiplies the previous one by -c. Chains are shared per start value
    and start depth.
    """

    def __init__(self, graph, c, d):
        self._graph = graph
        self._c = c
        self._d = d
        self._chains = {}

    def value_at(self, root_bias, steps, depth):
        """The node at ``depth`` whose value is ``root_bias * (-c) ** steps``."""
        root_depth = depth - steps
        if root_depth < 1:
            raise LayeringError('A chain of {} steps cannot end at depth {}'.format(steps, depth))
        chain = self._chains.setdefault((root_bias, root_depth), [])
        if not chain:
            chain.append(self._graph.add_node(IDENTITY, root_bias, (), min_depth=root_depth))
        while len(chain) <= steps:
            chain.append(self._graph.add_node(IDENTITY, 0, [(chain[-1], -self._c)]))
        return chain[steps]

    def d_power(self, steps, depth):
        """The node at ``depth`` with value d * (-c) ** steps."""
        return self.value_at(self._d, steps, depth)

    def c_power(self, steps, depth):
        """The node at ``depth`` with value (-c) ** (steps + 1)."""
        return self.value_at(-self._c, steps, depth)


def add_disc(graph, first, second, c, d):
    """d - c*max(0, d*x0) - c*max(0, -c*x1), zero for x0 = x1 in {1/c, -d/c**2}."""
    positive = graph.add_node(RELU, 0, wire([first], d))
    negative = graph.add_node(RELU, 0, wire([second], -c))
    return (graph.add_node(IDENTITY, d, [(positive, -c), (negative, -c)]),)


def add_norm(graph, port, c, d):
    """-c*(d - c*max(0, -c*x))."""
    inner = graph.add_node(RELU, 0, wire([port], -c))
    middle = graph.add_node(IDENTITY, d, [(inner, -c)])
    return (graph.add_node(IDENTITY, 0, [(middle, -c)]),)


def add_norm_bar(graph, port, c, d):  # pylint: disable=unused-argument
    """-c*max(0, c**2*x)."""
    scaled = graph.add_node(IDENTITY, 0, wire([port], -c))
    inner = graph.add_node(RELU, 0, [(scaled, -c)])
    return (graph.add_node(IDENTITY, 0, [(inner, -c)]),)


def add_eq0(graph, first, second, c, d):
    """max(0, d*(x0 + x1)) + max(0, -c*(x0 + x1)), zero exactly when x0 + x1 = 0."""
    return (graph.add_node(RELU, 0, wire([first, second], d)),
            graph.add_node(RELU, 0, wire([first, second], -c)))


def add_chain(graph, port, length, c):
    """A chain of identity nodes, each multiplying its predecessor by -c."""
    node = graph.add_node(IDENTITY, 0, wire([port], -c))
    for _ in range(length - 1):
        node = graph.add_node(IDENTITY, 0, [(node, -c)])
    return (node,)


def or_variant(c):
    """OR_A for c >= 1, OR_B otherwise."""
    return RestrictedKind.OR_A if c >= 1 else RestrictedKind.OR_B


def add_or_restricted(graph, pool, ports, c, d, kind):  # pylint: disable=too-many-arguments
    """dc**4 - c*max(0, K + c**2 * sum of inputs) with K = dc**2 (OR_A) or dc**4 (OR_B).

    A node feeding several inputs is connected once.
    """
    kind = RestrictedKind(kind)
    steps, min_depth = (1, 3) if kind is RestrictedKind.OR_A else (3, 4)
    references = list(dict.fromkeys(reference for port in ports for reference in port))
    total = graph.add_node(IDENTITY, 0, [(reference, -c) for reference in references], min_depth=min_depth)
    depth = graph.depth(total)
    offset = pool.d_power(steps, depth)
    inner = graph.add_node(RELU, 0, [(total, -c), (offset, -c)])
    scale = pool.c_power(3, depth + 1)
    return (graph.add_node(IDENTITY, 0, [(inner, -c), (scale, d)]),)


def gadget_restricted(kind, c, d, fan_in=3):
    """A stand alone gadget of the restricted family.

    :param kind: One of RestrictedKind
    :param c: Positive rational, the family uses the weight -c
    :param d: Positive rational
    :param fan_in: Number of inputs of AND_R

    :raises: InvalidGadgetParameter for non positive c or d
    """
    kind = RestrictedKind(kind)
    c = positive_parameter(c, 'c')
    d = positive_parameter(d, 'd')
    allowed = restricted_constants(c, d)
    if kind is RestrictedKind.DISC:
        return Gadget('disc', ('x0', 'x1'),
                      lambda graph, inputs: {'out': add_disc(graph, inputs[0], inputs[1], c, d)}, allowed)
    if kind is RestrictedKind.NORM:
        return Gadget('norm', ('x',), lambda graph, inputs: {'out': add_norm(graph, inputs[0], c, d)}, allowed)
    if kind is RestrictedKind.NORM_BAR:
        return Gadget('norm_bar', ('x',), lambda graph, inputs: {'out': add_norm_bar(graph, inputs[0], c, d)},
                      allowed)
    if kind is RestrictedKind.EQ0:
        return Gadget('eq0', ('x0', 'x1'),
                      lambda graph, inputs: {'out': add_eq0(graph, inputs[0], inputs[1], c, d)}, allowed)
    if kind is RestrictedKind.AND_R:
        if isinstance(fan_in, bool) or not isinstance(fan_in, int) or fan_in < 1:
            raise InvalidGadgetParameter('AND needs at least one input, got :{}'.format(fan_in))
        return Gadget('and_r', ['x{}'.format(index) for index in range(fan_in)],
                      lambda graph, inputs: {'out': add_and(graph, inputs, d)}, allowed)

    def build_or(graph, inputs):
        pool = ConstantPool(graph, c, d)
        return {'out': add_or_restricted(graph, pool, inputs, c, d, kind)}

    return Gadget(kind.value, ('x0', 'x1', 'x2'), build_or, allowed)
