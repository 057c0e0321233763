#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: model.py
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
Core domain objects of nnreachlib.

Networks, specifications and verdicts are immutable once constructed. The
only numeric scalar anywhere is :class:`fractions.Fraction`, floats are
rejected on entry.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import logging
import re
from enum import Enum
from fractions import Fraction
from numbers import Rational as _RationalABC

from .nnreachlibexceptions import (InvalidRational,
                                   InvalidNetwork,
                                   DimensionMismatch,
                                   InvalidSpecification)

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

Rational = Fraction

ZERO = Fraction(0)

RATIONAL_PATTERN = re.compile(r'^[+-]?(?:\d+/(?P<denominator>\d+)|\d+\.\d+|\.\d+|\d+)$')


def parse_rational(text):
    """Parses an exact rational out of text.

    Accepted forms are an optionally signed integer, ``p/q`` or a finite decimal.

    :param text: The text to parse
    :return: The value in lowest terms

    :raises: InvalidRational if the text is malformed or the denominator is zero
    """
    if not isinstance(text, str):
        raise InvalidRational('Expected text, got :{}'.format(type(text).__name__))
    candidate = text.strip()
    match = RATIONAL_PATTERN.match(candidate)
    if not match:
        raise InvalidRational('Invalid rational :{}'.format(text))
    denominator = match.group('denominator')
    if denominator is not None and int(denominator) == 0:
        raise InvalidRational('Zero denominator in :{}'.format(text))
    return Fraction(candidate)


def format_rational(value):
    """Renders a rational canonically as ``p`` or ``p/q``."""
    return str(Fraction(value))


def as_rational(value):
    """Coerces integers, fractions and rational text to a Fraction.

    :raises: TypeError for floats, booleans and anything else that is not exact
    """
    if isinstance(value, bool):
        raise TypeError('Booleans are not rationals')
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, _RationalABC):
        return Fraction(value.numerator, value.denominator)
    raise TypeError('Cannot use {} as an exact rational'.format(type(value).__name__))


def relu(value):
    """Returns max(0, value) exactly."""
    value = as_rational(value)
    return value if value > 0 else ZERO


class Activation(Enum):
    """The activation functions a node can have."""

    RELU = 'relu'
    IDENTITY = 'id'


class Node:
    """A node computing activation(sum of weighted previous layer outputs + bias)."""

    __slots__ = ('_activation', '_bias', '_weights')

    def __init__(self, activation, bias, weights):
        try:
            self._activation = Activation(activation)
        except ValueError:
            raise InvalidNetwork('Unknown activation :{}'.format(activation)) from None
        self._bias = as_rational(bias)
        self._weights = tuple(as_rational(weight) for weight in weights)

    @property
    def activation(self):
        """The activation of the node."""
        return self._activation

    @property
    def is_relu(self):
        """Whether the node has the ReLU activation."""
        return self._activation is Activation.RELU

    @property
    def bias(self):
        """The bias of the node."""
        return self._bias

    @property
    def weights(self):
        """The weights over the outputs of the previous layer."""
        return self._weights

    def pre_activation(self, values):
        """The weighted sum plus bias over the previous layer outputs."""
        return sum((weight * value for weight, value in zip(self._weights, values) if weight), self._bias)

    def __eq__(self, other):
        if not isinstance(other, Node):
            return NotImplemented
        return (self._activation, self._bias, self._weights) == (other.activation, other.bias, other.weights)

    def __hash__(self):
        return hash((self._activation, self._bias, self._weights))

    def __repr__(self):
        return 'Node({!r}, {}, ({}))'.format(self._activation.value,
                                             format_rational(self._bias),
                                             ', '.join(format_rational(weight) for weight in self._weights))


class Layer:
    """A non empty, ordered collection of nodes."""

    __slots__ = ('_nodes',)

    def __init__(self, nodes):
        self._nodes = tuple(nodes)
        if not self._nodes:
            raise InvalidNetwork('A layer needs at least one node')
        if not all(isinstance(node, Node) for node in self._nodes):
            raise InvalidNetwork('A layer can only hold nodes')

    @property
    def nodes(self):
        """The nodes of the layer."""
        return self._nodes

    @property
    def width(self):
        """The number of nodes of the layer."""
        return len(self._nodes)

    @property
    def relu_count(self):
        """The number of ReLU nodes in the layer."""
        return sum(1 for node in self._nodes if node.is_relu)

    def __iter__(self):
        return iter(self._nodes)

    def __len__(self):
        return len(self._nodes)

    def __getitem__(self, index):
        return self._nodes[index]

    def __eq__(self, other):
        if not isinstance(other, Layer):
            return NotImplemented
        return self._nodes == other.nodes

    def __hash__(self):
        return hash(self._nodes)


class Network:
    """A strictly layered feed forward network.

    Every node reads exactly the outputs of the preceding layer, the first
    hidden layer reads the inputs. The last layer is the output layer and
    holds identity nodes only.
    """

    def __init__(self, input_dim, layers):
        if isinstance(input_dim, bool) or not isinstance(input_dim, int) or input_dim < 1:
            raise InvalidNetwork('Input dimension must be a positive integer, got :{}'.format(input_dim))
        self._input_dim = input_dim
        self._layers = tuple(layer if isinstance(layer, Layer) else Layer(layer) for layer in layers)
        if not self._layers:
            raise InvalidNetwork('A network needs at least one layer')
        width = input_dim
        for index, layer in enumerate(self._layers, 1):
            for position, node in enumerate(layer):
                if len(node.weights) != width:
                    raise DimensionMismatch(('Node {} of layer {} has {} weights, '
                                             'the previous layer has width {}').format(position,
                                                                                       index,
                                                                                       len(node.weights),
                                                                                       width))
            width = layer.width
        if any(node.is_relu for node in self._layers[-1]):
            raise InvalidNetwork('The output layer can only contain identity nodes')
        self._relu_positions = tuple((layer_index, node_index)
                                     for layer_index, layer in enumerate(self._layers)
                                     for node_index, node in enumerate(layer)
                                     if node.is_relu)

    @property
    def input_dim(self):
        """The number of inputs."""
        return self._input_dim

    @property
    def output_dim(self):
        """The width of the output layer."""
        return self._layers[-1].width

    @property
    def layers(self):
        """The layers after the input layer, the last one being the output layer."""
        return self._layers

    @property
    def depth(self):
        """The number of layers counting the implicit input layer."""
        return len(self._layers) + 1

    @property
    def node_count(self):
        """The number of nodes after the input layer."""
        return sum(layer.width for layer in self._layers)

    @property
    def relu_count(self):
        """The number of ReLU nodes."""
        return len(self._relu_positions)

    def relu_positions(self):
        """The (layer index, node index) of every ReLU node in layer-major, node-minor order."""
        return self._relu_positions

    def constants(self):
        """The set of all weights and biases occurring in the network."""
        values = set()
        for layer in self._layers:
            for node in layer:
                values.add(node.bias)
                values.update(node.weights)
        return frozenset(values)

    def __eq__(self, other):
        if not isinstance(other, Network):
            return NotImplemented
        return (self._input_dim, self._layers) == (other.input_dim, other.layers)

    def __hash__(self):
        return hash((self._input_dim, self._layers))

    def __repr__(self):
        return 'Network(inputs={}, widths={})'.format(self._input_dim,
                                                      [layer.width for layer in self._layers])


class VarKind(Enum):
    """The two kinds of specification variables."""

    INPUT = 'x'
    OUTPUT = 'y'


class VarRef:
    """A reference to an input or an output of a network."""

    __slots__ = ('_kind', '_index')

    def __init__(self, kind, index):
        self._kind = VarKind(kind)
        if isinstance(index, bool) or not isinstance(index, int) or index < 0:
            raise InvalidSpecification('Variable index must be a non negative integer, got :{}'.format(index))
        self._index = index

    @classmethod
    def input(cls, index):
        """Reference to input ``x<index>``."""
        return cls(VarKind.INPUT, index)

    @classmethod
    def output(cls, index):
        """Reference to output ``y<index>``."""
        return cls(VarKind.OUTPUT, index)

    @property
    def kind(self):
        """The kind of the variable."""
        return self._kind

    @property
    def index(self):
        """The index of the variable within its dimension."""
        return self._index

    def _key(self):
        return self._kind.value, self._index

    def __eq__(self, other):
        if not isinstance(other, VarRef):
            return NotImplemented
        return self._key() == other._key()  # pylint: disable=protected-access

    def __lt__(self, other):
        return self._key() < other._key()  # pylint: disable=protected-access

    def __hash__(self):
        return hash(self._key())

    def __str__(self):
        return '{}{}'.format(self._kind.value, self._index)

    def __repr__(self):
        return 'VarRef({})'.format(self)


class Constraint:
    """A single linear inequality ``sum(coefficient * variable) <= bound``.

    Terms keep their order and may repeat a variable, repeated variables are
    summed when the constraint is evaluated.
    """

    __slots__ = ('_terms', '_bound')

    def __init__(self, terms, bound):
        self._terms = tuple((as_rational(coefficient), variable) for coefficient, variable in terms)
        if not self._terms:
            raise InvalidSpecification('A constraint needs at least one term')
        if not all(isinstance(variable, VarRef) for _, variable in self._terms):
            raise InvalidSpecification('Constraint terms must reference variables')
        self._bound = as_rational(bound)

    @property
    def terms(self):
        """The (coefficient, variable) pairs of the left hand side."""
        return self._terms

    @property
    def bound(self):
        """The right hand side."""
        return self._bound

    def variables(self):
        """The distinct variables of the constraint, sorted."""
        return tuple(sorted({variable for _, variable in self._terms}))

    def is_simple(self):
        """Whether the constraint restricts a single scaled variable."""
        return len(self.variables()) == 1

    def negated(self):
        """The constraint with both sides multiplied by -1, i.e. the ``>=`` reading."""
        return Constraint([(-coefficient, variable) for coefficient, variable in self._terms], -self._bound)

    def __eq__(self, other):
        if not isinstance(other, Constraint):
            return NotImplemented
        return (self._terms, self._bound) == (other.terms, other.bound)

    def __hash__(self):
        return hash((self._terms, self._bound))

    def __str__(self):
        left = ' + '.join('{}*{}'.format(format_rational(coefficient), variable)
                          for coefficient, variable in self._terms)
        return '{} <= {}'.format(left, format_rational(self._bound))

    def __repr__(self):
        return 'Constraint({})'.format(self)


class Specification:
    """A conjunction of constraints over inputs only or over outputs only.

    The empty conjunction is the always true specification.
    """

    def __init__(self, conjuncts=(), role=None):
        self._conjuncts = tuple(conjuncts)
        if not all(isinstance(conjunct, Constraint) for conjunct in self._conjuncts):
            raise InvalidSpecification('A specification can only hold constraints')
        kinds = {variable.kind for conjunct in self._conjuncts for variable in conjunct.variables()}
        if len(kinds) > 1:
            raise InvalidSpecification('A specification cannot mix input and output variables')
        role = VarKind(role) if role is not None else None
        if role is not None and kinds and kinds != {role}:
            raise InvalidSpecification('Specification variables do not match role :{}'.format(role.name.lower()))
        self._role = role or (kinds.pop() if kinds else None)

    @classmethod
    def top(cls, role=None):
        """The always true specification."""
        return cls((), role)

    @property
    def conjuncts(self):
        """The constraints of the specification."""
        return self._conjuncts

    @property
    def role(self):
        """The kind of variable the specification talks about, None if unknown."""
        return self._role

    def is_top(self):
        """Whether the specification has no conjuncts."""
        return not self._conjuncts

    def is_simple(self):
        """Whether every conjunct restricts a single scaled variable."""
        return all(conjunct.is_simple() for conjunct in self._conjuncts)

    def variables(self):
        """All distinct variables referenced, sorted."""
        return tuple(sorted({variable for conjunct in self._conjuncts for variable in conjunct.variables()}))

    def __iter__(self):
        return iter(self._conjuncts)

    def __len__(self):
        return len(self._conjuncts)

    def __eq__(self, other):
        if not isinstance(other, Specification):
            return NotImplemented
        return self._conjuncts == other.conjuncts

    def __hash__(self):
        return hash(self._conjuncts)

    def __repr__(self):
        return 'Specification({})'.format(' and '.join(str(conjunct) for conjunct in self._conjuncts) or 'true')


def spec_is_simple(specification):
    """Whether every conjunct of the specification constrains exactly one variable."""
    return specification.is_simple()


class Instance:
    """A reachability question: a network with an input and an output specification."""

    def __init__(self, network, input_spec=None, output_spec=None):
        self._network = network
        self._input_spec = input_spec if input_spec is not None else Specification.top(VarKind.INPUT)
        self._output_spec = output_spec if output_spec is not None else Specification.top(VarKind.OUTPUT)
        self._validate(self._input_spec, VarKind.INPUT, network.input_dim)
        self._validate(self._output_spec, VarKind.OUTPUT, network.output_dim)

    @staticmethod
    def _validate(specification, kind, dimension):
        if specification.role not in (None, kind):
            raise InvalidSpecification('Expected an {} specification'.format(kind.name.lower()))
        for variable in specification.variables():
            if variable.index >= dimension:
                raise InvalidSpecification('Variable {} is out of range for dimension {}'.format(variable,
                                                                                                  dimension))

    @property
    def network(self):
        """The network of the instance."""
        return self._network

    @property
    def input_spec(self):
        """The specification over the inputs."""
        return self._input_spec

    @property
    def output_spec(self):
        """The specification over the outputs."""
        return self._output_spec


class Verdict:
    """The answer to a reachability question.

    A reachable verdict carries the input witness and the activation pattern
    the network shows on it.
    """

    __slots__ = ('_reachable', '_witness', '_pattern')

    def __init__(self, reachable, witness=(), pattern=()):
        self._reachable = bool(reachable)
        self._witness = tuple(as_rational(value) for value in witness) if reachable else ()
        self._pattern = tuple(int(bit) for bit in pattern) if reachable else ()
        if any(bit not in (0, 1) for bit in self._pattern):
            raise ValueError('Activation pattern bits must be 0 or 1')

    @classmethod
    def reachable(cls, witness, pattern):
        """A reachable verdict with its witness."""
        return cls(True, witness, pattern)

    @classmethod
    def unreachable(cls):
        """The unreachable verdict."""
        return cls(False)

    @property
    def is_reachable(self):
        """Whether a witness exists."""
        return self._reachable

    @property
    def witness(self):
        """The input witness, empty when unreachable."""
        return self._witness

    @property
    def pattern(self):
        """The activation pattern of the witness, empty when unreachable."""
        return self._pattern

    def __eq__(self, other):
        if not isinstance(other, Verdict):
            return NotImplemented
        return (self._reachable, self._witness, self._pattern) == (other.is_reachable,
                                                                   other.witness,
                                                                   other.pattern)

    def __hash__(self):
        return hash((self._reachable, self._witness, self._pattern))

    def __repr__(self):
        if not self._reachable:
            return 'Verdict(UNREACHABLE)'
        return 'Verdict(REACHABLE, witness=({}), pattern={})'.format(
            ', '.join(format_rational(value) for value in self._witness),
            ''.join(str(bit) for bit in self._pattern))
