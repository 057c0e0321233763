#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: reductions.py
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
Compilers from 3-CNF formulas to reachability instances.

Every compiler returns a :class:`ReductionOutput` whose instance is reachable
exactly when the formula is satisfiable, together with the names of the
inputs and outputs and the means to move between models and witnesses.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import logging
from fractions import Fraction

from .gadgets import (ConstantPool,
                      add_and,
                      add_bool_star,
                      add_bool_star_relus,
                      add_chain,
                      add_disc,
                      add_eq0,
                      add_norm,
                      add_norm_bar,
                      add_not,
                      add_or3,
                      add_or_restricted,
                      or_variant,
                      positive_parameter)
from .graph import NetworkGraph
from .model import Activation, Constraint, Instance, Layer, Network, Node, Specification, VarKind, VarRef, as_rational
from .nnreachlibexceptions import DimensionMismatch, InvalidGadgetParameter, LayeringError

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

HALF = Fraction(1, 2)

# Length of the identity chains behind DISC and EQ0 in the restricted layout.
DISC_CHAIN_LENGTH = 5
EQUALITY_CHAIN_LENGTH = 6
AND_DEPTH = 7


class VarMap:
    """Names of the inputs and outputs of a compiled instance.

    ``variables`` maps every formula variable (0 based) to the input indices
    encoding it.
    """

    def __init__(self, inputs, outputs, variables):
        self._inputs = tuple(inputs)
        self._outputs = tuple(outputs)
        self._variables = {variable: tuple(indices) for variable, indices in variables.items()}
        for names in (self._inputs, self._outputs):
            if len(set(names)) != len(names):
                raise ValueError('Duplicate names in :{}'.format(names))

    @property
    def inputs(self):
        """The input names in input order."""
        return self._inputs

    @property
    def outputs(self):
        """The output names in output order."""
        return self._outputs

    @property
    def variables(self):
        """Formula variable to the input indices encoding it."""
        return dict(self._variables)

    def input_index(self, name):
        """The index of a named input."""
        return self._inputs.index(name)

    def output_index(self, name):
        """The index of a named output."""
        return self._outputs.index(name)


class ReductionOutput:
    """A compiled instance with its naming and the model/witness translations."""

    def __init__(self, name, instance, var_map, encoder, decoder):  # pylint: disable=too-many-arguments
        self._name = name
        self._instance = instance
        self._var_map = var_map
        self._encoder = encoder
        self._decoder = decoder

    @property
    def name(self):
        """The name of the reduction."""
        return self._name

    @property
    def instance(self):
        """The reachability instance."""
        return self._instance

    @property
    def network(self):
        """The network of the instance."""
        return self._instance.network

    @property
    def var_map(self):
        """The input and output names."""
        return self._var_map

    def encode(self, assignment):
        """The witness encoding a satisfying assignment of 0/1 bits.

        :raises: DimensionMismatch if the assignment does not cover every variable
        """
        assignment = tuple(int(bool(bit)) for bit in assignment)
        if len(assignment) != len(self._var_map.variables):
            raise DimensionMismatch('Expected {} bits, got {}'.format(len(self._var_map.variables),
                                                                      len(assignment)))
        return tuple(self._encoder(assignment))

    def decode(self, witness):
        """The assignment of 0/1 bits a witness encodes."""
        witness = tuple(as_rational(value) for value in witness)
        if len(witness) != self.network.input_dim:
            raise DimensionMismatch('Expected {} values, got {}'.format(self.network.input_dim, len(witness)))
        return tuple(self._decoder(witness))


def _equals(variable, value):
    constraint = Constraint([(1, variable)], value)
    return [constraint, constraint.negated()]


def _at_least(variable, value):
    return [Constraint([(1, variable)], value).negated()]


def _sum_is_zero(first, second):
    constraint = Constraint([(1, first), (1, second)], 0)
    return [constraint, constraint.negated()]


def _literal_variable(literal):
    return abs(literal) - 1


def _identity_variables(variable_count):
    return {variable: (variable,) for variable in range(variable_count)}


def _threshold_decoder(variable_count, threshold):
    def decode(witness):
        return [1 if witness[variable] >= threshold else 0 for variable in range(variable_count)]
    return decode


def _output_spec(conjuncts):
    return Specification(conjuncts, VarKind.OUTPUT)


def _input_spec(conjuncts):
    return Specification(conjuncts, VarKind.INPUT)


def _boolean_literal_ports(graph, inputs, clause):
    """Ports of the clause literals, a fresh NOT for every negative occurrence."""
    return [inputs[_literal_variable(literal)] if literal > 0 else add_not(graph, inputs[_literal_variable(literal)])
            for literal in clause]


def _log_compiled(name, cnf, network):
    LOGGER.info('Compiled %s variables and %s clauses with %s into %s layers, %s nodes, %s ReLUs',
                cnf.var_count, cnf.clause_count, name, network.depth, network.node_count, network.relu_count)


def compile_bool_star(cnf):
    """BOOL* per variable, NOT per negative literal, OR3 per clause and one AND.

    Outputs are z_0 ... z_{n-1}, y with z_i = 0 and y = m demanded.
    """
    variable_count = cnf.var_count
    graph = NetworkGraph(variable_count)
    inputs = [(graph.input(variable),) for variable in range(variable_count)]
    discrete = [add_bool_star(graph, port[0]) for port in inputs]
    clauses = [add_or3(graph, _boolean_literal_ports(graph, inputs, clause)) for clause in cnf.clauses]
    conjunction = add_and(graph, clauses)
    for port in discrete + [conjunction]:
        graph.add_output(port[0])
    network = graph.to_network()
    outputs = ['z{}'.format(variable) for variable in range(variable_count)] + ['y']
    conjuncts = []
    for index in range(variable_count):
        conjuncts.extend(_equals(VarRef.output(index), 0))
    conjuncts.extend(_equals(VarRef.output(variable_count), cnf.clause_count))
    _log_compiled('bool-star', cnf, network)
    return ReductionOutput('bool-star',
                           Instance(network, Specification.top(VarKind.INPUT), _output_spec(conjuncts)),
                           VarMap(['x{}'.format(variable) for variable in range(variable_count)], outputs,
                                  _identity_variables(variable_count)),
                           lambda bits: [Fraction(bit) for bit in bits],
                           _threshold_decoder(variable_count, HALF))


def compile_single_layer(cnf):
    """One hidden layer of 2n + m ReLUs and the single output

    y = sum of the BOOL* ReLUs - sum over clauses of max(0, 1 - sum of literal values)

    with 0 <= x_i <= 1 and y = n/2 demanded.
    """
    variable_count = cnf.var_count
    graph = NetworkGraph(variable_count)
    inputs = [graph.input(variable) for variable in range(variable_count)]
    discrete = [relu for source in inputs for relu in add_bool_star_relus(graph, source)]
    clauses = []
    for clause in cnf.clauses:
        negatives = sum(1 for literal in clause if literal < 0)
        sources = [(inputs[_literal_variable(literal)], -1 if literal > 0 else 1) for literal in clause]
        clauses.append(graph.add_node(Activation.RELU, 1 - negatives, sources))
    total = graph.add_node(Activation.IDENTITY, 0,
                           [(relu, 1) for relu in discrete] + [(relu, -1) for relu in clauses])
    graph.add_output(total)
    network = graph.to_network(pass_through=False)
    input_conjuncts = []
    for variable in range(variable_count):
        input_conjuncts.extend(_at_least(VarRef.input(variable), 0))
        input_conjuncts.append(Constraint([(1, VarRef.input(variable))], 1))
    _log_compiled('single-layer', cnf, network)
    return ReductionOutput('single-layer',
                           Instance(network, _input_spec(input_conjuncts),
                                    _output_spec(_equals(VarRef.output(0), Fraction(variable_count, 2)))),
                           VarMap(['x{}'.format(variable) for variable in range(variable_count)], ['y'],
                                  _identity_variables(variable_count)),
                           lambda bits: [Fraction(bit) for bit in bits],
                           _threshold_decoder(variable_count, HALF))


def compile_one_input_relu(cnf):
    """BOOL* per variable and one identity output per clause counting its true literals.

    No ReLU node reads more than one value. Outputs are z_0 ... z_{n-1},
    y_0 ... y_{m-1} with z_i = 0 and y_j >= 1 demanded.
    """
    variable_count = cnf.var_count
    graph = NetworkGraph(variable_count)
    inputs = [(graph.input(variable),) for variable in range(variable_count)]
    discrete = [add_bool_star(graph, port[0]) for port in inputs]
    clauses = [add_and(graph, _boolean_literal_ports(graph, inputs, clause)) for clause in cnf.clauses]
    for port in discrete + clauses:
        graph.add_output(port[0])
    network = graph.to_network()
    conjuncts = []
    for index in range(variable_count):
        conjuncts.extend(_equals(VarRef.output(index), 0))
    for index in range(cnf.clause_count):
        conjuncts.extend(_at_least(VarRef.output(variable_count + index), 1))
    outputs = (['z{}'.format(variable) for variable in range(variable_count)] +
               ['y{}'.format(index) for index in range(cnf.clause_count)])
    _log_compiled('one-input-relu', cnf, network)
    return ReductionOutput('one-input-relu',
                           Instance(network, Specification.top(VarKind.INPUT), _output_spec(conjuncts)),
                           VarMap(['x{}'.format(variable) for variable in range(variable_count)], outputs,
                                  _identity_variables(variable_count)),
                           lambda bits: [Fraction(bit) for bit in bits],
                           _threshold_decoder(variable_count, HALF))


def _restricted_graph(cnf, c, d, with_equality):
    """The restricted layout over inputs x_0 ... x_{n-1}, xbar_0 ... xbar_{n-1}.

    :return: (graph, output names)
    """
    variable_count = cnf.var_count
    graph = NetworkGraph(2 * variable_count)
    pool = ConstantPool(graph, c, d)
    positive = [(graph.input(variable),) for variable in range(variable_count)]
    negative = [(graph.input(variable_count + variable),) for variable in range(variable_count)]
    discrete, equal, norms, norm_bars = [], [], [], []
    for variable in range(variable_count):
        discrete.append(add_disc(graph, positive[variable], positive[variable], c, d))
        if with_equality:
            equal.append(add_eq0(graph, positive[variable], negative[variable], c, d))
        norms.append(add_norm(graph, positive[variable], c, d))
        norm_bars.append(add_norm_bar(graph, negative[variable], c, d))
    discrete = [add_chain(graph, port, DISC_CHAIN_LENGTH, c) for port in discrete]
    equal = [add_chain(graph, port, EQUALITY_CHAIN_LENGTH, c) for port in equal]
    kind = or_variant(c)
    clauses = []
    for clause in cnf.clauses:
        ports = [norms[_literal_variable(literal)] if literal > 0 else norm_bars[_literal_variable(literal)]
                 for literal in clause]
        clauses.append(add_or_restricted(graph, pool, ports, c, d, kind))
    conjunction = add_and(graph, clauses, d, min_depth=AND_DEPTH)
    for port in discrete + equal + [conjunction]:
        graph.add_output(port[0])
    names = ['z{}'.format(variable) for variable in range(variable_count)]
    if with_equality:
        names.extend('e{}'.format(variable) for variable in range(variable_count))
    names.append('y')
    return graph, names


def _signed_inputs(variable_count):
    return (['x{}'.format(variable) for variable in range(variable_count)] +
            ['xbar{}'.format(variable) for variable in range(variable_count)])


def _paired_variables(variable_count):
    return {variable: (variable, variable_count + variable) for variable in range(variable_count)}


def _restricted_values(bits, c, d):
    values = [Fraction(1) / c if bit else -d / c ** 2 for bit in bits]
    return values + [-value for value in values]


def _positive_decoder(variable_count):
    def decode(witness):
        return [1 if witness[variable] > 0 else 0 for variable in range(variable_count)]
    return decode


def compile_restricted(cnf, c, d):
    """The restricted weight construction, every weight and bias in {-c, 0, d}.

    Eight layers counting the input layer; inputs x_i and xbar_i per variable;
    outputs z_0 ... z_{n-1}, e_0 ... e_{n-1}, y with z_i = 0, e_i = 0 and
    y = m * d**2 * c**4 demanded. OR_A is used for c >= 1, OR_B otherwise.
    No pass-through node is inserted, every value is consumed on the next layer.

    :raises: InvalidGadgetParameter for non positive c or d
    """
    c = positive_parameter(c, 'c')
    d = positive_parameter(d, 'd')
    variable_count = cnf.var_count
    graph, outputs = _restricted_graph(cnf, c, d, with_equality=True)
    network = graph.to_network(pass_through=False)
    conjuncts = []
    for index in range(2 * variable_count):
        conjuncts.extend(_equals(VarRef.output(index), 0))
    conjuncts.extend(_equals(VarRef.output(2 * variable_count), cnf.clause_count * d ** 2 * c ** 4))
    _log_compiled('restricted', cnf, network)
    return ReductionOutput('restricted',
                           Instance(network, Specification.top(VarKind.INPUT), _output_spec(conjuncts)),
                           VarMap(_signed_inputs(variable_count), outputs, _paired_variables(variable_count)),
                           lambda bits: _restricted_values(bits, c, d),
                           _positive_decoder(variable_count))


class _Unit:  # pylint: disable=too-few-public-methods
    """A node of the no-zero layout before duplication.

    ``links`` weights units of the previous layer, or single inputs on the
    first layer. ``pair_links`` gives both weights of an input pair explicitly.
    """

    def __init__(self, activation, bias):
        self.activation = activation
        self.bias = bias
        self.links = {}
        self.pair_links = {}


class _NoZeroLayout:
    """Rewrites a restricted network (d = c) so that only the weights -c and c occur.

    Every hidden unit is duplicated and every layer l computes exactly 2**l
    times the values of the original layer l:

    * input pairs are tied by x + xbar = 0, an unused pair is cancelled with
      (c, c) and a used input w is doubled as (w, -w),
    * an unused hidden pair is cancelled with (c, -c) and a used one doubled as (w, w),
    * a zero bias becomes c and a bias b stays, the difference to 2**l times
      the original bias comes from a support value: 1/2 weighted -c per copy,
      or (2**l - 1)/2 weighted b per copy,
    * supports of the first layer are input pairs pinned by the input
      specification, deeper supports are chains of units with bias c, each
      reading its predecessor pair with (c, c).
    """

    def __init__(self, network, c, variable_count):
        self._network = network
        self._c = c
        self._pairs = [(variable, variable_count + variable) for variable in range(variable_count)]
        self._input_count = network.input_dim
        self._pinned = []
        self._supports = {}
        self._units = [[] for _ in range(len(network.layers) + 1)]

    @property
    def pinned(self):
        """The (pair, value) of every support input pair."""
        return list(self._pinned)

    @property
    def pairs(self):
        """All input pairs, formula variables first."""
        return list(self._pairs)

    def _chain(self, depth, value):
        """A pinned input pair (depth 0) or a unit at ``depth`` with the given value."""
        if depth == 0:
            self._pairs.append((self._input_count, self._input_count + 1))
            self._input_count += 2
            self._pinned.append((len(self._pairs) - 1, value))
            return len(self._pairs) - 1
        source = self._chain(depth - 1, (value - self._c) / (2 * self._c))
        unit = _Unit(Activation.IDENTITY, self._c)
        if depth == 1:
            unit.pair_links[source] = (self._c, -self._c)
        else:
            unit.links[source] = self._c
        self._units[depth].append(unit)
        return len(self._units[depth]) - 1

    def _support(self, depth, value):
        key = (depth, value)
        if key not in self._supports:
            self._supports[key] = self._chain(depth - 1, value)
        return self._supports[key]

    def _add_units(self, depth, layer):
        for node in layer:
            unit = _Unit(node.activation, node.bias or self._c)
            unit.links = {index: weight for index, weight in enumerate(node.weights) if weight}
            if node.bias:
                value, weight = Fraction(2 ** depth - 1, 2), node.bias
            else:
                value, weight = HALF, -self._c
            source = self._support(depth, value)
            if depth == 1:
                unit.pair_links[source] = (weight, -weight)
            else:
                unit.links[source] = weight
            self._units[depth].append(unit)

    def _first_layer_weights(self, unit):
        weights = [None] * self._input_count
        for index, (first, second) in enumerate(self._pairs):
            if index in unit.pair_links:
                pair = unit.pair_links[index]
            else:
                first_weight, second_weight = unit.links.get(first, 0), unit.links.get(second, 0)
                if first_weight and second_weight:
                    raise LayeringError('A node reads both inputs of pair {}'.format(index))
                if first_weight:
                    pair = (first_weight, -first_weight)
                elif second_weight:
                    pair = (-second_weight, second_weight)
                else:
                    pair = (self._c, self._c)
            weights[first], weights[second] = pair
        return weights

    def _hidden_weights(self, unit, previous_count):
        weights = []
        for index in range(previous_count):
            weight = unit.links.get(index, 0)
            weights.extend((weight, weight) if weight else (self._c, -self._c))
        return weights

    def build(self):
        """The rewritten network."""
        last = len(self._network.layers)
        for depth, layer in enumerate(self._network.layers, 1):
            self._add_units(depth, layer)
        layers = []
        for depth in range(1, last + 1):
            nodes = []
            for unit in self._units[depth]:
                if depth == 1:
                    weights = self._first_layer_weights(unit)
                else:
                    weights = self._hidden_weights(unit, len(self._units[depth - 1]))
                node = Node(unit.activation, unit.bias, weights)
                nodes.extend((node,) if depth == last else (node, node))
            layers.append(Layer(nodes))
        return Network(self._input_count, layers)


def compile_no_zero(cnf, c):
    """The restricted construction with d = c rewritten to use only the weights -c and c.

    The input specification ties x_i + xbar_i = 0, pins the support pairs
    and ties them the same way. Outputs are z_0 ... z_{n-1}, y with z_i = 0
    and y = 2**7 * m * c**6 demanded.

    :raises: InvalidGadgetParameter for non positive c
    """
    c = positive_parameter(c, 'c')
    variable_count = cnf.var_count
    graph, outputs = _restricted_graph(cnf, c, c, with_equality=False)
    layout = _NoZeroLayout(graph.to_network(pass_through=False), c, variable_count)
    network = layout.build()
    scale = 2 ** len(network.layers)
    inputs = _signed_inputs(variable_count)
    conjuncts = []
    for first, second in layout.pairs[:variable_count]:
        conjuncts.extend(_sum_is_zero(VarRef.input(first), VarRef.input(second)))
    for index, (pair, value) in enumerate(layout.pinned):
        first, second = layout.pairs[pair]
        inputs.extend(('b{}'.format(index), 'bbar{}'.format(index)))
        conjuncts.extend(_equals(VarRef.input(first), value))
        conjuncts.extend(_sum_is_zero(VarRef.input(first), VarRef.input(second)))
    output_conjuncts = []
    for index in range(variable_count):
        output_conjuncts.extend(_equals(VarRef.output(index), 0))
    output_conjuncts.extend(_equals(VarRef.output(variable_count), scale * cnf.clause_count * c ** 6))
    supports = [value for _, value in layout.pinned]

    def encode(bits):
        values = _restricted_values(bits, c, c)
        for value in supports:
            values.extend((value, -value))
        return values

    _log_compiled('no-zero', cnf, network)
    return ReductionOutput('no-zero',
                           Instance(network, _input_spec(conjuncts), _output_spec(output_conjuncts)),
                           VarMap(inputs, outputs,
                                  _paired_variables(variable_count)),
                           encode,
                           _positive_decoder(variable_count))


REDUCTIONS = ('bool-star', 'single-layer', 'one-input-relu', 'restricted', 'no-zero')


def reduce(cnf, name, c=None, d=None):  # pylint: disable=redefined-builtin
    """Runs the named reduction.

    ``c`` and ``d`` are required for ``restricted``, only ``c`` for
    ``no-zero`` and neither for the others.

    :raises: InvalidGadgetParameter on a missing or superfluous parameter or an unknown name
    """
    expected = {'restricted': (True, True), 'no-zero': (True, False)}.get(name, (False, False))
    if name not in REDUCTIONS:
        raise InvalidGadgetParameter('Unknown reduction :{}'.format(name))
    if (c is not None, d is not None) != expected:
        raise InvalidGadgetParameter('Reduction {} takes {}'.format(
            name, {(True, True): 'both c and d', (True, False): 'c only'}.get(expected, 'no parameters')))
    if name == 'bool-star':
        return compile_bool_star(cnf)
    if name == 'single-layer':
        return compile_single_layer(cnf)
    if name == 'one-input-relu':
        return compile_one_input_relu(cnf)
    if name == 'restricted':
        return compile_restricted(cnf, c, d)
    return compile_no_zero(cnf, c)
