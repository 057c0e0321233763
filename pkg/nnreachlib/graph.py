#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: graph.py
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
Layer free network construction.

Reductions wire gadgets as a directed acyclic graph where a node may read
any earlier node or input. :meth:`NetworkGraph.to_network` lays the graph out
as a strictly layered :class:`~nnreachlib.model.Network`, carrying values
across skipped layers with identity pass-through nodes of weight 1.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import logging
from collections import namedtuple

from .model import Activation, Network, Node, ZERO, as_rational, relu
from .nnreachlibexceptions import DimensionMismatch, LayeringError

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

NodeRef = namedtuple('NodeRef', ['kind', 'index'])

INPUT = 'input'
NODE = 'node'

PASS_THROUGH_WEIGHT = as_rational(1)


class GraphNode:  # pylint: disable=too-few-public-methods
    """A node of the graph with its incoming edges."""

    __slots__ = ('activation', 'bias', 'sources', 'depth')

    def __init__(self, activation, bias, sources, depth):
        self.activation = activation
        self.bias = bias
        self.sources = sources
        self.depth = depth

    @property
    def is_relu(self):
        """Whether the node has the ReLU activation."""
        return self.activation is Activation.RELU


class NetworkGraph:
    """A directed acyclic graph of ReLU and identity nodes over a fixed number of inputs.

    The depth of a node is one more than the deepest node it reads, or its
    requested minimum depth when that is larger. Inputs have depth 0.
    """

    def __init__(self, input_count):
        if isinstance(input_count, bool) or not isinstance(input_count, int) or input_count < 1:
            raise ValueError('Input count must be a positive integer, got :{}'.format(input_count))
        self._input_count = input_count
        self._nodes = []
        self._outputs = []

    @property
    def input_count(self):
        """The number of inputs."""
        return self._input_count

    @property
    def nodes(self):
        """The nodes in creation order."""
        return tuple(self._nodes)

    @property
    def outputs(self):
        """The references of the output nodes in output order."""
        return tuple(self._outputs)

    def input(self, index):
        """The reference of an input."""
        if not 0 <= index < self._input_count:
            raise IndexError('Input {} out of range'.format(index))
        return NodeRef(INPUT, index)

    def depth(self, reference):
        """The depth of an input or node."""
        return 0 if reference.kind == INPUT else self._nodes[reference.index].depth

    def add_node(self, activation, bias=0, sources=(), min_depth=1):
        """Adds a node reading the given sources.

        :param activation: The activation of the node
        :param bias: The bias
        :param sources: (reference, weight) pairs, weights for the same source are summed
        :param min_depth: The smallest depth the node may be placed at
        :return: The reference of the new node
        """
        collected = {}
        for reference, weight in sources:
            if reference.kind == NODE and reference.index >= len(self._nodes):
                raise LayeringError('Unknown source {}'.format(reference))
            collected[reference] = collected.get(reference, ZERO) + as_rational(weight)
        depth = max([min_depth] + [self.depth(reference) + 1 for reference in collected])
        self._nodes.append(GraphNode(Activation(activation), as_rational(bias), tuple(collected.items()), depth))
        return NodeRef(NODE, len(self._nodes) - 1)

    def add_output(self, reference):
        """Appends a node or input to the outputs."""
        if reference in self._outputs:
            raise LayeringError('{} is already an output'.format(reference))
        self._outputs.append(reference)
        return len(self._outputs) - 1

    def constants(self):
        """All biases and edge weights of the graph nodes."""
        values = set()
        for node in self._nodes:
            values.add(node.bias)
            values.update(weight for _, weight in node.sources)
        return frozenset(values)

    def evaluate(self, values):
        """Evaluates the graph directly.

        :return: The values of the outputs in output order
        """
        values = tuple(as_rational(value) for value in values)
        if len(values) != self._input_count:
            raise DimensionMismatch('Graph expects {} inputs, got {}'.format(self._input_count, len(values)))
        results = []
        for node in self._nodes:
            total = sum((weight * (values[reference.index] if reference.kind == INPUT else results[reference.index])
                         for reference, weight in node.sources), node.bias)
            results.append(relu(total) if node.is_relu else total)
        return tuple(values[reference.index] if reference.kind == INPUT else results[reference.index]
                     for reference in self._outputs)

    def _output_depth(self):
        depth = 1
        for reference in self._outputs:
            if reference.kind == NODE:
                node = self._nodes[reference.index]
                depth = max(depth, node.depth + 1 if node.is_relu else node.depth)
        return max([depth] + [node.depth for node in self._nodes])

    def to_network(self, pass_through=True):
        """Lays the graph out as a strictly layered network.

        Layer ``d`` holds the nodes of depth ``d`` in creation order followed by
        the pass-through nodes carrying shallower values. The last layer holds
        exactly the outputs in output order.

        :param pass_through: Whether pass-through nodes may be inserted
        :return: The Network

        :raises: LayeringError if there are no outputs, a node that is not an
            output ends up on the last layer, or a pass-through is needed but not allowed
        """
        if not self._outputs:
            raise LayeringError('The graph has no outputs')
        last = self._output_depth()
        output_nodes = {reference for reference in self._outputs if reference.kind == NODE}
        layers = [[] for _ in range(last + 1)]
        positions = {}
        for index in range(self._input_count):
            positions[(NodeRef(INPUT, index), 0)] = index
        for index, node in enumerate(self._nodes):
            reference = NodeRef(NODE, index)
            if node.depth == last:
                if reference not in output_nodes or node.is_relu:
                    raise LayeringError('Node {} would end up on the output layer'.format(index))
                continue
            positions[(reference, node.depth)] = len(layers[node.depth])
            layers[node.depth].append([node.activation, node.bias, None, node.sources])

        def carry(reference, depth):
            key = (reference, depth)
            if key in positions:
                return positions[key]
            if self.depth(reference) >= depth:
                raise LayeringError('{} is not available at layer {}'.format(reference, depth))
            if not pass_through:
                raise LayeringError('{} would need a pass-through node at layer {}'.format(reference, depth))
            source = carry(reference, depth - 1)
            positions[key] = len(layers[depth])
            layers[depth].append([Activation.IDENTITY, ZERO, {source: PASS_THROUGH_WEIGHT}, ()])
            return positions[key]

        for reference in self._outputs:
            if reference.kind == NODE and self._nodes[reference.index].depth == last:
                node = self._nodes[reference.index]
                layers[last].append([node.activation, node.bias, None, node.sources])
            else:
                layers[last].append([Activation.IDENTITY, ZERO, {carry(reference, last - 1): PASS_THROUGH_WEIGHT}, ()])
        for depth in range(1, last + 1):
            for entry in layers[depth]:
                if entry[2] is not None:
                    continue
                wiring = {}
                for reference, weight in entry[3]:
                    position = carry(reference, depth - 1)
                    wiring[position] = wiring.get(position, ZERO) + weight
                entry[2] = wiring
        widths = [self._input_count] + [len(layer) for layer in layers[1:]]
        if not all(widths):
            raise LayeringError('The graph leaves an empty layer')
        network_layers = []
        for depth in range(1, last + 1):
            nodes = []
            for activation, bias, wiring, _ in layers[depth]:
                weights = [ZERO] * widths[depth - 1]
                for position, weight in wiring.items():
                    weights[position] = weight
                nodes.append(Node(activation, bias, weights))
            network_layers.append(nodes)
        network = Network(self._input_count, network_layers)
        LOGGER.debug('Laid out %s graph nodes as %s layers of widths %s',
                     len(self._nodes), network.depth, widths)
        return network

    @classmethod
    def from_network(cls, network):
        """The graph of a layered network, every node pinned to its layer."""
        graph = cls(network.input_dim)
        previous = [graph.input(index) for index in range(network.input_dim)]
        for depth, layer in enumerate(network.layers, 1):
            current = []
            for node in layer:
                sources = [(reference, weight) for reference, weight in zip(previous, node.weights) if weight]
                current.append(graph.add_node(node.activation, node.bias, sources, min_depth=depth))
            previous = current
        for reference in previous:
            graph.add_output(reference)
        return graph


def normalize_layered(network):
    """Lays out a graph, or re-lays out a network, as a strictly layered network.

    Values crossing layers are carried by identity pass-through nodes with
    weight 1, so the result computes the same function.
    """
    graph = network if isinstance(network, NetworkGraph) else NetworkGraph.from_network(network)
    return graph.to_network(pass_through=True)
