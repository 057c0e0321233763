#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: test_graph.py
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
Tests for `graph` module.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import random
import unittest
from fractions import Fraction

from nnreachlib.evaluator import eval_network
from nnreachlib.graph import NetworkGraph, normalize_layered
from nnreachlib.model import Activation, Network, Node
from nnreachlib.nnreachlibexceptions import DimensionMismatch, LayeringError

__author__ = '''nnreachlib contributors'''
__docformat__ = '''google'''
__date__ = '''18-10-2026'''
__copyright__ = '''Copyright 2026, nnreachlib contributors'''
__credits__ = ["nnreachlib contributors"]
__license__ = '''MIT'''
__maintainer__ = '''nnreachlib contributors'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".


def skip_graph():
    """relu(x0) feeding an identity that also reads x0 directly."""
    graph = NetworkGraph(1)
    source = graph.input(0)
    hidden = graph.add_node(Activation.RELU, 0, [(source, 1)])
    graph.add_output(graph.add_node(Activation.IDENTITY, 1, [(hidden, 2), (source, -1)]))
    return graph


def random_graph(rng, input_count, node_count):
    graph = NetworkGraph(input_count)
    available = [graph.input(index) for index in range(input_count)]
    read = set()
    for _ in range(node_count):
        sources = [(reference, rng.randint(-3, 3)) for reference in rng.sample(available, min(2, len(available)))]
        read.update(reference for reference, _ in sources)
        activation = Activation.RELU if rng.random() < 0.5 else Activation.IDENTITY
        available.append(graph.add_node(activation, rng.randint(-2, 2), sources))
    for reference in available[input_count:]:
        if reference not in read or rng.random() < 0.4:
            graph.add_output(reference)
    return graph


class TestNetworkGraph(unittest.TestCase):

    def testDepths(self):
        graph = NetworkGraph(2)
        first = graph.add_node(Activation.RELU, 0, [(graph.input(0), 1)])
        second = graph.add_node(Activation.RELU, 0, [(first, 1), (graph.input(1), 1)])
        pinned = graph.add_node(Activation.IDENTITY, 0, [(graph.input(1), 1)], min_depth=4)
        self.assertEqual([graph.depth(reference) for reference in (first, second, pinned)], [1, 2, 4])
        self.assertEqual(graph.depth(graph.input(1)), 0)

    def testDuplicateEdgesAreSummed(self):
        graph = NetworkGraph(1)
        node = graph.add_node(Activation.IDENTITY, 0, [(graph.input(0), 1), (graph.input(0), Fraction(1, 2))])
        self.assertEqual(graph.nodes[node.index].sources, ((graph.input(0), Fraction(3, 2)),))

    def testUnknownSource(self):
        graph = NetworkGraph(1)
        other = NetworkGraph(1)
        foreign = other.add_node(Activation.IDENTITY, 0, [(other.input(0), 1)])
        with self.assertRaises(LayeringError):
            graph.add_node(Activation.IDENTITY, 0, [(foreign, 1)])

    def testInvalidInputs(self):
        with self.assertRaises(ValueError):
            NetworkGraph(0)
        with self.assertRaises(IndexError):
            NetworkGraph(1).input(1)

    def testOutputsAreUnique(self):
        graph = NetworkGraph(1)
        graph.add_output(graph.input(0))
        with self.assertRaises(LayeringError):
            graph.add_output(graph.input(0))

    def testConstants(self):
        self.assertEqual(skip_graph().constants(), {0, 1, 2, -1})

    def testEvaluate(self):
        graph = skip_graph()
        self.assertEqual(graph.evaluate([3]), (4,))
        self.assertEqual(graph.evaluate([-3]), (4,))
        with self.assertRaises(DimensionMismatch):
            graph.evaluate([1, 2])


class TestLayout(unittest.TestCase):

    def testPassThroughIsInserted(self):
        network = skip_graph().to_network()
        self.assertEqual([layer.width for layer in network.layers], [2, 1])
        self.assertEqual(network.layers[0][1], Node('id', 0, [1]))
        self.assertEqual(network.layers[1][0], Node('id', 1, [2, -1]))
        for value in (-2, 0, Fraction(5, 3)):
            self.assertEqual(eval_network(network, [value]), skip_graph().evaluate([value]))

    def testPassThroughCanBeForbidden(self):
        with self.assertRaises(LayeringError):
            skip_graph().to_network(pass_through=False)

    def testNoOutputs(self):
        graph = NetworkGraph(1)
        graph.add_node(Activation.RELU, 0, [(graph.input(0), 1)])
        with self.assertRaises(LayeringError):
            graph.to_network()

    def testReluOutputGetsAnIdentityLayer(self):
        graph = NetworkGraph(1)
        graph.add_output(graph.add_node(Activation.RELU, 0, [(graph.input(0), 1)]))
        network = graph.to_network(pass_through=True)
        self.assertEqual(network.depth, 3)
        self.assertEqual(eval_network(network, [-1]), (0,))

    def testStrayNodeOnOutputLayer(self):
        graph = NetworkGraph(1)
        graph.add_node(Activation.IDENTITY, 0, [(graph.input(0), 1)])
        graph.add_output(graph.add_node(Activation.IDENTITY, 0, [(graph.input(0), 2)]))
        with self.assertRaises(LayeringError):
            graph.to_network()

    def testEmptyLayer(self):
        graph = NetworkGraph(1)
        graph.add_output(graph.add_node(Activation.IDENTITY, 5, (), min_depth=3))
        with self.assertRaises(LayeringError):
            graph.to_network()

    def testInputAsOutput(self):
        graph = NetworkGraph(2)
        graph.add_output(graph.input(1))
        network = graph.to_network()
        self.assertEqual(eval_network(network, [3, 7]), (7,))

    def testRandomGraphsKeepTheirFunction(self):
        rng = random.Random(21)
        for _ in range(100):
            graph = random_graph(rng, rng.randint(1, 3), rng.randint(1, 8))
            network = graph.to_network()
            for _ in range(5):
                values = [Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(graph.input_count)]
                self.assertEqual(eval_network(network, values), graph.evaluate(values))


class TestFromNetwork(unittest.TestCase):

    def setUp(self):
        self.network = Network(2, [[Node('relu', 1, [1, -1]), Node('relu', 0, [0, 2])],
                                   [Node('id', 0, [1, 1]), Node('id', -1, [3, 0])]])

    def testLayoutIsRecovered(self):
        graph = NetworkGraph.from_network(self.network)
        self.assertEqual(graph.to_network(pass_through=False), self.network)

    def testNormalizeLayeredKeepsLayeredNetworks(self):
        self.assertEqual(normalize_layered(self.network), self.network)

    def testNormalizeLayeredGraph(self):
        network = normalize_layered(skip_graph())
        self.assertEqual(network, skip_graph().to_network())
