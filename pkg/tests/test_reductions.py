#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: test_reductions.py
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
Tests for `reductions` module.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import unittest
from fractions import Fraction
from itertools import product

from nnreachlib.evaluator import activation_pattern_of, check_witness, eval_network
from nnreachlib.formats import CnfFormula
from nnreachlib.gadgets import BOOLEAN_CONSTANTS
from nnreachlib.lp import check_point
from nnreachlib.nnreachlibexceptions import DimensionMismatch, InvalidGadgetParameter
from nnreachlib.reductions import (REDUCTIONS,
                                   VarMap,
                                   compile_bool_star,
                                   compile_no_zero,
                                   compile_one_input_relu,
                                   compile_restricted,
                                   compile_single_layer,
                                   reduce)
from nnreachlib.relulp import build_program, extend_assignment, fix_pattern
from nnreachlib.sat import all_clauses, brute_force_sat, check_assignment, enumerate_cnfs, random_cnf
from nnreachlib.search import solve_branch

__author__ = '''nnreachlib contributors'''
__docformat__ = '''google'''
__date__ = '''18-10-2026'''
__copyright__ = '''Copyright 2026, nnreachlib contributors'''
__credits__ = ["nnreachlib contributors"]
__license__ = '''MIT'''
__maintainer__ = '''nnreachlib contributors'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".


PSI = CnfFormula(4, [(1, 2, 2), (-1, 2, -3), (-2, 3, 4)])

CONTRADICTION = CnfFormula(1, [(1, 1, 1), (-1, -1, -1)])


def models(cnf):
    return [bits for bits in product((0, 1), repeat=cnf.var_count) if check_assignment(cnf, bits)]


def non_models(cnf):
    return [bits for bits in product((0, 1), repeat=cnf.var_count) if not check_assignment(cnf, bits)]


def random_corpus(count, max_variables, max_clauses):
    for seed in range(count):
        yield random_cnf(1 + seed % max_variables, 1 + (seed // max_variables) % max_clauses, seed)


def exhaustive_corpus():
    """Every formula over three variables with up to four clauses on distinct variables or two clauses of any width."""
    yield from enumerate_cnfs(3, 4)
    for cnf in enumerate_cnfs(3, 2, short_clauses=True):
        if any(len(set(abs(literal) for literal in clause)) < 3 for clause in cnf.clauses):
            yield cnf


ORACLE_PAIRS = ((Fraction(1, 2), 1), (1, 1), (2, 3))


class TestWitnessEncoding(unittest.TestCase):
    """Models encode to witnesses and nothing else does."""

    def assertEncodingIsExact(self, output, cnf):
        for bits in models(cnf):
            witness = output.encode(bits)
            self.assertTrue(check_witness(output.instance, witness), bits)
            self.assertEqual(output.decode(witness), bits)
        for bits in non_models(cnf):
            self.assertFalse(check_witness(output.instance, output.encode(bits)), bits)

    def testBoolStar(self):
        self.assertEncodingIsExact(compile_bool_star(PSI), PSI)

    def testSingleLayer(self):
        self.assertEncodingIsExact(compile_single_layer(PSI), PSI)

    def testOneInputRelu(self):
        self.assertEncodingIsExact(compile_one_input_relu(PSI), PSI)

    def testRestricted(self):
        for c, d in ((Fraction(2), Fraction(3)), (Fraction(1), Fraction(1)), (Fraction(1, 2), Fraction(1))):
            self.assertEncodingIsExact(compile_restricted(PSI, c, d), PSI)

    def testNoZero(self):
        for c in (Fraction(2), Fraction(1, 3)):
            self.assertEncodingIsExact(compile_no_zero(PSI, c), PSI)

    def testNonBooleanInputs(self):
        output = compile_bool_star(PSI)
        self.assertFalse(check_witness(output.instance, [Fraction(1, 2), 1, 1, 0]))
        output = compile_single_layer(PSI)
        self.assertFalse(check_witness(output.instance, [Fraction(1, 2), 1, 1, 0]))
        self.assertFalse(check_witness(output.instance, [2, 1, 1, 0]))

    def testRestrictedNeedsNegatedInputs(self):
        output = compile_restricted(PSI, 2, 3)
        witness = list(output.encode((0, 1, 1, 0)))
        witness[4] = -witness[4] + 1
        self.assertFalse(check_witness(output.instance, witness))

    def testNoZeroSupportsArePinned(self):
        output = compile_no_zero(PSI, 2)
        witness = list(output.encode((0, 1, 1, 0)))
        witness[8] += 1
        witness[9] -= 1
        self.assertFalse(check_witness(output.instance, witness))

    def testWrongLengths(self):
        output = compile_restricted(PSI, 2, 3)
        with self.assertRaises(DimensionMismatch):
            output.encode((1, 0))
        with self.assertRaises(DimensionMismatch):
            output.decode((1, 0, 0, 0))


class TestStructure(unittest.TestCase):

    def testBoolStar(self):
        output = compile_bool_star(PSI)
        network = output.network
        self.assertEqual(network.input_dim, 4)
        self.assertEqual(network.output_dim, 5)
        self.assertEqual(network.relu_count, 2 * 4 + 3)
        self.assertTrue(network.constants() <= BOOLEAN_CONSTANTS)
        self.assertEqual(output.var_map.outputs, ('z0', 'z1', 'z2', 'z3', 'y'))

    def testSingleLayer(self):
        network = compile_single_layer(PSI).network
        self.assertEqual(network.depth, 3)
        self.assertEqual(network.layers[0].width, 2 * 4 + 3)
        self.assertEqual(network.output_dim, 1)

    def testOneInputRelu(self):
        output = compile_one_input_relu(PSI)
        for layer in output.network.layers:
            for node in layer:
                if node.is_relu:
                    self.assertEqual(sum(1 for weight in node.weights if weight), 1)
        self.assertEqual(output.var_map.outputs[-3:], ('y0', 'y1', 'y2'))

    def testRestricted(self):
        c, d = Fraction(2), Fraction(3)
        output = compile_restricted(PSI, c, d)
        network = output.network
        self.assertEqual(network.depth, 8)
        self.assertTrue(network.constants() <= {-c, 0, d})
        self.assertEqual(network.input_dim, 8)
        self.assertEqual(output.var_map.inputs[:5], ('x0', 'x1', 'x2', 'x3', 'xbar0'))
        self.assertEqual(output.var_map.output_index('e0'), 4)
        self.assertEqual(output.var_map.output_index('y'), 8)
        self.assertEqual(output.var_map.variables[2], (2, 6))

    def testRestrictedWithSmallC(self):
        c, d = Fraction(1, 2), Fraction(5)
        network = compile_restricted(PSI, c, d).network
        self.assertEqual(network.depth, 8)
        self.assertTrue(network.constants() <= {-c, 0, d})

    def testNoZero(self):
        c = Fraction(2)
        output = compile_no_zero(PSI, c)
        network = output.network
        self.assertEqual(network.depth, 8)
        self.assertEqual(network.constants(), {-c, c})
        self.assertEqual(output.var_map.outputs, ('z0', 'z1', 'z2', 'z3', 'y'))
        self.assertEqual(output.var_map.inputs[8:10], ('b0', 'bbar0'))
        self.assertEqual(len(output.var_map.inputs), network.input_dim)

    def testNoZeroScalesTheRestrictedValues(self):
        c = Fraction(2)
        restricted = compile_restricted(PSI, c, c)
        no_zero = compile_no_zero(PSI, c)
        for bits in ((0, 1, 1, 0), (0, 0, 0, 0), (1, 0, 1, 1)):
            original = eval_network(restricted.network, restricted.encode(bits))
            scaled = eval_network(no_zero.network, no_zero.encode(bits))
            expected = original[:4] + original[-1:]
            self.assertEqual(scaled, tuple(2 ** 7 * value for value in expected))

    def testNoZeroOutputTarget(self):
        output = compile_no_zero(PSI, 2)
        y = eval_network(output.network, output.encode((1, 1, 1, 1)))[-1]
        self.assertEqual(y, 2 ** 7 * 3 * 2 ** 6)


class TestReduce(unittest.TestCase):

    def testNames(self):
        self.assertEqual(REDUCTIONS, ('bool-star', 'single-layer', 'one-input-relu', 'restricted', 'no-zero'))
        self.assertEqual(reduce(PSI, 'bool-star').name, 'bool-star')
        self.assertEqual(reduce(PSI, 'restricted', c=2, d=3).name, 'restricted')
        self.assertEqual(reduce(PSI, 'no-zero', c=2).name, 'no-zero')

    def testParameters(self):
        with self.assertRaises(InvalidGadgetParameter):
            reduce(PSI, 'restricted', c=2)
        with self.assertRaises(InvalidGadgetParameter):
            reduce(PSI, 'no-zero', c=2, d=2)
        with self.assertRaises(InvalidGadgetParameter):
            reduce(PSI, 'bool-star', c=1)
        with self.assertRaises(InvalidGadgetParameter):
            reduce(PSI, 'restricted', c=0, d=1)
        with self.assertRaises(InvalidGadgetParameter):
            reduce(PSI, 'sideways')


class TestVarMap(unittest.TestCase):

    def testDuplicates(self):
        with self.assertRaises(ValueError):
            VarMap(['x0', 'x0'], ['y'], {})

    def testLookup(self):
        var_map = VarMap(['x0', 'xbar0'], ['z0', 'y'], {0: [0, 1]})
        self.assertEqual(var_map.input_index('xbar0'), 1)
        self.assertEqual(var_map.variables, {0: (0, 1)})


class TestAgainstOracle(unittest.TestCase):
    """The solver on compiled instances agrees with brute force satisfiability."""

    def assertAgrees(self, output, cnf):
        verdict, _ = solve_branch(output.instance)
        self.assertEqual(verdict.is_reachable, brute_force_sat(cnf).is_sat, cnf)
        if verdict.is_reachable:
            network = output.instance.network
            self.assertTrue(check_witness(output.instance, verdict.witness))
            self.assertEqual(verdict.pattern, activation_pattern_of(network, verdict.witness))
            program = build_program(output.instance)
            point = extend_assignment(program, output.instance, verdict.witness)
            self.assertTrue(check_point(fix_pattern(program, verdict.pattern), point))
            self.assertTrue(check_assignment(cnf, output.decode(verdict.witness)))

    def testExhaustiveCorpusHasBothVerdicts(self):
        formulas = list(exhaustive_corpus())
        self.assertEqual(len(formulas), 163 + 352 - 37)
        self.assertIn(False, [brute_force_sat(cnf).is_sat for cnf in formulas])

    def testBooleanReductionsOnExhaustiveCorpus(self):
        for compiler in (compile_bool_star, compile_single_layer, compile_one_input_relu):
            for cnf in exhaustive_corpus():
                with self.subTest(compiler=compiler.__name__, cnf=cnf):
                    self.assertAgrees(compiler(cnf), cnf)

    def testRestrictedOnExhaustiveCorpus(self):
        for cnf in exhaustive_corpus():
            with self.subTest(cnf=cnf):
                self.assertAgrees(compile_restricted(cnf, 2, 3), cnf)

    def testBooleanReductionsOnRandomCorpus(self):
        for compiler in (compile_bool_star, compile_single_layer, compile_one_input_relu):
            for cnf in random_corpus(200, 5, 8):
                with self.subTest(compiler=compiler.__name__, cnf=cnf):
                    self.assertAgrees(compiler(cnf), cnf)

    def testRestrictedOnRandomCorpus(self):
        for c, d in ORACLE_PAIRS:
            for cnf in random_corpus(200, 5, 8):
                with self.subTest(c=c, d=d, cnf=cnf):
                    self.assertAgrees(compile_restricted(cnf, c, d), cnf)

    def testAllSignPatternsAreUnreachable(self):
        cnf = CnfFormula(3, all_clauses(3))
        self.assertFalse(brute_force_sat(cnf).is_sat)
        for compiler in (compile_bool_star, compile_single_layer, compile_one_input_relu):
            self.assertAgrees(compiler(cnf), cnf)

    def testContradiction(self):
        for compiler in (compile_bool_star, compile_single_layer, compile_one_input_relu):
            self.assertAgrees(compiler(CONTRADICTION), CONTRADICTION)
        for c, d in ORACLE_PAIRS:
            self.assertAgrees(compile_restricted(CONTRADICTION, c, d), CONTRADICTION)
        for c in (Fraction(1, 2), 1, 2):
            self.assertAgrees(compile_no_zero(CONTRADICTION, c), CONTRADICTION)

    def testNoZeroOnRandomCorpus(self):
        for c in (Fraction(1, 2), 1, 2):
            for cnf in random_corpus(20, 4, 6):
                with self.subTest(c=c, cnf=cnf):
                    output = compile_no_zero(cnf, c)
                    self.assertEqual(output.instance.network.constants(), {-Fraction(c), Fraction(c)})
                    self.assertAgrees(output, cnf)

    def testNoZeroDecodes(self):
        cnf = CnfFormula(1, [(-1, -1, -1)])
        output = compile_no_zero(cnf, 2)
        verdict, _ = solve_branch(output.instance)
        self.assertTrue(verdict.is_reachable)
        self.assertEqual(output.decode(verdict.witness), (0,))
