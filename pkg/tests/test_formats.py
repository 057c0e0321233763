#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: test_formats.py
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
Tests for `formats` module.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import random
import unittest
from fractions import Fraction

from nnreachlib.formats import (CnfFormula,
                                format_values,
                                parse_dimacs,
                                parse_network,
                                parse_spec,
                                parse_values,
                                parse_var_map,
                                parse_verdict,
                                serialize_dimacs,
                                serialize_network,
                                serialize_spec,
                                serialize_var_map,
                                serialize_verdict)
from nnreachlib.model import Constraint, VarRef, Verdict
from nnreachlib.nnreachlibexceptions import DimensionMismatch, InvalidCnf, InvalidNetwork, ParseError
from nnreachlib.reductions import VarMap

__author__ = '''nnreachlib contributors'''
__docformat__ = '''google'''
__date__ = '''18-10-2026'''
__copyright__ = '''Copyright 2026, nnreachlib contributors'''
__credits__ = ["nnreachlib contributors"]
__license__ = '''MIT'''
__maintainer__ = '''nnreachlib contributors'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".


BOOL_STAR_DOCUMENT = """nn
inputs 1
# max(0, 1/2 - x) and max(0, x - 1/2)
layer
node relu bias 1/2 weights -1
node relu bias -1/2 weights 1
layer
node id bias -1/2 weights 1 1
end
"""

PSI_DIMACS = """c the running example
p cnf 4 3
1 2 2 0
-1 2 -3 0
-2 3 4 0
"""


class TestNetworkFormat(unittest.TestCase):

    def testBoolStarDocument(self):
        network = parse_network(BOOL_STAR_DOCUMENT)
        self.assertEqual(network.depth, 3)
        self.assertEqual(network.node_count, 3)
        self.assertEqual([layer.width for layer in network.layers], [2, 1])
        self.assertEqual(network.layers[0][0].bias, Fraction(1, 2))
        self.assertEqual(network.layers[1][0].weights, (1, 1))

    def testIdentityNetwork(self):
        network = parse_network('nn\ninputs 1\nlayer\nnode id bias 0 weights 1\nend\n')
        self.assertEqual(network.relu_count, 0)
        self.assertEqual(network.output_dim, 1)

    def testReluOnOutputLayer(self):
        with self.assertRaises(InvalidNetwork):
            parse_network('nn\ninputs 1\nlayer\nnode relu bias 0 weights 1\nend\n')

    def testSyntaxErrorsCarryLineNumbers(self):
        with self.assertRaises(ParseError) as context:
            parse_network('nn\ninputs 1\nlayer\nnode sigmoid bias 0 weights 1\nend\n')
        self.assertEqual(context.exception.line_number, 4)
        with self.assertRaises(ParseError):
            parse_network('nn\ninputs 1\nlayer\nnode id bias 0 weights 1\n')
        with self.assertRaises(ParseError):
            parse_network('network\ninputs 1\nend\n')
        with self.assertRaises(ParseError):
            parse_network('nn\ninputs 1\nlayer\nnode id bias 1/0 weights 1\nend\n')

    def testWeightCountMismatch(self):
        with self.assertRaises(DimensionMismatch):
            parse_network('nn\ninputs 2\nlayer\nnode id bias 0 weights 1\nend\n')

    def testSerializationIsCanonical(self):
        network = parse_network(BOOL_STAR_DOCUMENT)
        text = serialize_network(network)
        self.assertNotIn('#', text)
        self.assertEqual(parse_network(text), network)
        self.assertEqual(serialize_network(parse_network(text)), text)


class TestSpecificationFormat(unittest.TestCase):

    def testBoxConstraints(self):
        specification = parse_spec('1*x0 >= 0\n1*x0 <= 1\n', 'input')
        self.assertEqual(len(specification), 2)
        self.assertTrue(specification.is_simple())
        self.assertEqual(specification.conjuncts[0], Constraint([(-1, VarRef.input(0))], 0))

    def testEqualityDesugarsToTwoConjuncts(self):
        specification = parse_spec('1*y0 = 3', 'output')
        self.assertEqual(specification.conjuncts,
                         (Constraint([(1, VarRef.output(0))], 3), Constraint([(-1, VarRef.output(0))], -3)))

    def testNonSimpleConjunct(self):
        specification = parse_spec('1*x0 + -1*x1 <= 0', 'input')
        self.assertEqual(len(specification), 1)
        self.assertFalse(specification.is_simple())

    def testEmptyDocumentIsTop(self):
        self.assertTrue(parse_spec('', 'output').is_top())
        self.assertTrue(parse_spec('# nothing\n\n', 'input').is_top())

    def testCoefficientIsOptional(self):
        self.assertEqual(parse_spec('x0 <= 1/2', 'input'), parse_spec('1*x0 <= 1/2', 'input'))

    def testTopEncodingIsAccepted(self):
        specification = parse_spec('1*x0 + -1*x0 = 0', 'input')
        self.assertEqual(len(specification), 2)

    def testRoleIsEnforced(self):
        with self.assertRaises(ParseError):
            parse_spec('1*y0 <= 1', 'input')
        with self.assertRaises(ParseError):
            parse_spec('1*x0 <= 1', 'output')

    def testMalformedConjuncts(self):
        for text in ('1*x0 < 1', '1*z0 <= 1', '1*x0 <= one', 'a*x0 <= 1', '<= 1'):
            with self.assertRaises(ParseError):
                parse_spec(text, 'input')

    def testConjunctCount(self):
        rng = random.Random(5)
        for _ in range(50):
            relations = [rng.choice(('<=', '>=', '=')) for _ in range(rng.randint(0, 6))]
            text = '\n'.join('{}*x{} {} {}'.format(rng.randint(-3, 3), rng.randint(0, 2), relation,
                                                   rng.randint(-5, 5))
                             for relation in relations)
            expected = sum(2 if relation == '=' else 1 for relation in relations)
            self.assertEqual(len(parse_spec(text, 'input')), expected)

    def testSerializationReparses(self):
        specification = parse_spec('1*x0 >= 0\n1/2*x0 + 3*x1 = -2\n', 'input')
        self.assertEqual(parse_spec(serialize_spec(specification), 'input'), specification)
        self.assertEqual(serialize_spec(parse_spec('', 'input')), '')


class TestDimacs(unittest.TestCase):

    def testRunningExample(self):
        formula = parse_dimacs(PSI_DIMACS)
        self.assertEqual(formula, CnfFormula(4, [(1, 2, 2), (-1, 2, -3), (-2, 3, 4)]))
        self.assertEqual(formula.clause_count, 3)

    def testShortClauseIsPadded(self):
        self.assertEqual(parse_dimacs('p cnf 1 1\n1 0\n').clauses, ((1, 1, 1),))
        self.assertEqual(parse_dimacs('p cnf 2 1\n1 -2 0\n').clauses, ((1, -2, -2),))

    def testLongClauseIsRejected(self):
        with self.assertRaises(ParseError):
            parse_dimacs('p cnf 2 1\n1 2 -1 -2 0\n')

    def testLiteralOutOfRange(self):
        with self.assertRaises(ParseError):
            parse_dimacs('p cnf 2 1\n1 2 3 0\n')

    def testMalformedHeader(self):
        for text in ('p dnf 2 1\n1 2 2 0\n', 'p cnf two 1\n1 2 2 0\n', '1 2 2 0\n', 'p cnf 0 0\n'):
            with self.assertRaises(ParseError):
                parse_dimacs(text)

    def testClauseCountMustMatch(self):
        with self.assertRaises(ParseError):
            parse_dimacs('p cnf 2 2\n1 2 2 0\n')

    def testEmptyClauseIsRejected(self):
        with self.assertRaises(ParseError):
            parse_dimacs('p cnf 2 1\n0\n')

    def testClausesMaySpanLinesAndStopAtPercent(self):
        formula = parse_dimacs('p cnf 3 2\n1 2\n3 0 -1\n-2 -3 0\n%\n0\n')
        self.assertEqual(formula.clauses, ((1, 2, 3), (-1, -2, -3)))

    def testSerializationReparses(self):
        formula = parse_dimacs(PSI_DIMACS)
        self.assertEqual(parse_dimacs(serialize_dimacs(formula)), formula)
        self.assertTrue(serialize_dimacs(formula).startswith('p cnf 4 3\n'))

    def testFormulaValidation(self):
        with self.assertRaises(InvalidCnf):
            CnfFormula(0, [])
        with self.assertRaises(InvalidCnf):
            CnfFormula(2, [(1, 2)])
        with self.assertRaises(InvalidCnf):
            CnfFormula(2, [(1, 2, 0)])
        with self.assertRaises(InvalidCnf):
            CnfFormula(2, [(1, 2, 3)])


class TestVerdictFormat(unittest.TestCase):

    def testUnreachable(self):
        self.assertEqual(serialize_verdict(Verdict.unreachable()), 'UNREACHABLE')

    def testReachable(self):
        self.assertEqual(serialize_verdict(Verdict.reachable([1], [1, 0])), 'REACHABLE\npattern 1 0\ninput 1')

    def testEmptyPatternAndInput(self):
        verdict = Verdict.reachable([], [])
        self.assertEqual(serialize_verdict(verdict), 'REACHABLE\npattern\ninput')
        self.assertEqual(parse_verdict(serialize_verdict(verdict)), verdict)

    def testRandomVerdictsReparse(self):
        rng = random.Random(3)
        for _ in range(100):
            if rng.random() < 0.2:
                verdict = Verdict.unreachable()
            else:
                witness = [Fraction(rng.randint(-50, 50), rng.randint(1, 20)) for _ in range(rng.randint(1, 5))]
                verdict = Verdict.reachable(witness, [rng.randint(0, 1) for _ in range(rng.randint(0, 8))])
            self.assertEqual(parse_verdict(serialize_verdict(verdict)), verdict)

    def testMalformedVerdicts(self):
        for text in ('', 'MAYBE', 'REACHABLE\ninput 1', 'REACHABLE\npattern 2\ninput 1', 'UNREACHABLE\ninput 1'):
            with self.assertRaises(ParseError):
                parse_verdict(text)


class TestValuesAndMaps(unittest.TestCase):

    def testValues(self):
        values = parse_values('1/2 -3 0.25')
        self.assertEqual(values, (Fraction(1, 2), Fraction(-3), Fraction(1, 4)))
        self.assertEqual(format_values(values), '1/2 -3 1/4')
        with self.assertRaises(ParseError):
            parse_values('1/2 x')

    def testVarMap(self):
        var_map = VarMap(['x0', 'xbar0'], ['z0', 'e0', 'y'], {0: (0, 1)})
        text = serialize_var_map(var_map)
        self.assertIn('# input 1 xbar0', text)
        self.assertIn('# output 2 y', text)
        self.assertEqual(parse_var_map(text), (('x0', 'xbar0'), ('z0', 'e0', 'y')))
        with self.assertRaises(ParseError):
            parse_var_map('input 0 x0\n')
