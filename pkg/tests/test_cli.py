#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: test_cli.py
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
Tests for `cli` module.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import io
import os
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout

from nnreachlib.cli import EXIT_ERROR, EXIT_NEGATIVE, EXIT_POSITIVE, main
from nnreachlib.formats import parse_dimacs, parse_var_map, parse_verdict

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
layer
node relu bias 1/2 weights -1
node relu bias -1/2 weights 1
layer
node id bias -1/2 weights 1 1
end
"""

PSI_DIMACS = """p cnf 4 3
1 2 2 0
-1 2 -3 0
-2 3 4 0
"""

CONTRADICTION_DIMACS = """p cnf 1 2
1 1 1 0
-1 -1 -1 0
"""


class TestCli(unittest.TestCase):

    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.network = self.write('bool_star.nn', BOOL_STAR_DOCUMENT)
        self.input_spec = self.write('top.in.spec', '')
        self.output_spec = self.write('zero.out.spec', 'y0 = 0\n')
        self.psi = self.write('psi.cnf', PSI_DIMACS)

    def tearDown(self):
        self.directory.cleanup()

    def path(self, name):
        return os.path.join(self.directory.name, name)

    def write(self, name, text):
        with open(self.path(name), 'w', encoding='utf-8') as output_file:
            output_file.write(text)
        return self.path(name)

    def read(self, name):
        with open(self.path(name), 'r', encoding='utf-8') as input_file:
            return input_file.read()

    @staticmethod
    def run_cli(*arguments):
        stdout, stderr = io.StringIO(), io.StringIO()
        with redirect_stdout(stdout), redirect_stderr(stderr):
            code = main(['--log-level', 'critical'] + list(arguments))
        return code, stdout.getvalue(), stderr.getvalue()

    def instance_arguments(self):
        return ['--network', self.network, '--input-spec', self.input_spec, '--output-spec', self.output_spec]

    def testSolveReachable(self):
        code, stdout, _ = self.run_cli('solve', *self.instance_arguments(), '--stats', '--out', self.path('v.txt'))
        self.assertEqual(code, EXIT_POSITIVE)
        self.assertTrue(stdout.startswith('REACHABLE\n'))
        self.assertIn('stat mode branch', stdout)
        verdict = parse_verdict(self.read('v.txt'))
        self.assertIn(verdict.witness, ((0,), (1,)))

    def testSolveUnreachable(self):
        self.output_spec = self.write('low.out.spec', 'y0 <= -1\n')
        code, stdout, _ = self.run_cli('solve', *self.instance_arguments(), '--mode', 'enumerate', '--threads', '2')
        self.assertEqual(code, EXIT_NEGATIVE)
        self.assertEqual(stdout, 'UNREACHABLE\n')

    def testEval(self):
        code, stdout, _ = self.run_cli('eval', '--network', self.network, '--input', '1/2')
        self.assertEqual(code, EXIT_POSITIVE)
        self.assertEqual(stdout, 'output -1/2\n')

    def testCheckWitness(self):
        code, stdout, _ = self.run_cli('check-witness', *self.instance_arguments(), '--input', '1')
        self.assertEqual((code, stdout), (EXIT_POSITIVE, 'VALID\n'))
        code, stdout, _ = self.run_cli('check-witness', *self.instance_arguments(), '--input', '1/2')
        self.assertEqual((code, stdout), (EXIT_NEGATIVE, 'INVALID\n'))
        verdict = self.write('verdict.txt', 'REACHABLE\npattern 1 0\ninput 0\n')
        code, stdout, _ = self.run_cli('check-witness', *self.instance_arguments(), '--verdict', verdict)
        self.assertEqual((code, stdout), (EXIT_POSITIVE, 'VALID\n'))

    def testOracle(self):
        self.assertEqual(self.run_cli('oracle', '--cnf', self.psi)[:2], (EXIT_POSITIVE, 'SAT 0 1 0 1\n'))
        contradiction = self.write('no.cnf', CONTRADICTION_DIMACS)
        self.assertEqual(self.run_cli('oracle', '--cnf', contradiction)[:2], (EXIT_NEGATIVE, 'UNSAT\n'))

    def testGenerateCnf(self):
        target = self.path('random.cnf')
        code, _, _ = self.run_cli('gen-cnf', '--vars', '5', '--clauses', '7', '--seed', '3', '--out', target)
        self.assertEqual(code, EXIT_POSITIVE)
        formula = parse_dimacs(self.read('random.cnf'))
        self.assertEqual((formula.var_count, formula.clause_count), (5, 7))

    def testCompile(self):
        target = self.path('out')
        code, _, _ = self.run_cli('compile', '--cnf', self.psi, '--reduction', 'restricted',
                                  '--c', '2', '--d', '3', '--out', target)
        self.assertEqual(code, EXIT_POSITIVE)
        self.assertEqual(sorted(os.listdir(target)), ['psi.in.spec', 'psi.map', 'psi.nn', 'psi.out.spec'])
        inputs, outputs = parse_var_map(self.read(os.path.join('out', 'psi.map')))
        self.assertEqual(inputs[4], 'xbar0')
        self.assertEqual(outputs[-1], 'y')

    def testRoundtrip(self):
        code, stdout, _ = self.run_cli('roundtrip', '--cnf', self.psi, '--reduction', 'bool-star')
        self.assertEqual(code, EXIT_POSITIVE)
        lines = stdout.splitlines()
        self.assertEqual(lines[:2], ['solver REACHABLE', 'oracle SAT 0 1 0 1'])
        self.assertTrue(lines[2].startswith('decoded '))

    def testRoundtripThroughFiles(self):
        contradiction = self.write('no.cnf', CONTRADICTION_DIMACS)
        code, stdout, _ = self.run_cli('roundtrip', '--cnf', contradiction, '--reduction', 'single-layer',
                                       '--out', self.path('artifacts'))
        self.assertEqual(code, EXIT_POSITIVE)
        self.assertEqual(stdout, 'solver UNREACHABLE\noracle UNSAT\n')
        self.assertTrue(os.path.exists(self.path(os.path.join('artifacts', 'no.nn'))))

    def testErrors(self):
        code, _, stderr = self.run_cli('oracle', '--cnf', self.path('missing.cnf'))
        self.assertEqual(code, EXIT_ERROR)
        self.assertIn('nnreach oracle: error:', stderr)
        code, _, stderr = self.run_cli('compile', '--cnf', self.psi, '--reduction', 'restricted',
                                       '--c', '2', '--out', self.path('out'))
        self.assertEqual(code, EXIT_ERROR)
        self.assertIn('nnreach compile: error:', stderr)
        broken = self.write('broken.nn', 'nn\ninputs 1\nlayer\nnode relu bias x weights 1\nend\n')
        code, _, _ = self.run_cli('eval', '--network', broken, '--input', '0')
        self.assertEqual(code, EXIT_ERROR)

    def testUsage(self):
        self.assertEqual(self.run_cli('solve')[0], EXIT_ERROR)
        self.assertEqual(self.run_cli('gen-cnf', '--vars', '0', '--clauses', '1', '--seed', '1',
                                      '--out', self.path('x.cnf'))[0], EXIT_ERROR)
        self.assertEqual(self.run_cli()[0], EXIT_ERROR)
        self.assertEqual(self.run_cli('--version')[0], EXIT_POSITIVE)
