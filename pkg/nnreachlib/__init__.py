#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: __init__.py
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
nnreachlib package.

Import all parts from nnreachlib here

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html
"""
from ._version import __version__
from .evaluator import activation_pattern_of, check_witness, eval_network, forward_trace, spec_holds
from .formats import (CnfFormula,
                      parse_dimacs,
                      parse_network,
                      parse_spec,
                      parse_verdict,
                      serialize_dimacs,
                      serialize_network,
                      serialize_spec,
                      serialize_verdict)
from .gadgets import (Gadget,
                      gadget_bool_star,
                      gadget_boolean,
                      gadget_flawed_bool,
                      gadget_restricted)
from .graph import NetworkGraph, normalize_layered
from .lp import AffineExpr, LinearProgram, check_point, feasible, fourier_motzkin_feasible
from .model import (Constraint,
                    Instance,
                    Network,
                    Node,
                    Specification,
                    VarRef,
                    Verdict,
                    parse_rational,
                    relu,
                    spec_is_simple)
from .reductions import (compile_bool_star,
                         compile_no_zero,
                         compile_one_input_relu,
                         compile_restricted,
                         compile_single_layer,
                         reduce)
from .relulp import build_program, fix_pattern, project_to_inputs
from .sat import brute_force_sat, check_assignment, random_cnf
from .search import solve, solve_branch, solve_enumerate

__author__ = '''nnreachlib contributors'''
__docformat__ = '''google'''
__date__ = '''18-10-2026'''
__copyright__ = '''Copyright 2026, nnreachlib contributors'''
__credits__ = ["nnreachlib contributors"]
__license__ = '''MIT'''
__maintainer__ = '''nnreachlib contributors'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".

# This is to 'use' the module(s), so lint doesn't complain
assert __version__
assert __author__


# assert objects
assert activation_pattern_of
assert check_witness
assert eval_network
assert forward_trace
assert spec_holds
assert CnfFormula
assert parse_dimacs
assert parse_network
assert parse_spec
assert parse_verdict
assert serialize_dimacs
assert serialize_network
assert serialize_spec
assert serialize_verdict
assert Gadget
assert gadget_bool_star
assert gadget_boolean
assert gadget_flawed_bool
assert gadget_restricted
assert NetworkGraph
assert normalize_layered
assert AffineExpr
assert LinearProgram
assert check_point
assert feasible
assert fourier_motzkin_feasible
assert Constraint
assert Instance
assert Network
assert Node
assert Specification
assert VarRef
assert Verdict
assert parse_rational
assert relu
assert spec_is_simple
assert compile_bool_star
assert compile_no_zero
assert compile_one_input_relu
assert compile_restricted
assert compile_single_layer
assert reduce
assert build_program
assert fix_pattern
assert project_to_inputs
assert brute_force_sat
assert check_assignment
assert random_cnf
assert solve
assert solve_branch
assert solve_enumerate
