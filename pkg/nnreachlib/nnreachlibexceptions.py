#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: nnreachlibexceptions.py
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
Custom exception code for nnreachlib.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

__author__ = '''nnreachlib contributors'''
__docformat__ = '''google'''
__date__ = '''18-10-2026'''
__copyright__ = '''Copyright 2026, nnreachlib contributors'''
__credits__ = ["nnreachlib contributors"]
__license__ = '''MIT'''
__maintainer__ = '''nnreachlib contributors'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".


class InvalidRational(ValueError):
    """The value provided cannot be read as an exact rational."""


class InvalidNetwork(ValueError):
    """The layers provided do not form a valid network."""


class DimensionMismatch(ValueError):
    """A vector does not match the dimension it is used against."""


class InvalidSpecification(ValueError):
    """A specification is malformed or references invalid variables."""


class UnboundVariable(LookupError):
    """A specification variable has no value in the assignment."""


class ParseError(ValueError):
    """A text document could not be parsed.

    The line number of the offending line is kept on the exception when known.
    """

    def __init__(self, message, line_number=None):
        self.line_number = line_number
        if line_number is not None:
            message = 'line {}: {}'.format(line_number, message)
        super().__init__(message)


class InvalidCnf(ValueError):
    """The formula is not a valid 3-CNF."""


class PatternLengthMismatch(ValueError):
    """An activation pattern does not match the number of ReLU-equalities."""


class MissingVariable(LookupError):
    """An assignment does not cover a required program variable."""


class LayeringError(ValueError):
    """A node graph cannot be laid out as a strictly layered network."""


class InvalidGadgetParameter(ValueError):
    """A gadget parameter is outside of its allowed range."""


class OracleLimitExceeded(ValueError):
    """The formula has more variables than the brute force oracle accepts."""


class SolverAborted(RuntimeError):
    """The simplex gave up after exceeding its pivot limit."""
