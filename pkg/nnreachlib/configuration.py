#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: configuration.py
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
Default settings for nnreachlib.

All values can be overridden by the command line, the logging level also by
the NNREACH_LOGGING_LEVEL environment variable.

"""

import os

__author__ = '''nnreachlib contributors'''
__docformat__ = '''google'''
__date__ = '''18-10-2026'''
__copyright__ = '''Copyright 2026, nnreachlib contributors'''
__credits__ = ["nnreachlib contributors"]
__license__ = '''MIT'''
__maintainer__ = '''nnreachlib contributors'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".

LOGGING_LEVEL = os.environ.get('NNREACH_LOGGING_LEVEL', 'info').lower()

LOGGING_LEVELS = ('debug', 'info', 'warning', 'error', 'critical')

# search
SOLVE_MODES = ('enumerate', 'branch')
DEFAULT_MODE = 'branch'
DEFAULT_THREADS = 1

# brute force oracle, exhaustive 2^n scan
SAT_VARIABLE_CAP = 24

# pivots per simplex run before giving up
SIMPLEX_PIVOT_LIMIT = 200000

LOGGERS_TO_DISABLE = ['asyncio',
                      'concurrent.futures']
