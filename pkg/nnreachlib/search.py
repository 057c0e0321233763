#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: search.py
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
The reachability decision procedure.

Two strategies explore the activation patterns of the ReLU nodes. Enumeration
solves the linear program of every complete pattern in lexicographic order,
active first. Branching fixes ReLUs depth first and prunes a partial pattern
as soon as its relaxation is infeasible. The relaxation replaces every
ReLU-equality not fixed yet by the bounds any ReLU output satisfies, x >= 0
and x >= its argument, and ties ReLUs with the same argument together. Such
ReLUs share one activation bit. The next ReLU to fix is the first one in
network order whose equality fails at the relaxation point. A relaxation
point is accepted when no ReLU-equality fails or when its inputs already
form a witness.

Both can spread the pattern space over a thread pool. With the deterministic
flag the answer is the one the sequential order finds first, whatever the
number of threads.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import logging
import threading
from concurrent.futures import ThreadPoolExecutor
from enum import Enum
from itertools import product

from . import configuration
from .evaluator import activation_pattern_of, check_witness
from .lp import feasible
from .model import Verdict
from .nnreachlibexceptions import SolverAborted
from .relulp import build_program, fix_pattern, project_to_inputs, relax

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

ACTIVE_FIRST = (1, 0)


class Mode(Enum):
    """The search strategies."""

    ENUMERATE = 'enumerate'
    BRANCH = 'branch'


class SolveStats:
    """Counters of a solver run, safe to update from worker threads."""

    def __init__(self, mode):
        self._mode = Mode(mode)
        self._lock = threading.Lock()
        self._lp_calls = 0
        self._patterns_explored = 0

    @property
    def mode(self):
        """The mode of the run."""
        return self._mode

    @property
    def lp_calls(self):
        """The number of linear programs solved."""
        return self._lp_calls

    @property
    def patterns_explored(self):
        """The number of complete or partial patterns visited."""
        return self._patterns_explored

    def record_lp_call(self):
        """Counts one linear program."""
        with self._lock:
            self._lp_calls += 1

    def record_pattern(self):
        """Counts one visited pattern."""
        with self._lock:
            self._patterns_explored += 1

    def lines(self):
        """The counters as ``stat <name> <value>`` lines."""
        return ['stat mode {}'.format(self._mode.value),
                'stat lp_calls {}'.format(self._lp_calls),
                'stat patterns_explored {}'.format(self._patterns_explored)]


class ReachabilitySolver:
    """Decides a reachability instance and produces a verified witness."""

    def __init__(self, instance, mode=None, threads=None, deterministic=False):
        self._logger = logging.getLogger('{}.{}'.format(LOGGER_BASENAME, self.__class__.__name__))
        self._instance = instance
        self._mode = Mode(mode or configuration.DEFAULT_MODE)
        self._threads = configuration.DEFAULT_THREADS if threads is None else threads
        if isinstance(self._threads, bool) or not isinstance(self._threads, int) or self._threads < 1:
            raise ValueError('Thread budget must be a positive integer, got :{}'.format(threads))
        self._deterministic = deterministic
        self._program = build_program(instance)

    @property
    def instance(self):
        """The instance being decided."""
        return self._instance

    @property
    def program(self):
        """The ReLU-linear program of the instance."""
        return self._program

    @property
    def mode(self):
        """The search strategy."""
        return self._mode

    @property
    def relu_count(self):
        """The number of ReLU-equalities, i.e. the pattern length."""
        return len(self._program.relu_equalities)

    def _feasible(self, linear_program, stats):
        stats.record_lp_call()
        return feasible(linear_program)

    def _scan_patterns(self, prefix, stats, should_stop):
        """Solves every complete pattern starting with the prefix, returns the first feasible point."""
        for suffix in product(ACTIVE_FIRST, repeat=self.relu_count - len(prefix)):
            if should_stop():
                return None
            bits = prefix + suffix
            stats.record_pattern()
            result = self._feasible(fix_pattern(self._program, bits), stats)
            if result.is_feasible:
                self._logger.debug('Pattern %s is feasible', bits)
                return result.point
        return None

    def _violated_group(self, fixed, point):
        """The first group not fixed yet with a ReLU-equality failing at the point, None if there is none."""
        equalities = self._program.relu_equalities
        for group in self._program.relu_groups:
            if group[0] not in fixed and not all(equalities[member].holds(point) for member in group):
                return group
        return None

    def _evaluate_node(self, fixed, stats):
        """Solves the relaxation of a partial pattern.

        :param fixed: Mapping of ReLU-equality position to bit
        :return: (accepted point or None, the group to branch on or None)
        """
        stats.record_pattern()
        result = self._feasible(relax(self._program, fixed, bounded=True), stats)
        if not result.is_feasible:
            return None, None
        group = self._violated_group(fixed, result.point)
        if group is None or check_witness(self._instance, project_to_inputs(result.point, self._instance)):
            return result.point, None
        return None, group

    @staticmethod
    def _children(fixed, group):
        for bit in ACTIVE_FIRST:
            child = dict(fixed)
            child.update((member, bit) for member in group)
            yield child

    def _search_subtree(self, fixed, stats, should_stop):
        """Depth first search below the partial pattern, returns the first accepted point."""
        stack = [fixed]
        while stack:
            if should_stop():
                return None
            fixed = stack.pop()
            point, group = self._evaluate_node(fixed, stats)
            if point is not None:
                self._logger.debug('Accepted with %s of %s ReLUs fixed', len(fixed), self.relu_count)
                return point
            if group is not None:
                stack.extend(reversed(list(self._children(fixed, group))))
        return None

    def _frontier_depth(self, limit):
        depth = 0
        while 2 ** depth < 4 * self._threads and depth < limit:
            depth += 1
        return depth

    def _branch_units(self, stats):
        """The branch search split into units in depth first order.

        Nodes above the frontier are solved right away, an accepting one ends
        the list since the sequential search would stop there.
        """
        depth = self._frontier_depth(len(self._program.relu_groups))
        units = []

        def expand(fixed, level):
            if level == depth:
                units.append((fixed, None))
                return False
            point, group = self._evaluate_node(fixed, stats)
            if point is not None:
                units.append((fixed, point))
                return True
            return group is not None and any(expand(child, level + 1) for child in self._children(fixed, group))

        expand({}, 0)
        return units

    def _run_units(self, units, task, stats):
        """Runs the pending units on the pool and returns the point of the earliest successful unit."""
        found = [point for _, point in units]
        ready = [index for index, point in enumerate(found) if point is not None]
        best = [ready[0] if ready else len(units)]
        if ready and not self._deterministic:
            return found[best[0]]
        lock = threading.Lock()
        stop = threading.Event()

        def run(index, prefix):
            if self._deterministic:
                should_stop = lambda: best[0] < index  # noqa
            else:
                should_stop = stop.is_set
            point = task(prefix, stats, should_stop)
            if point is not None:
                with lock:
                    found[index] = point
                    best[0] = min(best[0], index)
                stop.set()

        with ThreadPoolExecutor(max_workers=self._threads) as executor:
            futures = [executor.submit(run, index, prefix)
                       for index, (prefix, point) in enumerate(units)
                       if point is None and index < best[0]]
            for future in futures:
                future.result()
        if best[0] < len(units):
            return found[best[0]]
        return None

    def _search(self, stats):
        if self._threads == 1 or self.relu_count == 0:
            if self._mode is Mode.ENUMERATE:
                return self._scan_patterns((), stats, lambda: False)
            return self._search_subtree({}, stats, lambda: False)
        if self._mode is Mode.ENUMERATE:
            depth = self._frontier_depth(self.relu_count)
            units = [(prefix, None) for prefix in product(ACTIVE_FIRST, repeat=depth)]
            return self._run_units(units, self._scan_patterns, stats)
        return self._run_units(self._branch_units(stats), self._search_subtree, stats)

    def solve(self):
        """Decides the instance.

        :return: (Verdict, SolveStats)

        :raises: SolverAborted if the simplex gives up or a witness fails verification
        """
        stats = SolveStats(self._mode)
        self._logger.debug('Solving with %s ReLU-equalities in %s mode on %s thread(s)',
                           self.relu_count, self._mode.value, self._threads)
        point = self._search(stats)
        if point is None:
            verdict = Verdict.unreachable()
        else:
            witness = project_to_inputs(point, self._instance)
            if not check_witness(self._instance, witness):
                raise SolverAborted('Witness failed verification')
            verdict = Verdict.reachable(witness, activation_pattern_of(self._instance.network, witness))
        self._logger.info('%s after %s LP calls', 'REACHABLE' if verdict.is_reachable else 'UNREACHABLE',
                          stats.lp_calls)
        return verdict, stats


def solve(instance, mode=None, threads=None, deterministic=False):
    """Decides the instance, see :class:`ReachabilitySolver`."""
    return ReachabilitySolver(instance, mode, threads, deterministic).solve()


def solve_enumerate(instance):
    """Decides the instance by solving the linear program of every activation pattern."""
    return solve(instance, Mode.ENUMERATE, threads=1, deterministic=True)


def solve_branch(instance):
    """Decides the instance by depth first search with relaxation pruning."""
    return solve(instance, Mode.BRANCH, threads=1, deterministic=True)
