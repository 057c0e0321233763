#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: cli.py
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
The ``nnreach`` command line.

Exit codes: 0 for a positive answer (reachable, satisfiable, valid, done),
1 for a negative one and 2 for usage, parse and file errors.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import argparse
import logging
import os
import sys

import coloredlogs

from . import configuration
from ._version import __version__
from .evaluator import check_witness, eval_network
from .formats import (format_values,
                      parse_dimacs,
                      parse_network,
                      parse_spec,
                      parse_values,
                      parse_verdict,
                      serialize_dimacs,
                      serialize_network,
                      serialize_spec,
                      serialize_var_map,
                      serialize_verdict)
from .model import Instance, parse_rational
from .nnreachlibexceptions import SolverAborted
from .reductions import REDUCTIONS, reduce
from .sat import brute_force_sat, check_assignment, random_cnf
from .search import solve

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
LOGGER = logging.getLogger('{}.cli'.format(LOGGER_BASENAME))
LOGGER.addHandler(logging.NullHandler())

EXIT_POSITIVE = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2


def setup_logging(level):
    """Installs colored console logging on standard error."""
    coloredlogs.install(level=level.upper(), stream=sys.stderr)
    for logger in configuration.LOGGERS_TO_DISABLE:
        logging.getLogger(logger).disabled = True


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError('{} is not a positive integer'.format(text))
    return value


def _add_instance_arguments(parser):
    parser.add_argument('--network', required=True, help='The .nn network file')
    parser.add_argument('--input-spec', required=True, help='The input specification file')
    parser.add_argument('--output-spec', required=True, help='The output specification file')


def _add_search_arguments(parser):
    parser.add_argument('--mode', choices=configuration.SOLVE_MODES, default=configuration.DEFAULT_MODE,
                        help='The search strategy')
    parser.add_argument('--threads', type=_positive_int, default=configuration.DEFAULT_THREADS,
                        help='The number of worker threads')
    parser.add_argument('--deterministic', action='store_true',
                        help='Return the witness of the sequential order whatever the thread count')


def _add_reduction_arguments(parser):
    parser.add_argument('--cnf', required=True, help='The DIMACS CNF file')
    parser.add_argument('--reduction', required=True, choices=REDUCTIONS, help='The reduction to apply')
    parser.add_argument('--c', type=parse_rational, default=None, help='Positive rational, restricted and no-zero')
    parser.add_argument('--d', type=parse_rational, default=None, help='Positive rational, restricted only')


def get_arguments(argv=None):
    """Parses the command line."""
    parser = argparse.ArgumentParser(prog='nnreach',
                                     description='Exact reachability verification for ReLU networks')
    parser.add_argument('--log-level', choices=configuration.LOGGING_LEVELS, default=configuration.LOGGING_LEVEL,
                        help='Logging level on standard error')
    parser.add_argument('--version', action='version', version=__version__)
    subparsers = parser.add_subparsers(dest='command')
    subparsers.required = True

    solve_parser = subparsers.add_parser('solve', help='Decide a reachability instance')
    _add_instance_arguments(solve_parser)
    _add_search_arguments(solve_parser)
    solve_parser.add_argument('--stats', action='store_true', help='Print the solver counters')
    solve_parser.add_argument('--out', help='Also write the verdict to this file')

    compile_parser = subparsers.add_parser('compile', help='Reduce a CNF formula to a reachability instance')
    _add_reduction_arguments(compile_parser)
    compile_parser.add_argument('--out', required=True, help='The output directory')

    roundtrip_parser = subparsers.add_parser('roundtrip', help='Compare the solver with the SAT oracle')
    _add_reduction_arguments(roundtrip_parser)
    _add_search_arguments(roundtrip_parser)
    roundtrip_parser.add_argument('--out', help='Write the artifacts here and solve what is read back')

    generate_parser = subparsers.add_parser('gen-cnf', help='Generate a seeded random 3-CNF formula')
    generate_parser.add_argument('--vars', type=_positive_int, required=True, help='The number of variables')
    generate_parser.add_argument('--clauses', type=_positive_int, required=True, help='The number of clauses')
    generate_parser.add_argument('--seed', type=int, required=True, help='The random seed')
    generate_parser.add_argument('--out', required=True, help='The CNF file to write')

    eval_parser = subparsers.add_parser('eval', help='Evaluate a network on an input')
    eval_parser.add_argument('--network', required=True, help='The .nn network file')
    eval_parser.add_argument('--input', required=True, help='Space separated rationals')

    witness_parser = subparsers.add_parser('check-witness', help='Check a witness against an instance')
    _add_instance_arguments(witness_parser)
    group = witness_parser.add_mutually_exclusive_group(required=True)
    group.add_argument('--input', help='Space separated rationals')
    group.add_argument('--verdict', help='A verdict file holding the witness')

    oracle_parser = subparsers.add_parser('oracle', help='Decide a CNF formula by brute force')
    oracle_parser.add_argument('--cnf', required=True, help='The DIMACS CNF file')
    return parser.parse_args(argv)


def _read(path):
    with open(path, 'r', encoding='utf-8') as input_file:
        return input_file.read()


def _write(path, text):
    with open(path, 'w', encoding='utf-8') as output_file:
        output_file.write(text)


def _load_instance(args):
    return Instance(parse_network(_read(args.network)),
                    parse_spec(_read(args.input_spec), 'input'),
                    parse_spec(_read(args.output_spec), 'output'))


def _compile(args):
    return reduce(parse_dimacs(_read(args.cnf)), args.reduction, args.c, args.d)


def _write_artifacts(output, directory, stem):
    """Writes the .nn, .in.spec, .out.spec and .map files, returns their paths."""
    os.makedirs(directory, exist_ok=True)
    instance = output.instance
    contents = (('.nn', serialize_network(instance.network)),
                ('.in.spec', serialize_spec(instance.input_spec)),
                ('.out.spec', serialize_spec(instance.output_spec)),
                ('.map', serialize_var_map(output.var_map)))
    paths = []
    for suffix, text in contents:
        path = os.path.join(directory, stem + suffix)
        _write(path, text)
        paths.append(path)
    return paths


def _stem(path):
    return os.path.splitext(os.path.basename(path))[0]


def cmd_solve(args):
    """Prints the verdict, exit 0 if reachable and 1 otherwise."""
    verdict, stats = solve(_load_instance(args), args.mode, args.threads, args.deterministic)
    text = serialize_verdict(verdict)
    print(text)
    if args.stats:
        print('\n'.join(stats.lines()))
    if args.out:
        _write(args.out, text + '\n')
    return EXIT_POSITIVE if verdict.is_reachable else EXIT_NEGATIVE


def cmd_compile(args):
    """Writes the four artifact files of a reduction."""
    output = _compile(args)
    for path in _write_artifacts(output, args.out, _stem(args.cnf)):
        LOGGER.info('Wrote %s', path)
    return EXIT_POSITIVE


def cmd_roundtrip(args):
    """Compiles, solves and compares with the oracle, exit 0 iff both agree."""
    cnf = parse_dimacs(_read(args.cnf))
    output = reduce(cnf, args.reduction, args.c, args.d)
    instance = output.instance
    if args.out:
        network_path, input_path, output_path, _ = _write_artifacts(output, args.out, _stem(args.cnf))
        instance = Instance(parse_network(_read(network_path)),
                            parse_spec(_read(input_path), 'input'),
                            parse_spec(_read(output_path), 'output'))
    verdict, _ = solve(instance, args.mode, args.threads, args.deterministic)
    oracle = brute_force_sat(cnf)
    print('solver {}'.format('REACHABLE' if verdict.is_reachable else 'UNREACHABLE'))
    print('oracle {}'.format(oracle.render()))
    agree = verdict.is_reachable == oracle.is_sat
    if agree and verdict.is_reachable:
        decoded = output.decode(verdict.witness)
        print('decoded {}'.format(' '.join(str(bit) for bit in decoded)))
        agree = check_assignment(cnf, decoded)
    if not agree:
        LOGGER.error('Solver and oracle disagree on %s with %s', args.cnf, args.reduction)
    return EXIT_POSITIVE if agree else EXIT_NEGATIVE


def cmd_gen_cnf(args):
    """Writes a seeded random formula."""
    _write(args.out, serialize_dimacs(random_cnf(args.vars, args.clauses, args.seed)))
    return EXIT_POSITIVE


def cmd_eval(args):
    """Prints ``output`` followed by the network outputs."""
    outputs = eval_network(parse_network(_read(args.network)), parse_values(args.input))
    print(' '.join(['output', format_values(outputs)]).rstrip())
    return EXIT_POSITIVE


def cmd_check_witness(args):
    """Prints VALID or INVALID, exit 0 if valid."""
    instance = _load_instance(args)
    if args.verdict:
        verdict = parse_verdict(_read(args.verdict))
        valid = verdict.is_reachable and check_witness(instance, verdict.witness)
    else:
        valid = check_witness(instance, parse_values(args.input))
    print('VALID' if valid else 'INVALID')
    return EXIT_POSITIVE if valid else EXIT_NEGATIVE


def cmd_oracle(args):
    """Prints ``SAT <bits>`` or ``UNSAT``, exit 0 if satisfiable."""
    result = brute_force_sat(parse_dimacs(_read(args.cnf)))
    print(result.render())
    return EXIT_POSITIVE if result.is_sat else EXIT_NEGATIVE


COMMANDS = {'solve': cmd_solve,
            'compile': cmd_compile,
            'roundtrip': cmd_roundtrip,
            'gen-cnf': cmd_gen_cnf,
            'eval': cmd_eval,
            'check-witness': cmd_check_witness,
            'oracle': cmd_oracle}


def main(argv=None):
    """Runs one command and returns its exit code."""
    try:
        args = get_arguments(argv)
    except SystemExit as exit_:
        return exit_.code if isinstance(exit_.code, int) else EXIT_ERROR
    setup_logging(args.log_level)
    try:
        return COMMANDS[args.command](args)
    except (ValueError, LookupError, OSError, SolverAborted) as error:
        LOGGER.debug('Command %s failed', args.command, exc_info=True)
        print('nnreach {}: error: {}'.format(args.command, error), file=sys.stderr)
        return EXIT_ERROR


if __name__ == '__main__':
    raise SystemExit(main())
