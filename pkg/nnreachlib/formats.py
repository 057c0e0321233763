#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: formats.py
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
Text formats of nnreachlib.

Line oriented, exact formats for networks (``.nn``), specifications
(``.spec``), DIMACS CNF formulas (``.cnf``), verdicts (``.verdict``) and the
variable map written next to compiled instances (``.map``).

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import logging
import re

from .model import (Activation,
                    Constraint,
                    Network,
                    Node,
                    Specification,
                    VarKind,
                    VarRef,
                    Verdict,
                    format_rational,
                    parse_rational)
from .nnreachlibexceptions import (DimensionMismatch,
                                   InvalidCnf,
                                   InvalidRational,
                                   ParseError)

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

ROLES = {'input': VarKind.INPUT,
         'output': VarKind.OUTPUT,
         VarKind.INPUT: VarKind.INPUT,
         VarKind.OUTPUT: VarKind.OUTPUT}

CONJUNCT_PATTERN = re.compile(r'^(?P<lhs>.+?)\s*(?P<relation><=|>=|=)\s*(?P<rhs>\S+)$')
TERM_PATTERN = re.compile(r'^(?:(?P<coefficient>[^*\s]+)\s*\*\s*)?(?P<kind>[xy])(?P<index>\d+)$')


def _content_lines(text, comment='#'):
    """Yields (line number, stripped content) for every line with content left after comments."""
    for line_number, line in enumerate(text.splitlines(), 1):
        content = (line.split(comment, 1)[0] if comment else line).strip()
        if content:
            yield line_number, content


def _rational(token, line_number):
    try:
        return parse_rational(token)
    except InvalidRational as error:
        raise ParseError(str(error), line_number) from None


def _resolve_role(role):
    try:
        return ROLES[role]
    except KeyError:
        raise ValueError('Unknown specification role :{}'.format(role)) from None


class CnfFormula:
    """A propositional formula in conjunctive normal form with exactly three literals per clause.

    Literals are signed, 1-based variable indices, duplicates inside a clause are allowed.
    """

    def __init__(self, var_count, clauses):
        if isinstance(var_count, bool) or not isinstance(var_count, int) or var_count < 1:
            raise InvalidCnf('Variable count must be a positive integer, got :{}'.format(var_count))
        self._var_count = var_count
        self._clauses = tuple(tuple(clause) for clause in clauses)
        for clause in self._clauses:
            if len(clause) != 3:
                raise InvalidCnf('Clause {} does not have exactly three literals'.format(clause))
            for literal in clause:
                if isinstance(literal, bool) or not isinstance(literal, int) or literal == 0:
                    raise InvalidCnf('Invalid literal :{}'.format(literal))
                if abs(literal) > var_count:
                    raise InvalidCnf('Literal {} is out of range for {} variables'.format(literal, var_count))

    @property
    def var_count(self):
        """The number of propositional variables."""
        return self._var_count

    @property
    def clauses(self):
        """The clauses as tuples of three signed literals."""
        return self._clauses

    @property
    def clause_count(self):
        """The number of clauses."""
        return len(self._clauses)

    def __eq__(self, other):
        if not isinstance(other, CnfFormula):
            return NotImplemented
        return (self._var_count, self._clauses) == (other.var_count, other.clauses)

    def __hash__(self):
        return hash((self._var_count, self._clauses))

    def __repr__(self):
        return 'CnfFormula({}, {})'.format(self._var_count, list(self._clauses))


def parse_network(text):
    """Parses a network document.

    The document starts with ``nn`` and ``inputs <n>``, followed by ``layer``
    lines each followed by their ``node <relu|id> bias <r> weights <r>*``
    lines and ends with ``end``. ``#`` starts a comment.

    :param text: The document
    :return: The network

    :raises: ParseError on syntax errors, DimensionMismatch on wrong weight counts,
        InvalidNetwork for a ReLU node on the output layer
    """
    lines = _content_lines(text)
    header = next(lines, None)
    if header is None or header[1] != 'nn':
        raise ParseError('Expected "nn" header', header[0] if header else None)
    inputs = next(lines, None)
    if inputs is None:
        raise ParseError('Expected "inputs <n>" line')
    line_number, content = inputs
    tokens = content.split()
    if len(tokens) != 2 or tokens[0] != 'inputs' or not tokens[1].isdigit() or int(tokens[1]) < 1:
        raise ParseError('Expected "inputs <n>" with n >= 1', line_number)
    input_dim = int(tokens[1])
    layers = []
    width = input_dim
    terminated = False
    for line_number, content in lines:
        if terminated:
            raise ParseError('Content after "end"', line_number)
        tokens = content.split()
        keyword = tokens[0]
        if keyword == 'end' and len(tokens) == 1:
            terminated = True
        elif keyword == 'layer' and len(tokens) == 1:
            if layers and not layers[-1]:
                raise ParseError('Empty layer', line_number)
            if layers:
                width = len(layers[-1])
            layers.append([])
        elif keyword == 'node':
            if not layers:
                raise ParseError('Node outside of a layer', line_number)
            node = _parse_node(tokens, line_number)
            if len(node.weights) != width:
                raise DimensionMismatch('line {}: expected {} weights, got {}'.format(line_number,
                                                                                      width,
                                                                                      len(node.weights)))
            layers[-1].append(node)
        else:
            raise ParseError('Unexpected line :{}'.format(content), line_number)
    if not terminated:
        raise ParseError('Missing "end"')
    if not layers or not layers[-1]:
        raise ParseError('A network needs at least one non empty layer')
    return Network(input_dim, layers)


def _parse_node(tokens, line_number):
    if len(tokens) < 5 or tokens[2] != 'bias' or tokens[4] != 'weights':
        raise ParseError('Expected "node <relu|id> bias <r> weights <r>*"', line_number)
    if tokens[1] not in ('relu', 'id'):
        raise ParseError('Unknown activation :{}'.format(tokens[1]), line_number)
    return Node(Activation(tokens[1]),
                _rational(tokens[3], line_number),
                [_rational(token, line_number) for token in tokens[5:]])


def serialize_network(network):
    """Renders a network in the canonical document form."""
    lines = ['nn', 'inputs {}'.format(network.input_dim)]
    for layer in network.layers:
        lines.append('layer')
        for node in layer:
            weights = ' '.join(format_rational(weight) for weight in node.weights)
            lines.append('node {} bias {} weights {}'.format(node.activation.value,
                                                             format_rational(node.bias),
                                                             weights).rstrip())
    lines.append('end')
    return '\n'.join(lines) + '\n'


def parse_spec(text, role):
    """Parses a specification document, one conjunct per line.

    ``>=`` and ``=`` are rewritten to ``<=`` constraints, an empty document is
    the always true specification.

    :param text: The document
    :param role: 'input' or 'output', decides whether x or y variables are allowed
    :return: The specification

    :raises: ParseError on malformed lines or variables of the wrong kind
    """
    kind = _resolve_role(role)
    conjuncts = []
    for line_number, content in _content_lines(text):
        match = CONJUNCT_PATTERN.match(content)
        if not match:
            raise ParseError('Malformed conjunct :{}'.format(content), line_number)
        terms = [_parse_term(term, kind, line_number) for term in match.group('lhs').split('+')]
        constraint = Constraint(terms, _rational(match.group('rhs'), line_number))
        relation = match.group('relation')
        if relation in ('<=', '='):
            conjuncts.append(constraint)
        if relation in ('>=', '='):
            conjuncts.append(constraint.negated())
    return Specification(conjuncts, kind)


def _parse_term(text, kind, line_number):
    match = TERM_PATTERN.match(text.strip())
    if not match:
        raise ParseError('Malformed term :{}'.format(text.strip()), line_number)
    if match.group('kind') != kind.value:
        raise ParseError('Variable {}{} not allowed in an {} specification'.format(match.group('kind'),
                                                                                 match.group('index'),
                                                                                 kind.name.lower()),
                         line_number)
    coefficient = match.group('coefficient')
    value = _rational(coefficient, line_number) if coefficient is not None else 1
    return value, VarRef(kind, int(match.group('index')))


def serialize_spec(specification):
    """Renders a specification with one ``<=`` conjunct per line, empty for the always true one."""
    return ''.join('{}\n'.format(conjunct) for conjunct in specification)


def parse_dimacs(text):
    """Parses a DIMACS CNF document into a formula with three literals per clause.

    Shorter clauses are padded by repeating their last literal. A ``%`` line
    ends the clause section.

    :raises: ParseError on a malformed header, a clause longer than three
        literals, an empty clause, an out of range literal or a clause count
        that differs from the header
    """
    header = None
    clauses = []
    current = []
    for line_number, content in _content_lines(text, comment=None):
        if content.startswith('c'):
            continue
        if content.startswith('%'):
            break
        if content.startswith('p'):
            tokens = content.split()
            if header is not None:
                raise ParseError('Duplicate header', line_number)
            if len(tokens) != 4 or tokens[1] != 'cnf' or not tokens[2].isdigit() or not tokens[3].isdigit():
                raise ParseError('Expected "p cnf <variables> <clauses>"', line_number)
            header = int(tokens[2]), int(tokens[3])
            if header[0] < 1:
                raise ParseError('A formula needs at least one variable', line_number)
            continue
        if header is None:
            raise ParseError('Clause before header', line_number)
        for token in content.split():
            try:
                literal = int(token)
            except ValueError:
                raise ParseError('Invalid literal :{}'.format(token), line_number) from None
            if literal == 0:
                clauses.append(_pad_clause(current, line_number))
                current = []
                continue
            if abs(literal) > header[0]:
                raise ParseError('Literal {} out of range'.format(literal), line_number)
            current.append(literal)
            if len(current) > 3:
                raise ParseError('Clause longer than three literals', line_number)
    if header is None:
        raise ParseError('Missing "p cnf" header')
    if current:
        LOGGER.warning('Last clause is not terminated by 0, accepting it')
        clauses.append(_pad_clause(current, None))
    if len(clauses) != header[1]:
        raise ParseError('Header announces {} clauses, found {}'.format(header[1], len(clauses)))
    return CnfFormula(header[0], clauses)


def _pad_clause(literals, line_number):
    if not literals:
        raise ParseError('Empty clause', line_number)
    if len(literals) < 3:
        LOGGER.warning('Padding clause %s to three literals', literals)
    return tuple(literals + [literals[-1]] * (3 - len(literals)))


def serialize_dimacs(formula):
    """Renders a formula as a DIMACS CNF document."""
    lines = ['p cnf {} {}'.format(formula.var_count, formula.clause_count)]
    lines.extend('{} 0'.format(' '.join(str(literal) for literal in clause)) for clause in formula.clauses)
    return '\n'.join(lines) + '\n'


def serialize_verdict(verdict):
    """Renders a verdict.

    ``UNREACHABLE`` or ``REACHABLE`` followed by the ``pattern`` and the
    ``input`` lines of the witness.
    """
    if not verdict.is_reachable:
        return 'UNREACHABLE'
    pattern = ' '.join(['pattern'] + [str(bit) for bit in verdict.pattern])
    witness = ' '.join(['input'] + [format_rational(value) for value in verdict.witness])
    return '\n'.join(('REACHABLE', pattern, witness))


def parse_verdict(text):
    """Parses a verdict rendered by :func:`serialize_verdict`."""
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError('Empty verdict')
    line_number, first = lines[0]
    if first == 'UNREACHABLE':
        if len(lines) > 1:
            raise ParseError('Unexpected content after UNREACHABLE', lines[1][0])
        return Verdict.unreachable()
    if first != 'REACHABLE':
        raise ParseError('Expected REACHABLE or UNREACHABLE', line_number)
    if len(lines) != 3:
        raise ParseError('A reachable verdict needs a pattern and an input line', line_number)
    pattern_line, input_line = lines[1], lines[2]
    pattern_tokens = pattern_line[1].split()
    if pattern_tokens[0] != 'pattern' or any(token not in ('0', '1') for token in pattern_tokens[1:]):
        raise ParseError('Expected "pattern <bit>*"', pattern_line[0])
    input_tokens = input_line[1].split()
    if input_tokens[0] != 'input':
        raise ParseError('Expected "input <rational>*"', input_line[0])
    witness = [_rational(token, input_line[0]) for token in input_tokens[1:]]
    return Verdict.reachable(witness, [int(token) for token in pattern_tokens[1:]])


def parse_values(text):
    """Parses a whitespace separated list of rationals."""
    return tuple(_rational(token, None) for token in text.split())


def format_values(values):
    """Renders rationals space separated."""
    return ' '.join(format_rational(value) for value in values)


def serialize_var_map(var_map):
    """Renders a variable map as ``# input <i> <name>`` and ``# output <i> <name>`` lines."""
    lines = ['# input {} {}'.format(index, name) for index, name in enumerate(var_map.inputs)]
    lines.extend('# output {} {}'.format(index, name) for index, name in enumerate(var_map.outputs))
    return '\n'.join(lines) + '\n'


def parse_var_map(text):
    """Reads back the (input names, output names) of a variable map document."""
    names = {'input': {}, 'output': {}}
    for line_number, line in enumerate(text.splitlines(), 1):
        tokens = line.split()
        if not tokens:
            continue
        if len(tokens) != 4 or tokens[0] != '#' or tokens[1] not in names or not tokens[2].isdigit():
            raise ParseError('Expected "# input|output <index> <name>"', line_number)
        names[tokens[1]][int(tokens[2])] = tokens[3]
    return tuple(tuple(entries[index] for index in sorted(entries)) for entries in (names['input'],
                                                                                   names['output']))
