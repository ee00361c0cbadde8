# -*- coding: utf-8 -*-
""" Command line code """

from __future__ import absolute_import, division, unicode_literals

import argparse
import logging

from resources.lib import spiderlogging, spiderutils
from resources.lib.spider import DEFAULT_TWIST_KMAX, DEFAULT_TWIST_ORDER
from resources.lib.spider.exceptions import BudgetExceededException, SpiderException

_LOGGER = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_BUDGET = 3


def evaluate(args):
    """ Evaluate a diagram """
    from resources.lib.modules.invariants import Invariants
    Invariants().evaluate(args.file)


def colored(args):
    """ Evaluate a colored diagram """
    from resources.lib.modules.invariants import Invariants
    Invariants().colored(args.file, args.labels, insertion=dict(args.insert or []))


def describe(args):
    """ Describe a diagram """
    from resources.lib.modules.invariants import Invariants
    Invariants().describe(args.file)


def projector(args):
    """ Show or check a projector """
    from resources.lib.modules.projectors import Projectors
    if args.check:
        Projectors().check_projector(args.word)
        return
    series = args.series
    if series == -1:
        series = spiderutils.get_truncation()
    Projectors().show_projector(args.word, series)


def twist_limit(args):
    """ Run a twist stabilization experiment """
    from resources.lib.modules.twisting import Twisting
    order = args.order if args.order is not None else spiderutils.get_setting_int('truncation', DEFAULT_TWIST_ORDER)
    Twisting().twist_limit(args.word, args.kmax, order)


def homocalc_simplify(args):
    """ Simplify a complex """
    from resources.lib.modules.complexes import Complexes
    Complexes().simplify(args.file, args.through)


def homocalc_euler(args):
    """ Euler characteristic of a complex """
    from resources.lib.modules.complexes import Complexes
    Complexes().euler(args.file, args.through, args.slope, args.a, args.b)


def _insertion(text):
    """ Parse component:slices """
    try:
        component, point = text.split(':')
        return int(component), int(point)
    except ValueError:
        raise argparse.ArgumentTypeError('expected <component>:<slices>, got %r' % text)


class _Parser(argparse.ArgumentParser):
    """ An argument parser that reports errors to the logger before exiting """

    def error(self, message):
        _LOGGER.debug('Invalid arguments: %s', message)
        super(_Parser, self).error(message)


def build_parser():
    """ The argument parser with all subcommands """
    parser = _Parser(prog=spiderutils.PROJECT_ID, description='Quantum sl3 spider calculus')
    parser.add_argument('--order', dest='truncation', type=int, help='truncation order of series output')
    parser.add_argument('--budget', type=int, help='number of resolution branches an evaluation may expand')
    parser.add_argument('--force', action='store_true', help='evaluate even when the budget is exceeded')
    parser.add_argument('--strategy', help='face rewriting order: smallest or leftmost')
    parser.add_argument('--debug', action='store_true', help='log debug messages on stderr')
    output = parser.add_mutually_exclusive_group()
    output.add_argument('--json', dest='output', action='store_const', const=spiderutils.OUTPUT_JSON)
    output.add_argument('--pretty', dest='output', action='store_const', const=spiderutils.OUTPUT_PRETTY)

    commands = parser.add_subparsers(dest='command', parser_class=_Parser)
    commands.required = True

    command = commands.add_parser('evaluate', help='evaluate a tangle diagram')
    command.add_argument('file')
    command.set_defaults(handler=evaluate)

    command = commands.add_parser('colored', help='evaluate a diagram colored by words')
    command.add_argument('file')
    command.add_argument('--labels', nargs='+', required=True, help='one word per component')
    command.add_argument('--insert', type=_insertion, action='append', help='projector position <component>:<slices>')
    command.set_defaults(handler=colored)

    command = commands.add_parser('describe', help='codomain, crossings and components of a diagram')
    command.add_argument('file')
    command.set_defaults(handler=describe)

    command = commands.add_parser('projector', help='the projector of a word')
    command.add_argument('--word', required=True)
    command.add_argument('--series', type=int, nargs='?', const=-1, help='expand coefficients below this order')
    command.add_argument('--check', action='store_true', help='verify the projector properties')
    command.set_defaults(handler=projector)

    command = commands.add_parser('twist-limit', help='compare shifted full twists with the projector')
    command.add_argument('--word', required=True)
    command.add_argument('--kmax', type=int, default=DEFAULT_TWIST_KMAX)
    command.add_argument('--order', type=int)
    command.set_defaults(handler=twist_limit)

    command = commands.add_parser('homocalc', help='chain complex calculus')
    actions = command.add_subparsers(dest='action', parser_class=_Parser)
    actions.required = True

    action = actions.add_parser('simplify', help='Gaussian elimination of unit entries')
    action.add_argument('file')
    action.add_argument('--through', type=int)
    action.set_defaults(handler=homocalc_simplify)

    action = actions.add_parser('euler', help='Euler characteristic per label')
    action.add_argument('file')
    action.add_argument('--through', type=int)
    action.add_argument('--slope', help='slope of the support region, an integer or a fraction a/b')
    action.add_argument('-a', type=int, default=0, help='lowest homological degree of the support')
    action.add_argument('-b', type=int, default=0, help='q-degree offset of the support')
    action.set_defaults(handler=homocalc_euler)

    return parser


def _apply_settings(args):
    """ Store the global flags as settings """
    if args.truncation is not None:
        spiderutils.set_setting('truncation', args.truncation)
    if args.budget is not None:
        spiderutils.set_setting('budget', args.budget)
    if args.force:
        spiderutils.set_setting('force', True)
    if args.strategy:
        spiderutils.set_setting('strategy', args.strategy)
    if args.debug:
        spiderutils.set_setting('debug_logging', True)
    if args.output:
        spiderutils.set_setting('output', args.output)


def run(argv):
    """ Run the command line and return the exit code """
    spiderlogging.config()

    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code or EXIT_OK

    _apply_settings(args)
    _LOGGER.debug('Running %s', args.command)
    try:
        args.handler(args)
    except BudgetExceededException as exc:
        _LOGGER.error('Budget exceeded: %s', exc)
        spiderutils.show_error(exc)
        return EXIT_BUDGET
    except SpiderException as exc:
        _LOGGER.error('Invalid input: %s', exc)
        spiderutils.show_error(exc)
        return EXIT_INVALID
    return EXIT_OK
