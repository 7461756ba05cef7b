"""
Compose Lorentz boosts, follow the flow they generate and draw its
phase portraits.
"""

import sys
import copy
import logging
import argparse

import argh
try:
    import argcomplete
except ImportError:
    argcomplete = None
from atooms.core.utils import setup_logging

from . import core
from . import progress
from .core import BoostflowError, DomainError, CustomHelpFormatter
from .api import compose, flow, portrait, collimate, thomas, verify

__all__ = ['build_parser', 'main']

_log = logging.getLogger(__name__)

# Pristine run-time defaults, restored before and after each call to main()
_defaults = {name: copy.deepcopy(getattr(core, name))
             for name in ['step', 'xi_end', 'seed', 'output_format', 'output_path',
                          'degrees', 'speed', 'tolerance']}


def _parse_tolerance(text):
    """Parse overrides like `oracle=1e-8,monitor=1e-5`"""
    tolerance = {}
    for item in text.split(','):
        try:
            name, value = item.split('=')
            value = float(value)
        except ValueError:
            raise DomainError('invalid tolerance override {!r}'.format(item))
        if name.strip() not in core.tolerance:
            raise DomainError('unknown tolerance {!r} (use one of {})'.format(
                name, ', '.join(sorted(core.tolerance))))
        tolerance[name.strip()] = value
    return tolerance


def build_parser():
    """Return the parser of the `boostflow` script"""
    # Global flags use their own destinations, since subcommands accept
    # some of the same flags and subparser defaults would override them
    parser = argparse.ArgumentParser(prog='boostflow', formatter_class=CustomHelpFormatter,
                                     description=__doc__)
    parser.add_argument('--step', dest='global_step', type=float, help='integration step')
    parser.add_argument('--xi-end', dest='global_xi_end', type=float, help='total rapidity of the flow')
    parser.add_argument('--tolerance', dest='global_tolerance', help='tolerance overrides, as name=value,...')
    parser.add_argument('--seed', dest='global_seed', type=int, help='random seed')
    parser.add_argument('--format', dest='global_format', choices=['csv', 'text', 'json', 'svg'],
                        help='output format')
    parser.add_argument('--output', dest='global_output', help='output path (- for stdout)')
    parser.add_argument('--degrees', dest='global_degrees', action='store_true', help='angles in degrees')
    parser.add_argument('--speed', dest='global_speed', action='store_true',
                        help='boosts given as speeds instead of rapidities')
    parser.add_argument('--quiet', action='store_true', dest='quiet', help='quiet output')
    parser.add_argument('--verbose', action='store_true', dest='verbose', help='verbose output')
    parser.add_argument('--debug', action='store_true', dest='debug', help='debug output')
    argh.add_commands(parser, [compose, flow, portrait, collimate, thomas, verify],
                      func_kwargs={'formatter_class': CustomHelpFormatter})
    return parser


def _restore():
    for name, value in _defaults.items():
        setattr(core, name, copy.deepcopy(value))
    progress.active = False


def _configure(args):
    """Set the run-time defaults in `core` from the global flags"""
    _restore()
    if args.global_step is not None:
        core.step = args.global_step
    if args.global_xi_end is not None:
        core.xi_end = args.global_xi_end
    if args.global_seed is not None:
        core.seed = args.global_seed
    if args.global_format is not None:
        core.output_format = args.global_format
    if args.global_output is not None:
        core.output_path = args.global_output
    core.degrees = args.global_degrees
    core.speed = args.global_speed
    if args.global_tolerance is not None:
        core.tolerance.update(_parse_tolerance(args.global_tolerance))

    if args.debug:
        setup_logging('boostflow', level=10)
    elif args.verbose:
        setup_logging('boostflow', level=20)
    elif args.quiet:
        setup_logging('boostflow', level=40)
    else:
        setup_logging('boostflow', level=30)
    progress.active = args.verbose or args.debug


def main(argv=None):
    """
    Run the `boostflow` script with the arguments `argv` and return
    its exit code.
    """
    parser = build_parser()
    if argcomplete is not None:
        argcomplete.autocomplete(parser)
    try:
        args = parser.parse_args(argv)
    except SystemExit as error:
        return error.code
    try:
        _configure(args)
        argh.dispatch(parser, argv=argv)
    except BoostflowError as error:
        _log.debug('%s', type(error).__name__, exc_info=True)
        sys.stderr.write('boostflow: error: {}\n'.format(error))
        return error.exit_code
    finally:
        _restore()
    return core.EXIT_SUCCESS
