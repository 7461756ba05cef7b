import os
import argparse

from ._version import __version__ as __bare_version

__all__ = ['BoostflowError', 'DetViolation', 'NotUnimodular',
           'DegenerateInput', 'DomainError', 'NearSingularBeta',
           'StepTooLarge', 'SpeedOutOfRange', 'NotOrthochronous',
           'InconsistencyError']

# Version
try:
    from ._commit import __commit__, __date__
    __version__ = '%s+%s (%s)' % (__bare_version, __commit__, __date__)
except ImportError:
    __commit__ = ""
    __date__ = ""
    __version__ = __bare_version

# Global variables, they can be tweaked at run time (the command line
# sets them from its global flags)
step = 1e-3
xi_end = 10.0
seed = 42
output_format = 'csv'
output_path = '-'
degrees = False
speed = False
beta_min = 1e-6
# Largest rapidity, or sum of composed rapidities, accepted: cosh
# overflows just above 710
rapidity_max = 700.0
tolerance = {'construction': 1e-12,
             'roundtrip': 1e-10,
             'oracle': 1e-9,
             'unimodular': 1e-9,
             'arccosh': 1e-14,
             'clamp': 1e-12,
             'monitor': 1e-6}

# Exit codes of the command line
EXIT_SUCCESS = 0
EXIT_USAGE = 2
EXIT_INCONSISTENT = 3
EXIT_SINGULAR = 4


class BoostflowError(ValueError):

    """Base class of the errors raised by boostflow."""

    exit_code = EXIT_INCONSISTENT


class DetViolation(BoostflowError):
    """A matrix entering a product is not unimodular."""


class NotUnimodular(BoostflowError):
    """A matrix to decompose does not have unit determinant."""


class DegenerateInput(BoostflowError):
    """Both rapidities vanish and the resultant direction is undefined."""

    exit_code = EXIT_USAGE


class DomainError(BoostflowError):
    """Parameters outside the domain of a formula or a specification."""

    exit_code = EXIT_USAGE


class NearSingularBeta(BoostflowError):
    """The flow hits the polar coordinate singularity at beta = 0."""

    exit_code = EXIT_SINGULAR


class StepTooLarge(BoostflowError):
    """The integration step is too large for the local dynamics."""


class SpeedOutOfRange(BoostflowError):
    """A speed is not strictly below the speed of light."""

    exit_code = EXIT_USAGE


class NotOrthochronous(BoostflowError):
    """A Lorentz matrix reverses the direction of time."""


class InconsistencyError(BoostflowError):
    """Two independent routes to the same quantity disagree."""


# Help formatter
os.environ['COLUMNS'] = "100"

class CustomHelpFormatter(argparse.RawDescriptionHelpFormatter):
    def __init__(self, prog, *args, **kwargs):
        argparse.RawDescriptionHelpFormatter.__init__(self, prog,
                                                      indent_increment=2,
                                                      max_help_position=60,
                                                      width=None)

    def _get_help_string(self, action):
        help = action.help
        if help is None:
            help = ''
        if '%(default)' not in help:
            if action.default is not argparse.SUPPRESS and action.default is not None:
                defaulting_nargs = [argparse.OPTIONAL, argparse.ZERO_OR_MORE]
                if action.option_strings or action.nargs in defaulting_nargs:
                    help += ' [default: %(default)s]'
        return help
