"""
Command line API.

Each function is a subcommand of the `boostflow` script. Options left
to None fall back to the run-time defaults in `boostflow.core`, which
the script sets from its global flags.
"""

import io
import os
import sys
import csv
import json
import math
import logging

from argh import arg

from . import core
from .core import DomainError, InconsistencyError, SpeedOutOfRange
from .collimation import DecaySpec, Collimation
from .flow import FlowState, integrate
from .kinematics import (CompositionInput, resultant_theta, resultant_rapidity,
                         reverse_order_phi, thomas_angle, flow_invariant,
                         infinitesimal_thomas_coefficient, asymptotic_thomas_angle)
from .oracle import oracle_compose
from .portrait import PortraitSpec, PhasePortrait
from . import verify as _verify

__all__ = ['compose', 'flow', 'portrait', 'collimate', 'thomas', 'verify']

_log = logging.getLogger(__name__)


def _default(value, name):
    return getattr(core, name) if value is None else value


def _emit(text, output=None):
    """Write `text` to `output`, or to the standard output for `-`"""
    from atooms.core.utils import mkdir

    output = _default(output, 'output_path')
    if output == '-':
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    mkdir(os.path.dirname(output))
    with open(output, 'w', newline='\n') as fh:
        fh.write(text)


def _angle_in(value, degrees):
    return math.radians(value) if degrees else value


def _rapidity(value, speed):
    if speed:
        if not 0.0 <= value < 1.0:
            raise SpeedOutOfRange('speed must be in [0, 1), got {}'.format(value))
        return math.atanh(value)
    return value


def _report(items, fmt):
    """Format a list of (key, value) pairs as text lines or JSON"""
    if fmt == 'json':
        return json.dumps(dict(items), sort_keys=True, indent=2) + '\n'
    if fmt not in ('csv', 'text'):
        raise DomainError('unsupported format {} for this command'.format(fmt))
    return ''.join('{}: {:.12g}\n'.format(key, value) for key, value in items)


@arg('xi', type=float, help='rapidity of the boost along z, applied second')
@arg('eta', type=float, help='rapidity of the boost at angle theta0, applied first')
@arg('theta0', type=float, help='angle between the two boosts')
@arg('--format', choices=['csv', 'text', 'json'])
def compose(xi, eta, theta0, *, degrees=False, speed=False, format=None, output=None):
    """Compose two boosts and report the resultant boost and Thomas angle"""
    degrees = degrees or core.degrees
    speed = speed or core.speed
    composition = CompositionInput(_rapidity(xi, speed), _rapidity(eta, speed),
                                   _angle_in(theta0, degrees))
    rapidity = resultant_rapidity(composition)
    theta = resultant_theta(composition)
    tau = thomas_angle(composition)
    phi = reverse_order_phi(composition)
    oracle = oracle_compose(*composition)
    residual = max(abs(oracle.rapidity - rapidity), abs(oracle.theta - theta),
                   abs(oracle.tau - tau))
    if residual > 10 * core.tolerance['oracle']:
        raise InconsistencyError('closed form and 3x3 oracle differ by {:.3g}'.format(residual))
    items = [('lambda', rapidity),
             ('theta', theta),
             ('tau', tau),
             ('phi', phi),
             ('beta', math.tanh(rapidity)),
             ('invariant', flow_invariant(theta, rapidity)),
             ('oracle_residual', residual)]
    _emit(_report(items, _default(format, 'output_format')), output)


@arg('theta0', type=float, help='initial angle in [0, pi]')
@arg('beta0', type=float, help='initial signed speed in [-1, 1]')
@arg('tau0', type=float, help='initial Thomas angle')
@arg('--xi-end', type=float, help='total rapidity of the boost along z')
@arg('--step', type=float, help='integration step')
@arg('--format', choices=['csv', 'json'])
def flow(theta0, beta0, tau0, *, xi_end=None, step=None, degrees=False, format=None, output=None):
    """Integrate the boost flow from an initial state"""
    degrees = degrees or core.degrees
    fmt = _default(format, 'output_format')
    if fmt not in ('csv', 'json'):
        raise DomainError('unsupported format {} for flow'.format(fmt))
    initial = FlowState(_angle_in(theta0, degrees), beta0, _angle_in(tau0, degrees))
    trajectory = integrate(initial, _default(xi_end, 'xi_end'), _default(step, 'step'))
    invariant = trajectory.invariant()
    if fmt == 'json':
        final = trajectory.final
        items = [('xi', float(trajectory.xi[-1])),
                 ('theta', final.theta),
                 ('beta', final.beta),
                 ('tau', final.tau),
                 ('invariant', float(invariant[-1]))]
        _emit(_report(items, fmt), output)
        return

    fh = io.StringIO(newline='\n')
    writer = csv.writer(fh, lineterminator='\n')
    writer.writerow(['xi', 'theta', 'beta', 'tau', 'invariant'])
    for i in range(len(trajectory)):
        writer.writerow(['%.12g' % x for x in (trajectory.xi[i], trajectory.theta[i],
                                               trajectory.beta[i], trajectory.tau[i],
                                               invariant[i])])
    _emit(fh.getvalue(), output)


@arg('--spec-file', help='JSON file with the portrait specification')
@arg('--n-theta', type=int, help='direction field nodes along theta')
@arg('--n-beta', type=int, help='direction field nodes along beta')
@arg('--xi-end', type=float, help='total rapidity of the trajectories')
@arg('--step', type=float, help='integration step')
@arg('--stride', type=int, help='emit one trajectory sample every stride')
@arg('--tau0', type=float, help='initial Thomas angle of the trajectories')
@arg('--format', choices=['csv', 'svg'])
def portrait(*, defaults=False, spec_file=None, n_theta=None, n_beta=None, xi_end=None,
             step=None, stride=None, tau0=None, format=None, output=None):
    """Phase portrait of the boost flow: direction field, trajectories and fixed points"""
    options = {'spec-file': spec_file, 'n-theta': n_theta, 'n-beta': n_beta, 'xi-end': xi_end,
               'step': step, 'stride': stride, 'tau0': tau0}
    conflicts = ['--' + key for key, value in options.items() if value is not None]
    if defaults and conflicts:
        raise DomainError('--defaults cannot be combined with {}'.format(', '.join(conflicts)))
    if spec_file is not None:
        spec = PortraitSpec.from_file(spec_file)
    else:
        spec = PortraitSpec.default(output_format=_default(format, 'output_format'))
    fmt = format if format is not None else spec.output_format
    if not defaults:
        overrides = {'n_theta': n_theta, 'n_beta': n_beta, 'xi_end': xi_end,
                     'step': step, 'stride': stride}
        data = {'n_theta': spec.n_theta, 'n_beta': spec.n_beta,
                'theta_range': spec.theta_range, 'beta_range': spec.beta_range,
                'initial_states': spec.initial_states, 'xi_end': spec.xi_end,
                'step': spec.step, 'output_format': fmt, 'stride': spec.stride}
        data.update({key: value for key, value in overrides.items() if value is not None})
        spec = PortraitSpec(**data)
        if tau0 is not None:
            spec = spec.lifted(tau0)
    cf = PhasePortrait(spec, output_path=_default(output, 'output_path'))
    cf.do()


@arg('xi', type=float, help='rapidity of the parent')
@arg('--samples', type=int, help='number of daughters')
@arg('--mode', choices=['cos', 'theta'], help='rest frame angular sampling')
@arg('--bins', type=int, help='histogram bins in [0, pi]')
@arg('--beta0', type=float, help='speed of the daughters in the rest frame')
@arg('--seed', type=int, help='random seed')
@arg('--format', choices=['csv', 'json'])
def collimate(xi, *, samples=10000, mode='cos', bins=36, beta0=1.0, seed=None,
              speed=False, format=None, output=None):
    """Lab angular distribution of the daughters of a decay in flight"""
    speed = speed or core.speed
    spec = DecaySpec(_rapidity(xi, speed), n_samples=samples, mode=mode, bins=bins,
                     beta0=beta0, seed=_default(seed, 'seed'))
    cf = Collimation(spec, output_path=_default(output, 'output_path'),
                     output_format=_default(format, 'output_format'))
    cf.do()


@arg('xi', type=float, help='rapidity of the boost along z, applied second')
@arg('eta', type=float, help='rapidity of the boost at angle theta0, applied first')
@arg('theta0', type=float, help='angle between the two boosts')
@arg('--format', choices=['csv', 'text', 'json'])
def thomas(xi, eta, theta0, *, degrees=False, speed=False, format=None, output=None):
    """Thomas angle, its infinitesimal rate and its limit for large xi"""
    degrees = degrees or core.degrees
    speed = speed or core.speed
    composition = CompositionInput(_rapidity(xi, speed), _rapidity(eta, speed),
                                   _angle_in(theta0, degrees))
    coefficient = infinitesimal_thomas_coefficient(composition.eta, composition.theta0)
    items = [('tau', thomas_angle(composition)),
             ('phi', reverse_order_phi(composition)),
             ('theta', resultant_theta(composition)),
             ('coefficient', coefficient),
             ('increment', coefficient * composition.xi),
             ('asymptotic_tau', asymptotic_thomas_angle(composition.eta, composition.theta0))]
    _emit(_report(items, _default(format, 'output_format')), output)


@arg('-n', '--n', dest='n', type=int, help='number of random compositions')
@arg('--seed', type=int, help='random seed')
def verify(*, n=1000, seed=None):
    """Run the self-consistency checks and print a table"""
    _verify.verify(n, _default(seed, 'seed'))
