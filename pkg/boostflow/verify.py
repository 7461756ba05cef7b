"""
Self-consistency checks across the three representations (closed
form, 2x2 matrices, 3x3 matrices) and the flow.

Each check returns a `Check` holding the measured value and the
threshold it must stay below.
"""

import os
import sys
import math
import logging

import numpy

from . import core
from .core import InconsistencyError
from .collimation import DecaySpec, collimate
from .flow import (FlowState, integrate, integrate_many, fixed_points,
                   convergence_order)
from .kinematics import (resultant_theta, resultant_rapidity, thomas_angle,
                         flow_invariant, infinitesimal_thomas)
from .oracle import oracle_compose
from .spin_algebra import (boost_matrix, compose, decompose,
                           reverse_order_identity_residual, conjugation_residual)

__all__ = ['Check', 'run_checks', 'format_table', 'verify']

_log = logging.getLogger(__name__)


class Check(object):

    """Outcome of a check: `value` must be below `threshold`."""

    def __init__(self, name, value, threshold, description=''):
        self.name = name
        self.value = float(value)
        self.threshold = threshold
        self.description = description

    @property
    def passed(self):
        return self.value < self.threshold

    def __repr__(self):
        return 'Check({!r}, {:.3g}, {:.3g})'.format(self.name, self.value, self.threshold)


def _samples(n, seed):
    rng = numpy.random.default_rng(seed)
    xi = rng.uniform(0.0, 5.0, n)
    eta = rng.uniform(0.0, 5.0, n)
    theta0 = rng.uniform(0.0, math.pi, n)
    return [(float(a), float(b), float(c)) for a, b, c in zip(xi, eta, theta0)]


def check_closed_form_vs_matrix(samples):
    deviation = 0.0
    for xi, eta, theta0 in samples:
        d = decompose(compose(boost_matrix(xi, 0.0), boost_matrix(eta, theta0)))
        deviation = max(deviation,
                        abs(d.rapidity - resultant_rapidity(xi, eta, theta0)),
                        abs(d.theta - resultant_theta(xi, eta, theta0)),
                        abs(d.tau - thomas_angle(xi, eta, theta0)) / 10)
    return Check('closed form vs matrix', deviation, 1e-10,
                 'rapidity, angle and Thomas angle / 10')


def check_oracle(samples):
    deviation = 0.0
    for xi, eta, theta0 in samples:
        d = decompose(compose(boost_matrix(xi, 0.0), boost_matrix(eta, theta0)))
        o = oracle_compose(xi, eta, theta0)
        deviation = max(deviation, abs(d.rapidity - o.rapidity),
                        abs(d.theta - o.theta), abs(d.tau - o.tau) / 10)
    return Check('matrix vs 3x3 oracle', deviation, core.tolerance['oracle'],
                 'rapidity, angle and Thomas angle / 10')


def check_reverse_order(samples):
    residual = max(reverse_order_identity_residual(*s) for s in samples)
    return Check('reverse order identity', residual, core.tolerance['roundtrip'])


def check_conjugation(samples):
    residual = max(conjugation_residual(eta, theta0) for _, eta, theta0 in samples)
    return Check('conjugation identity', residual, core.tolerance['construction'])


def check_composition_invariant(samples):
    deviation = 0.0
    for xi, eta, theta0 in samples:
        if xi == 0.0 and eta == 0.0:
            continue
        expected = flow_invariant(theta0, eta)
        value = flow_invariant(resultant_theta(xi, eta, theta0), resultant_rapidity(xi, eta, theta0))
        deviation = max(deviation, abs(value - expected) / max(1.0, abs(expected)))
    return Check('composition invariant', deviation, core.tolerance['construction'],
                 'relative')


def check_infinitesimal_limit():
    worst = 0.0
    for eta, theta0 in [(0.5, 0.7), (1.0, math.pi / 3), (2.0, 2.5)]:
        for dxi in (1e-2, 1e-3, 1e-4):
            exact = thomas_angle(dxi, eta, theta0)
            worst = max(worst, abs(exact - infinitesimal_thomas(eta, theta0, dxi)) / dxi**2)
    return Check('infinitesimal Thomas angle', worst, 1.0, 'error / dxi**2')


def check_invariant_conservation():
    trajectory = integrate(FlowState(math.pi / 2, 0.6), xi_end=10.0, step=1e-3)
    invariant = trajectory.invariant()
    return Check('invariant conservation', numpy.max(numpy.abs(invariant - invariant[0])), 1e-8)


def check_fixed_points():
    deviation = 0.0
    expected = {(0.0, 1.0): 'attractive', (math.pi, -1.0): 'attractive',
                (math.pi, 1.0): 'repulsive', (0.0, -1.0): 'repulsive'}
    for point in fixed_points():
        if expected[(point.theta, point.beta)] != point.stability:
            deviation = math.inf
        deviation = max(deviation, float(numpy.max(numpy.abs(point.eigenvalues - point.numerical_eigenvalues))))
    return Check('fixed points', deviation, 1e-5, 'analytic vs finite difference eigenvalues')


def check_attractors():
    betas = numpy.linspace(0.1, 0.9, 6)
    states = [FlowState(math.pi / 2, float(b)) for b in betas]
    states += [FlowState(math.pi / 2, -float(b)) for b in betas]
    distance = 0.0
    for state, trajectory in zip(states, integrate_many(states, xi_end=12.0, step=1e-3)):
        if isinstance(trajectory, Exception):
            return Check('attractor convergence', math.inf, 1e-3)
        final = trajectory.final
        target = (0.0, 1.0) if state.beta > 0 else (math.pi, -1.0)
        distance = max(distance, abs(final.theta - target[0]), abs(final.beta - target[1]))
    return Check('attractor convergence', distance, 1e-3)


def check_ultra_relativistic():
    deviation = max(abs(thomas_angle(20.0, 20.0, theta0) - theta0) for theta0 in (0.5, 1.0, 2.0))
    return Check('ultra-relativistic limit', deviation, 1e-3, 'tau - theta0')


def check_aberration():
    trajectory = integrate(FlowState(1.0, 1.0), xi_end=5.0, step=1e-3)
    deviation = 0.0
    for xi, theta in zip(trajectory.xi, trajectory.theta):
        deviation = max(deviation, abs(math.tan(theta / 2) - math.exp(-xi) * math.tan(0.5)))
    collimation = collimate(DecaySpec(5.0, n_samples=10000))
    # Exact fraction of daughters below 0.1 rad, with its sampling error
    theta0 = 2 * math.atan(math.exp(5.0) * math.tan(0.05))
    exact = (1 - math.cos(theta0)) / 2
    sigma = math.sqrt(exact * (1 - exact) / 10000)
    sampling = abs(collimation.analysis['fraction_below_0.1'] - exact) / (5 * sigma)
    return Check('photon aberration', max(deviation / 1e-8, sampling), 1.0,
                 'manifold flow vs closed form and collimated fraction')


def check_rk4_order():
    _, _, ratio = convergence_order(FlowState(math.pi / 2, 0.6), 2.0, 0.05)
    return Check('RK4 order', abs(ratio - 16) / 4, 1.0, 'error ratio 16 +- 4')


def run_checks(n=1000, seed=None):
    """Run all checks on `n` random compositions and return the list of `Check`."""
    if seed is None:
        seed = core.seed
    samples = _samples(n, seed)
    checks = []
    for func, args in [(check_closed_form_vs_matrix, (samples, )),
                       (check_oracle, (samples, )),
                       (check_reverse_order, (samples, )),
                       (check_conjugation, (samples, )),
                       (check_composition_invariant, (samples, )),
                       (check_infinitesimal_limit, ()),
                       (check_invariant_conservation, ()),
                       (check_fixed_points, ()),
                       (check_attractors, ()),
                       (check_ultra_relativistic, ()),
                       (check_aberration, ()),
                       (check_rk4_order, ())]:
        check = func(*args)
        _log.info('%s: %.3g (threshold %.3g)', check.name, check.value, check.threshold)
        checks.append(check)
    return checks


def _use_color(fh):
    return 'NO_COLOR' not in os.environ and hasattr(fh, 'isatty') and fh.isatty()


def format_table(checks, fh=None):
    """Return the checks formatted as a table"""
    fh = fh if fh is not None else sys.stdout
    color = _use_color(fh)
    width = max(len(check.name) for check in checks)
    lines = ['{:<{}}  {:>10}  {:>10}  {}'.format('check', width, 'value', 'threshold', 'status')]
    for check in checks:
        status = 'PASS' if check.passed else 'FAIL'
        if color:
            status = '\033[{}m{}\033[0m'.format('32' if check.passed else '31', status)
        lines.append('{:<{}}  {:>10.3g}  {:>10.3g}  {}'.format(check.name, width, check.value,
                                                               check.threshold, status))
    return '\n'.join(lines) + '\n'


def verify(n=1000, seed=None, fh=None):
    """
    Run the checks, write the table to `fh` and raise
    `InconsistencyError` if any check fails.
    """
    fh = fh if fh is not None else sys.stdout
    checks = run_checks(n, seed)
    fh.write(format_table(checks, fh))
    failed = [check.name for check in checks if not check.passed]
    if failed:
        raise InconsistencyError('failed checks: {}'.format(', '.join(failed)))
    return checks
