"""
Flow generated by a steady boost along z.

A frame moving with speed `beta` along the direction at angle
`theta` from the z axis, and rotated by the accumulated Thomas angle
`tau`, evolves under infinitesimal boosts d(xi) along z as

    d(theta)/d(xi) = -sin(theta) / beta
    d(beta)/d(xi)  = cos(theta) (1 - beta**2)
    d(tau)/d(xi)   = sin(theta) / beta (1 - sqrt(1 - beta**2))

States with negative `beta` move along the direction theta + pi. The
flow has four fixed points at theta in {0, pi}, beta in {-1, 1} and
conserves sin(theta) sinh(lambda), where beta = tanh(lambda).

Integration is carried out in the variables (theta, lambda, tau),
where the equations read

    d(theta)/d(xi)  = -sin(theta) / tanh(lambda)
    d(lambda)/d(xi) = cos(theta)
    d(tau)/d(xi)    = sin(theta) tanh(lambda/2)

so that speeds arbitrarily close to 1 keep full precision. States with
|beta| = 1 stay on the photon manifold, where only theta and tau
evolve.
"""

import math
import logging

import numpy

from . import core
from .core import DomainError, NearSingularBeta, StepTooLarge, BoostflowError
from .progress import progress
from .spin_algebra import boost_matrix, compose, decompose

__all__ = ['FlowState', 'Trajectory', 'FixedPoint', 'DirectionField',
           'flow_rhs', 'rk4_step', 'integrate', 'integrate_many',
           'fixed_points', 'jacobian', 'numerical_jacobian',
           'classify_fixed_point', 'direction_field', 'closed_form_state',
           'convergence_order']

_log = logging.getLogger(__name__)


def _singular(beta, beta_min, theta):
    return ('|beta| = {} below {} at theta = {}: the direction theta is undefined '
            'at beta = 0'.format(abs(beta), beta_min, theta))


def _polar_sine(theta):
    # Exactly zero on the z axis, where the flow leaves theta unchanged
    if theta == 0.0 or theta == math.pi:
        return 0.0
    return math.sin(theta)


class FlowState(object):

    """
    State (theta, beta, tau) of the flow.

    `theta` lies in [0, pi], `beta` in [-1, 1]. The signed rapidity
    artanh(beta) is stored along with the speed and is infinite on the
    photon manifold |beta| = 1.
    """

    def __init__(self, theta, beta, tau=0.0, rapidity=None):
        if not 0.0 <= theta <= math.pi:
            raise DomainError('theta must be in [0, pi], got {}'.format(theta))
        if rapidity is None:
            if not -1.0 <= beta <= 1.0:
                raise DomainError('beta must be in [-1, 1], got {}'.format(beta))
            if abs(beta) >= 1 - core.tolerance['clamp']:
                beta = math.copysign(1.0, beta)
                rapidity = math.copysign(math.inf, beta)
            else:
                rapidity = math.atanh(beta)
        else:
            beta = math.tanh(rapidity)
        if not math.isfinite(tau):
            raise DomainError('tau must be finite, got {}'.format(tau))
        self.theta = float(theta)
        self.beta = float(beta)
        self.tau = float(tau)
        self.rapidity = float(rapidity)

    @classmethod
    def from_rapidity(cls, theta, rapidity, tau=0.0):
        return cls(theta, None, tau, rapidity=rapidity)

    @property
    def on_manifold(self):
        """True on the photon manifold |beta| = 1"""
        return math.isinf(self.rapidity)

    @property
    def on_axis(self):
        return self.theta == 0.0 or self.theta == math.pi

    @property
    def invariant(self):
        """sin(theta) sinh(lambda), infinite on the photon manifold off axis"""
        sin_theta = _polar_sine(self.theta)
        if sin_theta == 0.0:
            return 0.0
        return sin_theta * math.sinh(self.rapidity)

    def __iter__(self):
        for value in (self.theta, self.beta, self.tau):
            yield value

    def __repr__(self):
        return 'FlowState(theta={!r}, beta={!r}, tau={!r})'.format(*self)


def flow_rhs(state, beta_min=None):
    """
    Return the derivatives (d(theta), d(beta), d(tau)) per unit boost
    rapidity at `state`.

    Raises `NearSingularBeta` when |beta| < `beta_min` off the z axis.
    """
    if beta_min is None:
        beta_min = core.beta_min
    theta, beta = state.theta, state.beta
    sin_theta = _polar_sine(theta)
    dbeta = math.cos(theta) * (1 - beta**2)
    if sin_theta == 0.0:
        return 0.0, dbeta, 0.0
    if abs(beta) < beta_min:
        raise NearSingularBeta(_singular(beta, beta_min, theta))
    dtheta = -sin_theta / beta
    # 1 - sqrt(1 - beta**2) = tanh(lambda) tanh(lambda/2)
    if state.on_manifold:
        dtau = sin_theta / beta
    else:
        dtau = sin_theta * math.tanh(state.rapidity / 2)
    return dtheta, dbeta, dtau


def _rapidity_rhs(y, beta_min):
    theta, rapidity, _ = y
    sin_theta = _polar_sine(theta)
    if sin_theta == 0.0:
        return [0.0, math.cos(theta), 0.0]
    beta = math.tanh(rapidity)
    if abs(beta) < beta_min:
        raise NearSingularBeta(_singular(beta, beta_min, theta))
    return [-sin_theta / beta, math.cos(theta), sin_theta * math.tanh(rapidity / 2)]


def _manifold_rhs(y, beta):
    theta, _ = y
    sin_theta = _polar_sine(theta)
    return [-sin_theta / beta, sin_theta / beta]


def rk4_step(rhs, y, h):
    """
    Classical fourth order Runge-Kutta step of size `h` for the
    autonomous system dy/dx = rhs(y), with `y` a list of floats.
    """
    k1 = rhs(y)
    k2 = rhs([yi + 0.5 * h * ki for yi, ki in zip(y, k1)])
    k3 = rhs([yi + 0.5 * h * ki for yi, ki in zip(y, k2)])
    k4 = rhs([yi + h * ki for yi, ki in zip(y, k3)])
    return [yi + h / 6 * (a + 2*b + 2*c + d) for yi, a, b, c, d in zip(y, k1, k2, k3, k4)]


def _clamp_theta(theta):
    if 0.0 <= theta <= math.pi:
        return theta
    overshoot = -theta if theta < 0 else theta - math.pi
    if overshoot > core.tolerance['clamp']:
        raise StepTooLarge('theta left [0, pi] by {}'.format(overshoot))
    return 0.0 if theta < 0 else math.pi


class Trajectory(object):

    """
    Samples of the flow at xi = 0, step, ..., xi_end.

    The numpy arrays `xi`, `theta`, `beta`, `tau` and `rapidity` hold
    the samples. Iterating over a trajectory yields (xi, FlowState)
    pairs.
    """

    def __init__(self, xi, theta, rapidity, tau):
        self.xi = numpy.asarray(xi, dtype=float)
        self.theta = numpy.asarray(theta, dtype=float)
        self.rapidity = numpy.asarray(rapidity, dtype=float)
        self.tau = numpy.asarray(tau, dtype=float)
        self.beta = numpy.tanh(self.rapidity)

    def __len__(self):
        return len(self.xi)

    def state(self, i):
        return FlowState.from_rapidity(float(self.theta[i]), float(self.rapidity[i]),
                                       float(self.tau[i]))

    @property
    def initial(self):
        return self.state(0)

    @property
    def final(self):
        return self.state(-1)

    @property
    def samples(self):
        return list(self)

    @property
    def on_manifold(self):
        return bool(numpy.isinf(self.rapidity[0]))

    def invariant(self):
        """sin(theta) sinh(lambda) along the trajectory"""
        sin_theta = numpy.sin(self.theta)
        sin_theta[(self.theta == 0.0) | (self.theta == math.pi)] = 0.0
        with numpy.errstate(invalid='ignore'):
            values = sin_theta * numpy.sinh(self.rapidity)
        values[sin_theta == 0.0] = 0.0
        return values

    def __iter__(self):
        for i in range(len(self)):
            yield float(self.xi[i]), self.state(i)


def integrate(initial, xi_end=None, step=None, beta_min=None, tolerance='default'):
    """
    Integrate the flow from the `initial` state up to `xi_end` with
    classical Runge-Kutta steps of size `step` and return a
    `Trajectory`.

    Each step is compared with two half steps. If their difference
    exceeds `tolerance` (by default `core.tolerance['monitor']`)
    `StepTooLarge` is raised; pass `tolerance=None` to switch the
    check off.
    """
    if xi_end is None:
        xi_end = core.xi_end
    if step is None:
        step = core.step
    if beta_min is None:
        beta_min = core.beta_min
    if tolerance == 'default':
        tolerance = core.tolerance['monitor']
    if not 0 < step <= 0.1:
        raise DomainError('step must be in (0, 0.1], got {}'.format(step))
    if not xi_end > 0:
        raise DomainError('xi_end must be positive, got {}'.format(xi_end))
    if not initial.on_axis and abs(initial.beta) < beta_min:
        raise NearSingularBeta(_singular(initial.beta, beta_min, initial.theta))

    n_steps = int(math.ceil(xi_end / step - 1e-9))
    _log.debug('integrating %s up to xi=%g in %d steps', initial, xi_end, n_steps)

    if initial.on_manifold:
        sign = math.copysign(1.0, initial.beta)

        def rhs(y):
            return _manifold_rhs(y, sign)
        y = [initial.theta, initial.tau]
    else:
        def rhs(y):
            return _rapidity_rhs(y, beta_min)
        y = [initial.theta, initial.rapidity, initial.tau]

    xi = [0.0]
    samples = [list(y)]
    for i in progress(range(n_steps)):
        h = min(step, xi_end - i * step)
        new = rk4_step(rhs, y, h)
        if tolerance is not None:
            half = rk4_step(rhs, rk4_step(rhs, y, h / 2), h / 2)
            error = max(abs(a - b) for a, b in zip(new, half))
            if error > tolerance:
                raise StepTooLarge('local error {:.3g} above {:.3g} at xi={:g}'.format(
                    error, tolerance, i * step))
        new[0] = _clamp_theta(new[0])
        y = new
        xi.append(min((i + 1) * step, xi_end))
        samples.append(list(y))

    samples = numpy.array(samples)
    if initial.on_manifold:
        rapidity = numpy.full(len(xi), initial.rapidity)
        return Trajectory(xi, samples[:, 0], rapidity, samples[:, 1])
    return Trajectory(xi, samples[:, 0], samples[:, 1], samples[:, 2])


def integrate_many(states, xi_end=None, step=None, beta_min=None, tolerance='default'):
    """
    Integrate the flow from each of the `states`.

    Return a list with a `Trajectory` per state, or the
    `BoostflowError` that stopped its integration.
    """
    results = []
    for state in progress(states):
        try:
            results.append(integrate(state, xi_end, step, beta_min, tolerance))
        except BoostflowError as error:
            _log.warning('trajectory from %s failed: %s', state, error)
            results.append(error)
    return results


def closed_form_state(initial, xi):
    """
    Return the `FlowState` reached from `initial` after a total boost
    `xi` along z, obtained by composing boost matrices.
    """
    if initial.on_manifold:
        # tan(theta/2) scales as exp(-xi/beta) and theta + tau is conserved
        half = math.atan(math.exp(-xi / initial.beta) * math.tan(initial.theta / 2))
        theta = 2 * half if not initial.on_axis else initial.theta
        return FlowState(theta, initial.beta, initial.tau + initial.theta - theta)
    if initial.on_axis:
        rapidity = initial.rapidity + xi * math.cos(initial.theta)
        return FlowState.from_rapidity(initial.theta, rapidity, initial.tau)
    matrix = compose(boost_matrix(xi, 0.0), boost_matrix(initial.rapidity, initial.theta))
    decomposition = decompose(matrix)
    theta, rapidity = decomposition.signed()
    return FlowState.from_rapidity(theta, rapidity, initial.tau + decomposition.tau)


def convergence_order(initial, xi_end, step):
    """
    Return the errors of the flow integrated with `step` and `step/2`
    against `closed_form_state()`, and their ratio, which is close to
    16 for a fourth order scheme.
    """
    exact = closed_form_state(initial, xi_end)
    errors = []
    for h in (step, step / 2):
        final = integrate(initial, xi_end, h, tolerance=None).final
        errors.append(max(abs(final.theta - exact.theta),
                          abs(final.beta - exact.beta),
                          abs(final.tau - exact.tau)))
    return errors[0], errors[1], errors[0] / errors[1]


# Fixed points

def _planar_rhs(theta, beta):
    return -math.sin(theta) / beta, math.cos(theta) * (1 - beta**2)


def jacobian(theta, beta):
    """Jacobian of (d(theta), d(beta)) with respect to (theta, beta)."""
    return numpy.array([[-math.cos(theta) / beta, math.sin(theta) / beta**2],
                        [-math.sin(theta) * (1 - beta**2), -2 * beta * math.cos(theta)]])


def numerical_jacobian(theta, beta, delta=1e-6):
    """Jacobian of (d(theta), d(beta)) by central differences."""
    jac = numpy.empty((2, 2))
    for j, (dt, db) in enumerate([(delta, 0.0), (0.0, delta)]):
        plus = _planar_rhs(theta + dt, beta + db)
        minus = _planar_rhs(theta - dt, beta - db)
        for i in range(2):
            jac[i, j] = (plus[i] - minus[i]) / (2 * delta)
    return jac


def classify_fixed_point(jac, tolerance=1e-8):
    """
    Classify a fixed point of a planar flow from the trace and the
    determinant of its Jacobian `jac`.
    """
    p = jac[0, 0] + jac[1, 1]
    q = jac[0, 0] * jac[1, 1] - jac[0, 1] * jac[1, 0]
    e = p * p - 4 * q
    if abs(q) < tolerance:
        return 'degenerate'
    if q < 0:
        return 'saddle node'
    if abs(p) < tolerance:
        return 'center'
    if e > tolerance:
        return 'stable node' if p < 0 else 'unstable node'
    if e < -tolerance:
        return 'stable focus' if p < 0 else 'unstable focus'
    return 'stable star' if p < 0 else 'unstable star'


class FixedPoint(object):

    """Fixed point of the (theta, beta) flow with its linear stability."""

    def __init__(self, theta, beta):
        self.theta = theta
        self.beta = beta
        jac = jacobian(theta, beta)
        self.jacobian = jac
        self.eigenvalues = numpy.sort(numpy.linalg.eigvals(jac).real)
        self.numerical_eigenvalues = numpy.sort(numpy.linalg.eigvals(numerical_jacobian(theta, beta)).real)
        self.kind = classify_fixed_point(jac)
        self.stability = 'attractive' if self.kind.startswith('stable') else 'repulsive'

    @property
    def attractive(self):
        return self.stability == 'attractive'

    def distance(self, theta, beta):
        return math.hypot(theta - self.theta, beta - self.beta)

    def __repr__(self):
        return 'FixedPoint(theta={!r}, beta={!r}, stability={!r})'.format(
            self.theta, self.beta, self.stability)


def fixed_points():
    """Return the four fixed points of the flow."""
    return [FixedPoint(0.0, 1.0), FixedPoint(math.pi, -1.0),
            FixedPoint(math.pi, 1.0), FixedPoint(0.0, -1.0)]


# Direction field

class DirectionField(object):

    """
    Normalized flow directions on a grid of (theta, beta) nodes.

    Arrays `theta`, `beta`, `dtheta`, `dbeta`, `magnitude` and
    `singular` have one entry per node, theta varying slowest. The
    direction at singular nodes, where |beta| < beta_min off the z
    axis, is the limit of the theta component, and their magnitude is
    infinite. Nodes where the flow vanishes have direction (0, 0).
    """

    def __init__(self, theta, beta, dtheta, dbeta, magnitude, singular):
        self.theta = numpy.asarray(theta)
        self.beta = numpy.asarray(beta)
        self.dtheta = numpy.asarray(dtheta)
        self.dbeta = numpy.asarray(dbeta)
        self.magnitude = numpy.asarray(magnitude)
        self.singular = numpy.asarray(singular, dtype=bool)

    def __len__(self):
        return len(self.theta)

    def __iter__(self):
        for i in range(len(self)):
            yield (float(self.theta[i]), float(self.beta[i]), float(self.dtheta[i]),
                   float(self.dbeta[i]), float(self.magnitude[i]), bool(self.singular[i]))


def direction_field(theta_range=(0.0, math.pi), beta_range=(-1.0, 1.0),
                    n_theta=20, n_beta=20, beta_min=None):
    """Return the `DirectionField` of the (theta, beta) flow."""
    if beta_min is None:
        beta_min = core.beta_min
    if n_theta < 2 or n_beta < 2:
        raise DomainError('direction field needs at least 2x2 nodes')
    rows = []
    for theta in numpy.linspace(theta_range[0], theta_range[1], n_theta):
        for beta in numpy.linspace(beta_range[0], beta_range[1], n_beta):
            theta, beta = float(theta), float(beta)
            if _polar_sine(theta) != 0.0 and abs(beta) < beta_min:
                rows.append((theta, beta, -math.copysign(1.0, beta), 0.0, math.inf, True))
                continue
            dtheta, dbeta, _ = flow_rhs(FlowState(theta, beta), beta_min=beta_min)
            magnitude = math.hypot(dtheta, dbeta)
            if magnitude == 0.0:
                rows.append((theta, beta, 0.0, 0.0, 0.0, False))
            else:
                rows.append((theta, beta, dtheta / magnitude, dbeta / magnitude, magnitude, False))
    return DirectionField(*zip(*rows))
