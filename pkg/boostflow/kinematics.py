"""
Closed form kinematics of two composed boosts.

A boost of rapidity `eta` at angle `theta0` from the z axis is
followed by a boost of rapidity `xi` along z. The product is a boost
of rapidity `lambda` at angle `theta`, followed by a Thomas rotation
by the angle `tau`. Composing the same two boosts in reverse order
gives a boost at angle `theta0 + phi`.

The formulas are exact, and they are checked against the matrix
route of `spin_algebra` and the 3x3 route of `oracle`.
"""

import math

from . import core
from .core import DegenerateInput, DomainError, InconsistencyError
from .helpers import wrap_angle, arccosh_clamped, log_cosh

__all__ = ['CompositionInput', 'resultant_theta', 'resultant_rapidity',
           'resultant_speed', 'reverse_order_phi', 'thomas_angle',
           'infinitesimal_thomas', 'infinitesimal_thomas_coefficient',
           'tau_theta_curve', 'tau_lambda_curve', 'flow_invariant',
           'compose_speeds', 'asymptotic_thomas_angle', 'aberration_angle']


class CompositionInput(object):

    """Rapidities `xi`, `eta` >= 0 and the angle `theta0` in [0, pi]."""

    def __init__(self, xi, eta, theta0):
        for name, value in [('xi', xi), ('eta', eta)]:
            if not math.isfinite(value) or value < 0:
                raise DomainError('{} must be finite and non negative, got {}'.format(name, value))
        if xi + eta > core.rapidity_max:
            raise DomainError('xi + eta must be at most {}, got {}'.format(core.rapidity_max, xi + eta))
        if not 0.0 <= theta0 <= math.pi:
            raise DomainError('theta0 must be in [0, pi], got {}'.format(theta0))
        self.xi = float(xi)
        self.eta = float(eta)
        self.theta0 = float(theta0)

    @classmethod
    def from_speeds(cls, beta_xi, beta_eta, theta0):
        for beta in (beta_xi, beta_eta):
            if not 0.0 <= beta < 1.0:
                raise core.SpeedOutOfRange('speed must be in [0, 1), got {}'.format(beta))
        return cls(math.atanh(beta_xi), math.atanh(beta_eta), theta0)

    @property
    def degenerate(self):
        return self.xi == 0.0 and self.eta == 0.0

    def __iter__(self):
        for value in (self.xi, self.eta, self.theta0):
            yield value

    def __repr__(self):
        return 'CompositionInput(xi={!r}, eta={!r}, theta0={!r})'.format(*self)


def _composition(xi, eta=None, theta0=None):
    if isinstance(xi, CompositionInput):
        return xi
    return CompositionInput(xi, eta, theta0)


def _resultant_components(xi, eta, theta0):
    # sinh(lambda) (sin(theta), cos(theta))
    x_part = math.sin(theta0) * math.sinh(eta)
    z_part = math.sinh(xi) * math.cosh(eta) + math.cos(theta0) * math.cosh(xi) * math.sinh(eta)
    return x_part, z_part


def resultant_theta(xi, eta=None, theta0=None):
    """
    Angle in [0, pi] of the resultant boost from the z axis.

    Accepts either a `CompositionInput` or the three values (xi, eta,
    theta0). Raises `DegenerateInput` if both rapidities vanish.
    """
    xi, eta, theta0 = _composition(xi, eta, theta0)
    if xi == 0.0 and eta == 0.0:
        raise DegenerateInput('degenerate: both rapidities zero')
    x_part, z_part = _resultant_components(xi, eta, theta0)
    return math.atan2(x_part, z_part) + 0.0


def resultant_rapidity(xi, eta=None, theta0=None):
    """
    Rapidity of the resultant boost,

        cosh(lambda) = cosh(xi) cosh(eta) + cos(theta0) sinh(xi) sinh(eta)

    It is evaluated as the inverse hyperbolic sine of the length of
    sinh(lambda) (sin(theta), cos(theta)), which keeps full precision
    when the two terms above nearly cancel. The hyperbolic cosine form
    is used as a check.
    """
    xi, eta, theta0 = _composition(xi, eta, theta0)
    rapidity = math.asinh(math.hypot(*_resultant_components(xi, eta, theta0)))
    first = math.cosh(xi) * math.cosh(eta)
    second = math.cos(theta0) * math.sinh(xi) * math.sinh(eta)
    check = arccosh_clamped(first + second, scale=first + abs(second),
                            tolerance=core.tolerance['arccosh'])
    if abs(math.cosh(check) - math.cosh(rapidity)) > 1e-12 * (first + abs(second)):
        raise InconsistencyError('resultant rapidity {} against {}'.format(rapidity, check))
    return rapidity


def resultant_speed(xi, eta=None, theta0=None):
    """Speed tanh(lambda) of the resultant boost."""
    return math.tanh(resultant_rapidity(xi, eta, theta0))


def reverse_order_phi(xi, eta=None, theta0=None):
    """
    Angle `phi` such that the boosts composed in reverse order give a
    resultant boost at angle theta0 + phi.
    """
    xi, eta, theta0 = _composition(xi, eta, theta0)
    if xi == 0.0 and eta == 0.0:
        raise DegenerateInput('degenerate: both rapidities zero')
    x_part = -math.sin(theta0) * math.sinh(xi)
    z_part = math.cosh(xi) * math.sinh(eta) + math.cos(theta0) * math.sinh(xi) * math.cosh(eta)
    return math.atan2(x_part, z_part) + 0.0


def thomas_angle(xi, eta=None, theta0=None):
    """
    Thomas rotation angle tau = phi + theta0 - theta, in (-pi, pi].

    Vanishes when either rapidity is zero or when the boosts are
    collinear.
    """
    composition = _composition(xi, eta, theta0)
    xi, eta, theta0 = composition
    if xi == 0.0 or eta == 0.0 or theta0 == 0.0 or theta0 == math.pi:
        return 0.0
    phi = reverse_order_phi(composition)
    theta = resultant_theta(composition)
    return wrap_angle(phi + theta0 - theta) + 0.0


def infinitesimal_thomas_coefficient(eta, theta0):
    """
    Rate d(tau)/d(xi) at xi = 0,

        sin(theta0) (cosh(eta) - 1) / sinh(eta) = sin(theta0) tanh(eta/2)
    """
    return math.sin(theta0) * math.tanh(eta / 2)


def infinitesimal_thomas(eta, theta0, dxi, strict=False):
    """
    Thomas angle to first order in a small boost `dxi` along z
    applied after a boost of rapidity `eta` at angle `theta0`.

    For `eta` = 0 the limit 0 is returned, unless `strict` is True, in
    which case `DegenerateInput` is raised.
    """
    if eta == 0.0:
        if strict:
            raise DegenerateInput('degenerate: infinitesimal Thomas angle at zero rapidity')
        return 0.0
    return infinitesimal_thomas_coefficient(eta, theta0) * dxi


def tau_theta_curve(theta, theta0, tau0, rapidity):
    """
    Thomas angle along a path at constant rapidity in the (theta, tau)
    plane,

        tau = tau0 + (1 - cosh(lambda)) / cosh(lambda) * (theta - theta0)
    """
    if not rapidity >= 0:
        raise DomainError('rapidity must be non negative, got {}'.format(rapidity))
    cosh_rapidity = math.cosh(rapidity)
    return tau0 + (1 - cosh_rapidity) / cosh_rapidity * (theta - theta0)


def tau_lambda_curve(rapidity, rapidity0, tau0, theta):
    """
    Thomas angle along a path at constant angle `theta` in the
    (lambda, tau) plane,

        tau = tau0 + tan(theta) [ln(cosh(lambda) + 1) - ln(cosh(lambda0) + 1)]

    which integrates d(tau)/d(lambda) = tan(theta) tanh(lambda/2).
    Raises `DomainError` at theta = pi/2, where tan(theta) diverges.
    """
    if not rapidity >= 0 or not rapidity0 >= 0:
        raise DomainError('rapidities must be non negative, got {} and {}'.format(rapidity, rapidity0))
    if abs(math.cos(theta)) < 1e-15:
        raise DomainError('tau(lambda) curve undefined at theta = pi/2')
    # ln((cosh(x) + 1) / 2) = 2 ln(cosh(x/2))
    return tau0 + math.tan(theta) * 2 * (log_cosh(rapidity / 2) - log_cosh(rapidity0 / 2))


def flow_invariant(theta, rapidity):
    """Conserved quantity sin(theta) sinh(lambda) of the boost flow."""
    return math.sin(theta) * math.sinh(rapidity)


def compose_speeds(beta_xi, beta_eta, theta0):
    """
    Compose two boosts given by their speeds and return the tuple
    (speed, theta, tau) of the resultant.
    """
    composition = CompositionInput.from_speeds(beta_xi, beta_eta, theta0)
    return (resultant_speed(composition), resultant_theta(composition),
            thomas_angle(composition))


def asymptotic_thomas_angle(eta, theta0):
    """
    Limit of the Thomas angle when the rapidity `xi` of the boost
    along z grows without bound.

    It tends to theta0 as `eta` grows as well.
    """
    if eta == 0.0 or theta0 == 0.0 or theta0 == math.pi:
        return 0.0
    # theta tends to 0, phi to the angle below
    phi = math.atan2(-math.sin(theta0), math.sinh(eta) + math.cos(theta0) * math.cosh(eta))
    return wrap_angle(theta0 + phi) + 0.0


def aberration_angle(xi, theta0):
    """
    Lab angle of a photon emitted at angle `theta0` in a frame moving
    with rapidity `xi` along z,

        tan(theta/2) = exp(-xi) tan(theta0/2)
    """
    return math.atan2(math.sin(theta0), math.sinh(xi) + math.cosh(xi) * math.cos(theta0))
