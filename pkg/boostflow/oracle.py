"""
Independent check of the spinor algebra with 3x3 Lorentz matrices.

Matrices act on the coordinates (t, x, z) in the passive convention:
`oracle_boost(beta, theta)` gives the coordinates in a frame moving
with velocity beta (sin(theta), cos(theta)). Passive boosts are
active boosts of opposite velocity, and since inverting all
velocities maps products of boosts to products of boosts, the
decomposition of a product of passive boosts has the same rapidity,
direction and rotation angle as the spinor decomposition of the
corresponding product of active boosts.

No conversion from 2x2 matrices is provided.
"""

import math

import numpy

from . import core
from .core import DomainError, NotOrthochronous, SpeedOutOfRange
from .helpers import wrap_angle
from .spin_algebra import Decomposition

__all__ = ['oracle_boost', 'oracle_boost_from_rapidity', 'oracle_rotation',
           'oracle_compose', 'oracle_decompose', 'minkowski_residual']

_metric = numpy.diag([1.0, -1.0, -1.0])


def _boost(gamma, u_x, u_z):
    # u = gamma beta n is the spatial part of the four-velocity
    u = numpy.array([u_x, u_z])
    matrix = numpy.empty((3, 3))
    matrix[0, 0] = gamma
    matrix[0, 1:] = -u
    matrix[1:, 0] = -u
    matrix[1:, 1:] = numpy.eye(2) + numpy.outer(u, u) / (gamma + 1)
    return matrix


def oracle_boost(beta, theta):
    """
    Passive boost with speed `beta` along the direction at angle
    `theta` from the z axis.

    Negative speeds boost in the opposite direction.
    """
    if not abs(beta) < 1:
        raise SpeedOutOfRange('speed must be below 1 in absolute value, got {}'.format(beta))
    gamma = 1 / math.sqrt(1 - beta**2)
    return _boost(gamma, gamma * beta * math.sin(theta), gamma * beta * math.cos(theta))


def oracle_boost_from_rapidity(kappa, theta):
    """Passive boost with rapidity `kappa`, exact for large rapidities."""
    if not abs(kappa) <= core.rapidity_max:
        raise DomainError('rapidity must be finite and at most {} in absolute value, got {}'.format(
            core.rapidity_max, kappa))
    return _boost(math.cosh(kappa), math.sinh(kappa) * math.sin(theta),
                  math.sinh(kappa) * math.cos(theta))


def oracle_rotation(tau):
    """Rotation of the x-z plane: x' = x cos(tau) - z sin(tau), z' = x sin(tau) + z cos(tau)."""
    c, s = math.cos(tau), math.sin(tau)
    return numpy.array([[1.0, 0.0, 0.0],
                        [0.0, c, -s],
                        [0.0, s, c]])


def minkowski_residual(matrix):
    """Largest entry of M^T g M - g, with g = diag(1, -1, -1)."""
    return float(numpy.max(numpy.abs(matrix.T @ _metric @ matrix - _metric)))


def oracle_decompose(matrix):
    """
    Decompose the 3x3 Lorentz `matrix` into a passive boost followed
    by a rotation, M = boost(beta, theta) rotation(tau), and return a
    `Decomposition`.

    The spatial block of M is A Q, where Q is the rotation and A the
    spatial block of the boost, with eigenvalues 1 and gamma. Since
    A + gamma A^-1 = (1 + gamma) I, the block plus its cofactor matrix
    is (1 + gamma) Q, from which tau is read off without multiplying
    by the inverse boost.
    """
    if matrix[0, 0] < 1 - core.tolerance['oracle']:
        raise NotOrthochronous('time component {} below 1'.format(matrix[0, 0]))
    u_x, u_z = -matrix[1, 0], -matrix[2, 0]
    u = math.hypot(u_x, u_z)
    rapidity = math.asinh(u)
    theta = math.atan2(u_x, u_z) + 0.0 if u > core.tolerance['construction'] else 0.0
    block = matrix[1:, 1:]
    tau = wrap_angle(math.atan2(block[1, 0] - block[0, 1], block[0, 0] + block[1, 1]))
    return Decomposition(rapidity, theta, tau + 0.0)


def oracle_compose(xi, eta, theta0):
    """
    Decompose the product of a boost of rapidity `eta` at angle
    `theta0` followed by a boost of rapidity `xi` along z.
    """
    first = oracle_boost_from_rapidity(eta, theta0)
    second = oracle_boost_from_rapidity(xi, 0.0)
    return oracle_decompose(second @ first)
