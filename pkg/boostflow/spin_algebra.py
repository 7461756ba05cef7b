"""
Lorentz transformations in the x-z plane as real unimodular 2x2
matrices.

A boost of rapidity `kappa` along the direction that makes an angle
`theta` with the z axis, in the x-z plane, is

    B(kappa, theta) = cosh(kappa/2) I - sinh(kappa/2) (s3 cos(theta) + s1 sin(theta))

where s1 and s3 are the real Pauli matrices, and a rotation by `tau`
about the y axis is

    R(tau) = cos(tau/2) I + sin(tau/2) [[0, 1], [-1, 0]]

Boosts are symmetric, rotations are orthogonal, and both have unit
determinant. A boost of rapidity `kappa` moves frames with speed
tanh(kappa). Matrices act on four-velocities through the symmetric
matrix P(u) = t I - x s1 - z s3, see `SpinMatrix.transform()`.
"""

import math
import logging

import numpy

from . import core
from .core import DetViolation, NotUnimodular, DomainError
from .helpers import wrap_angle

__all__ = ['SpinMatrix', 'BoostSpec', 'Decomposition', 'boost_matrix',
           'rotation_matrix', 'compose', 'decompose',
           'reverse_order_identity_residual', 'conjugation_residual',
           'four_velocity_matrix']

_log = logging.getLogger(__name__)


class SpinMatrix(object):

    """
    Real 2x2 matrix [[a, b], [c, d]].

    Instances are immutable. Products are formed with the `@`
    operator or with `compose()`, which also checks the determinant.
    """

    def __init__(self, a, b, c, d):
        self._array = numpy.array([[a, b], [c, d]], dtype=float)
        self._array.flags.writeable = False

    @classmethod
    def from_array(cls, array):
        array = numpy.asarray(array, dtype=float)
        if array.shape != (2, 2):
            raise DomainError('expected a 2x2 array, got shape {}'.format(array.shape))
        return cls(array[0, 0], array[0, 1], array[1, 0], array[1, 1])

    @property
    def a(self):
        return float(self._array[0, 0])

    @property
    def b(self):
        return float(self._array[0, 1])

    @property
    def c(self):
        return float(self._array[1, 0])

    @property
    def d(self):
        return float(self._array[1, 1])

    @property
    def array(self):
        """Writable copy of the matrix as a numpy array"""
        return self._array.copy()

    @property
    def det(self):
        return self.a * self.d - self.b * self.c

    @property
    def trace(self):
        return self.a + self.d

    def transpose(self):
        return SpinMatrix(self.a, self.c, self.b, self.d)

    def inverse(self):
        """Inverse of a unimodular matrix (the adjugate)"""
        return SpinMatrix(self.d, -self.b, -self.c, self.a)

    def unimodular_error(self):
        """
        Deviation of the determinant from one, relative to the size of
        the products that cancel in it.
        """
        scale = max(1.0, abs(self.a * self.d) + abs(self.b * self.c))
        return abs(self.det - 1.0) / scale

    def is_unimodular(self, tolerance=None):
        if tolerance is None:
            tolerance = core.tolerance['construction']
        return self.unimodular_error() <= tolerance

    def is_symmetric(self, tolerance=1e-12):
        return abs(self.b - self.c) <= tolerance * max(1.0, abs(self.b))

    def allclose(self, other, atol=1e-10):
        return numpy.allclose(self._array, other._array, rtol=0.0, atol=atol)

    def max_deviation(self, other):
        return float(numpy.max(numpy.abs(self._array - other._array)))

    def transform(self, t, x, z):
        """
        Transform the four-vector (t, x, z) with the matrix M, as
        P(u') = M P(u) M^T.

        The arguments may be numpy arrays of equal shape.
        """
        a, b, c, d = self.a, self.b, self.c, self.d
        p, q, r = t - z, -x, t + z
        # Entries of M P(u)
        m00, m01 = a*p + b*q, a*q + b*r
        m10, m11 = c*p + d*q, c*q + d*r
        # Entries of M P(u) M^T
        n00 = m00*a + m01*b
        n01 = m00*c + m01*d
        n11 = m10*c + m11*d
        return (n00 + n11) / 2, -n01, (n11 - n00) / 2

    def __matmul__(self, other):
        return SpinMatrix.from_array(self._array @ other._array)

    def __neg__(self):
        return SpinMatrix(-self.a, -self.b, -self.c, -self.d)

    def __iter__(self):
        for value in (self.a, self.b, self.c, self.d):
            yield value

    def __repr__(self):
        return 'SpinMatrix({!r}, {!r}, {!r}, {!r})'.format(*self)


class BoostSpec(object):

    """
    Boost of rapidity `kappa` >= 0 along the direction at angle
    `theta` in [0, pi] from the z axis.
    """

    def __init__(self, kappa, theta=0.0):
        if not 0 <= kappa <= core.rapidity_max:
            raise DomainError('rapidity must be in [0, {}], got {}'.format(core.rapidity_max, kappa))
        if not 0.0 <= theta <= math.pi:
            raise DomainError('boost angle must be in [0, pi], got {}'.format(theta))
        self.kappa = float(kappa)
        self.theta = float(theta)

    @classmethod
    def from_speed(cls, beta, theta=0.0):
        if not 0.0 <= beta < 1.0:
            raise core.SpeedOutOfRange('speed must be in [0, 1), got {}'.format(beta))
        return cls(math.atanh(beta), theta)

    @property
    def speed(self):
        return math.tanh(self.kappa)

    @property
    def gamma(self):
        return math.cosh(self.kappa)

    def __repr__(self):
        return 'BoostSpec(kappa={!r}, theta={!r})'.format(self.kappa, self.theta)


def boost_matrix(kappa, theta=None):
    """
    Return the boost matrix B(kappa, theta).

    `kappa` is either a `BoostSpec` or a rapidity. Bare rapidities
    may be negative and angles arbitrary: B(-kappa, theta) equals
    B(kappa, theta + pi).
    """
    if isinstance(kappa, BoostSpec):
        kappa, theta = kappa.kappa, kappa.theta
    if theta is None:
        theta = 0.0
    if not abs(kappa) <= core.rapidity_max:
        raise DomainError('rapidity must be finite and at most {} in absolute value, got {}'.format(
            core.rapidity_max, kappa))
    if kappa < 0:
        kappa, theta = -kappa, theta + math.pi
    # cosh(k/2) -+ sinh(k/2) cos(theta) written as sums of positive terms
    small = math.exp(-kappa / 2)
    s = math.sinh(kappa / 2)
    off = -s * math.sin(theta)
    return SpinMatrix(small + 2 * s * math.sin(theta / 2)**2, off,
                      off, small + 2 * s * math.cos(theta / 2)**2)


def rotation_matrix(tau):
    """Return the rotation matrix R(tau)."""
    c = math.cos(tau / 2)
    s = math.sin(tau / 2)
    return SpinMatrix(c, s, -s, c)


def four_velocity_matrix(t, x, z):
    """Return the symmetric matrix P(u) = t I - x s1 - z s3 as a numpy array."""
    return numpy.array([[t - z, -x], [-x, t + z]], dtype=float)


def compose(second, first, *others):
    """
    Return the product `second @ first`, i.e. the transformation
    `first` followed by `second`.

    Further matrices are multiplied on the right, so that
    `compose(A, B, C)` is A B C. Each factor must be unimodular.
    """
    factors = (second, first) + others
    for i, matrix in enumerate(factors):
        if not matrix.is_unimodular():
            raise DetViolation('factor {} has determinant {!r}'.format(i, matrix.det))
    result = factors[0]
    for matrix in factors[1:]:
        result = result @ matrix
    return result


class Decomposition(object):

    """
    Polar decomposition L = sign * B(rapidity, theta) R(tau).

    The rapidity is non negative, `theta` lies in (-pi, pi] and `tau`
    in (-pi, pi]. The `sign` is -1 for the matrices that differ from
    the product of a boost and a rotation by an overall minus sign,
    which represents the same Lorentz transformation.

    Iterating over an instance yields (rapidity, theta, tau).
    """

    def __init__(self, rapidity, theta, tau, sign=1):
        self.rapidity = rapidity
        self.theta = theta
        self.tau = tau
        self.sign = sign

    @property
    def speed(self):
        return math.tanh(self.rapidity)

    def boost(self):
        return boost_matrix(self.rapidity, self.theta)

    def rotation(self):
        return rotation_matrix(self.tau)

    def reconstruct(self):
        """Return the matrix sign * B R"""
        matrix = self.boost() @ self.rotation()
        return matrix if self.sign > 0 else -matrix

    def signed(self):
        """
        Return (theta, rapidity) with theta folded into [0, pi] and a
        rapidity that is negative for directions with negative x.
        """
        if self.theta < 0:
            return self.theta + math.pi, -self.rapidity
        return self.theta, self.rapidity

    def __iter__(self):
        for value in (self.rapidity, self.theta, self.tau):
            yield value

    def __repr__(self):
        return 'Decomposition(rapidity={!r}, theta={!r}, tau={!r}, sign={})'.format(
            self.rapidity, self.theta, self.tau, self.sign)


def decompose(matrix):
    """
    Return the `Decomposition` of the unimodular `matrix` into a
    boost followed by a rotation.

    The boost is the positive definite square root of S = L L^T,
    which has the closed form B = (S + I) / sqrt(tr S + 2) when S is
    symmetric with unit determinant. The rotation is B^-1 L. Since
    B + B^-1 = tr(B) I, it equals (L + L^-T) / tr(B), which is
    evaluated directly: it has no cancellations at large rapidities.
    """
    if matrix.unimodular_error() > core.tolerance['unimodular']:
        raise NotUnimodular('matrix has determinant {!r}'.format(matrix.det))

    m = matrix.array
    square = m @ m.T
    # sinh(lambda) (cos(theta), sin(theta)), from the off-diagonal and
    # the diagonal difference of L L^T
    z_part = (square[1, 1] - square[0, 0]) / 2
    x_part = -(square[0, 1] + square[1, 0]) / 2
    sinh_rapidity = math.hypot(z_part, x_part)
    rapidity = math.asinh(sinh_rapidity)
    if sinh_rapidity < core.tolerance['construction']:
        theta = 0.0
    else:
        theta = math.atan2(x_part, z_part) + 0.0

    # L + L^-T = tr(B) R(tau), with tr(B) > 0
    half_tau = math.atan2(matrix.b - matrix.c, matrix.a + matrix.d)
    tau = wrap_angle(2 * half_tau)
    # R(tau + 2 pi) = -R(tau)
    sign = 1 if abs(tau - 2 * half_tau) < math.pi else -1
    return Decomposition(rapidity, theta, tau + 0.0, sign)


def reverse_order_identity_residual(xi, eta, theta0):
    """
    Return the largest entry of R(tau) (B_eta B_xi) R(tau) - B_xi B_eta,
    where B_xi is a boost of rapidity `xi` along z, B_eta a boost of
    rapidity `eta` at angle `theta0` and `tau` the rotation angle of
    the product B_xi B_eta.
    """
    first = boost_matrix(eta, theta0)
    second = boost_matrix(xi, 0.0)
    forward = compose(second, first)
    rotation = rotation_matrix(decompose(forward).tau)
    reverse = compose(first, second)
    return (rotation @ reverse @ rotation).max_deviation(forward)


def conjugation_residual(eta, theta0):
    """
    Return the largest entry of R(theta0)^T B(eta, 0) R(theta0) - B(eta, theta0).
    """
    rotation = rotation_matrix(theta0)
    conjugated = rotation.transpose() @ boost_matrix(eta, 0.0) @ rotation
    return conjugated.max_deviation(boost_matrix(eta, theta0))
