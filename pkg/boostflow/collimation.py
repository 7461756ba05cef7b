"""
Collimation of the products of a decay in flight.

Daughters are emitted isotropically in the rest frame of a parent
moving with rapidity `xi` along z. In the lab their directions flow
toward the attractive fixed point theta = 0: photons along the
manifold beta = 1, where tan(theta/2) = exp(-xi) tan(theta0/2), and
massive daughters along curves of constant sin(theta) sinh(lambda).

Lab directions are computed twice, with the closed form and with the
matrix route of `spin_algebra`, and the largest difference between
the two is reported.
"""

import json
import math
import logging

import numpy

from . import core
from .core import DomainError, InconsistencyError
from .analysis import Analysis
from .kinematics import resultant_theta, resultant_rapidity, flow_invariant
from .spin_algebra import boost_matrix, compose, decompose

__all__ = ['DecaySpec', 'Collimation', 'collimate', 'median_angle_curve']

_log = logging.getLogger(__name__)


class DecaySpec(object):

    """
    Parent rapidity `rapidity`, number of daughters `n_samples`,
    sampling `mode` of the rest frame angle ('cos' for uniform
    cos(theta0), 'theta' for uniform theta0), number of histogram
    `bins` and daughter speed `beta0` in the rest frame (1 for
    photons).
    """

    modes = ('cos', 'theta')

    def __init__(self, rapidity, n_samples=10000, mode='cos', bins=36, beta0=1.0, seed=None):
        if not 0 <= rapidity <= core.rapidity_max:
            raise DomainError('parent rapidity must be in [0, {}], got {}'.format(core.rapidity_max, rapidity))
        if n_samples < 1:
            raise DomainError('number of samples must be positive, got {}'.format(n_samples))
        if mode not in self.modes:
            raise DomainError('sampling mode must be one of {}, got {}'.format(', '.join(self.modes), mode))
        if bins < 1:
            raise DomainError('number of bins must be positive, got {}'.format(bins))
        if not 0.0 < beta0 <= 1.0:
            raise DomainError('daughter speed must be in (0, 1], got {}'.format(beta0))
        self.rapidity = float(rapidity)
        self.n_samples = int(n_samples)
        self.mode = mode
        self.bins = int(bins)
        self.beta0 = float(beta0)
        self.seed = seed if seed is not None else core.seed

    @property
    def photons(self):
        return self.beta0 == 1.0

    def sample(self):
        """Return the rest frame angles of the daughters"""
        rng = numpy.random.default_rng(self.seed)
        if self.mode == 'cos':
            return numpy.arccos(rng.uniform(-1.0, 1.0, self.n_samples))
        return rng.uniform(0.0, math.pi, self.n_samples)


class Collimation(Analysis):

    """
    Lab frame angular distribution of the daughters of a `DecaySpec`.

    After `compute()`, `rest_theta` and `lab_theta` hold the angles of
    the daughters in the two frames and `rows` the histogram of the
    lab angles as (bin_lo, bin_hi, count, fraction).
    """

    symbol = 'collimation'
    long_name = 'collimation'
    formats = ('csv', 'json')

    def __init__(self, spec, output_path=None, output_format=None):
        Analysis.__init__(self, output_path, output_format)
        self.spec = spec
        self.rest_theta = None
        self.lab_theta = None
        self.route_deviation = None
        self.invariant_deviation = None
        self.tag = 'xi{:g}'.format(spec.rapidity)
        self.tag_description = 'at parent rapidity {:g}'.format(spec.rapidity)

    def _compute(self):
        spec = self.spec
        xi = spec.rapidity
        theta0 = spec.sample()
        self.rest_theta = theta0
        boost = boost_matrix(xi, 0.0)
        if spec.photons:
            closed = 2 * numpy.arctan(numpy.exp(-xi) * numpy.tan(theta0 / 2))
            _, x, z = boost.transform(numpy.ones_like(theta0), numpy.sin(theta0), numpy.cos(theta0))
            matrix = numpy.arctan2(x, z)
            self.route_deviation = float(numpy.max(numpy.abs(closed - matrix)))
        else:
            eta = math.atanh(spec.beta0)
            closed = numpy.empty_like(theta0)
            matrix = numpy.empty_like(theta0)
            deviation = 0.0
            for i, angle in enumerate(theta0):
                angle = float(angle)
                if xi == 0.0:
                    closed[i] = angle
                    matrix[i] = angle
                    continue
                closed[i] = resultant_theta(xi, eta, angle)
                rapidity = resultant_rapidity(xi, eta, angle)
                matrix[i] = decompose(compose(boost, boost_matrix(eta, angle))).theta
                invariant = flow_invariant(closed[i], rapidity)
                deviation = max(deviation, abs(invariant - flow_invariant(angle, eta)))
            self.route_deviation = float(numpy.max(numpy.abs(closed - matrix)))
            self.invariant_deviation = deviation
        if self.route_deviation > core.tolerance['roundtrip']:
            raise InconsistencyError('lab angles differ by {:.3g} between closed form and matrices'.format(
                self.route_deviation))
        self.lab_theta = closed

        counts, edges = numpy.histogram(closed, bins=spec.bins, range=(0.0, math.pi))
        self.rows = [(edges[i], edges[i + 1], int(counts[i]), counts[i] / spec.n_samples)
                     for i in range(spec.bins)]

    def analyze(self):
        lab = self.lab_theta
        xi = self.spec.rapidity
        self.analysis['median'] = float(numpy.median(lab))
        self.analysis['mean'] = float(numpy.mean(lab))
        self.analysis['fraction_within_inverse_gamma'] = float(numpy.mean(lab < 1 / math.cosh(xi)))
        self.analysis['fraction_below_0.1'] = float(numpy.mean(lab < 0.1))
        self.analysis['fraction_above_pi/2'] = float(numpy.mean(lab > math.pi / 2))
        self.analysis['max_route_deviation'] = self.route_deviation
        if self.invariant_deviation is not None:
            self.analysis['max_invariant_deviation'] = self.invariant_deviation

    def summary(self):
        """Return the summary of the analysis as a dictionary"""
        data = {'rapidity': self.spec.rapidity,
                'n_samples': self.spec.n_samples,
                'mode': self.spec.mode,
                'beta0': self.spec.beta0,
                'seed': self.spec.seed}
        data.update(self.analysis)
        return data

    def _write(self, fh):
        if self.output_format == 'json':
            fh.write(json.dumps(self.summary(), sort_keys=True, indent=2) + '\n')
            return
        fh.write('bin_lo,bin_hi,count,fraction\n')
        numpy.savetxt(fh, numpy.array(self.rows), fmt=['%.12g', '%.12g', '%d', '%.12g'],
                      delimiter=',', newline='\n')

    def show(self, now=True):
        try:
            import matplotlib.pyplot as plt
        except ImportError:
            return

        plt.hist(self.lab_theta, bins=self.spec.bins, range=(0.0, math.pi),
                 histtype='step', label='lab')
        plt.hist(self.rest_theta, bins=self.spec.bins, range=(0.0, math.pi),
                 histtype='step', label='rest')
        plt.xlabel('theta')
        plt.legend()
        if now:
            plt.show()


def collimate(spec):
    """
    Compute the lab distribution of the daughters of the decay `spec`
    and return the `Collimation` with its analysis.
    """
    collimation = Collimation(spec, output_path=None, output_format='json')
    collimation.compute()
    collimation.analyze()
    return collimation


def median_angle_curve(rapidities, n_samples=10000, mode='cos', beta0=1.0, seed=None):
    """Return the median lab angle for each parent rapidity in `rapidities`."""
    medians = []
    for xi in rapidities:
        spec = DecaySpec(xi, n_samples=n_samples, mode=mode, beta0=beta0, seed=seed)
        medians.append(collimate(spec).analysis['median'])
    return numpy.array(medians)
