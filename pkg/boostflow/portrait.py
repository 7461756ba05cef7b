"""
Phase portraits of the boost flow.

The portrait of the (theta, beta) plane is made of the normalized
direction field on a grid, trajectories integrated from a set of
initial states and the four fixed points. Trajectories also carry
`tau`, so that the same document describes the (theta, beta, tau)
portrait: the (theta, beta) projection does not depend on the initial
tau, and changing it only shifts the tau column.
"""

import io
import csv
import json
import math
import logging
from xml.sax.saxutils import escape

import numpy

from .core import DomainError
from .analysis import Analysis
from .flow import (FlowState, integrate_many, fixed_points, direction_field,
                   flow_rhs)

__all__ = ['PortraitSpec', 'PhasePortrait', 'render_phase_portrait']

_log = logging.getLogger(__name__)

columns = ['kind', 'index', 'xi', 'theta', 'beta', 'tau', 'dtheta', 'dbeta',
           'magnitude', 'invariant', 'singular', 'note']

# SVG canvas and plot box, in pixels
_width, _height = 800, 600
_left, _right, _top, _bottom = 70, 780, 20, 540
_arrow_cap = 24.0
_max_polyline_points = 400


def _as_state(state):
    if isinstance(state, FlowState):
        return state
    return FlowState(*state)


class PortraitSpec(object):

    """
    What to draw in a phase portrait.

    `initial_states` is a list of `FlowState` instances or of
    (theta, beta[, tau]) tuples. Only every `stride`-th sample of each
    trajectory is emitted.
    """

    def __init__(self, n_theta=20, n_beta=20, theta_range=(0.0, math.pi),
                 beta_range=(-1.0, 1.0), initial_states=None, xi_end=12.0,
                 step=1e-3, output_format='csv', stride=1):
        if n_theta < 2 or n_beta < 2:
            raise DomainError('grid needs at least 2 nodes per axis, got {}x{}'.format(n_theta, n_beta))
        theta_range = tuple(float(x) for x in theta_range)
        beta_range = tuple(float(x) for x in beta_range)
        if not 0.0 <= theta_range[0] < theta_range[1] <= math.pi:
            raise DomainError('theta range must lie in [0, pi], got {}'.format(theta_range))
        if not -1.0 <= beta_range[0] < beta_range[1] <= 1.0:
            raise DomainError('beta range must lie in [-1, 1], got {}'.format(beta_range))
        if output_format not in PhasePortrait.formats:
            raise DomainError('unsupported portrait format {}'.format(output_format))
        if stride < 1:
            raise DomainError('stride must be a positive integer, got {}'.format(stride))
        self.n_theta = int(n_theta)
        self.n_beta = int(n_beta)
        self.theta_range = theta_range
        self.beta_range = beta_range
        self.initial_states = [_as_state(s) for s in (initial_states or [])]
        self.xi_end = float(xi_end)
        self.step = float(step)
        self.output_format = output_format
        self.stride = int(stride)

    @classmethod
    def default(cls, **kwargs):
        """
        20x20 grid and 12 trajectories starting at theta = pi/2 with
        beta in +-(0.1, ..., 0.9), integrated up to xi = 12.
        """
        betas = numpy.linspace(0.1, 0.9, 6)
        states = [(math.pi / 2, float(b)) for b in betas]
        states += [(math.pi / 2, -float(b)) for b in betas]
        kwargs.setdefault('initial_states', states)
        return cls(**kwargs)

    @classmethod
    def from_dict(cls, data):
        data = dict(data)
        if 'format' in data:
            data['output_format'] = data.pop('format')
        try:
            return cls(**data)
        except TypeError as error:
            raise DomainError('invalid portrait specification: {}'.format(error))

    @classmethod
    def from_file(cls, path):
        with open(path) as fh:
            return cls.from_dict(json.load(fh))

    def lifted(self, tau0):
        """
        Return a copy whose initial states start at `tau0`, i.e. the
        slice tau = tau0 of the (theta, beta, tau) portrait.
        """
        states = [(s.theta, s.beta, tau0) for s in self.initial_states]
        return PortraitSpec(self.n_theta, self.n_beta, self.theta_range,
                            self.beta_range, states, self.xi_end, self.step,
                            self.output_format, self.stride)


def _fmt(value):
    if value is None:
        return ''
    if isinstance(value, bool):
        return '1' if value else '0'
    if isinstance(value, int):
        return str(value)
    return '%.12g' % value


class PhasePortrait(Analysis):

    """
    Phase portrait of the boost flow described by a `PortraitSpec`.

    After `compute()`, `field` holds the `DirectionField`,
    `trajectories` the trajectories (or the errors that stopped them)
    and `fixed_points` the fixed points.
    """

    symbol = 'portrait'
    long_name = 'phase portrait'
    formats = ('csv', 'svg')

    def __init__(self, spec=None, output_path=None):
        if spec is None:
            spec = PortraitSpec.default()
        self.spec = spec
        Analysis.__init__(self, output_path, spec.output_format)
        self.field = None
        self.trajectories = []
        self.fixed_points = []
        self.tag_description = 'of the boost flow'

    def _compute(self):
        spec = self.spec
        self.field = direction_field(spec.theta_range, spec.beta_range,
                                     spec.n_theta, spec.n_beta)
        _log.info('integrating %d trajectories up to xi=%g', len(spec.initial_states), spec.xi_end)
        self.trajectories = integrate_many(spec.initial_states, spec.xi_end, spec.step)
        self.fixed_points = fixed_points()

        self.rows = []
        for node in self.field:
            theta, beta, dtheta, dbeta, magnitude, singular = node
            self.rows.append(('arrow', None, None, theta, beta, None, dtheta, dbeta,
                              magnitude, None, singular, None))
        for i, trajectory in enumerate(self.trajectories):
            if isinstance(trajectory, Exception):
                note = '{}: {}'.format(type(trajectory).__name__, trajectory)
                self.rows.append(('error', i) + (None, ) * 9 + (note, ))
                continue
            invariant = trajectory.invariant()
            for j in range(0, len(trajectory), spec.stride):
                state = trajectory.state(j)
                dtheta, dbeta, _ = flow_rhs(state)
                self.rows.append(('trajectory', i, float(trajectory.xi[j]), state.theta,
                                  state.beta, state.tau, dtheta, dbeta,
                                  math.hypot(dtheta, dbeta), float(invariant[j]), False, None))
        for point in self.fixed_points:
            self.rows.append(('fixed_point_' + point.stability, None, None, point.theta,
                              point.beta, None, 0.0, 0.0, 0.0, None, False, point.kind))

    def analyze(self):
        attractors = [p for p in self.fixed_points if p.attractive]
        drift = 0.0
        for i, trajectory in enumerate(self.trajectories):
            key = 'attractor of trajectory {:02d}'.format(i)
            if isinstance(trajectory, Exception):
                self.analysis[key] = None
                continue
            final = trajectory.final
            nearest = min(attractors, key=lambda p: p.distance(final.theta, final.beta))
            self.analysis[key] = '({:g}, {:g}) at distance {:.3g}'.format(
                nearest.theta, nearest.beta, nearest.distance(final.theta, final.beta))
            if not trajectory.on_manifold:
                invariant = trajectory.invariant()
                drift = max(drift, float(numpy.max(numpy.abs(invariant - invariant[0]))))
        self.analysis['max invariant drift'] = '{:.3g}'.format(drift)

    def _write(self, fh):
        if self.output_format == 'csv':
            self._write_csv(fh)
        else:
            self._write_svg(fh)

    def _write_csv(self, fh):
        writer = csv.writer(fh, lineterminator='\n')
        writer.writerow(columns)
        for row in self.rows:
            writer.writerow([_fmt(x) for x in row])

    def _screen(self, theta, beta):
        t0, t1 = self.spec.theta_range
        b0, b1 = self.spec.beta_range
        x = _left + (beta - b0) / (b1 - b0) * (_right - _left)
        y = _bottom - (theta - t0) / (t1 - t0) * (_bottom - _top)
        return x, y

    def _write_svg(self, fh):
        spec = self.spec
        out = ['<?xml version="1.0" encoding="UTF-8"?>',
               '<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" '
               'viewBox="0 0 {} {}">'.format(_width, _height, _width, _height),
               '<desc>{}</desc>'.format(escape(self.metadata(comment=''))),
               '<defs><marker id="head" markerWidth="6" markerHeight="6" refX="5" refY="3" '
               'orient="auto"><path d="M0,0 L6,3 L0,6 z" fill="#555"/></marker></defs>',
               '<rect x="0" y="0" width="{}" height="{}" fill="white"/>'.format(_width, _height),
               '<rect x="{}" y="{}" width="{}" height="{}" fill="none" stroke="black"/>'.format(
                   _left, _top, _right - _left, _bottom - _top)]

        # Axes labels and ticks
        for beta in numpy.linspace(spec.beta_range[0], spec.beta_range[1], 5):
            x, _ = self._screen(spec.theta_range[0], beta)
            out.append('<text x="{:.2f}" y="{}" font-size="12" text-anchor="middle">{:g}</text>'.format(
                x, _bottom + 18, beta))
        for theta in numpy.linspace(spec.theta_range[0], spec.theta_range[1], 5):
            _, y = self._screen(theta, spec.beta_range[0])
            out.append('<text x="{}" y="{:.2f}" font-size="12" text-anchor="end">{:.3g}</text>'.format(
                _left - 6, y + 4, theta))
        out.append('<text x="{}" y="{}" font-size="14" text-anchor="middle">beta</text>'.format(
            (_left + _right) // 2, _height - 20))
        out.append('<text x="20" y="{0}" font-size="14" text-anchor="middle" '
                   'transform="rotate(-90 20 {0})">theta</text>'.format((_top + _bottom) // 2))

        # Direction field, arrow length grows with the log of the magnitude
        sx = (_right - _left) / (spec.beta_range[1] - spec.beta_range[0])
        sy = (_bottom - _top) / (spec.theta_range[1] - spec.theta_range[0])
        for theta, beta, dtheta, dbeta, magnitude, singular in self.field:
            x, y = self._screen(theta, beta)
            if magnitude == 0.0:
                out.append('<circle cx="{:.2f}" cy="{:.2f}" r="1.5" fill="#555"/>'.format(x, y))
                continue
            ux, uy = dbeta * sx, -dtheta * sy
            norm = math.hypot(ux, uy)
            length = _arrow_cap if singular else min(_arrow_cap, 6.0 + 4.0 * math.log1p(magnitude))
            color = '#c00' if singular else '#555'
            out.append('<line x1="{:.2f}" y1="{:.2f}" x2="{:.2f}" y2="{:.2f}" stroke="{}" '
                       'marker-end="url(#head)"/>'.format(x, y, x + length * ux / norm,
                                                          y + length * uy / norm, color))

        # Trajectories
        for trajectory in self.trajectories:
            if isinstance(trajectory, Exception):
                continue
            thin = max(1, len(trajectory) // _max_polyline_points)
            indices = list(range(0, len(trajectory), thin))
            if indices[-1] != len(trajectory) - 1:
                indices.append(len(trajectory) - 1)
            points = ' '.join('{:.2f},{:.2f}'.format(*self._screen(trajectory.theta[i], trajectory.beta[i]))
                              for i in indices)
            out.append('<polyline points="{}" fill="none" stroke="steelblue" stroke-width="1.5"/>'.format(points))

        # Fixed points, filled when attractive
        for point in self.fixed_points:
            x, y = self._screen(point.theta, point.beta)
            fill = 'black' if point.attractive else 'white'
            out.append('<circle cx="{:.2f}" cy="{:.2f}" r="6" fill="{}" stroke="black" '
                       'stroke-width="1.5"/>'.format(x, y, fill))
        out.append('</svg>')
        fh.write('\n'.join(out) + '\n')

    def document(self):
        """Return the document as a string"""
        fh = io.StringIO(newline='\n')
        self._write(fh)
        return fh.getvalue()

    def show(self, now=True):
        try:
            import matplotlib.pyplot as plt
        except ImportError:
            return

        field = self.field
        regular = ~field.singular
        plt.quiver(field.beta[regular], field.theta[regular],
                   field.dbeta[regular], field.dtheta[regular], color='grey')
        for trajectory in self.trajectories:
            if not isinstance(trajectory, Exception):
                plt.plot(trajectory.beta, trajectory.theta)
        for point in self.fixed_points:
            plt.plot(point.beta, point.theta, 'o', color='black',
                     markerfacecolor='black' if point.attractive else 'white')
        plt.xlabel('beta')
        plt.ylabel('theta')
        if now:
            plt.show()


def render_phase_portrait(spec=None):
    """
    Compute the phase portrait described by `spec` and return the
    document (CSV or SVG) as a string.
    """
    portrait = PhasePortrait(spec, output_path=None)
    portrait.compute()
    portrait.analyze()
    return portrait.document()
