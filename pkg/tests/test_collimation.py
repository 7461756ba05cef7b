#!/usr/bin/env python

import io
import json
import math
import unittest

import numpy

from boostflow import core
from boostflow.collimation import DecaySpec, Collimation, collimate, median_angle_curve


class Test(unittest.TestCase):

    def test_spec(self):
        spec = DecaySpec(2.0, n_samples=100, seed=1)
        self.assertTrue(spec.photons)
        self.assertEqual(len(spec.sample()), 100)
        self.assertTrue(numpy.all(spec.sample() == spec.sample()))
        self.assertEqual(DecaySpec(2.0).seed, core.seed)
        for kwargs in [dict(rapidity=-1.0), dict(rapidity=1.0, mode='phi'),
                       dict(rapidity=1.0, beta0=0.0), dict(rapidity=1.0, n_samples=0),
                       dict(rapidity=1.0, bins=0), dict(rapidity=800.0)]:
            with self.assertRaises(core.DomainError):
                DecaySpec(**kwargs)

    def test_rest_frame(self):
        cf = collimate(DecaySpec(0.0, n_samples=2000, seed=1))
        self.assertLess(numpy.max(numpy.abs(cf.lab_theta - cf.rest_theta)), 1e-12)
        self.assertAlmostEqual(cf.analysis['fraction_above_pi/2'], 0.5, delta=0.05)

    def test_photons(self):
        n = 10000
        cf = collimate(DecaySpec(5.0, n_samples=n, seed=3))
        self.assertLess(cf.analysis['max_route_deviation'], 1e-10)
        # tan(theta/2) = exp(-xi) tan(theta0/2) with uniform cos(theta0)
        t = math.exp(5.0) * math.tan(0.05)
        exact = (1 - (1 - t**2) / (1 + t**2)) / 2
        sigma = math.sqrt(exact * (1 - exact) / n)
        self.assertLess(abs(cf.analysis['fraction_below_0.1'] - exact), 5 * sigma)
        self.assertGreater(cf.analysis['fraction_below_0.1'], 0.97)
        self.assertEqual(sum(row[2] for row in cf.rows), n)
        self.assertAlmostEqual(sum(row[3] for row in cf.rows), 1.0)

    def test_massive(self):
        cf = collimate(DecaySpec(1.5, n_samples=500, beta0=0.6, seed=4))
        self.assertLess(cf.analysis['max_route_deviation'], 1e-10)
        self.assertLess(cf.analysis['max_invariant_deviation'], 1e-10)
        # Daughters slower than the parent all move forward
        self.assertLess(numpy.max(cf.lab_theta), math.pi / 2)
        self.assertEqual(cf.analysis['fraction_above_pi/2'], 0.0)

    def test_median(self):
        medians = median_angle_curve([0.0, 1.0, 2.0, 4.0], n_samples=2000, seed=5)
        self.assertTrue(numpy.all(numpy.diff(medians) < 0))
        self.assertAlmostEqual(medians[0], math.pi / 2, delta=0.1)

    def test_theta_mode(self):
        cf = collimate(DecaySpec(1.0, n_samples=1000, mode='theta', seed=6))
        self.assertLess(numpy.max(cf.rest_theta), math.pi)
        self.assertGreater(cf.analysis['median'], 0.0)

    def test_write(self):
        cf = collimate(DecaySpec(2.0, n_samples=1000, bins=10, seed=7))
        fh = io.StringIO()
        cf._write(fh)
        data = json.loads(fh.getvalue())
        for key in ['rapidity', 'n_samples', 'mode', 'seed', 'median', 'mean',
                    'fraction_within_inverse_gamma', 'max_route_deviation']:
            self.assertIn(key, data)
        cf = Collimation(cf.spec, output_path=None, output_format='csv')
        cf.compute()
        fh = io.StringIO()
        cf._write(fh)
        lines = fh.getvalue().splitlines()
        self.assertEqual(lines[0], 'bin_lo,bin_hi,count,fraction')
        self.assertEqual(len(lines), 11)
        self.assertEqual(sum(int(line.split(',')[2]) for line in lines[1:]), 1000)
        with self.assertRaises(core.DomainError):
            Collimation(cf.spec, output_format='svg')


if __name__ == '__main__':
    unittest.main()
