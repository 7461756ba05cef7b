#!/usr/bin/env python

import math
import unittest

import numpy

from boostflow import core
from boostflow.oracle import (oracle_boost, oracle_boost_from_rapidity, oracle_rotation,
                              oracle_compose, oracle_decompose, minkowski_residual)
from boostflow.kinematics import resultant_rapidity, resultant_theta, thomas_angle
from boostflow.spin_algebra import boost_matrix, compose, decompose


class Test(unittest.TestCase):

    def setUp(self):
        rng = numpy.random.default_rng(3)
        self.samples = [(float(a), float(b), float(c)) for a, b, c in
                        zip(rng.uniform(0.0, 5.0, 1000), rng.uniform(0.0, 5.0, 1000),
                            rng.uniform(0.0, math.pi, 1000))]

    def test_boost(self):
        matrix = oracle_boost(0.6, 0.0)
        self.assertAlmostEqual(matrix[0, 0], 1.25)
        self.assertAlmostEqual(matrix[0, 2], -0.75)
        self.assertAlmostEqual(matrix[2, 2], 1.25)
        self.assertAlmostEqual(matrix[1, 1], 1.0)
        self.assertLess(numpy.max(numpy.abs(matrix - oracle_boost_from_rapidity(math.atanh(0.6), 0.0))), 1e-14)
        with self.assertRaises(core.SpeedOutOfRange):
            oracle_boost(1.0, 0.0)

    def test_minkowski(self):
        for xi, eta, theta0 in self.samples:
            matrix = oracle_boost_from_rapidity(xi, 0.0) @ oracle_boost_from_rapidity(eta, theta0)
            self.assertLess(minkowski_residual(matrix) / matrix[0, 0]**2, 1e-12)
            self.assertLess(minkowski_residual(oracle_rotation(theta0)), 1e-15)

    def test_colinear(self):
        d = oracle_compose(2.0, 1.0, 0.0)
        self.assertAlmostEqual(d.rapidity, 3.0, places=12)
        self.assertEqual(d.theta, 0.0)
        self.assertAlmostEqual(d.tau, 0.0, places=12)

    def test_boost_then_rotation(self):
        matrix = oracle_boost(0.5, 1.2) @ oracle_rotation(0.4)
        d = oracle_decompose(matrix)
        self.assertAlmostEqual(d.rapidity, math.atanh(0.5), places=12)
        self.assertAlmostEqual(d.theta, 1.2, places=12)
        self.assertAlmostEqual(d.tau, 0.4, places=12)

    def test_agreement(self):
        for xi, eta, theta0 in self.samples:
            oracle = oracle_compose(xi, eta, theta0)
            spinor = decompose(compose(boost_matrix(xi, 0.0), boost_matrix(eta, theta0)))
            self.assertLess(abs(oracle.rapidity - spinor.rapidity), 1e-9)
            self.assertLess(abs(oracle.theta - spinor.theta), 1e-9)
            self.assertLess(abs(oracle.tau - spinor.tau), 1e-8)

    def test_large_rapidity(self):
        """Rotation angle keeps its precision for large rapidities"""
        for kappa in (5.0, 8.0, 10.0, 15.0, 20.0):
            for theta0 in (0.5, 1.0, 2.0, 2.5):
                oracle = oracle_compose(kappa, kappa, theta0)
                self.assertLess(abs(oracle.rapidity - resultant_rapidity(kappa, kappa, theta0)), 1e-9)
                self.assertLess(abs(oracle.theta - resultant_theta(kappa, kappa, theta0)), 1e-9)
                self.assertLess(abs(oracle.tau - thomas_angle(kappa, kappa, theta0)), 1e-8)
        for theta0 in (0.5, 1.0, 2.0):
            self.assertLess(abs(oracle_compose(20.0, 20.0, theta0).tau - theta0), 1e-3)
        with self.assertRaises(core.DomainError):
            oracle_boost_from_rapidity(800.0, 0.0)

    def test_not_orthochronous(self):
        matrix = -numpy.eye(3)
        matrix[1, 1] = matrix[2, 2] = 1.0
        with self.assertRaises(core.NotOrthochronous):
            oracle_decompose(matrix)


if __name__ == '__main__':
    unittest.main()
