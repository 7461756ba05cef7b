#!/usr/bin/env python

import math
import unittest

import numpy

from boostflow import core
from boostflow import helpers


class Test(unittest.TestCase):

    def test_wrap_angle(self):
        self.assertEqual(helpers.wrap_angle(math.pi), math.pi)
        self.assertAlmostEqual(helpers.wrap_angle(-math.pi), math.pi)
        self.assertAlmostEqual(helpers.wrap_angle(3 * math.pi / 2), -math.pi / 2)
        self.assertAlmostEqual(helpers.wrap_angle(-3 * math.pi / 2), math.pi / 2)
        self.assertAlmostEqual(helpers.wrap_angle(0.3), 0.3, places=14)
        for x in numpy.linspace(-20, 20, 101):
            y = helpers.wrap_angle(float(x))
            self.assertGreater(y, -math.pi)
            self.assertLessEqual(y, math.pi)
            self.assertAlmostEqual(math.sin(y), math.sin(x))
            self.assertAlmostEqual(math.cos(y), math.cos(x))

    def test_arccosh_clamped(self):
        self.assertEqual(helpers.arccosh_clamped(1.0), 0.0)
        self.assertEqual(helpers.arccosh_clamped(1.0 - 1e-15), 0.0)
        # The admissible undershoot grows with the scale of the terms
        self.assertEqual(helpers.arccosh_clamped(1.0 - 1e-12, scale=1e4), 0.0)
        self.assertAlmostEqual(helpers.arccosh_clamped(math.cosh(2.0)), 2.0)
        with self.assertRaises(core.InconsistencyError):
            helpers.arccosh_clamped(1.0 - 1e-12)

    def test_log_cosh(self):
        for x in (0.0, 0.5, -3.0, 10.0):
            self.assertAlmostEqual(helpers.log_cosh(x), math.log(math.cosh(x)), places=12)
        self.assertAlmostEqual(helpers.log_cosh(1000.0), 1000.0 - math.log(2.0))

    def test_dump(self):
        txt = helpers._dump('phase portrait', columns=['theta', 'beta'], command='boostflow',
                            version='1.0.0', extra_fields=[('seed', 42)])
        self.assertEqual(txt, '# title: phase portrait\n# columns: theta, beta\n'
                         '# command: boostflow\n# version: 1.0.0\n# seed: 42\n')
        txt = helpers._dump('collimation', inline=True, comment='')
        self.assertEqual(txt, 'title: collimation;')


if __name__ == '__main__':
    unittest.main()
