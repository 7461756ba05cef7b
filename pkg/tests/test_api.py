#!/usr/bin/env python

import os
import json
import math
import shutil
import tempfile
import unittest

from boostflow import api, core
from boostflow.kinematics import thomas_angle, resultant_theta


def _read(path):
    with open(path) as fh:
        return fh.read()


def _keys(text):
    return dict((key, float(value)) for key, value in
                (line.split(': ') for line in text.splitlines()))


class TestApi(unittest.TestCase):

    def setUp(self):
        self.tmpdir = tempfile.mkdtemp()
        self.output = os.path.join(self.tmpdir, 'out')

    def tearDown(self):
        shutil.rmtree(self.tmpdir)

    def test_compose(self):
        api.compose(1.0, 1.0, math.pi / 2, output=self.output)
        data = _keys(_read(self.output))
        self.assertAlmostEqual(data['tau'], thomas_angle(1.0, 1.0, math.pi / 2), places=10)
        self.assertAlmostEqual(data['theta'], resultant_theta(1.0, 1.0, math.pi / 2), places=10)
        self.assertAlmostEqual(data['invariant'], math.sinh(1.0), places=10)
        self.assertLess(data['oracle_residual'], 1e-8)

    def test_compose_degrees(self):
        api.compose(1.0, 1.0, 90.0, degrees=True, format='json', output=self.output)
        data = json.loads(_read(self.output))
        self.assertAlmostEqual(data['tau'], thomas_angle(1.0, 1.0, math.pi / 2), places=10)

    def test_compose_speed(self):
        api.compose(0.6, 0.6, 1.0, speed=True, format='json', output=self.output)
        data = json.loads(_read(self.output))
        self.assertAlmostEqual(data['tau'], thomas_angle(math.atanh(0.6), math.atanh(0.6), 1.0), places=10)
        with self.assertRaises(core.SpeedOutOfRange):
            api.compose(1.5, 0.6, 1.0, speed=True, output=self.output)

    def test_flow(self):
        api.flow(math.pi / 2, 0.6, 0.0, xi_end=1.0, step=0.01, output=self.output)
        lines = _read(self.output).splitlines()
        self.assertEqual(lines[0], 'xi,theta,beta,tau,invariant')
        self.assertEqual(len(lines), 102)
        self.assertAlmostEqual(float(lines[-1].split(',')[-1]), 0.75, places=9)
        with self.assertRaises(core.DomainError):
            api.flow(math.pi / 2, 0.6, 0.0, format='svg', output=self.output)

    def test_thomas(self):
        api.thomas(30.0, 2.0, 2.0, format='json', output=self.output)
        data = json.loads(_read(self.output))
        self.assertLess(abs(data['tau'] - data['asymptotic_tau']), 1e-9)
        self.assertAlmostEqual(data['coefficient'], math.sin(2.0) * math.tanh(1.0))

    def test_portrait(self):
        spec = os.path.join(self.tmpdir, 'spec.json')
        with open(spec, 'w') as fh:
            json.dump({'n_theta': 4, 'n_beta': 4, 'initial_states': [[1.0, 0.5]],
                       'xi_end': 0.5, 'step': 0.01}, fh)
        api.portrait(spec_file=spec, tau0=0.3, output=self.output)
        lines = _read(self.output).splitlines()
        self.assertTrue(lines[0].startswith('kind,index,xi,theta'))
        self.assertEqual(len(lines), 1 + 16 + 51 + 4)
        trajectory = [line.split(',') for line in lines if line.startswith('trajectory')]
        self.assertAlmostEqual(float(trajectory[0][5]), 0.3)

    def test_collimate(self):
        api.collimate(5.0, samples=1000, format='json', output=self.output)
        data = json.loads(_read(self.output))
        self.assertEqual(data['seed'], core.seed)
        self.assertGreater(data['fraction_below_0.1'], 0.9)


if __name__ == '__main__':
    unittest.main()
