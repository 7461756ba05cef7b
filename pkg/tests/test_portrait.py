#!/usr/bin/env python

import os
import csv
import json
import math
import shutil
import tempfile
import unittest

from boostflow import core
from boostflow.portrait import PortraitSpec, PhasePortrait, render_phase_portrait, columns


def _small(**kwargs):
    data = dict(n_theta=3, n_beta=4, initial_states=[(math.pi / 2, 0.5), (math.pi / 2, 1e-5)],
                xi_end=1.0, step=0.01, stride=2)
    data.update(kwargs)
    return PortraitSpec(**data)


def _rows(text):
    return list(csv.DictReader(text.splitlines()))


class Test(unittest.TestCase):

    def setUp(self):
        self.tmpdir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmpdir)

    def test_spec(self):
        spec = PortraitSpec.default()
        self.assertEqual((spec.n_theta, spec.n_beta), (20, 20))
        self.assertEqual(len(spec.initial_states), 12)
        self.assertEqual(spec.xi_end, 12.0)
        self.assertAlmostEqual(spec.initial_states[0].beta, 0.1)
        self.assertAlmostEqual(spec.initial_states[-1].beta, -0.9)
        with self.assertRaises(core.DomainError):
            PortraitSpec(n_theta=1)
        with self.assertRaises(core.DomainError):
            PortraitSpec(beta_range=(-2.0, 1.0))
        with self.assertRaises(core.DomainError):
            PortraitSpec(output_format='json')
        with self.assertRaises(core.DomainError):
            PortraitSpec.from_dict({'n_thetas': 3})

    def test_from_file(self):
        path = os.path.join(self.tmpdir, 'spec.json')
        with open(path, 'w') as fh:
            json.dump({'n_theta': 5, 'n_beta': 6, 'initial_states': [[1.0, 0.5, 0.2]],
                       'format': 'svg'}, fh)
        spec = PortraitSpec.from_file(path)
        self.assertEqual(spec.output_format, 'svg')
        self.assertEqual(spec.n_beta, 6)
        self.assertEqual(tuple(spec.initial_states[0]), (1.0, 0.5, 0.2))

    def test_rows(self):
        rows = _rows(render_phase_portrait(_small()))
        kinds = [row['kind'] for row in rows]
        self.assertEqual(kinds.count('arrow'), 12)
        # 101 samples, one every two
        self.assertEqual(kinds.count('trajectory'), 51)
        self.assertEqual(kinds.count('fixed_point_attractive'), 2)
        self.assertEqual(kinds.count('fixed_point_repulsive'), 2)
        errors = [row for row in rows if row['kind'] == 'error']
        self.assertEqual(len(errors), 1)
        self.assertEqual(errors[0]['index'], '1')
        self.assertTrue(errors[0]['note'].startswith(('StepTooLarge', 'NearSingularBeta')))
        self.assertEqual(list(rows[0].keys()), columns)
        for row in rows:
            if row['kind'] == 'trajectory':
                self.assertAlmostEqual(float(row['invariant']), math.sinh(math.atanh(0.5)), places=8)

    def test_lifted(self):
        spec = _small(initial_states=[(math.pi / 2, 0.5)])
        base = [row for row in _rows(render_phase_portrait(spec)) if row['kind'] == 'trajectory']
        lifted = [row for row in _rows(render_phase_portrait(spec.lifted(0.7))) if row['kind'] == 'trajectory']
        self.assertEqual(len(base), len(lifted))
        for a, b in zip(base, lifted):
            self.assertEqual(a['theta'], b['theta'])
            self.assertEqual(a['beta'], b['beta'])
            self.assertAlmostEqual(float(b['tau']) - float(a['tau']), 0.7, places=10)

    def test_deterministic(self):
        spec = _small()
        self.assertEqual(render_phase_portrait(spec), render_phase_portrait(spec))
        spec = _small(output_format='svg')
        svg = render_phase_portrait(spec)
        self.assertEqual(svg, render_phase_portrait(spec))
        self.assertIn('width="800" height="600"', svg)
        self.assertIn('<polyline', svg)
        self.assertTrue(svg.rstrip().endswith('</svg>'))

    def test_write(self):
        path = os.path.join(self.tmpdir, 'out', '{symbol}.{tag}.csv')
        portrait = PhasePortrait(_small(), output_path=path)
        portrait.do()
        self.assertTrue(os.path.exists(os.path.join(self.tmpdir, 'out', 'portrait.csv')))
        self.assertIsNone(portrait.analysis['attractor of trajectory 01'])
        self.assertIn('attractor of trajectory 00', portrait.analysis)


if __name__ == '__main__':
    unittest.main()
