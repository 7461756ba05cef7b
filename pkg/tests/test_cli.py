#!/usr/bin/env python

import io
import os
import json
import math
import shutil
import tempfile
import unittest
from contextlib import redirect_stdout, redirect_stderr

from boostflow import core
from boostflow.cli import main
from boostflow.kinematics import thomas_angle


def run(*argv):
    """Run the script and return exit code, standard output and error"""
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


class Test(unittest.TestCase):

    def setUp(self):
        self.tmpdir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmpdir)

    def test_compose(self):
        code, out, _ = run('compose', '1', '1', repr(math.pi / 2))
        self.assertEqual(code, core.EXIT_SUCCESS)
        self.assertIn('tau: ', out)
        code, out, _ = run('--format', 'json', '--degrees', 'compose', '1', '1', '90')
        self.assertEqual(code, 0)
        data = json.loads(out)
        self.assertAlmostEqual(data['tau'], thomas_angle(1.0, 1.0, math.pi / 2), places=10)
        # Global flags do not outlive the call
        self.assertEqual(core.output_format, 'csv')
        self.assertFalse(core.degrees)

    def test_compose_ultrarelativistic(self):
        code, out, _ = run('--format', 'json', 'compose', '20', '20', '1')
        self.assertEqual(code, core.EXIT_SUCCESS)
        data = json.loads(out)
        self.assertLess(abs(data['tau'] - 1.0), 1e-3)
        self.assertLess(data['oracle_residual'], 1e-8)

    def test_exit_codes(self):
        code, _, err = run('compose', '0', '0', '1')
        self.assertEqual(code, core.EXIT_USAGE)
        self.assertIn('boostflow: error: degenerate', err)
        code, _, _ = run('flow', '1.0', '1e-9', '0')
        self.assertEqual(code, core.EXIT_SINGULAR)
        code, _, _ = run('--speed', 'compose', '1.5', '0.5', '1')
        self.assertEqual(code, core.EXIT_USAGE)
        code, _, _ = run('--tolerance', 'oracle', 'compose', '1', '1', '1')
        self.assertEqual(code, core.EXIT_USAGE)
        code, _, _ = run('--tolerance', 'nope=1e-3', 'compose', '1', '1', '1')
        self.assertEqual(code, core.EXIT_USAGE)
        code, _, _ = run('compose', '1')
        self.assertEqual(code, core.EXIT_USAGE)
        # Rapidities whose cosh overflows
        code, _, err = run('compose', '800', '1', '1')
        self.assertEqual(code, core.EXIT_USAGE)
        self.assertIn('boostflow: error: xi', err)
        code, _, _ = run('thomas', '400', '400', '1')
        self.assertEqual(code, core.EXIT_USAGE)
        code, _, _ = run('collimate', '800', '--samples', '10')
        self.assertEqual(code, core.EXIT_USAGE)

    def test_flow(self):
        code, out, _ = run('flow', repr(math.pi / 2), '0.5', '0', '--xi-end', '12',
                           '--step', '0.01', '--format', 'json')
        self.assertEqual(code, 0)
        data = json.loads(out)
        self.assertLess(abs(data['theta']), 1e-3)
        self.assertLess(abs(data['beta'] - 1), 1e-3)
        self.assertEqual(data['xi'], 12.0)
        code, out, _ = run('--xi-end', '0.1', '--step', '0.01', 'flow', '1', '-0.3', '0')
        self.assertEqual(code, 0)
        self.assertEqual(len(out.splitlines()), 12)

    def test_verbose(self):
        from boostflow import progress
        args = ['--xi-end', '0.1', '--step', '0.01', 'flow', '1', '0.5', '0']
        _, quiet, _ = run(*args)
        code, out, _ = run('--verbose', *args)
        self.assertEqual(code, 0)
        # Progress bars never reach the data on stdout
        self.assertEqual(out, quiet)
        self.assertFalse(progress.active)
        bar = progress.progress(range(3), active=False)
        self.assertEqual(list(bar), [0, 1, 2])

    def test_portrait(self):
        spec = os.path.join(self.tmpdir, 'spec.json')
        with open(spec, 'w') as fh:
            json.dump({'n_theta': 5, 'n_beta': 5, 'initial_states': [[1.0, 0.5], [2.0, -0.5]],
                       'xi_end': 1.0, 'step': 0.01, 'format': 'svg'}, fh)
        outputs = []
        for name in ['a.svg', 'b.svg']:
            path = os.path.join(self.tmpdir, name)
            code, _, _ = run('portrait', '--spec-file', spec, '--output', path)
            self.assertEqual(code, 0)
            with open(path, 'rb') as fh:
                outputs.append(fh.read())
        self.assertEqual(outputs[0], outputs[1])
        self.assertIn(b'<svg', outputs[0])
        code, _, err = run('portrait', '--defaults', '--tau0', '0.3')
        self.assertEqual(code, core.EXIT_USAGE)
        self.assertIn('--tau0', err)
        code, _, _ = run('portrait', '--defaults', '--spec-file', spec)
        self.assertEqual(code, core.EXIT_USAGE)

    def test_thomas(self):
        code, out, _ = run('thomas', '1', '1', '1')
        self.assertEqual(code, 0)
        self.assertIn('asymptotic_tau: ', out)

    def test_collimate(self):
        code, out, _ = run('--seed', '7', 'collimate', '2', '--samples', '500', '--format', 'json')
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)['seed'], 7)

    def test_verify(self):
        code, out, _ = run('verify', '-n', '1000', '--seed', '42')
        self.assertEqual(code, 0)
        self.assertIn('PASS', out)
        self.assertNotIn('FAIL', out)


if __name__ == '__main__':
    unittest.main()
