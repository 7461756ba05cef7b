#!/usr/bin/env python

import os
import glob

import setuptools

with open('README.md', 'r') as fh:
    readme = fh.read()

with open('boostflow/_version.py') as f:
    exec(f.read())

setuptools.setup(name='boostflow',
                 version=__version__,
                 description='Finite Lorentz boosts, Thomas rotations and the flow of boost parameters',
                 long_description=readme,
                 long_description_content_type="text/markdown",
                 packages=['boostflow'],
                 scripts=glob.glob(os.path.join('bin', '*.py')),
                 install_requires=['atooms>=2', 'numpy', 'argh>=0.26', 'tqdm'],
                 license='GPLv3',
                 classifiers=[
                     'License :: OSI Approved :: GNU General Public License v3 (GPLv3)',
                     'Development Status :: 4 - Beta',
                     'Intended Audience :: Science/Research',
                     'Programming Language :: Python :: 3',
                     'Topic :: Scientific/Engineering :: Physics',
                 ])
