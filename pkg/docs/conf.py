# Configuration file for the Sphinx documentation builder.
#
# For the full list of options see the documentation:
# https://www.sphinx-doc.org/en/master/usage/configuration.html

# -- Path setup --------------------------------------------------------------

import os
import sys
sys.path.insert(0, os.path.abspath('..'))


# -- Project information -----------------------------------------------------

project = 'boostflow'

with open(os.path.join(os.path.dirname(__file__), '..', 'boostflow', '_version.py')) as fh:
    exec(fh.read())
release = __version__


# -- General configuration ---------------------------------------------------

extensions = ['sphinx.ext.autodoc']
autodoc_member_order = 'bysource'

# Add any paths that contain templates here, relative to this directory.
templates_path = ['_templates']

# The root document.
root_doc = 'index'

# List of patterns, relative to source directory, that match files and
# directories to ignore when looking for source files.
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']


# -- Options for HTML output -------------------------------------------------

# https://pygments.org/styles/
pygments_style = 'friendly'
html_theme = 'alabaster'
html_theme_options = {
    'description': 'Finite Lorentz boosts, Thomas rotations and the flow of boost parameters',
    'fixed_sidebar': True,
    'sidebar_collapse': True,
    'gray_2': '#F4F4F4ED',
    'sidebar_width': '270px',
    'body_max_width': 'auto',
    'page_width': '1100px',
}

html_sidebars = {
    '**': [
        'about.html',
        'navigation.html',
        'searchbox.html',
        'relations.html',
    ]
}

highlight_language = 'none'
