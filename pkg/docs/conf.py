# -*- coding: utf-8 -*-
# Configuration file for the Sphinx documentation builder.


# -- Path setup --------------------------------------------------------------
# Set up import path to allow the autodoc extension to find the local module code.
import os
import sys
sys.path.insert(0, os.path.abspath('..'))


# -- Project information -----------------------------------------------------

project = u'ctxdegree'
copyright = u'2026, ctxdegree contributors'
author = u'ctxdegree contributors'

# The short X.Y version
version = '0.1.0'
# The full version, including alpha/beta/rc tags
release = '0.1.0'


# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.coverage',
    'sphinx.ext.viewcode',
    'm2r2',
    'autodocsumm',
]

templates_path = ['_templates']

source_suffix = ['.rst', '.md']

# The master toctree document.
master_doc = 'index'

language = 'en'
exclude_patterns = [u'_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'


# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_theme_options = {
    # Toc options
    'collapse_navigation': False,
}

htmlhelp_basename = 'ctxdegreedoc'

# -- doctest configuration -------------------------------------------------

doctest_global_setup = '''
from fractions import Fraction

import ctxdegree
from ctxdegree import io
from ctxdegree.core import BellObservables, LGObservables
'''

# -- Autodoc configuration -------------------------------------------------

autodoc_default_options = {
    'autosummary': True,
}


def skip(app, what, name, obj, skip, options):
    """Method to override default autodoc skip call. Ensures class constructor (e.g., __init__()) methods are included
    regardless of if private methods are included in the documentation generally.
    """
    if name == "__init__":
        return False
    return skip


def setup(app):
    app.connect("autodoc-skip-member", skip)
