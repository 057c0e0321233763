#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# nnreachlib documentation build configuration file.
#
# Only the settings that differ from the sphinx defaults are kept here.

import os
import sys

import sphinx.ext.apidoc
import sphinx_rtd_theme

# Get the project root dir, which is the parent dir of this
cwd = os.getcwd()
project_root = os.path.dirname(cwd)

# Run apidoc to traverse the project directory and add all modules to the docs
sphinx.ext.apidoc.main(argv=['-f', '-o', os.path.join(project_root, 'docs'),
                             os.path.join(project_root, '''nnreachlib''')])

# Insert the project root dir as the first element in the PYTHONPATH so the
# project itself is documented instead of any installed copy.
sys.path.insert(0, project_root)

import nnreachlib  # noqa pylint: disable=wrong-import-position

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.viewcode',
    'sphinx.ext.napoleon',
]

napoleon_google_docstring = True

source_suffix = '.rst'
master_doc = 'index'

project = u'''nnreachlib'''
copyright = u'''2026, nnreachlib contributors'''  # pylint: disable=redefined-builtin

version = nnreachlib.__version__
release = nnreachlib.__version__

exclude_patterns = ['_build']
pygments_style = 'sphinx'

html_theme = 'sphinx_rtd_theme'
html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]
htmlhelp_basename = '''nnreachlibdoc'''

man_pages = [
    ('index', '''nnreachlib''',
     u'''nnreachlib Documentation''',
     [u'''nnreachlib contributors'''], 1)
]
