# -*- coding: utf-8 -*-
#
# fschar documentation build configuration file.
#
# Only the values that differ from the sphinx-quickstart defaults are set.

import os
import sys

sys.path.insert(0, os.path.abspath('../..'))

from fschar import __version__  # pylint: disable=wrong-import-position

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.napoleon',
]

# numpy style docstrings throughout
napoleon_google_docstring = False
napoleon_numpy_docstring = True
napoleon_include_private_with_doc = False
napoleon_include_special_with_doc = True
napoleon_use_param = True
napoleon_use_rtype = True

templates_path = ['_templates']

source_suffix = '.rst'

master_doc = 'index'

project = 'fschar'
copyright = '2016, fschar developers'  # pylint: disable=redefined-builtin
author = 'fschar developers'

version = __version__
release = __version__

language = None

exclude_patterns = ['_build']

pygments_style = 'sphinx'

todo_include_todos = False

# -- Options for HTML output ----------------------------------------------

html_theme = 'alabaster'

htmlhelp_basename = 'fschardoc'

# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'fschar', 'fschar Documentation',
     [author], 1)
]
