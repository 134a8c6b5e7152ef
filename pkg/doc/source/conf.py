# -*- coding: utf-8 -*-
#
# specocc documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.
import sys
import os

# If extensions (or modules to document with autodoc) are in another directory,
# add these directories to sys.path here.
sys.path.insert(0, os.path.abspath('../..'))

from specocc import __version__

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.intersphinx',
    'sphinx.ext.todo',
    'sphinx.ext.coverage',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'specocc'
copyright = u'2026, the specocc developers'

version = __version__
release = __version__

exclude_patterns = []
pygments_style = 'default'

# -- Options for HTML output ----------------------------------------------

html_theme = 'pyramid'
html_static_path = []
htmlhelp_basename = 'specocc_doc'

# -- Options for LaTeX output ---------------------------------------------

latex_elements = {
}
latex_documents = [
    ('index', 'specocc.tex', u'specocc Documentation',
     u'the specocc developers', 'manual'),
]

# -- Options for manual page output ---------------------------------------

man_pages = [
    ('index', 'specocc', u'specocc Documentation',
     [u'the specocc developers'], 1)
]

intersphinx_mapping = {'python': ('https://docs.python.org/3', None),
                       'numpy': ('https://numpy.org/doc/stable', None),
                       'pandas': ('https://pandas.pydata.org/docs', None)}

autodoc_member_order = 'groupwise'
