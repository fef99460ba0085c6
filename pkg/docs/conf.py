# -*- coding: utf-8 -*-
from __future__ import unicode_literals

import os

from unirational import __version__

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.autosummary',
    'sphinx.ext.doctest',
    'sphinx.ext.napoleon',
    'sphinx.ext.viewcode',
]
if os.getenv('SPELLCHECK'):
    extensions += 'sphinxcontrib.spelling',
    spelling_show_suggestions = True
    spelling_lang = 'en_US'

source_suffix = '.rst'
master_doc = 'index'
project = 'unirational'
year = '2020'
author = 'The Unirational developers'
copyright = '{0}, {1}'.format(year, author)
version = release = __version__

pygments_style = 'trac'
templates_path = ['.']

if os.environ.get('READTHEDOCS') != 'True':
    html_theme = 'sphinx_rtd_theme'

html_last_updated_fmt = '%b %d, %Y'
html_sidebars = {
    '**': ['searchbox.html', 'globaltoc.html', 'sourcelink.html'],
}
html_short_title = '{0}-{1}'.format(project, version)

napoleon_use_ivar = True
napoleon_use_rtype = False
napoleon_use_param = False
