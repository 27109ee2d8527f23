# -*- coding: utf-8 -*-
# Sphinx configuration for adder2d.

import os
import sys

from pkg_resources import get_distribution
import sphinx_py3doc_enhanced_theme as sphinx_theme

sys.path.insert(0, os.path.abspath('../../src'))

needs_sphinx = '4.0'
extensions = [
    'sphinx.ext.napoleon',
    'sphinx.ext.autodoc',
    ]
source_suffix = '.rst'
master_doc = 'index'

project = 'adder2d'
copyright = '2024 ff., Michael Amrhein'
author = 'Michael Amrhein'
full_version = get_distribution(project).version
release = '.'.join(full_version.split('.')[:3])
version = '.'.join(release.split('.')[:2])

exclude_patterns = ['_build']
add_module_names = False
pygments_style = 'sphinx'
python_use_unqualified_type_names = True

html_theme = sphinx_theme.__name__
html_theme_path = [sphinx_theme.get_html_theme_path()]
html_theme_options = {
    "bodyfont": "sans-serif",
    "headfont": "sans-serif",
    "codefont": "monospace",
    "sidebardepth": 3,
    }
html_show_sourcelink = False
htmlhelp_basename = 'adder2ddoc'

# grid cells are (row, column)
type_aliases = {
    "Cell": "Tuple[int, int]",
    }
napoleon_use_rtype = False
napoleon_type_aliases = type_aliases
autoclass_content = 'class'
autodoc_member_order = 'bysource'
autodoc_typehints = 'signature'
autodoc_type_aliases = type_aliases
