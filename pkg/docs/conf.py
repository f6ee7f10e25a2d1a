#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# heterochromatic documentation build configuration file.

import os
import sys

if os.environ.get("RTD") != "True":
    sys.path.insert(0, os.path.abspath(".."))

import heterochromatic  # noqa: E402

# -- General configuration ---------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.doctest",
    "sphinx.ext.viewcode",
    "sphinx.ext.napoleon",
    "sphinx.ext.mathjax",
    "sphinx_rtd_theme",
]
napoleon_numpy_docstring = True
napoleon_google_docstring = False

templates_path = ["_templates"]
source_suffix = [".rst", ".md"]
master_doc = "index"

project = "heterochromatic"
copyright = "2026, The heterochromatic developers"
author = "The heterochromatic developers"
version = heterochromatic.__version__
release = heterochromatic.__version__

exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]
pygments_style = "sphinx"

# -- Options for HTML output -------------------------------------------

html_theme = "sphinx_rtd_theme"
html_static_path = []
htmlhelp_basename = "heterochromaticdoc"

# -- Options for manual page output ------------------------------------

man_pages = [(master_doc, "heterochromatic", "heterochromatic Documentation", [author], 1)]
