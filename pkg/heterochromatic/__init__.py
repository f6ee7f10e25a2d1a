# -*- coding: utf-8 -*-

"""Top-level package for heterochromatic numbers of plane-tree and matroid-basis hypergraphs."""

__author__ = """The heterochromatic developers"""
__email__ = "heterochromatic@users.noreply.github.com"
__version__ = "0.1.0"

from .geometry import build_point_set
from .hypergraph import Colouring, Hypergraph
from .matroid import make_graphic, make_linear, make_uniform
from .model_io import InstanceIO
from .rainbow import rainbow_basis, rainbow_tree_convex, rainbow_tree_one_interior
from .verification import Verification
