"""
    Tests for plotting functions
"""

import xml.etree.ElementTree as ET

import matplotlib.pyplot as plt

from heterochromatic.hypergraph import Colouring
from heterochromatic.matroid import make_graphic
from heterochromatic.plotting import plot_basis, plot_tree
from heterochromatic.rainbow import rainbow_tree_convex
from heterochromatic.utils import mask_of


def svg_ids(path):
    return {element.get("id") for element in ET.parse(path).getroot().iter() if element.get("id")}


def test_plotting(setup_kite):
    """ Test if plot generates without errors """
    fig, ax = plot_tree(setup_kite)
    assert len(ax.lines) == setup_kite.edge_count
    plt.close(fig)


def test_witness_ids(setup_square, tmp_path):
    colouring = Colouring([1, 2, 3, 4, 1, 1])
    tree = rainbow_tree_convex(setup_square, colouring)
    path = str(tmp_path / "tree.svg")
    fig, _ = plot_tree(setup_square, tree.edges, colouring, path=path)
    plt.close(fig)
    ids = svg_ids(path)
    assert {"edge-0-1", "edge-0-2", "edge-0-3"} <= ids
    assert {"segment-1-2", "segment-1-3", "segment-2-3"} <= ids
    assert "edge-1-2" not in ids
    assert "points" in ids


def test_basis_ids(setup_k4, tmp_path):
    path = str(tmp_path / "basis.svg")
    fig, ax = plot_basis(make_graphic(setup_k4), mask_of([0, 3, 5]), Colouring([1, 1, 1, 2, 2, 3]), path)
    plt.close(fig)
    ids = svg_ids(path)
    assert {f"element-{e}" for e in range(6)} <= ids
    assert "vertices" in ids
    assert len(ax.lines) == 6
