"""
    SVG figures of point sets, plane trees and graphic bases
"""

from typing import Optional, Tuple

import matplotlib.lines as mlines
import matplotlib.pyplot as plt
import networkx as nx

from .geometry import PointSet
from .hypergraph import Colouring
from .matroid import GraphicMatroid
from .utils import bits


def _colour_of(colouring: Optional[Colouring], element: int):
    if colouring is None:
        return "black"
    colors = plt.rcParams["axes.prop_cycle"].by_key()["color"]
    return colors[(colouring[element] - 1) % len(colors)]


def plot_tree(
    point_set: PointSet,
    tree: int = 0,
    colouring: Optional[Colouring] = None,
    path: Optional[str] = None,
):
    """
        Draw every edge faintly and the witness tree in bold

        Parameters
        ----------
        point_set: PointSet
        tree: int, optional
            Bitmask of the witness edges. Nothing is highlighted by default.
        colouring: Colouring, optional
            Edge colours; each colour class gets a colour of the property
            cycle.
        path: str, optional
            Where to save the figure as SVG.

        Returns
        -------
        fig: class 'matplotlib.figure.Figure'
        ax: class 'matplotlib.axes._subplots.AxesSubplot'

        Notes
        -----
        Witness edges carry the SVG id ``edge-a-b`` and the other edges
        ``segment-a-b``, with ``a < b`` point indices.
    """
    fig, ax = plt.subplots()
    for e, (a, b) in enumerate(point_set.edges):
        p, q = point_set.segment(e)
        chosen = bool(tree >> e & 1)
        (line,) = ax.plot(
            [p.x, q.x],
            [p.y, q.y],
            color=_colour_of(colouring, e),
            alpha=1.0 if chosen else 0.15,
            linewidth=2.5 if chosen else 0.8,
            zorder=2 if chosen else 1,
        )
        line.set_gid(f"edge-{a}-{b}" if chosen else f"segment-{a}-{b}")
    xs = [p.x for p in point_set.points]
    ys = [p.y for p in point_set.points]
    points = ax.scatter(xs, ys, color="black", zorder=3)
    points.set_gid("points")
    for index, (x, y) in enumerate(zip(xs, ys)):
        ax.annotate(str(index), (x, y), textcoords="offset points", xytext=(4, 4))
    ax.set_aspect("equal")
    ax.set_axis_off()
    if colouring is not None and tree:
        handles = [
            mlines.Line2D([], [], color=_colour_of(colouring, e), label=f"colour {colouring[e]}")
            for e in bits(tree)
        ]
        ax.legend(handles=handles, loc="upper right", fontsize="small")
    if path is not None:
        fig.savefig(path, format="svg")
    return fig, ax


def plot_basis(
    matroid: GraphicMatroid,
    basis: int = 0,
    colouring: Optional[Colouring] = None,
    path: Optional[str] = None,
) -> Tuple:
    """
        Draw a graphic matroid's graph on a circle with the basis in bold

        Element ``e`` carries the SVG id ``element-e``.
    """
    graph = matroid.graph
    layout = nx.circular_layout(graph.to_networkx())
    fig, ax = plt.subplots()
    for e, (u, v) in enumerate(graph.edges):
        chosen = bool(basis >> e & 1)
        (line,) = ax.plot(
            [layout[u][0], layout[v][0]],
            [layout[u][1], layout[v][1]],
            color=_colour_of(colouring, e),
            alpha=1.0 if chosen else 0.15,
            linewidth=2.5 if chosen else 0.8,
        )
        line.set_gid(f"element-{e}")
    xs = [layout[v][0] for v in range(graph.vertex_count)]
    ys = [layout[v][1] for v in range(graph.vertex_count)]
    ax.scatter(xs, ys, color="black", zorder=3).set_gid("vertices")
    ax.set_aspect("equal")
    ax.set_axis_off()
    if path is not None:
        fig.savefig(path, format="svg")
    return fig, ax
