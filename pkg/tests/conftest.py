"""
    Common configuration for all the tests
"""

import json
import pathlib

import matplotlib

matplotlib.use("Agg")

import pytest  # noqa: E402

from heterochromatic.geometry import build_point_set  # noqa: E402
from heterochromatic.matroid import GraphSpec, complete_graph  # noqa: E402


CURR_DIR = pathlib.Path(__file__).parent


@pytest.fixture
def setup_triangle():
    """
        Setup the triangle.

        Notes
        -----
        (0, 0), (2, 0), (1, 2); every pair of edges is a plane spanning tree.
    """
    return build_point_set([(0, 0), (2, 0), (1, 2)])


@pytest.fixture
def setup_square():
    """
        Setup the convex quadrilateral.

        Notes
        -----
        (0, 0), (4, 0), (4, 4), (0, 4)

        Edge ids: 0 = (0, 1), 1 = (0, 2), 2 = (0, 3), 3 = (1, 2), 4 = (1, 3),
        5 = (2, 3). The diagonals 1 and 4 cross.
    """
    return build_point_set([(0, 0), (4, 0), (4, 4), (0, 4)])


@pytest.fixture
def setup_pentagon():
    """
        Setup a convex pentagon.

        Notes
        -----
        (0, 0), (4, 0), (6, 3), (2, 6), (-2, 3), counter-clockwise.
    """
    return build_point_set([(0, 0), (4, 0), (6, 3), (2, 6), (-2, 3)])


@pytest.fixture
def setup_kite():
    """
        Setup a quadrilateral with one interior point.

        Notes
        -----
        Hull (0, 0), (5, 0), (6, 4), (1, 5); interior w = (2, 2), index 4.

        Edge ids: 0 = (0, 1), 1 = (0, 2), 2 = (0, 3), 3 = (0, 4), 4 = (1, 2),
        5 = (1, 3), 6 = (1, 4), 7 = (2, 3), 8 = (2, 4), 9 = (3, 4).
    """
    return build_point_set([(0, 0), (5, 0), (6, 4), (1, 5), (2, 2)])


@pytest.fixture
def setup_square_interior():
    """
        Setup the square with the interior point (2, 1).

        Notes
        -----
        The widest angle at (2, 1) is attained twice, by (0, 2) and by (1, 3).
    """
    return build_point_set([(0, 0), (4, 0), (4, 4), (0, 4), (2, 1)])


@pytest.fixture
def setup_triangle_interior():
    """
        Setup a triangle with one interior point.

        Notes
        -----
        (0, 0), (6, 0), (3, 6) and w = (3, 2). No two of the six segments
        cross, so all 16 spanning trees of K4 are plane.
    """
    return build_point_set([(0, 0), (6, 0), (3, 6), (3, 2)])


@pytest.fixture
def setup_kite_colourings():
    """
        Colourings of the kite with 6 colours, one per construction branch.

        Notes
        -----
        ``not_a_tree``: the leftover edges miss point 0.
        ``complement``: the leftover tree has the interior point in its body.
        ``caterpillar``: the leftover tree is the geometric caterpillar
        (0, 3), (1, 2), (2, 3), (3, 4).
        ``star``: the leftover tree is the star at the interior point.
    """
    return {
        "not_a_tree": [1, 2, 3, 4, 5, 6, 1, 1, 1, 1],
        "complement": [1, 2, 3, 1, 4, 5, 2, 3, 4, 6],
        "caterpillar": [1, 2, 1, 3, 2, 4, 5, 3, 6, 4],
        "star": [1, 2, 3, 1, 4, 5, 2, 6, 3, 4],
    }


@pytest.fixture
def setup_k4():
    """
        Setup the complete graph on 4 vertices.

        Notes
        -----
        Edge ids: 0 = (0, 1), 1 = (0, 2), 2 = (0, 3), 3 = (1, 2), 4 = (1, 3),
        5 = (2, 3).
    """
    return complete_graph(4)


@pytest.fixture
def setup_disconnected():
    """ Two disjoint edges """
    return GraphSpec(4, [(0, 1), (2, 3)])


@pytest.fixture
def write_json(tmp_path):
    """ Write a document to a temporary file and return its path """

    def write(name: str, document) -> str:
        path = tmp_path / name
        path.write_text(json.dumps(document))
        return str(path)

    return write
