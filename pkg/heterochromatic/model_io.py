"""
    The class that handles instance IO
"""

import json
from fractions import Fraction
from typing import Any, Dict

from .geometry import PointSet, build_point_set
from .hypergraph import Colouring, Hypergraph
from .matroid import (
    GraphicMatroid,
    GraphSpec,
    LinearMatroid,
    MatroidOracle,
    UniformMatroid,
    make_graphic,
    make_linear,
    make_uniform,
)
from .utils import InstanceError


class FormatError(InstanceError):
    pass


class MissingField(FormatError):
    def __init__(self, field: str) -> None:
        self.field = field
        super().__init__(f"The document has no {field!r} field.")


class UnknownMatroidType(FormatError):
    def __init__(self, kind: Any) -> None:
        self.kind = kind
        super().__init__(f"Unknown matroid type {kind!r}; expected graphic, uniform or linear.")


class InstanceIO:
    """
        Class for loading and parsing instance documents

        Every document is one JSON object. Which fields it carries decides
        what can be read from it:

        - points: ``{"points": [[x, y], ...]}``
        - colouring: ``{"colours": [c1, c2, ...]}``
        - hypergraph: ``{"nu": nu, "edges": [[v, ...], ...]}``
        - matroid: ``{"type": "graphic", "vertices": n, "edges": [[u, v], ...]}``,
          ``{"type": "uniform", "r": r, "m": m}`` or
          ``{"type": "linear", "field": "gf(p)", "columns": [[...], ...]}``

        Parameters
        ---------
        contents : str
            Either the document text or the file path
        content_type : str, {"InstanceString", "InstanceFile"}
            How ``contents`` should be read

        Raises
        ------
        KeyError
            For an unsupported ``content_type``.
        FormatError
            If the text is not a JSON object, or when a reader meets a
            malformed field such as a non-integer coordinate.
    """

    def __init__(self, contents: str, content_type: str) -> None:
        if content_type == "InstanceString":
            text = contents
        elif content_type == "InstanceFile":
            with open(contents) as handle:
                text = handle.read()
        else:
            raise KeyError(f"Unsupported content_type: {content_type}")
        try:
            document = json.loads(text)
        except json.JSONDecodeError as error:
            raise FormatError(f"Invalid JSON: {error.msg} at line {error.lineno}.")
        if not isinstance(document, dict):
            raise FormatError("The document must be a JSON object.")
        self.document: Dict[str, Any] = document

    def _field(self, name: str) -> Any:
        try:
            return self.document[name]
        except KeyError:
            raise MissingField(name)

    def point_set(self) -> PointSet:
        points = self._field("points")
        if not isinstance(points, list):
            raise FormatError("'points' must be a list of [x, y] pairs.")
        try:
            return build_point_set(points)
        except (TypeError, ValueError) as error:
            raise FormatError(str(error)) from error

    def colouring(self) -> Colouring:
        colours = self._field("colours")
        if not isinstance(colours, list) or not all(
            isinstance(c, int) and not isinstance(c, bool) for c in colours
        ):
            raise FormatError("'colours' must be a list of positive integers.")
        try:
            return Colouring(colours)
        except ValueError as error:
            raise FormatError(str(error)) from error

    def hypergraph(self) -> Hypergraph:
        try:
            return Hypergraph(self._field("nu"), self._field("edges"))
        except (TypeError, ValueError) as error:
            raise FormatError(str(error)) from error

    def matroid(self, verify: bool = False) -> MatroidOracle:
        kind = self._field("type")
        try:
            if kind == "graphic":
                graph = GraphSpec(self._field("vertices"), self._field("edges"))
                return make_graphic(graph, verify=verify)
            if kind == "uniform":
                return make_uniform(self._field("r"), self._field("m"), verify=verify)
            if kind == "linear":
                return make_linear(
                    self._field("columns"), self.document.get("field", "rational"), verify=verify
                )
        except (TypeError, ValueError) as error:
            raise FormatError(str(error)) from error
        raise UnknownMatroidType(kind)

    @property
    def kind(self) -> str:
        """ ``"matroid"``, ``"points"`` or ``"hypergraph"``, by the fields present """
        if "type" in self.document:
            return "matroid"
        if "points" in self.document:
            return "points"
        if "nu" in self.document:
            return "hypergraph"
        raise FormatError("The document holds no points, hypergraph or matroid.")


def dump_points(point_set: PointSet) -> str:
    return json.dumps({"points": [[p.x, p.y] for p in point_set.points]})


def dump_colouring(colouring: Colouring) -> str:
    return json.dumps({"colours": list(colouring.assignment)})


def dump_hypergraph(hypergraph: Hypergraph) -> str:
    return json.dumps(hypergraph.to_dict())


def dump_matroid(matroid: MatroidOracle) -> str:
    if isinstance(matroid, GraphicMatroid):
        document = {
            "type": "graphic",
            "vertices": matroid.graph.vertex_count,
            "edges": [list(edge) for edge in matroid.graph.edges],
        }
    elif isinstance(matroid, UniformMatroid):
        document = {"type": "uniform", "r": matroid.r, "m": matroid.ground_size}
    elif isinstance(matroid, LinearMatroid):
        field = "rational" if matroid.field is None else f"gf({matroid.field})"
        columns = [
            [str(v) if isinstance(v, Fraction) else v for v in column] for column in matroid.columns
        ]
        document = {"type": "linear", "field": field, "columns": columns}
    else:
        raise UnknownMatroidType(type(matroid).__name__)
    return json.dumps(document)
