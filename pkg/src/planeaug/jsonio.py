"""Graph file format (JSON).

Schema::

    {"n": int,
     "edges": [[u, v], ...],
     "rotation": [[edge_end, ...], ...],            # optional -> PlaneGraph
     "points": [[x_num, x_den, y_num, y_den], ...]} # optional -> GeometricGraph

Edge end ``2e`` is the end of ``edges[e]`` at ``edges[e][0]``; ``2e+1`` the
end at ``edges[e][1]``.  Files carrying both ``rotation`` and ``points`` are
accepted only if the rotation matches the angular order of the straight-line
drawing.  Serialization is canonical: edges sorted, each rotation starting at
its smallest edge end, fixed key order.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Optional, TextIO, Union

from .errors import ValidationError
from .geometry import Point
from .graphs import AbstractGraph, GeometricGraph, PlaneGraph

GraphLike = Union[AbstractGraph, PlaneGraph, GeometricGraph]


class LoadedGraph:
    """Parse result: always an abstract view, plus optional embeddings."""

    def __init__(self, abstract: AbstractGraph,
                 plane: Optional[PlaneGraph] = None,
                 geometric: Optional[GeometricGraph] = None):
        self.abstract = abstract
        self.plane = plane
        self.geometric = geometric

    def require_plane(self) -> PlaneGraph:
        if self.plane is None:
            raise ValidationError("input file has no rotation system")
        return self.plane

    def require_geometric(self) -> GeometricGraph:
        if self.geometric is None:
            raise ValidationError("input file has no points")
        return self.geometric


def _angular_key(dx: Fraction, dy: Fraction):
    # exact comparator for ccw angular order starting at the +x axis
    upper = 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1
    return upper, lambda other: None  # placeholder, not used; see _angular_order


def _angular_order(points: list[Point], v: int, nbrs: list[int]) -> list[int]:
    """Neighbors of v sorted counterclockwise by exact angle."""
    px = Fraction(points[v][0], points[v][2])
    py = Fraction(points[v][1], points[v][2])

    def half(w):
        dx = Fraction(points[w][0], points[w][2]) - px
        dy = Fraction(points[w][1], points[w][2]) - py
        return 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1

    import functools

    def cmp(a, b):
        ha, hb = half(a), half(b)
        if ha != hb:
            return -1 if ha < hb else 1
        ax = Fraction(points[a][0], points[a][2]) - px
        ay = Fraction(points[a][1], points[a][2]) - py
        bx = Fraction(points[b][0], points[b][2]) - px
        by = Fraction(points[b][1], points[b][2]) - py
        cross = ax * by - ay * bx
        if cross == 0:
            return 0
        return -1 if cross > 0 else 1

    return sorted(nbrs, key=functools.cmp_to_key(cmp))


def _cyclic_equal(a: list[int], b: list[int]) -> bool:
    if len(a) != len(b):
        return False
    if not a:
        return True
    if set(a) != set(b):
        return False
    i = b.index(a[0])
    n = len(a)
    return all(a[j] == b[(i + j) % n] for j in range(n))


def parse_graph(obj: dict) -> LoadedGraph:
    if "n" not in obj or "edges" not in obj:
        raise ValidationError("graph file needs 'n' and 'edges'")
    n = obj["n"]
    edges = [tuple(e) for e in obj["edges"]]
    abstract = AbstractGraph(n, edges)
    if len(edges) != abstract.m:
        raise ValidationError("duplicate edges in file")
    plane = None
    geometric = None
    if "rotation" in obj and obj["rotation"] is not None:
        plane = PlaneGraph.from_darts(n, edges, obj["rotation"])
    if "points" in obj and obj["points"] is not None:
        pts = [(int(xn), int(xd), int(yn), int(yd)) for xn, xd, yn, yd in obj["points"]]
        points = [
            _quad_to_point(xn, xd, yn, yd) for xn, xd, yn, yd in pts
        ]
        geometric = GeometricGraph(points, edges)
    if plane is not None and geometric is not None:
        adj = abstract.adjacency()
        for v in range(n):
            want_ccw = _angular_order(geometric.points, v, adj[v])
            have = [plane.target(d) for d in plane.darts_at(v)]
            if not (_cyclic_equal(have, want_ccw)
                    or _cyclic_equal(have, list(reversed(want_ccw)))):
                raise ValidationError(
                    f"rotation at vertex {v} disagrees with the point geometry"
                )
    return LoadedGraph(abstract, plane, geometric)


def _quad_to_point(xn: int, xd: int, yn: int, yd: int) -> Point:
    from .geometry import make_point

    return make_point(Fraction(xn, xd), Fraction(yn, yd))


def load(fp: TextIO) -> LoadedGraph:
    return parse_graph(json.load(fp))


def loads(text: str) -> LoadedGraph:
    return parse_graph(json.loads(text))


def _canonical_edges_and_map(edges):
    order = sorted(range(len(edges)), key=lambda i: edges[i])
    remap = {}
    for new, old in enumerate(order):
        remap[2 * old] = 2 * new
        remap[2 * old + 1] = 2 * new + 1
    return [list(edges[i]) for i in order], remap


def to_obj(g: GraphLike) -> dict:
    """Canonical JSON-ready dict for any graph representation."""
    if isinstance(g, AbstractGraph):
        return {"n": g.n, "edges": [list(e) for e in sorted(g.edges)]}
    if isinstance(g, PlaneGraph):
        edges = g.edge_list()
        sorted_edges, remap = _canonical_edges_and_map(edges)
        rotation = []
        for v in range(g.n):
            row = [remap[d] for d in g.darts_at(v)]
            if row:
                k = row.index(min(row))
                row = row[k:] + row[:k]
            rotation.append(row)
        return {"n": g.n, "edges": sorted_edges, "rotation": rotation}
    if isinstance(g, GeometricGraph):
        pts = []
        for xn, yn, d in g.points:
            fx, fy = Fraction(xn, d), Fraction(yn, d)
            pts.append([fx.numerator, fx.denominator, fy.numerator, fy.denominator])
        return {
            "n": g.n,
            "edges": [list(e) for e in sorted(g.graph.edges)],
            "points": pts,
        }
    raise TypeError(f"cannot serialize {type(g)!r}")


def dumps(g: GraphLike) -> str:
    return json.dumps(to_obj(g), separators=(",", ":"), sort_keys=True) + "\n"


def dump(g: GraphLike, fp: TextIO) -> None:
    fp.write(dumps(g))
