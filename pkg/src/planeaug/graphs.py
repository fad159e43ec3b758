"""Graph representations: abstract, plane (rotation system) and geometric.

A plane graph stores a combinatorial embedding as a rotation system over
*darts* (edge-ends).  Edge ``e`` owns darts ``2e`` and ``2e+1``; ``dart ^ 1``
is the opposite end.  Rotations are cyclic doubly-linked lists in clockwise
order, so splices are O(1) and face walks follow ``next(twin(d))``.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Optional, Sequence

from .errors import (
    ArgumentError,
    DegenerateInputError,
    DuplicateEdgeError,
    InfeasibleInsertionError,
    ValidationError,
)
from .geometry import (
    Point,
    check_general_position,
    crossing_counts,
    make_point,
    point_on_open_segment,
)


def _norm_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class AbstractGraph:
    """Simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValidationError("vertex count must be nonnegative")
        es = set()
        for u, v in edges:
            if u == v:
                raise ValidationError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValidationError(f"edge ({u},{v}) out of range for n={n}")
            es.add(_norm_edge(u, v))
        self.n = n
        self.edges = frozenset(es)
        self._adj: Optional[list[list[int]]] = None

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[list[int]]:
        """Sorted adjacency lists (cached)."""
        if self._adj is None:
            adj: list[list[int]] = [[] for _ in range(self.n)]
            for u, v in self.edges:
                adj[u].append(v)
                adj[v].append(u)
            for a in adj:
                a.sort()
            self._adj = adj
        return self._adj

    def degree(self, v: int) -> int:
        return len(self.adjacency()[v])

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges

    def with_edges(self, extra: Iterable[tuple[int, int]]) -> "AbstractGraph":
        return AbstractGraph(self.n, list(self.edges) + list(extra))

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        adj = self.adjacency()
        seen = [False] * self.n
        stack = [0]
        seen[0] = True
        cnt = 1
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    cnt += 1
                    stack.append(w)
        return cnt == self.n

    def __eq__(self, other):
        return (
            isinstance(other, AbstractGraph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"AbstractGraph(n={self.n}, m={self.m})"


def degree_histogram(g: AbstractGraph) -> dict[int, int]:
    """Map degree -> number of vertices of that degree; counts sum to n."""
    return dict(Counter(len(a) for a in g.adjacency()))


class PlaneGraph:
    """Connected plane graph with a fixed combinatorial embedding.

    Treat instances as immutable; mutating operations return new graphs.
    """

    __slots__ = ("n", "_ends", "_nxt", "_prv", "_head", "_abstract")

    def __init__(self, n, ends, nxt, prv, head, validate=True):
        self.n = n
        self._ends = ends  # dart -> origin vertex
        self._nxt = nxt
        self._prv = prv
        self._head = head  # vertex -> one dart (or -1)
        self._abstract: Optional[AbstractGraph] = None
        if validate:
            self.validate()

    # -- construction -----------------------------------------------------

    @classmethod
    def from_darts(cls, n: int, edges: Sequence[tuple[int, int]],
                   rotations: Sequence[Sequence[int]], validate: bool = True) -> "PlaneGraph":
        """Build from explicit per-vertex clockwise dart lists.

        Dart ``2e`` is the end of ``edges[e]`` at ``edges[e][0]``, dart
        ``2e+1`` the end at ``edges[e][1]``.
        """
        m = len(edges)
        ends = [0] * (2 * m)
        for e, (u, v) in enumerate(edges):
            ends[2 * e] = u
            ends[2 * e + 1] = v
        nxt = [-1] * (2 * m)
        prv = [-1] * (2 * m)
        head = [-1] * n
        if len(rotations) != n:
            raise ValidationError("rotation table must list every vertex")
        for v, rot in enumerate(rotations):
            if not rot:
                continue
            head[v] = rot[0]
            for i, d in enumerate(rot):
                if not (0 <= d < 2 * m):
                    raise ValidationError(f"dart {d} out of range")
                if ends[d] != v:
                    raise ValidationError(f"dart {d} listed at {v} but originates at {ends[d]}")
                nd = rot[(i + 1) % len(rot)]
                nxt[d] = nd
                prv[nd] = d
        return cls(n, ends, nxt, prv, head, validate=validate)

    @classmethod
    def from_neighbor_rotations(cls, rotations: Sequence[Sequence[int]],
                                validate: bool = True) -> "PlaneGraph":
        """Build from per-vertex clockwise neighbor lists (simple graphs)."""
        n = len(rotations)
        edges: list[tuple[int, int]] = []
        index: dict[tuple[int, int], int] = {}
        for u, rot in enumerate(rotations):
            for v in rot:
                key = _norm_edge(u, v)
                if key not in index:
                    index[key] = len(edges)
                    edges.append(key)
        darts = []
        for u, rot in enumerate(rotations):
            row = []
            for v in rot:
                e = index[_norm_edge(u, v)]
                row.append(2 * e if edges[e][0] == u else 2 * e + 1)
            darts.append(row)
        return cls.from_darts(n, edges, darts, validate=validate)

    # -- dart primitives ---------------------------------------------------

    def origin(self, d: int) -> int:
        return self._ends[d]

    def target(self, d: int) -> int:
        return self._ends[d ^ 1]

    def next_dart(self, d: int) -> int:
        return self._nxt[d]

    def prev_dart(self, d: int) -> int:
        return self._prv[d]

    def face_next(self, d: int) -> int:
        """Next dart along the face walk on a fixed side of d."""
        return self._nxt[d ^ 1]

    def dart_count(self) -> int:
        return len(self._ends)

    def darts_at(self, v: int) -> list[int]:
        d0 = self._head[v]
        if d0 < 0:
            return []
        out = [d0]
        d = self._nxt[d0]
        while d != d0:
            out.append(d)
            d = self._nxt[d]
        return out

    def dart_between(self, u: int, v: int) -> int:
        """The dart from u to v, or -1."""
        for d in self.darts_at(u):
            if self.target(d) == v:
                return d
        return -1

    # -- views --------------------------------------------------------------

    @property
    def m(self) -> int:
        return len(self._ends) // 2

    def edge_list(self) -> list[tuple[int, int]]:
        return [(self._ends[2 * e], self._ends[2 * e + 1]) for e in range(self.m)]

    def rotations(self) -> list[list[int]]:
        return [self.darts_at(v) for v in range(self.n)]

    def neighbor_rotations(self) -> list[list[int]]:
        return [[self.target(d) for d in self.darts_at(v)] for v in range(self.n)]

    def degree(self, v: int) -> int:
        return len(self.darts_at(v))

    def abstract(self) -> AbstractGraph:
        if self._abstract is None:
            self._abstract = AbstractGraph(self.n, self.edge_list())
        return self._abstract

    def __eq__(self, other):
        if not isinstance(other, PlaneGraph):
            return False
        if self.n != other.n:
            return False
        return _canonical_rotations(self) == _canonical_rotations(other)

    def __hash__(self):
        return hash((self.n, tuple(map(tuple, _canonical_rotations(self)))))

    def __repr__(self):
        return f"PlaneGraph(n={self.n}, m={self.m})"

    # -- faces ---------------------------------------------------------------

    def faces(self) -> list[list[int]]:
        """All face walks as dart sequences; each dart appears exactly once."""
        nd = len(self._ends)
        seen = [False] * nd
        out = []
        for d0 in range(nd):
            if seen[d0]:
                continue
            walk = []
            d = d0
            while not seen[d]:
                seen[d] = True
                walk.append(d)
                d = self.face_next(d)
            if d != d0:
                raise ValidationError("face walk does not close; rotation system malformed")
            out.append(walk)
        return out

    def face_of(self, d: int) -> list[int]:
        """The face walk containing dart d, starting at d."""
        walk = [d]
        x = self.face_next(d)
        while x != d:
            walk.append(x)
            x = self.face_next(x)
            if len(walk) > len(self._ends):
                raise ValidationError("face walk does not close")
        return walk

    def validate(self) -> None:
        n, nd = self.n, len(self._ends)
        seen = [False] * nd
        for v in range(n):
            for d in self.darts_at(v):
                if seen[d]:
                    raise ValidationError(f"dart {d} appears twice in rotations")
                seen[d] = True
                if self._ends[d] != v:
                    raise ValidationError(f"dart {d} misplaced")
        if not all(seen):
            raise ValidationError("some darts missing from rotations")
        g = self.abstract()
        if g.m * 2 != nd:
            raise ValidationError("parallel edges in plane graph")
        if n > 0 and not g.is_connected():
            raise ValidationError("plane graph must be connected")
        f = len(self.faces())
        if n - g.m + f != 2:
            raise ValidationError(
                f"Euler check failed: V-E+F = {n}-{g.m}+{f} != 2"
            )

    # -- modification (functional) -------------------------------------------

    def _builder(self) -> "PlaneBuilder":
        b = PlaneBuilder(self.n)
        b.ends = list(self._ends)
        b.nxt = list(self._nxt)
        b.prv = list(self._prv)
        b.head = list(self._head)
        return b

    def insert_edge_in_face(self, corner_u: int, corner_v: int) -> "PlaneGraph":
        """Insert edge origin(corner_u)-origin(corner_v) across a shared face.

        A corner names the face sector immediately counterclockwise of the
        given dart; the new dart is spliced directly before it.  Both
        corners must lie on the same face walk.
        """
        u, v = self.origin(corner_u), self.origin(corner_v)
        if u == v:
            raise InfeasibleInsertionError("corners share a vertex; would create a loop")
        if self.abstract().has_edge(u, v):
            raise DuplicateEdgeError(f"edge ({u},{v}) already present")
        walk = self.face_of(corner_u)
        if corner_v not in walk:
            raise InfeasibleInsertionError(
                f"corners {corner_u} and {corner_v} lie on different faces"
            )
        b = self._builder()
        b.add_edge_at(u, v, before_u=corner_u, before_v=corner_v)
        return b.freeze(validate=False)


def _canonical_rotations(g: PlaneGraph) -> list[list[int]]:
    """Neighbor rotations rotated so each starts at the smallest neighbor."""
    out = []
    for row in g.neighbor_rotations():
        if not row:
            out.append([])
            continue
        k = row.index(min(row))
        out.append(row[k:] + row[:k])
    return out


class PlaneBuilder:
    """Mutable dart structure used internally by algorithms.

    The builder exposes O(1) splice primitives; callers are responsible for
    keeping the embedding planar (validated on freeze or by tests).
    """

    __slots__ = ("n", "ends", "nxt", "prv", "head", "free")

    def __init__(self, n: int):
        self.n = n
        self.ends: list[int] = []
        self.nxt: list[int] = []
        self.prv: list[int] = []
        self.head: list[int] = [-1] * n
        self.free: list[int] = []  # freed edge slots (dart pair base)

    def new_vertex(self) -> int:
        self.head.append(-1)
        self.n += 1
        return self.n - 1

    def _alloc(self, u: int, v: int) -> int:
        """Allocate an unlinked edge, returning its base dart (at u)."""
        if self.free:
            d = self.free.pop()
            self.ends[d] = u
            self.ends[d ^ 1] = v
        else:
            d = len(self.ends)
            self.ends.extend((u, v))
            self.nxt.extend((-1, -1))
            self.prv.extend((-1, -1))
        return d

    def link(self, d: int, before: int = -1, after: int = -1) -> None:
        """Splice dart d into its origin's rotation.

        Position: before/after a given dart; with neither, d becomes the
        sole dart (vertex previously isolated).
        """
        v = self.ends[d]
        if before < 0 and after < 0:
            if self.head[v] != -1:
                raise ValidationError(f"vertex {v} not isolated; give a position")
            self.head[v] = d
            self.nxt[d] = d
            self.prv[d] = d
            return
        if before >= 0:
            nd = before
            pd = self.prv[before]
        else:
            pd = after
            nd = self.nxt[after]
        self.nxt[pd] = d
        self.prv[d] = pd
        self.nxt[d] = nd
        self.prv[nd] = d

    def unlink(self, d: int) -> None:
        v = self.ends[d]
        if self.nxt[d] == d:
            self.head[v] = -1
        else:
            self.nxt[self.prv[d]] = self.nxt[d]
            self.prv[self.nxt[d]] = self.prv[d]
            if self.head[v] == d:
                self.head[v] = self.nxt[d]
        self.nxt[d] = self.prv[d] = -1

    def add_edge_at(self, u: int, v: int, before_u: int = -1, before_v: int = -1,
                    after_u: int = -1, after_v: int = -1) -> int:
        d = self._alloc(u, v)
        self.link(d, before=before_u, after=after_u)
        self.link(d ^ 1, before=before_v, after=after_v)
        return d

    def delete_edge(self, d: int) -> None:
        """Remove the edge owning dart d and recycle its slot."""
        base = d & ~1
        self.unlink(base)
        self.unlink(base ^ 1)
        self.free.append(base)

    def move_end(self, d: int, new_origin: int, before: int = -1, after: int = -1) -> None:
        """Re-attach dart d (one end of its edge) at a new origin vertex."""
        self.unlink(d)
        self.ends[d] = new_origin
        self.link(d, before=before, after=after)

    def darts_at(self, v: int) -> list[int]:
        d0 = self.head[v]
        if d0 < 0:
            return []
        out = [d0]
        d = self.nxt[d0]
        while d != d0:
            out.append(d)
            d = self.nxt[d]
        return out

    def dart_between(self, u: int, v: int) -> int:
        for d in self.darts_at(u):
            if self.ends[d ^ 1] == v:
                return d
        return -1

    def freeze(self, validate: bool = True) -> PlaneGraph:
        """Compact free slots and produce an immutable PlaneGraph."""
        if self.free:
            freeset = set()
            for base in self.free:
                freeset.add(base)
            keep = [d for d in range(0, len(self.ends), 2) if d not in freeset]
            remap = {}
            for i, base in enumerate(keep):
                remap[base] = 2 * i
                remap[base ^ 1] = 2 * i + 1
            ends = [0] * (2 * len(keep))
            nxt = [-1] * (2 * len(keep))
            prv = [-1] * (2 * len(keep))
            for old, new in remap.items():
                ends[new] = self.ends[old]
                nxt[new] = remap[self.nxt[old]]
                prv[new] = remap[self.prv[old]]
            head = [remap[h] if h >= 0 else -1 for h in self.head]
            return PlaneGraph(self.n, ends, nxt, prv, head, validate=validate)
        return PlaneGraph(self.n, list(self.ends), list(self.nxt), list(self.prv),
                          list(self.head), validate=validate)


def faces(g: PlaneGraph) -> list[list[int]]:
    """Face walks of g as cyclic dart sequences."""
    return g.faces()


def insert_edge_in_face(g: PlaneGraph, corner_u: int, corner_v: int) -> PlaneGraph:
    """Embedding-preserving edge insertion across a face; see PlaneGraph."""
    return g.insert_edge_in_face(corner_u, corner_v)


class GeometricGraph:
    """Straight-line graph on rational points in general position."""

    __slots__ = ("points", "graph")

    def __init__(self, points: Sequence, edges: Iterable[tuple[int, int]],
                 validate: bool = True):
        self.points: list[Point] = [
            p if isinstance(p, tuple) and len(p) == 3 else make_point(*p)
            for p in points
        ]
        self.graph = AbstractGraph(len(self.points), edges)
        if validate:
            self.validate_points()

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def edges(self):
        return self.graph.edges

    def validate_points(self) -> None:
        if len(set(self.points)) != len(self.points):
            raise DegenerateInputError("duplicate points")

    def validate_general_position(self) -> None:
        """Full O(n^3) collinearity check plus vertex-on-edge check."""
        check_general_position(self.points)
        for u, v in self.graph.edges:
            for w in range(self.n):
                if w != u and w != v and point_on_open_segment(
                    self.points[w], self.points[u], self.points[v]
                ):
                    raise DegenerateInputError(f"vertex {w} lies on edge ({u},{v})")

    def crossing_counts(self) -> dict[tuple[int, int], int]:
        es = sorted(self.graph.edges)
        counts = crossing_counts(self.points, es)
        return dict(zip(es, counts))

    def with_edges(self, extra: Iterable[tuple[int, int]]) -> "GeometricGraph":
        return GeometricGraph(self.points, list(self.graph.edges) + list(extra),
                              validate=False)

    def __repr__(self):
        return f"GeometricGraph(n={self.n}, m={self.graph.m})"


def local_crossing_number(g: GeometricGraph) -> int:
    """Maximum number of proper crossings on any single edge of g."""
    if not g.graph.edges:
        return 0
    es = sorted(g.graph.edges)
    return max(crossing_counts(g.points, es), default=0)
