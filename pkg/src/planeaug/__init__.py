"""planeaug: connectivity augmentation for planar, plane and geometric graphs."""

from .graphs import (
    AbstractGraph,
    GeometricGraph,
    PlaneGraph,
    degree_histogram,
    faces,
    insert_edge_in_face,
    local_crossing_number,
)
from .connectivity import (
    vertex_connectivity_at_least,
    vertex_connectivity_bruteforce,
)

__all__ = [
    "AbstractGraph",
    "GeometricGraph",
    "PlaneGraph",
    "degree_histogram",
    "faces",
    "insert_edge_in_face",
    "local_crossing_number",
    "vertex_connectivity_at_least",
    "vertex_connectivity_bruteforce",
]

__version__ = "0.1.0"
