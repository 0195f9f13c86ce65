"""Loop-free simple graphs, their Cartan pairing, and weights.

The symmetric bilinear form on vertices is ``i.i = 2``, ``i.j = -1`` for an
edge, ``0`` otherwise.  A weight records how many strands carry each vertex
label.
"""

from __future__ import annotations

import json


class GraphError(ValueError):
    """Malformed graph input (loop, duplicate edge, unknown vertex)."""


class CartanGraph:
    """A finite graph without loops or multiple edges.

    Vertices are identifier strings ordered lexicographically; edges are
    unordered pairs of distinct vertices.
    """

    __slots__ = ("vertices", "edges")

    def __init__(self, vertices, edges):
        self.vertices = tuple(vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise GraphError("duplicate vertex")
        vset = set(self.vertices)
        seen = set()
        for a, b in edges:
            if a == b:
                raise GraphError(f"loop at vertex {a!r}")
            if a not in vset or b not in vset:
                raise GraphError(f"edge endpoint {a!r},{b!r} not a vertex")
            key = frozenset((a, b))
            if key in seen:
                raise GraphError(f"duplicate edge {a!r}-{b!r}")
            seen.add(key)
        self.edges = frozenset(seen)

    def cartan(self, i, j):
        """The pairing i.j in {2, -1, 0}."""
        if i not in self.vertices or j not in self.vertices:
            raise GraphError(f"unknown vertex {i!r} or {j!r}")
        if i == j:
            return 2
        return -1 if frozenset((i, j)) in self.edges else 0

    def to_json(self):
        return {"vertices": list(self.vertices),
                "edges": [sorted(e) for e in sorted(self.edges, key=sorted)]}

    @staticmethod
    def from_json(obj):
        try:
            return CartanGraph(obj["vertices"], [tuple(e) for e in obj["edges"]])
        except (KeyError, TypeError) as exc:
            raise GraphError(f"malformed graph object: {exc}")

    @staticmethod
    def load(path):
        with open(path) as fh:
            return CartanGraph.from_json(json.load(fh))

    def __repr__(self):
        return f"CartanGraph({self.vertices!r}, {sorted(map(sorted, self.edges))!r})"


# -- stock graphs used throughout the tests and docs -----------------------

def single_vertex(name="i"):
    return CartanGraph([name], [])


def a2(i="i", j="j"):
    """Two vertices joined by an edge."""
    return CartanGraph([i, j], [(i, j)])


def a1xa1(i="i", j="j"):
    """Two isolated vertices."""
    return CartanGraph([i, j], [])


def cycle(n):
    """The n-cycle with vertices '1'..'n'."""
    assert n >= 3
    verts = [str(k) for k in range(1, n + 1)]
    edges = [(verts[k], verts[(k + 1) % n]) for k in range(n)]
    return CartanGraph(verts, edges)


# -- weights ---------------------------------------------------------------

def weight_of_seq(seq):
    """Multiplicity map of a sequence of vertices, as a sorted tuple of pairs."""
    counts = {}
    for v in seq:
        counts[v] = counts.get(v, 0) + 1
    return tuple(sorted(counts.items()))


def weight_size(weight):
    return sum(n for _, n in weight)


def weight_add(w1, w2):
    counts = dict(w1)
    for v, n in w2:
        counts[v] = counts.get(v, 0) + n
    return tuple(sorted((v, n) for v, n in counts.items() if n))


def weight_from_dict(d):
    return tuple(sorted((v, n) for v, n in d.items() if n))
