"""Sequences of vertices, divided-power sequences, and shuffles.

A plain sequence is a tuple of vertex strings.  A divided sequence is a
tuple of (vertex, n) blocks with n >= 1; its expansion repeats each vertex
n times.  Adjacent blocks with the same vertex are allowed and kept as
written.
"""

from __future__ import annotations

from .cartan import weight_of_seq
from .laurent import LaurentPoly, qfact


def seq_enumerate(weight):
    """All sequences with the given vertex multiplicities, lexicographic."""
    letters = []
    for v, n in weight:
        letters.extend([v] * n)
    out = []

    def rec(prefix, remaining):
        if not remaining:
            out.append(tuple(prefix))
            return
        for v in sorted(set(remaining)):
            rest = list(remaining)
            rest.remove(v)
            rec(prefix + [v], rest)

    rec([], letters)
    return out


# -- divided sequences -----------------------------------------------------

def expand(divided):
    """The plain sequence obtained by repeating each block's vertex."""
    out = []
    for v, n in divided:
        out.extend([v] * n)
    return tuple(out)


def divided_weight(divided):
    return weight_of_seq(expand(divided))


def shift(divided):
    """Sum of n(n-1)/2 over the blocks."""
    return sum(n * (n - 1) // 2 for _, n in divided)


def factorial_poly(divided) -> LaurentPoly:
    """Product of quantum factorials [n]! over the blocks."""
    out = LaurentPoly.one()
    for _, n in divided:
        out = out * qfact(n)
    return out


def plain(seq):
    """View a plain sequence as a divided sequence of singleton blocks."""
    return tuple((v, 1) for v in seq)


def concat(d1, d2):
    return tuple(d1) + tuple(d2)


def reverse(divided):
    return tuple(reversed(divided))


def format_divided(divided):
    return " ".join(v if n == 1 else f"{v}^({n})" for v, n in divided)


def format_seq(seq):
    """Compact form if every vertex is a single character, else spaced."""
    if all(len(v) == 1 for v in seq):
        return "".join(seq)
    return " ".join(seq)


# -- shuffles --------------------------------------------------------------

def shuffles(graph, seq_i, seq_j):
    """All interleavings of the two sequences with their crossing degrees.

    Returns (sequence, degree) pairs; the degree is minus the sum of the
    Cartan pairings over crossing pairs, where a crossing pair is an entry
    of ``seq_j`` placed to the left of an entry of ``seq_i``.
    """
    m, n = len(seq_i), len(seq_j)
    out = []

    def rec(a, b, placed, deg):
        if a == m and b == n:
            out.append((tuple(placed), deg))
            return
        if a < m:
            # next entry from seq_i: it crosses every seq_j entry already placed
            d = deg - sum(graph.cartan(seq_i[a], seq_j[t]) for t in range(b))
            rec(a + 1, b, placed + [seq_i[a]], d)
        if b < n:
            rec(a, b + 1, placed + [seq_j[b]], deg)

    rec(0, 0, [], 0)
    return out
