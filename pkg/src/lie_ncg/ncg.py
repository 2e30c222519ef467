"""The non-commuting graph of a Lie algebra.

Vertices are the elements of ``L`` outside the center, in increasing index
order, and two vertices are adjacent exactly when their bracket is nonzero.
"""

from __future__ import annotations

from .errors import AbelianAlgebra
from .graphs import Graph
from .liealg import element_cap


class NcGraph(Graph):
    """A Graph whose vertices carry the algebra elements that produced them."""

    def __init__(self, n, rows, vertices, labels, algebra):
        super().__init__(n, rows, labels)
        self.vertices = tuple(vertices)
        self.algebra = algebra


def build_graph(L, cap=None):
    """Build the non-commuting graph of a non-abelian algebra.

    Raises AbelianAlgebra when the center is all of L (the graph would be
    null) and CapExceeded when q^dim exceeds the element cap.
    """
    if L.is_abelian():
        raise AbelianAlgebra("abelian algebra: the non-commuting graph has no vertices")
    cap = element_cap() if cap is None else cap
    center = L.center()
    vertices = [v for v in L.enumerate_elements(cap=cap) if not center.contains(v)]
    n = len(vertices)
    rows = [0] * n
    zero = L.zero()
    for a in range(n):
        for b in range(a + 1, n):
            if L.bracket(vertices[a], vertices[b]) != zero:
                rows[a] |= 1 << b
                rows[b] |= 1 << a
    labels = [L.element_label(v) for v in vertices]
    return NcGraph(n, rows, vertices, labels, L)
