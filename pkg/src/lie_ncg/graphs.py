"""Undirected simple graphs on bitset adjacency rows, plus exact invariants.

Vertices are ``0..n-1``; row ``i`` is an integer whose bit ``j`` is set when
``i`` and ``j`` are adjacent.  All decision procedures here are exact; sizes
beyond the stated caps raise ``CapExceeded`` instead of falling back to
heuristics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

import networkx as nx

from .errors import BadVertex, CapExceeded, EmptyGraph

HAMILTON_EXACT_CAP = 64
DOMINATION_CAP = 32

INF = math.inf


class Graph:
    """Immutable undirected simple graph with bit-matrix adjacency."""

    def __init__(self, n, rows, labels=None):
        self.n = n
        self.rows = tuple(rows)
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(n))

    @classmethod
    def from_edges(cls, n, edges, labels=None):
        rows = [0] * n
        for u, v in edges:
            if u == v:
                continue
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows, labels)

    @classmethod
    def complete(cls, n):
        full = (1 << n) - 1
        return cls(n, [full & ~(1 << i) for i in range(n)])

    def check_vertex(self, v):
        if not 0 <= v < self.n:
            raise BadVertex(f"vertex {v} out of range [0, {self.n})")

    def degree(self, v):
        self.check_vertex(v)
        return self.rows[v].bit_count()

    def degrees(self):
        return [r.bit_count() for r in self.rows]

    def edge_count(self):
        return sum(self.degrees()) // 2

    def has_edge(self, u, v):
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v):
        row = self.rows[v]
        return [u for u in range(self.n) if row >> u & 1]

    def edges(self):
        return [(u, v) for u in range(self.n) for v in range(u + 1, self.n) if self.has_edge(u, v)]

    def to_networkx(self):
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count()})"


# -- reachability and distances ----------------------------------------------


def _bfs_dist(g, source):
    dist = [-1] * g.n
    dist[source] = 0
    frontier = [source]
    while frontier:
        nxt = []
        for u in frontier:
            row = g.rows[u]
            for v in range(g.n):
                if row >> v & 1 and dist[v] < 0:
                    dist[v] = dist[u] + 1
                    nxt.append(v)
        frontier = nxt
    return dist


def connectivity(g):
    """(is_connected, diameter); diameter is inf when disconnected."""
    if g.n == 0:
        raise EmptyGraph("connectivity of the empty graph is undefined")
    diameter = 0
    for s in range(g.n):
        dist = _bfs_dist(g, s)
        if min(dist) < 0:
            return False, INF
        diameter = max(diameter, max(dist))
    return True, diameter


def girth(g):
    """Length of a shortest cycle, or inf for an acyclic graph."""
    best = INF
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        frontier = [s]
        while frontier:
            nxt = []
            for u in frontier:
                for v in g.neighbors(u):
                    if dist[v] < 0:
                        dist[v] = dist[u] + 1
                        parent[v] = u
                        nxt.append(v)
                    elif v != parent[u] and dist[v] >= dist[u]:
                        best = min(best, dist[u] + dist[v] + 1)
            frontier = nxt
    return best


# -- degree-based predicates ---------------------------------------------------


def is_regular(g):
    degs = g.degrees()
    return len(set(degs)) <= 1


def is_complete(g):
    return all(d == g.n - 1 for d in g.degrees())


def is_eulerian(g):
    if g.n == 0:
        return False
    connected, _ = connectivity(g)
    return connected and all(d % 2 == 0 for d in g.degrees())


def is_complete_bipartite(g):
    """BFS 2-coloring, then check the part sizes multiply to the edge count."""
    if g.n == 0:
        return False
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        frontier = [s]
        while frontier:
            nxt = []
            for u in frontier:
                for v in g.neighbors(u):
                    if color[v] < 0:
                        color[v] = 1 - color[u]
                        nxt.append(v)
                    elif color[v] == color[u]:
                        return False
            frontier = nxt
    a = color.count(0)
    b = color.count(1)
    if a == 0 or b == 0:
        return False
    return g.edge_count() == a * b


# -- Hamiltonicity -------------------------------------------------------------


def hamiltonian_cycle(g):
    """Exact backtracking search; returns a cycle as a vertex list, or None."""
    n = g.n
    if n > HAMILTON_EXACT_CAP:
        raise CapExceeded(f"exact Hamiltonian search capped at {HAMILTON_EXACT_CAP} vertices")
    if n < 3:
        return None
    if min(g.degrees()) < 2:
        return None
    connected, _ = connectivity(g)
    if not connected:
        return None
    path = [0]
    visited = 1

    def extend():
        nonlocal visited
        u = path[-1]
        if len(path) == n:
            return g.has_edge(u, 0)
        candidates = g.rows[u] & ~visited
        # prune: an unvisited vertex with no free neighbor (and not reachable
        # as the final vertex) makes the partial path dead
        remaining = ~visited & ((1 << n) - 1)
        rem = remaining
        while rem:
            v = (rem & -rem).bit_length() - 1
            rem &= rem - 1
            free = g.rows[v] & (remaining | 1 | (1 << u))
            if free.bit_count() < 2 and remaining.bit_count() > 1:
                return False
        while candidates:
            v = (candidates & -candidates).bit_length() - 1
            candidates &= candidates - 1
            path.append(v)
            visited |= 1 << v
            if extend():
                return True
            path.pop()
            visited &= ~(1 << v)
        return False

    return list(path) if extend() else None


def is_hamiltonian(g, force_exact=False):
    """Dirac shortcut when it applies, exact backtracking otherwise."""
    if not force_exact and g.n >= 3 and 2 * min(g.degrees()) >= g.n:
        return True
    return hamiltonian_cycle(g) is not None


# -- planarity -----------------------------------------------------------------


def is_planar(g):
    """Exact planarity via the left-right criterion (networkx)."""
    if g.n >= 3 and g.edge_count() > 3 * g.n - 6:
        return False
    ok, _ = nx.check_planarity(g.to_networkx())
    return ok


def is_outerplanar(g):
    """Planarity of the graph plus an apex vertex adjacent to every vertex."""
    apex = g.n
    rows = [row | (1 << apex) for row in g.rows]
    rows.append((1 << g.n) - 1)
    return is_planar(Graph(g.n + 1, rows))


# -- domination ----------------------------------------------------------------


def domination_number(g, cap=DOMINATION_CAP):
    """Smallest dominating-set size by increasing-size branch and bound."""
    if g.n == 0:
        raise EmptyGraph("domination number of the empty graph is undefined")
    if g.n > cap:
        raise CapExceeded(f"exact domination search capped at {cap} vertices")
    closed = [g.rows[v] | (1 << v) for v in range(g.n)]
    all_mask = (1 << g.n) - 1

    def search(covered, budget):
        if covered == all_mask:
            return True
        if budget == 0:
            return False
        u = ((~covered & all_mask) & -(~covered & all_mask)).bit_length() - 1
        # any dominating set must contain some vertex of N[u]
        cands = closed[u]
        while cands:
            v = (cands & -cands).bit_length() - 1
            cands &= cands - 1
            if search(covered | closed[v], budget - 1):
                return True
        return False

    for k in range(1, g.n + 1):
        if search(0, k):
            return k
    return g.n


# -- summary -------------------------------------------------------------------


@dataclass
class PropertyReport:
    vertex_count: int
    edge_count: int
    min_degree: int
    max_degree: int
    degree_sequence: tuple
    is_connected: bool
    diameter: object
    girth: object
    is_regular: bool
    is_eulerian: bool
    is_hamiltonian: bool
    is_complete: bool
    is_complete_bipartite: bool
    is_planar: bool
    is_outerplanar: bool
    domination_number: object

    def to_dict(self):
        def enc(v):
            return "inf" if v == INF else v

        return {
            "vertex_count": self.vertex_count,
            "edge_count": self.edge_count,
            "min_degree": self.min_degree,
            "max_degree": self.max_degree,
            "degree_sequence": list(self.degree_sequence),
            "is_connected": self.is_connected,
            "diameter": enc(self.diameter),
            "girth": enc(self.girth),
            "is_regular": self.is_regular,
            "is_eulerian": self.is_eulerian,
            "is_hamiltonian": self.is_hamiltonian,
            "is_complete": self.is_complete,
            "is_complete_bipartite": self.is_complete_bipartite,
            "is_planar": self.is_planar,
            "is_outerplanar": self.is_outerplanar,
            "domination_number": enc(self.domination_number),
        }


def property_report(g, domination_cap=DOMINATION_CAP):
    """Compute the full invariant summary for one graph.

    The domination number is reported as the string ``"skipped"`` when the
    graph exceeds the exact-search cap; every other field is always exact.
    """
    degs = g.degrees()
    connected, diameter = connectivity(g)
    try:
        gamma = domination_number(g, cap=domination_cap)
    except CapExceeded:
        gamma = "skipped"
    return PropertyReport(
        vertex_count=g.n,
        edge_count=g.edge_count(),
        min_degree=min(degs),
        max_degree=max(degs),
        degree_sequence=tuple(sorted(degs, reverse=True)),
        is_connected=connected,
        diameter=diameter,
        girth=girth(g),
        is_regular=is_regular(g),
        is_eulerian=is_eulerian(g),
        is_hamiltonian=is_hamiltonian(g),
        is_complete=is_complete(g),
        is_complete_bipartite=is_complete_bipartite(g),
        is_planar=is_planar(g),
        is_outerplanar=is_outerplanar(g),
        domination_number=gamma,
    )
