"""Graph isomorphism and canonical forms via color refinement plus backtracking.

``canonical_certificate`` returns a byte string such that two graphs get the
same certificate exactly when they are isomorphic; it is the lexicographically
minimal adjacency encoding over all vertex orderings compatible with the
iterated-degree refinement, searched exhaustively with prefix pruning.
"""

from __future__ import annotations

from .errors import CapExceeded

ISO_CAP = 64


def refine_colors(g, colors=None):
    """Iterated neighborhood refinement; returns a stable vertex coloring.

    Colors are small integers, renumbered canonically by (old color,
    neighbor-color multiset) at every round, so they are isomorphism-invariant.
    """
    n = g.n
    colors = [0] * n if colors is None else list(colors)
    while True:
        signatures = []
        for v in range(n):
            neigh = sorted(colors[u] for u in g.neighbors(v))
            signatures.append((colors[v], tuple(neigh)))
        order = sorted(set(signatures))
        ranks = {sig: i for i, sig in enumerate(order)}
        new = [ranks[sig] for sig in signatures]
        if new == colors:
            return colors
        colors = new


def _partition_cells(colors):
    cells = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    return [cells[c] for c in sorted(cells)]


_CERT_CACHE = {}


def canonical_certificate(g):
    """Canonical byte-string form of a graph; equality iff isomorphism."""
    if g.n > ISO_CAP:
        raise CapExceeded(f"canonical form capped at {ISO_CAP} vertices")
    cached = _CERT_CACHE.get((g.n, g.rows))
    if cached is not None:
        return cached
    n = g.n
    if n == 0:
        return b"G0:"
    base = refine_colors(g)
    best = {"code": None}
    order = []
    placed_rows = []  # adjacency of each placed vertex to earlier ones, as ints

    def place(colors):
        depth = len(order)
        if depth == n:
            code = tuple(placed_rows)
            if best["code"] is None or code < best["code"]:
                best["code"] = code
            return
        cells = _partition_cells([colors[v] for v in range(n)])
        # choose the first cell (smallest color) containing an unplaced vertex
        target = None
        for cell in cells:
            free = [v for v in cell if v not in order]
            if free:
                target = free
                break
        for v in target:
            row = 0
            for i, u in enumerate(order):
                if g.has_edge(u, v):
                    row |= 1 << i
            # prefix pruning against the current best code
            if best["code"] is not None:
                prefix = tuple(placed_rows) + (row,)
                if prefix > best["code"][: depth + 1]:
                    continue
            order.append(v)
            placed_rows.append(row)
            # individualize v and re-refine
            refined = refine_colors(g, [c * 2 + (1 if u == v else 0) for u, c in enumerate(colors)])
            place(refined)
            order.pop()
            placed_rows.pop()

    place(base)
    body = ",".join(str(r) for r in best["code"])
    cert = f"G{n}:{body}".encode()
    if len(_CERT_CACHE) < 4096:
        _CERT_CACHE[(g.n, g.rows)] = cert
    return cert


def _screen_invariants(g):
    """Cheap invariants that split most non-isomorphic regular graphs:
    per-vertex triangle counts and complement component sizes."""
    n = g.n
    triangles = []
    for v in range(n):
        row = g.rows[v]
        t = 0
        rest = row
        while rest:
            u = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            t += (g.rows[u] & row).bit_count()
        triangles.append(t // 2)
    full = (1 << n) - 1
    comp_sizes = []
    seen = 0
    for s in range(n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            rest = frontier
            while rest:
                u = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                nxt |= (~g.rows[u] & full & ~(1 << u)) & ~comp
            comp |= nxt
            frontier = nxt
        seen |= comp
        comp_sizes.append(comp.bit_count())
    return tuple(sorted(triangles)), tuple(sorted(comp_sizes))


def isomorphism(g1, g2):
    """A vertex bijection preserving adjacency, or None.

    Screens on vertex count, edge count and the refined color histogram, then
    runs a backtracking match constrained by refinement colors.
    """
    if g1.n > ISO_CAP or g2.n > ISO_CAP:
        raise CapExceeded(f"isomorphism search capped at {ISO_CAP} vertices")
    if g1.n != g2.n or g1.edge_count() != g2.edge_count():
        return None
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return None
    if _screen_invariants(g1) != _screen_invariants(g2):
        return None
    c1 = refine_colors(g1)
    c2 = refine_colors(g2)
    if sorted(c1) != sorted(c2):
        return None
    n = g1.n
    # match most-constrained colors first: order g1 vertices by cell size
    cell_size = {}
    for c in c1:
        cell_size[c] = cell_size.get(c, 0) + 1
    order = sorted(range(n), key=lambda v: (cell_size[c1[v]], c1[v], v))
    mapping = [-1] * n
    used = [False] * n

    def match(k):
        if k == n:
            return True
        v = order[k]
        for w in range(n):
            if used[w] or c2[w] != c1[v]:
                continue
            ok = True
            for u in order[:k]:
                if g1.has_edge(v, u) != g2.has_edge(w, mapping[u]):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if match(k + 1):
                    return True
                mapping[v] = -1
                used[w] = False
        return False

    if match(0):
        return {v: mapping[v] for v in range(n)}
    return None


def graph_isomorphic(g1, g2):
    """(isomorphic, witness-or-None)."""
    witness = isomorphism(g1, g2)
    return witness is not None, witness
