"""Independent brute-force oracles used to cross-check library results.

Everything here deliberately avoids the code paths it validates: centralizers
and centers are found by scanning all elements, planarity by searching for a
forbidden subdivision, domination by trying every subset.
"""

from itertools import combinations


def brute_centralizer(L, x):
    """All elements commuting with x, by scanning the whole algebra."""
    zero = L.zero()
    return {y for y in L.enumerate_elements() if L.bracket(x, y) == zero}


def brute_center(L):
    zero = L.zero()
    out = set()
    for x in L.enumerate_elements():
        if all(L.bracket(x, L.basis_vector(i)) == zero for i in range(L.dim)):
            out.add(x)
    return out


def find_inverse(field, a):
    """Multiplicative inverse by exhaustive search."""
    for b in field.elements():
        if field.mul(a, b) == 1:
            return b
    return None


def gf4_mul(a, b):
    """Independent F_4 product: polynomial arithmetic mod t^2 + t + 1 over F_2.

    Codes are (hi << 1) | lo for the element hi*t + lo.
    """
    a0, a1 = a & 1, a >> 1
    b0, b1 = b & 1, b >> 1
    c0 = a0 & b0
    c1 = (a0 & b1) ^ (a1 & b0)
    c2 = a1 & b1
    # t^2 = t + 1
    return ((c1 ^ c2) << 1) | (c0 ^ c2)


def domination_bruteforce(g):
    """Minimum dominating set size by trying every subset, smallest first."""
    closed = [g.rows[v] | (1 << v) for v in range(g.n)]
    full = (1 << g.n) - 1
    for k in range(1, g.n + 1):
        for subset in combinations(range(g.n), k):
            covered = 0
            for v in subset:
                covered |= closed[v]
            if covered == full:
                return k
    return g.n


# -- Kuratowski subdivision search --------------------------------------------


def _disjoint_paths(g, pairs, banned, used):
    """Try to realize all (a, b) pairs as internally disjoint paths whose
    internal vertices avoid ``banned`` (branch vertices) and ``used``."""
    if not pairs:
        return True
    a, b = pairs[0]

    def dfs(v, interior):
        if g.has_edge(v, b):
            if _disjoint_paths(g, pairs[1:], banned, used | interior):
                return True
        for w in range(g.n):
            if w in banned or w in used or w in interior:
                continue
            if g.has_edge(v, w):
                if dfs(w, interior | {w}):
                    return True
        return False

    return dfs(a, set())


def has_k5_subdivision(g):
    for branch in combinations(range(g.n), 5):
        pairs = list(combinations(branch, 2))
        if _disjoint_paths(g, pairs, set(branch), set()):
            return True
    return False


def has_k33_subdivision(g):
    for six in combinations(range(g.n), 6):
        for left in combinations(six, 3):
            if six[0] not in left:
                continue  # fix the first vertex on one side to halve the work
            right = tuple(v for v in six if v not in left)
            pairs = [(a, b) for a in left for b in right]
            if _disjoint_paths(g, pairs, set(six), set()):
                return True
    return False


def planar_by_kuratowski(g):
    """Planarity decided by absence of K_5 and K_{3,3} subdivisions.

    Exponential; intended for graphs with at most ~10 vertices.
    """
    return not (has_k5_subdivision(g) or has_k33_subdivision(g))
