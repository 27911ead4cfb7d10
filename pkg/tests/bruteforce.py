"""Independent brute-force oracles for the search tests.

These never touch the library's solvers: plain subset scans over bitmask
adjacency, kept deliberately dumb so disagreement always indicts the fast
path.
"""

from itertools import combinations


def bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def brute_max_independent_set(adj):
    n = len(adj)
    best = 0
    for mask in range(1 << n):
        if mask.bit_count() <= best:
            continue
        if all(adj[v] & mask == 0 for v in bits(mask)):
            best = mask.bit_count()
    return best


def brute_max_clique_free(adj, s):
    """Largest subset whose induced subgraph has no (s+1)-clique."""
    n = len(adj)
    best = 0
    for mask in range(1 << n):
        if mask.bit_count() <= best:
            continue
        vertices = list(bits(mask))
        bad = False
        for combo in combinations(vertices, s + 1):
            if all(
                adj[u] >> v & 1
                for idx, u in enumerate(combo)
                for v in combo[idx + 1 :]
            ):
                bad = True
                break
        if not bad:
            best = mask.bit_count()
    return best


def _induced_bipartite(adj, mask):
    color = {}
    for start in bits(mask):
        if start in color:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            u = stack.pop()
            for w in bits(adj[u] & mask):
                if w not in color:
                    color[w] = color[u] ^ 1
                    stack.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def brute_max_induced_bipartite(adj):
    n = len(adj)
    best = 0
    for mask in range(1 << n):
        if mask.bit_count() <= best:
            continue
        if _induced_bipartite(adj, mask):
            best = mask.bit_count()
    return best
