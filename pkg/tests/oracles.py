"""Independent brute-force oracles the kernel tests compare against.

Plain recursive enumeration of simple paths and cycles, with no pruning
and no quotient reduction; only usable on small graphs.
"""

from __future__ import annotations

from itertools import permutations


def naive_paths_between(G, u, v, max_len):
    """All simple u,v-paths of length <= max_len, as vertex tuples."""
    out = []
    seen = {u}
    path = [u]

    def rec(w):
        if len(path) - 1 > max_len:
            return
        if w == v and len(path) > 1:
            out.append(tuple(path))
            return
        for x in G.neighbors(w):
            if x not in seen and (x == v or len(path) <= max_len):
                seen.add(x)
                path.append(x)
                rec(x)
                path.pop()
                seen.remove(x)

    rec(u)
    return out


def naive_path_lengths(G, u, v, max_len):
    return {len(p) - 1 for p in naive_paths_between(G, u, v, max_len)}


def naive_cycle_count(G, L):
    """Number of distinct L-cycles, by enumerating vertex sequences."""
    count = 0
    for combo in permutations(range(G.n), L):
        if combo[0] != min(combo):
            continue
        if combo[1] > combo[-1]:
            continue
        if all(G.has_edge(combo[i], combo[(i + 1) % L]) for i in range(L)):
            count += 1
    return count


def naive_has_cycle(G, L):
    return naive_cycle_count(G, L) > 0


def naive_odd_girth(G):
    for L in range(3, G.n + 1, 2):
        if naive_has_cycle(G, L):
            return L
    return None
