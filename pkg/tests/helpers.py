"""Brute-force reference oracles and instance factories for the test suite.

Everything here is deliberately naive: plain loops over tuples and subsets.
These are the independent yardsticks the fast implementations get checked
against, so they must not share code with the package internals.
"""

import itertools

import numpy as np

from densematch import (Graph, Matching, c5_blowup_complement,
                        complement_of_random_triangle_free, complete_graph,
                        from_edge_list, two_cliques)


def brute_alpha_at_most_2(g: Graph) -> bool:
    """O(n^3) scan for an independent triple."""
    for a, b, c in itertools.combinations(range(g.n), 3):
        if not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c)):
            return False
    return True


def brute_clique_number(g: Graph) -> int:
    best = 0
    for r in range(g.n, 0, -1):
        for sub in itertools.combinations(range(g.n), r):
            if all(g.has_edge(a, b) for a, b in itertools.combinations(sub, 2)):
                return r
    return best


def all_pairings(items):
    """Yield every partition of ``items`` into pairs, as sorted pair tuples."""
    items = list(items)
    if not items:
        yield ()
        return
    first = items[0]
    for i in range(1, len(items)):
        a, b = first, items[i]
        pair = (a, b) if a < b else (b, a)
        rest = items[1:i] + items[i + 1:]
        for tail in all_pairings(rest):
            yield tuple(sorted((pair,) + tail))


def all_matchings(g: Graph, max_size: int | None = None):
    """Yield every matching of ``g`` (including the empty one) as edge tuples."""
    edges = list(g.edges())

    def rec(start, used, acc):
        yield tuple(acc)
        if max_size is not None and len(acc) == max_size:
            return
        for i in range(start, len(edges)):
            u, v = edges[i]
            bits = (1 << u) | (1 << v)
            if used & bits:
                continue
            acc.append(edges[i])
            yield from rec(i + 1, used | bits, acc)
            acc.pop()

    yield from rec(0, 0, [])


def count_nonadjacent_pairs_naive(g: Graph, edges) -> int:
    """Four-cross-pair scan over an edge collection (no bitsets)."""
    total = 0
    edges = list(edges)
    for i, (a, b) in enumerate(edges):
        for c, d in edges[i + 1:]:
            if len({a, b, c, d}) < 4:
                continue
            if not (g.has_edge(a, c) or g.has_edge(a, d)
                    or g.has_edge(b, c) or g.has_edge(b, d)):
                total += 1
    return total


def count_bad_quadruples_naive(g: Graph) -> int:
    """O(n^4) enumeration of ordered bad quadruples."""
    total = 0
    for u, v, w, z in itertools.permutations(range(g.n), 4):
        if (g.has_edge(u, v) and g.has_edge(w, z)
                and not g.has_edge(u, w) and not g.has_edge(u, z)
                and not g.has_edge(v, w) and not g.has_edge(v, z)):
            total += 1
    return total


def random_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return from_edge_list(n, edges)


def random_alpha2_graph(index: int, n_min: int = 4, n_max: int = 16) -> Graph:
    """Deterministic rotating mix of instance families with alpha <= 2."""
    rng = np.random.default_rng(1000 + index)
    n = int(rng.integers(n_min, n_max + 1))
    kind = index % 4
    if kind == 0:
        return complement_of_random_triangle_free(n, seed=index)
    if kind == 1:
        return two_cliques(max(1, n // 2))
    if kind == 2:
        base = max(n, 5)
        parts = tuple(1 + x for x in rng.multinomial(base - 5, [0.2] * 5))
        return c5_blowup_complement(parts)
    return complete_graph(n)


def random_matching_of(g: Graph, rng: np.random.Generator,
                       max_size: int | None = None) -> Matching:
    """Greedy matching built along a shuffled edge order."""
    edges = list(g.edges())
    used = 0
    picked = []
    for i in rng.permutation(len(edges)).tolist():
        u, v = edges[i]
        bits = (1 << u) | (1 << v)
        if used & bits:
            continue
        used |= bits
        picked.append(edges[i])
        if max_size is not None and len(picked) == max_size:
            break
    return Matching.from_pairs(picked)


def greedy_clique(g: Graph, rng: np.random.Generator) -> list[int]:
    """A (not necessarily maximum) clique grown from a random start."""
    if g.n == 0:
        return []
    order = rng.permutation(g.n).tolist()
    clique = [order[0]]
    for v in order[1:]:
        if all(g.has_edge(v, u) for u in clique):
            clique.append(v)
    return clique
