"""Seeded constructors for graphs whose independence number is at most 2.

Every generator is a pure function of its arguments: calling it twice with
the same inputs yields bitwise-identical adjacency rows.
"""

import numpy as np

from .graphs import Graph, MAX_VERTICES, graph_from_rows

_CHUNK = 1 << 20


def _check_n(n: int) -> None:
    if not 1 <= n <= MAX_VERTICES:
        raise ValueError(f"vertex count {n} outside [1, {MAX_VERTICES}]")


def complete_graph(n: int) -> Graph:
    """The complete graph on ``n`` vertices."""
    _check_n(n)
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)), n * (n - 1) // 2)


def two_cliques(s: int) -> Graph:
    """Two disjoint cliques of size ``s`` with no cross edges.

    The independence number is exactly 2 (one vertex per component), and the
    largest connected matching is markedly smaller than a perfect matching
    because cross pairs of edges have no edge between them.
    """
    _check_n(2 * s)
    mask_a = (1 << s) - 1
    mask_b = mask_a << s
    rows = [mask_a ^ (1 << v) for v in range(s)]
    rows += [mask_b ^ (1 << v) for v in range(s, 2 * s)]
    return Graph(2 * s, tuple(rows), s * (s - 1))


def c5_blowup_complement(part_sizes) -> Graph:
    """Complement of the 5-cycle blowup with the given part sizes.

    Vertex ``i`` of the 5-cycle becomes an independent set of
    ``part_sizes[i]`` vertices, with all edges between consecutive parts.
    The blowup is triangle-free, so the complement has independence number
    at most 2; part sizes are caller-chosen so experiments can sweep density
    deterministically.
    """
    sizes = [int(s) for s in part_sizes]
    if len(sizes) != 5:
        raise ValueError(f"need exactly 5 part sizes, got {len(sizes)}")
    if any(s < 1 for s in sizes):
        raise ValueError("every part size must be at least 1")
    n = sum(sizes)
    _check_n(n)
    offsets = [0]
    for s in sizes[:4]:
        offsets.append(offsets[-1] + s)
    part_masks = [((1 << sizes[i]) - 1) << offsets[i] for i in range(5)]
    full = (1 << n) - 1
    rows = []
    for i in range(5):
        blow_row = part_masks[(i - 1) % 5] | part_masks[(i + 1) % 5]
        for v in range(offsets[i], offsets[i] + sizes[i]):
            rows.append((full ^ blow_row) ^ (1 << v))
    return graph_from_rows(n, rows)


def complement_of_random_triangle_free(n: int, seed: int) -> Graph:
    """Complement of a maximal triangle-free graph grown in seeded random order.

    All candidate pairs are visited in a uniformly shuffled order; each is
    added unless it would close a triangle.  Visiting every pair makes the
    triangle-free graph maximal, so the complement is dense and has
    independence number at most 2.  Deterministic for fixed ``(n, seed)``.
    """
    _check_n(n)
    rng = np.random.default_rng(seed)
    rows = [0] * n
    total = n * (n - 1) // 2
    if total:
        order = rng.permutation(total)
        for start in range(0, total, _CHUNK):
            chunk = order[start:start + _CHUNK]
            us, vs = _decode_pair_indices(n, chunk)
            for u, v in zip(us.tolist(), vs.tolist()):
                if not rows[u] & rows[v]:
                    rows[u] |= 1 << v
                    rows[v] |= 1 << u
    full = (1 << n) - 1
    comp = [(full ^ row) ^ (1 << v) for v, row in enumerate(rows)]
    return graph_from_rows(n, comp)


def _decode_pair_indices(n: int, idx):
    """Map lexicographic pair indices to ``(u, v)`` arrays with ``u < v``.

    The pair ``(u, v)`` has index ``u*(2n-u-1)//2 + (v-u-1)``; the float
    inverse can land one off, so two integer correction passes follow.
    """
    b = 2 * n - 1
    u = ((b - np.sqrt(b * b - 8.0 * idx)) // 2).astype(np.int64)
    for _ in range(2):
        u = np.where(u * (b - u) // 2 > idx, u - 1, u)
        u = np.where((u + 1) * (b - u - 1) // 2 <= idx, u + 1, u)
    v = idx - u * (b - u) // 2 + u + 1
    return u, v
