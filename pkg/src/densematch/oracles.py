"""Exact combinatorial oracles.

Matching adjacency scores, bad-quadruple counts, clique and
connected-matching numbers, and small-graph audits.  Everything here is
exhaustive or branch-and-bound grade: meant for desk-scale verification and
for scoring extractor output, not for large inputs.  The default size limits
keep each oracle under a few seconds on commodity hardware; pass ``limit``
explicitly to override.
"""

from dataclasses import dataclass

from .errors import InfeasibleError, SizeLimitError
from .graphs import Graph, Matching, complement, is_alpha_at_most_2, iter_bits

CM_LIMIT = 24
OMEGA_LIMIT = 40
MINMATCH_LIMIT = 14


def validate_matching(g: Graph, m: Matching) -> None:
    """Raise ValueError unless ``m`` is a matching of ``g``."""
    seen = 0
    for u, v in m.edges:
        if not (0 <= u < g.n and 0 <= v < g.n) or u == v:
            raise ValueError(f"invalid edge ({u}, {v})")
        if not g.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is not an edge of the graph")
        bits = (1 << u) | (1 << v)
        if seen & bits:
            raise ValueError(f"edge ({u}, {v}) reuses a matched vertex")
        seen |= bits


def nonadjacent_pairs(g: Graph, m: Matching) -> int:
    """Number of matching-edge pairs with no edge between their endpoint sets.

    Uses one OR-ed neighbourhood row per edge, then two bit probes per pair.
    """
    validate_matching(g, m)
    edges = m.edges
    unions = [g.rows[u] | g.rows[v] for u, v in edges]
    count = 0
    for i in range(len(edges)):
        ui = unions[i]
        for j in range(i + 1, len(edges)):
            a, b = edges[j]
            if not (((ui >> a) | (ui >> b)) & 1):
                count += 1
    return count


def nonadjacent_pairs_scan(g: Graph, m: Matching) -> int:
    """Same count by plain per-pair rescan of the four cross pairs.

    Kept as an independent implementation to cross-check the bitset path.
    """
    validate_matching(g, m)
    count = 0
    for i, (a, b) in enumerate(m.edges):
        for c, d in m.edges[i + 1:]:
            if not (g.has_edge(a, c) or g.has_edge(a, d)
                    or g.has_edge(b, c) or g.has_edge(b, d)):
                count += 1
    return count


def is_connected_matching(g: Graph, m: Matching) -> bool:
    """True iff every two matching edges have an edge between their endpoint sets."""
    return nonadjacent_pairs(g, m) == 0


@dataclass(frozen=True)
class BadQuadrupleCount:
    """Exact ordered bad-quadruple count plus the ``2b(k-1)**2`` cap.

    ``bound`` is None when the supplied ``k`` does not dominate the degree
    deficit (some vertex has degree below ``n - k``).
    """

    count: int
    bound: int | None


def count_bad_quadruples(g: Graph, k: int | None = None) -> BadQuadrupleCount:
    """Count ordered ``(u, v, w, z)`` with ``uv, wz`` edges and all four cross
    pairs ``uw, uz, vw, vz`` non-edges.

    Enumerates ordered non-adjacent ``(u, w)`` first and then the eligible
    ``v`` and ``z``, so the cost scales with the complement size instead of
    ``n**4``.  ``k`` defaults to ``n - min_degree``; with ``b`` the number of
    non-edges, the count is at most ``2*b*(k-1)**2`` whenever every degree is
    at least ``n - k``.  Every unordered pair of disjoint non-adjacent edges
    is counted exactly 8 times, so the count is always divisible by 8.
    """
    n = g.n
    if n == 0:
        return BadQuadrupleCount(0, 0)
    co = complement(g)
    b = co.m
    delta = min(row.bit_count() for row in g.rows)
    if k is None:
        k = n - delta
    bound = 2 * b * (k - 1) ** 2 if delta >= n - k else None
    rows = g.rows
    nadj = co.rows
    total = 0
    for u in range(n):
        nu = nadj[u]
        ru = rows[u]
        for w in iter_bits(nu):
            vmask = ru & nadj[w]
            if not vmask:
                continue
            base = rows[w] & nu
            for v in iter_bits(vmask):
                total += (base & nadj[v]).bit_count()
    return BadQuadrupleCount(total, bound)


def _max_clique(n: int, rows, cap: int | None = None) -> tuple[int, list[int]]:
    """Maximum clique by branch and bound with a greedy colouring bound.

    A clique takes at most one vertex per colour class of any proper
    colouring of the candidate set, so the class index of a vertex bounds
    every extension through it.  ``cap`` is an a-priori ceiling on the clique
    number; the search stops outright once a clique of that size is found.
    """
    best: list[int] = []
    if n == 0:
        return 0, best

    def expand(chosen: list[int], cand: int):
        nonlocal best
        if cap is not None and len(best) >= cap:
            return
        order: list[int] = []
        limits: list[int] = []
        colour = 0
        rest = cand
        while rest:
            colour += 1
            avail = rest
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                avail = (avail ^ low) & ~rows[v]
                rest ^= low
                order.append(v)
                limits.append(colour)
        for i in range(len(order) - 1, -1, -1):
            if len(chosen) + limits[i] <= len(best):
                return
            v = order[i]
            chosen.append(v)
            sub = cand & rows[v]
            if sub:
                expand(chosen, sub)
            elif len(chosen) > len(best):
                best = chosen.copy()
            chosen.pop()
            cand ^= 1 << v

    expand([], (1 << n) - 1)
    return len(best), best


def clique_number(g: Graph, limit: int = OMEGA_LIMIT) -> int:
    """Exact clique number by bitset branch and bound."""
    if g.n > limit:
        raise SizeLimitError(f"graph order {g.n} exceeds clique-number limit {limit}")
    size, _ = _max_clique(g.n, list(g.rows))
    return size


def _compatibility_rows(g: Graph, edges) -> list[int]:
    """Edge-compatibility bit rows: edges are compatible when they share no
    endpoint and some graph edge joins their endpoint sets."""
    unions = [g.rows[u] | g.rows[v] for u, v in edges]
    ends = [(1 << u) | (1 << v) for u, v in edges]
    compat = [0] * len(edges)
    for i in range(len(edges)):
        for j in range(i + 1, len(edges)):
            if ends[i] & ends[j]:
                continue
            if unions[i] & ends[j]:
                compat[i] |= 1 << j
                compat[j] |= 1 << i
    return compat


def connected_matching_number(g: Graph, limit: int = CM_LIMIT) -> int:
    """Largest size of a matching whose edge pairs are all endpoint-adjacent.

    A connected matching is exactly a clique of the edge-compatibility graph,
    so the clique engine does the search, with the vertex budget ``n // 2``
    as a hard ceiling (no matching is bigger).  Candidate edges are ordered
    by degree sum (descending), which affects speed only.
    """
    if g.n > limit:
        raise SizeLimitError(f"graph order {g.n} exceeds connected-matching limit {limit}")
    edges = sorted(g.edges(), key=lambda e: -(g.degree(e[0]) + g.degree(e[1])))
    if not edges:
        return 0
    size, _ = _max_clique(len(edges), _compatibility_rows(g, edges), cap=g.n // 2)
    return size


def min_nonadjacent_matching(g: Graph, t: int, limit: int = MINMATCH_LIMIT) -> tuple[Matching, int]:
    """Exhaustive minimum of ``nonadjacent_pairs`` over all size-``t`` matchings.

    Depth-first over index-increasing edge choices; a branch dies as soon as
    its partial score reaches the incumbent, since adding edges never lowers
    the count.
    """
    if g.n > limit:
        raise SizeLimitError(f"graph order {g.n} exceeds exact-minimum limit {limit}")
    if t < 1:
        raise ValueError("t must be at least 1")
    edges = list(g.edges())
    unions = [g.rows[u] | g.rows[v] for u, v in edges]
    ends = [(1 << u) | (1 << v) for u, v in edges]
    best_count: int | None = None
    best_edges: list | None = None
    chosen: list[int] = []

    def dfs(start: int, used: int, cost: int):
        nonlocal best_count, best_edges
        if len(chosen) == t:
            best_count = cost
            best_edges = [edges[i] for i in chosen]
            return
        need = t - len(chosen)
        for i in range(start, len(edges) - need + 1):
            if ends[i] & used:
                continue
            added = cost
            for j in chosen:
                if not (unions[j] & ends[i]):
                    added += 1
            if best_count is not None and added >= best_count:
                continue
            chosen.append(i)
            dfs(i + 1, used | ends[i], added)
            chosen.pop()
            if best_count == 0:
                return

    dfs(0, 0, 0)
    if best_edges is None:
        raise InfeasibleError(f"graph has no matching of size {t}")
    return Matching.from_pairs(best_edges), best_count


def _max_bipartite_matching(g: Graph, left, right) -> dict[int, int]:
    """Maximum matching between ``left`` and ``right`` by augmenting paths."""
    right_mask = 0
    for v in right:
        right_mask |= 1 << v
    adj = {u: g.rows[u] & right_mask for u in left}
    owner: dict[int, int] = {}

    def try_augment(u: int, seen: set[int]) -> bool:
        for v in iter_bits(adj[u]):
            if v in seen:
                continue
            seen.add(v)
            if v not in owner or try_augment(owner[v], seen):
                owner[v] = u
                return True
        return False

    for u in left:
        try_augment(u, set())
    return {u: v for v, u in owner.items()}


def matching_from_clique(g: Graph, clique_a) -> Matching:
    """Connected matching built from a clique.

    Takes a maximum matching between the clique and the rest of the graph,
    then pairs leftover clique vertices among themselves.  Every edge keeps
    an endpoint inside the clique, so any two edges are joined through it
    and the result is connected.
    """
    a = sorted(set(clique_a))
    for u in a:
        if not 0 <= u < g.n:
            raise ValueError(f"vertex {u} outside 0..{g.n - 1}")
    for i, u in enumerate(a):
        for v in a[i + 1:]:
            if not g.has_edge(u, v):
                raise ValueError(f"vertices {u} and {v} are not adjacent; not a clique")
    in_a = set(a)
    b = [v for v in range(g.n) if v not in in_a]
    match_of = _max_bipartite_matching(g, a, b)
    pairs = [(u, match_of[u]) for u in a if u in match_of]
    leftover = [u for u in a if u not in match_of]
    pairs.extend(zip(leftover[0::2], leftover[1::2]))
    return Matching.from_pairs(pairs)


def clique_bound_audit(g: Graph, t: int) -> bool:
    """Single-instance audit that the clique number is at most the
    connected-matching number under the premises.

    Premises: the largest independent set has size exactly 2, the order is
    at least ``4t - 1``, and the connected-matching number is at most
    ``t - 1``.  Returns True when a premise fails (vacuous) or the
    conclusion holds.  A False is a defect somewhere, not a discovery.
    """
    if t < 1:
        raise ValueError("t must be at least 1")
    alpha_is_two = is_alpha_at_most_2(g) and g.m < g.n * (g.n - 1) // 2
    if not alpha_is_two or g.n < 4 * t - 1:
        return True
    cm = connected_matching_number(g)
    if cm > t - 1:
        return True
    return clique_number(g) <= cm
