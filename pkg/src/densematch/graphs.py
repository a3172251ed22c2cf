"""Immutable simple graphs with bitset adjacency rows.

Vertices are the dense range ``0..n-1``.  Each adjacency row is a Python int
used as a bitset: bit ``v`` of ``rows[u]`` is set iff ``uv`` is an edge.  All
operations treat graphs as read-only values, so instances are safe to share
between threads.
"""

from dataclasses import dataclass
from pathlib import Path

MAX_VERTICES = 1 << 20


def iter_bits(x: int):
    """Yield the indices of the set bits of ``x`` in increasing order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: ``n`` vertices, symmetric loop-free bit rows."""

    n: int
    rows: tuple[int, ...]
    m: int

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside [0, {MAX_VERTICES}]")
        if len(self.rows) != self.n:
            raise ValueError("adjacency row count does not match vertex count")

    def has_edge(self, u: int, v: int) -> bool:
        return (self.rows[u] >> v) & 1 == 1

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def vertices(self) -> range:
        return range(self.n)

    def edges(self):
        """Yield the edges as ``(u, v)`` pairs with ``u < v``, sorted."""
        for u in range(self.n):
            high = self.rows[u] >> (u + 1)
            for off in iter_bits(high):
                yield u, u + 1 + off


@dataclass(frozen=True)
class Matching:
    """Pairwise vertex-disjoint edges, stored as sorted ``(u, v)`` pairs."""

    edges: tuple[tuple[int, int], ...]

    @classmethod
    def from_pairs(cls, pairs) -> "Matching":
        norm = sorted((u, v) if u < v else (v, u) for u, v in pairs)
        return cls(tuple(norm))

    @property
    def size(self) -> int:
        return len(self.edges)

    def vertex_set(self) -> set[int]:
        return {x for e in self.edges for x in e}


def graph_from_rows(n: int, rows) -> Graph:
    """Build a graph from prepared bitset rows.

    Rows must already be symmetric; only the cheap checks (loop bits, even
    total popcount) run here.  Generators use this to skip edge-list costs.
    """
    rows = tuple(rows)
    total = 0
    for v, row in enumerate(rows):
        if (row >> v) & 1:
            raise ValueError(f"row {v} carries a self-loop bit")
        total += row.bit_count()
    if total % 2:
        raise ValueError("rows are not symmetric (odd total popcount)")
    return Graph(n, rows, total // 2)


def from_edge_list(n: int, edges) -> Graph:
    """Build a graph on ``n`` vertices from an iterable of endpoint pairs.

    Duplicate edges collapse silently; self-loops and out-of-range endpoints
    are errors.
    """
    if not 0 <= n <= MAX_VERTICES:
        raise ValueError(f"vertex count {n} outside [0, {MAX_VERTICES}]")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    m = sum(row.bit_count() for row in rows) // 2
    return Graph(n, tuple(rows), m)


def complement(g: Graph) -> Graph:
    """Graph on the same vertices whose edges are exactly the non-edges."""
    full = (1 << g.n) - 1
    rows = tuple((full ^ row) ^ (1 << v) for v, row in enumerate(g.rows))
    return Graph(g.n, rows, g.n * (g.n - 1) // 2 - g.m)


def is_alpha_at_most_2(g: Graph) -> bool:
    """True iff no three vertices are pairwise non-adjacent.

    Equivalently the complement is triangle-free, so scan each complement
    edge for a common complement-neighbour via row intersections.
    """
    co = complement(g)
    for u in range(co.n):
        row_u = co.rows[u]
        high = row_u >> (u + 1)
        for off in iter_bits(high):
            if row_u & co.rows[u + 1 + off]:
                return False
    return True


def min_degree(g: Graph) -> int:
    if g.n < 1:
        raise ValueError("degree of an empty graph is undefined")
    return min(row.bit_count() for row in g.rows)


def max_degree(g: Graph) -> int:
    if g.n < 1:
        raise ValueError("degree of an empty graph is undefined")
    return max(row.bit_count() for row in g.rows)


def sets_adjacent(g: Graph, a, b) -> bool:
    """True iff some vertex of ``a`` is adjacent to some vertex of ``b``.

    The sets must be nonempty and disjoint.
    """
    sa, sb = set(a), set(b)
    if not sa or not sb:
        raise ValueError("sets_adjacent needs two nonempty sets")
    if sa & sb:
        raise ValueError(f"sets_adjacent needs disjoint sets, both contain {sorted(sa & sb)}")
    mask = 0
    for v in sb:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} outside 0..{g.n - 1}")
        mask |= 1 << v
    for u in sa:
        if not 0 <= u < g.n:
            raise ValueError(f"vertex {u} outside 0..{g.n - 1}")
        if g.rows[u] & mask:
            return True
    return False


def delete_vertex(g: Graph, v: int) -> Graph:
    """Remove vertex ``v``, remapping every id ``w > v`` to ``w - 1``."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} outside 0..{g.n - 1}")
    low_mask = (1 << v) - 1
    rows = []
    for u in range(g.n):
        if u == v:
            continue
        row = g.rows[u]
        rows.append((row & low_mask) | ((row >> (v + 1)) << v))
    return Graph(g.n - 1, tuple(rows), g.m - g.degree(v))


def format_edge_list(g: Graph) -> str:
    """Render the ``n m`` / ``u v`` edge-list text format."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format: header ``n m``, then ``m`` pairs ``u v``.

    Tokens are whitespace-separated; ``#`` starts a comment that runs to the
    end of the line.
    """
    tokens: list[str] = []
    for line in text.splitlines():
        tokens.extend(line.split("#", 1)[0].split())
    if len(tokens) < 2:
        raise ValueError("edge list needs a header line 'n m'")
    try:
        numbers = [int(tok) for tok in tokens]
    except ValueError:
        bad = next(tok for tok in tokens if not _is_int(tok))
        raise ValueError(f"edge list contains a non-integer token {bad!r}") from None
    n, m = numbers[0], numbers[1]
    body = numbers[2:]
    if len(body) != 2 * m:
        raise ValueError(f"header declares {m} edges but body has {len(body)} endpoints")
    return from_edge_list(n, list(zip(body[0::2], body[1::2])))


def _is_int(tok: str) -> bool:
    try:
        int(tok)
    except ValueError:
        return False
    return True


def read_edge_list(path) -> Graph:
    return parse_edge_list(Path(path).read_text())


def write_edge_list(g: Graph, path) -> None:
    Path(path).write_text(format_edge_list(g))
