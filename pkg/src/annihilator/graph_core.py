"""Immutable simple-graph type, graph6/edge-list codecs, and structural helpers.

Vertices are always the integers ``0..n-1``.  Adjacency is stored as one
bitmask per vertex, so neighbourhood algebra, independence checks and the
exact solvers built on top all reduce to integer operations.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Optional


class GraphFormatError(ValueError):
    """Raised when graph6 or edge-list input cannot be decoded."""


def _iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable undirected simple graph on vertices ``0..n-1``.

    Self-loops are rejected and duplicate edges are collapsed.  Instances
    are safe to share across threads or processes; every operation in this
    package returns a new graph instead of mutating.
    """

    __slots__ = ("n", "_adj", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        masks = [0] * n
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not masks[u] >> v & 1:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
                m += 1
        self.n = n
        self._adj = tuple(masks)
        self._m = m

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> "Graph":
        """Build a graph from per-vertex adjacency bitmasks (trusted input)."""
        g = object.__new__(cls)
        g.n = n
        g._adj = tuple(masks)
        g._m = sum(mask.bit_count() for mask in g._adj) // 2
        return g

    @property
    def m(self) -> int:
        """Number of edges."""
        return self._m

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def adjacency_mask(self, v: int) -> int:
        """Bitmask of the neighbours of ``v``."""
        return self._adj[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_iter_bits(self._adj[v]))

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges as pairs ``(u, v)`` with ``u < v``, in ascending order."""
        for u in range(self.n):
            higher = self._adj[u] >> (u + 1) << (u + 1)
            for v in _iter_bits(higher):
                yield (u, v)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._adj == other._adj
        )

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self._m})"


# ---------------------------------------------------------------------------
# graph6 codec
#
# Printable characters 63..126 carry six bits each.  The size is one byte
# for n <= 62, '~' plus three bytes for n <= 258047 and '~~' plus six bytes
# beyond that.  Edge bits run over the upper triangle column by column:
# (0,1), (0,2), (1,2), (0,3), ...
# ---------------------------------------------------------------------------

_G6_MAX_N = 1 << 18


def parse_graph6(text: str) -> Graph:
    """Decode a single graph6 string (header-free form)."""
    data = text.rstrip("\r\n")
    if not data:
        raise GraphFormatError("empty graph6 input")
    for offset, ch in enumerate(data):
        code = ord(ch)
        if not 63 <= code <= 126:
            raise GraphFormatError(
                f"byte offset {offset}: character {ch!r} outside graph6 range 63..126"
            )
    values = [ord(ch) - 63 for ch in data]
    n, pos = _decode_size(values)
    if n > _G6_MAX_N:
        raise GraphFormatError(f"vertex count {n} exceeds supported maximum {_G6_MAX_N}")

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(values) - pos != nbytes:
        raise GraphFormatError(
            f"byte offset {pos}: expected {nbytes} data bytes for n={n}, "
            f"found {len(values) - pos}"
        )

    masks = [0] * n
    bit_index = 0
    u, v = 0, 1
    for k in range(pos, len(values)):
        group = values[k]
        for shift in (5, 4, 3, 2, 1, 0):
            if bit_index >= nbits:
                if group >> shift & 1:
                    raise GraphFormatError(
                        f"byte offset {k}: nonzero padding bit after edge data"
                    )
                continue
            if group >> shift & 1:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
            bit_index += 1
            u += 1
            if u == v:
                u, v = 0, v + 1
    return Graph.from_masks(n, masks)


def _decode_size(values: list[int]) -> tuple[int, int]:
    """Return (n, index of first data byte) from 6-bit value list."""
    if values[0] != 63:
        return values[0], 1
    if len(values) >= 2 and values[1] == 63:
        if len(values) < 8:
            raise GraphFormatError("byte offset 1: truncated 8-byte size header")
        n = 0
        for value in values[2:8]:
            n = n << 6 | value
        if n < 258048:
            raise GraphFormatError("byte offset 1: over-long size header")
        return n, 8
    if len(values) < 4:
        raise GraphFormatError("byte offset 0: truncated 4-byte size header")
    n = values[1] << 12 | values[2] << 6 | values[3]
    if n < 63:
        raise GraphFormatError("byte offset 0: over-long size header")
    return n, 4


def encode_graph6(g: Graph) -> str:
    """Encode a labeled graph in graph6 (inverse of :func:`parse_graph6`)."""
    n = g.n
    if n <= 62:
        out = [n + 63]
    elif n <= 258047:
        out = [126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]
    else:
        out = [126, 126]
        out.extend((n >> shift & 63) + 63 for shift in (30, 24, 18, 12, 6, 0))
    group = 0
    filled = 0
    for v in range(1, n):
        col = g.adjacency_mask(v)
        for u in range(v):
            group = group << 1 | (col >> u & 1)
            filled += 1
            if filled == 6:
                out.append(group + 63)
                group, filled = 0, 0
    if filled:
        out.append((group << (6 - filled)) + 63)
    return "".join(chr(code) for code in out)


# ---------------------------------------------------------------------------
# Edge-list text format: first line "n <count>", then one "u v" per line.
# ---------------------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse the plain edge-list format; duplicate edges are collapsed."""
    lines = text.splitlines()
    header_seen = False
    n = 0
    edges = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        tokens = line.split()
        if not header_seen:
            if len(tokens) != 2 or tokens[0] != "n":
                raise GraphFormatError(f"line {lineno}: expected header 'n <count>'")
            try:
                n = int(tokens[1])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: unparseable vertex count {tokens[1]!r}") from None
            if n < 0:
                raise GraphFormatError(f"line {lineno}: negative vertex count")
            header_seen = True
            continue
        if len(tokens) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: unparseable vertex token in {line!r}") from None
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"line {lineno}: vertex index out of range 0..{n - 1}")
        edges.append((u, v))
    if not header_seen:
        raise GraphFormatError("line 1: missing header 'n <count>'")
    return Graph(n, edges)


def encode_edge_list(g: Graph) -> str:
    """Serialize a graph in the edge-list format accepted by :func:`parse_edge_list`."""
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Structural helpers
# ---------------------------------------------------------------------------


def degree_sequence(g: Graph) -> list[int]:
    """Vertex degrees in non-increasing order."""
    return sorted((g.degree(v) for v in range(g.n)), reverse=True)


def _set_mask(g: Graph, s: Iterable[int]) -> int:
    mask = 0
    for v in s:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
        mask |= 1 << v
    return mask


def neighborhood(g: Graph, s: Iterable[int]) -> set[int]:
    """Vertices outside ``s`` adjacent to at least one member of ``s``."""
    mask = _set_mask(g, s)
    nbh = 0
    for v in _iter_bits(mask):
        nbh |= g.adjacency_mask(v)
    return set(_iter_bits(nbh & ~mask))


def is_independent_set(g: Graph, s: Iterable[int]) -> bool:
    """True when no two members of ``s`` are adjacent."""
    mask = _set_mask(g, s)
    for v in _iter_bits(mask):
        if g.adjacency_mask(v) & mask:
            return False
    return True


def connected_components(g: Graph) -> list[set[int]]:
    """Partition of the vertices into maximal connected sets, by lowest member."""
    seen = 0
    components = []
    for start in range(g.n):
        if seen >> start & 1:
            continue
        comp = 1 << start
        frontier = 1 << start
        while frontier:
            nxt = 0
            for v in _iter_bits(frontier):
                nxt |= g.adjacency_mask(v)
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        components.append(set(_iter_bits(comp)))
    return components


def is_connected(g: Graph) -> bool:
    """True for graphs with at most one connected component."""
    return len(connected_components(g)) <= 1


def is_bipartite(g: Graph) -> Optional[list[int]]:
    """A proper 2-coloring as a list of 0/1 per vertex, or None."""
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in _iter_bits(g.adjacency_mask(v)):
                if color[u] == -1:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    return color


def find_claw(g: Graph) -> Optional[tuple[int, tuple[int, int, int]]]:
    """First induced K_{1,3}: ``(center, (a, b, c))`` with leaves pairwise non-adjacent."""
    for center in range(g.n):
        nbrs = g.neighbors(center)
        if len(nbrs) < 3:
            continue
        for i, a in enumerate(nbrs):
            a_mask = g.adjacency_mask(a)
            for j in range(i + 1, len(nbrs)):
                b = nbrs[j]
                if a_mask >> b & 1:
                    continue
                ab_mask = a_mask | g.adjacency_mask(b)
                for k in range(j + 1, len(nbrs)):
                    c = nbrs[k]
                    if not ab_mask >> c & 1:
                        return center, (a, b, c)
    return None


def bipartite_double_cover(g: Graph) -> Graph:
    """Graph on two copies of V with (u0, v1) and (u1, v0) for every edge uv."""
    n = g.n
    masks = [0] * (2 * n)
    for v in range(n):
        adj = g.adjacency_mask(v)
        masks[v] = adj << n
        masks[v + n] = adj
    return Graph.from_masks(2 * n, masks)


def remove_vertices(g: Graph, s: Iterable[int]) -> Graph:
    """Induced subgraph on the complement of ``s``, re-indexed in order."""
    drop = _set_mask(g, s)
    keep = [v for v in range(g.n) if not drop >> v & 1]
    index = {v: i for i, v in enumerate(keep)}
    masks = [0] * len(keep)
    for v in keep:
        for u in _iter_bits(g.adjacency_mask(v) & ~drop):
            masks[index[v]] |= 1 << index[u]
    return Graph.from_masks(len(keep), masks)
