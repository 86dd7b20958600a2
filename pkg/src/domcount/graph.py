"""Simple undirected graphs stored as closed-neighborhood bitmask rows.

Row v is the bitmask of N[v] = {v} union neighbors(v), i.e. the adjacency
matrix with an all-ones diagonal.  A vertex set S dominates the graph exactly
when the union of its rows covers every vertex, which turns domination checks
into a handful of word-wide OR/AND operations.

Two views of the same rows are kept: a packed (n, W) uint64 numpy array for
the jitted kernels (vertex 64*w + j lives at bit j of word w) and lazily
built Python integers for the high-level API, where arbitrary-precision
bit tricks are cheap and readable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

MAX_VERTICES = 4096

_WORD_BITS = 64


def words_needed(n: int) -> int:
    return (n + _WORD_BITS - 1) // _WORD_BITS


@dataclass(frozen=True)
class VertexSet:
    """Immutable set of vertex indices backed by a single bitmask."""

    bits: int = 0

    @classmethod
    def of(cls, *vertices: int) -> "VertexSet":
        return cls.from_iterable(vertices)

    @classmethod
    def from_iterable(cls, vertices: Iterable[int]) -> "VertexSet":
        bits = 0
        for v in vertices:
            if v < 0:
                raise ValueError(f"vertex indices must be >= 0, got {v}")
            bits |= 1 << v
        return cls(bits)

    def members(self) -> Iterator[int]:
        m = self.bits
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, v: int) -> bool:
        return v >= 0 and (self.bits >> v) & 1 == 1

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.bits | other.bits)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.bits & other.bits)


@dataclass(frozen=True)
class RowZeroProfile:
    """Per-row counts of absent closed-neighborhood entries.

    zeros_per_row[v] counts vertices outside N[v]; z_max is the largest such
    count and argmax the lowest row attaining it.
    """

    zeros_per_row: tuple[int, ...]
    z_max: int
    argmax: int


class Graph:
    """Immutable simple graph on vertices 0..n-1."""

    __slots__ = ("n", "words", "_rows", "_full", "_edge_count", "_sizes")

    def __init__(self, n: int, words: np.ndarray):
        # Internal constructor: `words` must already be valid packed rows.
        # Build graphs through build_graph / from_adjacency / parse_edge_list.
        self.n = n
        words.setflags(write=False)
        self.words = words
        self._rows: tuple[int, ...] | None = None
        self._full: int | None = None
        self._edge_count: int | None = None
        self._sizes: tuple[int, ...] | None = None

    @classmethod
    def from_adjacency(cls, adj: np.ndarray) -> "Graph":
        """Build from a boolean adjacency matrix (diagonal ignored)."""
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise ValueError(f"adjacency matrix must be square, got shape {adj.shape}")
        n = int(adj.shape[0])
        _check_vertex_count(n)
        closed = adj.astype(bool).copy()
        if not np.array_equal(closed, closed.T):
            raise ValueError("adjacency matrix must be symmetric")
        np.fill_diagonal(closed, True)
        return cls(n, _pack_rows(closed))

    @property
    def rows(self) -> tuple[int, ...]:
        """Closed-neighborhood bitmasks as Python integers."""
        if self._rows is None:
            self._rows = tuple(_words_to_int(self.words[v]) for v in range(self.n))
        return self._rows

    @property
    def full_mask(self) -> int:
        if self._full is None:
            self._full = (1 << self.n) - 1
        return self._full

    @property
    def full_words(self) -> np.ndarray:
        """All-vertices mask in packed form, for the kernels."""
        w = words_needed(self.n)
        full = np.zeros(w, dtype=np.uint64)
        full[: self.n // _WORD_BITS] = np.uint64(0xFFFFFFFFFFFFFFFF)
        rem = self.n % _WORD_BITS
        if rem:
            full[-1] = np.uint64((1 << rem) - 1)
        return full

    @property
    def neighborhood_sizes(self) -> tuple[int, ...]:
        """|N[v]| for each vertex (degree + 1)."""
        if self._sizes is None:
            self._sizes = tuple(r.bit_count() for r in self.rows)
        return self._sizes

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.neighborhood_sizes[v] - 1

    @property
    def edge_count(self) -> int:
        if self._edge_count is None:
            self._edge_count = (sum(self.neighborhood_sizes) - self.n) // 2
        return self._edge_count

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return u != v and (self.rows[u] >> v) & 1 == 1

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) pairs with u < v, in lexicographic order."""
        for u in range(self.n):
            m = self.rows[u] >> (u + 1)
            base = u + 1
            while m:
                low = m & -m
                yield (u, base + low.bit_length() - 1)
                m ^= low

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for n={self.n}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.words, other.words)

    def __hash__(self) -> int:
        return hash((self.n, self.words.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count})"


def _check_vertex_count(n: int) -> None:
    if not 1 <= n <= MAX_VERTICES:
        raise ValueError(f"vertex count must be in [1, {MAX_VERTICES}], got {n}")


def _pack_rows(closed: np.ndarray) -> np.ndarray:
    """Pack an (n, n) boolean closed-neighborhood matrix into (n, W) uint64."""
    n = closed.shape[0]
    w = words_needed(n)
    packed = np.packbits(closed, axis=1, bitorder="little")
    pad = w * 8 - packed.shape[1]
    if pad:
        packed = np.pad(packed, ((0, 0), (0, pad)))
    # Assemble words from bytes explicitly so the layout is endian-independent.
    by = packed.reshape(n, w, 8).astype(np.uint64)
    shifts = (np.arange(8, dtype=np.uint64) * np.uint64(8))[np.newaxis, np.newaxis, :]
    return (by << shifts).sum(axis=2, dtype=np.uint64)


def _words_to_int(row: np.ndarray) -> int:
    out = 0
    for w in range(row.shape[0] - 1, -1, -1):
        out = (out << _WORD_BITS) | int(row[w])
    return out


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list.

    Rejects self-loops and out-of-range endpoints; duplicate edges collapse.
    """
    _check_vertex_count(n)
    closed = np.zeros((n, n), dtype=bool)
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop ({u}, {v}) is not allowed in a simple graph")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        closed[u, v] = True
        closed[v, u] = True
    np.fill_diagonal(closed, True)
    return Graph(n, _pack_rows(closed))


def closed_neighborhood(g: Graph, v: int) -> VertexSet:
    """N[v]: the vertex v together with its neighbors."""
    g._check_vertex(v)
    return VertexSet(g.rows[v])


def _coerce_bits(g: Graph, s: "VertexSet | Iterable[int]") -> int:
    bits = s.bits if isinstance(s, VertexSet) else VertexSet.from_iterable(s).bits
    if bits >> g.n:
        raise ValueError(f"vertex set contains indices >= n={g.n}")
    return bits


def is_dominating(g: Graph, s: "VertexSet | Iterable[int]") -> bool:
    """True when every vertex is in s or adjacent to a member of s."""
    bits = _coerce_bits(g, s)
    full = g.full_mask
    covered = 0
    rows = g.rows
    m = bits
    while m:
        low = m & -m
        covered |= rows[low.bit_length() - 1]
        if covered == full:
            return True
        m ^= low
    return covered == full


def row_zero_profile(g: Graph) -> RowZeroProfile:
    """Count absent entries per closed-neighborhood row."""
    zeros = tuple(g.n - size for size in g.neighborhood_sizes)
    z_max = max(zeros)
    return RowZeroProfile(zeros_per_row=zeros, z_max=z_max, argmax=zeros.index(z_max))


def to_edge_list(g: Graph) -> str:
    """Serialize to the text format: header "n m", then one "u v" line per edge.

    Edges are emitted sorted with u < v, so the output is canonical.
    """
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse the text format accepted by to_edge_list.

    Lines starting with '#' and blank lines are ignored.  The declared edge
    count must match the number of edge lines.
    """
    data: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        data.append(line)
    if not data:
        raise ValueError("empty graph file: expected a header line 'n m'")
    header = data[0].split()
    if len(header) != 2:
        raise ValueError(f"malformed header {data[0]!r}: expected 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise ValueError(f"malformed header {data[0]!r}: expected two integers") from None
    if m < 0:
        raise ValueError(f"edge count must be >= 0, got {m}")
    if len(data) - 1 != m:
        raise ValueError(f"header declares {m} edges but file has {len(data) - 1} edge lines")
    edges = []
    for line in data[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"malformed edge line {line!r}: expected 'u v'")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ValueError(f"malformed edge line {line!r}: expected two integers") from None
    return build_graph(n, edges)


def write_graph(g: Graph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(to_edge_list(g))


def read_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def complete_graph(n: int) -> Graph:
    _check_vertex_count(n)
    return Graph(n, _pack_rows(np.ones((n, n), dtype=bool)))


def empty_graph(n: int) -> Graph:
    _check_vertex_count(n)
    closed = np.zeros((n, n), dtype=bool)
    np.fill_diagonal(closed, True)
    return Graph(n, _pack_rows(closed))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    _check_vertex_count(n)
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(n: int) -> Graph:
    """Center vertex 0 joined to all others."""
    _check_vertex_count(n)
    return build_graph(n, [(0, i) for i in range(1, n)])


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient; 0 outside the valid range."""
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)
