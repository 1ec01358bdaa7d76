"""Simple undirected graphs on at most 64 vertices, stored as adjacency bit masks.

Vertex sets are plain ``int`` bit masks: vertex ``v`` is a member iff bit ``v``
is set.  :class:`Graph` values are immutable; use :class:`GraphBuilder` (or the
functional :func:`add_edge`) to build them.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 64
GRAPH6_MAX_ORDER = 62


class GraphError(ValueError):
    """Base class for all graph-construction and parsing errors."""


class OrderOutOfRange(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class LoopRejected(GraphError):
    pass


class SetOutOfRange(GraphError):
    pass


class OverlappingSets(GraphError):
    pass


class Graph6Error(GraphError):
    """Malformed graph6 input; ``kind`` names the failure."""

    def __init__(self, kind: str, detail: str = ""):
        self.kind = kind
        super().__init__(f"{kind}: {detail}" if detail else kind)


def popcount(x: int) -> int:
    return x.bit_count()


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph; ``adj[v]`` is the neighbourhood mask of ``v``."""

    order: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.order <= MAX_ORDER:
            raise OrderOutOfRange(f"order {self.order} not in [0, {MAX_ORDER}]")
        if len(self.adj) != self.order:
            raise GraphError("adjacency row count does not match order")

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.order):
            for v in iter_bits(self.adj[u] >> (u + 1)):
                yield u, u + 1 + v

    def check_invariants(self) -> None:
        full = self.full_mask
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {v} has bits beyond order")
            if row >> v & 1:
                raise GraphError(f"loop at {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric pair ({u},{v})")

    def __repr__(self) -> str:
        return f"Graph({to_edge_list(self)!r})"


class GraphBuilder:
    """Mutable adjacency rows; call :meth:`build` to freeze."""

    def __init__(self, n: int):
        if not 0 <= n <= MAX_ORDER:
            raise OrderOutOfRange(f"order {n} not in [0, {MAX_ORDER}]")
        self.order = n
        self.adj = [0] * n

    def add_edge(self, u: int, v: int) -> "GraphBuilder":
        _check_vertex(self.order, u)
        _check_vertex(self.order, v)
        if u == v:
            raise LoopRejected(f"loop at vertex {u}")
        self.adj[u] |= 1 << v
        self.adj[v] |= 1 << u
        return self

    def add_edges(self, pairs: Iterable[tuple[int, int]]) -> "GraphBuilder":
        for u, v in pairs:
            self.add_edge(u, v)
        return self

    def build(self) -> Graph:
        return Graph(self.order, tuple(self.adj))


def _check_vertex(order: int, v: int) -> None:
    if not 0 <= v < order:
        raise VertexOutOfRange(f"vertex {v} not in [0, {order})")


def _check_set(G: Graph, S: int) -> None:
    if S < 0 or S & ~G.full_mask:
        raise SetOutOfRange(f"vertex set {S:#x} exceeds order {G.order}")


def new_graph(n: int) -> Graph:
    if not 0 <= n <= MAX_ORDER:
        raise OrderOutOfRange(f"order {n} not in [0, {MAX_ORDER}]")
    return Graph(n, (0,) * n)


def from_edges(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    return GraphBuilder(n).add_edges(pairs).build()


def from_rows(rows: Sequence[int]) -> Graph:
    """Build from adjacency masks, validating symmetry and irreflexivity."""
    G = Graph(len(rows), tuple(rows))
    G.check_invariants()
    return G


def add_edge(G: Graph, u: int, v: int) -> Graph:
    """Return ``G`` plus edge ``uv`` (idempotent)."""
    _check_vertex(G.order, u)
    _check_vertex(G.order, v)
    if u == v:
        raise LoopRejected(f"loop at vertex {u}")
    adj = list(G.adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return Graph(G.order, tuple(adj))


def degree(G: Graph, v: int) -> int:
    _check_vertex(G.order, v)
    return G.adj[v].bit_count()


def neighbors(G: Graph, v: int) -> int:
    _check_vertex(G.order, v)
    return G.adj[v]


def closed_neighbors(G: Graph, v: int) -> int:
    _check_vertex(G.order, v)
    return G.adj[v] | (1 << v)


def degrees(G: Graph) -> list[int]:
    return [row.bit_count() for row in G.adj]


def edge_count(G: Graph) -> int:
    return sum(row.bit_count() for row in G.adj) // 2


def edges_inside(G: Graph, S: int) -> int:
    """Number of edges with both ends in ``S``."""
    total = 0
    for v in iter_bits(S):
        total += (G.adj[v] & S).bit_count()
    return total // 2


def edges_between(G: Graph, S: int, T: int) -> int:
    """``|[S, T]|`` for disjoint vertex sets ``S`` and ``T``."""
    _check_set(G, S)
    _check_set(G, T)
    if S & T:
        raise OverlappingSets("S and T share vertices")
    return sum((G.adj[v] & T).bit_count() for v in iter_bits(S))


def set_degree(G: Graph, S: int) -> int:
    """``deg(S) = |[S, V \\ S]|``."""
    return edges_between(G, S, G.full_mask & ~S)


def induced_subgraph(G: Graph, S: int) -> Graph:
    """Subgraph induced by ``S``, relabelled by ascending original index."""
    _check_set(G, S)
    verts = list(iter_bits(S))
    rows = []
    for v in verts:
        row = G.adj[v]
        r = 0
        for i, u in enumerate(verts):
            if row >> u & 1:
                r |= 1 << i
        rows.append(r)
    return Graph(len(verts), tuple(rows))


def delete_vertex(G: Graph, v: int) -> Graph:
    _check_vertex(G.order, v)
    return induced_subgraph(G, G.full_mask & ~(1 << v))


def complement(G: Graph) -> Graph:
    full = G.full_mask
    return Graph(G.order, tuple(full & ~row & ~(1 << v) for v, row in enumerate(G.adj)))


def relabel(G: Graph, perm: Sequence[int]) -> Graph:
    """Graph in which old vertex ``v`` becomes ``perm[v]``."""
    rows = [0] * G.order
    for v, row in enumerate(G.adj):
        r = 0
        for u in iter_bits(row):
            r |= 1 << perm[u]
        rows[perm[v]] = r
    return Graph(G.order, tuple(rows))


def append_vertex(G: Graph, nbrs: int) -> Graph:
    """Add vertex ``G.order`` adjacent to the vertices of ``nbrs``."""
    n = G.order
    if n >= MAX_ORDER:
        raise OrderOutOfRange("cannot grow beyond 64 vertices")
    _check_set(G, nbrs)
    bit = 1 << n
    rows = [row | bit if nbrs >> v & 1 else row for v, row in enumerate(G.adj)]
    rows.append(nbrs)
    return Graph(n + 1, tuple(rows))


def is_connected(G: Graph, within: int | None = None) -> bool:
    """Connectivity of ``G[within]`` (whole graph by default); empty counts as connected."""
    S = G.full_mask if within is None else within
    if not S:
        return True
    seen = S & -S
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= G.adj[v]
        nxt &= S & ~seen
        seen |= nxt
        frontier = nxt
    return seen == S


# ---------------------------------------------------------------- graph6


def _upper_bits(G: Graph) -> Iterator[int]:
    adj = G.adj
    for j in range(1, G.order):
        row = adj[j]
        for i in range(j):
            yield row >> i & 1


def encode_graph6(G: Graph) -> bytes:
    """Encode with the single-byte header form (order <= 62)."""
    n = G.order
    if n > GRAPH6_MAX_ORDER:
        raise Graph6Error("order-too-large", f"order {n} > {GRAPH6_MAX_ORDER}")
    out = bytearray([n + 63])
    acc = 0
    nbits = 0
    for b in _upper_bits(G):
        acc = acc << 1 | b
        nbits += 1
        if nbits == 6:
            out.append(acc + 63)
            acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def parse_graph6(text: bytes | str) -> Graph:
    if isinstance(text, str):
        text = text.encode("ascii")
    text = text.strip()
    if text.startswith(b">>graph6<<"):
        text = text[10:]
    if not text:
        raise Graph6Error("malformed-header", "empty input")
    head = text[0]
    if head == 126:
        raise Graph6Error("order-too-large", "extended header forms are not supported")
    if not 63 <= head <= 126:
        raise Graph6Error("malformed-header", f"byte {head}")
    n = head - 63
    nbits = n * (n - 1) // 2
    ngroups = (nbits + 5) // 6
    body = text[1:]
    if len(body) < ngroups:
        raise Graph6Error("truncated-payload", f"need {ngroups} bytes, got {len(body)}")
    if len(body) > ngroups:
        raise Graph6Error("malformed-header", "trailing bytes after payload")
    vals = []
    for c in body:
        if not 63 <= c <= 126:
            raise Graph6Error("malformed-header", f"payload byte {c} out of range")
        vals.append(c - 63)
    pad = ngroups * 6 - nbits
    if pad and vals[-1] & ((1 << pad) - 1):
        raise Graph6Error("nonzero-padding")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if vals[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


def read_graph6_stream(lines: Iterable[bytes | str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line:
            yield parse_graph6(line)


# ---------------------------------------------------------------- edge list text


def to_edge_list(G: Graph) -> str:
    """Plain text form ``"n; u-v,u-v,..."``."""
    return f"{G.order}; " + ",".join(f"{u}-{v}" for u, v in G.edges())


def parse_edge_list(text: str) -> Graph:
    head, sep, body = text.partition(";")
    if not sep:
        raise GraphError("edge list must look like 'n; u-v,u-v,...'")
    try:
        n = int(head)
    except ValueError:
        raise GraphError(f"bad order {head.strip()!r}") from None
    pairs = []
    for tok in body.split(","):
        tok = tok.strip()
        if not tok:
            continue
        a, dash, b = tok.partition("-")
        if not dash:
            raise GraphError(f"bad edge token {tok!r}")
        pairs.append((int(a), int(b)))
    return from_edges(n, pairs)


def parse_graph(text: str) -> Graph:
    """Accept either graph6 or the edge-list form."""
    return parse_edge_list(text) if ";" in text else parse_graph6(text)


def k_subsets(S: int, k: int) -> Iterator[int]:
    """All ``k``-element sub-masks of ``S`` in lexicographic order of sorted members."""
    verts = list(iter_bits(S))
    for combo in combinations(verts, k):
        yield mask_of(combo)
