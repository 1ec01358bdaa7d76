"""Graph families: cycles, complete graphs, joins, blow-ups and the Z_n family."""
from __future__ import annotations

from dataclasses import dataclass

from .graph import MAX_ORDER, Graph, GraphBuilder, GraphError, OrderOutOfRange, iter_bits


class OrderTooSmall(GraphError):
    pass


def edgeless_graph(n: int) -> Graph:
    return GraphBuilder(n).build()


def path_graph(n: int) -> Graph:
    return GraphBuilder(n).add_edges((i, i + 1) for i in range(n - 1)).build()


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise OrderTooSmall(f"cycle needs n >= 3, got {n}")
    return GraphBuilder(n).add_edges((i, (i + 1) % n) for i in range(n)).build()


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def complete_minus_edge(n: int) -> Graph:
    """K_n with the edge between vertices 0 and 1 removed."""
    if n < 2:
        raise OrderTooSmall(f"K_n minus an edge needs n >= 2, got {n}")
    adj = list(complete_graph(n).adj)
    adj[0] &= ~0b10
    adj[1] &= ~0b01
    return Graph(n, tuple(adj))


def complete_bipartite(a: int, b: int) -> Graph:
    return join(edgeless_graph(a), edgeless_graph(b))


def join(G: Graph, H: Graph) -> Graph:
    """Disjoint union of G and H plus every edge between them; H is shifted up."""
    n, m = G.order, H.order
    if n + m > MAX_ORDER:
        raise OrderOutOfRange(f"join order {n + m} exceeds {MAX_ORDER}")
    low = (1 << n) - 1
    high = ((1 << m) - 1) << n
    rows = [row | high for row in G.adj]
    rows += [(row << n) | low for row in H.adj]
    return Graph(n + m, tuple(rows))


def disjoint_union(G: Graph, H: Graph) -> Graph:
    n = G.order
    if n + H.order > MAX_ORDER:
        raise OrderOutOfRange(f"union order {n + H.order} exceeds {MAX_ORDER}")
    return Graph(n + H.order, G.adj + tuple(row << n for row in H.adj))


@dataclass(frozen=True)
class BlowupParams:
    base: Graph
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise GraphError(f"blow-up multiplicity must be >= 1, got {self.k}")
        if self.k * self.base.order > MAX_ORDER:
            raise OrderOutOfRange(f"blow-up order {self.k * self.base.order} exceeds {MAX_ORDER}")


def blow_up(p: BlowupParams | Graph, k: int | None = None) -> Graph:
    """k-blow-up: copy ``i`` of base vertex ``u`` becomes vertex ``u*k + i``."""
    if isinstance(p, Graph):
        p = BlowupParams(p, k if k is not None else 1)
    H, k = p.base, p.k
    block = (1 << k) - 1
    rows = []
    for u in range(H.order):
        row = 0
        for v in iter_bits(H.adj[u]):
            row |= block << (v * k)
        rows.extend([row] * k)
    return Graph(H.order * k, tuple(rows))


def c5_blowup(q: int) -> Graph:
    if not 1 <= q <= 12:
        raise GraphError(f"q-out-of-range: {q} not in [1, 12]")
    return blow_up(BlowupParams(cycle_graph(5), q))


def z_graph(n: int) -> Graph:
    """K_{n-3} minus edge {0,1}, triangle on n-3..n-1, plus edges {0,n-3} and {1,n-2}."""
    if n < 7:
        raise OrderTooSmall(f"Z_n is defined for n >= 7, got {n}")
    if n > MAX_ORDER:
        raise OrderOutOfRange(f"order {n} exceeds {MAX_ORDER}")
    b = GraphBuilder(n)
    m = n - 3
    for i in range(m):
        for j in range(i + 1, m):
            if (i, j) != (0, 1):
                b.add_edge(i, j)
    u, v, w = m, m + 1, m + 2
    b.add_edges([(u, v), (v, w), (u, w), (0, u), (1, v)])
    return b.build()


FAMILIES = {
    "cycle": (cycle_graph, 1),
    "complete": (complete_graph, 1),
    "complete-minus-edge": (complete_minus_edge, 1),
    "path": (path_graph, 1),
    "edgeless": (edgeless_graph, 1),
    "bipartite": (complete_bipartite, 2),
    "c5-blowup": (c5_blowup, 1),
    "z": (z_graph, 1),
}


def build_family(name: str, params: list[int]) -> Graph:
    try:
        fn, arity = FAMILIES[name]
    except KeyError:
        raise GraphError(f"unknown family {name!r}; choose from {sorted(FAMILIES)}") from None
    if len(params) != arity:
        raise GraphError(f"family {name!r} takes {arity} integer parameter(s)")
    return fn(*params)


def c5_blowup_case_bounds(q: int) -> dict[int, int]:
    """For every (2q+2)-subset of C_5^(q), group by number of parts met and
    return the minimum induced edge count per group.  Exhaustive; meant for q <= 3."""
    from itertools import combinations

    G = c5_blowup(q)
    adj = G.adj
    out: dict[int, int] = {}
    for U in combinations(range(G.order), 2 * q + 2):
        mask = 0
        for x in U:
            mask |= 1 << x
        e = sum((adj[x] & mask).bit_count() for x in U) // 2
        parts = len({x // q for x in U})
        if e < out.get(parts, e + 1):
            out[parts] = e
    return out
