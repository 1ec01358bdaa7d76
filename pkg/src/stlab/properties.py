"""Exact graph property deciders.

Everything here is exact: induced-subgraph minima by pruned subset search,
independence number by branch and bound, connectivity by vertex-disjoint
paths (with a brute-force cut enumerator kept as a cross-check), and cycle
lengths by anchored backtracking with dead-state memoisation.
"""
from __future__ import annotations

from collections import deque
from dataclasses import asdict, dataclass, field
from itertools import combinations
from typing import Optional

from .graph import Graph, GraphError, edge_count, is_connected, iter_bits, mask_of


class SExceedsOrder(GraphError):
    pass


class KOutOfRange(GraphError):
    pass


@dataclass(frozen=True)
class StQuery:
    """Every induced subgraph on ``s`` vertices must have at least ``t`` edges."""

    s: int
    t: int

    def __post_init__(self):
        if self.s < 1:
            raise GraphError(f"s must be >= 1, got {self.s}")
        if not 0 <= self.t <= self.s * (self.s - 1) // 2:
            raise GraphError(f"t={self.t} not in [0, s(s-1)/2] for s={self.s}")

    @classmethod
    def parse(cls, text: str) -> "StQuery":
        s, t = text.split(",")
        return cls(int(s), int(t))

    def __str__(self) -> str:
        return f"[{self.s},{self.t}]"


def _as_query(q) -> StQuery:
    return q if isinstance(q, StQuery) else StQuery(*q)


# ---------------------------------------------------------------- [s,t] property


def _low_subset(adj, cand: list[int], s: int, t: int, base: int, base_edges: int) -> Optional[int]:
    """Lexicographically first s-subset of ``base | cand`` containing ``base``
    whose induced size is below ``t``; ``None`` if there is none.

    ``cand`` is sorted and disjoint from ``base``; induced size only grows as
    vertices are added, so branches already at ``t`` edges are cut.
    """
    need = s - base.bit_count()
    if need == 0:
        return base if base_edges < t else None
    m = len(cand)

    def rec(start: int, need: int, mask: int, e: int) -> Optional[int]:
        for i in range(start, m - need + 1):
            v = cand[i]
            e2 = e + (adj[v] & mask).bit_count()
            if e2 >= t:
                continue
            m2 = mask | (1 << v)
            if need == 1:
                return m2
            hit = rec(i + 1, need - 1, m2, e2)
            if hit is not None:
                return hit
        return None

    if base_edges >= t:
        return None
    return rec(0, need, base, base_edges)


def min_induced_size(G: Graph, s: int) -> int:
    """Minimum number of edges induced by an ``s``-subset of ``V(G)``."""
    n = G.order
    if s > n:
        raise SExceedsOrder(f"s={s} exceeds order {n}")
    if s < 0:
        raise GraphError("s must be non-negative")
    adj = G.adj
    best = s * (s - 1) // 2

    def rec(start: int, need: int, mask: int, e: int) -> None:
        nonlocal best
        for v in range(start, n - need + 1):
            e2 = e + (adj[v] & mask).bit_count()
            if e2 >= best:
                continue
            if need == 1:
                best = e2
                if best == 0:
                    return
            else:
                rec(v + 1, need - 1, mask | (1 << v), e2)
                if best == 0:
                    return

    if s == 0:
        return 0
    # the first subset in order seeds ``best`` so the prune is never vacuous
    best = best + 1
    rec(0, s, 0, 0)
    return best


def st_violation_witness(G: Graph, q) -> Optional[int]:
    """Lexicographically least ``s``-subset inducing fewer than ``t`` edges."""
    q = _as_query(q)
    if G.order < q.s:
        return None
    return _low_subset(G.adj, list(range(G.order)), q.s, q.t, 0, 0)


def is_st_graph(G: Graph, q) -> bool:
    """True iff every induced subgraph of order ``s`` has at least ``t`` edges.

    Vacuously true when the graph has fewer than ``s`` vertices.
    """
    return st_violation_witness(G, q) is None


def st_violation_through(G: Graph, q, v: int) -> Optional[int]:
    """A violating ``s``-subset that contains vertex ``v``, if any.

    When ``G - v`` is already known to be an ``[s,t]``-graph this decides the
    whole graph with far fewer subsets.
    """
    q = _as_query(q)
    if G.order < q.s:
        return None
    cand = [u for u in range(G.order) if u != v]
    return _low_subset(G.adj, cand, q.s, q.t, 1 << v, 0)


# ---------------------------------------------------------------- independence


def _greedy_color_order(adj, P: int):
    """Vertices of P ordered by greedy colour class with their colour numbers."""
    order: list[int] = []
    bounds: list[int] = []
    U = P
    color = 0
    while U:
        color += 1
        Q = U
        while Q:
            low = Q & -Q
            v = low.bit_length() - 1
            Q &= ~adj[v] & ~low
            U &= ~low
            order.append(v)
            bounds.append(color)
    return order, bounds


def _max_clique_size(adj, P: int) -> int:
    best = 0

    def expand(P: int, size: int) -> None:
        nonlocal best
        order, bounds = _greedy_color_order(adj, P)
        for i in range(len(order) - 1, -1, -1):
            if size + bounds[i] <= best:
                return
            v = order[i]
            nP = P & adj[v]
            if nP:
                expand(nP, size + 1)
            elif size + 1 > best:
                best = size + 1
            P &= ~(1 << v)

    if P:
        expand(P, 0)
    return best


def _complement_rows(G: Graph):
    full = G.full_mask
    return [full & ~row & ~(1 << v) for v, row in enumerate(G.adj)]


def independence_number(G: Graph) -> int:
    """alpha(G): maximum clique of the complement, branch and bound with a colouring bound."""
    return _max_clique_size(_complement_rows(G), G.full_mask)


def max_independent_set(G: Graph) -> int:
    """The lexicographically least maximum independent set, as a mask."""
    cadj = _complement_rows(G)
    need = _max_clique_size(cadj, G.full_mask)
    chosen = 0
    cand = G.full_mask
    while need:
        for v in iter_bits(cand):
            rest = cand & cadj[v] & ~((2 << v) - 1)
            if _max_clique_size(cadj, rest) == need - 1:
                chosen |= 1 << v
                cand = rest
                need -= 1
                break
    return chosen


def independence_number_bruteforce(G: Graph) -> int:
    best = 0
    n = G.order
    for S in range(1 << n):
        c = S.bit_count()
        if c > best and all(not (G.adj[v] & S) for v in iter_bits(S)):
            best = c
    return best


# ---------------------------------------------------------------- connectivity


def local_connectivity(G: Graph, s: int, t: int, cap: int | None = None) -> int:
    """Maximum number of internally vertex-disjoint s-t paths (s, t non-adjacent).

    Unit-capacity augmenting paths on the split graph: vertex v becomes
    v_in = 2v and v_out = 2v + 1 joined by an arc of capacity one.
    """
    n = G.order
    if G.has_edge(s, t):
        raise GraphError("local connectivity is defined for non-adjacent pairs")
    cap = n if cap is None else cap
    # residual capacities: res[(a, b)] for arcs of the split digraph
    res: dict[tuple[int, int], int] = {}
    out_arcs: list[list[int]] = [[] for _ in range(2 * n)]

    def arc(a: int, b: int, c: int) -> None:
        if (a, b) not in res:
            out_arcs[a].append(b)
            out_arcs[b].append(a)
            res[(a, b)] = 0
            res.setdefault((b, a), 0)
        res[(a, b)] += c

    for v in range(n):
        arc(2 * v, 2 * v + 1, 1)
        for u in iter_bits(G.adj[v]):
            arc(2 * v + 1, 2 * u, 1)
    src, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < cap:
        parent = {src: src}
        dq = deque([src])
        while dq and sink not in parent:
            a = dq.popleft()
            for b in out_arcs[a]:
                if b not in parent and res[(a, b)] > 0:
                    parent[b] = a
                    dq.append(b)
        if sink not in parent:
            break
        b = sink
        while b != src:
            a = parent[b]
            res[(a, b)] -= 1
            res[(b, a)] += 1
            b = a
        flow += 1
    return flow


def vertex_connectivity(G: Graph) -> int:
    """kappa(G) via Menger: min local connectivity over non-adjacent pairs.

    Conventions: K_n -> n-1, disconnected -> 0, K_1 and the empty graph -> 0.
    Only pairs whose first vertex is among the first kappa+1 vertices need
    checking (one of them avoids a minimum separator).
    """
    n = G.order
    if n <= 1:
        return 0
    if not is_connected(G):
        return 0
    best = min(min(row.bit_count() for row in G.adj), n - 1)
    i = 0
    while i <= best and i < n:
        non = G.full_mask & ~G.adj[i] & ~(1 << i)
        for w in iter_bits(non):
            k = local_connectivity(G, i, w, cap=best)
            if k < best:
                best = k
        i += 1
    return best


def vertex_connectivity_bruteforce(G: Graph) -> int:
    """Smallest vertex set whose removal disconnects G, by enumeration."""
    n = G.order
    full = G.full_mask
    for k in range(0, max(n - 1, 0)):
        for S in combinations(range(n), k):
            if not is_connected(G, full & ~mask_of(S)):
                return k
    return max(n - 1, 0)


def is_biconnected(G: Graph) -> bool:
    """kappa(G) >= 2, checked by deleting each vertex in turn."""
    n = G.order
    if n < 3 or not is_connected(G):
        return False
    full = G.full_mask
    return all(is_connected(G, full & ~(1 << v)) for v in range(n))


def connectivity_at_least(G: Graph, c: int) -> bool:
    if c <= 0:
        return True
    if c == 1:
        return G.order >= 2 and is_connected(G)
    if c == 2:
        return is_biconnected(G)
    return vertex_connectivity(G) >= c


# ---------------------------------------------------------------- triangles and cycles


def is_triangle_free(G: Graph) -> bool:
    adj = G.adj
    for u in range(G.order):
        higher = adj[u] >> (u + 1) << (u + 1)
        for v in iter_bits(higher):
            if adj[u] & adj[v]:
                return False
    return True


def has_cycle_of_length(G: Graph, k: int) -> bool:
    """True iff G has a cycle through exactly ``k`` distinct vertices.

    Each candidate cycle is anchored at its smallest vertex ``s`` and grown as
    a path through larger vertices; (path-set, endpoint) states that failed
    once are never re-expanded.
    """
    n = G.order
    if not 3 <= k <= n:
        raise KOutOfRange(f"k={k} not in [3, {n}]")
    adj = G.adj
    active = mask_of(v for v in range(n) if adj[v].bit_count() >= 2)
    for s in iter_bits(active):
        allowed = active & ~((2 << s) - 1)
        if allowed.bit_count() < k - 1:
            break
        closers = adj[s] & allowed
        if closers.bit_count() < 2:
            continue
        dead: set[tuple[int, int]] = set()

        def grow(path: int, end: int, left: int) -> bool:
            # ``left`` vertices still to add after ``end``
            if left == 0:
                return bool(adj[end] >> s & 1)
            avail = allowed & ~path
            if not (closers & avail):
                return False
            key = (path, end)
            if key in dead:
                return False
            nxt = adj[end] & avail
            if left == 1:
                nxt &= closers
            while nxt:
                low = nxt & -nxt
                v = low.bit_length() - 1
                if grow(path | low, v, left - 1):
                    return True
                nxt ^= low
            dead.add(key)
            return False

        for v in iter_bits(closers):
            if grow((1 << s) | (1 << v), v, k - 2):
                return True
    return False


def cycle_spectrum(G: Graph) -> frozenset[int]:
    return frozenset(k for k in range(3, G.order + 1) if has_cycle_of_length(G, k))


def is_hamiltonian(G: Graph) -> bool:
    return G.order >= 3 and has_cycle_of_length(G, G.order)


def is_pancyclic(G: Graph) -> bool:
    n = G.order
    if n < 3:
        return False
    return all(has_cycle_of_length(G, k) for k in range(3, n + 1))


# ---------------------------------------------------------------- classical conditions


def chvatal_erdos_holds(G: Graph) -> bool:
    """kappa(G) >= alpha(G)."""
    return vertex_connectivity(G) >= independence_number(G)


def ore_holds(G: Graph) -> bool:
    """deg(u) + deg(v) >= n for every non-adjacent pair u != v."""
    n = G.order
    deg = [row.bit_count() for row in G.adj]
    for u in range(n):
        for v in iter_bits(G.full_mask & ~G.adj[u] & ~((2 << u) - 1)):
            if deg[u] + deg[v] < n:
                return False
    return True


@dataclass(frozen=True)
class PropertySummary:
    order: int
    size: int
    min_degree: int
    max_degree: int
    independence_number: int
    connectivity: int
    triangle_free: bool
    cycle_spectrum: tuple[int, ...] = field(default=())

    @property
    def pancyclic(self) -> bool:
        return self.order >= 3 and self.cycle_spectrum == tuple(range(3, self.order + 1))

    @property
    def hamiltonian(self) -> bool:
        return self.order >= 3 and self.order in self.cycle_spectrum

    def to_dict(self) -> dict:
        d = asdict(self)
        d["cycle_spectrum"] = list(self.cycle_spectrum)
        d["hamiltonian"] = self.hamiltonian
        d["pancyclic"] = self.pancyclic
        return d


def summarize(G: Graph) -> PropertySummary:
    deg = [row.bit_count() for row in G.adj]
    return PropertySummary(
        order=G.order,
        size=edge_count(G),
        min_degree=min(deg, default=0),
        max_degree=max(deg, default=0),
        independence_number=independence_number(G),
        connectivity=vertex_connectivity(G),
        triangle_free=is_triangle_free(G),
        cycle_spectrum=tuple(sorted(cycle_spectrum(G))),
    )
