"""Isomorphism-free generation of graphs by canonical vertex augmentation.

A graph C of order m+1 is produced from its parent P = C - v only when v is
the canonical deletion vertex of C (up to automorphism).  The canonical
deletion vertex maximises (degree, neighbour-degree profile) and, among ties,
has the smallest canonical index.  Because v must have maximum degree in C,
candidate neighbourhoods are enumerated per degree d and only drawn from
parent vertices of degree < d.

Prune filters must be hereditary (closed under induced subgraphs) since they
are applied at every intermediate order.  Post filters are applied only to
graphs of the target order.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import combinations
from math import factorial
from typing import Callable, Iterable, Iterator, Optional, Sequence

from .canon import canonical_labelling
from .graph import Graph, GraphError, iter_bits
from .properties import (
    StQuery,
    connectivity_at_least,
    is_st_graph,
    is_triangle_free,
    st_violation_through,
)

MAX_GEN_ORDER = 12


class OrderTooLarge(GraphError):
    pass


# ---------------------------------------------------------------- filters


@dataclass(frozen=True)
class GenFilter:
    """Base class.  ``hereditary`` filters may prune; others are post filters."""

    hereditary = True

    def accepts(self, G: Graph) -> bool:
        raise NotImplementedError

    def accepts_extension(self, child: Graph, v: int, nbrs: int) -> bool:
        """Decide ``child`` given that ``child - v`` already passed."""
        return self.accepts(child)

    def spec(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class TriangleFree(GenFilter):
    def accepts(self, G: Graph) -> bool:
        return is_triangle_free(G)

    def accepts_extension(self, child: Graph, v: int, nbrs: int) -> bool:
        adj = child.adj
        return all(not (adj[u] & nbrs) for u in iter_bits(nbrs))

    def spec(self) -> str:
        return "triangle-free"


@dataclass(frozen=True)
class StHereditary(GenFilter):
    s: int
    t: int

    def __post_init__(self):
        StQuery(self.s, self.t)

    def accepts(self, G: Graph) -> bool:
        return is_st_graph(G, (self.s, self.t))

    def accepts_extension(self, child: Graph, v: int, nbrs: int) -> bool:
        return st_violation_through(child, (self.s, self.t), v) is None

    def spec(self) -> str:
        return f"st:{self.s},{self.t}"


@dataclass(frozen=True)
class MaxEdges(GenFilter):
    m: int

    def accepts(self, G: Graph) -> bool:
        return sum(r.bit_count() for r in G.adj) // 2 <= self.m

    def spec(self) -> str:
        return f"max-edges:{self.m}"


@dataclass(frozen=True)
class CustomFilter(GenFilter):
    """Arbitrary predicate; the caller vouches that it is hereditary."""

    predicate: Callable[[Graph], bool] = field(compare=False)
    name: str = "custom"

    def accepts(self, G: Graph) -> bool:
        return bool(self.predicate(G))

    def spec(self) -> str:
        return self.name


@dataclass(frozen=True)
class MinDegree(GenFilter):
    d: int
    hereditary = False

    def accepts(self, G: Graph) -> bool:
        return all(r.bit_count() >= self.d for r in G.adj)

    def spec(self) -> str:
        return f"min-degree:{self.d}"


@dataclass(frozen=True)
class ConnectivityAtLeast(GenFilter):
    c: int
    hereditary = False

    def accepts(self, G: Graph) -> bool:
        return connectivity_at_least(G, self.c)

    def spec(self) -> str:
        return f"kconn:{self.c}"


def parse_filter(text: str) -> GenFilter:
    """``triangle-free``, ``st:S,T``, ``max-edges:M``, ``min-degree:D``, ``kconn:C``."""
    name, _, arg = text.partition(":")
    try:
        if name == "triangle-free" and not arg:
            return TriangleFree()
        if name == "st":
            s, t = arg.split(",")
            return StHereditary(int(s), int(t))
        if name == "max-edges":
            return MaxEdges(int(arg))
        if name == "min-degree":
            return MinDegree(int(arg))
        if name == "kconn":
            return ConnectivityAtLeast(int(arg))
    except ValueError as e:
        raise GraphError(f"bad filter {text!r}: {e}") from None
    raise GraphError(f"unknown filter {text!r}")


def is_hereditary_on(f: GenFilter, G: Graph) -> bool:
    """Check on one sample that passing ``f`` survives every single-vertex deletion."""
    from .graph import delete_vertex

    if not f.accepts(G):
        return True
    return all(f.accepts(delete_vertex(G, v)) for v in range(G.order))


# ---------------------------------------------------------------- augmentation


@dataclass
class _Plan:
    n: int
    prunes: list[GenFilter]
    posts: list[GenFilter]
    min_degree: int


def _make_plan(n: int, filters: Iterable[GenFilter]) -> _Plan:
    if not 0 <= n <= MAX_GEN_ORDER:
        raise OrderTooLarge(f"generation supports order <= {MAX_GEN_ORDER}, got {n}")
    prunes: list[GenFilter] = []
    posts: list[GenFilter] = []
    min_deg = 0
    for f in filters:
        if f.hereditary:
            prunes.append(f)
        else:
            posts.append(f)
            if isinstance(f, MinDegree):
                min_deg = max(min_deg, f.d)
    return _Plan(n, prunes, posts, min_deg)


def _profile(adj: Sequence[int], deg: Sequence[int], x: int) -> int:
    total = 0
    row = adj[x]
    while row:
        low = row & -row
        total += 1 << (4 * deg[low.bit_length() - 1])
        row ^= low
    return total


def _children(P: Graph, plan: _Plan) -> Iterator[Graph]:
    """Canonical children of ``P`` (order m) at order m+1 that pass all prune filters."""
    m = P.order
    v = m
    vbit = 1 << v
    padj = P.adj
    pdeg = [r.bit_count() for r in padj]
    maxdeg = max(pdeg, default=0)
    # vertices of degree below ``need`` cannot reach the minimum degree later
    need = plan.min_degree - (plan.n - (m + 1))
    required = 0
    for x in range(m):
        if pdeg[x] < need:
            required |= 1 << x

    plab = canonical_labelling(P) if m else None
    dedup = plab is not None and not plab.trivial_group
    seen: set[int] = set()

    for d in range(max(maxdeg, need, 0), m + 1):
        # v must attain the maximum degree of the child
        pool = [x for x in range(m) if pdeg[x] < d]
        if len(pool) < d or required & ~_mask(pool) != 0:
            continue
        for combo in combinations(pool, d):
            nbrs = 0
            for x in combo:
                nbrs |= 1 << x
            if required & ~nbrs:
                continue
            adj = tuple(r | vbit if nbrs >> x & 1 else r for x, r in enumerate(padj)) + (nbrs,)
            child = Graph(m + 1, adj)
            if not all(f.accepts_extension(child, v, nbrs) for f in plan.prunes):
                continue
            label = None
            if not _is_canonical_extension(child, adj, pdeg, nbrs, d):
                continue
            if dedup:
                label = canonical_labelling(child)
                if label.key in seen:
                    continue
                seen.add(label.key)
            yield child


def _mask(vs: Iterable[int]) -> int:
    m = 0
    for x in vs:
        m |= 1 << x
    return m


def _is_canonical_extension(child: Graph, adj, pdeg, nbrs: int, d: int) -> bool:
    m = len(pdeg)
    v = m
    ties = [x for x in range(m) if pdeg[x] + (nbrs >> x & 1) == d]
    if not ties:
        return True
    deg = [pdeg[x] + (nbrs >> x & 1) for x in range(m)]
    deg.append(d)
    pv = _profile(adj, deg, v)
    best = [v]
    for x in ties:
        px = _profile(adj, deg, x)
        if px > pv:
            return False
        if px == pv:
            best.append(x)
    if len(best) == 1:
        return True
    L = canonical_labelling(child)
    pos = L.position
    w = min(best, key=pos.__getitem__)
    if w == v:
        return True
    orb = L.orbits()
    return orb[w] == orb[v]


def _passes_posts(G: Graph, plan: _Plan) -> bool:
    return all(f.accepts(G) for f in plan.posts)


def _descend(P: Graph, plan: _Plan) -> Iterator[Graph]:
    if P.order == plan.n:
        if _passes_posts(P, plan):
            yield P
        return
    for C in _children(P, plan):
        yield from _descend(C, plan)


def _level(graphs: Iterable[Graph], plan: _Plan) -> list[Graph]:
    out: list[Graph] = []
    for P in graphs:
        out.extend(_children(P, plan))
    return out


def _root(plan: _Plan) -> Optional[Graph]:
    G = Graph(0, ())
    if all(f.accepts(G) for f in plan.prunes):
        return G
    return None


def subtree_roots(n: int, filters: Sequence[GenFilter] = (), depth: Optional[int] = None) -> list[Graph]:
    """Canonical intermediate graphs of order ``depth`` (default ceil(n/2))."""
    plan = _make_plan(n, filters)
    depth = (n + 1) // 2 if depth is None else depth
    root = _root(plan)
    layer = [root] if root is not None else []
    for _ in range(depth):
        layer = _level(layer, plan)
    return layer


def _count_subtree(args) -> int:
    root, n, filters = args
    return sum(1 for _ in _descend(root, _make_plan(n, filters)))


def _list_subtree(args) -> list[Graph]:
    root, n, filters = args
    return list(_descend(root, _make_plan(n, filters)))


def generate(n: int, filters: Sequence[GenFilter] = (), jobs: int = 1) -> Iterator[Graph]:
    """One graph per isomorphism class of order-``n`` graphs passing every filter."""
    plan = _make_plan(n, filters)
    if jobs <= 1 or n < 6:
        root = _root(plan)
        if root is not None:
            yield from _descend(root, plan)
        return
    from multiprocessing import Pool

    roots = subtree_roots(n, filters)
    with Pool(jobs) as pool:
        for chunk in pool.imap_unordered(_list_subtree, [(r, n, list(filters)) for r in roots]):
            yield from chunk


def count(n: int, filters: Sequence[GenFilter] = (), jobs: int = 1) -> int:
    if jobs <= 1 or n < 6:
        return sum(1 for _ in generate(n, filters))
    from multiprocessing import Pool

    roots = subtree_roots(n, filters)
    with Pool(jobs) as pool:
        return sum(pool.imap_unordered(_count_subtree, [(r, n, list(filters)) for r in roots]))


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("STLAB_JOBS", "1")))
    except ValueError:
        return 1


# ---------------------------------------------------------------- Burnside oracle


def _partitions(n: int, largest: Optional[int] = None) -> Iterator[list[int]]:
    largest = n if largest is None else largest
    if n == 0:
        yield []
        return
    for part in range(min(n, largest), 0, -1):
        for rest in _partitions(n - part, part):
            yield [part] + rest


def burnside_graph_count(n: int) -> int:
    """Number of unlabelled graphs on ``n`` vertices via the pair-action cycle index.

    For a permutation of cycle type (l_1, l_2, ...) the induced action on
    unordered pairs has sum_i floor(l_i/2) + sum_{i<j} gcd(l_i, l_j) cycles.
    """
    from collections import Counter
    from math import gcd

    if n < 0 or n > 16:
        raise GraphError(f"burnside_graph_count supports 0 <= n <= 16, got {n}")
    total = 0
    for lam in _partitions(n):
        cycles = sum(l // 2 for l in lam)
        for i in range(len(lam)):
            for j in range(i + 1, len(lam)):
                cycles += gcd(lam[i], lam[j])
        # number of permutations with this cycle type: n! / prod(l^m_l * m_l!)
        z = 1
        for l, mult in Counter(lam).items():
            z *= l**mult * factorial(mult)
        total += (factorial(n) // z) << cycles
    assert total % factorial(n) == 0
    return total // factorial(n)
