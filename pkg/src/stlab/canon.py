"""Canonical labelling by partition refinement and individualisation.

The search tree is the usual one: refine the unit partition to an equitable
partition, individualise each vertex of the first non-singleton cell, refine
again, and so on down to discrete partitions (leaves).  Each leaf is a
relabelling; the canonical form is the relabelled graph with the smallest
graph6 bit string.  Leaves that reproduce the first or the best leaf give
automorphisms, which prune siblings (orbit pruning) and let the search jump
back to the point where the two paths diverged.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from .graph import Graph, GraphError, encode_graph6, relabel

MAX_CANON_ORDER = 16

_REV16 = [0] * (1 << 16)
for _i in range(1, 1 << 16):
    _REV16[_i] = (_REV16[_i >> 1] >> 1) | ((_i & 1) << 15)
del _i


class OrderTooLarge(GraphError):
    pass


def _refine(adj: Sequence[int], cells: list[list[int]], splitters: list[int], n: int) -> list[list[int]]:
    """Split cells by neighbour counts into splitter sets until stable.

    Sub-cells are ordered by count, which keeps the result independent of
    vertex names.  Only sets pushed on ``splitters`` are used, so callers
    must push every set not already known to be equitable against.
    """
    while splitters and len(cells) < n:
        W = splitters.pop()
        new: list[list[int]] = []
        for X in cells:
            if len(X) == 1:
                new.append(X)
                continue
            c0 = (adj[X[0]] & W).bit_count()
            counts = [(adj[x] & W).bit_count() for x in X]
            if all(c == c0 for c in counts):
                new.append(X)
                continue
            groups: dict[int, list[int]] = {}
            for x, c in zip(X, counts):
                groups.setdefault(c, []).append(x)
            for c in sorted(groups):
                g = groups[c]
                new.append(g)
                m = 0
                for x in g:
                    m |= 1 << x
                splitters.append(m)
        cells = new
    return cells


def _leaf_key(adj: Sequence[int], lab: list[int], n: int) -> int:
    """graph6 upper-triangle bit string of the relabelled graph, as an int.

    Bit (i, j), i < j, precedes (i', j') iff j < j' or (j = j' and i < i');
    the earliest bit is the most significant, so int order = graph6 order.
    """
    pos = [0] * n
    for i, v in enumerate(lab):
        pos[v] = i
    key = 0
    for j in range(1, n):
        row = adj[lab[j]]
        r = 0
        while row:
            low = row & -row
            p = pos[low.bit_length() - 1]
            if p < j:
                r |= 1 << p
            row ^= low
        key = (key << j) | (_REV16[r] >> (16 - j))
    return key


@dataclass
class Labelling:
    """Result of a canonical labelling search.

    ``lab[i]`` is the original vertex that receives canonical index ``i``.
    ``generators`` are automorphisms (as vertex maps) found during the search;
    they generate the full automorphism group.
    """

    order: int
    lab: list[int]
    key: int
    generators: list[tuple[int, ...]]

    @property
    def position(self) -> list[int]:
        pos = [0] * self.order
        for i, v in enumerate(self.lab):
            pos[v] = i
        return pos

    def orbits(self) -> list[int]:
        """Orbit representative (smallest member) for every vertex."""
        parent = list(range(self.order))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.generators:
            for x, y in enumerate(g):
                a, b = find(x), find(y)
                if a != b:
                    if a < b:
                        parent[b] = a
                    else:
                        parent[a] = b
        return [find(x) for x in range(self.order)]

    @property
    def trivial_group(self) -> bool:
        return not self.generators


class _Search:
    def __init__(self, adj: Sequence[int], n: int):
        self.adj = adj
        self.n = n
        self.first_lab: list[int] | None = None
        self.first_path: list[int] = []
        self.first_key = 0
        self.best_lab: list[int] = []
        self.best_path: list[int] = []
        self.best_key = 0
        self.gens: list[tuple[int, ...]] = []

    def _automorphism(self, src: list[int], dst: list[int]) -> tuple[int, ...]:
        g = [0] * self.n
        for a, b in zip(src, dst):
            g[a] = b
        return tuple(g)

    @staticmethod
    def _common(a: list[int], b: list[int]) -> int:
        k = 0
        for x, y in zip(a, b):
            if x != y:
                break
            k += 1
        return k

    def leaf(self, cells: list[list[int]], path: list[int]) -> int:
        """Process a discrete partition; return the depth to resume at."""
        lab = [c[0] for c in cells]
        key = _leaf_key(self.adj, lab, self.n)
        depth = len(path)
        if self.first_lab is None:
            self.first_lab, self.first_path, self.first_key = lab, path, key
            self.best_lab, self.best_path, self.best_key = lab, path, key
            return depth
        if key == self.first_key:
            self.gens.append(self._automorphism(self.first_lab, lab))
            return self._common(path, self.first_path)
        if key == self.best_key:
            self.gens.append(self._automorphism(self.best_lab, lab))
            return self._common(path, self.best_path)
        if key < self.best_key:
            self.best_lab, self.best_path, self.best_key = lab, path, key
        return depth

    def _pruned(self, path: list[int], v: int, done: list[int]) -> bool:
        """Is ``v`` in the orbit of an explored sibling under known automorphisms fixing ``path``?"""
        if not done or not self.gens:
            return False
        fixing = [g for g in self.gens if all(g[x] == x for x in path)]
        if not fixing:
            return False
        orbit = {v}
        frontier = [v]
        while frontier:
            x = frontier.pop()
            for g in fixing:
                y = g[x]
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        return any(u in orbit for u in done)

    def run(self, cells: list[list[int]], path: list[int]) -> int:
        n = self.n
        if len(cells) == n:
            return self.leaf(cells, path)
        ti = next(i for i, c in enumerate(cells) if len(c) > 1)
        target = cells[ti]
        depth = len(path)
        done: list[int] = []
        for v in sorted(target):
            if self._pruned(path, v, done):
                continue
            rest = [x for x in target if x != v]
            child = cells[:ti] + [[v], rest] + cells[ti + 1:]
            child = _refine(self.adj, child, [1 << v], n)
            back = self.run(child, path + [v])
            done.append(v)
            if back < depth:
                return back
        return depth


def canonical_labelling(G: Graph) -> Labelling:
    n = G.order
    if n > MAX_CANON_ORDER:
        raise OrderTooLarge(f"canonical labelling supports order <= {MAX_CANON_ORDER}, got {n}")
    if n == 0:
        return Labelling(0, [], 0, [])
    s = _Search(G.adj, n)
    cells = _refine(G.adj, [list(range(n))], [G.full_mask], n)
    s.run(cells, [])
    return Labelling(n, s.best_lab, s.best_key, s.gens)


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Isomorphism-class key: graph6 bytes of the canonically relabelled graph."""

    key: bytes

    @property
    def graph6(self) -> str:
        return self.key.decode("ascii")

    def graph(self) -> Graph:
        from .graph import parse_graph6

        return parse_graph6(self.key)


def canonical_graph(G: Graph) -> Graph:
    L = canonical_labelling(G)
    return relabel(G, L.position)


def canonical_form(G: Graph) -> CanonicalForm:
    return CanonicalForm(encode_graph6(canonical_graph(G)))


def are_isomorphic(G: Graph, H: Graph) -> bool:
    if G.order != H.order:
        return False
    if sorted(r.bit_count() for r in G.adj) != sorted(r.bit_count() for r in H.adj):
        return False
    return canonical_labelling(G).key == canonical_labelling(H).key


def are_isomorphic_bruteforce(G: Graph, H: Graph) -> bool:
    """Try every bijection; reference semantics for small orders."""
    n = G.order
    if n != H.order:
        return False
    if n > 9:
        raise OrderTooLarge("brute-force isomorphism is limited to order 9")
    if sorted(r.bit_count() for r in G.adj) != sorted(r.bit_count() for r in H.adj):
        return False
    target = H.adj
    for perm in permutations(range(n)):
        if relabel(G, perm).adj == target:
            return True
    return False

