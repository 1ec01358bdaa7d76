"""Named verification campaigns.

Each campaign enumerates (or reads) a population of graphs, asserts a
statement about every member and returns a :class:`CampaignReport`.  Every
violation cites the graph in graph6 with a reason code from ``RECHECKS`` so it
can be re-verified independently.
"""
from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

from .canon import canonical_form
from .constructions import c5_blowup, c5_blowup_case_bounds, cycle_graph, z_graph
from .generate import (
    ConnectivityAtLeast,
    GenFilter,
    MinDegree,
    StHereditary,
    TriangleFree,
    generate,
)
from .graph import Graph, encode_graph6, parse_graph6
from .properties import (
    connectivity_at_least,
    cycle_spectrum,
    independence_number,
    is_biconnected,
    is_hamiltonian,
    is_pancyclic,
    is_st_graph,
    is_triangle_free,
    vertex_connectivity,
)
from .qforms import brute_force_extrema, cycle_form, lemma3_bounds, lemma4_lower, path_form

BIG_ORDER = 10


class CampaignError(ValueError):
    """Bad campaign parameters (an infrastructure error, not a failed check)."""


@dataclass
class CampaignReport:
    campaign: str
    parameters: dict
    population: int = 0
    violations: list[dict] = field(default_factory=list)
    counts: dict[str, int] = field(default_factory=dict)
    runtime: float = 0.0
    notes: list[str] = field(default_factory=list)
    graphs: list[str] = field(default_factory=list)
    rows: list[dict] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        return "pass" if not self.violations else "fail"

    def violate(self, G: Optional[Graph], reason: str, detail: str = "") -> None:
        entry = {"graph6": encode_graph6(G).decode() if G is not None else None, "reason": reason}
        if detail:
            entry["detail"] = detail
        self.violations.append(entry)

    def to_dict(self, with_runtime: bool = True) -> dict:
        d = {
            "campaign": self.campaign,
            "parameters": self.parameters,
            "verdict": self.verdict,
            "population": self.population,
            "counts": dict(sorted(self.counts.items())),
            "violations": self.violations,
            "notes": self.notes,
        }
        if self.graphs:
            d["graphs"] = self.graphs
        if self.rows:
            d["rows"] = self.rows
        if with_runtime:
            d["runtime"] = round(self.runtime, 3)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if self.rows:
            keys = list(self.rows[0])
            w.writerow(keys)
            for r in self.rows:
                w.writerow([r[k] for k in keys])
            return buf.getvalue()
        w.writerow(["campaign", "verdict", "metric", "value"])
        w.writerow([self.campaign, self.verdict, "population", self.population])
        for k, v in sorted(self.counts.items()):
            w.writerow([self.campaign, self.verdict, k, v])
        w.writerow([self.campaign, self.verdict, "violations", len(self.violations)])
        return buf.getvalue()


def _extension_gaps(G: Graph) -> list[int]:
    """Cycle lengths k < n present in G without a (k+1)-cycle."""
    sp = cycle_spectrum(G)
    return [k for k in sorted(sp) if k < G.order and k + 1 not in sp]


# A violation's reason code maps to a predicate that is true iff the cited
# graph really exhibits the violation.
RECHECKS: dict[str, Callable[[Graph], bool]] = {
    "not-pancyclic": lambda G: not is_pancyclic(G),
    "not-hamiltonian": lambda G: not is_hamiltonian(G),
    "cycle-extension": lambda G: bool(_extension_gaps(G)),
    "triangle-free-[4,2]-min-degree-2": lambda G: is_triangle_free(G)
    and is_st_graph(G, (4, 2))
    and min(r.bit_count() for r in G.adj) >= 2,
    "triangle-free-[6,4]-min-degree-4": lambda G: is_triangle_free(G)
    and is_st_graph(G, (6, 4))
    and min(r.bit_count() for r in G.adj) >= 4,
    "not-[4,2]": lambda G: not is_st_graph(G, (4, 2)),
    "not-2-connected": lambda G: not is_biconnected(G),
    "kappa-not-2": lambda G: vertex_connectivity(G) != 2,
    "alpha-not-3": lambda G: independence_number(G) != 3,
    "not-triangle-free": lambda G: not is_triangle_free(G),
    "not-regular": lambda G: len({r.bit_count() for r in G.adj}) > 1,
}


def recheck(violation: dict) -> bool:
    """Re-run the predicate behind a violation entry on its parsed graph."""
    check = RECHECKS.get(violation["reason"])
    if check is None or violation.get("graph6") is None:
        return False
    return check(parse_graph6(violation["graph6"]))


# ---------------------------------------------------------------- population sources


def _population(
    n: int,
    filters: Sequence[GenFilter],
    source: Optional[Sequence[Graph]],
    jobs: int,
) -> Iterable[Graph]:
    """Generated graphs, or the members of an external stream that pass the same filters."""
    if source is None:
        return generate(n, filters, jobs=jobs)
    return (G for G in source if G.order == n and all(f.accepts(G) for f in filters))


def _unique(graphs: Iterable[Graph]) -> list[tuple[str, Graph]]:
    """Deduplicate by canonical form; sorted by canonical graph6."""
    seen: dict[str, Graph] = {}
    for G in graphs:
        key = canonical_form(G).graph6
        seen.setdefault(key, G)
    return sorted(seen.items())


def _check_range(name: str, ns: Sequence[int], lo: int, hi: int, big: bool, big_from: int = BIG_ORDER):
    if not ns:
        raise CampaignError(f"{name}: empty order range")
    for n in ns:
        if not lo <= n <= hi:
            raise CampaignError(f"{name}: order {n} outside [{lo}, {hi}]")
        if n >= big_from and not big:
            raise CampaignError(f"{name}: order {n} needs --big")


STAR_FILTERS = (StHereditary(4, 2), ConnectivityAtLeast(2))
POPULATION_NOTE = "population: isomorphism classes of 2-connected [4,2]-graphs of order {n}"


# ---------------------------------------------------------------- campaigns


def campaign_theorem6(
    n_range: Sequence[int] = (7, 8, 9), *, jobs: int = 1, big: bool = False, source=None
) -> CampaignReport:
    """Every 2-connected [4,2]-graph of order >= 7 is pancyclic."""
    _check_range("theorem6", n_range, 7, 10, big)
    rep = CampaignReport("theorem6", {"n": list(n_range)})
    t0 = time.perf_counter()
    for n in n_range:
        size = 0
        for G in _population(n, STAR_FILTERS, source, jobs):
            size += 1
            if not is_pancyclic(G):
                rep.violate(G, "not-pancyclic")
        rep.counts[f"population_n{n}"] = size
        rep.population += size
        rep.notes.append(POPULATION_NOTE.format(n=n))
    rep.runtime = time.perf_counter() - t0
    return rep


def theorem6_boundary(*, jobs: int = 1) -> CampaignReport:
    """Order 6 with the assertion inverted: list 2-connected [4,2]-graphs that are not pancyclic.

    The campaign passes when C_6 is among them and is hamiltonian but not
    pancyclic, i.e. the order bound of the theorem cannot be lowered.
    """
    rep = CampaignReport("theorem6-boundary", {"n": 6})
    t0 = time.perf_counter()
    C6 = cycle_graph(6)
    exceptions = []
    for G in generate(6, STAR_FILTERS, jobs=jobs):
        rep.population += 1
        if not is_pancyclic(G):
            exceptions.append(G)
    rep.graphs = sorted(canonical_form(G).graph6 for G in exceptions)
    rep.counts["non_pancyclic"] = len(exceptions)
    c6_key = canonical_form(C6).graph6
    checks = {
        "c6-is-[4,2]": is_st_graph(C6, (4, 2)),
        "c6-2-connected": is_biconnected(C6),
        "c6-hamiltonian": is_hamiltonian(C6),
        "c6-not-pancyclic": not is_pancyclic(C6),
        "c6-spectrum-is-{6}": set(cycle_spectrum(C6)) == {6},
        "c6-among-exceptions": c6_key in rep.graphs,
    }
    for name, ok in checks.items():
        if not ok:
            rep.violate(C6, "boundary-check", name)
    rep.runtime = time.perf_counter() - t0
    return rep


def campaign_ce_gap(n: int = 9, *, jobs: int = 1, big: bool = False, source=None) -> CampaignReport:
    """Count 2-connected [4,2]-graphs of order n with kappa < alpha."""
    _check_range("ce-gap", [n], 4, 10, big)
    rep = CampaignReport("ce-gap", {"n": n})
    t0 = time.perf_counter()
    gap = []
    for G in _population(n, STAR_FILTERS, source, jobs):
        rep.population += 1
        if vertex_connectivity(G) < independence_number(G):
            gap.append(G)
    members = _unique(gap)
    rep.graphs = [key for key, _ in members]
    rep.counts["ce_gap"] = len(members)
    for _, G in members:
        if n >= 7 and not is_pancyclic(G):
            rep.violate(G, "not-pancyclic")
    if n == 9 and len(members) != 398:
        rep.violate(None, "count-mismatch", f"expected 398, found {len(members)}")
    if n >= 7:
        zkey = canonical_form(z_graph(n)).graph6
        rep.counts["z_member"] = int(zkey in rep.graphs)
        if zkey not in rep.graphs:
            rep.violate(z_graph(n), "z-not-counted")
    rep.notes.append(POPULATION_NOTE.format(n=n) + " with kappa < alpha")
    rep.notes.append("assumption: the reference count is of isomorphism classes, not labelled graphs")
    rep.runtime = time.perf_counter() - t0
    return rep


def campaign_theorem2(n_range: Sequence[int] = (7, 8), *, jobs: int = 1, big: bool = False, source=None):
    """A k-cycle with k < n in a 2-connected [4,2]-graph of order n >= 7 extends to a (k+1)-cycle."""
    _check_range("theorem2", n_range, 7, 9, big)
    rep = CampaignReport("theorem2", {"n": list(n_range)})
    t0 = time.perf_counter()
    for n in n_range:
        size = 0
        for G in _population(n, STAR_FILTERS, source, jobs):
            size += 1
            gaps = _extension_gaps(G)
            if gaps:
                rep.violate(G, "cycle-extension", f"k={gaps[0]}")
        rep.counts[f"population_n{n}"] = size
        rep.population += size
        rep.notes.append(POPULATION_NOTE.format(n=n))
    rep.runtime = time.perf_counter() - t0
    return rep


def campaign_lemma5(p: int, n_range: Optional[Sequence[int]] = None, *, jobs: int = 1, big: bool = False, source=None):
    """Triangle-free [p+2,p]-graphs with min degree >= p and n >= 2p+3."""
    rep = CampaignReport("lemma5", {"p": p})
    t0 = time.perf_counter()
    if p == 2:
        ns = list(n_range or (7, 8, 9))
        _check_range("lemma5 p=2", ns, 7, 10, big)
        _lemma5_search(rep, p, ns, jobs, source)
    elif p == 4:
        ns = list(n_range or (11,))
        _check_range("lemma5 p=4", ns, 11, 12, big, big_from=12)
        _lemma5_search(rep, p, ns, jobs, source)
    elif p == 6:
        _lemma5_forward(rep)
    else:
        raise CampaignError(f"lemma5: p must be 2, 4 or 6, got {p}")
    rep.runtime = time.perf_counter() - t0
    return rep


def _lemma5_search(rep: CampaignReport, p: int, ns: Sequence[int], jobs: int, source) -> None:
    rep.parameters["n"] = list(ns)
    reason = f"triangle-free-[{p + 2},{p}]-min-degree-{p}"
    for n in ns:
        size = hits = 0
        for G in _population(n, (TriangleFree(), MinDegree(p)), source, jobs):
            size += 1
            if is_st_graph(G, (p + 2, p)):
                hits += 1
                rep.violate(G, reason)
        rep.counts[f"population_n{n}"] = size
        rep.counts[f"st_graphs_n{n}"] = hits
        rep.population += size
    rep.notes.append(f"population: triangle-free graphs with min degree >= {p}; none may be a [{p + 2},{p}]-graph")


def _lemma5_forward(rep: CampaignReport) -> None:
    p, q = 6, 3
    G = c5_blowup(q)
    rep.population = 1
    deg = {r.bit_count() for r in G.adj}
    if not is_triangle_free(G):
        rep.violate(G, "not-triangle-free")
    if deg != {p}:
        rep.violate(G, "not-regular")
    if G.order < 2 * p + 3:
        rep.violate(G, "order-too-small")
    if not is_st_graph(G, (p + 2, p)):
        rep.violate(G, "not-st", f"[{p + 2},{p}]")
    # the only blow-up of C_5 up to order 16 that satisfies every hypothesis
    qualifying = []
    for r in range(1, 4):
        H = c5_blowup(r)
        if (
            H.order >= 2 * p + 3
            and min(x.bit_count() for x in H.adj) >= p
            and is_triangle_free(H)
            and is_st_graph(H, (p + 2, p))
        ):
            qualifying.append(r)
    rep.counts["qualifying_blowups"] = len(qualifying)
    if qualifying != [q]:
        rep.violate(None, "uniqueness", f"qualifying q values {qualifying}")
    bounds = c5_blowup_case_bounds(q)
    for parts, need in ((3, 2 * q), (4, 2 * q + 1), (5, 4 * q - 1)):
        got = bounds.get(parts)
        rep.counts[f"min_edges_parts{parts}"] = -1 if got is None else got
        if got is not None and got < need:
            rep.violate(G, "case-bound", f"{parts} parts: {got} < {need}")
    if min(bounds) < 3:
        rep.violate(G, "case-bound", "a subset meets fewer than 3 parts")


def campaign_qform(n_max: int = 14) -> CampaignReport:
    """Closed-form bounds against exhaustive extrema for 2 <= k <= n <= n_max."""
    if not 2 <= n_max <= 14:
        raise CampaignError(f"qform: n_max must be in [2, 14], got {n_max}")
    rep = CampaignReport("qform", {"n_max": n_max})
    t0 = time.perf_counter()
    for n in range(2, n_max + 1):
        for k in range(2, n + 1):
            b = lemma3_bounds(n, k)
            lo, _, hi, _ = brute_force_extrema(n, k, "path")
            c = lemma4_lower(n, k)
            clo, _, _, _ = brute_force_extrema(n, k, "cycle")
            ok = (
                lo == b.lower
                and hi == b.upper
                and path_form(b.lower_witness) == b.lower
                and path_form(b.upper_witness) == b.upper
                and clo == c.lower
                and cycle_form(c.lower_witness) == c.lower
            )
            rep.rows.append(
                {
                    "n": n, "k": k,
                    "path_lower": b.lower, "path_min": lo,
                    "path_upper": b.upper, "path_max": hi,
                    "cycle_lower": c.lower, "cycle_min": clo,
                    "ok": ok,
                }
            )
            if not ok:
                rep.violate(None, "bound-mismatch", f"n={n} k={k}")
    rep.population = len(rep.rows)
    rep.counts["pairs"] = len(rep.rows)
    rep.runtime = time.perf_counter() - t0
    return rep


def campaign_z(n_range: Sequence[int] = tuple(range(7, 17))) -> CampaignReport:
    """Z_n is a 2-connected [4,2]-graph with kappa = 2 < alpha = 3, and pancyclic."""
    _check_range("z", n_range, 7, 16, big=True)
    rep = CampaignReport("z", {"n": list(n_range)})
    t0 = time.perf_counter()
    for n in n_range:
        G = z_graph(n)
        rep.population += 1
        kappa, alpha = vertex_connectivity(G), independence_number(G)
        rep.rows.append({"n": n, "kappa": kappa, "alpha": alpha})
        if not is_st_graph(G, (4, 2)):
            rep.violate(G, "not-[4,2]")
        if not connectivity_at_least(G, 2):
            rep.violate(G, "not-2-connected")
        if kappa != 2:
            rep.violate(G, "kappa-not-2")
        if alpha != 3:
            rep.violate(G, "alpha-not-3")
        if not is_pancyclic(G):
            rep.violate(G, "not-pancyclic")
    rep.runtime = time.perf_counter() - t0
    return rep


CAMPAIGNS = ("theorem6", "theorem6-boundary", "ce-gap", "theorem2", "lemma5", "qform", "z")
