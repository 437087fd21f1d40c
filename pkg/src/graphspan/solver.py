"""Span computation through connected components of a distance-filtered product.

For rules R and threshold D, keep the pair-vertices ``(u, v)`` of ``H * H``
(product chosen by R) with ``d(u, v) >= D``. The players can keep distance D
while covering H exactly when some component of that induced subgraph
projects onto H on both sides (vertex-wise or edge-wise, per goal). The span
is the largest such D, at most ``rad(H)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components as _sparse_components

from .graph import DistanceMatrix, Graph, _require_connected, radius
from .products import pair_label, product_edge_blocks
from .rules import VARIANTS, Goal, MoveRules
from .witness import WitnessComponent

__all__ = [
    "Goal",
    "MoveRules",
    "SpanResult",
    "all_spans",
    "exists_safe_walk",
    "filtered_product",
    "find_witness",
    "projections_surjective",
    "span",
]


@dataclass(frozen=True)
class SpanResult:
    value: int
    rules: MoveRules
    goal: Goal
    witness: WitnessComponent | None = None
    radius: int | None = None


def _filtered_edges(H: Graph, dist: DistanceMatrix, D: int, rules: MoveRules):
    """Kept-pair mask and oriented edges of the filtered product."""
    keep = (dist.array >= D).ravel()
    srcs, dsts = [], []
    for s, t in product_edge_blocks(H, rules.product):
        m = keep[s] & keep[t]
        srcs.append(s[m])
        dsts.append(t[m])
    src = np.concatenate(srcs) if srcs else np.empty(0, dtype=np.int64)
    dst = np.concatenate(dsts) if dsts else np.empty(0, dtype=np.int64)
    return keep, src, dst


def filtered_product(H: Graph, D: int, rules: MoveRules, dist: DistanceMatrix | None = None) -> tuple[Graph, list[tuple[int, int]]]:
    """Subgraph of the rules' product induced on pairs at distance at least ``D``.

    Returns the graph (vertex labels ``"u|v"``) and ``pairs[i] = (u, v)`` for
    each of its vertices, in ascending pair-index order.
    """
    dist = _require_connected(H, dist)
    n = H.n
    keep, src, dst = _filtered_edges(H, dist, D, rules)
    kept = np.flatnonzero(keep)
    local = np.full(n * n, -1, dtype=np.int64)
    local[kept] = np.arange(len(kept))
    adj: list[list[int]] = [[] for _ in kept]
    for s, t in zip(local[src].tolist(), local[dst].tolist()):
        adj[s].append(t)
    labels = tuple(pair_label(H, int(p)) for p in kept)
    pairs = [divmod(int(p), n) for p in kept]
    return Graph(labels, tuple(tuple(sorted(a)) for a in adj)), pairs


def projections_surjective(
    H: Graph,
    pairs: Iterable[tuple[int, int]],
    edges: Iterable[tuple[int, int]],
    goal: Goal,
) -> bool:
    """Check that both coordinate projections of a pair set cover ``H``.

    ``edges`` are pair-index edges (``i * n + j``) among ``pairs``. For the
    edge goal every edge of ``H`` must also be the image of a non-collapsed
    component edge under each projection.
    """
    n = H.n
    pairs = list(pairs)
    if {u for u, _ in pairs} != set(range(n)) or {v for _, v in pairs} != set(range(n)):
        return False
    if goal is Goal.VERTEX:
        return True
    want = set(H.edges())
    first, second = set(), set()
    for p, q in edges:
        u1, v1 = divmod(p, n)
        u2, v2 = divmod(q, n)
        if u1 != u2:
            first.add((min(u1, u2), max(u1, u2)))
        if v1 != v2:
            second.add((min(v1, v2), max(v1, v2)))
    return want <= first and want <= second


def _qualifying_component(H: Graph, dist: DistanceMatrix, D: int, rules: MoveRules, goal: Goal):
    """Pair indices and oriented edges of the lowest qualifying component, or None."""
    n = H.n
    N = n * n
    keep, src, dst = _filtered_edges(H, dist, D, rules)
    kept = np.flatnonzero(keep)
    if len(kept) == 0:
        return None
    A = coo_matrix((np.ones(len(src), dtype=np.int8), (src, dst)), shape=(N, N)).tocsr()
    ncomp, labels = _sparse_components(A, directed=False)

    comp = labels[kept]
    first, second = np.divmod(kept, n)
    cov1 = np.zeros((ncomp, n), dtype=bool)
    cov2 = np.zeros((ncomp, n), dtype=bool)
    cov1[comp, first] = True
    cov2[comp, second] = True
    ok = cov1.all(axis=1) & cov2.all(axis=1)

    if goal is Goal.EDGE and ok.any() and H.edge_count:
        cand = np.flatnonzero(ok)
        slot = np.full(ncomp, -1, dtype=np.int64)
        slot[cand] = np.arange(len(cand))
        eidx = np.full((n, n), -1, dtype=np.int64)
        for k, (u, v) in enumerate(H.edges()):
            eidx[u, v] = eidx[v, u] = k
        m = H.edge_count
        e1 = np.zeros((len(cand), m), dtype=bool)
        e2 = np.zeros((len(cand), m), dtype=bool)
        cs = slot[labels[src]]
        u1, v1 = np.divmod(src, n)
        u2, v2 = np.divmod(dst, n)
        sel = (cs >= 0) & (u1 != u2)
        e1[cs[sel], eidx[u1[sel], u2[sel]]] = True
        sel = (cs >= 0) & (v1 != v2)
        e2[cs[sel], eidx[v1[sel], v2[sel]]] = True
        ok[cand] = e1.all(axis=1) & e2.all(axis=1)

    good = np.flatnonzero(ok)
    if len(good) == 0:
        return None
    # deterministic choice: the qualifying component holding the smallest pair index
    min_index = np.full(ncomp, N, dtype=np.int64)
    np.minimum.at(min_index, comp, kept)
    best = good[np.argmin(min_index[good])]
    members = kept[comp == best]
    on = (labels[src] == best) & (src < dst)
    return members, src[on], dst[on]


def exists_safe_walk(H: Graph, D: int, rules: MoveRules, goal: Goal, dist: DistanceMatrix | None = None) -> bool:
    """Whether both players can cover ``H`` under ``rules`` while always at distance >= ``D``."""
    dist = _require_connected(H, dist)
    if D <= 0:
        return True
    return _qualifying_component(H, dist, D, rules, goal) is not None


def find_witness(H: Graph, D: int, rules: MoveRules, goal: Goal, dist: DistanceMatrix | None = None) -> WitnessComponent | None:
    """The lowest-indexed qualifying component at threshold ``D``, if any."""
    dist = _require_connected(H, dist)
    found = _qualifying_component(H, dist, max(D, 0), rules, goal)
    if found is None:
        return None
    members, src, dst = found
    n = H.n
    pairs = tuple(divmod(int(p), n) for p in members)
    edges = tuple(sorted(zip(src.tolist(), dst.tolist())))
    eps = int(min(dist.array[u, v] for u, v in pairs))
    return WitnessComponent(pairs=pairs, edges=edges, product_kind=rules.product, epsilon=eps, n=n)


def span(H: Graph, rules: MoveRules, goal: Goal, dist: DistanceMatrix | None = None, linear: bool = False) -> SpanResult:
    """Largest safety distance both players can keep while covering ``H``.

    Binary search over ``[0, rad(H)]`` by default; ``linear=True`` scans
    downward from the radius instead. Both give the same value because
    feasibility is monotone in the distance.
    """
    dist = _require_connected(H, dist)
    rad = radius(H, dist)
    if linear:
        value = 0
        for D in range(rad, 0, -1):
            if exists_safe_walk(H, D, rules, goal, dist):
                value = D
                break
    else:
        lo, hi = 0, rad
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if exists_safe_walk(H, mid, rules, goal, dist):
                lo = mid
            else:
                hi = mid - 1
        value = lo
    witness = find_witness(H, value, rules, goal, dist) if value >= 1 else None
    return SpanResult(value=value, rules=rules, goal=goal, witness=witness, radius=rad)


def all_spans(H: Graph, linear: bool = False) -> tuple[SpanResult, ...]:
    """All six spans in the order strong-V, strong-E, direct-V, direct-E, Cartesian-V, Cartesian-E."""
    dist = _require_connected(H)
    return tuple(span(H, r, g, dist, linear=linear) for r, g in VARIANTS)
