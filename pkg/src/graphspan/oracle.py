"""Brute-force span oracle.

Searches the game directly: a state is both players' positions plus what each
has covered so far. Nothing here builds or inspects product graphs, so it can
cross-check the product-based solver.
"""

from __future__ import annotations

import heapq
from typing import Callable

from .graph import DistanceMatrix, Graph, _require_connected, radius
from .rules import Goal, MoveRules

MASK_WIDTH = 16


class OracleLimitError(ValueError):
    """The graph is too large for the coverage bitmask."""


def _moves(H: Graph, a: int, b: int, rules: MoveRules):
    """Successor position pairs for one time step."""
    if rules is MoveRules.ACTIVE:
        for x in H.adjacency[a]:
            for y in H.adjacency[b]:
                yield x, y
    elif rules is MoveRules.LAZY:
        for x in H.adjacency[a]:
            yield x, b
        for y in H.adjacency[b]:
            yield a, y
    else:
        # staying in place on both sides is a no-op and is left out
        for x in (a, *H.adjacency[a]):
            for y in (b, *H.adjacency[b]):
                if x != a or y != b:
                    yield x, y


def oracle_exists(
    H: Graph,
    D: int,
    rules: MoveRules,
    goal: Goal,
    dist: DistanceMatrix | None = None,
    on_visit: Callable[[int, int], None] | None = None,
) -> bool:
    """Whether both players can cover ``H`` while always staying at distance >= ``D``.

    ``on_visit(a, b)`` is called with the positions of every expanded state.
    """
    dist = _require_connected(H, dist)
    n = H.n
    if goal is Goal.VERTEX:
        width = n
        if width > MASK_WIDTH:
            raise OracleLimitError(f"{n} vertices exceeds the {MASK_WIDTH}-bit vertex mask")
    else:
        width = H.edge_count
        if width > MASK_WIDTH:
            raise OracleLimitError(f"{width} edges exceeds the {MASK_WIDTH}-bit edge mask")
    full = (1 << width) - 1
    eidx = H.edge_index()

    def far(a, b):
        return dist[a, b] >= D

    # per-position successor lists with the coverage bits each move adds
    succ = {}
    for a in range(n):
        for b in range(n):
            if not far(a, b):
                continue
            out = []
            for x, y in _moves(H, a, b, rules):
                if not far(x, y):
                    continue
                if goal is Goal.VERTEX:
                    ba, bb = 1 << x, 1 << y
                else:
                    ba = 1 << eidx[a, x] if x != a else 0
                    bb = 1 << eidx[b, y] if y != b else 0
                out.append((x * n + y, ba, bb))
            succ[a * n + b] = out

    shift = width
    pos_shift = 2 * width
    lo = (1 << width) - 1
    # best-first on covered bits: still exhaustive before answering False,
    # but reaches full coverage fast when it is possible
    seen = set()
    heap = []
    for p in sorted(succ):
        a, b = divmod(p, n)
        ma, mb = ((1 << a), (1 << b)) if goal is Goal.VERTEX else (0, 0)
        if ma == full and mb == full:
            return True
        s = (p << pos_shift) | (ma << shift) | mb
        seen.add(s)
        heap.append((-(ma.bit_count() + mb.bit_count()), s))
    heapq.heapify(heap)

    while heap:
        _, s = heapq.heappop(heap)
        p = s >> pos_shift
        if on_visit is not None:
            on_visit(*divmod(p, n))
        ma = (s >> shift) & lo
        mb = s & lo
        for q, ba, bb in succ[p]:
            na, nb = ma | ba, mb | bb
            if na == full and nb == full:
                return True
            t = (q << pos_shift) | (na << shift) | nb
            if t not in seen:
                seen.add(t)
                heapq.heappush(heap, (-(na.bit_count() + nb.bit_count()), t))
    return False


def oracle_span(H: Graph, rules: MoveRules, goal: Goal, dist: DistanceMatrix | None = None) -> int:
    dist = _require_connected(H, dist)
    for D in range(radius(H, dist), 0, -1):
        if oracle_exists(H, D, rules, goal, dist):
            return D
    return 0
