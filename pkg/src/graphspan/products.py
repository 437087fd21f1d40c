"""Strong, direct and Cartesian products of a graph with itself.

Pair-vertex ``(i, j)`` of ``H * H`` has index ``i * n + j`` (row-major). This
layout is stable and used by witnesses and serialized output.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .graph import Graph, GraphError

DEFAULT_MATERIALIZE_LIMIT = 64


class ProductKind(enum.Enum):
    STRONG = "strong"
    DIRECT = "direct"
    CARTESIAN = "cartesian"


class Side(enum.Enum):
    FIRST = 1
    SECOND = 2


def pair_index(i: int, j: int, n: int) -> int:
    return i * n + j


def project(pair: int, side: Side, n: int) -> int:
    """Coordinate of pair-vertex ``pair`` on the given side of an ``n``-vertex factor."""
    if not 0 <= pair < n * n:
        raise GraphError(f"pair index {pair} out of range for n={n}")
    i, j = divmod(pair, n)
    return i if side is Side.FIRST else j


def pair_label(H: Graph, pair: int) -> str:
    i, j = divmod(pair, H.n)
    return f"{H.labels[i]}|{H.labels[j]}"


def product_edge_blocks(H: Graph, kind: ProductKind, block: int = 4096) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    """Yield oriented product edges as ``(src, dst)`` pair-index arrays, in blocks.

    Every undirected product edge appears once in each orientation. Direct
    edges are generated in chunks of ``block`` first-coordinate moves so the
    ``O(m^2)`` edge set never has to sit in memory at once.
    """
    n = H.n
    src, dst = H.oriented_edges()
    verts = np.arange(n, dtype=np.int64)
    if kind in (ProductKind.CARTESIAN, ProductKind.STRONG):
        # first player moves, second stays
        yield (src[:, None] * n + verts[None, :]).ravel(), (dst[:, None] * n + verts[None, :]).ravel()
        # second player moves, first stays
        yield (verts[:, None] * n + src[None, :]).ravel(), (verts[:, None] * n + dst[None, :]).ravel()
    if kind in (ProductKind.DIRECT, ProductKind.STRONG):
        step = max(1, block // max(1, len(src)))
        for lo in range(0, len(src), step):
            a, b = src[lo:lo + step], dst[lo:lo + step]
            yield (a[:, None] * n + src[None, :]).ravel(), (b[:, None] * n + dst[None, :]).ravel()


def pair_adjacent(H: Graph, kind: ProductKind, p: int, q: int) -> bool:
    """Adjacency of two pair-vertices, decided from the factor directly."""
    n = H.n
    u1, v1 = divmod(p, n)
    u2, v2 = divmod(q, n)
    first = H.has_edge(u1, u2)
    second = H.has_edge(v1, v2)
    cart = (u1 == u2 and second) or (first and v1 == v2)
    direct = first and second
    if kind is ProductKind.CARTESIAN:
        return cart
    if kind is ProductKind.DIRECT:
        return direct
    return cart or direct


@dataclass(frozen=True)
class ProductGraph:
    base: Graph
    kind: ProductKind
    graph: Graph

    def project(self, pair: int, side: Side) -> int:
        return project(pair, side, self.base.n)

    def pair(self, index: int) -> tuple[int, int]:
        return divmod(index, self.base.n)


def build_product(H: Graph, kind: ProductKind, limit: int | None = DEFAULT_MATERIALIZE_LIMIT) -> ProductGraph:
    """Materialize ``H * H`` for the given kind.

    Refuses factors with more than ``limit`` vertices (pass ``None`` to lift
    the cap); the span solver never needs the full product.
    """
    n = H.n
    if n == 0:
        raise GraphError("factor graph has no vertices")
    if limit is not None and n > limit:
        raise GraphError(f"refusing to materialize a product of a {n}-vertex graph (limit {limit})")
    adj: list[list[int]] = [[] for _ in range(n * n)]
    for s, t in product_edge_blocks(H, kind):
        for a, b in zip(s.tolist(), t.tolist()):
            adj[a].append(b)
    labels = tuple(pair_label(H, p) for p in range(n * n))
    return ProductGraph(H, kind, Graph(labels, tuple(tuple(sorted(a)) for a in adj)))
