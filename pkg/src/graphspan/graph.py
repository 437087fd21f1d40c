"""Simple undirected graphs on labeled vertices, with hop distances and metric invariants."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np


class GraphError(ValueError):
    """Raised when a graph violates a structural precondition."""


class ParseError(GraphError):
    """Raised for malformed edge-list input."""

    def __init__(self, lineno: int, reason: str):
        super().__init__(f"line {lineno}: {reason}")
        self.lineno = lineno
        self.reason = reason


class DisconnectedGraphError(GraphError):
    pass


class _Unreachable:
    """Distance between vertices in different components.

    Deliberately supports no arithmetic or ordering, so misuse fails loudly.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "UNREACHABLE"

    def __reduce__(self):
        return (_Unreachable, ())


UNREACHABLE = _Unreachable()


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph. Vertices are the indices ``0..n-1``; ``labels[i]`` names vertex ``i``."""

    labels: tuple[str, ...]
    adjacency: tuple[tuple[int, ...], ...]
    _index: dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.labels) != len(self.adjacency):
            raise GraphError("labels and adjacency differ in length")
        if len(set(self.labels)) != len(self.labels):
            raise GraphError("vertex labels must be distinct")
        n = len(self.labels)
        for v, nbrs in enumerate(self.adjacency):
            if list(nbrs) != sorted(set(nbrs)):
                raise GraphError(f"adjacency of {v} must be sorted and duplicate-free")
            for u in nbrs:
                if not 0 <= u < n:
                    raise GraphError(f"neighbor index {u} out of range")
                if u == v:
                    raise GraphError(f"self-loop at {self.labels[v]!r}")
                if v not in self.adjacency[u]:
                    raise GraphError("adjacency is not symmetric")
        object.__setattr__(self, "_index", {lab: i for i, lab in enumerate(self.labels)})

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[str, str]], vertices: Iterable[str] = ()) -> Graph:
        """Build a graph from label pairs; extra isolated ``vertices`` come first."""
        labels: list[str] = []
        index: dict[str, int] = {}

        def add(lab):
            lab = str(lab)
            if lab not in index:
                index[lab] = len(labels)
                labels.append(lab)
            return index[lab]

        for lab in vertices:
            add(lab)
        adj: list[set[int]] = []
        for a, b in edges:
            i, j = add(a), add(b)
            while len(adj) < len(labels):
                adj.append(set())
            if i == j:
                raise GraphError(f"self-loop at {a!r}")
            if j in adj[i]:
                raise GraphError(f"duplicate edge {a!r} {b!r}")
            adj[i].add(j)
            adj[j].add(i)
        while len(adj) < len(labels):
            adj.append(set())
        return cls(tuple(labels), tuple(tuple(sorted(s)) for s in adj))

    @classmethod
    def from_index_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None) -> Graph:
        """Build a graph on ``n`` vertices from index pairs. Labels default to ``"0".."n-1"``."""
        if labels is None:
            labels = [str(i) for i in range(n)]
        adj: list[set[int]] = [set() for _ in range(n)]
        for i, j in edges:
            i, j = int(i), int(j)
            if i == j:
                raise GraphError(f"self-loop at {i}")
            if j in adj[i]:
                raise GraphError(f"duplicate edge {i} {j}")
            adj[i].add(j)
            adj[j].add(i)
        return cls(tuple(labels), tuple(tuple(sorted(s)) for s in adj))

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise GraphError(f"unknown vertex {label!r}") from None

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> list[tuple[int, int]]:
        """Canonical edge list: pairs ``(i, j)`` with ``i < j``, sorted."""
        return [(u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v]

    def edge_index(self) -> dict[tuple[int, int], int]:
        """Map each edge (both orientations) to its position in :meth:`edges`."""
        out = {}
        for k, (u, v) in enumerate(self.edges()):
            out[u, v] = k
            out[v, u] = k
        return out

    def oriented_edges(self) -> tuple[np.ndarray, np.ndarray]:
        """Both orientations of every edge as parallel ``(src, dst)`` arrays."""
        src = [u for u, nbrs in enumerate(self.adjacency) for _ in nbrs]
        dst = [v for nbrs in self.adjacency for v in nbrs]
        return np.asarray(src, dtype=np.int64), np.asarray(dst, dtype=np.int64)

    def to_edge_list(self) -> str:
        lines = [f"{self.labels[u]} {self.labels[v]}" for u, v in self.edges()]
        return "\n".join(lines) + ("\n" if lines else "")

    def is_connected(self) -> bool:
        return connected_components(self).count <= 1


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format: one ``<label> <label>`` pair per line.

    Blank lines and lines starting with ``#`` are skipped. Vertex indices follow
    order of first appearance.
    """
    labels: list[str] = []
    index: dict[str, int] = {}
    adj: list[set[int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(lineno, f"expected two vertex labels, got {len(parts)}")
        a, b = parts
        if a == b:
            raise ParseError(lineno, f"self-loop at {a!r}")
        ids = []
        for lab in (a, b):
            if lab not in index:
                index[lab] = len(labels)
                labels.append(lab)
                adj.append(set())
            ids.append(index[lab])
        i, j = ids
        if j in adj[i]:
            raise ParseError(lineno, f"duplicate edge {a} {b}")
        adj[i].add(j)
        adj[j].add(i)
    return Graph(tuple(labels), tuple(tuple(sorted(s)) for s in adj))


def bfs_distances(G: Graph, source: int) -> list[int | None]:
    """Hop distances from ``source``; ``None`` for unreachable vertices."""
    dist: list[int | None] = [None] * G.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in G.adjacency[u]:
            if dist[w] is None:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


class DistanceMatrix:
    """All-pairs hop distances.

    Indexing ``D[u, v]`` yields an ``int`` or :data:`UNREACHABLE`. The raw
    ``array`` stores ``-1`` for unreachable pairs and is meant for vectorized
    use on connected graphs only.
    """

    def __init__(self, array: np.ndarray):
        self.array = array
        self.array.setflags(write=False)

    def __getitem__(self, uv: tuple[int, int]):
        d = int(self.array[uv])
        return UNREACHABLE if d < 0 else d

    def __len__(self) -> int:
        return self.array.shape[0]

    @property
    def connected(self) -> bool:
        return bool((self.array >= 0).all())


def all_pairs_distances(G: Graph) -> DistanceMatrix:
    """One breadth-first search per source vertex."""
    out = np.full((G.n, G.n), -1, dtype=np.int64)
    for s in range(G.n):
        for t, d in enumerate(bfs_distances(G, s)):
            if d is not None:
                out[s, t] = d
    return DistanceMatrix(out)


def _require_connected(G: Graph, dist: DistanceMatrix | None = None) -> DistanceMatrix:
    if G.n == 0:
        raise GraphError("graph has no vertices")
    if dist is None:
        dist = all_pairs_distances(G)
    if not dist.connected:
        raise DisconnectedGraphError("graph is not connected")
    return dist


def eccentricity(G: Graph, dist: DistanceMatrix | None, v: int) -> int:
    dist = _require_connected(G, dist)
    return int(dist.array[v].max())


def radius(G: Graph, dist: DistanceMatrix | None = None) -> int:
    dist = _require_connected(G, dist)
    return int(dist.array.max(axis=1).min())


def diameter(G: Graph, dist: DistanceMatrix | None = None) -> int:
    dist = _require_connected(G, dist)
    return int(dist.array.max())


@dataclass(frozen=True)
class Partition:
    """Component id per vertex. Ids are numbered by each component's lowest vertex."""

    ids: tuple[int, ...]
    count: int

    def members(self, cid: int) -> list[int]:
        return [v for v, c in enumerate(self.ids) if c == cid]


def connected_components(G: Graph) -> Partition:
    ids = [-1] * G.n
    count = 0
    for s in range(G.n):
        if ids[s] >= 0:
            continue
        ids[s] = count
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in G.adjacency[u]:
                if ids[w] < 0:
                    ids[w] = count
                    queue.append(w)
        count += 1
    return Partition(tuple(ids), count)


def induced_subgraph(G: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``vertices``.

    Returns the subgraph and ``mapping`` with ``mapping[i]`` the index in ``G`` of
    subgraph vertex ``i``. Subgraph vertices keep ascending order of ``G`` indices.
    """
    keep = sorted(set(int(v) for v in vertices))
    for v in keep:
        if not 0 <= v < G.n:
            raise GraphError(f"vertex {v} out of range")
    local = {v: i for i, v in enumerate(keep)}
    adj = tuple(tuple(local[w] for w in G.adjacency[v] if w in local) for v in keep)
    return Graph(tuple(G.labels[v] for v in keep), adj), keep


def is_n_friendly(G: Graph, n: int, dist: DistanceMatrix | None = None) -> bool:
    """Whether every neighbor of one end of a distance-``n`` pair can be mirrored at the other end.

    Requires ``diam(G) >= n``. For all ``u, v`` with ``d(u, v) = n`` and every
    ``w`` adjacent to ``u`` there must be ``z`` adjacent to ``v`` with ``d(w, z) = n``.
    """
    if n < 1:
        raise GraphError("n must be a positive integer")
    dist = _require_connected(G, dist)
    d = dist.array
    if d.max() < n:
        return False
    for u, v in zip(*np.nonzero(d == n)):
        nv = list(G.adjacency[v])
        for w in G.adjacency[u]:
            if not (d[w, nv] == n).any():
                return False
    return True
