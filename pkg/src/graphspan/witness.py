"""Witness components, covering walks and validation of explicit player itineraries."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import DistanceMatrix, Graph, GraphError, _require_connected
from .products import ProductKind, pair_adjacent
from .rules import Goal, MoveRules


class WalkError(ValueError):
    pass


@dataclass(frozen=True)
class WitnessComponent:
    """Connected set of pair-vertices of a product, with the edges among them.

    ``pairs`` are ``(u, v)`` tuples in ascending pair-index order, ``edges``
    are pair-index edges ``(p, q)`` with ``p < q`` where ``p = u * n + v``.
    ``epsilon`` is the smallest distance between the two coordinates of any pair.
    """

    pairs: tuple[tuple[int, int], ...]
    edges: tuple[tuple[int, int], ...]
    product_kind: ProductKind
    epsilon: int
    n: int

    def pair_indices(self) -> list[int]:
        return [u * self.n + v for u, v in self.pairs]

    def labeled_pairs(self, H: Graph) -> list[list[str]]:
        return [[H.labels[u], H.labels[v]] for u, v in self.pairs]

    def to_dot(self, H: Graph, name: str = "witness") -> str:
        lines = [f"graph {name} {{"]
        for u, v in self.pairs:
            lines.append(f'  p{u * self.n + v} [label="{H.labels[u]}|{H.labels[v]}"];')
        for p, q in self.edges:
            lines.append(f"  p{p} -- p{q};")
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class WalkPair:
    """Alice's and Bob's positions at each time step, as vertex indices."""

    alice: tuple[int, ...]
    bob: tuple[int, ...]

    def __post_init__(self):
        if len(self.alice) != len(self.bob):
            raise WalkError(f"itineraries differ in length ({len(self.alice)} vs {len(self.bob)})")
        if not self.alice:
            raise WalkError("itineraries must be nonempty")

    def __len__(self) -> int:
        return len(self.alice)

    def to_json(self, H: Graph) -> dict:
        return {"alice": [H.labels[v] for v in self.alice], "bob": [H.labels[v] for v in self.bob]}

    @classmethod
    def from_json(cls, H: Graph, data: dict) -> WalkPair:
        try:
            alice = tuple(H.index(str(x)) for x in data["alice"])
            bob = tuple(H.index(str(x)) for x in data["bob"])
        except KeyError as exc:
            raise WalkError(f"missing key {exc}") from None
        except GraphError as exc:
            raise WalkError(str(exc)) from None
        return cls(alice, bob)


@dataclass(frozen=True)
class ValidationReport:
    weak_hom_ok: tuple[bool, bool]
    rules_ok: bool
    coverage_ok: bool
    min_distance: int
    required_distance: int
    first_violation: tuple[int, str] | None = None

    @property
    def valid(self) -> bool:
        return self.rules_ok and self.coverage_ok and self.min_distance >= self.required_distance


def covering_walk(Z: WitnessComponent, goal: Goal) -> list[tuple[int, int]]:
    """Closed walk through ``Z`` from its smallest pair-vertex.

    Depth-first, neighbors in ascending index order; every tree edge is walked
    down and back up. For the edge goal each remaining edge is added as a
    there-and-back detour from the endpoint that discovers it. The result has
    at most ``2 * len(Z.edges) + 1`` entries.
    """
    if not Z.pairs:
        raise WalkError("witness component is empty")
    n = Z.n
    adj: dict[int, list[int]] = {p: [] for p in Z.pair_indices()}
    for p, q in Z.edges:
        adj[p].append(q)
        adj[q].append(p)
    for p in adj:
        adj[p].sort()

    start = min(adj)
    walk = [start]
    visited = {start}
    used: set[tuple[int, int]] = set()
    stack = [(start, iter(adj[start]))]
    while stack:
        x, it = stack[-1]
        for y in it:
            e = (x, y) if x < y else (y, x)
            if y not in visited:
                visited.add(y)
                used.add(e)
                walk.append(y)
                stack.append((y, iter(adj[y])))
                break
            if goal is Goal.EDGE and e not in used:
                used.add(e)
                walk.extend((y, x))
        else:
            stack.pop()
            if stack:
                walk.append(stack[-1][0])
    if len(visited) != len(adj):
        raise WalkError("witness component is not connected")
    return [divmod(p, n) for p in walk]


def extract_walk_pair(walk: Sequence[tuple[int, int]], H: Graph, kind: ProductKind) -> WalkPair:
    """Split a walk of pair-vertices in ``H * H`` into the two players' itineraries."""
    n = H.n
    for t in range(len(walk) - 1):
        (a, b), (x, y) = walk[t], walk[t + 1]
        if (a, b) != (x, y) and not pair_adjacent(H, kind, a * n + b, x * n + y):
            raise WalkError(f"step {t}: {walk[t]} and {walk[t + 1]} are not adjacent in the {kind.value} product")
    return WalkPair(tuple(p[0] for p in walk), tuple(p[1] for p in walk))


def validate_walk_pair(
    H: Graph,
    wp: WalkPair,
    rules: MoveRules,
    goal: Goal,
    D: int = 0,
    dist: DistanceMatrix | None = None,
) -> ValidationReport:
    """Check an itinerary pair against movement rules, coverage goal and safety distance."""
    dist = _require_connected(H, dist)
    n = H.n
    for v in (*wp.alice, *wp.bob):
        if not 0 <= v < n:
            raise WalkError(f"vertex index {v} out of range")

    violation: tuple[int, str] | None = None
    hom = [True, True]
    rules_ok = True

    def flag(t, reason):
        nonlocal violation, rules_ok
        rules_ok = False
        if violation is None:
            violation = (t, reason)

    for t in range(len(wp) - 1):
        a, x = wp.alice[t], wp.alice[t + 1]
        b, y = wp.bob[t], wp.bob[t + 1]
        if a != x and not H.has_edge(a, x):
            hom[0] = False
            flag(t, "alice jumps to a non-adjacent vertex")
        if b != y and not H.has_edge(b, y):
            hom[1] = False
            flag(t, "bob jumps to a non-adjacent vertex")
        alice_moves, bob_moves = a != x, b != y
        if rules is MoveRules.ACTIVE and alice_moves != bob_moves:
            flag(t, "alice moves while bob stays" if alice_moves else "bob moves while alice stays")
        elif rules is MoveRules.LAZY and alice_moves == bob_moves:
            flag(t, "both players move" if alice_moves else "neither player moves")

    if goal is Goal.VERTEX:
        everything = set(range(n))
        coverage_ok = set(wp.alice) == everything and set(wp.bob) == everything
    else:
        everything = set(H.edges())

        def walked(seq):
            return {(min(p, q), max(p, q)) for p, q in zip(seq, seq[1:]) if p != q}

        coverage_ok = (
            set(wp.alice) == set(range(n))
            and set(wp.bob) == set(range(n))
            and everything <= walked(wp.alice)
            and everything <= walked(wp.bob)
        )

    min_distance = min(int(dist.array[a, b]) for a, b in zip(wp.alice, wp.bob))
    return ValidationReport(
        weak_hom_ok=(hom[0], hom[1]),
        rules_ok=rules_ok,
        coverage_ok=coverage_ok,
        min_distance=min_distance,
        required_distance=D,
        first_violation=violation,
    )
