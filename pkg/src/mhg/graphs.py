"""Edge-labelled graphs, labelled cycles and the numerical triangle constraints.

Graphs carry a symmetric partial labelling of vertex pairs by integer distances.
A labelled cycle is the cyclic sequence of its edge labels; its canonical form
is the lexicographically least tuple over all rotations and the reflection.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .params import ParameterSequence

Pair = tuple[int, int]


def _norm_pair(u: int, v: int) -> Pair:
    return (u, v) if u < v else (v, u)


class EdgeLabelledGraph:
    """Graph on vertices 0..n-1 with at most one positive label per pair."""

    def __init__(self, n: int, edges: "object" = ()) -> None:
        if n < 1:
            raise ValueError("graph needs at least one vertex")
        self.n = n
        labels: dict[Pair, int] = {}
        for u, v, label in edges:
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise ValueError(f"bad edge ({u}, {v})")
            if label < 1:
                raise ValueError(f"label {label} on ({u}, {v}) must be positive")
            key = _norm_pair(u, v)
            if key in labels:
                raise ValueError(f"duplicate edge {key}")
            labels[key] = label
        self._labels = labels

    @property
    def labels(self) -> dict[Pair, int]:
        return dict(self._labels)

    def label(self, u: int, v: int) -> int | None:
        return self._labels.get(_norm_pair(u, v))

    def edges(self) -> list[tuple[int, int, int]]:
        return sorted((u, v, l) for (u, v), l in self._labels.items())

    def pairs(self) -> list[Pair]:
        return list(combinations(range(self.n), 2))

    def non_edges(self) -> list[Pair]:
        return [p for p in self.pairs() if p not in self._labels]

    def is_complete(self) -> bool:
        return len(self._labels) == self.n * (self.n - 1) // 2

    def max_label(self) -> int:
        return max(self._labels.values(), default=0)

    def adjacency(self) -> list[dict[int, int]]:
        """Per-vertex map neighbour -> label."""
        adj: list[dict[int, int]] = [{} for _ in range(self.n)]
        for (u, v), l in self._labels.items():
            adj[u][v] = l
            adj[v][u] = l
        return adj

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, EdgeLabelledGraph)
            and self.n == other.n
            and self._labels == other._labels
        )

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._labels.items())))

    def __repr__(self) -> str:
        return f"EdgeLabelledGraph(n={self.n}, edges={self.edges()})"

    def to_json_obj(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges()]}

    def dumps(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)

    @classmethod
    def from_json_obj(cls, obj: dict) -> "EdgeLabelledGraph":
        if not isinstance(obj, dict) or "n" not in obj:
            raise ValueError("graph object needs an \"n\" field")
        n = obj["n"]
        if not isinstance(n, int):
            raise ValueError("\"n\" must be an integer")
        edges = obj.get("edges", [])
        if not isinstance(edges, list):
            raise ValueError("\"edges\" must be a list of [u, v, label] triples")
        parsed = []
        for i, e in enumerate(edges):
            if not (isinstance(e, list) and len(e) == 3 and all(isinstance(x, int) for x in e)):
                raise ValueError(f"edges[{i}] must be an integer triple [u, v, label]")
            parsed.append(tuple(e))
        return cls(n, parsed)

    @classmethod
    def loads(cls, text: str) -> "EdgeLabelledGraph":
        return cls.from_json_obj(json.loads(text))


def canonical_cycle(labels) -> tuple[int, ...]:
    """Lexicographically least rotation of the label sequence or its reversal."""
    t = tuple(labels)
    k = len(t)
    if k < 3:
        raise ValueError("a cycle has at least 3 edges")
    if any(l < 1 for l in t):
        raise ValueError("cycle labels must be positive")
    best = t
    for seq in (t, t[::-1]):
        for i in range(k):
            rot = seq[i:] + seq[:i]
            if rot < best:
                best = rot
    return best


def perimeter(labels) -> int:
    return sum(labels)


class TriangleViolation(enum.Enum):
    NON_METRIC = "NonMetric"
    K1_LOW = "K1Low"
    K2_HIGH = "K2High"
    C0_HIGH = "C0High"
    C1_HIGH = "C1High"


@dataclass(frozen=True)
class TriangleVerdict:
    labels: tuple[int, int, int]
    violations: frozenset[TriangleViolation]

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def perimeter(self) -> int:
        return sum(self.labels)


def triangle_verdict(p: ParameterSequence, a: int, b: int, c: int) -> TriangleVerdict:
    """Constraint check for one triangle.

    Odd perimeter q with shortest edge m requires 2K1 < q < 2K2 + 2m and
    q < C1; even perimeter requires q < C0; and the triangle inequality must
    hold either way.
    """
    for l in (a, b, c):
        if not 1 <= l <= p.delta:
            raise ValueError(f"label {l} out of range 1..{p.delta}")
    q = a + b + c
    m = min(a, b, c)
    bad = set()
    if 2 * max(a, b, c) > q:
        bad.add(TriangleViolation.NON_METRIC)
    if q % 2:
        if q <= 2 * p.k1:
            bad.add(TriangleViolation.K1_LOW)
        if q >= 2 * p.k2 + 2 * m:
            bad.add(TriangleViolation.K2_HIGH)
        if q >= p.c1:
            bad.add(TriangleViolation.C1_HIGH)
    elif q >= p.c0:
        bad.add(TriangleViolation.C0_HIGH)
    return TriangleVerdict((a, b, c), frozenset(bad))


def first_violating_triangle(
    p: ParameterSequence, g: EdgeLabelledGraph
) -> tuple[tuple[int, int, int], TriangleVerdict] | None:
    """First fully labelled triangle (by vertex triple) with a violation."""
    for u, v, w in combinations(range(g.n), 3):
        luv, luw, lvw = g.label(u, v), g.label(u, w), g.label(v, w)
        if luv is None or luw is None or lvw is None:
            continue
        verdict = triangle_verdict(p, luv, luw, lvw)
        if not verdict.ok:
            return (u, v, w), verdict
    return None


def is_member(p: ParameterSequence, g: EdgeLabelledGraph) -> bool:
    """Complete, labels within 1..delta, and every triangle constraint holds."""
    if not g.is_complete():
        return False
    if g.max_label() > p.delta:
        return False
    return first_violating_triangle(p, g) is None


def closed_walks_with_vertices(
    g: EdgeLabelledGraph, max_len: int
) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All closed walks of length 3..max_len through labelled edges.

    Yields (vertices, labels) with len(vertices) == len(labels); the walk
    returns from the last vertex to the first.  Vertices and edges may repeat.
    Order: by length, then lexicographically by vertex sequence.
    """
    adj = g.adjacency()
    nbrs = [sorted(a) for a in adj]
    for length in range(3, max_len + 1):
        stack = [(v,) for v in reversed(range(g.n))]
        while stack:
            path = stack.pop()
            if len(path) == length:
                if path[0] in adj[path[-1]]:
                    labels = tuple(
                        adj[path[i]][path[(i + 1) % length]] for i in range(length)
                    )
                    yield path, labels
                continue
            # Leave room to come back: any vertex works, closure is checked at
            # full length.
            for w in reversed(nbrs[path[-1]]):
                stack.append(path + (w,))
    return


def closed_walks(g: EdgeLabelledGraph, max_len: int) -> Iterator[tuple[int, ...]]:
    """Label sequences of all closed walks of length 3..max_len."""
    for _, labels in closed_walks_with_vertices(g, max_len):
        yield labels
