"""Colored graphs, degree-bounded subgraphs, and edge-set primitives.

Vertices are dense 0-based integer ids.  An edge is a plain tuple
``(u, v)`` with ``u < v``, so Python set semantics are unambiguous.
A ColoredGraph is the observed graph: every edge is either red
(planted, part of the hidden cycle cover) or blue (background).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

Edge = tuple[int, int]


def edge(u: int, v: int) -> Edge:
    """Canonical edge: endpoints distinct and stored with u < v."""
    if u == v:
        raise ValueError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


def edge_set(pairs: Iterable[tuple[int, int]]) -> frozenset[Edge]:
    return frozenset(edge(u, v) for u, v in pairs)


def symmetric_difference(a: Iterable[Edge], b: Iterable[Edge]) -> frozenset[Edge]:
    """(A \\ B) | (B \\ A) on edge sets."""
    return frozenset(a) ^ frozenset(b)


class ColoredGraph:
    """Observed graph with a red/blue edge coloring.

    Immutable after construction; adjacency lists carry the color inline
    as (neighbor, is_red) pairs so the trail enumeration loop never hits
    a secondary lookup.  A background edge that coincides with a planted
    edge is merged into a single red edge.
    """

    __slots__ = ("n", "edges", "planted", "adj")

    def __init__(self, n: int, edges: Iterable[Edge], planted: Iterable[Edge]):
        self.n = n
        self.planted = edge_set(planted)
        self.edges = edge_set(edges) | self.planted
        for u, v in self.edges:
            if not (0 <= u < v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        adj: list[list[tuple[int, bool]]] = [[] for _ in range(n)]
        for u, v in sorted(self.edges):
            red = (u, v) in self.planted
            adj[u].append((v, red))
            adj[v].append((u, red))
        self.adj = adj
        self._check_red_subgraph()

    def _check_red_subgraph(self) -> None:
        deg = [0] * self.n
        for u, v in self.planted:
            deg[u] += 1
            deg[v] += 1
        bad = [v for v, d in enumerate(deg) if d not in (0, 2)]
        if bad:
            raise ValueError(f"red subgraph is not a 2-factor: degree != 2 at {bad[:5]}")

    @property
    def blue_edges(self) -> frozenset[Edge]:
        return self.edges - self.planted

    def is_red(self, e: Edge) -> bool:
        return e in self.planted

    def red_support(self) -> frozenset[int]:
        return frozenset(v for e in self.planted for v in e)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def without_colors(self) -> "ColoredGraph":
        """Color-stripped copy: what an estimator is allowed to see."""
        return ColoredGraph(self.n, self.edges, ())

    # text format: first line "n m", then m lines "u v c", c in {R, B},
    # edges sorted lexicographically.  Round-trips bit-exactly.
    def save(self, path: str) -> None:
        with open(path, "w", encoding="ascii") as f:
            f.write(self.dumps())

    def dumps(self) -> str:
        lines = [f"{self.n} {len(self.edges)}"]
        for u, v in sorted(self.edges):
            c = "R" if (u, v) in self.planted else "B"
            lines.append(f"{u} {v} {c}")
        return "\n".join(lines) + "\n"

    @classmethod
    def load(cls, path: str) -> "ColoredGraph":
        with open(path, "r", encoding="ascii") as f:
            return cls.loads(f.read())

    @classmethod
    def loads(cls, text: str) -> "ColoredGraph":
        lines = text.strip().splitlines()
        n, m = map(int, lines[0].split())
        if len(lines) - 1 != m:
            raise ValueError(f"header says {m} edges, file has {len(lines) - 1}")
        edges, planted = [], []
        for ln in lines[1:]:
            a, b, c = ln.split()
            e = edge(int(a), int(b))
            edges.append(e)
            if c == "R":
                planted.append(e)
            elif c != "B":
                raise ValueError(f"bad color {c!r}")
        return cls(n, edges, planted)

    def __repr__(self) -> str:
        return (f"ColoredGraph(n={self.n}, edges={len(self.edges)}, "
                f"red={len(self.planted)})")


@dataclass(frozen=True)
class TwoFactor:
    """Vertex-disjoint union of cycles (length >= 3) spanning its support."""

    edges: frozenset[Edge]
    support: frozenset[int] = field(default=frozenset())

    def __post_init__(self):
        support = frozenset(v for e in self.edges for v in e)
        object.__setattr__(self, "support", support)
        deg: dict[int, int] = {}
        for u, v in self.edges:
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        if any(d != 2 for d in deg.values()):
            raise ValueError("two-factor has a vertex of degree != 2")
        # degree 2 everywhere forbids multi-edges, so every cycle has length >= 3
        if self.edges and len(self.edges) != len(support):
            raise ValueError("edge count != support size")

    def cycles(self) -> list[list[int]]:
        """Cycles as vertex lists, each anchored at its smallest vertex."""
        nbr: dict[int, list[int]] = {}
        for u, v in self.edges:
            nbr.setdefault(u, []).append(v)
            nbr.setdefault(v, []).append(u)
        seen: set[int] = set()
        out = []
        for start in sorted(nbr):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            prev, cur = start, min(nbr[start])
            while cur != start:
                cyc.append(cur)
                seen.add(cur)
                a, b = nbr[cur]
                prev, cur = cur, (b if a == prev else a)
            out.append(cyc)
        return out


class DegreeBoundedSubgraph:
    """Mutable edge set with max degree <= 2: disjoint cycles and paths."""

    __slots__ = ("n", "edges", "degree")

    def __init__(self, n: int, edges: Iterable[Edge] = ()):
        self.n = n
        self.edges: set[Edge] = set()
        self.degree = [0] * n
        for e in edges:
            self.add(e)

    def add(self, e: Edge) -> None:
        if e in self.edges:
            raise ValueError(f"duplicate edge {e}")
        u, v = e
        if self.degree[u] >= 2 or self.degree[v] >= 2:
            raise ValueError(f"adding {e} would exceed degree 2")
        self.edges.add(e)
        self.degree[u] += 1
        self.degree[v] += 1

    def xor_edges(self, toggled: Iterable[Edge]) -> None:
        """Apply H <- H XOR P for a collection of edges, keeping degrees consistent."""
        for e in toggled:
            u, v = e
            if e in self.edges:
                self.edges.remove(e)
                self.degree[u] -= 1
                self.degree[v] -= 1
            else:
                self.edges.add(e)
                self.degree[u] += 1
                self.degree[v] += 1

    def deg1_count(self) -> int:
        return sum(1 for d in self.degree if d == 1)

    def copy(self) -> "DegreeBoundedSubgraph":
        out = DegreeBoundedSubgraph(self.n)
        out.edges = set(self.edges)
        out.degree = list(self.degree)
        return out

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class StructureReport:
    valid: bool
    offender: int | None       # first vertex of degree > 2, if any
    deg1_count: int
    n_cycles: int
    n_paths: int


def validate_structure(edges: Iterable[Edge], n: int | None = None) -> StructureReport:
    """Classify an edge set as degree-bounded (cycles + paths) or not.

    When valid, also reports the number of degree-1 vertices and the
    component split into cycles and paths (an isolated edge is a path).
    """
    edges = list(edge_set(edges))
    if n is None:
        n = max((v for e in edges for v in e), default=-1) + 1
    deg = [0] * n
    nbr: dict[int, list[int]] = {}
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
        nbr.setdefault(u, []).append(v)
        nbr.setdefault(v, []).append(u)
    for v in sorted(nbr):
        if deg[v] > 2:
            return StructureReport(False, v, 0, 0, 0)
    deg1 = sum(1 for d in deg if d == 1)
    n_cycles = n_paths = 0
    seen: set[int] = set()
    for start in sorted(nbr):
        if start in seen:
            continue
        comp, q = {start}, deque([start])
        while q:
            x = q.popleft()
            for y in nbr[x]:
                if y not in comp:
                    comp.add(y)
                    q.append(y)
        seen |= comp
        if all(deg[x] == 2 for x in comp):
            n_cycles += 1
        else:
            n_paths += 1
    return StructureReport(True, None, deg1, n_cycles, n_paths)


def risk(h_star: TwoFactor, h_hat: Iterable[Edge]) -> float:
    """Fraction of misclassified edges: |H* XOR H| / |H*|."""
    if not h_star.edges:
        raise ValueError("undefined risk: empty planted set")
    return len(symmetric_difference(h_star.edges, h_hat)) / len(h_star.edges)
