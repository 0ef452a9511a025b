"""Alternating-trail decomposition of H XOR H*, the recovery test oracle.

The symmetric difference of the hidden cycle cover H* and any
degree-<=2 candidate H splits into edge-disjoint trails that alternate
between red (H* \\ H) and blue (H \\ H*) at every vertex shared by H*
and H, with exactly one open trail per pair of degree-1 vertices of H.
The construction splits each degree-3/4 difference vertex into two
copies, one of which receives a red-blue pair, then reads off the
resulting paths and cycles and re-merges the copies.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graphcore import DegreeBoundedSubgraph, Edge, TwoFactor, edge_set
from .trails import Trail, canonical_trail


def excess(profile: tuple[int, int], epsilon: float) -> float:
    """b - (1/2 - epsilon) * (a + b): surplus of blue edges in a trail."""
    a, b = profile
    if a < 0 or b < 0:
        raise ValueError("profile counts must be nonnegative")
    return b - (0.5 - epsilon) * (a + b)


@dataclass(frozen=True)
class AlternatingDecomposition:
    trails: tuple[Trail, ...]
    profiles: tuple[tuple[int, int], ...]   # (red, blue) per trail
    open_count: int
    red_edges: frozenset[Edge]              # H* \ H
    blue_edges: frozenset[Edge]             # H \ H*

    def validate(self, h_star: TwoFactor, h_edges: frozenset[Edge]) -> None:
        """Re-check every oracle invariant; raises ValueError on failure."""
        diff = self.red_edges | self.blue_edges
        if self.red_edges & self.blue_edges:
            raise ValueError("red/blue edge sets overlap")
        if diff != h_star.edges ^ h_edges:
            raise ValueError("decomposition does not cover H xor H*")
        covered: set[Edge] = set()
        for t in self.trails:
            for e in t.edges:
                if e in covered:
                    raise ValueError(f"edge {e} appears in two trails")
                covered.add(e)
        if covered != diff:
            raise ValueError("trails do not partition the difference")
        h_deg: dict[int, int] = {}
        for u, v in h_edges:
            h_deg[u] = h_deg.get(u, 0) + 1
            h_deg[v] = h_deg.get(v, 0) + 1
        shared = h_star.support & {v for v, d in h_deg.items() if d >= 1}
        for t in self.trails:
            self._check_alternation(t, shared)
        n_open = sum(1 for t in self.trails if not t.closed)
        if n_open != self.open_count:
            raise ValueError("open_count mismatch")
        deg1 = [v for v, d in h_deg.items() if d == 1]
        if 2 * self.open_count != len(deg1):
            raise ValueError("open trail count != (degree-1 vertices of H)/2")
        for t in self.trails:
            if not t.closed:
                for v in t.endpoints:
                    if h_deg.get(v, 0) != 1:
                        raise ValueError(f"open-trail endpoint {v} has degree != 1 in H")
        for t, (a, b) in zip(self.trails, self.profiles):
            reds = sum(1 for e in t.edges if e in self.red_edges)
            if (reds, t.length - reds) != (a, b):
                raise ValueError("stored profile mismatch")

    def _check_alternation(self, t: Trail, shared: frozenset[int] | set[int]) -> None:
        cols = [e in self.red_edges for e in t.edges]
        vs = t.vertices
        k = len(cols)
        pairs = range(k) if t.closed else range(k - 1)
        for i in pairs:
            j = (i + 1) % k
            meet = vs[j] if j != 0 else vs[0]
            if meet in shared and cols[i] == cols[j]:
                raise ValueError(f"no alternation at shared vertex {meet}")


def _degree_profile(diff_adj: dict[int, list[tuple[int, bool]]]) -> None:
    for v, inc in diff_adj.items():
        reds = sum(1 for _, red in inc if red)
        blues = len(inc) - reds
        if len(inc) > 4:
            raise ValueError(f"difference degree > 4 at vertex {v}")
        if len(inc) == 4 and (reds, blues) != (2, 2):
            raise ValueError(f"degree-4 vertex {v} is not 2 red + 2 blue")
        if len(inc) == 3 and (reds, blues) != (2, 1):
            raise ValueError(f"degree-3 vertex {v} is not 2 red + 1 blue")


def decompose_diff(h_star: TwoFactor,
                   h: DegreeBoundedSubgraph | Iterable[Edge]) -> AlternatingDecomposition:
    """Alternating-trail decomposition of H* XOR H.

    Splitting rule (one of the many valid pairings, fixed for
    reproducibility): at a degree-4 vertex the red edge with the
    smallest other endpoint pairs with the blue edge with the smallest
    other endpoint; at a degree-3 vertex the red-blue pair takes the
    smaller-endpoint red edge.
    """
    if isinstance(h, DegreeBoundedSubgraph):
        h_edges = frozenset(h.edges)
    else:
        h_edges = edge_set(h)
    h_deg: dict[int, int] = {}
    for u, v in h_edges:
        h_deg[u] = h_deg.get(u, 0) + 1
        h_deg[v] = h_deg.get(v, 0) + 1
    if any(d > 2 for d in h_deg.values()):
        raise ValueError("candidate subgraph has a vertex of degree > 2")

    red = h_star.edges - h_edges
    blue = h_edges - h_star.edges
    diff = red | blue
    diff_adj: dict[int, list[tuple[int, bool]]] = {}
    for u, v in diff:
        is_red = (u, v) in red
        diff_adj.setdefault(u, []).append((v, is_red))
        diff_adj.setdefault(v, []).append((u, is_red))
    _degree_profile(diff_adj)

    # node = v for untouched vertices, (v, 0) / (v, 1) for split copies;
    # copy 0 holds the designated red-blue pair
    def node_of(v: int, e: Edge) -> int | tuple[int, int]:
        pair = split.get(v)
        if pair is None:
            return v
        return (v, 0) if e in pair else (v, 1)

    split: dict[int, set[Edge]] = {}
    for v, inc in diff_adj.items():
        if len(inc) < 3:
            continue
        reds = sorted(w for w, is_red in inc if is_red)
        blues = sorted(w for w, is_red in inc if not is_red)
        u, v2 = min(v, reds[0]), max(v, reds[0])
        red_pick: Edge = (u, v2)
        u, v2 = min(v, blues[0]), max(v, blues[0])
        blue_pick: Edge = (u, v2)
        split[v] = {red_pick, blue_pick}

    nodes_adj: dict[object, list[tuple[object, Edge]]] = {}
    for e in sorted(diff):
        u, v = e
        nu, nv = node_of(u, e), node_of(v, e)
        nodes_adj.setdefault(nu, []).append((nv, e))
        nodes_adj.setdefault(nv, []).append((nu, e))

    def node_key(nd) -> tuple[int, int]:
        return (nd, -1) if isinstance(nd, int) else nd

    def original(nd) -> int:
        return nd if isinstance(nd, int) else nd[0]

    trails: list[Trail] = []
    profiles: list[tuple[int, int]] = []
    used: set[Edge] = set()
    endpoints = sorted((nd for nd, inc in nodes_adj.items() if len(inc) == 1),
                       key=node_key)

    def walk_from(start) -> None:
        verts = [original(start)]
        cur = start
        while True:
            nxt = None
            for other, e in sorted(nodes_adj[cur], key=lambda t: (node_key(t[0]), t[1])):
                if e not in used:
                    nxt = (other, e)
                    break
            if nxt is None:
                break
            other, e = nxt
            used.add(e)
            verts.append(original(other))
            cur = other
        closed = verts[0] == verts[-1] and len(verts) > 1 and cur == start
        t = canonical_trail(verts, closed)
        trails.append(t)
        reds = sum(1 for e2 in t.edges if e2 in red)
        profiles.append((reds, t.length - reds))

    for nd in endpoints:
        if all(e in used for _, e in nodes_adj[nd]):
            continue
        walk_from(nd)
    for nd in sorted(nodes_adj, key=node_key):
        if all(e in used for _, e in nodes_adj[nd]):
            continue
        walk_from(nd)

    open_count = sum(1 for t in trails if not t.closed)
    decomp = AlternatingDecomposition(
        trails=tuple(trails),
        profiles=tuple(profiles),
        open_count=open_count,
        red_edges=frozenset(red),
        blue_edges=frozenset(blue),
    )
    decomp.validate(h_star, h_edges)
    return decomp
