"""Bounded-length trail enumeration, trail classification, shortcut tests.

A trail is a walk with distinct edges (vertices may repeat).  Open
trails are stored in the lexicographically smaller of their two
orientations; closed trails under the minimal rotation-then-direction
key, so each trail appears exactly once and enumeration order is
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphcore import ColoredGraph, Edge, edge

DEFAULT_TRAIL_CAP = 10 ** 8


class TrailExplosionError(RuntimeError):
    """Trail count exceeded the configured cap (lambda or L too large)."""


@dataclass(frozen=True)
class Trail:
    """Walk v0..vk with distinct edges; closed means v0 == vk."""

    vertices: tuple[int, ...]
    closed: bool

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def endpoints(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]

    @property
    def edges(self) -> tuple[Edge, ...]:
        vs = self.vertices
        return tuple(edge(vs[i], vs[i + 1]) for i in range(len(vs) - 1))

    def profile_in(self, g: ColoredGraph) -> tuple[int, int]:
        """(red count, blue count) of this trail's edges in g."""
        reds = sum(1 for e in self.edges if g.is_red(e))
        return reds, self.length - reds

    def sort_key(self):
        return (self.length, self.closed, self.vertices)


def canonical_trail(vertices, closed: bool) -> Trail:
    """Canonical orientation: min of both directions for open trails,
    minimal rotation-then-direction for closed trails."""
    vs = tuple(vertices)
    if not closed:
        return Trail(min(vs, vs[::-1]), False)
    cyc = vs[:-1]
    k = len(cyc)
    best = None
    for seq in (cyc, cyc[::-1]):
        for i in range(k):
            rot = seq[i:] + seq[:i]
            if best is None or rot < best:
                best = rot
    return Trail(best + (best[0],), True)


def enumerate_trails(g: ColoredGraph, max_len: int,
                     cap: int = DEFAULT_TRAIL_CAP) -> list[Trail]:
    """Every trail of edge-length 1..max_len-1, open and closed, once each,
    in sorted canonical order.  Raises TrailExplosionError past the cap."""
    if max_len < 2:
        raise ValueError(f"max_len={max_len} must be >= 2")
    found: set[Trail] = set()
    adj = g.adj
    used: set[Edge] = set()
    walk: list[int] = []

    def extend(v: int) -> None:
        if len(walk) > max_len:
            return
        trail = canonical_trail(walk, closed=walk[0] == walk[-1])
        if trail not in found:
            found.add(trail)
            if len(found) > cap:
                raise TrailExplosionError(
                    f"more than {cap} trails of length < {max_len}")
        if len(walk) - 1 == max_len - 1:
            return
        for w, _red in adj[v]:
            e = edge(v, w)
            if e in used:
                continue
            used.add(e)
            walk.append(w)
            extend(w)
            walk.pop()
            used.remove(e)

    for s in range(g.n):
        walk = [s]
        for w, _red in adj[s]:
            e = edge(s, w)
            used.add(e)
            walk.append(w)
            extend(w)
            walk.pop()
            used.remove(e)
    return sorted(found, key=Trail.sort_key)


def _open_direction_valid(cols: tuple[bool, ...], inner: tuple[int, ...],
                          support: frozenset[int]) -> bool:
    """Check one traversal direction of an open trail against the
    (a,b)-trail constraints; cols[i] is True for red, inner[i] is the
    meeting vertex of edges i and i+1."""
    a = sum(cols)
    if cols[0]:
        return False                       # first edge must be unplanted
    if a >= 1 and not cols[-1]:
        return False                       # last edge must be planted
    for i in range(len(cols) - 1):
        if not cols[i] and not cols[i + 1] and inner[i] in support:
            return False                   # blue-blue at a planted vertex
    return True


def classify_ab_trail(g: ColoredGraph, trail: Trail,
                      support: frozenset[int] | None = None) -> tuple[int, int] | None:
    """(a, b) profile if the trail satisfies the alternating-trail
    constraints in some traversal direction, else None."""
    if support is None:
        support = g.red_support()
    cols = tuple(g.is_red(e) for e in trail.edges)
    a = sum(cols)
    b = len(cols) - a
    if b == 0:
        return None
    vs = trail.vertices
    if trail.closed:
        # rotations let any red->blue boundary start the reading, so the
        # binding constraint is the cyclic blue-blue rule (plus b >= 1);
        # an all-blue circuit must avoid the planted support entirely
        k = len(cols)
        for i in range(k):
            j = (i + 1) % k
            if not cols[i] and not cols[j] and vs[j] in support:
                return None
        return (a, b)
    inner = vs[1:-1]
    if _open_direction_valid(cols, inner, support):
        return (a, b)
    if _open_direction_valid(cols[::-1], inner[::-1], support):
        return (a, b)
    return None


def count_ab_trails(g: ColoredGraph, a: int, b: int, frm: int,
                    to: int | None = None, l_cap: int = 64,
                    cap: int = DEFAULT_TRAIL_CAP,
                    support: frozenset[int] | None = None) -> int:
    """Exact count of (a,b)-trails anchored at frm (ending at `to` when
    given), one count per valid traversal direction starting at frm."""
    if a < 0 or b < 1:
        raise ValueError("need a >= 0, b >= 1")
    if a + b >= l_cap:
        raise ValueError(f"a+b={a + b} must be < l_cap={l_cap}")
    if support is None:
        support = g.red_support()
    adj = g.adj
    used: set[Edge] = set()
    count = 0
    visited_nodes = 0

    def dfs(v: int, red_left: int, blue_left: int, last_red: bool | None) -> None:
        nonlocal count, visited_nodes
        visited_nodes += 1
        if visited_nodes > cap:
            raise TrailExplosionError("trail search exceeded cap")
        if red_left == 0 and blue_left == 0:
            if (a == 0 or last_red) and (to is None or v == to):
                count += 1
            return
        for w, red in adj[v]:
            if red and red_left == 0:
                continue
            if not red and blue_left == 0:
                continue
            if last_red is None and red:
                continue                   # first edge must be unplanted
            if last_red is False and not red and v in support:
                continue                   # blue-blue at a planted vertex
            e = edge(v, w)
            if e in used:
                continue
            used.add(e)
            dfs(w, red_left - (1 if red else 0),
                blue_left - (0 if red else 1), red)
            used.remove(e)

    dfs(frm, a, b, None)
    return count


def is_shortcutted(g: ColoredGraph, path: Trail) -> bool:
    """True iff the graph contains a distinct path between the endpoints
    of `path` with the same or shorter length.  Input must be an open,
    vertex-simple path."""
    if path.closed:
        raise ValueError("shortcut test needs an open path")
    if len(set(path.vertices)) != len(path.vertices):
        raise ValueError("shortcut test needs a vertex-simple path")
    s, t = path.endpoints
    own = path.vertices
    limit = path.length
    adj = g.adj

    def dfs(v: int, trace: list[int]) -> bool:
        if v == t:
            return tuple(trace) != own
        if len(trace) - 1 == limit:
            return False
        for w, _red in adj[v]:
            if w in trace_set:
                continue
            trace.append(w)
            trace_set.add(w)
            ok = dfs(w, trace)
            trace.pop()
            trace_set.remove(w)
            if ok:
                return True
        return False

    trace_set = {s}
    return dfs(s, [s])
