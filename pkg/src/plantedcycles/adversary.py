"""Above-threshold constructions: reserved edges, path trees, balanced cycles.

Pipeline: reserve a sprinkling budget of vertex-disjoint red edges whose
endpoint pairs can only ever be joined by blue edges; grow two-sided
trees of balanced path layers on the remaining available vertices; link
tree sides through reserved edges by five-edge connectors (three blue,
two red); read alternating cycles off the link graph and expand them to
vertex-simple balanced cycles in the observed graph.  Each such cycle C
certifies a competing cycle cover H* XOR C.

The theory's parameter recipes are astronomically large; `theory_params`
reports them without enforcing anything, and the builders take free
desk-scale knobs instead.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

import numpy as np

from .graphcore import ColoredGraph, Edge, TwoFactor, edge


@dataclass(frozen=True)
class ReservedEdgeSet:
    """Vertex-disjoint red edges with a distance-2 exclusion zone."""

    edges: tuple[Edge, ...]          # selection order
    available: frozenset[int]        # [n] minus reserved endpoints
    n: int
    gamma: float
    max_consumed: int                # worst-case pool edges removed per pick

    def tree_facing(self, e: Edge) -> int:
        return e[0]

    def linking(self, e: Edge) -> int:
        return e[1]


def reserve_edges(h_star: TwoFactor, gamma: float, n: int) -> ReservedEdgeSet:
    """Greedy reservation of floor(gamma*n) red edges, removing each pick
    and every red edge within distance 2 of it from the pool."""
    delta_eff = len(h_star.support) / n
    if gamma > delta_eff / 5 + 1e-12:
        raise ValueError(f"gamma={gamma} exceeds delta/5={delta_eff / 5}")
    count = int(math.floor(gamma * n))
    nbr: dict[int, list[int]] = {}
    for u, v in h_star.edges:
        nbr.setdefault(u, []).append(v)
        nbr.setdefault(v, []).append(u)
    pool = set(h_star.edges)
    picked: list[Edge] = []
    max_consumed = 0
    for _ in range(count):
        if not pool:
            raise RuntimeError("reservation pool exhausted (cannot occur when gamma <= delta/5)")
        e = min(pool)
        picked.append(e)
        u, v = e
        zone = {u, v, *nbr[u], *nbr[v]}
        removed = {f for f in pool if f[0] in zone or f[1] in zone}
        max_consumed = max(max_consumed, len(removed))
        pool -= removed
    endpoints = {w for e in picked for w in e}
    return ReservedEdgeSet(
        edges=tuple(picked),
        available=frozenset(range(n)) - endpoints,
        n=n,
        gamma=gamma,
        max_consumed=max_consumed,
    )


@dataclass
class TreeSide:
    root: int
    hubs: list[int]                          # BFS discovery order, root first
    parent: dict[int, int]                   # child hub -> parent hub
    layers: dict[int, tuple[int, ...]]       # child hub -> path parent..child
    attach_step: dict[int, int]              # child hub -> global prune-step index

    def path_to_root(self, hub: int) -> list[int]:
        """Vertex walk from `hub` up to the side's root along path layers."""
        walk = [hub]
        v = hub
        while v != self.root:
            layer = self.layers[v]           # parent .. v
            walk.extend(reversed(layer[:-1]))
            v = self.parent[v]
        return walk


@dataclass
class TwoSidedTree:
    center: Edge
    left: TreeSide
    right: TreeSide


@dataclass
class TreeBuildResult:
    trees: list[TwoSidedTree]
    failed: bool                             # no planted edge left among available
    prune_log: list[frozenset[int]]          # removed vertex sets, per removal step
    layer_log: list[tuple[int, tuple[int, ...]]]   # (removal-step index, layer path)
    available_after: list[int]               # |A| at the end of each iteration

    def available_at(self, initial, step: int) -> set[int]:
        """Reconstruct the available set just before removal step `step`."""
        avail = set(initial)
        for removed in self.prune_log[:step]:
            avail -= removed
        return avail


def _layer_paths(g: ColoredGraph, u: int, avail: set[int],
                 m_star: int) -> dict[int, tuple[int, ...]]:
    """Hubs reachable from u by a non-shortcutted balanced path layer.

    Enumerates every simple path from u of length <= 2*m_star whose
    vertices (except u) stay available; a target v qualifies when
    exactly one such path reaches it (so nothing shortcuts it) and that
    path is a valid (m*, m*)-path: first edge blue, last edge red, m*
    edges of each color, never two blue edges meeting at a planted vertex.
    """
    support = g.red_support()
    limit = 2 * m_star
    adj = g.adj
    reached: dict[int, list[tuple[tuple[int, ...], int, bool, bool]]] = {}
    walk = [u]
    walk_set = {u}

    def dfs(v: int, reds: int, last_red: bool | None, valid: bool) -> None:
        for w, red in adj[v]:
            if w not in avail or w in walk_set:
                continue
            ok = valid
            if last_red is None and red:
                ok = False                    # must leave u on a blue edge
            elif last_red is False and not red and v in support:
                ok = False                    # blue-blue at a planted vertex
            walk.append(w)
            walk_set.add(w)
            r2 = reds + (1 if red else 0)
            reached.setdefault(w, []).append((tuple(walk), r2, red, ok))
            if len(walk) - 1 < limit:
                dfs(w, r2, red, ok)
            walk.pop()
            walk_set.remove(w)

    dfs(u, 0, None, True)
    out: dict[int, tuple[int, ...]] = {}
    for v, entries in sorted(reached.items()):
        if len(entries) != 1:
            continue                          # another path of length <= 2m* shortcuts
        path, reds, last_red, ok = entries[0]
        if len(path) - 1 == limit and reds == m_star and last_red and ok:
            out[v] = path
    return out


def _prune_ball(g: ColoredGraph, u: int, avail: set[int], radius: int) -> frozenset[int]:
    """Vertices reachable from u within `radius` steps through available
    vertices; removes them from avail and returns the removed set."""
    frontier = [u]
    seen = {u}
    removed: set[int] = set()
    for _ in range(radius):
        nxt = []
        for v in frontier:
            for w, _red in g.adj[v]:
                if w in seen or w not in avail:
                    continue
                seen.add(w)
                removed.add(w)
                nxt.append(w)
        frontier = nxt
    avail -= removed
    return frozenset(removed)


def build_trees(g: ColoredGraph, available, m_star: int, ell: int, gamma: float,
                rng: np.random.Generator) -> TreeBuildResult:
    """Grow up to floor(gamma*n/ell) two-sided trees of balanced path layers.

    Each accepted tree has at least 2*ell hub nodes per side (the root
    counts).  Exploring a hub prunes its whole radius-2m* available
    neighborhood, which keeps later blue-edge exposure fresh.  If no
    planted edge remains among available vertices the build fails with
    an empty result, per the construction's FAIL convention.
    """
    if m_star < 1 or ell < 1:
        raise ValueError("m_star and ell must be >= 1")
    avail = set(available)
    if not avail:
        raise ValueError("available set is empty")
    n = g.n
    k_iters = int(math.floor(gamma * n / ell))
    trees: list[TwoSidedTree] = []
    prune_log: list[frozenset[int]] = []
    layer_log: list[tuple[int, tuple[int, ...]]] = []
    available_after: list[int] = []
    planted_sorted = sorted(g.planted)

    def grow_side(root: int) -> TreeSide | None:
        side = TreeSide(root=root, hubs=[root], parent={}, layers={}, attach_step={})
        queue = deque([root])
        size = 1
        while queue and size < 2 * ell:
            u = queue.popleft()
            found = _layer_paths(g, u, avail, m_star)
            step = len(prune_log)
            for v in sorted(found):
                side.parent[v] = u
                side.layers[v] = found[v]
                side.attach_step[v] = step
                layer_log.append((step, found[v]))
            prune_log.append(_prune_ball(g, u, avail, 2 * m_star))
            for v in sorted(found):
                side.hubs.append(v)
                queue.append(v)
            size += len(found)
        return side if size >= 2 * ell else None

    for _t in range(k_iters):
        candidates = [e for e in planted_sorted if e[0] in avail and e[1] in avail]
        if not candidates:
            return TreeBuildResult([], True, prune_log, layer_log, available_after)
        u0, u0p = candidates[int(rng.integers(len(candidates)))]
        avail.discard(u0)
        avail.discard(u0p)
        prune_log.append(frozenset({u0, u0p}))   # root removals join the log
        left = grow_side(u0)
        if left is not None:
            right = grow_side(u0p)
            if right is not None:
                trees.append(TwoSidedTree(center=(u0, u0p), left=left, right=right))
        available_after.append(len(avail))
    return TreeBuildResult(trees, False, prune_log, layer_log, available_after)


@dataclass
class LinkGraph:
    """Bipartite tree-link graph: a red perfect matching i-i plus blue
    edges recording five-edge connectors between tree sides."""

    admitted: list[int]                                  # tree indices in G-bar
    chosen_left: dict[int, tuple[Edge, ...]]             # i -> E(L_i), size d
    chosen_right: dict[int, tuple[Edge, ...]]            # i -> E(R_i), size d
    blue: dict[tuple[int, int], tuple[Edge, Edge]]       # (i, j) -> (e in E(L_i), e' in E(R_j))
    hub_witness: dict[tuple[int, str, Edge], int]        # (tree, side, edge) -> hub


def link_trees(g: ColoredGraph, trees: list[TwoSidedTree], reserved: ReservedEdgeSet,
               d: int, rng: np.random.Generator) -> LinkGraph:
    """Admit trees blue-connected to d unmarked tree-facing endpoints on
    each side, mark their reserved edges, and record the blue link edges
    between linking endpoints of marked edges."""
    if d < 1:
        raise ValueError("d must be >= 1")
    pool = list(reserved.edges)
    if len(pool) % 2 == 1:
        pool = pool[:-1]                      # the construction assumes an even count
    perm = rng.permutation(len(pool))
    half = len(pool) // 2
    e_left_pool = sorted(pool[i] for i in perm[:half])
    e_right_pool = sorted(pool[i] for i in perm[half:])

    blue_adj: dict[int, set[int]] = {}
    for u, v in g.blue_edges:
        blue_adj.setdefault(u, set()).add(v)
        blue_adj.setdefault(v, set()).add(u)

    def connections(hubs: list[int], pool_edges: list[Edge],
                    marked: set[Edge]) -> list[tuple[Edge, int]]:
        out = []
        for e in pool_edges:
            if e in marked:
                continue
            tf = e[0]
            nbrs = blue_adj.get(tf, ())
            hub = next((h for h in sorted(hubs) if h in nbrs), None)
            if hub is not None:
                out.append((e, hub))
        return out

    marked: set[Edge] = set()
    admitted: list[int] = []
    chosen_left: dict[int, tuple[Edge, ...]] = {}
    chosen_right: dict[int, tuple[Edge, ...]] = {}
    hub_witness: dict[tuple[int, str, Edge], int] = {}
    for i, tree in enumerate(trees):
        conn_l = connections(tree.left.hubs, e_left_pool, marked)
        if len(conn_l) < d:
            continue
        conn_r = connections(tree.right.hubs, e_right_pool, marked)
        if len(conn_r) < d:
            continue
        take_l, take_r = conn_l[:d], conn_r[:d]
        chosen_left[i] = tuple(e for e, _ in take_l)
        chosen_right[i] = tuple(e for e, _ in take_r)
        for e, hub in take_l:
            marked.add(e)
            hub_witness[(i, "L", e)] = hub
        for e, hub in take_r:
            marked.add(e)
            hub_witness[(i, "R", e)] = hub
        admitted.append(i)

    blue: dict[tuple[int, int], tuple[Edge, Edge]] = {}
    for i in admitted:
        for j in admitted:
            pair = None
            for e in chosen_left[i]:
                for e2 in chosen_right[j]:
                    link = edge(e[1], e2[1])
                    if link in g.blue_edges:
                        pair = (e, e2)
                        break
                if pair:
                    break
            if pair:
                blue[(i, j)] = pair
    return LinkGraph(admitted, chosen_left, chosen_right, blue, hub_witness)


@dataclass(frozen=True)
class BalancedCycle:
    vertices: tuple[int, ...]       # closed walk, first == last
    red: int
    blue: int

    @property
    def length(self) -> int:
        return len(self.vertices) - 1


def _directed_cycles(arcs: dict[int, list[int]], nodes, cap: int) -> tuple[list[tuple[int, ...]], bool]:
    """Simple directed cycles, each anchored at its smallest node;
    returns (cycles, truncated)."""
    cycles: list[tuple[int, ...]] = []
    truncated = False

    def dfs(anchor: int, v: int, path: list[int], on_path: set[int]) -> bool:
        for w in sorted(arcs.get(v, ())):
            if len(cycles) >= cap:
                return False
            if w == anchor:
                cycles.append(tuple(path))
            elif w > anchor and w not in on_path:
                path.append(w)
                on_path.add(w)
                ok = dfs(anchor, w, path, on_path)
                path.pop()
                on_path.remove(w)
                if not ok:
                    return False
        return True

    for a in sorted(nodes):
        if len(cycles) >= cap:
            truncated = True
            break
        if not dfs(a, a, [a], {a}):
            truncated = True
            break
    return cycles, truncated


def extract_balanced_cycles(link: LinkGraph, trees: list[TwoSidedTree],
                            g: ColoredGraph, limit: int = 1000) -> list[BalancedCycle]:
    """Expand alternating cycles of the link graph into balanced,
    vertex-simple cycles of G.

    An alternating cycle visits trees i_1 -> i_2 -> ... -> i_k -> i_1,
    where the arc i -> j needs the five-edge connector from R_i to L_j.
    Each tree contributes hub-to-root walks on both sides plus its red
    center edge; each connector contributes three blue and two red edges,
    so every output cycle has exactly as many red as blue edges.
    """
    arcs: dict[int, list[int]] = {}
    for (j, i), _pair in link.blue.items():
        arcs.setdefault(i, []).append(j)     # connector R_i -> L_j
    tree_cycles, _trunc = _directed_cycles(arcs, link.admitted, limit)

    out: list[BalancedCycle] = []
    for seq in tree_cycles:
        walk: list[int] = []
        k = len(seq)
        ok = True
        for t, i in enumerate(seq):
            nxt = seq[(t + 1) % k]
            e_in, _ = link.blue[(i, seq[t - 1])]          # arc prev -> i uses E(L_i)
            _, e_out = link.blue[(nxt, i)]                # arc i -> nxt uses E(R_i)
            h_in = link.hub_witness[(i, "L", e_in)]
            h_out = link.hub_witness[(i, "R", e_out)]
            tree = trees[i]
            up = tree.left.path_to_root(h_in)             # h_in .. left root
            down = tree.right.path_to_root(h_out)         # h_out .. right root
            walk.extend(up)
            walk.extend(reversed(down))
            e2, e2p = link.blue[(nxt, i)]                 # e2 in E(L_nxt), e2p in E(R_i)
            walk.extend([e2p[0], e2p[1], e2[1], e2[0]])   # tf, lk, lk', tf'
        if not walk:
            continue
        walk.append(walk[0])
        reds = blues = 0
        for a, b in zip(walk, walk[1:]):
            e = edge(a, b)
            if e not in g.edges:
                ok = False
                break
            if g.is_red(e):
                reds += 1
            else:
                blues += 1
        if not ok or len(set(walk[:-1])) != len(walk) - 1 or reds != blues:
            continue
        out.append(BalancedCycle(tuple(walk), reds, blues))
        if len(out) >= limit:
            break
    return out


@dataclass(frozen=True)
class BipartiteCycleStats:
    count: int
    truncated: bool
    longest_edges: int        # alternating-cycle length in edges (2 per tree)


def bipartite_alternating_cycles(k: int, mean_blue_degree: float,
                                 rng: np.random.Generator,
                                 cap: int = 100000) -> BipartiteCycleStats:
    """Sample the red-matching + blue-Erdos-Renyi bipartite model and
    count its alternating cycles (up to `cap`), reporting the longest."""
    if k < 1:
        raise ValueError("k must be >= 1")
    p = min(1.0, mean_blue_degree / k)
    blue = rng.random((k, k)) < p            # blue[a][b]: left a - right b
    arcs: dict[int, list[int]] = {}
    for u in range(k):
        # from right u, a blue edge to left w opens the arc u -> w
        targets = np.flatnonzero(blue[:, u])
        if targets.size:
            arcs[u] = [int(w) for w in targets]
    cycles, truncated = _directed_cycles(arcs, range(k), cap)
    longest = max((len(c) for c in cycles), default=0) * 2
    return BipartiteCycleStats(count=len(cycles), truncated=truncated,
                               longest_edges=longest)


@dataclass(frozen=True)
class TheoryParams:
    ell: float
    d: float
    zeta: float
    zeta_bound: float
    gamma_feasible: bool


def theory_params(lam: float, delta: float, m_star: int, gamma: float,
                 c_mm: float, alpha: float = 1.0) -> TheoryParams:
    """The theory's parameter recipe, reported without enforcement:
    ell = 2^14 ln(32e) alpha / (lam^2 gamma^2), d = 2^11 ln(32e) alpha / (lam gamma),
    and the availability contraction zeta = 2 gamma + 6 gamma (2 lam + 4)^(2 m*)
    against its admissible bound."""
    log32e = math.log(32 * math.e)
    ell = 2 ** 14 * log32e * alpha / (lam ** 2 * gamma ** 2)
    d = 2 ** 11 * log32e * alpha / (lam * gamma)
    zeta = 2 * gamma + 6 * gamma * (2 * lam + 4) ** (2 * m_star)
    if m_star == 1:
        denom = m_star * (m_star + 1) / delta
    elif delta == 1:
        denom = math.inf
    else:
        denom = m_star * (m_star + 1) / delta + (m_star - 1) / (1 - delta)
    bound = (c_mm - 1) / (2 * c_mm) / denom if c_mm > 1 else 0.0
    return TheoryParams(ell=ell, d=d, zeta=zeta, zeta_bound=bound,
                       gamma_feasible=zeta < bound)
