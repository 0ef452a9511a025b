"""Instance sampler for the planted cycles model.

An instance on n vertices with background intensity lambda and planted
fraction delta is drawn by (1) choosing floor(delta*n) support vertices
uniformly, (2) planting a uniform 2-factor (or a single uniform cycle)
on them, and (3) adding every other vertex pair independently with
probability lambda/n.  A background edge that coincides with a planted
edge merges into the single red edge.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .graphcore import ColoredGraph, Edge, TwoFactor, edge

TWO_FACTOR = "two-factor"
SINGLE_CYCLE = "single-cycle"


@dataclass(frozen=True)
class ModelParams:
    n: int
    lam: float
    delta: float
    variant: str = TWO_FACTOR

    def __post_init__(self):
        if not 0 < self.delta <= 1:
            raise ValueError(f"delta={self.delta} outside (0, 1]")
        if self.lam <= 0:
            raise ValueError(f"lambda={self.lam} must be positive")
        if self.lam > self.n:
            raise ValueError(f"lambda={self.lam} > n={self.n}: edge probability > 1")
        if self.support_size < 3:
            raise ValueError(f"floor(delta*n)={self.support_size} < 3: no 2-factor exists")
        if self.variant not in (TWO_FACTOR, SINGLE_CYCLE):
            raise ValueError(f"unknown variant {self.variant!r}")

    @property
    def support_size(self) -> int:
        return int(np.floor(self.delta * self.n))


def _permutation_cycles(perm: np.ndarray) -> list[list[int]]:
    seen = np.zeros(len(perm), dtype=bool)
    cycles = []
    for i in range(len(perm)):
        if seen[i]:
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = perm[j]
        cycles.append(cyc)
    return cycles


def sample_two_factor(support, rng: np.random.Generator) -> TwoFactor:
    """Uniform 2-factor on the given support, by rejection.

    Draw a uniform permutation; reject if any cycle is shorter than 3;
    otherwise accept with probability 2**(1-c) where c is the number of
    cycles.  A 2-factor with c cycles corresponds to exactly 2**c
    permutations (a direction per cycle), so the acceptance weight makes
    the output exactly uniform over 2-factors.
    """
    support = sorted(int(v) for v in support)
    m = len(support)
    if m < 3:
        raise ValueError(f"support size {m} < 3")
    while True:
        perm = rng.permutation(m)
        cycles = _permutation_cycles(perm)
        if min(len(c) for c in cycles) < 3:
            continue
        if len(cycles) > 1 and rng.random() >= 2.0 ** (1 - len(cycles)):
            continue
        edges = []
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                edges.append(edge(support[a], support[b]))
        return TwoFactor(frozenset(edges))


def sample_single_cycle(support, rng: np.random.Generator) -> TwoFactor:
    """Uniform Hamiltonian cycle on the support (uniform cyclic order)."""
    support = sorted(int(v) for v in support)
    if len(support) < 3:
        raise ValueError(f"support size {len(support)} < 3")
    order = rng.permutation(len(support))
    edges = [edge(support[order[i]], support[order[(i + 1) % len(order)]])
             for i in range(len(order))]
    return TwoFactor(frozenset(edges))


def _sample_background_edges(n: int, p: float, rng: np.random.Generator) -> set[Edge]:
    """All-pairs Bernoulli(p) edges, sampled by count + uniform distinct pair indices."""
    n_pairs = n * (n - 1) // 2
    k = rng.binomial(n_pairs, p)
    if k == 0:
        return set()
    # first k distinct values of an iid uniform stream form a uniform k-subset
    chosen: list[int] = []
    seen: set[int] = set()
    while len(chosen) < k:
        need = k - len(chosen)
        for idx in rng.integers(0, n_pairs, size=2 * need + 8).tolist():
            if idx not in seen:
                seen.add(idx)
                chosen.append(idx)
                if len(chosen) == k:
                    break
    out = set()
    w = 2 * n - 1
    for idx in chosen:
        # decode triangular index: pair (u, v) with u < v, row-major
        u = (w - math.isqrt(w * w - 8 * idx)) // 2
        while u * (2 * n - u - 1) // 2 > idx:
            u -= 1
        while (u + 1) * (2 * n - u - 2) // 2 <= idx:
            u += 1
        v = idx - u * (2 * n - u - 1) // 2 + u + 1
        out.add((u, v))
    return out


def sample_instance(params: ModelParams,
                    rng: np.random.Generator) -> tuple[ColoredGraph, TwoFactor]:
    """One draw of (observed graph, hidden 2-factor)."""
    n = params.n
    support = rng.choice(n, size=params.support_size, replace=False)
    if params.variant == SINGLE_CYCLE:
        h_star = sample_single_cycle(support, rng)
    else:
        h_star = sample_two_factor(support, rng)
    background = _sample_background_edges(n, params.lam / n, rng)
    return ColoredGraph(n, background, h_star.edges), h_star


def cycle_count_stats(samples: int, m: int, rng: np.random.Generator) -> Counter:
    """Empirical histogram of the number of cycles in uniform 2-factors."""
    if m < 3:
        raise ValueError(f"support size {m} < 3")
    hist: Counter = Counter()
    for _ in range(samples):
        h = sample_two_factor(range(m), rng)
        hist[len(h.cycles())] += 1
    return hist


def cycle_type_stats(samples: int, m: int, rng: np.random.Generator) -> Counter:
    """Empirical histogram of cycle types (sorted cycle-length tuples)."""
    if m < 3:
        raise ValueError(f"support size {m} < 3")
    hist: Counter = Counter()
    for _ in range(samples):
        h = sample_two_factor(range(m), rng)
        hist[tuple(sorted(len(c) for c in h.cycles()))] += 1
    return hist
