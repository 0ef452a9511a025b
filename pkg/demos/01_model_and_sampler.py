"""Sampling the planted cycles model and checking the sampler's statistics.

The model on n vertices: choose floor(delta*n) support vertices, plant a
uniform cycle cover (2-factor) on them, then overlay an Erdos-Renyi
background where every pair appears with probability lambda/n.  The
observation is the union; red marks the hidden cover.
"""

import numpy as np

import plantedcycles as pc

rng = pc.rng_for(7)
params = pc.ModelParams(n=40, lam=0.8, delta=0.75)
g, h_star = pc.sample_instance(params, rng)
print(f"instance: n={g.n}, |edges|={len(g.edges)}, hidden cover {len(h_star.edges)} "
      f"edges on {len(h_star.support)} vertices")
print(f"cycle lengths of H*: {sorted(len(c) for c in h_star.cycles())}")

# the rejection sampler is exactly uniform: weight 2^(1-c) equalizes the
# 2^c permutation representatives of a cover with c cycles
hist = pc.cycle_type_stats(20000, 8, rng)
total = sum(hist.values())
print("\ncycle types of uniform covers on 8 labeled vertices (20000 draws):")
for kind, cnt in sorted(hist.items()):
    print(f"  {kind}: {cnt / total:.4f}")
print("exact fractions: (8,)=0.7186, (3,5)=0.1916, (4,4)=0.0898")

# a uniform cover is a single Hamilton cycle with probability >= 1/m
frac = hist.get((8,), 0) / total
print(f"\nsingle-cycle fraction {frac:.4f} >= 1/8 = 0.125")

# instances are reproducible byte-for-byte from (master seed, cell, trial)
a, _ = pc.sample_instance(params, pc.rng_for(123, 0, 5))
b, _ = pc.sample_instance(params, pc.rng_for(123, 0, 5))
print(f"\nsame seed twice gives identical canonical files: {a.dumps() == b.dumps()}")
