"""The recovery phase transition through generating functions.

Almost exact recovery is possible below lambda*(delta) =
1/(sqrt(2 delta) + sqrt(1-delta))^2 and impossible above it.  Below the
threshold a witness (x, y, epsilon) certifies that the weighted trail
series g(x, y) converges, which caps the expected damage any competing
cycle cover can do; above it, some balanced coefficient c_{m*,m*}
exceeds 1 and supercritical growth takes over.
"""

import numpy as np

import plantedcycles as pc

print("threshold curve (minimum 1/3 at delta = 2/3):")
for delta in (0.1, 1 / 3, 0.5, 2 / 3, 0.9, 1.0):
    print(f"  delta={delta:.3f}: lambda* = {pc.threshold(delta):.6f}")

print("\nfull reports at delta = 1:")
for lam in (0.3, 0.49, 0.51, 0.8):
    rep = pc.report(lam, 1.0)
    if rep.witness:
        w = f"witness x={rep.witness.x:.3f} y={rep.witness.y:.3f} eps={rep.witness.epsilon:.4f}"
    else:
        w = "no witness"
    print(f"  lambda={lam}: {rep.regime:5s}  m*={rep.m_star}  {w}")

# the coefficient table counts balanced/imbalanced trails per planted target
lam, delta = 0.9, 0.5
print(f"\nc_(a,b) at lambda={lam}, delta={delta} "
      f"(threshold {pc.threshold(delta):.4f}, so this is supercritical):")
print("      " + "".join(f"b={b:<8d}" for b in range(1, 5)))
for a in range(1, 5):
    row = "".join(f"{pc.coefficient(lam, delta, a, b):<10.4f}" for b in range(1, 5))
    print(f"a={a}:  {row}")
print(f"m* (first m with c_mm > 1): {pc.find_m_star(lam, delta, 32)}")

# truncated series vs the closed form of g
x, y = 0.4, 1.5
g_closed = pc.g_value(0.25, 0.5, x, y)
partial = sum(pc.coefficient(0.25, 0.5, a, b) * x ** a * y ** b
              for a in range(1, 61) for b in range(1, 61))
print(f"\ng(0.4, 1.5) at (0.25, 0.5): closed {g_closed:.9f} vs series {partial:.9f}")
