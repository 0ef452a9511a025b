"""Closed-form analysis of the recovery phase transition.

The central objects: trail-count coefficients c_{a,b}, their generating
function g(x, y) = sum_k r(x, y)^k with

    r(x, y) = (2x / (1 - x)) * (delta * lambda * y / (1 - (1 - delta) * lambda * y)),

the recovery threshold 1 / (sqrt(2*delta) + sqrt(1-delta))^2, the
sub-threshold witness (x, y, epsilon), the smallest supercritical order
m* with c_{m*,m*} > 1, and the constant bounding the expected size of
the symmetric difference against any competing cycle cover.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

_RATIO_MARGIN = 1e-6   # bisection target: largest y with r < 1 - margin


def threshold(delta: float) -> float:
    """Critical background intensity 1 / (sqrt(2d) + sqrt(1-d))^2."""
    if not 0 < delta <= 1:
        raise ValueError(f"delta={delta} outside (0, 1]")
    return 1.0 / (math.sqrt(2 * delta) + math.sqrt(1 - delta)) ** 2


def _log_comb(n: int, k: int) -> float:
    return math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)


def _comb_f(n: int, k: int) -> float:
    # exact below C(60,30)-ish scale, log-space above to dodge overflow
    if n <= 120:
        return float(math.comb(n, k))
    return math.exp(_log_comb(n, k))


def coefficient(lam: float, delta: float, a: int, b: int) -> float:
    """c_{a,b}: the n-free expected (a,b)-trail count per planted target.

    Finite sum over k = 1..min(a,b) of
    (lam*(1-delta))^b * (2*delta/(1-delta))^k * C(a-1,k-1) * C(b-1,k-1);
    at delta=1 only the k=b term survives, giving (2*lam)^b * C(a-1,b-1).
    """
    if a < 1 or b < 1:
        raise ValueError("a and b must be >= 1 (use zero_red_trail_mean for a=0)")
    if not 0 < delta <= 1:
        raise ValueError(f"delta={delta} outside (0, 1]")
    if delta == 1.0:
        if b > a:
            return 0.0
        return (2 * lam) ** b * _comb_f(a - 1, b - 1)
    total = 0.0
    for k in range(1, min(a, b) + 1):
        term = (b * math.log(lam * (1 - delta)) if lam > 0 else -math.inf)
        term += k * math.log(2 * delta / (1 - delta))
        term += _log_comb(a - 1, k - 1) + _log_comb(b - 1, k - 1)
        total += math.exp(term) if term < 700 else math.inf
    return total


def zero_red_trail_mean(lam: float, delta: float, b: int) -> float:
    """(1-delta)^(b-1) * lam^b, the n-free mean count of all-blue trails."""
    if b < 1:
        raise ValueError("b must be >= 1")
    return (1 - delta) ** (b - 1) * lam ** b


def ratio(lam: float, delta: float, x: float, y: float) -> float:
    """r(x, y), the geometric ratio of the generating function."""
    return (2 * x / (1 - x)) * (delta * lam * y / (1 - (1 - delta) * lam * y))


def g_value(lam: float, delta: float, x: float, y: float) -> float:
    """g(x, y) = r / (1 - r) when r < 1, else +inf (series diverges)."""
    if not 0 <= x < 1:
        raise ValueError(f"x={x} outside [0, 1)")
    if delta < 1 and not 0 <= y < 1 / (lam * (1 - delta)):
        raise ValueError(f"y={y} outside [0, 1/(lam*(1-delta)))")
    if y < 0:
        raise ValueError(f"y={y} negative")
    r = ratio(lam, delta, x, y)
    if r >= 1:
        return math.inf
    return r / (1 - r)


@dataclass(frozen=True)
class Witness:
    x: float
    y: float
    epsilon: float


@dataclass(frozen=True)
class GenFunReport:
    lam: float
    delta: float
    threshold: float
    regime: str                      # below | above | critical
    witness: Witness | None
    m_star: int | None
    expected_diff_bound: float | None


def find_witness(lam: float, delta: float) -> Witness | None:
    """Sub-threshold witness (x, y, epsilon) with r(x, y) < 1 and
    x^(1+2*eps) * y^(1-2*eps) = 1; None at or above the threshold.

    x is the minimizer (1 - (3*delta - 1)*lam) / 2 of r along x*y = 1;
    y is pushed up by bisection to the largest value keeping r below
    1 - 1e-6, and epsilon solves the balance equation in closed form,
    eps = ln(x*y) / (2*ln(y/x)).
    """
    if lam <= 0:
        raise ValueError("lambda must be positive")
    if lam >= threshold(delta):
        return None
    x = (1 - (3 * delta - 1) * lam) / 2
    y0 = 1 / x
    r0 = ratio(lam, delta, x, y0)
    if r0 >= 1:
        return None
    target = 1 - _RATIO_MARGIN
    # r is increasing in y along fixed x and crosses 1 at
    # y_cross = 1 / (lam * (t*delta + 1 - delta)) with t = 2x/(1-x),
    # strictly before the pole of the unplanted-segment factor.
    t = 2 * x / (1 - x)
    y_cross = 1 / (lam * (t * delta + 1 - delta))
    if r0 >= target:
        # squeezed against the threshold: keep x*y > 1 with the room that remains
        y = (y0 + y_cross) / 2
    else:
        y_lo, y_hi = y0, y_cross
        for _ in range(200):
            mid = (y_lo + y_hi) / 2
            if ratio(lam, delta, x, mid) < target:
                y_lo = mid
            else:
                y_hi = mid
        y = y_lo
    eps = math.log(x * y) / (2 * math.log(y / x))
    return Witness(x=x, y=y, epsilon=eps)


def find_m_star(lam: float, delta: float, m_cap: int) -> int | None:
    """Smallest m <= m_cap with c_{m,m} > 1, else None."""
    if m_cap < 1:
        raise ValueError("m_cap must be >= 1")
    for m in range(1, m_cap + 1):
        if coefficient(lam, delta, m, m) > 1:
            return m
    return None


def expected_diff_bound(lam: float, delta: float) -> float | None:
    """Constant C with E|H* XOR H| <= C for every competing cycle cover,
    assembled from the witness: (Gamma0 + Gamma1) / epsilon where
    Gamma0 = (1/2 + eps) * lam*(1-delta) / (1 - lam*(1-delta))^2 and
    Gamma1 = ((y/x) / (y/x - 1)) * 1 / (1 - r).  None above the threshold.
    """
    w = find_witness(lam, delta)
    if w is None:
        return None
    q = lam * (1 - delta)
    gamma0 = (0.5 + w.epsilon) * q / (1 - q) ** 2
    r = ratio(lam, delta, w.x, w.y)
    t = w.y / w.x
    gamma1 = (t / (t - 1)) / (1 - r)
    return (gamma0 + gamma1) / w.epsilon


def report(lam: float, delta: float, m_cap: int = 64) -> GenFunReport:
    """Full analysis bundle for one (lambda, delta) point."""
    thr = threshold(delta)
    if lam < thr:
        regime = "below"
    elif lam > thr:
        regime = "above"
    else:
        regime = "critical"
    w = find_witness(lam, delta)
    return GenFunReport(
        lam=lam,
        delta=delta,
        threshold=thr,
        regime=regime,
        witness=w,
        m_star=find_m_star(lam, delta, m_cap),
        expected_diff_bound=expected_diff_bound(lam, delta),
    )


def threshold_quadratic_residual(delta: float) -> float:
    """Residual of (3d-1)^2 L^2 - (2d+2) L + 1 at L = threshold(delta).

    The threshold is the smaller root of this quadratic except at
    delta = 1/3 where the quadratic degenerates to linear.
    """
    t = threshold(delta)
    return (3 * delta - 1) ** 2 * t * t - (2 * delta + 2) * t + 1
