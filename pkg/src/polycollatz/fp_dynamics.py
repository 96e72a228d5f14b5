"""The Collatz-type map on F_p[x] and pre-period detection.

    T(f) = f*(x+1) - f(0)   if f(0) != 0
    T(f) = f / x            otherwise

Over F_2 this is the usual polynomial Collatz map.  For odd ``p`` orbits need
not reach 1, but every orbit is eventually periodic; the pre-period of a
degree-``d`` input is at most ``p(d^2+d) - d``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import BudgetExhausted, ZeroInput
from .fp import FpPoly, is_prime

__all__ = [
    "FpStoppingResult",
    "FpDegreeReport",
    "fp_step",
    "fp_orbit",
    "fp_stopping_time",
    "fp_bound",
    "fp_bound_sweep",
]


def fp_bound(p: int, d: int) -> int:
    return p * (d * d + d) - d


def _default_budget(p: int, d: int) -> int:
    # pre-period bound plus room for one full cycle
    return fp_bound(p, d) + p * (d + 1) ** 2 + 16


def _step(c: tuple, p: int) -> tuple:
    if c[0]:
        # f*(x+1) - f0: constant term cancels, the rest is c_i + c_{i-1}
        return (0,) + tuple((c[i] + c[i - 1]) % p for i in range(1, len(c))) + (c[-1],)
    return c[1:]


def fp_step(f: FpPoly) -> FpPoly:
    if f.is_zero:
        raise ZeroInput("the F_p map is undefined on the zero polynomial")
    return FpPoly(f.p, _step(f.coeffs, f.p))


def fp_orbit(f: FpPoly, length: int) -> list[FpPoly]:
    """The first ``length + 1`` iterates ``f, T(f), ..., T^length(f)``."""
    if f.is_zero:
        raise ZeroInput("orbit of the zero polynomial")
    out = [f.coeffs]
    for _ in range(length):
        out.append(_step(out[-1], f.p))
    return [FpPoly(f.p, c) for c in out]


@dataclass(frozen=True)
class FpStoppingResult:
    pre_period: int
    cycle_length: int
    cycle_entry: FpPoly

    def to_json(self) -> dict:
        return {
            "pre_period": self.pre_period,
            "cycle_length": self.cycle_length,
            "cycle_entry": self.cycle_entry.to_json(),
        }


def _pre_period(c: tuple, p: int, budget: int) -> tuple[int, int, tuple]:
    seen = {}
    k = 0
    while c not in seen:
        if k > budget:
            raise BudgetExhausted(f"no repeated state within {budget} steps", budget)
        seen[c] = k
        c = _step(c, p)
        k += 1
    first = seen[c]
    return first, k - first, c


def fp_stopping_time(f: FpPoly, budget: int | None = None) -> FpStoppingResult:
    """Pre-period, cycle length and first periodic iterate of ``f``.

    Every visited state is stored until the first repeat.  The first state
    seen twice is the earliest periodic iterate, so its index is the
    pre-period.
    """
    if f.is_zero:
        raise ZeroInput("zero polynomial has no stopping time")
    if budget is None:
        budget = _default_budget(f.p, f.degree)
    pre, cyc, entry = _pre_period(f.coeffs, f.p, budget)
    return FpStoppingResult(pre, cyc, FpPoly(f.p, entry))


@dataclass(frozen=True)
class FpDegreeReport:
    p: int
    d: int
    count: int
    max_pre_period: int
    bound: int

    @property
    def ok(self) -> bool:
        return self.max_pre_period <= self.bound

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "d": self.d,
            "count": self.count,
            "max_pre_period": self.max_pre_period,
            "bound": self.bound,
        }


def fp_bound_sweep(p: int, d_max: int, d_min: int = 0) -> list[FpDegreeReport]:
    """Pre-periods of every nonzero polynomial of degree ``d_min..d_max``."""
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if d_max < 0 or d_min < 0 or d_min > d_max:
        raise ValueError(f"bad degree range [{d_min}, {d_max}]")
    reports = []
    for d in range(d_min, d_max + 1):
        budget = _default_budget(p, d)
        count = 0
        worst = 0
        for lead in range(1, p):
            for low in itertools.product(range(p), repeat=d):
                pre, _, _ = _pre_period(low + (lead,), p, budget)
                count += 1
                if pre > worst:
                    worst = pre
        reports.append(FpDegreeReport(p, d, count, worst, fp_bound(p, d)))
    return reports
