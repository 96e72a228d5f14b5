"""Collatz-type maps on GF(2)[x] and their stopping times.

``T`` is the polynomial Collatz map: ``(1+x)f + 1`` on odd ``f`` and ``f/x``
on even ``f``.  ``T3 = T2 . T1`` jumps from one odd iterate to the next, and
``S3 = S2 . S1`` (multiply by ``x+1``, delete the leading term) is its
conjugate under coefficient reversal.  For odd ``f``::

    t_min(f) = 2 * t_min(reverse(f), S3) + deg(f)

which is what ``stopping_time_reduced`` evaluates.  Even inputs first shed
their factor ``x**r``, each costing one ``T`` step.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import BudgetExhausted, EvenInput, ZeroInput
from .gf2 import Gf2Poly, _ctz, _rev, format_poly

__all__ = [
    "MapKind",
    "Trajectory",
    "StoppingResult",
    "step",
    "trajectory",
    "stopping_time_direct",
    "stopping_time_reduced",
    "t3_equivalence_check",
    "default_budget",
    "t_min",
]


class MapKind(str, enum.Enum):
    T = "T"
    T1 = "T1"
    T2 = "T2"
    T3 = "T3"
    S1 = "S1"
    S2 = "S2"
    S3 = "S3"


def _ceil_sqrt(n: int) -> int:
    r = math.isqrt(n)
    return r if r * r == n else r + 1


def default_budget(degree: int, kind: MapKind = MapKind.T) -> int:
    """Step budget that the proven bounds make unreachable.

    ``ceil((2d)^1.5) + d + 4`` for ``T`` (and the other maps), and
    ``ceil(sqrt(2) * d^1.5) + 4`` for ``S3``.  Computed in exact integers.
    """
    d = max(degree, 0)
    if MapKind(kind) is MapKind.S3:
        return _ceil_sqrt(2 * d**3) + 4
    return _ceil_sqrt(8 * d**3) + d + 4


# ---------- int kernels; zero is rejected by the callers


def _t(f: int) -> int:
    if f & 1:
        return f ^ (f << 1) ^ 1
    return f >> 1


def _t1(f: int) -> int:
    return f ^ (f << 1) ^ 1


def _t2(f: int) -> int:
    if f == 0:
        return 0
    return f >> _ctz(f)


def _t3(f: int) -> int:
    g = f ^ (f << 1) ^ 1
    if g == 0:
        return 0
    return g >> _ctz(g)


def _s1(f: int) -> int:
    return f ^ (f << 1)


def _s2(f: int) -> int:
    return f ^ (1 << (f.bit_length() - 1))


def _s3(f: int) -> int:
    # deg((x+1)f) = deg(f) + 1, so its leading bit sits at f.bit_length()
    return f ^ (f << 1) ^ (1 << f.bit_length())


_KERNELS = {
    MapKind.T: _t,
    MapKind.T1: _t1,
    MapKind.T2: _t2,
    MapKind.T3: _t3,
    MapKind.S1: _s1,
    MapKind.S2: _s2,
    MapKind.S3: _s3,
}


def _s3_time(h: int, budget: int) -> int:
    k = 0
    while h != 1:
        if k == budget:
            raise BudgetExhausted(
                f"S3 iteration exceeded {budget} steps", budget=budget
            )
        h = h ^ (h << 1) ^ (1 << h.bit_length())
        k += 1
    return k


def _t_min_reduced(f: int) -> int:
    """Stopping time under T of a nonzero mask via the S3 reduction."""
    r = _ctz(f)
    g = f >> r
    deg = g.bit_length() - 1
    k = _s3_time(_rev(g), _ceil_sqrt(2 * deg**3) + 4)
    return r + 2 * k + deg


def _t_min_direct(f: int, budget: int) -> int:
    k = 0
    while f != 1:
        if k == budget:
            raise BudgetExhausted(f"T iteration exceeded {budget} steps", budget=budget)
        f = f ^ (f << 1) ^ 1 if f & 1 else f >> 1
        k += 1
    return k


# ---------- public API


def step(f: Gf2Poly, kind: MapKind) -> Gf2Poly:
    """Apply one map.  Only ``T2`` is defined at zero (``T2(0) = 0``)."""
    kind = MapKind(kind)
    if f.bits == 0 and kind is not MapKind.T2:
        raise ZeroInput(f"{kind.value} is undefined on the zero polynomial")
    return Gf2Poly(_KERNELS[kind](f.bits))


@dataclass(frozen=True)
class Trajectory:
    map: MapKind
    steps: tuple
    truncated: bool

    @property
    def t_min(self):
        """Steps taken to reach 1, or None if 1 was never reached."""
        if self.steps[-1].bits == 1:
            return len(self.steps) - 1
        return None

    def to_json(self) -> dict:
        return {
            "map": self.map.value,
            "input": format_poly(self.steps[0], "hex"),
            "steps": [format_poly(s, "hex") for s in self.steps],
            "t_min": self.t_min,
            "truncated": self.truncated,
        }


def trajectory(f: Gf2Poly, kind: MapKind = MapKind.T, budget: int = 1000) -> Trajectory:
    """Iterate ``kind`` from ``f`` until reaching 1 or spending ``budget`` steps.

    An orbit that hits 0 under a map undefined there stops early with
    ``truncated=False``.
    """
    kind = MapKind(kind)
    if f.bits == 0:
        raise ZeroInput("trajectory of the zero polynomial")
    if budget < 1:
        raise ValueError(f"budget must be >= 1, got {budget}")
    kernel = _KERNELS[kind]
    cur = f.bits
    out = [cur]
    truncated = False
    while cur != 1:
        if len(out) - 1 == budget:
            truncated = True
            break
        if cur == 0 and kind is not MapKind.T2:
            break
        cur = kernel(cur)
        out.append(cur)
    return Trajectory(kind, tuple(Gf2Poly(b) for b in out), truncated)


@dataclass(frozen=True)
class StoppingResult:
    """``budget_used`` is the step allowance the engine ran under.

    For the reduced engine it is expressed in equivalent ``T`` steps, so
    ``t_min <= budget_used`` holds for both methods.
    """

    t_min: int
    method: str
    budget_used: int


def stopping_time_direct(
    f: Gf2Poly, kind: MapKind = MapKind.T, budget: int | None = None
) -> StoppingResult:
    """Minimal ``k >= 0`` with ``kind**k (f) == 1``, by plain iteration."""
    kind = MapKind(kind)
    if f.bits == 0:
        raise ZeroInput("zero polynomial has no stopping time")
    if budget is None:
        budget = default_budget(f.bits.bit_length() - 1, kind)
    if kind is MapKind.T:
        return StoppingResult(_t_min_direct(f.bits, budget), "direct", budget)
    kernel = _KERNELS[kind]
    cur = f.bits
    k = 0
    while cur != 1:
        if k == budget:
            raise BudgetExhausted(
                f"{kind.value} iteration exceeded {budget} steps", budget=budget
            )
        if cur == 0:
            raise ZeroInput(f"{kind.value} orbit reached 0; stopping time is infinite")
        cur = kernel(cur)
        k += 1
    return StoppingResult(k, "direct", budget)


def stopping_time_reduced(f: Gf2Poly, budget: int | None = None) -> StoppingResult:
    """Stopping time under ``T`` computed through the S3 dynamics.

    Writes ``f = x**r * g`` with ``g`` odd, counts S3 steps ``k`` from
    ``reverse(g)`` to 1 and returns ``r + 2k + deg(g)``.  ``budget`` caps
    the S3 steps.
    """
    if f.bits == 0:
        raise ZeroInput("zero polynomial has no stopping time")
    r = _ctz(f.bits)
    g = f.bits >> r
    deg = g.bit_length() - 1
    if budget is None:
        budget = default_budget(deg, MapKind.S3)
    k = _s3_time(_rev(g), budget)
    return StoppingResult(r + 2 * k + deg, "reduced", r + 2 * budget + deg)


def t_min(f: Gf2Poly) -> int:
    """Stopping time of ``f`` under ``T`` (reduced engine)."""
    return stopping_time_reduced(f).t_min


def t3_equivalence_check(f: Gf2Poly) -> bool:
    """Check both reduction identities on the whole orbit of odd ``f``.

    True iff ``reverse(T3^i f) == S3^i(reverse f)`` at every step until 1,
    and ``t_min(f) == 2 * t_min(f, T3) + deg(f)`` with ``t_min(f)`` taken
    from direct ``T`` iteration.
    """
    if f.bits == 0:
        raise ZeroInput("t3_equivalence_check of the zero polynomial")
    if not f.bits & 1:
        raise EvenInput(f"expected an odd polynomial, got {format_poly(f)}")
    deg = f.bits.bit_length() - 1
    budget = default_budget(deg)
    cur = f.bits
    hat = _rev(cur)
    k = 0
    while cur != 1:
        if k > budget:
            return False
        cur = _t3(cur)
        hat = _s3(hat)
        k += 1
        if _rev(cur) != hat:
            return False
    if hat != 1:
        return False
    return _t_min_direct(f.bits, budget) == 2 * k + deg
