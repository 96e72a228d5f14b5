"""Exhaustive per-degree stopping-time statistics over GF(2)[x].

For each degree ``d`` every polynomial of degree exactly ``d`` is visited
(leading bit set, ``d`` free low bits), giving ``sigma(d)``, the maximal
stopping time, and ``rho(d)``, the mean.  The low-bit masks are split into
static contiguous chunks; chunk results combine with ``max`` and exact
integer sums, so output does not depend on the worker count.
"""

from __future__ import annotations

import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal
from fractions import Fraction

from .dynamics import _t_min_direct, _t_min_reduced, default_budget
from .errors import CapExceeded
from .gf2 import Gf2Poly

__all__ = [
    "SweepRow",
    "DEFAULT_CAP",
    "degree_cap",
    "sigma_bound",
    "sweep",
    "sigma_direct",
    "growth_report",
    "rows_to_csv",
    "rows_to_json",
    "SWEEP_COLUMNS",
]

DEFAULT_CAP = 24
CAP_ENV = "POLY_COLLATZ_CAP"
SWEEP_COLUMNS = ("d", "count", "sigma", "rho", "argmax_hex", "bound_margin")

_CHUNKS_PER_WORKER = 4
_MIN_CHUNK = 1 << 10


def degree_cap() -> int:
    raw = os.environ.get(CAP_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"{CAP_ENV} must be an integer, got {raw!r}") from None
    if cap < 0:
        raise ValueError(f"{CAP_ENV} must be >= 0, got {cap}")
    return cap


def sigma_bound(d: int) -> float:
    """``(2d)^1.5 + d`` as a float (sqrt is correctly rounded, so this is portable)."""
    return 2 * d * math.sqrt(2 * d) + d


def _fixed6(x) -> str:
    return str(Decimal(x).quantize(Decimal("0.000001"), rounding=ROUND_HALF_EVEN))


@dataclass(frozen=True)
class SweepRow:
    d: int
    count: int
    sigma: int
    total: int
    argmax: Gf2Poly

    @property
    def rho(self) -> Fraction:
        return Fraction(self.total, self.count)

    @property
    def rho_decimal(self) -> str:
        return str(_round_fraction(self.rho))

    @property
    def bound_margin(self) -> float:
        return sigma_bound(self.d) - self.sigma

    @property
    def argmax_hex(self) -> str:
        return hex(self.argmax.bits)

    def to_record(self) -> dict:
        """Field values as rendered text; numbers stay numeric in JSON."""
        return {
            "d": str(self.d),
            "count": str(self.count),
            "sigma": str(self.sigma),
            "rho": self.rho_decimal,
            "argmax_hex": self.argmax_hex,
            "bound_margin": _fixed6(self.bound_margin),
        }


def _round_fraction(q: Fraction) -> Decimal:
    # round q to 6 places, ties to even, using exact integer arithmetic
    scaled = q * 1_000_000
    fl = math.floor(scaled)
    rem = scaled - fl
    if rem > Fraction(1, 2) or (rem == Fraction(1, 2) and fl % 2 == 1):
        fl += 1
    return Decimal(fl).scaleb(-6).quantize(Decimal("0.000001"))


def _scan(d: int, lo: int, hi: int) -> tuple[int, int, int]:
    """(max, first argmax, sum) of t_min over degree-d masks with low bits in [lo, hi)."""
    top = 1 << d
    best = -1
    arg = 0
    total = 0
    for low in range(lo, hi):
        f = top | low
        t = _t_min_reduced(f)
        total += t
        if t > best:
            best = t
            arg = f
    return best, arg, total


def _chunks(d: int, parts: int) -> list[tuple[int, int, int]]:
    n = 1 << d
    parts = max(1, min(parts, n // _MIN_CHUNK or 1))
    step = -(-n // parts)
    return [(d, lo, min(lo + step, n)) for lo in range(0, n, step)]


def _combine(d: int, results) -> SweepRow:
    sigma = -1
    arg = 0
    total = 0
    # chunks are in ascending mask order, so a strict '>' keeps the smallest argmax
    for best, a, s in results:
        total += s
        if best > sigma:
            sigma, arg = best, a
    return SweepRow(d, 1 << d, sigma, total, Gf2Poly(arg))


def sweep(
    d_min: int, d_max: int, parallelism: int = 1, cap: int | None = None
) -> list[SweepRow]:
    """One ``SweepRow`` per degree in ``[d_min, d_max]``, in degree order."""
    if cap is None:
        cap = degree_cap()
    if d_min < 0 or d_min > d_max:
        raise ValueError(f"need 0 <= d_min <= d_max, got [{d_min}, {d_max}]")
    if d_max > cap:
        raise CapExceeded(
            f"d_max={d_max} exceeds the degree cap {cap} (set {CAP_ENV} to raise it)"
        )
    if parallelism < 1:
        raise ValueError(f"parallelism must be >= 1, got {parallelism}")

    tasks = {d: _chunks(d, parallelism * _CHUNKS_PER_WORKER) for d in range(d_min, d_max + 1)}
    if parallelism == 1:
        return [_combine(d, [_scan(*c) for c in cs]) for d, cs in tasks.items()]
    with ProcessPoolExecutor(max_workers=parallelism) as pool:
        futures = {d: [pool.submit(_scan, *c) for c in cs] for d, cs in tasks.items()}
        return [_combine(d, [f.result() for f in fs]) for d, fs in futures.items()]


def sigma_direct(d: int) -> int:
    """sigma(d) recomputed with plain T iteration (slow; cross-check only)."""
    top = 1 << d
    budget = default_budget(d)
    return max(_t_min_direct(top | low, budget) for low in range(top))


def growth_report(rows) -> list[dict]:
    """Descriptive growth ratios per degree; ``None`` where a ratio is undefined."""
    rows = list(rows)
    if not rows:
        raise ValueError("growth_report needs at least one row")
    out = []
    for r in rows:
        d = r.d
        rho = float(r.rho)
        out.append(
            {
                "d": d,
                "sigma": r.sigma,
                "rho": r.rho_decimal,
                "sigma_over_d": r.sigma / d if d > 0 else None,
                "sigma_over_dlogd": r.sigma / (d * math.log(d)) if d > 1 else None,
                "sigma_over_d15": r.sigma / d**1.5 if d > 0 else None,
                "rho_over_d": rho / d if d > 0 else None,
            }
        )
    return out


def rows_to_csv(rows) -> str:
    lines = [",".join(SWEEP_COLUMNS)]
    for r in rows:
        rec = r.to_record()
        lines.append(",".join(rec[c] for c in SWEEP_COLUMNS))
    return "\n".join(lines) + "\n"


def rows_to_json(rows) -> str:
    # numbers are written from their exact decimal text, not via float
    items = []
    for r in rows:
        rec = r.to_record()
        fields = []
        for c in SWEEP_COLUMNS:
            v = rec[c] if c != "argmax_hex" else json.dumps(rec[c])
            fields.append(f'"{c}": {v}')
        items.append("  {" + ", ".join(fields) + "}")
    return "[\n" + ",\n".join(items) + "\n]\n"
