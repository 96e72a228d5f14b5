"""Exact stopping times for the family ``(x^a (x+1)^b)^n + 1``.

With ``m = n(a+b)`` and ``d`` the integer satisfying ``2**d < m <= 2**(d+1)``
(``d = -1`` when ``m = 1``), the stopping time under ``T`` is
``2**(d+2) + (a-b)*n``.  Inside each dyadic window of ``m`` the values
therefore move in steps of ``a - b``; ``ap_runs`` lists those windows.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field

from .errors import DomainTooSmall
from .gf2 import Gf2Poly, _pow_x_plus_1

__all__ = [
    "FamilyParams",
    "ApRun",
    "family_poly",
    "s3_time_of_pow",
    "family_stopping_time",
    "fab_reduce_check",
    "ap_runs",
    "run_length",
    "ap_runs_csv",
    "AP_RUN_COLUMNS",
]


@dataclass(frozen=True)
class FamilyParams:
    a: int
    b: int
    n: int

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise ValueError(f"a and b must be >= 0, got a={self.a}, b={self.b}")
        if self.a == 0 and self.b == 0:
            raise ValueError("(a, b) = (0, 0) is excluded from the family")
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")

    @property
    def degree(self) -> int:
        return self.n * (self.a + self.b)


def family_poly(p: FamilyParams) -> Gf2Poly:
    return Gf2Poly((_pow_x_plus_1(p.b * p.n) << (p.a * p.n)) ^ 1)


def s3_time_of_pow(n: int) -> int:
    """S3 stopping time of ``(x+1)**n``: ``2**d - n`` where ``2**(d-1) <= n < 2**d``."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return (1 << n.bit_length()) - n


def _window(m: int) -> int:
    # the d with 2^d < m <= 2^(d+1); -1 for m == 1
    return (m - 1).bit_length() - 1


def family_stopping_time(p: FamilyParams) -> int:
    d = _window(p.n * (p.a + p.b))
    return (1 << (d + 2)) + (p.a - p.b) * p.n


def fab_reduce_check(p: FamilyParams) -> bool:
    """Compare the closed form with ``2 s3((x+1)^(m-1)) + 3na + nb - 2``.

    Only meaningful for ``m = n(a+b) >= 2``; at ``m = 1`` the right-hand
    side would need the S3 time of ``(x+1)**0``.
    """
    m = p.n * (p.a + p.b)
    if m < 2:
        raise DomainTooSmall(f"n(a+b) = {m}; the reduction needs n(a+b) >= 2")
    rhs = 2 * s3_time_of_pow(m - 1) + 3 * p.n * p.a + p.n * p.b - 2
    return family_stopping_time(p) == rhs


def run_length(a: int, b: int, d: int) -> int:
    s = a + b
    return (1 << (d + 1)) // s - (1 << d) // s


@dataclass(frozen=True)
class ApRun:
    a: int
    b: int
    d: int
    n_start: int
    n_end: int
    common_difference: int
    values: tuple = field(repr=False)

    @property
    def length(self) -> int:
        return self.n_end - self.n_start + 1

    @property
    def first_value(self) -> int:
        return self.values[0]

    def is_arithmetic(self) -> bool:
        return all(
            v2 - v1 == self.common_difference
            for v1, v2 in zip(self.values, self.values[1:])
        )

    def to_row(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "d": self.d,
            "n_start": self.n_start,
            "n_end": self.n_end,
            "diff": self.common_difference,
            "first_value": self.first_value,
            "length": self.length,
        }


AP_RUN_COLUMNS = ("a", "b", "d", "n_start", "n_end", "diff", "first_value", "length")


def ap_runs(a: int, b: int, d_min: int, d_max: int) -> list[ApRun]:
    """One arithmetic run per ``d`` in ``[d_min, d_max]``.

    Run ``d`` covers ``n`` in ``[2**d // (a+b) + 1, 2**(d+1) // (a+b)]``,
    where every stopping time equals ``2**(d+2) + (a-b) n``.  Requires
    ``2**d_min >= a + b``.
    """
    if a < 0 or b < 0 or (a == 0 and b == 0):
        raise ValueError(f"invalid family parameters a={a}, b={b}")
    s = a + b
    if d_min > d_max:
        raise ValueError(f"d_min={d_min} exceeds d_max={d_max}")
    if d_min < 0 or (1 << d_min) < s:
        raise ValueError(f"d_min must satisfy 2**d_min >= a+b = {s}, got {d_min}")
    runs = []
    for d in range(d_min, d_max + 1):
        n_start = (1 << d) // s + 1
        n_end = (1 << (d + 1)) // s
        values = tuple(
            family_stopping_time(FamilyParams(a, b, n)) for n in range(n_start, n_end + 1)
        )
        run = ApRun(a, b, d, n_start, n_end, a - b, values)
        if not run.is_arithmetic():
            raise RuntimeError(f"run at d={d} is not arithmetic: {values}")
        runs.append(run)
    return runs


def ap_runs_csv(runs) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=AP_RUN_COLUMNS, lineterminator="\n")
    w.writeheader()
    for run in runs:
        w.writerow(run.to_row())
    return buf.getvalue()
