"""Cross-validation suites run by ``polycollatz check``.

Each suite pits a fast path against an independent slow one (direct
iteration, schoolbook products, explicit orbits) and reports mismatches.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from . import closed_form as cf
from .dynamics import (
    MapKind,
    _ceil_sqrt,
    _s3,
    _t_min_direct,
    _t_min_reduced,
    stopping_time_direct,
    t3_equivalence_check,
)
from .fp import FpPoly
from .fp_dynamics import _pre_period, _step, fp_bound, fp_bound_sweep
from .gf2 import Gf2Poly, _mul, _pow_x_plus_1, _rev, leading_terms_of_pow
from .sweep import sweep

__all__ = ["CheckResult", "SCALES", "run_checks"]


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failures: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, what):
        if len(self.failures) < 10:
            self.failures.append(what)
        else:
            self.failures[-1] = "... more failures"


SCALES = {
    "quick": {
        "odd_deg": 10,
        "random_odd": 50,
        "bound_deg": 10,
        "s3_pow_n": 256,
        "family_n": 32,
        "ap_dmax": 8,
        "ap_oracle_dmax": 6,
        "hat_cases": 1000,
        "identity_cases": 200,
        "fp_deg": 4,
        "sweep_deg": 10,
    },
    "full": {
        "odd_deg": 14,
        "random_odd": 500,
        "bound_deg": 16,
        "s3_pow_n": 4096,
        "family_n": 128,
        "ap_dmax": 12,
        "ap_oracle_dmax": 7,
        "hat_cases": 10_000,
        "identity_cases": 1000,
        "fp_deg": 5,
        "sweep_deg": 18,
    },
}


def _rand_odd(rng, deg):
    if deg == 0:
        return 1
    return (1 << deg) | rng.getrandbits(deg) | 1


def check_direct_vs_reduced(cfg, rng):
    r = CheckResult("direct vs reduced stopping time")
    for f in range(1, 1 << (cfg["odd_deg"] + 1), 2):
        r.cases += 1
        deg = f.bit_length() - 1
        if _t_min_direct(f, 10**6) != _t_min_reduced(f):
            r.fail(hex(f))
        if deg <= 8 and not t3_equivalence_check(Gf2Poly(f)):
            r.fail(f"T3/S3 conjugacy at {hex(f)}")
    for _ in range(cfg["random_odd"]):
        f = _rand_odd(rng, rng.randint(1, 512))
        r.cases += 1
        if _t_min_direct(f, 10**7) != _t_min_reduced(f):
            r.fail(hex(f))
    return r


def check_bounds(cfg, rng):
    r = CheckResult("stopping-time bounds")
    for f in range(1, 1 << (cfg["bound_deg"] + 1)):
        d = f.bit_length() - 1
        t = _t_min_reduced(f)
        r.cases += 1
        if t > _ceil_sqrt(8 * d**3) + d or t > d * d + 2 * d:
            r.fail(f"{hex(f)}: t_min={t}")
        if f & 1:
            k = 0
            h = f
            while h != 1:
                h = _s3(h)
                k += 1
            if k * k > 2 * d**3:
                r.fail(f"{hex(f)}: S3 time {k}")
    return r


def check_s3_time_of_pow(cfg, rng):
    r = CheckResult("S3 time of (x+1)^n")
    for n in range(1, cfg["s3_pow_n"] + 1):
        r.cases += 1
        h = 1
        for _ in range(n):
            h ^= h << 1
        direct = stopping_time_direct(Gf2Poly(h), MapKind.S3).t_min
        if direct != cf.s3_time_of_pow(n):
            r.fail(f"n={n}: direct {direct}")
    return r


def check_family(cfg, rng):
    r = CheckResult("family closed form")
    for a in range(5):
        for b in range(5):
            if a == b == 0:
                continue
            for n in range(1, cfg["family_n"] + 1):
                p = cf.FamilyParams(a, b, n)
                f = cf.family_poly(p)
                r.cases += 1
                if _t_min_direct(f.bits, 10**7) != cf.family_stopping_time(p):
                    r.fail(f"a={a} b={b} n={n}")
                if n * (a + b) >= 2 and not cf.fab_reduce_check(p):
                    r.fail(f"reduction a={a} b={b} n={n}")
    return r


def check_ap_runs(cfg, rng):
    r = CheckResult("arithmetic runs")
    for a, b in ((1, 0), (0, 1), (1, 1), (2, 1)):
        for run in cf.ap_runs(a, b, 3, cfg["ap_dmax"]):
            r.cases += 1
            if run.length != cf.run_length(a, b, run.d) or not run.is_arithmetic():
                r.fail(f"a={a} b={b} d={run.d}")
            if run.d <= cfg["ap_oracle_dmax"]:
                for n, v in zip(range(run.n_start, run.n_end + 1), run.values):
                    f = cf.family_poly(cf.FamilyParams(a, b, n))
                    if _t_min_direct(f.bits, 10**7) != v:
                        r.fail(f"a={a} b={b} n={n}")
    return r


def _schoolbook(a, b):
    out = 0
    for i in range(a.bit_length()):
        for j in range(b.bit_length()):
            if (a >> i) & 1 and (b >> j) & 1:
                out ^= 1 << (i + j)
    return out


def check_hat_algebra(cfg, rng):
    r = CheckResult("coefficient reversal algebra")
    for _ in range(cfg["hat_cases"]):
        f = rng.getrandbits(rng.randint(1, 257))
        g = rng.getrandbits(rng.randint(1, 257))
        k = rng.randint(0, 64)
        r.cases += 1
        fg = _mul(f, g)
        if _rev(fg) != _mul(_rev(f), _rev(g)):
            r.fail(f"product {hex(f)} {hex(g)}")
        if _rev(f << k) != _rev(f):
            r.fail(f"shift {hex(f)} {k}")
        if f:
            stripped = f >> ((f & -f).bit_length() - 1)
            if _rev(_rev(f)) != stripped:
                r.fail(f"involution {hex(f)}")
    for _ in range(min(200, cfg["hat_cases"])):
        f = rng.getrandbits(rng.randint(1, 40))
        g = rng.getrandbits(rng.randint(1, 40))
        if _mul(f, g) != _schoolbook(f, g):
            r.fail(f"mul {hex(f)} {hex(g)}")
    for n in range(1, 1 << 10):
        top = []
        p = _pow_x_plus_1(n)
        for e in range(p.bit_length() - 1, -1, -1):
            if (p >> e) & 1:
                top.append(e)
            if len(top) == min(3, 1 << n.bit_count()):
                break
        if leading_terms_of_pow(n, len(top)) != top:
            r.fail(f"leading terms n={n}")
    return r


def check_s3_identities(cfg, rng):
    r = CheckResult("S3 iteration and restriction identities")
    for _ in range(cfg["identity_cases"]):
        n = rng.randint(1, 64)
        gdeg = rng.randint(0, n - 1)
        g = (1 << gdeg) | rng.getrandbits(gdeg) if gdeg else rng.getrandbits(1)
        f = (1 << n) | g
        r.cases += 1
        cur = f
        span = n - (g.bit_length() - 1) if g else n
        for i in range(span + 1):
            expect = _mul(_pow_x_plus_1(i), f) & ((1 << (n + 1)) - 1)
            if cur != expect:
                r.fail(f"iterations n={n} g={hex(g)} i={i}")
                break
            cur = _s3(cur)
        h = f | 1
        cur = h
        k = 0
        while True:
            m = cur.bit_length() - 1
            if cur != _mul(_pow_x_plus_1(k), h) & ((1 << (m + 1)) - 1):
                r.fail(f"restriction {hex(h)} k={k}")
                break
            if cur == 1:
                break
            cur = _s3(cur)
            k += 1
    return r


def check_fp(cfg, rng):
    r = CheckResult("F_p pre-periods")
    for p in (2, 3, 5):
        for rep in fp_bound_sweep(p, cfg["fp_deg"]):
            r.cases += rep.count
            if not rep.ok:
                r.fail(f"p={p} d={rep.d} max={rep.max_pre_period} bound={rep.bound}")
    for f in range(1, 1 << (cfg["fp_deg"] + 1)):
        c = FpPoly.from_gf2(Gf2Poly(f)).coeffs
        t = _t_min_direct(f, 10**6)
        pre, cyc, _ = _pre_period(c, 2, 10**6)
        cur, g = c, f
        for _ in range(t + 2):
            if FpPoly(2, cur).to_gf2().bits != g:
                r.fail(f"orbit mismatch at {hex(f)}")
                break
            cur = _step(cur, 2)
            g = g ^ (g << 1) ^ 1 if g & 1 else g >> 1
        if cyc != 2 or t != (0 if f == 1 else pre + 1) or pre > fp_bound(2, f.bit_length() - 1):
            r.fail(f"p=2 pre-period {hex(f)}")
    return r


def check_sweep(cfg, rng):
    r = CheckResult("sweep golden values and margins")
    rows = sweep(0, cfg["sweep_deg"])
    r.cases = len(rows)
    if [x.sigma for x in rows[:3]] != [0, 3, 6] or [x.rho for x in rows[:3]] != [0, 2, 4]:
        r.fail("golden sigma/rho for d <= 2")
    for x in rows:
        if x.bound_margin < 0 or not x.sigma >= x.rho >= x.d:
            r.fail(f"d={x.d}")
    return r


SUITES = (
    check_direct_vs_reduced,
    check_bounds,
    check_s3_time_of_pow,
    check_family,
    check_ap_runs,
    check_hat_algebra,
    check_s3_identities,
    check_fp,
    check_sweep,
)


def run_checks(scale: str = "quick", seed: int = 0) -> list[CheckResult]:
    cfg = SCALES[scale]
    results = []
    for suite in SUITES:
        rng = random.Random(f"{seed}:{suite.__name__}")
        t0 = time.perf_counter()
        res = suite(cfg, rng)
        res.seconds = time.perf_counter() - t0
        results.append(res)
    return results
