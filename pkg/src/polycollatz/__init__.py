"""Polynomial Collatz dynamics over GF(2)[x] and F_p[x]."""

from .closed_form import (
    ApRun,
    FamilyParams,
    ap_runs,
    fab_reduce_check,
    family_poly,
    family_stopping_time,
    s3_time_of_pow,
)
from .dynamics import (
    MapKind,
    StoppingResult,
    Trajectory,
    step,
    stopping_time_direct,
    stopping_time_reduced,
    t3_equivalence_check,
    t_min,
    trajectory,
)
from .errors import (
    BudgetExhausted,
    CapExceeded,
    DomainTooSmall,
    DuplicateTerm,
    EvenInput,
    InsufficientTerms,
    OddInput,
    PolyCollatzError,
    PolySyntaxError,
    ZeroInput,
)
from .fp import FpPoly, parse_fp
from .fp_dynamics import FpStoppingResult, fp_bound_sweep, fp_step, fp_stopping_time
from .gf2 import (
    NEG_INF,
    Gf2Poly,
    add,
    div_x,
    format_poly,
    leading_terms_of_pow,
    mul,
    mul_x_plus_1,
    parse,
    pow_x_plus_1,
    reverse,
    strip_x,
    truncate,
)
from .sweep import SweepRow, growth_report, sweep

__version__ = "0.1.0"
