"""Polynomials over the prime field F_p as canonical coefficient tuples."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import DuplicateTerm, PolySyntaxError
from .gf2 import NEG_INF, Gf2Poly, parse

__all__ = ["FpPoly", "is_prime", "parse_fp"]

_FP_TERM = re.compile(r"(\d+)?(\*)?(x(?:\^(\d+))?)?")


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    q = 3
    while q * q <= p:
        if p % q == 0:
            return False
        q += 2
    return True


def _canonical(coeffs, p):
    out = [c % p for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True, slots=True)
class FpPoly:
    """``coeffs[i]`` is the coefficient of ``x**i``, reduced mod ``p``.

    Construction reduces residues and drops trailing zeros, so equal
    polynomials compare and hash equal.
    """

    p: int
    coeffs: tuple = ()

    def __post_init__(self):
        if not isinstance(self.p, int) or self.p < 2:
            raise ValueError(f"modulus must be an integer >= 2, got {self.p!r}")
        object.__setattr__(self, "coeffs", _canonical(self.coeffs, self.p))

    @classmethod
    def from_gf2(cls, f: Gf2Poly) -> FpPoly:
        b = f.bits
        return cls(2, tuple((b >> i) & 1 for i in range(b.bit_length())))

    def to_gf2(self) -> Gf2Poly:
        if self.p != 2:
            raise ValueError("only F_2 polynomials convert to Gf2Poly")
        return Gf2Poly(sum(1 << i for i, c in enumerate(self.coeffs) if c))

    @property
    def degree(self):
        if not self.coeffs:
            return NEG_INF
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def constant(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if c == 0:
                continue
            mono = "" if e == 0 else "x" if e == 1 else f"x^{e}"
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return "+".join(terms)

    def to_json(self) -> dict:
        return {"p": self.p, "coeffs": list(self.coeffs)}


def parse_fp(text: str, p: int) -> FpPoly:
    """Parse ``"2*x^3+x+4"`` style text over F_p.

    Coefficients may be written ``2*x^3`` or ``2x^3``; constants are bare
    integers.  Hex-bits text (``0x..``) is accepted when ``p == 2``.
    """
    compact = "".join(text.split())
    if compact[:2] in ("0x", "0X"):
        if p != 2:
            raise PolySyntaxError("hex-bits form is only valid for p = 2", 0)
        return FpPoly.from_gf2(parse(compact))
    if not compact:
        raise PolySyntaxError("empty polynomial", 0)
    coeffs = {}
    pos = 0
    while True:
        m = _FP_TERM.match(compact, pos)
        num, star, mono, exp = m.groups()
        if m.end() == pos or (star and not mono) or (num is None and mono is None):
            raise PolySyntaxError("expected term", pos)
        e = 0 if mono is None else int(exp) if exp is not None else 1
        if e in coeffs:
            raise DuplicateTerm(f"duplicate term x^{e}", pos)
        coeffs[e] = int(num) if num is not None else 1
        pos = m.end()
        if pos == len(compact):
            break
        if compact[pos] != "+":
            raise PolySyntaxError(f"expected '+', found {compact[pos]!r}", pos)
        pos += 1
    top = max(coeffs)
    return FpPoly(p, tuple(coeffs.get(i, 0) for i in range(top + 1)))
