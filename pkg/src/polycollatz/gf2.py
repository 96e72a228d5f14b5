"""Polynomials over GF(2) stored as bit masks.

Bit ``i`` of the mask is the coefficient of ``x**i``, so multiplying by ``x``
is a left shift and dividing by ``x`` is a right shift.  The zero polynomial
has degree ``NEG_INF``, a dedicated marker that orders below every integer
but cannot be used as one.

The module keeps two layers: ``Gf2Poly`` values with the public operations,
and private ``_*`` kernels over plain ints that the stopping-time engines use
in their inner loops.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DuplicateTerm,
    InsufficientTerms,
    OddInput,
    PolySyntaxError,
    ZeroInput,
)

__all__ = [
    "NEG_INF",
    "Gf2Poly",
    "ZERO",
    "ONE",
    "X",
    "add",
    "mul",
    "mul_x_plus_1",
    "div_x",
    "strip_x",
    "reverse",
    "truncate",
    "pow_x_plus_1",
    "leading_terms_of_pow",
    "parse",
    "format_poly",
]


class _MinusInfinity:
    """Degree of the zero polynomial."""

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NEG_INF"

    def __str__(self):
        return "-inf"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("polycollatz.NEG_INF")

    def __lt__(self, other):
        if other is self:
            return False
        if isinstance(other, int):
            return True
        return NotImplemented

    def __le__(self, other):
        return other is self or self.__lt__(other)

    def __gt__(self, other):
        if other is self or isinstance(other, int):
            return False
        return NotImplemented

    def __ge__(self, other):
        return other is self

    def __add__(self, other):
        # -inf + k = -inf; adding to an int degree keeps the marker
        if other is self or isinstance(other, int):
            return self
        return NotImplemented

    __radd__ = __add__

    def __reduce__(self):
        return (_MinusInfinity, ())


NEG_INF = _MinusInfinity()


# ---------- int kernels


def _deg(bits: int) -> int:
    """Degree of a nonzero mask; -1 for zero (internal use only)."""
    return bits.bit_length() - 1


def _ctz(bits: int) -> int:
    return (bits & -bits).bit_length() - 1


def _rev(bits: int) -> int:
    if bits == 0:
        return 0
    return int(bin(bits)[:1:-1], 2)


def _mul(a: int, b: int) -> int:
    if a.bit_count() < b.bit_count():
        a, b = b, a
    c = 0
    shift = 0
    while b:
        if b & 1:
            c ^= a << shift
        b >>= 1
        shift += 1
    return c


def _pow_x_plus_1(k: int) -> int:
    # (x+1)^k = prod over set bits t of k of (x^(2^t) + 1)
    r = 1
    t = 0
    while k:
        if k & 1:
            r ^= r << (1 << t)
        k >>= 1
        t += 1
    return r


# ---------- value type


@dataclass(frozen=True, slots=True)
class Gf2Poly:
    """Immutable polynomial over GF(2); ``bits`` is the coefficient mask."""

    bits: int = 0

    def __post_init__(self):
        if not isinstance(self.bits, int) or isinstance(self.bits, bool):
            raise TypeError(f"bits must be an int, got {type(self.bits).__name__}")
        if self.bits < 0:
            raise ValueError("bits must be non-negative")

    @classmethod
    def from_exponents(cls, exponents) -> Gf2Poly:
        bits = 0
        for e in exponents:
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            bits ^= 1 << e
        return cls(bits)

    @property
    def degree(self):
        """Index of the highest set bit, or ``NEG_INF`` for zero."""
        if self.bits == 0:
            return NEG_INF
        return self.bits.bit_length() - 1

    @property
    def is_zero(self) -> bool:
        return self.bits == 0

    @property
    def is_odd(self) -> bool:
        """True iff the constant term is 1, i.e. f(0) = 1."""
        return bool(self.bits & 1)

    @property
    def is_even(self) -> bool:
        return not self.bits & 1

    def exponents(self) -> list[int]:
        """Exponents with nonzero coefficient, highest first."""
        b = self.bits
        return [i for i in range(b.bit_length() - 1, -1, -1) if (b >> i) & 1]

    def __add__(self, other):
        if not isinstance(other, Gf2Poly):
            return NotImplemented
        return Gf2Poly(self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other):
        if not isinstance(other, Gf2Poly):
            return NotImplemented
        return Gf2Poly(_mul(self.bits, other.bits))

    def __bool__(self):
        return self.bits != 0

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Gf2Poly({format_poly(self, 'hex')})"


ZERO = Gf2Poly(0)
ONE = Gf2Poly(1)
X = Gf2Poly(2)


# ---------- operations


def add(a: Gf2Poly, b: Gf2Poly) -> Gf2Poly:
    return Gf2Poly(a.bits ^ b.bits)


def mul(a: Gf2Poly, b: Gf2Poly) -> Gf2Poly:
    """Carry-less product of ``a`` and ``b``."""
    return Gf2Poly(_mul(a.bits, b.bits))


def mul_x_plus_1(f: Gf2Poly) -> Gf2Poly:
    return Gf2Poly(f.bits ^ (f.bits << 1))


def div_x(f: Gf2Poly) -> Gf2Poly:
    """Exact division by ``x``; ``f`` must be nonzero and even."""
    if f.bits == 0:
        raise ZeroInput("div_x of the zero polynomial")
    if f.bits & 1:
        raise OddInput(f"div_x requires an even polynomial, got {format_poly(f)}")
    return Gf2Poly(f.bits >> 1)


def strip_x(f: Gf2Poly) -> tuple[Gf2Poly, int]:
    """Split ``f = x**r * g`` with ``g`` odd and return ``(g, r)``.

    The zero polynomial maps to ``(0, 0)``.
    """
    if f.bits == 0:
        return ZERO, 0
    r = _ctz(f.bits)
    return Gf2Poly(f.bits >> r), r


def reverse(f: Gf2Poly) -> Gf2Poly:
    """Coefficient reversal ``x**deg(f) * f(1/x)``; zero maps to zero."""
    return Gf2Poly(_rev(f.bits))


def truncate(f: Gf2Poly, n: int) -> Gf2Poly:
    """Drop every term of degree above ``n``."""
    if n < 0:
        raise ValueError(f"truncation index must be >= 0, got {n}")
    return Gf2Poly(f.bits & ((1 << (n + 1)) - 1))


def pow_x_plus_1(k: int) -> Gf2Poly:
    if k < 0:
        raise ValueError(f"exponent must be >= 0, got {k}")
    return Gf2Poly(_pow_x_plus_1(k))


def leading_terms_of_pow(n: int, how_many: int) -> list[int]:
    """Largest ``how_many`` exponents of ``(x+1)**n``, highest first.

    By Lucas' theorem the exponents present are exactly the binary submasks
    of ``n``, so they are walked in decreasing order without expanding the
    polynomial.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if how_many < 0:
        raise ValueError("how_many must be >= 0")
    available = 1 << n.bit_count()
    if how_many > available:
        raise InsufficientTerms(
            f"(x+1)^{n} has {available} terms, {how_many} requested"
        )
    out = []
    s = n
    for _ in range(how_many):
        out.append(s)
        s = (s - 1) & n
    return out


# ---------- text forms


def format_poly(f: Gf2Poly, style: str = "symbolic") -> str:
    """Render ``f`` as ``"x^5+x^2+1"`` (symbolic) or ``"0x25"`` (hex)."""
    if style == "hex":
        return hex(f.bits)
    if style != "symbolic":
        raise ValueError(f"unknown style {style!r}")
    if f.bits == 0:
        return "0"
    terms = []
    for e in f.exponents():
        terms.append("1" if e == 0 else "x" if e == 1 else f"x^{e}")
    return "+".join(terms)


_HEX_DIGITS = frozenset("0123456789abcdefABCDEF")


def parse(text: str) -> Gf2Poly:
    """Parse symbolic (``"x^5+x^2+1"``) or hex-bits (``"0x25"``) text.

    Whitespace is ignored.  The literal ``"0"`` denotes the zero polynomial.
    Errors carry the byte offset of the offending character.
    """
    chars = [(i, c) for i, c in enumerate(text) if not c.isspace()]

    def offset(k):
        if k >= len(chars):
            return len(text.encode())
        return len(text[: chars[k][0]].encode())

    if not chars:
        raise PolySyntaxError("empty polynomial", offset(0))
    compact = "".join(c for _, c in chars)

    if compact[:2] in ("0x", "0X"):
        if len(compact) == 2:
            raise PolySyntaxError("missing hex digits", offset(2))
        for k in range(2, len(compact)):
            if compact[k] not in _HEX_DIGITS:
                raise PolySyntaxError(f"invalid hex digit {compact[k]!r}", offset(k))
        return Gf2Poly(int(compact[2:], 16))

    if compact == "0":
        return ZERO

    bits = 0
    seen = set()
    k = 0
    n = len(compact)
    while True:
        start = k
        if k < n and compact[k] == "1":
            exp = 0
            k += 1
        elif k < n and compact[k] == "x":
            k += 1
            if k < n and compact[k] == "^":
                k += 1
                digits_start = k
                while k < n and compact[k].isdigit() and compact[k].isascii():
                    k += 1
                if k == digits_start:
                    raise PolySyntaxError("expected exponent after '^'", offset(k))
                exp = int(compact[digits_start:k])
            else:
                exp = 1
        else:
            what = repr(compact[k]) if k < n else "end of input"
            raise PolySyntaxError(f"expected term, found {what}", offset(k))
        if exp in seen:
            raise DuplicateTerm(f"duplicate term x^{exp}", offset(start))
        seen.add(exp)
        bits |= 1 << exp
        if k == n:
            break
        if compact[k] != "+":
            raise PolySyntaxError(f"expected '+', found {compact[k]!r}", offset(k))
        k += 1
    return Gf2Poly(bits)
