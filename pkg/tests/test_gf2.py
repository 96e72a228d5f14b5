import pickle

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from polycollatz.errors import (
    DuplicateTerm,
    InsufficientTerms,
    OddInput,
    PolySyntaxError,
    ZeroInput,
)
from polycollatz.gf2 import (
    NEG_INF,
    ONE,
    ZERO,
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


def P(text):
    return parse(text)


masks = st.integers(min_value=0, max_value=(1 << 257) - 1)
nonzero = st.integers(min_value=1, max_value=(1 << 257) - 1)


# ---------- value type


def test_degree_of_zero_is_marker():
    assert ZERO.degree is NEG_INF
    assert NEG_INF < 0 and NEG_INF < -10**9
    assert not NEG_INF > 5
    assert NEG_INF != -1
    assert NEG_INF + 3 is NEG_INF
    with pytest.raises(TypeError):
        range(NEG_INF)


def test_degree_and_parity():
    f = P("x^5+x^2+1")
    assert f.degree == 5
    assert f.is_odd and not f.is_even
    assert P("x^3+x").is_even
    assert f.exponents() == [5, 2, 0]


def test_immutable_and_hashable():
    f = P("x+1")
    with pytest.raises(AttributeError):
        f.bits = 4
    assert {f, Gf2Poly(3)} == {f}
    assert pickle.loads(pickle.dumps(f)) == f
    assert pickle.loads(pickle.dumps(NEG_INF)) is NEG_INF


def test_rejects_negative_bits():
    with pytest.raises(ValueError):
        Gf2Poly(-1)


# ---------- documented examples


@pytest.mark.parametrize(
    "a, b, expected",
    [
        ("x+1", "x+1", "0"),
        ("x^2+1", "1", "x^2"),
        ("x^3+x", "x^2+x", "x^3+x^2"),
    ],
)
def test_add(a, b, expected):
    assert add(P(a), P(b)) == P(expected)


@pytest.mark.parametrize(
    "a, b, expected",
    [
        ("x+1", "x+1", "x^2+1"),
        ("x^3+x+1", "0", "0"),
        ("x^2+x+1", "x+1", "x^3+1"),
    ],
)
def test_mul(a, b, expected):
    assert mul(P(a), P(b)) == P(expected)


@pytest.mark.parametrize(
    "f, expected", [("1", "x+1"), ("x+1", "x^2+1"), ("x^2+x+1", "x^3+1")]
)
def test_mul_x_plus_1(f, expected):
    assert mul_x_plus_1(P(f)) == P(expected)


def test_div_x():
    assert div_x(P("x")) == ONE
    assert div_x(P("x^3+x")) == P("x^2+1")
    with pytest.raises(OddInput):
        div_x(P("x+1"))
    with pytest.raises(ZeroInput):
        div_x(ZERO)


@pytest.mark.parametrize(
    "f, g, r", [("x^3+x^2", "x+1", 2), ("1", "1", 0), ("0", "0", 0)]
)
def test_strip_x(f, g, r):
    assert strip_x(P(f)) == (P(g), r)


@pytest.mark.parametrize(
    "f, expected", [("x^3+x", "x^2+1"), ("x^2+x+1", "x^2+x+1"), ("0", "0")]
)
def test_reverse(f, expected):
    assert reverse(P(f)) == P(expected)


def test_truncate():
    assert truncate(P("x^3+x+1"), 1) == P("x+1")
    f = P("x^9+x^4+1")
    assert truncate(f, f.degree) == f
    assert truncate(P("x^4+x^2"), 3) == P("x^2")
    with pytest.raises(ValueError):
        truncate(f, -1)


def test_pow_x_plus_1_examples():
    assert pow_x_plus_1(0) == ONE
    assert pow_x_plus_1(4) == P("x^4+1")
    assert pow_x_plus_1(3) == P("x^3+x^2+x+1")


@pytest.mark.parametrize(
    "n, m, expected", [(6, 3, [6, 4, 2]), (8, 2, [8, 0]), (1024, 2, [1024, 0]), (5, 3, [5, 4, 1])]
)
def test_leading_terms_of_pow(n, m, expected):
    assert leading_terms_of_pow(n, m) == expected


def test_leading_terms_insufficient():
    with pytest.raises(InsufficientTerms):
        leading_terms_of_pow(8, 3)


# ---------- text forms


def test_parse_examples():
    assert P("x^2+1").bits == 0b101
    assert P("0x25") == P("x^5+x^2+1")
    assert P("1 + x ^ 3") == P("x^3+1")
    assert P("x^1+1") == P("x+1")
    with pytest.raises(DuplicateTerm):
        P("x^2+x^2")
    with pytest.raises(DuplicateTerm):
        P("x+x^1")


@pytest.mark.parametrize(
    "text, offset",
    [("x^2+", 4), ("x^", 2), ("x^2*x", 3), ("y", 0), ("0xzz", 2), ("", 0), ("x^2 + 2", 6)],
)
def test_parse_errors_carry_offset(text, offset):
    with pytest.raises(PolySyntaxError) as info:
        P(text)
    assert info.value.offset == offset


def test_duplicate_offset_points_at_second_term():
    with pytest.raises(DuplicateTerm) as info:
        P("x^2+1+x^2")
    assert info.value.offset == 6


def test_format_styles():
    f = P("x^5+x^2+1")
    assert format_poly(f) == "x^5+x^2+1"
    assert format_poly(f, "hex") == "0x25"
    assert format_poly(ZERO) == "0"
    assert format_poly(ZERO, "hex") == "0x0"
    with pytest.raises(ValueError):
        format_poly(f, "latex")


@given(masks)
def test_roundtrip(m):
    f = Gf2Poly(m)
    assert parse(format_poly(f)) == f
    assert parse(format_poly(f, "hex")) == f


# ---------- properties against the list oracle


@given(masks, masks)
def test_add_matches_oracle(a, b):
    assert add(Gf2Poly(a), Gf2Poly(b)).bits == oracles.to_mask(
        oracles.add(oracles.from_mask(a), oracles.from_mask(b))
    )


@settings(max_examples=200)
@given(st.integers(0, (1 << 64) - 1), st.integers(0, (1 << 64) - 1))
def test_mul_matches_schoolbook(a, b):
    expect = oracles.to_mask(oracles.mul(oracles.from_mask(a), oracles.from_mask(b)))
    assert mul(Gf2Poly(a), Gf2Poly(b)).bits == expect


@given(nonzero, nonzero)
def test_mul_degree_adds(a, b):
    f, g = Gf2Poly(a), Gf2Poly(b)
    assert mul(f, g).degree == f.degree + g.degree


@given(masks, masks, masks)
def test_ring_axioms(a, b, c):
    f, g, h = Gf2Poly(a), Gf2Poly(b), Gf2Poly(c)
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f + f == ZERO


@given(masks)
def test_mul_x_plus_1_is_mul(a):
    f = Gf2Poly(a)
    assert mul_x_plus_1(f) == mul(f, P("x+1"))


@given(nonzero)
def test_reverse_matches_oracle(a):
    r = reverse(Gf2Poly(a))
    assert r.bits == oracles.to_mask(oracles.reverse(oracles.from_mask(a)))
    assert r.is_odd


@given(masks, masks)
def test_hat_is_multiplicative(a, b):
    f, g = Gf2Poly(a), Gf2Poly(b)
    assert reverse(f * g) == reverse(f) * reverse(g)


@given(masks, st.integers(0, 300))
def test_hat_ignores_powers_of_x(a, k):
    f = Gf2Poly(a)
    assert reverse(Gf2Poly(a << k)) == reverse(f)


@given(nonzero)
def test_hat_involution(a):
    f = Gf2Poly(a)
    assert reverse(reverse(f)) == strip_x(f)[0]
    if f.is_odd:
        assert reverse(reverse(f)) == f


@given(masks)
def test_strip_x_recomposes(a):
    g, r = strip_x(Gf2Poly(a))
    assert Gf2Poly(g.bits << r).bits == a
    assert a == 0 or g.is_odd


def test_pow_matches_repeated_shift_xor():
    f = ONE
    for k in range((1 << 12) + 1):
        assert pow_x_plus_1(k) == f
        f = mul_x_plus_1(f)


def test_leading_terms_match_expansion():
    for n in range(1, (1 << 12) + 1):
        p = pow_x_plus_1(n)
        exps = p.exponents()
        m = min(3, len(exps))
        assert leading_terms_of_pow(n, m) == exps[:m]


def test_leading_terms_match_oracle_small():
    for n in range(1, 65):
        c = oracles.pow_x_plus_1(n)
        exps = [i for i in range(len(c) - 1, -1, -1) if c[i]]
        assert leading_terms_of_pow(n, len(exps)) == exps
