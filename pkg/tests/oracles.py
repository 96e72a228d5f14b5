"""Slow reference implementations on explicit coefficient lists.

Nothing here imports polycollatz, so these serve as independent oracles.
A polynomial over GF(2) is a list ``c`` with ``c[i]`` the coefficient of x^i
and no trailing zeros; ``[]`` is zero.
"""


def trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def from_mask(m):
    return trim([(m >> i) & 1 for i in range(max(m.bit_length(), 1))])


def to_mask(c):
    return sum(1 << i for i, v in enumerate(c) if v)


def add(a, b):
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return trim([(x + y) % 2 for x, y in zip(a, b)])


def mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % 2
    return trim(out)


def reverse(c):
    return trim(list(reversed(c)))


def one_plus_x_times(c):
    return mul(c, [1, 1])


def collatz_T(c):
    if c[0] == 1:
        return add(one_plus_x_times(c), [1])
    return c[1:]


def S3(c):
    g = one_plus_x_times(c)
    return trim(g[:-1])


def orbit_T(c, limit=100_000):
    out = [c]
    while out[-1] != [1]:
        if len(out) > limit:
            raise RuntimeError("oracle orbit did not reach 1")
        out.append(collatz_T(out[-1]))
    return out


def t_min(mask):
    return len(orbit_T(from_mask(mask))) - 1


def s3_time(mask):
    c = from_mask(mask)
    k = 0
    while c != [1]:
        c = S3(c)
        k += 1
        if k > 100_000:
            raise RuntimeError("oracle S3 orbit did not reach 1")
    return k


def pow_x_plus_1(n):
    c = [1]
    for _ in range(n):
        c = one_plus_x_times(c)
    return c


def fp_step(c, p):
    """The F_p map on coefficient lists (trimmed, residues in [0, p))."""
    if c[0] != 0:
        prod = [0] * (len(c) + 1)
        for i, v in enumerate(c):
            prod[i] = (prod[i] + v) % p
            prod[i + 1] = (prod[i + 1] + v) % p
        prod[0] = (prod[0] - c[0]) % p
        return trim(prod)
    return c[1:]


def fp_pre_period(c, p, limit=100_000):
    """(pre_period, cycle_length) by listing the orbit until a repeat."""
    orbit = [tuple(c)]
    while True:
        nxt = tuple(fp_step(list(orbit[-1]), p))
        if nxt in orbit:
            first = orbit.index(nxt)
            return first, len(orbit) - first
        orbit.append(nxt)
        if len(orbit) > limit:
            raise RuntimeError("oracle orbit too long")


def kronecker_mul(a, b):
    """GF(2) product of two bit masks via ordinary integer multiplication.

    Each coefficient is spread into a 12-bit slot, the integers are
    multiplied, and every slot of the product is reduced mod 2.  Slots
    cannot overflow while both factors have fewer than 4096 terms.
    """
    if not a or not b:
        return 0

    def spread(m):
        return int("".join("00000000000" + c for c in bin(m)[2:]), 2)

    digits = bin(spread(a) * spread(b))[2:]
    digits = "0" * (-len(digits) % 12) + digits
    return int("".join(digits[i + 11] for i in range(0, len(digits), 12)), 2)


def truncate(c, n):
    return trim(c[: n + 1])
