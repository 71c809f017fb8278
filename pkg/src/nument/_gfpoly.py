"""Minimal polynomial arithmetic over GF(p) and Z.

Polynomials are lists of integer coefficients, lowest degree first, with no
trailing zeros; ``[]`` is the zero polynomial.
"""


def trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def reduce(a, p):
    return trim(c % p for c in a)


def mul(a, b, p=None):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return reduce(out, p) if p else trim(out)


def sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return trim(x - y for x, y in zip(a, b))


def divmod_p(a, b, p):
    """Quotient and remainder of a by b over GF(p); b nonzero."""
    a = reduce(a, p)
    b = reduce(b, p)
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        shift = len(a) - len(b)
        c = a[-1] * inv % p
        q[shift] = c
        for i, y in enumerate(b):
            a[i + shift] = (a[i + shift] - c * y) % p
        a = trim(a)
    return trim(q), a


def monic(a, p):
    if not a:
        return []
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def gcd_p(a, b, p):
    a, b = reduce(a, p), reduce(b, p)
    while b:
        a, b = b, divmod_p(a, b, p)[1]
    return monic(a, p)


def evaluate(a, x, p):
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


def power(a, k, p=None):
    out = [1]
    for _ in range(k):
        out = mul(out, a, p)
    return out
