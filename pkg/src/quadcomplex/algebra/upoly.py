"""Dense univariate polynomials over Scalar.

A polynomial is a plain list of Scalar coefficients, little-endian
(index = power).  The zero polynomial is the empty list.  These are the
workhorse routines behind binary-form gcds, Smith normal forms and
eigenvalue extraction; they stay list-based for speed.
"""

from __future__ import annotations

from .scalar import ONE, ZERO, Scalar


def trim(p):
    while p and not p[-1]:
        p.pop()
    return p


def deg(p) -> int:
    return len(p) - 1


def is_zero(p) -> bool:
    return not p


def const(c: Scalar):
    return [c] if c else []


def add(p, q):
    n = max(len(p), len(q))
    out = []
    for k in range(n):
        a = p[k] if k < len(p) else ZERO
        b = q[k] if k < len(q) else ZERO
        out.append(a + b)
    return trim(out)


def neg(p):
    return [-c for c in p]


def sub(p, q):
    return add(p, neg(q))


def scale(p, c: Scalar):
    if not c:
        return []
    return [a * c for a in p]


def mul(p, q):
    if not p or not q:
        return []
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            if b:
                out[i + j] = out[i + j] + a * b
    return trim(out)


def mul_xk(p, k: int):
    if not p:
        return []
    return [ZERO] * k + list(p)


def divmod_(p, q):
    """Field division with remainder; q must be nonzero."""
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    dq = deg(q)
    lead_inv = ONE / q[-1]
    quo = [ZERO] * max(0, len(r) - dq)
    while len(r) - 1 >= dq and r:
        k = len(r) - 1 - dq
        c = r[-1] * lead_inv
        quo[k] = c
        for j in range(dq + 1):
            r[k + j] = r[k + j] - c * q[j]
        trim(r)
    return trim(quo), r


def div_exact(p, q):
    quo, rem = divmod_(p, q)
    if rem:
        raise ArithmeticError("inexact polynomial division")
    return quo


def monic(p):
    if not p:
        return []
    if p[-1].is_one():
        return list(p)
    inv = ONE / p[-1]
    return [c * inv for c in p]


def gcd(p, q):
    """Monic gcd; gcd(0, q) is monic q."""
    a, b = list(p), list(q)
    while b:
        _, r = divmod_(a, b)
        a, b = b, r
    return monic(a)


def derivative(p):
    return trim([p[k] * Scalar(k) for k in range(1, len(p))])


def squarefree_part(p):
    """Product of the distinct irreducible factors, monic (char 0)."""
    if not p:
        raise ZeroDivisionError("squarefree part of zero polynomial")
    if deg(p) == 0:
        return [ONE]
    g = gcd(p, derivative(p))
    return monic(div_exact(p, g))


def squarefree_decomposition(p):
    """Yun's algorithm: [(s_k, k)] with p = lc * prod s_k^k, s_k squarefree
    and pairwise coprime (char 0)."""
    if not p:
        raise ZeroDivisionError("decomposition of zero polynomial")
    if deg(p) == 0:
        return []
    f = monic(p)
    df = derivative(f)
    a = gcd(f, df)
    c = div_exact(f, a)
    d = sub(div_exact(df, a), derivative(c))
    out = []
    k = 1
    while deg(c) > 0:
        s = gcd(c, d)
        if deg(s) > 0:
            out.append((s, k))
        c = div_exact(c, s)
        d = sub(div_exact(d, s), derivative(c))
        k += 1
    return out


def valuation(p, b) -> int:
    """Largest k with b**k dividing p; b nonconstant, p nonzero."""
    if deg(b) < 1:
        raise ValueError("valuation base must be nonconstant")
    if not p:
        raise ValueError("valuation of zero polynomial is infinite")
    k = 0
    cur = list(p)
    while True:
        quo, rem = divmod_(cur, b)
        if rem:
            return k
        k += 1
        cur = quo


def evaluate(p, x: Scalar) -> Scalar:
    acc = ZERO
    for c in reversed(p):
        acc = acc * x + c
    return acc


def pow_(p, n: int):
    result = [ONE]
    base = list(p)
    while n:
        if n & 1:
            result = mul(result, base)
        base = mul(base, base)
        n >>= 1
    return result


def from_roots(roots):
    p = [ONE]
    for r in roots:
        p = mul(p, [-r, ONE])
    return p


def compose_linear(p, a: Scalar, b: Scalar):
    """p(a*x + b) by Horner."""
    acc = []
    lin = [b, a]
    for c in reversed(p):
        acc = add(mul(acc, lin), const(c))
    return acc
