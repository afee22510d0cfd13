"""Gaussian integer factorization and exact root extraction over Q(i).

Supports the rational-root search used by the Jordan route and the
isomorphism tests: every root of a Q(i)[t] polynomial that lies in Q(i)
is of the form unit * u / v with u dividing the trailing and v dividing
the leading coefficient, once the polynomial is scaled to Z[i].
"""

from __future__ import annotations

import math
from fractions import Fraction

from . import upoly
from .scalar import ONE, Scalar


def gi_norm(z) -> int:
    a, b = z
    return a * a + b * b


def gi_mul(z, w):
    a, b = z
    c, d = w
    return (a * c - b * d, a * d + b * c)


def gi_divmod(z, w):
    """Rounded division making Z[i] Euclidean."""
    a, b = z
    c, d = w
    n = c * c + d * d
    if n == 0:
        raise ZeroDivisionError
    # nearest integers to the exact quotient components
    qa = (2 * (a * c + b * d) + n) // (2 * n)
    qb = (2 * (b * c - a * d) + n) // (2 * n)
    q = (qa, qb)
    r = (a - (qa * c - qb * d), b - (qa * d + qb * c))
    return q, r


def gi_divides(w, z) -> bool:
    _, r = gi_divmod(z, w)
    return r == (0, 0)


def gi_div_exact(z, w):
    q, r = gi_divmod(z, w)
    if r != (0, 0):
        raise ArithmeticError("inexact Gaussian division")
    return q


def gi_gcd(z, w):
    while w != (0, 0):
        _, r = gi_divmod(z, w)
        z, w = w, r
    return z


def factor_int(n: int) -> dict:
    """Trial-division factorization; adequate for the sizes we meet."""
    n = abs(n)
    out: dict = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _sqrt_minus_one_mod(p: int) -> int:
    # p = 1 mod 4 prime
    for r in range(2, p):
        x = pow(r, (p - 1) // 4, p)
        if (x * x) % p == p - 1:
            return x
    raise ArithmeticError("no sqrt of -1 mod %d" % p)


def gaussian_prime_over(p: int):
    """A Gaussian prime above the rational prime p."""
    if p == 2:
        return (1, 1)
    if p % 4 == 3:
        return (p, 0)
    x = _sqrt_minus_one_mod(p)
    return gi_gcd((p, 0), (x, 1))


def gi_factor(z) -> list:
    """Prime factorization of a nonzero Gaussian integer, up to a unit.

    Returns [(prime, exponent)] with primes given as (a, b) pairs.
    """
    if z == (0, 0):
        raise ZeroDivisionError("factor of zero")
    out = []
    for p in sorted(factor_int(gi_norm(z))):
        for prime in {gaussian_prime_over(p), tuple(reversed(gaussian_prime_over(p)))}:
            if prime == (0, 0):
                continue
            e = 0
            while gi_divides(prime, z):
                z = gi_div_exact(z, prime)
                e += 1
            if e:
                out.append((prime, e))
    return out


def gi_divisors(z) -> list:
    """All divisors of z up to unit multiples."""
    divs = [(1, 0)]
    for prime, e in gi_factor(z):
        new = []
        for d in divs:
            cur = d
            for _ in range(e + 1):
                new.append(cur)
                cur = gi_mul(cur, prime)
        divs = new
    # dedupe up to units
    seen = set()
    out = []
    units = [(1, 0), (0, 1), (-1, 0), (0, -1)]
    for d in divs:
        canon = min(gi_mul(d, u) for u in units)
        if canon not in seen:
            seen.add(canon)
            out.append(d)
    return out


_UNITS = (Scalar(1), Scalar(0, 1), Scalar(-1), Scalar(0, -1))


def _to_gaussian_integer_poly(p):
    """Clear denominators and Z[i]-content; coefficients become (a, b) pairs."""
    lcm = 1
    for c in p:
        lcm = lcm * c.d // math.gcd(lcm, c.d)
    ints = [(c.a * (lcm // c.d), c.b * (lcm // c.d)) for c in p]
    content = (0, 0)
    for z in ints:
        content = gi_gcd(content, z)
    if content not in ((0, 0), (1, 0)):
        ints = [gi_div_exact(z, content) for z in ints]
    return ints


def rational_roots(p) -> list:
    """All roots of a Q(i)[t] polynomial that lie in Q(i), without multiplicity."""
    sqf = upoly.squarefree_part(p)
    roots = []
    # strip the root at 0
    k = 0
    while k < len(sqf) and not sqf[k]:
        k += 1
    if k:
        roots.append(Scalar(0))
        sqf = sqf[k:]
    if upoly.deg(sqf) < 1:
        return roots
    if upoly.deg(sqf) == 1:
        roots.append(-sqf[0] / sqf[1])
        return roots
    ints = _to_gaussian_integer_poly(sqf)
    c0, cn = ints[0], ints[-1]
    seen = set()
    for u in gi_divisors(c0):
        for v in gi_divisors(cn):
            base = Scalar(u[0], u[1]) / Scalar(v[0], v[1])
            for unit in _UNITS:
                cand = base * unit
                if cand in seen:
                    continue
                seen.add(cand)
                if not upoly.evaluate(sqf, cand):
                    roots.append(cand)
    roots.sort(key=Scalar.sort_key)
    return roots


def roots_with_multiplicity(p):
    """(roots, complete): roots as [(Scalar, mult)], complete when they
    exhaust the degree, i.e. the polynomial splits over Q(i)."""
    if upoly.is_zero(p):
        raise ZeroDivisionError("roots of the zero polynomial")
    found = []
    total = 0
    rem = list(p)
    for r in rational_roots(p):
        m = 0
        lin = [-r, ONE]
        while True:
            quo, rest = upoly.divmod_(rem, lin)
            if rest:
                break
            rem = quo
            m += 1
        found.append((r, m))
        total += m
    return found, total == upoly.deg(p)
