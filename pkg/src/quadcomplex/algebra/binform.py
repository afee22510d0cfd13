"""Homogeneous binary forms in (lam, mu) and the factor-refinement toolkit.

A BinaryForm of degree d is stored densely: coeffs[k] multiplies
lam^k * mu^(d-k).  The public gcd / squarefree / coprime-basis /
valuation operations also accept 1- or 2-variable MPoly inputs, which
is the interface the rest of the library uses.

Root conventions.  A projective root (lb : mb) of a form never needs
numeric extraction; multiplicity logic runs through valuations against
a squarefree coprime basis.  Where a finite parameter is wanted we use
the "eigenvalue" coordinate t, with the degree-1 form t*lam + mu
vanishing exactly at the root (1 : -t).
"""

from __future__ import annotations

import math

from . import upoly
from .mpoly import MPoly
from .scalar import ONE, ZERO, Scalar, scalar


class BinaryForm:
    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs):
        coeffs = tuple(coeffs)
        if len(coeffs) != degree + 1:
            raise ValueError("need degree+1 coefficients")
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *_):
        raise AttributeError("BinaryForm is immutable")

    @classmethod
    def zero(cls, degree: int) -> "BinaryForm":
        return cls(degree, (ZERO,) * (degree + 1))

    @classmethod
    def constant(cls, c) -> "BinaryForm":
        return cls(0, (scalar(c),))

    def is_zero(self) -> bool:
        return all(not c for c in self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_constant(self) -> bool:
        return self.degree == 0 or self.is_zero()

    # lam-power profile -------------------------------------------------

    def dehomogenize(self):
        """Coefficient list p with self = mu^(degree - deg p) * hom(p)."""
        return upoly.trim(list(self.coeffs))

    @classmethod
    def homogenize(cls, p, degree: int) -> "BinaryForm":
        if upoly.deg(p) > degree:
            raise ValueError("degree too small to homogenize")
        return cls(degree, tuple(p) + (ZERO,) * (degree - upoly.deg(p)))

    def mu_valuation(self) -> int:
        p = self.dehomogenize()
        if not p:
            raise ValueError("zero form")
        return self.degree - upoly.deg(p)

    # arithmetic ---------------------------------------------------------

    def __mul__(self, other: "BinaryForm") -> "BinaryForm":
        d = self.degree + other.degree
        out = [ZERO] * (d + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return BinaryForm(d, out)

    def scaled(self, c) -> "BinaryForm":
        c = scalar(c)
        return BinaryForm(self.degree, tuple(a * c for a in self.coeffs))

    def __pow__(self, n: int) -> "BinaryForm":
        result = BinaryForm.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return self.degree == other.degree and self.coeffs == other.coeffs

    __hash__ = None

    def evaluate(self, lam: Scalar, mu: Scalar) -> Scalar:
        acc = ZERO
        for k, c in enumerate(self.coeffs):
            if c:
                acc = acc + c * lam ** k * mu ** (self.degree - k)
        return acc

    # normalization --------------------------------------------------------

    def leading_coeff(self) -> Scalar:
        """Coefficient of the grevlex-leading term (highest lam power)."""
        for c in reversed(self.coeffs):
            if c:
                return c
        raise ValueError("zero form has no leading coefficient")

    def monic(self) -> "BinaryForm":
        lc = self.leading_coeff()
        if lc.is_one():
            return self
        return self.scaled(ONE / lc)

    def proportional(self, other: "BinaryForm") -> bool:
        if self.degree != other.degree:
            return False
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        return self.monic() == other.monic()

    # substitution mu -> mu - c*lam (used to undo the pencil shear) --------

    def shear_mu(self, c: Scalar) -> "BinaryForm":
        d = self.degree
        out = [ZERO] * (d + 1)
        for k, a in enumerate(self.coeffs):
            if not a:
                continue
            m = d - k
            # a * lam^k * (mu - c*lam)^m
            for j in range(m + 1):
                coef = a * Scalar(math.comb(m, j)) * (-c) ** j
                out[k + j] = out[k + j] + coef
        return BinaryForm(d, out)

    # conversions ------------------------------------------------------------

    def as_mpoly(self) -> MPoly:
        t = {}
        for k, c in enumerate(self.coeffs):
            if c:
                t[(k, self.degree - k)] = c
        return MPoly(2, t)

    @classmethod
    def from_mpoly(cls, p: MPoly) -> "BinaryForm":
        if p.nvars != 2:
            raise ValueError("need a 2-variable polynomial")
        if p.is_zero():
            return cls.zero(0)
        if not p.is_homogeneous():
            raise ValueError("binary form must be homogeneous")
        d = p.degree()
        out = [ZERO] * (d + 1)
        for (k, _), c in p.terms.items():
            out[k] = c
        return cls(d, out)

    @classmethod
    def from_eigen_roots(cls, pairs) -> "BinaryForm":
        """Product of (t*lam + mu)^m over (t, m) pairs."""
        f = cls.constant(1)
        for t, m in pairs:
            f = f * cls(1, (scalar(t), ONE)) ** m
        return f

    def eigen_poly(self):
        """Univariate q with q(t) = self(1, -t); roots are eigenvalues."""
        d = self.degree
        q = [ZERO] * (d + 1)
        for k, c in enumerate(self.coeffs):
            j = d - k
            q[j] = c if j % 2 == 0 else -c
        return upoly.trim(q)

    @classmethod
    def from_eigen_poly(cls, q, degree: int) -> "BinaryForm":
        """Inverse of eigen_poly for forms with no root at (0:1)."""
        out = [ZERO] * (degree + 1)
        for j, c in enumerate(q):
            out[degree - j] = c if j % 2 == 0 else -c
        return cls(degree, out)

    def __repr__(self):
        return "BinaryForm(%r)" % (self.as_mpoly(),)


# -------------------------------------------------------------------------
# gcd, squarefree part, valuation on dense forms


def bf_gcd(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """Monic gcd of two binary forms, handling lam- and mu-divisibility."""
    if f.is_zero():
        return g.monic() if g else BinaryForm.constant(1)
    if g.is_zero():
        return f.monic()
    pf, pg = f.dehomogenize(), g.dehomogenize()
    mv = min(f.degree - upoly.deg(pf), g.degree - upoly.deg(pg))
    h = upoly.gcd(pf, pg)
    return BinaryForm.homogenize(h, upoly.deg(h) + mv).monic()


def bf_squarefree(f: BinaryForm) -> BinaryForm:
    if f.is_zero():
        raise ValueError("squarefree part of the zero form")
    p = f.dehomogenize()
    mv = f.degree - upoly.deg(p)
    s = upoly.squarefree_part(p)
    return BinaryForm.homogenize(s, upoly.deg(s) + min(mv, 1)).monic()


def bf_divmod(f: BinaryForm, b: BinaryForm):
    """Exact quotient of binary forms if it exists, else None."""
    pf, pb = f.dehomogenize(), b.dehomogenize()
    mv_f = f.degree - upoly.deg(pf)
    mv_b = b.degree - upoly.deg(pb)
    if mv_b > mv_f:
        return None
    quo, rem = upoly.divmod_(pf, pb)
    if rem:
        return None
    return BinaryForm.homogenize(quo, upoly.deg(quo) + (mv_f - mv_b))


def bf_valuation(f: BinaryForm, b: BinaryForm) -> int:
    """Largest k with b^k | f; +inf for f = 0."""
    if b.is_constant():
        raise ValueError("valuation base must be nonconstant")
    if f.is_zero():
        return math.inf
    k = 0
    cur = f
    while True:
        nxt = bf_divmod(cur, b)
        if nxt is None:
            return k
        cur = nxt
        k += 1


def bf_squarefree_components(f: BinaryForm) -> list:
    """Squarefree pairwise-coprime monic forms whose powers rebuild f."""
    p = f.dehomogenize()
    mv = f.degree - upoly.deg(p)
    parts = []
    if mv:
        parts.append(BinaryForm(1, (ONE, ZERO)))  # the form mu
    for s, _k in upoly.squarefree_decomposition(p):
        parts.append(BinaryForm.homogenize(s, upoly.deg(s)).monic())
    return parts


def bf_coprime_basis(forms) -> list:
    """Squarefree pairwise-coprime monic forms such that every input is a
    product of basis-element powers times a unit, each power read off by
    bf_valuation; deterministic order."""
    if not forms:
        raise ValueError("empty input to coprime basis")
    basis = []
    for f in forms:
        if f.is_zero():
            raise ValueError("zero form in coprime basis input")
        for g in bf_squarefree_components(f):
            if g.degree > 0:
                basis.append(g)
    changed = True
    while changed:
        changed = False
        for i in range(len(basis)):
            for j in range(i + 1, len(basis)):
                g = bf_gcd(basis[i], basis[j])
                if g.degree == 0:
                    continue
                parts = []
                for h in (bf_divmod(basis[i], g), bf_divmod(basis[j], g), g):
                    if h is not None and h.degree > 0:
                        parts.append(h.monic())
                basis[i:i + 1] = []
                basis[j - 1:j] = []
                basis.extend(parts)
                changed = True
                break
            if changed:
                break
    # dedupe and sort canonically
    uniq = []
    for f in basis:
        if not any(f == g for g in uniq):
            uniq.append(f)
    uniq.sort(key=_bf_sort_key)
    return uniq


def _bf_sort_key(f: BinaryForm):
    return (f.degree, tuple(c.sort_key() for c in reversed(f.coeffs)))


# -------------------------------------------------------------------------
# MPoly-facing wrappers: the module-level API for 1- and 2-variable input


def _to_internal(p):
    if isinstance(p, BinaryForm):
        return p, "binform"
    if not isinstance(p, MPoly):
        raise TypeError("expected MPoly or BinaryForm")
    if p.nvars == 1:
        coeffs = [ZERO] * (p.degree() + 1) if p.terms else []
        for (k,), c in p.terms.items():
            coeffs[k] = c
        return upoly.trim(coeffs), "upoly"
    if p.nvars == 2:
        return BinaryForm.from_mpoly(p), "binform"
    raise ValueError("gcd machinery supports at most 2 variables")


def _upoly_to_mpoly(p):
    return MPoly(1, {(k,): c for k, c in enumerate(p) if c})


def poly_gcd(a, b):
    """Monic gcd of univariate or binary-form polynomials (MPoly in or out)."""
    pa, kind_a = _to_internal(a)
    pb, kind_b = _to_internal(b)
    if kind_a != kind_b:
        raise ValueError("mixed variable counts in gcd")
    if kind_a == "upoly":
        return _upoly_to_mpoly(upoly.gcd(pa, pb))
    g = bf_gcd(pa, pb)
    return g.as_mpoly() if isinstance(a, MPoly) else g


def squarefree_part(f):
    p, kind = _to_internal(f)
    if kind == "upoly":
        return _upoly_to_mpoly(upoly.squarefree_part(p))
    s = bf_squarefree(p)
    return s.as_mpoly() if isinstance(f, MPoly) else s


def coprime_basis(forms):
    internal = []
    as_mpoly = False
    for f in forms:
        p, kind = _to_internal(f)
        if kind != "binform":
            p = BinaryForm.homogenize(p, upoly.deg(p))
        internal.append(p)
        as_mpoly = as_mpoly or isinstance(f, MPoly)
    basis = bf_coprime_basis(internal)
    if as_mpoly:
        return [b.as_mpoly() for b in basis]
    return basis


def valuation(f, b):
    pf, kind_f = _to_internal(f)
    pb, kind_b = _to_internal(b)
    if kind_f == "upoly":
        pf = BinaryForm.homogenize(pf, upoly.deg(pf)) if pf else BinaryForm.zero(0)
    if kind_b == "upoly":
        pb = BinaryForm.homogenize(pb, upoly.deg(pb))
    return bf_valuation(pf, pb)
