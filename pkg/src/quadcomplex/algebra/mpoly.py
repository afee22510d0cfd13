"""Sparse multivariate polynomials over Q(i) with a fixed grevlex order.

Exponent vectors are tuples of ints; coefficients are Scalars; zero
coefficients are never stored.  "Leading" and "monic" always refer to
the graded reverse-lexicographic order, which also fixes the canonical
serialization, so equal polynomials serialize identically.
"""

from __future__ import annotations

from .scalar import ONE, ZERO, Scalar, format_scalar, parse_scalar, scalar


def grevlex_key(exps):
    return (sum(exps), tuple(-e for e in reversed(exps)))


class MPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        t = {}
        if terms:
            for exps, c in terms.items():
                if len(exps) != nvars:
                    raise ValueError("exponent vector length mismatch")
                if c:
                    t[tuple(exps)] = c
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", t)

    def __setattr__(self, *_):
        raise AttributeError("MPoly is immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "MPoly":
        return cls(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c) -> "MPoly":
        c = scalar(c)
        return cls(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def variable(cls, index: int, nvars: int) -> "MPoly":
        e = [0] * nvars
        e[index] = 1
        return cls(nvars, {tuple(e): ONE})

    @classmethod
    def monomial(cls, exps, coeff) -> "MPoly":
        return cls(len(exps), {tuple(exps): scalar(coeff)})

    # -- basic queries ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, var: int) -> int:
        if not self.terms:
            return -1
        return max(e[var] for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def sorted_terms(self):
        """Terms in descending grevlex order."""
        return sorted(self.terms.items(), key=lambda kv: grevlex_key(kv[0]), reverse=True)

    def leading_term(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms, key=grevlex_key)
        return m, self.terms[m]

    def leading_coeff(self) -> Scalar:
        return self.leading_term()[1]

    def monic(self) -> "MPoly":
        if not self.terms:
            return self
        inv = ONE / self.leading_coeff()
        return self.scaled(inv)

    # -- arithmetic -------------------------------------------------------

    def _binop(self, other, sign: int) -> "MPoly":
        if isinstance(other, (int, Scalar)):
            other = MPoly.constant(self.nvars, other)
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")
        t = dict(self.terms)
        for e, c in other.terms.items():
            c = c if sign > 0 else -c
            acc = t.get(e)
            s = c if acc is None else acc + c
            if s:
                t[e] = s
            elif acc is not None:
                del t[e]
        out = MPoly.__new__(MPoly)
        object.__setattr__(out, "nvars", self.nvars)
        object.__setattr__(out, "terms", t)
        return out

    def __add__(self, other):
        return self._binop(other, +1)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binop(other, -1)

    def __rsub__(self, other):
        return (-self)._binop(other, +1)

    def __neg__(self):
        out = MPoly.__new__(MPoly)
        object.__setattr__(out, "nvars", self.nvars)
        object.__setattr__(out, "terms", {e: -c for e, c in self.terms.items()})
        return out

    def scaled(self, c) -> "MPoly":
        c = scalar(c)
        out = MPoly.__new__(MPoly)
        object.__setattr__(out, "nvars", self.nvars)
        object.__setattr__(out, "terms",
                           {e: v * c for e, v in self.terms.items()} if c else {})
        return out

    def __mul__(self, other):
        if isinstance(other, (int, Scalar)):
            return self.scaled(other)
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")
        t: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                acc = t.get(e)
                s = c if acc is None else acc + c
                if s:
                    t[e] = s
                elif acc is not None:
                    del t[e]
        out = MPoly.__new__(MPoly)
        object.__setattr__(out, "nvars", self.nvars)
        object.__setattr__(out, "terms", t)
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MPoly.constant(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    __hash__ = None

    # -- calculus and substitution ----------------------------------------

    def derivative(self, var: int) -> "MPoly":
        t = {}
        for e, c in self.terms.items():
            k = e[var]
            if k:
                e2 = list(e)
                e2[var] = k - 1
                t[tuple(e2)] = c * Scalar(k)
        return MPoly(self.nvars, t)

    def evaluate(self, point) -> Scalar:
        """Value at a full point (list of Scalars)."""
        total = ZERO
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v = v * x ** k
            total = total + v
        return total

    def substitute(self, var: int, value) -> "MPoly":
        """Replace one variable by a Scalar or an MPoly in the same ring."""
        if isinstance(value, (int, Scalar)):
            value = MPoly.constant(self.nvars, value)
        out = MPoly.zero(self.nvars)
        powers = {0: MPoly.constant(self.nvars, 1)}
        for e, c in self.terms.items():
            k = e[var]
            if k not in powers:
                powers[k] = value ** k
            e2 = list(e)
            e2[var] = 0
            out = out + MPoly(self.nvars, {tuple(e2): c}) * powers[k]
        return out

    def compose_linear(self, matrix) -> "MPoly":
        """Substitute x_i -> sum_j matrix[i][j] * x_j."""
        images = []
        for i in range(self.nvars):
            img = MPoly.zero(self.nvars)
            for j in range(self.nvars):
                if matrix[i][j]:
                    img = img + MPoly.variable(j, self.nvars).scaled(matrix[i][j])
            images.append(img)
        out = MPoly.zero(self.nvars)
        for e, c in self.terms.items():
            term = MPoly.constant(self.nvars, c)
            for i, k in enumerate(e):
                if k:
                    term = term * images[i] ** k
            out = out + term
        return out

    def as_univariate(self, var: int):
        """Coefficient list in one variable, entries MPoly with var cleared."""
        if not self.terms:
            return []
        top = self.degree_in(var)
        buckets = [dict() for _ in range(top + 1)]
        for e, c in self.terms.items():
            e2 = list(e)
            k = e2[var]
            e2[var] = 0
            buckets[k][tuple(e2)] = c
        return [MPoly(self.nvars, b) for b in buckets]

    @classmethod
    def from_univariate(cls, coeffs, var: int, nvars: int) -> "MPoly":
        out = cls.zero(nvars)
        for k, p in enumerate(coeffs):
            if p.is_zero():
                continue
            t = {}
            for e, c in p.terms.items():
                e2 = list(e)
                e2[var] += k
                t[tuple(e2)] = c
            out = out + cls(nvars, t)
        return out

    def div_by_monomial(self, exps) -> "MPoly":
        """Exact division by a monomial; raises if any term is not divisible."""
        t = {}
        for e, c in self.terms.items():
            q = tuple(a - b for a, b in zip(e, exps))
            if any(k < 0 for k in q):
                raise ArithmeticError("term not divisible by monomial")
            t[q] = c
        return MPoly(self.nvars, t)

    # -- serialization ------------------------------------------------------

    def serialize(self):
        return [[list(e), format_scalar(c)] for e, c in self.sorted_terms()]

    @classmethod
    def deserialize(cls, nvars: int, data) -> "MPoly":
        t = {}
        for exps, cs in data:
            t[tuple(exps)] = parse_scalar(cs)
        return cls(nvars, t)

    def sort_key(self):
        """Total deterministic order used for stable output listings."""
        return tuple((grevlex_key(e), c.sort_key())
                     for e, c in self.sorted_terms())

    def __repr__(self):
        if not self.terms:
            return "MPoly(0)"
        names = "xyzwvu" if self.nvars <= 6 else None
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                ("%s" % (names[i] if names else "x%d" % i)) +
                ("^%d" % k if k > 1 else "")
                for i, k in enumerate(e) if k)
            cs = format_scalar(c)
            parts.append(cs if not mono else "(%s)*%s" % (cs, mono))
        return "MPoly(%s)" % " + ".join(parts)
