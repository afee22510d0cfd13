"""Pencils of quadrics in P^5 and their Segre symbols.

The Segre symbol is computed by three genuinely independent algorithms
that are cross-checked in the test suite:

  * segre_symbol          minor gcd route: D_k = gcd of all k x k minors
                          of lam*F + mu*G, characteristic numbers from
                          valuation drops (fully homogeneous, no shear);
  * segre_symbol_snf      Smith normal form of t*F + G over Q(i)[t],
                          characteristic numbers = valuations of the
                          invariant factors;
  * segre_symbol_jordan   Jordan block sizes of (G^-1 F)^t via rank
                          profiles, for pencils whose eigenvalues lie
                          in Q(i).

Root bookkeeping is exact: every root is carried by a squarefree
coprime-basis element of the discriminant, never extracted numerically
unless it lies in Q(i).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebra import upoly
from .algebra.binform import BinaryForm, bf_coprime_basis, bf_valuation
from .algebra.gaussint import roots_with_multiplicity
from .algebra.matrix import Matrix, det, inverse, rank
from .algebra.scalar import ONE, ZERO, Scalar, scalar
from .errors import DegeneratePencilError, InputError, IrrationalEigenvaluesError

N = 6


class Pencil:
    """A quadratic line complex X = F cap G, with G the fixed smooth quadric."""

    __slots__ = ("F", "G")

    def __init__(self, F: Matrix, G: Matrix, check: bool = True):
        if check:
            if F.nrows != N or F.ncols != N or G.nrows != N or G.ncols != N:
                raise InputError("pencil matrices must be 6x6")
            if not F.is_symmetric() or not G.is_symmetric():
                raise InputError("pencil matrices must be symmetric")
            if not det(G):
                raise InputError("G must be a smooth quadric (det G != 0)")
            if _proportional(F, G):
                raise DegeneratePencilError(
                    "degenerate pencil: F is a scalar multiple of G")
        object.__setattr__(self, "F", F)
        object.__setattr__(self, "G", G)

    def __setattr__(self, *_):
        raise AttributeError("Pencil is immutable")

    def member(self, lam: Scalar, mu: Scalar) -> Matrix:
        return self.F.scaled(lam) + self.G.scaled(mu)

    def transform(self, A: Matrix) -> "Pencil":
        """Congruence F -> A^t F A, G -> A^t G A."""
        At = A.transpose()
        return Pencil(At * self.F * A, At * self.G * A)

    def __eq__(self, other):
        if not isinstance(other, Pencil):
            return NotImplemented
        return self.F == other.F and self.G == other.G

    __hash__ = None

    def __repr__(self):
        return "Pencil(F=%r, G=%r)" % (self.F, self.G)


def _proportional(A: Matrix, B: Matrix) -> bool:
    ratio = None
    for i in range(A.nrows):
        for j in range(A.ncols):
            a, b = A[i, j], B[i, j]
            if not a and not b:
                continue
            if not b:
                return False
            r = a / b
            if ratio is None:
                ratio = r
            elif r != ratio:
                return False
    return True


# ---------------------------------------------------------------------
# brackets and symbols


class Bracket(tuple):
    """Characteristic numbers e_0 >= e_1 >= ... >= e_d of one root."""

    def __new__(cls, chars):
        chars = tuple(int(e) for e in chars)
        if not chars:
            raise InputError("empty bracket")
        if any(e < 1 for e in chars):
            raise InputError("characteristic numbers must be positive")
        if any(chars[i] < chars[i + 1] for i in range(len(chars) - 1)):
            raise InputError("characteristic numbers must be nonincreasing")
        if len(chars) > N:
            raise InputError("bracket too long")
        return super().__new__(cls, chars)

    @property
    def weight(self) -> int:
        return sum(self)

    def __str__(self):
        if len(self) == 1:
            return str(self[0])
        return "(%s)" % "".join(str(e) for e in self)


def _bracket_sort_key(b: Bracket):
    return (-len(b), tuple(-e for e in b))


class SegreSymbol:
    """Canonically ordered bracket list, plus exact per-root factor data.

    per_root_factors pairs each squarefree coprime-basis element b of the
    discriminant with the bracket shared by all deg(b) roots of b; the
    factors may be absent when a symbol is built from its string form.
    """

    __slots__ = ("brackets", "per_root_factors")

    def __init__(self, brackets, per_root_factors=None):
        brackets = tuple(sorted((Bracket(b) for b in brackets), key=_bracket_sort_key))
        if sum(b.weight for b in brackets) != N:
            raise InputError("bracket weights must sum to 6")
        object.__setattr__(self, "brackets", brackets)
        object.__setattr__(self, "per_root_factors",
                           tuple(per_root_factors) if per_root_factors else None)

    def __setattr__(self, *_):
        raise AttributeError("SegreSymbol is immutable")

    @property
    def r(self) -> int:
        """Number of brackets (= distinct roots of the discriminant)."""
        return len(self.brackets)

    def bracket_count_of_length(self, length: int) -> int:
        return sum(1 for b in self.brackets if len(b) == length)

    def max_bracket_length(self) -> int:
        return max(len(b) for b in self.brackets)

    def __eq__(self, other):
        if not isinstance(other, SegreSymbol):
            return NotImplemented
        return self.brackets == other.brackets

    def __hash__(self):
        return hash(self.brackets)

    def __str__(self):
        return "[%s]" % "".join(str(b) for b in self.brackets)

    __repr__ = __str__

    @classmethod
    def from_string(cls, text: str) -> "SegreSymbol":
        s = text.strip()
        if not (s.startswith("[") and s.endswith("]")):
            raise InputError("symbol must look like [(21)(11)1]")
        body = s[1:-1].replace(",", "").replace(" ", "")
        brackets = []
        i = 0
        while i < len(body):
            ch = body[i]
            if ch == "(":
                j = body.index(")", i)
                brackets.append(Bracket(int(d) for d in body[i + 1:j]))
                i = j + 1
            elif ch.isdigit():
                brackets.append(Bracket((int(ch),)))
                i += 1
            else:
                raise InputError("bad character %r in symbol" % ch)
        return cls(brackets)


# ---------------------------------------------------------------------
# the minor-gcd route
#
# Homogeneous degree-k binary forms are handled as dense lists of k+1
# Scalars indexed by the lam power; this is the hot path.


def _pencil_entries(P: Pencil):
    return [[(P.G[i, j], P.F[i, j]) for j in range(N)] for i in range(N)]


def _minor_poly(entries, rows, cols):
    """det of the (rows x cols) submatrix of lam*F + mu*G as a dense list."""
    cache = {}

    def rec(cols_left):
        if len(cols_left) == 1:
            i = rows[-1]
            g, f = entries[i][cols_left[0]]
            return [g, f]
        got = cache.get(cols_left)
        if got is not None:
            return got
        i = rows[len(rows) - len(cols_left)]
        acc = None
        for k, c in enumerate(cols_left):
            g, f = entries[i][c]
            if not g and not f:
                continue
            sub = rec(cols_left[:k] + cols_left[k + 1:])
            term = [ZERO] * (len(sub) + 1)
            for p, coef in enumerate(sub):
                if coef:
                    if g:
                        term[p] = term[p] + coef * g
                    if f:
                        term[p + 1] = term[p + 1] + coef * f
            if k % 2 == 1:
                term = [-t for t in term]
            if acc is None:
                acc = term
            else:
                acc = [a + b for a, b in zip(acc, term)]
        if acc is None:
            acc = [ZERO] * (len(cols_left) + 1)
        cache[cols_left] = acc
        return acc

    return rec(tuple(cols))


def discriminant(P: Pencil) -> BinaryForm:
    """The binary sextic det(lam*F + mu*G)."""
    coeffs = _minor_poly(_pencil_entries(P), tuple(range(N)), tuple(range(N)))
    delta = BinaryForm(N, coeffs)
    if delta.is_zero():
        raise DegeneratePencilError("degenerate pencil: no Segre symbol")
    return delta


def _row_subset_minors(entries, rows):
    """All k x k column minors for a fixed k-row subset, by one level DP."""
    k = len(rows)
    level = {(): [ONE]}
    for step in range(k):
        i = rows[step]
        row = entries[i]
        nxt = {}
        for cols in itertools.combinations(range(N), step + 1):
            acc = None
            for pos, c in enumerate(cols):
                g, f = row[c]
                if not g and not f:
                    continue
                sub = level[cols[:pos] + cols[pos + 1:]]
                term = [ZERO] * (len(sub) + 1)
                for p, coef in enumerate(sub):
                    if coef:
                        if g:
                            term[p] = term[p] + coef * g
                        if f:
                            term[p + 1] = term[p + 1] + coef * f
                if pos % 2 == 1:
                    term = [-t for t in term]
                if acc is None:
                    acc = term
                else:
                    acc = [a + b for a, b in zip(acc, term)]
            nxt[cols] = acc if acc is not None else [ZERO] * (step + 2)
        level = nxt
    return level


def _minor_gcds(P: Pencil):
    """{k: D_k} for k = 6 down, stopping once D_k is constant."""
    entries = _pencil_entries(P)
    out = {N: BinaryForm(N, _minor_poly(entries, tuple(range(N)), tuple(range(N))))}
    if out[N].is_zero():
        raise DegeneratePencilError("degenerate pencil: no Segre symbol")
    from .algebra.binform import bf_gcd
    for k in range(N - 1, 0, -1):
        g = None
        done = False
        for rows in itertools.combinations(range(N), k):
            for coeffs in _row_subset_minors(entries, rows).values():
                m = BinaryForm(k, coeffs)
                if m.is_zero():
                    continue
                g = m.monic() if g is None else bf_gcd(g, m)
                if g.degree == 0:
                    done = True
                    break
            if done:
                break
        out[k] = g if g is not None else BinaryForm.zero(k)
        if out[k].degree == 0:
            break
    return out


def segre_symbol(P: Pencil) -> SegreSymbol:
    """Segre symbol via minimal root multiplicities in the minor gcds."""
    dks = _minor_gcds(P)
    forms = [f for f in dks.values() if f.degree > 0]
    basis = bf_coprime_basis(forms)
    brackets = []
    factors = []
    for b in basis:
        levels = []
        for i in range(N):
            dk = dks.get(N - i)
            levels.append(bf_valuation(dk, b) if dk is not None and dk.degree > 0 else 0)
        chars = []
        for i in range(N):
            nxt = levels[i + 1] if i + 1 < N else 0
            if levels[i] <= 0:
                break
            chars.append(levels[i] - nxt)
        bracket = Bracket(chars)
        factors.append((b, bracket))
        brackets.extend([bracket] * b.degree)
    return SegreSymbol(brackets, factors)


# ---------------------------------------------------------------------
# shared shear: make det F nonzero so dehomogenized routes see all roots


def shear_constant(P: Pencil) -> int:
    """Smallest natural c with det(F + c*G) != 0."""
    c = 0
    while True:
        if det(P.F + P.G.scaled(Scalar(c))):
            return c
        c += 1
        if c > N:
            raise DegeneratePencilError("degenerate pencil: no Segre symbol")


# ---------------------------------------------------------------------
# Smith normal form route


def _smith_invariant_factors(mat):
    """Monic invariant factors of an n x n matrix of upoly lists over Q(i)[t]."""
    n = len(mat)
    a = [[upoly.trim(list(e)) for e in row] for row in mat]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]

    def swap_cols(i, j):
        for r in range(n):
            a[r][i], a[r][j] = a[r][j], a[r][i]

    invariants = []
    for p in range(n):
        while True:
            # locate a minimal-degree nonzero entry in the remaining block
            best = None
            for i in range(p, n):
                for j in range(p, n):
                    if a[i][j]:
                        d = upoly.deg(a[i][j])
                        if best is None or d < best[0]:
                            best = (d, i, j)
            if best is None:
                invariants.extend([[] for _ in range(n - p)])
                return invariants
            _, bi, bj = best
            if bi != p:
                swap_rows(p, bi)
            if bj != p:
                swap_cols(p, bj)
            pivot = a[p][p]
            dirty = False
            for i in range(p + 1, n):
                if a[i][p]:
                    q, _ = upoly.divmod_(a[i][p], pivot)
                    if q:
                        for j in range(p, n):
                            a[i][j] = upoly.sub(a[i][j], upoly.mul(q, a[p][j]))
                    if a[i][p]:
                        dirty = True
            for j in range(p + 1, n):
                if a[p][j]:
                    q, _ = upoly.divmod_(a[p][j], pivot)
                    if q:
                        for i in range(p, n):
                            a[i][j] = upoly.sub(a[i][j], upoly.mul(q, a[i][p]))
                    if a[p][j]:
                        dirty = True
            if dirty:
                continue
            # pivot must divide the whole remaining block
            offender = None
            for i in range(p + 1, n):
                for j in range(p + 1, n):
                    if a[i][j]:
                        _, r = upoly.divmod_(a[i][j], pivot)
                        if r:
                            offender = i
                            break
                if offender is not None:
                    break
            if offender is None:
                break
            for j in range(p, n):
                a[p][j] = upoly.add(a[p][j], a[offender][j])
        invariants.append(upoly.monic(a[p][p]))
    return invariants


def segre_symbol_snf(P: Pencil) -> SegreSymbol:
    """Segre symbol via invariant factors of t*(F + c*G) + G."""
    c = shear_constant(P)
    cs = Scalar(c)
    fs = P.F + P.G.scaled(cs)
    mat = [[upoly.trim([P.G[i, j], fs[i, j]]) for j in range(N)]
           for i in range(N)]
    invs = _smith_invariant_factors(mat)
    if any(upoly.is_zero(s) for s in invs):
        raise DegeneratePencilError("degenerate pencil: no Segre symbol")
    hom = [BinaryForm.homogenize(s, upoly.deg(s)) for s in invs]
    nonconst = [h for h in hom if h.degree > 0]
    basis = bf_coprime_basis(nonconst)
    brackets = []
    factors = []
    for b in basis:
        vals = [bf_valuation(h, b) for h in hom]  # ordered s_1 | ... | s_6
        chars = [v for v in reversed(vals) if v > 0]
        bracket = Bracket(chars)
        b_orig = b.shear_mu(cs).monic()
        factors.append((b_orig, bracket))
        brackets.extend([bracket] * b.degree)
    return SegreSymbol(brackets, factors)


# ---------------------------------------------------------------------
# Jordan route


def _charpoly(M: Matrix):
    """det(t*I - M) by the Faddeev-LeVerrier recursion."""
    n = M.nrows
    coeffs = [ONE]  # t^n downward
    Nmat = Matrix.identity(n)
    for k in range(1, n + 1):
        MN = M * Nmat
        ck = -(MN.trace() / Scalar(k))
        coeffs.append(ck)
        Nmat = MN + Matrix.identity(n).scaled(ck)
    return list(reversed(coeffs))  # little-endian


def segre_symbol_jordan(P: Pencil) -> SegreSymbol:
    """Segre symbol via Jordan block sizes of (G^-1 F)^t.

    Requires all eigenvalues to lie in Q(i); the characteristic numbers
    of the root (1 : -t) are the block sizes at the eigenvalue t.
    """
    c = shear_constant(P)
    cs = Scalar(c)
    fs = P.F + P.G.scaled(cs)
    M = (inverse(P.G) * fs).transpose()
    chi = _charpoly(M)
    roots, complete = roots_with_multiplicity(chi)
    if not complete:
        raise IrrationalEigenvaluesError("irrational eigenvalues: use segre_symbol")
    brackets = []
    factors = []
    for alpha, mult in roots:
        A = M - Matrix.identity(N).scaled(alpha)
        ranks = [N]
        power = Matrix.identity(N)
        while True:
            power = power * A
            r = rank(power)
            ranks.append(r)
            if r == ranks[-2]:
                break
        blocks_ge = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
        sizes = []
        for k in range(len(blocks_ge) - 1, 0, -1):
            count = blocks_ge[k - 1] - (blocks_ge[k] if k < len(blocks_ge) else 0)
            sizes.extend([k] * count)
        sizes.sort(reverse=True)
        bracket = Bracket(sizes)
        if bracket.weight != mult:
            raise ArithmeticError("Jordan profile does not match multiplicity")
        eig = alpha - cs
        factors.append((BinaryForm(1, (ONE, eig)).monic(), bracket))
        brackets.append(bracket)
    return SegreSymbol(brackets, factors)


# ---------------------------------------------------------------------
# geometry of the complex from its symbol

_SINGULARITY_TABLE = {
    (1,): ("0", "empty", "no singularities"),
    (2,): ("0", "1 point", "A_1"),
    (3,): ("0", "1 point", "A_2"),
    (4,): ("0", "1 point", "A_3"),
    (1, 1): ("1", "2 different points", "A_1"),
    (2, 1): ("1", "1 point", "A_2"),
    (2, 2): ("1", "1 point", "A_3"),
    (1, 1, 1): ("2", "smooth conic", "singular along a smooth conic"),
    (2, 1, 1): ("2", "rank 2 conic", "singular along a rank 2 conic"),
}


@dataclass(frozen=True)
class GeometryReport:
    kind: str  # nonreduced | reducible | irreducible-and-reduced
    singularities: tuple  # (bracket, vertex dim, vertex cap X, description)

    def to_json(self):
        return {
            "kind": self.kind,
            "singularities": [
                {"bracket": str(b), "vertex_dim": vd, "vertex_cap_X": vx,
                 "type": ty}
                for b, vd, vx, ty in self.singularities
            ],
        }


def classify_geometry(sym: SegreSymbol) -> GeometryReport:
    """Reducedness/reducibility from bracket lengths plus the per-bracket
    singularity descriptors for brackets in the tabulated range."""
    if any(len(b) == 5 for b in sym.brackets):
        kind = "nonreduced"
    elif any(len(b) == 4 for b in sym.brackets):
        kind = "reducible"
    else:
        kind = "irreducible-and-reduced"
    sing = []
    for b in sym.brackets:
        row = _SINGULARITY_TABLE.get(tuple(b))
        if row is None:
            sing.append((b, str(len(b) - 1), "not tabulated", "not tabulated"))
        else:
            sing.append((b, row[0], row[1], row[2]))
    return GeometryReport(kind, tuple(sing))
