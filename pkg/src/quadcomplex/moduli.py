"""Stabilizers, moduli dimensions, pencil isomorphism, cosingular families.

Stabilizer dimensions are computed at the Lie algebra level: the
solution space of A^t G + G A = 0, A^t F + F A = 0.  Isomorphism of
pencils follows the classical criterion: same Segre symbol plus an
automorphism of P^1 fixing (0:1) that matches the bracket-labelled
roots.  Since (0:1) is never a root, roots live on the affine line
m = mu/lambda and such automorphisms are exactly the affine maps, which
keeps the search elementary.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import upoly
from .algebra.gaussint import roots_with_multiplicity
from .algebra.matrix import Matrix, nullspace, rank
from .algebra.scalar import ONE, ZERO, Scalar, scalar
from .errors import InputError, IrrationalRootsError, MathDomainError
from .pencil import Bracket, Pencil, SegreSymbol, segre_symbol
from .tables import SYMBOL_DIMS

DIM_SO6 = 15


# ---------------------------------------------------------------------
# stabilizer dimension


def stabilizer_dim(P: Pencil) -> int:
    """dim of {A : A^t G + G A = 0 and A^t F + F A = 0}, the Lie algebra
    of the stabilizer of the complex in SO(G)."""
    rows = []
    for M in (P.G, P.F):
        for i in range(6):
            for j in range(i, 6):  # symmetric equations: upper triangle
                row = [ZERO] * 36
                for r in range(6):
                    # d/dA[r,c] of (A^t M + M A)[i,j]
                    row[r * 6 + i] = row[r * 6 + i] + M[r, j]
                    row[r * 6 + j] = row[r * 6 + j] + M[i, r]
                rows.append(row)
    m = Matrix(rows)
    return 36 - rank(m)


def lemma_stab_formula(sym: SegreSymbol) -> int:
    """r2 + 3*r3, with the documented exception [(22)11] -> 2."""
    if sym.brackets == (Bracket((2, 2)), Bracket((1,)), Bracket((1,))):
        return 2
    return sym.bracket_count_of_length(2) + 3 * sym.bracket_count_of_length(3)


# ---------------------------------------------------------------------
# moduli dimension report


@dataclass(frozen=True)
class ModuliReport:
    symbol: SegreSymbol
    applicable: bool
    note: str | None
    r: int
    r1: int
    r2: int
    r3: int
    dim_stab: int | None
    dim_R: int | None
    dim_mqc: int | None
    dim_mss: int | None
    dim_fiber: int | None

    def to_json(self):
        return {
            "symbol": str(self.symbol),
            "applicable": self.applicable,
            "note": self.note,
            "r": self.r, "r1": self.r1, "r2": self.r2, "r3": self.r3,
            "dim_stab": self.dim_stab,
            "dim_R": self.dim_R,
            "dim_mqc": self.dim_mqc,
            "dim_mss": self.dim_mss,
            "dim_fiber": self.dim_fiber,
        }


def moduli_report(sym: SegreSymbol) -> ModuliReport:
    """Moduli bookkeeping for a symbol with >= 3 brackets and no bracket
    of length >= 4; other symbols get the degenerate verdict instead.
    dim_mss and dim_fiber are stored, paper-asserted table values."""
    r = sym.r
    r1 = sym.bracket_count_of_length(1)
    r2 = sym.bracket_count_of_length(2)
    r3 = sym.bracket_count_of_length(3)
    if r <= 2:
        return ModuliReport(
            sym, False,
            "at most 2 brackets: all quadratic complexes with this symbol "
            "are isomorphic (moduli reduce to a point)",
            r, r1, r2, r3, None, None, None, None, None)
    if sym.max_bracket_length() >= 4:
        return ModuliReport(
            sym, False,
            "bracket of length >= 4: the complex is reducible or "
            "non-reduced; the moduli construction does not apply",
            r, r1, r2, r3, None, None, None, None, None)
    dim_stab = lemma_stab_formula(sym)
    dim_R = r + 13 - dim_stab
    dim_mqc = r - 2
    stored = SYMBOL_DIMS.get(str(sym))
    dim_mss = stored[1] if stored else None
    dim_fiber = stored[2] if stored else None
    return ModuliReport(sym, True, None, r, r1, r2, r3,
                        dim_stab, dim_R, dim_mqc, dim_mss, dim_fiber)


# ---------------------------------------------------------------------
# labelled roots and isomorphism


def labelled_roots(P: Pencil):
    """[(m, bracket)] with m = mu/lambda for each root (all roots have
    lambda != 0 because (0:1) is never a root); errors when some root
    lies outside Q(i)."""
    sym = segre_symbol(P)
    out = []
    for b, bracket in sym.per_root_factors:
        p = b.dehomogenize()
        if b.degree - upoly.deg(p) > 0:
            # mu-divisible factor: root (1:0), i.e. m = 0
            out.append((ZERO, bracket))
        roots, complete = roots_with_multiplicity(p)
        if not complete:
            raise IrrationalRootsError("irrational roots unsupported")
        for t, mult in roots:
            if mult != 1:
                raise ArithmeticError("coprime basis element not squarefree")
            # b vanishes at (t : 1): m = mu/lambda = 1/t unless t = 0
            if not t:
                raise ArithmeticError("(0:1) cannot be a root")
            out.append((ONE / t, bracket))
    out.sort(key=lambda rb: rb[0].sort_key())
    return out


@dataclass(frozen=True)
class MobiusWitness:
    """m -> alpha*m + beta on the root line m = mu/lambda; equivalently
    the matrix [[1, 0], [beta, alpha]] acting on (lambda : mu)."""
    alpha: Scalar
    beta: Scalar

    def matrix(self):
        return ((ONE, ZERO), (self.beta, self.alpha))

    def apply(self, m: Scalar) -> Scalar:
        return self.alpha * m + self.beta

    def to_json(self):
        return {"alpha": str(self.alpha), "beta": str(self.beta),
                "matrix": [[str(c) for c in row] for row in self.matrix()]}


@dataclass(frozen=True)
class IsomorphismResult:
    isomorphic: bool
    witness: MobiusWitness | None

    def __bool__(self):
        return self.isomorphic

    def to_json(self):
        return {"isomorphic": self.isomorphic,
                "witness": self.witness.to_json() if self.witness else None}


def _match(roots1, roots2, w: MobiusWitness) -> bool:
    image = [(w.apply(m), br) for m, br in roots1]
    pool = list(roots2)
    for m, br in image:
        hit = next((k for k, (m2, br2) in enumerate(pool)
                    if m2 == m and br2 == br), None)
        if hit is None:
            return False
        pool.pop(hit)
    return not pool


def isomorphic(P1: Pencil, P2: Pencil) -> IsomorphismResult:
    """Lemma-style isomorphism test with an explicit witness.

    True iff the Segre symbols agree and some automorphism of P^1 fixing
    (0:1) carries the bracket-labelled roots of P1 to those of P2.
    """
    s1, s2 = segre_symbol(P1), segre_symbol(P2)
    if s1 != s2:
        return IsomorphismResult(False, None)
    roots1 = labelled_roots(P1)
    roots2 = labelled_roots(P2)
    if len(roots1) == 1:
        m, _ = roots1[0]
        m2, _ = roots2[0]
        return IsomorphismResult(True, MobiusWitness(ONE, m2 - m))
    m1, br1 = roots1[0]
    m2, br2 = roots1[1]
    for u, bru in roots2:
        if bru != br1:
            continue
        for v, brv in roots2:
            if v == u or brv != br2:
                continue
            alpha = (u - v) / (m1 - m2)
            beta = u - alpha * m1
            w = MobiusWitness(alpha, beta)
            if _match(roots1, roots2, w):
                return IsomorphismResult(True, w)
    return IsomorphismResult(False, None)


# ---------------------------------------------------------------------
# full Mobius equivalence of diagonal pencils (the cosingular relation)


def _diag_eigenvalues(P: Pencil):
    if P.G != Matrix.identity(6):
        raise InputError("mobius equivalence needs diagonal pencils (G = 1)")
    for i in range(6):
        for j in range(6):
            if i != j and P.F[i, j]:
                raise InputError("mobius equivalence needs a diagonal F")
    eigs = [P.F[i, i] for i in range(6)]
    if len({(e.a, e.b, e.d) for e in eigs}) != 6:
        raise InputError("mobius equivalence needs distinct eigenvalues")
    return eigs


@dataclass(frozen=True)
class MobiusSL2Result:
    equivalent: bool
    matrix: tuple | None  # ((a, b), (c, d)), det != 0
    sl2: bool | None  # True when the returned matrix has det 1

    def __bool__(self):
        return self.equivalent

    def to_json(self):
        return {
            "equivalent": self.equivalent,
            "matrix": [[str(c) for c in row] for row in self.matrix] if self.matrix else None,
            "sl2": self.sl2,
        }


def _mobius_apply(mat, t: Scalar) -> Scalar | None:
    (a, b), (c, d) = mat
    den = c * t + d
    if not den:
        return None
    return (a * t + b) / den


def mobius_matrix_maps(mat, eigs1, eigs2) -> bool:
    """Does the Mobius map of mat send the first eigenvalue multiset
    exactly onto the second?"""
    pool = list(eigs2)
    for t in eigs1:
        img = _mobius_apply(mat, t)
        if img is None:
            return False
        hit = next((k for k, s in enumerate(pool) if s == img), None)
        if hit is None:
            return False
        pool.pop(hit)
    return not pool


def mobius_equivalent(P1: Pencil, P2: Pencil) -> MobiusSL2Result:
    """Is there a full Mobius (SL(2)) map matching the eigenvalue lists
    up to permutation?  Witness normalized to det 1 whenever the
    determinant is a square in Q(i)."""
    e1 = _diag_eigenvalues(P1)
    e2 = _diag_eigenvalues(P2)
    t1, t2, t3 = e1[0], e1[1], e1[2]
    for u in e2:
        for v in e2:
            if v == u:
                continue
            for w in e2:
                if w == u or w == v:
                    continue
                rows = []
                for t, img in ((t1, u), (t2, v), (t3, w)):
                    # a*t + b - img*c*t - img*d = 0
                    rows.append([t, ONE, -img * t, -img])
                basis = nullspace(Matrix(rows))
                for vec in basis:
                    a, b, c, d = vec
                    if a * d - b * c:
                        mat = ((a, b), (c, d))
                        if mobius_matrix_maps(mat, e1, e2):
                            return MobiusSL2Result(True, *_sl2_normalize(mat))
    return MobiusSL2Result(False, None, None)


def _sl2_normalize(mat):
    (a, b), (c, d) = mat
    det = a * d - b * c
    root = det.sqrt()
    if root is None:
        return mat, False
    inv = ONE / root
    return ((a * inv, b * inv), (c * inv, d * inv)), True


# ---------------------------------------------------------------------
# the cosingular family F_rho = sum x_i^2 / (lambda_i - rho)


class CosingularFamily:
    __slots__ = ("lambdas", "rho")

    def __init__(self, lambdas, rho):
        lambdas = tuple(scalar(l) for l in lambdas)
        rho = scalar(rho)
        if len(lambdas) != 6:
            raise InputError("need 6 eigenvalues")
        if len({(l.a, l.b, l.d) for l in lambdas}) != 6:
            raise InputError("eigenvalues must be pairwise distinct")
        if any(l == rho for l in lambdas):
            raise InputError("rho must differ from every eigenvalue")
        object.__setattr__(self, "lambdas", lambdas)
        object.__setattr__(self, "rho", rho)

    def __setattr__(self, *_):
        raise AttributeError("CosingularFamily is immutable")

    def base_pencil(self) -> Pencil:
        return Pencil(Matrix.diagonal(list(self.lambdas)), Matrix.identity(6))


def cosingular_member(C: CosingularFamily) -> Pencil:
    """The pencil (F_rho, G) with F_rho = diag(1 / (lambda_i - rho))."""
    entries = [ONE / (l - C.rho) for l in C.lambdas]
    return Pencil(Matrix.diagonal(entries), Matrix.identity(6))


def _vec_sym(M: Matrix):
    return [M[i, j] for i in range(6) for j in range(i, 6)]


def verify_phi(C: CosingularFamily, rho_sub=None) -> bool:
    """Does x_i = y_i / (lambda_i - rho_sub) carry the Sigma quadrics of
    the base into the span of the Sigma quadrics of X_rho?  (rho_sub
    defaults to rho; passing something else is the negative control.)"""
    from .surface import sigma_surface
    rho_sub = C.rho if rho_sub is None else scalar(rho_sub)
    if any(l == rho_sub for l in C.lambdas):
        raise InputError("substitution parameter collides with an eigenvalue")
    D = Matrix.diagonal([ONE / (l - rho_sub) for l in C.lambdas])
    base = sigma_surface(C.base_pencil())
    target = sigma_surface(cosingular_member(C))
    transformed = [D.transpose() * Q * D for Q in base.quadrics()]
    tgt_rows = [_vec_sym(Q) for Q in target.quadrics()]
    base_rank = rank(Matrix(tgt_rows))
    if base_rank != 3:
        raise MathDomainError("target Sigma quadrics are not independent")
    for M in transformed:
        if rank(Matrix(tgt_rows + [_vec_sym(M)])) != base_rank:
            return False
    return True


# ---------------------------------------------------------------------
# the limit rho -> infinity of the normalized family


class _RatFn:
    """num/den with upoly coefficient lists; just enough for the limit."""

    __slots__ = ("num", "den")

    def __init__(self, num, den):
        if upoly.is_zero(den):
            raise ZeroDivisionError("rational function with zero denominator")
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *_):
        raise AttributeError("_RatFn is immutable")

    def is_zero(self):
        return upoly.is_zero(self.num)

    def divide(self, other: "_RatFn") -> "_RatFn":
        return _RatFn(upoly.mul(self.num, other.den),
                      upoly.mul(self.den, other.num))

    def limit_at_infinity(self) -> Scalar:
        dn, dd = upoly.deg(self.num), upoly.deg(self.den)
        if self.is_zero() or dn < dd:
            return ZERO
        if dn > dd:
            raise MathDomainError("family diverges: no finite limit")
        return self.num[-1] / self.den[-1]


def rho_limit(C: CosingularFamily, rho0) -> Pencil:
    """lim as rho -> infinity of the projectively normalized family
    F'_rho = rho (G + (rho0 + rho) F_rho); equals F + rho0*G up to the
    same normalization (first nonzero entry scaled to 1)."""
    rho0 = scalar(rho0)
    if any(l == rho0 for l in C.lambdas):
        raise InputError("rho0 must differ from every eigenvalue")
    # entry i: rho*(lambda_i + rho0) / (lambda_i - rho), as num/den in rho
    entries = [_RatFn([ZERO, l + rho0], [l, -ONE]) for l in C.lambdas]
    first = next(e for e in entries if not e.is_zero())
    limits = [e.divide(first).limit_at_infinity() for e in entries]
    F_lim = Matrix.diagonal(limits)
    return Pencil(F_lim, Matrix.identity(6))


def proj_normalized(M: Matrix) -> Matrix:
    """Scale so the first nonzero entry (row-major) is 1."""
    for r in M.rows:
        for e in r:
            if e:
                return M.scaled(ONE / e)
    raise InputError("zero matrix has no projective normalization")
