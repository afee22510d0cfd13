"""The singular surfaces of a quadratic complex.

S in P^3 is extracted from the conic matrix A(p): F restricted to the
alpha-plane of lines through p, a 4x4 symmetric matrix of quadratic
forms with A(p) p = 0.  Its adjugate factors as adj(A) = S * p p^t, and
that identity is verified entrywise on every extraction, so the quartic
comes with its own correctness certificate.  Sigma in P^5 is the
complete intersection of G, F and H = F G^-1 F; the projection
pi(x) = l_x cap l_{Fx} links the two in Klein coordinates.

Everything is computed relative to the library's fixed Klein/Plucker
frame; quartics are therefore canonical up to that frame and a scalar,
and acceptance goes through coordinate-free structural classes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebra.gaussint import rational_roots
from .algebra.matrix import Matrix, adjugate, congruent_diagonalize, inverse, rank
from .algebra.mpoly import MPoly, grevlex_key
from .algebra.scalar import ONE, ZERO, Scalar, scalar
from .errors import InputError, MathDomainError, SurfaceDegenerationError
from .kleincorr import (FRAME, PAIRS, klein_normalize, meet_point,
                        normalize_point, plucker_like)
from .pencil import Pencil
from .stability import Quartic


def pencil_plucker_matrix(P: Pencil) -> Matrix:
    """F expressed in the fixed Plucker frame, whatever the input frame."""
    if plucker_like(P.G):
        return P.F
    if P.G == Matrix.identity(6):
        return FRAME.to_plucker(P.F)
    T = klein_normalize(P.G)
    return FRAME.to_plucker(T.transpose() * P.F * T)


@dataclass(frozen=True)
class ConicMatrix:
    """A(p), the conic alpha(p) cap F as a quadratic form in 4 variables."""
    matrix: Matrix  # 4x4, MPoly entries quadratic in p0..p3

    def kernel_identity_holds(self) -> bool:
        p = [MPoly.variable(k, 4) for k in range(4)]
        return all((sum((self.matrix[i, j] * p[j] for j in range(4)),
                        MPoly.zero(4))).is_zero()
                   for i in range(4))


def conic_matrix(P: Pencil) -> ConicMatrix:
    fp = pencil_plucker_matrix(P)
    # L[r][a] = d(join(p, q)_r) / d(q_a), linear in p
    L = []
    for (i, j) in PAIRS:
        row = [MPoly.zero(4)] * 4
        row[j] = MPoly.variable(i, 4)
        row[i] = -MPoly.variable(j, 4)
        L.append(row)
    A = []
    for a in range(4):
        arow = []
        for b in range(4):
            acc = MPoly.zero(4)
            for r in range(6):
                lra = L[r][a]
                if lra.is_zero():
                    continue
                for s in range(6):
                    c = fp[r, s]
                    if not c or L[s][b].is_zero():
                        continue
                    acc = acc + (lra * L[s][b]).scaled(c)
            arow.append(acc)
        A.append(arow)
    return ConicMatrix(Matrix(A))


_E4 = tuple(tuple(1 if k == a else 0 for k in range(4)) for a in range(4))


def singular_surface(P: Pencil) -> Quartic:
    """The quartic S with adj(A(p)) = S(p) * p p^t, scalar-normalized.

    Raises SurfaceDegenerationError when the adjugate vanishes
    identically (rank <= 2 for every p), and ArithmeticError if the
    certificate fails, which would indicate a library bug.
    """
    A = conic_matrix(P).matrix
    adj = adjugate(A)
    first = None
    for i in range(4):
        for j in range(4):
            if not adj[i, j].is_zero():
                first = (i, j)
                break
        if first:
            break
    if first is None:
        raise SurfaceDegenerationError("surface degenerates: rank <= 2 everywhere")
    i, j = first
    mono = tuple(a + b for a, b in zip(_E4[i], _E4[j]))
    S = adj[i, j].div_by_monomial(mono)
    # the certificate: every entry must reproduce
    pvars = [MPoly.variable(k, 4) for k in range(4)]
    for a in range(4):
        for b in range(4):
            if adj[a, b] != S * pvars[a] * pvars[b]:
                raise ArithmeticError("adjugate certificate failed at (%d, %d)" % (a, b))
    return Quartic(S)


# ---------------------------------------------------------------------
# Sigma in P^5


@dataclass(frozen=True)
class SigmaSurface:
    G: Matrix
    F: Matrix
    H: Matrix

    def quadrics(self):
        return (self.G, self.F, self.H)

    def contains(self, x) -> bool:
        x = list(x)
        return all(not _qform(Q, x) for Q in self.quadrics())


def _qform(Q: Matrix, x):
    return sum((xi * c for xi, c in zip(x, Q.apply(x))), ZERO)


def sigma_surface(P: Pencil) -> SigmaSurface:
    """The triple (G, F, H) with H = F G^-1 F, in the pencil's coordinates."""
    H = P.F * inverse(P.G) * P.F
    return SigmaSurface(P.G, P.F, H)


def pi_map(P: Pencil, x):
    """pi(x) = l_x cap l_{Fx} for x on Sigma, smooth on X.

    Requires Klein coordinates (G = 1), which satisfy G = G^-1; convert
    with kleincorr.to_klein_pencil first if needed.  The result lies on
    singular_surface(P), computed in the same fixed frame.
    """
    if P.G != Matrix.identity(6):
        raise InputError("pi_map needs Klein coordinates (G = 1); "
                         "convert with kleincorr.to_klein_pencil")
    x = [scalar(c) for c in x]
    if all(not c for c in x):
        raise InputError("zero vector is not a projective point")
    sigma = sigma_surface(P)
    if not sigma.contains(x):
        raise InputError("point does not satisfy the three Sigma quadrics")
    fx = P.F.apply(x)
    if _proportional_vec(fx, x):
        raise MathDomainError("singular point of X")
    lx = FRAME.point_to_plucker(x)
    lfx = FRAME.point_to_plucker(fx)
    met = meet_point(lx, lfx)
    if met.kind != "point":
        raise MathDomainError("lines are skew: x violates Sigma membership")
    return met.point


def _proportional_vec(u, v):
    ratio = None
    for a, b in zip(u, v):
        if not a and not b:
            continue
        if not a or not b:
            return False
        r = a / b
        if ratio is None:
            ratio = r
        elif r != ratio:
            return False
    return True


# ---------------------------------------------------------------------
# exact rational points on Sigma (search oracles for the pi tests)


def sigma_rational_points(P: Pencil, height: int = 3, limit: int = 25,
                          smooth_only: bool = True):
    """Small-height exact points on Sigma.

    For diagonal pencils in Klein coordinates the three quadrics are
    linear in the squares v_i = x_i^2, so we search the nullspace of
    that linear system and keep vectors whose entries are Q(i) squares.
    Otherwise a sparse-support direct search is used.  Absence of
    points is an empty result, never an error.
    """
    sigma = sigma_surface(P)
    found = []
    seen = set()

    def push(x):
        if all(not c for c in x):
            return
        xn = tuple(normalize_point(x))
        if xn in seen:
            return
        seen.add(xn)
        if not sigma.contains(list(xn)):
            return
        if smooth_only and _proportional_vec(P.F.apply(list(xn)), list(xn)):
            return
        found.append(list(xn))

    diag = P.G == Matrix.identity(6) and all(
        not P.F[i, j] for i in range(6) for j in range(6) if i != j)
    if diag:
        lam = [P.F[i, i] for i in range(6)]
        rows = [[ONE] * 6, list(lam), [l * l for l in lam]]
        from .algebra.matrix import nullspace
        basis = nullspace(Matrix(rows))
        span = range(-height, height + 1)
        for combo in itertools.product(span, repeat=len(basis)):
            if all(c == 0 for c in combo):
                continue
            v = [ZERO] * 6
            for c, vec in zip(combo, basis):
                if c:
                    v = [a + vec[k] * Scalar(c) for k, a in enumerate(v)]
            xs = []
            for vi in v:
                r = vi.sqrt()
                if r is None:
                    xs = None
                    break
                xs.append(r)
            if xs and any(c for c in xs):
                push(xs)
                if len(found) >= limit:
                    return found
        return found

    values = [Scalar(a, b) for a in range(-height, height + 1)
              for b in range(-height, height + 1) if (a, b) != (0, 0)]
    for support in itertools.combinations(range(6), 2):
        for vals in itertools.product(values, repeat=2):
            x = [ZERO] * 6
            for k, v in zip(support, vals):
                x[k] = v
            push(x)
            if len(found) >= limit:
                return found
    return found


# ---------------------------------------------------------------------
# structural classification of quartics


@dataclass(frozen=True)
class StructuralClass:
    kind: str  # product-of-planes | perfect-square | quadric-times-planes | none
    planes: tuple  # ((monic linear MPoly, multiplicity), ...)
    quadric: MPoly | None
    quadric_rank: int | None
    is_square: bool
    square_root: MPoly | None
    square_root_rank: int | None

    def plane_multiplicities(self):
        return tuple(sorted(m for _, m in self.planes))

    def to_json(self):
        return {
            "kind": self.kind,
            "planes": [{"form": pl.serialize(), "multiplicity": m}
                       for pl, m in self.planes],
            "quadric": self.quadric.serialize() if self.quadric else None,
            "quadric_rank": self.quadric_rank,
            "is_square": self.is_square,
            "square_root": self.square_root.serialize() if self.square_root else None,
            "square_root_rank": self.square_root_rank,
        }


def structural_class(q: Quartic) -> StructuralClass:
    poly = q.poly  # monic by Quartic normalization
    planes, rem = extract_linear_factors(poly)
    root = poly_square_root(poly)
    rdeg = rem.degree()
    if rdeg <= 0:
        kind = "product-of-planes"
    elif root is not None and not planes:
        kind = "perfect-square"
    elif rdeg == 2:
        kind = "quadric-times-planes"
    else:
        kind = "none"
    quadric = rem if rdeg == 2 else None
    return StructuralClass(
        kind=kind,
        planes=tuple(planes),
        quadric=quadric,
        quadric_rank=quadric_form_rank(quadric) if quadric is not None else None,
        is_square=root is not None,
        square_root=root,
        square_root_rank=quadric_form_rank(root) if root is not None and root.degree() == 2 else None,
    )


def _small_nonvanishing_point(poly: MPoly):
    n = poly.nvars
    for h in range(1, 5):
        for cand in itertools.product(range(-h, h + 1), repeat=n):
            if max(abs(c) for c in cand) != h:
                continue
            pt = [Scalar(c) for c in cand]
            if poly.evaluate(pt):
                return pt
    raise ArithmeticError("no small nonvanishing point found")


def _restrict_to_line(poly: MPoly, z, direction):
    """q(z + t * direction) as a dense univariate coefficient list."""
    d = poly.degree()
    coeffs = [ZERO] * (d + 1)
    # expand each term's product of (z_k + t*dir_k)^e_k
    for e, c in poly.terms.items():
        prod = [c]
        for k, ek in enumerate(e):
            for _ in range(ek):
                zk, dk = z[k], direction[k]
                nxt = [ZERO] * (len(prod) + 1)
                for m, a in enumerate(prod):
                    if a:
                        nxt[m] = nxt[m] + a * zk
                        nxt[m + 1] = nxt[m + 1] + a * dk
                prod = nxt
        for m, a in enumerate(prod):
            if a:
                coeffs[m] = coeffs[m] + a
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def divides_linear(linear: MPoly, poly: MPoly) -> bool:
    pivot = _linear_pivot(linear)
    c = linear.terms[pivot]
    rest = linear - MPoly(linear.nvars, {pivot: c})
    var = pivot.index(1)
    image = rest.scaled(-(ONE / c))
    return poly.substitute(var, image).is_zero()


def div_linear(poly: MPoly, linear: MPoly) -> MPoly:
    """Exact quotient poly / linear; assumes divisibility."""
    pivot = _linear_pivot(linear)
    var = pivot.index(1)
    c = linear.terms[pivot]
    rest = linear - MPoly(linear.nvars, {pivot: c})
    coeffs = poly.as_univariate(var)
    dq = len(coeffs) - 2
    out = [MPoly.zero(poly.nvars)] * (dq + 1)
    carry = MPoly.zero(poly.nvars)
    inv = ONE / c
    for k in range(len(coeffs) - 1, 0, -1):
        b = (coeffs[k] - carry).scaled(inv)
        out[k - 1] = b
        carry = b * rest
    if coeffs[0] != carry:
        raise ArithmeticError("inexact division by linear form")
    return MPoly.from_univariate(out, var, poly.nvars)


def _linear_pivot(linear: MPoly):
    if linear.degree() != 1 or not linear.is_homogeneous():
        raise InputError("expected a homogeneous linear form")
    return max(linear.terms, key=grevlex_key)


def extract_linear_factors(poly: MPoly):
    """All linear factors over Q(i) with multiplicity, plus the monic
    remainder.  Complete: candidate coefficients come from exact root
    extraction along the coordinate probe lines through a nonvanishing
    base point."""
    n = poly.nvars
    z = _small_nonvanishing_point(poly)
    cands = []
    for j in range(n):
        direction = [ONE if k == j else ZERO for k in range(n)]
        u = _restrict_to_line(poly, z, direction)
        cj = {ZERO}
        for t in rational_roots(u):
            if t:
                cj.add(-(ONE / t))
        cands.append(sorted(cj, key=Scalar.sort_key))
    factors = []
    current = poly
    for combo in itertools.product(*cands):
        if all(not c for c in combo):
            continue
        val = sum((c * zk for c, zk in zip(combo, z)), ZERO)
        if val != ONE:
            continue
        ell = MPoly(n, {tuple(1 if k == a else 0 for k in range(n)): combo[a]
                        for a in range(n) if combo[a]})
        mult = 0
        while current.degree() >= 1 and divides_linear(ell, current):
            current = div_linear(current, ell)
            mult += 1
        if mult:
            factors.append((ell.monic(), mult))
    factors.sort(key=lambda fm: fm[0].sort_key())
    return factors, current.monic() if not current.is_zero() else current


def poly_square_root(poly: MPoly):
    """Monic Q with monic(poly) = Q^2, or None.  Detects squares up to a
    scalar, which is the projective notion."""
    if poly.is_zero() or poly.degree() % 2:
        return None
    p = poly.monic()
    lead, lc = p.leading_term()
    if any(e % 2 for e in lead):
        return None
    half = tuple(e // 2 for e in lead)
    q = MPoly(p.nvars, {half: ONE})
    guard = len(p.terms) ** 2 + len(p.terms) + 2
    while guard:
        guard -= 1
        r = p - q * q
        if r.is_zero():
            return q
        m, c = r.leading_term()
        exps = tuple(a - b for a, b in zip(m, half))
        if any(e < 0 for e in exps):
            return None
        q = q + MPoly(p.nvars, {exps: c / Scalar(2)})
    return None


def quadric_form_rank(quad: MPoly) -> int:
    """Rank of the symmetric matrix of a quadratic form."""
    n = quad.nvars
    m = [[ZERO] * n for _ in range(n)]
    for e, c in quad.terms.items():
        idx = [k for k, ek in enumerate(e) if ek]
        if sum(e) != 2:
            raise InputError("not a quadratic form")
        if len(idx) == 1:
            m[idx[0]][idx[0]] = c
        else:
            i, j = idx
            m[i][j] = m[j][i] = c / Scalar(2)
    return rank(Matrix(m))


def quadric_plane_split(quad: MPoly):
    """For a rank <= 2 quadratic form, its factorization into linear
    forms over Q(i) if one exists: returns ((l1, l2) | (l, l)) or None."""
    n = quad.nvars
    m = [[ZERO] * n for _ in range(n)]
    for e, c in quad.terms.items():
        idx = [k for k, ek in enumerate(e) if ek]
        if len(idx) == 1:
            m[idx[0]][idx[0]] = c
        else:
            i, j = idx
            m[i][j] = m[j][i] = c / Scalar(2)
    M = Matrix(m)
    T, D = congruent_diagonalize(M)
    nz = [k for k in range(n) if D[k, k]]
    if len(nz) > 2:
        return None
    Tinv = inverse(T)
    def form_of_row(k):
        return MPoly(n, {tuple(1 if c == j else 0 for c in range(n)): Tinv[k, j]
                         for j in range(n) if Tinv[k, j]})
    if len(nz) == 1:
        ell = form_of_row(nz[0]).monic()
        return (ell, ell)
    k1, k2 = nz
    ratio = -(D[k2, k2] / D[k1, k1])
    sig = ratio.sqrt()
    if sig is None:
        return None
    z1, z2 = form_of_row(k1), form_of_row(k2)
    return ((z1 + z2.scaled(sig)).monic(), (z1 - z2.scaled(sig)).monic())
