"""Plucker line geometry and the Klein <-> Plucker coordinate change.

Coordinate conventions, fixed once for every golden file:

  * Plucker order (p01, p02, p03, p23, p31, p12) with
    p_ij = a_i b_j - a_j b_i for the line through a, b in P^3;
  * the Plucker quadric is p01*p23 + p02*p31 + p03*p12 = 0;
  * Klein coordinates x = B p with
      x1 = p01 + p23   x3 = p02 + p31   x5 = p03 + p12
      x2 = i(p01-p23)  x4 = i(p02-p31)  x6 = i(p03-p12)
    so that sum x_k^2 = 4 (p01*p23 + p02*p31 + p03*p12); transporting the
    identity matrix to Plucker coordinates gives twice the anti-block
    matrix of the Plucker form (the documented scalar is 2).
"""

from __future__ import annotations

from .algebra.matrix import Matrix, congruent_diagonalize, det, inverse
from .algebra.scalar import I, ONE, ZERO, Scalar, scalar
from .errors import FrameError, InputError

PAIRS = ((0, 1), (0, 2), (0, 3), (2, 3), (3, 1), (1, 2))


class PluckerPoint:
    """A point of P^5 in Plucker coordinates; a line of P^3 when on G."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        coords = tuple(scalar(c) for c in coords)
        if len(coords) != 6:
            raise InputError("need 6 Plucker coordinates")
        if all(not c for c in coords):
            raise InputError("zero vector is not a projective point")
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, *_):
        raise AttributeError("PluckerPoint is immutable")

    def plucker_value(self) -> Scalar:
        p = self.coords
        return p[0] * p[3] + p[1] * p[4] + p[2] * p[5]

    def on_quadric(self) -> bool:
        return not self.plucker_value()

    def pairing(self, other: "PluckerPoint") -> Scalar:
        """Polarized Plucker form; zero iff the two lines meet."""
        p, q = self.coords, other.coords
        return (p[0] * q[3] + p[1] * q[4] + p[2] * q[5]
                + p[3] * q[0] + p[4] * q[1] + p[5] * q[2])

    def normalized(self) -> "PluckerPoint":
        inv = ONE / next(c for c in self.coords if c)
        return PluckerPoint([c * inv for c in self.coords])

    def proj_eq(self, other: "PluckerPoint") -> bool:
        return self.normalized().coords == other.normalized().coords

    def line_matrix(self) -> Matrix:
        """Antisymmetric 4x4 matrix P with P[i][j] = p_ij."""
        rows = [[ZERO] * 4 for _ in range(4)]
        for val, (i, j) in zip(self.coords, PAIRS):
            rows[i][j] = val
            rows[j][i] = -val
        return Matrix(rows)

    def dual(self) -> "PluckerPoint":
        """Swap p01<->p23, p02<->p31, p03<->p12; rows of the dual line
        matrix are planes containing the line."""
        p = self.coords
        return PluckerPoint([p[3], p[4], p[5], p[0], p[1], p[2]])

    def __repr__(self):
        return "PluckerPoint(%s)" % ", ".join(str(c) for c in self.coords)


def join(a, b) -> PluckerPoint:
    """The line through two distinct points of P^3."""
    a = [scalar(c) for c in a]
    b = [scalar(c) for c in b]
    coords = [a[i] * b[j] - a[j] * b[i] for i, j in PAIRS]
    if all(not c for c in coords):
        raise InputError("points coincide: no spanned line")
    return PluckerPoint(coords)


class MeetResult:
    __slots__ = ("kind", "point")

    def __init__(self, kind, point=None):
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "point", point)

    def __setattr__(self, *_):
        raise AttributeError("MeetResult is immutable")

    def __repr__(self):
        if self.kind == "point":
            return "MeetResult(point=%s)" % ([str(c) for c in self.point],)
        return "MeetResult(%r)" % self.kind


def normalize_point(p):
    inv = ONE / next(c for c in p if c)
    return [c * inv for c in p]


def meet_point(x: PluckerPoint, y: PluckerPoint) -> MeetResult:
    """Intersection point of two lines, 'skew', or 'equal-lines'."""
    if not x.on_quadric() or not y.on_quadric():
        raise InputError("meet_point needs points on the Plucker quadric")
    if x.proj_eq(y):
        return MeetResult("equal-lines")
    if x.pairing(y):
        return MeetResult("skew")
    lm = x.line_matrix()
    for plane in y.dual().line_matrix().rows:
        pt = lm.apply(list(plane))
        if any(c for c in pt):
            return MeetResult("point", normalize_point(pt))
    raise ArithmeticError("meeting lines with no common point")


# ---------------------------------------------------------------------
# Klein frame


def _klein_from_plucker() -> Matrix:
    rows = []
    for k in range(3):
        r1 = [ZERO] * 6
        r1[k] = ONE
        r1[k + 3] = ONE
        r2 = [ZERO] * 6
        r2[k] = I
        r2[k + 3] = -I
        rows.append(r1)
        rows.append(r2)
    return Matrix(rows)


class KleinFrame:
    """The fixed change of coordinates between Klein and Plucker systems."""

    __slots__ = ("B", "B_inv")

    def __init__(self):
        B = _klein_from_plucker()
        object.__setattr__(self, "B", B)
        object.__setattr__(self, "B_inv", inverse(B))

    def __setattr__(self, *_):
        raise AttributeError("KleinFrame is immutable")

    def to_plucker(self, Q: Matrix) -> Matrix:
        """Quadric matrix transport Klein -> Plucker."""
        return self.B.transpose() * Q * self.B

    def to_klein(self, Q: Matrix) -> Matrix:
        Binv = self.B_inv
        return Binv.transpose() * Q * Binv

    def point_to_plucker(self, x) -> PluckerPoint:
        return PluckerPoint(self.B_inv.apply(list(x)))

    def point_to_klein(self, p: PluckerPoint):
        return self.B.apply(list(p.coords))


FRAME = KleinFrame()

# The Plucker-quadric matrix in this library's normalization: the
# transport of the Klein identity, i.e. 2 * antiblock.
G_PLUCKER = FRAME.to_plucker(Matrix.identity(6))


def plucker_like(G: Matrix) -> bool:
    """Is G a scalar multiple of the standard Plucker quadric matrix?"""
    ref = G_PLUCKER
    ratio = None
    for i in range(6):
        for j in range(6):
            a, b = G[i, j], ref[i, j]
            if not a and not b:
                continue
            if not b or not a:
                return False
            r = a / b
            if ratio is None:
                ratio = r
            elif r != ratio:
                return False
    return ratio is not None


def klein_frame() -> KleinFrame:
    return FRAME


# ---------------------------------------------------------------------
# reduce an arbitrary smooth quadric to the Klein form G = 1 over Q(i)


def klein_normalize(G: Matrix) -> Matrix:
    """T with T^t G T = 1, or FrameError when no Q(i) congruence exists.

    Diagonalize congruently, rescale square diagonal entries to 1, and
    resolve leftover non-squares in pairs of equal square class through
    an isotropic splitting (possible because i is available).
    """
    T, D = congruent_diagonalize(G)
    n = G.nrows
    cols = [[T[r, c] for r in range(n)] for c in range(n)]
    diag = [D[c, c] for c in range(n)]
    if any(not d for d in diag):
        raise FrameError("quadric is singular")
    leftovers = []
    for c in range(n):
        root = diag[c].sqrt()
        if root is not None:
            inv = ONE / root
            cols[c] = [v * inv for v in cols[c]]
            diag[c] = ONE
        else:
            leftovers.append(c)
    unpaired = []
    for c in leftovers:
        matched = False
        for k, c0 in enumerate(unpaired):
            rho = (diag[c] / diag[c0]).sqrt()
            if rho is None:
                continue
            inv = ONE / rho
            cols[c] = [v * inv for v in cols[c]]
            d = diag[c0]
            u = [a + I * b for a, b in zip(cols[c0], cols[c])]
            v = [a - I * b for a, b in zip(cols[c0], cols[c])]
            beta = ONE / (Scalar(4) * d)
            e1 = [a + beta * b for a, b in zip(u, v)]
            e2 = [I * (a - beta * b) for a, b in zip(u, v)]
            cols[c0] = e1
            cols[c] = e2
            diag[c0] = ONE
            diag[c] = ONE
            unpaired.pop(k)
            matched = True
            break
        if not matched:
            unpaired.append(c)
    if unpaired:
        raise FrameError("quadric not congruent to the identity over Q(i)")
    Tn = Matrix([[cols[c][r] for c in range(n)] for r in range(n)])
    if Tn.transpose() * G * Tn != Matrix.identity(n):
        raise ArithmeticError("klein normalization lost exactness")
    return Tn


def to_klein_pencil(P):
    """(T, pencil in Klein coordinates with G = 1)."""
    from .pencil import Pencil
    T = klein_normalize(P.G)
    return T, Pencil(T.transpose() * P.F * T, Matrix.identity(6))


# ---------------------------------------------------------------------
# the wedge-square homomorphism SL(4) -> SO(Plucker form)


def wedge_square(M: Matrix) -> Matrix:
    """W with W(join(a, b)) = join(M a, M b); requires det M = 1."""
    if M.nrows != 4 or M.ncols != 4:
        raise InputError("wedge_square needs a 4x4 matrix")
    if det(M) != ONE:
        raise InputError("wedge_square needs det M = 1")
    rows = []
    for (i, j) in PAIRS:
        row = []
        for (k, l) in PAIRS:
            row.append(M[i, k] * M[j, l] - M[i, l] * M[j, k])
        rows.append(row)
    return Matrix(rows)
