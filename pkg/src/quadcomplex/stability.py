"""Semistability tests: quadrics under SO(6), quartic surfaces under SL(4).

Hilbert-Mumford weights are evaluated against explicit diagonal
one-parameter subgroups.  Quadric instability is certified by a fixed
zero pattern in the given coordinates (no orbit search): the pattern
kills exactly the entry pairs whose weight r_i + r_j is nonnegative for
every admissible weight vector, and leaves survivors whose maximal
weight at (3,2,1,-3,-2,-1) is -1.  The analogous 15-coefficient pattern
handles quartics at the witness weights (8,-1,-3,-4).
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra.matrix import Matrix
from .algebra.mpoly import MPoly
from .algebra.scalar import ONE, ZERO, Scalar, scalar
from .errors import InputError, MathDomainError
from .pencil import Pencil, SegreSymbol, segre_symbol


class OnePS:
    """A diagonal 1-parameter subgroup, encoded by its integer weights.

    kind 'so6': weights (r1, r2, r3, -r1, -r2, -r3), r1 >= r2 >= r3 >= 0.
    kind 'sl4': weights (r0, r1, r2, r3) nonincreasing with sum 0.
    """

    __slots__ = ("kind", "weights")

    def __init__(self, weights, kind=None):
        weights = tuple(int(w) for w in weights)
        if kind is None:
            kind = "sl4" if len(weights) == 4 else "so6"
        if kind == "so6":
            if len(weights) == 3:
                weights = weights + tuple(-w for w in weights)
            if len(weights) != 6:
                raise InputError("SO(6) weights need length 3 or 6")
            r = weights
            if not (r[0] >= r[1] >= r[2] >= 0):
                raise InputError("need r1 >= r2 >= r3 >= 0")
            if r[3] != -r[0] or r[4] != -r[1] or r[5] != -r[2]:
                raise InputError("need r4 = -r1, r5 = -r2, r6 = -r3")
        elif kind == "sl4":
            if len(weights) != 4:
                raise InputError("SL(4) weights need length 4")
            if any(weights[i] < weights[i + 1] for i in range(3)):
                raise InputError("SL(4) weights must be nonincreasing")
            if sum(weights) != 0:
                raise InputError("SL(4) weights must sum to zero")
        else:
            raise InputError("unknown 1-PS kind %r" % kind)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "weights", weights)

    def __setattr__(self, *_):
        raise AttributeError("OnePS is immutable")

    def __repr__(self):
        return "OnePS(%s, %r)" % (list(self.weights), self.kind)


WITNESS_SO6 = OnePS((3, 2, 1, -3, -2, -1))
WITNESS_SL4 = OnePS((8, -1, -3, -4))


# ---------------------------------------------------------------------
# quadrics of trace zero under SO(6)


def trace_zero_representative(P: Pencil) -> Matrix:
    """The unique trace-0 quadric F - (tr F / 6) G of the pencil;
    requires Klein coordinates (G = 1)."""
    if P.G != Matrix.identity(6):
        raise InputError(
            "trace-zero representative needs Klein coordinates (G = 1); "
            "convert with kleincorr.to_klein_pencil first")
    f0 = P.F - P.G.scaled(P.F.trace() / Scalar(6))
    if f0.is_zero():
        raise MathDomainError("F is proportional to G")
    return f0


def mu_quadric(Q: Matrix, w: OnePS) -> int:
    """max{r_i + r_j : q_ij != 0}, the Hilbert-Mumford weight."""
    if w.kind != "so6":
        raise InputError("quadric weights must be of SO(6) type")
    if Q.is_zero():
        raise MathDomainError("zero quadric has no weight")
    r = w.weights
    best = None
    for i in range(6):
        for j in range(i, 6):
            if Q[i, j]:
                v = r[i] + r[j]
                if best is None or v > best:
                    best = v
    return best


# Entries that must vanish (0-based, upper triangle): the full 3x3
# block plus (0,3),(0,4),(0,5),(1,4),(1,5),(2,5).  Survivors are
# (1,3),(2,3),(2,4) and the lower 3x3 block, exactly the terms
# 2q24 x2x4 + 2q34 x3x4 + 2q35 x3x5 + sum_{i,j>=4} q_ij x_i x_j
# of the instability certificate; every vanishing pair has
# r_i + r_j >= 0 for all admissible weights.
_QUADRIC_ZERO_PATTERN = tuple(
    [(i, j) for i in range(3) for j in range(i, 3)]
    + [(0, 3), (0, 4), (0, 5), (1, 4), (1, 5), (2, 5)]
)


def unstable_pattern_quadric(Q: Matrix) -> bool:
    """Does Q vanish on the instability zero pattern, in the given
    coordinates (Plucker coordinates, G anti-block)?"""
    return all(not Q[i, j] for i, j in _QUADRIC_ZERO_PATTERN)


def quadric_zero_pattern():
    return _QUADRIC_ZERO_PATTERN


def segre_semistable(P: Pencil) -> bool:
    """True iff the discriminant has at least two distinct roots, i.e.
    the Segre symbol has at least two brackets."""
    return segre_symbol(P).r >= 2


# ---------------------------------------------------------------------
# quartic surfaces under SL(4)


def _exponents4():
    out = []
    for i0 in range(4, -1, -1):
        for i1 in range(4 - i0, -1, -1):
            for i2 in range(4 - i0 - i1, -1, -1):
                out.append((i0, i1, i2, 4 - i0 - i1 - i2))
    return tuple(out)


QUARTIC_EXPONENTS = _exponents4()


class Quartic:
    """A nonzero quartic form in 4 variables, scalar-normalized so the
    grevlex-leading coefficient is 1."""

    __slots__ = ("poly",)

    def __init__(self, poly: MPoly, normalize: bool = True):
        if poly.nvars != 4:
            raise InputError("quartic needs 4 variables")
        if poly.is_zero():
            raise InputError("zero quartic")
        if not poly.is_homogeneous() or poly.degree() != 4:
            raise InputError("quartic must be homogeneous of degree 4")
        object.__setattr__(self, "poly", poly.monic() if normalize else poly)

    def __setattr__(self, *_):
        raise AttributeError("Quartic is immutable")

    def coeff(self, exps) -> Scalar:
        return self.poly.terms.get(tuple(exps), ZERO)

    @classmethod
    def from_coeffs(cls, mapping) -> "Quartic":
        terms = {}
        for exps, c in mapping.items():
            exps = tuple(exps)
            if len(exps) != 4 or sum(exps) != 4:
                raise InputError("bad quartic exponent %r" % (exps,))
            c = scalar(c)
            if c:
                terms[exps] = c
        return cls(MPoly(4, terms))

    def __eq__(self, other):
        if not isinstance(other, Quartic):
            return NotImplemented
        return self.poly == other.poly

    __hash__ = None

    def __repr__(self):
        return "Quartic(%r)" % (self.poly,)


def mu_quartic(q: Quartic, w: OnePS) -> int:
    """max over nonzero coefficients of sum r_k i_k."""
    if w.kind != "sl4":
        raise InputError("quartic weights must be of SL(4) type")
    r = w.weights
    best = None
    for exps in q.poly.terms:
        v = sum(rk * ik for rk, ik in zip(r, exps))
        if best is None or v > best:
            best = v
    if best is None:
        raise MathDomainError("zero quartic has no weight")
    return best


# The 15 coefficients whose vanishing certifies instability: all
# monomials with i0 >= 2, plus 1300, 1210, 1201, 1120, 1111.  The
# survivors with i0 = 1 are exactly the cuspidal tangent-cone monomials
# 1102, 1030, 1021, 1012, 1003.
QUARTIC_ZERO_PATTERN = (
    (4, 0, 0, 0), (3, 1, 0, 0), (3, 0, 1, 0), (3, 0, 0, 1),
    (2, 2, 0, 0), (2, 1, 1, 0), (2, 1, 0, 1), (2, 0, 2, 0),
    (2, 0, 1, 1), (2, 0, 0, 2),
    (1, 3, 0, 0), (1, 2, 1, 0), (1, 2, 0, 1), (1, 1, 2, 0), (1, 1, 1, 1),
)


def unstable_pattern_quartic(q: Quartic) -> bool:
    return all(not q.coeff(e) for e in QUARTIC_ZERO_PATTERN)


# ---------------------------------------------------------------------
# triple points and cuspidal tangent cones


@dataclass(frozen=True)
class TriplePointReport:
    is_triple: bool
    tangent_cone: MPoly | None  # cubic in the 3 chart variables
    cusp_at: bool | None

    def to_json(self):
        return {
            "is_triple": self.is_triple,
            "tangent_cone": self.tangent_cone.serialize() if self.tangent_cone else None,
            "cusp_at": self.cusp_at,
        }


def _localize(poly: MPoly, p):
    """Expand at p: substitute x = p * t + affine chart coordinates and
    return the polynomial in the 3 chart variables, by homogeneous part."""
    n = poly.nvars
    pivot = next(k for k in range(n) if p[k])
    inv = ONE / p[pivot]
    p = [c * inv for c in p]
    # chart x_pivot = 1, local coordinates z_k = x_k - p_k for k != pivot
    subs = []
    others = [k for k in range(n) if k != pivot]
    local_index = {k: idx for idx, k in enumerate(others)}
    out_n = n - 1
    for k in range(n):
        if k == pivot:
            subs.append(MPoly.constant(out_n, 1))
        else:
            subs.append(MPoly.variable(local_index[k], out_n)
                        + MPoly.constant(out_n, p[k]))
    result = MPoly.zero(out_n)
    for e, c in poly.terms.items():
        term = MPoly.constant(out_n, c)
        for k, kk in enumerate(e):
            if kk:
                term = term * subs[k] ** kk
        result = result + term
    return result


def _homogeneous_part(poly: MPoly, d: int) -> MPoly:
    return MPoly(poly.nvars, {e: c for e, c in poly.terms.items() if sum(e) == d})


def triple_point_report(q: Quartic, p, cusp_candidate=None) -> TriplePointReport:
    """Order <= 2 vanishing at p, the degree-3 tangent cone in the affine
    chart at p, and optionally whether the cone (as a plane cubic) has a
    cusp at a supplied point: singular there with rank-1 quadratic part."""
    p = [scalar(c) for c in p]
    if all(not c for c in p):
        raise InputError("zero vector is not a projective point")
    local = _localize(q.poly, p)
    is_triple = all(_homogeneous_part(local, d).is_zero() for d in (0, 1, 2))
    if not is_triple:
        return TriplePointReport(False, None, None)
    cone = _homogeneous_part(local, 3)
    cusp = None
    if cusp_candidate is not None:
        cusp = _is_cusp(cone, [scalar(c) for c in cusp_candidate])
    return TriplePointReport(True, cone, cusp)


def _is_cusp(cubic: MPoly, r) -> bool:
    if cubic.is_zero():
        return False
    if all(not c for c in r):
        raise InputError("zero vector is not a projective point")
    local = _localize(cubic, r)
    if not (_homogeneous_part(local, 0).is_zero()
            and _homogeneous_part(local, 1).is_zero()):
        return False
    quad = _homogeneous_part(local, 2)
    if quad.is_zero():
        return False
    # rank of the 2x2 quadratic part
    m = [[ZERO] * 2 for _ in range(2)]
    for (a, b), c in quad.terms.items():
        if a == 2:
            m[0][0] = c
        elif b == 2:
            m[1][1] = c
        else:
            m[0][1] = m[1][0] = c / Scalar(2)
    detm = m[0][0] * m[1][1] - m[0][1] * m[1][0]
    return not detm


def find_cusp_points(cone: MPoly):
    """Automatic cusp search limited to chart points with coordinates in
    {0, 1, -1}; exact search beyond that is out of scope."""
    hits = []
    vals = (Scalar(0), Scalar(1), Scalar(-1))
    seen = []
    for a in vals:
        for b in vals:
            for c in vals:
                pt = [a, b, c]
                if all(not x for x in pt):
                    continue
                norm = normalize_proj(pt)
                if norm in seen:
                    continue
                seen.append(norm)
                if _is_cusp(cone, pt):
                    hits.append(pt)
    return hits


def normalize_proj(p):
    inv = ONE / next(c for c in p if c)
    return tuple(c * inv for c in p)


# ---------------------------------------------------------------------
# verdict assembly for the CLI


def quadric_verdict(P: Pencil, weights=None):
    from .kleincorr import FRAME, to_klein_pencil
    T, PK = (None, P) if P.G == Matrix.identity(6) else to_klein_pencil(P)
    f0 = trace_zero_representative(PK)
    f0_pl = FRAME.to_plucker(f0)
    w = OnePS(weights) if weights is not None else WITNESS_SO6
    mu = mu_quadric(f0_pl, w)
    pattern = unstable_pattern_quadric(f0_pl)
    semistable = segre_semistable(P)
    return {
        "semistable": semistable,
        "mu": mu,
        "weights": list(w.weights),
        "pattern_unstable": pattern,
        "witness": [str(f0_pl[i, j]) for i, j in _QUADRIC_ZERO_PATTERN],
    }


def quartic_verdict(q: Quartic, weights=None, point=None):
    w = OnePS(weights, "sl4") if weights is not None else WITNESS_SL4
    mu = mu_quartic(q, w)
    pattern = unstable_pattern_quartic(q)
    out = {
        "semistable": (False if pattern else None),
        "mu": mu,
        "weights": list(w.weights),
        "pattern_unstable": pattern,
        "witness": [str(q.coeff(e)) for e in QUARTIC_ZERO_PATTERN],
    }
    if point is not None:
        rep = triple_point_report(q, point)
        out["triple_point"] = rep.to_json()
    return out
