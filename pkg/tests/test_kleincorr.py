import random

import pytest

from quadcomplex.algebra.matrix import Matrix, det
from quadcomplex.algebra.scalar import I, ONE, ZERO, Scalar
from quadcomplex.errors import FrameError, InputError
from quadcomplex.kleincorr import (FRAME, G_PLUCKER, KleinFrame, PluckerPoint,
                                   join, klein_normalize, meet_point,
                                   plucker_like, to_klein_pencil, wedge_square)
from quadcomplex.normalform import paper_case
from quadcomplex.pencil import Pencil, discriminant, segre_symbol

from conftest import random_congruence, random_scalar, random_symmetric


def e(k):
    return [Scalar(1 if i == k else 0) for i in range(4)]


def random_point(rng):
    while True:
        p = [random_scalar(rng, 3) for _ in range(4)]
        if any(p):
            return p


def test_join_basis():
    l = join(e(0), e(1))
    assert [str(c) for c in l.coords] == ["1", "0", "0", "0", "0", "0"]


def test_join_antisymmetry():
    rng = random.Random(5)
    for _ in range(20):
        a, b = random_point(rng), random_point(rng)
        try:
            l1, l2 = join(a, b), join(b, a)
        except InputError:
            continue
        assert l1.proj_eq(l2)
        assert all(x == -y for x, y in zip(l1.coords, l2.coords))


def test_join_satisfies_plucker_relation():
    rng = random.Random(6)
    count = 0
    while count < 50:
        a, b = random_point(rng), random_point(rng)
        try:
            l = join(a, b)
        except InputError:
            continue
        count += 1
        assert l.on_quadric()


def test_meet_examples():
    assert meet_point(join(e(0), e(1)), join(e(0), e(2))).point == \
        [ONE, ZERO, ZERO, ZERO]
    assert meet_point(join(e(0), e(1)), join(e(2), e(3))).kind == "skew"
    assert meet_point(join(e(0), e(1)), join(e(0), e(1))).kind == "equal-lines"


def test_meet_of_joins_recovers_point():
    rng = random.Random(7)
    count = 0
    while count < 30:
        p, q, r = (random_point(rng) for _ in range(3))
        try:
            l1, l2 = join(p, q), join(p, r)
        except InputError:
            continue
        if l1.proj_eq(l2):
            continue  # collinear triple
        count += 1
        met = meet_point(l1, l2)
        assert met.kind == "point"
        ratio = None
        got = met.point
        assert _proj_eq_vec(got, p)


def _proj_eq_vec(u, v):
    iu = next(k for k, c in enumerate(u) if c)
    iv = next(k for k, c in enumerate(v) if c)
    if iu != iv:
        return False
    return all(x * v[iu] == y * u[iu] for x, y in zip(u, v))


def test_frame_transports_identity_to_plucker_form():
    # the Eq-(3.3)-style anti-block form, scaled by the documented 2
    expect = [[ZERO] * 6 for _ in range(6)]
    for k in range(3):
        expect[k][k + 3] = Scalar(2)
        expect[k + 3][k] = Scalar(2)
    assert G_PLUCKER == Matrix(expect)
    assert plucker_like(G_PLUCKER)
    assert not plucker_like(Matrix.identity(6))


def test_frame_roundtrip_random():
    rng = random.Random(8)
    for _ in range(50):
        q = random_symmetric(rng)
        assert FRAME.to_klein(FRAME.to_plucker(q)) == q


def test_frame_denominators_are_two():
    binv = FRAME.B_inv
    assert all(e.d in (1, 2) for row in binv.rows for e in row)


def test_delta_invariant_under_frame_change():
    for n in (1, 18, 20):
        P = paper_case(n)
        T = klein_normalize(P.G)
        PK = Pencil(T.transpose() * P.F * T, Matrix.identity(6))
        PP = Pencil(FRAME.to_plucker(PK.F), FRAME.to_plucker(PK.G))
        assert discriminant(PP).monic() == discriminant(PK).monic()
        assert segre_symbol(PP) == segre_symbol(P)


def test_klein_normalize_all_cases_and_random():
    # supported shapes: square-scaled diagonal entries, hyperbolic pairs,
    # permutations thereof (covers every coordinate system in the corpus)
    rng = random.Random(9)
    for n in range(1, 24):
        G = paper_case(n).G
        T = klein_normalize(G)
        assert T.transpose() * G * T == Matrix.identity(6)
    squares = [Scalar(1), Scalar(4), Scalar(0, 2), Scalar(-1), Scalar(1, 0, 4)]
    for _ in range(10):
        perm = list(range(6))
        rng.shuffle(perm)
        rows = [[ZERO] * 6 for _ in range(6)]
        placed = 0
        while placed < 6:
            if placed < 4 and rng.random() < 0.5:
                c = rng.choice(squares)  # hyperbolic pair 2c * x_a x_b
                i, j = perm[placed], perm[placed + 1]
                rows[i][j] = rows[j][i] = c
                placed += 2
            else:
                rows[perm[placed]][perm[placed]] = rng.choice(squares)
                placed += 1
        G = Matrix(rows)
        T = klein_normalize(G)
        assert T.transpose() * G * T == Matrix.identity(6)


def test_klein_normalize_obstruction():
    g = Matrix.diagonal([2, 1, 1, 1, 1, 1])  # disc class of 2: no Q(i) frame
    with pytest.raises(FrameError):
        klein_normalize(g)


def test_wedge_identity_and_diagonal():
    assert wedge_square(Matrix.identity(4)) == Matrix.identity(6)
    a, b, c = Scalar(2), Scalar(3), Scalar(1, 1)
    d = ONE / (a * b * c)
    w = wedge_square(Matrix.diagonal([a, b, c, d]))
    expect = Matrix.diagonal([a * b, a * c, a * d, c * d, d * b, b * c])
    assert w == expect


def test_wedge_rejects_non_unimodular():
    with pytest.raises(InputError):
        wedge_square(Matrix.diagonal([2, 1, 1, 1]))


def test_wedge_action_preserves_plucker_form(rng):
    for _ in range(50):
        m = random_congruence(rng, size=4, steps=6)
        w = wedge_square(m)
        assert w.transpose() * G_PLUCKER * w == G_PLUCKER
        assert det(w) == ONE


def test_wedge_multiplicative(rng):
    for _ in range(20):
        m1 = random_congruence(rng, size=4, steps=5)
        m2 = random_congruence(rng, size=4, steps=5)
        assert wedge_square(m1 * m2) == wedge_square(m1) * wedge_square(m2)


def test_wedge_intertwines_join(rng):
    count = 0
    while count < 20:
        m = random_congruence(rng, size=4, steps=5)
        a = random_point(rng)
        b = random_point(rng)
        try:
            l = join(a, b)
        except InputError:
            continue
        count += 1
        lhs = PluckerPoint(wedge_square(m).apply(list(l.coords)))
        rhs = join(m.apply(a), m.apply(b))
        assert lhs.proj_eq(rhs)


def test_to_klein_pencil():
    P = paper_case(23)
    T, PK = to_klein_pencil(P)
    assert PK.G == Matrix.identity(6)
    assert segre_symbol(PK) == segre_symbol(P)
