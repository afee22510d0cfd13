import random

import pytest

from quadcomplex.algebra.binform import BinaryForm, bf_valuation
from quadcomplex.algebra.matrix import Matrix, inverse
from quadcomplex.algebra.scalar import ONE, Scalar
from quadcomplex.errors import InputError
from quadcomplex.normalform import (RootedSymbol, build_normal_form,
                                    default_roots, paper_case)
from quadcomplex.pencil import SegreSymbol, discriminant, segre_symbol
from quadcomplex.tables import CASE_SYMBOLS

from conftest import random_scalar


def distinct_scalars(rng, count):
    out = []
    while len(out) < count:
        t = random_scalar(rng)
        if all(t != s for s in out):
            out.append(t)
    return out


def test_all_ones_symbol_gives_diagonal():
    rs = RootedSymbol([(1,)] * 6, [0, 1, 2, 3, 4, 5])
    P = build_normal_form(rs)
    assert P.G == Matrix.identity(6)
    assert P.F == Matrix.diagonal([0, 1, 2, 3, 4, 5])
    assert str(segre_symbol(P)) == "[111111]"


def test_round_trip_2211():
    rs = RootedSymbol([(2,), (2,), (1,), (1,)], [0, 1, 2, 3])
    P = build_normal_form(rs)
    assert str(segre_symbol(P)) == "[2211]"


def test_round_trip_21_11_1():
    rs = RootedSymbol([(2, 1), (1, 1), (1,)], [0, 1, 2])
    P = build_normal_form(rs)
    assert str(segre_symbol(P)) == "[(21)(11)1]"


def test_round_trip_all_table_symbols_random_roots(rng):
    for symstr in CASE_SYMBOLS.values():
        sym = SegreSymbol.from_string(symstr)
        roots = distinct_scalars(rng, sym.r)
        P = build_normal_form(RootedSymbol(sym.brackets, roots))
        assert segre_symbol(P) == sym


def test_root_recovery(rng):
    sym = SegreSymbol.from_string("[(21)21]")
    roots = distinct_scalars(rng, 3)
    rs = RootedSymbol(sym.brackets, roots)
    P = build_normal_form(rs)
    delta = discriminant(P)
    # each root t appears with total multiplicity = bracket weight
    for bracket, t in zip(rs.brackets, rs.roots):
        lin = BinaryForm(1, (ONE, t)).monic()
        assert bf_valuation(delta, lin) == bracket.weight


def test_remark_jordan_form_of_normal_form():
    rs = RootedSymbol([(2, 1), (1, 1), (1,)], [5, 7, 11])
    P = build_normal_form(rs)
    M = (inverse(P.G) * P.F).transpose()
    # literal Jordan matrix: eigenvalues on the diagonal, ones on the
    # superdiagonal inside blocks, in canonical bracket/block order
    expect = [[0] * 6 for _ in range(6)]
    eig_blocks = [(5, 2), (5, 1), (7, 1), (7, 1), (11, 1)]
    pos = 0
    for eig, size in eig_blocks:
        for k in range(size):
            expect[pos + k][pos + k] = eig
            if k + 1 < size:
                expect[pos + k][pos + k + 1] = 1
        pos += size
    assert M == Matrix.from_rows(expect)


def test_builder_validation():
    with pytest.raises(InputError):
        RootedSymbol([(1,)] * 6, [0, 0, 1, 2, 3, 4])  # repeated roots
    with pytest.raises(InputError):
        RootedSymbol([(1,)] * 5, [0, 1, 2, 3, 4])  # weight 5 != 6
    with pytest.raises(InputError):
        RootedSymbol([(1,)] * 6, [0, 1, 2])  # count mismatch


def test_paper_cases_match_table():
    for n, symstr in CASE_SYMBOLS.items():
        assert str(segre_symbol(paper_case(n))) == symstr
    with pytest.raises(InputError):
        paper_case(0)
    with pytest.raises(InputError):
        paper_case(24)


def test_paper_case_20_explicit_form():
    P = paper_case(20)
    assert P.G == Matrix.identity(6)
    l1 = P.F[0, 0]
    assert P.F[1, 1] == l1 and P.F[2, 2] == l1
    assert len({str(P.F[i, i]) for i in (0, 3, 4, 5)}) == 4


def test_paper_case_23_explicit_form():
    P = paper_case(23)
    # G = x1^2 + x2^2 + x3^2 + x4^2 + 2 x5 x6
    assert P.G[0, 0] == ONE and P.G[4, 5] == ONE and not P.G[4, 4]
    # F has the lambda3 block on (x3, x4, x5, x6) and the x5^2 unit
    assert P.F[2, 2] == P.F[3, 3] == P.F[4, 5]
    assert P.F[4, 4] == ONE


def test_default_roots():
    sym = SegreSymbol.from_string("[(111)21]")
    assert [str(r) for r in default_roots(sym)] == ["1", "2", "3"]
