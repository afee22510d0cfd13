"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Every comparison is exact (integers, Gaussian rationals, polynomial
identities); the only tolerances are the stated wall-clock budgets.
Run with `pytest -v tests/test_acceptance.py -s` to see the lines.
"""

import random
import time
from fractions import Fraction

import pytest

from quadcomplex.algebra.matrix import Matrix, adjugate, det
from quadcomplex.algebra.binform import BinaryForm, bf_coprime_basis, bf_gcd, bf_valuation
from quadcomplex.algebra.mpoly import MPoly
from quadcomplex.algebra.scalar import I, ONE, ZERO, Scalar
from quadcomplex.kleincorr import FRAME, to_klein_pencil, wedge_square
from quadcomplex.moduli import (CosingularFamily, cosingular_member,
                                isomorphic, lemma_stab_formula,
                                mobius_equivalent, mobius_matrix_maps,
                                moduli_report, proj_normalized, rho_limit,
                                stabilizer_dim, verify_phi)
from quadcomplex.normalform import RootedSymbol, build_normal_form, paper_case
from quadcomplex.pencil import (Pencil, SegreSymbol, segre_symbol,
                                segre_symbol_jordan, segre_symbol_snf)
from quadcomplex.stability import (OnePS, Quartic, QUARTIC_ZERO_PATTERN,
                                   WITNESS_SL4, WITNESS_SO6, mu_quadric,
                                   mu_quartic, segre_semistable,
                                   unstable_pattern_quadric,
                                   unstable_pattern_quartic)
from quadcomplex.surface import singular_surface, structural_class
from quadcomplex.tables import (CASE_SYMBOLS, TABLE_73,
                                UNSTABLE_IRREDUCIBLE_SYMBOLS)

from conftest import random_congruence, random_scalar


def report(criterion, fn):
    try:
        fn()
    except BaseException:
        print("ACCEPTANCE %s: FAIL" % criterion)
        raise
    print("ACCEPTANCE %s: PASS" % criterion)


def distinct_rationals(rng, count):
    out = []
    while len(out) < count:
        t = Scalar(rng.randint(-30, 30), 0, rng.randint(1, 4))
        if all(t != s for s in out):
            out.append(t)
    return out


def test_criterion_1_segre_round_trip():
    def body():
        rng = random.Random(101)
        t0 = time.time()
        for symstr in CASE_SYMBOLS.values():
            sym = SegreSymbol.from_string(symstr)
            roots = distinct_rationals(rng, sym.r)
            P = build_normal_form(RootedSymbol(sym.brackets, roots))
            assert segre_symbol(P) == sym, symstr
        assert time.time() - t0 < 10.0
    report("1 (Segre round-trip, 23 symbols, < 10 s)", body)


def test_criterion_2_triple_oracle_agreement():
    def body():
        rng = random.Random(202)
        t0 = time.time()
        jobs = []
        for n in CASE_SYMBOLS:
            jobs.append((n, paper_case(n)))
        base = {n: P for n, P in jobs}
        # 23 plain + 200 random congruence transforms
        for n, P in jobs:
            s1, s2, s3 = (segre_symbol(P), segre_symbol_snf(P),
                          segre_symbol_jordan(P))
            assert str(s1) == CASE_SYMBOLS[n]
            assert s1 == s2 == s3
        for k in range(200):
            n = (k % 23) + 1
            P = base[n].transform(random_congruence(rng))
            s1 = segre_symbol(P)
            assert str(s1) == CASE_SYMBOLS[n]
            assert s1 == segre_symbol_snf(P) == segre_symbol_jordan(P)
        assert time.time() - t0 < 60.0
    report("2 (triple-oracle agreement, 23 + 200 instances, < 60 s)", body)


def test_criterion_3_cor_3_3():
    def body():
        for n in CASE_SYMBOLS:
            assert segre_semistable(paper_case(n)), n
        for symstr in UNSTABLE_IRREDUCIBLE_SYMBOLS:
            sym = SegreSymbol.from_string(symstr)
            P = build_normal_form(RootedSymbol(sym.brackets, [2]))
            assert not segre_semistable(P), symstr
    report("3 (Cor 3.3 semistability by bracket count)", body)


def test_criterion_4_witness_weights():
    def body():
        # pattern-true quadric: all surviving entries nonzero
        rows = [[ZERO] * 6 for _ in range(6)]
        survivors = [(1, 3), (2, 3), (2, 4), (3, 3), (3, 4), (3, 5),
                     (4, 4), (4, 5), (5, 5)]
        for val, (i, j) in enumerate(survivors, start=2):
            rows[i][j] = rows[j][i] = Scalar(val)
        Q = Matrix(rows)
        assert unstable_pattern_quadric(Q)
        assert mu_quadric(Q, WITNESS_SO6) == -1
        # pattern-true quartic: all 20 surviving coefficients nonzero
        terms = {}
        c = 2
        for i0 in range(5):
            for i1 in range(5 - i0):
                for i2 in range(5 - i0 - i1):
                    e = (i0, i1, i2, 4 - i0 - i1 - i2)
                    if e not in QUARTIC_ZERO_PATTERN:
                        terms[e] = Scalar(c)
                        c += 1
        q = Quartic(MPoly(4, terms))
        assert unstable_pattern_quartic(q)
        assert mu_quartic(q, WITNESS_SL4) == -1
    report("4 (Prop 3.2 / Lemma 6.1 witnesses give mu = -1)", body)


def test_criterion_5_lemma_4_5():
    def body():
        for n, symstr, *_ in TABLE_73:
            sym = SegreSymbol.from_string(symstr)
            got = stabilizer_dim(paper_case(n))
            r2 = sym.bracket_count_of_length(2)
            r3 = sym.bracket_count_of_length(3)
            if symstr == "[(22)11]":
                assert got == 2, symstr
            else:
                assert got == r2 + 3 * r3, symstr
            assert got == lemma_stab_formula(sym)
    report("5 (Lemma 4.5 stabilizer dimensions, exception [(22)11])", body)


def test_criterion_6_table_73_dimensions():
    def body():
        for n, symstr, mqc, mss, fib in TABLE_73:
            sym = SegreSymbol.from_string(symstr)
            rep = moduli_report(sym)
            assert rep.dim_mqc == sym.r - 2 == mqc, symstr
            assert rep.dim_R - 15 + rep.dim_stab == sym.r - 2, symstr
            assert rep.dim_mss == mss and rep.dim_fiber == fib
    report("6 (Thm 4.7: dim M_qc = r - 2 and dimension bookkeeping)", body)


def test_criterion_7_surface_structure():
    def body():
        t0 = time.time()
        # structural classes of the displayed degenerate cases
        sc19 = structural_class(singular_surface(paper_case(19)))
        assert sc19.kind == "product-of-planes"
        assert sc19.plane_multiplicities() == (1, 1, 1, 1)
        sc20 = structural_class(singular_surface(paper_case(20)))
        assert sc20.kind == "perfect-square" and sc20.square_root_rank == 4
        sc23 = structural_class(singular_surface(paper_case(23)))
        assert sc23.plane_multiplicities() == (2, 2)
        assert sc23.is_square and sc23.square_root_rank == 2
        # adjugate certificate holds entrywise for every case:
        # singular_surface raises if adj(A) != S * p p^t
        for n in CASE_SYMBOLS:
            singular_surface(paper_case(n))
        assert time.time() - t0 < 300.0
    report("7 (surface classes 19/20/23 + adjugate certificate, < 5 min)", body)


def test_criterion_8_f_representative_independence():
    def body():
        rng = random.Random(88)
        for n in (1, 5, 19, 20, 23):
            P = paper_case(n)
            S0 = singular_surface(P).poly.monic()
            for _ in range(5):
                lam = Scalar(rng.randint(-6, 6), 0, rng.randint(1, 3))
                F2 = P.F + P.G.scaled(lam)
                try:
                    shifted = Pencil(F2, P.G)
                except Exception:
                    continue
                assert singular_surface(shifted).poly.monic() == S0, (n, str(lam))
    report("8 (singular surface independent of the F representative)", body)


def test_criterion_9_equivariance():
    def body():
        rng = random.Random(99)
        _, PK = to_klein_pencil(paper_case(1))
        P = Pencil(FRAME.to_plucker(PK.F), FRAME.to_plucker(PK.G))
        S = singular_surface(P).poly
        for _ in range(10):
            M = random_congruence(rng, size=4, steps=6)
            W = wedge_square(M)
            moved = Pencil(W.transpose() * P.F * W, W.transpose() * P.G * W)
            S_moved = singular_surface(moved).poly
            pullback = S.compose_linear([[M[i, j] for j in range(4)]
                                         for i in range(4)])
            assert S_moved.monic() == pullback.monic()
    report("9 (Lemma 7.1 equivariance via the wedge square, 10 instances)", body)


def test_criterion_10_cosingular_suite():
    def body():
        lambdas = [0, 1, 2, 3, 4, 5]
        rhos = [Scalar(6), Scalar(7), Scalar(-1)]
        X = CosingularFamily(lambdas, rhos[0]).base_pencil()
        members = {}
        for rho in rhos:
            C = CosingularFamily(lambdas, rho)
            X_rho = cosingular_member(C)
            members[str(rho)] = X_rho
            # (a) symbol
            assert str(segre_symbol(X_rho)) == "[111111]"
            # (b) phi carries Sigma to Sigma_rho
            assert verify_phi(C)
            # (c) not isomorphic to the base
            assert not isomorphic(X, X_rho).isomorphic
            # (d) mobius-equivalent, and the witness (0,-1;1,-rho) maps the
            # base eigenvalues onto those of -F_rho (same complex)
            res = mobius_equivalent(X, X_rho)
            assert res.equivalent
            paper_witness = ((ZERO, -ONE), (ONE, -rho))
            base_eigs = [Scalar(k) for k in lambdas]
            minus_frho = [-(ONE / (Scalar(l) - rho)) for l in lambdas]
            assert mobius_matrix_maps(paper_witness, base_eigs, minus_frho)
            assert paper_witness[0][0] * paper_witness[1][1] \
                - paper_witness[0][1] * paper_witness[1][0] == ONE
            # (e) limit of the normalized family
            lim = rho_limit(C, Scalar(9))
            target = X.F + Matrix.identity(6).scaled(Scalar(9))
            assert proj_normalized(lim.F) == proj_normalized(target)
        # (c continued) members pairwise non-isomorphic
        keys = list(members)
        for i in range(len(keys)):
            for j in range(i + 1, len(keys)):
                assert not isomorphic(members[keys[i]], members[keys[j]]).isomorphic
    report("10 (cosingular suite: symbol, phi, iso, Mobius, limit)", body)


def test_criterion_11_property_suites():
    def body():
        rng = random.Random(111)
        # field axioms, 50 instances
        for _ in range(50):
            xs = [random_scalar(rng) for _ in range(3)]
            x, y, z = xs
            assert (x + y) + z == x + (y + z)
            assert x * (y + z) == x * y + x * z
            if y:
                assert (x / y) * y == x
        # adjugate identity, 50 instances
        for _ in range(50):
            m = Matrix([[random_scalar(rng, 3) for _ in range(4)]
                        for _ in range(4)])
            assert m * adjugate(m) == Matrix.identity(4).scaled(det(m))
        # coprime-basis reconstruction, 50 instances
        for _ in range(50):
            roots = []
            while len(roots) < 3:
                t = random_scalar(rng, 4)
                if all(t != s for s in roots):
                    roots.append(t)
            forms = []
            for _k in range(2):
                f = BinaryForm.constant(1)
                for t in roots:
                    f = f * BinaryForm(1, (ONE, t)) ** rng.randint(0, 2)
                if f.degree > 0:
                    forms.append(f)
            if not forms:
                continue
            basis = bf_coprime_basis(forms)
            for i in range(len(basis)):
                for j in range(i + 1, len(basis)):
                    assert bf_gcd(basis[i], basis[j]).degree == 0
            for f in forms:
                rebuilt = BinaryForm.constant(1)
                for b in basis:
                    rebuilt = rebuilt * b ** bf_valuation(f, b)
                assert rebuilt.proportional(f)
        # Mobius equivalence is an equivalence relation, 50 triples
        lambdas = [0, 1, 2, 3, 4, 5]
        pool = [CosingularFamily(lambdas, Scalar(r)).base_pencil()] + [
            cosingular_member(CosingularFamily(lambdas, Scalar(r)))
            for r in (6, 7, 8, -1, -2)]
        checked = 0
        for _ in range(50):
            a, b, c = (pool[rng.randrange(len(pool))] for _ in range(3))
            assert mobius_equivalent(a, a).equivalent
            rab = mobius_equivalent(a, b)
            rba = mobius_equivalent(b, a)
            assert rab.equivalent == rba.equivalent
            rbc = mobius_equivalent(b, c)
            rac = mobius_equivalent(a, c)
            if rab.equivalent and rbc.equivalent:
                assert rac.equivalent
            checked += 1
        assert checked == 50
    report("11 (property suites, >= 50 random instances each)", body)
