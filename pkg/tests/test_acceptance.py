"""Exit criteria.  Each test is one criterion; the session prints PASS/FAIL per test."""
import json
import random
import time
from pathlib import Path

import pytest

from conftest import random_class, random_twist_product
from lefschetz import (
    AbelianGroup,
    IntegerMatrix,
    PlumbingGraph,
    Surface,
    cokernel,
    fiber_sum,
    fibration_from_word,
    filling_fibration,
    filling_report,
    h1,
    is_symplectic,
    korkmaz_fibration,
    korkmaz_word,
    meyer_cocycle,
    plumbing_boundary_h1,
    signature,
    smith_normal_form,
    twist_matrix,
    twisted_fibration,
    twisted_relator,
    word_matrix,
)
from lefschetz.cli import main
from lefschetz.linalg import determinant, matmul
from lefschetz.wordfile import dumps, parse

pytestmark = pytest.mark.acceptance

FIX = Path(__file__).parent / "fixtures"
ODD, EVEN = (3, 5, 7), (2, 4, 6)


def test_c1_relator_identity():
    start = time.perf_counter()
    for g in range(2, 9):
        assert word_matrix(korkmaz_word(g)).is_identity()
        for n in range(7):
            assert word_matrix(twisted_relator(g, n)).is_identity()
    assert time.perf_counter() - start < 1.0


def _h1_lemma(genera):
    start = time.perf_counter()
    for g in genera:
        for n in range(1, 7):
            assert h1(twisted_fibration(g, n)) == AbelianGroup(g - 2, (n,) if n > 1 else ()), (g, n)
    assert time.perf_counter() - start < 1.0


def test_c2_h1_lemma_odd_genus():
    _h1_lemma(ODD)


def test_c2_h1_lemma_even_genus():
    _h1_lemma(EVEN)


def test_c3_filling_homology_equals_closed():
    for g in ODD + EVEN:
        for n in range(1, 7):
            assert h1(filling_fibration(g, n)) == h1(twisted_fibration(g, n))


def test_c4_signatures():
    start = time.perf_counter()
    assert signature(korkmaz_fibration(3)) == -8
    assert signature(korkmaz_fibration(5)) == -8
    for g in (3, 5):
        for n in (1, 2, 3):
            assert signature(twisted_fibration(g, n)) == -16
    assert signature(korkmaz_fibration(2)) == -4
    for n in (1, 2, 3):
        assert signature(twisted_fibration(2, n)) == -8
    assert time.perf_counter() - start < 30.0


def test_c5_euler_characteristics():
    from lefschetz import euler_characteristic

    for g in ODD + EVEN:
        single = fibration_from_word(korkmaz_word(g), "disk", 1)
        assert euler_characteristic(single) == (11 if g % 2 else 5)
    for g in ODD:
        for n in (1, 4):
            assert euler_characteristic(filling_fibration(g, n)) == 2 * g + 21
    report = filling_report(3, 2)
    assert report.chi == 27 and report.relator_chi == 11
    assert any("W_3 has 16 twists and disk-base chi 11" in note for note in report.notes)


def test_c6_plumbing_and_distinct_fillings():
    for g in range(2, 9):
        p = PlumbingGraph(((g, 0), (0, 2)), ((0, 1),))
        assert plumbing_boundary_h1(p) == AbelianGroup(2 * g)
    for g in (2, 3, 4):
        groups = [filling_report(g, n).h1 for n in range(1, 7)]
        assert len(set(groups)) == len(groups)


def test_c7a_smith_normal_form_1000_random():
    rng = random.Random(1)
    for _ in range(1000):
        m, n = rng.randint(1, 8), rng.randint(1, 8)
        a = [[rng.randint(-20, 20) for _ in range(n)] for _ in range(m)]
        U, D, V = smith_normal_form(a)
        assert matmul(matmul(U, a), V) == D
        assert abs(determinant(U)) == 1 and abs(determinant(V)) == 1
        diag = [D[i][i] for i in range(min(m, n))]
        assert all(D[i][j] == 0 for i in range(m) for j in range(n) if i != j)
        for x, y in zip(diag, diag[1:]):
            assert x >= 0 and ((y == 0) if x == 0 else (y % x == 0))


def test_c7b_cokernel_invariance():
    rng = random.Random(2)
    for _ in range(1000):
        m, n = rng.randint(1, 8), rng.randint(0, 8)
        cols = [[rng.randint(-20, 20) for _ in range(m)] for _ in range(n)]
        ref = cokernel(IntegerMatrix.from_columns(cols, m))
        other = [[-x for x in c] if rng.random() < 0.5 else c for c in rng.sample(cols, len(cols))]
        other += [[0] * m] * rng.randint(0, 2)
        assert cokernel(IntegerMatrix.from_columns(other, m)) == ref


def test_c7c_meyer_cocycle():
    rng = random.Random(3)
    for _ in range(200):
        S = Surface(rng.randint(1, 3))
        a, b, c = (random_twist_product(rng, S, length=rng.randint(1, 4)) for _ in range(3))
        assert meyer_cocycle(a, b) + meyer_cocycle(a @ b, c) == meyer_cocycle(a, b @ c) + meyer_cocycle(b, c)
        assert meyer_cocycle(S.identity(), a) == 0


def test_c7d_twist_matrices():
    rng = random.Random(4)
    for _ in range(500):
        S = Surface(rng.randint(1, 4))
        c = random_class(rng, S)
        f = random_twist_product(rng, S, length=rng.randint(1, 4))
        t = twist_matrix(c)
        assert is_symplectic(t.rows) and is_symplectic(twist_matrix(c, -1).rows)
        assert t @ c == c
        assert twist_matrix(f @ c) == f @ t @ f.inverse()


def test_c7e_signature_additivity():
    for g in (2, 3):
        x = korkmaz_fibration(g)
        a1 = x.surface.a(1)
        for f in (x.surface.identity(), twist_matrix(a1), twist_matrix(a1) ** 3):
            assert signature(fiber_sum(x, x, f)) == 2 * signature(x)


def test_c8_cli_contracts(capsys):
    for g in range(2, 9):
        for w in (korkmaz_word(g), twisted_relator(g, 2)):
            assert parse(dumps(w, "sphere", -1)).word == w
    outs = []
    for _ in range(2):
        assert main(["paper", "--genus", "3", "--twist-power", "3", "--json"]) == 0
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1]
    json.loads(outs[0])
    cases = [
        (["paper", "--genus", "3", "--twist-power", "3"], 0),
        (["paper", "--genus", "1", "--twist-power", "3"], 1),
        (["word", str(FIX / "bad_length.txt")], 2),
        (["word", str(FIX / "sphere_no_section.txt")], 3),
    ]
    for argv, code in cases:
        assert main(argv) == code
        capsys.readouterr()
