import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import invariant_factors_by_minors
from lefschetz import AbelianGroup, IntegerMatrix, RationalSymmetricForm, cokernel, form_signature, smith_normal_form
from lefschetz.linalg import determinant, identity, invariant_factors, matmul


def check_snf(rows):
    U, D, V = smith_normal_form(rows)
    assert matmul(matmul(U, rows), V) == D
    assert abs(determinant(U)) == 1 and abs(determinant(V)) == 1
    m, n = len(rows), len(rows[0])
    diag = [D[i][i] for i in range(min(m, n))]
    assert all(D[i][j] == 0 for i in range(m) for j in range(n) if i != j)
    assert all(d >= 0 for d in diag)
    for a, b in zip(diag, diag[1:]):
        assert (b == 0) if a == 0 else (b % a == 0)
    return diag


def test_snf_identity_and_zero():
    assert check_snf(identity(3)) == [1, 1, 1]
    assert check_snf([[0, 0], [0, 0], [0, 0]]) == [0, 0]


def test_snf_diag_2_3():
    # oracle: d_1 = gcd of entries, d_1 d_2 = |det|
    assert invariant_factors_by_minors([[2, 0], [0, 3]]) == [1, 6]
    assert check_snf([[2, 0], [0, 3]]) == [1, 6]


def test_snf_matches_minor_oracle(rng):
    for _ in range(60):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        rows = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
        assert check_snf(rows) == invariant_factors_by_minors(rows)


def test_snf_matches_sympy(rng):
    from sympy import ZZ
    from sympy.matrices.normalforms import invariant_factors as sympy_factors
    from sympy import Matrix

    for _ in range(100):
        m, n = rng.randint(1, 7), rng.randint(1, 7)
        rows = [[rng.randint(-20, 20) for _ in range(n)] for _ in range(m)]
        ours = [d for d in check_snf(rows) if d != 0]
        theirs = [abs(int(d)) for d in sympy_factors(Matrix(rows), domain=ZZ) if d != 0]
        assert ours == theirs


def test_snf_survives_random_unimodular_scrambling(rng):
    base = [[2, 0, 0], [0, 6, 0], [0, 0, 0]]
    for _ in range(50):
        rows = [r[:] for r in base]
        for _ in range(20):
            i, j = rng.sample(range(3), 2)
            k = rng.randint(-3, 3)
            if rng.random() < 0.5:
                rows[i] = [x + k * y for x, y in zip(rows[i], rows[j])]
            else:
                for r in rows:
                    r[i] += k * r[j]
        assert check_snf(rows) == [2, 6, 0]


def test_cokernel_examples():
    assert cokernel(IntegerMatrix(2, 0, ((), ()))) == AbelianGroup(2)
    assert cokernel([[7]]) == AbelianGroup(0, (7,))
    e = lambda k: [int(i == k) for i in range(6)]
    cols = [e(2), e(3), [x + y for x, y in zip(e(0), e(4))], [x + y for x, y in zip(e(1), e(5))]]
    # oracle: the four columns are part of a basis (all maximal minors have gcd 1), rank 4
    rows = [list(r) for r in zip(*cols)]
    assert invariant_factors_by_minors(rows) == [1, 1, 1, 1]
    assert cokernel(IntegerMatrix.from_columns(cols, 6)) == AbelianGroup(2)


def test_abelian_group_canonical_form():
    assert AbelianGroup.from_factors([1, 1, 5, 0]) == AbelianGroup(1, (5,))
    assert AbelianGroup.from_factors([1]) == AbelianGroup()
    with pytest.raises(ValueError):
        AbelianGroup(0, (2, 3))
    with pytest.raises(ValueError):
        AbelianGroup(0, (1,))
    assert str(AbelianGroup(1, (5,))) == "Z ⊕ Z_5"
    assert str(AbelianGroup()) == "0"


def test_cokernel_invariance_1000_trials():
    rng = random.Random(11)
    for _ in range(1000):
        m, n = rng.randint(1, 6), rng.randint(0, 6)
        cols = [[rng.randint(-6, 6) for _ in range(m)] for _ in range(n)]
        ref = cokernel(IntegerMatrix.from_columns(cols, m))
        shuffled = cols[:]
        rng.shuffle(shuffled)
        shuffled = [[-x for x in c] if rng.random() < 0.5 else c for c in shuffled]
        shuffled += [[0] * m] * rng.randint(0, 2)
        assert cokernel(IntegerMatrix.from_columns(shuffled, m)) == ref


def test_form_signature_examples():
    assert form_signature([[0] * 3 for _ in range(3)]) == 0
    assert form_signature([[1, 0], [0, -1]]) == 0
    assert form_signature([[-1, 0, 0], [0, -1, 0], [0, 0, 1]]) == -1
    assert form_signature([[0, 1], [1, 0]]) == 0  # needs the rank-2 step
    assert form_signature([]) == 0
    with pytest.raises(ValueError):
        form_signature([[0, 1], [2, 0]])


def _eig_signature(rows):
    import numpy as np

    ev = np.linalg.eigvalsh(np.array(rows, dtype=float))
    return int((ev > 1e-9).sum() - (ev < -1e-9).sum())


def test_form_signature_matches_eigenvalues(rng):
    for _ in range(200):
        n = rng.randint(1, 6)
        a = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        q = [[a[i][j] + a[j][i] for j in range(n)] for i in range(n)]
        assert form_signature(q) == _eig_signature(q)


small = st.integers(-4, 4)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.tuples(
    st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n),
    st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n),
)))
def test_form_signature_congruence_invariant(pair):
    a, p = pair
    n = len(a)
    q = [[Fraction(a[i][j] + a[j][i], 3) for j in range(n)] for i in range(n)]
    if determinant(p) == 0:
        p = [[p[i][j] + (10 if i == j else 0) for j in range(n)] for i in range(n)]
    if determinant(p) == 0:
        return
    pt = [list(r) for r in zip(*p)]
    congruent = matmul(matmul(pt, q), p)
    sig = form_signature(q)
    assert form_signature(congruent) == sig
    assert abs(sig) <= RationalSymmetricForm(tuple(map(tuple, q))).dimension


def test_invariant_factors_helper():
    assert invariant_factors([[12, 6, 4], [3, 9, 6], [2, 16, 14]]) == [1, 10, 30]
