import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Matrix, ZZ as SZ
from sympy.matrices.normalforms import invariant_factors

from maghom.chains import SparseIntMatrix
from maghom.linalg import (
    dense_smith_factors,
    elementary_divisors,
    normalize_factors,
    rank,
    rank_mod,
    rank_q,
    smith_normal_form,
    torsion_invariants,
)


def snf(rows):
    return smith_normal_form(SparseIntMatrix.from_dense(rows))


def test_small_snf():
    s = snf([[2, 4], [6, 8]])
    assert s.factors == (2, 4)
    assert s.torsion == (2, 4)


def test_zero_and_identity():
    assert snf([[0, 0], [0, 0]]).rank == 0
    s = snf([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert (s.rank, s.torsion) == (3, ())


def test_rank_depends_on_field():
    m = SparseIntMatrix.from_dense([[2]])
    assert rank_q(m) == 1
    assert rank_mod(m, 2) == 0
    assert rank(m, 3) == 1


def test_composite_prime_rejected():
    with pytest.raises(ValueError):
        rank_mod(SparseIntMatrix.from_dense([[1]]), 4)


def test_normalize_and_elementary():
    assert normalize_factors([6, 4, 1]) == (1, 2, 12)
    assert torsion_invariants([6, 4]) == (2, 12)
    assert elementary_divisors([12, 2]) == {2: 1, 4: 1, 3: 1}


def _rand_matrix(rng, r, c, density, lo=-3, hi=3):
    return [[rng.randint(lo, hi) if rng.random() < density else 0 for _ in range(c)] for _ in range(r)]


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 7), st.integers(1, 7), st.floats(0.2, 1.0), st.integers(0, 10 ** 6))
def test_snf_matches_sympy(r, c, density, seed):
    rows = _rand_matrix(random.Random(seed), r, c, density)
    want = [abs(int(x)) for x in invariant_factors(Matrix(rows), domain=SZ) if x != 0]
    s = snf(rows)
    assert s.rank == len(want)
    assert s.torsion == tuple(x for x in want if x > 1)
    assert rank_q(SparseIntMatrix.from_dense(rows)) == Matrix(rows).rank()


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 8), st.integers(2, 8), st.integers(0, 10 ** 6))
def test_snf_permutation_invariant(r, c, seed):
    rng = random.Random(seed)
    rows = _rand_matrix(rng, r, c, 0.6, -5, 5)
    pr, pc = list(range(r)), list(range(c))
    rng.shuffle(pr)
    rng.shuffle(pc)
    perm = [[rows[i][j] for j in pc] for i in pr]
    a, b = snf(rows), snf(perm)
    assert (a.rank, a.torsion) == (b.rank, b.torsion)


def test_dense_factors_divisibility():
    rng = random.Random(7)
    for _ in range(30):
        f = [x for x in dense_smith_factors(_rand_matrix(rng, 5, 6, 0.7, -9, 9)) if x]
        assert all(b % a == 0 for a, b in zip(f, f[1:]))


def test_timeout():
    from maghom.linalg import CellTimeout
    import time
    m = SparseIntMatrix.from_dense(_rand_matrix(random.Random(1), 60, 60, 0.5, -9, 9))
    with pytest.raises(CellTimeout):
        smith_normal_form(m, deadline=time.monotonic() - 1)
