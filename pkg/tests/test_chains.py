import pytest

from conftest import atlas_graphs
from maghom.chains import (
    SparseIntMatrix,
    boundary_blocks,
    boundary_matrix,
    chain_ranks,
    enumerate_paths,
    faces,
    paths_by_endpoints,
)
from maghom.graph import complete, cycle, wheel
from maghom.linalg import rank_q


def test_c3_generator_counts():
    counts = chain_ranks(cycle(3), 6, 6)
    for k in range(7):
        assert counts[(k, k)] == 3 * 2 ** k


def test_k_above_l_empty():
    assert len(enumerate_paths(cycle(5), 4, 3)) == 0


def test_k2_counts():
    g = complete(2)
    for k in range(6):
        assert len(enumerate_paths(g, k, k)) == 2


def test_c8_first_cell():
    assert len(enumerate_paths(cycle(8), 1, 2)) == 16


def test_dp_counts_match_enumeration():
    g = wheel(5)
    counts = chain_ranks(g, 4, 5)
    for l in range(6):
        for k in range(min(l, 4) + 1):
            assert counts.get((k, l), 0) == len(enumerate_paths(g, k, l))


def test_enumeration_deterministic_and_sorted():
    a = enumerate_paths(cycle(6), 3, 5).paths
    assert a == enumerate_paths(cycle(6), 3, 5).paths
    assert a == sorted(a)


def test_faces_signs():
    g = cycle(4)
    # (0,1,2): removing 1 gives (0,2) of length 2 = 1 + 1, kept with sign -1
    assert faces(g, (0, 1, 2)) == [((0, 2), -1)]
    # (0,1,0) is not a valid face source once 1 is removed (0,0 repeats)
    assert faces(g, (0, 1, 0)) == []


def test_boundary_rejects_k0():
    with pytest.raises(ValueError):
        boundary_matrix(cycle(4), 0, 0)


@pytest.mark.parametrize("g", [cycle(5), cycle(6), wheel(5), complete(4)], ids=str)
def test_boundary_squares_to_zero(g):
    for l in range(1, 6):
        for k in range(2, l + 1):
            assert (boundary_matrix(g, k - 1, l) @ boundary_matrix(g, k, l)).is_zero()


def test_boundary_squares_to_zero_atlas():
    for g in atlas_graphs(5):
        for l in range(2, 5):
            for k in range(2, l + 1):
                assert (boundary_matrix(g, k - 1, l) @ boundary_matrix(g, k, l)).is_zero()


def test_blocks_agree_with_global():
    g = wheel(5)
    for k, l in [(1, 2), (2, 3), (3, 4), (2, 4)]:
        dim, blocks = boundary_blocks(g, k, l)
        m = boundary_matrix(g, k, l)
        assert dim == m.ncols
        assert sum(b.nnz for b in blocks) == m.nnz
        assert sum(rank_q(b) for b in blocks) == rank_q(m)


def test_paths_by_endpoints_partition():
    g = cycle(6)
    parts = paths_by_endpoints(g, 2, 4)
    flat = sorted(p for ps in parts.values() for p in ps)
    assert flat == enumerate_paths(g, 2, 4).paths
    assert all((p[0], p[-1]) == key for key, ps in parts.items() for p in ps)


def test_sparse_dump_roundtrip():
    m = boundary_matrix(cycle(6), 2, 3)
    text = m.dump()
    assert text.splitlines()[0] == f"{m.nrows} {m.ncols} {m.nnz}"
    assert SparseIntMatrix.load(text) == m
    assert SparseIntMatrix.from_dense(m.to_dense()) == m
    assert m.transpose().transpose() == m
