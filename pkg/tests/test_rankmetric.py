import random

import pytest

from qchroma.ff import field_for_order, field_make
from qchroma.grassmann import Subspace, enumerate_subspaces, weight_vectors_lex
from qchroma.matq import (MatrixFq, all_matrices, intersection_dim, is_rref,
                          rank)
from qchroma.rankmetric import (coset_index, coset_representative,
                                gabidulin_build, lift, min_rank_distance,
                                unlift)

F2 = field_make(2, 1)


def _sub(A, B):
    F = A.field
    return MatrixFq(F, tuple(tuple(F.sub(x, y) for x, y in zip(ra, rb))
                             for ra, rb in zip(A.rows, B.rows)))


@pytest.mark.parametrize("q,m,h,d,size", [
    (2, 2, 2, 2, 4),
    (2, 2, 3, 2, 8),
    (3, 2, 2, 2, 9),
])
def test_built_codes_hit_singleton_with_equality(q, m, h, d, size):
    code = gabidulin_build(q, m, h, d)
    assert code.size == size == q ** (h * (m - d + 1))
    words = list(code.codewords())
    assert len(words) == len({w.rows for w in words}) == size
    assert min_rank_distance(code) == d
    # every nonzero word has rank >= d (exhaustive scan, not just the min)
    for w in words:
        if any(any(r) for r in w.rows):
            assert rank(w) >= d


def test_distance_one_code_is_the_full_matrix_space():
    code = gabidulin_build(2, 2, 2, 1)
    assert code.size == 16
    assert {w.rows for w in code.codewords()} == \
        {M.rows for M in all_matrices(F2, 2, 2)}
    assert min_rank_distance(code) == 1


def test_code_is_linear():
    code = gabidulin_build(2, 2, 3, 2)
    words = list(code.codewords())
    wset = {w.rows for w in words}
    for A in words:
        for B in words:
            assert _sub(A, B).rows in wset


def test_build_rejects_bad_parameters():
    with pytest.raises(ValueError):
        gabidulin_build(2, 2, 2, 3)   # d > m
    with pytest.raises(ValueError):
        gabidulin_build(2, 3, 2, 2)   # m > h: transpose the problem instead
    with pytest.raises(ValueError):
        gabidulin_build(2, 2, 2, 0)


def test_coset_partition_of_all_matrices():
    code = gabidulin_build(2, 2, 2, 2)
    fibres = {}
    for A in all_matrices(F2, 2, 2):
        fibres.setdefault(coset_index(code, A), []).append(A)
    assert sorted(fibres) == [0, 1, 2, 3]
    assert all(len(v) == code.size == 4 for v in fibres.values())
    for A in code.codewords():
        assert coset_index(code, A) == 0


def test_coset_index_constant_exactly_on_cosets():
    code = gabidulin_build(2, 2, 2, 2)
    mats = list(all_matrices(F2, 2, 2))
    for A in mats:
        for B in mats:
            same = coset_index(code, A) == coset_index(code, B)
            assert same == code.contains(_sub(A, B))


def test_coset_representative_roundtrip():
    code = gabidulin_build(2, 2, 2, 2)
    reps = [coset_representative(code, i) for i in range(code.num_cosets)]
    assert reps[0] == MatrixFq.zeros(F2, 2, 2)
    for i, R in enumerate(reps):
        assert coset_index(code, R) == i
    for i, A in enumerate(reps):
        for B in reps[i + 1:]:
            assert not code.contains(_sub(A, B))
    with pytest.raises(ValueError):
        coset_representative(code, code.num_cosets)


def test_coset_index_shape_check():
    code = gabidulin_build(2, 2, 2, 2)
    with pytest.raises(ValueError):
        coset_index(code, MatrixFq.zeros(F2, 2, 3))
    with pytest.raises(ValueError):
        coset_index(code, MatrixFq.zeros(field_make(3, 1), 2, 2))


def test_lift_layouts():
    A = MatrixFq.from_indices(F2, [[1, 1, 0], [0, 1, 1]])
    # u = (1,0,1,0,0): identity columns at positions 1 and 3 (1-indexed)
    L = lift((1, 0, 1, 0, 0), A)
    assert L.rows == ((1, 1, 0, 1, 0), (0, 0, 1, 1, 1))
    # leading block of ones reduces to [I | A]
    L = lift((1, 1, 0, 0, 0), A)
    assert L.rows == ((1, 0, 1, 1, 0), (0, 1, 0, 1, 1))
    # zero matrix lifts to standard basis rows
    L = lift((0, 1, 0, 1, 0), MatrixFq.zeros(F2, 2, 3))
    assert L.rows == ((0, 1, 0, 0, 0), (0, 0, 0, 1, 0))
    with pytest.raises(ValueError):
        lift((1, 1, 1, 0, 0), A)      # weight 3 != 2 rows
    with pytest.raises(ValueError):
        lift((1, 0, 1, 0), A)         # A has 3 columns, needs n - m = 2


def test_unlift_roundtrip_every_vertex():
    for t_m in ((2, 4, 2), (3, 4, 2)):
        q, n, m = t_m
        for S in enumerate_subspaces(q, n, m):
            u, A = unlift(S)
            assert u == S.idvec
            assert lift(u, A) == S.basis


def test_unlift_nonpivot_block_example():
    M = MatrixFq.from_indices(F2, [[1, 0, 1, 0, 1, 1],
                                   [0, 1, 1, 0, 0, 1],
                                   [0, 0, 0, 1, 1, 0]])
    u, A = unlift(Subspace(M))
    assert u == (1, 1, 0, 1, 0, 0)
    assert A.rows == ((1, 1, 1), (1, 0, 1), (0, 1, 0))  # columns 3, 5, 6


def test_unlift_full_space_gives_empty_block():
    u, A = unlift(Subspace(MatrixFq.identity(F2, 3)))
    assert u == (1, 1, 1) and A.nrows == 3 and A.ncols == 0


def test_lifting_intersection_law_exhaustive_2_2_2():
    mats = list(all_matrices(F2, 2, 2))
    for u in weight_vectors_lex(4, 2):
        for A in mats:
            for B in mats:
                got = intersection_dim(lift(u, A), lift(u, B))
                assert got == 2 - rank(_sub(A, B))


@pytest.mark.parametrize("q,m,h", [(2, 2, 3), (3, 2, 2)])
def test_lifting_intersection_law_randomized(q, m, h):
    rng = random.Random(4242)
    F = field_for_order(q)
    idvecs = weight_vectors_lex(m + h, m)
    for _ in range(1000):
        u = idvecs[rng.randrange(len(idvecs))]
        A = MatrixFq(F, tuple(tuple(rng.randrange(q) for _ in range(h))
                              for _ in range(m)))
        B = MatrixFq(F, tuple(tuple(rng.randrange(q) for _ in range(h))
                              for _ in range(m)))
        assert intersection_dim(lift(u, A), lift(u, B)) == m - rank(_sub(A, B))


def test_coset_families_are_disjoint_cocliques():
    # RREF-compatible lifts of one coset pairwise intersect trivially,
    # and different cosets give disjoint families
    code = gabidulin_build(2, 2, 2, 2)
    for u in weight_vectors_lex(4, 2):
        families = {}
        for A in all_matrices(F2, 2, 2):
            L = lift(u, A)
            if not is_rref(L):
                continue
            families.setdefault(coset_index(code, A), []).append(Subspace(L))
        assert sum(len(v) for v in families.values()) >= 1
        seen = set()
        for i, fam in families.items():
            assert len(fam) <= code.size
            for a in range(len(fam)):
                assert fam[a] not in seen
                for b in range(a + 1, len(fam)):
                    assert intersection_dim(fam[a].basis, fam[b].basis) == 0
            seen.update(fam)
