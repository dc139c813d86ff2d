import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from posbergman.bergman import (
    chains,
    coarse_cells,
    euler_characteristic,
    f_vector,
    fine_cells,
    is_sphere_euler_char,
    las_vergnas_lattice,
    lattice_of_flats,
)
from posbergman.errors import InputError
from posbergman.initial import (
    Flag,
    all_flags,
    is_positive_flag,
    is_valid_flag,
    matroid_mw,
    representative_weight,
)
from posbergman.om import OrientedMatroid, is_acyclic, mask_of, matroid_of_columns, rank
from posbergman.trees import kn_oriented_matroid


def set_partitions(items):
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for p in set_partitions(rest):
        yield [[first]] + p
        for i in range(len(p)):
            yield p[:i] + [[first] + p[i]] + p[i + 1:]


def merge_chain_count(n):
    """Maximal chains of the partition lattice, by merging two blocks at a time."""
    def count(blocks):
        if blocks == 1:
            return 1
        return blocks * (blocks - 1) // 2 * count(blocks - 1)

    # brute force for small n: walk actual partitions
    def walk(p):
        if len(p) == 1:
            return 1
        total = 0
        for i in range(len(p)):
            for j in range(i + 1, len(p)):
                q = [b for k, b in enumerate(p) if k not in (i, j)] + [p[i] | p[j]]
                total += walk(q)
        return total

    got = walk([frozenset([v]) for v in range(n)])
    assert got == count(n)
    return got


def K(n):
    return kn_oriented_matroid(n)[0]


# ---------------------------------------------------------------------------
# lattices


@pytest.mark.parametrize("n", [3, 4, 5])
def test_flats_of_kn_are_partitions(n):
    lat = lattice_of_flats(K(n))
    assert len(lat) == sum(1 for _ in set_partitions(range(n)))
    assert lat.bottom == 0 and lat.top == (1 << (n * (n - 1) // 2)) - 1


def test_boolean_lattice():
    lat = lattice_of_flats(OrientedMatroid(2))
    assert len(lat) == 4
    assert list(lat.ranks) == [0, 1, 1, 2]


def test_example_flats_graded(ex_matroid):
    lat = lattice_of_flats(ex_matroid)
    assert len(lat) == 15
    for a, b in lat.covers():
        assert lat.ranks[lat.masks.index(b)] == lat.ranks[lat.masks.index(a)] + 1


def test_las_vergnas_example(ex_matroid):
    lat = las_vergnas_lattice(ex_matroid)
    assert set(lat.elements) == {frozenset(F) for F in
                                 [(), (1,), (4,), (6,), (1, 6), (1, 2, 4), (4, 5, 6), range(1, 7)]}
    atoms = [m for m in lat.proper_part() if bin(m).count("1") == 1]
    coatoms = [m for m in lat.proper_part() if bin(m).count("1") > 1]
    assert sorted(atoms) == sorted(mask_of([e]) for e in (1, 4, 6))
    for c in coatoms:
        assert sum(1 for a in atoms if a & c == a) == 2
    # order embedding into the lattice of flats
    assert set(lat.masks) <= set(lattice_of_flats(ex_matroid).masks)
    assert len(fine_cells(ex_matroid, positive=True).maximal) == 6


def test_las_vergnas_needs_acyclic():
    with pytest.raises(InputError):
        las_vergnas_lattice(OrientedMatroid.from_signs(2, [(1, 2)]))


def test_rank_one_coloop():
    M = OrientedMatroid(1)
    lat = las_vergnas_lattice(M)
    assert lat.elements == [frozenset(), frozenset({1})]
    s = fine_cells(M, positive=True)
    assert s.cells == [] and s.f_vector == [] and s.euler_char == 0
    assert is_sphere_euler_char(0, rank(M))


def test_chains_small():
    # a 3-element chain poset {1} < {1,2} < {1,2,3}
    c = chains([0b1, 0b11, 0b111])
    assert len(c) == 7


# ---------------------------------------------------------------------------
# fine cells


def test_k4_positive_fine():
    s = fine_cells(K(4), positive=True)
    assert len(s.maximal) == 6
    assert s.f_vector == [6, 6] and s.euler_char == 0


def test_k4_fine():
    s = fine_cells(K(4))
    assert len(s.maximal) == 18 == merge_chain_count(4)
    assert s.f_vector == [13, 18]
    assert euler_characteristic(s) == -5 == 1 - 6  # wedge of 6 circles
    assert s.fine_cells_by_dim == {0: 13, 1: 18}


def test_k5_positive_sphere():
    s = fine_cells(K(5), positive=True)
    assert s.euler_char == 2 and len(s.maximal) == 24
    assert is_sphere_euler_char(s.euler_char, rank(K(5)))


def test_k5_fine_count():
    assert len(fine_cells(K(5), check=False).maximal) == 180 == merge_chain_count(5)


def test_example_sphere(ex_matroid):
    s = fine_cells(ex_matroid, positive=True)
    assert s.euler_char == 0


def test_loops_give_empty_fan():
    M = OrientedMatroid.from_signs(2, [(1,)])
    assert fine_cells(M).cells == []
    assert fine_cells(OrientedMatroid.from_signs(2, [(1, 2)]), positive=True).cells == []


def test_positive_is_subcomplex():
    M = K(4)
    pos = set(fine_cells(M, positive=True).cells)
    allc = set(fine_cells(M).cells)
    assert pos <= allc


def test_fine_cells_bidirectional_k4():
    """Chains of positive flats are exactly the positive flags (and likewise unsigned)."""
    M = K(4)
    pos = set(fine_cells(M, positive=True).cells) | {Flag(6, ())}
    val = set(fine_cells(M).cells) | {Flag(6, ())}
    for F in all_flags(6):
        assert (F in pos) == is_positive_flag(M, F, 2)
        assert (F in val) == is_valid_flag(M, F, 2)


def random_acyclic_realizable(rng, r, n):
    """Random point configuration: columns (1, x) so that the all-ones row keeps it acyclic."""
    while True:
        A = [[1] * n] + [[rng.randint(-3, 3) for _ in range(n)] for _ in range(r - 1)]
        if np.linalg.matrix_rank(np.array(A, dtype=float)) == r:
            M = matroid_of_columns(A)
            if not any(len(c.support) <= 2 for c in M.circuits):
                return M


@settings(max_examples=12, deadline=None)
@given(st.integers(0, 2 ** 31), st.integers(2, 4), st.integers(4, 7))
def test_random_realizable_sphere(seed, r, n):
    rng = random.Random(seed)
    M = random_acyclic_realizable(rng, r, max(n, r))
    assert is_acyclic(M)
    s = fine_cells(M, positive=True)
    assert is_sphere_euler_char(s.euler_char, rank(M))


# ---------------------------------------------------------------------------
# coarse cells


def test_k4_positive_coarse_pentagon():
    s = coarse_cells(K(4), positive=True)
    full = s.full_dimensional_coarse
    assert len(full) == 5
    # 5 vertices, 5 edges, plus the empty face
    assert sorted(c.dim for c in s.coarse_cells) == [-1] + [0] * 5 + [1] * 5


def test_k4_coarse_all():
    s = coarse_cells(K(4))
    assert len(s.full_dimensional_coarse) == 15 == 5 * 3


def test_one_circuit_single_cell():
    s = coarse_cells(OrientedMatroid.from_signs(2, [(1, -2)]))
    assert len(s.coarse_cells) == 1


def test_coarse_partition_and_constancy():
    M = K(4)
    s = coarse_cells(M, positive=True)
    flags = [f for c in s.coarse_cells for f in c.flags]
    assert len(flags) == len(set(flags)) == len(s.cells) + 1
    for cell in s.coarse_cells:
        for f in cell.flags:
            w = representative_weight(f)
            assert matroid_mw(M, w) == cell.mw
            assert matroid_mw(M, [3 * x + 1 for x in w]) == cell.mw


def test_f_vector_function_matches_property():
    s = fine_cells(K(4))
    assert f_vector(s) == s.f_vector
