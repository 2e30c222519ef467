"""Exhaustive structure-tensor enumeration and GL-equivalence."""

import pytest

from lie_ncg.catalog import catalog_entry
from lie_ncg.enumeration import (
    algebras_equivalent,
    enumerate_algebras,
    gl_matrices,
    jacobi_tensors,
    orbit_partition,
)
from lie_ncg.errors import CapExceeded
from lie_ncg.gf import field_new


def test_dim2_counts():
    f2 = field_new(2)
    # one pair, 4 coefficient vectors, Jacobi vacuous in dim 2
    algebras = list(enumerate_algebras(2, f2))
    assert len(algebras) == 4
    assert sum(1 for L in algebras if not L.is_abelian()) == 3


def test_dim2_dedupe_single_nonabelian_class():
    f2 = field_new(2)
    reps = [L for L in enumerate_algebras(2, f2, dedupe=True) if not L.is_abelian()]
    assert len(reps) == 1


def test_dim3_f2_jacobi_count_frozen():
    f2 = field_new(2)
    algebras = list(jacobi_tensors(3, f2))
    assert len(algebras) == 120
    assert sum(1 for L in algebras if not L.is_abelian()) == 119


def test_gl_matrix_counts():
    # |GL(2, 2)| = 6, |GL(2, 3)| = 48
    assert len(gl_matrices(2, field_new(2))) == 6
    assert len(gl_matrices(2, field_new(3))) == 48


def test_orbit_sizes_partition_dim2():
    orbits = orbit_partition(2, field_new(2))
    assert sum(size for _, size in orbits) == 4
    sizes = sorted(size for _, size in orbits)
    assert sizes == [1, 3]  # abelian singleton + one non-abelian orbit


def test_algebras_equivalent():
    f2 = field_new(2)
    nonab = [L for L in enumerate_algebras(2, f2) if not L.is_abelian()]
    for L1 in nonab:
        for L2 in nonab:
            assert algebras_equivalent(L1, L2)
    ab = next(L for L in enumerate_algebras(2, f2) if L.is_abelian())
    assert not algebras_equivalent(ab, nonab[0])
    # different fields are never equivalent
    heis2 = catalog_entry("heisenberg_f2").algebra()
    heis3 = catalog_entry("heisenberg_f3").algebra()
    assert not algebras_equivalent(heis2, heis3)


def test_enumeration_scope_caps():
    with pytest.raises(CapExceeded):
        list(enumerate_algebras(4, field_new(2)))
    with pytest.raises(CapExceeded):
        list(enumerate_algebras(2, field_new(4)))


def test_enumerate_accepts_plain_q():
    assert len(list(enumerate_algebras(2, 2))) == 4
