"""Smoke tests for the python module."""

import os
import sys

module_dir = os.environ.get("KSCHUR_MODULE_DIR")
if module_dir:
    sys.path.insert(0, module_dir)

try:
    import kschur as ks
except ImportError:
    import _kschur as ks


def test_partitions():
    assert ks.conjugate([4, 4, 4, 2, 1]) == [5, 3, 3, 3]
    assert ks.dominates([2, 2, 1, 1], [3, 2, 1])
    assert not ks.dominates([3, 1], [2, 2])
    assert ks.hook_length([4, 4, 4, 2, 1], 3, 1) == 6
    assert ks.residue(4, 2, 3) == 2
    assert ks.sort_to_partition([0, 0, 3]) == [3]


def test_cores():
    cc = ks.bounded_to_core([4, 4, 4, 2, 1], 5)
    assert cc["core"] == [9, 6, 5, 2, 1]
    assert cc["shifts"] == [5, 2, 1, 0, 0]
    assert ks.core_to_bounded([9, 6, 5, 2, 1], 5) == [4, 4, 4, 2, 1]
    assert ks.is_core([9, 6, 5, 2, 1], 5)
    assert not ks.is_core([3], 2)
    assert ks.apply_generator([], 2, 0, "add") == [1]


def test_tableaux():
    t = ks.build_kssyt([4, 4, 4, 2, 1], [3, 3, 3, 3, 3], 5)
    assert t["rows"][0] == [1, 1, 1, 2, 3, 4, 4, 5, 5]
    assert t["k_weight"] == [3, 3, 3, 3, 3]
    assert ks.k_kostka([3, 2, 1, 1], [1, 2, 1, 2, 1], 3) == 2
    assert ks.kostka([2, 1], [1, 1, 1]) == 2
    assert len(ks.enumerate_kssyts([3, 2, 1, 1], [1, 2, 1, 2, 1], 3)) == 2


def test_expansions():
    assert ks.schur_monomials([2, 1]) == {(2, 1): 1, (1, 1, 1): 2}
    dual = ks.dual_k_schur_monomials([3, 2, 1, 1], 3)
    assert dual[(2, 2, 1, 1, 1)] == 2
    f = ks.affine_stanley_monomials([2, 1, 0, 2], 2)
    assert f == {(1, 1, 1, 1): 1, (2, 1, 1): 1, (2, 2): 1}
    assert ks.decompose_in_basis(f, 4, "schur") == {(2, 2): 1, (1, 1, 1, 1): -1}
    assert ks.mu_of(ks.from_word([2, 1, 0, 2], 2), 2) == [2, 2]


def test_polytopes():
    points = ks.permutahedron_points([2, 1], 3)
    assert len(points) == 7
    assert ks.is_m_convex(points, 3)
    assert ks.m_convex_witness([[2, 0], [0, 2]], 2) == ([0, 2], [2, 0], 1)
    assert ks.is_snp_symmetric(ks.schur_monomials([2, 1]), 3, 3)
    assert ks.lorentzian_check(ks.schur_monomials([2]), 2, 2)
    assert not ks.lorentzian_check({(2,): 1}, 2, 2)
    assert ks.rado_containment([2, 2], [3, 1], 2)


def test_support_equality_small():
    lam = [2, 2, 1]
    dual = ks.dual_k_schur_monomials(lam, 2)
    schur = ks.schur_monomials(lam)
    for n in (3, 4, 5):
        assert ks.support(dual, 5, n) == ks.support(schur, 5, n)
        assert ks.support(dual, 5, n) == ks.permutahedron_points(lam, n)


def test_cylindric():
    f = ks.cylindric_skew_schur_monomials(5, 2, [5, 4], [2, 1])
    assert f[(2, 2, 1, 1)] >= 1
    assert ks.is_321_avoiding([2, 1, 0, 2], 2)
