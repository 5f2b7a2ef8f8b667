import random
from fractions import Fraction
from itertools import combinations

import pytest

from arrangements.arrangement import SizeLimitError, from_plane_equations, realify
from arrangements.catalog import (central_generic_complex, coordinate_cross,
                                  diagonal_arrangement, generic_lines,
                                  k_equal_arrangement, parallel_lines)
from arrangements.poset import (build_intersection_poset,
                                characteristic_polynomial, dimensional_data,
                                is_ge2_arrangement, is_generic,
                                is_normal_crossings, transversal)
from arrangements.rationals import QI, QQ, GaussianRational as G


def test_cross_poset():
    poset = build_intersection_poset(coordinate_cross(2))
    assert len(poset) == 3
    origin = [n for n in poset.nodes if n.dim == 0][0]
    assert poset.mobius[origin.index] == 1
    assert origin.generators == frozenset({0, 1})


def test_single_hyperplane_poset():
    arr = from_plane_equations(QQ, 2, [[([Fraction(1), Fraction(0)], Fraction(0))]])
    assert len(build_intersection_poset(arr)) == 1


def test_diagonal_a42_poset_shape():
    poset = build_intersection_poset(diagonal_arrangement(4))
    by_codim = {}
    for n in poset.nodes:
        by_codim[n.codim] = by_codim.get(n.codim, 0) + 1
    assert by_codim == {1: 6, 2: 7, 3: 1}
    # the poset is closed under nonempty pairwise intersection
    for a in poset.nodes:
        for b in poset.nodes:
            meet = a.subspace.intersect(b.subspace)
            if not meet.is_empty:
                poset.node_of(meet)


def test_mobius_identity():
    for arr in (diagonal_arrangement(4), generic_lines(4),
                coordinate_cross(3)):
        poset = build_intersection_poset(arr)
        for x in range(len(poset)):
            total = 1  # mu(0,0)
            for y in range(len(poset)):
                if (y, x) in poset.less or y == x:
                    total += poset.mobius[y]
            assert total == 0, f"mobius identity fails at node {x}"


def test_poset_is_lattice_for_central():
    poset = build_intersection_poset(diagonal_arrangement(4))
    n = len(poset)
    for i in range(n):
        for j in range(i + 1, n):
            uppers = [k for k in range(n)
                      if (k == i or (i, k) in poset.less)
                      and (k == j or (j, k) in poset.less)]
            least = [u for u in uppers
                     if all(u == v or (u, v) in poset.less for v in uppers)]
            assert len(least) == 1
            meet = poset.nodes[i].subspace.intersect(poset.nodes[j].subspace)
            assert poset.nodes[least[0]].subspace == meet


def test_dimensional_data_examples():
    sig = dimensional_data(generic_lines(3))
    for i in range(3):
        assert sig[{i}] == 1
    for pair in combinations(range(3), 2):
        assert sig[pair] == 0
    assert sig[{0, 1, 2}] is None

    sig32 = dimensional_data(diagonal_arrangement(3))
    assert sig32[{0, 1}] == 1 and sig32[{0, 1, 2}] == 1


def test_dimensional_data_cap():
    planes = [[([Fraction(1), Fraction(t)], Fraction(0))] for t in range(21)]
    arr = from_plane_equations(QQ, 2, planes)
    with pytest.raises(SizeLimitError):
        dimensional_data(arr)


def test_normal_crossings_and_generic():
    assert is_normal_crossings(parallel_lines(2))
    assert not is_generic(parallel_lines(2))
    assert is_normal_crossings(generic_lines(3))
    assert is_generic(generic_lines(3))
    a32 = diagonal_arrangement(3)
    assert not is_normal_crossings(a32)
    assert not is_generic(a32)
    assert is_normal_crossings(coordinate_cross(3))


def test_transversality():
    arr = coordinate_cross(3)
    poset = build_intersection_poset(arr)
    i = poset.plane_node_index(0)
    j = poset.plane_node_index(1)
    assert transversal(poset, i, j)
    assert not transversal(poset, i, i)

    a32 = diagonal_arrangement(3)
    p32 = build_intersection_poset(a32)
    h = p32.plane_node_index(0)
    k = p32.plane_node_index(2)
    line = max(p32.nodes, key=lambda n: n.codim).index
    assert transversal(p32, h, k)          # codim 1 + 1 = 2, the line
    assert not transversal(p32, h, line)   # codim 1 + 2 != 2

    par = parallel_lines(2)
    pp = build_intersection_poset(par)
    assert not transversal(pp, 0, 1)       # empty intersection


def test_ge2_condition():
    assert not is_ge2_arrangement(build_intersection_poset(coordinate_cross(2)))
    real = realify(diagonal_arrangement(3))
    assert is_ge2_arrangement(build_intersection_poset(real))
    real2 = realify(central_generic_complex(3, 2))
    assert is_ge2_arrangement(build_intersection_poset(real2))


def test_realify_preserves_dimension_signature_doubling():
    arr = diagonal_arrangement(3)
    real = realify(arr)
    sig_c = dimensional_data(arr)
    sig_r = dimensional_data(real)
    for subset, dim in sig_c.table.items():
        if dim is None:
            assert sig_r.table[subset] is None
        else:
            assert sig_r.table[subset] == 2 * dim


def test_plane_containing_another_is_recorded():
    # a plane and a line inside it, in R^3
    plane = [([Fraction(0), Fraction(0), Fraction(1)], Fraction(0))]
    line = [([Fraction(0), Fraction(0), Fraction(1)], Fraction(0)),
            ([Fraction(0), Fraction(1), Fraction(0)], Fraction(0))]
    arr = from_plane_equations(QQ, 3, [plane, line])
    poset = build_intersection_poset(arr)
    assert len(poset) == 2
    i = poset.plane_node_index(0)
    j = poset.plane_node_index(1)
    assert (i, j) in poset.less


def test_characteristic_polynomial_generic_lines():
    poset = build_intersection_poset(generic_lines(3))
    assert characteristic_polynomial(poset) == [3, -3, 1]
