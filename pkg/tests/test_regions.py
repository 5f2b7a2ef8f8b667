import random
from fractions import Fraction
from math import comb

import pytest

from arrangements.arrangement import InputError, from_plane_equations
from arrangements.catalog import (coordinate_cross, generic_lines, grid_lines,
                                  line_through_origin_pencil, parallel_lines)
from arrangements.poset import build_intersection_poset, characteristic_polynomial
from arrangements.regions import (count_bounded, count_regions,
                                  enumerate_regions, restriction_to_hyperplane)
from arrangements.rationals import QQ

from oracles import zaslavsky_counts


def lines(rows):
    return from_plane_equations(
        QQ, 2, [[([Fraction(a), Fraction(b)], Fraction(c))] for a, b, c in rows])


def test_single_line():
    regions = enumerate_regions(lines([(1, 0, 0)]))
    assert len(regions) == 2
    assert not any(r.bounded for r in regions)


def test_three_generic_lines():
    regions = enumerate_regions(generic_lines(3))
    assert len(regions) == 7
    assert sum(r.bounded for r in regions) == 1


def test_four_generic_lines_hand_counted():
    regions = enumerate_regions(generic_lines(4))
    assert len(regions) == 11
    assert sum(r.bounded for r in regions) == 3


def test_witnesses_satisfy_signs_and_are_distinct():
    for arr in (generic_lines(4), grid_lines(3, 2), parallel_lines(3)):
        rows = arr.hyperplane_rows()
        regions = enumerate_regions(arr)
        assert len({r.signs for r in regions}) == len(regions)
        for r in regions:
            for (coeffs, rhs), s in zip(rows, r.signs):
                value = sum(c * x for c, x in zip(coeffs, r.witness))
                assert (value > rhs) if s == "+" else (value < rhs)


def test_parallel_and_cross_bounded_counts():
    assert count_bounded(parallel_lines(2)) == 0
    assert count_bounded(coordinate_cross(2)) == 0
    assert count_bounded(grid_lines(3, 3)) == 4


def test_generic_line_counts_match_formula():
    for m in range(1, 8):
        arr = generic_lines(m)
        assert count_regions(arr) == 1 + m + comb(m, 2)
        assert count_bounded(arr) == comb(m - 1, 2)


def test_region_counts_match_characteristic_polynomial():
    # an entirely different route: alternating mobius sums
    for arr in (generic_lines(5), grid_lines(3, 2), parallel_lines(4),
                line_through_origin_pencil(4), coordinate_cross(2)):
        coeffs = characteristic_polynomial(build_intersection_poset(arr))
        regions, _ = zaslavsky_counts(coeffs)
        assert count_regions(arr) == regions


def test_bounded_matches_characteristic_polynomial_essential():
    for arr in (generic_lines(4), grid_lines(3, 3), coordinate_cross(2)):
        coeffs = characteristic_polynomial(build_intersection_poset(arr))
        _, bounded = zaslavsky_counts(coeffs)
        assert count_bounded(arr) == bounded


def test_deletion_restriction_recursion():
    rng = random.Random(61)
    for _ in range(5):
        m = rng.randint(2, 5)
        rows = set()
        while len(rows) < m:
            a, b = rng.randint(-2, 2), rng.randint(-2, 2)
            if (a, b) == (0, 0):
                continue
            rows.add((a, b, rng.randint(-2, 2)))
        arr = lines(sorted(rows))
        total = count_regions(arr)
        last = arr.m - 1
        deleted = lines(sorted(rows)[:-1])
        induced = restriction_to_hyperplane(arr, last)
        induced_count = count_regions(induced) if induced else 1
        assert total == count_regions(deleted) + induced_count


def test_regions_require_real_hyperplanes():
    from arrangements.catalog import diagonal_arrangement
    with pytest.raises(InputError):
        enumerate_regions(diagonal_arrangement(3))
