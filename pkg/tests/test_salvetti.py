import pytest
from fractions import Fraction

from arrangements.arrangement import (InputError, SizeLimitError,
                                      complexified_double,
                                      from_plane_equations)
from arrangements.catalog import (coordinate_cross, diagonal_arrangement,
                                  generic_lines, grid_lines, parallel_lines)
from arrangements.gm import gm_report
from arrangements.rationals import QQ
from arrangements.salvetti import (SalvettiCellCensus, imaginary_wedge_census,
                                   salvetti_census)


def test_point_in_complex_line():
    arr = from_plane_equations(QQ, 1, [[([Fraction(1)], Fraction(0))]])
    census = salvetti_census(arr)
    assert census.counts == {2: 2, 1: 2}
    assert census.euler_characteristic() == 1


def test_all_plus_cell_is_top_dimensional():
    arr = generic_lines(3)
    census = salvetti_census(arr)
    cells = dict(census.cells)
    assert cells["+++"] == 4


def test_census_against_face_counts_three_generic_lines():
    census = salvetti_census(generic_lines(3))
    # 7 regions, 9 real edges (x2 imaginary sides), 3 vertices (x4 cones)
    assert census.counts == {4: 7, 3: 18, 2: 12}


def test_degenerate_sign_sequences_get_computed_dimensions():
    # three concurrent lines: the all-up cell at the common point is
    # 2-dimensional although three imaginary constraints are active
    arr = from_plane_equations(QQ, 2, [
        [([Fraction(1), Fraction(0)], Fraction(0))],
        [([Fraction(0), Fraction(1)], Fraction(0))],
        [([Fraction(1), Fraction(1)], Fraction(0))]])
    census = salvetti_census(arr)
    cells = dict(census.cells)
    assert cells["uuu"] == 2
    assert census.euler_characteristic() == \
        2 + gm_report(complexified_double(arr)).reduced_euler()


def test_census_euler_matches_complement_cohomology():
    for arr in (generic_lines(2), generic_lines(3), parallel_lines(2),
                coordinate_cross(2), grid_lines(2, 2)):
        census = salvetti_census(arr)
        report = gm_report(complexified_double(arr))
        assert census.euler_characteristic() == 2 + report.reduced_euler()


def test_census_size_cap():
    planes = [[([Fraction(1), Fraction(t)], Fraction(0))] for t in range(13)]
    arr = from_plane_equations(QQ, 2, planes)
    with pytest.raises(SizeLimitError):
        salvetti_census(arr)


def test_census_json_roundtrip():
    census = salvetti_census(generic_lines(2))
    again = SalvettiCellCensus.from_json(census.to_json())
    assert again == census


def test_imaginary_wedges_three_generic_lines():
    census = imaginary_wedge_census(generic_lines(3))
    assert census.borel_moore_ranks() == {4: 1, 3: 3, 2: 3}
    dims = sorted(c.dim for c in census.cells)
    assert dims == [2, 2, 2, 3, 3, 3, 4]


def test_imaginary_wedge_single_hyperplane():
    arr = from_plane_equations(QQ, 3, [[([Fraction(1), Fraction(0), Fraction(0)],
                                          Fraction(2))]])
    census = imaginary_wedge_census(arr)
    assert census.borel_moore_ranks() == {6: 1, 5: 1}


def test_imaginary_wedge_rejects_non_normal_crossing():
    with pytest.raises(InputError, match="normal crossings"):
        imaginary_wedge_census(from_plane_equations(QQ, 2, [
            [([Fraction(1), Fraction(0)], Fraction(0))],
            [([Fraction(0), Fraction(1)], Fraction(0))],
            [([Fraction(1), Fraction(1)], Fraction(0))]]))


def test_wedge_ranks_alexander_dual_to_gm():
    for arr in (generic_lines(3), generic_lines(4), grid_lines(3, 2),
                parallel_lines(3), coordinate_cross(3)):
        census = imaginary_wedge_census(arr)
        n = arr.ambient_dim
        report = gm_report(complexified_double(arr))
        ranks = census.borel_moore_ranks()
        for p in range(0, n + 1):
            expected = report.rank(p) + (1 if p == 0 else 0)
            assert ranks.get(2 * n - p, 0) == expected, (arr.labels, p)
        assert report.is_torsion_free()
