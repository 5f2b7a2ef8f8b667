import json
import random
from fractions import Fraction

import pytest

from arrangements.arrangement import (Arrangement, CanonicalSubspace,
                                      InputError, arrangement_to_document,
                                      complexify, complexified_double,
                                      from_plane_equations, parse_arrangement,
                                      realify)
from arrangements.catalog import (coordinate_cross, diagonal_arrangement,
                                  generic_lines, k_equal_arrangement)
from arrangements.rationals import QI, QQ, GaussianRational as G


def test_parse_coordinate_cross():
    doc = {"ambient_dim": 2, "field": "Q",
           "planes": [{"label": "x", "equations": [["1", "0", "0"]]},
                      {"label": "y", "equations": [["0", "1", "0"]]}]}
    arr = parse_arrangement(json.dumps(doc))
    assert arr.m == 2 and arr.ambient_dim == 2 and arr.field is QQ
    assert arr.labels == ("x", "y")


def test_parse_rejects_inconsistent_plane():
    doc = {"ambient_dim": 1, "field": "Q",
           "planes": [{"label": "bad", "equations": [["1", "0"], ["1", "1"]]}]}
    with pytest.raises(InputError, match="bad"):
        parse_arrangement(json.dumps(doc))


def test_parse_diagonal_over_gaussians():
    doc = {"ambient_dim": 3, "field": "Q(i)", "planes": [
        {"equations": [["1", "-1", "0", "0"]]},
        {"equations": [["1", "0", "-1", "0"]]},
        {"equations": [["0", "1", "-1", "0"]]}]}
    arr = parse_arrangement(json.dumps(doc))
    assert arr.m == 3 and arr.ambient_dim == 3 and arr.field is QI


def test_parse_diagnostics_name_the_location():
    doc = {"ambient_dim": 2, "field": "Q",
           "planes": [{"equations": [["1", "0"]]}]}
    with pytest.raises(InputError, match=r"planes\[0\].equations\[0\]"):
        parse_arrangement(json.dumps(doc))
    with pytest.raises(InputError, match="line 1"):
        parse_arrangement("{not json")


def test_document_roundtrip():
    arr = generic_lines(3)
    doc = arrangement_to_document(arr)
    again = parse_arrangement(json.dumps(doc))
    assert arrangement_to_document(again) == doc


def test_duplicate_planes_rejected():
    with pytest.raises(InputError, match="coincide"):
        from_plane_equations(QQ, 2, [
            [([Fraction(1), Fraction(0)], Fraction(0))],
            [([Fraction(2), Fraction(0)], Fraction(0))]])


def test_canonical_subspace_equality_is_set_equality():
    a = CanonicalSubspace.from_equations(
        QQ, 2, [([Fraction(1), Fraction(1)], Fraction(1))])
    b = CanonicalSubspace.from_equations(
        QQ, 2, [([Fraction(2), Fraction(2)], Fraction(2))])
    assert a == b and hash(a) == hash(b)
    c = a.intersect(CanonicalSubspace.from_equations(
        QQ, 2, [([Fraction(1), Fraction(-1)], Fraction(0))]))
    assert c.dim == 0
    assert c.contains_point((Fraction(1, 2), Fraction(1, 2)))


def test_containment_order():
    plane = CanonicalSubspace.from_equations(
        QQ, 3, [([Fraction(0), Fraction(0), Fraction(1)], Fraction(0))])
    line = CanonicalSubspace.from_equations(
        QQ, 3, [([Fraction(0), Fraction(0), Fraction(1)], Fraction(0)),
                ([Fraction(0), Fraction(1), Fraction(0)], Fraction(0))])
    assert plane.contains(line) and not line.contains(plane)


def test_realify_single_point_in_c1():
    pt = from_plane_equations(QI, 1, [[([G(1)], G(0))]])
    real = realify(pt)
    assert real.ambient_dim == 2
    assert real.planes[0].dim == 0


def test_realify_diagonal_plane_dims_double():
    a22 = k_equal_arrangement(2, 2)
    real = realify(a22)
    assert real.ambient_dim == 4 and real.m == 1
    assert real.planes[0].dim == 2


def test_realify_two_generic_complex_lines():
    arr = from_plane_equations(QI, 2, [
        [([G(1), G(0)], G(0))], [([G(0), G(1)], G(0))]])
    real = realify(arr)
    assert [p.dim for p in real.planes] == [2, 2]
    meet = real.planes[0].intersect(real.planes[1])
    assert meet.dim == 0


def test_realify_respects_complex_coefficients():
    # z = i w, a genuinely complex line in C^2
    arr = from_plane_equations(QI, 2, [[([G(1), G(0, -1)], G(0))]])
    real = realify(arr)
    assert real.planes[0].dim == 2
    # the point (w=1, z=i) lies on it: coordinates (x1,y1,x2,y2)=(0,1,1,0)
    assert real.planes[0].contains_point(
        (Fraction(0), Fraction(1), Fraction(1), Fraction(0)))


def test_complexified_double_of_cross():
    arr = complexified_double(coordinate_cross(2))
    assert arr.ambient_dim == 4 and arr.m == 2
    assert arr.complex_source is not None


def test_max_planes_cap():
    planes = [[([Fraction(1), Fraction(t)], Fraction(0))] for t in range(65)]
    with pytest.raises(Exception, match="64"):
        from_plane_equations(QQ, 2, planes)


def test_central_detection():
    assert diagonal_arrangement(3).is_central()
    assert not generic_lines(3).is_central()
