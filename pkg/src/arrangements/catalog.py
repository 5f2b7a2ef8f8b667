"""Ready-made arrangements used across tests, demos, and documentation."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .arrangement import Arrangement, from_plane_equations
from .rationals import QI, QQ, GaussianRational


def coordinate_cross(n: int, field=QQ) -> Arrangement:
    """The n coordinate hyperplanes x_i = 0."""
    planes, labels = [], []
    for i in range(n):
        row = [field.zero()] * n
        row[i] = field.one()
        planes.append([(row, field.zero())])
        labels.append(f"x{i + 1}=0")
    return from_plane_equations(field, n, planes, labels)


def diagonal_arrangement(n: int, field=QI) -> Arrangement:
    """All hyperplanes x_i = x_j in n coordinates (the braid arrangement)."""
    planes, labels = [], []
    for i, j in combinations(range(n), 2):
        row = [field.zero()] * n
        row[i] = field.one()
        row[j] = field.zero() - field.one()
        planes.append([(row, field.zero())])
        labels.append(f"V{i + 1}{j + 1}")
    return from_plane_equations(field, n, planes, labels)


def k_equal_arrangement(n: int, k: int, field=QI) -> Arrangement:
    """Planes x_{i_1} = ... = x_{i_k} over all k-subsets."""
    planes, labels = [], []
    for subset in combinations(range(n), k):
        eqs = []
        for a, b in zip(subset, subset[1:]):
            row = [field.zero()] * n
            row[a] = field.one()
            row[b] = field.zero() - field.one()
            eqs.append((row, field.zero()))
        planes.append(eqs)
        labels.append("V(" + ",".join(str(i + 1) for i in subset) + ")")
    return from_plane_equations(field, n, planes, labels)


def generic_lines(m: int) -> Arrangement:
    """m lines in the real plane tangent to the moment curve: no two
    parallel, no three concurrent."""
    planes, labels = [], []
    for t in range(1, m + 1):
        planes.append([([Fraction(1), Fraction(t)], Fraction(t * t))])
        labels.append(f"t={t}")
    return from_plane_equations(QQ, 2, planes, labels)


def generic_complex_hyperplanes(m: int, n: int) -> Arrangement:
    """m hyperplanes in C^n on the moment curve, generic by construction."""
    planes, labels = [], []
    for t in range(1, m + 1):
        row = [GaussianRational(t ** k, 0) for k in range(n)]
        planes.append([(row, GaussianRational(t ** n, 0))])
        labels.append(f"t={t}")
    return from_plane_equations(QI, n, planes, labels)


def central_generic_complex(m: int, n: int) -> Arrangement:
    """m central hyperplanes in C^n with every min(|I|, n) rank generic."""
    planes, labels = [], []
    for t in range(1, m + 1):
        row = [GaussianRational(t ** k, 0) for k in range(n)]
        planes.append([(row, GaussianRational(0, 0))])
        labels.append(f"t={t}")
    return from_plane_equations(QI, n, planes, labels)


def parallel_lines(m: int, direction=(1, 0)) -> Arrangement:
    planes = [[([Fraction(direction[0]), Fraction(direction[1])], Fraction(c))]
              for c in range(m)]
    return from_plane_equations(QQ, 2, planes)


def grid_lines(nx: int, ny: int) -> Arrangement:
    """nx vertical and ny horizontal lines; (nx-1)(ny-1) bounded boxes."""
    planes = []
    for c in range(nx):
        planes.append([([Fraction(1), Fraction(0)], Fraction(c))])
    for c in range(ny):
        planes.append([([Fraction(0), Fraction(1)], Fraction(c))])
    return from_plane_equations(QQ, 2, planes)


def line_through_origin_pencil(m: int) -> Arrangement:
    """m distinct lines through the origin of the real plane."""
    planes = []
    for t in range(m):
        planes.append([([Fraction(1), Fraction(t)], Fraction(0))]
                      if t else [([Fraction(0), Fraction(1)], Fraction(0))])
    return from_plane_equations(QQ, 2, planes)
