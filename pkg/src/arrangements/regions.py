"""Regions of a real hyperplane arrangement, with exact witnesses.

Regions are enumerated by inserting hyperplanes one at a time: each region
of the partial arrangement either stays on one side of the new hyperplane
or splits in two, and feasibility of each side is decided exactly.  Every
region carries a rational witness point and a boundedness flag; bounded
means the recession cone of the region is the origin alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arrangement import Arrangement, InputError
from .linalg import Matrix, kernel_basis
from .polyhedra import Constraint, find_point, greater_than, less_than
from .rationals import QQ


@dataclass(frozen=True)
class Region:
    """An open region as a sign vector over the hyperplanes, with witness."""

    signs: tuple       # '+' or '-' per hyperplane
    witness: tuple     # rational point satisfying the strict sign conditions
    bounded: bool

    def sign_string(self):
        return "".join(self.signs)

    def to_json(self):
        return {"signs": self.sign_string(),
                "witness": [QQ.to_json(x) for x in self.witness],
                "bounded": self.bounded}


def _hyperplane_data(arr: Arrangement):
    if arr.field is not QQ:
        raise InputError("region enumeration works on real arrangements")
    arr.require_hyperplanes("region enumeration")
    return arr.hyperplane_rows()


def _side_constraints(rows, signs):
    out = []
    for (coeffs, rhs), s in zip(rows, signs):
        if s == "+":
            out.append(greater_than(coeffs, rhs))
        else:
            out.append(less_than(coeffs, rhs))
    return out


def _recession_cone_is_origin(rows, signs, nvars):
    """True when s_j a_j . x >= 0 for all j forces x = 0."""
    normals = Matrix(QQ, [r for r, _ in rows], ncols=nvars)
    if kernel_basis(normals):
        return False  # a whole line of recession directions
    cone = []
    for (coeffs, _), s in zip(rows, signs):
        if s == "+":
            cone.append(Constraint([-c for c in coeffs], 0, False))
        else:
            cone.append(Constraint(coeffs, 0, False))
    for i in range(nvars):
        for value in (Fraction(1), Fraction(-1)):
            probe = [Fraction(0)] * nvars
            probe[i] = Fraction(1)
            fix = [Constraint(probe, value, False),
                   Constraint([-x for x in probe], -value, False)]
            if find_point(cone + fix, nvars) is not None:
                return False
    return True


def enumerate_regions(arr: Arrangement):
    """All open regions of the complement, in deterministic sign order."""
    rows = _hyperplane_data(arr)
    n = arr.ambient_dim
    partial = [("", tuple([Fraction(0)] * n))]  # sign prefix, witness
    for j, (coeffs, rhs) in enumerate(rows):
        prefix_rows = rows[:j + 1]
        grown = []
        for signs, witness in partial:
            value = sum(c * x for c, x in zip(coeffs, witness))
            candidates = []
            if value > rhs:
                candidates.append((signs + "+", witness))
                candidates.append((signs + "-", None))
            elif value < rhs:
                candidates.append((signs + "-", witness))
                candidates.append((signs + "+", None))
            else:
                candidates.append((signs + "+", None))
                candidates.append((signs + "-", None))
            for new_signs, w in candidates:
                if w is None:
                    cons = _side_constraints(prefix_rows, new_signs)
                    w = find_point(cons, n)
                    if w is None:
                        continue
                grown.append((new_signs, w))
        partial = grown
    out = []
    for signs, witness in sorted(partial):
        bounded = _recession_cone_is_origin(rows, signs, n)
        out.append(Region(signs=tuple(signs), witness=witness, bounded=bounded))
    return out


def count_regions(arr: Arrangement) -> int:
    return len(enumerate_regions(arr))


def count_bounded(arr: Arrangement) -> int:
    return sum(1 for r in enumerate_regions(arr) if r.bounded)


def restriction_to_hyperplane(arr: Arrangement, j: int) -> Arrangement | None:
    """The arrangement induced on hyperplane j by the others.

    Parametrizes the hyperplane and restricts every other hyperplane to it,
    dropping empty traces and collapsing duplicates.  Returns None when no
    hyperplane leaves a trace.
    """
    rows = _hyperplane_data(arr)
    n = arr.ambient_dim
    coeffs, rhs = rows[j]
    from .linalg import solve_affine
    sol = solve_affine(Matrix(QQ, [coeffs], ncols=n), [rhs])
    point, basis = sol
    d = len(basis)
    from .arrangement import CanonicalSubspace
    planes = []
    seen = set()
    for i, (c2, b2) in enumerate(rows):
        if i == j:
            continue
        new_coeffs = [sum(c * v for c, v in zip(c2, vec)) for vec in basis]
        new_rhs = b2 - sum(c * x for c, x in zip(c2, point))
        if all(x == 0 for x in new_coeffs):
            continue  # parallel: empty trace on the hyperplane
        sub = CanonicalSubspace.from_equations(QQ, d, [(new_coeffs, new_rhs)])
        if sub.key() in seen:
            continue
        seen.add(sub.key())
        planes.append(sub)
    if not planes:
        return None
    return Arrangement(QQ, d, planes)
