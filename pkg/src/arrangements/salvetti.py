"""Cell censuses for complexified real hyperplane arrangements.

Complexifying a real hyperplane arrangement splits the complement of each
hyperplane into four pieces according to the sign of Re f_j and, on its
zero set, the sign of Im f_j.  Intersecting one piece per hyperplane gives
the sign-sequence cells over the alphabet {+, -, u, d}; together with one
added point they form a cell structure on the one-point compactification
of the complement.  The census records, per real dimension, how many of
the 4^m sequences are nonempty, pruning infeasible prefixes so that only
a neighborhood of the actual cells is ever visited.

For normal crossings there is a far smaller decomposition: one imaginary
wedge per nonempty intersection, of dimension 2N - |I|, whose incidence
structure is trivial, so the Borel-Moore ranks of the complement can be
read off directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arrangement import Arrangement, InputError, SizeLimitError
from .linalg import Matrix, rank
from .polyhedra import equal_to, find_point, greater_than, less_than
from .poset import build_intersection_poset, is_normal_crossings
from .rationals import QQ

SIGN_ALPHABET = ("+", "-", "u", "d")
MAX_SALVETTI_PLANES = 12


@dataclass(frozen=True)
class SalvettiCellCensus:
    """Counts of nonempty sign-sequence cells per real dimension."""

    ambient_complex_dim: int
    counts: dict                # real dimension -> number of cells
    cells: tuple                # (sign string, dimension), deterministic order

    def total_cells(self):
        return sum(self.counts.values())

    def euler_characteristic(self):
        """Of the one-point compactification (the added point included)."""
        return 1 + sum((-1) ** d * c for d, c in self.counts.items())

    def to_json(self):
        return {"ambient_complex_dim": self.ambient_complex_dim,
                "counts": {str(d): c for d, c in sorted(self.counts.items())},
                "cells": [{"signs": s, "dim": d} for s, d in self.cells],
                "added_point": True}

    @classmethod
    def from_json(cls, doc):
        cells = tuple((c["signs"], c["dim"]) for c in doc["cells"])
        return cls(ambient_complex_dim=doc["ambient_complex_dim"],
                   counts={int(k): v for k, v in doc["counts"].items()},
                   cells=cells)


def salvetti_census(arr: Arrangement) -> SalvettiCellCensus:
    """Nonempty sign-sequence cells of the complexified complement.

    The real part of a cell is the face of the real arrangement selected by
    the +/- signs and the equalities of the u/d positions; the imaginary
    part is an open cone cut out by the u/d directions.  A cell's dimension
    is computed from the actual rank of its equality system, never assumed.
    """
    if arr.field is not QQ:
        raise InputError("the sign-sequence census starts from a real arrangement")
    arr.require_hyperplanes("sign-sequence census")
    if arr.m > MAX_SALVETTI_PLANES:
        raise SizeLimitError(
            f"sign-sequence census capped at {MAX_SALVETTI_PLANES} hyperplanes")
    rows = arr.hyperplane_rows()
    n = arr.ambient_dim
    cells = []

    def extend(prefix, real_cons, imag_cons):
        j = len(prefix)
        if j == arr.m:
            eq_rows = [rows[k][0] for k, s in enumerate(prefix) if s in "ud"]
            if eq_rows:
                eq_rank = rank(Matrix(QQ, eq_rows, ncols=n))
            else:
                eq_rank = 0
            dim = (n - eq_rank) + n
            cells.append(("".join(prefix), dim))
            return
        coeffs, rhs = rows[j]
        for s in SIGN_ALPHABET:
            new_real, new_imag = list(real_cons), list(imag_cons)
            if s == "+":
                new_real.append(greater_than(coeffs, rhs))
            elif s == "-":
                new_real.append(less_than(coeffs, rhs))
            else:
                new_real.extend(equal_to(coeffs, rhs))
                if s == "u":
                    new_imag.append(greater_than(coeffs, 0))
                else:
                    new_imag.append(less_than(coeffs, 0))
            if find_point(new_real, n) is None:
                continue
            if find_point(new_imag, n) is None:
                continue
            extend(prefix + [s], new_real, new_imag)

    extend([], [], [])
    counts = {}
    for _, d in cells:
        counts[d] = counts.get(d, 0) + 1
    return SalvettiCellCensus(ambient_complex_dim=n, counts=counts,
                              cells=tuple(sorted(cells)))


@dataclass(frozen=True)
class ImaginaryWedgeCell:
    generators: tuple       # 1-based plane indices (empty for the big cell)
    codim: int
    dim: int

    def to_json(self):
        return {"generators": list(self.generators), "codim": self.codim,
                "dim": self.dim}


@dataclass(frozen=True)
class ImaginaryWedgeCensus:
    """One cell of dimension 2N - |I| per nonempty normal-crossing node."""

    ambient_complex_dim: int
    cells: tuple

    def borel_moore_ranks(self):
        """Rank of the Borel-Moore homology of the complement per degree."""
        ranks = {}
        for cell in self.cells:
            ranks[cell.dim] = ranks.get(cell.dim, 0) + 1
        return ranks

    def to_json(self):
        return {"ambient_complex_dim": self.ambient_complex_dim,
                "cells": [c.to_json() for c in self.cells],
                "borel_moore": {str(d): r for d, r in
                                sorted(self.borel_moore_ranks().items())}}

    @classmethod
    def from_json(cls, doc):
        cells = tuple(ImaginaryWedgeCell(generators=tuple(c["generators"]),
                                         codim=c["codim"], dim=c["dim"])
                      for c in doc["cells"])
        return cls(ambient_complex_dim=doc["ambient_complex_dim"], cells=cells)


def imaginary_wedge_census(arr: Arrangement) -> ImaginaryWedgeCensus:
    if arr.field is not QQ:
        raise InputError("imaginary wedges start from a real arrangement")
    poset = build_intersection_poset(arr)
    if not is_normal_crossings(arr, poset):
        raise InputError("imaginary wedges require normal crossings")
    n = arr.ambient_dim
    cells = [ImaginaryWedgeCell(generators=(), codim=0, dim=2 * n)]
    for node in poset.nodes:
        cells.append(ImaginaryWedgeCell(
            generators=tuple(i + 1 for i in sorted(node.generators)),
            codim=node.codim, dim=2 * n - node.codim))
    return ImaginaryWedgeCensus(ambient_complex_dim=n, cells=tuple(cells))
