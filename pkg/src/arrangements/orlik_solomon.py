"""The Orlik-Solomon algebra of a central complex hyperplane arrangement.

The algebra is the exterior algebra on one generator per hyperplane, modulo
the ideal generated by the alternating boundary elements of the dependent
index sets (minimal ones suffice).  Graded dimensions are obtained by exact
elimination over Q; the surviving monomial basis is the lexicographically
first one, reported but never assumed canonical.

This is the algebraic route to the complement cohomology of a complex
hyperplane arrangement, and the test suites hold it degree by degree
against the poset-theoretic route in :mod:`arrangements.gm`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .arrangement import Arrangement, CanonicalSubspace, InputError
from .linalg import Matrix, rank, rref
from .rationals import QI, QQ

MAX_OS_PLANES = 10


def _normal_matrix(arr: Arrangement, subset):
    rows = []
    for i in subset:
        p = arr.planes[i]
        for r in p.equations.rows:
            rows.append(r[:-1])
    return Matrix(arr.field, rows, ncols=arr.ambient_dim)


def _require_central_hyperplanes(arr: Arrangement, what):
    arr.require_hyperplanes(what)
    if not arr.is_central():
        raise InputError(f"{what} requires a central arrangement")


@dataclass(frozen=True)
class Circuit:
    """A minimal dependent set of hyperplanes (sorted 0-based indices)."""

    indices: tuple

    def __len__(self):
        return len(self.indices)


def circuits(arr: Arrangement):
    """All minimal dependent subsets, by exhaustive rank tests with pruning."""
    _require_central_hyperplanes(arr, "circuit enumeration")
    m = arr.m
    ambient_rank = rank(_normal_matrix(arr, range(m)))
    found = []
    for size in range(2, ambient_rank + 2):
        for subset in combinations(range(m), size):
            sset = set(subset)
            if any(set(c.indices) <= sset for c in found):
                continue
            if rank(_normal_matrix(arr, subset)) < size:
                found.append(Circuit(indices=subset))
    return found


def _wedge(mono_a, mono_b):
    """Exterior product of two sorted monomials: (sign, sorted) or None."""
    if set(mono_a) & set(mono_b):
        return None
    merged = list(mono_a) + list(mono_b)
    sign = 1
    # count inversions between the two sorted blocks
    for x in mono_a:
        for y in mono_b:
            if y < x:
                sign = -sign
    return sign, tuple(sorted(merged))


def _circuit_boundary(circuit):
    """The alternating sum of delete-one monomials of a circuit."""
    idx = circuit.indices
    terms = {}
    for j in range(len(idx)):
        mono = idx[:j] + idx[j + 1:]
        terms[mono] = terms.get(mono, 0) + (-1) ** (j + 1)
    return terms


@dataclass(frozen=True)
class OSAlgebra:
    m: int
    labels: tuple
    dims: tuple                 # graded dimensions, degree 0 first
    basis: tuple                # per degree, tuple of surviving monomials
    reducers: tuple             # per degree, rref rows of the relation span
    monomials: tuple            # per degree, the full ordered monomial list

    def dimension(self, degree):
        if 0 <= degree < len(self.dims):
            return self.dims[degree]
        return 0

    def poincare_coefficients(self):
        return list(self.dims)

    def normal_form(self, element):
        """Reduce {monomial: coefficient} modulo the relation span."""
        by_degree = {}
        for mono, coeff in element.items():
            if coeff:
                by_degree.setdefault(len(mono), {})[mono] = Fraction(coeff)
        out = {}
        for degree, part in by_degree.items():
            if degree >= len(self.dims):
                continue
            order = {mono: i for i, mono in enumerate(self.monomials[degree])}
            vec = [Fraction(0)] * len(order)
            for mono, coeff in part.items():
                vec[order[mono]] += coeff
            for row in self.reducers[degree]:
                piv = next(i for i, x in enumerate(row) if x)
                if vec[piv]:
                    f = vec[piv] / row[piv]
                    vec = [a - f * b for a, b in zip(vec, row)]
            for mono, i in order.items():
                if vec[i]:
                    out[mono] = vec[i]
        return out

    def product(self, x, y):
        """Normal form of the exterior product of two elements."""
        raw = {}
        for ma, ca in x.items():
            if not ca:
                continue
            for mb, cb in y.items():
                if not cb:
                    continue
                w = _wedge(ma, mb)
                if w is None:
                    continue
                sign, mono = w
                raw[mono] = raw.get(mono, Fraction(0)) + sign * Fraction(ca) * Fraction(cb)
        return self.normal_form(raw)


def os_algebra(arr: Arrangement, use_all_dependent=False) -> OSAlgebra:
    """Graded dimensions, monomial basis, and reduction data.

    With use_all_dependent=True the relation span is generated from every
    dependent set instead of only the circuits; the output must not change,
    which the test suite verifies on small inputs.
    """
    _require_central_hyperplanes(arr, "the exterior-algebra quotient")
    m = arr.m
    if m > MAX_OS_PLANES:
        raise InputError(f"exterior-algebra quotient capped at {MAX_OS_PLANES} planes")
    ambient_rank = rank(_normal_matrix(arr, range(m)))
    top = ambient_rank

    if use_all_dependent:
        relation_sets = []
        for size in range(2, m + 1):
            for subset in combinations(range(m), size):
                if rank(_normal_matrix(arr, subset)) < size:
                    relation_sets.append(Circuit(indices=subset))
    else:
        relation_sets = circuits(arr)

    dims = [1]
    basis = [(tuple(),)]
    reducers = [tuple()]
    monomials = [(tuple(),)]
    for degree in range(1, top + 1):
        # descending lex order: pivots eliminate lex-largest monomials,
        # leaving the lexicographically first basis
        monos = sorted(combinations(range(m), degree), reverse=True)
        order = {mono: i for i, mono in enumerate(monos)}
        rows = []
        for circ in relation_sets:
            k = len(circ)
            if k - 1 > degree:
                continue
            boundary = _circuit_boundary(circ)
            pad = degree - (k - 1)
            # pads may meet the circuit: overlapping terms vanish in the
            # wedge and the survivors are needed to span the whole ideal
            for extra in combinations(range(m), pad):
                row = [0] * len(monos)
                nonzero = False
                for mono, coeff in boundary.items():
                    w = _wedge(mono, extra)
                    if w is None:
                        continue
                    sign, merged = w
                    row[order[merged]] += coeff * sign
                    nonzero = True
                if nonzero:
                    rows.append([Fraction(v) for v in row])
        if rows:
            red, rk, pivots = rref(Matrix(QQ, rows, ncols=len(monos)))
            keep = tuple(red.rows[i] for i in range(rk))
            pivot_set = set(pivots)
        else:
            keep, rk, pivot_set = tuple(), 0, set()
        dims.append(len(monos) - rk)
        basis.append(tuple(sorted(m_ for i, m_ in enumerate(monos)
                                  if i not in pivot_set)))
        reducers.append(keep)
        monomials.append(tuple(monos))
    return OSAlgebra(m=m, labels=arr.labels, dims=tuple(dims), basis=tuple(basis),
                     reducers=tuple(reducers), monomials=tuple(monomials))


def os_product(x, y, alg: OSAlgebra):
    return alg.product(x, y)


def os_poincare_polynomial(arr: Arrangement):
    """Graded dimensions as polynomial coefficients, low degree first."""
    return os_algebra(arr).poincare_coefficients()


def generator(i):
    """The degree-1 element for plane i (0-based)."""
    return {(i,): Fraction(1)}


def cone_arrangement(arr: Arrangement) -> Arrangement:
    """Central arrangement one dimension up with the same combinatorics.

    Each affine hyperplane a.x = b becomes a.x - b t = 0, and the extra
    hyperplane t = 0 is adjoined as the last plane.
    """
    arr.require_hyperplanes("coning")
    field = arr.field
    n = arr.ambient_dim
    zero, one = field.zero(), field.one()
    planes = []
    for coeffs, rhs in arr.hyperplane_rows():
        planes.append([(list(coeffs) + [zero - rhs], zero)])
    planes.append([([zero] * n + [one], zero)])
    from .arrangement import from_plane_equations
    return from_plane_equations(field, n + 1, planes,
                                labels=tuple(arr.labels) + ("cone",))


def decone_poincare(coeffs):
    """Divide a coned Poincare polynomial by (1 + t), exactly."""
    out = []
    rem = list(coeffs)
    for i in range(len(rem) - 1):
        out.append(rem[i])
        rem[i + 1] -= rem[i]
    if rem and rem[-1] != 0:
        raise ValueError("polynomial is not divisible by 1 + t")
    while out and out[-1] == 0:
        out.pop()
    return out
