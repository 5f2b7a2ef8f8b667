"""Integral simplicial homology of complexes and pairs.

Relative chain groups are generated by the faces of the total complex that
are not in the subcomplex; boundary signs follow the fixed vertex order, and
Smith normal form over Z supplies free ranks and torsion.

For a pair whose total complex is a single full simplex (the graph and
hypergraph pairs, and the naive pairs), the total is contractible and the
relative homology is the reduced homology of the subcomplex shifted up by
one.  That route is taken automatically when it touches fewer faces; the
direct relative computation remains available and the two agree integrally.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .complexes import (BudgetExceeded, DEFAULT_FACE_BUDGET, SimplicialComplex,
                        SimplicialPair)
from .linalg import (Matrix, elementary_divisors_sparse, invert_unimodular,
                     snf_with_transform, solve_affine)
from .rationals import QQ


@dataclass(frozen=True)
class HomologySummary:
    """Per-degree free rank and torsion coefficients."""

    ranks: dict
    torsion: dict
    reduced: bool = False

    def rank(self, degree):
        return self.ranks.get(degree, 0)

    def torsion_at(self, degree):
        return tuple(self.torsion.get(degree, ()))

    def degrees(self):
        return sorted(set(self.ranks) | set(self.torsion))

    def total_rank(self):
        return sum(self.ranks.values())

    def betti_list(self, top=None):
        if top is None:
            top = max(self.ranks, default=0)
        return [self.rank(d) for d in range(top + 1)]

    def is_torsion_free(self):
        return not self.torsion

    def euler(self):
        return sum((-1) ** d * r for d, r in self.ranks.items())

    def same_groups(self, other):
        return self.ranks == other.ranks and \
            {d: tuple(t) for d, t in self.torsion.items()} == \
            {d: tuple(t) for d, t in other.torsion.items()}

    def to_json(self):
        degrees = self.degrees()
        return {"reduced": self.reduced,
                "groups": {str(d): {"rank": self.rank(d),
                                    "torsion": list(self.torsion_at(d))}
                           for d in degrees}}

    @classmethod
    def from_json(cls, doc):
        ranks, torsion = {}, {}
        for key, grp in doc["groups"].items():
            d = int(key)
            if grp["rank"]:
                ranks[d] = grp["rank"]
            if grp["torsion"]:
                torsion[d] = tuple(grp["torsion"])
        return cls(ranks=ranks, torsion=torsion, reduced=doc.get("reduced", False))


def _clean_summary(ranks, torsion, reduced):
    return HomologySummary(
        ranks={d: r for d, r in ranks.items() if r},
        torsion={d: tuple(t) for d, t in torsion.items() if t},
        reduced=reduced)


class ChainComplexData:
    """Boundary data of a (relative) chain complex over Z.

    `generators[d]` lists the degree-d faces in the fixed lexicographic
    order; `boundaries[d]` holds the matrix of the boundary map from degree
    d to degree d-1, stored sparsely as one {row: coeff} dict per generator.
    """

    def __init__(self, generators, boundaries, check=True):
        self.generators = generators
        self.boundaries = boundaries
        if check:
            self._check_composition()

    def degrees(self):
        return sorted(self.generators)

    def size(self, degree):
        return len(self.generators.get(degree, ()))

    def _check_composition(self):
        for d in self.degrees():
            lower = d - 1
            if lower not in self.boundaries:
                continue
            bd = self.boundaries.get(d)
            if bd is None:
                continue
            blow = self.boundaries[lower]
            for col in bd:
                acc = {}
                for r, v in col.items():
                    for r2, v2 in blow[r].items():
                        acc[r2] = acc.get(r2, 0) + v * v2
                if any(acc.values()):
                    raise AssertionError("boundary of boundary is not zero")

    def homology(self) -> HomologySummary:
        snf_cache = {}

        def snf_of(d):
            if d not in snf_cache:
                cols = self.boundaries.get(d)
                if cols is None or not self.size(d):
                    snf_cache[d] = None
                else:
                    snf_cache[d] = elementary_divisors_sparse(
                        cols, self.size(d - 1))
            return snf_cache[d]

        ranks, torsion = {}, {}
        reduced = -1 in self.generators
        for d in self.degrees():
            if d < 0:
                continue
            n = self.size(d)
            below = snf_of(d)
            rank_below = below.rank if below else 0
            above = snf_of(d + 1)
            rank_above = above.rank if above else 0
            ranks[d] = n - rank_below - rank_above
            if above:
                tors = [x for x in above.elementary_divisors if x > 1]
                if tors:
                    torsion[d] = tuple(tors)
        return _clean_summary(ranks, torsion, reduced)


def _boundary_columns(gens_by_degree):
    """Boundary matrices for the given generators (faces as frozensets).

    Faces missing from the lower degree (relative quotient, or no lower
    generators at all) simply drop out of the column.  The empty face, when
    present at degree -1, yields the augmentation automatically.
    """
    index = {d: {f: i for i, f in enumerate(faces)}
             for d, faces in gens_by_degree.items()}
    boundaries = {}
    for d, faces in gens_by_degree.items():
        lower = index.get(d - 1, {})
        cols = []
        for f in faces:
            verts = sorted(f)
            col = {}
            for i in range(len(verts)):
                subface = frozenset(verts[:i] + verts[i + 1:])
                j = lower.get(subface)
                if j is not None:
                    col[j] = col.get(j, 0) + (-1) ** i
            cols.append({k: v for k, v in col.items() if v})
        boundaries[d] = cols
    return boundaries


def chain_complex(pair: SimplicialPair, reduced=False,
                  budget=DEFAULT_FACE_BUDGET) -> ChainComplexData:
    """Relative chain complex: faces of total that are not faces of sub.

    The reduced flag adds the empty-face augmentation and is only available
    when the subcomplex is void.
    """
    sub_is_void = pair.sub.is_void()
    if reduced and not sub_is_void:
        raise ValueError("reduced homology only applies to absolute complexes")
    total_faces = pair.total.faces(budget)
    if sub_is_void:
        gens = sorted(total_faces, key=lambda f: (len(f), sorted(f)))
    else:
        sub_faces = pair.sub.faces(budget)
        gens = sorted(total_faces - sub_faces, key=lambda f: (len(f), sorted(f)))
    by_degree = {}
    for f in gens:
        by_degree.setdefault(len(f) - 1, []).append(f)
    if reduced:
        by_degree[-1] = [frozenset()]
    # ensure empty intermediate degrees exist so ranks come out right
    if by_degree:
        lo, hi = min(by_degree), max(by_degree)
        for d in range(lo, hi + 1):
            by_degree.setdefault(d, [])
    boundaries = _boundary_columns(by_degree)
    return ChainComplexData(by_degree, boundaries)


def homology(cc: ChainComplexData) -> HomologySummary:
    return cc.homology()


def reduced_homology(complex_: SimplicialComplex,
                     budget=DEFAULT_FACE_BUDGET) -> HomologySummary:
    pair = SimplicialPair(complex_, SimplicialComplex(complex_.labels, ()))
    return chain_complex(pair, reduced=True, budget=budget).homology()


def _shifted_sub_summary(pair: SimplicialPair, budget) -> HomologySummary:
    """H_d(total, sub) via reduced homology of sub when total is a simplex."""
    sub_summary = reduced_homology(pair.sub, budget)
    ranks = {d + 1: r for d, r in sub_summary.ranks.items()}
    torsion = {d + 1: t for d, t in sub_summary.torsion.items()}
    return _clean_summary(ranks, torsion, reduced=False)


def pair_homology(pair: SimplicialPair, budget=DEFAULT_FACE_BUDGET,
                  force_direct=False) -> HomologySummary:
    """Relative homology of a pair, choosing the cheaper exact route."""
    if not force_direct and pair.total.is_full_simplex() and not pair.sub.is_void():
        nverts = len(pair.total.labels)
        sub_bound = pair.sub.face_count_bound()
        if sub_bound < 2 ** nverts or 2 ** nverts > budget:
            if sub_bound > budget:
                raise BudgetExceeded(
                    f"subcomplex face bound {sub_bound} exceeds budget {budget}")
            return _shifted_sub_summary(pair, budget)
    return chain_complex(pair, budget=budget).homology()


def euler_characteristic(pair: SimplicialPair, budget=DEFAULT_FACE_BUDGET) -> int:
    """Alternating sum of relative face counts."""
    if pair.total.is_full_simplex():
        nverts = len(pair.total.labels)
        counts = {d: comb(nverts, d + 1) for d in range(nverts)}
    else:
        counts = {}
        for f in pair.total.faces(budget):
            d = len(f) - 1
            counts[d] = counts.get(d, 0) + 1
    if not pair.sub.is_void():
        for f in pair.sub.faces(budget):
            counts[len(f) - 1] -= 1
    return sum((-1) ** d * c for d, c in counts.items())


# ---------------------------------------------------------------------------
# Integral cycle bases (for the graded ring construction)
# ---------------------------------------------------------------------------

@dataclass
class CycleBasis:
    """Basis data for H_d of a chain complex, in generator coordinates.

    `free` holds integer cycle vectors whose classes freely generate the
    free part; `torsion` holds (vector, order) pairs; `boundary_lattice`
    spans the image of the boundary from one degree up.
    """

    degree: int
    free: list
    torsion: list
    boundary_lattice: list


def _dense_columns(cols, nrows):
    out = []
    for c in cols:
        v = [0] * nrows
        for r, val in c.items():
            v[r] = val
        out.append(v)
    return out


def cycle_basis(cc: ChainComplexData, degree: int) -> CycleBasis:
    """Integral homology basis at one degree via Smith certificates."""
    n = cc.size(degree)
    if n == 0:
        return CycleBasis(degree, [], [], [])
    cols_down = cc.boundaries.get(degree)
    if cols_down and cc.size(degree - 1):
        rows = _dense_columns(cols_down, cc.size(degree - 1))
        # boundary matrix with columns = generators: rows x cols layout
        mat = [[rows[j][i] for j in range(n)] for i in range(cc.size(degree - 1))]
        u, d, v, rk = snf_with_transform(mat)
        kernel = [[v[i][j] for i in range(n)] for j in range(rk, n)]
    else:
        kernel = [[int(i == j) for i in range(n)] for j in range(n)]
    if not kernel:
        return CycleBasis(degree, [], [], [])

    up_cols = cc.boundaries.get(degree + 1)
    image = _dense_columns(up_cols, n) if up_cols and cc.size(degree + 1) else []

    # coordinates of the image inside the kernel lattice
    kmat = Matrix(QQ, [[Fraction(x) for x in vec] for vec in kernel]).transpose()
    coords = []
    for b in image:
        target = [Fraction(x) for x in b]
        sol = solve_affine(kmat, target)
        if sol is None:
            raise AssertionError("boundary image escapes the cycle lattice")
        coord = []
        for x in sol[0]:
            if x.denominator != 1:
                raise AssertionError("cycle lattice is not saturated")
            coord.append(x.numerator)
        coords.append(coord)
    k = len(kernel)
    if coords:
        ymat = [[coords[j][i] for j in range(len(coords))] for i in range(k)]
        u2, d2, v2, rk2 = snf_with_transform(ymat)
        u2inv = invert_unimodular(u2)
        # new kernel basis rows: K' = U2^{-1} applied to kernel coordinates
        new_basis = []
        for col in range(k):
            vec = [0] * n
            for i in range(k):
                c = u2inv[i][col]
                if c:
                    for t in range(n):
                        vec[t] += c * kernel[i][t]
            new_basis.append(vec)
        free, torsion, boundary = [], [], []
        for i in range(k):
            if i < rk2:
                order = abs(d2[i][i])
                if order == 1:
                    boundary.append(new_basis[i])
                else:
                    torsion.append((new_basis[i], order))
            else:
                free.append(new_basis[i])
        return CycleBasis(degree, free, torsion, boundary)
    return CycleBasis(degree, kernel, [], [])


def express_cycle(basis: CycleBasis, vector):
    """Coordinates of an integer cycle on (free, torsion, boundary) generators.

    Returns (free coefficients, torsion coefficients) as exact rationals;
    boundary components are discarded.
    """
    gens = basis.free + [t[0] for t in basis.torsion] + basis.boundary_lattice
    if not gens:
        if any(vector):
            raise ValueError("nonzero cycle in a trivial group")
        return tuple(), tuple()
    n = len(vector)
    mat = Matrix(QQ, [[Fraction(g[i]) for g in gens] for i in range(n)])
    sol = solve_affine(mat, [Fraction(x) for x in vector])
    if sol is None:
        raise ValueError("vector is not a cycle of this degree")
    coeffs = sol[0]
    nf = len(basis.free)
    nt = len(basis.torsion)
    return tuple(coeffs[:nf]), tuple(coeffs[nf:nf + nt])
