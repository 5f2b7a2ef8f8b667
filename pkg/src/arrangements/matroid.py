"""Matroids of central arrangements, axiom checking, and the imaginary
ten-line demonstration.

A central hyperplane arrangement defines a rank function on subsets of its
planes: r(I) is the codimension of the intersection over I.  The axioms
checked are the unit bounds 1 <= r(I) <= |I|, monotonicity, and
submodularity r(I meet J) + r(I join J) <= r(I) + r(J); submodularity is
only required where the intersection of index sets is nonempty, matching
the domain on which the rank function is defined.

The ten-line construction builds, over Q(i), a projective line configuration
whose incidence constraints can all hold only when the free parameter
squares to -1; it realizes a matroid with complex but no real realizations.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .arrangement import Arrangement, InputError, SizeLimitError
from .linalg import Matrix, rank
from .poset import dimensional_data
from .rationals import QI, GaussianRational

MAX_MATROID_PLANES = 16


@dataclass(frozen=True)
class RankFunction:
    """A total rank function on the nonempty subsets of {1..m}."""

    m: int
    ranks: dict  # frozenset of 0-based indices -> positive int

    def __post_init__(self):
        expected = 2 ** self.m - 1
        if len(self.ranks) != expected:
            raise InputError(f"rank function must cover all {expected} subsets")

    def rank_of(self, subset):
        return self.ranks[frozenset(subset)]

    def to_json(self):
        """Bitmask-keyed serialization (bit i set = plane i+1 in the subset)."""
        out = {}
        for subset, r in self.ranks.items():
            mask = 0
            for i in subset:
                mask |= 1 << i
            out[str(mask)] = r
        return {"m": self.m, "ranks": dict(sorted(out.items(), key=lambda kv: int(kv[0])))}

    @classmethod
    def from_json(cls, doc):
        ranks = {}
        for mask_str, r in doc["ranks"].items():
            mask = int(mask_str)
            subset = frozenset(i for i in range(doc["m"]) if mask & (1 << i))
            ranks[subset] = r
        return cls(m=doc["m"], ranks=ranks)


def matroid_from_arrangement(arr: Arrangement) -> RankFunction:
    """r(I) = codim of the intersection over I, for a central arrangement."""
    arr.require_hyperplanes("matroid extraction")
    if not arr.is_central():
        raise InputError("matroid extraction requires a central arrangement")
    if arr.m > MAX_MATROID_PLANES:
        raise SizeLimitError(f"matroid extraction capped at {MAX_MATROID_PLANES} planes")
    normals = [p.equations.rows[0][:-1] for p in arr.planes]
    ranks = {}
    # incremental row reduction cache: subset -> canonical row span
    span_cache = {frozenset(): Matrix(arr.field, [], ncols=arr.ambient_dim)}
    order = sorted(range(arr.m))
    for size in range(1, arr.m + 1):
        for subset in combinations(order, size):
            key = frozenset(subset)
            prev = span_cache[frozenset(subset[:-1])]
            stacked = prev.stack(Matrix(arr.field, [normals[subset[-1]]],
                                        ncols=arr.ambient_dim))
            from .linalg import rref
            red, rk, _ = rref(stacked)
            canon = Matrix(arr.field, red.rows[:rk], ncols=arr.ambient_dim)
            span_cache[key] = canon
            ranks[key] = rk
    return RankFunction(m=arr.m, ranks=ranks)


def check_matroid_axioms(rf: RankFunction, include_empty=False):
    """Violations of the three rank axioms, as human-readable strings.

    With include_empty=True the convention r(empty) = 0 extends
    submodularity to disjoint pairs as well.
    """
    def name(subset):
        return "{" + ",".join(str(i + 1) for i in sorted(subset)) + "}"

    violations = []
    subsets = sorted(rf.ranks, key=lambda s: (len(s), sorted(s)))
    for s in subsets:
        r = rf.ranks[s]
        if not (1 <= r <= len(s)):
            violations.append(f"axiom 1: r({name(s)}) = {r} outside [1, {len(s)}]")
    for s in subsets:
        for extra in range(rf.m):
            if extra in s:
                continue
            t = s | {extra}
            if rf.ranks[s] > rf.ranks[t]:
                violations.append(
                    f"axiom 2: r({name(s)}) = {rf.ranks[s]} exceeds "
                    f"r({name(t)}) = {rf.ranks[t]}")
    for a, b in combinations(subsets, 2):
        meet = a & b
        if not meet and not include_empty:
            continue
        join = a | b
        lhs = (rf.ranks[meet] if meet else 0) + rf.ranks[join]
        rhs = rf.ranks[a] + rf.ranks[b]
        if lhs > rhs:
            violations.append(
                f"axiom 3: r({name(meet)}) + r({name(join)}) = {lhs} exceeds "
                f"r({name(a)}) + r({name(b)}) = {rhs}")
    return violations


def same_dimensional_data(arr1: Arrangement, arr2: Arrangement) -> bool:
    """Subset-by-subset agreement of dimensions, including emptiness."""
    if arr1.m != arr2.m:
        raise InputError("arrangements have different numbers of planes")
    if arr1.ambient_dim != arr2.ambient_dim:
        raise InputError("arrangements have different ambient dimensions")
    return dimensional_data(arr1) == dimensional_data(arr2)


# ---------------------------------------------------------------------------
# The ten-line configuration with alpha^2 = -1
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MnevReport:
    alpha: GaussianRational
    construction_failure: str | None
    constraints: tuple          # (name, holds) pairs, in construction order
    passed: bool

    def failed_constraints(self):
        return tuple(name for name, ok in self.constraints if not ok)

    def to_json(self):
        return {"alpha": QI.to_json(self.alpha),
                "construction_failure": self.construction_failure,
                "constraints": [{"name": n, "holds": ok}
                                for n, ok in self.constraints],
                "passed": self.passed}


def _line(a, b, c):
    """Projective line a x + b y + c z = 0, as a homogeneous row over Q(i)."""
    return (QI.parse(a), QI.parse(b), QI.parse(c))


def mnev_check(alpha) -> MnevReport:
    """Build the ten lines driven by the parameter alpha and test every
    incidence constraint exactly.

    L1 is the line at infinity, L2 = {x=0}, L3 = {y=0}, and L4 is normalized
    so that its meets with L2 and L3 sit at (0,1) and (1,0).  Each later
    line is forced through previously built points or parallel to earlier
    lines; the last constraint, parallelism of L9 and L10, holds only when
    alpha^4 = 1, and the earlier steps exclude alpha^2 = 1.
    """
    a = QI.parse(alpha)
    zero, one = GaussianRational(0), GaussianRational(1)
    if a == zero:
        return MnevReport(alpha=a, construction_failure="alpha = 0 makes L5 "
                          "coincide with L3", constraints=(), passed=False)
    a2 = a * a
    lines = {
        1: _line(0, 0, 1),              # at infinity
        2: _line(1, 0, 0),              # x = 0
        3: _line(0, 1, 0),              # y = 0
        4: _line(1, 1, -1),             # through (0,1) and (1,0)
        5: (a, one, zero - a),          # through (1,0) and (0,alpha)
        6: (one, one, zero - a),        # through (0,alpha), parallel to L4
        7: (a, one, zero - a2),         # through (alpha,0), parallel to L5
        8: (one, one, zero - a2),       # through (0,alpha^2), parallel to L4
        9: (a2, one, zero - a2),        # through (1,0) and (0,alpha^2)
        10: (one, a2, zero - a2),       # through (0,1) and (alpha^2,0)
    }
    # degenerate parameters collapse construction lines together
    for i, j, why in ((5, 4, "alpha = 1"), (5, 3, "alpha = 0"),
                      (8, 4, "alpha^2 = 1"), (6, 4, "alpha = 0 or 1")):
        li, lj = lines[i], lines[j]
        mat = Matrix(QI, [li, lj], ncols=3)
        if rank(mat) < 2:
            return MnevReport(alpha=a,
                              construction_failure=f"L{i} coincides with L{j} "
                              f"({why})", constraints=(), passed=False)

    def concurrency(indices):
        mat = Matrix(QI, [lines[i] for i in indices], ncols=3)
        return rank(mat) == 2

    checks = []
    for i, j in combinations((1, 2, 3, 4), 2):
        checks.append((f"r(L{i},L{j})=2", rank(Matrix(QI, [lines[i], lines[j]],
                                                      ncols=3)) == 2))
    for trip in combinations((1, 2, 3, 4), 3):
        name = "r(" + ",".join(f"L{i}" for i in trip) + ")=3"
        checks.append((name, rank(Matrix(QI, [lines[i] for i in trip],
                                         ncols=3)) == 3))
    incidence = [
        (3, 4, 5), (2, 5, 6), (1, 4, 6), (3, 6, 7), (1, 5, 7),
        (2, 7, 8), (1, 4, 6, 8), (3, 4, 5, 9), (2, 7, 8, 9),
        (2, 4, 10), (3, 8, 10), (1, 9, 10),
    ]
    for group in incidence:
        name = "r(" + ",".join(f"L{i}" for i in group) + ")=2"
        checks.append((name, concurrency(group)))
    passed = all(ok for _, ok in checks)
    return MnevReport(alpha=a, construction_failure=None,
                      constraints=tuple(checks), passed=passed)
