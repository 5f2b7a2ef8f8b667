"""Monodromy data and twisted-homology dimension predictions.

A rank-one local system on the complement of m hyperplanes is described by
its monodromy coefficients tau_1..tau_m around the hyperplanes.  Two
closed-form regimes are implemented: generic arrangements in C^N, where the
twisted homology concentrates in degree N with dimension C(m-1, N) and the
finite-to-locally-finite comparison map is bijective exactly when every
tau_j and the product tau_0 differ from 1; and complexified real normal
crossing arrangements, where the dimension is the number of bounded real
regions.  For one-dimensional point arrangements the locally finite chain
complex is assembled explicitly from rays and a single cell whose incidence
numbers are tau_j - 1.

Coefficients are exact Gaussian rationals; the token GENERIC stands for a
formal value with tau_j - 1 and tau_0 - 1 treated as nonzero.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .arrangement import Arrangement, InputError
from .homology import HomologySummary
from .poset import is_normal_crossings
from .rationals import QI, GaussianRational


class _Generic:
    """Formal monodromy coefficient, distinct from every concrete value."""

    def __repr__(self):
        return "GENERIC"


GENERIC = _Generic()

_ONE = GaussianRational(1, 0)
_ZERO = GaussianRational(0, 0)


@dataclass(frozen=True)
class MonodromyData:
    """Nonzero coefficients tau_j, with the product tau_0 derived exactly."""

    taus: tuple

    def __post_init__(self):
        for t in self.taus:
            if t is GENERIC:
                continue
            if not isinstance(t, GaussianRational):
                raise InputError("monodromy coefficients must be Gaussian rationals")
            if t == _ZERO:
                raise InputError("monodromy coefficients must be nonzero")

    @property
    def m(self):
        return len(self.taus)

    def tau0(self):
        if any(t is GENERIC for t in self.taus):
            return GENERIC
        prod = _ONE
        for t in self.taus:
            prod = prod * t
        return prod

    def all_nontrivial(self):
        return all(t is GENERIC or t != _ONE for t in self.taus)

    def any_nontrivial(self):
        return any(t is GENERIC or t != _ONE for t in self.taus)

    def product_nontrivial(self):
        t0 = self.tau0()
        return True if t0 is GENERIC else t0 != _ONE

    def to_json(self):
        return {"taus": ["generic" if t is GENERIC else QI.to_json(t)
                         for t in self.taus]}


def monodromy_from_tokens(tokens) -> MonodromyData:
    taus = []
    for tok in tokens:
        if isinstance(tok, str) and tok.strip().lower() == "generic":
            taus.append(GENERIC)
        else:
            taus.append(QI.parse(tok))
    return MonodromyData(taus=tuple(taus))


@dataclass(frozen=True)
class TwistedPrediction:
    applicable: bool
    reason: str
    concentrated_degree: int
    dimension: int
    canonical_map_bijective: bool | None

    def to_json(self):
        return {"applicable": self.applicable, "reason": self.reason,
                "concentrated_degree": self.concentrated_degree,
                "dimension": self.dimension,
                "canonical_map_bijective": self.canonical_map_bijective}

    @classmethod
    def from_json(cls, doc):
        return cls(applicable=doc["applicable"], reason=doc["reason"],
                   concentrated_degree=doc["concentrated_degree"],
                   dimension=doc["dimension"],
                   canonical_map_bijective=doc["canonical_map_bijective"])


def resonance_generic(md: MonodromyData, ambient_dim: int) -> TwistedPrediction:
    """Prediction for a generic arrangement of m hyperplanes in C^N.

    The concentration in degree N with dimension C(m-1, N) needs at least
    one nontrivial coefficient; bijectivity of the comparison map needs
    every tau_j and their product nontrivial.
    """
    m = md.m
    dimension = comb(m - 1, ambient_dim) if m >= 1 else 0
    if not md.any_nontrivial():
        return TwistedPrediction(
            applicable=False,
            reason="all monodromy coefficients equal 1 (constant system)",
            concentrated_degree=ambient_dim, dimension=dimension,
            canonical_map_bijective=False)
    bijective = md.all_nontrivial() and md.product_nontrivial()
    return TwistedPrediction(
        applicable=True,
        reason="generic arrangement with a nontrivial coefficient",
        concentrated_degree=ambient_dim, dimension=dimension,
        canonical_map_bijective=bijective)


def twisted_dim_normal_crossing(arr: Arrangement,
                                md: MonodromyData) -> TwistedPrediction:
    """Prediction for the complexification of a real normal-crossing
    arrangement: concentration in degree N with one dimension per bounded
    region, provided every coefficient is nontrivial."""
    if md.m != arr.m:
        raise InputError("one monodromy coefficient per hyperplane expected")
    from .regions import count_bounded
    n = arr.ambient_dim
    if not is_normal_crossings(arr):
        return TwistedPrediction(
            applicable=False, reason="arrangement is not normal crossing",
            concentrated_degree=n, dimension=0, canonical_map_bijective=None)
    if not md.all_nontrivial():
        return TwistedPrediction(
            applicable=False, reason="some monodromy coefficient equals 1",
            concentrated_degree=n, dimension=0, canonical_map_bijective=None)
    bounded = count_bounded(arr)
    return TwistedPrediction(
        applicable=True,
        reason="complexified real normal crossing arrangement, "
               "all coefficients nontrivial",
        concentrated_degree=n, dimension=bounded,
        canonical_map_bijective=None)


def one_dim_twisted_complex(points, md: MonodromyData) -> HomologySummary:
    """Locally finite twisted homology of C minus m points, by cells.

    The decomposition has one ray per removed point and a single
    two-dimensional cell whose incidence coefficient on ray j is tau_j - 1.
    Ranks are over the coefficient field; a formal GENERIC tau counts as
    nonzero incidence.
    """
    pts = tuple(points)
    if len(pts) != md.m:
        raise InputError("one monodromy coefficient per point expected")
    if len(set(pts)) != len(pts):
        raise InputError("points must be pairwise distinct")
    row_nonzero = False
    for t in md.taus:
        if t is GENERIC or t != _ONE:
            row_nonzero = True
            break
    boundary_rank = 1 if row_nonzero else 0
    ranks = {2: 1 - boundary_rank, 1: md.m - boundary_rank}
    return HomologySummary(ranks={d: r for d, r in ranks.items() if r},
                           torsion={}, reduced=False)
