"""Cohomology of arrangement complements from intersection-poset data.

For a real arrangement in R^N, the reduced cohomology of the complement
splits as a direct sum over poset nodes: the node with plane L contributes
its local pair homology H_{N - i - dim L - 1} to degree i.  Complex inputs
are realified first.  The same local data, shifted up by dim L instead,
describes the Borel-Moore homology of the support through its one-point
compactification, Alexander-dual to the complement's cohomology.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .arrangement import Arrangement, realify
from .complexes import DEFAULT_FACE_BUDGET, local_order_pair
from .homology import HomologySummary, pair_homology
from .poset import IntersectionPoset, build_intersection_poset
from .rationals import QI


def thread_count():
    raw = os.environ.get("ARRANGEMENTS_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def ordered_map(fn, items):
    """Map preserving order, threading only when explicitly configured."""
    n = thread_count()
    if n <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    from concurrent.futures import ThreadPoolExecutor
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))


@dataclass(frozen=True)
class GMContribution:
    """One node's summand placed in its cohomological degree."""

    degree: int           # cohomological degree of the complement
    node_index: int
    generators: tuple     # 1-based plane indices generating the node
    node_dim: int
    pair_degree: int      # homological degree in the local pair
    rank: int
    torsion: tuple
    filtration: int       # codimension of the node

    def to_json(self):
        return {"degree": self.degree, "node": self.node_index,
                "generators": list(self.generators), "node_dim": self.node_dim,
                "pair_degree": self.pair_degree, "rank": self.rank,
                "torsion": list(self.torsion), "filtration": self.filtration}

    @classmethod
    def from_json(cls, doc):
        return cls(degree=doc["degree"], node_index=doc["node"],
                   generators=tuple(doc["generators"]), node_dim=doc["node_dim"],
                   pair_degree=doc["pair_degree"], rank=doc["rank"],
                   torsion=tuple(doc["torsion"]), filtration=doc["filtration"])


@dataclass(frozen=True)
class GMReport:
    """Degree-by-degree assembly of the complement's reduced cohomology.

    Degree 0 is reduced: a complement with c connected components shows
    rank c - 1 there.
    """

    ambient_dim: int
    contributions: tuple
    realified_from_complex: bool = False

    def rank(self, degree):
        return sum(c.rank for c in self.contributions if c.degree == degree)

    def torsion_at(self, degree):
        out = []
        for c in self.contributions:
            if c.degree == degree:
                out.extend(c.torsion)
        return tuple(sorted(out))

    def degrees(self):
        return sorted({c.degree for c in self.contributions})

    def max_degree(self):
        return max(self.degrees(), default=0)

    def reduced_betti(self, top=None):
        if top is None:
            top = self.max_degree()
        return [self.rank(i) for i in range(top + 1)]

    def unreduced_betti(self, top=None):
        betti = self.reduced_betti(top)
        betti[0] += 1
        return betti

    def is_torsion_free(self):
        return all(not c.torsion for c in self.contributions)

    def reduced_euler(self):
        return sum((-1) ** c.degree * c.rank for c in self.contributions)

    def summary(self) -> HomologySummary:
        ranks = {d: self.rank(d) for d in self.degrees() if self.rank(d)}
        torsion = {d: self.torsion_at(d) for d in self.degrees()
                   if self.torsion_at(d)}
        return HomologySummary(ranks=ranks, torsion=torsion, reduced=True)

    def to_json(self):
        return {"ambient_dim": self.ambient_dim,
                "realified_from_complex": self.realified_from_complex,
                "contributions": [c.to_json() for c in self.contributions],
                "totals": {str(d): {"rank": self.rank(d),
                                    "torsion": list(self.torsion_at(d))}
                           for d in self.degrees()}}

    @classmethod
    def from_json(cls, doc):
        return cls(ambient_dim=doc["ambient_dim"],
                   contributions=tuple(GMContribution.from_json(c)
                                       for c in doc["contributions"]),
                   realified_from_complex=doc.get("realified_from_complex", False))


def _real_form(arr: Arrangement):
    if arr.field is QI:
        return realify(arr), True
    return arr, False


def gm_report(arr: Arrangement, poset: IntersectionPoset = None,
              budget=DEFAULT_FACE_BUDGET) -> GMReport:
    """Assemble the complement-cohomology decomposition of an arrangement."""
    real, realified = _real_form(arr)
    if poset is None or realified:
        poset = build_intersection_poset(real)
    n = real.ambient_dim

    def node_pair_summary(node):
        return pair_homology(local_order_pair(poset, node.index), budget=budget)

    summaries = ordered_map(node_pair_summary, list(poset.nodes))
    contributions = []
    for node, summ in zip(poset.nodes, summaries):
        for j in summ.degrees():
            rank = summ.rank(j)
            torsion = summ.torsion_at(j)
            if not rank and not torsion:
                continue
            degree = n - node.dim - 1 - j
            if degree < 0:
                raise AssertionError("negative cohomological degree")
            contributions.append(GMContribution(
                degree=degree, node_index=node.index,
                generators=tuple(i + 1 for i in sorted(node.generators)),
                node_dim=node.dim, pair_degree=j, rank=rank, torsion=torsion,
                filtration=node.codim))
    contributions.sort(key=lambda c: (c.degree, c.filtration, c.node_index))
    return GMReport(ambient_dim=n, contributions=tuple(contributions),
                    realified_from_complex=realified)


@dataclass(frozen=True)
class WedgeSummand:
    node_index: int
    generators: tuple
    node_dim: int
    pair_summary: HomologySummary

    def shifted_degrees(self):
        return {self.node_dim + j: (self.pair_summary.rank(j),
                                    self.pair_summary.torsion_at(j))
                for j in self.pair_summary.degrees()}

    def to_json(self):
        return {"node": self.node_index, "generators": list(self.generators),
                "node_dim": self.node_dim, "pair": self.pair_summary.to_json()}

    @classmethod
    def from_json(cls, doc):
        return cls(node_index=doc["node"], generators=tuple(doc["generators"]),
                   node_dim=doc["node_dim"],
                   pair_summary=HomologySummary.from_json(doc["pair"]))


@dataclass(frozen=True)
class WedgeSummary:
    """Homological shadow of the one-point compactification of the support.

    Each node carries its local pair homology suspended dim-L times; the
    totals give the Borel-Moore homology of the support, Alexander-dual to
    the complement report: BM degree j matches complement degree N - 1 - j.
    """

    ambient_dim: int
    summands: tuple

    def borel_moore_rank(self, degree):
        total = 0
        for s in self.summands:
            total += s.pair_summary.rank(degree - s.node_dim)
        return total

    def borel_moore_torsion(self, degree):
        out = []
        for s in self.summands:
            out.extend(s.pair_summary.torsion_at(degree - s.node_dim))
        return tuple(sorted(out))

    def degrees(self):
        out = set()
        for s in self.summands:
            out.update(s.shifted_degrees())
        return sorted(out)

    def to_json(self):
        return {"ambient_dim": self.ambient_dim,
                "summands": [s.to_json() for s in self.summands],
                "borel_moore": {str(d): {"rank": self.borel_moore_rank(d),
                                         "torsion": list(self.borel_moore_torsion(d))}
                                for d in self.degrees()}}

    @classmethod
    def from_json(cls, doc):
        return cls(ambient_dim=doc["ambient_dim"],
                   summands=tuple(WedgeSummand.from_json(s)
                                  for s in doc["summands"]))


def wedge_summary(arr: Arrangement, poset: IntersectionPoset = None,
                  budget=DEFAULT_FACE_BUDGET) -> WedgeSummary:
    real, _ = _real_form(arr)
    if poset is None or real is not arr:
        poset = build_intersection_poset(real)

    def summand(node):
        summ = pair_homology(local_order_pair(poset, node.index), budget=budget)
        return WedgeSummand(node_index=node.index,
                            generators=tuple(i + 1 for i in sorted(node.generators)),
                            node_dim=node.dim, pair_summary=summ)

    return WedgeSummary(ambient_dim=real.ambient_dim,
                        summands=tuple(ordered_map(summand, list(poset.nodes))))
