"""Finite simplicial complexes attached to arrangements.

Four families are built here:

* the order complex of an intersection poset (simplices = chains);
* local pairs (chains through a fixed node, and their link);
* naive pairs (the full simplex on a node's generators, against the union
  of marginal faces whose intersection is strictly bigger);
* connected graph and hypergraph pairs: the full simplex on all C(N,2)
  edges (or C(N,k) hyperedges) of N labelled nodes, against the subcomplex
  of faces that fail to connect the nodes.

Complexes are stored by their maximal faces; full face enumeration happens
lazily and is bounded by an explicit face-count budget.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

from .arrangement import InputError
from .poset import IntersectionPoset

DEFAULT_FACE_BUDGET = 2_000_000


class BudgetExceeded(RuntimeError):
    """The face-count budget would be exceeded; computation not attempted."""


class SimplicialComplex:
    """An abstract simplicial complex stored by facets.

    Vertices are indices into `labels`; facets are frozensets of vertex
    indices, normalized to be inclusion-maximal and pairwise distinct.  The
    void complex (no faces at all) is allowed and distinct from the complex
    whose only face is empty.
    """

    def __init__(self, labels, facets):
        self.labels = tuple(labels)
        n = len(self.labels)
        cleaned = []
        for f in facets:
            fs = frozenset(f)
            if any(v < 0 or v >= n for v in fs):
                raise ValueError("facet vertex out of range")
            cleaned.append(fs)
        cleaned = set(cleaned)
        maximal = [f for f in cleaned
                   if not any(f < g for g in cleaned)]
        self.facets = tuple(sorted(maximal, key=lambda f: (len(f), sorted(f))))

    def is_void(self):
        return not self.facets or self.facets == (frozenset(),)

    def vertices(self):
        out = set()
        for f in self.facets:
            out |= f
        return out

    def dimension(self):
        if self.is_void():
            return -1
        return max(len(f) for f in self.facets) - 1

    def is_full_simplex(self):
        return len(self.facets) == 1 and len(self.facets[0]) == len(self.labels)

    def face_count_bound(self):
        return sum(2 ** len(f) for f in self.facets)

    def faces(self, budget=DEFAULT_FACE_BUDGET):
        """All nonempty faces, as a set of frozensets."""
        out = set()
        for f in self.facets:
            elems = sorted(f)
            if 2 ** len(elems) > budget:
                raise BudgetExceeded(
                    f"facet with {len(elems)} vertices exceeds face budget {budget}")
            for size in range(1, len(elems) + 1):
                for c in combinations(elems, size):
                    out.add(frozenset(c))
                    if len(out) > budget:
                        raise BudgetExceeded(
                            f"face count exceeds budget {budget}")
        return out

    def has_face(self, face):
        face = frozenset(face)
        return any(face <= f for f in self.facets)

    def to_json(self):
        return {"labels": [list(l) if isinstance(l, tuple) else l
                           for l in self.labels],
                "facets": [sorted(f) for f in self.facets]}


class SimplicialPair:
    """A complex together with a distinguished subcomplex (same labelling)."""

    def __init__(self, total: SimplicialComplex, sub: SimplicialComplex):
        if sub.labels != total.labels:
            raise ValueError("pair must share one vertex labelling")
        for f in sub.facets:
            if f and not total.has_face(f):
                raise ValueError("sub is not a subcomplex of total")
        self.total = total
        self.sub = sub

    def to_json(self):
        return {"total": self.total.to_json(), "sub": self.sub.to_json()}


def order_complex(poset: IntersectionPoset) -> SimplicialComplex:
    """Vertices are the poset nodes, facets the maximal chains."""
    n = len(poset.nodes)
    succ = {i: [] for i in range(n)}
    pred_count = [0] * n
    for (i, j) in poset.covers():
        succ[i].append(j)
        pred_count[j] += 1
    labels = tuple(node.index for node in poset.nodes)
    if n == 0:
        return SimplicialComplex((), ())
    facets = []
    minimal = [i for i in range(n) if pred_count[i] == 0]

    def walk(i, chain):
        nxt = succ[i]
        if not nxt:
            facets.append(frozenset(chain))
            return
        for j in sorted(nxt):
            chain.append(j)
            walk(j, chain)
            chain.pop()

    for i in sorted(minimal):
        walk(i, [i])
    return SimplicialComplex(labels, facets)


def _chains_complex(member_indices, less) -> SimplicialComplex:
    """Order complex of the induced subposet on the given node indices."""
    members = sorted(member_indices)
    local = {v: k for k, v in enumerate(members)}
    rel = {(local[i], local[j]) for (i, j) in less
           if i in local and j in local}
    n = len(members)
    covers = {(i, j) for (i, j) in rel
              if not any((i, k) in rel and (k, j) in rel for k in range(n))}
    succ = {i: [] for i in range(n)}
    pred_count = [0] * n
    for (i, j) in covers:
        succ[i].append(j)
        pred_count[j] += 1
    facets = []
    minimal = [i for i in range(n) if pred_count[i] == 0]

    def walk(i, chain):
        nxt = succ[i]
        if not nxt:
            facets.append(frozenset(chain))
            return
        for j in sorted(nxt):
            chain.append(j)
            walk(j, chain)
            chain.pop()

    for i in sorted(minimal):
        walk(i, [i])
    return SimplicialComplex(tuple(members), facets)


def local_order_pair(poset: IntersectionPoset, node_index: int) -> SimplicialPair:
    """Chains through planes containing the node, and the link of the node.

    The total complex is a cone whose apex is the node itself; the sub
    complex consists of the chains that avoid the apex.
    """
    up = poset.upset_planes(node_index)
    total = _chains_complex(up, poset.less)
    strict = [i for i in up if i != node_index]
    apex_local = total.labels.index(node_index)
    if strict:
        sub_local = _chains_complex(strict, poset.less)
        # re-express sub facets in the total's labelling
        remap = {k: total.labels.index(v) for k, v in enumerate(sub_local.labels)}
        sub_facets = [frozenset(remap[v] for v in f) for f in sub_local.facets]
    else:
        sub_facets = []
    sub = SimplicialComplex(total.labels, sub_facets)
    # every maximal chain must end at the node: the total is a cone
    assert all(apex_local in f for f in total.facets)
    return SimplicialPair(total, sub)


def naive_pair(poset: IntersectionPoset, node_index: int) -> SimplicialPair:
    """Full simplex on the node's generators, against its marginal faces.

    A face J of the simplex is marginal when the intersection of the planes
    in J is strictly bigger than the node.
    """
    node = poset.nodes[node_index]
    gens = sorted(node.generators)
    if len(gens) > 20:
        raise BudgetExceeded("naive pair on more than 20 generators")
    arr = poset.arrangement
    labels = tuple(gens)
    k = len(gens)
    total = SimplicialComplex(labels, [frozenset(range(k))])
    target_codim = node.codim

    codim_cache = {}

    def codim_of(face):
        key = face
        got = codim_cache.get(key)
        if got is not None:
            return got
        sub = None
        for v in face:
            p = arr.planes[labels[v]]
            sub = p if sub is None else sub.intersect(p)
        c = sub.codim
        codim_cache[key] = c
        return c

    marginal_maximal = set()
    seen = set()

    def expand(face):
        if face in seen:
            return
        seen.add(face)
        if codim_of(face) < target_codim:
            marginal_maximal.add(face)
            return
        for v in face:
            smaller = face - {v}
            if smaller:
                expand(smaller)

    expand(frozenset(range(k)))
    maximal = [f for f in marginal_maximal
               if not any(f < g for g in marginal_maximal)]
    sub = SimplicialComplex(labels, maximal)
    return SimplicialPair(total, sub)


# ---------------------------------------------------------------------------
# Graph and hypergraph complexes
# ---------------------------------------------------------------------------

def hyperedges_connected(edges, n_nodes) -> bool:
    """True when the hyperedges cover all nodes and tie them together.

    Nodes are connected when linked by a chain of overlapping hyperedges;
    an uncovered node makes the face disconnected.
    """
    if n_nodes <= 1:
        return True
    parent = list(range(n_nodes + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    covered = set()
    for e in edges:
        it = iter(e)
        first = next(it)
        covered.add(first)
        ra = find(first)
        for v in it:
            covered.add(v)
            rb = find(v)
            if ra != rb:
                parent[rb] = ra
    if len(covered) < n_nodes:
        return False
    root = find(next(iter(covered)))
    return all(find(v) == root for v in covered)


def k_hypergraph_pair(n: int, k: int) -> SimplicialPair:
    """The simplex on all k-subsets of {1..n} against non-connected faces.

    Facets of the sub complex come from splitting the n nodes into two
    nonempty parts and keeping only hyperedges inside a part.
    """
    if not (2 <= k <= n <= 8):
        raise InputError("k-hypergraph pair needs 2 <= k <= n <= 8")
    hyperedges = [tuple(c) for c in combinations(range(1, n + 1), k)]
    index = {e: i for i, e in enumerate(hyperedges)}
    labels = tuple(hyperedges)
    total = SimplicialComplex(labels, [frozenset(range(len(hyperedges)))])
    sub_facets = []
    rest = list(range(2, n + 1))
    for size in range(0, n - 1):
        for chosen in combinations(rest, size):
            part = {1, *chosen}
            other = set(range(1, n + 1)) - part
            face = {index[e] for e in hyperedges
                    if set(e) <= part or set(e) <= other}
            if face:
                sub_facets.append(frozenset(face))
    sub = SimplicialComplex(labels, sub_facets)
    return SimplicialPair(total, sub)


def connected_graph_pair(n: int) -> SimplicialPair:
    """The graph case: simplex on the C(n,2) edges against disconnected graphs."""
    if not (2 <= n <= 8):
        raise InputError("connected graph pair needs 2 <= n <= 8")
    return k_hypergraph_pair(n, 2)


def face_labels(pair: SimplicialPair, face):
    return tuple(pair.total.labels[v] for v in sorted(face))
