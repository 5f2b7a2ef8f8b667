"""Intersection posets of plane arrangements.

The nodes are the distinct nonempty intersections of subcollections of
planes, ordered by reverse inclusion (bigger plane = smaller node).  The
ambient space acts as a virtual bottom element for Mobius values but is
never itself a node.  Node order is deterministic: by codimension, then by
the canonical form, so identical inputs always produce identical posets.
"""

from __future__ import annotations

from itertools import combinations

from .arrangement import Arrangement, CanonicalSubspace, InputError, SizeLimitError
from .linalg import Matrix, rank, rref


class PosetNode:
    __slots__ = ("index", "subspace", "generators", "dim", "codim")

    def __init__(self, index, subspace, generators):
        self.index = index
        self.subspace = subspace
        self.generators = generators  # frozenset of 0-based plane indices
        self.dim = subspace.dim
        self.codim = subspace.codim

    def __repr__(self):
        gens = ",".join(str(i + 1) for i in sorted(self.generators))
        return f"<node {self.index}: dim {self.dim}, planes {{{gens}}}>"


class IntersectionPoset:
    """Nodes, the strict order relation, and Mobius values mu(0-hat, node)."""

    def __init__(self, arrangement, nodes, less, mobius):
        self.arrangement = arrangement
        self.nodes = tuple(nodes)
        self.less = frozenset(less)   # (i, j) with node_i a strict superset of node_j
        self.mobius = tuple(mobius)
        self._by_subspace = {node.subspace: node.index for node in self.nodes}

    def __len__(self):
        return len(self.nodes)

    def node_of(self, subspace: CanonicalSubspace):
        idx = self._by_subspace.get(subspace)
        if idx is None:
            raise KeyError("subspace is not a poset node")
        return idx

    def strictly_below(self, j):
        """Indices of nodes strictly containing node j (bigger planes)."""
        return [i for i in range(len(self.nodes)) if (i, j) in self.less]

    def strictly_above(self, i):
        return [j for j in range(len(self.nodes)) if (i, j) in self.less]

    def upset_planes(self, j):
        """Nodes whose plane contains node j, including j itself."""
        return sorted(self.strictly_below(j) + [j])

    def covers(self):
        """Covering pairs (i, j): i < j with nothing strictly between."""
        out = set()
        for (i, j) in self.less:
            if not any((i, k) in self.less and (k, j) in self.less
                       for k in range(len(self.nodes))):
                out.add((i, j))
        return out

    def plane_node_index(self, plane_index):
        """Poset node corresponding to an original plane."""
        return self.node_of(self.arrangement.planes[plane_index])


def build_intersection_poset(arr: Arrangement) -> IntersectionPoset:
    """Close the planes under pairwise intersection and compute Mobius values.

    Pairwise closure reaches every nonempty L_I without walking all 2^m
    subsets; the generator set of a node is recovered afterwards by plane
    membership tests.
    """
    by_key = {}
    for p in arr.planes:
        by_key[p.key()] = p
    frontier = list(by_key.values())
    while frontier:
        fresh = []
        current = list(by_key.values())
        for s in frontier:
            for t in current:
                u = s.intersect(t)
                if u.is_empty:
                    continue
                k = u.key()
                if k not in by_key:
                    by_key[k] = u
                    fresh.append(u)
        frontier = fresh

    subspaces = sorted(by_key.values(), key=lambda s: s.sort_key())
    nodes = []
    for idx, sub in enumerate(subspaces):
        gens = frozenset(i for i, p in enumerate(arr.planes) if p.contains(sub))
        nodes.append(PosetNode(idx, sub, gens))

    less = set()
    for i, a in enumerate(nodes):
        for j, b in enumerate(nodes):
            if i != j and a.codim < b.codim and a.subspace.contains(b.subspace):
                less.add((i, j))

    # mu(0-hat, x) with the ambient space as virtual bottom, in codim order
    mobius = [0] * len(nodes)
    for j, node in enumerate(nodes):
        acc = 1  # mu(0-hat, 0-hat)
        for i in range(len(nodes)):
            if (i, j) in less:
                acc += mobius[i]
        mobius[j] = -acc
    return IntersectionPoset(arr, nodes, less, mobius)


class DimensionSignature:
    """dim L_I (or None for empty) for every nonempty subset I of planes."""

    def __init__(self, m, table):
        self.m = m
        self.table = dict(table)  # frozenset of 0-based indices -> int | None

    def __getitem__(self, subset):
        return self.table[frozenset(subset)]

    def __eq__(self, other):
        if not isinstance(other, DimensionSignature):
            return NotImplemented
        return self.m == other.m and self.table == other.table


MAX_SIGNATURE_PLANES = 20


def dimensional_data(arr: Arrangement) -> DimensionSignature:
    """Exact dimension (or emptiness) of L_I for all 2^m - 1 subsets."""
    m = arr.m
    if m > MAX_SIGNATURE_PLANES:
        raise SizeLimitError(
            f"dimensional data is exponential in m; capped at {MAX_SIGNATURE_PLANES}")
    cache = {}
    table = {}
    for i, p in enumerate(arr.planes):
        key = frozenset([i])
        cache[key] = p
        table[key] = p.dim
    for size in range(2, m + 1):
        for subset in combinations(range(m), size):
            key = frozenset(subset)
            smaller = frozenset(subset[:-1])
            prev = cache.get(smaller)
            if prev is None:  # empty already
                table[key] = None
                cache[key] = None
                continue
            inter = prev.intersect(arr.planes[subset[-1]])
            if inter.is_empty:
                table[key] = None
                cache[key] = None
            else:
                table[key] = inter.dim
                cache[key] = inter
    return DimensionSignature(m, table)


def is_normal_crossings(arr: Arrangement, poset=None) -> bool:
    """Every nonempty L_I has codimension equal to |I| (empty L_I allowed)."""
    arr.require_hyperplanes("normal crossings test")
    if poset is None:
        poset = build_intersection_poset(arr)
    return all(len(n.generators) == n.codim for n in poset.nodes)


def is_generic(arr: Arrangement) -> bool:
    """Normal crossings even after adjoining the hyperplane at infinity.

    The test homogenizes the hyperplanes into a central arrangement one
    dimension up, adjoins the improper hyperplane, and checks the normal
    crossing condition on every node that is projectively nonempty.
    """
    arr.require_hyperplanes("genericity test")
    field = arr.field
    n = arr.ambient_dim
    zero, one = field.zero(), field.one()
    rows = []
    for coeffs, rhs in arr.hyperplane_rows():
        rows.append(list(coeffs) + [zero - rhs])
    rows.append([zero] * n + [one])  # the improper hyperplane
    planes = [CanonicalSubspace.from_equations(field, n + 1, [(r, zero)])
              for r in rows]
    try:
        central = Arrangement(field, n + 1, planes)
    except InputError:
        return False  # two planes met the improper hyperplane identically
    poset = build_intersection_poset(central)
    for node in poset.nodes:
        if node.dim >= 1 and len(node.generators) != node.codim:
            return False
    return True


def transversal(poset: IntersectionPoset, i: int, j: int) -> bool:
    """codim(L_I meet L_J) == codim L_I + codim L_J, with nonempty meet."""
    a = poset.nodes[i].subspace
    b = poset.nodes[j].subspace
    inter = a.intersect(b)
    if inter.is_empty:
        return False
    return inter.codim == a.codim + b.codim


def is_ge2_arrangement(poset: IntersectionPoset) -> bool:
    """Every strict incidence of nodes drops dimension by at least 2."""
    for (i, j) in poset.less:
        if poset.nodes[i].dim - poset.nodes[j].dim < 2:
            return False
    return True


def characteristic_polynomial(poset: IntersectionPoset):
    """Coefficients (low degree first) of sum_x mu(0,x) t^{dim x}, with the
    ambient space included as the t^N term."""
    n = poset.arrangement.ambient_dim
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    for node, mu in zip(poset.nodes, poset.mobius):
        coeffs[node.dim] += mu
    return coeffs
