"""The shuffle product on the graded cohomology of a complement.

Classes live on poset nodes as relative cycles of the local pair: integer
combinations of containment chains ending at the node.  The product of
classes at transversal nodes I and J with nonempty intersection K merges
each pair of chains over all interleavings: every element is replaced by
its intersection with the last element of the other chain preceding it,
yielding a monotone chain ending at K.  Interleavings are signed by their
inversion parity, and one global sign per node pair compares the stacked
coorientation frames of I and J against the chosen frame of K.

Node coorientations are matrices whose rows span the normal space.  For a
realified complex arrangement the natural choice realifies the complex
canonical equations; with that choice every frame-comparison sign is +1
and the classical alternating relations hold on the nose.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .arrangement import Arrangement, CanonicalSubspace, realify, realify_rows
from .complexes import local_order_pair
from .gm import _real_form
from .homology import chain_complex, cycle_basis, express_cycle
from .linalg import Matrix, det, solve_in_row_span
from .poset import IntersectionPoset, build_intersection_poset, transversal
from .rationals import QI, QQ


@dataclass(frozen=True)
class GradedClass:
    """A relative cycle at a poset node.

    `chain` maps simplices (ascending tuples of poset node indices, ending
    at the node) to integer coefficients; `degree` is the simplex dimension.
    """

    node_index: int
    degree: int
    chain: tuple  # sorted ((simplex, coeff), ...) with nonzero coeffs

    @classmethod
    def from_dict(cls, node_index, degree, chain):
        items = tuple(sorted((s, c) for s, c in chain.items() if c))
        for simplex, _ in items:
            if len(simplex) != degree + 1:
                raise ValueError("simplex size does not match the degree")
            if simplex[-1] != node_index:
                raise ValueError("chain simplices must end at the node")
            if list(simplex) != sorted(set(simplex)):
                raise ValueError("simplices are strictly ascending node tuples")
        return cls(node_index=node_index, degree=degree, chain=items)

    def chain_dict(self):
        return dict(self.chain)

    def is_zero(self):
        return not self.chain

    def scaled(self, factor):
        return GradedClass.from_dict(
            self.node_index, self.degree,
            {s: factor * c for s, c in self.chain})


def relative_boundary(cls: GradedClass):
    """Boundary inside the relative complex (faces keeping the apex)."""
    out = {}
    for simplex, coeff in cls.chain:
        k = len(simplex) - 1
        for i in range(k):  # dropping the apex (last entry) leaves the pair
            face = simplex[:i] + simplex[i + 1:]
            out[face] = out.get(face, 0) + coeff * (-1) ** i
    return {f: c for f, c in out.items() if c}


def is_relative_cycle(cls: GradedClass) -> bool:
    return not relative_boundary(cls)


# ---------------------------------------------------------------------------
# Orientation frames
# ---------------------------------------------------------------------------

def canonical_orientations(poset: IntersectionPoset):
    """Default frames: the canonical equation rows of each node."""
    return {node.index: node.subspace.coefficient_rows()
            for node in poset.nodes}


def complex_orientations(real_arr: Arrangement, poset: IntersectionPoset):
    """Frames realified from the complex canonical equations.

    Requires an arrangement produced by realify(); each realified node is
    matched to its complex counterpart through the canonical form.
    """
    source = real_arr.complex_source
    if source is None:
        raise ValueError("arrangement was not produced by realification")
    complex_poset = build_intersection_poset(source)
    frames = {}
    for cnode in complex_poset.nodes:
        eq_rows = cnode.subspace.equations.rows
        real_eqs = []
        for row in eq_rows:
            coeffs, rhs = row[:-1], row[-1]
            re_row, im_row = [], []
            for c in coeffs:
                re_row.extend([c.re, -c.im])
                im_row.extend([c.im, c.re])
            real_eqs.append((re_row, rhs.re))
            real_eqs.append((im_row, rhs.im))
        sub = CanonicalSubspace.from_equations(QQ, 2 * source.ambient_dim, real_eqs)
        idx = poset.node_of(sub)
        frames[idx] = Matrix(QQ, realify_rows([r[:-1] for r in eq_rows]),
                             ncols=2 * source.ambient_dim)
    missing = set(range(len(poset.nodes))) - set(frames)
    if missing:
        raise ValueError("realified poset has nodes without complex source")
    return frames


def frame_sign(frames, poset, i, j, k):
    """Sign comparing (frame_i stacked on frame_j) with frame_k."""
    try:
        fi, fj, fk = frames[i], frames[j], frames[k]
    except KeyError as exc:
        raise ValueError(f"orientation data missing for node {exc}") from exc
    stacked = fi.stack(fj)
    change = solve_in_row_span(fk, stacked)
    d = det(change)
    if d == QQ.zero():
        raise AssertionError("coorientation frames are degenerate")
    return 1 if d > 0 else -1


# ---------------------------------------------------------------------------
# The product
# ---------------------------------------------------------------------------

def _merge(sim_a, sim_b, positions_a, subspaces, intersect_cache, node_lookup):
    """One interleaving: replace, intersect, and read off the merged chain.

    positions_a is the set of slots occupied by the first chain.  Returns
    (parity sign, merged tuple) or None when the merged chain degenerates.
    """
    total = len(sim_a) + len(sim_b)
    merged = []
    ia = ib = 0
    last_a = last_b = None
    inversions = 0
    for pos in range(total):
        if pos in positions_a:
            plane = sim_a[ia]
            ia += 1
            last_a = plane
            other = last_b
            inversions += ib  # b-elements already placed before this a
        else:
            plane = sim_b[ib]
            ib += 1
            last_b = plane
            other = last_a
        if other is None:
            merged.append(plane)
            continue
        key = (plane, other) if plane <= other else (other, plane)
        node = intersect_cache.get(key)
        if node is None:
            inter = subspaces[key[0]].intersect(subspaces[key[1]])
            node = node_lookup[inter]
            intersect_cache[key] = node
        merged.append(node)
    for prev, nxt in zip(merged, merged[1:]):
        if prev == nxt:
            return None
    return (-1) ** inversions, tuple(merged)


def shuffle_product(a: GradedClass, b: GradedClass, poset: IntersectionPoset,
                    frames) -> GradedClass | None:
    """Product of two graded classes, or None for the zero class.

    Zero when the underlying nodes are not transversal or their planes do
    not meet; otherwise a relative cycle at the intersection node.
    """
    ni, nj = a.node_index, b.node_index
    sub_i = poset.nodes[ni].subspace
    sub_j = poset.nodes[nj].subspace
    inter = sub_i.intersect(sub_j)
    if inter.is_empty or not transversal(poset, ni, nj):
        return None
    node_lookup = {node.subspace: node.index for node in poset.nodes}
    nk = node_lookup[inter]
    eps = frame_sign(frames, poset, ni, nj, nk)
    subspaces = {node.index: node.subspace for node in poset.nodes}
    intersect_cache = {}
    u, v = a.degree, b.degree
    out = {}
    slots = list(range(u + v + 2))
    for chosen in combinations(slots, u + 1):
        pos_a = set(chosen)
        for sim_a, ca in a.chain:
            for sim_b, cb in b.chain:
                res = _merge(sim_a, sim_b, pos_a, subspaces,
                             intersect_cache, node_lookup)
                if res is None:
                    continue
                parity, merged = res
                out[merged] = out.get(merged, 0) + eps * parity * ca * cb
    product = GradedClass.from_dict(nk, u + v + 1, out)
    if not is_relative_cycle(product):
        raise AssertionError("shuffle product failed to close up")
    return product


# ---------------------------------------------------------------------------
# Ring tables over a homology basis
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RingBasisElement:
    label: tuple            # (node index, pair degree, position)
    node_index: int
    pair_degree: int
    cohomological_degree: int
    cls: GradedClass


@dataclass
class GradedRingTable:
    """Structure constants of the shuffle product in a chosen basis."""

    ambient_dim: int
    basis: tuple                  # RingBasisElement, deterministic order
    products: dict                # (label, label) -> {label: Fraction}
    skipped_torsion: tuple        # (node, degree, order) triples left out
    frames_source: str

    def element(self, label):
        for e in self.basis:
            if e.label == label:
                return e
        raise KeyError(label)

    def labels_of_degree(self, degree):
        return [e.label for e in self.basis
                if e.cohomological_degree == degree]

    def product_coefficients(self, la, lb):
        return self.products.get((la, lb), {})

    def to_json(self):
        def label_str(label):
            return f"{label[0]}:{label[1]}:{label[2]}"
        return {
            "ambient_dim": self.ambient_dim,
            "frames": self.frames_source,
            "basis": [{"label": label_str(e.label), "node": e.node_index,
                       "pair_degree": e.pair_degree,
                       "degree": e.cohomological_degree,
                       "chain": [{"simplex": list(s), "coeff": c}
                                 for s, c in e.cls.chain]}
                      for e in self.basis],
            "products": [{"left": label_str(la), "right": label_str(lb),
                          "coefficients": {label_str(lc): QQ.to_json(x)
                                           for lc, x in sorted(coeffs.items())}}
                         for (la, lb), coeffs in sorted(self.products.items())],
            "skipped_torsion": [list(t) for t in self.skipped_torsion],
        }


def graded_ring_table(arr: Arrangement, frames=None,
                      max_total_degree=None) -> GradedRingTable:
    """Multiplication table on a homology basis of every node's local pair.

    Torsion classes are excluded (and reported); the basis of each free
    part comes from Smith certificates of the local chain complex.  When
    no frames are given, realified complex inputs get complex frames and
    everything else the canonical equation frames.
    """
    real, realified = _real_form(arr)
    poset = build_intersection_poset(real)
    frames_source = "explicit"
    if frames is None:
        if realified or real.complex_source is not None:
            frames = complex_orientations(real, poset)
            frames_source = "complex"
        else:
            frames = canonical_orientations(poset)
            frames_source = "canonical"
    n = real.ambient_dim

    basis = []
    skipped = []
    chain_data = {}
    bases_by_node_degree = {}
    for node in poset.nodes:
        pair = local_order_pair(poset, node.index)
        cc = chain_complex(pair)
        labels = pair.total.labels  # global poset indices, ascending
        chain_data[node.index] = (cc, labels)
        for degree in cc.degrees():
            cb = cycle_basis(cc, degree)
            bases_by_node_degree[(node.index, degree)] = cb
            for order_pair in cb.torsion:
                skipped.append((node.index, degree, order_pair[1]))
            for pos, vec in enumerate(cb.free):
                gens = cc.generators[degree]
                chain = {}
                for gi, coeff in enumerate(vec):
                    if coeff:
                        simplex = tuple(labels[vv] for vv in sorted(gens[gi]))
                        chain[simplex] = coeff
                cls = GradedClass.from_dict(node.index, degree, chain)
                basis.append(RingBasisElement(
                    label=(node.index, degree, pos), node_index=node.index,
                    pair_degree=degree,
                    cohomological_degree=n - node.dim - 1 - degree,
                    cls=cls))
    basis.sort(key=lambda e: e.label)

    products = {}
    for ea in basis:
        for eb in basis:
            if max_total_degree is not None and \
                    ea.cohomological_degree + eb.cohomological_degree > max_total_degree:
                continue
            prod = shuffle_product(ea.cls, eb.cls, poset, frames)
            key = (ea.label, eb.label)
            if prod is None or prod.is_zero():
                products[key] = {}
                continue
            cc, labels = chain_data[prod.node_index]
            degree = prod.degree
            gens = cc.generators.get(degree, [])
            index = {tuple(labels[vv] for vv in sorted(g)): gi
                     for gi, g in enumerate(gens)}
            vector = [0] * len(gens)
            for simplex, coeff in prod.chain:
                vector[index[simplex]] = coeff
            cb = bases_by_node_degree[(prod.node_index, degree)]
            free_coeffs, torsion_coeffs = express_cycle(cb, vector)
            coeffs = {}
            for pos, c in enumerate(free_coeffs):
                if c:
                    coeffs[(prod.node_index, degree, pos)] = c
            if any(torsion_coeffs):
                skipped.append((prod.node_index, degree, "product-torsion"))
            products[key] = coeffs
    return GradedRingTable(ambient_dim=n, basis=tuple(basis), products=products,
                           skipped_torsion=tuple(skipped),
                           frames_source=frames_source)


def class_of_plane(table: GradedRingTable, poset: IntersectionPoset,
                   plane_index: int):
    """The degree-0 basis label at the node of an original plane (0-based)."""
    node = poset.plane_node_index(plane_index)
    labels = [e.label for e in table.basis
              if e.node_index == node and e.pair_degree == 0]
    if len(labels) != 1:
        raise ValueError("plane node does not carry a single degree-0 class")
    return labels[0]
