"""Affine plane arrangements and canonical subspaces.

A plane is stored as the canonical solved form of its defining equations:
the reduced row echelon form of the augmented system [A | b], with the fixed
pivoting rule of :mod:`arrangements.linalg`.  Two affine subspaces are equal
as point sets exactly when their canonical forms coincide, which makes
subspaces hashable keys and intersection posets deterministic.
"""

from __future__ import annotations

from .rationals import QQ, QI, GaussianRational, field_by_tag
from .linalg import Matrix, rref


class InputError(ValueError):
    """Malformed or inconsistent arrangement input."""


class SizeLimitError(ValueError):
    """A hard size cap was exceeded (the computation was not attempted)."""


MAX_PLANES = 64


class CanonicalSubspace:
    """An affine subspace of Q^N or Q(i)^N in canonical solved form."""

    __slots__ = ("field", "ambient_dim", "equations", "is_empty")

    def __init__(self, field, ambient_dim, equations, is_empty):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "equations", equations)  # rref of [A | b]
        object.__setattr__(self, "is_empty", is_empty)

    def __setattr__(self, name, value):
        raise AttributeError("CanonicalSubspace is immutable")

    @classmethod
    def from_equations(cls, field, ambient_dim, equations):
        """Build from (coefficient row, constant) pairs."""
        rows = []
        for coeffs, rhs in equations:
            coeffs = list(coeffs)
            if len(coeffs) != ambient_dim:
                raise InputError(
                    f"equation has {len(coeffs)} coefficients, ambient dim is {ambient_dim}")
            rows.append(coeffs + [rhs])
        aug = Matrix(field, rows, ncols=ambient_dim + 1)
        return cls._from_augmented(aug)

    @classmethod
    def _from_augmented(cls, aug):
        field = aug.field
        n = aug.ncols - 1
        red, rk, pivots = rref(aug)
        empty = n in pivots
        kept = tuple(red.rows[i] for i in range(rk))
        canon = Matrix(field, kept, ncols=n + 1)
        return cls(field, n, canon, empty)

    @classmethod
    def whole_space(cls, field, ambient_dim):
        return cls(field, ambient_dim, Matrix(field, [], ncols=ambient_dim + 1), False)

    @property
    def rank(self):
        return self.equations.nrows

    @property
    def dim(self):
        if self.is_empty:
            raise ValueError("empty subspace has no dimension")
        return self.ambient_dim - self.rank

    @property
    def codim(self):
        return self.ambient_dim - self.dim

    def coefficient_rows(self):
        """The A part of the canonical system, one row per equation."""
        return Matrix(self.field, [r[:-1] for r in self.equations.rows],
                      ncols=self.ambient_dim)

    def constants(self):
        return tuple(r[-1] for r in self.equations.rows)

    def intersect(self, other):
        if other.ambient_dim != self.ambient_dim or other.field is not self.field:
            raise ValueError("intersect: incompatible subspaces")
        if self.is_empty or other.is_empty:
            return CanonicalSubspace(self.field, self.ambient_dim,
                                     self.equations, True)
        return CanonicalSubspace._from_augmented(self.equations.stack(other.equations))

    def contains(self, other):
        """Set containment: other is a subset of self."""
        if self.is_empty:
            return other.is_empty
        if other.is_empty:
            return True
        return self.intersect(other) == other

    def contains_point(self, point):
        zero = self.field.zero()
        for row in self.equations.rows:
            acc = zero
            for c, x in zip(row[:-1], point):
                acc = acc + c * x
            if acc != row[-1]:
                return False
        return True

    def key(self):
        return (self.ambient_dim, self.is_empty, self.equations.rows)

    def sort_key(self):
        return (self.codim, self.equations.sort_key())

    def __eq__(self, other):
        if not isinstance(other, CanonicalSubspace):
            return NotImplemented
        return (self.field is other.field and self.key() == other.key())

    def __hash__(self):
        return hash((self.field.tag,) + (self.ambient_dim, self.is_empty,
                                         self.equations.rows))

    def __repr__(self):
        state = "empty" if self.is_empty else f"dim {self.dim}"
        return f"<CanonicalSubspace {state} in {self.field.tag}^{self.ambient_dim}>"


class Arrangement:
    """A finite collection of affine planes in Q^N or Q(i)^N.

    Planes are validated on construction: every plane must be a nonempty
    proper subspace, and no two planes may coincide (one plane containing
    another is fine and is recorded in the intersection poset as usual).
    """

    def __init__(self, field, ambient_dim, planes, labels=None, complex_source=None):
        planes = tuple(planes)
        if not planes:
            raise InputError("an arrangement needs at least one plane")
        if len(planes) > MAX_PLANES:
            raise SizeLimitError(f"at most {MAX_PLANES} planes supported")
        if labels is None:
            labels = tuple(f"L{i + 1}" for i in range(len(planes)))
        labels = tuple(labels)
        if len(labels) != len(planes):
            raise InputError("labels length must match number of planes")
        seen = {}
        for i, p in enumerate(planes):
            if p.field is not field or p.ambient_dim != ambient_dim:
                raise InputError(f"plane {labels[i]} does not live in "
                                 f"{field.tag}^{ambient_dim}")
            if p.is_empty:
                raise InputError(f"plane {labels[i]} has inconsistent equations "
                                 "(empty solution set)")
            if p.rank == 0:
                raise InputError(f"plane {labels[i]} is the whole space")
            k = p.key()
            if k in seen:
                raise InputError(f"planes {labels[seen[k]]} and {labels[i]} coincide")
            seen[k] = i
        self.field = field
        self.ambient_dim = ambient_dim
        self.planes = planes
        self.labels = labels
        self.complex_source = complex_source

    @property
    def m(self):
        return len(self.planes)

    def is_central(self):
        """True when every plane contains the origin."""
        zero = self.field.zero()
        return all(all(c == zero for c in p.constants()) for p in self.planes)

    def all_hyperplanes(self):
        return all(p.codim == 1 for p in self.planes)

    def require_hyperplanes(self, what):
        if not self.all_hyperplanes():
            raise InputError(f"{what} requires a hyperplane arrangement")

    def hyperplane_rows(self):
        """For a hyperplane arrangement, the canonical (coeffs, rhs) per plane."""
        self.require_hyperplanes("hyperplane data")
        out = []
        for p in self.planes:
            row = p.equations.rows[0]
            out.append((row[:-1], row[-1]))
        return out


def from_plane_equations(field, ambient_dim, plane_equations, labels=None):
    """Each plane is a list of (coefficient row, constant) pairs."""
    planes = [CanonicalSubspace.from_equations(field, ambient_dim, eqs)
              for eqs in plane_equations]
    return Arrangement(field, ambient_dim, planes, labels)


def parse_arrangement(document) -> Arrangement:
    """Parse the JSON arrangement document format.

    Expected shape::

        {"ambient_dim": 2, "field": "Q",
         "planes": [{"label": "x", "equations": [["1", "0", "0"]]}, ...]}

    Each equation row is [a_1, ..., a_N, b] meaning a.x = b; entries are
    exact scalar strings or integers (Gaussian entries are {"re","im"}
    records).
    """
    import json

    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON at line {exc.lineno} column {exc.colno}: "
                             f"{exc.msg}") from exc
    if not isinstance(document, dict):
        raise InputError("arrangement document must be a JSON object")
    for key in ("ambient_dim", "field", "planes"):
        if key not in document:
            raise InputError(f"missing field {key!r}")
    extra = set(document) - {"ambient_dim", "field", "planes"}
    if extra:
        raise InputError(f"unexpected fields: {sorted(extra)}")
    n = document["ambient_dim"]
    if not isinstance(n, int) or n < 1:
        raise InputError("ambient_dim must be a positive integer")
    field = field_by_tag(document["field"]) if isinstance(document["field"], str) \
        else None
    if field is None:
        raise InputError("field must be the string 'Q' or 'Q(i)'")
    planes_doc = document["planes"]
    if not isinstance(planes_doc, list) or not planes_doc:
        raise InputError("planes must be a nonempty array")
    planes = []
    labels = []
    zero = field.zero()
    for pi, pdoc in enumerate(planes_doc):
        where = f"planes[{pi}]"
        if not isinstance(pdoc, dict) or "equations" not in pdoc:
            raise InputError(f"{where}: expected an object with 'equations'")
        label = pdoc.get("label", f"L{pi + 1}")
        eq_doc = pdoc["equations"]
        if not isinstance(eq_doc, list) or not eq_doc:
            raise InputError(f"{where}.equations: expected a nonempty array")
        eqs = []
        for ei, row in enumerate(eq_doc):
            loc = f"{where}.equations[{ei}]"
            if not isinstance(row, list) or len(row) != n + 1:
                raise InputError(f"{loc}: expected {n + 1} entries [a_1..a_N, b]")
            try:
                parsed = [field.parse(x) for x in row]
            except ValueError as exc:
                raise InputError(f"{loc}: {exc}") from exc
            if all(c == zero for c in parsed[:-1]):
                raise InputError(f"{loc}: zero coefficient row")
            eqs.append((parsed[:-1], parsed[-1]))
        sub = CanonicalSubspace.from_equations(field, n, eqs)
        if sub.is_empty:
            raise InputError(f"plane {label!r} has inconsistent equations")
        planes.append(sub)
        labels.append(str(label))
    return Arrangement(field, n, planes, labels)


def arrangement_to_document(arr: Arrangement) -> dict:
    """Serialize back to the document format (canonical equations)."""
    planes = []
    for p, label in zip(arr.planes, arr.labels):
        eqs = [[arr.field.to_json(x) for x in row] for row in p.equations.rows]
        planes.append({"label": label, "equations": eqs})
    return {"ambient_dim": arr.ambient_dim, "field": arr.field.tag, "planes": planes}


def complexify(arr: Arrangement) -> Arrangement:
    """Read a real arrangement's equations over Q(i) (same ambient dimension)."""
    if arr.field is not QQ:
        raise InputError("complexify expects a rational arrangement")
    planes = []
    for p in arr.planes:
        eqs = [([GaussianRational(c, 0) for c in row[:-1]], GaussianRational(row[-1], 0))
               for row in p.equations.rows]
        planes.append(CanonicalSubspace.from_equations(QI, arr.ambient_dim, eqs))
    return Arrangement(QI, arr.ambient_dim, planes, arr.labels)


def realify(arr: Arrangement) -> Arrangement:
    """Turn a Q(i) arrangement in C^N into a Q arrangement in R^(2N).

    Coordinates interleave as (x_1, y_1, ..., x_N, y_N) with z_k = x_k + i y_k;
    each complex equation contributes its real and imaginary parts.  The
    result remembers its complex source, which downstream consumers use to
    pick complex orientation frames.
    """
    if arr.field is not QI:
        raise InputError("realify expects a Q(i) arrangement")
    n = arr.ambient_dim
    planes = []
    for p in arr.planes:
        eqs = []
        for row in p.equations.rows:
            coeffs, rhs = row[:-1], row[-1]
            re_row, im_row = [], []
            for c in coeffs:
                re_row.extend([c.re, -c.im])
                im_row.extend([c.im, c.re])
            eqs.append((re_row, rhs.re))
            eqs.append((im_row, rhs.im))
        planes.append(CanonicalSubspace.from_equations(QQ, 2 * n, eqs))
    return Arrangement(QQ, 2 * n, planes, arr.labels, complex_source=arr)


def realify_rows(complex_rows):
    """Realify a Q(i) coefficient matrix row by row (no constants)."""
    out = []
    for row in complex_rows:
        re_row, im_row = [], []
        for c in row:
            re_row.extend([c.re, -c.im])
            im_row.extend([c.im, c.re])
        out.append(re_row)
        out.append(im_row)
    return out


def complexified_double(arr: Arrangement) -> Arrangement:
    """Realified complexification of a real arrangement (R^N -> R^(2N))."""
    return realify(complexify(arr))
