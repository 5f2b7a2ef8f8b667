"""Exact linear algebra over Q and Q(i), and Smith normal form over Z.

Row reduction uses a fixed pivoting rule (first nonzero entry in column
order), so reduced forms are canonical and usable as dictionary keys.  Smith
normal form works with arbitrary-precision integers throughout; the sparse
variant clears unit pivots greedily and falls back to the dense algorithm on
whatever core remains, which keeps desk-scale chain complexes fast without
giving up exactness.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .rationals import QQ, QI


class Matrix:
    """Immutable dense matrix over an exact field (QQ or QI)."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field, rows, ncols=None):
        rows = tuple(tuple(r) for r in rows)
        if rows:
            ncols = len(rows[0])
            if any(len(r) != ncols for r in rows):
                raise ValueError("ragged rows")
        elif ncols is None:
            raise ValueError("empty matrix needs explicit ncols")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", ncols)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.field is other.field and self.ncols == other.ncols
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.field.tag, self.ncols, self.rows))

    def __repr__(self):
        return f"Matrix({self.field!r}, {[list(r) for r in self.rows]!r})"

    @classmethod
    def identity(cls, field, n):
        one, zero = field.one(), field.zero()
        return cls(field, [[one if i == j else zero for j in range(n)]
                           for i in range(n)], ncols=n)

    @classmethod
    def zero(cls, field, nrows, ncols):
        z = field.zero()
        return cls(field, [[z] * ncols for _ in range(nrows)], ncols=ncols)

    def entry(self, i, j):
        return self.rows[i][j]

    def row(self, i):
        return self.rows[i]

    def column(self, j):
        return tuple(r[j] for r in self.rows)

    def transpose(self):
        return Matrix(self.field, zip(*self.rows), ncols=self.nrows) if self.nrows \
            else Matrix(self.field, [[] for _ in range(self.ncols)], ncols=0)

    def stack(self, other):
        if other.ncols != self.ncols or other.field is not self.field:
            raise ValueError("stack: incompatible matrices")
        return Matrix(self.field, self.rows + other.rows, ncols=self.ncols)

    def mul(self, other):
        if other.nrows != self.ncols or other.field is not self.field:
            raise ValueError("mul: incompatible matrices")
        zero = self.field.zero()
        out = []
        for r in self.rows:
            row = []
            for c in range(other.ncols):
                acc = zero
                for k in range(self.ncols):
                    v = r[k] * other.rows[k][c]
                    acc = acc + v
                row.append(acc)
            out.append(row)
        return Matrix(self.field, out, ncols=other.ncols)

    def conjugate(self):
        conj = self.field.conjugate
        return Matrix(self.field, [[conj(x) for x in r] for r in self.rows],
                      ncols=self.ncols)

    def sort_key(self):
        key = self.field.sort_key
        return tuple(tuple(key(x) for x in r) for r in self.rows)


def rref(m: Matrix):
    """Reduced row echelon form.

    Returns (reduced matrix, rank, pivot column indices).  The pivot in each
    column is the first row with a nonzero entry, making the output canonical
    for a given row span.
    """
    zero = m.field.zero()
    rows = [list(r) for r in m.rows]
    nrows, ncols = m.nrows, m.ncols
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        pr = None
        for i in range(r, nrows):
            if rows[i][c] != zero:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pv = rows[r][c]
        if pv != m.field.one():
            rows[r] = [x / pv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != zero:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return Matrix(m.field, rows, ncols=ncols), r, tuple(pivots)


def rank(m: Matrix) -> int:
    return rref(m)[1]


def kernel_basis(m: Matrix):
    """Basis of the null space; each vector has one free coordinate set to 1."""
    red, rk, pivots = rref(m)
    zero, one = m.field.zero(), m.field.one()
    pivot_set = set(pivots)
    free = [j for j in range(m.ncols) if j not in pivot_set]
    basis = []
    for j in free:
        v = [zero] * m.ncols
        v[j] = one
        for i, pc in enumerate(pivots):
            v[pc] = zero - red.rows[i][j]
        basis.append(tuple(v))
    return basis


def solve_affine(a: Matrix, b):
    """Describe the solution set of A x = b.

    Returns None when the system is inconsistent (empty solution set is data,
    not a fault); otherwise a pair (particular point, kernel basis).
    """
    b = tuple(b)
    if len(b) != a.nrows:
        raise ValueError("solve_affine: rhs length mismatch")
    zero = a.field.zero()
    aug = Matrix(a.field, [list(r) + [c] for r, c in zip(a.rows, b)],
                 ncols=a.ncols + 1)
    red, rk, pivots = rref(aug)
    if a.ncols in pivots:
        return None
    point = [zero] * a.ncols
    for i, pc in enumerate(pivots):
        point[pc] = red.rows[i][a.ncols]
    sub = Matrix(a.field, [r[:a.ncols] for r in red.rows[:rk]], ncols=a.ncols) \
        if rk else Matrix(a.field, [], ncols=a.ncols)
    return tuple(point), kernel_basis(sub if rk else a)


def det(m: Matrix):
    """Determinant by exact Gaussian elimination (square matrices)."""
    if m.nrows != m.ncols:
        raise ValueError("det: matrix not square")
    n = m.nrows
    if n == 0:
        return m.field.one()
    zero = m.field.zero()
    rows = [list(r) for r in m.rows]
    result = m.field.one()
    for c in range(n):
        pr = None
        for i in range(c, n):
            if rows[i][c] != zero:
                pr = i
                break
        if pr is None:
            return zero
        if pr != c:
            rows[c], rows[pr] = rows[pr], rows[c]
            result = zero - result
        pv = rows[c][c]
        result = result * pv
        for i in range(c + 1, n):
            if rows[i][c] != zero:
                f = rows[i][c] / pv
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
    return result


def solve_in_row_span(basis: Matrix, targets: Matrix) -> Matrix:
    """Express each row of `targets` as a combination of the rows of `basis`.

    Returns M with M * basis = targets.  Raises ValueError if some target row
    is outside the row span.
    """
    if basis.ncols != targets.ncols or basis.field is not targets.field:
        raise ValueError("solve_in_row_span: incompatible matrices")
    at = basis.transpose()
    coeffs = []
    for t in targets.rows:
        sol = solve_affine(at, t)
        if sol is None:
            raise ValueError("target row outside row span")
        coeffs.append(sol[0])
    return Matrix(basis.field, coeffs, ncols=basis.nrows)


# ---------------------------------------------------------------------------
# Smith normal form over Z
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SNFResult:
    rank: int
    elementary_divisors: tuple

    def torsion(self):
        return tuple(d for d in self.elementary_divisors if d > 1)


def _int_rows(m):
    if isinstance(m, Matrix):
        rows = []
        for r in m.rows:
            row = []
            for x in r:
                if isinstance(x, Fraction):
                    if x.denominator != 1:
                        raise ValueError("smith_normal_form needs integer entries")
                    row.append(x.numerator)
                elif isinstance(x, int):
                    row.append(x)
                else:
                    raise ValueError("smith_normal_form needs integer entries")
            rows.append(row)
        return rows, m.nrows, m.ncols
    rows = [list(r) for r in m]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    if any(len(r) != ncols for r in rows):
        raise ValueError("ragged rows")
    return rows, nrows, ncols


def _snf_dense(rows, nrows, ncols):
    """Diagonalize in place; returns the list of nonzero diagonal invariants."""
    divisors = []
    t = 0
    while True:
        best = None
        for i in range(t, nrows):
            ri = rows[i]
            for j in range(t, ncols):
                v = ri[j]
                if v:
                    a = abs(v)
                    if best is None or a < best[0]:
                        best = (a, i, j)
                        if a == 1:
                            break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, bi, bj = best
        rows[t], rows[bi] = rows[bi], rows[t]
        if bj != t:
            for r in rows:
                r[t], r[bj] = r[bj], r[t]
        while True:
            piv = rows[t][t]
            # clear column t by row operations, reducing remainders
            dirty = False
            for i in range(t + 1, nrows):
                v = rows[i][t]
                if v:
                    q = v // piv
                    if q:
                        rt = rows[t]
                        rows[i] = [a - q * b for a, b in zip(rows[i], rt)]
                    if rows[i][t]:
                        rows[t], rows[i] = rows[i], rows[t]
                        dirty = True
                        break
            if dirty:
                continue
            # clear row t by column operations
            for j in range(t + 1, ncols):
                v = rows[t][j]
                if v:
                    q = v // piv
                    if q:
                        for r in rows:
                            r[j] -= q * r[t]
                    if rows[t][j]:
                        for r in rows:
                            r[t], r[j] = r[j], r[t]
                        dirty = True
                        break
            if dirty:
                continue
            # pivot must divide every remaining entry
            off = None
            for i in range(t + 1, nrows):
                ri = rows[i]
                for j in range(t + 1, ncols):
                    if ri[j] % piv:
                        off = i
                        break
                if off is not None:
                    break
            if off is None:
                break
            rt = rows[t]
            rows[t] = [a + b for a, b in zip(rt, rows[off])]
        divisors.append(abs(rows[t][t]))
        t += 1
        if t >= nrows or t >= ncols:
            break
    return divisors


def smith_normal_form(m) -> SNFResult:
    """Elementary divisors d_1 | d_2 | ... | d_r of an integer matrix."""
    rows, nrows, ncols = _int_rows(m)
    divisors = _snf_dense(rows, nrows, ncols)
    return SNFResult(rank=len(divisors), elementary_divisors=tuple(divisors))


def elementary_divisors_sparse(columns, nrows) -> SNFResult:
    """Smith invariants of a sparse integer matrix given as columns.

    `columns` is a sequence of {row index: value} dicts.  Unit (+-1) entries
    are eliminated greedily with a Markowitz-style fill estimate; anything
    left over goes through the dense algorithm.
    """
    cols = {j: dict(c) for j, c in enumerate(columns) if c}
    row_adj = {}
    for j, c in cols.items():
        for r in c:
            row_adj.setdefault(r, set()).add(j)

    heap = []
    for j, c in cols.items():
        for r, v in c.items():
            if v == 1 or v == -1:
                cost = (len(row_adj[r]) - 1) * (len(c) - 1)
                heapq.heappush(heap, (cost, r, j))

    units = 0
    while heap:
        _, r, j = heapq.heappop(heap)
        col = cols.get(j)
        if col is None:
            continue
        v = col.get(r)
        if v is None or (v != 1 and v != -1):
            continue
        piv = cols.pop(j)
        for rr in piv:
            s = row_adj.get(rr)
            if s is not None:
                s.discard(j)
        sharing = row_adj.pop(r, set())
        for j2 in sharing:
            c2 = cols.get(j2)
            if c2 is None or r not in c2:
                continue
            f = c2.pop(r) * v  # multiply by v = +-1 instead of dividing
            for rr, pv in piv.items():
                if rr == r:
                    continue
                nv = c2.get(rr, 0) - f * pv
                if nv:
                    if rr not in c2:
                        row_adj.setdefault(rr, set()).add(j2)
                    c2[rr] = nv
                    if nv == 1 or nv == -1:
                        cost = (len(row_adj[rr]) - 1) * (len(c2) - 1)
                        heapq.heappush(heap, (cost, rr, j2))
                elif rr in c2:
                    del c2[rr]
                    row_adj[rr].discard(j2)
            if not c2:
                del cols[j2]
        units += 1

    divisors = [1] * units
    if cols:
        rows_left = sorted({r for c in cols.values() for r in c})
        rindex = {r: i for i, r in enumerate(rows_left)}
        dense = [[0] * len(cols) for _ in rows_left]
        for jj, (_, c) in enumerate(sorted(cols.items())):
            for r, vv in c.items():
                dense[rindex[r]][jj] = vv
        divisors.extend(_snf_dense(dense, len(rows_left), len(cols)))
    return SNFResult(rank=len(divisors), elementary_divisors=tuple(divisors))


def snf_with_transform(m):
    """Full Smith decomposition U A V = D for small dense integer matrices.

    Returns (U, D, V, rank) as lists of lists of ints, with U, V unimodular
    and D diagonal with the divisor chain.
    """
    rows, nrows, ncols = _int_rows(m)
    u = [[int(i == j) for j in range(nrows)] for i in range(nrows)]
    v = [[int(i == j) for j in range(ncols)] for i in range(ncols)]

    def row_swap(i, k):
        rows[i], rows[k] = rows[k], rows[i]
        u[i], u[k] = u[k], u[i]

    def row_sub(i, k, q):  # row_i -= q * row_k
        rows[i] = [a - q * b for a, b in zip(rows[i], rows[k])]
        u[i] = [a - q * b for a, b in zip(u[i], u[k])]

    def col_swap(j, k):
        for r in rows:
            r[j], r[k] = r[k], r[j]
        for r in v:
            r[j], r[k] = r[k], r[j]

    def col_sub(j, k, q):  # col_j -= q * col_k
        for r in rows:
            r[j] -= q * r[k]
        for r in v:
            r[j] -= q * r[k]

    t = 0
    while t < nrows and t < ncols:
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                val = rows[i][j]
                if val:
                    a = abs(val)
                    if best is None or a < best[0]:
                        best = (a, i, j)
        if best is None:
            break
        _, bi, bj = best
        if bi != t:
            row_swap(t, bi)
        if bj != t:
            col_swap(t, bj)
        while True:
            piv = rows[t][t]
            dirty = False
            for i in range(t + 1, nrows):
                val = rows[i][t]
                if val:
                    q = val // piv
                    if q:
                        row_sub(i, t, q)
                    if rows[i][t]:
                        row_swap(t, i)
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(t + 1, ncols):
                val = rows[t][j]
                if val:
                    q = val // piv
                    if q:
                        col_sub(j, t, q)
                    if rows[t][j]:
                        col_swap(t, j)
                        dirty = True
                        break
            if dirty:
                continue
            off = None
            for i in range(t + 1, nrows):
                for j in range(t + 1, ncols):
                    if rows[i][j] % piv:
                        off = i
                        break
                if off is not None:
                    break
            if off is None:
                break
            rows[t] = [a + b for a, b in zip(rows[t], rows[off])]
            u[t] = [a + b for a, b in zip(u[t], u[off])]
        if rows[t][t] < 0:
            rows[t] = [-a for a in rows[t]]
            u[t] = [-a for a in u[t]]
        t += 1
    return u, rows, v, t


def invert_unimodular(u):
    """Exact inverse of a unimodular integer matrix, as integer lists."""
    n = len(u)
    aug = Matrix(QQ, [[Fraction(x) for x in row] + [Fraction(int(i == j))
                                                    for j in range(n)]
                      for i, row in enumerate(u)], ncols=2 * n)
    red, rk, _ = rref(aug)
    if rk != n:
        raise ValueError("matrix is singular")
    inv = []
    for r in red.rows:
        row = []
        for x in r[n:]:
            if x.denominator != 1:
                raise ValueError("matrix is not unimodular")
            row.append(x.numerator)
        inv.append(row)
    return inv


def gcd_of_list(values):
    g = 0
    for v in values:
        g = gcd(g, v)
    return g
