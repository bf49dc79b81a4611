"""Exact dense linear algebra over a field object.

Matrices are lists of row lists whose entries belong to one of the
field protocols from ``scalars`` (rational, prime, or the generic
fraction field).  Sizes here are desk scale; plain Gaussian elimination
is used throughout.
"""

from __future__ import annotations


def zeros(rows: int, cols: int, field):
    z = field.zero()
    return [[z for _ in range(cols)] for _ in range(rows)]


def identity(size: int, field):
    out = zeros(size, size, field)
    for i in range(size):
        out[i][i] = field.one()
    return out


def mat_mul(a, b, field):
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = zeros(rows, cols, field)
    for i in range(rows):
        for k in range(inner):
            aik = a[i][k]
            if field.is_zero(aik):
                continue
            for j in range(cols):
                out[i][j] = field.add(out[i][j], field.mul(aik, b[k][j]))
    return out


def mat_vec(a, v, field):
    out = []
    for row in a:
        s = field.zero()
        for x, y in zip(row, v):
            s = field.add(s, field.mul(x, y))
        out.append(s)
    return out


def scale_vec(c, v, field):
    return [field.mul(c, x) for x in v]


def rref(matrix, field):
    """Reduced row echelon form; returns (rows, pivot column list)."""
    rows = [list(r) for r in matrix]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if not field.is_zero(rows[i][c])), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = field.div(field.one(), rows[r][c])
        rows[r] = [field.mul(inv, x) for x in rows[r]]
        for i in range(nrows):
            if i != r and not field.is_zero(rows[i][c]):
                factor = rows[i][c]
                rows[i] = [
                    field.sub(x, field.mul(factor, y))
                    for x, y in zip(rows[i], rows[r])
                ]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def rank(matrix, field) -> int:
    if not matrix:
        return 0
    return len(rref(matrix, field)[1])


def nullspace(matrix, field):
    """Basis of the right kernel, as a list of vectors."""
    if not matrix:
        return []
    ncols = len(matrix[0])
    rows, pivots = rref(matrix, field)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [field.zero()] * ncols
        v[f] = field.one()
        for r, c in enumerate(pivots):
            v[c] = field.neg(rows[r][f])
        basis.append(v)
    return basis


def solve(matrix, rhs, field):
    """One solution of A x = b, or None if inconsistent."""
    if not matrix:
        return None
    ncols = len(matrix[0])
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    rows, pivots = rref(aug, field)
    if ncols in pivots:
        return None
    x = [field.zero()] * ncols
    for r, c in enumerate(pivots):
        x[c] = rows[r][ncols]
    return x


class Span:
    """Incrementally built row span with echelon reduction."""

    def __init__(self, dim: int, field):
        self.dim = dim
        self.field = field
        self.rows = []  # echelon rows, leading entry 1
        self.pivots = []

    def reduce(self, vec):
        f = self.field
        v = list(vec)
        for row, p in zip(self.rows, self.pivots):
            if not f.is_zero(v[p]):
                c = v[p]
                v = [f.sub(x, f.mul(c, y)) for x, y in zip(v, row)]
        return v

    def insert(self, vec) -> bool:
        """Add a vector; True if it enlarged the span."""
        f = self.field
        v = self.reduce(vec)
        p = next((i for i, x in enumerate(v) if not f.is_zero(x)), None)
        if p is None:
            return False
        inv = f.div(f.one(), v[p])
        v = [f.mul(inv, x) for x in v]
        for i, (row, q) in enumerate(zip(self.rows, self.pivots)):
            if not f.is_zero(row[p]):
                c = row[p]
                self.rows[i] = [f.sub(x, f.mul(c, y)) for x, y in zip(row, v)]
        self.rows.append(v)
        self.pivots.append(p)
        order = sorted(range(len(self.pivots)), key=lambda i: self.pivots[i])
        self.rows = [self.rows[i] for i in order]
        self.pivots = [self.pivots[i] for i in order]
        return True

    def contains(self, vec) -> bool:
        f = self.field
        return all(f.is_zero(x) for x in self.reduce(vec))

    def size(self) -> int:
        return len(self.rows)

    def coordinates(self, vec):
        """Coordinates of vec in the stored row basis, or None."""
        f = self.field
        coords = []
        v = list(vec)
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            coords.append(c)
            if not f.is_zero(c):
                v = [f.sub(x, f.mul(c, y)) for x, y in zip(v, row)]
        if any(not f.is_zero(x) for x in v):
            return None
        return coords


def restrict_matrices(mats, subspace: Span, field):
    """Action matrices restricted to an invariant subspace, in its basis."""
    out = []
    for mat in mats:
        cols = []
        for row in subspace.rows:
            image = mat_vec(mat, row, field)
            coords = subspace.coordinates(image)
            if coords is None:
                raise ArithmeticError("subspace is not invariant")
            cols.append(coords)
        # cols[j] holds the coordinates of the image of basis vector j.
        size = subspace.size()
        out.append([[cols[j][i] for j in range(size)] for i in range(size)])
    return out


def quotient_matrices(mats, subspace: Span, dim: int, field):
    """Action matrices on the quotient by an invariant subspace.

    The quotient basis is the standard basis vectors at the non-pivot
    coordinates of the subspace's echelon basis.
    """
    f = field
    complement = [c for c in range(dim) if c not in subspace.pivots]
    out = []
    for mat in mats:
        q = zeros(len(complement), len(complement), f)
        for j, c in enumerate(complement):
            image = [mat[i][c] for i in range(dim)]
            # Reduce modulo the subspace, then read off complement coords.
            red = subspace.reduce(image)
            for i, cc in enumerate(complement):
                q[i][j] = red[cc]
        out.append(q)
    return out
