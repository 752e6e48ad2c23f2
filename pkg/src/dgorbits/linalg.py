"""Exact linear algebra over Q and prime fields.

Vectors are tuples/lists of field elements: ``Fraction`` over Q, plain
ints in [0, p) over GF(p).  No floating point anywhere.  The central
helper is :class:`SpanReducer`, a row-space accumulator kept in echelon
form with pivots at the *highest* nonzero coordinate; with the standard
flag V_i = <e_1, ..., e_i> this makes flag-relative questions (jump
positions, minimal flag member of a coset) single reductions.
"""

from __future__ import annotations

from fractions import Fraction


class FieldError(ValueError):
    pass


class Field:
    """Exact field: Q (``p is None``) or GF(p) for a prime p < 2**31."""

    __slots__ = ("p", "_inv_table")

    def __init__(self, p=None):
        if p is not None:
            if not (2 <= p < 2**31) or not _is_prime(p):
                raise FieldError(f"not a valid prime: {p}")
        self.p = p
        if p is not None and p <= 4096:
            self._inv_table = [0] + [pow(a, p - 2, p) for a in range(1, p)]
        else:
            self._inv_table = None

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "QQ" if self.p is None else f"GF({self.p})"

    @property
    def zero(self):
        return Fraction(0) if self.p is None else 0

    @property
    def one(self):
        return Fraction(1) if self.p is None else 1

    def elem(self, m):
        """Field element from an integer or Fraction."""
        if self.p is None:
            return Fraction(m)
        m = Fraction(m)
        den = pow(m.denominator % self.p, self.p - 2, self.p)
        return (m.numerator * den) % self.p

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("field inverse of zero")
        if self.p is None:
            return 1 / a
        if self._inv_table is not None:
            return self._inv_table[a]
        return pow(a, self.p - 2, self.p)


QQ = Field()


def _is_prime(m):
    if m < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if m % q == 0:
            return m == q
    d, s = m - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


class SpanReducer:
    """Accumulates a row space in bottom-pivot echelon form.

    Rows are normalized so the entry at the pivot (the highest nonzero
    coordinate) is 1; reducing a vector eliminates its top coordinate
    repeatedly, so the residual of v is the member of v + span with the
    lowest possible top coordinate.
    """

    __slots__ = ("field", "n", "rows")

    def __init__(self, field, n, vectors=()):
        self.field = field
        self.n = n
        self.rows = {}  # pivot index (0-based) -> normalized row (list)
        for v in vectors:
            self.add(v)

    def copy(self):
        r = SpanReducer.__new__(SpanReducer)
        r.field = self.field
        r.n = self.n
        r.rows = {piv: row[:] for piv, row in self.rows.items()}
        return r

    @property
    def dim(self):
        return len(self.rows)

    def reduce(self, v):
        """Residual of v modulo the span; a fresh list."""
        v = list(v)
        rows = self.rows
        p = self.field.p
        if p is None:
            for idx in range(self.n - 1, -1, -1):
                c = v[idx]
                if c and idx in rows:
                    row = rows[idx]
                    for j in range(idx + 1):
                        if row[j]:
                            v[j] -= c * row[j]
        else:
            for idx in range(self.n - 1, -1, -1):
                c = v[idx]
                if c and idx in rows:
                    row = rows[idx]
                    for j in range(idx + 1):
                        if row[j]:
                            v[j] = (v[j] - c * row[j]) % p
        return v

    def contains(self, v):
        return not any(self.reduce(v))

    def add(self, v):
        """Insert v; return its pivot index, or None if already in the span."""
        return self.add_reduced(self.reduce(v))

    def add_reduced(self, r):
        """Insert an already-reduced residual (as produced by :meth:`reduce`)."""
        piv = top_index(r)
        if piv is None:
            return None
        if r[piv] == 1:
            self.rows[piv] = list(r)
            return piv
        c = self.field.inv(r[piv])
        if self.field.p is None:
            self.rows[piv] = [x * c for x in r]
        else:
            p = self.field.p
            self.rows[piv] = [x * c % p for x in r]
        return piv

    def pivots(self):
        return sorted(self.rows)


def top_index(v):
    """Highest index with a nonzero entry, or None for the zero vector."""
    for idx in range(len(v) - 1, -1, -1):
        if v[idx]:
            return idx
    return None


def rref(rows, field, ncols=None):
    """Reduced row echelon form (leftmost pivots); zero rows dropped.

    Returns (rref_rows, pivot_column_indices).
    """
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    mat = [list(r) for r in rows]
    p = field.p
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = field.inv(mat[r][c])
        if p is None:
            mat[r] = [x * inv for x in mat[r]]
        else:
            mat[r] = [x * inv % p for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                if p is None:
                    mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
                else:
                    mat[i] = [(a - f * b) % p for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return [mat[i] for i in range(r)], pivots


def matrix_rank(rows, field):
    return len(rref(rows, field)[0])


def nullspace(rows, field, ncols=None):
    """Basis of {x : M x = 0} with M given by ``rows``."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    red, pivots = rref(rows, field, ncols)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [field.zero] * ncols
        v[free] = field.one
        for row, pc in zip(red, pivots):
            v[pc] = -row[free] if field.p is None else (-row[free]) % field.p
        basis.append(v)
    return basis


def solve_and_kernel(cols, target, field):
    """Solve sum_j x_j cols[j] = target; also return the kernel basis.

    Returns (x or None, kernel_basis); elimination is done once on the
    augmented matrix.
    """
    m = len(cols)
    n = len(target)
    rows = [[cols[j][i] for j in range(m)] + [target[i]] for i in range(n)]
    red, pivots = rref(rows, field, m + 1)
    if m in pivots:
        sol = None
    else:
        sol = [field.zero] * m
        for row, pc in zip(red, pivots):
            sol[pc] = row[m]
    kernel = []
    coeff_red = [row[:m] for row in red]
    coeff_piv = [pc for pc in pivots if pc < m]
    pivset = set(coeff_piv)
    for free in range(m):
        if free in pivset:
            continue
        v = [field.zero] * m
        v[free] = field.one
        for row, pc in zip(coeff_red, coeff_piv):
            v[pc] = -row[free] if field.p is None else (-row[free]) % field.p
        kernel.append(v)
    return sol, kernel


def int_matrix_rank(rows):
    """Rank over Q of an integer matrix, by fraction-free elimination."""
    mat = [list(r) for r in rows if any(r)]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(rank, len(mat)) if mat[i][c]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        pr = mat[rank]
        for i in range(rank + 1, len(mat)):
            ri = mat[i]
            f = ri[c]
            for j in range(c, ncols):
                ri[j] = (pr[c] * ri[j] - f * pr[j]) // prev
        prev = pr[c]
        rank += 1
        if rank == len(mat):
            break
    return rank
