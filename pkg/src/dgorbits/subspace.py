"""Subspaces of K^n in standard-flag coordinates.

A :class:`Subspace` stores an explicit basis (as column vectors) and a
cached reduced row echelon form; two subspaces compare equal exactly
when they are the same subspace, which makes them usable as dictionary
keys in orbit-partition sweeps.
"""

from __future__ import annotations

from .linalg import Field, QQ, SpanReducer, rref


class Subspace:
    """Column span of an exact-arithmetic basis matrix."""

    __slots__ = ("field", "n", "columns", "_reduced")

    def __init__(self, field: Field, n: int, columns):
        cols = [tuple(field.elem(x) for x in col) for col in columns]
        for col in cols:
            if len(col) != n:
                raise ValueError(f"column of length {len(col)} in ambient {n}")
        red = SpanReducer(field, n)
        for j, col in enumerate(cols):
            if red.add(col) is None:
                raise ValueError(f"basis column {j + 1} depends on the others")
        self.field = field
        self.n = n
        self.columns = tuple(cols)
        self._reduced = None

    @staticmethod
    def spanned_by(field, n, columns) -> "Subspace":
        """Span of arbitrary vectors; dependent ones are dropped."""
        red = SpanReducer(field, n)
        kept = []
        for col in columns:
            col = tuple(field.elem(x) for x in col)
            if red.add(col) is not None:
                kept.append(col)
        return Subspace(field, n, kept)

    @staticmethod
    def flag_member(field, n, i) -> "Subspace":
        """The flag subspace V_i spanned by the first i coordinates."""
        cols = [[field.one if r == j else field.zero for r in range(n)]
                for j in range(i)]
        return Subspace(field, n, cols)

    @property
    def dim(self) -> int:
        return len(self.columns)

    def reduced(self):
        """Unique reduced row echelon basis (tuple of row tuples)."""
        if self._reduced is None:
            rows, _ = rref([list(c) for c in self.columns], self.field, self.n)
            self._reduced = tuple(tuple(r) for r in rows)
        return self._reduced

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.field == other.field
            and self.n == other.n
            and self.reduced() == other.reduced()
        )

    def __hash__(self):
        return hash((self.field, self.n, self.reduced()))

    def __repr__(self):
        return f"Subspace({self.field}, n={self.n}, dim={self.dim})"

    def _check_compatible(self, other):
        if self.field != other.field:
            raise ValueError("field mismatch")
        if self.n != other.n:
            raise ValueError("ambient dimension mismatch")

    def contains(self, vector) -> bool:
        v = [self.field.elem(x) for x in vector]
        return SpanReducer(self.field, self.n, self.columns).contains(v)

    def sum(self, other) -> "Subspace":
        self._check_compatible(other)
        return Subspace.spanned_by(
            self.field, self.n, list(self.columns) + list(other.columns)
        )

    def intersection(self, other) -> "Subspace":
        self._check_compatible(other)
        # kernel vectors of [A | -B] give the common combinations
        a, b = self.columns, other.columns
        rows = [
            [col[i] for col in a] + [-col[i] for col in b]
            for i in range(self.n)
        ]
        from .linalg import nullspace

        vecs = []
        for kv in nullspace(rows, self.field, len(a) + len(b)):
            v = [self.field.zero] * self.n
            for j, col in enumerate(a):
                c = kv[j]
                if c:
                    for i in range(self.n):
                        v[i] += c * col[i]
            if self.field.p is not None:
                v = [x % self.field.p for x in v]
            vecs.append(v)
        return Subspace.spanned_by(self.field, self.n, vecs)

    def quotient_map(self, total_n=None):
        """Coordinates on V / self, as a function on ambient vectors.

        The complement coordinates are the non-pivot positions of the
        reduced basis; the returned function maps a vector of K^n to its
        class in K^(n - dim).
        """
        red = SpanReducer(self.field, self.n, self.columns)
        pivots = set(red.pivots())
        free = [i for i in range(self.n) if i not in pivots]

        def project(vector):
            v = red.reduce([self.field.elem(x) for x in vector])
            return tuple(v[i] for i in free)

        return project

    def jumps(self) -> tuple[int, ...]:
        """Positions i where dim(self cap V_i) > dim(self cap V_{i-1}).

        These are exactly the bottom pivots of the basis.
        """
        red = SpanReducer(self.field, self.n, self.columns)
        return tuple(piv + 1 for piv in red.pivots())
