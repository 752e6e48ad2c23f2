"""Canonical form of a pair of subspaces, and stabilizer dimensions.

``canonical_datum`` runs the inductive case analysis that classifies a
pair (U, W) under the upper-triangular group: walk the standard flag,
label each flag position by how the current flag vector sits relative
to U and W in the quotient by everything consumed so far, and emit a
(delta, gamma) pair whenever the flag vector needs a two-term partner
inside U.  The recursion over quotient spaces is flattened: instead of
actually forming V/Z we keep the consumed span Z inside the reducers
(U+Z, W+Z, U+W+Z) and track which original flag indices remain.

The two stabilizer computations live here as well: the explicit linear
system on upper-triangular matrix entries, and an independent oracle
that computes the annihilator conditions A.U <= U, A.W <= W directly
from a canonical point.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import (
    QQ,
    SpanReducer,
    int_matrix_rank,
    nullspace,
    top_index,
)
from .subspace import Subspace
from .young import OrbitDatum, validate


def _basis_vector(field, n, r):
    v = [field.zero] * n
    v[r - 1] = field.one
    return v


def _tracked_reduce(tracker, field, v, coeffs, insert):
    """Eliminate v against tracker rows, mirroring each step on coeffs.

    Tracker rows are (residual, coefficient vector) pairs in bottom-pivot
    echelon form.  Returns the pivot of the residual (after inserting it
    when ``insert``), or None if v was eliminated completely.
    """
    p = field.p
    for idx in range(len(v) - 1, -1, -1):
        c = v[idx]
        if c and idx in tracker:
            m, cf = tracker[idx]
            if p is None:
                for j in range(idx + 1):
                    if m[j]:
                        v[j] -= c * m[j]
                for j in range(len(coeffs)):
                    if cf[j]:
                        coeffs[j] -= c * cf[j]
            else:
                for j in range(idx + 1):
                    if m[j]:
                        v[j] = (v[j] - c * m[j]) % p
                for j in range(len(coeffs)):
                    if cf[j]:
                        coeffs[j] = (coeffs[j] - c * cf[j]) % p
    piv = top_index(v)
    if piv is None:
        return None
    if insert:
        if v[piv] == 1:
            tracker[piv] = (v, coeffs[:])
            return piv
        inv = field.inv(v[piv])
        if p is None:
            tracker[piv] = ([x * inv for x in v], [x * inv for x in coeffs])
        else:
            tracker[piv] = (
                [x * inv % p for x in v], [x * inv % p for x in coeffs]
            )
    return piv


def _combine(field, n, rows, coeffs):
    v = [field.zero] * n
    for c, row in zip(coeffs, rows):
        if c:
            for i in range(n):
                v[i] += c * row[i]
    if field.p is not None:
        v = [x % field.p for x in v]
    return v


def canonical_datum(U: Subspace, W: Subspace) -> OrbitDatum:
    """Classify the pair (U, W) relative to the standard flag."""
    U._check_compatible(W)
    return _canonical_datum(U.field, U.n, U.columns, W.columns)


def _canonical_datum(field, n, ucols, wcols, prebuilt=None) -> OrbitDatum:
    """Case analysis on explicit columns.

    ``prebuilt`` may carry already-echelonized reducers for the two
    column sets (they are consumed, not shared); the point sweeps reuse
    per-subspace reducers this way.
    """
    k, l = len(ucols), len(wcols)
    if prebuilt is None:
        A = SpanReducer(field, n, ucols)      # U + Z
        B = SpanReducer(field, n, wcols)      # W + Z
    else:
        A, B = prebuilt
    C = A.copy()                              # U + W + Z
    for row in list(B.rows.values()):
        C.add(row)
    alpha, beta, pairs = [], [], []
    remaining = list(range(1, n + 1))
    while remaining:
        r = remaining.pop(0)
        er = _basis_vector(field, n, r)
        ra = A.reduce(er)
        in_a = not any(ra)
        rb = B.reduce(er)
        in_b = not any(rb)
        if in_a and in_b:
            alpha.append(r)
            beta.append(r)
            continue
        if in_a:
            alpha.append(r)
            B.add_reduced(rb)
            continue
        if in_b:
            beta.append(r)
            A.add_reduced(ra)
            continue
        rc = C.reduce(er)
        if not any(rc):
            # two-term case: the flag vector needs a partner u in U+Z with
            # e_r + u in W+Z; the partner of lowest flag position wins.
            arows = list(A.rows.values())
            meet = SpanReducer(field, n)      # (U+Z) cap (W+Z), contains Z
            tracker = {}  # pivot -> (residual mod W+Z, coeffs over arows)
            for j, arow in enumerate(arows):
                coeffs = [field.zero] * len(arows)
                coeffs[j] = field.one
                res = _tracked_reduce(
                    tracker, field, B.reduce(arow), coeffs, insert=True
                )
                if res is None:
                    # a combination landed in W+Z, hence in the meet
                    meet.add(_combine(field, n, arows, coeffs))
            # partner search: a combination of A-rows congruent to -e_r
            # modulo W+Z, so that e_r plus the partner lies in W+Z
            coeffs = [field.zero] * len(arows)
            res = _tracked_reduce(tracker, field, rb[:], coeffs, insert=False)
            assert res is None, "flag vector not in U+W despite case test"
            u0 = _combine(field, n, arows, coeffs)
            rho = meet.reduce(u0)
            piv = top_index(rho)
            assert piv is not None, "partner search degenerated (case test bug)"
            j = piv + 1
            assert j in remaining, "partner position was already consumed"
            remaining.remove(j)
            pairs.append((r, j))
            alpha.append(j)
            # consuming e_r and rho grows U+Z and W+Z by e_r only: rho
            # already lies in U+Z, and rho = -e_r modulo W+Z; the total
            # span U+W+Z is unchanged
            A.add_reduced(ra)
            B.add_reduced(rb)
        else:
            # flag vector independent of U+W: consume it without a label
            A.add_reduced(ra)
            B.add_reduced(rb)
            C.add_reduced(rc)
    datum = OrbitDatum.make(n, k, l, alpha, beta, pairs)
    assert not validate(datum), validate(datum)
    return datum


def jump_sets(U: Subspace, W: Subspace):
    """Flag positions where U and W jump; equals (alpha, beta|gammas)."""
    U._check_compatible(W)
    return frozenset(U.jumps()), frozenset(W.jumps())


def canonical_point(datum: OrbitDatum, field=QQ):
    """The canonical representative pair for a valid datum."""
    bad = validate(datum)
    if bad:
        raise ValueError("invalid orbit datum: " + "; ".join(bad))
    n = datum.n
    ucols = [_basis_vector(field, n, a) for a in datum.alpha]
    wcols = [_basis_vector(field, n, b) for b in datum.beta]
    for d, g in datum.pairs:
        v = _basis_vector(field, n, d)
        v[g - 1] = field.one
        wcols.append(v)
    return Subspace(field, n, ucols), Subspace(field, n, wcols)


def verify_sigma_invariant(U: Subspace, W: Subspace, datum: OrbitDatum) -> bool:
    """Check dim((U cap V_gamma + V_{delta-1}) cap W) against the pair data.

    For each pair (delta, gamma) the dimension must equal the number of
    W-jump positions r with both r and sigma(r) inside
    [1, delta-1] | (alpha cap [delta, gamma]).
    """
    field, n = U.field, U.n
    wjumps = datum.w_jumps
    aset = set(datum.alpha)
    for d, g in datum.pairs:
        vg = Subspace.flag_member(field, n, g)
        tilde = U.intersection(vg)
        if d > 1:
            tilde = tilde.sum(Subspace.flag_member(field, n, d - 1))
        lhs = tilde.intersection(W).dim
        window = set(range(1, d)) | (aset & set(range(d, g + 1)))
        rhs = len(
            [r for r in wjumps if r in window and datum.sigma(r) in window]
        )
        if lhs != rhs:
            return False
    return True


# ---------------------------------------------------------------------------
# stabilizer systems


@dataclass(frozen=True)
class LinearSystem:
    """Linear equations on the upper-triangular entries of an n x n matrix.

    Variables are the positions (i, j) with i <= j; each equation maps a
    subset of them to integer coefficients.
    """

    n: int
    equations: tuple

    @property
    def variables(self) -> tuple:
        return tuple(
            (i, j)
            for i in range(1, self.n + 1)
            for j in range(i, self.n + 1)
        )

    def rank(self) -> int:
        vars_ = self.variables
        index = {v: c for c, v in enumerate(vars_)}
        rows = []
        for eq in self.equations:
            row = [0] * len(vars_)
            for v, coeff in eq.items():
                row[index[v]] = coeff
            rows.append(row)
        return int_matrix_rank(rows)

    def nullity(self) -> int:
        return len(self.variables) - self.rank()


def stabilizer_system_prop2(datum: OrbitDatum) -> LinearSystem:
    """Explicit equations cutting out the stabilizer of the canonical point.

    Emits, in order: the diagonal ties for each pair; the zero column
    pattern of the first diagram; the zero pattern of the pure columns of
    the second diagram; the beta-column ties; the two-term column ties;
    and the cross relations between two pairs in each of the three
    possible interleavings.  Entries below the diagonal are structurally
    zero and are simply dropped from the equations.
    """
    bad = validate(datum)
    if bad:
        raise ValueError("invalid orbit datum: " + "; ".join(bad))
    n = datum.n
    aset = set(datum.alpha)
    bset = set(datum.beta)
    excluded = bset | datum.gammas | datum.deltas
    eqs = []
    for d, g in datum.pairs:                                   # (a)
        eqs.append({(g, g): 1, (d, d): -1})
    for a in datum.alpha:                                      # (b)
        for i in range(1, a):
            if i not in aset:
                eqs.append({(i, a): 1})
    for b in datum.beta:                                       # (c)
        for j in range(1, b):
            if j not in excluded:
                eqs.append({(j, b): 1})
    for b in datum.beta:                                       # (d)
        for d, g in datum.pairs:
            if g < b:
                eqs.append({(g, b): 1, (d, b): -1})
            elif d < b:
                # the gamma entry falls below the diagonal, so the tie
                # degenerates to a vanishing delta entry
                eqs.append({(d, b): 1})
    for d, g in datum.pairs:                                   # (e)
        for j in range(1, g):
            if j in excluded:
                continue
            if j < d:
                eqs.append({(j, g): 1, (j, d): 1})
            else:
                eqs.append({(j, g): 1})
    pairs = sorted(datum.pairs, key=lambda p: p[1])
    for x in range(len(pairs)):                                # (f)
        for y in range(x + 1, len(pairs)):
            d1, g1 = pairs[x]
            d2, g2 = pairs[y]
            if d2 < d1:
                eqs.append({(g1, g2): 1})
                eqs.append({(d1, g2): 1})
                eqs.append({(d2, g1): 1})
                eqs.append({(d2, d1): 1})
            elif d2 < g1:
                eqs.append({(d2, g1): 1})
                eqs.append({(d1, g2): 1})
                eqs.append({(g1, g2): 1, (d1, d2): -1})
            else:
                eqs.append({(d1, g2): 1})
                eqs.append({(g1, g2): 1, (g1, d2): 1, (d1, d2): -1})
    return LinearSystem(n, tuple(eqs))


def _annihilator_rows(cols, n):
    """Integer basis of the functionals vanishing on the span of ``cols``."""
    rows = [[QQ.elem(col[i]) for i in range(n)] for col in cols]
    out = []
    for v in nullspace(rows, QQ, n):
        denom = 1
        for x in v:
            denom = denom * x.denominator // _gcd(denom, x.denominator)
        out.append([int(x * denom) for x in v])
    return out


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def stabilizer_dim_oracle(datum: OrbitDatum, field=QQ) -> int:
    """Dimension of the upper-triangular stabilizer of the canonical point.

    Computed as the nullity of the conditions A.U <= U and A.W <= W on
    the n(n+1)/2 upper-triangular entries; the orbit dimension is
    n(n+1)/2 minus this value.  Exact characteristic-zero arithmetic
    only.
    """
    if field.p is not None:
        raise ValueError("the stabilizer oracle runs over Q only")
    U, W = canonical_point(datum, field)
    n = datum.n
    variables = [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
    index = {v: c for c, v in enumerate(variables)}
    rows = []
    for space in (U, W):
        cols = [[int(x) for x in col] for col in space.columns]
        for y in _annihilator_rows(cols, n):
            for u in cols:
                row = [0] * len(variables)
                for i in range(1, n + 1):
                    if not y[i - 1]:
                        continue
                    for j in range(i, n + 1):
                        if u[j - 1]:
                            row[index[(i, j)]] += y[i - 1] * u[j - 1]
                if any(row):
                    rows.append(row)
    return len(variables) - int_matrix_rank(rows)
