"""Cross-check suites tying the combinatorics to the linear-algebra oracles.

Each suite checks one bridge for a single parameter triple (n, k, l):
the hook dimension formula against the two stabilizer systems, the
minimal-orbit classification against the raising graph, invariance of
the canonical form under random upper-triangular changes of basis, the
exhaustive finite-field point sweep, desingularization word replay, and
the canonical point round trip.  :func:`run_suites` bundles them into
machine-readable results for the command line.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import combinations, product
from math import comb

from .canonical import (
    _canonical_datum,
    canonical_datum,
    canonical_point,
    stabilizer_dim_oracle,
    stabilizer_system_prop2,
    verify_sigma_invariant,
)
from .linalg import Field, QQ, SpanReducer
from .poset import (
    WeakOrderGraph,
    build_graph,
    desingularization_table,
    enumerate_orbits,
    is_minimal,
    minimal_orbits,
    replay_word,
)
from .subspace import Subspace
from .young import (
    dimension,
    dimension_fast,
    grassmannian_permutation,
    grassmannian_word,
    is_reduced,
    rank,
    word_permutation,
)


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: bool
    checked: int
    seconds: float
    detail: str = ""

    def as_dict(self):
        return {
            "suite": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "seconds": round(self.seconds, 3),
            "detail": self.detail,
        }


def all_subspaces(field: Field, n: int, k: int):
    """All k-dimensional subspaces of GF(q)^n, one echelon basis each.

    Enumerates reduced echelon bases by pivot pattern; each subspace
    appears exactly once.  Yields tuples of basis vectors.
    """
    if field.p is None:
        raise ValueError("subspace enumeration needs a finite field")
    q = field.p
    for pivs in combinations(range(n), k):
        pivset = set(pivs)
        free_pos = [
            (r, c)
            for r, p in enumerate(pivs)
            for c in range(p + 1, n)
            if c not in pivset
        ]
        for vals in product(range(q), repeat=len(free_pos)):
            rows = [[0] * n for _ in range(k)]
            for r, p in enumerate(pivs):
                rows[r][p] = 1
            for (r, c), v in zip(free_pos, vals):
                rows[r][c] = v
            yield tuple(tuple(r) for r in rows)


def check_dimension_agreement(n, k, l):
    """Hook formula vs the two stabilizer systems, for every datum."""
    total = n * (n + 1) // 2
    checked = 0
    for datum in enumerate_orbits(n, k, l):
        hook = dimension(datum)
        prop = total - stabilizer_system_prop2(datum).nullity()
        oracle = total - stabilizer_dim_oracle(datum)
        if not hook == prop == oracle:
            return checked, (
                f"dimension mismatch at {datum}: "
                f"hook={hook} system={prop} oracle={oracle}"
            )
        checked += 1
    return checked, None


def check_minimal_orbits(n, k, l, graph: WeakOrderGraph | None = None):
    """Minimal-orbit shape, count, dimension, rank, and graph sources."""
    if graph is None:
        graph = build_graph(n, k, l)
    checked = 0
    for d, source_ids in graph.sources().items():
        mins = minimal_orbits(n, k, l, d)
        if len(mins) != comb(k + l - 2 * d, k - d):
            return checked, f"minimal count off in stratum {d}"
        for m in mins:
            if dimension(m) != (k - d) * (l - d):
                return checked, f"minimal dimension off at {m}"
            if rank(m) != 0 or not is_minimal(m):
                return checked, f"minimal shape off at {m}"
            checked += 1
        key = lambda dd: (dd.alpha, dd.beta, dd.pairs)
        from_graph = sorted((graph.vertices[v] for v in source_ids), key=key)
        if from_graph != sorted(mins, key=key):
            return checked, (
                f"stratum {d}: graph sources differ from the minimal orbits"
            )
    return checked, None


def check_b_invariance(n, k, l, prime=1009, trials=1000, seed=0):
    """canonical_datum is constant under random upper-triangular action."""
    field = Field(prime)
    rng = random.Random(f"{seed}:{n}:{k}:{l}:{prime}")
    p = field.p
    checked = 0
    for _ in range(trials):
        ucols = _random_independent(rng, field, n, k)
        wcols = _random_independent(rng, field, n, l)
        b = _random_upper_triangular(rng, p, n)
        bu = [_apply(b, col, p) for col in ucols]
        bw = [_apply(b, col, p) for col in wcols]
        before = _canonical_datum(field, n, ucols, wcols)
        after = _canonical_datum(field, n, bu, bw)
        if before != after:
            return checked, (
                f"B-invariance broken: {before} != {after} for U={ucols} "
                f"W={wcols} b={b}"
            )
        checked += 1
    return checked, None


def _random_independent(rng, field, n, k):
    p = field.p
    while True:
        cols = [
            tuple(rng.randrange(p) for _ in range(n)) for _ in range(k)
        ]
        if SpanReducer(field, n, cols).dim == k:
            return cols


def _random_upper_triangular(rng, p, n):
    rows = []
    for i in range(n):
        row = [0] * i + [rng.randrange(1, p)] + [
            rng.randrange(p) for _ in range(n - i - 1)
        ]
        rows.append(row)
    return rows


def _apply(rows, col, p):
    return tuple(
        sum(r[j] * col[j] for j in range(len(col)) if r[j]) % p for r in rows
    )


def check_field_sweep(n, k, l, q):
    """Every F_q-point lands on an enumerated datum and all data occur."""
    field = Field(q)
    expected = set(enumerate_orbits(n, k, l))
    useq = list(all_subspaces(field, n, k))
    wseq = useq if l == k else list(all_subspaces(field, n, l))
    ured = [SpanReducer(field, n, u) for u in useq]
    wred = ured if l == k else [SpanReducer(field, n, w) for w in wseq]
    seen = set()
    checked = 0
    for ucols, ra in zip(useq, ured):
        for wcols, rb in zip(wseq, wred):
            datum = _canonical_datum(
                field, n, ucols, wcols, (ra.copy(), rb.copy())
            )
            if datum not in expected:
                return checked, (
                    f"sweep produced a non-enumerated datum {datum} "
                    f"for U={ucols} W={wcols}"
                )
            seen.add(datum)
            checked += 1
    missing = expected - seen
    if missing:
        return checked, f"data never observed over GF({q}): {sorted(missing)}"
    return checked, None


def check_desing_replay(n, k, l, graph: WeakOrderGraph | None = None):
    """Word replay, word length, and the two reduced Schubert words."""
    if graph is None:
        graph = build_graph(n, k, l)
    table = desingularization_table(graph)
    checked = 0
    for vid, datum in enumerate(graph.vertices):
        word, mid = table[vid]
        minimal = graph.vertices[mid]
        if replay_word(minimal, word) != datum:
            return checked, f"replay failed at {datum}"
        if len(word) != graph.dims[vid] - dimension_fast(minimal):
            return checked, f"word length off at {datum}"
        for height, vertical in (
            (k, minimal.alpha), (l, minimal.w_jumps)
        ):
            gw = grassmannian_word(n, height, vertical)
            if len(gw.word) != gw.target_length or not is_reduced(n, gw.word):
                return checked, f"word for {vertical} not reduced"
            if word_permutation(n, gw.word) != grassmannian_permutation(
                n, vertical
            ):
                return checked, f"word for {vertical} has the wrong product"
        checked += 1
    return checked, None


def check_roundtrip(n, k, l, fields=(QQ, Field(5))):
    """canonical_datum(canonical_point(d)) = d, plus the sigma invariant."""
    checked = 0
    for datum in enumerate_orbits(n, k, l):
        for field in fields:
            U, W = canonical_point(datum, field)
            back = canonical_datum(U, W)
            if back != datum:
                return checked, f"round trip broke: {datum} -> {back}"
            if not verify_sigma_invariant(U, W, datum):
                return checked, f"sigma invariant failed at {datum}"
        checked += 1
    return checked, None


def run_suites(
    n, k, l, prime=1009, trials=1000, max_dim_check_n=6, sweep_primes=(2, 3),
) -> list[SuiteResult]:
    """Run every suite for one (n, k, l); results in a fixed order."""
    graph = build_graph(n, k, l)
    jobs = [
        ("minimal_orbits", check_minimal_orbits, (n, k, l, graph)),
        ("desing_replay", check_desing_replay, (n, k, l, graph)),
        ("b_invariance", check_b_invariance, (n, k, l, prime, trials)),
        ("roundtrip", check_roundtrip, (n, k, l)),
    ]
    if n <= max_dim_check_n:
        jobs.insert(
            0, ("dimension_agreement", check_dimension_agreement, (n, k, l))
        )
    for q in sweep_primes:
        jobs.append(
            (f"field_sweep_q{q}", check_field_sweep, (n, k, l, q))
        )
    results = []
    for name, fn, args in jobs:
        t0 = time.perf_counter()
        checked, failure = fn(*args)
        results.append(
            SuiteResult(
                name=name,
                passed=failure is None,
                checked=checked,
                seconds=time.perf_counter() - t0,
                detail=failure or "",
            )
        )
    return results
