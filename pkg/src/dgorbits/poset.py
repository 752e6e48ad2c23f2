"""Enumeration of orbit data and the weak order under parabolic raisings.

Vertices of the weak-order graph are all valid orbit data for a given
(n, k, l); a directed edge labeled i means the i-th minimal parabolic
raises the source orbit to the target.  A raising either merges an
adjacent indentation/spike pattern of the two paths into a new dotted
box (rank goes up by one) or just swaps the roles of positions i and
i+1 everywhere (rank unchanged); in both cases the candidate counts as
a raising exactly when it is a valid datum of dimension one higher.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .young import (
    GrassPermutationWord,
    OrbitDatum,
    _dimension_sets,
    grassmannian_word,
    stratum,
    validate,
)

RANK_RAISING = "RANK_RAISING"
PLAIN = "PLAIN"


def _check_bounds(n, k, l):
    if not (0 < k < n and 0 < l < n):
        raise ValueError(f"need 0 < k < n and 0 < l < n, got n={n} k={k} l={l}")


def enumerate_orbits(n, k, l) -> list[OrbitDatum]:
    """All valid orbit data for (n, k, l), in lexicographic order.

    Choose alpha, a subset gamma of alpha, an injective assignment of a
    smaller partner delta outside alpha to each gamma, and finally beta
    among the positions not used by any pair.
    """
    _check_bounds(n, k, l)
    out = []
    indices = range(1, n + 1)
    for alpha in combinations(indices, k):
        aset = set(alpha)
        non_alpha = [x for x in indices if x not in aset]
        for r in range(0, min(k, l) + 1):
            if l - r > n - 2 * r:
                continue
            for gammas in combinations(alpha, r):
                for deltas in _delta_assignments(gammas, non_alpha):
                    used = set(gammas) | set(deltas)
                    rest = [x for x in indices if x not in used]
                    pairs = tuple(sorted(zip(deltas, gammas)))
                    for beta in combinations(rest, l - r):
                        out.append(
                            OrbitDatum(n, k, l, alpha, beta, pairs)
                        )
    out.sort(key=lambda d: (d.alpha, d.beta, d.pairs))
    return out


def _delta_assignments(gammas, candidates):
    """Injective maps gamma -> delta with delta < gamma, delta not in alpha."""
    if not gammas:
        yield ()
        return
    g, tail = gammas[0], gammas[1:]
    for d in candidates:
        if d < g:
            for rest in _delta_assignments(
                tail, [x for x in candidates if x != d]
            ):
                yield (d,) + rest


def raise_candidate(datum: OrbitDatum, i: int):
    """Result of letting the i-th minimal parabolic act, if it raises.

    Returns (raised_datum, kind) or None.  kind is RANK_RAISING when a
    new (i, i+1) pair appears, PLAIN when the data is just transposed.
    """
    if not 1 <= i <= datum.n - 1:
        raise ValueError(f"simple index {i} out of range for n={datum.n}")
    aset = set(datum.alpha)
    bset = set(datum.beta)
    gset = datum.gammas
    pattern = (
        i in aset and i not in bset and i + 1 not in aset and i + 1 in bset
        and i not in gset
    ) or (
        i not in aset and i in bset and i + 1 in aset and i + 1 not in bset
        and i + 1 not in gset
    )
    if pattern:
        new_alpha = (aset - {i}) | {i + 1}
        new_beta = bset - {i, i + 1}
        new_pairs = datum.pairs + ((i, i + 1),)
        kind = RANK_RAISING
    else:
        tau = {i: i + 1, i + 1: i}
        new_alpha = {tau.get(x, x) for x in aset}
        new_beta = {tau.get(x, x) for x in bset}
        new_pairs = tuple(
            tuple(sorted((tau.get(d, d), tau.get(g, g))))
            for d, g in datum.pairs
        )
        kind = PLAIN
    cand = OrbitDatum.make(
        datum.n, datum.k, datum.l, new_alpha, new_beta, new_pairs
    )
    if validate(cand):
        return None
    here = _dimension_sets(
        datum.n, aset, bset | gset, datum.pairs
    )
    there = _dimension_sets(
        cand.n, set(cand.alpha), set(cand.beta) | cand.gammas, cand.pairs
    )
    if there != here + 1:
        return None
    return cand, kind


@dataclass(frozen=True)
class RaisingEdge:
    source: int
    target: int
    simple_index: int
    kind: str


@dataclass(frozen=True, eq=False)
class WeakOrderGraph:
    """Weak-order raising graph on all orbit data for one (n, k, l)."""

    n: int
    k: int
    l: int
    vertices: tuple
    dims: tuple
    edges: tuple
    strata: dict

    def index_of(self, datum: OrbitDatum) -> int:
        return self._index()[datum]

    def _index(self):
        if not hasattr(self, "_index_cache"):
            object.__setattr__(
                self, "_index_cache",
                {d: i for i, d in enumerate(self.vertices)},
            )
        return self._index_cache

    def outgoing(self, vid):
        return self._adjacency()[0][vid]

    def incoming(self, vid):
        return self._adjacency()[1][vid]

    def _adjacency(self):
        if not hasattr(self, "_adj_cache"):
            out = [[] for _ in self.vertices]
            inc = [[] for _ in self.vertices]
            for e in self.edges:
                out[e.source].append(e)
                inc[e.target].append(e)
            object.__setattr__(self, "_adj_cache", (out, inc))
        return self._adj_cache

    def sinks(self):
        """Per-stratum list of vertices with no outgoing edge."""
        out, _ = self._adjacency()
        return {
            d: [v for v in vs if not out[v]]
            for d, vs in sorted(self.strata.items())
        }

    def sources(self):
        """Per-stratum list of vertices with no incoming edge."""
        _, inc = self._adjacency()
        return {
            d: [v for v in vs if not inc[v]]
            for d, vs in sorted(self.strata.items())
        }


def build_graph(n, k, l) -> WeakOrderGraph:
    """All raisings between the orbit data for (n, k, l).

    The graph is acyclic by construction (every edge raises dimension);
    the single-sink-per-stratum invariant is asserted.
    """
    vertices = tuple(enumerate_orbits(n, k, l))
    index = {d: i for i, d in enumerate(vertices)}
    dims = tuple(
        _dimension_sets(n, set(d.alpha), set(d.beta) | d.gammas, d.pairs)
        for d in vertices
    )
    edges = []
    strata = {}
    for vid, datum in enumerate(vertices):
        strata.setdefault(stratum(datum), []).append(vid)
        for i in range(1, n):
            res = raise_candidate(datum, i)
            if res is None:
                continue
            cand, kind = res
            tid = index[cand]
            assert dims[tid] == dims[vid] + 1
            edges.append(RaisingEdge(vid, tid, i, kind))
    graph = WeakOrderGraph(n, k, l, vertices, dims, tuple(edges), strata)
    for e in graph.edges:
        assert stratum(vertices[e.source]) == stratum(vertices[e.target]), (
            "raising crossed a GL-stratum"
        )
    for d, sink_ids in graph.sinks().items():
        assert len(sink_ids) == 1, f"stratum {d} has {len(sink_ids)} sinks"
    return graph


# ---------------------------------------------------------------------------
# minimal orbits


def minimal_orbits(n, k, l, d) -> list[OrbitDatum]:
    """The weak-order minimal data of the stratum dim(U cap W) = d."""
    _check_bounds(n, k, l)
    if not max(0, k + l - n) <= d <= min(k, l):
        raise ValueError(f"stratum d={d} out of bounds for (n,k,l)=({n},{k},{l})")
    shared = tuple(range(1, d + 1))
    window = range(d + 1, k + l - d + 1)
    out = []
    for extra in combinations(window, k - d):
        alpha = shared + extra
        beta = shared + tuple(x for x in window if x not in set(extra))
        out.append(OrbitDatum.make(n, k, l, alpha, beta, ()))
    out.sort(key=lambda dd: (dd.alpha, dd.beta))
    assert len(out) == comb(k + l - 2 * d, k - d)
    return out


def is_minimal(datum: OrbitDatum) -> bool:
    """Whether the datum has the minimal-orbit shape of its stratum."""
    if datum.pairs:
        return False
    aset, bset = set(datum.alpha), set(datum.beta)
    d = len(aset & bset)
    return (
        aset | bset == set(range(1, datum.k + datum.l - d + 1))
        and aset & bset == set(range(1, d + 1))
    )


# ---------------------------------------------------------------------------
# desingularization words


@dataclass(frozen=True)
class DesingularizationData:
    """Raising word from a minimal orbit plus its two Schubert words.

    Applying ``word`` left to right through :func:`raise_candidate`,
    starting at ``minimal``, reproduces ``target``; the two reduced
    words resolve the Schubert factors of the minimal orbit.
    """

    target: OrbitDatum
    minimal: OrbitDatum
    word: tuple[int, ...]
    bs_first: GrassPermutationWord
    bs_second: GrassPermutationWord


def desingularization_table(graph: WeakOrderGraph) -> dict:
    """Per-vertex lexicographically smallest raising word from a minimal orbit.

    Dynamic programming over the (acyclic) graph in order of increasing
    dimension: a minimal-shape vertex gets the empty word; any other
    vertex takes the smallest (word + label, source-minimal id) over its
    incoming edges.  Every path from a fixed vertex to another has the
    same length, so these are automatically shortest words.
    """
    best = {}
    order = sorted(range(len(graph.vertices)), key=lambda v: graph.dims[v])
    for vid in order:
        if is_minimal(graph.vertices[vid]):
            best[vid] = ((), vid)
            continue
        options = []
        for e in graph.incoming(vid):
            if e.source in best:
                word, mid = best[e.source]
                options.append((word + (e.simple_index,), mid))
        assert options, (
            f"vertex {vid} has no raising path from a minimal orbit"
        )
        best[vid] = min(options)
    return best


def desingularization(
    datum: OrbitDatum, graph: WeakOrderGraph | None = None
) -> DesingularizationData:
    """Combinatorial desingularization data for the orbit closure of ``datum``."""
    bad = validate(datum)
    if bad:
        raise ValueError("invalid orbit datum: " + "; ".join(bad))
    if graph is None:
        graph = build_graph(datum.n, datum.k, datum.l)
    vid = graph.index_of(datum)
    word, mid = desingularization_table(graph)[vid]
    minimal = graph.vertices[mid]
    return DesingularizationData(
        target=datum,
        minimal=minimal,
        word=word,
        bs_first=grassmannian_word(datum.n, datum.k, minimal.alpha),
        bs_second=grassmannian_word(datum.n, datum.l, minimal.beta),
    )


def replay_word(minimal: OrbitDatum, word) -> OrbitDatum | None:
    """Apply a raising word left to right; None if any step fails to raise."""
    state = minimal
    for i in word:
        res = raise_candidate(state, i)
        if res is None:
            return None
        state = res[0]
    return state
