"""JSON, DOT, and matrix-text serialization.

Orbit data serialize to flat JSON objects with sorted index arrays and
the sigma pairs as [delta, gamma] lists; the optional derived block is
checked against recomputation when reading.  Graphs serialize to either
DOT (for rendering) or JSON (lossless round trip).  The matrix text
format feeds explicit subspace pairs to the command line:

    field Q          (or: field 5)
    n k l
    <k columns of U, column-major>
                     (blank line)
    <l columns of W, column-major>

Entries are integers or rationals like 3/4; over GF(p) they are reduced
mod p.
"""

from __future__ import annotations

from fractions import Fraction

from .linalg import Field, FieldError, QQ
from .poset import DesingularizationData, RaisingEdge, WeakOrderGraph
from .subspace import Subspace
from .young import OrbitDatum, dimension, rank, stratum, validate


# ---------------------------------------------------------------------------
# orbit data


def datum_to_json(datum: OrbitDatum, derived: bool = False) -> dict:
    obj = {
        "n": datum.n,
        "k": datum.k,
        "l": datum.l,
        "alpha": list(datum.alpha),
        "beta": list(datum.beta),
        "sigma_pairs": [[d, g] for d, g in datum.pairs],
    }
    if derived:
        obj["derived"] = {
            "dim": dimension(datum),
            "rank": rank(datum),
            "stratum": stratum(datum),
        }
    return obj


def datum_from_json(obj: dict) -> OrbitDatum:
    try:
        datum = OrbitDatum.make(
            int(obj["n"]),
            int(obj["k"]),
            int(obj["l"]),
            [int(a) for a in obj["alpha"]],
            [int(b) for b in obj["beta"]],
            [(int(d), int(g)) for d, g in obj.get("sigma_pairs", [])],
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed orbit datum JSON: {exc}") from exc
    bad = validate(datum)
    if bad:
        raise ValueError("invalid orbit datum: " + "; ".join(bad))
    derived = obj.get("derived")
    if derived is not None:
        fresh = datum_to_json(datum, derived=True)["derived"]
        if {key: int(derived[key]) for key in fresh} != fresh:
            raise ValueError(
                f"derived block {derived} does not match recomputation {fresh}"
            )
    return datum


# ---------------------------------------------------------------------------
# graphs


def graph_to_json(graph: WeakOrderGraph) -> dict:
    return {
        "n": graph.n,
        "k": graph.k,
        "l": graph.l,
        "nodes": [
            {
                "id": vid,
                "datum": datum_to_json(datum),
                "dim": graph.dims[vid],
                "rank": rank(datum),
                "stratum": stratum(datum),
            }
            for vid, datum in enumerate(graph.vertices)
        ],
        "edges": [
            {
                "source": e.source,
                "target": e.target,
                "simpleIndex": e.simple_index,
                "kind": e.kind,
            }
            for e in graph.edges
        ],
    }


def graph_from_json(obj: dict) -> WeakOrderGraph:
    nodes = sorted(obj["nodes"], key=lambda nd: nd["id"])
    if [nd["id"] for nd in nodes] != list(range(len(nodes))):
        raise ValueError("graph node ids must be 0..len-1")
    vertices = tuple(datum_from_json(nd["datum"]) for nd in nodes)
    dims = tuple(int(nd["dim"]) for nd in nodes)
    edges = tuple(
        RaisingEdge(
            int(e["source"]), int(e["target"]),
            int(e["simpleIndex"]), str(e["kind"]),
        )
        for e in obj["edges"]
    )
    strata = {}
    for vid, datum in enumerate(vertices):
        strata.setdefault(stratum(datum), []).append(vid)
    return WeakOrderGraph(
        int(obj["n"]), int(obj["k"]), int(obj["l"]),
        vertices, dims, edges, strata,
    )


def _dot_label(datum: OrbitDatum) -> str:
    parts = [
        "a=" + ",".join(map(str, datum.alpha)),
        "b=" + ",".join(map(str, datum.beta)),
    ]
    if datum.pairs:
        parts.append(
            "s=" + ",".join(f"({d} {g})" for d, g in datum.pairs)
        )
    return " ".join(parts)


def graph_to_dot(graph: WeakOrderGraph) -> str:
    lines = [f'digraph weak_order_{graph.n}_{graph.k}_{graph.l} {{']
    lines.append("  rankdir=BT;")
    for vid, datum in enumerate(graph.vertices):
        lines.append(
            f'  v{vid} [label="{_dot_label(datum)}" dim={graph.dims[vid]} '
            f"rank={rank(datum)} stratum={stratum(datum)}];"
        )
    for e in graph.edges:
        lines.append(
            f'  v{e.source} -> v{e.target} '
            f'[label="{e.simple_index}" kind={e.kind}];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def desing_to_json(dd: DesingularizationData) -> dict:
    return {
        "target": datum_to_json(dd.target, derived=True),
        "minimal": datum_to_json(dd.minimal, derived=True),
        "word": list(dd.word),
        "bsFirst": list(dd.bs_first.word),
        "bsSecond": list(dd.bs_second.word),
    }


# ---------------------------------------------------------------------------
# matrix text format


def _parse_scalar(token: str, field: Field):
    try:
        value = Fraction(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad matrix entry {token!r}: {exc}") from exc
    return field.elem(value)


def parse_matrix_text(text: str):
    """Parse the matrix text format into a Subspace pair (U, W)."""
    lines = text.splitlines()
    header = [ln for ln in lines[:2]]
    if len(header) < 2:
        raise ValueError("matrix file needs a field line and a size line")
    field_parts = header[0].split()
    if len(field_parts) != 2 or field_parts[0] != "field":
        raise ValueError(f"bad field line {header[0]!r}: expected 'field Q|q'")
    if field_parts[1] in ("Q", "QQ"):
        field = QQ
    else:
        try:
            field = Field(int(field_parts[1]))
        except (ValueError, FieldError) as exc:
            raise ValueError(f"bad field {field_parts[1]!r}: {exc}") from exc
    try:
        n, k, l = (int(x) for x in header[1].split())
    except ValueError as exc:
        raise ValueError(f"bad size line {header[1]!r}: {exc}") from exc
    if not (0 < k < n and 0 < l < n):
        raise ValueError(f"need 0 < k < n and 0 < l < n, got n={n} k={k} l={l}")
    blocks = []
    current = []
    for ln in lines[2:]:
        if ln.strip():
            current.extend(ln.split())
        elif current:
            blocks.append(current)
            current = []
    if current:
        blocks.append(current)
    if len(blocks) != 2:
        raise ValueError(
            f"expected two blank-line-separated blocks (U then W), "
            f"got {len(blocks)}"
        )
    spaces = []
    for block, count, name in ((blocks[0], k, "U"), (blocks[1], l, "W")):
        if len(block) != n * count:
            raise ValueError(
                f"block for {name} has {len(block)} entries, "
                f"expected {n} x {count}"
            )
        cols = [
            [_parse_scalar(block[j * n + i], field) for i in range(n)]
            for j in range(count)
        ]
        try:
            spaces.append(Subspace(field, n, cols))
        except ValueError as exc:
            raise ValueError(f"bad basis for {name}: {exc}") from exc
    return spaces[0], spaces[1]


def format_matrix_text(U: Subspace, W: Subspace) -> str:
    """Inverse of :func:`parse_matrix_text` for canonical points."""
    U._check_compatible(W)
    field = "Q" if U.field.p is None else str(U.field.p)
    out = [f"field {field}", f"{U.n} {U.dim} {W.dim}"]
    for space in (U, W):
        for col in space.columns:
            out.append(" ".join(str(x) for x in col))
        out.append("")
    return "\n".join(out)
