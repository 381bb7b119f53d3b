"""graph6 and edge-list text formats, and the JSON coloring document."""

from __future__ import annotations

import json
from collections.abc import Iterable, Iterator

from .coloring import PartialColoring
from .errors import InputError, ParseError, UnsupportedInput
from .graph import Multigraph

GRAPH6_HEADER = ">>graph6<<"


# -- graph6 ---------------------------------------------------------------


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n < 68719476736:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise UnsupportedInput("graph too large for graph6")


def to_graph6(g: Multigraph) -> str:
    if not g.is_simple():
        raise UnsupportedInput("graph6 cannot encode parallel edges")
    dense, _, _ = g.relabeled()
    n = dense.vertex_count
    adj = {dense.endpoints(e) for e in dense.edges}
    bits = [1 if (i, j) in adj else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(
        chr(63 + int("".join(map(str, bits[i : i + 6])), 2)) for i in range(0, len(bits), 6)
    )
    return _encode_n(n) + body


def from_graph6(text: str) -> Multigraph:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise ParseError("empty graph6 string", offset=0)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"invalid graph6 character {ch!r}", offset=i)
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise ParseError("truncated graph6 size field", offset=len(vals))
        n, pos = 0, 8
        for v in vals[2:8]:
            n = (n << 6) | v
    else:
        if len(vals) < 4:
            raise ParseError("truncated graph6 size field", offset=len(vals))
        n, pos = 0, 4
        for v in vals[1:4]:
            n = (n << 6) | v
    need = (n * (n - 1) // 2 + 5) // 6
    body = vals[pos:]
    if len(body) != need:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {need} for n={n}", offset=pos)
    bits = []
    for v in body:
        bits.extend((v >> s) & 1 for s in range(5, -1, -1))
    edges = []
    b = 0
    for j in range(1, n):
        for i in range(j):
            if bits[b]:
                edges.append((i, j))
            b += 1
    if any(bits[b:]):
        raise ParseError("nonzero padding bits in graph6 body", offset=len(vals) - 1)
    return Multigraph(n, edges)


def read_graph6_stream(lines: Iterable[str]) -> Iterator[Multigraph]:
    for lineno, line in enumerate(lines, 1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        try:
            yield from_graph6(s)
        except ParseError as exc:
            raise ParseError(str(exc), line=lineno, offset=exc.offset) from None


# -- edge list ------------------------------------------------------------


def from_edgelist(text: str) -> Multigraph:
    """One ``u v`` (or ``id u v``) per line; ``#`` comments; optional ``vertices N``."""
    declared = None
    pairs = []
    ids = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "vertices":
            if len(parts) != 2 or not parts[1].isdigit():
                raise ParseError("expected 'vertices N'", line=lineno)
            declared = int(parts[1])
            continue
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise ParseError(f"non-integer token in {raw!r}", line=lineno) from None
        if len(nums) == 2:
            ids.append(None)
            pairs.append(tuple(nums))
        elif len(nums) == 3:
            ids.append(nums[0])
            pairs.append((nums[1], nums[2]))
        else:
            raise ParseError("expected 'u v' or 'id u v'", line=lineno)
        if min(pairs[-1]) < 0:
            raise ParseError("negative vertex index", line=lineno)
        if pairs[-1][0] == pairs[-1][1]:
            raise ParseError("loops are not allowed", line=lineno)
    if any(i is not None for i in ids) and any(i is None for i in ids):
        raise ParseError("either all lines carry an edge id or none do")
    n = max((max(p) + 1 for p in pairs), default=0)
    if declared is not None:
        if declared < n:
            raise ParseError(f"'vertices {declared}' is smaller than the largest index + 1 ({n})")
        n = declared
    if ids and ids[0] is not None:
        if len(set(ids)) != len(ids):
            raise ParseError("duplicate edge ids")
        return Multigraph(n, dict(zip(ids, pairs)))
    return Multigraph(n, pairs)


def to_edgelist(g: Multigraph) -> str:
    dense_vertices = g.vertices == tuple(range(g.vertex_count))
    if not dense_vertices:
        g, _, _ = g.relabeled()
    lines = []
    n_implied = max((max(g.endpoints(e)) + 1 for e in g.edges), default=0)
    if n_implied != g.vertex_count:
        lines.append(f"vertices {g.vertex_count}")
    dense_edges = g.edges == tuple(range(g.edge_count))
    for e, u, v in g.edge_items():
        lines.append(f"{u} {v}" if dense_edges else f"{e} {u} {v}")
    return "\n".join(lines) + "\n"


def parse_graph(text: str, fmt: str) -> Multigraph:
    if fmt == "graph6":
        return from_graph6(text)
    if fmt == "edgelist":
        return from_edgelist(text)
    raise InputError(f"unknown graph format {fmt!r}")


def serialize_graph(g: Multigraph, fmt: str) -> str:
    if fmt == "graph6":
        return to_graph6(g)
    if fmt == "edgelist":
        return to_edgelist(g)
    raise InputError(f"unknown graph format {fmt!r}")


# -- coloring documents ---------------------------------------------------


def coloring_to_dict(c: PartialColoring) -> dict:
    return {
        "t": c.t,
        "k": c.k,
        "labels": {str(e): sorted(lab) for e, lab in sorted(c.assignment.items())},
    }


def coloring_from_dict(doc: dict) -> PartialColoring:
    try:
        t, k, labels = int(doc["t"]), int(doc["k"]), doc["labels"]
        assignment = {int(e): frozenset(int(x) for x in lab) for e, lab in labels.items()}
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise ParseError(f"malformed coloring document: {exc}") from None
    return PartialColoring(t, k, assignment)


def dump_coloring(c: PartialColoring, extra: dict | None = None) -> str:
    doc = coloring_to_dict(c)
    if extra:
        doc.update(extra)
    return json.dumps(doc, indent=2) + "\n"


def load_coloring(text: str) -> PartialColoring:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno, offset=exc.pos) from None
    if not isinstance(doc, dict):
        raise ParseError("coloring document must be a JSON object")
    return coloring_from_dict(doc)
