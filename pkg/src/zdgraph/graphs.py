"""Finite simple undirected graphs over opaque vertex labels.

Vertices keep their construction order, which makes every derived
artifact (complements, embeddings, serializations) deterministic.
Supported interchange formats: edge-list text, graph6, and DOT (emit
only).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping, Sequence

Vertex = Hashable


class GraphFormatError(ValueError):
    """Malformed graph text; carries a line or byte position."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (position {position})"
        super().__init__(message)


class Graph:
    """Immutable simple graph: no loops, no multi-edges, symmetric adjacency."""

    __slots__ = ("_vertices", "_index", "_adj", "_edges")

    def __init__(self, vertices: Sequence[Vertex], edges: Iterable[tuple[Vertex, Vertex]]):
        vs = tuple(vertices)
        index: dict[Vertex, int] = {}
        for v in vs:
            if v in index:
                raise ValueError(f"duplicate vertex label {v!r}")
            index[v] = len(index)
        adj: dict[Vertex, set[Vertex]] = {v: set() for v in vs}
        for u, v in edges:
            if u not in index or v not in index:
                raise ValueError(f"edge ({u!r}, {v!r}) references an undeclared vertex")
            if u == v:
                raise ValueError(f"loop edge at {u!r}")
            adj[u].add(v)
            adj[v].add(u)
        self._vertices = vs
        self._index = index
        self._adj = {v: frozenset(nbrs) for v, nbrs in adj.items()}
        raw = []
        for u in vs:
            iu = index[u]
            for v in self._adj[u]:
                if index[v] > iu:
                    raw.append((u, v))
        raw.sort(key=lambda e: (index[e[0]], index[e[1]]))
        self._edges = tuple(raw)

    @property
    def vertices(self) -> tuple[Vertex, ...]:
        return self._vertices

    @property
    def edges(self) -> tuple[tuple[Vertex, Vertex], ...]:
        return self._edges

    def __len__(self) -> int:
        return len(self._vertices)

    def edge_count(self) -> int:
        return len(self._edges)

    def has_vertex(self, v: Vertex) -> bool:
        return v in self._index

    def has_edge(self, u: Vertex, v: Vertex) -> bool:
        return v in self._adj.get(u, frozenset())

    def neighbors(self, v: Vertex) -> frozenset[Vertex]:
        if v not in self._adj:
            raise ValueError(f"unknown vertex {v!r}")
        return self._adj[v]

    def degree(self, v: Vertex) -> int:
        return len(self.neighbors(v))

    def vertex_index(self, v: Vertex) -> int:
        if v not in self._index:
            raise ValueError(f"unknown vertex {v!r}")
        return self._index[v]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertices == other._vertices and set(self._edges) == set(other._edges)

    def __hash__(self):
        return hash((self._vertices, frozenset(self._edges)))

    def __repr__(self) -> str:
        return f"Graph({len(self)} vertices, {self.edge_count()} edges)"


def build_graph(vertices: Sequence[Vertex], edges: Iterable[tuple[Vertex, Vertex]]) -> Graph:
    return Graph(vertices, edges)


def complement(g: Graph) -> Graph:
    """Same vertices; edge exactly where g has none."""
    vs = g.vertices
    edges = [
        (u, v)
        for i, u in enumerate(vs)
        for v in vs[i + 1 :]
        if not g.has_edge(u, v)
    ]
    return Graph(vs, edges)


def induced_subgraph(g: Graph, keep: Iterable[Vertex]) -> Graph:
    keep_set = set(keep)
    for v in keep_set:
        if not g.has_vertex(v):
            raise ValueError(f"unknown vertex {v!r}")
    vs = [v for v in g.vertices if v in keep_set]
    edges = [(u, v) for u, v in g.edges if u in keep_set and v in keep_set]
    return Graph(vs, edges)


# ---------------------------------------------------------------------------
# Induced-subgraph search


def find_induced_embedding(pattern: Graph, host: Graph) -> dict[Vertex, Vertex] | None:
    """First induced embedding of pattern into host, or None.

    Deterministic: pattern vertices are tried by descending degree (ties
    by construction order) and host candidates in host vertex order.
    """
    if len(pattern) > len(host):
        return None
    order = sorted(
        pattern.vertices,
        key=lambda v: (-pattern.degree(v), pattern.vertex_index(v)),
    )
    host_vertices = host.vertices
    assignment: dict[Vertex, Vertex] = {}
    used: set[Vertex] = set()

    def candidates(u: Vertex) -> Iterable[Vertex]:
        pools = [host.neighbors(assignment[w]) for w in pattern.neighbors(u) if w in assignment]
        if not pools:
            return host_vertices
        pool = set(pools[0])
        for extra in pools[1:]:
            pool &= extra
        return [v for v in host_vertices if v in pool]

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        u = order[i]
        du = pattern.degree(u)
        for v in candidates(u):
            if v in used or host.degree(v) < du:
                continue
            ok = True
            for w, img in assignment.items():
                if pattern.has_edge(u, w) != host.has_edge(v, img):
                    ok = False
                    break
            if not ok:
                continue
            assignment[u] = v
            used.add(v)
            if extend(i + 1):
                return True
            del assignment[u]
            used.remove(v)
        return False

    if extend(0):
        return dict(assignment)
    return None


def is_induced_embedding(pattern: Graph, host: Graph, mapping: Mapping[Vertex, Vertex]) -> bool:
    """Independent verifier: injective and adjacency-preserving both ways."""
    if set(mapping.keys()) != set(pattern.vertices):
        return False
    images = list(mapping.values())
    if len(set(images)) != len(images):
        return False
    if any(not host.has_vertex(v) for v in images):
        return False
    vs = pattern.vertices
    for i, u in enumerate(vs):
        for w in vs[i + 1 :]:
            if pattern.has_edge(u, w) != host.has_edge(mapping[u], mapping[w]):
                return False
    return True


# ---------------------------------------------------------------------------
# Metrics


@dataclass(frozen=True)
class Diameter:
    kind: str  # "finite" | "infinite"
    value: int | None = None

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    def __str__(self) -> str:
        return str(self.value) if self.kind == "finite" else "infinite"


def diameter(g: Graph) -> Diameter:
    """Max eccentricity; tagged infinite when disconnected.

    The one-vertex graph has diameter 0. The empty graph has no diameter
    and raises.
    """
    if len(g) == 0:
        raise ValueError("the empty graph has no diameter")
    if len(g) == 1:
        return Diameter("finite", 0)
    worst = 0
    for source in g.vertices:
        dist = {source: 0}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for v in g.neighbors(u):
                if v not in dist:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        if len(dist) != len(g):
            return Diameter("infinite")
        worst = max(worst, max(dist.values()))
    return Diameter("finite", worst)


def connected_components(g: Graph) -> list[tuple[Vertex, ...]]:
    seen: set[Vertex] = set()
    comps = []
    for start in g.vertices:
        if start in seen:
            continue
        comp = []
        queue = deque([start])
        seen.add(start)
        while queue:
            u = queue.popleft()
            comp.append(u)
            for v in g.neighbors(u):
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
        comp.sort(key=g.vertex_index)
        comps.append(tuple(comp))
    return comps


def is_complete_bipartite(g: Graph) -> tuple[bool, tuple[tuple[Vertex, ...], tuple[Vertex, ...]] | None]:
    """True with the bipartition iff g equals some K_{m,n}, m, n >= 1.

    The part containing the first vertex is returned first.
    """
    if len(g) < 2 or g.edge_count() == 0:
        return False, None
    color: dict[Vertex, int] = {}
    start = g.vertices[0]
    color[start] = 0
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in g.neighbors(u):
            if v not in color:
                color[v] = 1 - color[u]
                queue.append(v)
            elif color[v] == color[u]:
                return False, None
    if len(color) != len(g):
        return False, None  # disconnected, so not a complete bipartite graph
    part0 = tuple(v for v in g.vertices if color[v] == 0)
    part1 = tuple(v for v in g.vertices if color[v] == 1)
    if g.edge_count() != len(part0) * len(part1):
        return False, None
    return True, (part0, part1)


def is_clique(g: Graph, members: Sequence[Vertex]) -> bool:
    for i, u in enumerate(members):
        for v in members[i + 1 :]:
            if not g.has_edge(u, v):
                return False
    return True


# ---------------------------------------------------------------------------
# Serialization


def encode_edge_list(g: Graph) -> str:
    """One 'u v' pair per line; isolated vertices appear as single tokens."""
    lines = []
    for v in g.vertices:
        if g.degree(v) == 0:
            lines.append(str(v))
    for u, v in g.edges:
        lines.append(f"{u} {v}")
    return "\n".join(lines) + ("\n" if lines else "")


def decode_edge_list(text: str) -> Graph:
    vertices: list[str] = []
    seen: set[str] = set()
    edges: list[tuple[str, str]] = []

    def declare(token: str) -> None:
        if token not in seen:
            seen.add(token)
            vertices.append(token)

    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        tokens = body.split()
        if len(tokens) == 1:
            declare(tokens[0])
        elif len(tokens) == 2:
            u, v = tokens
            if u == v:
                raise GraphFormatError(f"loop edge {u!r}", lineno)
            declare(u)
            declare(v)
            edges.append((u, v))
        else:
            raise GraphFormatError(f"expected one or two tokens, got {len(tokens)}", lineno)
    return Graph(vertices, edges)


def encode_graph6(g: Graph) -> str:
    """Standard dense graph6 text for the graph under its vertex order."""
    n = len(g)
    if n > 258047:
        raise ValueError("graph too large for 3-byte graph6 size")
    out = bytearray()
    if n <= 62:
        out.append(n + 63)
    else:
        out.append(126)
        out.append(((n >> 12) & 63) + 63)
        out.append(((n >> 6) & 63) + 63)
        out.append((n & 63) + 63)
    bits = []
    vs = g.vertices
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(vs[i], vs[j]) else 0)
    while len(bits) % 6:
        bits.append(0)
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k : k + 6]:
            value = (value << 1) | b
        out.append(value + 63)
    return out.decode("ascii")


def decode_graph6(text: str) -> Graph:
    """Decode graph6 into a graph with integer vertices 0..n-1."""
    data = text.strip()
    if data.startswith(">>graph6<<"):
        data = data[len(">>graph6<<") :]
    raw = data.encode("ascii", errors="replace")
    if not raw:
        raise GraphFormatError("empty graph6 input", 0)
    for pos, byte in enumerate(raw):
        if not 63 <= byte <= 126:
            raise GraphFormatError(f"byte {byte} outside graph6 range", pos)
    if raw[0] == 126:
        if len(raw) < 4:
            raise GraphFormatError("truncated graph6 size", len(raw))
        if raw[1] == 126:
            raise GraphFormatError("graph6 sizes beyond 258047 unsupported", 1)
        n = ((raw[1] - 63) << 12) | ((raw[2] - 63) << 6) | (raw[3] - 63)
        body = raw[4:]
        offset = 4
    else:
        n = raw[0] - 63
        body = raw[1:]
        offset = 1
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise GraphFormatError(
            f"expected {need} adjacency bytes for {n} vertices, got {len(body)}", offset
        )
    bits = []
    for byte in body:
        value = byte - 63
        for shift in range(5, -1, -1):
            bits.append((value >> shift) & 1)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(list(range(n)), edges)


def encode_dot(g: Graph, arcs: Sequence[tuple[Vertex, Vertex]] | None = None) -> str:
    """DOT text; pass arcs to emit a digraph of an orientation instead."""

    def quote(v: Vertex) -> str:
        return '"' + str(v).replace('"', '\\"') + '"'

    lines = []
    if arcs is None:
        lines.append("graph {")
        for v in g.vertices:
            if g.degree(v) == 0:
                lines.append(f"  {quote(v)};")
        for u, v in g.edges:
            lines.append(f"  {quote(u)} -- {quote(v)};")
    else:
        lines.append("digraph {")
        covered = {x for arc in arcs for x in arc}
        for v in g.vertices:
            if v not in covered:
                lines.append(f"  {quote(v)};")
        for u, v in arcs:
            lines.append(f"  {quote(u)} -> {quote(v)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_io(payload: Graph | str, fmt: str, direction: str):
    """Dispatcher over the supported formats.

    encode expects a Graph and returns text; decode expects text and
    returns a Graph. DOT is emit-only.
    """
    if direction == "encode":
        if not isinstance(payload, Graph):
            raise TypeError("encode expects a Graph")
        if fmt == "edge-list":
            return encode_edge_list(payload)
        if fmt == "graph6":
            return encode_graph6(payload)
        if fmt == "dot":
            return encode_dot(payload)
        raise ValueError(f"unknown format {fmt!r}")
    if direction == "decode":
        if not isinstance(payload, str):
            raise TypeError("decode expects text")
        if fmt == "edge-list":
            return decode_edge_list(payload)
        if fmt == "graph6":
            return decode_graph6(payload)
        if fmt == "dot":
            raise ValueError("DOT is emit-only")
        raise ValueError(f"unknown format {fmt!r}")
    raise ValueError(f"unknown direction {direction!r}")
