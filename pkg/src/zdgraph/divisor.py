"""Divisor graphs, orientation roles, recognition, and labelings.

A graph is a divisor graph exactly when it admits an orientation whose
every non-isolated vertex is a transmitter (out-arcs only), a receiver
(in-arcs only), or transitive (both, with u->t and t->v forcing u->v).
That condition is the same as the arc relation being transitive, which
recognition exploits: fixing u->t and t->v forces u->v, and a forced arc
over a non-edge refutes the branch.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .graphs import Graph, Vertex, find_induced_embedding


class CapExceededError(ValueError):
    """Search asked to exceed its configured size cap."""


class VertexRole(enum.Enum):
    TRANSMITTER = "transmitter"
    RECEIVER = "receiver"
    TRANSITIVE = "transitive"
    ISOLATED = "isolated"
    INVALID = "invalid"


@dataclass(frozen=True)
class Orientation:
    """A direction for every edge of some graph, as (tail, head) pairs."""

    arcs: tuple[tuple[Vertex, Vertex], ...]

    def covers(self, g: Graph) -> bool:
        directed = set()
        for u, v in self.arcs:
            key = frozenset((u, v))
            if key in directed:
                return False
            directed.add(key)
        return directed == {frozenset(e) for e in g.edges}

    def out_map(self, g: Graph) -> dict[Vertex, set[Vertex]]:
        out: dict[Vertex, set[Vertex]] = {v: set() for v in g.vertices}
        for u, v in self.arcs:
            out[u].add(v)
        return out

    def in_map(self, g: Graph) -> dict[Vertex, set[Vertex]]:
        into: dict[Vertex, set[Vertex]] = {v: set() for v in g.vertices}
        for u, v in self.arcs:
            into[v].add(u)
        return into

    def to_jsonable(self) -> list[list[str]]:
        return [[str(u), str(v)] for u, v in self.arcs]


@dataclass(frozen=True)
class LabelingVerdict:
    ok: bool
    reason: str | None = None  # collision | edge-without-divisibility | divisibility-without-edge
    pair: tuple[Vertex, Vertex] | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


# ---------------------------------------------------------------------------
# Basic constructions


def divisor_graph_of_set(values: Iterable[int]) -> Graph:
    """Graph on a set of positive integers, adjacent iff one divides the other."""
    items = list(values)
    if any(v <= 0 for v in items):
        raise ValueError("divisor graphs are defined over positive integers")
    if len(set(items)) != len(items):
        raise ValueError("duplicate entries are not a set")
    edges = [
        (a, b)
        for i, a in enumerate(items)
        for b in items[i + 1 :]
        if a % b == 0 or b % a == 0
    ]
    return Graph(items, edges)


def first_primes(k: int) -> list[int]:
    out: list[int] = []
    candidate = 2
    while len(out) < k:
        if all(candidate % p for p in out):
            out.append(candidate)
        candidate += 1
    return out


# ---------------------------------------------------------------------------
# Roles and validation


def classify_roles(g: Graph, orientation: Orientation) -> dict[Vertex, VertexRole]:
    """Role of every vertex under the orientation; Invalid marks failed closure."""
    if not orientation.covers(g):
        raise ValueError("orientation does not cover the edge set")
    out = orientation.out_map(g)
    into = orientation.in_map(g)
    roles: dict[Vertex, VertexRole] = {}
    for t in g.vertices:
        if g.degree(t) == 0:
            roles[t] = VertexRole.ISOLATED
        elif not into[t]:
            roles[t] = VertexRole.TRANSMITTER
        elif not out[t]:
            roles[t] = VertexRole.RECEIVER
        else:
            ok = all(out[t] <= out[u] for u in into[t])
            roles[t] = VertexRole.TRANSITIVE if ok else VertexRole.INVALID
    return roles


def validate_orientation(g: Graph, orientation: Orientation) -> bool:
    """True iff no vertex classifies Invalid (isolated vertices are fine)."""
    return VertexRole.INVALID not in classify_roles(g, orientation).values()


def is_transitive_relation(orientation: Orientation) -> bool:
    """Direct check that the arc set is transitive as a relation."""
    out: dict[Vertex, set[Vertex]] = {}
    for u, v in orientation.arcs:
        out.setdefault(u, set()).add(v)
    for u, targets in out.items():
        for t in targets:
            for v in out.get(t, ()):
                if v not in targets:
                    return False
    return True


# ---------------------------------------------------------------------------
# Recognition

# Smallest known obstruction we test for: 7 vertices, 13 edges, and all
# of its 8192 orientations leave some vertex with unclosed in/out arcs.
_OBSTRUCTION_VERTICES = ("A", "B", "C", "D", "E", "F", "G")
_OBSTRUCTION_EDGES = (
    ("A", "C"), ("A", "D"), ("A", "E"), ("A", "F"), ("A", "G"),
    ("B", "D"), ("B", "E"),
    ("C", "E"), ("C", "F"), ("C", "G"),
    ("D", "E"), ("D", "G"),
    ("E", "G"),
)


def forbidden_pattern() -> Graph:
    """The 7-vertex obstruction graph: no orientation of it is valid."""
    return Graph(_OBSTRUCTION_VERTICES, _OBSTRUCTION_EDGES)


def recognize(
    g: Graph,
    cap_vertices: int = 64,
    obstruction_check: bool = True,
) -> Orientation | None:
    """Search for a valid orientation by backtracking with forced-arc closure.

    Whenever u->t and t->v are both fixed, u->v is forced; forcing an arc
    across a non-edge, or against an already fixed direction, prunes the
    branch. Deterministic: edges are decided in canonical order, low
    vertex index toward high first.
    """
    n = len(g)
    if n > cap_vertices:
        raise CapExceededError(f"{n} vertices exceeds the recognition cap {cap_vertices}")
    if obstruction_check and n >= 7:
        if find_induced_embedding(forbidden_pattern(), g) is not None:
            return None

    index = {v: i for i, v in enumerate(g.vertices)}
    edges = [(index[u], index[v]) for u, v in g.edges]
    m = len(edges)
    if m == 0:
        return Orientation(())
    adj = [0] * n
    edge_id: dict[tuple[int, int], int] = {}
    for eid, (u, v) in enumerate(edges):
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        edge_id[(u, v)] = eid
        edge_id[(v, u)] = eid

    # state[eid]: 0 undecided, +1 low->high, -1 high->low
    state = [0] * m
    out = [0] * n
    into = [0] * n

    def arc_of(eid: int, direction: int) -> tuple[int, int]:
        u, v = edges[eid]
        return (u, v) if direction > 0 else (v, u)

    def set_arc(tail: int, head: int, trail: list[int]) -> bool:
        """Fix tail->head plus every consequence; False on conflict."""
        queue = [(tail, head)]
        while queue:
            a, b = queue.pop()
            if not (adj[a] >> b) & 1:
                return False
            eid = edge_id[(a, b)]
            want = 1 if edges[eid] == (a, b) else -1
            if state[eid] == want:
                continue
            if state[eid] != 0:
                return False
            state[eid] = want
            trail.append(eid)
            out[a] |= 1 << b
            into[b] |= 1 << a
            w = into[a]
            while w:
                low = w & -w
                queue.append((low.bit_length() - 1, b))
                w ^= low
            w = out[b]
            while w:
                low = w & -w
                queue.append((a, low.bit_length() - 1))
                w ^= low
        return True

    def undo(trail: list[int], mark: int) -> None:
        while len(trail) > mark:
            eid = trail.pop()
            a, b = arc_of(eid, state[eid])
            state[eid] = 0
            out[a] &= ~(1 << b)
            into[b] &= ~(1 << a)

    trail: list[int] = []

    def solve(pos: int) -> bool:
        while pos < m and state[pos] != 0:
            pos += 1
        if pos == m:
            return True
        u, v = edges[pos]
        for tail, head in ((u, v), (v, u)):
            mark = len(trail)
            if set_arc(tail, head, trail) and solve(pos + 1):
                return True
            undo(trail, mark)
        return False

    import sys

    needed = m + 100
    old_limit = sys.getrecursionlimit()
    if old_limit < needed:
        sys.setrecursionlimit(needed)
    try:
        found = solve(0)
    finally:
        if old_limit < needed:
            sys.setrecursionlimit(old_limit)
    if not found:
        return None
    labels = g.vertices
    arcs = tuple(
        (labels[a], labels[b]) for a, b in (arc_of(eid, state[eid]) for eid in range(m))
    )
    return Orientation(arcs)


def brute_force_recognize(g: Graph, cap_edges: int = 20) -> Orientation | None:
    """Independent oracle: scan all 2^|E| orientations for a valid one."""
    index = {v: i for i, v in enumerate(g.vertices)}
    edges = [(index[u], index[v]) for u, v in g.edges]
    m = len(edges)
    if m > cap_edges:
        raise CapExceededError(f"{m} edges exceeds the brute-force cap {cap_edges}")
    if m == 0:
        return Orientation(())
    n = len(g)
    labels = g.vertices
    for mask in range(1 << m):
        out = [0] * n
        arcs = []
        for eid in range(m):
            u, v = edges[eid]
            if (mask >> eid) & 1:
                u, v = v, u
            out[u] |= 1 << v
            arcs.append((u, v))
        ok = True
        for u, v in arcs:
            if out[v] & ~out[u]:
                ok = False
                break
        if ok:
            return Orientation(tuple((labels[a], labels[b]) for a, b in arcs))
    return None


# ---------------------------------------------------------------------------
# Labelings


def synthesize_labeling(g: Graph, orientation: Orientation) -> dict[Vertex, int]:
    """Distinct-prime construction of a divisor labeling from a valid orientation.

    Each vertex gets one of the first |V| primes in vertex order; its
    label is the product of the primes of its in-neighbors and itself.
    Transitivity of the arcs makes divisibility coincide with adjacency.
    """
    if not validate_orientation(g, orientation):
        raise ValueError("cannot synthesize a labeling from an invalid orientation")
    primes = first_primes(len(g))
    prime_of = {v: primes[i] for i, v in enumerate(g.vertices)}
    into = orientation.in_map(g)
    labeling: dict[Vertex, int] = {}
    for v in g.vertices:
        value = prime_of[v]
        for u in into[v]:
            value *= prime_of[u]
        labeling[v] = value
    return labeling


def validate_labeling(g: Graph, labeling: Mapping[Vertex, int]) -> LabelingVerdict:
    """Check injectivity and that divisibility matches adjacency exactly."""
    missing = [v for v in g.vertices if v not in labeling]
    if missing:
        raise ValueError(f"labeling misses vertices: {missing!r}")
    seen: dict[int, Vertex] = {}
    for v in g.vertices:
        value = labeling[v]
        if value in seen:
            return LabelingVerdict(
                False, "collision", (seen[value], v), f"both labeled {value}"
            )
        seen[value] = v
    vs = g.vertices
    for i, u in enumerate(vs):
        for v in vs[i + 1 :]:
            a, b = labeling[u], labeling[v]
            divides = a % b == 0 or b % a == 0
            if g.has_edge(u, v) and not divides:
                return LabelingVerdict(
                    False, "edge-without-divisibility", (u, v), f"{a} vs {b}"
                )
            if not g.has_edge(u, v) and divides:
                return LabelingVerdict(
                    False, "divisibility-without-edge", (u, v), f"{a} vs {b}"
                )
    return LabelingVerdict(True)


def orientation_from_labeling(g: Graph, labeling: Mapping[Vertex, int]) -> Orientation:
    """Orient each edge from the dividing label to the divided one."""
    arcs = []
    for u, v in g.edges:
        a, b = labeling[u], labeling[v]
        if a != b and b % a == 0:
            arcs.append((u, v))
        elif a != b and a % b == 0:
            arcs.append((v, u))
        else:
            raise ValueError(f"labeling does not orient edge ({u!r}, {v!r})")
    return Orientation(tuple(arcs))
