"""Interlacement, interlace matrices/graphs, loop decoration, kappa transforms."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InputFormatError
from .gf2 import Gf2Matrix
from .graphs import EulerSystem


@dataclass(frozen=True)
class LoopedGraph:
    """Undirected looped graph: irreflexive symmetric adjacency plus a loop set.

    adjacency_rows is bit-packed over the vertex order with zero diagonal;
    matrix() adds the loop indicators on the diagonal.
    """

    vertices: tuple[str, ...]
    adjacency_rows: tuple[int, ...]
    loops: frozenset[str]

    def __post_init__(self) -> None:
        n = len(self.vertices)
        if len(set(self.vertices)) != n:
            raise ValueError("duplicate vertices")
        if len(self.adjacency_rows) != n:
            raise ValueError("adjacency rows do not match vertices")
        for i, row in enumerate(self.adjacency_rows):
            if row < 0 or row >> n:
                raise ValueError(f"adjacency row {i} has bits outside the graph")
            if (row >> i) & 1:
                raise ValueError(f"adjacency must be irreflexive (vertex {self.vertices[i]})")
            for j in range(n):
                if (row >> j) & 1 and not (self.adjacency_rows[j] >> i) & 1:
                    raise ValueError("adjacency must be symmetric")
        for label in self.loops:
            if label not in self.vertices:
                raise ValueError(f"loop on unknown vertex {label!r}")

    @property
    def n(self) -> int:
        return len(self.vertices)

    def is_adjacent(self, u: str, v: str) -> bool:
        i = self.vertices.index(u)
        j = self.vertices.index(v)
        return bool((self.adjacency_rows[i] >> j) & 1)

    def matrix(self) -> Gf2Matrix:
        """Adjacency matrix over GF(2) with diagonal = loop indicators."""
        rows = list(self.adjacency_rows)
        for i, label in enumerate(self.vertices):
            if label in self.loops:
                rows[i] |= 1 << i
        return Gf2Matrix(self.vertices, tuple(rows))

    def induced(self, keep: Iterable[str]) -> "LoopedGraph":
        """Induced subgraph on the given vertices, order preserved."""
        wanted = set(keep)
        for label in wanted:
            if label not in self.vertices:
                raise ValueError(f"unknown vertex {label!r}")
        idx = [i for i, label in enumerate(self.vertices) if label in wanted]
        pos = {i: p for p, i in enumerate(idx)}
        rows = []
        for i in idx:
            row = 0
            for j in idx:
                if (self.adjacency_rows[i] >> j) & 1:
                    row |= 1 << pos[j]
            rows.append(row)
        kept_labels = tuple(self.vertices[i] for i in idx)
        return LoopedGraph(kept_labels, tuple(rows), self.loops & set(kept_labels))

    def toggle_loops(self, toggle: Iterable[str]) -> "LoopedGraph":
        """Flip the loop status of the given vertices."""
        t = set(toggle)
        for label in t:
            if label not in self.vertices:
                raise ValueError(f"unknown vertex {label!r}")
        return LoopedGraph(self.vertices, self.adjacency_rows, frozenset(self.loops ^ t))

    def disjoint_union(self, other: "LoopedGraph") -> "LoopedGraph":
        if set(self.vertices) & set(other.vertices):
            raise ValueError("vertex labels overlap")
        n = self.n
        rows = list(self.adjacency_rows) + [row << n for row in other.adjacency_rows]
        return LoopedGraph(
            self.vertices + other.vertices, tuple(rows), self.loops | other.loops
        )


def looped_graph(
    vertices: Sequence[object],
    edges: Iterable[tuple[object, object]] = (),
    loops: Iterable[object] = (),
) -> LoopedGraph:
    """Build a LoopedGraph from vertex labels, undirected edges, and a loop set."""
    labels = tuple(str(v) for v in vertices)
    index = {label: i for i, label in enumerate(labels)}
    rows = [0] * len(labels)
    for u, v in edges:
        su, sv = str(u), str(v)
        if su not in index:
            raise ValueError(f"unknown vertex {su!r}")
        if sv not in index:
            raise ValueError(f"unknown vertex {sv!r}")
        if su == sv:
            raise ValueError(f"loop at {su} must be given through the loop set")
        rows[index[su]] |= 1 << index[sv]
        rows[index[sv]] |= 1 << index[su]
    loop_labels = frozenset(str(x) for x in loops)
    return LoopedGraph(labels, tuple(rows), loop_labels)


def interlaced(es: EulerSystem, u: str, v: str) -> bool:
    """True iff the occurrences of u and v alternate u,v,u,v along one circuit."""
    if u == v:
        raise ValueError("interlacement needs two distinct vertices")
    occ = es.occurrences()
    if u not in occ:
        raise ValueError(f"unknown vertex {u!r}")
    if v not in occ:
        raise ValueError(f"unknown vertex {v!r}")
    cu, p1, p2 = occ[u]
    cv, q1, q2 = occ[v]
    if cu != cv:
        return False
    return (p1 < q1 < p2) != (p1 < q2 < p2)


def interlace_matrix(es: EulerSystem) -> Gf2Matrix:
    """Symmetric zero-diagonal GF(2) matrix of pairwise interlacements."""
    g = es.graph
    occ = es.occurrences()
    n = len(g.vertices)
    rows = [0] * n
    for i in range(n):
        ci, p1, p2 = occ[g.vertices[i]]
        for j in range(i + 1, n):
            cj, q1, q2 = occ[g.vertices[j]]
            if ci == cj and (p1 < q1 < p2) != (p1 < q2 < p2):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Gf2Matrix(g.vertices, tuple(rows))


def interlace_graph(es: EulerSystem, loop_set: Iterable[str] = ()) -> LoopedGraph:
    """Interlace graph of the Euler system, with loops attached on loop_set."""
    loops = frozenset(str(x) for x in loop_set)
    for label in loops:
        if label not in es.graph.vertices:
            raise ValueError(f"unknown vertex {label!r}")
    m = interlace_matrix(es)
    return LoopedGraph(m.labels, m.rows, loops)


def kappa_transform(es: EulerSystem, a: str) -> EulerSystem:
    """Reverse the segment of a's circuit between its two visits to a.

    With the circuit written a C1 a C2 a (first visit = the earlier stored
    position), the result is a C1 a C2' a where C2' is C2 reversed. The
    other components are untouched; the result is a valid Euler system on
    the same multigraph and edge set.
    """
    occ = es.occurrences()
    if a not in occ:
        raise ValueError(f"unknown vertex {a!r}")
    ci, p, q = occ[a]
    seq = es.circuits[ci]
    rotated = seq[2 * p:] + seq[:2 * p]
    cut = 2 * (q - p)
    new_seq = rotated[:cut] + tuple(reversed(rotated[cut:]))
    circuits = list(es.circuits)
    circuits[ci] = new_seq
    return EulerSystem(es.graph, tuple(circuits))


@dataclass(frozen=True)
class ToggleReport:
    """Outcome of checking the interlacement toggle law for one kappa transform.

    A pair (v, w) avoiding a must toggle its interlacement exactly when both
    v and w are interlaced with a; ``violations`` lists any pair that broke
    the rule (expected: none).
    """

    vertex: str
    pairs_checked: int
    violations: tuple[tuple[str, str], ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def interlacement_toggle_check(es: EulerSystem, a: str) -> ToggleReport:
    """Compare all pairwise interlacements before and after kappa at a."""
    before = interlace_matrix(es)
    after = interlace_matrix(kappa_transform(es, a))
    labels = [v for v in es.graph.vertices if v != a]
    ai = before.label_index(a)
    violations = []
    checked = 0
    for x in range(len(labels)):
        for y in range(x + 1, len(labels)):
            u, w = labels[x], labels[y]
            i, j = before.label_index(u), before.label_index(w)
            toggled = before.entry(i, j) != after.entry(i, j)
            should = bool(before.entry(i, ai)) and bool(before.entry(j, ai))
            checked += 1
            if toggled != should:
                violations.append((u, w))
    return ToggleReport(a, checked, tuple(violations))


def parse_looped_graph_text(text: str) -> LoopedGraph:
    """Parse the looped-graph file format.

    Line "vertices: a b c" first, an optional "loops: a c" line, then one
    edge "u v" per line; blank lines are ignored.
    """
    vertices: list[str] | None = None
    loops: list[str] = []
    edges: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("vertices:"):
            if vertices is not None:
                raise InputFormatError(f"line {lineno}: duplicate vertices line")
            vertices = line[len("vertices:"):].split()
            continue
        if line.startswith("loops:"):
            loops.extend(line[len("loops:"):].split())
            continue
        if vertices is None:
            raise InputFormatError(f"line {lineno}: vertices line must come first")
        tokens = line.split()
        if len(tokens) != 2:
            raise InputFormatError(f"line {lineno}: expected an edge 'u v'")
        edges.append((tokens[0], tokens[1]))
    if vertices is None:
        raise InputFormatError("line 1: missing vertices line")
    try:
        return looped_graph(vertices, edges, loops)
    except ValueError as exc:
        raise InputFormatError(str(exc)) from None
