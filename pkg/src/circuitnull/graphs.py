"""Half-edge 4-regular multigraphs, connected components, and Euler systems.

Half-edges are dense integer ids assigned in input order: edge k of the
input owns half-edges 2k (at its first endpoint) and 2k+1 (at its second).
All tie-breaking below (Hierholzer extension, component order, circuit
starts) takes the smallest available half-edge id, so construction is
bit-for-bit reproducible.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InputFormatError

_NUMERIC = re.compile(r"-?\d+")


def sorted_labels(labels: Iterable[str]) -> tuple[str, ...]:
    """Sort labels numerically when all are integers, else lexicographically."""
    items = list(labels)
    if all(_NUMERIC.fullmatch(s) for s in items):
        return tuple(sorted(items, key=int))
    return tuple(sorted(items))


@dataclass(frozen=True)
class Multigraph:
    """Undirected 4-regular multigraph; loops and parallel edges allowed.

    vertices  -- ordered labels (stable matrix row order)
    vertex_of -- half-edge id -> index into vertices
    mate      -- half-edge id -> the other half of the same edge
    """

    vertices: tuple[str, ...]
    vertex_of: tuple[int, ...]
    mate: tuple[int, ...]

    def __post_init__(self) -> None:
        m = len(self.vertex_of)
        if len(self.mate) != m:
            raise ValueError("mate table does not cover all half-edges")
        for h in range(m):
            k = self.mate[h]
            if k == h or not 0 <= k < m or self.mate[k] != h:
                raise ValueError(f"edge pairing is not a perfect matching at half-edge {h}")
        degree = [0] * len(self.vertices)
        for h in range(m):
            degree[self.vertex_of[h]] += 1
        for i, d in enumerate(degree):
            if d != 4:
                raise ValueError(f"not 4-regular: vertex {self.vertices[i]} has degree {d}")

    @property
    def num_half_edges(self) -> int:
        return len(self.vertex_of)

    @property
    def num_edges(self) -> int:
        return len(self.vertex_of) // 2

    def vertex_index(self, label: str) -> int:
        try:
            return self.vertices.index(label)
        except ValueError:
            raise ValueError(f"unknown vertex {label!r}") from None

    def half_edges_at(self, vertex_index: int) -> tuple[int, ...]:
        return tuple(
            h for h in range(self.num_half_edges) if self.vertex_of[h] == vertex_index
        )

    def edges(self) -> list[tuple[str, str]]:
        """Edges as label pairs in half-edge order (2k, 2k+1)."""
        return [
            (self.vertices[self.vertex_of[2 * k]], self.vertices[self.vertex_of[2 * k + 1]])
            for k in range(self.num_edges)
        ]


@dataclass(frozen=True)
class EulerSystem:
    """One oriented Euler circuit per component, as cyclic half-edge sequences.

    Each circuit alternates edge traversals and vertex passages: position
    2i holds the departing half-edge of the i-th edge step, position 2i+1
    its mate (the arrival), and the pair (2i+1, 2i+2) sits at one vertex.
    """

    graph: Multigraph
    circuits: tuple[tuple[int, ...], ...]

    def word(self, i: int) -> tuple[str, ...]:
        """Double occurrence word of circuit i (vertex visited at each step)."""
        seq = self.circuits[i]
        return tuple(
            self.graph.vertices[self.graph.vertex_of[seq[j]]] for j in range(0, len(seq), 2)
        )

    @property
    def words(self) -> tuple[tuple[str, ...], ...]:
        return tuple(self.word(i) for i in range(len(self.circuits)))

    def occurrences(self) -> dict[str, tuple[int, int, int]]:
        """Map vertex label -> (circuit index, first word position, second)."""
        table: dict[str, tuple[int, ...]] = {}
        for ci in range(len(self.circuits)):
            for pos, label in enumerate(self.word(ci)):
                prev = table.get(label)
                table[label] = (ci, pos) if prev is None else prev + (pos,)
        return {label: t for label, t in table.items()}  # (ci, p, q) with p < q

    def visits(self) -> list[list[tuple[int, int]]]:
        """Per vertex index, its two (arrival, departure) half-edge visits."""
        result: list[list[tuple[int, int]]] = [[] for _ in self.graph.vertices]
        for seq in self.circuits:
            k = len(seq)
            for j in range(0, k, 2):
                depart = seq[j]
                arrive = seq[j - 1]  # wraps to the end for j == 0
                result[self.graph.vertex_of[depart]].append((arrive, depart))
        return result

    def follow_map(self) -> list[int]:
        """The passage matching used by the circuits themselves (arrival <-> departure)."""
        pairing = [0] * self.graph.num_half_edges
        for per_vertex in self.visits():
            for arrive, depart in per_vertex:
                pairing[arrive] = depart
                pairing[depart] = arrive
        return pairing


@dataclass(frozen=True)
class DirectedView:
    """In/out labeling of half-edges induced by traversal direction."""

    graph: Multigraph
    is_out: tuple[bool, ...]

    def out_halves_at(self, label: str) -> tuple[int, ...]:
        v = self.graph.vertex_index(label)
        return tuple(h for h in self.graph.half_edges_at(v) if self.is_out[h])

    def in_halves_at(self, label: str) -> tuple[int, ...]:
        v = self.graph.vertex_index(label)
        return tuple(h for h in self.graph.half_edges_at(v) if not self.is_out[h])


def from_edge_list(pairs: Iterable[tuple[object, object]]) -> Multigraph:
    """Build a 4-regular multigraph from (u, v) label pairs.

    Repeated pairs create parallel edges and (v, v) creates a loop; every
    vertex must end up with degree exactly 4.
    """
    edge_list = [(str(u), str(v)) for u, v in pairs]
    labels = sorted_labels({u for e in edge_list for u in e})
    index = {label: i for i, label in enumerate(labels)}
    vertex_of: list[int] = []
    mate: list[int] = []
    for k, (u, v) in enumerate(edge_list):
        vertex_of.extend((index[u], index[v]))
        mate.extend((2 * k + 1, 2 * k))
    return Multigraph(labels, tuple(vertex_of), tuple(mate))


def from_double_occurrence_words(
    words: Iterable[str | Sequence[object]],
) -> tuple[Multigraph, EulerSystem]:
    """Build the multigraph and Euler system read off double occurrence words.

    Each word is one component's Euler circuit as a cyclic vertex sequence;
    consecutive entries (cyclically) are the traversed edges. Every label
    must appear exactly twice, within a single word.
    """
    normalized: list[tuple[str, ...]] = []
    for w in words:
        if isinstance(w, str):
            normalized.append(tuple(w.split()))
        else:
            normalized.append(tuple(str(x) for x in w))
    seen: dict[str, int] = {}
    for wi, word in enumerate(normalized):
        if not word:
            raise ValueError("empty word")
        for label in word:
            if label in seen and seen[label] != wi:
                raise ValueError(f"label {label} appears in more than one word")
            seen[label] = wi
    counts: dict[str, int] = {}
    for word in normalized:
        for label in word:
            counts[label] = counts.get(label, 0) + 1
    for label, c in counts.items():
        if c != 2:
            raise ValueError(f"label {label} appears {c} times, expected exactly 2")

    labels = sorted_labels(counts)
    index = {label: i for i, label in enumerate(labels)}
    vertex_of: list[int] = []
    mate: list[int] = []
    circuits: list[tuple[int, ...]] = []
    offset = 0
    for word in normalized:
        k = len(word)
        for i in range(k):
            u, v = word[i], word[(i + 1) % k]
            vertex_of.extend((index[u], index[v]))
            mate.extend((offset + 2 * i + 1, offset + 2 * i))
        circuits.append(tuple(range(offset, offset + 2 * k)))
        offset += 2 * k
    graph = Multigraph(labels, tuple(vertex_of), tuple(mate))
    return graph, EulerSystem(graph, tuple(circuits))


def _component_table(g: Multigraph) -> list[list[int]]:
    """Half-edge ids per component, components ordered by smallest id."""
    assigned = [False] * g.num_half_edges
    halves_at = [[] for _ in g.vertices]
    for h in range(g.num_half_edges):
        halves_at[g.vertex_of[h]].append(h)
    comps: list[list[int]] = []
    for start in range(g.num_half_edges):
        if assigned[start]:
            continue
        stack = [start]
        assigned[start] = True
        members = []
        while stack:
            h = stack.pop()
            members.append(h)
            for nxt in (g.mate[h], *halves_at[g.vertex_of[h]]):
                if not assigned[nxt]:
                    assigned[nxt] = True
                    stack.append(nxt)
        comps.append(sorted(members))
    return comps


def components(g: Multigraph) -> tuple[tuple[str, ...], ...]:
    """Partition of the vertices into connected components."""
    result = []
    for members in _component_table(g):
        seen = sorted({g.vertex_of[h] for h in members})
        result.append(tuple(g.vertices[i] for i in seen))
    return tuple(result)


def _hierholzer(
    g: Multigraph, member_halves: Sequence[int], allowed: Sequence[bool] | None
) -> tuple[int, ...]:
    """Euler circuit of one component as an alternating half-edge sequence.

    ``allowed`` restricts departures (used for directed traversal); edges
    are consumed in mate-pairs so each is walked exactly once.
    """
    used = [False] * g.num_half_edges
    halves_at: dict[int, list[int]] = {}
    for h in member_halves:
        halves_at.setdefault(g.vertex_of[h], []).append(h)
    for lst in halves_at.values():
        lst.sort()

    def pick(vertex: int) -> int | None:
        for h in halves_at[vertex]:
            if not used[h] and (allowed is None or allowed[h]):
                return h
        return None

    start = next(
        h for h in member_halves if allowed is None or allowed[h]
    )
    used[start] = used[g.mate[start]] = True
    stack = [start]
    departures: list[int] = []
    while stack:
        arrive_vertex = g.vertex_of[g.mate[stack[-1]]]
        h = pick(arrive_vertex)
        if h is None:
            departures.append(stack.pop())
        else:
            used[h] = used[g.mate[h]] = True
            stack.append(h)
    departures.reverse()
    seq: list[int] = []
    for d in departures:
        seq.extend((d, g.mate[d]))
    return tuple(seq)


def euler_system(g: Multigraph) -> EulerSystem:
    """One Euler circuit per component (Hierholzer, smallest-id extension)."""
    circuits = tuple(_hierholzer(g, comp, None) for comp in _component_table(g))
    return EulerSystem(g, circuits)


def directed_euler_system(g: Multigraph, is_out: Sequence[bool]) -> EulerSystem:
    """Euler system that departs only along half-edges marked outgoing.

    Requires a 2-in, 2-out orientation: exactly one half of every edge and
    exactly two of the four half-edges at every vertex are outgoing.
    """
    if len(is_out) != g.num_half_edges:
        raise ValueError("orientation table does not cover all half-edges")
    for h in range(0, g.num_half_edges, 2):
        if is_out[h] == is_out[g.mate[h]]:
            raise ValueError(f"edge {h // 2} is not directed (both halves alike)")
    for i, label in enumerate(g.vertices):
        outs = sum(1 for h in g.half_edges_at(i) if is_out[h])
        if outs != 2:
            raise ValueError(f"vertex {label} has {outs} outgoing half-edges, expected 2")
    circuits = tuple(_hierholzer(g, comp, is_out) for comp in _component_table(g))
    return EulerSystem(g, circuits)


def orient(es: EulerSystem) -> DirectedView:
    """Label each half-edge outgoing/incoming per the traversal direction."""
    is_out = [False] * es.graph.num_half_edges
    for seq in es.circuits:
        for j in range(0, len(seq), 2):
            is_out[seq[j]] = True
    return DirectedView(es.graph, tuple(is_out))


def reversed_component(es: EulerSystem, i: int) -> EulerSystem:
    """Same Euler system with circuit i traversed in the opposite direction."""
    circuits = list(es.circuits)
    circuits[i] = tuple(reversed(circuits[i]))
    return EulerSystem(es.graph, tuple(circuits))


def check_euler_system(es: EulerSystem) -> None:
    """Raise ValueError unless es satisfies every Euler-system invariant."""
    g = es.graph
    seen: set[int] = set()
    for seq in es.circuits:
        if not seq or len(seq) % 2:
            raise ValueError("circuit length must be positive and even")
        k = len(seq)
        for j in range(0, k, 2):
            d, a = seq[j], seq[j + 1]
            if g.mate[d] != a:
                raise ValueError(f"positions {j},{j + 1} are not the two halves of one edge")
            if g.vertex_of[a] != g.vertex_of[seq[(j + 2) % k]]:
                raise ValueError(f"passage after position {j + 1} changes vertex")
        for h in seq:
            if h in seen:
                raise ValueError(f"half-edge {h} appears more than once")
            seen.add(h)
    if len(seen) != g.num_half_edges:
        raise ValueError("circuits do not cover every half-edge")
    comp_of_circuit = []
    for seq in es.circuits:
        comp_of_circuit.append(min(seq))
    expected = [min(comp) for comp in _component_table(g)]
    if sorted(comp_of_circuit) != sorted(expected):
        raise ValueError("circuits are not in bijection with components")
    for ci in range(len(es.circuits)):
        word = es.word(ci)
        for label in set(word):
            if word.count(label) != 2:
                raise ValueError(f"vertex {label} appears {word.count(label)} times in its word")


def random_regular_multigraph(n_vertices: int, rng: random.Random) -> Multigraph:
    """Configuration-model 4-regular multigraph on labels 1..n.

    A uniformly random perfect matching on the 4n half-edge slots; loops,
    parallels, and disconnected outcomes all arise naturally.
    """
    if n_vertices < 1:
        raise ValueError("need at least one vertex")
    slots = list(range(4 * n_vertices))
    rng.shuffle(slots)
    pairs = []
    for i in range(0, len(slots), 2):
        u, v = slots[i] // 4, slots[i + 1] // 4
        pairs.append((str(u + 1), str(v + 1)))
    return from_edge_list(pairs)


def cyclic_word_key(word: Sequence[str]) -> tuple[str, ...]:
    """Canonical form of a cyclic word up to rotation and reflection."""
    w = tuple(word)
    if not w:
        return w
    candidates = []
    for s in (w, w[::-1]):
        for r in range(len(s)):
            candidates.append(s[r:] + s[:r])
    return min(candidates)


def read_edge_list_text(text: str) -> list[tuple[str, str]]:
    """Parse an edge-list file: one "u v" per line, blanks and # comments ignored."""
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise InputFormatError(
                f"line {lineno}: expected two labels, got {len(tokens)}"
            )
        pairs.append((tokens[0], tokens[1]))
    return pairs


def read_dow_text(text: str) -> list[tuple[str, ...]]:
    """Parse a DOW file: one component word per line, labels whitespace-separated."""
    words = []
    for raw in text.splitlines():
        line = raw.strip()
        if line:
            words.append(tuple(line.split()))
    if not words:
        raise InputFormatError("line 1: no words found")
    return words
