"""Transition systems at vertices, circuit tracing, I_P, and the exhaustive verifier.

A transition system picks one of the three perfect matchings of the four
half-edges at each vertex, classified relative to a reference Euler system C:

  Follow -- the matching C itself uses (arrival paired with C's departure);
  Cross  -- the other matching pairing arrivals with departures;
  Flip   -- the matching pairing the two arrivals together and the two
            departures together (orientation-inconsistent).

Tracing glues half-edges by these matchings and by edge mates; the closed
curves that result are the circuit partition. A Flip passage sends the walk
backward along edge orientations, which the half-edge representation makes
automatic. The extended Cohn-Lempel equality predicts the number of curves
as nu(I_P) + c(G), and ``verify_extended_cle`` checks the prediction against
tracing over every assignment.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Mapping, Sequence

from .errors import CapExceededError
from .gf2 import Gf2Matrix, bit_rank, bit_submatrix, nullity, principal_submatrix, set_diagonal
from .graphs import EulerSystem, Multigraph, cyclic_word_key
from .interlace import interlace_matrix

DEFAULT_SWEEP_CAP = 14


class Transition(str, Enum):
    FOLLOW = "F"
    CROSS = "C"
    FLIP = "X"


TransitionAssignment = Mapping[str, Transition]

_TRANSITIONS = (Transition.FOLLOW, Transition.CROSS, Transition.FLIP)


@dataclass(frozen=True)
class CircuitPartition:
    """Edge-disjoint closed curves covering the graph, as half-edge cycles.

    Each circuit is canonicalized (lexicographically least among the even
    rotations of the sequence and of its reversal) so partitions compare
    as plain values.
    """

    graph: Multigraph
    circuits: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.circuits)

    def word(self, i: int) -> tuple[str, ...]:
        seq = self.circuits[i]
        return tuple(
            self.graph.vertices[self.graph.vertex_of[seq[j]]] for j in range(0, len(seq), 2)
        )

    @property
    def words(self) -> tuple[tuple[str, ...], ...]:
        return tuple(self.word(i) for i in range(self.size))

    def word_keys(self) -> frozenset[tuple[str, ...]]:
        """Circuit vertex words up to rotation/reflection, as a set."""
        return frozenset(cyclic_word_key(self.word(i)) for i in range(self.size))


def canonical_circuit(seq: Sequence[int]) -> tuple[int, ...]:
    """Least representative of a half-edge cycle under even rotation and reversal."""
    s = tuple(seq)
    best = None
    for direction in (s, s[::-1]):
        for r in range(0, len(direction), 2):
            cand = direction[r:] + direction[:r]
            if best is None or cand < best:
                best = cand
    assert best is not None
    return best


def _ordered_visits(es: EulerSystem) -> list[tuple[int, int, int, int]]:
    """Per vertex index (i1, o1, i2, o2): arrivals and C-departures, i1 < i2."""
    table = []
    for per_vertex in es.visits():
        (a1, d1), (a2, d2) = per_vertex
        if a2 < a1:
            a1, d1, a2, d2 = a2, d2, a1, d1
        table.append((a1, d1, a2, d2))
    return table


def _pairings(es: EulerSystem) -> list[tuple[tuple[tuple[int, int], ...], ...]]:
    """Per vertex index, the (Follow, Cross, Flip) matchings as pair tuples."""
    out = []
    for i1, o1, i2, o2 in _ordered_visits(es):
        follow = ((i1, o1), (i2, o2))
        cross = ((i1, o2), (i2, o1))
        flip = ((i1, i2), (o1, o2))
        out.append((follow, cross, flip))
    return out


def pairing_at_vertex(es: EulerSystem, v: str, choice: Transition) -> dict[int, int]:
    """The half-edge matching a transition choice induces at one vertex."""
    idx = es.graph.vertex_index(v)
    pairs = _pairings(es)[idx][_TRANSITIONS.index(choice)]
    matching: dict[int, int] = {}
    for h, k in pairs:
        matching[h] = k
        matching[k] = h
    return matching


def _choice_row(es: EulerSystem, t: TransitionAssignment) -> list[Transition]:
    """Validate totality and return choices in vertex order."""
    vertices = es.graph.vertices
    unknown = set(t) - set(vertices)
    if unknown:
        raise ValueError(f"assignment names unknown vertex {sorted(unknown)[0]!r}")
    row = []
    for label in vertices:
        if label not in t:
            raise ValueError(f"assignment is missing vertex {label}")
        choice = t[label]
        if not isinstance(choice, Transition):
            choice = Transition(str(choice).upper())
        row.append(choice)
    return row


def transition_matchings(es: EulerSystem, t: TransitionAssignment) -> list[int]:
    """Full passage involution over half-edges for an assignment."""
    pairings = _pairings(es)
    inv = [0] * es.graph.num_half_edges
    for idx, choice in enumerate(_choice_row(es, t)):
        for h, k in pairings[idx][_TRANSITIONS.index(choice)]:
            inv[h] = k
            inv[k] = h
    return inv


def _walk_circuits(mate: Sequence[int], inv: Sequence[int]) -> list[tuple[int, ...]]:
    """Closed curves of the union of the edge matching and a passage matching.

    Each new curve starts at the smallest unused half-edge; the sequence
    alternates edge steps (h -> mate) and passages (arrival -> inv).
    """
    total = len(mate)
    used = [False] * total
    circuits = []
    for start in range(total):
        if used[start]:
            continue
        seq = []
        h = start
        while not used[h]:
            used[h] = True
            a = mate[h]
            used[a] = True
            seq.extend((h, a))
            h = inv[a]
        circuits.append(tuple(seq))
    return circuits


def trace(g: Multigraph, es: EulerSystem, t: TransitionAssignment) -> CircuitPartition:
    """Walk out the circuit partition an assignment determines.

    This is the independent, brute-force side of the equality: it never
    consults the interlace matrix.
    """
    if es.graph != g:
        raise ValueError("Euler system belongs to a different multigraph")
    inv = transition_matchings(es, t)
    raw = _walk_circuits(g.mate, inv)
    circuits = tuple(sorted(canonical_circuit(seq) for seq in raw))
    return CircuitPartition(g, circuits)


def partition_matrix(es: EulerSystem, t: TransitionAssignment) -> Gf2Matrix:
    """I_P: drop Follow rows/columns, keep Cross, set the diagonal on Flip."""
    choices = _choice_row(es, t)
    base = interlace_matrix(es)
    keep = [
        label
        for label, choice in zip(es.graph.vertices, choices)
        if choice != Transition.FOLLOW
    ]
    m = principal_submatrix(base, keep)
    for label, choice in zip(es.graph.vertices, choices):
        if choice == Transition.FLIP:
            m = set_diagonal(m, label, 1)
    return m


def predicted_size(es: EulerSystem, t: TransitionAssignment) -> int:
    """nu(I_P) + c(G), the matrix side of the extended Cohn-Lempel equality."""
    return nullity(partition_matrix(es, t)) + len(es.circuits)


def induced_assignment(
    es: EulerSystem, matchings: Sequence[int] | Mapping[int, int]
) -> dict[str, Transition]:
    """Classify an arbitrary passage matching relative to an Euler system.

    The matching at every vertex must be one of the three pairings of its
    four half-edges; the result re-expresses the same circuit partition as
    a transition assignment for es.
    """
    result: dict[str, Transition] = {}
    for idx, options in enumerate(_pairings(es)):
        label = es.graph.vertices[idx]
        sample = {frozenset((h, matchings[h])) for h in es.graph.half_edges_at(idx)}
        for choice, pairs in zip(_TRANSITIONS, options):
            if sample == {frozenset(p) for p in pairs}:
                result[label] = choice
                break
        else:
            raise ValueError(
                f"matching at vertex {label} is not a pairing of its half-edges"
            )
    return result


def parse_assignment(text: str, vertices: Sequence[str]) -> dict[str, Transition]:
    """Parse "v:F" / "v:C" / "v:X" tokens into a total assignment."""
    known = set(vertices)
    result: dict[str, Transition] = {}
    for token in text.split():
        if ":" not in token:
            raise ValueError(f"bad assignment token {token!r} (expected label:F|C|X)")
        label, _, letter = token.rpartition(":")
        if label not in known:
            raise ValueError(f"assignment names unknown vertex {label!r}")
        if label in result:
            raise ValueError(f"assignment repeats vertex {label}")
        try:
            result[label] = Transition(letter.upper())
        except ValueError:
            raise ValueError(f"bad transition letter {letter!r} for vertex {label}") from None
    missing = known - set(result)
    if missing:
        raise ValueError(f"assignment is missing vertex {sorted(missing)[0]}")
    return result


def format_assignment(t: TransitionAssignment, vertices: Sequence[str]) -> str:
    return " ".join(f"{label}:{Transition(t[label]).value}" for label in vertices)


@dataclass(frozen=True)
class SweepFailure:
    assignment: str
    traced: int
    predicted: int

    def to_json_dict(self) -> dict:
        return {"assignment": self.assignment, "traced": self.traced, "predicted": self.predicted}


@dataclass(frozen=True)
class SweepReport:
    """Result of exhaustively checking |P| = nu(I_P) + c(G)."""

    checked: int
    failures: tuple[SweepFailure, ...]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json_dict(self) -> dict:
        return {
            "checked": self.checked,
            "failures": [f.to_json_dict() for f in self.failures],
        }


def verify_extended_cle(
    g: Multigraph, es: EulerSystem, cap: int = DEFAULT_SWEEP_CAP
) -> SweepReport:
    """Trace every one of the 3^|V| assignments and compare with the prediction."""
    if es.graph != g:
        raise ValueError("Euler system belongs to a different multigraph")
    n = len(g.vertices)
    if n > cap:
        raise CapExceededError(
            f"refusing to sweep 3^{n} = {3 ** n} assignments "
            f"(cap is {cap} vertices; pass a larger cap to force it)"
        )
    base_rows = interlace_matrix(es).rows
    pairings = _pairings(es)
    mate = g.mate
    ncomp = len(es.circuits)
    total = g.num_half_edges
    failures = []
    checked = 0
    for combo in itertools.product(range(3), repeat=n):
        checked += 1
        inv = [0] * total
        for idx in range(n):
            for h, k in pairings[idx][combo[idx]]:
                inv[h] = k
                inv[k] = h
        used = [False] * total
        traced = 0
        for start in range(total):
            if used[start]:
                continue
            traced += 1
            h = start
            while not used[h]:
                used[h] = True
                a = mate[h]
                used[a] = True
                h = inv[a]
        kept = [idx for idx in range(n) if combo[idx] != 0]
        rows = bit_submatrix(base_rows, kept)
        for pos, idx in enumerate(kept):
            if combo[idx] == 2:
                rows[pos] |= 1 << pos
        predicted = len(kept) - bit_rank(rows, len(kept)) + ncomp
        if traced != predicted:
            assignment = {
                g.vertices[idx]: _TRANSITIONS[combo[idx]] for idx in range(n)
            }
            failures.append(
                SweepFailure(format_assignment(assignment, g.vertices), traced, predicted)
            )
    return SweepReport(checked, tuple(failures))
