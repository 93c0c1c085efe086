"""Orbit counting for permutations via interleaving matrices and via tracing.

The classical Cohn-Lempel equality counts the orbits of pi = sigma s1 ... sk
(sigma the full cycle, s_i pairwise disjoint transpositions, applied after
sigma) as 1 + nu(I_pi). Arbitrary permutations reduce to circuit partitions
of a 2-in, 2-out pair digraph, where the extended equality applies.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import CapExceededError, InputFormatError
from .gf2 import Gf2Matrix, nullity
from .graphs import Multigraph, directed_euler_system, from_edge_list
from .partitions import (
    Transition,
    format_assignment,
    induced_assignment,
    partition_matrix,
    trace,
)

DEFAULT_REDUCTION_CAP = 64


@dataclass(frozen=True)
class Permutation:
    """Bijection on {1..m}; image[i] is the image of i+1."""

    image: tuple[int, ...]

    def __post_init__(self) -> None:
        m = len(self.image)
        if sorted(self.image) != list(range(1, m + 1)):
            raise ValueError("image is not a bijection on {1..m}")

    @property
    def size(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i - 1]

    def orbits(self) -> list[tuple[int, ...]]:
        seen = [False] * self.size
        result = []
        for start in range(1, self.size + 1):
            if seen[start - 1]:
                continue
            cycle = []
            i = start
            while not seen[i - 1]:
                seen[i - 1] = True
                cycle.append(i)
                i = self(i)
            result.append(tuple(cycle))
        return result

    def to_one_line(self) -> str:
        return " ".join(str(x) for x in self.image)

    def to_cycles(self) -> str:
        parts = [
            "(" + " ".join(str(x) for x in cycle) + ")"
            for cycle in self.orbits()
            if len(cycle) > 1
        ]
        return "".join(parts) if parts else "()"


def orbit_count(p: Permutation) -> int:
    """Number of orbits, counted by direct iteration (the oracle side)."""
    return len(p.orbits())


def identity_permutation(m: int) -> Permutation:
    return Permutation(tuple(range(1, m + 1)))


def parse_permutation(text: str, size: int | None = None) -> Permutation:
    """Parse one-line images ("3 1 2") or cycle notation ("(1 3 2)(4 5)")."""
    stripped = text.strip()
    if "(" in stripped:
        body = stripped
        cycles = []
        for match in re.finditer(r"\(([^()]*)\)", stripped):
            cycles.append([_parse_element(tok) for tok in match.group(1).split()])
            body = body.replace(match.group(0), " ", 1)
        if body.strip():
            raise InputFormatError(f"unparsed text {body.strip()!r} in cycle notation")
        mentioned = [x for cyc in cycles for x in cyc]
        if len(set(mentioned)) != len(mentioned):
            raise InputFormatError("an element appears in two cycles")
        m = max(mentioned, default=0)
        if size is not None:
            if size < m:
                raise InputFormatError(f"size {size} is smaller than largest element {m}")
            m = size
        if m == 0:
            raise InputFormatError("empty cycle notation needs an explicit size")
        image = list(range(1, m + 1))
        for cyc in cycles:
            for i, x in enumerate(cyc):
                image[x - 1] = cyc[(i + 1) % len(cyc)]
        return Permutation(tuple(image))
    tokens = stripped.split()
    if not tokens:
        raise InputFormatError("empty permutation")
    image = tuple(_parse_element(tok) for tok in tokens)
    if size is not None and size != len(image):
        raise InputFormatError(f"one-line form has {len(image)} entries, expected {size}")
    try:
        return Permutation(image)
    except ValueError as exc:
        raise InputFormatError(str(exc)) from None


def _parse_element(token: str) -> int:
    try:
        value = int(token)
    except ValueError:
        raise InputFormatError(f"bad element {token!r}") from None
    if value < 1:
        raise InputFormatError(f"elements start at 1, got {value}")
    return value


def _normalize_transpositions(
    m: int, transpositions: Iterable[tuple[int, int]]
) -> list[tuple[int, int]]:
    pairs = []
    seen: set[int] = set()
    for a, b in transpositions:
        a, b = int(a), int(b)
        if not (1 <= a <= m and 1 <= b <= m):
            raise ValueError(f"transposition ({a} {b}) leaves {{1..{m}}}")
        if a == b:
            raise ValueError(f"({a} {b}) is not a transposition")
        if a > b:
            a, b = b, a
        if a in seen or b in seen:
            raise ValueError("transpositions must be pairwise disjoint")
        seen.update((a, b))
        pairs.append((a, b))
    return pairs


def cohn_lempel_matrix(
    m: int, transpositions: Iterable[tuple[int, int]]
) -> Gf2Matrix:
    """Interleaving matrix of disjoint transpositions on {1..m}.

    Entry (i, j) is 1 exactly when the two transpositions interleave as
    intervals: a < c < b < d or c < a < d < b.
    """
    pairs = _normalize_transpositions(m, transpositions)
    k = len(pairs)
    labels = tuple(f"({a} {b})" for a, b in pairs)
    rows = [0] * k
    for i in range(k):
        a, b = pairs[i]
        for j in range(i + 1, k):
            c, d = pairs[j]
            if a < c < b < d or c < a < d < b:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Gf2Matrix(labels, tuple(rows))


def compose_cycle_with_transpositions(
    m: int, transpositions: Iterable[tuple[int, int]]
) -> Permutation:
    """sigma s1 ... sk applied left to right: the full cycle acts first."""
    pairs = _normalize_transpositions(m, transpositions)
    swap = {}
    for a, b in pairs:
        swap[a] = b
        swap[b] = a
    image = []
    for i in range(1, m + 1):
        j = i % m + 1  # sigma = (1 2 ... m)
        image.append(swap.get(j, j))
    return Permutation(tuple(image))


def orbit_count_via_nullity(m: int, transpositions: Iterable[tuple[int, int]]) -> int:
    """1 + nu(I_pi): the matrix side of the Cohn-Lempel equality."""
    return 1 + nullity(cohn_lempel_matrix(m, transpositions))


def sigma_transposition_factorization(p: Permutation) -> list[tuple[int, int]] | None:
    """Disjoint transpositions t with p = sigma * t (sigma first), if any.

    Returns None when sigma^-1 followed by p is not an involution; the
    identity on three or more elements is the classic inexpressible case.
    """
    m = p.size
    tau = [0] * m
    for y in range(1, m + 1):
        pre = m if y == 1 else y - 1  # sigma^-1(y)
        tau[y - 1] = p(pre)
    for y in range(1, m + 1):
        if tau[tau[y - 1] - 1] != y:
            return None
    return [(y, tau[y - 1]) for y in range(1, m + 1) if tau[y - 1] > y]


def even_extension(p: Permutation) -> Permutation:
    """Extend an odd-size permutation to even size without changing orbit count.

    The new top element 2n is spliced into the orbit of 2n-1: 2n-1 now maps
    to 2n, and 2n maps to the old image of 2n-1. Even sizes pass through.
    """
    m = p.size
    if m % 2 == 0:
        return p
    image = list(p.image) + [p(m)]
    image[m - 1] = m + 1
    return Permutation(tuple(image))


@dataclass(frozen=True)
class PairDigraph:
    """2-in, 2-out digraph built from a permutation and a pairing of {1..2n}.

    Edge i runs from the vertex of the pair containing i to the vertex of
    the pair containing i's image; ``transition`` is the passage matching of
    the permutation's circuit partition (after edge i comes edge image(i)).
    """

    graph: Multigraph
    is_out: tuple[bool, ...]
    transition: tuple[int, ...]
    pairs: tuple[tuple[int, int], ...]


def _default_pairing(m: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, i + 1) for i in range(1, m, 2))


def permutation_to_digraph(
    p: Permutation, pairing: Sequence[tuple[int, int]] | None = None
) -> PairDigraph:
    """Build the pair digraph of a permutation (odd sizes extended first)."""
    p = even_extension(p)
    m = p.size
    if pairing is None:
        pairs = _default_pairing(m)
    else:
        pairs = tuple((int(a), int(b)) for a, b in pairing)
        flat = [x for pair in pairs for x in pair]
        if sorted(flat) != list(range(1, m + 1)):
            raise ValueError(f"pairing is not a partition of {{1..{m}}} into pairs")
    pair_of = {}
    for idx, (a, b) in enumerate(pairs):
        pair_of[a] = idx
        pair_of[b] = idx
    edges = [
        (str(pair_of[i] + 1), str(pair_of[p(i)] + 1)) for i in range(1, m + 1)
    ]
    graph = from_edge_list(edges)
    is_out = tuple(h % 2 == 0 for h in range(graph.num_half_edges))
    transition = [0] * graph.num_half_edges
    for i in range(1, m + 1):
        head = 2 * (i - 1) + 1
        tail_next = 2 * (p(i) - 1)
        transition[head] = tail_next
        transition[tail_next] = head
    return PairDigraph(graph, is_out, tuple(transition), pairs)


@dataclass(frozen=True)
class ReductionReport:
    """Orbit count recomputed through the pair-digraph circuit partition."""

    size: int
    extended_size: int
    orbits: int
    nullity: int
    components: int
    traced: int
    assignment: str

    @property
    def predicted(self) -> int:
        return self.nullity + self.components

    @property
    def ok(self) -> bool:
        return self.orbits == self.predicted == self.traced

    def to_json_dict(self) -> dict:
        return {
            "size": self.size,
            "extended_size": self.extended_size,
            "orbits": self.orbits,
            "nullity": self.nullity,
            "components": self.components,
            "predicted": self.predicted,
            "traced": self.traced,
            "assignment": self.assignment,
            "ok": self.ok,
        }


def verify_permutation_reduction(
    p: Permutation,
    pairing: Sequence[tuple[int, int]] | None = None,
    cap: int = DEFAULT_REDUCTION_CAP,
) -> ReductionReport:
    """Check orbit count = nu(I_P) + c(D) through the pair-digraph reduction."""
    if p.size > cap:
        raise CapExceededError(
            f"permutation size {p.size} exceeds the reduction cap {cap}"
        )
    extended = even_extension(p)
    pd = permutation_to_digraph(extended, pairing)
    es = directed_euler_system(pd.graph, pd.is_out)
    t = induced_assignment(es, pd.transition)
    if any(choice == Transition.FLIP for choice in t.values()):
        raise RuntimeError(
            "internal error: permutation partition is orientation-inconsistent"
        )
    m = partition_matrix(es, t)
    nu = nullity(m)
    ncomp = len(es.circuits)
    traced = trace(pd.graph, es, t).size
    return ReductionReport(
        size=p.size,
        extended_size=extended.size,
        orbits=orbit_count(extended),
        nullity=nu,
        components=ncomp,
        traced=traced,
        assignment=format_assignment(t, pd.graph.vertices),
    )
