"""Sparse exact-integer multivariate polynomials and the interlace polynomials.

Every polynomial here is computed two independent ways somewhere in the test
suite: as a nullity sum over induced subgraphs, and as a generating function
over traced circuit partitions. The evaluators keep those routes separate.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterable, Mapping, Sequence

from .errors import CapExceededError
from .graphs import EulerSystem, Multigraph
from .gf2 import bit_rank, bit_submatrix
from .interlace import LoopedGraph
from .partitions import _pairings, _walk_circuits

DEFAULT_SUBSET_CAP = 14
DEFAULT_PAIR_CAP = 9


@dataclass(frozen=True)
class MultiPoly:
    """Sparse polynomial with exact integer coefficients.

    terms maps exponent vectors (aligned with ``variables``) to nonzero
    coefficients and is stored sorted for canonical output and hashing.
    """

    variables: tuple[str, ...]
    terms: tuple[tuple[tuple[int, ...], int], ...]

    @classmethod
    def make(
        cls, variables: Sequence[str], terms: Mapping[tuple[int, ...], int]
    ) -> "MultiPoly":
        width = len(variables)
        cleaned = {}
        for exps, coef in terms.items():
            if len(exps) != width:
                raise ValueError(f"exponent vector {exps} does not match {width} variables")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            if coef:
                cleaned[tuple(exps)] = coef
        ordered = tuple(sorted(cleaned.items(), key=lambda kv: kv[0], reverse=True))
        return cls(tuple(variables), ordered)

    @classmethod
    def constant(cls, value: int, variables: Sequence[str] = ()) -> "MultiPoly":
        zero = (0,) * len(variables)
        return cls.make(variables, {zero: value} if value else {})

    @classmethod
    def variable(cls, name: str) -> "MultiPoly":
        return cls.make((name,), {(1,): 1})

    def as_dict(self) -> dict[tuple[int, ...], int]:
        return dict(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def _aligned(self, other: "MultiPoly") -> tuple[tuple[str, ...], dict, dict]:
        if self.variables == other.variables:
            return self.variables, self.as_dict(), other.as_dict()
        merged = list(self.variables)
        for v in other.variables:
            if v not in merged:
                merged.append(v)
        return tuple(merged), _embed(self, merged), _embed(other, merged)

    @staticmethod
    def _coerce(value: "MultiPoly | int") -> "MultiPoly":
        if isinstance(value, MultiPoly):
            return value
        return MultiPoly.constant(int(value))

    def __add__(self, other: "MultiPoly | int") -> "MultiPoly":
        other = self._coerce(other)
        variables, a, b = self._aligned(other)
        for exps, coef in b.items():
            a[exps] = a.get(exps, 0) + coef
        return MultiPoly.make(variables, a)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly.make(self.variables, {e: -c for e, c in self.terms})

    def __sub__(self, other: "MultiPoly | int") -> "MultiPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other: int) -> "MultiPoly":
        return self._coerce(other) - self

    def __mul__(self, other: "MultiPoly | int") -> "MultiPoly":
        other = self._coerce(other)
        variables, a, b = self._aligned(other)
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                key = tuple(x + y for x, y in zip(e1, e2))
                out[key] = out.get(key, 0) + c1 * c2
        return MultiPoly.make(variables, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MultiPoly":
        if exponent < 0:
            raise ValueError("negative power")
        result = MultiPoly.constant(1, self.variables)
        for _ in range(exponent):
            result = result * self
        return result

    def substitute(self, bindings: Mapping[str, "MultiPoly | int"]) -> "MultiPoly":
        """Replace variables by polynomials/constants, exactly."""
        resolved = {name: self._coerce(value) for name, value in bindings.items()}
        keep = [v for v in self.variables if v not in resolved]
        order = list(keep)
        for v in self.variables:
            if v in resolved:
                for name in resolved[v].variables:
                    if name not in order:
                        order.append(name)
        result = MultiPoly.constant(0, order)
        for exps, coef in self.terms:
            term = MultiPoly.constant(coef, order)
            for name, e in zip(self.variables, exps):
                if not e:
                    continue
                factor = resolved.get(name, MultiPoly.variable(name))
                term = term * factor ** e
            result = result + term
        return result

    def evaluate(self, point: Mapping[str, int]) -> int:
        """Exact integer value; every variable must be bound."""
        for v in self.variables:
            if v not in point:
                raise ValueError(f"unbound variable {v!r}")
        total = 0
        for exps, coef in self.terms:
            value = coef
            for name, e in zip(self.variables, exps):
                value *= int(point[name]) ** e
            total += value
        return total

    def to_text(self) -> str:
        """Canonical human-readable form, e.g. "3*x^2*y + y - 1"."""
        if not self.terms:
            return "0"
        rendered = []
        for exps, coef in self.terms:
            factors = []
            for name, e in zip(self.variables, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            if not factors:
                rendered.append(str(coef))
            elif coef == 1:
                rendered.append("*".join(factors))
            elif coef == -1:
                rendered.append("-" + "*".join(factors))
            else:
                rendered.append(f"{coef}*" + "*".join(factors))
        text = " + ".join(rendered)
        return text.replace("+ -", "- ")

    def to_json_dict(self) -> dict:
        return {
            "vars": list(self.variables),
            "terms": [{"exps": list(exps), "coef": str(coef)} for exps, coef in self.terms],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "MultiPoly":
        terms = {
            tuple(item["exps"]): int(item["coef"]) for item in data["terms"]
        }
        return cls.make(tuple(data["vars"]), terms)


def _embed(p: MultiPoly, variables: Sequence[str]) -> dict[tuple[int, ...], int]:
    slot = {name: i for i, name in enumerate(variables)}
    out: dict[tuple[int, ...], int] = {}
    for exps, coef in p.terms:
        key = [0] * len(variables)
        for name, e in zip(p.variables, exps):
            key[slot[name]] = e
        out[tuple(key)] = coef
    return out


def substitute(p: MultiPoly, bindings: Mapping[str, MultiPoly | int]) -> MultiPoly:
    return p.substitute(bindings)


def evaluate(p: MultiPoly, point: Mapping[str, int]) -> int:
    return p.evaluate(point)


def _shifted_one_var(counts: Mapping[int, int], var: str) -> MultiPoly:
    """Expand sum_k counts[k] * (var - 1)^k."""
    terms: dict[tuple[int, ...], int] = {}
    for k, c in counts.items():
        for j in range(k + 1):
            key = (j,)
            terms[key] = terms.get(key, 0) + c * comb(k, j) * (-1) ** (k - j)
    return MultiPoly.make((var,), terms)


def _shifted_two_var(counts: Mapping[tuple[int, int], int]) -> MultiPoly:
    """Expand sum counts[i,j] * (x-1)^i * (y-1)^j."""
    terms: dict[tuple[int, ...], int] = {}
    for (i, j), c in counts.items():
        for a in range(i + 1):
            ca = comb(i, a) * (-1) ** (i - a)
            for b in range(j + 1):
                key = (a, b)
                coef = c * ca * comb(j, b) * (-1) ** (j - b)
                terms[key] = terms.get(key, 0) + coef
    return MultiPoly.make(("x", "y"), terms)


def _subset_nullity(rows: Sequence[int], keep: Sequence[int]) -> int:
    sub = bit_submatrix(rows, keep)
    return len(keep) - bit_rank(sub, len(keep))


def q_nullity(h: LoopedGraph) -> MultiPoly:
    """Vertex-nullity interlace polynomial: sum over S of (y-1)^nullity(A[S])."""
    rows = h.matrix().rows
    n = h.n
    counts: dict[int, int] = {}
    for mask in range(1 << n):
        keep = [i for i in range(n) if (mask >> i) & 1]
        nu = _subset_nullity(rows, keep)
        counts[nu] = counts.get(nu, 0) + 1
    return _shifted_one_var(counts, "y")


def q_two_variable(h: LoopedGraph) -> MultiPoly:
    """Two-variable interlace polynomial: sum of (x-1)^(|S|-nu) (y-1)^nu."""
    rows = h.matrix().rows
    n = h.n
    counts: dict[tuple[int, int], int] = {}
    for mask in range(1 << n):
        keep = [i for i in range(n) if (mask >> i) & 1]
        nu = _subset_nullity(rows, keep)
        key = (len(keep) - nu, nu)
        counts[key] = counts.get(key, 0) + 1
    return _shifted_two_var(counts)


class _Tracer:
    """Cached tracing context: counts circuits for assignments given as rows."""

    def __init__(self, es: EulerSystem):
        self.mate = es.graph.mate
        self.pairings = _pairings(es)
        self.total = es.graph.num_half_edges

    def count(self, combo: Sequence[int]) -> int:
        inv = [0] * self.total
        for idx, choice in enumerate(combo):
            for h, k in self.pairings[idx][choice]:
                inv[h] = k
                inv[k] = h
        return len(_walk_circuits(self.mate, inv))


def _check_loop_set(g: Multigraph, loop_set: Iterable[str]) -> frozenset[str]:
    loops = frozenset(str(x) for x in loop_set)
    for label in loops:
        if label not in g.vertices:
            raise ValueError(f"unknown vertex {label!r}")
    return loops


def _check_subset_cap(n: int, cap: int) -> None:
    if n > cap:
        raise CapExceededError(
            f"refusing to sweep 2^{n} = {2 ** n} subsets "
            f"(cap is {cap} vertices; pass a larger cap to force it)"
        )


def _check_pair_cap(n: int, cap: int) -> None:
    if n > cap:
        raise CapExceededError(
            f"refusing to sweep 3^{n} = {3 ** n} subset pairs "
            f"(cap is {cap} vertices; pass a larger cap to force it)"
        )


def q_from_partitions(
    g: Multigraph,
    es: EulerSystem,
    loop_set: Iterable[str] = (),
    cap: int = DEFAULT_SUBSET_CAP,
) -> MultiPoly:
    """q_N via tracing: sum over S of (y-1)^(|P_S| - c(G)).

    P_S follows the Euler system off S, flips at looped vertices of S, and
    crosses at unlooped vertices of S.
    """
    loops = _check_loop_set(g, loop_set)
    n = len(g.vertices)
    _check_subset_cap(n, cap)
    tracer = _Tracer(es)
    ncomp = len(es.circuits)
    flip_or_cross = [2 if label in loops else 1 for label in g.vertices]
    counts: dict[int, int] = {}
    for mask in range(1 << n):
        combo = [flip_or_cross[i] if (mask >> i) & 1 else 0 for i in range(n)]
        k = tracer.count(combo) - ncomp
        counts[k] = counts.get(k, 0) + 1
    return _shifted_one_var(counts, "y")


def q2_from_partitions(
    g: Multigraph,
    es: EulerSystem,
    loop_set: Iterable[str] = (),
    cap: int = DEFAULT_SUBSET_CAP,
) -> MultiPoly:
    """Two-variable analogue: sum of (x-1)^(|S|-|P_S|+c) (y-1)^(|P_S|-c)."""
    loops = _check_loop_set(g, loop_set)
    n = len(g.vertices)
    _check_subset_cap(n, cap)
    tracer = _Tracer(es)
    ncomp = len(es.circuits)
    flip_or_cross = [2 if label in loops else 1 for label in g.vertices]
    counts: dict[tuple[int, int], int] = {}
    for mask in range(1 << n):
        size = 0
        combo = []
        for i in range(n):
            if (mask >> i) & 1:
                size += 1
                combo.append(flip_or_cross[i])
            else:
                combo.append(0)
        k = tracer.count(combo) - ncomp
        key = (size - k, k)
        counts[key] = counts.get(key, 0) + 1
    return _shifted_two_var(counts)


def _courcelle_variables(vertices: Sequence[str]) -> tuple[str, ...]:
    return ("u", "v") + tuple(f"x_{v}" for v in vertices) + tuple(
        f"y_{v}" for v in vertices
    )


def courcelle(h: LoopedGraph, cap: int = DEFAULT_PAIR_CAP) -> MultiPoly:
    """Courcelle's multivariate interlace polynomial.

    Sums over disjoint A, B the monomial (prod x_a)(prod y_b) u^(|A u B|-nu)
    v^nu, where nu is the GF(2)-nullity of the adjacency matrix of the
    subgraph induced on A u B after toggling loops on B.
    """
    n = h.n
    _check_pair_cap(n, cap)
    rows = h.matrix().rows
    variables = _courcelle_variables(h.vertices)
    terms: dict[tuple[int, ...], int] = {}
    for state in itertools.product(range(3), repeat=n):
        kept = [i for i in range(n) if state[i]]
        sub = bit_submatrix(rows, kept)
        for pos, i in enumerate(kept):
            if state[i] == 2:
                sub[pos] ^= 1 << pos
        nu = len(kept) - bit_rank(sub, len(kept))
        exps = [len(kept) - nu, nu]
        exps.extend(1 if state[i] == 1 else 0 for i in range(n))
        exps.extend(1 if state[i] == 2 else 0 for i in range(n))
        terms[tuple(exps)] = 1
    return MultiPoly.make(variables, terms)


def courcelle_from_partitions(
    g: Multigraph,
    es: EulerSystem,
    loop_set: Iterable[str] = (),
    cap: int = DEFAULT_PAIR_CAP,
) -> MultiPoly:
    """Courcelle's polynomial via tracing the partitions P_{A,B}.

    P_{A,B} follows the Euler system off A u B, flips at looped vertices of
    A and unlooped vertices of B, crosses at the rest of A u B; each pair
    contributes (prod x_a u)(prod y_b u)(v/u)^(|P_{A,B}| - c(G)).
    """
    loops = _check_loop_set(g, loop_set)
    n = len(g.vertices)
    _check_pair_cap(n, cap)
    tracer = _Tracer(es)
    ncomp = len(es.circuits)
    looped = [label in loops for label in g.vertices]
    variables = _courcelle_variables(g.vertices)
    terms: dict[tuple[int, ...], int] = {}
    for state in itertools.product(range(3), repeat=n):
        combo = []
        size = 0
        for i in range(n):
            if state[i] == 0:
                combo.append(0)
            else:
                size += 1
                inconsistent = looped[i] if state[i] == 1 else not looped[i]
                combo.append(2 if inconsistent else 1)
        k = tracer.count(combo) - ncomp
        u_exp = size - k
        if u_exp < 0:
            raise RuntimeError(
                "internal error: traced partition exceeds the nullity bound"
            )
        exps = [u_exp, k]
        exps.extend(1 if state[i] == 1 else 0 for i in range(n))
        exps.extend(1 if state[i] == 2 else 0 for i in range(n))
        terms[tuple(exps)] = 1
    return MultiPoly.make(variables, terms)
