"""Exact domination, partial domination and packing numbers.

All solvers work on integer bitmasks over the vertex indices and break ties
towards the lowest vertex index, so certificates are reproducible.
"""

from __future__ import annotations

import enum
import math
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .graph import Graph, GraphError, VertexSet, iter_bits, popcount, square_graph


class SolveTimeout(RuntimeError):
    """The per-call deadline passed before the search finished."""


class NormalizationError(RuntimeError):
    pass


@dataclass(frozen=True)
class AlphaThreshold:
    """Exact rational coverage fraction ``p/q`` with ``0 < p <= q``."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if not (isinstance(self.p, int) and isinstance(self.q, int)):
            raise ValueError("alpha numerator and denominator must be integers")
        if not 0 < self.p <= self.q:
            raise ValueError(f"alpha {self.p}/{self.q} must satisfy 0 < p <= q")
        d = math.gcd(self.p, self.q)
        object.__setattr__(self, "p", self.p // d)
        object.__setattr__(self, "q", self.q // d)

    @classmethod
    def parse(cls, text: str) -> AlphaThreshold:
        """Strict ``P/Q`` parser; decimals are rejected."""
        parts = text.strip().split("/")
        if len(parts) != 2 or not all(part.strip().isdigit() for part in parts):
            raise ValueError(f"alpha must be written P/Q with integers, got {text!r}")
        return cls(int(parts[0]), int(parts[1]))

    @classmethod
    def of(cls, value: AlphaThreshold | Fraction | str | tuple[int, int]) -> AlphaThreshold:
        if isinstance(value, AlphaThreshold):
            return value
        if isinstance(value, Fraction):
            return cls(value.numerator, value.denominator)
        if isinstance(value, str):
            return cls.parse(value)
        return cls(*value)

    def required(self, n: int) -> int:
        """Smallest integer c with c*q >= p*n."""
        return -(-self.p * n // self.q)

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


class Kind(str, enum.Enum):
    GAMMA = "Gamma"
    PARTIAL_DOM = "PartialDom"
    PACKING = "Packing"


@dataclass(frozen=True)
class Certificate:
    kind: Kind
    witness: VertexSet
    value: int
    coverage: int
    alpha: AlphaThreshold | None = None

    def to_dict(self) -> dict:
        out = {
            "kind": self.kind.value,
            "value": self.value,
            "coverage": self.coverage,
            "witness": self.witness.to_list(),
        }
        if self.alpha is not None:
            out["alpha"] = str(self.alpha)
        return out

    def verify(self, g: Graph) -> bool:
        """Re-check feasibility of the witness (not its optimality)."""
        w = self.witness.bits
        if self.witness.n != g.n or popcount(w) != self.value:
            return False
        covered = popcount(g.closed_neighborhood(w))
        if covered != self.coverage:
            return False
        if self.kind is Kind.GAMMA:
            return covered == g.n
        if self.kind is Kind.PARTIAL_DOM:
            return self.alpha is not None and covered >= self.alpha.required(g.n)
        seen = 0
        for v in iter_bits(w):
            if seen & g.closed[v]:
                return False
            seen |= g.closed[v]
        return True


class _Clock:
    __slots__ = ("deadline", "ticks")

    def __init__(self, timeout: float | None) -> None:
        self.deadline = None if timeout is None else time.monotonic() + timeout
        self.ticks = 0

    def tick(self) -> None:
        self.ticks += 1
        if self.deadline is not None and not self.ticks & 1023 and time.monotonic() > self.deadline:
            raise SolveTimeout("solver deadline exceeded")


# ---------------------------------------------------------------- domination

def _greedy_cover(closed: tuple[int, ...], target_mask: int, need: int) -> int:
    """Add max-gain vertices until ``need`` vertices of ``target_mask`` are covered."""
    chosen = covered = 0
    while popcount(covered & target_mask) < need:
        best, best_gain = -1, 0
        for v, nv in enumerate(closed):
            gain = popcount(nv & target_mask & ~covered)
            if gain > best_gain:
                best, best_gain = v, gain
        if best < 0:
            break
        chosen |= 1 << best
        covered |= closed[best]
    return chosen


def _minimalize(closed: tuple[int, ...], full: int, chosen: int) -> int:
    """Drop redundant vertices (highest index first) while still dominating."""
    for v in sorted(iter_bits(chosen), reverse=True):
        rest = chosen & ~(1 << v)
        cov = 0
        for u in iter_bits(rest):
            cov |= closed[u]
        if cov == full:
            chosen = rest
    return chosen


def greedy_dominating_set(g: Graph) -> VertexSet:
    """Greedy max-gain dominating set, made inclusion-minimal."""
    bits = _greedy_cover(g.closed, g.full_mask, g.n)
    return VertexSet(_minimalize(g.closed, g.full_mask, bits), g.n)


def _dominate_within(closed, full, budget, clock) -> int | None:
    """A dominating set of size <= budget, or None.  Branches on the
    undominated vertex with the fewest admissible dominators."""
    n = len(closed)

    def search(dom: int, chosen: int, budget: int, banned: int) -> int | None:
        clock.tick()
        undominated = full & ~dom
        if not undominated:
            return chosen
        if budget == 0:
            return None
        need = popcount(undominated)
        gains = sorted((popcount(closed[v] & undominated) for v in range(n)
                        if not banned >> v & 1), reverse=True)
        if sum(gains[:budget]) < need:
            return None
        options, fewest = 0, n + 1
        for u in iter_bits(undominated):
            opts = closed[u] & ~banned
            c = popcount(opts)
            if c < fewest:
                options, fewest = opts, c
                if c <= 1:
                    break
        if fewest == 0:
            return None
        order = sorted(iter_bits(options), key=lambda v: (-popcount(closed[v] & undominated), v))
        for v in order:
            found = search(dom | closed[v], chosen | 1 << v, budget - 1, banned)
            if found is not None:
                return found
            banned |= 1 << v
        return None

    return search(0, 0, budget, 0)


def _minimum_dominating(g: Graph, clock: _Clock) -> int:
    closed, full = g.closed, g.full_mask
    upper = _minimalize(closed, full, _greedy_cover(closed, full, g.n))
    best = popcount(upper)
    lower = -(-g.n // (max(g.degrees()) + 1))
    # iterative deepening: the first feasible budget is optimal
    for budget in range(lower, best):
        found = _dominate_within(closed, full, budget, clock)
        if found is not None:
            return found
    return upper


def _per_component(g: Graph, solve, clock: _Clock) -> int:
    parts = g.components()
    if len(parts) == 1:
        return solve(g, clock)
    bits = 0
    for mask in parts:
        sub, old = g.induced(mask)
        for v in iter_bits(solve(sub, clock)):
            bits |= 1 << old[v]
    return bits


def gamma_exact(g: Graph, timeout: float | None = None) -> Certificate:
    """Minimum dominating set with certificate (solved per component)."""
    bits = _per_component(g, _minimum_dominating, _Clock(timeout))
    return Certificate(Kind.GAMMA, VertexSet(bits, g.n), popcount(bits), g.n)


# -------------------------------------------------------- partial domination

def _cover_within(closed, full, target, budget, clock) -> int | None:
    """A set of size <= budget with |N[S]| >= target, or None."""
    n = len(closed)
    order = sorted(range(n), key=lambda v: (-popcount(closed[v]), v))

    def search(start: int, covered: int, chosen: int, budget: int) -> int | None:
        clock.tick()
        have = popcount(covered)
        if have >= target:
            return chosen
        if budget == 0 or start >= n:
            return None
        gains = [(popcount(closed[order[i]] & ~covered), i) for i in range(start, n)]
        top = sorted((gain for gain, _ in gains), reverse=True)[:budget]
        if have + sum(top) < target:
            return None
        for gain, i in gains:
            if gain == 0:
                continue
            v = order[i]
            found = search(i + 1, covered | closed[v], chosen | 1 << v, budget - 1)
            if found is not None:
                return found
        return None

    return search(0, 0, 0, budget)


def _minimum_partial(g: Graph, target: int, clock: _Clock) -> int:
    if target <= 0:
        return 0
    closed, full = g.closed, g.full_mask
    if target >= g.n:
        return _minimum_dominating(g, clock)
    upper = _greedy_cover(closed, full, target)
    best = popcount(upper)
    sizes = sorted((popcount(c) for c in closed), reverse=True)
    lower, acc = 0, 0
    while acc < target:
        acc += sizes[lower]
        lower += 1
    for budget in range(lower, best):
        found = _cover_within(closed, full, target, budget, clock)
        if found is not None:
            return found
    return upper


def min_cover_set(g: Graph, target: int, timeout: float | None = None) -> VertexSet:
    """Smallest set dominating at least ``target`` vertices."""
    if target > g.n:
        raise GraphError(f"cannot dominate {target} vertices of a graph of order {g.n}")
    return VertexSet(_minimum_partial(g, target, _Clock(timeout)), g.n)


def pd_exact(g: Graph, alpha, timeout: float | None = None) -> Certificate:
    """Minimum alpha-partial dominating set: |N[S]| >= ceil(alpha * n)."""
    alpha = AlphaThreshold.of(alpha)
    witness = min_cover_set(g, alpha.required(g.n), timeout)
    return Certificate(
        Kind.PARTIAL_DOM, witness, len(witness),
        popcount(g.closed_neighborhood(witness.bits)), alpha,
    )


# ------------------------------------------------------------------- packing

def _maximum_independent(adj: tuple[int, ...], clock: _Clock) -> int:
    best = [0]

    def search(cand: int, chosen: int, size: int) -> None:
        clock.tick()
        # vertices of degree <= 1 in the remaining graph are always safe picks
        changed = True
        while changed and cand:
            changed = False
            for v in iter_bits(cand):
                if popcount(adj[v] & cand) <= 1:
                    chosen |= 1 << v
                    size += 1
                    cand &= ~(adj[v] | 1 << v)
                    changed = True
                    break
        if not cand:
            if size > popcount(best[0]) or (size == popcount(best[0]) and chosen < best[0]):
                best[0] = chosen
            return
        if size + popcount(cand) <= popcount(best[0]):
            return
        pivot = max(iter_bits(cand), key=lambda v: (popcount(adj[v] & cand), -v))
        search(cand & ~(adj[pivot] | 1 << pivot), chosen | 1 << pivot, size + 1)
        search(cand & ~(1 << pivot), chosen, size)

    search((1 << len(adj)) - 1, 0, 0)
    return best[0]


def rho_exact(g: Graph, timeout: float | None = None) -> Certificate:
    """Maximum packing, as a maximum independent set of the square graph."""
    bits = _per_component(
        g, lambda h, clock: _maximum_independent(square_graph(h).adj, clock), _Clock(timeout))
    return Certificate(Kind.PACKING, VertexSet(bits, g.n), popcount(bits),
                       popcount(g.closed_neighborhood(bits)))


# ------------------------------------------------------- private neighbours

def private_neighborhoods(g: Graph, d) -> dict[int, tuple[VertexSet, VertexSet]]:
    """``v -> (pn[v, D], epn[v, D])`` for every ``v`` in ``D``."""
    d = g.vertex_set(d)
    if not d:
        raise GraphError("private neighbourhoods need a nonempty set")
    pn = {v: 0 for v in d}
    for w in range(g.n):
        hit = g.closed[w] & d.bits
        if hit and not hit & (hit - 1):
            pn[hit.bit_length() - 1] |= 1 << w
    return {v: (VertexSet(bits, g.n), VertexSet(bits & ~d.bits, g.n)) for v, bits in pn.items()}


def _epn_masks(closed: tuple[int, ...], d: int) -> dict[int, int]:
    epn = {v: 0 for v in iter_bits(d)}
    for w, nw in enumerate(closed):
        if d >> w & 1:
            continue
        hit = nw & d
        if hit and not hit & (hit - 1):
            epn[hit.bit_length() - 1] |= 1 << w
    return epn


def bc_swaps(g: Graph, d: int, cap: int, minimalize: bool = False) -> int | None:
    """Swap epn-less members of a dominating set ``d`` for a neighbour.

    Each swap needs ``pn[v] = {v}`` (no ``D``-neighbour, every neighbour
    dominated twice), so replacing ``v`` by its lowest-index neighbour keeps
    ``D`` dominating and strictly increases the number of edges inside ``D``.
    With ``minimalize`` the set is made inclusion-minimal before every swap,
    which may shrink it.  Returns None if a member has an empty private
    neighbourhood while ``minimalize`` is off, or if the cap is reached.
    """
    closed, full = g.closed, g.full_mask
    for _ in range(cap + 1):
        if minimalize:
            d = _minimalize(closed, full, d)
        epn = _epn_masks(closed, d)
        bad = [v for v, bits in epn.items() if not bits]
        if not bad:
            return d
        v = bad[0]
        if g.adj[v] & d:
            return None
        lowest = (g.adj[v] & -g.adj[v]).bit_length() - 1
        d = (d & ~(1 << v)) | (1 << lowest)
    return None


def has_external_private_neighbors(g: Graph, d: int) -> bool:
    return all(_epn_masks(g.closed, d).values())


def bc_normalize(g: Graph, d, check_minimum: bool = True) -> VertexSet:
    """A dominating set of the same size in which every member has an
    external private neighbour.

    ``d`` must be a minimum dominating set; this is checked against
    :func:`gamma_exact` when ``check_minimum`` is set and ``n <= 40``.
    """
    d = g.vertex_set(d)
    if any(deg == 0 for deg in g.degrees()):
        raise GraphError("graph has an isolated vertex")
    if g.closed_neighborhood(d.bits) != g.full_mask:
        raise GraphError("set is not dominating")
    if check_minimum and g.n <= 40 and len(d) != gamma_exact(g).value:
        raise GraphError(f"set of size {len(d)} is not a minimum dominating set")
    out = bc_swaps(g, d.bits, g.n * g.n)
    if out is None and g.n <= 20:
        out = _exhaustive_bc(g, len(d))
    if out is None:
        raise NormalizationError("no epn-complete dominating set found within the iteration cap")
    return VertexSet(out, g.n)


def _exhaustive_bc(g: Graph, size: int) -> int | None:
    for combo in combinations(range(g.n), size):
        bits = sum(1 << v for v in combo)
        if g.closed_neighborhood(bits) == g.full_mask and has_external_private_neighbors(g, bits):
            return bits
    return None
