"""Constructive partial domination for graphs of minimum degree at least 3.

``one_third_construct`` produces a set of at most floor(n/3) vertices that
dominates the regime's fraction of the graph: pick an epn-complete dominating
set ``D``, split ``V`` into parts ``V_i`` around its members, and keep the
centres of the floor(n/3) largest parts.  Because every part has at least two
vertices and ``|D|`` is bounded (3n/8 for minimum degree 3, 5n/14 for
connected cubic graphs), the discarded parts are small enough.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .exact import (
    AlphaThreshold,
    Certificate,
    Kind,
    _epn_masks,
    _greedy_cover,
    _minimalize,
    bc_normalize,
    bc_swaps,
    gamma_exact,
    min_cover_set,
)
from .graph import Graph, GraphError, VertexSet, is_connected_cubic, is_supercubic, iter_bits, popcount

EXACT_GAMMA_LIMIT = 40
SMALL_ORDER = 14


class ConstructionError(RuntimeError):
    """The regime does not apply, or its size gate on ``D`` failed."""


@dataclass(frozen=True)
class RegimeSpec:
    alpha: AlphaThreshold
    gamma_bound_num: int
    gamma_bound_den: int
    min_order: int
    connected_cubic: bool

    def gamma_bound(self, n: int) -> int:
        return self.gamma_bound_num * n // self.gamma_bound_den


class ConstructRegime(str, enum.Enum):
    GENERIC78 = "generic78"
    CUBIC1314 = "cubic1314"
    SUPER910 = "super910"

    @property
    def spec(self) -> RegimeSpec:
        return _REGIMES[self]

    def applies_to(self, g: Graph) -> bool:
        spec = self.spec
        if g.n < spec.min_order or not is_supercubic(g):
            return False
        return is_connected_cubic(g) if spec.connected_cubic else True


_REGIMES = {
    ConstructRegime.GENERIC78: RegimeSpec(AlphaThreshold(7, 8), 3, 8, 1, False),
    ConstructRegime.CUBIC1314: RegimeSpec(AlphaThreshold(13, 14), 5, 14, 28, True),
    ConstructRegime.SUPER910: RegimeSpec(AlphaThreshold(9, 10), 3, 8, 60, False),
}


def _require_supercubic(g: Graph) -> None:
    if not is_supercubic(g):
        raise GraphError("graph must have minimum degree at least 3")


def lemma_extend(g: Graph, s, k: int) -> int | None:
    """A vertex dominating at least ``k + 1`` vertices of ``U_S = V - N[S]``.

    Returns the lowest-index maximiser of ``|N[x] & U_S|`` over
    ``x`` in the boundary of ``S`` or in ``U_S``.  When ``4|U_S| > k(n - |S|)``
    such a vertex always exists; otherwise it is returned only if it happens
    to reach ``k + 1``.
    """
    _require_supercubic(g)
    if k < 1:
        raise ValueError("k must be a positive integer")
    s = g.vertex_set(s)
    closed_s = g.closed_neighborhood(s.bits)
    unreached = g.full_mask & ~closed_s
    if not unreached:
        return None
    candidates = (closed_s & ~s.bits) | unreached
    best, best_gain = None, -1
    for x in iter_bits(candidates):
        gain = popcount(g.closed[x] & unreached)
        if gain > best_gain:
            best, best_gain = x, gain
    return best if best_gain >= k + 1 else None


def lemma_condition(n: int, s_size: int, unreached: int, k: int) -> bool:
    return 4 * unreached > k * (n - s_size)


@dataclass(frozen=True)
class GreedyResult:
    witness: VertexSet
    coverage: int
    achieved: bool
    trace: tuple[int, ...]
    used_fallback: bool = False


def greedy_partial(g: Graph, budget: int, target: int) -> GreedyResult:
    """Add the lowest-index max-gain vertex until ``target`` is covered or the budget runs out.

    For supercubic graphs of order at most 14, a failed run with budget
    floor(n/3) and target ceil(7n/8) falls back to the exact solver, which
    is guaranteed to succeed there.
    """
    _require_supercubic(g)
    if budget < 0:
        raise ValueError("budget must be nonnegative")
    chosen = covered = 0
    trace = []
    while len(trace) < budget and popcount(covered) < target:
        best, best_gain = -1, 0
        for v, nv in enumerate(g.closed):
            gain = popcount(nv & ~covered)
            if gain > best_gain:
                best, best_gain = v, gain
        if best < 0:
            break
        chosen |= 1 << best
        covered |= g.closed[best]
        trace.append(popcount(covered))
    coverage = popcount(covered)
    result = GreedyResult(VertexSet(chosen, g.n), coverage, coverage >= target, tuple(trace))
    small = g.n <= SMALL_ORDER and budget == g.n // 3 and target == AlphaThreshold(7, 8).required(g.n)
    if result.achieved or not small:
        return result
    exact = min_cover_set(g, target)
    if len(exact) > budget:
        return result
    cov = popcount(g.closed_neighborhood(exact.bits))
    return GreedyResult(exact, cov, cov >= target, tuple(trace), used_fallback=True)


@dataclass(frozen=True)
class Part:
    center: int
    members: VertexSet

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class Partition:
    parts: tuple[Part, ...]

    def centers(self) -> list[int]:
        return [p.center for p in self.parts]

    def sizes(self) -> list[int]:
        return [len(p) for p in self.parts]


def build_partition(g: Graph, d) -> Partition:
    """Split ``V`` into parts ``V_i`` with ``v_i`` in ``V_i``, ``epn[v_i]`` inside
    ``V_i`` and ``V_i`` inside ``N[v_i]``; other vertices go to their
    lowest-index dominator.  Parts are ordered by size, largest first, ties
    by centre index.
    """
    d = g.vertex_set(d)
    if g.closed_neighborhood(d.bits) != g.full_mask:
        raise GraphError("set is not dominating")
    epn = _epn_masks(g.closed, d.bits)
    for v, bits in epn.items():
        if not bits:
            raise GraphError(f"vertex {v} has no external private neighbour")
    members = {v: (1 << v) | bits for v, bits in epn.items()}
    assigned = d.bits
    for bits in epn.values():
        assigned |= bits
    for w in iter_bits(g.full_mask & ~assigned):
        owner = (g.adj[w] & d.bits & -(g.adj[w] & d.bits)).bit_length() - 1
        members[owner] |= 1 << w
    parts = sorted(
        (Part(v, VertexSet(bits, g.n)) for v, bits in members.items()),
        key=lambda p: (-len(p), p.center),
    )
    return Partition(tuple(parts))


@dataclass(frozen=True)
class Construction:
    regime: ConstructRegime
    witness: VertexSet
    coverage: int
    guarantee_chain_verified: bool
    method: str
    dominating_set_size: int | None = None

    @property
    def value(self) -> int:
        return len(self.witness)

    def to_dict(self) -> dict:
        out = Certificate(Kind.PARTIAL_DOM, self.witness, self.value, self.coverage,
                          self.regime.spec.alpha).to_dict()
        out["regime"] = self.regime.value
        out["guarantee_chain_verified"] = self.guarantee_chain_verified
        out["method"] = self.method
        if self.dominating_set_size is not None:
            out["dominating_set_size"] = self.dominating_set_size
        return out


def _normalized_dominating_set(g: Graph) -> tuple[int, bool]:
    """An epn-complete dominating set and whether it is a proven minimum."""
    if g.n <= EXACT_GAMMA_LIMIT:
        d = gamma_exact(g).witness.bits
        out = bc_swaps(g, d, g.n * g.n)
        if out is None:
            out = bc_normalize(g, VertexSet(d, g.n), check_minimum=False).bits
        return out, True
    closed, full = g.closed, g.full_mask
    d = _minimalize(closed, full, _greedy_cover(closed, full, g.n))
    out = bc_swaps(g, d, g.n * g.n, minimalize=True)
    if out is None:
        raise ConstructionError("could not make the greedy dominating set epn-complete")
    return out, False


def one_third_construct(g: Graph, regime: ConstructRegime | str) -> Construction:
    """At most floor(n/3) vertices dominating at least the regime's fraction of ``V``."""
    regime = ConstructRegime(regime)
    spec = regime.spec
    if not regime.applies_to(g):
        raise ConstructionError(f"regime {regime.value} does not apply to this graph")
    k1 = g.n // 3
    need = spec.alpha.required(g.n)

    if g.n <= SMALL_ORDER:
        witness = min_cover_set(g, need)
        if len(witness) > k1:
            raise ConstructionError(f"minimum {regime.value} set has size {len(witness)} > {k1}")
        cov = popcount(g.closed_neighborhood(witness.bits))
        return Construction(regime, witness, cov, True, "exact")

    d, exact = _normalized_dominating_set(g)
    size = popcount(d)
    if size > spec.gamma_bound(g.n):
        raise ConstructionError(
            f"dominating set of size {size} exceeds the bound {spec.gamma_bound(g.n)}"
            f" ({'exact' if exact else 'greedy'} search)"
        )
    if size <= k1:
        return Construction(regime, VertexSet(d, g.n), g.n, True, "dominating-set", size)
    partition = build_partition(g, VertexSet(d, g.n))
    chosen = 0
    for part in partition.parts[:k1]:
        chosen |= 1 << part.center
    cov = popcount(g.closed_neighborhood(chosen))
    if cov < need:
        raise ConstructionError(f"partition centres cover {cov} < {need}")
    return Construction(regime, VertexSet(chosen, g.n), cov, True, "partition", size)
