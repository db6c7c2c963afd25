"""Graph generators: generalized Petersen graphs and seeded random (super)cubic graphs.

Random graphs use a fixed, platform-independent PRNG so that a ``(n, seed)``
pair always yields the same graph:

* seeding: the 64-bit seed is passed through one SplitMix64 step
  (``z += 0x9E3779B97F4A7C15``; ``z = (z ^ z>>30) * 0xBF58476D1CE4E5B9``;
  ``z = (z ^ z>>27) * 0x94D049BB133111EB``; ``z ^= z>>31``), with zero
  replaced by ``0x9E3779B97F4A7C15``;
* stream: xorshift64* (``x ^= x>>12; x ^= x<<25; x ^= x>>27``, output
  ``x * 0x2545F4914F6CDD1D``), all arithmetic mod 2**64;
* ``below(k)``: uniform on ``[0, k)`` by rejecting outputs at or above the
  largest multiple of ``k`` under 2**64;
* shuffles: Fisher-Yates from the last position down.
"""

from __future__ import annotations

from .graph import Graph, GraphError

MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


class XorShift64Star:
    def __init__(self, seed: int) -> None:
        z = (seed + _GOLDEN) & MASK64
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        z ^= z >> 31
        self.state = z or _GOLDEN

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & MASK64
        x ^= x >> 27
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & MASK64

    def below(self, k: int) -> int:
        if k <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - (1 << 64) % k
        while True:
            r = self.next_u64()
            if r < limit:
                return r % k

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


def generalized_petersen(p: int, k: int) -> Graph:
    """P(p, k): outer cycle u_i (vertex i), inner w_i (vertex p+i) joined at stride k."""
    if p < 3 or not (1 <= k and 2 * k < p):
        raise GraphError(f"P({p},{k}) needs p >= 3 and 1 <= k < p/2")
    return _petersen_like(p, k)


def _petersen_like(p: int, k: int) -> Graph:
    # No range check: k >= p/2 collapses inner edges, leaving a simple but
    # possibly non-cubic graph (used for the small cases of the domination formula).
    edges = set()
    for i in range(p):
        edges.add(frozenset((i, (i + 1) % p)))
        edges.add(frozenset((i, p + i)))
        j = (i + k) % p
        if j != i:
            edges.add(frozenset((p + i, p + j)))
    return Graph.from_edges(2 * p, (tuple(sorted(e)) for e in edges))


def _pairing(degrees: list[int], rng: XorShift64Star) -> Graph | None:
    points = [v for v, d in enumerate(degrees) for _ in range(d)]
    rng.shuffle(points)
    n = len(degrees)
    rows = [0] * n
    for a, b in zip(points[::2], points[1::2]):
        if a == b or rows[a] >> b & 1:
            return None
        rows[a] |= 1 << b
        rows[b] |= 1 << a
    return Graph(n, tuple(rows))


def _sample(degrees: list[int], rng: XorShift64Star, require_connected: bool) -> Graph:
    while True:
        g = _pairing(degrees, rng)
        if g is not None and (not require_connected or g.is_connected()):
            return g


def random_cubic(n: int, seed: int, require_connected: bool = False) -> Graph:
    """Cubic graph from the pairing model, rejecting loops and multi-edges."""
    if n < 4:
        raise GraphError(f"no cubic graph of order {n} < 4")
    if n % 2:
        raise GraphError(f"no cubic graph of odd order {n}")
    return _sample([3] * n, XorShift64Star(seed), require_connected)


def random_supercubic(n: int, seed: int, extra_edges: int = 0,
                      require_connected: bool = False) -> Graph:
    """Graph with minimum degree >= 3.

    Starts from a pairing-model graph with all degrees 3 (vertex 0 gets degree
    4 when ``n`` is odd) and then adds ``extra_edges`` uniformly chosen non-edges.
    """
    if n < 5 and n != 4:
        raise GraphError(f"no supercubic graph of order {n}")
    rng = XorShift64Star(seed)
    degrees = [3] * n
    if n % 2:
        degrees[0] = 4
    g = _sample(degrees, rng, require_connected)
    non_edges = [(i, j) for i in range(n) for j in range(i + 1, n) if not g.has_edge(i, j)]
    if extra_edges > len(non_edges):
        raise GraphError(f"cannot add {extra_edges} edges, only {len(non_edges)} non-edges")
    rng.shuffle(non_edges)
    return Graph.from_edges(n, g.edges() + non_edges[:extra_edges])
