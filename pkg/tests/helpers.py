"""Fixture access and brute-force oracles.

The oracles work on plain edge lists with Python sets and enumerate every
subset, so they share nothing with the solvers they check.
"""

from itertools import combinations
from pathlib import Path

FIXTURES = Path(__file__).resolve().parent / "fixtures"


def fixture_lines(name: str) -> list[bytes]:
    return [line for line in (FIXTURES / name).read_bytes().split(b"\n") if line]


def cubic_corpus(n: int) -> list[bytes]:
    return fixture_lines(f"cubic_connected_{n:02d}.g6")


def supercubic_corpus(max_order: int = 8) -> list[bytes]:
    lines = fixture_lines("supercubic_upto7.g6")
    if max_order >= 8:
        lines += fixture_lines("supercubic_08.g6")
    return lines


def closed_sets(n, edges):
    nb = [{v} for v in range(n)]
    for u, v in edges:
        nb[u].add(v)
        nb[v].add(u)
    return nb


def brute_min_cover(n, edges, need):
    """Smallest k such that some k-subset has |N[S]| >= need."""
    nb = closed_sets(n, edges)
    for k in range(n + 1):
        for s in combinations(range(n), k):
            covered = set().union(*(nb[v] for v in s)) if s else set()
            if len(covered) >= need:
                return k
    raise AssertionError("unreachable")


def brute_gamma(n, edges):
    return brute_min_cover(n, edges, n)


def distances(n, edges):
    nb = closed_sets(n, edges)
    out = []
    for s in range(n):
        dist = {s: 0}
        frontier = [s]
        while frontier:
            nxt = []
            for u in frontier:
                for w in nb[u]:
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        nxt.append(w)
            frontier = nxt
        out.append(dist)
    return out


def brute_rho(n, edges):
    dist = distances(n, edges)
    best = 0
    for k in range(1, n + 1):
        found = False
        for s in combinations(range(n), k):
            if all(dist[a].get(b, n + 1) >= 3 for a, b in combinations(s, 2)):
                found = True
                break
        if not found:
            break
        best = k
    return best


def exhaustive_profile(n, edges):
    """Scan all 2^n subsets once.

    Returns ``(smallest, rho)`` where ``smallest[c]`` is the least size of a
    subset dominating at least ``c`` vertices and ``rho`` the largest subset
    whose closed neighbourhoods are pairwise disjoint.
    """
    closed = [1 << v for v in range(n)]
    for u, v in edges:
        closed[u] |= 1 << v
        closed[v] |= 1 << u
    best_at = [n + 1] * (n + 1)
    rho = 0
    for mask in range(1 << n):
        covered = 0
        disjoint = True
        size = 0
        for v in range(n):
            if mask >> v & 1:
                size += 1
                if covered & closed[v]:
                    disjoint = False
                covered |= closed[v]
        c = bin(covered).count("1")
        if size < best_at[c]:
            best_at[c] = size
        if disjoint and size > rho:
            rho = size
    smallest = best_at[:]
    for c in range(n - 1, -1, -1):
        smallest[c] = min(smallest[c], smallest[c + 1])
    return smallest, rho


# acceptance lines collected during the run, printed in the terminal summary
ACCEPTANCE_LINES: list[str] = []
