"""Canonical labeling for small graphs by individualization-refinement.

The search refines a vertex colouring to equitability, branches on the
smallest non-singleton cell, and keeps the lexicographically largest
relabelled adjacency.  Automorphisms found when two leaves agree are used to
skip children in the same orbit (restricted to automorphisms fixing the
current branch path), which keeps highly symmetric inputs tractable.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, GraphError, iter_bits

MAX_ISO_ORDER = 32


def _refine(nbrs: list[list[int]], colors: list[int]) -> list[int]:
    ranks = {c: i for i, c in enumerate(sorted(set(colors)))}
    colors = [ranks[c] for c in colors]
    count = len(ranks)
    while True:
        sig = [(colors[v], tuple(sorted(colors[u] for u in nb))) for v, nb in enumerate(nbrs)]
        ranks = {s: i for i, s in enumerate(sorted(set(sig)))}
        colors = [ranks[s] for s in sig]
        if len(ranks) == count:
            return colors
        count = len(ranks)


def _target_cell(colors: list[int]) -> list[int] | None:
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    best = None
    for c in sorted(cells):
        cell = cells[c]
        if len(cell) > 1 and (best is None or len(cell) < len(best)):
            best = cell
    return best


def _orbit_root(parent: list[int], v: int) -> int:
    while parent[v] != v:
        parent[v] = parent[parent[v]]
        v = parent[v]
    return v


@dataclass
class _Search:
    g: Graph
    nbrs: list[list[int]]
    best_code: tuple | None = None
    best_lab: list[int] = field(default_factory=list)
    best_path: list[int] = field(default_factory=list)
    generators: list[list[int]] = field(default_factory=list)

    def leaf_code(self, lab: list[int]) -> tuple:
        rows = [0] * self.g.n
        for v in range(self.g.n):
            row = 0
            for u in self.nbrs[v]:
                row |= 1 << lab[u]
            rows[lab[v]] = row
        return tuple(rows)

    def same_orbit(self, path: list[int], v: int, explored: list[int]) -> bool:
        if not explored:
            return False
        parent = list(range(self.g.n))
        for sigma in self.generators:
            if all(sigma[p] == p for p in path):
                for a, b in enumerate(sigma):
                    ra, rb = _orbit_root(parent, a), _orbit_root(parent, b)
                    if ra != rb:
                        parent[ra] = rb
        root = _orbit_root(parent, v)
        return any(_orbit_root(parent, u) == root for u in explored)

    def run(self, colors: list[int], path: list[int]) -> int | None:
        """Returns a level to unwind to after discovering an automorphism, else None."""
        colors = _refine(self.nbrs, colors)
        cell = _target_cell(colors)
        if cell is None:
            code = self.leaf_code(colors)
            if self.best_code is None or code > self.best_code:
                self.best_code, self.best_lab, self.best_path = code, colors, list(path)
                return None
            if code == self.best_code:
                at_position = [0] * self.g.n
                for v, pos in enumerate(colors):
                    at_position[pos] = v
                sigma = [at_position[self.best_lab[v]] for v in range(self.g.n)]
                self.generators.append(sigma)
                level = 0
                while level < len(path) and path[level] == self.best_path[level]:
                    level += 1
                return level
            return None
        explored: list[int] = []
        for v in cell:
            if self.same_orbit(path, v, explored):
                continue
            child = [2 * c for c in colors]
            child[v] -= 1
            jump = self.run(child, path + [v])
            explored.append(v)
            if jump is not None and jump < len(path):
                return jump
        return None


def canonical_code(g: Graph) -> tuple:
    """Isomorphism-invariant code: (n, relabelled adjacency rows)."""
    if g.n > MAX_ISO_ORDER:
        raise GraphError(f"isomorphism supported up to order {MAX_ISO_ORDER}, got {g.n}")
    nbrs = [list(iter_bits(row)) for row in g.adj]
    search = _Search(g, nbrs)
    search.run([0] * g.n, [])
    return (g.n, search.best_code)


def canonical_form(g: Graph) -> Graph:
    _, rows = canonical_code(g)
    return Graph(g.n, rows)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    for x in (g, h):
        if x.n > MAX_ISO_ORDER:
            raise GraphError(f"isomorphism supported up to order {MAX_ISO_ORDER}, got {x.n}")
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_code(g) == canonical_code(h)
