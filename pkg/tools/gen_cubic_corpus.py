"""Regenerate the vendored graph6 fixtures under tests/fixtures/.

Connected cubic graphs are grown from K4 by edge insertion (subdivide two
distinct edges, join the two new vertices) on order n-2 and by diamond
insertion (replace an edge by a path through a K4-minus-an-edge) on order
n-4, and by bridge joins of two smaller graphs (subdivide an edge in each,
join the subdivision vertices), then deduplicated with networkx isomorphism, so this script shares no
code with the package under test. Completeness is checked against the published counts of connected cubic
graphs (OEIS A002851).

Supercubic graphs on at most 7 vertices come from the networkx graph atlas.
Those on 8 vertices are found twice: by deleting edges from K8 while the
minimum degree stays at least 3, and as complements of graphs with maximum
degree at most 4 grown from the empty graph. The two counts must agree, and
the deletion method must reproduce the atlas counts for orders 4 to 7.

    python3 tools/gen_cubic_corpus.py [--max-order 14]
"""

import argparse
import itertools
from pathlib import Path

import networkx as nx

KNOWN_COUNTS = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85, 14: 509, 16: 4060}

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"


def insertions(g):
    n = g.number_of_nodes()
    edges = sorted(tuple(sorted(e)) for e in g.edges())
    for (a, b), (c, d) in itertools.combinations(edges, 2):
        h = g.copy()
        x, y = n, n + 1
        h.remove_edge(a, b)
        h.remove_edge(c, d)
        h.add_edges_from([(a, x), (x, b), (c, y), (y, d), (x, y)])
        yield h


def diamond_insertions(g):
    n = g.number_of_nodes()
    for u, v in sorted(tuple(sorted(e)) for e in g.edges()):
        h = g.copy()
        a, b, c, d = n, n + 1, n + 2, n + 3
        h.remove_edge(u, v)
        h.add_edges_from([(u, a), (a, b), (a, c), (b, c), (b, d), (c, d), (d, v)])
        yield h


def bridge_joins(g1, g2):
    n1 = g1.number_of_nodes()
    h0 = nx.disjoint_union(g1, g2)
    for a, b in sorted(tuple(sorted(e)) for e in g1.edges()):
        for c, d in sorted(tuple(sorted(e)) for e in g2.edges()):
            h = h0.copy()
            c, d = c + n1, d + n1
            x, y = h.number_of_nodes(), h.number_of_nodes() + 1
            h.remove_edge(a, b)
            h.remove_edge(c, d)
            h.add_edges_from([(a, x), (x, b), (c, y), (y, d), (x, y)])
            yield h


def all_bridge_joins(left, right):
    for g1 in left:
        for g2 in right:
            yield from bridge_joins(g1, g2)


def invariant(h):
    # 1-WL is blind on regular graphs; bucket on distance profiles instead
    tri = nx.triangles(h)
    return tuple(sorted(
        (tri[v], tuple(sorted(nx.single_source_shortest_path_length(h, v).values())))
        for v in h
    ))


def next_order(levels, n):
    """All connected cubic graphs of order n, given complete lower levels."""
    buckets = {}
    out = []
    sources = [(h for g in levels.get(n - 2, []) for h in insertions(g)),
               (h for g in levels.get(n - 4, []) for h in diamond_insertions(g))]
    for n1 in range(4, n - 1, 2):
        n2 = n - 2 - n1
        if n2 < n1:
            break
        sources.append(all_bridge_joins(levels.get(n1, []), levels.get(n2, [])))
    for h in itertools.chain(*sources):
        key = invariant(h)
        bucket = buckets.setdefault(key, [])
        if any(nx.is_isomorphic(h, other) for other in bucket):
            continue
        bucket.append(h)
        out.append(h)
    return out


def dense_key(h):
    tri = nx.triangles(h)
    return tuple(sorted((h.degree(v), tri[v], tuple(sorted(h.degree(u) for u in h[v]))) for v in h))


def closure(start, step):
    """Isomorphism classes reachable from ``start`` by repeated ``step``."""
    seen = {}
    frontier = [start]
    out = [start]
    seen[dense_key(start)] = [start]
    while frontier:
        nxt = []
        for g in frontier:
            for h in step(g):
                bucket = seen.setdefault(dense_key(h), [])
                if any(nx.is_isomorphic(h, other) for other in bucket):
                    continue
                bucket.append(h)
                nxt.append(h)
        out.extend(nxt)
        frontier = nxt
    return out


def supercubic_by_deletion(n):
    def step(g):
        for u, v in list(g.edges()):
            if g.degree(u) > 3 and g.degree(v) > 3:
                h = g.copy()
                h.remove_edge(u, v)
                yield h
    return closure(nx.complete_graph(n), step)


def supercubic_by_complement(n):
    def step(g):
        for u, v in itertools.combinations(range(n), 2):
            if not g.has_edge(u, v) and g.degree(u) < n - 4 and g.degree(v) < n - 4:
                h = g.copy()
                h.add_edge(u, v)
                yield h
    return [nx.complement(g) for g in closure(nx.empty_graph(n), step)]


def write(path, graphs):
    lines = sorted(nx.to_graph6_bytes(g, header=False).strip() for g in graphs)
    path.write_bytes(b"".join(line + b"\n" for line in lines))
    print(f"{path.name}: {len(lines)} graphs")


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-order", type=int, default=14)
    args = parser.parse_args()

    FIXTURES.mkdir(parents=True, exist_ok=True)
    levels = {4: [nx.complete_graph(4)]}
    n = 4
    while n <= args.max_order:
        level = levels[n]
        for g in level:
            assert nx.is_connected(g) and all(d == 3 for _, d in g.degree())
        if n in KNOWN_COUNTS and len(level) != KNOWN_COUNTS[n]:
            raise SystemExit(f"order {n}: got {len(level)}, expected {KNOWN_COUNTS[n]}")
        write(FIXTURES / f"cubic_connected_{n:02d}.g6", level)
        if n + 2 > args.max_order:
            break
        n += 2
        levels[n] = next_order(levels, n)

    supercubic = [
        g for g in nx.graph_atlas_g()
        if g.number_of_nodes() >= 4 and min(d for _, d in g.degree()) >= 3
    ]
    write(FIXTURES / "supercubic_upto7.g6", supercubic)
    for n in range(4, 8):
        atlas = sum(1 for g in supercubic if g.number_of_nodes() == n)
        if len(supercubic_by_deletion(n)) != atlas:
            raise SystemExit(f"deletion closure disagrees with the atlas at order {n}")
    eight = supercubic_by_deletion(8)
    if len(eight) != len(supercubic_by_complement(8)):
        raise SystemExit("order-8 supercubic counts disagree")
    write(FIXTURES / "supercubic_08.g6", eight)


if __name__ == "__main__":
    main()
