import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import partialdom.construct as construct
from partialdom.catalog import named_graph, vertex
from partialdom.construct import (
    ConstructionError,
    ConstructRegime,
    build_partition,
    greedy_partial,
    lemma_condition,
    lemma_extend,
    one_third_construct,
)
from partialdom.exact import AlphaThreshold, bc_normalize, gamma_exact, pd_exact, private_neighborhoods
from partialdom.generators import random_cubic, random_supercubic
from partialdom.graph import Graph, GraphError, cover, disjoint_union
from partialdom.graph6 import parse_graph6
from helpers import cubic_corpus, supercubic_corpus


class TestLemma:
    def test_empty_set(self):
        g = named_graph("Petersen")
        v = lemma_extend(g, [], 3)
        assert v == 0

    def test_nothing_left(self):
        g = named_graph("K4")
        assert lemma_extend(g, [0], 2) is None

    def test_order_eight(self):
        g = named_graph("A1")
        s = [vertex("A1", "u1")]
        unreached = cover(g, s).undominated
        assert lemma_condition(8, 1, len(unreached), 1)
        v = lemma_extend(g, s, 1)
        assert len(cover(g, [v]).closed & unreached) >= 2

    def test_errors(self):
        with pytest.raises(GraphError):
            lemma_extend(Graph.from_edges(3, [(0, 1), (1, 2)]), [], 1)
        with pytest.raises(ValueError):
            lemma_extend(named_graph("K4"), [], 0)

    @settings(max_examples=300, deadline=None)
    @given(st.integers(4, 30), st.integers(0, 2**32), st.integers(0, 6), st.data())
    def test_soundness_and_choice(self, n, seed, extra, data):
        g = random_supercubic(n, seed, extra_edges=extra) if n >= 8 else random_supercubic(n, seed)
        s = data.draw(st.sets(st.integers(0, n - 1), max_size=n // 2))
        k = data.draw(st.integers(1, 5))
        unreached = cover(g, s).undominated
        v = lemma_extend(g, s, k)
        best = max((len(cover(g, [x]).closed & unreached), x)
                   for x in range(n) if x not in s) if unreached else None
        if lemma_condition(n, len(s), len(unreached), k):
            assert v is not None
        if v is not None:
            gain = len(cover(g, [v]).closed & unreached)
            assert gain >= k + 1 and gain == best[0] and v not in s
            candidates = (cover(g, s).boundary | unreached)
            assert v in candidates


class TestGreedy:
    def test_k4(self):
        r = greedy_partial(named_graph("K4"), 1, 4)
        assert r.achieved and r.coverage == 4

    def test_order_eleven(self):
        for seed in range(20):
            g = random_supercubic(11, seed)
            r = greedy_partial(g, 3, 10)
            assert r.achieved and len(r.witness) <= 3
            if not r.used_fallback:
                assert r.trace[0] >= 5 and r.trace[1] >= 8 and r.trace[2] >= 10

    def test_order_fourteen_against_exact(self):
        for line in cubic_corpus(14)[::7]:
            g = parse_graph6(line)
            r = greedy_partial(g, 4, 13)
            assert r.achieved and len(r.witness) <= 4
            assert pd_exact(g, "7/8").value <= len(r.witness)

    def test_fallback_guarantee_small_supercubic(self):
        for line in supercubic_corpus(8)[::5]:
            g = parse_graph6(line)
            r = greedy_partial(g, g.n // 3, AlphaThreshold(7, 8).required(g.n))
            assert r.achieved

    @settings(max_examples=50, deadline=None)
    @given(st.integers(3, 20), st.integers(0, 2**32), st.integers(0, 10))
    def test_trace_strictly_increasing(self, half, seed, budget):
        g = random_cubic(2 * half, seed)
        r = greedy_partial(g, budget, g.n)
        assert all(a < b for a, b in zip(r.trace, r.trace[1:]))
        assert r.coverage == len(cover(g, r.witness).closed)
        assert r.achieved == (r.coverage >= g.n)

    def test_errors(self):
        with pytest.raises(ValueError):
            greedy_partial(named_graph("K4"), -1, 2)
        with pytest.raises(GraphError):
            greedy_partial(Graph.empty(3), 1, 1)


def check_partition(g, d, partition):
    seen = 0
    epn_sets = {v: epn for v, (_, epn) in private_neighborhoods(g, d).items()}
    for part in partition.parts:
        m = part.members
        assert not (seen & m.bits)
        seen |= m.bits
        assert part.center in m
        assert epn_sets[part.center] <= m
        assert m <= cover(g, [part.center]).closed
        assert len(m) >= 2
    assert seen == g.full_mask
    sizes = partition.sizes()
    assert sizes == sorted(sizes, reverse=True)


class TestPartition:
    def test_k4(self):
        p = build_partition(named_graph("K4"), [2])
        assert p.centers() == [2] and p.sizes() == [4]

    def test_a1(self):
        g = named_graph("A1")
        d = bc_normalize(g, gamma_exact(g).witness)
        p = build_partition(g, d)
        assert len(p.parts) == 3 and sum(p.sizes()) == 8
        check_partition(g, d, p)

    def test_epn_violation(self):
        g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
        with pytest.raises(GraphError, match="vertex 0"):
            build_partition(g, [0, 2])
        with pytest.raises(GraphError, match="not dominating"):
            build_partition(g, [0])

    @settings(max_examples=60, deadline=None)
    @given(st.integers(3, 12), st.integers(0, 2**32))
    def test_invariants_and_tail_bound(self, half, seed):
        g = random_cubic(2 * half, seed)
        d = bc_normalize(g, gamma_exact(g).witness)
        p = build_partition(g, d)
        check_partition(g, d, p)
        n, gamma, k1 = g.n, len(d), g.n // 3
        if gamma > k1:
            # the discarded parts i = k1+1 .. gamma hold at most (gamma-k1)/gamma of V
            tail = sum(p.sizes()[k1:])
            assert tail * gamma <= (gamma - k1) * n
            if 8 * gamma <= 3 * n:
                kept = len(cover(g, p.centers()[:k1]).closed)
                assert 8 * kept >= 7 * n


class TestConstruct:
    def test_a1(self):
        c = one_third_construct(named_graph("A1"), ConstructRegime.GENERIC78)
        assert c.value == 2 and c.coverage == 7 and c.method == "exact"

    def test_cubic1314_order_30(self):
        for seed in range(5):
            g = random_cubic(30, seed, require_connected=True)
            c = one_third_construct(g, "cubic1314")
            assert c.value <= 10 and c.coverage >= 28
            assert len(cover(g, c.witness).closed) == c.coverage

    def test_super910_order_60(self):
        g = random_supercubic(60, 11, extra_edges=5, require_connected=True)
        c = one_third_construct(g, "super910")
        assert c.value <= 20 and c.coverage >= 54
        assert len(cover(g, c.witness).closed) == c.coverage

    def test_partition_path(self):
        a1, a2 = named_graph("A1"), named_graph("A2")
        g = a1
        for h in (a2, a1, a2, a1):
            g = disjoint_union(g, h)
        c = one_third_construct(g, "generic78")
        assert c.method == "partition" and c.dominating_set_size == 15
        assert c.value <= g.n // 3 and 8 * c.coverage >= 7 * g.n

    def test_not_applicable(self):
        with pytest.raises(ConstructionError):
            one_third_construct(named_graph("Petersen"), "cubic1314")
        with pytest.raises(ConstructionError):
            one_third_construct(random_cubic(40, 1, True), "super910")
        with pytest.raises(ConstructionError):
            one_third_construct(Graph.from_edges(3, [(0, 1)]), "generic78")
        with pytest.raises(ValueError):
            one_third_construct(named_graph("A1"), "generic99")

    def test_gamma_gate_reports_failure(self, monkeypatch):
        g = random_cubic(24, 3, require_connected=True)
        monkeypatch.setattr(construct, "_normalized_dominating_set",
                            lambda g: ((1 << 12) - 1, False))
        with pytest.raises(ConstructionError, match="exceeds the bound 9"):
            one_third_construct(g, "generic78")

    def test_consistent_with_exact_small(self):
        for line in cubic_corpus(12)[::4] + supercubic_corpus(8)[::50]:
            g = parse_graph6(line)
            c = one_third_construct(g, "generic78")
            pd = pd_exact(g, "7/8").value
            assert pd <= c.value <= g.n // 3

    def test_to_dict(self):
        d = one_third_construct(named_graph("A2"), "generic78").to_dict()
        assert d["kind"] == "PartialDom" and d["alpha"] == "7/8"
        assert d["regime"] == "generic78" and d["guarantee_chain_verified"] is True
        assert len(d["witness"]) == d["value"]

    @settings(max_examples=25, deadline=None)
    @given(st.integers(8, 25), st.integers(0, 2**32))
    def test_generic78_random(self, half, seed):
        g = random_cubic(2 * half, seed, require_connected=True)
        c = one_third_construct(g, "generic78")
        assert c.value <= g.n // 3 and 8 * len(cover(g, c.witness).closed) >= 7 * g.n


def test_regime_specs():
    assert ConstructRegime.CUBIC1314.spec.gamma_bound(28) == 10
    assert ConstructRegime.SUPER910.spec.alpha == AlphaThreshold(9, 10)
    assert not ConstructRegime.CUBIC1314.applies_to(random_cubic(26, 0, True))
    assert ConstructRegime.CUBIC1314.applies_to(random_cubic(28, 0, True))
