import itertools
import random

import pytest

from weakiasi.constructions import LabelPlan, assign_concrete_sets
from weakiasi.graph_core import (
    Graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    is_bipartite,
    path_graph,
    star_graph,
)
from weakiasi.set_label import mono_indexed_stats, verify_weak_iasi
from weakiasi.sparing import (
    CapacityError,
    SparingError,
    cycle_parity_of,
    sparing_brute_force,
    sparing_exact,
    sparing_formula_complete,
    sparing_formula_corona,
    sparing_formula_cycle,
    sparing_union,
)

FAMILIES = [path_graph(2), path_graph(3), path_graph(4), cycle_graph(3),
            cycle_graph(4), cycle_graph(5), complete_graph(2),
            complete_graph(3), complete_graph(4), star_graph(3)]


def random_graph(rng, n, p=0.4):
    while True:
        edges = [(u, v) for u, v in itertools.combinations(range(n), 2)
                 if rng.random() < p]
        touched = {x for e in edges for x in e}
        if len(touched) == n:
            return Graph(n, edges)


def check_witness(g, result):
    witness = set(result.witness)
    for u, v in itertools.combinations(sorted(witness), 2):
        assert not g.has_edge(u, v), "witness must be independent"
    uncovered = [e for e in g.edges if not (set(e) & witness)]
    assert result.value == len(uncovered)


class TestExactOracle:
    def test_complete_graphs(self):
        for n in range(3, 8):
            res = sparing_exact(complete_graph(n))
            assert res.value == (n - 1) * (n - 2) // 2

    def test_bipartite_is_zero(self):
        for g in [cycle_graph(4), path_graph(4), star_graph(3)]:
            res = sparing_exact(g)
            assert res.value == 0
            check_witness(g, res)

    def test_c5(self):
        res = sparing_exact(cycle_graph(5))
        assert res.value == 1
        assert len(res.witness) == 2
        check_witness(cycle_graph(5), res)

    def test_capacity_error_names_bound(self):
        g = cycle_graph(10)
        with pytest.raises(CapacityError, match="5"):
            sparing_exact(g, oracle_bound=5)

    def test_agrees_with_brute_force_on_random_graphs(self):
        rng = random.Random(7)
        for _ in range(40):
            g = random_graph(rng, rng.randint(3, 8))
            fast = sparing_exact(g)
            slow = sparing_brute_force(g)
            assert fast.value == slow.value
            assert fast.witness == slow.witness  # same lexicographic tie-break
            check_witness(g, fast)

    def test_agrees_with_brute_force_on_families(self):
        for g in FAMILIES:
            fast, slow = sparing_exact(g), sparing_brute_force(g)
            assert (fast.value, fast.witness) == (slow.value, slow.witness)

    def test_monotone_under_edge_addition(self):
        rng = random.Random(3)
        for _ in range(15):
            g = random_graph(rng, 7)
            base = sparing_exact(g).value
            non_edges = [e for e in itertools.combinations(range(7), 2)
                         if e not in g.edges]
            if non_edges:
                e = rng.choice(non_edges)
                bigger = Graph(7, list(g.edges) + [e])
                assert sparing_exact(bigger).value >= base
            edge = rng.choice(sorted(g.edges))
            smaller = Graph(7, [e for e in g.edges if e != edge],
                            allow_isolated=True)
            assert sparing_exact(smaller).value <= base

    def test_witness_realizable_as_labeling(self):
        rng = random.Random(11)
        for _ in range(15):
            g = random_graph(rng, rng.randint(4, 9))
            res = sparing_exact(g)
            lab = assign_concrete_sets(g, LabelPlan(frozenset(res.witness), "test"))
            assert verify_weak_iasi(g, lab).passed
            _, mono, _ = mono_indexed_stats(g, lab)
            assert mono == res.value


class TestFormulas:
    def test_complete_formula(self):
        assert sparing_formula_complete(4) == 3
        assert sparing_formula_complete(2) == 0
        assert sparing_formula_complete(8) == 21
        assert sparing_formula_complete(8) == sparing_exact(complete_graph(8)).value

    def test_cycle_formula(self):
        assert sparing_formula_cycle(6) == 0
        assert sparing_formula_cycle(3) == 1
        assert sparing_formula_cycle(9) == 1
        assert sparing_formula_cycle(9) == sparing_exact(cycle_graph(9)).value
        with pytest.raises(SparingError):
            sparing_formula_cycle(2)

    def test_corona_formula(self):
        assert sparing_formula_corona(4, 1, 2, 1) == 6
        assert sparing_formula_corona(5, 3, 0, 7) == 15  # r1=0 -> n1*m2
        with pytest.raises(SparingError):
            sparing_formula_corona(2, 1, 3, 1)

    def test_cycle_parity(self):
        assert cycle_parity_of(5, 2) == 1
        assert cycle_parity_of(4, 1) == 2
        assert cycle_parity_of(4, 2) == 0
        with pytest.raises(SparingError):
            cycle_parity_of(5, 3)

    def test_cycle_parity_matches_enumeration(self):
        for n in range(3, 10):
            g = cycle_graph(n)
            for mask in range(1 << n):
                verts = [v for v in range(n) if mask >> v & 1]
                if any(g.has_edge(u, v) for u, v in itertools.combinations(verts, 2)):
                    continue
                uncovered = sum(1 for e in g.edges if not (set(e) & set(verts)))
                assert uncovered == n - 2 * len(verts)
                assert uncovered % 2 == n % 2


class TestUnion:
    def test_additivity_examples(self):
        assert sparing_union(cycle_graph(3), cycle_graph(4)) == 1
        assert sparing_union(complete_graph(4), complete_graph(4)) == 6
        g = cycle_graph(5)
        assert sparing_union(g, complete_graph(2)) == sparing_exact(g).value

    def test_matches_oracle_on_the_union_graph(self):
        for g1, g2 in itertools.combinations(FAMILIES, 2):
            expected = sparing_exact(g1).value + sparing_exact(g2).value
            assert sparing_union(g1, g2) == expected
            whole = sparing_exact(disjoint_union(g1, g2))
            assert whole.value == expected


class TestBipartiteCriterion:
    def test_bipartite_side_is_a_valid_witness(self):
        for g in FAMILIES:
            res = is_bipartite(g)
            if not res.is_bipartite:
                assert sparing_exact(g).value >= 1
                continue
            assert sparing_exact(g).value == 0
            side = res.sides[1] or res.sides[0]
            uncovered = [e for e in g.edges if not (set(e) & set(side))]
            assert uncovered == []
