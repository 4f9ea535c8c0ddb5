import itertools

import networkx as nx
import pytest
import sympy

from groupoid_card.core.exceptions import (
    InvalidPartition,
    InvalidStructure,
    SignatureMismatch,
    ValidationError,
)
from groupoid_card.models.structure import Partition, RelationalStructure
from groupoid_card.services import relational_service

CYCLE = relational_service.digraph(3, [(0, 1), (1, 2), (2, 0)])
TRANSITIVE = relational_service.digraph(3, [(0, 1), (1, 2), (0, 2)])
EDGE = relational_service.digraph(2, [(0, 1)])
POINT = relational_service.digraph(1, [])


def _random_digraph(rng, n: int) -> RelationalStructure:
    edges = [t for t in itertools.product(range(n), repeat=2) if rng.random() < 0.4]
    return relational_service.digraph(n, edges)


def _relabel(c: RelationalStructure, rng) -> RelationalStructure:
    perm = list(range(c.size))
    rng.shuffle(perm)
    return relational_service.digraph(
        c.size, [(perm[u], perm[v]) for u, v in c.relations[0]]
    )


def _as_networkx(c: RelationalStructure) -> nx.DiGraph:
    graph = nx.DiGraph()
    graph.add_nodes_from(range(c.size))
    graph.add_edges_from(c.relations[0])
    return graph


class TestStructures:
    def test_rejects_out_of_range_tuple(self):
        with pytest.raises(InvalidStructure):
            relational_service.digraph(2, [(0, 2)])

    def test_rejects_wrong_arity(self):
        with pytest.raises(InvalidStructure):
            RelationalStructure.build((2,), 2, [[(0, 1, 1)]])

    def test_unary_and_binary_signature(self):
        c = RelationalStructure.build((1, 2), 2, [[(0,)], [(0, 1)]])
        a = RelationalStructure.build((1, 2), 2, [[(0,), (1,)], [(0, 1), (1, 1)]])
        assert relational_service.count_homs(c, a) == 2


class TestCounting:
    def test_point_and_edge(self, rng):
        for _ in range(10):
            a = _random_digraph(rng, rng.randint(0, 4))
            assert relational_service.count_homs(POINT, a) == a.size
            assert relational_service.count_homs(EDGE, a) == len(a.relations[0])

    def test_automorphisms_of_the_cycle(self):
        assert relational_service.count_injective_homs(CYCLE, CYCLE) == 3
        assert relational_service.count_homs(CYCLE, TRANSITIVE) == 0
        assert relational_service.count_homs(TRANSITIVE, CYCLE) == 0

    def test_signature_mismatch(self):
        unary = RelationalStructure.build((1,), 1, [[]])
        with pytest.raises(SignatureMismatch):
            relational_service.count_homs(unary, POINT)

    def test_product_and_union(self, rng):
        for _ in range(6):
            a, b, c = (_random_digraph(rng, rng.randint(1, 3)) for _ in range(3))
            product = relational_service.product_structure(a, b)
            union = relational_service.disjoint_union(a, b)
            count = relational_service.count_homs
            assert count(c, product) == count(c, a) * count(c, b)
            assert count(union, c) == count(a, c) * count(b, c)

    def test_find_isomorphism(self, rng):
        for _ in range(6):
            a = _random_digraph(rng, 4)
            b = _relabel(a, rng)
            mapping = relational_service.find_isomorphism(a, b)
            assert mapping is not None
            moved = {(mapping[u], mapping[v]) for u, v in a.relations[0]}
            assert moved == set(b.relations[0])


class TestPartitions:
    @pytest.mark.parametrize("n", range(7))
    def test_partition_count_is_bell_number(self, n):
        partitions = list(relational_service.partitions(n))
        assert len(partitions) == sympy.bell(n)
        assert len(set(partitions)) == len(partitions)
        blocks = [p.blocks for p in partitions]
        assert blocks == sorted(blocks)

    def test_rejects_non_restricted_growth(self):
        with pytest.raises(InvalidPartition):
            Partition((0, 2))

    def test_quotient_of_a_path(self):
        path = relational_service.digraph(3, [(0, 1), (1, 2)])
        quotient = relational_service.quotient_structure(path, Partition((0, 0, 1)))
        assert quotient.size == 2
        assert quotient.relations[0] == frozenset({(0, 0), (0, 1)})

    def test_quotient_size_mismatch(self):
        with pytest.raises(InvalidPartition):
            relational_service.quotient_structure(CYCLE, Partition((0, 1)))

    def test_hom_inj_identity(self, rng):
        for _ in range(10):
            c = _random_digraph(rng, rng.randint(0, 4))
            a = _random_digraph(rng, rng.randint(1, 3))
            identity = relational_service.verify_hom_inj_identity(c, a)
            assert identity.equal
            assert identity.hom == relational_service.count_homs(c, a)


class TestCanonicalForms:
    def test_structure_counts(self):
        sizes = [
            c.size for c in relational_service.enumerate_structures((2,), 3)
        ]
        assert [sizes.count(n) for n in range(4)] == [1, 2, 10, 104]

    def test_canonical_mask_matches_isomorphism(self, rng):
        for _ in range(25):
            n = rng.randint(1, 4)
            a, b = _random_digraph(rng, n), _random_digraph(rng, n)
            same = relational_service.canonical_mask(
                a
            ) == relational_service.canonical_mask(b)
            assert same == nx.is_isomorphic(_as_networkx(a), _as_networkx(b))

    def test_canonical_form_is_isomorphic(self, rng):
        a = _random_digraph(rng, 4)
        canonical = relational_service.canonical_form(a)
        assert relational_service.find_isomorphism(a, canonical) is not None
        assert relational_service.canonical_form(_relabel(a, rng)) == canonical


class TestLovaszTest:
    def test_distinguishes_cycle_from_transitive_triangle(self):
        verdict = relational_service.lovasz_iso_test(CYCLE, TRANSITIVE, bound=3)
        assert verdict.distinguished
        assert verdict.isomorphic is False
        assert verdict.hom_a == relational_service.count_homs(verdict.witness, CYCLE)
        assert verdict.hom_b == relational_service.count_homs(
            verdict.witness, TRANSITIVE
        )
        assert verdict.hom_a != verdict.hom_b

    def test_relabelled_copy_is_indistinguishable(self, rng):
        verdict = relational_service.lovasz_iso_test(
            CYCLE, _relabel(CYCLE, rng), bound=3
        )
        assert not verdict.distinguished
        assert verdict.isomorphic
        assert verdict.probes_checked == 117

    def test_bound_must_cover_both_structures(self):
        with pytest.raises(ValidationError):
            relational_service.lovasz_iso_test(CYCLE, TRANSITIVE, bound=2)

    def test_unknown_strategy(self):
        with pytest.raises(ValidationError):
            relational_service.lovasz_iso_test(CYCLE, CYCLE, strategy="random")

    def test_quotient_strategy_on_four_vertices(self):
        square = relational_service.digraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        pairs = relational_service.digraph(4, [(0, 1), (1, 0), (2, 3), (3, 2)])
        verdict = relational_service.lovasz_iso_test(
            square, pairs, strategy="quotients"
        )
        assert verdict.distinguished

    def test_random_pairs_agree_with_networkx(self, rng):
        for _ in range(15):
            a, b = _random_digraph(rng, 3), _random_digraph(rng, 3)
            verdict = relational_service.lovasz_iso_test(a, b, bound=3)
            assert bool(verdict.isomorphic) == nx.is_isomorphic(
                _as_networkx(a), _as_networkx(b)
            )

    @pytest.mark.slow
    def test_exhaustive_sweep_on_four_vertices(self, rng):
        for _ in range(5):
            a = _random_digraph(rng, 4)
            verdict = relational_service.lovasz_iso_test(a, _relabel(a, rng))
            assert verdict.isomorphic
            assert verdict.probes_checked == 1 + 2 + 10 + 104 + 3044
