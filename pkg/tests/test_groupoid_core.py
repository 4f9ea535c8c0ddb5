from fractions import Fraction

import pytest

from groupoid_card.core.exceptions import InvalidAction, InvalidGroupoid, SizeLimit
from groupoid_card.services import group_service, groupoid_service
from tests.oracles import brute_force_cardinality, random_groupoid

ARROW = [
    ("1a", "a", "a"),
    ("1b", "b", "b"),
    ("f", "a", "b"),
    ("g", "b", "a"),
]
ARROW_COMPOSE = [
    ("1a", "1a", "1a"),
    ("1a", "f", "f"),
    ("f", "1b", "f"),
    ("f", "g", "1a"),
    ("1b", "1b", "1b"),
    ("1b", "g", "g"),
    ("g", "1a", "g"),
    ("g", "f", "1b"),
]


def test_basic_cardinalities():
    c3 = group_service.cyclic_group(3)
    assert groupoid_service.groupoid_cardinality(groupoid_service.empty()) == 0
    assert groupoid_service.groupoid_cardinality(groupoid_service.discrete(3)) == 3
    assert groupoid_service.groupoid_cardinality(groupoid_service.codiscrete(3)) == 1
    assert groupoid_service.groupoid_cardinality(
        groupoid_service.delooping(c3)
    ) == Fraction(1, 3)


def test_skeletal_cardinality():
    groups = [group_service.cyclic_group(2), group_service.symmetric_group(3)]
    groupoid = groupoid_service.from_skeletal(groups)
    assert groupoid_service.groupoid_cardinality(groupoid) == Fraction(2, 3)


class TestFromTable:
    def test_labelled_arrow(self):
        groupoid = groupoid_service.from_table(["a", "b"], ARROW, ARROW_COMPOSE)
        assert groupoid.iso_classes == ((0, 1),)
        assert groupoid_service.groupoid_cardinality(groupoid) == 1
        assert groupoid.morphism_labels[groupoid.inverse(2)] == "g"

    def test_explicit_identities(self):
        groupoid = groupoid_service.from_table(
            ["a", "b"], ARROW, ARROW_COMPOSE, {"a": "1a", "b": "1b"}
        )
        assert groupoid.identities == (0, 1)

    def test_missing_composite(self):
        with pytest.raises(InvalidGroupoid):
            groupoid_service.from_table(["a", "b"], ARROW, ARROW_COMPOSE[:-1])

    def test_unknown_endpoint(self):
        with pytest.raises(InvalidGroupoid):
            groupoid_service.from_table(["a"], [("f", "a", "z")], [])

    def test_non_invertible_morphism(self):
        with pytest.raises(InvalidGroupoid) as excinfo:
            groupoid_service.from_table(
                ["a"],
                [("1", "a", "a"), ("z", "a", "a")],
                [("1", "1", "1"), ("1", "z", "z"), ("z", "1", "z"), ("z", "z", "z")],
            )
        assert "inverse" in excinfo.value.message

    def test_non_associative_composition(self):
        # unital but not associative: (1·1)·2 != 1·(1·2)
        loops = [(str(i), "a", "a") for i in range(3)]
        compose = [
            (str(i), str(j), str((i + j) % 3 if 0 in (i, j) else (2 * i + 2 * j) % 3))
            for i in range(3)
            for j in range(3)
        ]
        with pytest.raises(InvalidGroupoid):
            groupoid_service.from_table(["a"], loops, compose, {"a": "0"})


def test_cardinality_matches_object_sum(rng):
    for _ in range(200):
        groupoid = random_groupoid(rng, max_blocks=3)
        assert groupoid_service.groupoid_cardinality(
            groupoid
        ) == brute_force_cardinality(groupoid)


def test_product_and_coproduct(rng):
    for _ in range(200):
        g, h = random_groupoid(rng), random_groupoid(rng)
        card_g = groupoid_service.groupoid_cardinality(g)
        card_h = groupoid_service.groupoid_cardinality(h)
        product = groupoid_service.product(g, h)
        coproduct = groupoid_service.coproduct(g, h)
        assert groupoid_service.groupoid_cardinality(product) == card_g * card_h
        assert groupoid_service.groupoid_cardinality(coproduct) == card_g + card_h


def test_random_groupoids_satisfy_the_axioms(rng):
    for _ in range(20):
        random_groupoid(rng).validate()


def test_restrict_to_full_subgroupoid():
    codiscrete = groupoid_service.codiscrete(3)
    sub, ambient = groupoid_service.restrict(codiscrete, [2, 0])
    assert sub.num_objects == 2
    assert sub.num_morphisms == 4
    assert ambient == (0, 2, 6, 8)
    sub.validate()


def test_vertex_group_and_skeleton():
    s3 = group_service.symmetric_group(3)
    fat = groupoid_service.product(
        groupoid_service.codiscrete(2), groupoid_service.delooping(s3)
    )
    group, elems = groupoid_service.vertex_group(fat, 1)
    assert group_service.are_isomorphic(group, s3)
    assert elems[0] == fat.identities[1]
    skeleton = groupoid_service.skeleton(fat)
    assert len(skeleton.components) == 1
    assert groupoid_service.is_equivalent(fat, groupoid_service.delooping(s3))
    assert not groupoid_service.is_equivalent(
        fat, groupoid_service.delooping(group_service.cyclic_group(6))
    )


class TestActionGroupoid:
    def test_swap_action(self):
        c2 = group_service.cyclic_group(2)
        groupoid = groupoid_service.action_groupoid(2, c2, [(0, 1), (1, 0)])
        assert groupoid.iso_classes == ((0, 1),)
        assert groupoid_service.groupoid_cardinality(groupoid) == 1

    def test_classes_ordered_by_least_member(self):
        c2 = group_service.cyclic_group(2)
        groupoid = groupoid_service.action_groupoid(4, c2, [(0, 1, 2, 3), (2, 1, 0, 3)])
        assert groupoid.iso_classes == ((0, 2), (1,), (3,))
        assert groupoid_service.groupoid_cardinality(groupoid) == 2

    def test_trivial_action(self):
        c2 = group_service.cyclic_group(2)
        groupoid = groupoid_service.action_groupoid(3, c2, [(0, 1, 2)] * 2)
        assert groupoid_service.groupoid_cardinality(groupoid) == Fraction(3, 2)

    def test_orbit_counting(self, rng, small_groups):
        for _ in range(12):
            group = rng.choice([g for g in small_groups if g.order <= 6])
            classes = group_service.subgroups_up_to_conjugacy(group)
            action = group_service.coset_action(group, rng.choice(classes))
            groupoid = groupoid_service.action_groupoid(
                action.degree, group, action.permutations
            )
            groupoid.validate()
            assert groupoid_service.groupoid_cardinality(groupoid) == Fraction(
                action.degree, group.order
            )

    def test_accepts_homomorphism_into_sym(self):
        s3 = group_service.symmetric_group(3)
        order_two = group_service.subgroups_up_to_conjugacy(s3)[1]
        action = group_service.coset_action(s3, order_two)
        hom = group_service.coset_action_hom(action)
        groupoid = groupoid_service.action_groupoid(3, s3, hom)
        assert groupoid_service.groupoid_cardinality(groupoid) == Fraction(1, 2)

    def test_rejects_non_action(self):
        c2 = group_service.cyclic_group(2)
        with pytest.raises(InvalidAction):
            groupoid_service.action_groupoid(2, c2, [(1, 0), (1, 0)])


class TestFunctorGroupoids:
    def test_delooping_into_discrete(self):
        c2 = group_service.cyclic_group(2)
        h = groupoid_service.delooping(c2)
        g = groupoid_service.discrete(2)
        assert groupoid_service.functor_groupoid_cardinality(h, g) == 2
        built = groupoid_service.functor_groupoid(h, g)
        assert built.num_objects == 2
        assert groupoid_service.groupoid_cardinality(built) == 2

    def test_functor_counts(self):
        c2, c3 = group_service.cyclic_group(2), group_service.cyclic_group(3)
        b2, b3 = groupoid_service.delooping(c2), groupoid_service.delooping(c3)
        assert len(groupoid_service.enumerate_functors(b2, b3)) == 1
        assert len(groupoid_service.enumerate_functors(b3, b3)) == 3
        assert groupoid_service.functor_groupoid_cardinality(b2, b2) == 1

    def test_functors_from_empty_groupoid(self):
        g = groupoid_service.delooping(group_service.cyclic_group(3))
        assert groupoid_service.functor_groupoid_cardinality(
            groupoid_service.empty(), g
        ) == 1

    def test_enumerated_functors_are_valid(self, rng):
        for _ in range(5):
            h = random_groupoid(rng, max_blocks=1)
            g = random_groupoid(rng)
            functors = groupoid_service.enumerate_functors(h, g)
            assert len({(f.object_map, f.morphism_map) for f in functors}) == len(
                functors
            )
            for functor in functors[:10]:
                functor.validate()

    @pytest.mark.slow
    def test_product_formula_matches_built_groupoid(self, rng):
        for _ in range(50):
            h = random_groupoid(rng, max_blocks=1)
            g = random_groupoid(rng)
            formula = groupoid_service.functor_groupoid_cardinality(h, g)
            built = groupoid_service.functor_groupoid(h, g)
            assert groupoid_service.groupoid_cardinality(built) == formula

    def test_size_limit(self):
        g = groupoid_service.delooping(group_service.cyclic_group(4))
        with pytest.raises(SizeLimit):
            groupoid_service.enumerate_functors(g, g, limit=2)
