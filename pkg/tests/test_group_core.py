import math

import pytest

from groupoid_card.core.exceptions import (
    GroupTooLarge,
    InvalidTable,
    NotAHomomorphism,
    NotAssociative,
    NotLatinSquare,
    NotNormal,
)
from groupoid_card.models.group import PermGroup
from groupoid_card.services import group_service
from tests.oracles import brute_force_hom_count, brute_force_subgroups


class TestConstruction:
    def test_cyclic_group(self):
        c4 = group_service.cyclic_group(4)
        assert c4.order == 4
        assert c4.is_abelian
        assert c4.element_orders == (1, 4, 2, 4)

    def test_identity_is_moved_to_zero(self):
        # C2 written with the identity in position 1
        group = group_service.group_from_cayley([[1, 0], [0, 1]])
        assert group.table == ((0, 1), (1, 0))
        assert group.inverse == (0, 1)

    def test_rejects_ragged_table(self):
        with pytest.raises(InvalidTable):
            group_service.group_from_cayley([[0, 1], [1]])

    def test_rejects_out_of_range_entry(self):
        with pytest.raises(InvalidTable):
            group_service.group_from_cayley([[0, 2], [1, 0]])

    def test_rejects_repeated_column(self):
        with pytest.raises(NotLatinSquare):
            group_service.group_from_cayley([[0, 1], [0, 1]])

    def test_rejects_non_associative_quasigroup(self):
        table = [[(-a - b) % 3 for b in range(3)] for a in range(3)]
        with pytest.raises(NotAssociative) as excinfo:
            group_service.group_from_cayley(table)
        assert len(excinfo.value.details["triple"]) == 3

    def test_quaternion_table_is_a_group(self):
        q8 = group_service.quaternion_group()
        rebuilt = group_service.group_from_cayley(q8.table)
        assert rebuilt.table == q8.table
        assert sorted(q8.element_orders) == [1, 2, 4, 4, 4, 4, 4, 4]
        assert not q8.is_abelian

    def test_dihedral_group(self):
        d4 = group_service.dihedral_group(4)
        assert d4.order == 8
        assert sorted(d4.element_orders) == [1, 2, 2, 2, 2, 2, 4, 4]
        assert group_service.are_isomorphic(
            group_service.dihedral_group(3), group_service.symmetric_group(3)
        )

    def test_direct_product(self):
        c6 = group_service.direct_product(
            group_service.cyclic_group(2), group_service.cyclic_group(3)
        )
        assert c6.name == "C2xC3"
        assert group_service.are_isomorphic(c6, group_service.cyclic_group(6))

    def test_permutation_generators(self):
        s3 = group_service.group_from_permutations(3, [[1, 0, 2], [1, 2, 0]])
        assert s3.order == 6
        assert group_service.are_isomorphic(s3, group_service.symmetric_group(3))

    def test_rejects_non_permutation_generator(self):
        with pytest.raises(InvalidTable):
            group_service.group_from_permutations(3, [[0, 0, 1]])

    def test_transposition_and_cycle_generate_s4(self):
        s4 = group_service.group_from_permutations(4, [[1, 0, 2, 3], [1, 2, 3, 0]])
        assert s4.order == 24
        assert group_service.are_isomorphic(s4, group_service.symmetric_group(4))

    def test_klein_four_inside_s4(self):
        v4 = group_service.group_from_permutations(4, [[1, 0, 3, 2], [2, 3, 0, 1]])
        assert v4.order == 4
        assert sorted(v4.element_orders) == [1, 2, 2, 2]

    def test_generated_group_respects_order_cap(self):
        with pytest.raises(GroupTooLarge) as excinfo:
            group_service.group_from_permutations(
                6, [[1, 0, 2, 3, 4, 5], [1, 2, 3, 4, 5, 0]]
            )
        assert excinfo.value.details["order"] == 720

    def test_symmetric_group_respects_order_cap(self):
        with pytest.raises(GroupTooLarge):
            group_service.symmetric_group(6)

    def test_small_groups_table(self, small_groups):
        orders = [g.order for g in small_groups]
        assert orders == [1, 2, 3, 4, 4, 5, 6, 6, 7, 8, 8, 8, 8, 8]
        for i, g in enumerate(small_groups):
            for h in small_groups[:i]:
                assert not group_service.are_isomorphic(g, h)
        assert [g.order for g in group_service.small_groups(4)] == [1, 2, 3, 4, 4]


class TestSubgroups:
    @pytest.mark.parametrize("index", range(14))
    def test_all_subgroups_match_subset_search(self, small_groups, index):
        group = small_groups[index]
        found = group_service.all_subgroups(group)
        assert set(found) == brute_force_subgroups(group)
        assert found == sorted(found, key=lambda s: (len(s), s))

    def test_cyclic_extension_agrees_with_subset_closure(self, small_groups):
        for group in small_groups:
            by_subsets = group_service._subgroups_by_subset_closure(group)
            by_extension = group_service._subgroups_by_cyclic_extension(group)
            assert set(by_subsets) == set(by_extension)

    def test_s3_conjugacy_classes(self):
        s3 = group_service.symmetric_group(3)
        classes = group_service.subgroups_up_to_conjugacy(s3)
        assert [c.order for c in classes] == [1, 2, 3, 6]
        assert [c.class_size for c in classes] == [1, 3, 1, 1]
        assert [c.index for c in classes] == [6, 3, 2, 1]
        assert len(group_service.normal_subgroups(s3)) == 3

    def test_class_sizes_cover_all_subgroups(self, small_groups):
        for group in small_groups:
            classes = group_service.subgroups_up_to_conjugacy(group)
            assert sum(c.class_size for c in classes) == len(
                group_service.all_subgroups(group)
            )

    def test_quotient_group(self):
        c4 = group_service.cyclic_group(4)
        quotient, projection = group_service.quotient_group(c4, [0, 2])
        assert quotient.order == 2
        assert projection.map == (0, 1, 0, 1)
        assert group_service.kernel(projection) == (0, 2)

    def test_quotient_by_non_normal_subgroup(self):
        s3 = group_service.symmetric_group(3)
        classes = group_service.subgroups_up_to_conjugacy(s3)
        with pytest.raises(NotNormal):
            group_service.quotient_group(s3, classes[1].representative)

    def test_subgroup_as_group(self):
        d4 = group_service.dihedral_group(4)
        sub, inclusion = group_service.subgroup_as_group(d4, [0, 1, 2, 3])
        assert group_service.are_isomorphic(sub, group_service.cyclic_group(4))
        assert group_service.hom_predicates(inclusion).injective


class TestCosetActions:
    def test_coset_action_is_a_homomorphism(self, small_groups):
        for group in small_groups:
            if group.order > 5:
                continue
            for cls in group_service.subgroups_up_to_conjugacy(group):
                action = group_service.coset_action(group, cls)
                assert action.degree == cls.index
                hom = group_service.coset_action_hom(action)
                group_service.make_hom(hom.source, hom.target, hom.map)

    def test_centralizer_of_natural_s3_action(self):
        s3 = group_service.symmetric_group(3)
        order_two = group_service.subgroups_up_to_conjugacy(s3)[1]
        action = group_service.coset_action(s3, order_two)
        assert action.image.order == 6
        assert group_service.centralizer_order_in_sym(action.image) == 1

    def test_centralizer_of_regular_action_is_group_order(self, small_groups):
        for group in small_groups:
            if group.order > 6:
                continue
            action = group_service.coset_action(group, [0])
            assert group_service.centralizer_order_in_sym(action.image) == group.order

    @pytest.mark.parametrize(
        "elements,expected",
        [
            ([(0, 1, 2, 3), (1, 0, 3, 2)], 8),
            ([(0, 1, 2, 3), (1, 0, 2, 3)], 4),
            ([(0, 1, 2, 3)], 24),
        ],
    )
    def test_centralizer_of_intransitive_action(self, elements, expected):
        image = PermGroup(4, frozenset(elements))
        assert group_service.centralizer_order_in_sym(image) == expected


class TestHomomorphisms:
    @pytest.mark.parametrize("n,m", [(1, 5), (2, 4), (4, 6), (3, 3), (6, 4)])
    def test_cyclic_hom_count_is_gcd(self, n, m):
        count = group_service.count_homs(
            group_service.cyclic_group(n), group_service.cyclic_group(m)
        )
        assert count == math.gcd(n, m)

    def test_hom_counts_into_and_out_of_s3(self):
        s3 = group_service.symmetric_group(3)
        c2, c3 = group_service.cyclic_group(2), group_service.cyclic_group(3)
        assert group_service.count_homs(c2, s3) == 4
        assert group_service.count_homs(c3, s3) == 3
        assert group_service.count_homs(s3, c2) == 2
        assert group_service.count_homs(s3, s3) == 10

    def test_enumeration_matches_brute_force(self, small_groups, tiny_groups):
        targets = [g for g in small_groups if g.order <= 6]
        for source in tiny_groups:
            for target in targets:
                homs = group_service.enumerate_homs(source, target)
                assert len(homs) == brute_force_hom_count(source, target)
                maps = [h.map for h in homs]
                assert maps == sorted(maps)
                assert len(set(maps)) == len(maps)

    def test_make_hom_rejects_non_homomorphism(self):
        c2, c3 = group_service.cyclic_group(2), group_service.cyclic_group(3)
        with pytest.raises(NotAHomomorphism):
            group_service.make_hom(c2, c3, [0, 1])

    def test_kernel_and_image(self):
        c4, c2 = group_service.cyclic_group(4), group_service.cyclic_group(2)
        trivial = group_service.trivial_hom(c4, c2)
        assert group_service.kernel(trivial) == (0, 1, 2, 3)
        assert group_service.image(trivial) == (0,)
        identity = group_service.identity_hom(c4)
        assert group_service.hom_predicates(identity).isomorphism

    def test_conjugation_is_an_automorphism(self):
        d4 = group_service.dihedral_group(4)
        for k in d4.elements():
            inner = group_service.conjugation(d4, k)
            group_service.make_hom(d4, d4, inner.map)
            assert group_service.hom_predicates(inner).isomorphism

    def test_isomorphism_inverts(self):
        d3 = group_service.dihedral_group(3)
        s3 = group_service.symmetric_group(3)
        iso = group_service.find_isomorphism(d3, s3)
        assert iso is not None
        group_service.make_hom(d3, s3, iso.map)
        round_trip = group_service.compose_homs(iso, group_service.inverse_hom(iso))
        assert round_trip.map == group_service.identity_hom(d3).map

    def test_q8_and_d4_are_not_isomorphic(self):
        assert not group_service.are_isomorphic(
            group_service.quaternion_group(), group_service.dihedral_group(4)
        )
