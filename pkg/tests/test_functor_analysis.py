from fractions import Fraction

import pytest

from groupoid_card.core.exceptions import InvalidFunctor, PreconditionUnmet
from groupoid_card.models.functor import GroupoidFunctor
from groupoid_card.services import (
    functor_service,
    group_service,
    groupoid_service,
    homotopy_service,
)
from tests.oracles import random_groupoid


@pytest.fixture
def c2():
    return group_service.cyclic_group(2)


@pytest.fixture
def c4():
    return group_service.cyclic_group(4)


def _collapse(n: int) -> GroupoidFunctor:
    """codiscrete(n) → point"""
    source = groupoid_service.codiscrete(n)
    return GroupoidFunctor(
        source, groupoid_service.discrete(1), (0,) * n, (0,) * source.num_morphisms
    )


class TestClassify:
    def test_trivial_hom(self, c4, c2):
        functor = functor_service.functor_from_hom(group_service.trivial_hom(c4, c2))
        kinds = functor_service.classify(functor)
        assert (kinds.full, kinds.faithful, kinds.essentially_surjective) == (
            False,
            False,
            True,
        )

    def test_injective_hom(self, c2, c4):
        inclusion = group_service.make_hom(c2, c4, [0, 2])
        kinds = functor_service.classify(functor_service.functor_from_hom(inclusion))
        assert kinds.faithful and not kinds.full
        assert kinds.in_f

    def test_surjective_hom(self, c4, c2):
        projection = group_service.make_hom(c4, c2, [0, 1, 0, 1])
        kinds = functor_service.classify(functor_service.functor_from_hom(projection))
        assert kinds.full and not kinds.faithful
        assert kinds.in_e

    def test_empty_hom_sets_count(self):
        # hom(0, 1) is empty but hom(F0, F1) is not
        functor = GroupoidFunctor(
            groupoid_service.discrete(2), groupoid_service.discrete(1), (0, 0), (0, 0)
        )
        kinds = functor_service.classify(functor)
        assert kinds.faithful and kinds.essentially_surjective
        assert not kinds.full

    def test_essential_surjectivity_is_up_to_isomorphism(self):
        functor = GroupoidFunctor(
            groupoid_service.discrete(1), groupoid_service.codiscrete(2), (1,), (3,)
        ).validate()
        assert functor_service.is_equivalence(functor)


class TestComposition:
    def test_compose_with_identity(self, c4, c2):
        functor = functor_service.functor_from_hom(group_service.trivial_hom(c4, c2))
        composed = functor_service.compose_functors(
            functor_service.identity_functor(functor.source), functor
        )
        assert composed == functor

    def test_rejects_non_composable(self, c2):
        f = functor_service.identity_functor(groupoid_service.delooping(c2))
        g = functor_service.identity_functor(groupoid_service.delooping(c2))
        with pytest.raises(InvalidFunctor):
            functor_service.compose_functors(f, g)

    def test_validate_rejects_broken_composition(self, c2):
        b2 = groupoid_service.delooping(c2)
        b3 = groupoid_service.delooping(group_service.cyclic_group(3))
        with pytest.raises(InvalidFunctor):
            GroupoidFunctor(b2, b3, (0,), (0, 1)).validate()


class TestTernaryFactorization:
    @pytest.mark.slow
    def test_stage_kinds(self, rng):
        for _ in range(200):
            source = random_groupoid(rng, max_blocks=1)
            target = random_groupoid(rng, max_blocks=2)
            functor = rng.choice(groupoid_service.enumerate_functors(source, target))
            stages = functor_service.ternary_factorize(functor)
            assert functor_service.recompose(stages) == functor

            coimage = functor_service.classify(stages.coimage)
            middle = functor_service.classify(stages.middle)
            image = functor_service.classify(stages.image)
            assert coimage.in_e
            assert middle.in_f
            assert image.in_m
            stages.im2.validate()
            stages.im1.validate()

    def test_trivial_hom_images(self, c4, c2):
        functor = functor_service.functor_from_hom(group_service.trivial_hom(c4, c2))
        stages = functor_service.ternary_factorize(functor)
        assert groupoid_service.groupoid_cardinality(stages.im2) == 1
        assert groupoid_service.groupoid_cardinality(stages.im1) == Fraction(1, 2)

    def test_image_drops_unreached_classes(self, c2):
        source = groupoid_service.delooping(c2)
        target = groupoid_service.coproduct(
            groupoid_service.delooping(c2), groupoid_service.discrete(1)
        )
        functor = GroupoidFunctor(source, target, (0,), (0, 1)).validate()
        stages = functor_service.ternary_factorize(functor)
        assert stages.im1.num_objects == 1
        assert not functor_service.classify(stages.image).essentially_surjective


class TestCardinalityOrder:
    @pytest.mark.slow
    def test_order_holds_for_random_functors(self, rng):
        for _ in range(200):
            source = random_groupoid(rng, max_blocks=1)
            target = random_groupoid(rng, max_blocks=2)
            functor = rng.choice(groupoid_service.enumerate_functors(source, target))
            verdict = functor_service.check_order_props(functor)
            assert verdict.holds
            report = homotopy_service.postnikov_images_n12(functor)
            assert report.n1_holds and report.n2_holds

    def test_full_functor_does_not_increase_cardinality(self, c4, c2):
        projection = group_service.make_hom(c4, c2, [0, 1, 0, 1])
        verdict = functor_service.check_order_props(
            functor_service.functor_from_hom(projection)
        )
        assert verdict.full_clause and not verdict.faithful_clause
        assert verdict.source_card == Fraction(1, 4)
        assert verdict.target_card == Fraction(1, 2)

    def test_decide_equivalence_from_cardinality(self):
        assert functor_service.decide_equivalence_via_card(_collapse(3))

    def test_decide_equivalence_needs_equal_cardinalities(self, c4, c2):
        functor = functor_service.functor_from_hom(group_service.trivial_hom(c4, c2))
        with pytest.raises(PreconditionUnmet):
            functor_service.decide_equivalence_via_card(functor)

    def test_mutual_full_functors(self):
        forward = _collapse(2)
        backward = GroupoidFunctor(forward.target, forward.source, (0,), (0,))
        assert functor_service.mutual_functor_equivalence(forward, backward)

    def test_mutual_functors_must_run_both_ways(self):
        forward = _collapse(2)
        with pytest.raises(InvalidFunctor):
            functor_service.mutual_functor_equivalence(forward, forward)

    def test_equal_cardinality_without_a_clause(self, c2):
        doubled = groupoid_service.coproduct(
            groupoid_service.delooping(c2), groupoid_service.delooping(c2)
        )
        functor = GroupoidFunctor(
            doubled, groupoid_service.discrete(1), (0, 0), (0,) * 4
        ).validate()
        with pytest.raises(PreconditionUnmet):
            functor_service.decide_equivalence_via_card(functor)
        assert not groupoid_service.is_equivalent(doubled, functor.target)

    @pytest.mark.slow
    def test_cardinality_decision_matches_brute_force(self, rng):
        for _ in range(50):
            source = random_groupoid(rng, max_blocks=1)
            target = groupoid_service.product(groupoid_service.codiscrete(2), source)
            for functor in groupoid_service.enumerate_functors(source, target)[:20]:
                kinds = functor_service.classify(functor)
                if kinds.in_e or kinds.in_f or kinds.in_m:
                    assert functor_service.decide_equivalence_via_card(functor)
                    assert functor_service.is_equivalence(functor)
                else:
                    with pytest.raises(PreconditionUnmet):
                        functor_service.decide_equivalence_via_card(functor)
                    assert not functor_service.is_equivalence(functor)
            assert groupoid_service.is_equivalent(source, target)

    @pytest.mark.slow
    def test_mutual_functors_match_brute_force(self, rng):
        for _ in range(30):
            first = random_groupoid(rng, max_blocks=1)
            second = groupoid_service.product(groupoid_service.codiscrete(2), first)
            forwards = groupoid_service.enumerate_functors(first, second)[:8]
            backwards = groupoid_service.enumerate_functors(second, first)[:8]
            for forward in forwards:
                a = functor_service.classify(forward)
                for backward in backwards:
                    b = functor_service.classify(backward)
                    if (a.full and b.full) or (a.in_f and b.in_f):
                        assert functor_service.mutual_functor_equivalence(
                            forward, backward
                        )
                        assert functor_service.is_equivalence(forward)
                        assert functor_service.is_equivalence(backward)
                    else:
                        with pytest.raises(PreconditionUnmet):
                            functor_service.mutual_functor_equivalence(
                                forward, backward
                            )


class TestFactorizationUniqueness:
    def test_images_survive_precomposing_an_equivalence(self, rng):
        for _ in range(20):
            source = random_groupoid(rng, max_blocks=1)
            target = random_groupoid(rng, max_order=4)
            functor = rng.choice(groupoid_service.enumerate_functors(source, target))
            representatives = [members[0] for members in source.iso_classes]
            skeleton, ambient = groupoid_service.restrict(source, representatives)
            inclusion = GroupoidFunctor(
                skeleton, source, tuple(sorted(representatives)), ambient
            ).validate()
            assert functor_service.is_equivalence(inclusion)

            full = functor_service.ternary_factorize(functor)
            restricted = functor_service.ternary_factorize(
                functor_service.compose_functors(inclusion, functor)
            )
            assert groupoid_service.is_equivalent(full.im2, restricted.im2)
            assert groupoid_service.is_equivalent(full.im1, restricted.im1)

    def test_repeated_factorization_is_stable(self, rng):
        for _ in range(20):
            source = random_groupoid(rng, max_blocks=1)
            target = random_groupoid(rng, max_order=4)
            functor = rng.choice(groupoid_service.enumerate_functors(source, target))
            first = functor_service.ternary_factorize(functor)
            second = functor_service.ternary_factorize(functor)
            assert groupoid_service.is_equivalent(first.im2, second.im2)
            assert groupoid_service.is_equivalent(first.im1, second.im1)
