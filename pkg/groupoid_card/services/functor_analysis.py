import logging
from dataclasses import asdict
from typing import Dict, List, Optional, Tuple

from groupoid_card.core.exceptions import (
    InvalidFunctor,
    PreconditionUnmet,
    TheoremViolation,
)
from groupoid_card.models.functor import (
    FunctorClassification,
    GroupoidFunctor,
    OrderVerdict,
    TernaryFactorization,
)
from groupoid_card.models.group import GroupHom
from groupoid_card.models.groupoid import FiniteGroupoid
from groupoid_card.services.groupoid_core import groupoid_service

logger = logging.getLogger(__name__)


class FunctorAnalysisService:
    """Functor predicates, ternary factorization and cardinality order checks"""

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    @staticmethod
    def identity_functor(groupoid: FiniteGroupoid) -> GroupoidFunctor:
        return GroupoidFunctor(
            groupoid,
            groupoid,
            tuple(range(groupoid.num_objects)),
            tuple(range(groupoid.num_morphisms)),
        )

    @staticmethod
    def functor_from_hom(
        hom: GroupHom,
        source: Optional[FiniteGroupoid] = None,
        target: Optional[FiniteGroupoid] = None,
    ) -> GroupoidFunctor:
        """BH → BG induced by φ: H → G, optionally onto given deloopings"""
        source = source or groupoid_service.delooping(hom.source)
        target = target or groupoid_service.delooping(hom.target)
        return GroupoidFunctor(source, target, (0,), hom.map)

    @staticmethod
    def compose_functors(f: GroupoidFunctor, g: GroupoidFunctor) -> GroupoidFunctor:
        """f followed by g"""
        if f.target is not g.source:
            raise InvalidFunctor("functors are not composable")
        return GroupoidFunctor(
            f.source,
            g.target,
            tuple(g.object_map[y] for y in f.object_map),
            tuple(g.morphism_map[m] for m in f.morphism_map),
        )

    # ------------------------------------------------------------------
    # Classification
    # ------------------------------------------------------------------

    def classify(self, functor: GroupoidFunctor) -> FunctorClassification:
        """
        Full, faithful and essentially surjective flags by brute force

        Every ordered pair of source objects is inspected, including pairs
        with an empty hom-set. Essential surjectivity compares isomorphism
        classes of the target, never objects.
        """
        src, tgt = functor.source, functor.target
        full = faithful = True
        for x in range(src.num_objects):
            for y in range(src.num_objects):
                images = [functor.morphism_map[f] for f in src.hom(x, y)]
                distinct = set(images)
                if len(distinct) != len(images):
                    faithful = False
                fx, fy = functor.object_map[x], functor.object_map[y]
                if len(distinct) != len(tgt.hom(fx, fy)):
                    full = False
        hit = {tgt.class_index[y] for y in functor.object_map}
        essentially_surjective = len(hit) == len(tgt.iso_classes)
        return FunctorClassification(full, faithful, essentially_surjective)

    def is_equivalence(self, functor: GroupoidFunctor) -> bool:
        return self.classify(functor).is_equivalence

    # ------------------------------------------------------------------
    # Ternary factorization
    # ------------------------------------------------------------------

    def ternary_factorize(self, functor: GroupoidFunctor) -> TernaryFactorization:
        """
        Factor F: G → H as G → im₂F → im₁F → H

        im₂F has the objects of G and, as morphisms x → y, the classes of
        hom(x, y) under F(f) = F(f′), each held by its least morphism id.
        im₁F is the full subgroupoid of H on the objects isomorphic to some
        F(x). The three stages compose on the nose to F.

        Returns:
            TernaryFactorization with stages (coimage, middle, image)
        """
        src, tgt = functor.source, functor.target

        class_of: List[int] = [0] * src.num_morphisms
        reps: List[int] = []
        seen: Dict[Tuple[int, int, int], int] = {}
        for f in range(src.num_morphisms):
            key = (src.src[f], src.dst[f], functor.morphism_map[f])
            if key not in seen:
                seen[key] = len(reps)
                reps.append(f)
            class_of[f] = seen[key]

        im2 = FiniteGroupoid(
            src.objects,
            [src.src[f] for f in reps],
            [src.dst[f] for f in reps],
            [class_of[e] for e in src.identities],
            lambda a, b: class_of[src.then(reps[a], reps[b])],
            morphism_labels=[src.morphism_labels[f] for f in reps],
            name="im2",
        )
        coimage = GroupoidFunctor(
            src, im2, tuple(range(src.num_objects)), tuple(class_of)
        )

        hit = {tgt.class_index[y] for y in functor.object_map}
        members = [y for y in range(tgt.num_objects) if tgt.class_index[y] in hit]
        im1, ambient = groupoid_service.restrict(tgt, members)
        im1.name = "im1"
        object_position = {y: i for i, y in enumerate(members)}
        morphism_position = {m: i for i, m in enumerate(ambient)}

        middle = GroupoidFunctor(
            im2,
            im1,
            tuple(object_position[y] for y in functor.object_map),
            tuple(morphism_position[functor.morphism_map[f]] for f in reps),
        )
        image = GroupoidFunctor(im1, tgt, tuple(members), tuple(ambient))
        logger.debug(
            "factorized through im2 (%d morphisms) and im1 (%d objects)",
            len(reps),
            len(members),
        )
        return TernaryFactorization(coimage, middle, image)

    def recompose(self, factorization: TernaryFactorization) -> GroupoidFunctor:
        return self.compose_functors(
            self.compose_functors(factorization.coimage, factorization.middle),
            factorization.image,
        )

    # ------------------------------------------------------------------
    # Cardinality order and equivalence theorems
    # ------------------------------------------------------------------

    def check_order_props(self, functor: GroupoidFunctor) -> OrderVerdict:
        """
        A full functor cannot increase cardinality; an essentially surjective
        faithful one cannot decrease it

        Returns:
            OrderVerdict with both cardinalities and the clauses that fired

        Raises:
            TheoremViolation: If a fired clause fails
        """
        kinds = self.classify(functor)
        source_card = groupoid_service.groupoid_cardinality(functor.source)
        target_card = groupoid_service.groupoid_cardinality(functor.target)
        full_clause = kinds.full
        faithful_clause = kinds.in_f
        holds = (not full_clause or source_card <= target_card) and (
            not faithful_clause or source_card >= target_card
        )
        verdict = OrderVerdict(
            source_card, target_card, full_clause, faithful_clause, holds
        )
        logger.info(
            "order check: |source|=%s |target|=%s full=%s faithful+es=%s",
            source_card,
            target_card,
            full_clause,
            faithful_clause,
        )
        if not holds:
            raise TheoremViolation(
                "cardinality order fails for a classified functor",
                {"source_card": str(source_card), "target_card": str(target_card)},
            )
        return verdict

    def decide_equivalence_via_card(self, functor: GroupoidFunctor) -> bool:
        """
        Decide that F is an equivalence from equal cardinalities

        Applies when |source| = |target| and F is essentially surjective and
        full, essentially surjective and faithful, or fully faithful.

        Returns:
            True, after cross-checking with the brute-force equivalence tests

        Raises:
            PreconditionUnmet: If the cardinalities differ or no clause applies
            TheoremViolation: If the brute-force check disagrees
        """
        kinds = self.classify(functor)
        source_card = groupoid_service.groupoid_cardinality(functor.source)
        target_card = groupoid_service.groupoid_cardinality(functor.target)
        if source_card != target_card:
            raise PreconditionUnmet(
                "source and target cardinalities differ",
                {"source_card": str(source_card), "target_card": str(target_card)},
            )
        if not (kinds.in_e or kinds.in_f or kinds.in_m):
            raise PreconditionUnmet(
                "functor is neither essentially surjective and full, "
                "essentially surjective and faithful, nor fully faithful"
            )
        if not kinds.is_equivalence or not groupoid_service.is_equivalent(
            functor.source, functor.target
        ):
            raise TheoremViolation(
                "equal cardinalities did not force an equivalence",
                {"classification": asdict(kinds)},
            )
        logger.info("equivalence decided from cardinality %s", source_card)
        return True

    def mutual_functor_equivalence(
        self, forward: GroupoidFunctor, backward: GroupoidFunctor
    ) -> bool:
        """
        Functors G → H and H → G that are both full, or both essentially
        surjective and faithful, are both equivalences

        Raises:
            InvalidFunctor: If the functors do not run in opposite directions
            PreconditionUnmet: If neither shared clause applies
            TheoremViolation: If either functor fails the brute-force check
        """
        if (
            forward.source is not backward.target
            or forward.target is not backward.source
        ):
            raise InvalidFunctor("functors must run G → H and H → G")
        a, b = self.classify(forward), self.classify(backward)
        if not ((a.full and b.full) or (a.in_f and b.in_f)):
            raise PreconditionUnmet(
                "functors are neither both full nor both essentially surjective "
                "and faithful"
            )
        if not (a.is_equivalence and b.is_equivalence):
            raise TheoremViolation("mutual functors are not both equivalences")
        return True


# Create a singleton instance
functor_service = FunctorAnalysisService()
