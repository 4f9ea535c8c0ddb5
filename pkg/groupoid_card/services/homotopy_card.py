import logging
from fractions import Fraction

from groupoid_card.core.exceptions import TheoremViolation, ValidationError
from groupoid_card.models.functor import GroupoidFunctor
from groupoid_card.models.groupoid import FiniteGroupoid
from groupoid_card.models.space import CorollaryReport, PiFiniteSpace, PostnikovReport
from groupoid_card.services.functor_analysis import functor_service
from groupoid_card.services.groupoid_core import groupoid_service

logger = logging.getLogger(__name__)


class HomotopyService:
    """Homotopy cardinality of π-finite data and the groupoid-level Postnikov bounds"""

    @staticmethod
    def homotopy_cardinality(space: PiFiniteSpace) -> Fraction:
        """Σ over components of Π_k (#π_k)^{(−1)^k}"""
        total = Fraction(0)
        for orders in space.components:
            term = Fraction(1)
            for k, order in enumerate(orders, start=1):
                term = term * order if k % 2 == 0 else term / order
            total += term
        return total

    @staticmethod
    def groupoid_to_pifinite(groupoid: FiniteGroupoid) -> PiFiniteSpace:
        """One component per isomorphism class, with π₁ the vertex group"""
        return PiFiniteSpace.build(
            [[groupoid.vertex_order(c[0])] for c in groupoid.iso_classes]
        )

    @staticmethod
    def pifinite_coproduct(x: PiFiniteSpace, y: PiFiniteSpace) -> PiFiniteSpace:
        return PiFiniteSpace(x.components + y.components)

    @staticmethod
    def append_level(
        space: PiFiniteSpace, component: int, order: int
    ) -> PiFiniteSpace:
        """Add a homotopy group of the given order above the top of a component"""
        if not 0 <= component < len(space.components):
            raise ValidationError(
                f"component {component} out of range", {"component": component}
            )
        components = list(space.components)
        components[component] = components[component] + (order,)
        return PiFiniteSpace(tuple(components))

    def postnikov_images_n12(self, functor: GroupoidFunctor) -> PostnikovReport:
        """
        Cardinalities of the source, im₂F, im₁F and the target

        Raises:
            TheoremViolation: If |im₁F| > |target| or |im₂F| < |im₁F|
        """
        stages = functor_service.ternary_factorize(functor)
        source_card = groupoid_service.groupoid_cardinality(functor.source)
        im2_card = groupoid_service.groupoid_cardinality(stages.im2)
        im1_card = groupoid_service.groupoid_cardinality(stages.im1)
        target_card = groupoid_service.groupoid_cardinality(functor.target)
        report = PostnikovReport(
            source_card,
            im2_card,
            im1_card,
            target_card,
            im1_card <= target_card,
            im2_card >= im1_card,
        )
        logger.info(
            "postnikov images: |im2|=%s |im1|=%s |target|=%s",
            im2_card,
            im1_card,
            target_card,
        )
        if not (report.n1_holds and report.n2_holds):
            raise TheoremViolation(
                "image cardinalities are out of order",
                {
                    "im2": str(im2_card),
                    "im1": str(im1_card),
                    "target": str(target_card),
                },
            )
        return report

    def postnikov_corollary(self, functor: GroupoidFunctor) -> CorollaryReport:
        """
        Essentially surjective and faithful gives |source| ≥ |target|; fully
        faithful gives |source| ≤ |target|

        Raises:
            TheoremViolation: If a fired clause fails
        """
        kinds = functor_service.classify(functor)
        source_card = groupoid_service.groupoid_cardinality(functor.source)
        target_card = groupoid_service.groupoid_cardinality(functor.target)
        even_clause = kinds.in_f
        odd_clause = kinds.in_m
        holds = (not even_clause or source_card >= target_card) and (
            not odd_clause or source_card <= target_card
        )
        if not holds:
            raise TheoremViolation(
                "truncated connected functor breaks the cardinality bound",
                {"source_card": str(source_card), "target_card": str(target_card)},
            )
        return CorollaryReport(source_card, target_card, even_clause, odd_clause, holds)


# Create a singleton instance
homotopy_service = HomotopyService()
