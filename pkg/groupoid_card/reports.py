"""
Response builders shared by the HTTP routers and the command line

Each method runs the relevant services on domain values and returns the
pydantic response model that both front doors serialise.
"""
from typing import Optional, Sequence

from groupoid_card.core.exceptions import TheoremViolation
from groupoid_card.models.functor import GroupoidFunctor
from groupoid_card.models.group import FiniteGroup
from groupoid_card.models.groupoid import FiniteGroupoid
from groupoid_card.models.relfin import RelFinObject
from groupoid_card.models.rep import RepComponentParams
from groupoid_card.models.space import PiFiniteSpace
from groupoid_card.models.structure import RelationalStructure
from groupoid_card.schemas.relfin import RelFinObjectSpec
from groupoid_card.schemas.responses import (
    CardinalityResponse,
    DistinguisherResponse,
    FactorizationResponse,
    FunctorCardinalityResponse,
    GLOrderResponse,
    GSetCardinalityResponse,
    HomCountResponse,
    HomotopyCardinalityResponse,
    LovaszResponse,
    RelFinEquivalenceResponse,
    RelFinHomResponse,
    SeriesResponse,
    StageResponse,
    TamenessResponse,
    rational,
)
from groupoid_card.schemas.structure import StructureSpec
from groupoid_card.services import (
    functor_service,
    groupoid_service,
    homotopy_service,
    relational_service,
    relfin_service,
    series_service,
)


class ReportService:
    """Turns service results into wire responses"""

    # ------------------------------------------------------------------
    # Groupoids and functors
    # ------------------------------------------------------------------

    @staticmethod
    def cardinality(groupoid: FiniteGroupoid) -> CardinalityResponse:
        return CardinalityResponse(
            cardinality=rational(groupoid_service.groupoid_cardinality(groupoid)),
            classes=len(groupoid.iso_classes),
            vertex_orders=[groupoid.vertex_order(c[0]) for c in groupoid.iso_classes],
        )

    @staticmethod
    def functor_cardinality(
        source: FiniteGroupoid, target: FiniteGroupoid, brute: bool = False
    ) -> FunctorCardinalityResponse:
        """
        |G^H| by the product formula, optionally against the built groupoid

        Raises:
            SizeLimit: If brute force would enumerate too many functors
            TheoremViolation: If the two values differ
        """
        exact = groupoid_service.functor_groupoid_cardinality(source, target)
        if not brute:
            return FunctorCardinalityResponse(cardinality=rational(exact))
        built = groupoid_service.functor_groupoid(source, target)
        counted = groupoid_service.groupoid_cardinality(built)
        if counted != exact:
            raise TheoremViolation(
                "functor groupoid cardinality disagrees with the product formula",
                {"formula": rational(exact), "brute_force": rational(counted)},
            )
        return FunctorCardinalityResponse(
            cardinality=rational(exact),
            brute_force=rational(counted),
            functors=built.num_objects,
        )

    @staticmethod
    def factorization(functor: GroupoidFunctor) -> FactorizationResponse:
        """
        Classify the three factorization stages and run the order checks

        Raises:
            TheoremViolation: If an order or image inequality fails
        """
        stages = functor_service.ternary_factorize(functor)
        named = (
            ("coimage", stages.coimage),
            ("middle", stages.middle),
            ("image", stages.image),
        )
        order = functor_service.check_order_props(functor)
        postnikov = homotopy_service.postnikov_images_n12(functor)
        return FactorizationResponse(
            source_cardinality=rational(order.source_card),
            target_cardinality=rational(order.target_card),
            stages=[
                StageResponse.from_classification(
                    name,
                    functor_service.classify(stage),
                    groupoid_service.groupoid_cardinality(stage.target),
                )
                for name, stage in named
            ],
            recomposes=functor_service.recompose(stages) == functor,
            is_equivalence=functor_service.is_equivalence(functor),
            order_holds=order.holds,
            postnikov_n1_holds=postnikov.n1_holds,
            postnikov_n2_holds=postnikov.n2_holds,
        )

    # ------------------------------------------------------------------
    # Series
    # ------------------------------------------------------------------

    @staticmethod
    def gset_egf(
        group: FiniteGroup, truncation: Optional[int] = None
    ) -> SeriesResponse:
        return SeriesResponse.from_series(series_service.gset_egf(group, truncation))

    @staticmethod
    def gset_cardinality(groupoid: FiniteGroupoid) -> GSetCardinalityResponse:
        result = series_service.gset_groupoid_exponent(groupoid)
        return GSetCardinalityResponse(
            exponent=rational(result.exponent), value=result.value
        )

    @staticmethod
    def gl_order(n: int, field_size: int) -> GLOrderResponse:
        return GLOrderResponse(
            n=n,
            field_size=field_size,
            order=series_service.gl_order(n, field_size),
            borel_bound=series_service.borel_order(n, field_size - 1),
        )

    @staticmethod
    def rep_series(
        params_list: Sequence[RepComponentParams], truncation: Optional[int] = None
    ) -> SeriesResponse:
        return SeriesResponse.from_series(
            series_service.rep_groupoid_series(params_list, truncation)
        )

    @staticmethod
    def tameness(
        params: RepComponentParams, truncation: Optional[int] = None
    ) -> TamenessResponse:
        report = series_service.tameness_bound_check(params, truncation)
        return TamenessResponse(
            partial_sum=rational(report.partial_sum),
            borel_bound=rational(report.borel_bound),
            holds=report.holds,
        )

    # ------------------------------------------------------------------
    # RelFin
    # ------------------------------------------------------------------

    @staticmethod
    def relfin_hom(
        source: RelFinObject, target: RelFinObject, decompose: bool = True
    ) -> RelFinHomResponse:
        """
        Hom and faithful cardinalities, plus the E-quotient decomposition
        when requested

        Raises:
            BaseMismatch: If the objects live over different bases
            GroupTooLarge: If decomposing exceeds RELFIN_MAX_ORDER
        """
        response = RelFinHomResponse(
            hom_cardinality=rational(
                relfin_service.hom_groupoid_cardinality(source, target)
            ),
            faithful_cardinality=rational(
                relfin_service.faithful_hom_cardinality(source, target)
            ),
        )
        if decompose:
            check = relfin_service.verify_factor_decomposition(source, target)
            response.decomposition_lhs = rational(check.lhs)
            response.decomposition_rhs = rational(check.rhs)
            response.decomposition_holds = check.equal
        return response

    @staticmethod
    def relfin_equivalence(
        first: RelFinObject, second: RelFinObject
    ) -> RelFinEquivalenceResponse:
        decision = relfin_service.decide_equivalence(first, second)
        return RelFinEquivalenceResponse(
            equivalent=decision.equivalent,
            matching=[[i, j] for i, j in sorted(decision.matching.items())],
        )

    @staticmethod
    def distinguish(
        first: RelFinObject, second: RelFinObject, exhaustive: bool = False
    ) -> DistinguisherResponse:
        result = relfin_service.counting_distinguisher(
            first, second, exhaustive=exhaustive
        )
        if not result.found:
            return DistinguisherResponse(
                found=False, probes_checked=result.probes_checked
            )
        return DistinguisherResponse(
            found=True,
            witness=RelFinObjectSpec.from_domain(result.witness),
            lhs=rational(result.lhs),
            rhs=rational(result.rhs),
            probes_checked=result.probes_checked,
        )

    # ------------------------------------------------------------------
    # Relational structures and spaces
    # ------------------------------------------------------------------

    @staticmethod
    def homcount(
        source: RelationalStructure,
        target: RelationalStructure,
        injective: bool = False,
    ) -> HomCountResponse:
        if injective:
            count = relational_service.count_injective_homs(source, target)
        else:
            count = relational_service.count_homs(source, target)
        return HomCountResponse(count=count, injective=injective)

    @staticmethod
    def lovasz(
        first: RelationalStructure,
        second: RelationalStructure,
        bound: Optional[int] = None,
        strategy: str = "exhaustive",
    ) -> LovaszResponse:
        verdict = relational_service.lovasz_iso_test(first, second, bound, strategy)
        return LovaszResponse(
            distinguished=verdict.distinguished,
            witness=(
                StructureSpec.from_domain(verdict.witness)
                if verdict.witness is not None
                else None
            ),
            hom_a=verdict.hom_a,
            hom_b=verdict.hom_b,
            isomorphic=bool(verdict.isomorphic),
            probes_checked=verdict.probes_checked,
        )

    @staticmethod
    def homotopy_cardinality(space: PiFiniteSpace) -> HomotopyCardinalityResponse:
        return HomotopyCardinalityResponse(
            cardinality=rational(homotopy_service.homotopy_cardinality(space)),
            components=len(space.components),
        )


# Create a singleton instance
report_service = ReportService()
