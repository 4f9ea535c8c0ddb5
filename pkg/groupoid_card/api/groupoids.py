from fastapi import APIRouter

from groupoid_card.reports import report_service
from groupoid_card.schemas.functor import FunctorDocument
from groupoid_card.schemas.groupoid import GroupoidSpec
from groupoid_card.schemas.requests import FunctorCardinalityRequest
from groupoid_card.schemas.responses import (
    CardinalityResponse,
    FactorizationResponse,
    FunctorCardinalityResponse,
)

router = APIRouter(tags=["groupoids"])


@router.post("/groupoids/cardinality", response_model=CardinalityResponse)
async def groupoid_cardinality(spec: GroupoidSpec):
    """Σ over isomorphism classes of 1/#vertex group"""
    return report_service.cardinality(spec.to_domain())


@router.post(
    "/groupoids/functor-cardinality", response_model=FunctorCardinalityResponse
)
async def functor_cardinality(request: FunctorCardinalityRequest):
    """Cardinality of the groupoid of functors H → G"""
    return report_service.functor_cardinality(
        request.source.to_domain(), request.target.to_domain(), request.brute
    )


@router.post("/groupoids/factorize", response_model=FactorizationResponse)
async def factorize(document: FunctorDocument):
    """Ternary factorization of a functor with its cardinality checks"""
    return report_service.factorization(document.build())
