from fastapi import APIRouter

from groupoid_card.reports import report_service
from groupoid_card.schemas.requests import RelFinHomRequest, RelFinPairRequest
from groupoid_card.schemas.responses import (
    DistinguisherResponse,
    RelFinEquivalenceResponse,
    RelFinHomResponse,
)

router = APIRouter(tags=["relfin"])


@router.post("/relfin/hom", response_model=RelFinHomResponse)
async def relfin_hom(request: RelFinHomRequest):
    """|RelFin(S, F)|, its faithful part and the E-quotient decomposition"""
    return report_service.relfin_hom(
        request.source.to_domain(), request.target.to_domain(), request.decompose
    )


@router.post("/relfin/equivalence", response_model=RelFinEquivalenceResponse)
async def relfin_equivalence(request: RelFinPairRequest):
    return report_service.relfin_equivalence(
        request.first.to_domain(), request.second.to_domain()
    )


@router.post("/relfin/distinguish", response_model=DistinguisherResponse)
async def relfin_distinguish(request: RelFinPairRequest):
    """First probe whose hom cardinalities into the two objects differ"""
    return report_service.distinguish(
        request.first.to_domain(), request.second.to_domain(), request.exhaustive
    )
