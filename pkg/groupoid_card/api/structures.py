from fastapi import APIRouter

from groupoid_card.reports import report_service
from groupoid_card.schemas.requests import HomCountRequest, LovaszRequest
from groupoid_card.schemas.responses import HomCountResponse, LovaszResponse

router = APIRouter(tags=["structures"])


@router.post("/structures/homcount", response_model=HomCountResponse)
async def homcount(request: HomCountRequest):
    return report_service.homcount(
        request.source.to_domain(), request.target.to_domain(), request.injective
    )


@router.post("/structures/lovasz", response_model=LovaszResponse)
async def lovasz(request: LovaszRequest):
    """Decide isomorphism from homomorphism counts"""
    return report_service.lovasz(
        request.first.to_domain(),
        request.second.to_domain(),
        request.bound,
        request.strategy,
    )
