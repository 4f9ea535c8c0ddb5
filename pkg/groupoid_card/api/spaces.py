from fastapi import APIRouter

from groupoid_card.reports import report_service
from groupoid_card.schemas.responses import HomotopyCardinalityResponse
from groupoid_card.schemas.space import PiFiniteSpaceSpec

router = APIRouter(tags=["spaces"])


@router.post("/spaces/cardinality", response_model=HomotopyCardinalityResponse)
async def homotopy_cardinality(spec: PiFiniteSpaceSpec):
    """Σ over components of Π_k (#π_k)^{(−1)^k}"""
    return report_service.homotopy_cardinality(spec.to_domain())
