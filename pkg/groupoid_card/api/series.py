from fastapi import APIRouter

from groupoid_card.reports import report_service
from groupoid_card.schemas.groupoid import GroupoidSpec
from groupoid_card.schemas.requests import (
    GLOrderRequest,
    GSetEgfRequest,
    RepSeriesRequest,
    TamenessRequest,
)
from groupoid_card.schemas.responses import (
    GLOrderResponse,
    GSetCardinalityResponse,
    SeriesResponse,
    TamenessResponse,
)

router = APIRouter(tags=["series"])


@router.post("/series/gset-egf", response_model=SeriesResponse)
async def gset_egf(request: GSetEgfRequest):
    """Generating function of the groupoid of finite G-sets"""
    return report_service.gset_egf(request.group.to_domain(), request.truncation)


@router.post("/series/gset-card", response_model=GSetCardinalityResponse)
async def gset_cardinality(spec: GroupoidSpec):
    """Cardinality of FinSet^G as an exact exponent of e"""
    return report_service.gset_cardinality(spec.to_domain())


@router.post("/series/gl-order", response_model=GLOrderResponse)
async def gl_order(request: GLOrderRequest):
    return report_service.gl_order(request.n, request.field_size)


@router.post("/series/rep-series", response_model=SeriesResponse)
async def rep_series(request: RepSeriesRequest):
    """Product of Φ_V over the given irreducible components"""
    return report_service.rep_series(request.components, request.truncation)


@router.post("/series/tameness", response_model=TamenessResponse)
async def tameness(request: TamenessRequest):
    return report_service.tameness(request.component, request.truncation)
