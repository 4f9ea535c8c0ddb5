"""Schemas module initialization"""

from groupoid_card.schemas.functor import FunctorDocument, FunctorSpec
from groupoid_card.schemas.group import GroupSpec, PermutationGroupSpec
from groupoid_card.schemas.groupoid import (
    GroupoidSpec,
    MorphismSpec,
    SkeletalComponentSpec,
)
from groupoid_card.schemas.relfin import ComponentSpec, RelFinObjectSpec
from groupoid_card.schemas.requests import (
    FunctorCardinalityRequest,
    GLOrderRequest,
    GSetEgfRequest,
    HomCountRequest,
    LovaszRequest,
    RelFinHomRequest,
    RelFinPairRequest,
    RepSeriesRequest,
    TamenessRequest,
)
from groupoid_card.schemas.responses import (
    CardinalityResponse,
    DistinguisherResponse,
    ErrorResponse,
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
)
from groupoid_card.schemas.space import PiFiniteSpaceSpec
from groupoid_card.schemas.structure import StructureSpec

__all__ = [
    "GroupSpec",
    "PermutationGroupSpec",
    "GroupoidSpec",
    "MorphismSpec",
    "SkeletalComponentSpec",
    "FunctorSpec",
    "FunctorDocument",
    "RelFinObjectSpec",
    "ComponentSpec",
    "StructureSpec",
    "PiFiniteSpaceSpec",
    "FunctorCardinalityRequest",
    "GSetEgfRequest",
    "GLOrderRequest",
    "RepSeriesRequest",
    "TamenessRequest",
    "RelFinHomRequest",
    "RelFinPairRequest",
    "HomCountRequest",
    "LovaszRequest",
    "ErrorResponse",
    "CardinalityResponse",
    "FunctorCardinalityResponse",
    "StageResponse",
    "FactorizationResponse",
    "SeriesResponse",
    "GSetCardinalityResponse",
    "GLOrderResponse",
    "TamenessResponse",
    "RelFinHomResponse",
    "RelFinEquivalenceResponse",
    "DistinguisherResponse",
    "HomCountResponse",
    "LovaszResponse",
    "HomotopyCardinalityResponse",
]
