from typing import List, Literal, Optional

from pydantic import BaseModel, Field

from groupoid_card.models.rep import RepComponentParams
from groupoid_card.schemas.group import GroupSpec
from groupoid_card.schemas.groupoid import GroupoidSpec
from groupoid_card.schemas.relfin import RelFinObjectSpec
from groupoid_card.schemas.structure import StructureSpec


class FunctorCardinalityRequest(BaseModel):
    """Schema for computing |G^H|"""

    source: GroupoidSpec = Field(..., description="H")
    target: GroupoidSpec = Field(..., description="G")
    brute: bool = Field(False, description="Also build G^H explicitly")


class GSetEgfRequest(BaseModel):
    """Schema for the generating function of finite G-sets"""

    group: GroupSpec
    truncation: Optional[int] = Field(None, ge=0)


class GLOrderRequest(BaseModel):
    """Schema for #GL_n over the field with Q elements"""

    n: int = Field(..., ge=0)
    field_size: int = Field(..., ge=2, description="Q, a prime power")


class RepSeriesRequest(BaseModel):
    """Schema for Π Φ_V over irreducible components"""

    components: List[RepComponentParams] = Field(default_factory=list)
    truncation: Optional[int] = Field(None, ge=0)


class TamenessRequest(BaseModel):
    """Schema for the partial-sum tameness comparison of one component"""

    component: RepComponentParams
    truncation: Optional[int] = Field(None, ge=0)


class RelFinHomRequest(BaseModel):
    """Schema for |RelFin(S, F)|"""

    source: RelFinObjectSpec
    target: RelFinObjectSpec
    decompose: bool = Field(True, description="Also check the E-quotient sum")


class RelFinPairRequest(BaseModel):
    """Schema for comparing two RelFin objects over one base"""

    first: RelFinObjectSpec
    second: RelFinObjectSpec
    exhaustive: bool = Field(False, description="Probe the small-groups table too")


class HomCountRequest(BaseModel):
    """Schema for hom(C, A)"""

    source: StructureSpec
    target: StructureSpec
    injective: bool = False


class LovaszRequest(BaseModel):
    """Schema for the homomorphism-counting isomorphism test"""

    first: StructureSpec
    second: StructureSpec
    bound: Optional[int] = Field(None, ge=0)
    strategy: Literal["exhaustive", "quotients"] = "exhaustive"
