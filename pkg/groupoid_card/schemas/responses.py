from fractions import Fraction
from typing import List, Optional

from pydantic import BaseModel, Field

from groupoid_card.models.functor import FunctorClassification
from groupoid_card.models.series import RationalSeries
from groupoid_card.schemas.relfin import RelFinObjectSpec
from groupoid_card.schemas.structure import StructureSpec


def rational(value: Fraction) -> str:
    """Lowest-terms p/q text; integers print without a denominator"""
    return str(Fraction(value))


class ErrorResponse(BaseModel):
    """Schema for error responses"""

    error: str
    details: Optional[dict | str] = None


class CardinalityResponse(BaseModel):
    """Schema for a groupoid cardinality"""

    cardinality: str = Field(..., description="Exact rational as p/q")
    classes: int = Field(..., ge=0, description="Number of isomorphism classes")
    vertex_orders: List[int] = Field(
        default_factory=list, description="Vertex-group order per class"
    )


class FunctorCardinalityResponse(BaseModel):
    """Schema for the cardinality of a functor groupoid G^H"""

    cardinality: str
    brute_force: Optional[str] = Field(
        None, description="Cardinality of the explicitly built functor groupoid"
    )
    functors: Optional[int] = Field(
        None, ge=0, description="Number of functors H → G"
    )


class StageResponse(BaseModel):
    """Schema for one stage of a ternary factorization"""

    name: str
    full: bool
    faithful: bool
    essentially_surjective: bool
    target_cardinality: str

    @classmethod
    def from_classification(
        cls, name: str, kinds: FunctorClassification, target_card: Fraction
    ) -> "StageResponse":
        return cls(
            name=name,
            full=kinds.full,
            faithful=kinds.faithful,
            essentially_surjective=kinds.essentially_surjective,
            target_cardinality=rational(target_card),
        )


class FactorizationResponse(BaseModel):
    """Schema for a ternary factorization and its cardinality checks"""

    source_cardinality: str
    target_cardinality: str
    stages: List[StageResponse]
    recomposes: bool
    is_equivalence: bool
    order_holds: bool
    postnikov_n1_holds: bool
    postnikov_n2_holds: bool


class SeriesResponse(BaseModel):
    """Schema for a truncated power series"""

    truncation: int = Field(..., ge=0)
    coeffs: List[str] = Field(..., description="Coefficient of x^n as p/q")
    text: str

    @classmethod
    def from_series(cls, series: RationalSeries) -> "SeriesResponse":
        return cls(
            truncation=series.truncation,
            coeffs=[rational(c) for c in series.coeffs],
            text=str(series),
        )


class GSetCardinalityResponse(BaseModel):
    """Schema for the cardinality of the groupoid of finite G-sets"""

    exponent: str = Field(..., description="Exact exponent of e")
    value: float


class GLOrderResponse(BaseModel):
    """Schema for #GL_n over a finite field"""

    n: int
    field_size: int
    order: int
    borel_bound: int = Field(
        ..., description="Order of the invertible block upper triangular matrices"
    )


class TamenessResponse(BaseModel):
    """Schema for the partial-sum tameness comparison"""

    partial_sum: str
    borel_bound: str
    holds: bool


class RelFinHomResponse(BaseModel):
    """Schema for hom-groupoid cardinalities in the slice over a base group"""

    hom_cardinality: str
    faithful_cardinality: str
    decomposition_lhs: Optional[str] = None
    decomposition_rhs: Optional[str] = None
    decomposition_holds: Optional[bool] = None


class RelFinEquivalenceResponse(BaseModel):
    """Schema for an equivalence decision between RelFin objects"""

    equivalent: bool
    matching: List[List[int]] = Field(
        default_factory=list, description="[source component, target component]"
    )


class DistinguisherResponse(BaseModel):
    """Schema for the counting distinguisher result"""

    found: bool
    witness: Optional[RelFinObjectSpec] = None
    lhs: Optional[str] = None
    rhs: Optional[str] = None
    probes_checked: int


class HomCountResponse(BaseModel):
    """Schema for a homomorphism count between relational structures"""

    count: int = Field(..., ge=0)
    injective: bool


class LovaszResponse(BaseModel):
    """Schema for the homomorphism-counting isomorphism test"""

    distinguished: bool
    witness: Optional[StructureSpec] = None
    hom_a: Optional[int] = None
    hom_b: Optional[int] = None
    isomorphic: bool
    probes_checked: int


class HomotopyCardinalityResponse(BaseModel):
    """Schema for the homotopy cardinality of a π-finite space"""

    cardinality: str
    components: int = Field(..., ge=0)
