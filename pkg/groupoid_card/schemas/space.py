from typing import List

from pydantic import BaseModel, Field

from groupoid_card.models.space import PiFiniteSpace


class PiFiniteSpaceSpec(BaseModel):
    """Schema for a π-finite space: homotopy-group orders per component"""

    components: List[List[int]] = Field(
        default_factory=list, description="[#π₁, #π₂, …] per component"
    )

    def to_domain(self) -> PiFiniteSpace:
        return PiFiniteSpace.build(self.components)
