from typing import List

from pydantic import BaseModel, Field

from groupoid_card.models.relfin import RelFinObject
from groupoid_card.schemas.group import GroupSpec
from groupoid_card.services.group_core import group_service


class ComponentSpec(BaseModel):
    """Schema for one component K → G"""

    group: GroupSpec
    map: List[int] = Field(..., description="Image in the base of each element of K")


class RelFinObjectSpec(BaseModel):
    """Schema for a coproduct of homomorphisms into a base group"""

    base: GroupSpec
    components: List[ComponentSpec] = Field(default_factory=list)

    def to_domain(self) -> RelFinObject:
        base = self.base.to_domain()
        return RelFinObject(
            base,
            tuple(
                group_service.make_hom(c.group.to_domain(), base, c.map)
                for c in self.components
            ),
        )

    @classmethod
    def from_domain(cls, obj: RelFinObject) -> "RelFinObjectSpec":
        return cls(
            base=GroupSpec.from_domain(obj.base),
            components=[
                ComponentSpec(group=GroupSpec.from_domain(c.source), map=list(c.map))
                for c in obj.components
            ],
        )
