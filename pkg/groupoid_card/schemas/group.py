from typing import List, Optional

from pydantic import BaseModel, Field, model_validator

from groupoid_card.models.group import FiniteGroup
from groupoid_card.services.group_core import group_service


class PermutationGroupSpec(BaseModel):
    """Schema for a permutation group given by generators"""

    degree: int = Field(..., ge=0, description="Number of points acted on")
    generators: List[List[int]] = Field(
        default_factory=list, description="Permutations of range(degree)"
    )


class GroupSpec(BaseModel):
    """Schema for a finite group: a Cayley table or permutation generators"""

    order: Optional[int] = Field(None, ge=1, description="Group order")
    table: Optional[List[List[int]]] = Field(
        None, description="Cayley table, table[a][b] = a·b"
    )
    permutations: Optional[PermutationGroupSpec] = None
    name: Optional[str] = None

    @model_validator(mode="after")
    def validate_one_form(self) -> "GroupSpec":
        if (self.table is None) == (self.permutations is None):
            raise ValueError("give exactly one of 'table' and 'permutations'")
        if self.table is not None and self.order is not None:
            if self.order != len(self.table):
                raise ValueError(
                    f"order {self.order} does not match "
                    f"a table of {len(self.table)} rows"
                )
        return self

    def to_domain(self) -> FiniteGroup:
        if self.table is not None:
            return group_service.group_from_cayley(self.table, name=self.name)
        return group_service.group_from_permutations(
            self.permutations.degree, self.permutations.generators, name=self.name
        )

    @classmethod
    def from_domain(cls, group: FiniteGroup) -> "GroupSpec":
        return cls(
            order=group.order,
            table=[list(row) for row in group.table],
            name=group.name,
        )
