from typing import List

from pydantic import BaseModel, Field

from groupoid_card.models.structure import RelationalStructure


class StructureSpec(BaseModel):
    """Schema for a finite relational structure (digraph by default)"""

    signature: List[int] = Field(default_factory=lambda: [2], description="Arities")
    n: int = Field(..., ge=0, description="Universe size")
    relations: List[List[List[int]]] = Field(
        default_factory=list, description="One tuple list per relation"
    )

    def to_domain(self) -> RelationalStructure:
        relations = self.relations or [[] for _ in self.signature]
        return RelationalStructure.build(self.signature, self.n, relations)

    @classmethod
    def from_domain(cls, structure: RelationalStructure) -> "StructureSpec":
        return cls(
            signature=list(structure.signature),
            n=structure.size,
            relations=[[list(t) for t in sorted(rel)] for rel in structure.relations],
        )
