from typing import Dict, List, Optional, Union

from pydantic import BaseModel, Field, model_validator

from groupoid_card.core.exceptions import InvalidGroupoid
from groupoid_card.models.groupoid import FiniteGroupoid
from groupoid_card.schemas.group import GroupSpec
from groupoid_card.services.group_core import group_service
from groupoid_card.services.groupoid_core import groupoid_service

Label = Union[int, str]


class MorphismSpec(BaseModel):
    """Schema for one morphism of an explicit groupoid"""

    id: Label
    src: Label
    dst: Label


class SkeletalComponentSpec(BaseModel):
    """Schema for one isomorphism class of a skeletal groupoid"""

    aut_order_table: Optional[List[List[int]]] = Field(
        None, description="Cayley table of the automorphism group"
    )
    group: Optional[GroupSpec] = None

    @model_validator(mode="after")
    def validate_one_form(self) -> "SkeletalComponentSpec":
        if (self.aut_order_table is None) == (self.group is None):
            raise ValueError("give exactly one of 'aut_order_table' and 'group'")
        return self


class GroupoidSpec(BaseModel):
    """
    Schema for a finite groupoid

    Explicit form lists objects, morphisms and composites [f, g, h] meaning
    h = f followed by g. Skeletal form lists one automorphism group per
    isomorphism class; its objects and morphisms are then numbered from 0.
    """

    objects: Optional[List[Label]] = None
    morphisms: Optional[List[MorphismSpec]] = None
    compose: Optional[List[List[Label]]] = None
    identities: Optional[Dict[str, Label]] = None
    components: Optional[List[SkeletalComponentSpec]] = None

    @model_validator(mode="after")
    def validate_one_form(self) -> "GroupoidSpec":
        explicit = self.objects is not None
        if explicit == (self.components is not None):
            raise ValueError("give either 'objects' or 'components'")
        if explicit and self.morphisms is None:
            raise ValueError("explicit groupoids need 'morphisms'")
        for entry in self.compose or []:
            if len(entry) != 3:
                raise ValueError("composition entries are [f, g, f then g]")
        return self

    def to_domain(self) -> FiniteGroupoid:
        if self.components is not None:
            groups = [
                c.group.to_domain()
                if c.group is not None
                else group_service.group_from_cayley(c.aut_order_table)
                for c in self.components
            ]
            g = groupoid_service.from_skeletal(groups)
            return FiniteGroupoid(
                range(g.num_objects),
                g.src,
                g.dst,
                g.identities,
                g.then,
                morphism_labels=range(g.num_morphisms),
            )
        identities = None
        if self.identities is not None:
            by_text = {str(x): x for x in self.objects}
            unknown = [k for k in self.identities if k not in by_text]
            if unknown:
                raise InvalidGroupoid(
                    f"identity given for unknown object {unknown[0]!r}",
                    {"object": unknown[0]},
                )
            identities = {by_text[k]: v for k, v in self.identities.items()}
        return groupoid_service.from_table(
            self.objects,
            [(m.id, m.src, m.dst) for m in self.morphisms],
            [tuple(entry) for entry in self.compose or []],
            identities,
        )
