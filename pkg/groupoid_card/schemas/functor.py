from typing import List, Sequence

from pydantic import BaseModel, Field

from groupoid_card.core.exceptions import InvalidFunctor
from groupoid_card.models.functor import GroupoidFunctor
from groupoid_card.models.groupoid import FiniteGroupoid
from groupoid_card.schemas.groupoid import GroupoidSpec, Label


def _resolve(labels: Sequence, values: Sequence[Label], what: str) -> tuple:
    index = {label: i for i, label in enumerate(labels)}
    text = {str(label): i for i, label in enumerate(labels)}
    resolved = []
    for v in values:
        if v in index:
            resolved.append(index[v])
        elif str(v) in text:
            resolved.append(text[str(v)])
        else:
            raise InvalidFunctor(f"unknown target {what} {v!r}", {what: v})
    return tuple(resolved)


class FunctorSpec(BaseModel):
    """Schema for a functor's maps, by target ids in source order"""

    object_map: List[Label] = Field(
        ..., description="Target object id per source object"
    )
    morphism_map: List[Label] = Field(
        ..., description="Target morphism id per source morphism"
    )

    def to_domain(
        self, source: FiniteGroupoid, target: FiniteGroupoid
    ) -> GroupoidFunctor:
        functor = GroupoidFunctor(
            source,
            target,
            _resolve(target.objects, self.object_map, "object"),
            _resolve(target.morphism_labels, self.morphism_map, "morphism"),
        )
        return functor.validate()


class FunctorDocument(FunctorSpec):
    """Schema for a functor together with its source and target groupoids"""

    source: GroupoidSpec
    target: GroupoidSpec

    def build(self) -> GroupoidFunctor:
        return self.to_domain(self.source.to_domain(), self.target.to_domain())
