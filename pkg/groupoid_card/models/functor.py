from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from groupoid_card.core.exceptions import InvalidFunctor
from groupoid_card.models.groupoid import FiniteGroupoid


@dataclass(frozen=True, eq=False)
class GroupoidFunctor:
    """A functor between finite groupoids given by its object and morphism maps"""

    source: FiniteGroupoid
    target: FiniteGroupoid
    object_map: Tuple[int, ...]
    morphism_map: Tuple[int, ...]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupoidFunctor):
            return NotImplemented
        return (
            self.source is other.source
            and self.target is other.target
            and self.object_map == other.object_map
            and self.morphism_map == other.morphism_map
        )

    def __hash__(self) -> int:
        return hash(
            (id(self.source), id(self.target), self.object_map, self.morphism_map)
        )

    def validate(self) -> "GroupoidFunctor":
        """
        Check that the maps preserve endpoints, identities and composition

        Raises:
            InvalidFunctor: Naming the first offending object, morphism or pair
        """
        src, tgt = self.source, self.target
        if len(self.object_map) != src.num_objects or any(
            not 0 <= y < tgt.num_objects for y in self.object_map
        ):
            raise InvalidFunctor("object map must send every object to a target object")
        if len(self.morphism_map) != src.num_morphisms or any(
            not 0 <= m < tgt.num_morphisms for m in self.morphism_map
        ):
            raise InvalidFunctor(
                "morphism map must send every morphism to a target morphism"
            )
        for f, m in enumerate(self.morphism_map):
            if (
                tgt.src[m] != self.object_map[src.src[f]]
                or tgt.dst[m] != self.object_map[src.dst[f]]
            ):
                raise InvalidFunctor(
                    f"morphism {f} is sent to a morphism with the wrong endpoints",
                    {"morphism": f},
                )
        for x, e in enumerate(src.identities):
            if self.morphism_map[e] != tgt.identities[self.object_map[x]]:
                raise InvalidFunctor(
                    f"identity of object {x} is not preserved", {"object": x}
                )
        for f, g in src.composable_pairs():
            image = self.morphism_map[src.then(f, g)]
            if image != tgt.then(self.morphism_map[f], self.morphism_map[g]):
                raise InvalidFunctor(
                    "composition is not preserved", {"pair": [f, g]}
                )
        return self


@dataclass(frozen=True)
class FunctorClassification:
    """Full / faithful / essentially surjective flags of a functor"""

    full: bool
    faithful: bool
    essentially_surjective: bool

    @property
    def in_e(self) -> bool:
        """Essentially surjective and full"""
        return self.essentially_surjective and self.full

    @property
    def in_f(self) -> bool:
        """Essentially surjective and faithful"""
        return self.essentially_surjective and self.faithful

    @property
    def in_m(self) -> bool:
        """Fully faithful"""
        return self.full and self.faithful

    @property
    def is_equivalence(self) -> bool:
        return self.full and self.faithful and self.essentially_surjective


@dataclass(frozen=True, eq=False)
class TernaryFactorization:
    """F = F₀ ∘ F₁ ∘ F₂ through the 2-coimage and the 1-image"""

    coimage: GroupoidFunctor
    middle: GroupoidFunctor
    image: GroupoidFunctor

    @property
    def im2(self) -> FiniteGroupoid:
        return self.coimage.target

    @property
    def im1(self) -> FiniteGroupoid:
        return self.middle.target


@dataclass(frozen=True)
class OrderVerdict:
    """Which cardinality-order clauses fired for a functor, and whether they held"""

    source_card: Fraction
    target_card: Fraction
    full_clause: bool
    faithful_clause: bool
    holds: bool
