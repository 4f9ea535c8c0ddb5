from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Tuple

from groupoid_card.core.exceptions import BaseMismatch
from groupoid_card.models.group import FiniteGroup, GroupHom


def component_key(hom: GroupHom) -> tuple:
    """Canonical sort key of a component K_i → G"""
    return (hom.source.order, hom.map, hom.source.table)


@dataclass(frozen=True)
class RelFinObject:
    """
    An object of the slice category over BG: a finite coproduct of
    homomorphisms K_i → G, components in canonical order.
    """

    base: FiniteGroup
    components: Tuple[GroupHom, ...]

    def __post_init__(self):
        for i, hom in enumerate(self.components):
            if hom.target != self.base:
                raise BaseMismatch(
                    f"component {i} does not map into the base group",
                    {"component": i},
                )
        ordered = tuple(sorted(self.components, key=component_key))
        object.__setattr__(self, "components", ordered)

    @classmethod
    def single(cls, hom: GroupHom) -> "RelFinObject":
        return cls(hom.target, (hom,))

    @property
    def is_single(self) -> bool:
        return len(self.components) == 1

    @property
    def hom(self) -> GroupHom:
        """The only component of a single-component object"""
        return self.components[0]

    def component(self, i: int) -> "RelFinObject":
        return RelFinObject.single(self.components[i])

    @property
    def max_component_order(self) -> int:
        return max((c.source.order for c in self.components), default=1)


@dataclass(frozen=True)
class ComponentPair:
    """A 1-morphism between components: (φ, g) with S(h) = g⁻¹·T(φ(h))·g"""

    target_index: int
    phi: GroupHom
    g: int


@dataclass(frozen=True)
class RelFinHomPair:
    """A 1-morphism S → F: one component pair per source component"""

    source: RelFinObject
    target: RelFinObject
    pairs: Tuple[ComponentPair, ...]

    @property
    def component_assignment(self) -> Tuple[int, ...]:
        return tuple(pair.target_index for pair in self.pairs)


@dataclass(frozen=True)
class EQuotient:
    """An E-quotient S ↠ B(H/N) → BG, held by its kernel N"""

    kernel: Tuple[int, ...]
    quotient_object: RelFinObject
    projection: RelFinHomPair


@dataclass(frozen=True)
class DecompositionCheck:
    """Both sides of the hom-groupoid decomposition over E-quotients"""

    lhs: Fraction
    rhs: Fraction
    equal: bool


@dataclass(frozen=True)
class EquivalenceDecision:
    """Outcome of the component matching, with one equivalence per matched pair"""

    equivalent: bool
    matching: Dict[int, int]
    witnesses: Tuple[RelFinHomPair, ...]

    def __bool__(self) -> bool:
        return self.equivalent


@dataclass(frozen=True)
class DistinguisherResult:
    """First probe whose hom-groupoid cardinalities into F and F′ differ"""

    witness: Optional[RelFinObject]
    lhs: Optional[Fraction]
    rhs: Optional[Fraction]
    probes_checked: int

    @property
    def found(self) -> bool:
        return self.witness is not None


@dataclass(frozen=True)
class RelFinFactorization:
    """(φ, g) = inclusion ∘ middle isomorphism ∘ quotient over the base"""

    quotient: RelFinHomPair
    middle: RelFinHomPair
    inclusion: RelFinHomPair
