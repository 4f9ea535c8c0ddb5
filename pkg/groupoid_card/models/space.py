from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from groupoid_card.core.exceptions import ValidationError


@dataclass(frozen=True)
class PiFiniteSpace:
    """Homotopy-group orders [#π₁, #π₂, …] per connected component"""

    components: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        for i, orders in enumerate(self.components):
            if any(k < 1 for k in orders):
                raise ValidationError(
                    "homotopy group orders must be positive",
                    {"component": i, "orders": list(orders)},
                )

    @classmethod
    def build(cls, components) -> "PiFiniteSpace":
        return cls(tuple(tuple(c) for c in components))


@dataclass(frozen=True)
class PostnikovReport:
    """Cardinalities along the groupoid-realisable Postnikov images of a functor"""

    source_card: Fraction
    im2_card: Fraction
    im1_card: Fraction
    target_card: Fraction
    n1_holds: bool
    n2_holds: bool

    @property
    def inequality_holds(self) -> bool:
        return self.n2_holds


@dataclass(frozen=True)
class CorollaryReport:
    """Which truncation/connectivity clauses applied to a functor"""

    source_card: Fraction
    target_card: Fraction
    even_clause: bool
    odd_clause: bool
    holds: bool
