from dataclasses import dataclass
from typing import FrozenSet, Optional, Tuple

from groupoid_card.core.exceptions import InvalidPartition, InvalidStructure

Relation = FrozenSet[Tuple[int, ...]]


@dataclass(frozen=True)
class RelationalStructure:
    """A finite set {0..size-1} with one relation per arity in the signature"""

    signature: Tuple[int, ...]
    size: int
    relations: Tuple[Relation, ...]

    def __post_init__(self):
        if self.size < 0:
            raise InvalidStructure("universe size must be non-negative")
        if len(self.relations) != len(self.signature):
            raise InvalidStructure(
                f"signature has {len(self.signature)} relations, "
                f"got {len(self.relations)}"
            )
        for i, (arity, relation) in enumerate(zip(self.signature, self.relations)):
            for t in relation:
                if len(t) != arity:
                    raise InvalidStructure(
                        f"relation {i} expects arity {arity}",
                        {"relation": i, "tuple": list(t)},
                    )
                if any(not 0 <= v < self.size for v in t):
                    raise InvalidStructure(
                        f"relation {i} mentions an element outside the universe",
                        {"relation": i, "tuple": list(t)},
                    )

    @classmethod
    def build(cls, signature, size: int, relations) -> "RelationalStructure":
        return cls(
            tuple(signature),
            size,
            tuple(frozenset(tuple(t) for t in rel) for rel in relations),
        )


@dataclass(frozen=True)
class Partition:
    """A set partition as a restricted-growth block assignment"""

    blocks: Tuple[int, ...]

    def __post_init__(self):
        seen = -1
        for b in self.blocks:
            if b > seen + 1 or b < 0:
                raise InvalidPartition(
                    "block assignment must be a restricted-growth string",
                    {"blocks": list(self.blocks)},
                )
            seen = max(seen, b)

    @property
    def num_blocks(self) -> int:
        return max(self.blocks, default=-1) + 1

    @property
    def is_discrete(self) -> bool:
        return self.num_blocks == len(self.blocks)


@dataclass(frozen=True)
class HomInjIdentity:
    """hom(C, A) against the sum of inj(C/θ, A) over all partitions θ"""

    hom: int
    sum_over_partitions: int
    equal: bool


@dataclass(frozen=True)
class LovaszVerdict:
    """Result of comparing hom counts from every probe structure"""

    witness: Optional[RelationalStructure]
    hom_a: Optional[int]
    hom_b: Optional[int]
    isomorphic: Optional[bool]
    probes_checked: int

    @property
    def distinguished(self) -> bool:
        return self.witness is not None
