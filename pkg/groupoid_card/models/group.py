from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, List, Optional, Tuple

Permutation = Tuple[int, ...]


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group stored as a Cayley table; element 0 is the identity"""

    table: Tuple[Tuple[int, ...], ...]
    inverse: Tuple[int, ...]
    name: Optional[str] = field(default=None, compare=False)

    def __hash__(self) -> int:
        return self._hash

    @cached_property
    def _hash(self) -> int:
        return hash(self.table)

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def identity(self) -> int:
        return 0

    def elements(self) -> range:
        return range(len(self.table))

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def conjugate(self, h: int, k: int) -> int:
        """k·h·k⁻¹"""
        return self.table[self.table[k][h]][self.inverse[k]]

    def power(self, a: int, n: int) -> int:
        result = 0
        for _ in range(n):
            result = self.table[result][a]
        return result

    @cached_property
    def element_orders(self) -> Tuple[int, ...]:
        orders = []
        for a in self.elements():
            k, x = 1, a
            while x != 0:
                x = self.table[x][a]
                k += 1
            orders.append(k)
        return tuple(orders)

    @cached_property
    def is_abelian(self) -> bool:
        n = self.order
        return all(
            self.table[a][b] == self.table[b][a] for a in range(n) for b in range(a)
        )

    @cached_property
    def generators(self) -> Tuple[int, ...]:
        """Greedy generating set: adjoin the least element not yet generated"""
        gens: List[int] = []
        reached = {0}
        for a in self.elements():
            if a in reached:
                continue
            gens.append(a)
            frontier = list(reached)
            reached = set(reached)
            while frontier:
                x = frontier.pop()
                for g in gens:
                    for y in (self.table[x][g], self.table[g][x]):
                        if y not in reached:
                            reached.add(y)
                            frontier.append(y)
        return tuple(gens)

    def __repr__(self) -> str:
        label = self.name or "group"
        return f"<FiniteGroup {label} order={self.order}>"


@dataclass(frozen=True)
class GroupHom:
    """A homomorphism given by its element map (source index → target index)"""

    source: FiniteGroup
    target: FiniteGroup
    map: Tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.map[a]

    def __repr__(self) -> str:
        return f"<GroupHom {self.source!r} -> {self.target!r} {list(self.map)}>"


@dataclass(frozen=True)
class HomPredicates:
    """Injectivity flags of a homomorphism"""

    injective: bool
    surjective: bool
    isomorphism: bool


@dataclass(frozen=True)
class SubgroupClass:
    """A conjugacy class of subgroups, held by its least representative"""

    representative: Tuple[int, ...]
    class_size: int
    index: int

    @property
    def order(self) -> int:
        return len(self.representative)


@dataclass(frozen=True)
class PermGroup:
    """A permutation group on range(degree)"""

    degree: int
    elements: FrozenSet[Permutation]

    @property
    def order(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class CosetAction:
    """Left translation action of G on the left cosets of a subgroup"""

    group: FiniteGroup
    subgroup: Tuple[int, ...]
    cosets: Tuple[Tuple[int, ...], ...]
    permutations: Tuple[Permutation, ...]
    image: PermGroup
    coset_of: Dict[int, int] = field(compare=False, repr=False, default_factory=dict)

    @property
    def degree(self) -> int:
        return len(self.cosets)
