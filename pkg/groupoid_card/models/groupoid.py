from dataclasses import dataclass
from functools import cached_property
from typing import (
    Callable,
    Dict,
    Hashable,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
    Union,
)

from networkx.utils import UnionFind

from groupoid_card.core.exceptions import InvalidGroupoid
from groupoid_card.models.group import FiniteGroup

Composition = Union[Callable[[int, int], int], Mapping[Tuple[int, int], int]]


class FiniteGroupoid:
    """
    A finite groupoid.

    Objects are numbered 0..m-1 and morphisms 0..k-1; labels keep the ids a
    caller supplied. ``then(f, g)`` is the composite "f followed by g" and
    is defined whenever ``dst(f) == src(g)``. Composition is either a table
    or a rule computed on demand, so derived groupoids (products, functor
    groupoids, action groupoids) never materialise all composable pairs.
    """

    def __init__(
        self,
        objects: Sequence[Hashable],
        src: Sequence[int],
        dst: Sequence[int],
        identities: Sequence[int],
        compose: Composition,
        morphism_labels: Optional[Sequence[Hashable]] = None,
        name: Optional[str] = None,
    ):
        self.objects: Tuple[Hashable, ...] = tuple(objects)
        self.src: Tuple[int, ...] = tuple(src)
        self.dst: Tuple[int, ...] = tuple(dst)
        self.identities: Tuple[int, ...] = tuple(identities)
        self.morphism_labels: Tuple[Hashable, ...] = (
            tuple(morphism_labels)
            if morphism_labels is not None
            else tuple(range(len(self.src)))
        )
        self.name = name
        if isinstance(compose, Mapping):
            table = dict(compose)
            self._compose: Callable[[int, int], int] = lambda f, g: table[(f, g)]
        else:
            self._compose = compose

    @property
    def num_objects(self) -> int:
        return len(self.objects)

    @property
    def num_morphisms(self) -> int:
        return len(self.src)

    def then(self, f: int, g: int) -> int:
        return self._compose(f, g)

    def identity(self, x: int) -> int:
        return self.identities[x]

    @cached_property
    def _homs(self) -> Dict[Tuple[int, int], Tuple[int, ...]]:
        homs: Dict[Tuple[int, int], List[int]] = {}
        for f, (x, y) in enumerate(zip(self.src, self.dst)):
            homs.setdefault((x, y), []).append(f)
        return {key: tuple(value) for key, value in homs.items()}

    @cached_property
    def _out(self) -> Tuple[Tuple[int, ...], ...]:
        out: List[List[int]] = [[] for _ in self.objects]
        for f, x in enumerate(self.src):
            out[x].append(f)
        return tuple(tuple(fs) for fs in out)

    def hom(self, x: int, y: int) -> Tuple[int, ...]:
        return self._homs.get((x, y), ())

    def out_morphisms(self, x: int) -> Tuple[int, ...]:
        return self._out[x]

    def vertex_order(self, x: int) -> int:
        return len(self.hom(x, x))

    def inverse(self, f: int) -> int:
        return self._inverses[f]

    @cached_property
    def _inverses(self) -> Tuple[int, ...]:
        inverses = []
        for f in range(self.num_morphisms):
            x, y = self.src[f], self.dst[f]
            ident = self.identities[x]
            for g in self.hom(y, x):
                if self.then(f, g) == ident:
                    inverses.append(g)
                    break
            else:
                raise InvalidGroupoid(
                    f"morphism {self.morphism_labels[f]!r} has no inverse",
                    {"morphism": self.morphism_labels[f]},
                )
        return tuple(inverses)

    @cached_property
    def iso_classes(self) -> Tuple[Tuple[int, ...], ...]:
        """Isomorphism classes by union-find over the morphism list"""
        uf = UnionFind(range(self.num_objects))
        for x, y in zip(self.src, self.dst):
            uf.union(x, y)
        return tuple(sorted(tuple(sorted(c)) for c in uf.to_sets()))

    @cached_property
    def class_index(self) -> Tuple[int, ...]:
        index = [0] * self.num_objects
        for i, members in enumerate(self.iso_classes):
            for x in members:
                index[x] = i
        return tuple(index)

    def composable_pairs(self):
        for f in range(self.num_morphisms):
            for g in self.out_morphisms(self.dst[f]):
                yield f, g

    def validate(self) -> "FiniteGroupoid":
        """
        Check every groupoid axiom by brute force

        Returns:
            self, for chaining

        Raises:
            InvalidGroupoid: naming the first violating object, pair or triple
        """
        m, k = self.num_objects, self.num_morphisms
        labels = self.morphism_labels
        for f in range(k):
            if not (0 <= self.src[f] < m and 0 <= self.dst[f] < m):
                raise InvalidGroupoid(
                    f"morphism {labels[f]!r} has an unknown endpoint",
                    {"morphism": labels[f]},
                )
        if len(self.identities) != m:
            raise InvalidGroupoid("every object needs exactly one identity")
        for x, e in enumerate(self.identities):
            if self.src[e] != x or self.dst[e] != x:
                raise InvalidGroupoid(
                    f"identity of object {self.objects[x]!r} is not an endomorphism",
                    {"object": self.objects[x]},
                )
        for f, g in self.composable_pairs():
            try:
                h = self.then(f, g)
            except KeyError:
                raise InvalidGroupoid(
                    f"composite of {labels[f]!r} and {labels[g]!r} is undefined",
                    {"pair": [labels[f], labels[g]]},
                )
            if (
                not 0 <= h < k
                or self.src[h] != self.src[f]
                or self.dst[h] != self.dst[g]
            ):
                raise InvalidGroupoid(
                    f"composite of {labels[f]!r} and {labels[g]!r} has wrong endpoints",
                    {"pair": [labels[f], labels[g]]},
                )
        for f in range(k):
            x, y = self.src[f], self.dst[f]
            left, right = self.identities[x], self.identities[y]
            if self.then(left, f) != f or self.then(f, right) != f:
                raise InvalidGroupoid(
                    f"identities are not units for {labels[f]!r}",
                    {"morphism": labels[f]},
                )
        for f, g in self.composable_pairs():
            fg = self.then(f, g)
            for h in self.out_morphisms(self.dst[g]):
                if self.then(fg, h) != self.then(f, self.then(g, h)):
                    raise InvalidGroupoid(
                        "composition is not associative",
                        {"triple": [labels[f], labels[g], labels[h]]},
                    )
        for f in range(k):
            self.inverse(f)
        for f in range(k):
            if self.then(self.inverse(f), f) != self.identities[self.dst[f]]:
                raise InvalidGroupoid(
                    f"inverse of {labels[f]!r} is only one-sided",
                    {"morphism": labels[f]},
                )
        return self

    def __repr__(self) -> str:
        label = self.name or "groupoid"
        return (
            f"<FiniteGroupoid {label} objects={self.num_objects} "
            f"morphisms={self.num_morphisms}>"
        )


@dataclass(frozen=True)
class SkeletalForm:
    """One (representative object, automorphism group) entry per isomorphism class"""

    components: Tuple[Tuple[int, FiniteGroup], ...]

    @property
    def groups(self) -> Tuple[FiniteGroup, ...]:
        return tuple(group for _, group in self.components)
