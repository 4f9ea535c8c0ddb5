import itertools
import logging
import math
from dataclasses import replace
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

from sympy.combinatorics import Permutation as SymPermutation
from sympy.combinatorics import PermutationGroup, SymmetricGroup

from groupoid_card.core.config import settings
from groupoid_card.core.exceptions import (
    DegreeTooLarge,
    GroupTooLarge,
    InvalidTable,
    NoIdentity,
    NoInverse,
    NotAHomomorphism,
    NotAssociative,
    NotLatinSquare,
    NotNormal,
    ValidationError,
)
from groupoid_card.models.group import (
    CosetAction,
    FiniteGroup,
    GroupHom,
    HomPredicates,
    Permutation,
    PermGroup,
    SubgroupClass,
)

logger = logging.getLogger(__name__)

Subgroup = Tuple[int, ...]

# (sign, unit) products of the quaternion units 1, i, j, k
QUATERNION_UNITS = (
    ((0, 0), (0, 1), (0, 2), (0, 3)),
    ((0, 1), (1, 0), (0, 3), (1, 2)),
    ((0, 2), (1, 3), (1, 0), (0, 1)),
    ((0, 3), (0, 2), (1, 1), (1, 0)),
)


def compose_permutations(a: Permutation, b: Permutation) -> Permutation:
    """(a·b)(i) = a(b(i))"""
    return tuple(a[i] for i in b)


class GroupService:
    """Finite-group engine over Cayley tables"""

    def __init__(self):
        self.max_order = settings.MAX_GROUP_ORDER
        self.subset_closure_max_order = settings.SUBSET_CLOSURE_MAX_ORDER
        self.full_associativity_max_order = settings.FULL_ASSOCIATIVITY_MAX_ORDER
        self.max_sym_degree = settings.MAX_SYM_DEGREE
        self.small_group_max_order = settings.SMALL_GROUP_MAX_ORDER
        self._small_groups: Optional[List[FiniteGroup]] = None
        self._symmetric: Dict[int, Tuple[FiniteGroup, Dict[Permutation, int]]] = {}

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    def group_from_cayley(
        self,
        table: Sequence[Sequence[int]],
        name: Optional[str] = None,
        validate: bool = True,
    ) -> FiniteGroup:
        """
        Build a group from a Cayley table, re-indexed so that 0 is the identity

        Args:
            table: Square array with table[a][b] = a·b
            name: Optional display name
            validate: Skip the axiom checks for tables built internally

        Returns:
            FiniteGroup in canonical form

        Raises:
            InvalidTable: If the table is not square or has entries out of range
            GroupTooLarge: If the order exceeds MAX_GROUP_ORDER
            NotAssociative: Naming the first violating triple
            NotLatinSquare: Naming the first repeated row or column
            NoIdentity: If no two-sided identity exists
            NoInverse: Naming the first element without a two-sided inverse
        """
        rows = self._check_shape(table)
        n = len(rows)
        if not validate:
            return self._canonical(rows, 0, name)

        self._check_associative(rows)
        self._check_latin(rows)
        e = self._find_identity(rows)
        for a in range(n):
            b = rows[a].index(e)
            if rows[b][a] != e:
                raise NoInverse(f"element {a} has no two-sided inverse", {"element": a})
        return self._canonical(rows, e, name)

    def _check_shape(self, table) -> Tuple[Tuple[int, ...], ...]:
        n = len(table)
        if n == 0:
            raise InvalidTable("a group table needs at least one row")
        if n > self.max_order:
            raise GroupTooLarge(
                f"order {n} exceeds the cap {self.max_order}",
                {"order": n, "cap": self.max_order},
            )
        rows = []
        for i, row in enumerate(table):
            if len(row) != n:
                raise InvalidTable(
                    f"row {i} has length {len(row)}, expected {n}", {"row": i}
                )
            for j, v in enumerate(row):
                if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                    raise InvalidTable(
                        f"entry ({i}, {j}) is out of range", {"row": i, "column": j}
                    )
            rows.append(tuple(row))
        return tuple(rows)

    def _check_associative(self, t) -> None:
        n = len(t)
        if n <= self.full_associativity_max_order:
            probes: Iterable[int] = range(n)
        else:
            # Light's test: checking the middle factor on a generating set suffices
            probes = self._magma_generators(t)
        probes = sorted(probes)
        for a in range(n):
            row = t[a]
            for b in probes:
                ab = row[b]
                tb = t[b]
                for c in range(n):
                    if t[ab][c] != row[tb[c]]:
                        triple = [a, b, c]
                        raise NotAssociative(
                            f"(a·b)·c != a·(b·c) for (a, b, c) = {tuple(triple)}",
                            {"triple": triple},
                        )

    @staticmethod
    def _magma_generators(t) -> List[int]:
        gens: List[int] = []
        reached: set = set()
        for a in range(len(t)):
            if a in reached:
                continue
            gens.append(a)
            frontier = [a]
            reached.add(a)
            while frontier:
                x = frontier.pop()
                for y in list(reached):
                    for z in (t[x][y], t[y][x]):
                        if z not in reached:
                            reached.add(z)
                            frontier.append(z)
        return gens

    @staticmethod
    def _check_latin(t) -> None:
        n = len(t)
        for i, row in enumerate(t):
            if len(set(row)) != n:
                raise NotLatinSquare(f"row {i} repeats an element", {"row": i})
        for j in range(n):
            if len({t[i][j] for i in range(n)}) != n:
                raise NotLatinSquare(f"column {j} repeats an element", {"column": j})

    @staticmethod
    def _find_identity(t) -> int:
        n = len(t)
        for e in range(n):
            if all(t[e][x] == x and t[x][e] == x for x in range(n)):
                return e
        raise NoIdentity("no element is a two-sided identity")

    @staticmethod
    def _canonical(t, e: int, name: Optional[str]) -> FiniteGroup:
        n = len(t)
        if e != 0:
            p = list(range(n))
            p[0], p[e] = e, 0
            t = tuple(tuple(p[t[p[i]][p[j]]] for j in range(n)) for i in range(n))
        inverse = tuple(row.index(0) for row in t)
        return FiniteGroup(t, inverse, name)

    def cyclic_group(self, n: int) -> FiniteGroup:
        if n < 1:
            raise ValidationError("cyclic group order must be positive", {"n": n})
        table = [[(a + b) % n for b in range(n)] for a in range(n)]
        return self.group_from_cayley(table, name=f"C{n}", validate=False)

    def trivial_group(self) -> FiniteGroup:
        return self.cyclic_group(1)

    def direct_product(self, g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
        """Elements (a, b) are indexed a·#H + b"""
        m = h.order
        if g.order * m > self.max_order:
            raise GroupTooLarge(
                f"product order {g.order * m} exceeds the cap {self.max_order}"
            )
        table = [
            [
                g.table[a1][a2] * m + h.table[b1][b2]
                for a2 in g.elements()
                for b2 in h.elements()
            ]
            for a1 in g.elements()
            for b1 in h.elements()
        ]
        name = f"{g.name}x{h.name}" if g.name and h.name else None
        return self.group_from_cayley(table, name=name, validate=False)

    def group_from_permutations(
        self,
        degree: int,
        generators: Sequence[Sequence[int]],
        name: Optional[str] = None,
    ) -> FiniteGroup:
        """
        Close a set of permutations under composition

        Elements are sorted lexicographically, so the identity comes first.

        Raises:
            InvalidTable: If a generator is not a permutation of range(degree)
            GroupTooLarge: If the closure exceeds MAX_GROUP_ORDER
        """
        identity = tuple(range(degree))
        gens = []
        for i, g in enumerate(generators):
            g = tuple(g)
            if sorted(g) != list(identity):
                raise InvalidTable(
                    f"generator {i} is not a permutation of degree {degree}",
                    {"generator": i},
                )
            gens.append(g)
        return self._perm_table(self._perm_elements(degree, gens), name)[0]

    def _perm_elements(
        self, degree: int, gens: Sequence[Permutation]
    ) -> List[Permutation]:
        """Every element of the generated group, by Schreier-Sims, sorted"""
        if degree < 2 or not gens:
            return [tuple(range(degree))]
        group = PermutationGroup([SymPermutation(list(g)) for g in gens])
        if group.order() > self.max_order:
            raise GroupTooLarge(
                f"permutation group of order {group.order()} exceeds "
                f"the cap {self.max_order}",
                {"order": int(group.order()), "cap": self.max_order},
            )
        return sorted(tuple(p.array_form) for p in group.generate())

    def _perm_table(
        self, elements: List[Permutation], name: Optional[str]
    ) -> Tuple[FiniteGroup, Dict[Permutation, int]]:
        index = {p: i for i, p in enumerate(elements)}
        table = [
            [index[compose_permutations(a, b)] for b in elements] for a in elements
        ]
        return self.group_from_cayley(table, name=name, validate=False), index

    def symmetric_group(self, n: int) -> FiniteGroup:
        return self._symmetric_with_index(n)[0]

    def _symmetric_with_index(
        self, n: int
    ) -> Tuple[FiniteGroup, Dict[Permutation, int]]:
        if n not in self._symmetric:
            if math.factorial(n) > self.max_order:
                raise GroupTooLarge(
                    f"Sym({n}) has order {math.factorial(n)}, "
                    f"above the cap {self.max_order}"
                )
            elements = list(itertools.permutations(range(n)))
            self._symmetric[n] = self._perm_table(elements, f"S{n}")
        return self._symmetric[n]

    def dihedral_group(self, n: int) -> FiniteGroup:
        """Symmetries of the n-gon, order 2n; r^k s^f is indexed f·n + k"""
        if n < 1:
            raise ValidationError("dihedral parameter must be positive", {"n": n})

        def mul(x: int, y: int) -> int:
            f1, k1 = divmod(x, n)
            f2, k2 = divmod(y, n)
            k = (k1 - k2 if f1 else k1 + k2) % n
            return ((f1 ^ f2) * n) + k

        table = [[mul(x, y) for y in range(2 * n)] for x in range(2 * n)]
        return self.group_from_cayley(table, name=f"D{n}", validate=False)

    def quaternion_group(self) -> FiniteGroup:
        def mul(x: int, y: int) -> int:
            s1, u1 = divmod(x, 4)
            s2, u2 = divmod(y, 4)
            s, u = QUATERNION_UNITS[u1][u2]
            return (s1 ^ s2 ^ s) * 4 + u

        table = [[mul(x, y) for y in range(8)] for x in range(8)]
        return self.group_from_cayley(table, name="Q8", validate=False)

    def small_groups(self, max_order: Optional[int] = None) -> List[FiniteGroup]:
        """
        Built-in table of the groups of order at most 8, one per isomorphism type

        Args:
            max_order: Largest order to return (default SMALL_GROUP_MAX_ORDER)

        Returns:
            Named groups in the order C1, C2, C3, C4, V4, C5, C6, S3, C7, C8,
            C4xC2, C2^3, D4, Q8, filtered by order
        """
        if max_order is None:
            max_order = self.small_group_max_order
        if self._small_groups is None:
            c2 = self.cyclic_group(2)
            v4 = self.direct_product(c2, c2)
            self._small_groups = [
                self.cyclic_group(1),
                c2,
                self.cyclic_group(3),
                self.cyclic_group(4),
                replace(v4, name="V4"),
                self.cyclic_group(5),
                self.cyclic_group(6),
                self.symmetric_group(3),
                self.cyclic_group(7),
                self.cyclic_group(8),
                replace(self.direct_product(self.cyclic_group(4), c2), name="C4xC2"),
                replace(self.direct_product(v4, c2), name="C2^3"),
                self.dihedral_group(4),
                self.quaternion_group(),
            ]
        return [g for g in self._small_groups if g.order <= max_order]

    # ------------------------------------------------------------------
    # Subgroups
    # ------------------------------------------------------------------

    @staticmethod
    def closure(group: FiniteGroup, elements: Iterable[int]) -> FrozenSet[int]:
        """The subgroup generated by the given elements"""
        gens = [a for a in set(elements) if a != 0]
        reached = {0}
        frontier = [0]
        table = group.table
        while frontier:
            x = frontier.pop()
            row = table[x]
            for g in gens:
                y = row[g]
                if y not in reached:
                    reached.add(y)
                    frontier.append(y)
        return frozenset(reached)

    def is_subgroup(self, group: FiniteGroup, elements: Iterable[int]) -> bool:
        elements = frozenset(elements)
        return bool(elements) and self.closure(group, elements) == elements

    def all_subgroups(self, group: FiniteGroup) -> List[Subgroup]:
        """
        Every subgroup of G as a sorted element tuple

        Small groups are searched by include/exclude closure over element
        subsets; larger ones by cyclic extension from the trivial subgroup.

        Returns:
            Subgroups sorted by (order, element tuple)
        """
        if group.order <= self.subset_closure_max_order:
            found = self._subgroups_by_subset_closure(group)
        else:
            found = self._subgroups_by_cyclic_extension(group)
        result = sorted((tuple(sorted(s)) for s in found), key=lambda s: (len(s), s))
        logger.debug("order %d group has %d subgroups", group.order, len(result))
        return result

    def _subgroups_by_subset_closure(self, group: FiniteGroup) -> List[FrozenSet[int]]:
        n = group.order
        found: List[FrozenSet[int]] = []

        def search(current: FrozenSet[int], excluded: FrozenSet[int], i: int) -> None:
            while i < n and i in current:
                i += 1
            if i == n:
                found.append(current)
                return
            search(current, excluded | {i}, i + 1)
            grown = self.closure(group, current | {i})
            if not grown & excluded:
                search(grown, excluded, i + 1)

        search(frozenset({0}), frozenset(), 1)
        return found

    def _subgroups_by_cyclic_extension(
        self, group: FiniteGroup
    ) -> List[FrozenSet[int]]:
        seen = {frozenset({0})}
        layer = list(seen)
        while layer:
            next_layer = []
            for sub in layer:
                for g in group.elements():
                    if g in sub:
                        continue
                    grown = self.closure(group, sub | {g})
                    if grown not in seen:
                        seen.add(grown)
                        next_layer.append(grown)
            layer = next_layer
        return list(seen)

    def conjugate_subgroup(
        self, group: FiniteGroup, subgroup: Iterable[int], k: int
    ) -> Subgroup:
        return tuple(sorted(group.conjugate(h, k) for h in subgroup))

    def subgroups_up_to_conjugacy(self, group: FiniteGroup) -> List[SubgroupClass]:
        """
        One SubgroupClass per conjugacy class of subgroups

        Returns:
            Classes sorted by subgroup order, then lexicographic representative;
            the representative is the least member of its class
        """
        seen = set()
        classes = []
        for sub in self.all_subgroups(group):
            if sub in seen:
                continue
            conjugates = {
                self.conjugate_subgroup(group, sub, k) for k in group.elements()
            }
            seen |= conjugates
            classes.append(SubgroupClass(sub, len(conjugates), group.order // len(sub)))
        return classes

    def is_normal(self, group: FiniteGroup, subgroup: Iterable[int]) -> bool:
        members = frozenset(subgroup)
        return self.is_subgroup(group, members) and all(
            group.conjugate(h, k) in members for k in group.elements() for h in members
        )

    def normal_subgroups(self, group: FiniteGroup) -> List[Subgroup]:
        return [
            c.representative
            for c in self.subgroups_up_to_conjugacy(group)
            if c.class_size == 1
        ]

    def quotient_group(
        self, group: FiniteGroup, normal: Iterable[int]
    ) -> Tuple[FiniteGroup, GroupHom]:
        """
        Form H/N on left cosets, numbered by first appearance

        Returns:
            The quotient group and the surjective projection H → H/N

        Raises:
            NotNormal: If N is not a normal subgroup of H
        """
        members = tuple(sorted(set(normal)))
        if not self.is_normal(group, members):
            raise NotNormal(
                "subset is not a normal subgroup", {"subset": list(members)}
            )
        coset_of: Dict[int, int] = {}
        reps: List[int] = []
        for a in group.elements():
            if a in coset_of:
                continue
            for x in members:
                coset_of[group.mul(a, x)] = len(reps)
            reps.append(a)
        table = [[coset_of[group.mul(a, b)] for b in reps] for a in reps]
        quotient = self.group_from_cayley(table, validate=False)
        projection = GroupHom(
            group, quotient, tuple(coset_of[a] for a in group.elements())
        )
        return quotient, projection

    def subgroup_as_group(
        self, group: FiniteGroup, elements: Iterable[int]
    ) -> Tuple[FiniteGroup, GroupHom]:
        """The subgroup as a group in its own right, with its inclusion"""
        members = sorted(set(elements))
        if not self.is_subgroup(group, members):
            raise ValidationError(
                "elements do not form a subgroup", {"elements": members}
            )
        index = {a: i for i, a in enumerate(members)}
        table = [[index[group.mul(a, b)] for b in members] for a in members]
        sub = self.group_from_cayley(table, validate=False)
        return sub, GroupHom(sub, group, tuple(members))

    # ------------------------------------------------------------------
    # Coset actions
    # ------------------------------------------------------------------

    def coset_action(
        self, group: FiniteGroup, subgroup: Union[SubgroupClass, Iterable[int]]
    ) -> CosetAction:
        """
        Left translation of G on its left cosets gH

        Args:
            group: The acting group
            subgroup: A SubgroupClass or any subgroup given by its elements

        Returns:
            CosetAction whose permutations θ(g) satisfy θ(gh) = θ(g)·θ(h)
        """
        if isinstance(subgroup, SubgroupClass):
            members = subgroup.representative
        else:
            members = tuple(sorted(set(subgroup)))
        if not self.is_subgroup(group, members):
            raise ValidationError(
                "elements do not form a subgroup", {"elements": list(members)}
            )
        coset_of: Dict[int, int] = {}
        cosets: List[Tuple[int, ...]] = []
        for a in group.elements():
            if a in coset_of:
                continue
            coset = tuple(sorted(group.mul(a, h) for h in members))
            for x in coset:
                coset_of[x] = len(cosets)
            cosets.append(coset)
        reps = [c[0] for c in cosets]
        permutations = tuple(
            tuple(coset_of[group.mul(g, r)] for r in reps) for g in group.elements()
        )
        image = PermGroup(len(cosets), frozenset(permutations))
        return CosetAction(
            group, members, tuple(cosets), permutations, image, coset_of
        )

    def coset_action_hom(self, action: CosetAction) -> GroupHom:
        """θ as a homomorphism into the Cayley table of Sym(G/H)"""
        sym, index = self._symmetric_with_index(action.degree)
        return GroupHom(
            action.group, sym, tuple(index[p] for p in action.permutations)
        )

    def centralizer_order_in_sym(self, image: PermGroup) -> int:
        """
        Order of the centralizer of a permutation group inside Sym(d)

        Raises:
            DegreeTooLarge: If d exceeds MAX_SYM_DEGREE
        """
        d = image.degree
        if d > self.max_sym_degree:
            raise DegreeTooLarge(
                f"degree {d} exceeds the cap {self.max_sym_degree}",
                {"degree": d, "cap": self.max_sym_degree},
            )
        if d < 2 or image.order == 1:
            return math.factorial(d)
        acting = PermutationGroup([SymPermutation(list(p)) for p in image.elements])
        return int(SymmetricGroup(d).centralizer(acting).order())

    # ------------------------------------------------------------------
    # Homomorphisms
    # ------------------------------------------------------------------

    def make_hom(
        self, source: FiniteGroup, target: FiniteGroup, mapping: Sequence[int]
    ) -> GroupHom:
        """
        Validate an element map as a homomorphism

        Raises:
            NotAHomomorphism: Naming the first pair (a, b) with f(ab) != f(a)f(b)
        """
        mapping = tuple(mapping)
        if len(mapping) != source.order or any(
            not 0 <= v < target.order for v in mapping
        ):
            raise NotAHomomorphism(
                "map must send every source element to a target element",
                {"length": len(mapping), "source_order": source.order},
            )
        for a in source.elements():
            for b in source.elements():
                if mapping[source.mul(a, b)] != target.mul(mapping[a], mapping[b]):
                    raise NotAHomomorphism(
                        f"f(a·b) != f(a)·f(b) for (a, b) = {(a, b)}", {"pair": [a, b]}
                    )
        return GroupHom(source, target, mapping)

    def enumerate_homs(
        self, source: FiniteGroup, target: FiniteGroup
    ) -> List[GroupHom]:
        """
        Every homomorphism source → target

        Full-map backtracking in element order: an element that is a product
        of two earlier elements has a forced image, any other one branches
        over targets whose order divides its own. Each product a·b = c is
        checked as soon as the largest of a, b, c is assigned.

        Returns:
            Homomorphisms in lexicographic order of their maps
        """
        n = source.order
        st = source.table
        forced: List[Optional[Tuple[int, int]]] = [None] * n
        checks: List[List[Tuple[int, int, int]]] = [[] for _ in range(n)]
        for a in range(n):
            for b in range(n):
                c = st[a][b]
                top = max(a, b, c)
                checks[top].append((a, b, c))
                if c > a and c > b and forced[c] is None:
                    forced[c] = (a, b)
        by_order: Dict[int, List[int]] = {}
        for t, k in enumerate(target.element_orders):
            by_order.setdefault(k, []).append(t)
        candidates = [
            [
                t
                for k, ts in by_order.items()
                if source.element_orders[a] % k == 0
                for t in ts
            ]
            for a in range(n)
        ]
        for c in candidates:
            c.sort()

        tt = target.table
        image = [0] * n
        results: List[GroupHom] = []

        def consistent(a: int) -> bool:
            return all(image[c] == tt[image[x]][image[y]] for x, y, c in checks[a])

        def search(a: int) -> None:
            if a == n:
                results.append(GroupHom(source, target, tuple(image)))
                return
            if forced[a] is not None:
                x, y = forced[a]
                options = (tt[image[x]][image[y]],)
            else:
                options = candidates[a]
            for t in options:
                image[a] = t
                if consistent(a):
                    search(a + 1)

        if consistent(0):
            search(1)
        logger.debug(
            "%d homomorphisms from order %d into order %d",
            len(results),
            n,
            target.order,
        )
        return results

    def count_homs(self, source: FiniteGroup, target: FiniteGroup) -> int:
        return len(self.enumerate_homs(source, target))

    @staticmethod
    def hom_predicates(f: GroupHom) -> HomPredicates:
        size = len(set(f.map))
        injective = size == f.source.order
        surjective = size == f.target.order
        return HomPredicates(injective, surjective, injective and surjective)

    @staticmethod
    def kernel(f: GroupHom) -> Subgroup:
        return tuple(a for a in f.source.elements() if f.map[a] == 0)

    @staticmethod
    def image(f: GroupHom) -> Subgroup:
        return tuple(sorted(set(f.map)))

    @staticmethod
    def identity_hom(group: FiniteGroup) -> GroupHom:
        return GroupHom(group, group, tuple(group.elements()))

    @staticmethod
    def trivial_hom(source: FiniteGroup, target: FiniteGroup) -> GroupHom:
        return GroupHom(source, target, (0,) * source.order)

    @staticmethod
    def compose_homs(f: GroupHom, g: GroupHom) -> GroupHom:
        """f followed by g"""
        if f.target != g.source:
            raise ValidationError("homomorphisms are not composable")
        return GroupHom(f.source, g.target, tuple(g.map[v] for v in f.map))

    @staticmethod
    def conjugation(group: FiniteGroup, k: int) -> GroupHom:
        """h ↦ k·h·k⁻¹"""
        return GroupHom(
            group, group, tuple(group.conjugate(h, k) for h in group.elements())
        )

    @staticmethod
    def inverse_hom(f: GroupHom) -> GroupHom:
        inverse = [0] * f.source.order
        for a, b in enumerate(f.map):
            inverse[b] = a
        return GroupHom(f.target, f.source, tuple(inverse))

    @staticmethod
    def _extend(
        source: FiniteGroup,
        target: FiniteGroup,
        gens: Sequence[int],
        images: Sequence[int],
    ) -> Optional[Tuple[int, ...]]:
        mapping: List[Optional[int]] = [None] * source.order
        mapping[0] = 0
        frontier = [0]
        while frontier:
            x = frontier.pop()
            for g, img in zip(gens, images):
                y = source.mul(x, g)
                value = target.mul(mapping[x], img)
                if mapping[y] is None:
                    mapping[y] = value
                    frontier.append(y)
                elif mapping[y] != value:
                    return None
        return tuple(mapping)

    def find_isomorphism(self, g: FiniteGroup, h: FiniteGroup) -> Optional[GroupHom]:
        """
        An isomorphism G → H if one exists

        Invariants (order, element-order profile, commutativity) are compared
        first; then generator images of matching order are searched.
        """
        if (
            g.order != h.order
            or sorted(g.element_orders) != sorted(h.element_orders)
            or g.is_abelian != h.is_abelian
        ):
            return None
        gens = g.generators
        options = [
            [b for b in h.elements() if h.element_orders[b] == g.element_orders[a]]
            for a in gens
        ]
        for images in itertools.product(*options):
            mapping = self._extend(g, h, gens, images)
            if mapping is not None and len(set(mapping)) == h.order:
                return GroupHom(g, h, mapping)
        return None

    def are_isomorphic(self, g: FiniteGroup, h: FiniteGroup) -> bool:
        return self.find_isomorphism(g, h) is not None


# Create a singleton instance
group_service = GroupService()
