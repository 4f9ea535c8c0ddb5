import itertools
import logging
from fractions import Fraction
from typing import Dict, Hashable, List, Optional, Sequence, Tuple, Union

from groupoid_card.core.config import settings
from groupoid_card.core.exceptions import InvalidAction, InvalidGroupoid, SizeLimit
from groupoid_card.models.functor import GroupoidFunctor
from groupoid_card.models.group import FiniteGroup, GroupHom, Permutation
from groupoid_card.models.groupoid import FiniteGroupoid, SkeletalForm
from groupoid_card.services.group_core import (
    compose_permutations,
    group_service,
)

logger = logging.getLogger(__name__)


class GroupoidService:
    """Finite groupoids: constructions, cardinality and equivalence"""

    def __init__(self):
        self.functor_limit = settings.FUNCTOR_LIMIT

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @staticmethod
    def empty() -> FiniteGroupoid:
        return FiniteGroupoid((), (), (), (), {}, name="empty")

    @staticmethod
    def discrete(n: int) -> FiniteGroupoid:
        """n objects, identities only"""
        return FiniteGroupoid(
            range(n),
            range(n),
            range(n),
            range(n),
            lambda f, g: f,
            name=f"discrete({n})",
        )

    @staticmethod
    def codiscrete(n: int) -> FiniteGroupoid:
        """Exactly one morphism x → y for every pair; (x, y) is indexed x·n + y"""
        return FiniteGroupoid(
            range(n),
            [x for x in range(n) for _ in range(n)],
            [y for _ in range(n) for y in range(n)],
            [x * n + x for x in range(n)],
            lambda f, g: (f // n) * n + g % n,
            morphism_labels=[(x, y) for x in range(n) for y in range(n)],
            name=f"codiscrete({n})",
        )

    @staticmethod
    def delooping(group: FiniteGroup) -> FiniteGroupoid:
        """BG: one object, morphisms the elements, then(a, b) = a·b"""
        return FiniteGroupoid(
            (0,),
            (0,) * group.order,
            (0,) * group.order,
            (0,),
            group.mul,
            name=f"B{group.name}" if group.name else None,
        )

    def from_skeletal(self, groups: Sequence[FiniteGroup]) -> FiniteGroupoid:
        result = self.empty()
        for g in groups:
            result = self.coproduct(result, self.delooping(g))
        return result

    def from_table(
        self,
        objects: Sequence[Hashable],
        morphisms: Sequence[Tuple[Hashable, Hashable, Hashable]],
        compose: Sequence[Tuple[Hashable, Hashable, Hashable]],
        identities: Optional[Dict[Hashable, Hashable]] = None,
    ) -> FiniteGroupoid:
        """
        Build and validate a groupoid from labelled data

        Args:
            objects: Object labels
            morphisms: (label, source label, target label) triples
            compose: (f, g, h) triples meaning h = f followed by g
            identities: Optional object label → identity morphism label;
                        otherwise the idempotent endomorphism of each object

        Returns:
            A validated FiniteGroupoid

        Raises:
            InvalidGroupoid: If labels are unknown or any axiom fails
        """
        obj_index = {label: i for i, label in enumerate(objects)}
        if len(obj_index) != len(objects):
            raise InvalidGroupoid("object labels must be distinct")
        mor_index: Dict[Hashable, int] = {}
        src, dst, labels = [], [], []
        for label, s, t in morphisms:
            if label in mor_index:
                raise InvalidGroupoid(
                    f"duplicate morphism {label!r}", {"morphism": label}
                )
            if s not in obj_index or t not in obj_index:
                raise InvalidGroupoid(
                    f"morphism {label!r} has an unknown endpoint", {"morphism": label}
                )
            mor_index[label] = len(labels)
            labels.append(label)
            src.append(obj_index[s])
            dst.append(obj_index[t])
        table: Dict[Tuple[int, int], int] = {}
        for f, g, h in compose:
            for m in (f, g, h):
                if m not in mor_index:
                    raise InvalidGroupoid(
                        f"composition mentions unknown morphism {m!r}", {"morphism": m}
                    )
            table[(mor_index[f], mor_index[g])] = mor_index[h]

        if identities is not None:
            try:
                ids = [mor_index[identities[x]] for x in objects]
            except KeyError as e:
                raise InvalidGroupoid(f"no identity for {e.args[0]!r}")
        else:
            ids = []
            for x in range(len(objects)):
                endos = [
                    f for f in range(len(src)) if src[f] == x and dst[f] == x
                ]
                idem = [f for f in endos if table.get((f, f)) == f]
                if not idem:
                    raise InvalidGroupoid(
                        f"object {objects[x]!r} has no identity",
                        {"object": objects[x]},
                    )
                ids.append(idem[0])
        groupoid = FiniteGroupoid(objects, src, dst, ids, table, morphism_labels=labels)
        return groupoid.validate()

    @staticmethod
    def restrict(
        groupoid: FiniteGroupoid, objects: Sequence[int]
    ) -> Tuple[FiniteGroupoid, Tuple[int, ...]]:
        """
        The full subgroupoid on the given objects

        Returns:
            The subgroupoid and, per subgroupoid morphism, its id in the
            ambient groupoid
        """
        objects = sorted(set(objects))
        position = {x: i for i, x in enumerate(objects)}
        morphisms = tuple(
            f
            for f in range(groupoid.num_morphisms)
            if groupoid.src[f] in position and groupoid.dst[f] in position
        )
        local = {f: i for i, f in enumerate(morphisms)}
        sub = FiniteGroupoid(
            [groupoid.objects[x] for x in objects],
            [position[groupoid.src[f]] for f in morphisms],
            [position[groupoid.dst[f]] for f in morphisms],
            [local[groupoid.identities[x]] for x in objects],
            lambda f, g: local[groupoid.then(morphisms[f], morphisms[g])],
            morphism_labels=[groupoid.morphism_labels[f] for f in morphisms],
        )
        return sub, morphisms

    def full_subgroupoid(
        self, groupoid: FiniteGroupoid, objects: Sequence[int]
    ) -> FiniteGroupoid:
        return self.restrict(groupoid, objects)[0]

    @staticmethod
    def vertex_group(
        groupoid: FiniteGroupoid, x: int
    ) -> Tuple[FiniteGroup, Tuple[int, ...]]:
        """
        Automorphism group of x with product a·b = then(a, b)

        Returns:
            The group and the morphism id of each group element (identity first)
        """
        ident = groupoid.identities[x]
        elems = (ident,) + tuple(f for f in groupoid.hom(x, x) if f != ident)
        index = {f: i for i, f in enumerate(elems)}
        table = [[index[groupoid.then(a, b)] for b in elems] for a in elems]
        return group_service.group_from_cayley(table, validate=False), elems

    # ------------------------------------------------------------------
    # Cardinality and skeleta
    # ------------------------------------------------------------------

    @staticmethod
    def groupoid_cardinality(groupoid: FiniteGroupoid) -> Fraction:
        """Σ over isomorphism classes of 1/#(vertex group)"""
        return sum(
            (Fraction(1, groupoid.vertex_order(c[0])) for c in groupoid.iso_classes),
            Fraction(0),
        )

    def skeleton(self, groupoid: FiniteGroupoid) -> SkeletalForm:
        return SkeletalForm(
            tuple(
                (c[0], self.vertex_group(groupoid, c[0])[0])
                for c in groupoid.iso_classes
            )
        )

    def is_equivalent(self, g: FiniteGroupoid, h: FiniteGroupoid) -> bool:
        """Equivalent iff classes pair off with isomorphic vertex groups"""
        left = list(self.skeleton(g).groups)
        right = list(self.skeleton(h).groups)
        if len(left) != len(right):
            return False
        for a in left:
            for i, b in enumerate(right):
                if group_service.are_isomorphic(a, b):
                    del right[i]
                    break
            else:
                return False
        return True

    # ------------------------------------------------------------------
    # Products and coproducts
    # ------------------------------------------------------------------

    @staticmethod
    def product(g: FiniteGroupoid, h: FiniteGroupoid) -> FiniteGroupoid:
        """Objects (x, y) are indexed x·#obj(H) + y, morphisms likewise"""
        m, k = h.num_objects, h.num_morphisms
        pairs = list(itertools.product(range(g.num_morphisms), range(k)))
        return FiniteGroupoid(
            [(x, y) for x in g.objects for y in h.objects],
            [g.src[f] * m + h.src[e] for f, e in pairs],
            [g.dst[f] * m + h.dst[e] for f, e in pairs],
            [
                g.identities[x] * k + h.identities[y]
                for x in range(g.num_objects)
                for y in range(m)
            ],
            lambda a, b: g.then(a // k, b // k) * k + h.then(a % k, b % k),
            morphism_labels=[
                (g.morphism_labels[f], h.morphism_labels[e]) for f, e in pairs
            ],
        )

    @staticmethod
    def coproduct(g: FiniteGroupoid, h: FiniteGroupoid) -> FiniteGroupoid:
        """H's objects and morphisms are shifted past G's"""
        m, k = g.num_objects, g.num_morphisms

        def then(a: int, b: int) -> int:
            if a < k:
                return g.then(a, b)
            return h.then(a - k, b - k) + k

        return FiniteGroupoid(
            [(0, x) for x in g.objects] + [(1, y) for y in h.objects],
            list(g.src) + [s + m for s in h.src],
            list(g.dst) + [t + m for t in h.dst],
            list(g.identities) + [e + k for e in h.identities],
            then,
            morphism_labels=[(0, f) for f in g.morphism_labels]
            + [(1, f) for f in h.morphism_labels],
        )

    # ------------------------------------------------------------------
    # Action groupoids
    # ------------------------------------------------------------------

    def action_groupoid(
        self,
        size: int,
        group: FiniteGroup,
        action: Union[GroupHom, Sequence[Permutation]],
    ) -> FiniteGroupoid:
        """
        X // G: objects the points of X, a morphism (g, x): x → g·x per pair

        Args:
            size: #X
            group: The acting group
            action: Either a GroupHom into the Cayley table of Sym(#X), or one
                    permutation of range(#X) per group element

        Returns:
            The action groupoid; (g, x) is indexed g·#X + x and
            (g, x) followed by (h, g·x) is (h·g, x)

        Raises:
            InvalidAction: If the data is not a left action of G
        """
        if isinstance(action, GroupHom):
            if action.source != group:
                raise InvalidAction("action homomorphism has the wrong source")
            sym_elements = sorted(itertools.permutations(range(size)))
            if action.target.order != len(sym_elements):
                raise InvalidAction(f"action must land in Sym({size})")
            perms = [sym_elements[action.map[g]] for g in group.elements()]
        else:
            perms = [tuple(p) for p in action]
        if len(perms) != group.order:
            raise InvalidAction("need one permutation per group element")
        for g, p in enumerate(perms):
            if sorted(p) != list(range(size)):
                raise InvalidAction(
                    f"element {g} does not act by a permutation", {"element": g}
                )
        if perms[0] != tuple(range(size)):
            raise InvalidAction("identity must act trivially")
        for g in group.elements():
            for h in group.elements():
                if perms[group.mul(h, g)] != compose_permutations(perms[h], perms[g]):
                    raise InvalidAction(
                        "act(h·g) != act(h)∘act(g)", {"pair": [h, g]}
                    )

        n = size
        return FiniteGroupoid(
            range(n),
            [x for _ in group.elements() for x in range(n)],
            [perms[g][x] for g in group.elements() for x in range(n)],
            list(range(n)),
            lambda a, b: group.mul(b // n, a // n) * n + a % n,
            morphism_labels=[(g, x) for g in group.elements() for x in range(n)],
            name="action",
        )

    # ------------------------------------------------------------------
    # Functor groupoids
    # ------------------------------------------------------------------

    def _component_data(self, h: FiniteGroupoid):
        """Per class: representative y, its vertex group, spanning morphisms y → x"""
        data = []
        for members in h.iso_classes:
            y = members[0]
            group, elems = self.vertex_group(h, y)
            spanning = {x: h.hom(y, x)[0] for x in members}
            spanning[y] = h.identities[y]
            data.append((y, members, group, elems, spanning))
        return data

    def enumerate_functors(
        self, h: FiniteGroupoid, g: FiniteGroupoid, limit: Optional[int] = None
    ) -> List[GroupoidFunctor]:
        """
        Every functor H → G

        A functor is fixed by, per class of H, the image c of the
        representative y, a homomorphism H_y → G_c, and the image of one
        spanning morphism y → x for every other member x.

        Raises:
            SizeLimit: If the number of functors exceeds the limit
        """
        limit = self.functor_limit if limit is None else limit
        components = self._component_data(h)
        g_groups = [self.vertex_group(g, c) for c in range(g.num_objects)]

        per_component = []
        total = 1
        for y, members, hy, h_elems, spanning in components:
            choices = []
            count = 0
            for c in range(g.num_objects):
                gc, g_elems = g_groups[c]
                homs = group_service.enumerate_homs(hy, gc)
                out = g.out_morphisms(c)
                count += len(homs) * len(out) ** (len(members) - 1)
                if count * total > limit:
                    raise SizeLimit(
                        f"more than {limit} functors", {"limit": limit}
                    )
                choices.append((c, g_elems, homs, out))
            total *= count
            per_component.append(choices)
        logger.debug("enumerating %d functors", total)

        h_inverse = [h.inverse(f) for f in range(h.num_morphisms)]
        comp_of = h.class_index
        local_maps = []
        for component, choices in zip(components, per_component):
            y, members, hy, h_elems, spanning = component
            elem_index = {f: i for i, f in enumerate(h_elems)}
            others = [x for x in members if x != y]
            options = []
            for c, g_elems, homs, out in choices:
                for phi in homs:
                    for images in itertools.product(out, repeat=len(others)):
                        chosen = dict(zip(others, images))
                        chosen[y] = g.identities[c]
                        options.append((phi, g_elems, elem_index, chosen))
            local_maps.append(options)

        functors = []
        for combo in itertools.product(*local_maps):
            obj_map = [0] * h.num_objects
            for _, _, _, chosen in combo:
                for x, m in chosen.items():
                    obj_map[x] = g.dst[m]
            mor_map = [0] * h.num_morphisms
            for f in range(h.num_morphisms):
                x, x2 = h.src[f], h.dst[f]
                spanning = components[comp_of[x]][4]
                phi, g_elems, elem_index, chosen = combo[comp_of[x]]
                loop = h.then(h.then(spanning[x], f), h_inverse[spanning[x2]])
                image = g_elems[phi.map[elem_index[loop]]]
                mor_map[f] = g.then(g.then(g.inverse(chosen[x]), image), chosen[x2])
            functors.append(GroupoidFunctor(h, g, tuple(obj_map), tuple(mor_map)))
        return functors

    def functor_groupoid(
        self, h: FiniteGroupoid, g: FiniteGroupoid, limit: Optional[int] = None
    ) -> FiniteGroupoid:
        """
        G^H: objects all functors H → G, morphisms all natural isomorphisms

        A natural isomorphism out of F is any family α_x of morphisms out of
        F(x); its target is F' with F'(f) = α_x⁻¹ · F(f) · α_y. Composition
        is componentwise.

        Raises:
            SizeLimit: If functors or natural isomorphisms exceed the limit
        """
        limit = self.functor_limit if limit is None else limit
        functors = self.enumerate_functors(h, g, limit)
        position = {(F.object_map, F.morphism_map): i for i, F in enumerate(functors)}
        xs = range(h.num_objects)

        src: List[int] = []
        dst: List[int] = []
        labels: List[Tuple[int, Tuple[int, ...]]] = []
        for i, F in enumerate(functors):
            for alpha in itertools.product(
                *(g.out_morphisms(F.object_map[x]) for x in xs)
            ):
                if len(labels) >= limit:
                    raise SizeLimit(
                        f"more than {limit} natural isomorphisms", {"limit": limit}
                    )
                obj_map = tuple(g.dst[a] for a in alpha)
                mor_map = tuple(
                    g.then(
                        g.then(g.inverse(alpha[h.src[f]]), F.morphism_map[f]),
                        alpha[h.dst[f]],
                    )
                    for f in range(h.num_morphisms)
                )
                src.append(i)
                dst.append(position[(obj_map, mor_map)])
                labels.append((i, alpha))
        index = {label: k for k, label in enumerate(labels)}
        identities = [
            index[(i, tuple(g.identities[F.object_map[x]] for x in xs))]
            for i, F in enumerate(functors)
        ]

        def then(a: int, b: int) -> int:
            i, alpha = labels[a]
            _, beta = labels[b]
            return index[(i, tuple(g.then(p, q) for p, q in zip(alpha, beta)))]

        return FiniteGroupoid(
            functors,
            src,
            dst,
            identities,
            then,
            morphism_labels=labels,
            name="functors",
        )

    def functor_groupoid_cardinality(
        self, h: FiniteGroupoid, g: FiniteGroupoid
    ) -> Fraction:
        """Π over classes [y] of H, Σ over classes [x] of G, of #hom(H_y, G_x)/#G_x"""
        targets = self.skeleton(g).groups
        result = Fraction(1)
        for source in self.skeleton(h).groups:
            result *= sum(
                (
                    Fraction(group_service.count_homs(source, target), target.order)
                    for target in targets
                ),
                Fraction(0),
            )
        return result


# Create a singleton instance
groupoid_service = GroupoidService()
