import itertools
import logging
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from groupoid_card.core.config import settings
from groupoid_card.core.exceptions import (
    BaseMismatch,
    GroupTooLarge,
    TheoremViolation,
    ValidationError,
)
from groupoid_card.models.group import FiniteGroup, GroupHom
from groupoid_card.models.groupoid import FiniteGroupoid
from groupoid_card.models.relfin import (
    ComponentPair,
    DecompositionCheck,
    DistinguisherResult,
    EQuotient,
    EquivalenceDecision,
    RelFinFactorization,
    RelFinHomPair,
    RelFinObject,
    component_key,
)
from groupoid_card.services.group_core import group_service
from groupoid_card.services.groupoid_core import groupoid_service

logger = logging.getLogger(__name__)


class RelFinService:
    """Relatively finite objects over a one-object base BG"""

    def __init__(self):
        self.max_order = settings.RELFIN_MAX_ORDER
        self.small_group_max_order = settings.SMALL_GROUP_MAX_ORDER

    # ------------------------------------------------------------------
    # Objects
    # ------------------------------------------------------------------

    @staticmethod
    def _same_base(*objects: RelFinObject) -> FiniteGroup:
        base = objects[0].base
        for obj in objects[1:]:
            if obj.base != base:
                raise BaseMismatch("objects live over different base groups")
        return base

    @staticmethod
    def _single(obj: RelFinObject) -> GroupHom:
        if not obj.is_single:
            raise ValidationError(
                "expected a single-component object",
                {"components": len(obj.components)},
            )
        return obj.hom

    def coproduct(self, f: RelFinObject, g: RelFinObject) -> RelFinObject:
        base = self._same_base(f, g)
        return RelFinObject(base, f.components + g.components)

    def as_groupoid(self, obj: RelFinObject) -> FiniteGroupoid:
        """The total groupoid ∐ BK_i, forgetting the map to the base"""
        return groupoid_service.from_skeletal([c.source for c in obj.components])

    # ------------------------------------------------------------------
    # 1-morphisms
    # ------------------------------------------------------------------

    @staticmethod
    def _satisfies(s: GroupHom, t: GroupHom, phi: GroupHom, g: int) -> bool:
        base = s.target
        g_inv = base.inv(g)
        return all(
            s.map[h] == base.mul(base.mul(g_inv, t.map[phi.map[h]]), g)
            for h in s.source.elements()
        )

    def _component_pairs(
        self,
        s: GroupHom,
        t: GroupHom,
        target_index: int = 0,
        injective_only: bool = False,
    ) -> List[ComponentPair]:
        pairs = []
        for phi in group_service.enumerate_homs(s.source, t.source):
            if injective_only and len(set(phi.map)) != s.source.order:
                continue
            for g in s.target.elements():
                if self._satisfies(s, t, phi, g):
                    pairs.append(ComponentPair(target_index, phi, g))
        return pairs

    def enumerate_hom_pairs(
        self, source: RelFinObject, target: RelFinObject
    ) -> List[RelFinHomPair]:
        """
        All pairs (φ, g) between single components with S(h) = g⁻¹·T(φ(h))·g

        Returns:
            Pairs ordered by the map of φ, then by g

        Raises:
            BaseMismatch: If the objects live over different bases
        """
        self._same_base(source, target)
        s, t = self._single(source), self._single(target)
        return [
            RelFinHomPair(source, target, (pair,))
            for pair in self._component_pairs(s, t)
        ]

    def enumerate_morphisms(
        self, source: RelFinObject, target: RelFinObject
    ) -> List[RelFinHomPair]:
        """Every 1-morphism: a target component and a pair per source component"""
        self._same_base(source, target)
        per_source = [
            [
                pair
                for j, t in enumerate(target.components)
                for pair in self._component_pairs(s, t, j)
            ]
            for s in source.components
        ]
        return [
            RelFinHomPair(source, target, tuple(choice))
            for choice in itertools.product(*per_source)
        ]

    @staticmethod
    def compose_pairs(
        base: FiniteGroup, first: ComponentPair, second: ComponentPair
    ) -> ComponentPair:
        """(φ₁, g₁) followed by (φ₂, g₂) is (φ₂∘φ₁, g₂·g₁)"""
        phi = group_service.compose_homs(first.phi, second.phi)
        return ComponentPair(second.target_index, phi, base.mul(second.g, first.g))

    def compose_morphisms(
        self, first: RelFinHomPair, second: RelFinHomPair
    ) -> RelFinHomPair:
        """Composite of 1-morphisms, source components routed through first"""
        base = self._same_base(first.source, second.source)
        return RelFinHomPair(
            first.source,
            second.target,
            tuple(
                self.compose_pairs(base, pair, second.pairs[pair.target_index])
                for pair in first.pairs
            ),
        )

    # ------------------------------------------------------------------
    # Hom-groupoid cardinalities
    # ------------------------------------------------------------------

    def _single_source_cardinality(
        self, s: GroupHom, target: RelFinObject, injective_only: bool
    ) -> Fraction:
        total = Fraction(0)
        for j, t in enumerate(target.components):
            count = len(self._component_pairs(s, t, j, injective_only))
            total += Fraction(count, t.source.order)
        return total

    def hom_groupoid_cardinality(
        self, source: RelFinObject, target: RelFinObject
    ) -> Fraction:
        """
        |RelFin(S, F)|

        For a single component S the hom groupoid over target component K
        is the action groupoid of K on pairs, k·(φ, g) = (conj_k∘φ, T(k)·g),
        so it contributes #pairs/#K. A multi-component source gives the
        product over its components.

        Raises:
            BaseMismatch: If the objects live over different bases
        """
        self._same_base(source, target)
        result = Fraction(1)
        for s in source.components:
            result *= self._single_source_cardinality(s, target, False)
        return result

    def faithful_hom_cardinality(
        self, source: RelFinObject, target: RelFinObject
    ) -> Fraction:
        """|M̃(S, F)|: the same count over pairs whose φ is injective"""
        self._same_base(source, target)
        result = Fraction(1)
        for s in source.components:
            result *= self._single_source_cardinality(s, target, True)
        return result

    def hom_groupoid(
        self, source: RelFinObject, target: RelFinObject
    ) -> FiniteGroupoid:
        """
        The hom groupoid built explicitly

        Per source component: the coproduct over target components of the
        action groupoid of K on pairs. Source components multiply.
        """
        self._same_base(source, target)
        result = groupoid_service.discrete(1)
        for s in source.components:
            factor = groupoid_service.empty()
            for j, t in enumerate(target.components):
                pairs = [(p.phi.map, p.g) for p in self._component_pairs(s, t, j)]
                position = {p: i for i, p in enumerate(pairs)}
                k = t.source
                perms = []
                for a in k.elements():
                    perms.append(
                        tuple(
                            position[
                                (
                                    tuple(k.conjugate(x, a) for x in phi_map),
                                    s.target.mul(t.map[a], g),
                                )
                            ]
                            for phi_map, g in pairs
                        )
                    )
                factor = groupoid_service.coproduct(
                    factor, groupoid_service.action_groupoid(len(pairs), k, perms)
                )
            result = groupoid_service.product(result, factor)
        return result

    # ------------------------------------------------------------------
    # E-quotients and the decomposition
    # ------------------------------------------------------------------

    def _quotient_object(
        self, s: GroupHom, normal: Sequence[int]
    ) -> Tuple[GroupHom, GroupHom]:
        quotient, projection = group_service.quotient_group(s.source, normal)
        induced = [0] * quotient.order
        for h, q in enumerate(projection.map):
            induced[q] = s.map[h]
        return GroupHom(quotient, s.target, tuple(induced)), projection

    def _quotients_equivalent(
        self, s: GroupHom, first: EQuotient, second: EQuotient
    ) -> bool:
        """Search (χ, k, g) with (χ, g)∘p₁ ≅ p₂ through the 2-cell k"""
        t1, t2 = first.quotient_object.hom, second.quotient_object.hom
        p1 = first.projection.pairs[0].phi
        p2 = second.projection.pairs[0].phi
        q1, q2 = t1.source, t2.source
        if q1.order != q2.order:
            return False
        base = s.target
        for chi in group_service.enumerate_homs(q1, q2):
            if len(set(chi.map)) != q2.order:
                continue
            for g in base.elements():
                if not self._satisfies(t1, t2, chi, g):
                    continue
                for k in q2.elements():
                    if base.mul(t2.map[k], g) != 0:
                        continue
                    if all(
                        p2.map[h] == q2.conjugate(chi.map[p1.map[h]], k)
                        for h in s.source.elements()
                    ):
                        return True
        return False

    def e_quotients(self, source: RelFinObject) -> List[EQuotient]:
        """
        The E-quotients S ↠ B(H/N) → BG up to equivalence

        One candidate per normal N contained in ker S; candidates are
        deduplicated by an exhaustive search for an equivalence under S,
        keeping the smallest kernel of each class.
        """
        s = self._single(source)
        kernel = set(group_service.kernel(s))
        quotients: List[EQuotient] = []
        for normal in group_service.normal_subgroups(s.source):
            if not set(normal) <= kernel:
                continue
            induced, projection = self._quotient_object(s, normal)
            obj = RelFinObject.single(induced)
            candidate = EQuotient(
                normal,
                obj,
                RelFinHomPair(source, obj, (ComponentPair(0, projection, 0),)),
            )
            if not any(self._quotients_equivalent(s, q, candidate) for q in quotients):
                quotients.append(candidate)
        logger.debug("%d E-quotients", len(quotients))
        return quotients

    def _check_order_cap(self, *objects: RelFinObject) -> None:
        for obj in objects:
            for c in obj.components:
                if c.source.order > self.max_order:
                    raise GroupTooLarge(
                        f"component order {c.source.order} exceeds the cap "
                        f"{self.max_order}",
                        {"order": c.source.order, "cap": self.max_order},
                    )

    def verify_factor_decomposition(
        self, source: RelFinObject, target: RelFinObject
    ) -> DecompositionCheck:
        """
        |RelFin(S, F)| against Σ over E-quotients S ↠ T of |M̃(T, F)|

        A multi-component source is checked componentwise: both sides are
        products over the components of S.

        Raises:
            GroupTooLarge: If a component exceeds RELFIN_MAX_ORDER
            TheoremViolation: If the two sides differ
        """
        self._same_base(source, target)
        self._check_order_cap(source, target)
        lhs = self.hom_groupoid_cardinality(source, target)
        rhs = Fraction(1)
        for i in range(len(source.components)):
            rhs *= sum(
                (
                    self.faithful_hom_cardinality(q.quotient_object, target)
                    for q in self.e_quotients(source.component(i))
                ),
                Fraction(0),
            )
        logger.info("decomposition: lhs=%s rhs=%s", lhs, rhs)
        if lhs != rhs:
            raise TheoremViolation(
                "hom cardinality does not decompose over E-quotients",
                {"lhs": str(lhs), "rhs": str(rhs)},
            )
        return DecompositionCheck(lhs, rhs, True)

    # ------------------------------------------------------------------
    # Equivalence
    # ------------------------------------------------------------------

    def is_equivalence_morphism(self, morphism: RelFinHomPair) -> bool:
        """Components correspond bijectively and every φ is a group isomorphism"""
        assignment = morphism.component_assignment
        if len(assignment) != len(morphism.target.components) or len(
            set(assignment)
        ) != len(assignment):
            return False
        return all(
            group_service.hom_predicates(pair.phi).isomorphism
            for pair in morphism.pairs
        )

    def component_equivalence(
        self, s: GroupHom, t: GroupHom, target_index: int = 0
    ) -> Optional[ComponentPair]:
        """A pair (φ iso, g) between two components, if any"""
        if s.source.order != t.source.order:
            return None
        for phi in group_service.enumerate_homs(s.source, t.source):
            if len(set(phi.map)) != t.source.order:
                continue
            for g in s.target.elements():
                if self._satisfies(s, t, phi, g):
                    return ComponentPair(target_index, phi, g)
        return None

    def decide_equivalence(
        self, first: RelFinObject, second: RelFinObject
    ) -> EquivalenceDecision:
        """
        Decide F ≃ F′ by perfect matching of equivalent components

        Returns:
            EquivalenceDecision carrying the matching and, per matched
            component, an equivalence (φ, g)

        Raises:
            BaseMismatch: If the objects live over different bases
        """
        self._same_base(first, second)
        n = len(first.components)
        if n != len(second.components):
            return EquivalenceDecision(False, {}, ())
        graph = nx.Graph()
        left = [("F", i) for i in range(n)]
        right = [("G", j) for j in range(n)]
        graph.add_nodes_from(left, bipartite=0)
        graph.add_nodes_from(right, bipartite=1)
        witnesses = {}
        for i, s in enumerate(first.components):
            for j, t in enumerate(second.components):
                pair = self.component_equivalence(s, t, j)
                if pair is not None:
                    graph.add_edge(("F", i), ("G", j))
                    witnesses[(i, j)] = pair
        matching = nx.bipartite.hopcroft_karp_matching(graph, top_nodes=left)
        matched = {i: matching[("F", i)][1] for i in range(n) if ("F", i) in matching}
        if len(matched) != n:
            return EquivalenceDecision(False, matched, ())
        morphism = RelFinHomPair(
            first, second, tuple(witnesses[(i, matched[i])] for i in range(n))
        )
        return EquivalenceDecision(True, matched, (morphism,))

    # ------------------------------------------------------------------
    # Counting distinguisher
    # ------------------------------------------------------------------

    def probe_objects(
        self, base: FiniteGroup, max_order: Optional[int] = None
    ) -> List[RelFinObject]:
        """Every BH → BG with H from the small-groups table, in canonical order"""
        if max_order is None:
            max_order = self.small_group_max_order
        probes = [
            RelFinObject.single(phi)
            for h in group_service.small_groups(max_order)
            for phi in group_service.enumerate_homs(h, base)
        ]
        return sorted(probes, key=lambda p: component_key(p.hom))

    def default_probes(self, *objects: RelFinObject) -> List[RelFinObject]:
        """Components of the objects and all their E-quotients"""
        probes = []
        for obj in objects:
            for i in range(len(obj.components)):
                component = obj.component(i)
                probes.append(component)
                probes.extend(q.quotient_object for q in self.e_quotients(component))
        return self._canonical(probes)

    @staticmethod
    def _canonical(probes: Iterable[RelFinObject]) -> List[RelFinObject]:
        unique = {p: None for p in probes}
        return sorted(unique, key=lambda p: component_key(p.hom))

    def counting_distinguisher(
        self,
        first: RelFinObject,
        second: RelFinObject,
        probes: Optional[Sequence[RelFinObject]] = None,
        exhaustive: bool = False,
    ) -> DistinguisherResult:
        """
        First probe S, in canonical order, with |RelFin(S, F)| ≠ |RelFin(S, F′)|

        Args:
            first: F
            second: F′
            probes: Single-component probes; defaults to the components of F
                    and F′ together with all their E-quotients
            exhaustive: Also probe every BH → BG with #H up to the largest
                        component order (within the small-groups table)

        Returns:
            DistinguisherResult; its witness is None when no probe differs

        Raises:
            BaseMismatch: If the objects live over different bases
        """
        base = self._same_base(first, second)
        if probes is None:
            candidates = self.default_probes(first, second)
        else:
            candidates = list(probes)
        if exhaustive:
            bound = min(
                max(first.max_component_order, second.max_component_order),
                self.small_group_max_order,
            )
            candidates = candidates + self.probe_objects(base, bound)
        for probe in candidates:
            self._single(probe)
            self._same_base(probe, first)
        candidates = self._canonical(candidates)
        for checked, probe in enumerate(candidates, start=1):
            lhs = self.hom_groupoid_cardinality(probe, first)
            rhs = self.hom_groupoid_cardinality(probe, second)
            if lhs != rhs:
                logger.info("distinguished after %d probes", checked)
                return DistinguisherResult(probe, lhs, rhs, checked)
        return DistinguisherResult(None, None, None, len(candidates))

    # ------------------------------------------------------------------
    # Slice factorization
    # ------------------------------------------------------------------

    def relfin_factorize(self, morphism: RelFinHomPair) -> RelFinFactorization:
        """
        Factor (φ, g): S → T as H ↠ H/ker φ ≅ im φ ↪ K over the base

        Returns:
            RelFinFactorization with stages (quotient, middle isomorphism,
            inclusion); composing them gives back (φ, g)
        """
        s = self._single(morphism.source)
        t = self._single(morphism.target)
        (pair,) = morphism.pairs
        phi, g = pair.phi, pair.g

        kernel = group_service.kernel(phi)
        s1, projection = self._quotient_object(s, kernel)
        image, inclusion = group_service.subgroup_as_group(
            t.source, group_service.image(phi)
        )
        t2 = group_service.compose_homs(inclusion, t)
        position = {a: i for i, a in enumerate(inclusion.map)}
        middle_map = [0] * s1.source.order
        for h, q in enumerate(projection.map):
            middle_map[q] = position[phi.map[h]]
        middle_hom = GroupHom(s1.source, image, tuple(middle_map))

        obj_s1 = RelFinObject.single(s1)
        obj_t2 = RelFinObject.single(t2)
        return RelFinFactorization(
            RelFinHomPair(
                morphism.source, obj_s1, (ComponentPair(0, projection, 0),)
            ),
            RelFinHomPair(obj_s1, obj_t2, (ComponentPair(0, middle_hom, g),)),
            RelFinHomPair(
                obj_t2, morphism.target, (ComponentPair(0, inclusion, 0),)
            ),
        )


# Create a singleton instance
relfin_service = RelFinService()
