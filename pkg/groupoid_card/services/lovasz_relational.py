import itertools
import logging
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from groupoid_card.core.config import settings
from groupoid_card.core.exceptions import (
    InvalidPartition,
    SignatureMismatch,
    TheoremViolation,
    UniverseTooLarge,
    ValidationError,
)
from groupoid_card.models.structure import (
    HomInjIdentity,
    LovaszVerdict,
    Partition,
    RelationalStructure,
)

logger = logging.getLogger(__name__)

STRATEGIES = ("exhaustive", "quotients")

Signature = Tuple[int, ...]


@lru_cache(maxsize=None)
def _positions(signature: Signature, n: int) -> Tuple[Tuple[int, tuple], ...]:
    """Every (relation, tuple) slot over an n-element universe, in a fixed order"""
    return tuple(
        (i, t)
        for i, arity in enumerate(signature)
        for t in itertools.product(range(n), repeat=arity)
    )


@lru_cache(maxsize=None)
def _bit_index(signature: Signature, n: int) -> Dict[Tuple[int, tuple], int]:
    return {slot: b for b, slot in enumerate(_positions(signature, n))}


@lru_cache(maxsize=None)
def _bit_permutations(signature: Signature, n: int) -> Tuple[Tuple[int, ...], ...]:
    """For each relabelling of the universe, where every slot bit moves to"""
    index = _bit_index(signature, n)
    slots = _positions(signature, n)
    return tuple(
        tuple(index[(i, tuple(p[v] for v in t))] for i, t in slots)
        for p in itertools.permutations(range(n))
    )


def _relabel(mask: int, moves: Tuple[int, ...]) -> int:
    out = 0
    b = 0
    while mask:
        if mask & 1:
            out |= 1 << moves[b]
        mask >>= 1
        b += 1
    return out


def _is_minimal(mask: int, perms: Tuple[Tuple[int, ...], ...]) -> bool:
    return all(_relabel(mask, moves) >= mask for moves in perms)


@lru_cache(maxsize=None)
def _canonical_masks(signature: Signature, n: int) -> Tuple[int, ...]:
    perms = _bit_permutations(signature, n)
    total = len(_positions(signature, n))
    return tuple(m for m in range(1 << total) if _is_minimal(m, perms))


class RelationalService:
    """Homomorphism counts between finite relational structures"""

    def __init__(self):
        self.max_partition_universe = settings.MAX_PARTITION_UNIVERSE
        self.max_canonical_universe = settings.MAX_CANONICAL_UNIVERSE
        self.default_bound = settings.DEFAULT_LOVASZ_BOUND

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @staticmethod
    def digraph(n: int, edges: Sequence[Sequence[int]]) -> RelationalStructure:
        return RelationalStructure.build((2,), n, [edges])

    @staticmethod
    def disjoint_union(
        a: RelationalStructure, b: RelationalStructure
    ) -> RelationalStructure:
        """B's universe is shifted past A's"""
        if a.signature != b.signature:
            raise SignatureMismatch("structures have different signatures")
        shift = a.size
        return RelationalStructure.build(
            a.signature,
            a.size + b.size,
            [
                list(ra) + [tuple(v + shift for v in t) for t in rb]
                for ra, rb in zip(a.relations, b.relations)
            ],
        )

    @staticmethod
    def product_structure(
        a: RelationalStructure, b: RelationalStructure
    ) -> RelationalStructure:
        """Categorical product on pairs (x, y) numbered x·|B| + y"""
        if a.signature != b.signature:
            raise SignatureMismatch("structures have different signatures")
        m = b.size
        return RelationalStructure.build(
            a.signature,
            a.size * m,
            [
                [tuple(x * m + y for x, y in zip(s, t)) for s in ra for t in rb]
                for ra, rb in zip(a.relations, b.relations)
            ],
        )

    # ------------------------------------------------------------------
    # Counting
    # ------------------------------------------------------------------

    def _homomorphisms(
        self, c: RelationalStructure, a: RelationalStructure, injective: bool
    ) -> Iterator[Tuple[int, ...]]:
        if c.signature != a.signature:
            raise SignatureMismatch(
                "structures have different signatures",
                {"source": list(c.signature), "target": list(a.signature)},
            )
        for rel_c, rel_a in zip(c.relations, a.relations):
            if () in rel_c and () not in rel_a:
                return
        n = c.size
        due: List[List[Tuple[int, tuple]]] = [[] for _ in range(n)]
        for i, rel in enumerate(c.relations):
            for t in rel:
                if t:
                    due[max(t)].append((i, t))
        image = [0] * n
        used = [False] * a.size

        def search(v: int) -> Iterator[Tuple[int, ...]]:
            if v == n:
                yield tuple(image)
                return
            for w in range(a.size):
                if injective and used[w]:
                    continue
                image[v] = w
                if all(
                    tuple(image[u] for u in t) in a.relations[i] for i, t in due[v]
                ):
                    used[w] = True
                    yield from search(v + 1)
                    used[w] = False

        yield from search(0)

    def count_homs(self, c: RelationalStructure, a: RelationalStructure) -> int:
        """
        Number of maps C → A sending every tuple of R_i into S_i

        Raises:
            SignatureMismatch: If the signatures differ
        """
        return sum(1 for _ in self._homomorphisms(c, a, False))

    def count_injective_homs(
        self, c: RelationalStructure, a: RelationalStructure
    ) -> int:
        return sum(1 for _ in self._homomorphisms(c, a, True))

    def find_isomorphism(
        self, a: RelationalStructure, b: RelationalStructure
    ) -> Optional[Tuple[int, ...]]:
        """
        A relabelling of A onto B, by direct backtracking

        With equal sizes and equal relation sizes, an injective homomorphism
        is an isomorphism.
        """
        if a.signature != b.signature:
            raise SignatureMismatch("structures have different signatures")
        if a.size != b.size or any(
            len(ra) != len(rb) for ra, rb in zip(a.relations, b.relations)
        ):
            return None
        return next(self._homomorphisms(a, b, True), None)

    # ------------------------------------------------------------------
    # Partitions and quotients
    # ------------------------------------------------------------------

    @staticmethod
    def partitions(n: int) -> Iterator[Partition]:
        """Set partitions of range(n) as restricted-growth strings, lexicographically"""

        def grow(prefix: List[int], top: int) -> Iterator[Partition]:
            if len(prefix) == n:
                yield Partition(tuple(prefix))
                return
            for b in range(top + 2):
                prefix.append(b)
                yield from grow(prefix, max(top, b))
                prefix.pop()

        yield from grow([], -1)

    @staticmethod
    def quotient_structure(
        c: RelationalStructure, theta: Partition
    ) -> RelationalStructure:
        """C/θ: universe the blocks, relations the images of C's tuples"""
        if len(theta.blocks) != c.size:
            raise InvalidPartition(
                f"partition covers {len(theta.blocks)} elements, structure has {c.size}"
            )
        return RelationalStructure.build(
            c.signature,
            theta.num_blocks,
            [
                {tuple(theta.blocks[v] for v in t) for t in rel}
                for rel in c.relations
            ],
        )

    def verify_hom_inj_identity(
        self, c: RelationalStructure, a: RelationalStructure
    ) -> HomInjIdentity:
        """
        hom(C, A) = Σ_θ inj(C/θ, A) over all partitions θ of C

        Raises:
            UniverseTooLarge: If |C| exceeds MAX_PARTITION_UNIVERSE
            TheoremViolation: If the two sides differ
        """
        if c.size > self.max_partition_universe:
            raise UniverseTooLarge(
                f"universe {c.size} exceeds the cap {self.max_partition_universe}",
                {"size": c.size, "cap": self.max_partition_universe},
            )
        hom = self.count_homs(c, a)
        total = sum(
            self.count_injective_homs(self.quotient_structure(c, theta), a)
            for theta in self.partitions(c.size)
        )
        if hom != total:
            raise TheoremViolation(
                "hom count differs from the sum over quotients",
                {"hom": hom, "sum": total},
            )
        return HomInjIdentity(hom, total, True)

    # ------------------------------------------------------------------
    # Canonical forms
    # ------------------------------------------------------------------

    def _check_canonical_size(self, n: int) -> None:
        if n > self.max_canonical_universe:
            raise UniverseTooLarge(
                f"universe {n} exceeds the cap {self.max_canonical_universe}",
                {"size": n, "cap": self.max_canonical_universe},
            )

    @staticmethod
    def _mask(c: RelationalStructure) -> int:
        index = _bit_index(c.signature, c.size)
        mask = 0
        for i, rel in enumerate(c.relations):
            for t in rel:
                mask |= 1 << index[(i, t)]
        return mask

    @staticmethod
    def _from_mask(signature: Signature, n: int, mask: int) -> RelationalStructure:
        relations: List[List[tuple]] = [[] for _ in signature]
        for b, (i, t) in enumerate(_positions(signature, n)):
            if mask >> b & 1:
                relations[i].append(t)
        return RelationalStructure.build(signature, n, relations)

    def canonical_mask(self, c: RelationalStructure) -> int:
        self._check_canonical_size(c.size)
        mask = self._mask(c)
        return min(
            _relabel(mask, moves) for moves in _bit_permutations(c.signature, c.size)
        )

    def canonical_form(self, c: RelationalStructure) -> RelationalStructure:
        """The isomorphic copy whose relation encoding is least over all relabellings"""
        return self._from_mask(c.signature, c.size, self.canonical_mask(c))

    def enumerate_structures(
        self, signature: Sequence[int], max_size: int
    ) -> List[RelationalStructure]:
        """
        All structures with universe size ≤ max_size, one per isomorphism class

        Returns:
            Canonical representatives ordered by size, then encoding
        """
        signature = tuple(signature)
        self._check_canonical_size(max_size)
        result = [
            self._from_mask(signature, n, m)
            for n in range(max_size + 1)
            for m in _canonical_masks(signature, n)
        ]
        logger.debug("%d structures up to size %d", len(result), max_size)
        return result

    def _quotient_probes(
        self, *structures: RelationalStructure
    ) -> List[RelationalStructure]:
        keys = set()
        for s in structures:
            self._check_canonical_size(s.size)
            for theta in self.partitions(s.size):
                q = self.quotient_structure(s, theta)
                keys.add((q.size, self.canonical_mask(q)))
        signature = structures[0].signature
        return [self._from_mask(signature, n, m) for n, m in sorted(keys)]

    # ------------------------------------------------------------------
    # Isomorphism test
    # ------------------------------------------------------------------

    def lovasz_iso_test(
        self,
        a: RelationalStructure,
        b: RelationalStructure,
        bound: Optional[int] = None,
        strategy: str = "exhaustive",
    ) -> LovaszVerdict:
        """
        Compare hom(C, A) with hom(C, B) over probe structures C

        Args:
            a: First structure
            b: Second structure
            bound: Largest probe universe for the exhaustive strategy
                   (default DEFAULT_LOVASZ_BOUND); must be ≥ max(|A|, |B|)
            strategy: "exhaustive" probes every structure up to the bound,
                      "quotients" probes every quotient of A and of B

        Returns:
            LovaszVerdict with the first distinguishing C, or isomorphic=True
            after a direct isomorphism search confirms it

        Raises:
            SignatureMismatch: If the signatures differ
            TheoremViolation: If no probe separates two non-isomorphic structures
        """
        if a.signature != b.signature:
            raise SignatureMismatch("structures have different signatures")
        if strategy not in STRATEGIES:
            raise ValidationError(
                f"unknown strategy {strategy!r}", {"strategies": list(STRATEGIES)}
            )
        if strategy == "exhaustive":
            bound = self.default_bound if bound is None else bound
            if bound < max(a.size, b.size):
                raise ValidationError(
                    f"bound {bound} is below the larger universe size",
                    {"bound": bound, "sizes": [a.size, b.size]},
                )
            probes = self.enumerate_structures(a.signature, bound)
        else:
            probes = self._quotient_probes(a, b)

        for checked, c in enumerate(probes, start=1):
            hom_a, hom_b = self.count_homs(c, a), self.count_homs(c, b)
            if hom_a != hom_b:
                logger.info("distinguished after %d probes", checked)
                return LovaszVerdict(c, hom_a, hom_b, False, checked)

        if self.find_isomorphism(a, b) is None:
            raise TheoremViolation(
                "equal hom counts from every probe but no isomorphism",
                {"probes": len(probes)},
            )
        return LovaszVerdict(None, None, None, True, len(probes))


# Create a singleton instance
relational_service = RelationalService()
