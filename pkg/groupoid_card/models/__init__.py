"""Models module initialization"""

from groupoid_card.models.functor import (
    FunctorClassification,
    GroupoidFunctor,
    OrderVerdict,
    TernaryFactorization,
)
from groupoid_card.models.group import (
    CosetAction,
    FiniteGroup,
    GroupHom,
    HomPredicates,
    PermGroup,
    SubgroupClass,
)
from groupoid_card.models.groupoid import FiniteGroupoid, SkeletalForm
from groupoid_card.models.relfin import (
    ComponentPair,
    DecompositionCheck,
    DistinguisherResult,
    EQuotient,
    EquivalenceDecision,
    RelFinFactorization,
    RelFinHomPair,
    RelFinObject,
)
from groupoid_card.models.rep import RepComponentParams
from groupoid_card.models.series import GSetCardinality, RationalSeries, TamenessReport
from groupoid_card.models.space import CorollaryReport, PiFiniteSpace, PostnikovReport
from groupoid_card.models.structure import (
    HomInjIdentity,
    LovaszVerdict,
    Partition,
    RelationalStructure,
)

__all__ = [
    "FiniteGroup",
    "GroupHom",
    "HomPredicates",
    "SubgroupClass",
    "PermGroup",
    "CosetAction",
    "FiniteGroupoid",
    "SkeletalForm",
    "GroupoidFunctor",
    "FunctorClassification",
    "TernaryFactorization",
    "OrderVerdict",
    "RationalSeries",
    "TamenessReport",
    "GSetCardinality",
    "RepComponentParams",
    "RelFinObject",
    "ComponentPair",
    "RelFinHomPair",
    "EQuotient",
    "DecompositionCheck",
    "EquivalenceDecision",
    "DistinguisherResult",
    "RelFinFactorization",
    "RelationalStructure",
    "Partition",
    "HomInjIdentity",
    "LovaszVerdict",
    "PiFiniteSpace",
    "PostnikovReport",
    "CorollaryReport",
]
