"""Services module initialization"""

from groupoid_card.services.group_core import group_service
from groupoid_card.services.groupoid_core import groupoid_service
from groupoid_card.services.functor_analysis import functor_service
from groupoid_card.services.species_series import series_service
from groupoid_card.services.relfin import relfin_service
from groupoid_card.services.lovasz_relational import relational_service
from groupoid_card.services.homotopy_card import homotopy_service

__all__ = [
    "group_service",
    "groupoid_service",
    "functor_service",
    "series_service",
    "relfin_service",
    "relational_service",
    "homotopy_service",
]
