"""API routes initialization"""

from groupoid_card.api import groupoids, relfin, series, spaces, structures

__all__ = ["groupoids", "series", "relfin", "structures", "spaces"]
