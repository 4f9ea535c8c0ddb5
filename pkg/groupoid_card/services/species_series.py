import logging
import math
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence

from sympy import factorint

from groupoid_card.core.config import settings
from groupoid_card.core.exceptions import ExpNonzeroConstant, NotPrimePower
from groupoid_card.models.group import FiniteGroup
from groupoid_card.models.groupoid import FiniteGroupoid
from groupoid_card.models.rep import RepComponentParams
from groupoid_card.models.series import GSetCardinality, RationalSeries, TamenessReport
from groupoid_card.services.group_core import group_service
from groupoid_card.services.groupoid_core import groupoid_service

logger = logging.getLogger(__name__)


class SeriesService:
    """Truncated power series and the generating functions built from them"""

    def __init__(self):
        self.default_truncation = settings.DEFAULT_TRUNCATION

    def _truncation(self, n: Optional[int]) -> int:
        return self.default_truncation if n is None else n

    # ------------------------------------------------------------------
    # Series arithmetic
    # ------------------------------------------------------------------

    def series_from_coefficients(
        self, coeffs: Iterable, truncation: Optional[int] = None
    ) -> RationalSeries:
        return RationalSeries.from_coefficients(coeffs, self._truncation(truncation))

    @staticmethod
    def series_add(a: RationalSeries, b: RationalSeries) -> RationalSeries:
        return a + b

    @staticmethod
    def series_mul(a: RationalSeries, b: RationalSeries) -> RationalSeries:
        return a * b

    @staticmethod
    def series_neg(a: RationalSeries) -> RationalSeries:
        return -a

    @staticmethod
    def series_scale(a: RationalSeries, factor) -> RationalSeries:
        return a.scale(factor)

    @staticmethod
    def series_exp(s: RationalSeries) -> RationalSeries:
        """
        exp of a series with zero constant term

        Uses n·b_n = Σ_{k=1..n} k·a_k·b_{n−k}, b_0 = 1.

        Raises:
            ExpNonzeroConstant: If the constant term is not zero
        """
        if s[0] != 0:
            raise ExpNonzeroConstant(
                "constant term must be zero", {"constant": str(s[0])}
            )
        n = s.truncation
        b = [Fraction(1)] + [Fraction(0)] * n
        for m in range(1, n + 1):
            total = sum((k * s[k] * b[m - k] for k in range(1, m + 1)), Fraction(0))
            b[m] = total / m
        return RationalSeries(n, tuple(b))

    # ------------------------------------------------------------------
    # Finite G-sets
    # ------------------------------------------------------------------

    def gset_terms(self, group: FiniteGroup, truncation: int) -> List[tuple]:
        """
        (index, 1/#C_{Sym(G/H)}(im θ)) per conjugacy class of subgroups

        Classes with index above the truncation are skipped before any
        centralizer is computed.
        """
        terms = []
        for cls in group_service.subgroups_up_to_conjugacy(group):
            if cls.index > truncation:
                continue
            action = group_service.coset_action(group, cls)
            centralizer = group_service.centralizer_order_in_sym(action.image)
            terms.append((cls.index, Fraction(1, centralizer)))
        return terms

    def gset_egf(
        self, group: FiniteGroup, truncation: Optional[int] = None
    ) -> RationalSeries:
        """
        Generating function of the groupoid of finite G-sets

        exp(Σ_{[H ≤ G]} x^{[G:H]} / #C_{Sym(G/H)}(im θ)); the coefficient of
        xⁿ is #hom(G, Sym(n))/n!.

        Raises:
            DegreeTooLarge: If a contributing coset space exceeds MAX_SYM_DEGREE
        """
        n = self._truncation(truncation)
        coeffs = [Fraction(0)] * (n + 1)
        for index, weight in self.gset_terms(group, n):
            coeffs[index] += weight
        return self.series_exp(RationalSeries(n, tuple(coeffs)))

    def gset_egf_factors(
        self, group: FiniteGroup, truncation: Optional[int] = None
    ) -> List[RationalSeries]:
        """One factor exp(x^{[G:H]}/#C) per subgroup class; their product is gset_egf"""
        n = self._truncation(truncation)
        factors = []
        for index, weight in self.gset_terms(group, n):
            term = [Fraction(0)] * (n + 1)
            term[index] = weight
            factors.append(self.series_exp(RationalSeries(n, tuple(term))))
        return factors

    def gset_groupoid_exponent(self, groupoid: FiniteGroupoid) -> GSetCardinality:
        """
        Cardinality of the groupoid of finite G-sets for a finite groupoid G

        Returns:
            Exact exponent Σ_{[x]} Σ_{[H ≤ G_x]} 1/#C and e raised to it

        Raises:
            DegreeTooLarge: If any coset space exceeds MAX_SYM_DEGREE
        """
        exponent = Fraction(0)
        for group in groupoid_service.skeleton(groupoid).groups:
            exponent += sum(
                (w for _, w in self.gset_terms(group, group.order)), Fraction(0)
            )
        return GSetCardinality(exponent, math.exp(exponent))

    # ------------------------------------------------------------------
    # Representation series
    # ------------------------------------------------------------------

    @staticmethod
    def gl_order(n: int, field_size: int) -> int:
        """
        #GL_n(F_Q) = Π_{i<n} (Qⁿ − Qⁱ)

        Raises:
            NotPrimePower: If Q is not a prime power
        """
        if field_size < 2 or len(factorint(field_size)) != 1:
            raise NotPrimePower(
                f"{field_size} is not a prime power", {"field_size": field_size}
            )
        top = field_size**n
        return math.prod(top - field_size**i for i in range(n))

    @staticmethod
    def borel_order(n: int, a: int) -> int:
        """aⁿ(a+1)^{T_{n−1}}: invertible block upper triangular matrices"""
        return a**n * (a + 1) ** ((n - 1) * n // 2)

    def rep_component_series(
        self, params: RepComponentParams, truncation: Optional[int] = None
    ) -> RationalSeries:
        """Φ_V(x) = Σ_n x^{n·dim V} / #GL_n(F_{q^d})"""
        n = self._truncation(truncation)
        coeffs = [Fraction(0)] * (n + 1)
        for k in range(n // params.dim_v + 1):
            coeffs[k * params.dim_v] = Fraction(1, self.gl_order(k, params.field_size))
        return RationalSeries(n, tuple(coeffs))

    def rep_groupoid_series(
        self,
        params_list: Sequence[RepComponentParams],
        truncation: Optional[int] = None,
    ) -> RationalSeries:
        """Product of Φ_V over the irreducible components"""
        n = self._truncation(truncation)
        result = RationalSeries.one(n)
        for params in params_list:
            result = result * self.rep_component_series(params, n)
        return result

    def tameness_bound_check(
        self, params: RepComponentParams, truncation: Optional[int] = None
    ) -> TamenessReport:
        """
        Compare Σ_{n≤N} 1/#GL_n(F_Q) with the block upper triangular bound

        Returns:
            TamenessReport; holds iff aⁿ(a+1)^{T_{n−1}} divides and is at most
            #GL_n(F_Q) for every n ≤ N
        """
        n = self._truncation(truncation)
        a, q = params.a, params.field_size
        partial_sum = Fraction(0)
        bound = Fraction(0)
        holds = True
        for k in range(n + 1):
            gl = self.gl_order(k, q)
            borel = self.borel_order(k, a)
            partial_sum += Fraction(1, gl)
            bound += Fraction(1, borel)
            holds = holds and gl >= borel and gl % borel == 0
        logger.info("tameness bound a=%d N=%d holds=%s", a, n, holds)
        return TamenessReport(partial_sum, bound, holds)


# Create a singleton instance
series_service = SeriesService()
