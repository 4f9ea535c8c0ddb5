from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Tuple

from groupoid_card.core.exceptions import ValidationError


@dataclass(frozen=True)
class RationalSeries:
    """
    A power series truncated at x^N with exact rational coefficients.

    Binary arithmetic truncates at the smaller of the two truncations; no
    operation ever extends a truncation.
    """

    truncation: int
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.truncation < 0:
            raise ValidationError("truncation must be non-negative")
        if len(self.coeffs) != self.truncation + 1:
            raise ValidationError(
                f"expected {self.truncation + 1} coefficients, got {len(self.coeffs)}"
            )

    @classmethod
    def from_coefficients(cls, coeffs: Iterable, truncation: int) -> "RationalSeries":
        values = [Fraction(c) for c in coeffs][: truncation + 1]
        values += [Fraction(0)] * (truncation + 1 - len(values))
        return cls(truncation, tuple(values))

    @classmethod
    def zero(cls, truncation: int) -> "RationalSeries":
        return cls(truncation, (Fraction(0),) * (truncation + 1))

    @classmethod
    def one(cls, truncation: int) -> "RationalSeries":
        return cls.from_coefficients([1], truncation)

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __add__(self, other: "RationalSeries") -> "RationalSeries":
        n = min(self.truncation, other.truncation)
        return RationalSeries(
            n, tuple(self.coeffs[i] + other.coeffs[i] for i in range(n + 1))
        )

    def __neg__(self) -> "RationalSeries":
        return RationalSeries(self.truncation, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "RationalSeries") -> "RationalSeries":
        return self + (-other)

    def __mul__(self, other: "RationalSeries") -> "RationalSeries":
        n = min(self.truncation, other.truncation)
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            a = self.coeffs[i]
            if not a:
                continue
            for j in range(n + 1 - i):
                out[i + j] += a * other.coeffs[j]
        return RationalSeries(n, tuple(out))

    def scale(self, factor) -> "RationalSeries":
        factor = Fraction(factor)
        return RationalSeries(self.truncation, tuple(factor * c for c in self.coeffs))

    def evaluate_at_one(self) -> Fraction:
        return sum(self.coeffs, Fraction(0))

    def __str__(self) -> str:
        terms = []
        for n, c in enumerate(self.coeffs):
            if c == 0:
                continue
            magnitude = abs(c)
            if n == 0:
                body = str(magnitude)
            else:
                power = "x" if n == 1 else f"x^{n}"
                body = power if magnitude == 1 else f"{magnitude} {power}"
            terms.append((c < 0, body))
        if not terms:
            return "0"
        negative, body = terms[0]
        text = f"-{body}" if negative else body
        for negative, body in terms[1:]:
            text += f" - {body}" if negative else f" + {body}"
        return text


@dataclass(frozen=True)
class TamenessReport:
    """Partial sum of Φ_V(1) against the block upper triangular bound"""

    partial_sum: Fraction
    borel_bound: Fraction
    holds: bool


@dataclass(frozen=True)
class GSetCardinality:
    """Exact exponent of the FinSet^G cardinality and its floating value"""

    exponent: Fraction
    value: float
