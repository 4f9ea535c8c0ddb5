from pydantic import BaseModel, ConfigDict, Field, field_validator
from sympy import factorint


class RepComponentParams(BaseModel):
    """Parameters of one irreducible component: dim V and End(V) = F_{q^d}"""

    model_config = ConfigDict(frozen=True)

    dim_v: int = Field(..., ge=1, description="Dimension of the irreducible V")
    q: int = Field(..., ge=2, description="Size of the ground field")
    d: int = Field(..., ge=1, description="Degree of End(V) over the ground field")

    @field_validator("q")
    @classmethod
    def validate_q(cls, v: int) -> int:
        if len(factorint(v)) != 1:
            raise ValueError(f"q={v} is not a prime power")
        return v

    @property
    def field_size(self) -> int:
        """Q = q^d, the size of the endomorphism field"""
        return self.q**self.d

    @property
    def a(self) -> int:
        """#Aut(V) = Q - 1"""
        return self.field_size - 1
