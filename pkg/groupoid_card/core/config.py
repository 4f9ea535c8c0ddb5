from typing import List

from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Application configuration settings"""

    # Application Settings
    APP_NAME: str = "Groupoid Cardinality Toolkit"
    APP_VERSION: str = "1.0.0"
    ENVIRONMENT: str = "development"
    DEBUG: bool = False
    LOG_LEVEL: str = "WARNING"
    API_HOST: str = "0.0.0.0"
    API_PORT: int = 8000

    # Finite group engine
    MAX_GROUP_ORDER: int = 512
    SUBSET_CLOSURE_MAX_ORDER: int = 24
    FULL_ASSOCIATIVITY_MAX_ORDER: int = 64
    MAX_SYM_DEGREE: int = 8

    # Groupoids
    FUNCTOR_LIMIT: int = 1_000_000

    # Series
    DEFAULT_TRUNCATION: int = 16
    FLOAT_DIGITS: int = 15

    # Relatively finite functors
    RELFIN_MAX_ORDER: int = 16
    SMALL_GROUP_MAX_ORDER: int = 8

    # Relational structures
    MAX_PARTITION_UNIVERSE: int = 6
    MAX_CANONICAL_UNIVERSE: int = 8
    DEFAULT_LOVASZ_BOUND: int = 4

    # CORS Settings
    ALLOWED_ORIGINS: List[str] = ["*"]

    class Config:
        env_file = ".env"
        case_sensitive = True
        extra = "allow"


settings = Settings()
