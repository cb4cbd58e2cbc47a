import os
from pathlib import Path
from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field, field_validator


class AppConfig(BaseModel):
    """Application-specific configuration."""
    model_config = ConfigDict(validate_assignment=True, validate_default=True)

    # Output locations
    output_dir: Path = Field(default_factory=lambda: Path(os.getenv('OUTPUT_DIR', 'artifacts')))
    cache_dir: Path = Field(default_factory=lambda: Path(os.getenv('CACHE_DIR', 'artifacts/certificates')))

    # Verification defaults
    tolerance: float = Field(default_factory=lambda: float(os.getenv('CLAUSEN_TOL', '1e-9')))
    parallelism: int = Field(default_factory=lambda: int(os.getenv('CLAUSEN_PAR', '1')))
    seed: int = Field(default_factory=lambda: int(os.getenv('CLAUSEN_SEED', '20240229')))

    # Exact arithmetic guard
    term_limit: int = Field(default_factory=lambda: int(os.getenv('CLAUSEN_TERM_LIMIT', '2000000')))

    # Logging Configuration
    log_level: str = Field(default_factory=lambda: os.getenv('LOG_LEVEL', 'INFO'))

    @field_validator('cache_dir', 'output_dir', mode='after')
    @classmethod
    def create_directory(cls, v: Path) -> Path:
        try:
            v.mkdir(parents=True, exist_ok=True)
            return v
        except Exception as e:
            raise ValueError(f"Cannot create directory {v}: {e}")

    @field_validator('tolerance', mode='after')
    @classmethod
    def check_tolerance(cls, v: float) -> float:
        if not 0 < v < 1:
            raise ValueError(f"Tolerance must lie in (0, 1), got {v}")
        return v

    @field_validator('parallelism', 'term_limit', mode='after')
    @classmethod
    def check_positive(cls, v: int) -> int:
        if v < 1:
            raise ValueError(f"Expected a positive integer, got {v}")
        return v


# Use user-provided environment
load_dotenv()
config = AppConfig()
