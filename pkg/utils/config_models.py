from pydantic import BaseModel, Field, field_validator
from typing import List, Literal, Optional
from pydantic.types import PositiveInt, conint

# Basic configuration models
class DirectoryConfig(BaseModel):
    base: str = "Data"
    reports: str = "reports"

class GroebnerConfig(BaseModel):
    pair_budget: PositiveInt = 200000  # pair reductions per basis
    order: Literal["grevlex", "lex"] = "grevlex"

class WitnessConfig(BaseModel):
    enabled: bool = True
    primes: List[PositiveInt] = Field(default_factory=lambda: [2, 3])
    integer_radius: conint(ge=0) = 2
    max_nodes: PositiveInt = 200000

    @field_validator("primes")
    @classmethod
    def check_primes(cls, primes: List[int]) -> List[int]:
        for p in primes:
            if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
                raise ValueError(f"{p} is not a prime")
        return primes

class LimitsConfig(BaseModel):
    max_gamma_vertices: PositiveInt = 8
    max_enumeration_vertices: PositiveInt = 8
    max_graph6_vertices: PositiveInt = 62

class VerificationConfig(BaseModel):
    n_max: conint(ge=1, le=7) = 7
    sweep_bound: conint(ge=3, le=9) = 9
    table_block_bound: conint(ge=1, le=4) = 4
    matching_n_max: conint(ge=2, le=12) = 10
    random_graphs: PositiveInt = 100
    random_max_vertices: conint(ge=2, le=7) = 6
    seed: int = 20240521

class RunnerConfig(BaseModel):
    jobs: PositiveInt = 1
    progress: bool = True

class LoggingConfig(BaseModel):
    level: str = "INFO"
    format: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    file: Optional[str] = None
    json_format: bool = Field(default=False, alias="json")

    model_config = {"populate_by_name": True}

# Main application config
class AppConfig(BaseModel):
    directories: DirectoryConfig = Field(default_factory=DirectoryConfig)
    groebner: GroebnerConfig = Field(default_factory=GroebnerConfig)
    witness: WitnessConfig = Field(default_factory=WitnessConfig)
    limits: LimitsConfig = Field(default_factory=LimitsConfig)
    verification: VerificationConfig = Field(default_factory=VerificationConfig)
    runner: RunnerConfig = Field(default_factory=RunnerConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)
