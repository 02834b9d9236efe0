from __future__ import annotations

from pathlib import Path
from typing import Literal, Optional

from pydantic import BaseModel, Field, model_validator

from ..pooling.schemas import Aggregator, Strategy, StrategyKind

Command = Literal["curvature", "pool", "cliquepool", "generate", "stats", "bench"]


class RunConfig(BaseModel):
    """Validated flags of one CLI invocation."""

    command: Command
    input: Optional[Path] = None
    output: Optional[Path] = None
    strategy: Optional[Literal["high", "low", "mixed"]] = None
    t_low: Optional[float] = None
    t_high: Optional[float] = None
    agg: Literal["sum", "avg", "max"] = "sum"
    curvature: Optional[Path] = None
    levels: int = Field(default=1, ge=1)
    bins: int = Field(default=40, ge=1)
    seed: int = Field(default=0, ge=0, lt=2**64)
    threads: int = Field(default=0, ge=0)

    @model_validator(mode="after")
    def check_required(self) -> "RunConfig":
        needs_input = {"curvature", "pool", "cliquepool", "stats"}
        needs_output = {"curvature", "pool", "cliquepool", "generate"}
        if self.command in needs_input and self.input is None:
            raise ValueError(f"{self.command} needs an input path")
        if self.command in needs_output and self.output is None:
            raise ValueError(f"{self.command} needs an output path")
        if self.command == "pool" and self.strategy is None:
            raise ValueError("pool needs --strategy")
        return self

    def build_strategy(self) -> Strategy:
        """Strategy for the pool command; threshold problems raise InvalidThresholds."""
        return Strategy(StrategyKind(self.strategy), t_low=self.t_low, t_high=self.t_high)

    def build_aggregator(self) -> Aggregator:
        return Aggregator(self.agg)
