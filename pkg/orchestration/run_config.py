"""
Run Configuration
Settings for one CLI invocation, read from the environment and overridden by flags
"""

import os
from dataclasses import dataclass, fields, replace
from typing import Optional, Tuple

from core.constants import DEFAULT_BUDGET, DEFAULT_MC_SAMPLES, DEFAULT_SEED, EXACT_INJECTION_CUTOFF
from core.errors import PreconditionError

OUTPUT_FORMATS = ("text", "data")
COMMANDS = ("analyze", "construct", "compare", "selftest")


def _env_int(key: str, default: Optional[int]) -> Optional[int]:
    raw = os.getenv(key)
    if raw is None or raw.strip() == "":
        return default
    text = raw.strip().lower()
    if text in ("none", "unlimited"):
        return None
    try:
        return int(text, 0)
    except ValueError:
        raise PreconditionError(f"environment variable {key}={raw!r} is not an integer")


@dataclass(frozen=True)
class RunConfig:
    """
    Everything a run needs.

    Attributes:
        command: analyze | construct | compare | selftest
        d: Rank for property testers and the relation battery
        seed: Monte Carlo seed, printed in every report header
        mc_samples: Monte Carlo samples per pattern
        budget: Elementary-operation cap per scan (None = unlimited)
        n_jobs: joblib workers
        cutoff: Injection count below which pattern densities are exact
        output_format: text | data
        log_level: Root logging level name
        table: Truth-table input path
        packed: Read table as packed bits
        bent: Built-in bent spec such as 'ip:2'
        bent_table: Truth-table path for g in construct
        code: Parity-check file path
        code_builtin: Built-in code spec such as 'extended:3'
        pattern: Optional extra pattern file for analyze
        zp_range: Inclusive (low, high) dimensions of the compare decay table
        out: Report path (stdout when None)
        table_out: Path for the composed truth table
    """

    command: str = "analyze"
    d: Optional[int] = None
    seed: int = DEFAULT_SEED
    mc_samples: int = DEFAULT_MC_SAMPLES
    budget: Optional[int] = DEFAULT_BUDGET
    n_jobs: int = 1
    cutoff: int = EXACT_INJECTION_CUTOFF
    output_format: str = "text"
    log_level: str = "WARNING"
    table: Optional[str] = None
    packed: bool = False
    bent: Optional[str] = None
    bent_table: Optional[str] = None
    code: Optional[str] = None
    code_builtin: Optional[str] = None
    pattern: Optional[str] = None
    zp_range: Optional[Tuple[int, int]] = None
    out: Optional[str] = None
    table_out: Optional[str] = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise PreconditionError(f"unknown command {self.command!r}; expected one of {COMMANDS}")
        if self.output_format not in OUTPUT_FORMATS:
            raise PreconditionError(f"unknown output format {self.output_format!r}; expected text or data")
        if not 0 <= self.seed < 1 << 64:
            raise PreconditionError("seed must be an unsigned 64-bit integer")
        if self.mc_samples < 2:
            raise PreconditionError("mc_samples must be at least 2")
        if self.budget is not None and self.budget <= 0:
            raise PreconditionError("budget must be positive")
        if self.n_jobs == 0:
            raise PreconditionError("n_jobs must be nonzero")

    @classmethod
    def from_env(cls, command: str = "analyze") -> "RunConfig":
        """Defaults from QR_* environment variables (call load_dotenv() first)."""
        return cls(
            command=command,
            seed=_env_int("QR_SEED", DEFAULT_SEED),
            mc_samples=_env_int("QR_MC_SAMPLES", DEFAULT_MC_SAMPLES),
            budget=_env_int("QR_BUDGET", DEFAULT_BUDGET),
            n_jobs=_env_int("QR_N_JOBS", 1),
            cutoff=_env_int("QR_EXACT_INJECTION_CUTOFF", EXACT_INJECTION_CUTOFF),
            output_format=os.getenv("QR_OUTPUT_FORMAT", "text").strip().lower(),
            log_level=os.getenv("QR_LOG_LEVEL", "WARNING").strip().upper(),
        )

    def override(self, **values) -> "RunConfig":
        """Copy with every non-None value applied."""
        known = {f.name for f in fields(self)}
        unknown = set(values) - known
        if unknown:
            raise PreconditionError(f"unknown config fields: {sorted(unknown)}")
        return replace(self, **{k: v for k, v in values.items() if v is not None})

    def header(self) -> dict:
        """Fields recorded at the top of every report."""
        return {
            "command": self.command,
            "d": self.d,
            "seed": self.seed,
            "mc_samples": self.mc_samples,
            "budget": self.budget,
        }


def parse_range(text: str) -> Tuple[int, int]:
    """'a:b' to (a, b) with a <= b."""
    low, sep, high = text.partition(":")
    try:
        if not sep:
            raise ValueError(text)
        a, b = int(low), int(high)
    except ValueError:
        raise PreconditionError(f"range must be 'a:b', got {text!r}")
    if a > b:
        raise PreconditionError(f"empty range {text!r}")
    return a, b
