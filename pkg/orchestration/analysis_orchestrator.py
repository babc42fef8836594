"""
Analysis Orchestrator
Loads inputs named by a RunConfig, runs one command and assembles its report
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional

from constructions.bent import inner_product
from constructions.linear_code import (
    LinearCode,
    example_extended_hamming,
    extended_hamming,
    hamming_parity_check,
    identity_code,
)
from constructions.tower import compose, verify_tower
from core.boolean_function import BooleanFunction
from core.constants import MAX_REPORTED_GOWERS_ORDER, MAX_ZP_N
from core.errors import BudgetExceededError, PreconditionError
from core.spectrum import walsh_transform
from data.file_formats import read_code, read_packed_table, read_pattern, read_truth_table, write_truth_table
from extant.gowers import gowers_norm
from extant.regularity import geometric_decay_rate, r_regular_profile, zp_decay_table, zp_regularity_error
from extant.relations import relation_battery
from extant.stable_influence import stable_influence_profile
from properties.full_report import check_chain, full_report
from properties.property_dth import dth_deviation
from properties.property_rain import rain_deviation
from properties.property_report import mean_zero_ok

from .run_config import RunConfig
from .selftest import run_selftest, selftest_table

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RunResult:
    """A finished command: its report and whether every verified fact held."""

    report: Dict[str, Any]
    ok: bool


def parse_bent_spec(spec: str) -> BooleanFunction:
    """'ip:<m>' to the inner-product function on 2m bits."""
    kind, _, arg = spec.partition(":")
    if kind != "ip" or not arg.isdigit():
        raise PreconditionError(f"bent spec must be 'ip:<m>', got {spec!r}")
    return inner_product(int(arg))


def parse_code_spec(spec: str) -> LinearCode:
    """hamming:<r> | extended:<r> | example | identity:<n>."""
    kind, _, arg = spec.partition(":")
    if kind == "example" and not arg:
        return example_extended_hamming()
    builders = {"hamming": hamming_parity_check, "extended": extended_hamming, "identity": identity_code}
    if kind not in builders or not arg.isdigit():
        raise PreconditionError(
            f"code spec must be hamming:<r>, extended:<r>, example or identity:<n>, got {spec!r}"
        )
    return builders[kind](int(arg))


class AnalysisOrchestrator:
    """
    Runs the analyzer commands for one configuration.

    Responsibilities:
    - Load the truth table, code and pattern files the configuration names
    - Drive the property testers, the construction check and the comparators
    - Assemble deterministic report dictionaries headed by the run settings
    """

    def __init__(self, config: RunConfig):
        self.config = config
        logger.info(
            f"Orchestrator: command={config.command}, seed={config.seed}, "
            f"mc_samples={config.mc_samples}, budget={config.budget}, n_jobs={config.n_jobs}"
        )

    # ------------------------------------------------------------------
    # Inputs
    # ------------------------------------------------------------------

    def load_function(self) -> BooleanFunction:
        """The function under analysis: --table (text or packed) or --bent."""
        cfg = self.config
        if cfg.table is not None:
            return read_packed_table(cfg.table) if cfg.packed else read_truth_table(cfg.table)
        if cfg.bent is not None:
            return parse_bent_spec(cfg.bent)
        raise PreconditionError(f"{cfg.command} needs --table or --bent")

    def load_outer_function(self) -> BooleanFunction:
        """g for construct: --bent or --bent-table."""
        cfg = self.config
        if cfg.bent_table is not None:
            return read_packed_table(cfg.bent_table) if cfg.packed else read_truth_table(cfg.bent_table)
        if cfg.bent is not None:
            return parse_bent_spec(cfg.bent)
        raise PreconditionError("construct needs --bent or --bent-table")

    def load_code(self) -> LinearCode:
        cfg = self.config
        if cfg.code is not None:
            return read_code(cfg.code)
        if cfg.code_builtin is not None:
            return parse_code_spec(cfg.code_builtin)
        raise PreconditionError("construct needs --code or --code-builtin")

    def rank_for(self, f: BooleanFunction) -> int:
        """--d, defaulting to min(2, n)."""
        d = self.config.d if self.config.d is not None else min(2, f.n)
        if not 1 <= d <= f.n:
            raise PreconditionError(f"rank d={d} outside [1, {f.n}]")
        return d

    def _header(self, **extra) -> Dict[str, Any]:
        header = self.config.header()
        header.update(extra)
        return header

    # ------------------------------------------------------------------
    # Commands
    # ------------------------------------------------------------------

    def analyze(self) -> RunResult:
        """Every property at rank d, the implication chain and an optional user pattern."""
        cfg = self.config
        f = self.load_function()
        d = self.rank_for(f)
        reports = full_report(
            f,
            d,
            seed=cfg.seed,
            mc_samples=cfg.mc_samples,
            budget=cfg.budget,
            cutoff=cfg.cutoff,
            n_jobs=cfg.n_jobs,
        )
        if cfg.pattern is not None:
            reports.append(self._pattern_report(f, d))
        chain = check_chain(reports)
        report = {
            "header": self._header(d=d, n=f.n),
            "function": {
                "n": f.n,
                "mean": walsh_transform(f).mean(),
                "mean_zero_ok": mean_zero_ok(f),
            },
            "properties": [r.as_dict() for r in reports],
            "chain": [c.as_dict() for c in chain],
        }
        return RunResult(report, all(c.holds for c in chain))

    def _pattern_report(self, f: BooleanFunction, d: int):
        cfg = self.config
        pattern_file = read_pattern(cfg.pattern)
        injection = pattern_file.injection_map(f.n)
        counting = dict(
            samples=cfg.mc_samples, seed=cfg.seed, budget=cfg.budget, cutoff=cfg.cutoff, n_jobs=cfg.n_jobs
        )
        name = Path(cfg.pattern).stem
        if pattern_file.bipartite:
            return dth_deviation(f, pattern_file.pattern, injection, d=d, name=name, **counting)
        return rain_deviation(f, pattern_file.pattern, injection, d, name=name, **counting)

    def construct(self) -> RunResult:
        """Compose g with the parity-check matrix, verify the tower and optionally write the table."""
        cfg = self.config
        g = self.load_outer_function()
        code = self.load_code()
        notes: List[str] = []
        if code.redundancy % 2:
            message = f"n-k={code.redundancy} is odd: no bent function exists on that many bits"
            logger.warning(message)
            notes.append(message)
        f = compose(g, code)
        verdict = verify_tower(g, code)
        if cfg.table_out is not None:
            write_truth_table(f, cfg.table_out)
            logger.info(f"Composed table written to {cfg.table_out}")
        report = {
            "header": self._header(n=code.n, k=code.k),
            "code": code.as_dict(),
            "outer": {"n": g.n, "table": cfg.bent_table, "spec": cfg.bent},
            "verdict": verdict.as_dict(),
            "table_out": cfg.table_out,
        }
        if notes:
            report["notes"] = notes
        return RunResult(report, verdict.ok)

    def _gowers_entries(self, f: BooleanFunction) -> List[Dict[str, Any]]:
        cfg = self.config
        entries = []
        for k in range(1, MAX_REPORTED_GOWERS_ORDER + 1):
            try:
                result = gowers_norm(f, k, mode="exact", budget=cfg.budget)
            except BudgetExceededError as exact_refusal:
                try:
                    result = gowers_norm(
                        f, k, mode="sampled", samples=cfg.mc_samples, seed=cfg.seed, budget=cfg.budget
                    )
                except BudgetExceededError as sampled_refusal:
                    logger.info(f"U^{k} skipped: {exact_refusal}; {sampled_refusal}")
                    entries.append({"k": k, "method": "skipped", "reason": str(sampled_refusal)})
                    continue
            entries.append(result.as_dict())
        return entries

    def _zp_section(self, f: BooleanFunction) -> Dict[str, Any]:
        cfg = self.config
        section: Dict[str, Any] = {}
        if f.n <= MAX_ZP_N:
            section["worst"] = zp_regularity_error(f).as_dict()
        else:
            section["worst"] = {"method": "skipped", "reason": f"n > {MAX_ZP_N}"}
        if cfg.zp_range is not None:
            low, high = cfg.zp_range
            if low < 1 or high > MAX_ZP_N:
                raise PreconditionError(f"--zp-range must lie within [1, {MAX_ZP_N}]")
            table = zp_decay_table(range(low, high + 1))
            section["decay"] = table
            if high > low:
                section["decay_rate"] = geometric_decay_rate(table)
        return section

    def compare(self) -> RunResult:
        """Gowers norms, R- and Z/2^n-regularity, stable influences and the relation battery."""
        cfg = self.config
        f = self.load_function()
        d = self.rank_for(f)
        checks = relation_battery(f, d, budget=cfg.budget)
        report = {
            "header": self._header(d=d, n=f.n),
            "gowers": self._gowers_entries(f),
            "r_regularity": r_regular_profile(f),
            "zp_regularity": self._zp_section(f),
            "stable_influence": stable_influence_profile(f),
            "relations": [c.as_dict() for c in checks],
        }
        return RunResult(report, all(c.holds for c in checks))

    def selftest(self) -> RunResult:
        results = run_selftest(seed=self.config.seed, n_jobs=self.config.n_jobs)
        passed = all(r.passed for r in results)
        report = {
            "header": self._header(),
            "passed": passed,
            "checks": [r.as_dict() for r in results],
        }
        logger.info(f"Self-test summary:\n{selftest_table(results).to_string(index=False)}")
        return RunResult(report, passed)

    def run(self) -> RunResult:
        """Dispatch on config.command."""
        commands = {
            "analyze": self.analyze,
            "construct": self.construct,
            "compare": self.compare,
            "selftest": self.selftest,
        }
        return commands[self.config.command]()
