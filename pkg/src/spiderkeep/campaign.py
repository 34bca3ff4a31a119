"""Fuzz campaigns: generate instances, extract, check, cross-check with the oracle."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from pathlib import Path

from .errors import GenerationBudgetExceeded, HypothesisNotMet, NoCertificate
from .extractor import ExtractConfig, check_certificate, extract_spider
from .generators import InstanceSpec, gen_instance
from .oracle import Status, check_hypotheses, verify_instance
from .spider import parse_spider

RANDOM_FAMILIES = {"random_bipartite", "glued_bipartite"}
SUMMARY_KEYS = (
    "instances",
    "constructive_successes",
    "oracle_fallbacks",
    "hypothesis_rejections",
    "counterexamples",
    "check_failures",
    "oracle_cross_checks",
    "oracle_skipped",
    "generation_failures",
)


@dataclass
class CampaignSummary:
    instances: int = 0
    constructive_successes: int = 0
    oracle_fallbacks: int = 0
    hypothesis_rejections: int = 0
    counterexamples: int = 0
    check_failures: int = 0
    oracle_cross_checks: int = 0
    oracle_skipped: int = 0
    generation_failures: int = 0
    fallbacks: list[str] = field(default_factory=list)
    problems: list[str] = field(default_factory=list)
    budget_exhausted: bool = False
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return self.counterexamples == 0 and self.check_failures == 0

    def to_text(self) -> str:
        """Stable rendering; wall time is left out so reruns compare equal."""
        lines = [f"{key}: {getattr(self, key)}" for key in SUMMARY_KEYS]
        lines += [f"fallback {item}" for item in self.fallbacks]
        lines += [f"problem {item}" for item in self.problems]
        if self.budget_exhausted:
            lines.append("time_budget_exhausted: true")
        return "\n".join(lines) + "\n"


def load_config(path) -> dict:
    return json.loads(Path(path).read_text(encoding="utf-8"))


def expand(config: dict) -> list[InstanceSpec]:
    """Instance list in a fixed order: family, seed, k, spider."""
    specs = []
    spiders = [parse_spider(s) for s in config.get("spiders", [])]
    seeds = config.get("seeds", [0])
    limit = config.get("max_instances")
    for fam in config.get("families", []):
        params = {key: val for key, val in fam.items() if key != "family"}
        fam_seeds = seeds if fam["family"] in RANDOM_FAMILIES else [0]
        for seed in fam_seeds:
            for k in config.get("k", [1]):
                for sp in spiders:
                    specs.append(InstanceSpec(fam["family"], params, seed, k, sp))
    return specs if limit is None else specs[:limit]


def run_instance(spec: InstanceSpec, summary: CampaignSummary, index: int, strict: bool, oracle_limit: int,
                 extract_config: ExtractConfig | None = None) -> None:
    tag = f"{index} {spec.label()} seed={spec.seed} k={spec.k} spider={spec.spider or '-'}"
    try:
        g, k, spider = gen_instance(spec)
    except GenerationBudgetExceeded:
        summary.generation_failures += 1
        return
    summary.instances += 1
    if check_hypotheses(g, k, spider):
        summary.hypothesis_rejections += 1
        return
    cfg = ExtractConfig(**vars(extract_config)) if extract_config else ExtractConfig()
    cfg.strict_paper = strict
    use_oracle = g.n <= oracle_limit
    try:
        cert = extract_spider(g, k, spider, cfg)
    except HypothesisNotMet:
        summary.hypothesis_rejections += 1
        return
    except NoCertificate as exc:
        if strict and use_oracle:
            summary.oracle_cross_checks += 1
            verdict = verify_instance(g, k, spider)
            if verdict.status == Status.COUNTEREXAMPLE_FOUND:
                summary.counterexamples += 1
                summary.problems.append(f"{tag} counterexample")
                return
        elif not use_oracle:
            summary.oracle_skipped += 1
        if not strict:
            summary.counterexamples += 1
            summary.problems.append(f"{tag} no certificate")
            return
        summary.oracle_fallbacks += 1
        summary.fallbacks.append(f"{tag} strict: {exc}")
        return
    if not check_certificate(g, k, spider, cert):
        summary.check_failures += 1
        summary.problems.append(f"{tag} certificate rejected")
        return
    if cert.via_oracle:
        summary.oracle_fallbacks += 1
        summary.fallbacks.append(f"{tag} triggers={','.join(cert.trace.gaps) or 'none'}")
    else:
        summary.constructive_successes += 1
    if use_oracle:
        summary.oracle_cross_checks += 1
        verdict = verify_instance(g, k, spider)
        if verdict.status != Status.HOLDS_WITH_WITNESS:
            summary.check_failures += 1
            summary.problems.append(f"{tag} oracle disagrees: {verdict.status.value}")
    else:
        summary.oracle_skipped += 1


def run_campaign(config: dict, strict: bool | None = None) -> CampaignSummary:
    """Run every instance of ``config`` in order and aggregate the outcome.

    Recognised keys: ``families`` (list of dicts with ``family`` plus
    parameters), ``seeds``, ``k``, ``spiders`` (leg strings),
    ``max_instances``, ``time_budget`` (seconds), ``oracle_limit`` (largest
    host checked against the oracle, default 25), ``strict_paper``.
    """
    strict = config.get("strict_paper", False) if strict is None else strict
    oracle_limit = config.get("oracle_limit", 25)
    budget = config.get("time_budget")
    summary = CampaignSummary()
    start = time.perf_counter()
    for index, spec in enumerate(expand(config)):
        if budget is not None and time.perf_counter() - start > budget:
            summary.budget_exhausted = True
            break
        run_instance(spec, summary, index, strict, oracle_limit)
    summary.wall_time = time.perf_counter() - start
    return summary
