"""End-to-end reduction: normalize, run the pair rules, realize the pairs,
normalize again, then shrink around S with the matroid stage.

Each stage returns an equivalent instance. The staged entry points exist so
the CLI can stop after the rule stage or run the matroid stage alone.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .multigraph import Instance, PairInstance, normalize
from .ruleengine import EngineReport, Provider, reduce_pairs
from .skernel import KernelReport, canonical_no, kernelize_by_s


@dataclass
class PipelineReport:
    outcome: str              # "reduced" | "trivial-yes" | "trivial-no"
    final: Instance
    engine: Optional[EngineReport]
    kernel: Optional[KernelReport]


def _normalized(pinst: PairInstance) -> Optional[PairInstance]:
    """None means the forced deletions already overran the budget."""
    norm = normalize(pinst)
    if norm.instance.k < 0:
        return None
    return norm.instance


def run_rules(pinst: PairInstance, provider: Optional[Provider] = None,
              seed: int = 0) -> PipelineReport:
    pinst.validate()
    ninst = _normalized(pinst)
    if ninst is None:
        return PipelineReport("trivial-no", canonical_no(), None, None)
    rep = reduce_pairs(ninst, provider=provider, seed=seed)
    return PipelineReport(rep.outcome, rep.final, rep, None)


def run_matroid(inst: Instance, seed: int = 0) -> PipelineReport:
    inst.validate()
    ninst = _normalized(inst.with_pairs())
    if ninst is None:
        return PipelineReport("trivial-no", canonical_no(), None, None)
    kr = kernelize_by_s(ninst.drop_pairs(), seed)
    outcome = "trivial-yes" if kr.shortcut else "reduced"
    return PipelineReport(outcome, kr.instance, None, kr)


def run_full(pinst: PairInstance, provider: Optional[Provider] = None,
             seed: int = 0) -> PipelineReport:
    first = run_rules(pinst, provider=provider, seed=seed)
    if first.outcome != "reduced":
        return first
    second = run_matroid(first.final, seed=seed)
    return PipelineReport(second.outcome, second.final,
                          first.engine, second.kernel)
