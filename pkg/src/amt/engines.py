"""Run the path-sum and perturbation engines and compare their outputs."""

from __future__ import annotations

from dataclasses import dataclass

from .complex import BasedComplex, BlockMap
from .errors import EngineDisagreement
from .gamma import ReductionResult, morse_data, reduce_direct
from .hpt import Perturbed, reduce_hpt
from .morsegraph import Matching, require_valid

ENGINES = ("gamma", "hpt", "both")


@dataclass
class EngineRun:
    result: ReductionResult
    gamma: ReductionResult | None = None
    hpt: ReductionResult | None = None
    perturbed: Perturbed | None = None


def _map_differences(name: str, a: BlockMap, b: BlockMap) -> list[str]:
    out = []
    if a.shift != b.shift:
        out.append(f"{name}: degree {a.shift:+d} vs {b.shift:+d}")
    if a.source.keys() != b.source.keys() or a.target.keys() != b.target.keys():
        out.append(f"{name}: defined on different cells")
    for key in sorted(set(a.components) | set(b.components)):
        x, y = a.components.get(key), b.components.get(key)
        if x != y:
            show = lambda m: "0" if m is None else str(m.as_rows())
            out.append(f"{name} block {key[0]} -> {key[1]}: gamma {show(x)} vs hpt {show(y)}")
    return out


def diff_reductions(a: ReductionResult, b: ReductionResult) -> list[str]:
    """Human-readable differences between two reductions; empty when identical."""
    out = []
    if a.reduced.ids() != b.reduced.ids():
        out.append(f"reduced cells: {a.reduced.ids()} vs {b.reduced.ids()}")
    out += _map_differences("d", a.reduced.d, b.reduced.d)
    out += _map_differences("f", a.f, b.f)
    out += _map_differences("g", a.g, b.g)
    out += _map_differences("h", a.h, b.h)
    return out


def run_engines(
    c: BasedComplex,
    m: Matching,
    engine: str = "both",
    max_iterations: int | None = None,
) -> EngineRun:
    """Reduce ``c`` with the chosen engine(s); ``both`` raises on any disagreement."""
    if engine not in ENGINES:
        raise ValueError(f"unknown engine {engine!r}")
    inverses = require_valid(c, m)
    run = EngineRun(result=None)
    if engine in ("gamma", "both"):
        run.gamma = reduce_direct(c, m, morse_data(c, m, inverses))
    if engine in ("hpt", "both"):
        run.hpt, run.perturbed = reduce_hpt(c, m, max_iterations)
    if engine == "both":
        diffs = diff_reductions(run.gamma, run.hpt)
        if diffs:
            raise EngineDisagreement(diffs)
        run.gamma.stats.update(run.hpt.stats)
    run.result = run.gamma if run.gamma is not None else run.hpt
    return run
