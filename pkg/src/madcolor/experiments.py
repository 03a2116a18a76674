"""Randomised hunt for counterexamples below the 4a/3 + b threshold."""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any

from .coloring import ColorSpec, verify
from .graph import gen_below_bound, to_graph6
from .proof import solve_proof_guided


@dataclass(frozen=True)
class TrialOutcome:
    trial: int
    seed: int
    n: int
    m: int
    status: str
    fell_back: bool
    swaps: int
    failure: dict[str, Any] | None = None


@dataclass
class HuntReport:
    a: int
    b: int
    n_max: int
    seed: int
    trials: int = 0
    generated: int = 0
    failures: list[dict[str, Any]] = field(default_factory=list)
    fallbacks: int = 0
    outcomes: list[TrialOutcome] = field(default_factory=list)

    @property
    def fallback_rate(self) -> float:
        return self.fallbacks / self.generated if self.generated else 0.0

    @property
    def seeds(self) -> list[int]:
        return [o.seed for o in self.outcomes]

    def to_json(self) -> dict[str, Any]:
        return {
            "a": self.a,
            "b": self.b,
            "n_max": self.n_max,
            "seed": self.seed,
            "trials": self.trials,
            "generated": self.generated,
            "failures": self.failures,
            "fallbacks": self.fallbacks,
            "fallback_rate": self.fallback_rate,
            "seeds": self.seeds,
        }


def run_trial(a: int, b: int, n_max: int, trial: int, seed: int) -> TrialOutcome:
    spec = ColorSpec(a, b)
    trial_seed = seed + trial
    n = random.Random(trial_seed).randint(1, n_max)
    g = gen_below_bound(a, b, n, seed=trial_seed)
    res = solve_proof_guided(g, spec, seed=trial_seed)
    failure = None
    if not res.colored:
        failure = {"reason": f"solver returned {res.status.value}"}
    elif verify(g, spec, res.coloring):
        failure = {"reason": "invalid coloring"}
    if failure is not None:
        failure.update(graph6=to_graph6(g), a=a, b=b, seed=trial_seed, trial=trial)
    return TrialOutcome(trial, trial_seed, g.n, g.m, res.status.value, res.fell_back, res.swaps, failure)


def cmd_hunt(a: int, b: int, n_max: int, trials: int, seed: int, jobs: int = 1) -> HuntReport:
    """Generate ``trials`` graphs with mad < 4a/3 + b and try to color each.

    Trial ``i`` is seeded with ``seed + i``, so any failure can be replayed.
    """
    ColorSpec(a, b).require_theorem()
    if n_max < 1 or trials < 0:
        raise ValueError("need n_max >= 1 and trials >= 0")
    report = HuntReport(a, b, n_max, seed, trials=trials)
    args = [(a, b, n_max, i, seed) for i in range(trials)]
    if jobs > 1 and trials > 1:
        with ProcessPoolExecutor(jobs) as pool:
            outcomes = list(pool.map(run_trial, *zip(*args)))
    else:
        outcomes = [run_trial(*x) for x in args]
    for o in sorted(outcomes, key=lambda o: o.trial):
        report.generated += 1
        report.fallbacks += o.fell_back
        if o.failure is not None:
            report.failures.append(o.failure)
        report.outcomes.append(o)
    return report
