"""Descent within one neighborhood and the three selection strategies.

All three strategies share the same skeleton: evaluate the initial sequence
once, then repeatedly pick a neighborhood and descend in it until no move
improves, switching neighborhoods per strategy until none of the seven can
improve the incumbent (or an evaluation budget runs out).  Every candidate
objective determination ticks the shared counter, so runs of different
strategies are comparable on the evaluation axis alone.
"""

import random
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .core import (
    EvalCounter,
    Instance,
    RunTrace,
    Sequence,
    objective_value,
)
from .neighborhoods import (
    CANONICAL_ORDER,
    Neighborhood,
    apply_move,
    enumerate_moves,
)


class Strategy(Enum):
    RANDOM = "random"
    FIXED = "fixed"
    ADAPTIVE = "adaptive"


class DescentRule(Enum):
    BEST_IMPROVEMENT = "best"
    FIRST_IMPROVEMENT = "first"


class InitialOrder(Enum):
    AS_GIVEN = "as-given"
    EDD = "edd"
    RANDOM = "random"


class Termination(Enum):
    ALL_NEIGHBORHOODS_EXHAUSTED = "all_neighborhoods_exhausted"
    EVALUATION_BUDGET = "evaluation_budget"


@dataclass(frozen=True)
class StrategyConfig:
    """Everything that determines a run besides the instance itself."""

    strategy: Strategy
    descent_rule: DescentRule = DescentRule.BEST_IMPROVEMENT
    probe_budget: int = 100
    seed: int = 0
    nested: bool = False
    max_evaluations: int | None = None
    initial: InitialOrder = InitialOrder.AS_GIVEN

    def __post_init__(self):
        if self.probe_budget < 1:
            raise ValueError("probe_budget must be >= 1")
        if self.max_evaluations is not None and self.max_evaluations < 1:
            raise ValueError("max_evaluations must be >= 1 when set")


@dataclass(frozen=True)
class RunResult:
    best_sequence: Sequence
    best_objective: int
    trace: RunTrace
    evaluations_total: int
    terminated_by: Termination


class DescentResult(NamedTuple):
    sequence: Sequence
    objective: int
    evaluations: int
    budget_hit: bool


def initial_sequence(instance: Instance, config: StrategyConfig,
                     rng: random.Random) -> Sequence:
    n = instance.n
    if config.initial is InitialOrder.AS_GIVEN:
        return tuple(range(n))
    if config.initial is InitialOrder.EDD:
        return tuple(sorted(range(n), key=lambda j: (instance.due[j], j)))
    order = list(range(n))
    rng.shuffle(order)
    return tuple(order)


def descend(
    instance: Instance,
    start: Sequence,
    kind: Neighborhood,
    config: StrategyConfig,
    counter: EvalCounter,
    trace: RunTrace,
    start_objective: int | None = None,
    max_candidates: int | None = None,
) -> DescentResult:
    """Descend from `start` within one neighborhood until no move improves.

    Only candidate sequences are evaluated (and counted); the start's
    objective is taken as already known.  Scans run in the neighborhood's
    deterministic move order.  `max_candidates` caps the number of candidate
    evaluations of this call (used by adaptive probes); the global
    `config.max_evaluations` cap sets `budget_hit` on the result instead.
    When a cap interrupts a best-improvement scan, the best improving
    candidate seen so far in that scan is still accepted, so the returned
    sequence is always the best sequence evaluated.
    """
    current = tuple(start)
    current_obj = (
        objective_value(instance, current)
        if start_objective is None
        else start_objective
    )
    moves = enumerate_moves(kind, instance.n, config.nested)
    max_evals = config.max_evaluations
    best_rule = config.descent_rule is DescentRule.BEST_IMPROVEMENT
    used = 0
    budget_hit = False

    descending = bool(moves)
    while descending:
        best_seq: Sequence | None = None
        best_obj = current_obj
        stopped = False
        for move in moves:
            if max_candidates is not None and used >= max_candidates:
                stopped = True
                break
            if max_evals is not None and counter.count >= max_evals:
                stopped = True
                budget_hit = True
                break
            cand = apply_move(current, move)
            obj = objective_value(instance, cand)
            counter.tick()
            used += 1
            trace.record_if_improved(counter, obj)
            if obj < best_obj:
                best_obj = obj
                best_seq = cand
                if not best_rule:
                    break
        if best_seq is not None:
            current, current_obj = best_seq, best_obj
            # A first-improvement move rescans from the top; an interrupted
            # scan cannot continue either way.
            descending = not stopped
        else:
            descending = False

    return DescentResult(current, current_obj, used, budget_hit)


def _counted_initial(instance, order, counter, trace) -> int:
    obj = objective_value(instance, order)
    counter.tick()
    trace.record_if_improved(counter, obj)
    return obj


def _finalize(current, current_obj, trace, counter, reason) -> RunResult:
    trace.final_evaluations = counter.count
    return RunResult(current, current_obj, trace, counter.count, reason)


def run_vnd_fixed(instance: Instance, config: StrategyConfig) -> RunResult:
    """Classical VND: neighborhoods in canonical order, restarting from the
    first one after every improvement."""
    if config.strategy is not Strategy.FIXED:
        raise ValueError("config.strategy must be FIXED")
    rng = random.Random(config.seed)
    counter, trace = EvalCounter(), RunTrace()
    current = initial_sequence(instance, config, rng)
    current_obj = _counted_initial(instance, current, counter, trace)

    while True:
        improved = False
        for kind in CANONICAL_ORDER:
            res = descend(instance, current, kind, config, counter, trace,
                          start_objective=current_obj)
            improved = res.objective < current_obj
            current, current_obj = res.sequence, res.objective
            if res.budget_hit:
                return _finalize(current, current_obj, trace, counter,
                                 Termination.EVALUATION_BUDGET)
            if improved:
                break
        if not improved:
            return _finalize(current, current_obj, trace, counter,
                             Termination.ALL_NEIGHBORHOODS_EXHAUSTED)


def run_vnd_random(instance: Instance, config: StrategyConfig) -> RunResult:
    """Random VND: the next neighborhood is drawn uniformly from those not
    yet proven non-improving against the incumbent; any improvement resets
    the candidate set to all seven."""
    if config.strategy is not Strategy.RANDOM:
        raise ValueError("config.strategy must be RANDOM")
    rng = random.Random(config.seed)
    counter, trace = EvalCounter(), RunTrace()
    current = initial_sequence(instance, config, rng)
    current_obj = _counted_initial(instance, current, counter, trace)

    remaining = set(CANONICAL_ORDER)
    while remaining:
        choices = [k for k in CANONICAL_ORDER if k in remaining]
        kind = choices[rng.randrange(len(choices))]
        res = descend(instance, current, kind, config, counter, trace,
                      start_objective=current_obj)
        improved = res.objective < current_obj
        current, current_obj = res.sequence, res.objective
        if res.budget_hit:
            return _finalize(current, current_obj, trace, counter,
                             Termination.EVALUATION_BUDGET)
        if improved:
            remaining = set(CANONICAL_ORDER)
        else:
            remaining.discard(kind)
    return _finalize(current, current_obj, trace, counter,
                     Termination.ALL_NEIGHBORHOODS_EXHAUSTED)


def run_vnd_adaptive(instance: Instance, config: StrategyConfig) -> RunResult:
    """Adaptive VND: probe every neighborhood with a short capped descent,
    pick the one that reached the best objective (canonical order breaks
    ties), continue its descent from the probe result until no move
    improves, then probe again.  Probe evaluations count like any other."""
    if config.strategy is not Strategy.ADAPTIVE:
        raise ValueError("config.strategy must be ADAPTIVE")
    rng = random.Random(config.seed)
    counter, trace = EvalCounter(), RunTrace()
    current = initial_sequence(instance, config, rng)
    current_obj = _counted_initial(instance, current, counter, trace)

    while True:
        best_kind: Neighborhood | None = None
        best_res: DescentResult | None = None
        for kind in CANONICAL_ORDER:
            res = descend(instance, current, kind, config, counter, trace,
                          start_objective=current_obj,
                          max_candidates=config.probe_budget)
            if best_res is None or res.objective < best_res.objective:
                best_kind, best_res = kind, res
            if res.budget_hit:
                if best_res.objective < current_obj:
                    current, current_obj = best_res.sequence, best_res.objective
                return _finalize(current, current_obj, trace, counter,
                                 Termination.EVALUATION_BUDGET)
        if best_res.objective >= current_obj:
            return _finalize(current, current_obj, trace, counter,
                             Termination.ALL_NEIGHBORHOODS_EXHAUSTED)
        current, current_obj = best_res.sequence, best_res.objective
        res = descend(instance, current, best_kind, config, counter, trace,
                      start_objective=current_obj)
        current, current_obj = res.sequence, res.objective
        if res.budget_hit:
            return _finalize(current, current_obj, trace, counter,
                             Termination.EVALUATION_BUDGET)


_RUNNERS = {
    Strategy.FIXED: run_vnd_fixed,
    Strategy.RANDOM: run_vnd_random,
    Strategy.ADAPTIVE: run_vnd_adaptive,
}


def run(instance: Instance, config: StrategyConfig) -> RunResult:
    """Run the strategy selected by `config` on `instance`."""
    return _RUNNERS[config.strategy](instance, config)
