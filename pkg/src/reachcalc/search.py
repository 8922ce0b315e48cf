"""Demiurge search: find short solutions, paying Landauer work per bit saved.

Three deterministic policies over the toy machine's size classes:

* ExhaustiveBySize scans one size class fully (default: the literal
  program's class) and keeps the first solution it meets.
* SizeDescending starts from a first found solution (default: the literal
  program, the transcription every problem carries with it) and re-scans
  the classes s-2, s-4, ... until a class yields nothing, at which point no
  smaller solution exists.  Each accepted size reduction is charged
  k T ln2 joules per bit erased.
* ReachabilityGreedy keeps a frontier of size classes ranked by the
  lower-branch reachability a hypothetical solution of that size would
  have against the solutions found so far (length-weighted), expands the
  best class first, and once any solution is known restricts itself to
  strictly smaller classes.

Budgets cap the number of programs run and the energy charged; running out
is not an error, the trace just reports budget_exhausted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

from . import _core_py
from .entropy import entropy_to_work
from .errors import DomainError, InvalidPolicy
from .lambertw import BranchChoice
from .machine import (
    DEFAULT_MAX_LEN,
    DEFAULT_MAX_OUTPUT_BITS,
    DEFAULT_MAX_STEPS,
    Problem,
    Program,
    _as_problem,
    iter_valid_programs,
    literal_program,
)
from .reachability import reach_from_variation

__all__ = ["SearchPolicy", "Budget", "SearchTrace", "demiurge_search"]


class SearchPolicy(Enum):
    EXHAUSTIVE_BY_SIZE = "exhaustivebysize"
    SIZE_DESCENDING = "sizedescending"
    REACHABILITY_GREEDY = "reachabilitygreedy"


@dataclass(frozen=True)
class Budget:
    """Program-count and energy caps for one search."""

    programs: int = 100_000
    energy: float = math.inf

    def __post_init__(self):
        if self.programs < 1:
            raise DomainError(f"program budget must be >= 1, got {self.programs!r}")
        if not self.energy > 0.0 or math.isnan(self.energy):
            raise DomainError(f"energy budget must be > 0 J, got {self.energy!r}")


@dataclass(frozen=True)
class SearchTrace:
    """What a search did: every program run, in order, and what it cost."""

    policy: SearchPolicy
    steps: tuple[tuple[str, str], ...]  # (program bits, "hit" | "miss")
    programs_run: int
    energy_charged: float
    bits_reduced: int
    best_found: Program | None
    temperature: float
    budget_exhausted: bool


class _Session:
    """Mutable bookkeeping shared by the policies."""

    def __init__(self, problem: Problem, budget: Budget, temperature: float,
                 max_steps: int, max_output_bits: int):
        self.problem = problem
        self.budget = budget
        self.temperature = temperature
        self.max_steps = max_steps
        self.max_output_bits = max_output_bits
        self.steps: list[tuple[str, str]] = []
        self.best: Program | None = None
        self.bits_reduced = 0
        self.budget_exhausted = False

    def out_of_programs(self) -> bool:
        return len(self.steps) >= self.budget.programs

    def run_one(self, bits: str) -> bool:
        """Run a candidate, record the step, and report whether it hit."""
        status, out = _core_py.run_bits(bits, self.max_steps, self.max_output_bits)
        hit = status == _core_py.OK and out == self.problem.target
        self.steps.append((bits, "hit" if hit else "miss"))
        return hit

    def try_accept(self, candidate: Program) -> bool:
        """Adopt a hit as the new best, charging for any size reduction.

        Returns False (and stops the search) when the energy budget cannot
        cover the reduction.
        """
        if self.best is None:
            self.best = candidate
            return True
        saved = self.best.length - candidate.length
        if saved <= 0:
            return True
        if entropy_to_work(self.bits_reduced + saved, self.temperature) > self.budget.energy:
            self.budget_exhausted = True
            return False
        self.bits_reduced += saved
        self.best = candidate
        return True

    def finish(self, policy: SearchPolicy) -> SearchTrace:
        return SearchTrace(
            policy=policy,
            steps=tuple(self.steps),
            programs_run=len(self.steps),
            energy_charged=entropy_to_work(self.bits_reduced, self.temperature),
            bits_reduced=self.bits_reduced,
            best_found=self.best,
            temperature=self.temperature,
            budget_exhausted=self.budget_exhausted,
        )


def _scan_class_until_hit(session: _Session, size: int) -> Program | None:
    """Run a size class in lex order, stopping at the first hit."""
    for bits in iter_valid_programs(size // 2):
        if session.out_of_programs():
            session.budget_exhausted = True
            return None
        if session.run_one(bits):
            return Program(bits)
    return None


def _exhaustive_by_size(session: _Session, start: int) -> None:
    for bits in iter_valid_programs(start // 2):
        if session.out_of_programs():
            session.budget_exhausted = True
            return
        if session.run_one(bits) and session.best is None:
            session.best = Program(bits)


def _size_descending(session: _Session, start: int) -> None:
    first = _scan_class_until_hit(session, start)
    if first is None:
        return
    session.best = first
    size = first.length - 2
    while size >= 2 and not session.budget_exhausted:
        hit = _scan_class_until_hit(session, size)
        if hit is None:
            return  # nothing left at this size: the best is minimal
        if not session.try_accept(hit):
            return
        size = hit.length - 2


def _greedy_priority(size: int, found_weight: float) -> float:
    # Reachability a new solution of this size would have, length-weighted
    # against everything found so far.
    w = 2.0**-size
    p = w / (found_weight + w)
    variation = -p * math.log2(p)
    return reach_from_variation(variation, BranchChoice.LOWER)


def _reachability_greedy(session: _Session, max_len: int) -> None:
    cursors = {
        size: iter_valid_programs(size // 2) for size in range(2, max_len + 2, 2)
    }
    found_weight = 0.0
    while cursors and not session.budget_exhausted:
        if session.best is not None:
            cursors = {s: it for s, it in cursors.items() if s < session.best.length}
            if not cursors:
                return
        if found_weight > 0.0:
            ranked = sorted(cursors, key=lambda s: (-_greedy_priority(s, found_weight), s))
        else:
            ranked = sorted(cursors)
        size = ranked[0]
        # Drain the chosen class until it hits, empties, or the budget ends;
        # priorities only change when the found set changes.
        for bits in cursors[size]:
            if session.out_of_programs():
                session.budget_exhausted = True
                return
            if session.run_one(bits):
                found_weight += 2.0 ** -len(bits)
                if not session.try_accept(Program(bits)):
                    return
                break
        else:
            del cursors[size]


def demiurge_search(
    rho: Problem | str,
    policy: SearchPolicy | str,
    budget: Budget | None = None,
    *,
    temperature: float = 300.0,
    start_length: int | None = None,
    max_len: int = DEFAULT_MAX_LEN,
    max_steps: int = DEFAULT_MAX_STEPS,
    max_output_bits: int = DEFAULT_MAX_OUTPUT_BITS,
) -> SearchTrace:
    """Search for a short solution of rho under the given policy and budget.

    start_length picks the size class where ExhaustiveBySize scans and
    SizeDescending begins its descent; the default is the literal program's
    class, 2*l(rho) + 2.  The trace is returned whether or not a solution
    was found; exhausting a budget is encoded there, not raised.
    """
    problem = _as_problem(rho)
    if isinstance(policy, str):
        try:
            policy = SearchPolicy(policy.lower().replace("_", "").replace("-", ""))
        except ValueError:
            raise InvalidPolicy(f"unknown search policy {policy!r}") from None
    if not isinstance(policy, SearchPolicy):
        raise InvalidPolicy(f"unknown search policy {policy!r}")
    if budget is None:
        budget = Budget()
    if not math.isfinite(temperature) or temperature <= 0.0:
        raise DomainError(f"temperature must be finite and > 0 K, got {temperature!r}")
    if max_len < 2 or max_len % 2:
        raise DomainError(f"max_len must be even and >= 2, got {max_len!r}")

    start = start_length if start_length is not None else literal_program(problem).length
    if start < 2 or start % 2:
        raise DomainError(f"start_length must be even and >= 2, got {start!r}")

    session = _Session(problem, budget, temperature, max_steps, max_output_bits)
    if policy is SearchPolicy.EXHAUSTIVE_BY_SIZE:
        _exhaustive_by_size(session, start)
    elif policy is SearchPolicy.SIZE_DESCENDING:
        _size_descending(session, start)
    else:
        _reachability_greedy(session, max_len)
    return session.finish(policy)
