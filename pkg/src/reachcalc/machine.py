"""A prefix-free toy machine and exhaustive solution enumeration.

Programs are bit strings read two bits at a time:

    00  EMIT0    append '0' to the output
    01  EMIT1    append '1' to the output
    10  DOUBLE   append a copy of the current output (no-op when empty)
    11  HALT     stop

A valid program has even length >= 2 and contains HALT exactly once, as its
final opcode.  That terminal-HALT rule makes the valid set prefix-free: any
proper prefix ends in a non-HALT opcode and is therefore itself invalid.

A "problem" is a target bit string rho; the solution set of rho is every
valid program up to a length cap whose output equals rho.  Enumeration goes
by length class, lexicographic within a class.  The heavy class scans run on
a compiled kernel when available (reachcalc._core, built from Cython) and on
the pure-Python twin otherwise; CORE_BACKEND says which one is active.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Iterator

from . import _core_py
from .entropy import FiniteDistribution, entropy_to_work, entropy_variation
from .errors import (
    DegenerateSetWarning,
    DomainError,
    EmptySetError,
    InvalidProgram,
    ResourceExceeded,
)
from .lambertw import BranchChoice
from .reachability import ReachabilityRecord, reach_from_variation

try:
    from . import _core  # compiled kernel, optional
except ImportError:  # pragma: no cover - depends on the build environment
    _core = None

CORE_BACKEND = "compiled" if _core is not None else "pure"

__all__ = [
    "CORE_BACKEND",
    "DEFAULT_MAX_LEN",
    "DEFAULT_ENUM_BUDGET",
    "DEFAULT_MAX_STEPS",
    "DEFAULT_MAX_OUTPUT_BITS",
    "Scheme",
    "Problem",
    "Program",
    "SolutionSet",
    "ComplexityBound",
    "run",
    "iter_valid_programs",
    "enumerate_solutions",
    "kolmogorov_upper",
    "solution_distribution",
    "reachability_report",
    "literal_program",
]

DEFAULT_MAX_LEN = 24
DEFAULT_ENUM_BUDGET = 2**24
DEFAULT_MAX_STEPS = 10_000
DEFAULT_MAX_OUTPUT_BITS = 64

_HALT = "11"


class Scheme(Enum):
    """Weighting scheme over a solution set."""

    UNIFORM = "uniform"
    LENGTH_WEIGHTED = "lengthweighted"


def _validate_program_bits(bits: str) -> None:
    if not bits:
        raise InvalidProgram("empty bit string")
    if len(bits) % 2:
        raise InvalidProgram(f"program length must be even, got {len(bits)} bits")
    if set(bits) - {"0", "1"}:
        raise InvalidProgram(f"program must be over {{0,1}}, got {bits!r}")
    opcodes = [bits[i : i + 2] for i in range(0, len(bits), 2)]
    if opcodes[-1] != _HALT:
        raise InvalidProgram("program must end with the HALT opcode 11")
    if _HALT in opcodes[:-1]:
        raise InvalidProgram("HALT may only appear as the final opcode")


@dataclass(frozen=True)
class Program:
    """A validated program of the toy machine."""

    bits: str

    def __post_init__(self):
        _validate_program_bits(self.bits)

    @property
    def length(self) -> int:
        return len(self.bits)

    @property
    def opcode_count(self) -> int:
        return len(self.bits) // 2


@dataclass(frozen=True)
class Problem:
    """A target output string rho, at most max_bits long."""

    target: str
    max_bits: int = DEFAULT_MAX_OUTPUT_BITS

    def __post_init__(self):
        if set(self.target) - {"0", "1"}:
            raise DomainError(f"target must be over {{0,1}}, got {self.target!r}")
        if len(self.target) > self.max_bits:
            raise DomainError(
                f"target of {len(self.target)} bits exceeds the {self.max_bits}-bit maximum"
            )

    @property
    def length(self) -> int:
        return len(self.target)


@dataclass(frozen=True)
class SolutionSet:
    """Every solution of a problem up to the length cap, with weights.

    Programs are ordered by (length, lexicographic); weights is None only
    for an empty set.
    """

    problem: Problem
    programs: tuple[Program, ...]
    weights: FiniteDistribution | None
    scheme: Scheme

    def __len__(self) -> int:
        return len(self.programs)

    def lengths(self) -> tuple[int, ...]:
        return tuple(p.length for p in self.programs)


@dataclass(frozen=True)
class ComplexityBound:
    """Upper bound on program complexity: the shortest solution found."""

    bits: int
    witness: Program


def _as_problem(rho: Problem | str) -> Problem:
    return rho if isinstance(rho, Problem) else Problem(rho)


def _as_program(program: Program | str) -> Program:
    return program if isinstance(program, Program) else Program(program)


def _kernel(max_output_bits: int):
    # The compiled kernel tracks output in a u64, so larger caps (or no
    # compiled build at all) go to the pure twin.
    if _core is not None and max_output_bits <= 64:
        return _core
    return _core_py


def _check_limits(max_steps: int, max_output_bits: int) -> None:
    if max_steps < 1 or max_output_bits < 1:
        raise DomainError(
            f"limits must be positive, got max_steps={max_steps!r} "
            f"max_output_bits={max_output_bits!r}"
        )


def run(
    program: Program | str,
    *,
    max_steps: int = DEFAULT_MAX_STEPS,
    max_output_bits: int = DEFAULT_MAX_OUTPUT_BITS,
) -> str:
    """Execute a program and return its output bits.

    Raises InvalidProgram for malformed bit strings and ResourceExceeded
    when the step or output cap is breached.
    """
    prog = _as_program(program)
    _check_limits(max_steps, max_output_bits)
    status, out = _kernel(max_output_bits).run_bits(prog.bits, max_steps, max_output_bits)
    if status == _core_py.STEP_CAP:
        raise ResourceExceeded(f"step cap {max_steps} breached by {prog.bits!r}")
    if status == _core_py.OUTPUT_CAP:
        raise ResourceExceeded(f"output cap {max_output_bits} bits breached by {prog.bits!r}")
    return out


def literal_program(rho: Problem | str) -> Program:
    """The EMIT...HALT transcription of rho: one EMIT per bit, then HALT.

    Its length 2*l(rho) + 2 is the universal upper bound on solution size.
    """
    problem = _as_problem(rho)
    body = "".join("00" if b == "0" else "01" for b in problem.target)
    return Program(body + _HALT)


def iter_valid_programs(n_opcodes: int) -> Iterator[str]:
    """Yield every valid program with exactly n_opcodes opcodes, lex order."""
    if n_opcodes < 1:
        return
    for body in product(("00", "01", "10"), repeat=n_opcodes - 1):
        yield "".join(body) + _HALT


def _check_enum_budget(max_len: int, budget: int) -> None:
    if max_len < 0 or max_len % 2:
        raise DomainError(f"max_len must be even and >= 0, got {max_len!r}")
    if 2**max_len > budget:
        raise ResourceExceeded(
            f"2^{max_len} candidate strings exceed the enumeration budget {budget}"
        )


def enumerate_solutions(
    rho: Problem | str,
    max_len: int = DEFAULT_MAX_LEN,
    *,
    scheme: Scheme = Scheme.LENGTH_WEIGHTED,
    budget: int = DEFAULT_ENUM_BUDGET,
    max_steps: int = DEFAULT_MAX_STEPS,
    max_output_bits: int = DEFAULT_MAX_OUTPUT_BITS,
) -> SolutionSet:
    """Every valid program of length <= max_len whose output equals rho.

    Ordered by (length, lexicographic).  Programs that would breach a cap
    are simply not solutions.  Raises ResourceExceeded when 2^max_len
    exceeds the enumeration budget.
    """
    problem = _as_problem(rho)
    _check_limits(max_steps, max_output_bits)
    _check_enum_budget(max_len, budget)
    kernel = _kernel(max_output_bits)
    hits: list[str] = []
    if problem.length <= max_output_bits:
        for n_opcodes in range(1, max_len // 2 + 1):
            if n_opcodes > max_steps:
                break
            hits.extend(kernel.scan_length_class(n_opcodes, problem.target, max_output_bits))
    programs = tuple(Program(b) for b in hits)
    weights = _distribution_for(programs, scheme) if programs else None
    return SolutionSet(problem, programs, weights, scheme)


def kolmogorov_upper(
    rho: Problem | str,
    max_len: int = DEFAULT_MAX_LEN,
    *,
    budget: int = DEFAULT_ENUM_BUDGET,
    max_steps: int = DEFAULT_MAX_STEPS,
    max_output_bits: int = DEFAULT_MAX_OUTPUT_BITS,
) -> ComplexityBound | None:
    """Length of the shortest solution of rho within max_len, with witness.

    Ties go to the lexicographically smallest program.  None when no
    solution exists within the cap.
    """
    problem = _as_problem(rho)
    _check_limits(max_steps, max_output_bits)
    _check_enum_budget(max_len, budget)
    if problem.length > max_output_bits:
        return None
    kernel = _kernel(max_output_bits)
    for n_opcodes in range(1, max_len // 2 + 1):
        if n_opcodes > max_steps:
            break
        hits = kernel.scan_length_class(n_opcodes, problem.target, max_output_bits)
        if hits:
            return ComplexityBound(2 * n_opcodes, Program(hits[0]))
    return None


def _distribution_for(programs: tuple[Program, ...], scheme: Scheme) -> FiniteDistribution:
    m = len(programs)
    if scheme is Scheme.UNIFORM:
        return FiniteDistribution([1.0 / m] * m)
    if scheme is Scheme.LENGTH_WEIGHTED:
        raw = [2.0 ** -p.length for p in programs]
        total = math.fsum(raw)
        return FiniteDistribution([r / total for r in raw])
    raise DomainError(f"unknown scheme {scheme!r}")


def solution_distribution(solutions: SolutionSet, scheme: Scheme) -> FiniteDistribution:
    """Weights over a solution set: uniform, or proportional to 2^-length."""
    if not solutions.programs:
        raise EmptySetError("cannot weight an empty solution set")
    return _distribution_for(solutions.programs, scheme)


def reachability_report(
    rho: Problem | str,
    max_len: int = DEFAULT_MAX_LEN,
    *,
    scheme: Scheme = Scheme.LENGTH_WEIGHTED,
    temperature: float = 300.0,
    branch: BranchChoice = BranchChoice.LOWER,
    budget: int = DEFAULT_ENUM_BUDGET,
    max_steps: int = DEFAULT_MAX_STEPS,
    max_output_bits: int = DEFAULT_MAX_OUTPUT_BITS,
) -> list[ReachabilityRecord]:
    """Per-solution reachability records for rho, sorted by descending P.

    Each record carries the scheme weight p_i, the entropy variation it
    induces, the branch reachability, the Landauer energy k T ln2 * h, and
    the normalized measure P_i / sum(P).  A single-program set has zero
    variation; its reachability is the branch limit (with a warning) and
    its normalized measure is 1 by convention (the only event).
    """
    solutions = enumerate_solutions(
        rho,
        max_len,
        scheme=scheme,
        budget=budget,
        max_steps=max_steps,
        max_output_bits=max_output_bits,
    )
    if not solutions.programs:
        raise EmptySetError(
            f"no solutions of length <= {max_len} for target {solutions.problem.target!r}"
        )
    dist = solutions.weights
    records = []
    for i, prog in enumerate(solutions.programs, start=1):
        variation = entropy_variation(dist, i).variation
        if variation == 0.0:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                reach = reach_from_variation(variation, branch)
            degenerate = True
        else:
            reach = reach_from_variation(variation, branch)
            degenerate = False
        records.append(
            ReachabilityRecord(
                program_id=prog.bits,
                p_i=dist[i - 1],
                variation=variation,
                reachability=reach,
                branch=branch,
                energy=entropy_to_work(variation, temperature),
                temperature=temperature,
                degenerate=degenerate,
            )
        )
    total = math.fsum(r.reachability for r in records)
    normalized = [
        (r.reachability / total) if total > 0.0 else 1.0 for r in records
    ]
    records = [
        ReachabilityRecord(
            program_id=r.program_id,
            p_i=r.p_i,
            variation=r.variation,
            reachability=r.reachability,
            branch=r.branch,
            energy=r.energy,
            temperature=r.temperature,
            normalized=n,
            degenerate=r.degenerate,
        )
        for r, n in zip(records, normalized)
    ]
    if any(r.degenerate for r in records):
        warnings.warn(
            "deterministic solution set: reachability reported as the branch limit",
            DegenerateSetWarning,
            stacklevel=2,
        )
    records.sort(key=lambda r: -r.reachability)
    return records
