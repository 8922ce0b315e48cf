"""Tests for the toy machine: validation, execution, enumeration, reports."""

import math
import warnings

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from reachcalc.entropy import entropy_to_work
from reachcalc.errors import (
    DegenerateSetWarning,
    DomainError,
    EmptySetError,
    InvalidProgram,
    ResourceExceeded,
)
from reachcalc.lambertw import BranchChoice
from reachcalc.machine import (
    CORE_BACKEND,
    Problem,
    Program,
    Scheme,
    enumerate_solutions,
    iter_valid_programs,
    kolmogorov_upper,
    literal_program,
    reachability_report,
    run,
    solution_distribution,
)

import oracles

# Random valid programs: free opcodes then HALT.
program_bits = st.lists(
    st.sampled_from(["00", "01", "10"]), min_size=0, max_size=7
).map(lambda body: "".join(body) + "11")

target_bits = st.text(alphabet="01", min_size=0, max_size=5)


def test_backend_is_reported():
    assert CORE_BACKEND in ("compiled", "pure")


# ------------------------------------------------------------------ validation


def test_program_accepts_valid():
    p = Program("0001101011")
    assert p.length == 10
    assert p.opcode_count == 5
    assert Program("11").opcode_count == 1


def test_program_rejects_malformed():
    for bad in ("", "0", "001", "0011x1", "0100", "1100", "110011", "0011 "):
        with pytest.raises(InvalidProgram):
            Program(bad)


def test_program_rejects_missing_or_early_halt():
    with pytest.raises(InvalidProgram):
        Program("0010")  # no HALT
    with pytest.raises(InvalidProgram):
        Program("11000011")  # HALT first


def test_problem_validation():
    assert Problem("0101").length == 4
    assert Problem("").length == 0
    with pytest.raises(DomainError):
        Problem("01a1")
    with pytest.raises(DomainError):
        Problem("0" * 65)  # beyond the 64-bit output cap
    with pytest.raises(DomainError):
        Problem("000", max_bits=2)


# ------------------------------------------------------------------- execution


def test_run_pinned_programs():
    assert run("11") == ""
    assert run("0011") == "0"
    assert run("0111") == "1"
    assert run("1011") == ""  # DOUBLE on empty output is a no-op
    assert run("000111") == "01"
    assert run("00101011") == "0000"  # one emit, doubled twice
    assert run("0001101011") == "01010101"


def test_run_accepts_program_objects():
    assert run(Program("0011")) == "0"


def test_run_validates_first():
    with pytest.raises(InvalidProgram):
        run("0010")


def test_run_output_cap():
    # 1 emit + 7 doublings = 128 bits of output
    wide = "00" + "10" * 7 + "11"
    with pytest.raises(ResourceExceeded):
        run(wide)
    assert run(wide, max_output_bits=128) == "0" * 128
    assert run(wide, max_output_bits=128, max_steps=9) == "0" * 128


def test_run_step_cap():
    with pytest.raises(ResourceExceeded):
        run("0011", max_steps=1)
    assert run("0011", max_steps=2) == "0"
    with pytest.raises(DomainError):
        run("0011", max_steps=0)
    with pytest.raises(DomainError):
        run("0011", max_output_bits=0)


@given(program_bits)
@settings(max_examples=300)
def test_run_matches_independent_interpreter(bits):
    expected = oracles.oracle_run(bits)
    if expected is None:
        with pytest.raises(ResourceExceeded):
            run(bits)
    else:
        assert run(bits) == expected


# -------------------------------------------------------------------- literals


def test_literal_program_pinned():
    assert literal_program("").bits == "11"
    assert literal_program("0").bits == "0011"
    assert literal_program("01010101").bits == "000100010001000111"


def test_literal_program_transcribes():
    assert literal_program("01").bits == "000111"
    assert literal_program("10").bits == "010011"


@given(target_bits)
def test_literal_program_solves_its_target(rho):
    prog = literal_program(rho)
    assert prog.length == 2 * len(rho) + 2
    assert run(prog) == rho


# ----------------------------------------------------------------- enumeration


def test_valid_program_class_sizes():
    """Class k holds 3^(k-1) programs: free opcodes over {00,01,10}, then HALT."""
    for k in range(1, 8):
        progs = list(iter_valid_programs(k))
        assert len(progs) == 3 ** (k - 1)
        assert progs == sorted(progs)  # lexicographic
        assert all(len(p) == 2 * k for p in progs)
    assert list(iter_valid_programs(0)) == []


def test_prefix_freeness_to_16_bits():
    valid = set()
    for k in range(1, 9):
        valid.update(iter_valid_programs(k))
    for prog in valid:
        for cut in range(2, len(prog), 2):
            assert prog[:cut] not in valid


def test_enumerate_solutions_pinned():
    s = enumerate_solutions("0", 6)
    assert [p.bits for p in s.programs] == ["0011", "100011"]
    assert s.weights.probabilities == (0.8, 0.2)
    assert s.lengths() == (4, 6)
    assert len(s) == 2


def test_enumerate_empty_target():
    s = enumerate_solutions("", 6)
    assert [p.bits for p in s.programs] == ["11", "1011", "101011"]
    assert s.weights.probabilities == pytest.approx((16 / 21, 4 / 21, 1 / 21))


def test_enumerate_orders_by_length_then_lex():
    s = enumerate_solutions("00", 8)
    lengths = s.lengths()
    assert lengths == tuple(sorted(lengths))
    for size in set(lengths):
        group = [p.bits for p in s.programs if p.length == size]
        assert group == sorted(group)


def test_enumerate_uniform_scheme():
    s = enumerate_solutions("0", 6, scheme=Scheme.UNIFORM)
    assert s.weights.probabilities == (0.5, 0.5)
    assert s.scheme is Scheme.UNIFORM


def test_enumerate_no_solutions():
    s = enumerate_solutions("01010101", 8)
    assert len(s) == 0
    assert s.weights is None


def test_enumerate_respects_output_cap():
    s = enumerate_solutions(Problem("00000", max_bits=5), 12, max_output_bits=4)
    assert len(s) == 0  # target cannot fit the output register


def test_enumerate_budget():
    with pytest.raises(ResourceExceeded):
        enumerate_solutions("0", max_len=26)  # 2^26 > default 2^24 budget
    with pytest.raises(DomainError):
        enumerate_solutions("0", max_len=7)
    with pytest.raises(DomainError):
        enumerate_solutions("0", max_len=-2)
    enumerate_solutions("0", max_len=26, budget=2**26)  # explicit budget unlocks


def test_enumerate_agrees_with_all_strings_oracle():
    table = oracles.oracle_solutions(10)
    for rho in ("", "0", "1", "01", "11", "000", "0101"):
        got = [p.bits for p in enumerate_solutions(rho, 10).programs]
        assert got == table.get(rho, [])


# ------------------------------------------------------------------ complexity


def test_kolmogorov_upper_pinned():
    assert kolmogorov_upper("").bits == 2
    assert kolmogorov_upper("").witness.bits == "11"
    assert kolmogorov_upper("0").bits == 4
    assert kolmogorov_upper("0").witness.bits == "0011"
    assert kolmogorov_upper("01010101").bits == 10
    assert kolmogorov_upper("01010101").witness.bits == "0001101011"
    assert kolmogorov_upper("0000").bits == 8
    assert kolmogorov_upper("0000").witness.bits == "00001011"


def test_kolmogorov_upper_none_when_out_of_reach():
    assert kolmogorov_upper("01010101", 8) is None


def test_kolmogorov_upper_never_beats_literal():
    for rho in ("", "0", "10", "110", "0101"):
        bound = kolmogorov_upper(rho, 14)
        assert bound.bits <= literal_program(rho).length
        assert run(bound.witness) == rho


# ------------------------------------------------------------------- weighting


def test_solution_distribution_schemes():
    s = enumerate_solutions("0", 6)
    uniform = solution_distribution(s, Scheme.UNIFORM)
    assert uniform.probabilities == (0.5, 0.5)
    weighted = solution_distribution(s, Scheme.LENGTH_WEIGHTED)
    assert weighted.probabilities == (0.8, 0.2)


def test_solution_distribution_rejects_empty():
    s = enumerate_solutions("01010101", 8)
    with pytest.raises(EmptySetError):
        solution_distribution(s, Scheme.UNIFORM)


# --------------------------------------------------------------------- reports


def test_report_pinned_two_solutions():
    records = reachability_report("0", 6)
    assert [r.program_id for r in records] == ["100011", "0011"]  # descending P

    longer, shorter = records
    assert longer.p_i == pytest.approx(0.2, rel=1e-15)
    assert longer.variation == pytest.approx(0.4643856189774725, rel=1e-12)
    assert longer.reachability == pytest.approx(0.2, rel=1e-11)
    assert longer.normalized == pytest.approx(0.7533266524519008, rel=1e-11)

    assert shorter.p_i == pytest.approx(0.8, rel=1e-15)
    assert shorter.variation == pytest.approx(0.2575424759098899, rel=1e-12)
    assert shorter.reachability == pytest.approx(0.06548908013415841, rel=1e-11)
    assert shorter.normalized == pytest.approx(0.24667334754809908, rel=1e-11)

    assert math.fsum(r.normalized for r in records) == pytest.approx(1.0, abs=1e-12)
    assert all(r.branch is BranchChoice.LOWER for r in records)
    assert all(not r.degenerate for r in records)


def test_report_energy_column():
    records = reachability_report("0", 6, temperature=300.0)
    for r in records:
        assert r.energy == entropy_to_work(r.variation, 300.0)
        assert r.temperature == 300.0


def test_report_principal_branch():
    records = reachability_report("0", 6, branch=BranchChoice.PRINCIPAL)
    assert all(r.reachability >= 1.0 / math.e - 1e-12 for r in records)


def test_report_degenerate_single_solution():
    with pytest.warns(DegenerateSetWarning):
        records = reachability_report("0", 4)
    (only,) = records
    assert only.program_id == "0011"
    assert only.variation == 0.0
    assert only.reachability == 0.0  # lower-branch limit
    assert only.normalized == 1.0
    assert only.degenerate


def test_report_degenerate_principal_limit():
    with pytest.warns(DegenerateSetWarning):
        records = reachability_report("0", 4, branch=BranchChoice.PRINCIPAL)
    assert records[0].reachability == 1.0
    assert records[0].normalized == 1.0


def test_report_empty_set():
    with pytest.raises(EmptySetError):
        reachability_report("01010101", 8)


def test_report_sorted_descending():
    records = reachability_report("00", 10)
    values = [r.reachability for r in records]
    assert values == sorted(values, reverse=True)
    assert math.fsum(r.normalized for r in records) == pytest.approx(1.0, abs=1e-12)


@given(target_bits)
@settings(max_examples=30, deadline=None)
def test_report_normalized_is_a_measure(rho):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DegenerateSetWarning)
        records = reachability_report(rho, 12)
    total = math.fsum(r.normalized for r in records)
    assert total == pytest.approx(1.0, abs=1e-12)
    best = max(records, key=lambda r: r.reachability)
    assert max(records, key=lambda r: r.normalized) is best
