"""Command-line interface.

Subcommands: lambertw, reach, solve, report, search, loss.  Floats print
with 12 significant digits; records/csv output is byte-identical across
identical invocations.  Exit codes: 0 success, 1 domain error, 2 resource
or budget error, 3 usage error.
"""

from __future__ import annotations

import argparse
import math
import sys
import warnings

from . import __version__
from .entropy import VARIATION_MAX, entropy_to_work
from .errors import (
    ConvergenceError,
    DegenerateSetWarning,
    DomainError,
    EmptySetError,
    InvalidDistribution,
    InvalidPolicy,
    InvalidProgram,
    ReachcalcError,
    ResourceExceeded,
)
from .formats import (
    REPORT_KEYS,
    SOLUTION_KEYS,
    TRACE_KEYS,
    csv_text,
    format_value,
    read_program_text,
    records_text,
    table_text,
)
from .lambertw import BRANCH_POINT, BranchChoice, eval_w, solve_xlog, w_curve
from .loss import convexity_certificate, matching_loss
from .machine import (
    CORE_BACKEND,
    DEFAULT_MAX_LEN,
    Scheme,
    enumerate_solutions,
    kolmogorov_upper,
    reachability_report,
)
from .reachability import reach_curve, reach_from_energy, reach_from_variation
from .search import Budget, demiurge_search

_EXIT_DOMAIN = 1
_EXIT_RESOURCE = 2
_EXIT_USAGE = 3

_BRANCHES = {"lower": BranchChoice.LOWER, "principal": BranchChoice.PRINCIPAL}
_SCHEMES = {"uniform": Scheme.UNIFORM, "lengthweighted": Scheme.LENGTH_WEIGHTED}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse default exits with code 2
        raise _UsageError(message)


def _emit(rows: list[dict], keys: tuple[str, ...], fmt: str) -> None:
    if fmt == "records":
        sys.stdout.write(records_text(rows, keys))
    elif fmt == "csv":
        sys.stdout.write(csv_text(rows, keys))
    else:
        sys.stdout.write(table_text(rows, keys))


def _scalar(fields: list[tuple[str, object]], fmt: str) -> None:
    row = dict(fields)
    keys = tuple(k for k, _ in fields)
    if fmt == "table":
        for k, v in fields:
            sys.stdout.write(f"{k}: {format_value(v)}\n")
    else:
        _emit([row], keys, fmt)


def _target_from(args) -> str:
    if args.input is not None:
        if args.rho is not None:
            raise _UsageError("give the target either inline or via --input, not both")
        with open(args.input, encoding="ascii") as fh:
            return read_program_text(fh.read())
    if args.rho is None:
        raise _UsageError("missing target: pass it inline or via --input")
    return args.rho


def _add_target(sub) -> None:
    sub.add_argument("rho", nargs="?", default=None, help="target bit string (may be empty: '')")
    sub.add_argument("--input", metavar="FILE", help="read the target bits from FILE")


def _cmd_lambertw(args) -> int:
    branch = _BRANCHES[args.branch]
    if args.curve:
        lo, hi, n = float(args.curve[0]), float(args.curve[1]), int(args.curve[2])
        rows = [{"x": x, "w": w} for x, w in w_curve(lo, hi, n, branch)]
        _emit(rows, ("x", "w"), args.format)
        return 0
    if args.x is None:
        raise _UsageError("lambertw needs an argument x or --curve lo hi n")
    ev = eval_w(float(args.x), branch)
    _scalar(
        [
            ("x", ev.argument),
            ("branch", ev.branch.value),
            ("w", ev.value),
            ("residual", ev.residual),
            ("iterations", ev.iterations),
        ],
        args.format,
    )
    return 0


def _cmd_reach(args) -> int:
    branch = _BRANCHES[args.branch]
    if args.curve:
        lo, hi, n = float(args.curve[0]), float(args.curve[1]), int(args.curve[2])
        rows = [{"variation": h, "reachability": p} for h, p in reach_curve(lo, hi, n, branch)]
        _emit(rows, ("variation", "reachability"), args.format)
        return 0
    if (args.variation is None) == (args.energy is None):
        raise _UsageError("reach needs exactly one of --variation or --energy (or --curve)")
    if args.variation is not None:
        h = args.variation
        p = reach_from_variation(h, branch)
        energy = entropy_to_work(h, args.temp)
    else:
        p = reach_from_energy(args.energy, args.temp, branch)
        energy = args.energy
        h = energy / entropy_to_work(1.0, args.temp)
    _scalar(
        [
            ("variation", h),
            ("reachability", p),
            ("branch", branch.value),
            ("energy", energy),
            ("temperature", args.temp),
        ],
        args.format,
    )
    return 0


def _cmd_solve(args) -> int:
    target = _target_from(args)
    solutions = enumerate_solutions(target, args.max_len, scheme=_SCHEMES[args.scheme])
    bound = kolmogorov_upper(target, args.max_len)
    header = [
        ("target", target),
        ("max_len", args.max_len),
        ("solutions", len(solutions)),
        ("k_upper", bound.bits if bound else "none"),
        ("witness", bound.witness.bits if bound else "none"),
    ]
    if args.format == "table":
        for k, v in header:
            sys.stdout.write(f"{k}: {format_value(v)}\n")
    rows = [
        {"program": prog.bits, "length": prog.length, "p": solutions.weights[i]}
        for i, prog in enumerate(solutions.programs)
    ]
    if rows:
        _emit(rows, SOLUTION_KEYS, args.format)
    return 0


def _cmd_report(args) -> int:
    target = _target_from(args)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        records = reachability_report(
            target,
            args.max_len,
            scheme=_SCHEMES[args.scheme],
            temperature=args.temp,
            branch=_BRANCHES[args.branch],
        )
    rows = [
        {
            "program": r.program_id,
            "length": r.length,
            "p": r.p_i,
            "variation": r.variation,
            "reachability": r.reachability,
            "energy": r.energy,
        }
        for r in records
    ]
    if args.format == "table":
        sys.stdout.write(
            f"target: {target!r}  branch: {args.branch}  scheme: {args.scheme}  "
            f"T: {format_value(args.temp)} K\n"
        )
        table_rows = [dict(row, normalized=r.normalized) for row, r in zip(rows, records)]
        _emit(table_rows, REPORT_KEYS + ("normalized",), "table")
    else:
        _emit(rows, REPORT_KEYS, args.format)
    for w in caught:
        if issubclass(w.category, DegenerateSetWarning):
            sys.stderr.write(f"warning: {w.message}\n")
    return 0


def _cmd_search(args) -> int:
    target = _target_from(args)
    budget = Budget(programs=args.budget_programs, energy=args.budget_energy)
    trace = demiurge_search(
        target,
        args.policy,
        budget,
        temperature=args.temp,
        start_length=args.start_length,
        max_len=args.max_len,
    )
    summary = [
        ("policy", trace.policy.value),
        ("programs_run", trace.programs_run),
        ("best_found", trace.best_found.bits if trace.best_found else "none"),
        ("best_length", trace.best_found.length if trace.best_found else "none"),
        ("bits_reduced", trace.bits_reduced),
        ("energy_charged", trace.energy_charged),
        ("temperature", trace.temperature),
        ("budget_exhausted", trace.budget_exhausted),
    ]
    if args.format == "table":
        for k, v in summary:
            sys.stdout.write(f"{k}: {format_value(v)}\n")
        return 0
    rows = [
        {"program": bits, "length": len(bits), "outcome": outcome}
        for bits, outcome in trace.steps
    ]
    _emit(rows, TRACE_KEYS, args.format)
    return 0


def _cmd_loss(args) -> int:
    if args.convexity_grid:
        cert = convexity_certificate()
        _scalar(
            [
                ("convex", cert.ok),
                ("min_second_difference", cert.min_second_difference),
                ("points", cert.points),
                ("lo", cert.lo),
                ("hi", cert.hi),
                ("step", cert.step),
            ],
            args.format,
        )
        return 0 if cert.ok else _EXIT_DOMAIN
    if args.z_hat is None or args.z is None:
        raise _UsageError("loss needs z_hat and z (or --convexity-grid)")
    ev = matching_loss(float(args.z_hat), float(args.z))
    _scalar(
        [
            ("z_hat", ev.z_hat),
            ("z", ev.z),
            ("f_z_hat", ev.f_z_hat),
            ("f_z", ev.f_z),
            ("divergence", ev.divergence),
        ],
        args.format,
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="reachcalc",
        description="Reachability calculus for programs of a prefix-free toy machine.",
    )
    parser.add_argument(
        "--version",
        action="version",
        version=f"reachcalc {__version__} (core: {CORE_BACKEND})",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, branch=True, temp=False, scheme=False, max_len=False):
        p.add_argument(
            "--format",
            choices=("table", "records", "csv"),
            default="table",
            help="output shape (default table)",
        )
        if branch:
            p.add_argument(
                "--branch",
                choices=("lower", "principal"),
                default="lower",
                help="real branch of W (default lower)",
            )
        if temp:
            p.add_argument("--temp", type=float, default=300.0, metavar="K",
                           help="temperature in kelvin (default 300)")
        if scheme:
            p.add_argument(
                "--scheme",
                choices=("uniform", "lengthweighted"),
                default="lengthweighted",
                help="solution weighting (default lengthweighted)",
            )
        if max_len:
            p.add_argument("--max-len", type=int, default=DEFAULT_MAX_LEN, metavar="BITS",
                           help=f"program length cap (default {DEFAULT_MAX_LEN})")

    p = sub.add_parser("lambertw", help="evaluate a real branch of the Lambert W function")
    p.add_argument("x", nargs="?", default=None, help="argument")
    p.add_argument("--curve", nargs=3, metavar=("LO", "HI", "N"),
                   help="emit N sampled (x, W) pairs on [LO, HI]")
    common(p)
    p.set_defaults(func=_cmd_lambertw)

    p = sub.add_parser("reach", help="reachability from an entropy variation or energy")
    p.add_argument("--variation", type=float, metavar="H", help="entropy variation in bits")
    p.add_argument("--energy", type=float, metavar="J", help="energy form k T ln2 * H")
    p.add_argument("--curve", nargs=3, metavar=("LO", "HI", "N"),
                   help="emit N sampled (variation, reachability) pairs on [LO, HI]")
    common(p, temp=True)
    p.set_defaults(func=_cmd_reach)

    p = sub.add_parser("solve", help="enumerate the solution set of a target")
    _add_target(p)
    common(p, branch=False, scheme=True, max_len=True)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("report", help="reachability report over a target's solution set")
    _add_target(p)
    common(p, temp=True, scheme=True, max_len=True)
    p.set_defaults(func=_cmd_report)

    p = sub.add_parser("search", help="run a Demiurge search policy")
    _add_target(p)
    p.add_argument(
        "--policy",
        default="sizedescending",
        metavar="NAME",
        help="exhaustive-by-size, size-descending, or reachability-greedy "
        "(default size-descending; case and -/_ are ignored)",
    )
    p.add_argument("--budget-programs", type=int, default=100_000, metavar="N",
                   help="program budget (default 100000)")
    p.add_argument("--budget-energy", type=float, default=math.inf, metavar="J",
                   help="energy budget in joules (default unlimited)")
    p.add_argument("--start-length", type=int, default=None, metavar="BITS",
                   help="size class where the search starts (default: literal program)")
    common(p, branch=False, temp=True, max_len=True)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("loss", help="matching loss of the convex link exp(-W(z))")
    p.add_argument("z_hat", nargs="?", default=None, help="prediction")
    p.add_argument("z", nargs="?", default=None, help="target")
    p.add_argument("--convexity-grid", action="store_true",
                   help="run the numerical convexity certificate instead")
    common(p, branch=False)
    p.set_defaults(func=_cmd_loss)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return _EXIT_USAGE
    except InvalidPolicy as exc:
        sys.stderr.write(f"{type(exc).__name__}: {exc}\n")
        return _EXIT_USAGE
    except ResourceExceeded as exc:
        sys.stderr.write(f"{type(exc).__name__}: {exc}\n")
        return _EXIT_RESOURCE
    except (
        DomainError,
        ConvergenceError,
        InvalidDistribution,
        InvalidProgram,
        EmptySetError,
        ReachcalcError,
    ) as exc:
        sys.stderr.write(f"{type(exc).__name__}: {exc}\n")
        return _EXIT_DOMAIN
    except OSError as exc:
        sys.stderr.write(f"{type(exc).__name__}: {exc}\n")
        return _EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
