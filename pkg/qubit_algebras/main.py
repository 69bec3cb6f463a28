"""Command-line entry point.

Every subcommand prints one RunReport on standard output and returns
0 when all of its checks pass, 1 when any check fails and 2 for malformed
input or usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

import pandas as pd

from qubit_algebras.checks.car_relations import CarRelationsCheck
from qubit_algebras.checks.oracle import OracleCheck
from qubit_algebras.checks.rank import RankCheck
from qubit_algebras.checks.representation import RepresentationCheck
from qubit_algebras.config import settings
from qubit_algebras.core.bundle_representation import (
    pi_apply,
    section_norm,
    star_rep_check,
)
from qubit_algebras.core.convolution import (
    convolve,
    group_convolve,
    group_norm,
    i_norm,
)
from qubit_algebras.core.rep_equivalence import decide_equivalence
from qubit_algebras.core.theta_space import ThetaFamily
from qubit_algebras.models.enums import CheckStatus, NormKind, Orientation
from qubit_algebras.models.errors import QubitAlgebraError
from qubit_algebras.models.schemas import CheckDetail, RunReport
from qubit_algebras.oracle.dense import compare_apply
from qubit_algebras.services.loaders import (
    conv_to_schema,
    group_algebra_to_schema,
    load_algebra,
    load_conv_function,
    load_group_algebra,
    load_reference_family,
    load_section,
    load_state,
    write_json,
)
from qubit_algebras.services.verification_engine import (
    SUITES,
    VerificationEngine,
    build_report,
    to_detail,
)
from qubit_algebras.utils.logger import get_logger

logger = get_logger(__name__)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        raise UsageError(message)


def _detail(
    name: str,
    residual: float = 0.0,
    tolerance: Optional[float] = None,
    passed: bool = True,
    **info,
) -> CheckDetail:
    return CheckDetail(
        name=name,
        status=CheckStatus.PASS if passed else CheckStatus.FAIL,
        residual=residual,
        tolerance=tolerance,
        info=info,
    )


def _suite(command: str, check, seed: int) -> RunReport:
    return build_report(command, [to_detail(r) for r in check.run(seed)], seed)


def cmd_car_check(args) -> RunReport:
    params = {"sites": args.sites or settings.CAR_MAX_SITES}
    params["number_sites"] = min(params["sites"], settings.ORACLE_MAX_SITES)
    return _suite("car-check", CarRelationsCheck(params), args.seed)


def cmd_rank_check(args) -> RunReport:
    return _suite("rank-check", RankCheck({"sites": args.sites or 3}), args.seed)


def cmd_equiv_check(args) -> RunReport:
    f = load_reference_family(args.family_a) if args.family_a else ThetaFamily()
    g = load_reference_family(args.family_b) if args.family_b else ThetaFamily()
    verdict = decide_equivalence(f, g, args.partial_terms)
    info = {
        "verdict": verdict.status.value,
        "partial_sum": verdict.partial_sum,
        "terms_evaluated": verdict.terms_evaluated,
    }
    if args.partial_terms is not None and verdict.tail_term is not None:
        info["partial_terms"] = "unused: both families have finite overrides"
    if verdict.tail_term is not None:
        info["tail_term"] = verdict.tail_term
    return build_report("equiv-check", [_detail("equivalence", **info)])


def cmd_convolve(args) -> RunReport:
    _require(args, "lhs", "rhs")
    if args.kind == NormKind.GROUP.value:
        u, v = load_group_algebra(args.lhs), load_group_algebra(args.rhs)
        product = group_convolve(u, v)
        if args.out:
            write_json(args.out, group_algebra_to_schema(product))
        bound = group_norm(u) * group_norm(v)
        excess = max(group_norm(product) - bound, 0.0)
        detail = _detail(
            "group_convolve",
            excess,
            settings.PROPERTY_TOL,
            excess < settings.PROPERTY_TOL,
            entries=len(product.entries),
            norm=group_norm(product),
        )
        return build_report("convolve", [detail])

    f, h = load_conv_function(args.lhs), load_conv_function(args.rhs)
    product = convolve(f, h)
    if args.out:
        write_json(args.out, conv_to_schema(product))
    excess = max(i_norm(product) - i_norm(f) * i_norm(h), 0.0)
    detail = _detail(
        "convolve",
        excess,
        settings.PROPERTY_TOL,
        excess < settings.PROPERTY_TOL,
        entries=len(product.entries),
        i_norm=i_norm(product),
    )
    return build_report("convolve", [detail])


def cmd_norm(args) -> RunReport:
    _require(args, "lhs")
    if args.kind == NormKind.GROUP.value:
        value = group_norm(load_group_algebra(args.lhs))
    else:
        value = i_norm(load_conv_function(args.lhs))
    return build_report("norm", [_detail("norm", kind=args.kind, value=value)])


def cmd_rep_check(args) -> RunReport:
    orientation = Orientation(args.orientation)
    trials = args.trials or settings.DEFAULT_TRIALS
    if not args.lhs:
        check = RepresentationCheck({"instances": trials, "orientation": orientation.value})
        return _suite("rep-check", check, args.seed)

    f = load_conv_function(args.lhs)
    h = load_conv_function(args.rhs) if args.rhs else f
    section = load_section(args.section) if args.section else None
    family = section.family if section is not None else None
    report = star_rep_check(
        f, h, trials=trials, seed=args.seed, family=family, orientation=orientation
    )
    tol = settings.REPRESENTATION_TOL
    details = [
        _detail(
            "multiplicative",
            report.multiplicative_residual,
            tol,
            report.multiplicative_residual < tol,
        ),
        _detail("adjoint", report.adjoint_residual, tol, report.adjoint_residual < tol),
        _detail(
            "i_norm_dominates",
            float(report.norm_bound_violations),
            0.5,
            report.norm_bound_violations == 0,
            trials=trials,
        ),
    ]
    if section is not None:
        image = section_norm(pi_apply(f, section, orientation))
        excess = max(image - i_norm(f) * section_norm(section), 0.0)
        details.append(_detail("section_bound", excess, tol, excess < tol, image_norm=image))
    return build_report("rep-check", details, args.seed)


def cmd_oracle_compare(args) -> RunReport:
    m = args.sites or settings.ORACLE_MAX_SITES
    if args.lhs:
        _require(args, "rhs")
        residual = compare_apply(m, load_algebra(args.lhs), load_state(args.rhs))
        tol = settings.ORACLE_TOL
        return build_report(
            "oracle-compare", [_detail("apply", residual, tol, residual < tol, sites=m)]
        )
    params = {"max_sites": m, "trials": args.trials or 500}
    return _suite("oracle-compare", OracleCheck(params), args.seed)


def _suite_param(item: str) -> tuple[str, str, object]:
    target, sep, raw = item.partition("=")
    suite, dot, key = target.partition(".")
    if not sep or not dot or not key:
        raise UsageError(f"--suite-param expects SUITE.KEY=VALUE, got {item!r}")
    try:
        value = json.loads(raw)
    except json.JSONDecodeError:
        value = raw
    return suite, key, value


def cmd_verify_all(args) -> RunReport:
    engine = VerificationEngine()
    try:
        if args.only:
            for name in SUITES:
                engine.set_suite_enabled(name, name in args.only)
        for name in args.skip or []:
            engine.set_suite_enabled(name, False)
        params: dict[str, dict] = {}
        for item in args.suite_param or []:
            suite, key, value = _suite_param(item)
            params.setdefault(suite, {})[key] = value
        for suite, overrides in params.items():
            engine.set_suite_params(suite, overrides)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from exc
    enabled = [s["name"] for s in engine.get_suite_status() if s["enabled"]]
    logger.info("verify_all_selected", suites=enabled)
    return engine.run_all(args.seed)


COMMANDS = {
    "car-check": cmd_car_check,
    "equiv-check": cmd_equiv_check,
    "convolve": cmd_convolve,
    "norm": cmd_norm,
    "rep-check": cmd_rep_check,
    "oracle-compare": cmd_oracle_compare,
    "rank-check": cmd_rank_check,
    "verify-all": cmd_verify_all,
}


def _require(args, *names: str) -> None:
    missing = [f"--{n}" for n in names if not getattr(args, n)]
    if missing:
        raise UsageError(f"{args.command} requires {', '.join(missing)}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qubit_algebras", description="Infinite qubit input/output algebras.")
    parser.add_argument("command", choices=list(COMMANDS))
    parser.add_argument("--sites", type=int, default=None)
    parser.add_argument("--trials", type=int, default=None)
    parser.add_argument("--seed", type=int, default=settings.DEFAULT_SEED)
    parser.add_argument("--family-a", dest="family_a", default=None)
    parser.add_argument("--family-b", dest="family_b", default=None)
    parser.add_argument("--partial-terms", dest="partial_terms", type=int, default=None)
    parser.add_argument("--lhs", default=None)
    parser.add_argument("--rhs", default=None)
    parser.add_argument("--section", default=None)
    parser.add_argument("--out", default=None)
    parser.add_argument(
        "--kind", choices=[k.value for k in NormKind], default=NormKind.I_NORM.value
    )
    parser.add_argument(
        "--orientation", choices=[o.value for o in Orientation], default=Orientation.FORWARD.value
    )
    parser.add_argument(
        "--only", action="append", choices=list(SUITES), help="verify-all: run only these suites"
    )
    parser.add_argument(
        "--skip", action="append", choices=list(SUITES), help="verify-all: leave these suites out"
    )
    parser.add_argument(
        "--suite-param",
        dest="suite_param",
        action="append",
        metavar="SUITE.KEY=VALUE",
        help="verify-all: override one suite parameter, VALUE read as JSON",
    )
    parser.add_argument("--json", action="store_true", help="emit the report as JSON")
    return parser


def render(report: RunReport, as_json: bool) -> str:
    if as_json:
        return report.model_dump_json(indent=2)
    frame = pd.DataFrame(
        [
            {
                "check": d.name,
                "status": d.status.value,
                "residual": d.residual,
                "tolerance": d.tolerance,
                "info": " ".join(f"{k}={v}" for k, v in d.info.items()),
            }
            for d in report.details
        ],
        columns=["check", "status", "residual", "tolerance", "info"],
    )
    header = (
        f"{report.command}: {report.status.value} "
        f"(max_residual={report.max_residual:.3e}, seed={report.seed})"
    )
    return f"{header}\n{frame.to_string(index=False)}"


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.sites is not None and args.sites < 1:
            raise UsageError("--sites must be positive")
        if args.trials is not None and args.trials < 1:
            raise UsageError("--trials must be positive")
        report = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except QubitAlgebraError as exc:
        logger.warning("command_rejected_input", error=str(exc))
        print(f"error: {exc}", file=sys.stderr)
        return 2

    print(render(report, args.json))
    logger.info("command_finished", command=args.command, status=report.status.value)
    return 0 if report.status == CheckStatus.PASS else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
