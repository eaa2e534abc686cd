"""Command-line front end.

Exit codes: 0 when everything checked holds, 1 when an identity, isomorphism
or dimension check fails, 2 on usage, parse, type or model errors.
"""
import argparse
import functools
import sys
from typing import Optional, Sequence

from .algebras import expected_failing_suites, list_builtins, resolve_builtin
from .config import load_settings
from .diagram import parse, typecheck
from .engine import evaluate
from .equivalence.functors import ca_round_trip, phi, psi, round_trip
from .exceptions import DimensionCheckFailure, IsoCheckFailure, ProdcheckError, SuiteFailure, TypeMismatch
from .logs.logger import setup_logger
from .models.algebra_model import Model, Role
from .models.cli_model import CliConfig, OutputMode, Profile, Suite
from .models.helper import format_rational
from .store.model_store import emit_model, read_model_file
from .tensor import RationalTensor, first_difference
from .verify.dimension import dimension_report, failed_checks
from .verify.report import format_dimension, format_verdicts, render
from .verify.runner import default_catalog, run_suite, totals

logger = setup_logger("prodcheck: CLI")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
CHECK_FAILURES = (IsoCheckFailure, SuiteFailure, DimensionCheckFailure)


def _model_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    source = common.add_mutually_exclusive_group()
    source.add_argument("--builtin", help="name of a built-in model")
    source.add_argument("--model", dest="model_path", help="path to a model file")
    common.add_argument("--catalog", dest="catalog_path", help="identity catalog (overrides PRODCHECK_CATALOG)")
    common.add_argument("--output", choices=[m.value for m in OutputMode], default=OutputMode.human.value)
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="prodcheck",
                                     description="Exact checks of string-diagram identities in finite models")
    sub = parser.add_subparsers(dest="command", required=True)
    common = _model_options()

    p = sub.add_parser("eval", parents=[common], help="evaluate a term")
    p.add_argument("--term", required=True)

    p = sub.add_parser("check", parents=[common], help="compare two terms")
    p.add_argument("--lhs", required=True)
    p.add_argument("--rhs", required=True)

    p = sub.add_parser("axioms", parents=[common], help="run catalog suites")
    p.add_argument("--suite", choices=[s.value for s in Suite], default=Suite.all.value)
    p.add_argument("--profile", choices=[x.value for x in Profile], default=Profile.strict.value)

    p = sub.add_parser("report", aliases=["paper"], parents=[common],
                       help="run every supported suite and the dimension report")
    p.add_argument("--profile", choices=[x.value for x in Profile], default=Profile.builtin.value)

    p = sub.add_parser("builtin", help="list or emit built-in models")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--list", action="store_true")
    group.add_argument("--emit", metavar="NAME")

    sub.add_parser("phi", parents=[common], help="vector part of a composition algebra")
    sub.add_parser("psi", parents=[common], help="composition algebra built on a vector product algebra")
    sub.add_parser("roundtrip", parents=[common], help="check the round-trip isomorphism")

    p = sub.add_parser("serve", help="start the HTTP API")
    p.add_argument("--host")
    p.add_argument("--port", type=int)
    return parser


def load_model_from(config: CliConfig) -> Model:
    if config.builtin is not None:
        return resolve_builtin(config.builtin)
    if config.model_path is not None:
        return read_model_file(config.model_path)
    raise ProdcheckError("no model given: use --builtin NAME or --model PATH")


def format_tensor(t: RationalTensor) -> list[str]:
    if t.is_scalar:
        return [format_rational(t.scalar())]
    dom = " ".join(str(n) for n in t.dom) or "I"
    cod = " ".join(str(n) for n in t.cod) or "I"
    lines = [f"shape {dom} -> {cod}"]
    lines += [f"{' '.join(str(k) for k in index)} = {format_rational(v)}" for index, v in t.nonzero()]
    return lines


def cmd_eval(config: CliConfig) -> int:
    model = load_model_from(config)
    term = parse(config.term, model.signature())
    print(render(format_tensor(evaluate(term, model))), end="")
    return EXIT_OK


def cmd_check(config: CliConfig) -> int:
    model = load_model_from(config)
    sig = model.signature()
    lhs, rhs = parse(config.lhs, sig), parse(config.rhs, sig)
    lhs_type, rhs_type = typecheck(lhs, sig), typecheck(rhs, sig)
    if lhs_type != rhs_type:
        raise TypeMismatch(("rhs",), lhs_type, rhs_type)
    left, right = evaluate(lhs, model), evaluate(rhs, model)
    where = first_difference(left, right)
    if where is None:
        print("EQUAL")
        return EXIT_OK
    print(f"DIFFERENT at {where}: lhs={format_rational(left[where])} rhs={format_rational(right[where])}")
    return EXIT_FAIL


def cmd_axioms(config: CliConfig) -> int:
    model = load_model_from(config)
    catalog = default_catalog(config.catalog_path)
    verdicts = run_suite(model, config.suite, catalog, config.profile)
    print(render(format_verdicts(verdicts, config.output)), end="")
    passed, total = totals(verdicts)
    return EXIT_OK if passed == total else EXIT_FAIL


def cmd_report(config: CliConfig) -> int:
    model = load_model_from(config)
    catalog = default_catalog(config.catalog_path)
    verdicts = run_suite(model, Suite.all, catalog, config.profile)
    report = dimension_report(model, catalog)
    print(render(format_verdicts(verdicts, config.output) + format_dimension(report)), end="")

    passed, total = totals(verdicts)
    dimension_ok = not failed_checks(report)
    if not dimension_ok and config.profile is Profile.builtin:
        # a built-in predicted to fail the vpa axioms is not held to their consequences
        dimension_ok = "vpa" in expected_failing_suites(model.name)
    return EXIT_OK if passed == total and dimension_ok else EXIT_FAIL


def cmd_builtin(args: argparse.Namespace) -> int:
    if args.list:
        print(render(list_builtins()), end="")
    else:
        print(emit_model(resolve_builtin(args.emit)), end="")
    return EXIT_OK


def cmd_phi(config: CliConfig) -> int:
    print(emit_model(phi(load_model_from(config))), end="")
    return EXIT_OK


def cmd_psi(config: CliConfig) -> int:
    catalog = default_catalog(config.catalog_path)
    print(emit_model(psi(load_model_from(config), catalog, check=True)), end="")
    return EXIT_OK


def cmd_roundtrip(config: CliConfig) -> int:
    model = load_model_from(config)
    iso = round_trip(model) if model.has_roles(Role.wedge) else ca_round_trip(model)
    lines = ["ISO OK"] + [" ".join(format_rational(v) for v in row) for row in iso.matrix()]
    print(render(lines), end="")
    return EXIT_OK


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    settings = load_settings()
    uvicorn.run("prodcheck.api:app", host=args.host or settings.host, port=args.port or settings.port,
                log_config=None)
    return EXIT_OK


COMMANDS = {
    "eval": cmd_eval,
    "check": cmd_check,
    "axioms": cmd_axioms,
    "report": cmd_report,
    "paper": cmd_report,
    "phi": cmd_phi,
    "psi": cmd_psi,
    "roundtrip": cmd_roundtrip,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    if args.command == "builtin":
        handler = functools.partial(cmd_builtin, args)
    elif args.command == "serve":
        handler = functools.partial(cmd_serve, args)
    else:
        fields = {k: v for k, v in vars(args).items() if k in CliConfig.model_fields and v is not None}
        config = CliConfig(**fields)
        handler = functools.partial(COMMANDS[args.command], config)

    try:
        return handler()
    except CHECK_FAILURES as e:
        print(f"FAILED: {e}", file=sys.stderr)
        return EXIT_FAIL
    except ProdcheckError as e:
        logger.error(f"{args.command} failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
