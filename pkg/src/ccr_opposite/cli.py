"""Command line front end; every command emits a deterministic JSON report.

Exit codes: 0 all checks pass, 1 some check failed, 2 inconclusive,
3 bad input.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__, verify
from .cones import ConeError, cone_from_json
from .hilbert import RepContext, SupportError
from .modules import (
    ModuleError,
    cone_module,
    module_from_json,
    module_to_json,
    opposite,
)
from .report import Check, dumps, exit_code

WINDOW_ENV = "CCR_OPPOSITE_WINDOW"


class InputError(Exception):
    pass


def load_config(path: str) -> dict:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise InputError(f"{path}: top level must be an object")
    return data


def parse_config(data: dict):
    """Return ``(cone, module)``; a bare cone config is accepted as well."""
    cone_data = data.get("cone", data if "generators" in data else None)
    if cone_data is None:
        raise InputError('config needs a "cone" object')
    cone = cone_from_json(cone_data)
    module = module_from_json(cone, data["module"]) if "module" in data else cone_module(cone)
    return cone, module


def _window(args) -> int:
    if args.window is not None:
        return args.window
    env = os.environ.get(WINDOW_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise InputError(f"{WINDOW_ENV}={env!r} is not an integer") from None
    return 10


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--window", type=int, default=None, help="window radius R (default 10)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--cases", type=int, default=100)
    common.add_argument("--tol", type=float, default=1e-9)
    common.add_argument("--out", default=None, help="write the report here instead of stdout")

    parser = argparse.ArgumentParser(prog="ccr-opposite", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    groups = parser.add_subparsers(dest="group", required=True)

    cone = groups.add_parser("cone").add_subparsers(dest="command", required=True)
    cone.add_parser("check", parents=[common]).add_argument("config")

    module = groups.add_parser("module").add_subparsers(dest="command", required=True)
    module.add_parser("opposite", parents=[common]).add_argument("config")
    teq = module.add_parser("translate-eq", parents=[common])
    teq.add_argument("config")
    teq.add_argument("other")

    certify = groups.add_parser("certify").add_subparsers(dest="command", required=True)
    certify.add_parser("asymmetry", parents=[common]).add_argument("config")

    ver = groups.add_parser("verify").add_subparsers(dest="command", required=True)
    for name in ("opposite-rep", "dilation", "purity", "ccr"):
        ver.add_parser(name, parents=[common]).add_argument("config")

    rep = groups.add_parser("report").add_subparsers(dest="command", required=True)
    rep.add_parser("all", parents=[common]).add_argument("config")
    return parser


def _ctx(module) -> RepContext:
    return RepContext(module)


def run(args) -> tuple[dict, int]:
    window = _window(args)
    if window < 1:
        raise InputError("--window must be >= 1")
    cone, module = parse_config(load_config(args.config))
    inputs = {"cone": cone.to_json(), "module": module_to_json(module), "window": window}
    extra: dict = {}
    command = f"{args.group} {args.command}"

    if command == "cone check":
        checks = verify.cone_suite(cone, args.cases, args.seed, window)
    elif command == "module opposite":
        checks = verify.module_opposite_suite(module, window)
        extra["opposite"] = module_to_json(opposite(module))
    elif command == "module translate-eq":
        cone2, module2 = parse_config(load_config(args.other))
        if cone2 != cone:
            raise InputError("the two configs use different cones")
        inputs["other"] = module_to_json(module2)
        check = verify.decision_check(module, module2, window)
        checks = [check]
        extra["decision"] = check.detail
    elif command == "certify asymmetry":
        if cone.dim == 1:
            raise InputError(
                "certify asymmetry needs d >= 2: in one dimension a half-line "
                "and its opposite are translates"
            )
        checks, cert = verify.certify_suite(cone)
        extra["certificate"] = cert
        extra["verdict"] = cert["verdict"]
    elif command == "verify opposite-rep":
        checks = verify.opposite_rep_suite(_ctx(module), args.cases, args.seed, args.tol, min(window, 6))
    elif command == "verify dilation":
        checks = verify.dilation_suite(_ctx(module), args.cases, args.seed, window)
    elif command == "verify purity":
        checks = verify.purity_suite(_ctx(module), args.cases, args.seed, window)
    elif command == "verify ccr":
        checks = verify.ccr_suite(_ctx(module), args.cases, args.seed, args.tol)
    elif command == "report all":
        checks, extra = report_all(cone, module, args, window)
    else:  # pragma: no cover - argparse restricts the choices
        raise InputError(f"unknown command {command}")

    report = {
        "command": command,
        "inputs": inputs,
        "results": [c.to_json() for c in checks],
        "seed": args.seed,
        "version": __version__,
        **extra,
    }
    return report, exit_code(checks)


def report_all(cone, module, args, window):
    """Every suite, in dependency order, aggregated into one report."""
    sections: dict[str, list[Check]] = {}
    sections["cone check"] = verify.cone_suite(cone, args.cases, args.seed, window)
    sections["module opposite"] = verify.module_opposite_suite(module, window)
    extra = {}
    if cone.dim >= 2:
        sections["certify asymmetry"], cert = verify.certify_suite(cone)
        extra["verdict"] = cert["verdict"]
        sections["translate decisions"] = verify.translate_suite(cone, 20, args.seed, window)
    else:
        sections["module translate-eq"] = [verify.decision_check(module, opposite(module), window)]
    ctx = _ctx(module)
    sections["verify dilation"] = verify.dilation_suite(ctx, args.cases, args.seed, window)
    sections["verify purity"] = verify.purity_suite(ctx, min(args.cases, 50), args.seed, window)
    sections["verify opposite-rep"] = verify.opposite_rep_suite(ctx, args.cases, args.seed, args.tol, min(window, 6))
    sections["verify ccr"] = verify.ccr_suite(ctx, min(args.cases, 50), args.seed, args.tol)
    checks = []
    for section, items in sections.items():
        for c in items:
            c.name = f"{section}: {c.name}"
            checks.append(c)
    return checks, extra


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report, code = run(args)
    except (InputError, ConeError, ModuleError, SupportError) as exc:
        report = {"command": f"{args.group} {args.command}", "error": str(exc), "version": __version__}
        code = 3
    text = dumps(report)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
