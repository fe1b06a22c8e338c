"""Command-line interface.

Exit codes: 0 success, 1 validation failure, 2 infeasible design,
3 I/O or parse error (including unknown flags). Results go to stdout,
diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import paths, render
from .analyzer import analyze, diff_profiles
from .corpus import characteristics_taxonomy, competencies_taxonomy, load_corpus
from .descriptor import (
    derive_characteristics,
    parse_descriptor,
    validate_descriptor,
)
from .designer import DesignQuery, design_constraints
from .errors import (
    CorpusLoadError,
    CtprofError,
    EmptyCorpus,
    EmptyDevelopSet,
    InvalidDesignQuery,
    ParseError,
    PortInUse,
    SchemaError,
    UnknownCompetency,
)
from .ruleset import default_ruleset, load_ruleset

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_INFEASIBLE = 2
EXIT_IO = 3

RULESET_ENV = "CTPROF_RULESET"
DEFAULT_PORT = 8787


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse variant that reports usage problems as exit code 3."""

    def error(self, message):
        raise _UsageError(message)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _build_parser() -> _Parser:
    parser = _Parser(prog="ctprof", description="Profile and design computational thinking activities.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_format(p, default="md"):
        p.add_argument("--format", choices=("json", "md"), default=default)

    def add_ruleset(p):
        p.add_argument("--ruleset", help="path to a .rules.json file (overrides the bundled default)")

    p = sub.add_parser("validate", help="check a descriptor file")
    p.add_argument("path")

    p = sub.add_parser("analyze", help="competency activation report for a descriptor")
    p.add_argument("path")
    add_ruleset(p)
    add_format(p)

    p = sub.add_parser("derive", help="resolve the characteristic profile of a descriptor")
    p.add_argument("path")
    add_format(p, default="json")

    p = sub.add_parser("diff", help="compare two descriptors' profiles and activable sets")
    p.add_argument("path_a")
    p.add_argument("path_b")
    add_ruleset(p)
    add_format(p)

    p = sub.add_parser("design", help="characteristics needed to target chosen competencies")
    p.add_argument("--develop", required=True, help="comma-separated leaf competency ids")
    p.add_argument("--avoid", default="", help="comma-separated leaf competency ids")
    p.add_argument("--lock", action="append", default=[], metavar="DIM=VALUE",
                   help="freeze a profile dimension (repeatable)")
    p.add_argument("--max-solutions", type=int, default=20)
    add_ruleset(p)
    add_format(p)

    p = sub.add_parser("corpus", help="taxonomy tables for a descriptor directory")
    p.add_argument("directory")
    p.add_argument("--collapse-groups", action="store_true")
    add_ruleset(p)
    add_format(p)

    p = sub.add_parser("serve", help="run the local HTTP service")
    p.add_argument("--port", type=int, default=DEFAULT_PORT)
    p.add_argument("--fixtures", help="descriptor directory exposed at /api/fixtures")
    add_ruleset(p)

    return parser


def _resolve_ruleset(flag_value):
    path = flag_value or os.environ.get(RULESET_ENV)
    if not path:
        return default_ruleset()
    return load_ruleset(paths.resolve_input_path(path).read_text("utf-8"))


def _read_descriptor(arg: str):
    path = paths.resolve_input_path(arg)
    return parse_descriptor(path.read_text("utf-8"))


def _print_issues(issues, out):
    for issue in issues:
        print(f"{issue.path}: {issue.code}: {issue.message}", file=out)


@dataclass
class CliResult:
    exit_code: int
    stdout: str
    stderr: str


def _cmd_validate(args, out, err) -> int:
    descriptor = _read_descriptor(args.path)
    issues = validate_descriptor(descriptor)
    if issues:
        _print_issues(issues, out)
        return EXIT_INVALID
    print("ok", file=out)
    return EXIT_OK


def _valid_profile(args, err):
    descriptor = _read_descriptor(args.path if hasattr(args, "path") else args)
    issues = validate_descriptor(descriptor)
    if issues:
        _print_issues(issues, err)
        return None, descriptor
    return derive_characteristics(descriptor), descriptor


def _cmd_analyze(args, out, err) -> int:
    profile, _ = _valid_profile(args, err)
    if profile is None:
        return EXIT_INVALID
    report = analyze(profile, _resolve_ruleset(args.ruleset))
    if args.format == "json":
        out.write(dumps(report.to_json_dict()))
    else:
        out.write(render.render_report_markdown(report))
    return EXIT_OK


def _cmd_derive(args, out, err) -> int:
    profile, _ = _valid_profile(args, err)
    if profile is None:
        return EXIT_INVALID
    if args.format == "json":
        out.write(dumps(profile.to_json_dict()))
    else:
        out.write(render.render_profile_markdown(profile))
    return EXIT_OK


def _cmd_diff(args, out, err) -> int:
    profiles = []
    for arg in (args.path_a, args.path_b):
        descriptor = _read_descriptor(arg)
        issues = validate_descriptor(descriptor)
        if issues:
            _print_issues(issues, err)
            return EXIT_INVALID
        profiles.append(derive_characteristics(descriptor))
    diff = diff_profiles(profiles[0], profiles[1], _resolve_ruleset(args.ruleset))
    if args.format == "json":
        out.write(dumps(diff.to_json_dict()))
    else:
        out.write(render.render_diff_markdown(diff))
    return EXIT_OK


def _parse_lock(pairs) -> dict:
    locked = {}
    for pair in pairs:
        dim, sep, value = pair.partition("=")
        if not sep:
            raise InvalidDesignQuery(f"--lock expects DIM=VALUE, got {pair!r}")
        if dim == "functionalities":
            locked[dim] = frozenset(v for v in value.split(",") if v)
        elif dim in ("constrained", "state_unknown"):
            if value not in ("true", "false"):
                raise InvalidDesignQuery(f"lock {dim} expects true or false, got {value!r}")
            locked[dim] = value == "true"
        else:
            locked[dim] = value
    return locked


def _cmd_design(args, out, err) -> int:
    def split_ids(text):
        return frozenset(v for v in text.split(",") if v)

    query = DesignQuery(
        develop=split_ids(args.develop),
        avoid=split_ids(args.avoid),
        locked=_parse_lock(args.lock),
        max_solutions=args.max_solutions,
    )
    solution = design_constraints(query, _resolve_ruleset(args.ruleset))
    if args.format == "json":
        out.write(dumps(solution.to_json_dict()))
    else:
        out.write(render.render_solution_markdown(solution))
    if not solution.feasible:
        for conflict in solution.conflicts:
            print(f"conflict: {conflict.explanation}", file=err)
        if not solution.conflicts:
            print("infeasible: no profile satisfies the query", file=err)
        return EXIT_INFEASIBLE
    return EXIT_OK


def _cmd_corpus(args, out, err) -> int:
    corpus = load_corpus(paths.resolve_input_path(args.directory))
    rules = _resolve_ruleset(args.ruleset)
    chars = characteristics_taxonomy(corpus)
    comps = competencies_taxonomy(corpus, rules, collapse_groups=args.collapse_groups)
    if args.format == "json":
        out.write(dumps({
            "characteristics": chars.to_json_dict(),
            "competencies": comps.to_json_dict(),
        }))
    else:
        out.write(render.render_taxonomy_markdown(chars))
        out.write("\n")
        out.write(render.render_taxonomy_markdown(comps))
    return EXIT_OK


def _cmd_serve(args, out, err) -> int:
    from .service import serve

    fixtures = paths.resolve_input_path(args.fixtures) if args.fixtures else paths.fixtures_dir()
    print(f"serving on http://127.0.0.1:{args.port}", file=err)
    serve(port=args.port, ruleset=_resolve_ruleset(args.ruleset), fixtures_directory=fixtures)
    return EXIT_OK


_COMMANDS = {
    "validate": _cmd_validate,
    "analyze": _cmd_analyze,
    "derive": _cmd_derive,
    "diff": _cmd_diff,
    "design": _cmd_design,
    "corpus": _cmd_corpus,
    "serve": _cmd_serve,
}


def cli_main(argv, out, err) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return EXIT_IO
    except SystemExit as exc:  # --help lands here
        return EXIT_OK if exc.code in (0, None) else EXIT_IO
    try:
        return _COMMANDS[args.subcommand](args, out, err)
    except (FileNotFoundError, IsADirectoryError, NotADirectoryError, PermissionError) as exc:
        print(f"io error: {exc}", file=err)
        return EXIT_IO
    except ParseError as exc:
        print(f"parse error: {exc}", file=err)
        return EXIT_IO
    except SchemaError as exc:
        _print_issues(exc.issues, err)
        return EXIT_IO
    except (EmptyCorpus,) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_IO
    except CorpusLoadError as exc:
        for path, issues in exc.failures.items():
            for issue in issues:
                print(f"{path}: {issue.path}: {issue.code}: {issue.message}", file=err)
        return EXIT_INVALID
    except (EmptyDevelopSet, InvalidDesignQuery, UnknownCompetency) as exc:
        print(f"invalid query: {exc}", file=err)
        return EXIT_INVALID
    except PortInUse as exc:
        print(f"error: {exc}", file=err)
        return EXIT_IO
    except CtprofError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INVALID


def run_cli(argv) -> CliResult:
    """Run the CLI capturing its streams (the in-process test surface)."""
    import io

    out, err = io.StringIO(), io.StringIO()
    code = cli_main(list(argv), out, err)
    return CliResult(exit_code=code, stdout=out.getvalue(), stderr=err.getvalue())


def main() -> None:
    sys.exit(cli_main(sys.argv[1:], sys.stdout, sys.stderr))


if __name__ == "__main__":
    main()
