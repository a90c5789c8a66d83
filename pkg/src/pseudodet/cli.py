"""Command-line interface.

Subcommands:
  check <suite|all>   run verification suites and report pass/fail
  eval fn|det|charpoly --matrix FILE   one-off evaluations on a matrix

Exit codes: 0 when everything requested passed, 1 when a suite failed,
2 on usage or configuration errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from .elements import Matrix
from .errors import ConfigError, PseudodetError
from .pseudochar import char_poly, determinant, matrix_trace, recursive_form
from .rings import ring_from_spec
from .verify import SUITE_NAMES, SuiteConfig, default_all_configs, run_suite

_CONFIG_KEYS = {"ring": str, "dim": int, "size": int, "trials": int,
                "seed": int, "bound": int, "budget": int}


def load_config_file(path: str) -> dict:
    """Key-value config file: one ``key = value`` per line, ``#`` comments.

    Recognized keys mirror the CLI flags: ring, dim, size, trials, seed,
    bound, budget.  Flags given on the command line take precedence.
    """
    values = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{lineno}: expected 'key = value'")
            key, _, value = line.partition("=")
            key, value = key.strip(), value.strip()
            if key not in _CONFIG_KEYS:
                raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
            try:
                values[key] = _CONFIG_KEYS[key](value)
            except ValueError:
                raise ConfigError(
                    f"{path}:{lineno}: bad value {value!r} for {key}") from None
    return values


def read_matrix_file(path: str, ring):
    """Matrix file: first line is the size d, then d rows of d entries,
    each an integer or a fraction p/q, whitespace separated."""
    with open(path, "r", encoding="utf-8") as fh:
        tokens_by_line = [ln.split() for ln in fh.read().splitlines()
                          if ln.strip()]
    if not tokens_by_line or len(tokens_by_line[0]) != 1:
        raise ConfigError(f"{path}: first line must be the matrix size")
    try:
        d = int(tokens_by_line[0][0])
    except ValueError:
        raise ConfigError(f"{path}: bad size {tokens_by_line[0][0]!r}") from None
    rows = tokens_by_line[1:]
    if len(rows) != d or any(len(r) != d for r in rows):
        raise ConfigError(f"{path}: expected {d} rows of {d} entries")
    try:
        entries = [[Fraction(tok) for tok in row] for row in rows]
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"{path}: bad entry ({exc})") from None
    return Matrix(ring, entries)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pseudodet",
        description="Exact verification of multiset-ring and pseudocharacter "
                    "identities on concrete algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="run a verification suite")
    check.add_argument("suite", choices=SUITE_NAMES + ("all",))
    _add_common_flags(check)

    ev = sub.add_parser("eval", help="evaluate forms on a matrix from a file")
    ev.add_argument("what", choices=("fn", "det", "charpoly"))
    ev.add_argument("--matrix", required=True, help="matrix file path")
    ev.add_argument("--n", type=int, default=None,
                    help="argument count for fn (default: the dimension)")
    _add_common_flags(ev)
    return parser


def _add_common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--dim", type=int, default=None,
                   help="declared dimension (default 2; for eval, the size)")
    p.add_argument("--ring", default=None,
                   help="rational | mod:<m> | words (default rational)")
    p.add_argument("--size", type=int, default=None,
                   help="matrix size (default: the dimension)")
    p.add_argument("--trials", type=int, default=None,
                   help="number of randomized trials (default 50)")
    p.add_argument("--seed", type=int, default=None,
                   help="base PRNG seed (default 0)")
    p.add_argument("--bound", type=int, default=None,
                   help="matrix entries drawn from [-bound, bound] (default 5)")
    p.add_argument("--budget", type=int, default=None,
                   help="formal-product term budget (default 10^7)")
    p.add_argument("--config", default=None, help="key-value config file")
    p.add_argument("--json", dest="json_path", default=None,
                   help="write a JSON report to this path")
    p.add_argument("--quiet", action="store_true",
                   help="only print the summary lines")


def _merged_options(args) -> dict:
    options = {"ring": None, "dim": None, "size": None, "trials": 50,
               "seed": 0, "bound": 5, "budget": 10**7}
    if args.config:
        options.update(load_config_file(args.config))
    for key in ("ring", "dim", "size", "trials", "seed", "bound", "budget"):
        value = getattr(args, key)
        if value is not None:
            options[key] = value
    return options


def _check_configs(args, options) -> list:
    explicit_cell = options["ring"] is not None or options["dim"] is not None
    ring = options["ring"] or "rational"
    dim = options["dim"] or 2
    size = options["size"] or dim
    common = dict(trials=options["trials"], seed=options["seed"],
                  bound=options["bound"], budget=options["budget"])
    if args.suite == "all":
        if not explicit_cell:
            return default_all_configs(**common)
        if ring == "words":
            return [SuiteConfig("assoc", ring="words", **common)]
        return default_all_configs(dims=(dim,), rings=(ring,),
                                   include_words=False, **common)
    return [SuiteConfig(args.suite, ring=ring, size=size, dim=dim, **common)]


def _run_check(args) -> int:
    options = _merged_options(args)
    configs = _check_configs(args, options)
    reports = []
    start = time.perf_counter()
    for cfg in configs:
        report = run_suite(cfg)
        reports.append(report)
        for line in report.text_lines(quiet=args.quiet):
            print(line)
    total = time.perf_counter() - start
    all_pass = all(r.passed for r in reports)
    print(f"{'PASS' if all_pass else 'FAIL'}: {len(reports)} suite(s) "
          f"in {total:.2f}s")

    if args.json_path:
        document = {
            "command": "check",
            "selection": args.suite,
            "seed": options["seed"],
            "pass": all_pass,
            "suites": [r.to_dict() for r in reports],
            "total_duration_seconds": total,
        }
        with open(args.json_path, "w", encoding="utf-8") as fh:
            json.dump(document, fh, indent=2, sort_keys=True)
            fh.write("\n")
    return 0 if all_pass else 1


def _run_eval(args) -> int:
    options = _merged_options(args)
    ring_spec = options["ring"] or "rational"
    if ring_spec == "words":
        raise ConfigError("eval needs a matrix ring (rational or mod:<m>)")
    ring = ring_from_spec(ring_spec)
    x = read_matrix_file(args.matrix, ring)
    dim = options["dim"] or x.n
    f = matrix_trace(ring, x.n, dim, pseudocharacter=False)
    if args.what == "fn":
        n = args.n if args.n is not None else dim
        if n < 1:
            raise ConfigError("--n must be >= 1")
        rendered = ring.render(recursive_form(f, (x,) * n))
    elif args.what == "det":
        rendered = ring.render(determinant(f, x))
    else:
        rendered = char_poly(f, x).render()
    print(rendered)
    if args.json_path:
        document = {"command": "eval", "what": args.what,
                    "ring": ring_spec, "dim": dim,
                    "matrix": x.render(), "result": rendered}
        with open(args.json_path, "w", encoding="utf-8") as fh:
            json.dump(document, fh, indent=2, sort_keys=True)
            fh.write("\n")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "check":
            return _run_check(args)
        return _run_eval(args)
    except (ConfigError, PseudodetError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
