"""Command-line interface.

Subcommands: chars, coord, coeffs, cot, bernoulli, series, verify.
JSON output wraps results in a stable envelope {command, inputs, results,
version}; rationals always serialize as strings like "p/q", never floats.
Text output is for humans and carries no stability guarantee.

The verify subcommand reads default ranges from a key=value config file,
found through --config or the CHARCOORDS_CONFIG environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .bernoulli import bernoulli_number, generalized_bernoulli
from .characters import enumerate_characters
from .combinatorics import coeff_table
from .coordinates import (
    CoordReport,
    coord_cotangent_closed,
    coord_definitional,
    coord_power_closed,
    coord_power_primitive,
)
from .cotangent import cotangent_number, icot_power
from .cyclotomic import CycElem
from .series import verify_power_decomposition, verify_stirling_identity
from .verify import SuiteConfig, config_with_overrides, run_suites

CONFIG_ENV_VAR = "CHARCOORDS_CONFIG"


def _emit(args, command: str, inputs: dict, results, text_lines) -> None:
    if getattr(args, "format", "text") == "json":
        envelope = {
            "command": command,
            "inputs": inputs,
            "results": results,
            "version": __version__,
        }
        print(json.dumps(envelope, sort_keys=True, indent=2))
    else:
        for line in text_lines:
            print(line)


def _float_str(z: complex) -> str:
    return "%.12g%+.12gi" % (z.real, z.imag)


def _cyc_text(value: CycElem) -> str:
    return "order %d, coeffs [%s], ~ %s" % (
        value.order,
        ", ".join(str(c) for c in value.coeffs),
        _float_str(value.complex_eval()),
    )


# -- chars -------------------------------------------------------------------

def _cmd_chars(args) -> int:
    chars = enumerate_characters(args.n)
    rows = [
        {
            "index": chi.index,
            "exponents": list(chi.exponents),
            "order": chi.order,
            "conductor": chi.conductor(),
            "parity": chi.parity(),
        }
        for chi in chars
    ]
    header = "index  exponents        order  conductor  parity"
    lines = [header] + [
        "%5d  %-15s  %5d  %9d  %+d"
        % (r["index"], r["exponents"], r["order"], r["conductor"], r["parity"])
        for r in rows
    ]
    _emit(args, "chars", {"n": args.n}, rows, lines)
    return 0


# -- coord -------------------------------------------------------------------

def _coord_for(chi, args) -> CoordReport:
    method = args.method
    if method == "cotnum":
        if args.j is None:
            raise ValueError("--method cotnum needs --j")
        value = coord_cotangent_closed(chi, args.j)
        return CoordReport(chi.modulus, chi.index, args.j, "cotnum_closed", value,
                           value.complex_eval())
    if args.r is None:
        raise ValueError("method %r needs the positional r" % method)
    if method == "def":
        value = coord_definitional(chi, icot_power(args.r, chi.modulus))
        name = "definitional"
    elif method == "closed":
        value = coord_power_closed(chi, args.r)
        name = "power_closed"
    elif method == "prim":
        value = coord_power_primitive(chi, args.r)
        name = "primitive_closed"
    else:
        raise ValueError("unknown method %r" % method)
    return CoordReport(chi.modulus, chi.index, args.r, name, value, value.complex_eval())


def _cmd_coord(args) -> int:
    chars = enumerate_characters(args.n)
    if args.all_chars:
        # with --all-chars the single positional after n is the power r
        if args.r is None and args.char_index is not None:
            args.r, args.char_index = args.char_index, None
        targets = chars
    else:
        if args.char_index is None:
            raise ValueError("give a character index or --all-chars")
        if not 0 <= args.char_index < len(chars):
            raise ValueError(
                "character index out of range (0..%d)" % (len(chars) - 1)
            )
        targets = [chars[args.char_index]]
    reports = [_coord_for(chi, args) for chi in targets]
    inputs = {
        "n": args.n,
        "char_index": args.char_index,
        "r": args.r,
        "j": args.j,
        "method": args.method,
        "all_chars": args.all_chars,
    }
    lines = [
        "chi index %d (mod %d), degree %d, method %s: %s"
        % (rep.char_index, rep.modulus, rep.degree, rep.method, _cyc_text(rep.value))
        for rep in reports
    ]
    _emit(args, "coord", inputs, [rep.to_json_dict() for rep in reports], lines)
    return 0


# -- coeffs ------------------------------------------------------------------

def _cmd_coeffs(args) -> int:
    if args.kind == "check":
        cfg = SuiteConfig(suites=("coeff_bridge",), bridge_r_max=args.r)
        result = run_suites(cfg)[0]
        print("coeff_bridge: %d cases, %d failures" % (result.cases, len(result.failures)))
        return 0 if result.passed else 1
    table = coeff_table(args.r, args.kind)
    rows = table.nonzero_items()
    for j, v in rows:
        print("%d,%d,%s" % (args.r, j, v))
    return 0


# -- cot ---------------------------------------------------------------------

def _cmd_cot(args) -> int:
    if args.j is not None:
        value = cotangent_number(args.j, args.n)
        label = {"kind": "cotangent_number", "j": args.j}
    else:
        value = icot_power(args.power, args.n)
        label = {"kind": "icot_power", "r": args.power}
    inputs = {"n": args.n, **label}
    _emit(
        args,
        "cot",
        inputs,
        {"value": value.to_json_dict()},
        ["%s" % _cyc_text(value)],
    )
    return 0


# -- bernoulli ----------------------------------------------------------------

def _cmd_bernoulli(args) -> int:
    if args.char is None:
        value = CycElem.from_rational(bernoulli_number(args.r))
        inputs = {"r": args.r}
        lines = ["B_%d = %s" % (args.r, value.coeffs[0])]
    else:
        n, index = args.char
        chars = enumerate_characters(n)
        if not 0 <= index < len(chars):
            raise ValueError("character index out of range (0..%d)" % (len(chars) - 1))
        chi = chars[index].primitive_part()
        value = generalized_bernoulli(args.r, chi)
        inputs = {"r": args.r, "char": [n, index], "conductor": chi.modulus}
        lines = [
            "B_{%d, chi} for chi = primitive part of character %d mod %d: %s"
            % (args.r, index, n, _cyc_text(value))
        ]
    _emit(args, "bernoulli", inputs, {"value": value.to_json_dict()}, lines)
    return 0


# -- series --------------------------------------------------------------------

def _cmd_series(args) -> int:
    if args.action != "verify":
        raise ValueError("unknown series action %r" % args.action)
    run_all = not (args.prop_decomposition or args.stirling)
    ok = True
    if args.stirling or run_all:
        for k in range(1, args.kmax + 1):
            good = verify_stirling_identity(k, 2 * k + 4)
            ok = ok and good
            print("stirling identity k=%d: %s" % (k, "ok" if good else "FAIL"))
    if args.prop_decomposition or run_all:
        for r in range(1, args.rmax + 1):
            good = verify_power_decomposition(r, 2 * r + 4)
            ok = ok and good
            print("power decomposition r=%d: %s" % (r, "ok" if good else "FAIL"))
    return 0 if ok else 1


# -- verify ---------------------------------------------------------------------

def _load_config_file(path: str) -> dict:
    out = {}
    with open(path, "r", encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError("bad config line (expected key = value): %r" % raw)
            key, value = line.split("=", 1)
            out[key.strip()] = value.strip()
    return out


def _cmd_verify(args) -> int:
    overrides = {}
    path = args.config or os.environ.get(CONFIG_ENV_VAR)
    if path:
        overrides.update(_load_config_file(path))
    if args.n_max is not None:
        overrides["n_max"] = args.n_max
    if args.r_max is not None:
        overrides["r_max"] = args.r_max
    if args.j_max is not None:
        overrides["j_max"] = args.j_max
    if args.tol is not None:
        overrides["float_tolerance"] = args.tol
    for item in args.set or []:
        if "=" not in item:
            raise ValueError("--set expects key=value, got %r" % item)
        key, value = item.split("=", 1)
        overrides[key.strip()] = value.strip()
    if args.suites:
        overrides["suites"] = tuple(args.suites)
    cfg = config_with_overrides(**overrides)
    results = run_suites(cfg)
    total_failures = sum(len(r.failures) for r in results)
    if args.format == "json":
        report = {
            "config": {f: getattr(cfg, f) for f in (
                "n_max", "r_max", "j_max", "float_tolerance", "suites",
            )},
            "suites": [r.to_json_dict() for r in results],
            "passed": total_failures == 0,
            "version": __version__,
        }
        print(json.dumps(report, sort_keys=True, indent=2, default=list))
    else:
        for r in results:
            status = "ok" if r.passed else "FAIL (%d)" % len(r.failures)
            print(
                "%-22s %6d cases  %8.2fs  %s" % (r.name, r.cases, r.seconds, status)
            )
            for failure in r.failures[:20]:
                print("  mismatch %s: %s != %s" % (failure.inputs, failure.lhs, failure.rhs))
        print("total failures: %d" % total_failures)
    return 0 if total_failures == 0 else 1


# -- parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="charcoords",
        description="Exact character coordinates of cotangent powers in cyclotomic fields",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chars", help="list the Dirichlet characters mod n")
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_chars)

    p = sub.add_parser("coord", help="character coordinate of a cotangent power")
    p.add_argument("n", type=int)
    p.add_argument("char_index", type=int, nargs="?")
    p.add_argument("r", type=int, nargs="?")
    p.add_argument("--j", type=int, help="cotangent-number index (with --method cotnum)")
    p.add_argument(
        "--method",
        choices=("def", "closed", "prim", "cotnum"),
        default="def",
        help="def: definitional sum; closed: general closed form; "
        "prim: primitive-character closed form; cotnum: cotangent-number closed form",
    )
    p.add_argument("--all-chars", action="store_true")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_coord)

    p = sub.add_parser("coeffs", help="expansion coefficient tables (CSV)")
    p.add_argument("kind", choices=("c", "d", "check"))
    p.add_argument("r", type=int)
    p.set_defaults(func=_cmd_coeffs)

    p = sub.add_parser("cot", help="exact cotangent powers / cotangent numbers")
    p.add_argument("n", type=int)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--j", type=int, help="cotangent number index")
    group.add_argument("--power", type=int, help="power of i*cot(pi/n)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_cot)

    p = sub.add_parser("bernoulli", help="Bernoulli and generalized Bernoulli numbers")
    p.add_argument("r", type=int)
    p.add_argument(
        "--char",
        nargs=2,
        type=int,
        metavar=("N", "INDEX"),
        help="twist by the primitive part of character INDEX mod N",
    )
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_bernoulli)

    p = sub.add_parser("series", help="series-level identity checks")
    p.add_argument("action", choices=("verify",))
    p.add_argument("--decomposition", dest="prop_decomposition", action="store_true",
                   help="check the cotangent power decomposition")
    p.add_argument("--stirling", action="store_true",
                   help="check the Stirling derivative identity")
    p.add_argument("--rmax", type=int, default=12)
    p.add_argument("--kmax", type=int, default=10)
    p.set_defaults(func=_cmd_series)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("suites", nargs="*", help="suite names (default: all)")
    p.add_argument("--n-max", type=int)
    p.add_argument("--r-max", type=int)
    p.add_argument("--j-max", type=int)
    p.add_argument("--tol", type=float)
    p.add_argument("--config", help="key=value config file (or $%s)" % CONFIG_ENV_VAR)
    p.add_argument("--set", action="append", metavar="KEY=VALUE",
                   help="override any SuiteConfig field")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
