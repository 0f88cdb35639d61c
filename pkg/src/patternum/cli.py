"""Command line interface.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 resource cap exceeded.
With ``--format json`` every command prints one object
``{"command", "input", "result" | "error"}``; big counts are decimal strings.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from dataclasses import asdict

from . import __version__
from .ample import ample_count, is_ample
from .bounds import constructive_lower, paper_bounds
from .construction import construct, grid_for
from .enumeration import (
    DEFAULT_DISTRIBUTION_CAP,
    DEFAULT_H_CAP,
    DEFAULT_MEMORY_CAP,
    default_workers,
    distinct_patterns,
    distribution,
    h_exact,
)
from .errors import PatternumError
from .perm import Permutation, pattern_of, positions_of
from .reconstruct import reconstruct

MIN_MEMORY_CAP = 64 * 2**20
CSV_COMMANDS = {"distribution", "count-patterns"}
_UNITS = {"": 1, "B": 1, "KIB": 2**10, "MIB": 2**20, "GIB": 2**30, "TIB": 2**40,
          "KB": 10**3, "MB": 10**6, "GB": 10**9, "TB": 10**12}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _byte_size(text: str) -> int:
    m = re.fullmatch(r"\s*(\d+)\s*([A-Za-z]*)\s*", text)
    if not m or m.group(2).upper() not in _UNITS:
        raise argparse.ArgumentTypeError(f"invalid size {text!r}")
    return int(m.group(1)) * _UNITS[m.group(2).upper()]


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _number(text: str):
    try:
        return int(text)
    except ValueError:
        try:
            return float(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def _index_set(text: str, n: int) -> list[int]:
    text = text.strip()
    if text.lower().startswith("0x"):
        return positions_of(int(text, 16), n)
    if not text:
        return []
    try:
        return positions_of([int(t) for t in text.split(",")], n)
    except ValueError:
        raise UsageError(f"cannot parse index set {text!r}") from None


def _perm(text: str) -> Permutation:
    return Permutation.parse(text)


def _grid_json(g):
    if g is None:
        return None
    return {"n": g.n, "rows": g.rows, "cols": g.cols, "extra_col": g.extra_col, "extra_row": g.extra_row}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    common.add_argument("--workers", type=_positive, default=None,
                        help="worker threads (default: PATTERNUM_THREADS or available cores)")
    common.add_argument("--memory-cap", type=_byte_size, default=DEFAULT_MEMORY_CAP,
                        help="census memory budget, e.g. 8GiB (minimum 64MiB)")
    common.add_argument("--h-cap", type=_positive, default=DEFAULT_H_CAP)
    common.add_argument("--dist-cap", type=_positive, default=DEFAULT_DISTRIBUTION_CAP)

    parser = _Parser(prog="patternum", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("pattern", parents=[common], help="pattern of a sequence")
    p.add_argument("seq", nargs="+", type=_number)
    p = sub.add_parser("construct", parents=[common], help="the permutation pi_n")
    p.add_argument("n", type=_positive)
    p = sub.add_parser("count-patterns", parents=[common], help="exact census of P(sigma)")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--perm", type=str)
    src.add_argument("--construct", type=_positive, metavar="N")
    p = sub.add_parser("ample-count", parents=[common], help="number of ample subsets of pi_n")
    p.add_argument("n", type=int)
    p = sub.add_parser("is-ample", parents=[common], help="test a subset of pi_n for ampleness")
    p.add_argument("n", type=int)
    p.add_argument("--set", dest="positions", required=True,
                   help="comma-separated 1-based positions, or a 0x bitmask")
    p = sub.add_parser("reconstruct", parents=[common], help="recover an ample subset from its pattern")
    p.add_argument("n", type=int)
    p.add_argument("--pattern", required=True, type=str)
    p = sub.add_parser("bounds", parents=[common], help="all bounds on h(n)")
    p.add_argument("n", type=_positive)
    p = sub.add_parser("h-exact", parents=[common], help="exact h(n) by exhaustive search")
    p.add_argument("n", type=_positive)
    p = sub.add_parser("distribution", parents=[common], help="histogram of |P(pi)| over all pi")
    p.add_argument("n", type=_positive)
    p = sub.add_parser("verify", parents=[common], help="run the self-verification suites")
    p.add_argument("--level", choices=("quick", "full"), default="quick")
    return parser


def _execute(args) -> tuple[dict, dict, str, list[list] | None]:
    """Returns (input, result, plain text, csv rows)."""
    cmd = args.command
    if cmd == "pattern":
        tau = pattern_of(args.seq)
        return {"seq": args.seq}, {"pattern": str(tau)}, str(tau), None

    if cmd == "construct":
        pi, g = construct(args.n)
        return {"n": args.n}, {"permutation": str(pi), "grid": _grid_json(g)}, str(pi), None

    if cmd == "count-patterns":
        if args.perm is not None:
            sigma, inp = _perm(args.perm), {"perm": args.perm}
        else:
            sigma, inp = construct(args.construct)[0], {"construct": args.construct}
        census = distinct_patterns(sigma, workers=args.workers, memory_cap=args.memory_cap)
        rows = [[k, c] for k, c in enumerate(census.by_length, 1)]
        text = f"total {census.total}\n" + "\n".join(f"length {k}: {c}" for k, c in rows)
        result = {"total": census.total, "by_length": list(census.by_length)}
        return inp, result, text, [["length", "count"]] + rows

    if cmd in ("ample-count", "is-ample", "reconstruct"):
        g = grid_for(args.n)
        inp = {"n": args.n}
        if cmd == "ample-count":
            count, lower = ample_count(g), constructive_lower(args.n)
            result = {"grid": _grid_json(g), "ample_count": str(count), "constructive_lower": str(lower)}
            return inp, result, f"{count}\nwith extras: {lower}", None
        if cmd == "is-ample":
            X = _index_set(args.positions, g.n)
            inp["set"] = X
            ok = is_ample(g, X)
            return inp, {"ample": ok}, str(ok).lower(), None
        inp["pattern"] = args.pattern
        X = sorted(reconstruct(g, _perm(args.pattern)))
        return inp, {"positions": X}, ",".join(map(str, X)), None

    if cmd == "bounds":
        table = paper_bounds(args.n)
        result = asdict(table)
        result["grid"] = _grid_json(table.grid)
        for key in ("eq1_upper", "constructive_lower", "coleman_exact", "fibonacci"):
            if result[key] is not None:
                result[key] = str(result[key])
        for key in ("thm1", "intermediate", "final"):
            result[f"{key}_trivial"] = result[f"{key}_log2"] is None
        text = "\n".join(f"{k}: {'trivial' if v is None and k.endswith('_log2') else v}"
                         for k, v in result.items() if not k.endswith("_trivial"))
        return {"n": args.n}, result, text, None

    if cmd == "h-exact":
        h, witness = h_exact(args.n, cap=args.h_cap, workers=args.workers)
        return {"n": args.n}, {"h": h, "witness": str(witness)}, f"{h}\nwitness: {witness}", None

    if cmd == "distribution":
        hist = distribution(args.n, cap=args.dist_cap, workers=args.workers)
        rows = [[k, v] for k, v in hist.items()]
        result = {"histogram": [{"patterns": k, "count": v} for k, v in rows]}
        text = "\n".join(f"{k}: {v}" for k, v in rows)
        return {"n": args.n}, result, text, [["patterns", "count"]] + rows

    if cmd == "verify":
        from .verify import run_checks

        results = run_checks(args.level)
        passed = all(r.passed for r in results)
        result = {"level": args.level, "passed": passed, "checks": [asdict(r) for r in results]}
        text = "\n".join(f"{'PASS' if r.passed else 'FAIL'} {r.name} ({r.detail}; {r.seconds:.2f}s)"
                         for r in results)
        if not passed:
            raise _VerifyFailed(result, text)
        return {"level": args.level}, result, text, None

    raise UsageError("a subcommand is required")


class _VerifyFailed(Exception):
    def __init__(self, result, text):
        self.result, self.text = result, text


def _emit(stream, fmt: str, payload: dict, text: str, rows) -> None:
    if fmt == "json":
        stream.write(json.dumps(payload) + "\n")
    elif fmt == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(rows)
        stream.write(buf.getvalue())
    else:
        stream.write(text + "\n")


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    fmt = _sniff_format(argv)
    command = next((a for a in argv if not a.startswith("-")), None)
    args = None

    try:
        args = build_parser().parse_args(argv)
        fmt = getattr(args, "format", fmt)
        command = args.command
        if command is None:
            raise UsageError("a subcommand is required")
        if fmt == "csv" and command not in CSV_COMMANDS:
            raise UsageError(f"csv output is only available for {sorted(CSV_COMMANDS)}")
        if args.memory_cap < MIN_MEMORY_CAP:
            raise UsageError("--memory-cap must be at least 64MiB")
        if args.workers is None:
            args.workers = default_workers()
        inp, result, text, rows = _execute(args)
    except UsageError as exc:
        _report(stdout, stderr, fmt, command, {}, "UsageError", "UsageError", str(exc))
        return 1
    except PatternumError as exc:
        _report(stdout, stderr, fmt, command, _safe_input(args), type(exc).__name__, exc.reason, str(exc))
        return exc.exit_code
    except _VerifyFailed as exc:
        _emit(stdout, fmt if fmt != "csv" else "plain",
              {"command": command, "input": {"level": exc.result["level"]}, "result": exc.result},
              exc.text, None)
        return 2
    _emit(stdout, fmt, {"command": command, "input": inp, "result": result}, text, rows)
    return 0


def _sniff_format(argv: list[str]) -> str:
    # used only to format errors raised before parsing succeeds
    for i, a in enumerate(argv):
        if a == "--format=json" or (a == "--format" and argv[i + 1 : i + 2] == ["json"]):
            return "json"
    return "plain"


def _safe_input(args) -> dict:
    if args is None:
        return {}
    skip = {"command", "format", "workers", "memory_cap", "h_cap", "dist_cap"}
    return {k: v for k, v in vars(args).items() if k not in skip and v is not None}


def _report(stdout, stderr, fmt, command, inp, etype, reason, message) -> None:
    if fmt == "json":
        error = {"type": etype, "reason": reason, "message": message}
        stdout.write(json.dumps({"command": command, "input": inp, "error": error}) + "\n")
    else:
        stderr.write(f"error: {reason}: {message}\n")


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
