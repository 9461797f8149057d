"""Command line interface: ``hilbtwist {twistgen,surface,thin,selftest}``.

Exit codes: 0 success, 1 an exact invariant failed, 2 usage error,
3 a mathematical precondition failed (e.g. abcd not a square).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Sequence

from .exactq import parse_proj, parse_rat, proj_str, rat_str

EXIT_OK, EXIT_INVARIANT, EXIT_USAGE, EXIT_MATH = 0, 1, 2, 3

DEFAULTS = {"count": 8, "kmax": 4, "height": 100, "format": "json"}

# config-file keys mapped to argparse destinations
CONFIG_KEYS = {"n", "m", "count", "avoid", "abcd", "height", "covers", "kmax",
               "output", "format", "witnesses", "subcommand"}


class UsageError(Exception):
    pass


class PreconditionError(Exception):
    pass


def thread_cap() -> int:
    raw = os.environ.get("HILB_THREADS", "").strip()
    if not raw:
        return os.cpu_count() or 1
    try:
        n = int(raw)
    except ValueError:
        raise UsageError(f"HILB_THREADS must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise UsageError(f"HILB_THREADS must be a positive integer, got {raw!r}")
    return n


def ordered_map(fn: Callable, items: Sequence) -> list:
    """fn over items with at most HILB_THREADS workers; results keep input order."""
    workers = min(thread_cap(), max(1, len(items)))
    if workers == 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def read_config(path: str) -> dict:
    """key=value lines; blank lines and lines starting with # are ignored."""
    out = {}
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from None
    for no, line in enumerate(lines, 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{no}: expected key=value")
        key, value = (s.strip() for s in line.split("=", 1))
        key = key.lstrip("-").replace("-", "_")
        if key not in CONFIG_KEYS:
            raise UsageError(f"{path}:{no}: unknown key {key!r}")
        out[key] = value
    return out


def _int(value, name: str) -> int:
    try:
        return int(value)
    except (TypeError, ValueError):
        raise UsageError(f"--{name} must be an integer, got {value!r}") from None


def _rat_list(text: str, name: str) -> list:
    if text is None or not str(text).strip():
        return []
    try:
        return [parse_rat(s.strip()) for s in str(text).split(",")]
    except ValueError as exc:
        raise UsageError(f"--{name}: {exc}") from None


def _point(text: str, dim: int):
    try:
        return parse_proj(text, dim)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad point {text!r}: {exc}") from None


@dataclass
class Output:
    path: str | None

    def write(self, text: str):
        if self.path is None or self.path == "-":
            sys.stdout.write(text)
            sys.stdout.flush()
        else:
            with open(self.path, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)


def _dump(obj) -> str:
    return json.dumps(obj) + "\n"


# ---------------------------------------------------------------- twistgen

def cmd_twistgen(args) -> int:
    from . import twistgen as tg

    if args.n is None or args.m is None:
        raise UsageError("twistgen needs --n and --m")
    n, m = _int(args.n, "n"), _int(args.m, "m")
    count = _int(args.count, "count")
    if count < 0:
        raise UsageError("--count must be >= 0")
    avoid = _rat_list(args.avoid, "avoid")
    if any(a == 0 for a in avoid):
        raise UsageError("--avoid entries must be nonzero")
    try:
        params = tg.TwistParams(n, m)
    except tg.TwistParamsError as exc:
        raise UsageError(str(exc)) from None
    if count == 0:
        Output(args.output).write("")
        return EXIT_OK
    try:
        engine = tg.build(params)
    except tg.TorsionBasePointError as exc:
        raise PreconditionError(str(exc)) from None
    items, skipped = engine.generate(count)

    def finish(item):
        item = tg.certify(item, avoid)
        Y = tg.quotient_point(item, params)
        xi = tg.xi_check(item, params)
        return item.to_json(Y), xi.ok

    results = ordered_map(finish, items)
    bad = [rec["k"] for rec, ok in results if not ok]
    Output(args.output).write("".join(_dump(rec) for rec, _ in results))
    for k in skipped:
        print(f"skipped k={k}: backward map undefined or d = 0", file=sys.stderr)
    if bad:
        print(f"xi_check failed for k={bad}", file=sys.stderr)
        return EXIT_INVARIANT
    return EXIT_OK


# ----------------------------------------------------------------- surface

def _surface(args):
    from .dqsurf import DiagSurface

    coeffs = _rat_list(args.abcd, "abcd") if args.abcd else [1, 1, -1, -1]
    if len(coeffs) != 4:
        raise UsageError("--abcd needs four comma-separated rationals")
    try:
        return DiagSurface.of(coeffs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _need_split(S):
    if not S.square_disc:
        raise PreconditionError(f"abcd = {rat_str(S.a * S.b * S.c * S.d)} is not a square: "
                                "the rulings of the quadric are not defined over Q")


def _index(text) -> int:
    i = _int(text, "i")
    if i not in (1, 2):
        raise UsageError("fibration index must be 1 or 2")
    return i


def _on_surface(S, P):
    from .dqsurf import contains

    if not contains(S, P):
        raise PreconditionError(f"{proj_str(P)} is not on {S}")


def cmd_surface(args) -> int:
    from . import dqsurf as dq

    S = _surface(args)
    action, rest = args.action, list(args.args)

    def need(k):
        if len(rest) < k:
            raise UsageError(f"surface {action} needs {k} argument(s)")

    if action == "omega":
        need(1)
        P = _point(rest[0], 3)
        _on_surface(S, P)
        res = dq.omega_filter(S, P)
        out = {"surface": S.to_json(), "P": proj_str(P), **res.to_json()}
    elif action == "pi":
        need(1)
        _need_split(S)
        P = _point(rest[0], 3)
        _on_surface(S, P)
        out = {"surface": S.to_json(), "P": proj_str(P),
               "S(P)": proj_str(dq.square_map(P)),
               "pi1": proj_str(dq.pi(S, 1, P)), "pi2": proj_str(dq.pi(S, 2, P))}
    elif action == "fiber":
        need(2)
        _need_split(S)
        i, p = _index(rest[0]), _point(rest[1], 1)
        out = {"surface": S.to_json(), **dq.fiber(S, i, p).to_json()}
    elif action == "multiples":
        need(2)
        _need_split(S)
        i, P = _index(rest[0]), _point(rest[1], 3)
        _on_surface(S, P)
        kmax = _int(args.kmax, "kmax")
        if kmax < 1:
            raise UsageError("--kmax must be >= 1")
        F = dq.fiber(S, i, dq.pi(S, i, P))
        try:
            E, _ = dq.fiber_to_elliptic(F, P)
            mult = dq.fiber_multiples(F, P, kmax)
        except dq.DegenerateFiberError as exc:
            raise PreconditionError(str(exc)) from None
        out = {"surface": S.to_json(), "fiber": F.to_json(),
               "curve": {"A": rat_str(E.A), "B": rat_str(E.B)},
               "R": proj_str(P), "kmax": kmax, **mult.to_json(),
               "new_points": sum(1 for Q in mult.points if Q != P)}
    elif action == "branch":
        need(3)
        _need_split(S)
        i = _index(rest[0])
        ts = [_point(t, 1) for t in rest[1:]]
        try:
            polys = [dq.branch_sample(S, i, t) for t in ts]
        except dq.DegenerateFiberError as exc:
            raise PreconditionError(str(exc)) from None
        out = {"surface": S.to_json(), "i": i,
               "samples": [{"t": proj_str(t), "poly": f.to_str("tau"),
                            "coeffs": [rat_str(c) for c in f.coeffs]} for t, f in zip(ts, polys)],
               "nonconstant": len(set(polys)) > 1}
    else:  # argparse restricts choices
        raise UsageError(f"unknown surface action {action!r}")
    Output(args.output).write(_dump(out))
    return EXIT_OK


# -------------------------------------------------------------------- thin

def cmd_thin(args) -> int:
    from .thinsets import parse_covers, thin_report

    if args.covers is None:
        raise UsageError("thin needs --covers")
    try:
        covers = parse_covers(args.covers)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    H = _int(args.height, "height")
    if H < 1:
        raise UsageError("--height must be >= 1")
    report = thin_report(covers, H)
    if args.format == "json":
        text = _dump({"height_bound": H, "total": report.total, "covered": report.covered,
                      "fraction": rat_str(report.fraction), "per_cover": dict(zip(report.covers, report.per_cover))})
    else:
        text = report.csv_text()
    Output(args.output).write(text)
    if args.witnesses:
        Output(args.witnesses).write(report.witnesses_json())
    return EXIT_OK


# ---------------------------------------------------------------- selftest

def cmd_selftest(args) -> int:
    from .selftest import run_selftest

    results = run_selftest(inject_fault=args.inject_fault)
    if args.json:
        text = _dump({"results": [{"check": name, "pass": ok, "detail": detail}
                                  for name, ok, detail in results],
                      "all_pass": all(ok for _, ok, _ in results)})
    else:
        width = max(len(name) for name, _, _ in results)
        lines = [f"{name.ljust(width)}  {'PASS' if ok else 'FAIL'}  {detail}".rstrip()
                 for name, ok, detail in results]
        text = "\n".join(lines) + "\n"
    Output(args.output).write(text)
    return EXIT_OK if all(ok for _, ok, _ in results) else EXIT_INVARIANT


# ------------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="key=value file mirroring the flags; flags override it")
    common.add_argument("--output", "-o", help="output path (default stdout)")

    p = argparse.ArgumentParser(prog="hilbtwist", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="subcommand")

    tw = sub.add_parser("twistgen", parents=[common], help="rational points on twists F_d and on Y")
    tw.add_argument("--n")
    tw.add_argument("--m")
    tw.add_argument("--count", help=f"number of multiples (default {DEFAULTS['count']})")
    tw.add_argument("--avoid", help="comma-separated nonzero rationals a_j")

    sf = sub.add_parser("surface", parents=[common], help="diagonal quartic surface operations")
    sf.add_argument("--abcd", help="coefficients a,b,c,d (default 1,1,-1,-1)")
    sf.add_argument("--kmax", help=f"largest multiple for 'multiples' (default {DEFAULTS['kmax']})")
    sf.add_argument("action", choices=["omega", "pi", "fiber", "multiples", "branch"])
    sf.add_argument("args", nargs="*")

    th = sub.add_parser("thin", parents=[common], help="thin-set statistics on P^1(Q)")
    th.add_argument("--covers", help='comma-separated rational functions of u, e.g. "u^2,u^3-u"')
    th.add_argument("--height", help=f"height bound H (default {DEFAULTS['height']})")
    th.add_argument("--format", choices=["csv", "json"], help="report format (default csv)")
    th.add_argument("--witnesses", help="path for the JSON witnesses file")

    st = sub.add_parser("selftest", parents=[common], help="exact identity suite")
    st.add_argument("--json", action="store_true", help="machine-readable results")
    st.add_argument("--inject-fault", action="store_true", help="corrupt one datum to check the gate")
    return p


def _apply_config(args, parser_defaults: dict) -> None:
    cfg = read_config(args.config) if getattr(args, "config", None) else {}
    for key, value in cfg.items():
        if key == "subcommand":
            continue
        if hasattr(args, key) and getattr(args, key) is None:
            setattr(args, key, value)
    for key, value in parser_defaults.items():
        if hasattr(args, key) and getattr(args, key) is None:
            setattr(args, key, value)


def _peek_config_subcommand(argv: list[str]) -> list[str]:
    """Allow ``subcommand=...`` in a config file when none is given on the command line."""
    commands = {"twistgen", "surface", "thin", "selftest"}
    if any(a in commands for a in argv):
        return argv
    for i, a in enumerate(argv):
        path = None
        if a == "--config" and i + 1 < len(argv):
            path = argv[i + 1]
        elif a.startswith("--config="):
            path = a.split("=", 1)[1]
        if path:
            sub = read_config(path).get("subcommand")
            if sub:
                return [sub] + argv
    return argv


COMMANDS = {"twistgen": cmd_twistgen, "surface": cmd_surface, "thin": cmd_thin, "selftest": cmd_selftest}


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        argv = _peek_config_subcommand(argv)
        try:
            args = parser.parse_args(argv)
        except SystemExit as exc:
            return EXIT_OK if exc.code == 0 else EXIT_USAGE
        if args.subcommand is None:
            parser.print_usage(sys.stderr)
            return EXIT_USAGE
        defaults = dict(DEFAULTS)
        if args.subcommand == "thin":
            defaults["format"] = "csv"
        _apply_config(args, defaults)
        thread_cap()
        return COMMANDS[args.subcommand](args)
    except UsageError as exc:
        print(f"hilbtwist: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PreconditionError as exc:
        print(f"hilbtwist: precondition failed: {exc}", file=sys.stderr)
        return EXIT_MATH
    except AssertionError as exc:
        print(f"hilbtwist: invariant failed: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except ValueError as exc:
        # library contract violations (point off the surface, split failure, ...)
        print(f"hilbtwist: precondition failed: {exc}", file=sys.stderr)
        return EXIT_MATH


if __name__ == "__main__":
    sys.exit(main())
