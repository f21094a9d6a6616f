"""Command line front end: ``tielab compute``, ``tielab verify``, ``tielab formats``."""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from .bracket import PDCode, braid_to_pd, bracket, jones, parse_pd
from .braid import TiedBraidWord
from .braid import parse as parse_braid
from .btalgebra import f_tied, invariant_bar
from .checks import SUITES, run_suite
from .hecke import homflypt_X
from .scalars import LaurentPoly, PolyRing, QuadExt, RatFunc, format_scalar, parse_poly, specialize
from .yokonuma import delta_theta_m

EXIT_PARSE, EXIT_OPTIONS, EXIT_GUARD = 2, 3, 4

INVARIANTS = ("bracket", "jones", "homflypt", "delta-m", "theta-m", "delta-bar", "theta-bar", "f-tied")

DEFAULT_LIMITS = {"braid_length": 64, "n": 8, "d": 6, "crossings": 24}

FORMATS_HELP = """\
Input formats
  braid word   "n=3: 1 -2 1"  or  "s1 -s2 s1"  (sigma_i = i, inverse = -i; n defaults to max index + 1)
  tied word    "n=3: e1 s1 -s2 e2"  (e_i ties strands i and i+1; only for f-tied)
  PD code      "X[1,3,4,2] X[3,1,2,4] or=+1,+1"  (records counterclockwise from the
               incoming under-arc, "O*k" adds k free loops; only for bracket and jones)
Options
  --ds "d=4;S=0,2"   modulus and subset of Z/d for delta-m and theta-m
  --m M              shorthand for d = M, S = Z/M
  --set var=value    specialize a variable (value: rational or polynomial)
Output formats: plain, latex, json
Guards: braid length <= 64, n <= 8, d <= 6, PD crossings <= 24
  (override with --unsafe-limits or TIELAB_LIMITS="braid_length=100,n=10")
"""


class CliError(Exception):
    def __init__(self, code: int, msg: str):
        super().__init__(msg)
        self.code = code


def limits_from_env(env=None) -> dict:
    lim = dict(DEFAULT_LIMITS)
    text = (env if env is not None else os.environ).get("TIELAB_LIMITS", "")
    for part in filter(None, (p.strip() for p in text.split(","))):
        key, _, val = part.partition("=")
        key = key.strip()
        if key not in lim or not val.strip().isdigit():
            raise CliError(EXIT_PARSE, f"bad TIELAB_LIMITS entry {part!r}")
        lim[key] = int(val)
    return lim


def parse_input(text: str):
    """BraidWord, TiedBraidWord or PDCode from the command line text."""
    try:
        if "X[" in text or re.fullmatch(r"\s*O(\s*\*\s*\d+)?\s*", text):
            return parse_pd(text)
        return parse_braid(text)
    except ValueError as e:
        raise CliError(EXIT_PARSE, f"cannot parse input: {e}") from None


def parse_ds(text: str) -> tuple[int, tuple[int, ...]]:
    m = re.fullmatch(r"\s*d\s*=\s*(\d+)\s*;\s*S\s*=\s*([\d,\s]+)", text)
    if not m:
        raise CliError(EXIT_PARSE, f"cannot parse --ds {text!r}; expected e.g. \"d=4;S=0,2\"")
    d = int(m.group(1))
    S = tuple(int(s) for s in m.group(2).replace(" ", "").split(",") if s)
    if d < 1 or not S or any(not 0 <= s < d for s in S):
        raise CliError(EXIT_OPTIONS, "need d >= 1 and a nonempty S inside {0..d-1}")
    return d, S


def _variables(x) -> tuple[str, ...]:
    if isinstance(x, LaurentPoly):
        return x.vars
    if isinstance(x, RatFunc):
        return x.num.vars
    if isinstance(x, QuadExt):
        return _variables(x.radicand)
    return ()


def apply_settings(x, settings: list[str]):
    if not settings:
        return x
    old = _variables(x)
    raw = {}
    for s in settings:
        name, eq, val = s.partition("=")
        name = name.strip()
        if not eq or not name:
            raise CliError(EXIT_PARSE, f"--set expects var=value, got {s!r}")
        if name not in old:
            raise CliError(EXIT_OPTIONS, f"variable {name!r} does not occur (have {', '.join(old)})")
        raw[name] = val.strip()
    keep = [v for v in old if v not in raw]
    extra = []
    for val in raw.values():
        for nm in re.findall(r"[A-Za-z_]\w*", val):
            if nm not in keep and nm not in extra:
                extra.append(nm)
    target = tuple(keep + extra)
    bindings = {}
    for name, val in raw.items():
        try:
            p = parse_poly(val, target)
        except ValueError as e:
            raise CliError(EXIT_PARSE, f"cannot parse value for {name}: {e}") from None
        bindings[name] = p.constant_value() if p.is_constant() else p
    try:
        ring = PolyRing(*target) if target else None
        return specialize(x, bindings, ring=ring)
    except ZeroDivisionError as e:
        raise CliError(EXIT_OPTIONS, str(e)) from None


def _check_guards(obj, lim, d=None):
    if isinstance(obj, PDCode):
        if len(obj.crossings) > lim["crossings"]:
            raise CliError(EXIT_GUARD, f"{len(obj.crossings)} crossings exceed the guard of {lim['crossings']}")
        return
    if len(obj) > lim["braid_length"]:
        raise CliError(EXIT_GUARD, f"word length {len(obj)} exceeds the guard of {lim['braid_length']}")
    if obj.n > lim["n"]:
        raise CliError(EXIT_GUARD, f"{obj.n} strands exceed the guard of {lim['n']}")
    if d is not None and d > lim["d"]:
        raise CliError(EXIT_GUARD, f"d = {d} exceeds the guard of {lim['d']}")


def compute(args) -> str:
    obj = parse_input(args.input)
    inv = args.invariant
    is_pd = isinstance(obj, PDCode)
    is_tied = isinstance(obj, TiedBraidWord)
    if is_pd and inv not in ("bracket", "jones"):
        raise CliError(EXIT_OPTIONS, "PD input is accepted only by bracket and jones")
    if is_tied and inv != "f-tied":
        raise CliError(EXIT_OPTIONS, "tied input is accepted only by f-tied")
    uses_ds = args.ds is not None or args.m is not None
    if uses_ds and inv not in ("delta-m", "theta-m"):
        raise CliError(EXIT_OPTIONS, "--ds and --m apply only to delta-m and theta-m")
    if args.mode != "specialized" and inv != "bracket":
        raise CliError(EXIT_OPTIONS, "--mode applies only to bracket")
    if args.ds is not None and args.m is not None:
        raise CliError(EXIT_OPTIONS, "give either --ds or --m")
    lim = None if args.unsafe_limits else limits_from_env()
    d = S = None
    if inv in ("delta-m", "theta-m"):
        if args.ds is not None:
            d, S = parse_ds(args.ds)
        elif args.m is not None:
            if args.m < 1:
                raise CliError(EXIT_OPTIONS, "--m must be positive")
            d, S = args.m, tuple(range(args.m))
        else:
            raise CliError(EXIT_OPTIONS, f"{inv} needs --ds or --m")
    if lim is not None:
        _check_guards(obj, lim, d)
    limit = 10 ** 9 if lim is None else lim["crossings"]

    factor_order = None
    if inv in ("bracket", "jones"):
        pd = obj if is_pd else braid_to_pd(obj)
        if lim is not None:
            _check_guards(pd, lim)
        if inv == "bracket":
            val = bracket(pd, args.mode, limit=limit).value
            if args.mode == "generic":
                factor_order = ("z", "A", "B")
        else:
            if pd.signs is None:
                raise CliError(EXIT_OPTIONS, "jones needs an oriented PD code (or=...)")
            val = jones(pd, limit=limit)
    elif inv == "homflypt":
        val = homflypt_X(obj)
    elif inv in ("delta-m", "theta-m"):
        val = delta_theta_m(obj, inv.split("-")[0], d, S)
    elif inv in ("delta-bar", "theta-bar"):
        val = invariant_bar(obj, inv.split("-")[0])
    else:
        val = f_tied(obj)
    val = apply_settings(val, args.set or [])
    return format_scalar(val, args.format, factor_order)


def verify(args) -> tuple[str, bool]:
    names = SUITES if args.suite == "all" else (args.suite,)
    lines, good = [], True
    for name in names:
        for rec in run_suite(name, args.seed, args.count):
            rec["seed"] = args.seed
            good &= rec["ok"] == (rec["expected"] == "pass")
            lines.append(json.dumps(rec, sort_keys=True))
    return "\n".join(lines), good


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tielab", description="Link and tied-link polynomial invariants.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="compute an invariant")
    c.add_argument("--invariant", "-i", required=True, choices=INVARIANTS)
    c.add_argument("input", help="braid word, tied braid word or PD code (see 'tielab formats')")
    c.add_argument("--format", "-f", default="plain", choices=("plain", "latex", "json"))
    c.add_argument("--ds", help='modulus and subset, e.g. "d=4;S=0,2"')
    c.add_argument("--m", type=int, help="shorthand for d = m, S = Z/m")
    c.add_argument("--mode", default="specialized", choices=("generic", "specialized"))
    c.add_argument("--set", action="append", metavar="VAR=VALUE", help="specialize a variable (repeatable)")
    c.add_argument("--unsafe-limits", action="store_true", help="disable size guards")

    v = sub.add_parser("verify", help="run a seeded property suite")
    v.add_argument("--suite", required=True, choices=SUITES + ("all",))
    v.add_argument("--seed", type=int, required=True)
    v.add_argument("--count", type=int, default=100)

    sub.add_parser("formats", help="describe input and output formats")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "formats":
            print(FORMATS_HELP, end="")
            return 0
        if args.command == "compute":
            print(compute(args))
            return 0
        out, good = verify(args)
        print(out)
        return 0 if good else 1
    except CliError as e:
        print(f"tielab: {e}", file=sys.stderr)
        return e.code
    except OverflowError as e:
        print(f"tielab: {e}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
