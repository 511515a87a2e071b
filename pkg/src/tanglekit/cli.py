"""Command-line front end: ``tanglekit {eval,sweep,check,selftest}``.

Exit codes: 0 ok, 1 self-test failure, 2 parse error, 3 dimension or focus
mismatch, 4 I/O error, 5 identity failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import acceptance, identities, monogamy
from .errors import DimensionError, StateFileError
from .qstate import load_state, random_states
from .roof import RoofOptions

EXIT_OK, EXIT_SELFTEST, EXIT_PARSE, EXIT_DIMENSION, EXIT_IO, EXIT_IDENTITY = 0, 1, 2, 3, 4, 5
SWEEP_RESTARTS = 8
SEED_ENV = "TANGLEKIT_SEED"


def resolve_seed(seed):
    if seed is not None:
        return seed
    env = os.environ.get(SEED_ENV)
    if env is None or env.strip() == "":
        return 0
    try:
        return int(env)
    except ValueError:
        raise SystemExit(f"{SEED_ENV} must be an integer, got {env!r}")


def jsonable(obj):
    """Plain JSON types; complex numbers become ``[re, im]``."""
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    if hasattr(obj, "item"):
        return jsonable(obj.item())
    return obj


def _flatten(d, prefix=""):
    for k, v in d.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            yield from _flatten(v, key + ".")
        else:
            yield key, v


def _fmt(v):
    if v is None:
        return "n/a"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, float):
        return f"{v:.12f}"
    if isinstance(v, list):
        return "[" + ", ".join(_fmt(x) for x in v) + "]"
    return str(v)


def render_text(d):
    """Aligned ``key value`` lines for a JSON-ready report dict."""
    items = list(_flatten(d))
    width = max(len(k) for k, _ in items)
    return "\n".join(f"{k:<{width}}  {_fmt(v)}" for k, v in items)


def _load(path):
    try:
        return load_state(path)
    except StateFileError as exc:
        print(f"{path}: parse error: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)
    except DimensionError as exc:
        print(f"{path}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_DIMENSION)
    except OSError as exc:
        print(f"{path}: {exc.strerror or exc}", file=sys.stderr)
        raise SystemExit(EXIT_IO)


def cmd_eval(args):
    state = _load(args.state)
    if state.n != 4:
        print(f"eval needs a 4-qubit state, {args.state} has {state.n}", file=sys.stderr)
        return EXIT_DIMENSION
    if not 1 <= args.focus <= state.n:
        print(f"focus {args.focus} outside 1..{state.n}", file=sys.stderr)
        return EXIT_DIMENSION
    opts = RoofOptions(restarts=args.restarts, seed=resolve_seed(args.seed))
    rep = monogamy.report(state, args.focus, opts)
    d = jsonable(rep.as_dict())
    if args.json:
        print(json.dumps(d, indent=2, sort_keys=False))
    else:
        print(render_text(d))
    return EXIT_OK


def cmd_sweep(args):
    opts = RoofOptions(restarts=SWEEP_RESTARTS, seed=resolve_seed(args.seed))
    try:
        rows = monogamy.sweep(args.min, args.max, args.steps, focus=1, opts=opts)
    except ValueError as exc:
        print(f"sweep: {exc}", file=sys.stderr)
        return EXIT_PARSE
    text = monogamy.rows_to_csv(rows)
    try:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"{args.out}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_IO
    print(f"wrote {len(rows)} rows to {args.out}")
    return EXIT_OK


def cmd_check(args):
    if args.state is not None:
        state = _load(args.state)
        if state.n != 4:
            print(f"check needs a 4-qubit state, {args.state} has {state.n}", file=sys.stderr)
            return EXIT_DIMENSION
        states = [state]
    else:
        states = random_states(4, args.random, resolve_seed(args.seed))
    results = identities.run_checks(states)
    for r in results:
        print(r.line())
    bad = identities.first_failure(results)
    if bad is not None:
        print(f"first failing identity: {bad.name}", file=sys.stderr)
        return EXIT_IDENTITY
    return EXIT_OK


def cmd_selftest(args):
    results = acceptance.run_all(out=sys.stdout)
    failed = [c for c in results if not c.passed]
    if failed:
        first = failed[0]
        print(f"first failure: criterion {first.number}: {first.first_failure().name}",
              file=sys.stderr)
        return EXIT_SELFTEST
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="tanglekit", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", help="tangles, invariants and residuals of one state file")
    e.add_argument("--state", required=True, metavar="FILE")
    e.add_argument("--focus", type=int, default=1)
    e.add_argument("--seed", type=int)
    e.add_argument("--restarts", type=int, default=RoofOptions.restarts)
    e.add_argument("--json", action="store_true", help="print JSON instead of text")
    e.set_defaults(func=cmd_eval)

    s = sub.add_parser("sweep", help="residual curves over the state family, as CSV")
    s.add_argument("--family", choices=("g2ia",), default="g2ia")
    s.add_argument("--min", type=float, default=0.0)
    s.add_argument("--max", type=float, default=5.0)
    s.add_argument("--steps", type=int, default=201)
    s.add_argument("--out", required=True, metavar="FILE.csv")
    s.add_argument("--seed", type=int)
    s.set_defaults(func=cmd_sweep)

    c = sub.add_parser("check", help="verify the exact identities")
    src = c.add_mutually_exclusive_group(required=True)
    src.add_argument("--state", metavar="FILE")
    src.add_argument("--random", type=int, metavar="N")
    c.add_argument("--seed", type=int)
    c.set_defaults(func=cmd_check)

    t = sub.add_parser("selftest", help="run the acceptance suite")
    t.set_defaults(func=cmd_selftest)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SystemExit as exc:
        if isinstance(exc.code, int):
            return exc.code
        raise


if __name__ == "__main__":
    sys.exit(main())
