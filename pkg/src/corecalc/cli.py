"""Command line interface.

Ring files::

    field fp default        # or: field q, field fp <prime>
    vars x0 x1 x2
    order grevlex           # or lex
    gens
    x0*x1
    x0*(x0-x2)
    end

Points files::

    field q
    ambient 2
    points
    0 -1 1
    1 0 1
    end

Exit codes: 0 all checks pass, 1 a check failed, 2 bad input,
3 inconclusive oracle.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import random
import sys
from dataclasses import dataclass

from . import core as K
from .canonical import Algebra
from .groebner import Ideal, ideal_strings
from .points import PointSet, cayley_bacharach, conductor, core_of_points, verify_yz
from .poly import ParseError, PolyRing, field_from_spec
from .suites import SUITES, Context, run_suite

log = logging.getLogger("corecalc")

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_INCONCLUSIVE = 0, 1, 2, 3


class InputError(Exception):
    pass


@dataclass
class Parsed:
    ideal: Ideal
    points: PointSet | None = None


def _lines(text: str):
    for num, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield num, line


def parse_ring_file(text: str, field_override=None) -> Parsed:
    field_, names, order, gens = None, None, "grevlex", None
    it = _lines(text)
    for num, line in it:
        key, _, rest = line.partition(" ")
        if key == "field":
            field_ = field_from_spec(rest)
        elif key == "vars":
            names = rest.split()
        elif key == "order":
            if rest.strip() not in ("grevlex", "lex"):
                raise InputError(f"line {num}: unknown order {rest!r}")
            order = rest.strip()
        elif key == "gens":
            gens = []
            for num2, body in it:
                if body == "end":
                    break
                gens.append((num2, body))
            else:
                raise InputError("missing 'end' after gens")
        else:
            raise InputError(f"line {num}: unexpected {key!r}")
    if field_override is not None:
        field_ = field_override
    if field_ is None or not names or gens is None:
        raise InputError("a ring file needs field, vars and gens ... end")
    ring = PolyRing(field_, names, order)
    polys = []
    for num, body in gens:
        try:
            polys.append(ring(body))
        except ParseError as exc:
            raise InputError(f"line {num}: {exc}") from exc
    I = Ideal(ring, polys)
    if not I.homogeneous:
        raise InputError("generators must be homogeneous")
    return Parsed(I)


def parse_points_file(text: str, field_override=None) -> Parsed:
    field_, n, rows = None, None, None
    it = _lines(text)
    for num, line in it:
        key, _, rest = line.partition(" ")
        if key == "field":
            field_ = field_from_spec(rest)
        elif key == "ambient":
            n = int(rest)
        elif key == "points":
            rows = []
            for num2, body in it:
                if body == "end":
                    break
                rows.append((num2, body.split()))
            else:
                raise InputError("missing 'end' after points")
        else:
            raise InputError(f"line {num}: unexpected {key!r}")
    if field_override is not None:
        field_ = field_override
    if field_ is None or n is None or rows is None:
        raise InputError("a points file needs field, ambient and points ... end")
    pts = []
    for num, words in rows:
        if len(words) != n + 1:
            raise InputError(f"line {num}: expected {n + 1} coordinates")
        try:
            pts.append([field_.parse(w) for w in words])
        except ParseError as exc:
            raise InputError(f"line {num}: {exc}") from exc
    X = PointSet(field_, pts)
    return Parsed(X.ideal, X)


def load(path: str, field_override=None) -> Parsed:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(str(exc)) from exc
    keys = {line.split()[0] for _, line in _lines(text)}
    if "ambient" in keys:
        return parse_points_file(text, field_override)
    return parse_ring_file(text, field_override)


# --------------------------------------------------------------------------
# commands


def _require_points(parsed: Parsed) -> PointSet:
    if parsed.points is None:
        raise InputError("this command needs a points file")
    return parsed.points


def _reduced(parsed: Parsed, args) -> bool:
    if parsed.points is not None:
        return True
    if args.assume_reduced:
        log.info("reducedness asserted by the user")
    return bool(args.assume_reduced)


def cmd_invariants(parsed: Parsed, args) -> tuple[dict, int]:
    A = Algebra(parsed.ideal, args.seed)
    rep = A.report().as_dict()
    rep["partial"] = not rep["is_CM"]
    return rep, EXIT_OK


def _core_sandwich(A: Algebra, core: Ideal, n: int) -> dict:
    low = A.maximal_power(n * A.d + A.a + 1)
    return {
        "lower": f"m^{n * A.d + A.a + 1}",
        "upper": f"m^{n * A.d + A.b + 1}",
        "equals_lower": core == low,
    }


def cmd_core(parsed: Parsed, args) -> tuple[dict, int]:
    A = Algebra(parsed.ideal, args.seed)
    if parsed.ideal.ring.field.spec() != "q" and not _reduced(parsed, args):
        log.warning("positive characteristic: the formula assumes R geometrically reduced (--assume-reduced)")
    n = args.power
    out = {"n": n, "method": args.method}
    code = EXIT_OK
    if args.method == "formula":
        res = K.core_formula(A, n, second_seed=args.seed + 1)
    elif args.method == "oracle":
        res = K.core_oracle(A, n, K.OraclePolicy(), seed=args.seed)
    else:
        res = K.core_both(A, n, K.OraclePolicy(), seed=args.seed)
        out["agreement"] = res.agreement
        if res.agreement is False:
            code = EXIT_FAIL
    if res.status == K.INCONCLUSIVE:
        code = EXIT_INCONCLUSIVE
    out["status"] = res.status
    if res.rounds is not None:
        out["rounds"] = res.rounds
    out["core"] = ideal_strings(res.ideal)
    out["sandwich"] = _core_sandwich(A, res.ideal, n)
    return out, code


def cmd_points(parsed: Parsed, args) -> tuple[dict, int]:
    X = _require_points(parsed)
    sub = args.subcommand
    if sub == "hf":
        top = X.regularity_index() + 1
        return {"hilbert_function": [X.hilbert_function(D) for D in range(top + 1)], "a": X.a}, EXIT_OK
    if sub == "separators":
        seps = X.minimal_separators()
        return {"degrees": X.separator_degrees, "separators": [str(f) for f in seps]}, EXIT_OK
    if sub == "conductor":
        return {"conductor": ideal_strings(conductor(X, random.Random(f"{args.seed}:sep")))}, EXIT_OK
    if sub == "core":
        pc = core_of_points(X, args.seed, oracle=True)
        code = EXIT_INCONCLUSIVE if pc.oracle_status == K.INCONCLUSIVE else EXIT_OK
        return {"core": ideal_strings(pc.core), "oracle_status": pc.oracle_status, "agree": pc.agree}, code
    if sub == "cb":
        rep = cayley_bacharach(X, args.seed, oracle=True, strict=False)
        out = rep.as_dict()
        out["core_strictly_above_m^(a+2)"] = not rep.by_core
        return out, EXIT_OK if rep.agree else EXIT_FAIL
    if sub == "yz":
        if not args.z or not args.f:
            raise InputError("yz needs --z and --f")
        zi = [int(k) for k in args.z.split(",")]
        yi = [k for k in range(len(X)) if k not in zi]
        Y, Z = X.subset(yi), X.subset(zi)
        v = verify_yz(Y, Z, X.ring(args.f), args.seed)
        return {"passed": v.passed, "checks": v.as_list()}, EXIT_OK if v.passed else EXIT_FAIL
    raise InputError(f"unknown points subcommand {sub!r}")


def cmd_verify(parsed: Parsed, args) -> tuple[dict, int]:
    ctx = Context(
        parsed.ideal,
        seed=args.seed,
        n=args.power,
        cutoff=args.cutoff,
        reduced=_reduced(parsed, args),
        points=parsed.points,
    )
    names = list(SUITES) if args.suite == "all" else [args.suite]
    out, code = {}, EXIT_OK
    for name in names:
        v = run_suite(name, ctx)
        out[name] = {"passed": v.passed, "checks": v.as_list()}
        if not v.passed:
            code = EXIT_FAIL
    return out, code


COMMANDS = {"invariants": cmd_invariants, "core": cmd_core, "points": cmd_points, "verify": cmd_verify}


def _default_seed() -> int:
    try:
        return int(os.environ.get("CORECALC_SEED", "0"))
    except ValueError:
        return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=_default_seed())
    common.add_argument("--format", choices=["plain", "json"], default="plain")
    common.add_argument("--field", help="override the field of the input file, e.g. 'q' or 'fp 101'")
    common.add_argument("--assume-reduced", action="store_true", help="assert that R is geometrically reduced")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="corecalc", description="Cores of powers of m and canonical module identities")
    subs = p.add_subparsers(dest="command", required=True)
    s = subs.add_parser("invariants", parents=[common])
    s.add_argument("file")
    s = subs.add_parser("core", parents=[common])
    s.add_argument("file")
    s.add_argument("--power", type=int, default=1)
    s.add_argument("--method", choices=["formula", "oracle", "both"], default="formula")
    s = subs.add_parser("points", parents=[common])
    s.add_argument("file")
    s.add_argument("subcommand", choices=["hf", "separators", "conductor", "core", "cb", "yz"])
    s.add_argument("--z", help="comma separated indices of Z for yz")
    s.add_argument("--f", help="form vanishing on Y for yz")
    s = subs.add_parser("verify", parents=[common])
    s.add_argument("file")
    s.add_argument("--suite", required=True, choices=list(SUITES) + ["all"])
    s.add_argument("--cutoff", type=int, default=None)
    s.add_argument("--power", type=int, default=1)
    return p


def _fmt(val) -> str:
    if isinstance(val, list):
        return "[" + ", ".join(_fmt(x) for x in val) + "]"
    if isinstance(val, dict):
        return " ".join(f"{k}={_fmt(x)}" for k, x in val.items())
    return str(val)


def render_plain(command: str, out: dict) -> str:
    if command != "verify":
        return "\n".join(f"{k}: {_fmt(v)}" for k, v in out.items())
    lines = []
    for suite, rep in out.items():
        for c in rep["checks"]:
            line = f"{c['status'].upper():4} {suite}: {c['name']} {_fmt(c['params'])}".rstrip()
            if c.get("detail"):
                line += f" ({c['detail']})"
            lines.append(line)
        lines.append(f"{suite}: {'all pass' if rep['passed'] else 'FAILED'}")
    return "\n".join(lines)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        field_override = field_from_spec(args.field) if args.field else None
        parsed = load(args.file, field_override)
        out, code = COMMANDS[args.command](parsed, args)
    except (InputError, ValueError) as exc:
        # ParseError, DuplicatePointError and IdealError (non-CM, d = 0, ...)
        # are all ValueErrors: the input does not meet the preconditions
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except AssertionError as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if args.format == "json":
        print(json.dumps(out, sort_keys=True, indent=2, default=str))
    else:
        print(render_plain(args.command, out))
    return code


if __name__ == "__main__":
    sys.exit(main())
