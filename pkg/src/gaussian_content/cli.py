"""Command line front end.

Exit codes: 0 success or true verdict, 1 false verdict or failed
verification, 2 usage/parse error, 3 Groebner resource limit.
"""

import argparse
import json
import sys
import time

from .content import (
    Status,
    content,
    dedekind_mertens_check,
    gaussian_generic,
    gaussian_status,
    gaussian_status_domain,
    nu_sequence,
    principal_generator,
)
from .errors import GaussianContentError, ResourceLimitError
from .groebner import buchberger, colon, normal_form
from .parsing import format_poly, parse_point, parse_poly, parse_poly_list, parse_ring
from .poly import LEX, GREVLEX, MonomialOrder
from .rings import LocalityWitness, is_invertible
from .verify import ANCHORS, DEFAULT_RINGS, verify_paper

SCHEMA = "gaussian-content/report/v1"

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["schema", "command", "status", "result", "timing"],
    "properties": {
        "schema": {"const": SCHEMA},
        "command": {
            "type": "object",
            "required": ["verb", "args"],
            "properties": {"verb": {"type": ["string", "null"]}, "args": {"type": "object"}},
        },
        "status": {"enum": ["pass", "fail", "error"]},
        "result": {"type": "object"},
        "timing": {
            "type": "object",
            "required": ["seconds"],
            "properties": {"seconds": {"type": "number", "minimum": 0}},
        },
        "error": {"type": "string"},
        "exit_code": {"enum": [0, 1, 2, 3]},
    },
}


class UsageError(GaussianContentError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _ideal(args, ring, option="ideal"):
    text = getattr(args, option)
    if text is None:
        raise UsageError(f"--{option.replace('_', '-')} is required")
    return ring.ideal(parse_poly_list(text, ring.base))


def _gens(I):
    mod = set(I.modulus)
    return [format_poly(g) for g in I.gb.generators if g not in mod] or ["0"]


def _need(args, *names):
    for n in names:
        if getattr(args, n, None) is None:
            raise UsageError(f"--{n.replace('_', '-')} is required")


def cmd_gb(args, ring):
    _need(args, "ideal")
    gens = parse_poly_list(args.ideal, ring.base) + list(ring.relations)
    order = LEX if args.order == "lex" else GREVLEX
    if not any(gens):
        return True, {"basis": []}
    G = buchberger(gens, MonomialOrder(order.kind))
    return True, {"basis": [format_poly(g) for g in G.generators], "order": args.order}


def cmd_nf(args, ring):
    _need(args, "ideal", "elem")
    I = _ideal(args, ring)
    f = parse_poly(args.elem, ring.base)
    return True, {"normal_form": format_poly(normal_form(f, I.gb))}


def cmd_member(args, ring):
    _need(args, "ideal", "elem")
    I = _ideal(args, ring)
    member = I.contains(parse_poly(args.elem, ring.base))
    return member, {"member": member}


def cmd_equal(args, ring):
    _need(args, "ideal", "ideal2")
    equal = _ideal(args, ring) == _ideal(args, ring, "ideal2")
    return equal, {"equal": equal}


def cmd_colon(args, ring):
    _need(args, "ideal", "ideal2")
    Q = colon(_ideal(args, ring), _ideal(args, ring, "ideal2"))
    return True, {"colon": _gens(Q)}


def cmd_content(args, ring):
    _need(args, "poly")
    I = content(parse_poly(args.poly, ring), ring)
    p = principal_generator(I)
    return True, {
        "content": [format_poly(g) for g in I.gens],
        "basis": _gens(I),
        "principal": None if p is None else format_poly(p),
    }


def _verdict_payload(v):
    out = {"status": v.status.value, "method": v.method.value, "degree": v.degree, "witness": None}
    if v.witness is not None:
        out["witness"] = {"g": format_poly(v.witness.g), "element": format_poly(v.witness.element)}
    if v.detail:
        out["detail"] = v.detail
    return out


def cmd_gaussian(args, ring):
    _need(args, "poly")
    f = parse_poly(args.poly, ring)
    if args.method == "generic":
        v = gaussian_generic(f, ring, args.degree)
    elif args.method == "invertibility":
        v = gaussian_status_domain(f, ring)
    else:
        v = gaussian_status(f, ring, args.degree)
    return v.status is Status.CERTIFIED, _verdict_payload(v)


def cmd_invertible(args, ring):
    if args.ideal is not None:
        I = _ideal(args, ring)
    elif args.poly is not None:
        I = content(parse_poly(args.poly, ring), ring)
    else:
        raise UsageError("--ideal or --poly is required")
    res = is_invertible(I)
    payload = {
        "invertible": res.invertible,
        "denominator": format_poly(res.inverse.denominator),
        "inverse_numerator": _gens(res.inverse.numerator),
        "product": _gens(res.product),
    }
    if res.invertible:
        cof = res.cofactors
        payload["certificate"] = [
            {"cofactor": format_poly(h), "generator": format_poly(g)}
            for h, g in zip(cof, res.product.generators)
            if h
        ]
    return res.invertible, payload


def _witness(args, ring):
    if "=" in args.at:
        return LocalityWitness.at_point(ring, parse_point(args.at, ring))
    return LocalityWitness.from_generators(ring, parse_poly_list(args.at, ring.base))


def cmd_nu(args, ring):
    _need(args, "poly", "at")
    seq = nu_sequence(parse_poly(args.poly, ring), _witness(args, ring), args.mmax, ring)
    payload = {
        "nu": seq.values,
        "bound": seq.bound,
        "violated_at": seq.violated_at,
        "track": [format_poly(h) for h in seq.track.polys],
        "track_identity": all(seq.track.pullback_ok) and all(seq.track.degree_ok),
        "track_matches_power": seq.track.matches_power,
    }
    return not seq.bound_violated, payload


def cmd_dm(args, ring):
    _need(args, "poly", "poly2")
    holds = dedekind_mertens_check(parse_poly(args.poly, ring), parse_poly(args.poly2, ring), ring)
    return holds, {"holds": holds}


def cmd_verify_paper(args, ring):
    overrides = {}
    for item in args.override or []:
        anchor, sep, text = item.partition("=")
        if not sep or anchor not in DEFAULT_RINGS:
            raise UsageError(f"--override expects ANCHOR=RING with ANCHOR in {sorted(DEFAULT_RINGS)}")
        overrides[anchor] = text
    results = verify_paper(overrides)
    checks = [
        {"anchor": r.anchor, "status": "pass" if r.passed else "fail", "detail": r.detail,
         "seconds": round(r.seconds, 4)}
        for r in results
    ]
    failed = [r.anchor for r in results if not r.passed]
    return not failed, {"checks": checks, "failed": failed}


COMMANDS = {
    "gb": cmd_gb,
    "nf": cmd_nf,
    "member": cmd_member,
    "equal": cmd_equal,
    "colon": cmd_colon,
    "content": cmd_content,
    "gaussian": cmd_gaussian,
    "invertible": cmd_invertible,
    "nu": cmd_nu,
    "dm": cmd_dm,
    "verify-paper": cmd_verify_paper,
}


def build_parser():
    parser = _Parser(prog="gaussian-content", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", parser_class=_Parser)
    for verb in COMMANDS:
        p = sub.add_parser(verb)
        p.add_argument("--format", choices=["text", "json"], default="text")
        if verb == "verify-paper":
            p.add_argument("--override", action="append", metavar="ANCHOR=RING",
                           help=f"replace a check's ring; anchors: {', '.join(DEFAULT_RINGS)}")
            continue
        p.add_argument("--ring", required=True)
        if verb in ("gb", "nf", "member", "equal", "colon", "invertible"):
            p.add_argument("--ideal")
        if verb in ("equal", "colon"):
            p.add_argument("--ideal2")
        if verb in ("nf", "member"):
            p.add_argument("--elem")
        if verb in ("content", "gaussian", "invertible", "nu", "dm"):
            p.add_argument("--poly")
        if verb == "dm":
            p.add_argument("--poly2")
        if verb == "gb":
            p.add_argument("--order", choices=["grevlex", "lex"], default="grevlex")
        if verb == "gaussian":
            p.add_argument("--degree", type=int)
            p.add_argument("--method", choices=["auto", "generic", "invertibility"], default="auto")
        if verb == "nu":
            p.add_argument("--at", help="generators of M, e.g. 'x, y', or a point 'x=0, y=0'")
            p.add_argument("--mmax", type=int, default=3)
    return parser


def run_command(argv):
    """Execute one command; returns ``(exit_code, report)``."""
    start = time.perf_counter()
    report = {"schema": SCHEMA, "command": {"verb": None, "args": {}}, "status": "error", "result": {}}
    code = 2
    try:
        args = build_parser().parse_args(argv)
        if args.verb is None:
            raise UsageError(f"a command is required: {', '.join(COMMANDS)}")
        report["command"] = {
            "verb": args.verb,
            "args": {k: v for k, v in vars(args).items() if k != "verb" and v is not None},
        }
        ring = parse_ring(args.ring) if hasattr(args, "ring") else None
        ok, payload = COMMANDS[args.verb](args, ring)
        report["result"] = payload
        report["status"] = "pass" if ok else "fail"
        code = 0 if ok else 1
    except ResourceLimitError as exc:
        report["error"] = str(exc)
        code = 3
    except GaussianContentError as exc:
        report["error"] = f"{type(exc).__name__}: {exc}"
    except SystemExit as exc:  # --help
        code = exc.code if isinstance(exc.code, int) else 2
        report["status"] = "pass" if code == 0 else "error"
    except (ValueError, KeyError, ZeroDivisionError) as exc:
        report["error"] = f"{type(exc).__name__}: {exc}"
    report["exit_code"] = code
    report["timing"] = {"seconds": round(time.perf_counter() - start, 6)}
    return code, report


def format_text(report):
    lines = []
    result = report.get("result", {})
    if report["command"]["verb"] == "verify-paper" and "checks" in result:
        for c in result["checks"]:
            lines.append(f"{c['status'].upper():4}  {c['anchor']}: {c['detail']}")
        if result["failed"]:
            lines.append(f"FAILED: {', '.join(result['failed'])}")
        else:
            lines.append(f"all {len(result['checks'])} checks passed")
        return "\n".join(lines)
    for key, value in result.items():
        lines.append(f"{key}: {_text_value(value)}")
    if "error" in report:
        lines.append(f"error: {report['error']}")
    lines.append(f"outcome: {report['status']}")
    return "\n".join(lines)


def _text_value(value):
    if isinstance(value, bool):
        return str(value).lower()
    if value is None:
        return "none"
    if isinstance(value, dict):
        return ", ".join(f"{k} = {_text_value(v)}" for k, v in value.items())
    if isinstance(value, list):
        sep = "; " if any(isinstance(v, dict) for v in value) else ", "
        return sep.join(_text_value(v) for v in value)
    return str(value)


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    code, report = run_command(argv)
    if report["command"]["args"].get("format") == "json":
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        out = sys.stderr if code >= 2 else sys.stdout
        print(format_text(report), file=out)
    return code


if __name__ == "__main__":
    sys.exit(main())
