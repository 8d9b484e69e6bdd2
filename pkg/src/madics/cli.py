"""Command-line front end.

Verbs: classes, field-code, ring-code, distance, griesmer, verify-paper,
export.  Every verb takes --output json|text and echoes the fully
resolved parameters (including defaulted b, a and the pinned splitting
field) so runs are reproducible.  Exit codes: 0 success, 1 validation
error, 2 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import poly
from .analysis import (
    DEFAULT_CAP,
    griesmer_check,
    min_distance_field,
    min_distance_ring,
    min_distance_ring_exhaustive,
)
from .errors import MadicError, TooLarge
from .ffield import make_prime_field
from .field_codes import FAMILIES, family_codes, splitting_field
from .residues import build_residue_system
from .ringalg import format_ring_poly, make_ring
from .ring_codes import RingCode, ring_code, ring_mu_chain
from .verify import run_verification

_BACKENDS = {"auto": None, "numba": True, "numpy": False}


def _slots(text):
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"slots must be comma-separated integers, got {text!r}")


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on bad arguments; remap to the validation
    exit code."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _resolved_params(args, system, ctx=None, ring=None):
    out = {"p": system.p, "m": system.m, "b": system.b, "a": system.a,
           "a_class_index": system.a_class_index}
    if ctx is not None:
        ext, alpha = splitting_field(ctx.q, system.p)
        out.update({
            "q": ctx.q,
            "alpha_exp": getattr(args, "alpha_exp", 1),
            "splitting_field_degree": ext.t,
            "splitting_field_modulus": list(ext.modulus),
            "alpha": int(alpha),
        })
    if ring is not None:
        out.update({
            "s": ring.s,
            "zeta": int(ring.zeta),
            "eta": [list(e) for e in ring.eta],
            "crt_points": [int(c) for c in ring.crt_points],
        })
    return out


def _params_lines(params):
    flat = []
    for k, v in params.items():
        flat.append(f"{k}={v}")
    return ["resolved parameters: " + " ".join(flat)]


def _report_json(rep):
    if rep is None:
        return None
    return {
        "n": rep.n, "k": rep.k, "d_min": rep.d_min, "method": rep.method,
        "enumerated": rep.enumerated,
        "weight_distribution":
            list(rep.weight_distribution)
            if rep.weight_distribution is not None else None,
        "component_ranks":
            list(rep.component_ranks)
            if rep.component_ranks is not None else None,
        "component_dmins":
            list(rep.component_dmins)
            if rep.component_dmins is not None else None,
    }


def _field_code_json(code, params, report=None):
    return {
        "params": dict(params, family=code.family, index=code.index,
                       n=code.p, k=code.dimension),
        "generator": list(code.generator),
        "idempotent": list(code.idempotent),
        "components": None,
        "distance_report": _report_json(report),
    }


def _ring_code_json(code, params, report=None):
    return {
        "params": dict(params, family=code.family, slots=list(code.slots),
                       n=code.p, component_ranks=list(code.component_ranks)),
        "generator": [list(c) for c in code.generator],
        "idempotent": [list(c) for c in code.idempotent],
        "components": [
            _field_code_json(c, {"q": code.ring.q, "p": code.p})
            for c in code.components],
        "distance_report": _report_json(report),
    }


def cmd_classes(args):
    system = build_residue_system(args.p, args.m, args.b, args.a)
    params = _resolved_params(args, system)
    payload = {"command": "classes", "parameters": params,
               "classes": [list(c) for c in system.classes]}
    lines = _params_lines(params)
    for i, cls in enumerate(system.classes):
        lines.append(f"Q_{i} = {{{', '.join(str(x) for x in cls)}}}")
    return payload, lines


def _build_field(args):
    system = build_residue_system(args.p, args.m, args.b, args.a)
    ctx = make_prime_field(args.q)
    codes = family_codes(system, ctx, args.family, args.alpha_exp)
    if not 0 <= args.index < system.m:
        raise MadicError(f"index must lie in [0, {system.m})")
    return system, ctx, codes[args.index]


def cmd_field_code(args):
    system, ctx, code = _build_field(args)
    params = _resolved_params(args, system, ctx)
    payload = {"command": "field-code", "parameters": params,
               "code": _field_code_json(code, params)}
    lines = _params_lines(params)
    lines.append(f"family {code.family} index {code.index}: "
                 f"[{code.p}, {code.dimension}] over GF({ctx.q})")
    lines.append(f"generator  = {poly.format_poly(code.generator)}")
    lines.append(f"idempotent = {poly.format_poly(code.idempotent)}")
    return payload, lines


def _build_ring(args):
    system = build_residue_system(args.p, args.m, args.b, args.a)
    ring = make_ring(make_prime_field(args.q), args.s)
    code = ring_code(ring, system, args.family, args.slots, args.alpha_exp)
    return system, ring, code


def cmd_ring_code(args):
    system, ring, code = _build_ring(args)
    params = _resolved_params(args, system, ring.field, ring)
    payload = {"command": "ring-code", "parameters": params,
               "code": _ring_code_json(code, params)}
    lines = _params_lines(params)
    lines.append(f"family {code.family} slots {list(code.slots)}: length "
                 f"{code.p} over GF({ring.q})[v]/(v^{ring.s} - v), "
                 f"component ranks {list(code.component_ranks)}")
    lines.append(f"defining element = {format_ring_poly(ring, code.idempotent)}")
    lines.append(f"generator        = {format_ring_poly(ring, code.generator)}")
    if args.chain:
        orbit = ring_mu_chain(code, system.a)
        payload["chain"] = [
            {"slots": list(c.slots),
             "generator": [list(x) for x in c.generator]}
            for c in orbit]
        lines.append(f"mu_{system.a} chain:")
        for c in orbit:
            lines.append(f"  slots {list(c.slots)}: "
                         f"{format_ring_poly(ring, c.generator)}")
    return payload, lines


def _load_exported(path):
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    code_doc = doc.get("code", doc)
    p = code_doc["params"]
    system = build_residue_system(p["p"], p["m"], p["b"], p["a"])
    ctx = make_prime_field(p["q"])
    if "slots" in p:
        ring = make_ring(ctx, p["s"])
        code = ring_code(ring, system, p["family"], tuple(p["slots"]),
                         p.get("alpha_exp", 1))
        stored = tuple(tuple(c) for c in code_doc["generator"])
    else:
        codes = family_codes(system, ctx, p["family"], p.get("alpha_exp", 1))
        code = codes[p["index"]]
        stored = tuple(code_doc["generator"])
    if stored != code.generator:
        raise MadicError(
            "stored generator does not match the one rebuilt from the "
            "exported parameters; file edited or truncated?")
    return system, code


def _distance_target(args):
    if args.from_file:
        return _load_exported(args.from_file)
    if args.slots is not None:
        system, ring, code = _build_ring(args)
        return system, code
    system, ctx, code = _build_field(args)
    return system, code


def _analyze(code, args):
    use_numba = _BACKENDS[args.backend]
    if isinstance(code, RingCode):
        if args.method == "exhaustive":
            return min_distance_ring_exhaustive(code, args.cap), None
        report = min_distance_ring(code, args.cap, use_numba)
        if args.method == "both":
            cross = min_distance_ring_exhaustive(code, args.cap)
            return report, cross
        return report, None
    return min_distance_field(code, args.cap, use_numba), None


def cmd_distance(args):
    system, code = _distance_target(args)
    if isinstance(code, RingCode):
        params = _resolved_params(args, system, code.ring.field, code.ring)
        code_json = _ring_code_json(code, params)
    else:
        params = _resolved_params(args, system, code.ctx)
        code_json = _field_code_json(code, params)
    report, cross = _analyze(code, args)
    payload = {"command": "distance", "parameters": params,
               "code": dict(code_json, distance_report=_report_json(report))}
    lines = _params_lines(params)
    lines.append(f"[{report.n}, {report.k}] d_min = {report.d_min} "
                 f"({report.method}, {report.enumerated} codewords "
                 "enumerated)")
    if report.component_dmins is not None:
        lines.append(f"component distances: {list(report.component_dmins)}")
    if cross is not None:
        payload["cross_check"] = _report_json(cross)
        agree = cross.d_min == report.d_min
        payload["cross_check_agrees"] = agree
        lines.append(f"exhaustive cross-check: d_min = {cross.d_min} "
                     f"({cross.enumerated} words) "
                     f"{'agrees' if agree else 'DISAGREES'}")
        if not agree:
            raise MadicError("component-min and exhaustive distances differ")
    if report.weight_distribution is not None and report.n <= 32:
        lines.append("weight distribution: "
                     f"{list(report.weight_distribution)}")
    return payload, lines


def cmd_griesmer(args):
    bound, attained = griesmer_check(args.n, args.k, args.d, args.q)
    payload = {"command": "griesmer", "parameters":
               {"n": args.n, "k": args.k, "d": args.d, "q": args.q},
               "bound": bound, "attained": attained}
    lines = [f"griesmer bound for [n, {args.k}, {args.d}] over "
             f"GF({args.q}): n >= {bound}; "
             f"n = {args.n} {'attains' if attained else 'does not attain'} "
             "the bound"]
    return payload, lines


def cmd_export(args):
    system, code = _distance_target(args)
    report = None
    if not args.skip_distance:
        report, _ = _analyze(code, args)
    if isinstance(code, RingCode):
        params = _resolved_params(args, system, code.ring.field, code.ring)
        code_json = _ring_code_json(code, params, report)
    else:
        params = _resolved_params(args, system, code.ctx)
        code_json = _field_code_json(code, params, report)
    payload = {"command": "export", "parameters": params, "code": code_json}
    text = json.dumps(payload, indent=2)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
        return payload, [f"wrote {args.out}"]
    # the export artifact is the JSON document itself
    return payload, [text]


def cmd_verify_paper(args):
    report = run_verification(args.cap)
    payload = {
        "command": "verify-paper",
        "ok": report.ok,
        "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail}
                   for c in report.checks],
        "errata": [{"name": e.name, "printed": e.printed,
                    "computed": e.computed, "note": e.note}
                   for e in report.errata],
    }
    lines = []
    for c in report.checks:
        lines.append(f"[{'PASS' if c.passed else 'FAIL'}] {c.name}: {c.detail}")
    lines.append("")
    lines.append(f"errata ({len(report.errata)} printed values contradicted "
                 "by computation):")
    for e in report.errata:
        lines.append(f"  * {e.name}")
        lines.append(f"      printed:  {e.printed}")
        lines.append(f"      computed: {e.computed}")
        if e.note:
            lines.append(f"      note:     {e.note}")
    lines.append("")
    lines.append(f"result: {'ok' if report.ok else 'FAILED'} "
                 f"({sum(c.passed for c in report.checks)}/"
                 f"{len(report.checks)} checks)")
    return payload, lines


def _add_common(sub):
    sub.add_argument("--output", choices=("text", "json"), default="text")


def _add_system_flags(sub, required=True):
    sub.add_argument("--p", type=int, required=required, help="prime length")
    sub.add_argument("--m", type=int, required=required, help="class count")
    sub.add_argument("--b", type=int, default=None,
                     help="primitive root mod p (default: smallest)")
    sub.add_argument("--a", type=int, default=None,
                     help="multiplier (default: smallest element of Q_1)")


def _add_field_flags(sub, required=True):
    sub.add_argument("--q", type=int, required=required, help="field size")
    sub.add_argument("--family", choices=FAMILIES, required=required)
    sub.add_argument("--alpha-exp", type=int, default=1, dest="alpha_exp",
                     help="exponent of the pinned p-th root anchoring class 0")


def _add_analysis_flags(sub):
    sub.add_argument("--cap", type=int, default=DEFAULT_CAP,
                     help="maximum enumeration size")
    sub.add_argument("--method",
                     choices=("component-min", "exhaustive", "both"),
                     default="component-min",
                     help="ring distance method (field codes always "
                     "enumerate exhaustively)")
    sub.add_argument("--backend", choices=sorted(_BACKENDS), default="auto",
                     help="codeword-scan kernel selection")


def build_parser():
    parser = _Parser(prog="madics",
                     description="m-adic residue codes over GF(q) and "
                     "GF(q)[v]/(v^s - v): construction, idempotents, "
                     "distances, bound checks")
    subs = parser.add_subparsers(dest="command", required=True)

    sp = subs.add_parser("classes", help="residue classes Q_i")
    _add_system_flags(sp)
    _add_common(sp)
    sp.set_defaults(func=cmd_classes)

    sp = subs.add_parser("field-code", help="one code of a field family")
    _add_system_flags(sp)
    _add_field_flags(sp)
    sp.add_argument("--index", type=int, required=True,
                    help="class index of the code")
    _add_common(sp)
    sp.set_defaults(func=cmd_field_code)

    sp = subs.add_parser("ring-code", help="one code over GF(q)[v]/(v^s - v)")
    _add_system_flags(sp)
    _add_field_flags(sp)
    sp.add_argument("--s", type=int, required=True,
                    help="ring parameter, (s-1) must divide (q-1)")
    sp.add_argument("--slots", type=_slots, required=True,
                    help="comma-separated class index per CRT slot")
    sp.add_argument("--chain", action="store_true",
                    help="also emit the full multiplier orbit")
    _add_common(sp)
    sp.set_defaults(func=cmd_ring_code)

    sp = subs.add_parser("distance", help="exact minimum distance")
    src = sp.add_argument_group("code source")
    src.add_argument("--from", dest="from_file", default=None,
                     metavar="FILE", help="re-analyze an exported JSON code")
    _add_system_flags(sp, required=False)
    _add_field_flags(sp, required=False)
    sp.add_argument("--index", type=int, default=None)
    sp.add_argument("--s", type=int, default=None)
    sp.add_argument("--slots", type=_slots, default=None)
    _add_analysis_flags(sp)
    _add_common(sp)
    sp.set_defaults(func=cmd_distance)

    sp = subs.add_parser("griesmer", help="Griesmer bound check")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    _add_common(sp)
    sp.set_defaults(func=cmd_griesmer)

    sp = subs.add_parser("verify-paper",
                         help="check computed values against the published "
                         "reference values and list errata")
    sp.add_argument("--cap", type=int, default=DEFAULT_CAP)
    _add_common(sp)
    sp.set_defaults(func=cmd_verify_paper)

    sp = subs.add_parser("export", help="emit a code as a JSON document")
    sp.add_argument("--from", dest="from_file", default=None,
                    metavar="FILE", help="re-export a previously exported code")
    _add_system_flags(sp, required=False)
    _add_field_flags(sp, required=False)
    sp.add_argument("--index", type=int, default=None)
    sp.add_argument("--s", type=int, default=None)
    sp.add_argument("--slots", type=_slots, default=None)
    sp.add_argument("--skip-distance", action="store_true",
                    help="omit the distance report")
    sp.add_argument("--out", default=None, metavar="FILE",
                    help="write to a file instead of stdout")
    _add_analysis_flags(sp)
    _add_common(sp)
    sp.set_defaults(func=cmd_export)

    return parser


def _validate_source(args):
    if not hasattr(args, "from_file"):
        return
    if args.from_file:
        return
    for name in ("p", "m", "q", "family"):
        if getattr(args, name, None) is None:
            raise MadicError(f"--{name} is required unless --from is given")
    if args.slots is not None:
        if args.s is None:
            raise MadicError("--slots requires --s")
    elif args.index is None:
        raise MadicError(
            "give --index (field code), --s/--slots (ring code) or --from")


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _validate_source(args)
        payload, lines = args.func(args)
    except TooLarge as exc:
        print(f"error: TooLarge: {exc}", file=sys.stderr)
        return 2
    except (MadicError, ValueError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if args.output == "json":
        json.dump(payload, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        sys.stdout.write("\n".join(lines) + "\n")
    return 0 if payload.get("ok", True) else 1


if __name__ == "__main__":
    sys.exit(main())
