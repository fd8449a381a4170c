"""Command-line front end.

Subcommands: analyze | bound | delay | verify | language | seeds.
Exit codes: 0 success, 1 analysis negative (a counterexample or a failed
delay search is still a valid run), 2 input error, 3 resource cap exceeded.

JSON output is deterministic: keys sorted, big integers as decimal strings,
logarithmic values as {"log10": float, "expr": str} with floats rounded to
12 significant digits.  Every heuristic verdict in a report is paired with
a warning entry.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass, fields
from pathlib import Path

from .bignum import big_str, digits10
from .errors import CapExceeded, InputError, NotAperiodicError
from .fixedpoint import build_window
from .language import (
    aperiodicity_check,
    complexity,
    factor_language,
    power_free_index,
    recurrence_constant_empirical,
)
from .morphism import (
    Morphism,
    admissible_seeds,
    default_seed_power_cap,
    incidence_matrix,
    is_primitive,
    parse_morphism,
)
from .recognizability import (
    BigValue,
    BoundBreakdown,
    certified_constants,
    closed_form_bound,
    exact_ratio_constant,
    injectivity_exponent,
    klouda_medkova_bound,
    minimal_constant_empirical,
    recognizability_bound,
    synchronizing_delay,
    verify_constant,
)

DEFAULT_RADIUS = 1000
DEFAULT_MAX_DELAY = 24
DEFAULT_N_REPORT = 16
DEFAULT_L_MAX = 16
FULL_PRINT_DIGITS = 80


def _round_float(x: float) -> float:
    return float(f"{x:.12g}")


def _big(x: int) -> str:
    return big_str(x)


def _fmt_big_human(x: int) -> str:
    s = big_str(x)
    if len(s) <= FULL_PRINT_DIGITS:
        return s
    return f"<{len(s)} digits, leading {s[:12]}...>"


def _big_value_json(v: BigValue):
    if v.exact is not None:
        return _big(v.exact)
    return {"expr": v.expr, "log10": _round_float(v.log10)}


def _breakdown_json(b: BoundBreakdown) -> dict:
    out = {
        "mode": b.mode,
        "N": _big(b.N),
        "k": _big(b.k),
        "K": str(b.K),
        "d": b.d,
        "R": _big(b.R),
        "Q": _big(b.Q),
        "M": _big_value_json(b.M),
        "bound": _big_value_json(b.bound),
        "log10": _round_float(b.bound.log10),
        "warnings": list(b.warnings),
    }
    if b.bound.exact is not None:
        out["digits"] = digits10(b.bound.exact)
    return out


@dataclass
class AnalysisReport:
    """Plain-data report: every field is already JSON-shaped, so the
    round trip parse(emit(report)) == report is exact."""

    alphabet: list
    rules: list
    primitive: dict
    seeds: dict
    constants: dict
    complexity: list
    delay: dict
    empirical: dict | None
    bounds: dict
    warnings: list


def emit_report(report: AnalysisReport, as_json: bool) -> str:
    if as_json:
        return json.dumps(asdict(report), sort_keys=True, indent=2)
    return _human_report(report)


def report_from_json(text: str) -> AnalysisReport:
    data = json.loads(text)
    names = {f.name for f in fields(AnalysisReport)}
    if set(data) != names:
        raise InputError(f"report keys {sorted(data)} do not match schema")
    return AnalysisReport(**data)


def _human_report(report: AnalysisReport) -> str:
    lines = []
    lines.append("morphism")
    for rule in report.rules:
        lines.append(f"  {rule}")
    prim = report.primitive
    lines.append(f"primitive            {prim['is']}" + (
        f" (witness power {prim['witness']})" if prim["is"] else ""))
    if report.seeds["pairs"]:
        pairs = ", ".join(f"{a}.{b}" for a, b in report.seeds["pairs"])
        lines.append(f"seeds                power {report.seeds['power']}: {pairs}")
    else:
        lines.append("seeds                none found")
    lines.append("constants")
    for key in ("widest", "narrowest", "N", "k", "K_emp", "K_cert", "d", "d_safe"):
        value = report.constants.get(key)
        if value is None:
            continue
        shown = _fmt_big_human(int(value)) if isinstance(value, str) and value.isdigit() else value
        lines.append(f"  {key:<18} {shown}")
    lines.append(f"complexity p(1..)    {' '.join(str(p) for p in report.complexity)}")
    delay = report.delay
    if delay.get("C") is not None:
        lines.append(f"delay                C={delay['C']}  L_from_C={delay['L_from_C']}")
    else:
        lines.append(f"delay                none up to n={delay.get('n_max')}")
    if report.empirical is not None:
        emp = report.empirical
        heuristic = emp["L_heuristic"] if emp["L_heuristic"] is not None else "none"
        lines.append(
            f"empirical constant   lower {emp['L_lower']}, heuristic {heuristic}"
            f" (radius {emp['radius']})"
        )
    for name, payload in sorted(report.bounds.items()):
        if isinstance(payload, dict):
            value = payload.get("bound", payload.get("value"))
            shown = (
                _fmt_big_human(int(value))
                if isinstance(value, str)
                else f"~10^{payload['log10']} ({value['expr'] if isinstance(value, dict) else ''})"
            )
            lines.append(f"bound {name:<20} {shown}")
        else:
            lines.append(f"bound {name:<20} {payload}")
    lines.append("warnings")
    for w in report.warnings:
        lines.append(f"  - {w}")
    if not report.warnings:
        lines.append("  (none)")
    return "\n".join(lines)


def analyze(
    m: Morphism,
    radius: int = DEFAULT_RADIUS,
    max_delay: int = DEFAULT_MAX_DELAY,
    n_report: int = DEFAULT_N_REPORT,
    safe_d: bool = False,
) -> AnalysisReport:
    warnings: list[str] = []
    alphabet = [letter.display for letter in m.letters]
    rules = m.rules_text().splitlines()
    prim = is_primitive(incidence_matrix(m))
    primitive = {"is": prim.primitive, "witness": prim.witness}

    if not prim.primitive:
        warnings.append("morphism is not primitive; analysis limited to the matrix")
        return AnalysisReport(
            alphabet, rules, primitive,
            {"power": None, "pairs": []},
            {"widest": str(m.widest), "narrowest": str(m.narrowest)},
            [], {"C": None, "L_from_C": None, "n_max": 0, "failures": []},
            None, {}, warnings,
        )

    seeds = admissible_seeds(m)
    seeds_json = {
        "power": seeds[0].power if seeds else None,
        "pairs": [[m.decode(s.left), m.decode(s.right)] for s in seeds],
    }
    if not seeds:
        warnings.append(
            f"no admissible seed up to the power cap {default_seed_power_cap(m)}"
        )

    screening = aperiodicity_check(m)
    if screening.periodic:
        warnings.append(f"fixed point is periodic with period {screening.period}")
    else:
        warnings.append(f"aperiodicity screened to n={screening.n_max}, not proven")

    chain = injectivity_exponent(m)
    certs = certified_constants(m)
    constants = {
        "widest": str(m.widest),
        "narrowest": str(m.narrowest),
        "K_cert": _big(certs.K_cert),
        "d": chain.d,
        "d_safe": chain.d_safe,
    }
    if not screening.periodic:
        n_exact, n_warnings = exact_ratio_constant(m)
        warnings.extend(n_warnings)
        constants["N"] = _big(n_exact)
        pf = power_free_index(m)
        constants["k"] = str(pf.k) if pf.kind == "bounded" else pf.kind
        k_emp = recurrence_constant_empirical(m, 4)
        constants["K_emp"] = str(k_emp.ratio)
        warnings.append("K_emp is a lower bound from a length-4 scan")

    lang_profile = [complexity(m, n) for n in range(1, n_report + 1)]

    delay = synchronizing_delay(m, max_delay)
    delay_json = {
        "C": delay.delay,
        "L_from_C": delay.L_from_C,
        "n_max": delay.n_max,
        "failures": [[n, [m.decode(u) for u in bad]] for n, bad in delay.per_length if bad],
    }
    if delay.screened_periodic:
        warnings.append("delay search skipped: periodic fixed points are never circular")
    elif delay.delay is None:
        warnings.append(f"no synchronizing delay up to n={delay.n_max}")

    empirical = None
    if seeds:
        window = build_window(m, seeds[0], radius)
        result = minimal_constant_empirical(window, 1, DEFAULT_L_MAX)
        empirical = {
            "L_lower": result.certified_lower,
            "L_heuristic": result.heuristic,
            "radius": radius,
            "level": 1,
        }
        if result.heuristic is None:
            warnings.append(
                f"no recognizability constant up to L={DEFAULT_L_MAX} on the window"
            )
        else:
            warnings.append("heuristic constant is window-relative")

    bounds: dict = {}
    if not screening.periodic:
        for key, mode in (("maindetail", "empirical_exact"), ("maindetail_certified", "certified")):
            breakdown = recognizability_bound(m, mode, safe_d=safe_d)
            bounds[key] = _breakdown_json(breakdown)
        cf = closed_form_bound(m)
        bounds["closed_form"] = {
            "base": cf.base,
            "exponent": _big(cf.exponent),
            "addend_power": cf.addend_power,
            "value": _big_value_json(cf.value),
            "log10": _round_float(cf.value.log10),
        }
        if m.size == 2 and len(set(len(im) for im in m.images)) == 1 and m.widest >= 2:
            bounds["klouda_medkova"] = klouda_medkova_bound(m.widest)
    else:
        warnings.append("bounds undefined: the fixed point is periodic")

    return AnalysisReport(
        alphabet, rules, primitive, seeds_json, constants,
        lang_profile, delay_json, empirical, bounds, warnings,
    )


def _load(path: str) -> Morphism:
    return parse_morphism(Path(path).read_text(encoding="utf-8"))


def _emit_json(payload, out):
    print(json.dumps(payload, sort_keys=True, indent=2), file=out)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="subrec",
        description="Recognizability and circularity analysis for primitive substitutions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--radius", type=int, default=DEFAULT_RADIUS)
    p.add_argument("--max-delay", type=int, default=DEFAULT_MAX_DELAY)
    p.add_argument("--safe-d", action="store_true")

    p = sub.add_parser("bound", help="recognizability bound breakdown")
    p.add_argument("file")
    p.add_argument("--mode", choices=["empirical", "certified"], required=True)
    p.add_argument("--safe-d", action="store_true")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("delay", help="synchronizing delay search")
    p.add_argument("file")
    p.add_argument("--max", type=int, default=DEFAULT_MAX_DELAY)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="window check of one constant")
    p.add_argument("file")
    p.add_argument("--L", type=int, required=True)
    p.add_argument("--level", type=int, default=1)
    p.add_argument("--radius", type=int, default=DEFAULT_RADIUS)
    p.add_argument("--max-letters", type=int, default=None, help="window size cap")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("language", help="factor set of one length")
    p.add_argument("file")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("seeds", help="admissible fixed-point seeds")
    p.add_argument("file")
    p.add_argument("--max-power", type=int, default=None)
    p.add_argument("--json", action="store_true")
    return parser


def _cmd_analyze(args, out) -> int:
    report = analyze(
        _load(args.file),
        radius=args.radius,
        max_delay=args.max_delay,
        safe_d=args.safe_d,
    )
    print(emit_report(report, args.json), file=out)
    return 0


def _cmd_bound(args, out) -> int:
    m = _load(args.file)
    mode = "empirical_exact" if args.mode == "empirical" else "certified"
    breakdown = recognizability_bound(m, mode, safe_d=args.safe_d)
    if args.json:
        _emit_json({"maindetail": _breakdown_json(breakdown)}, out)
    else:
        print(
            f"mode={breakdown.mode} N={breakdown.N} k={breakdown.k} d={breakdown.d} "
            f"R={breakdown.R} Q={_fmt_big_human(breakdown.Q)}",
            file=out,
        )
        if breakdown.bound.exact is not None:
            print(f"bound = {_fmt_big_human(breakdown.bound.exact)}", file=out)
        else:
            print(f"bound ~ 10^{_round_float(breakdown.bound.log10)} ({breakdown.bound.expr})", file=out)
        for w in breakdown.warnings:
            print(f"warning: {w}", file=out)
    return 0


def _cmd_delay(args, out) -> int:
    m = _load(args.file)
    result = synchronizing_delay(m, args.max)
    failures = [[n, [m.decode(u) for u in bad]] for n, bad in result.per_length if bad]
    if args.json:
        _emit_json(
            {
                "C": result.delay,
                "L_from_C": result.L_from_C,
                "n_max": result.n_max,
                "failures": failures,
                "screened_periodic": result.screened_periodic,
            },
            out,
        )
    elif result.delay is not None:
        print(f"C={result.delay} L_from_C={result.L_from_C}", file=out)
    else:
        reason = "periodic fixed point" if result.screened_periodic else "not reached"
        print(f"C=none up to n={result.n_max} ({reason})", file=out)
    return 0 if result.delay is not None else 1


def _cmd_verify(args, out) -> int:
    m = _load(args.file)
    seeds = admissible_seeds(m)
    if not seeds:
        raise InputError("no admissible seed; cannot build a window")
    window = build_window(
        m, seeds[0], args.radius, min_level=args.level, max_letters=args.max_letters
    )
    result = verify_constant(window, args.L, args.level)
    if args.json:
        payload = {"ok": result.ok, "L": args.L, "level": args.level, "radius": args.radius}
        if result.counterexample is not None:
            ce = result.counterexample
            payload["counterexample"] = {
                "preimage_index": ce.preimage_index,
                "cut_position": ce.cut_position,
                "position": ce.position,
                "kind": ce.kind,
            }
        _emit_json(payload, out)
    elif result.ok:
        print(f"ok: no counterexample for L={args.L} at level {args.level} (window-relative)", file=out)
    else:
        ce = result.counterexample
        print(
            f"counterexample: position {ce.position} matches the context of cut "
            f"{ce.cut_position} (preimage index {ce.preimage_index}) but {ce.kind.replace('_', ' ')}",
            file=out,
        )
    return 0 if result.ok else 1


def _cmd_language(args, out) -> int:
    m = _load(args.file)
    words = sorted(m.decode(w) for w in factor_language(m, args.n).words)
    if args.json:
        _emit_json({"n": args.n, "count": len(words), "words": words}, out)
    else:
        print(f"p({args.n}) = {len(words)}", file=out)
        print(" ".join(words), file=out)
    return 0


def _cmd_seeds(args, out) -> int:
    m = _load(args.file)
    seeds = admissible_seeds(m, args.max_power)
    pairs = [[m.decode(s.left), m.decode(s.right)] for s in seeds]
    if args.json:
        _emit_json(
            {"power": seeds[0].power if seeds else None, "pairs": pairs}, out
        )
    elif seeds:
        print(f"power {seeds[0].power}: " + ", ".join(f"{a}.{b}" for a, b in pairs), file=out)
    else:
        print("no admissible seeds up to the power cap", file=out)
    return 0


_COMMANDS = {
    "analyze": _cmd_analyze,
    "bound": _cmd_bound,
    "delay": _cmd_delay,
    "verify": _cmd_verify,
    "language": _cmd_language,
    "seeds": _cmd_seeds,
}


def run(argv: list[str], out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return _COMMANDS[args.command](args, out)
    except CapExceeded as exc:
        print(f"subrec: cap exceeded: {exc}", file=err)
        return 3
    except NotAperiodicError as exc:
        print(f"subrec: {exc}", file=err)
        return 1
    except (InputError, OSError) as exc:
        print(f"subrec: {exc}", file=err)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))
