"""Command-line front end.

Exit codes: 0 success, 1 verification failures found, 2 input or usage error.
Payload goes to stdout (and to ``--out PATH`` when given); diagnostics go
to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from flaggenus.bounds import (
    bound_report,
    ci_genus,
    coeff_A,
    coeff_A_duke,
    extremal_space_genus_P,
    genus_bound_duke,
    genus_bound_G,
    genus_bound_G_tau,
    halphen_H,
    R_const,
    rho,
    speciality_bounds,
)
from flaggenus.classify import classify, theorem2_estimate, threshold_d0
from flaggenus.core import FlagParams, in_p_band, st_split
from flaggenus.errors import FlagGenusError
from flaggenus.hilbert import (
    ci_hilbert,
    ci_speciality,
    cumulative_h_sigma,
    genus_from_hilbert,
    hilbert_profile,
)
from flaggenus.render import approx, cell, jsonable, tree
from flaggenus.verify import CAMPAIGNS, LatticeSpec, run_campaign

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def flatten(obj, prefix=""):
    """Yield ``(dotted_key, leaf)`` pairs of a nested dict/list payload."""
    if isinstance(obj, dict):
        for k, v in obj.items():
            yield from flatten(v, f"{prefix}{k}.")
    elif isinstance(obj, (list, tuple)) and obj and all(isinstance(v, dict) for v in obj):
        for i, v in enumerate(obj):
            yield from flatten(v, f"{prefix}{i}.")
    else:
        yield prefix[:-1], obj


def _approximations(pairs, digits):
    return {k: approx(v, digits) for k, v in pairs if isinstance(v, Fraction)}


def render_record(payload: dict, fmt: str, digits=None) -> str:
    """One-object payloads: JSON object, single-row CSV, or ``key = value`` lines."""
    pairs = list(flatten(payload))
    if fmt == "json":
        doc = jsonable(payload)
        if digits is not None:
            doc["approximate"] = {"note": f"decimal, {digits} digits, round-half-even",
                                  **_approximations(pairs, digits)}
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        header, row = [], []
        for k, v in pairs:
            header.append(k)
            row.append(cell(v))
            if digits is not None and isinstance(v, Fraction):
                header.append(f"{k}~approx")
                row.append(approx(v, digits))
        return _csv([header, row])
    lines = []
    for k, v in pairs:
        text = cell(v) if v is not None else "-"
        if digits is not None and isinstance(v, Fraction):
            text += f"  (~{approx(v, digits)}, approximate)"
        lines.append(f"{k} = {text}")
    return "\n".join(lines) + "\n"


def render_rows(header: list[str], rows: list[list], fmt: str, digits=None, extra=None) -> str:
    """Tabular payloads; ``extra`` is merged into the JSON object."""
    if fmt == "json":
        doc = dict(jsonable(extra or {}))
        doc["columns"] = header
        doc["rows"] = [jsonable(r) for r in rows]
        if digits is not None:
            doc["approximate"] = {
                "note": f"decimal, {digits} digits, round-half-even",
                "rows": [[approx(v, digits) if isinstance(v, Fraction) else None for v in r] for r in rows],
            }
        return json.dumps(doc, indent=2) + "\n"
    out_header = list(header)
    approx_cols = []
    if digits is not None:
        approx_cols = [i for i in range(len(header)) if any(isinstance(r[i], Fraction) for r in rows)]
        out_header += [f"{header[i]}~approx" for i in approx_cols]
    table = [out_header]
    for r in rows:
        line = [cell(v) for v in r]
        line += [approx(r[i], digits) if isinstance(r[i], Fraction) else "" for i in approx_cols]
        table.append(line)
    if fmt == "csv":
        return _csv(table)
    widths = [max(len(line[i]) for line in table) for i in range(len(out_header))]
    text = "\n".join("  ".join(c.rjust(w) for c, w in zip(line, widths)) for line in table) + "\n"
    if extra:
        text = "".join(f"{k} = {cell(v)}\n" for k, v in flatten(extra)) + text
    return text


def _csv(table) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(table)
    return buf.getvalue()


def cmd_bound(args) -> tuple[str, int]:
    d, s, t = args.d, args.s, args.t
    FlagParams(d, s, t)
    report = bound_report(d, s, t)
    payload = {"inputs": {"d": d, "s": s, "t": t}, "bounds": report}
    if s <= t * t - t:
        payload["classification"] = classify(d, s, t)
    else:
        print(f"note: s>t^2-t (s={s}, t={t}); classification not computed", file=sys.stderr)
        payload["classification"] = None
    e1, e2 = speciality_bounds(d, s, t)
    payload["speciality"] = {"e1": e1, "e2": e2}
    if in_p_band(s, t):
        payload["ci_genus"] = ci_genus(d, s, t) if d % s == 0 else None
        payload["theorem2"] = theorem2_estimate(d, s, t) if d > s**4 else None
    return render_record(tree(payload), args.format, args.decimal), EXIT_OK


def cmd_hilbert(args) -> tuple[str, int]:
    s, t = args.s, args.t
    profile = hilbert_profile(s, t)
    P = genus_from_hilbert(s, t)
    _, beta = st_split(s, t)
    n_max = profile.stabilization_index
    ci = None
    if args.d is not None:
        d = args.d
        m = d // s - 1 if d % s == 0 else None
        if m is None or m < 0:
            raise UsageError(f"d must be a positive multiple of s (d={d}, s={s})")
        n_max = max(n_max, 2 * t - 4 + m)
        ci = {"d": d, "m": m, "speciality": ci_speciality(d, s, t), "genus": ci_genus(d, s, t)}
    header = ["n", "h", "h_sigma"] + (["h_B'"] if ci else [])
    rows = []
    for n in range(n_max + 1):
        row = [n, profile.h(n), cumulative_h_sigma(s, t, n)]
        if ci:
            row.append(ci_hilbert(ci["d"], s, t, n))
        rows.append(row)
    extra = {
        "s": s, "t": t, "nu": profile.nu, "caractere": list(profile.caractere),
        "stabilization_index": profile.stabilization_index, "P": P, "H": halphen_H(s, t),
        "beta": beta,
    }
    if ci:
        extra["ci"] = ci
    if args.format == "csv":
        return render_rows(header, rows, "csv"), EXIT_OK
    return render_rows(header, rows, args.format, args.decimal, extra=extra), EXIT_OK


def _interval(lo, hi, name):
    if lo is None and hi is None:
        return None
    if lo is None or hi is None:
        raise UsageError(f"{name} needs both a minimum and a maximum")
    if lo > hi:
        raise UsageError(f"{name} range is empty ({lo}>{hi})")
    return (lo, hi)


def cmd_verify(args) -> tuple[str, int]:
    _, default = CAMPAIGNS[args.campaign]
    t_lo = args.t_min if args.t_min is not None else default.t_range[0]
    t_hi = args.t_max if args.t_max is not None else default.t_range[1]
    if t_lo < 3 or t_lo > t_hi:
        raise UsageError(f"t range must be nonempty with t>=3 (got {t_lo}..{t_hi})")
    s_range = _interval(args.s_min, args.s_max, "s")
    if s_range is None:
        s_range = default.s_range
    spec = LatticeSpec(
        t_range=(t_lo, t_hi),
        s_range=s_range,
        epsilon_range=_interval(args.eps_min, args.eps_max, "epsilon"),
        d_values=tuple(args.d) if args.d else None,
    )
    report = run_campaign(args.campaign, spec)
    print(
        f"{report.campaign}: {'PASS' if report.passed else 'FAIL'} "
        f"points={report.points_checked} checks={report.checks} "
        f"failures={len(report.failures)} observations={len(report.observations)}",
        file=sys.stderr,
    )
    code = EXIT_OK if report.passed else EXIT_FAIL
    doc = report.to_dict()
    if args.format == "json":
        return json.dumps(doc, indent=2) + "\n", code
    header = ["record", "relation", "t", "s", "epsilon", "d", "detail"]
    rows = [["summary", "", "", "", "", "",
             f"passed={doc['passed']} points={doc['points_checked']} checks={doc['checks']}"]]
    for f in doc["failures"]:
        rows.append(["failure", f["relation"], *(f["inputs"].get(k) for k in ("t", "s", "epsilon", "d")),
                     json.dumps(f["witnessed"], sort_keys=True)])
    for o in doc["observations"]:
        rows.append(["observation", o["kind"], *(o["inputs"].get(k) for k in ("t", "s", "epsilon", "d")),
                     o["detail"]])
    for k, v in doc["statistics"].items():
        rows.append(["statistic", k, *(v["at"].get(x) for x in ("t", "s", "epsilon", "d")), v["value"]])
    return render_rows(header, rows, args.format), code


def _col(fn, needs_d=True):
    return fn, needs_d


def _tau(s, t):
    return st_split(s, t)[0] + 1


TABLE_COLUMNS = {
    "G": _col(lambda d, s, t: genus_bound_G(d, s, t)),
    "G_tau": _col(lambda d, s, t: genus_bound_G_tau(d, s, t)),
    "G_duke": _col(lambda d, s, t: genus_bound_duke(d, s)),
    "H": _col(lambda d, s, t: halphen_H(s, t), False),
    "H_tau": _col(lambda d, s, t: halphen_H(s, _tau(s, t)), False),
    "P": _col(lambda d, s, t: extremal_space_genus_P(s, t), False),
    "rho": _col(lambda d, s, t: rho(s, t, (d - 1) % s)[0]),
    "rho_p": _col(lambda d, s, t: rho(s, _tau(s, t), (d - 1) % s)[0]),
    "R": _col(lambda d, s, t: R_const(s, (d - 1) % s)[0]),
    "A": _col(lambda d, s, t: coeff_A(s, t), False),
    "A_p": _col(lambda d, s, t: coeff_A(s, _tau(s, t)), False),
    "A_pp": _col(lambda d, s, t: coeff_A_duke(s), False),
    "e1": _col(lambda d, s, t: speciality_bounds(d, s, t)[0]),
    "e2": _col(lambda d, s, t: speciality_bounds(d, s, t)[1]),
    "ci_genus": _col(lambda d, s, t: ci_genus(d, s, t)),
    "ci_speciality": _col(lambda d, s, t: ci_speciality(d, s, t)),
    "case": _col(lambda d, s, t: classify(d, s, t).theorem1_case),
    "bound": _col(lambda d, s, t: classify(d, s, t).bound_value),
    "d0": _col(lambda d, s, t: threshold_d0(s, t)[0], False),
}


def cmd_table(args) -> tuple[str, int]:
    var = args.vary
    fixed = {"d": args.d, "s": args.s, "t": args.t, "eps": None}
    if var != "eps" and fixed[var] is not None:
        raise UsageError(f"--{var} is both fixed and varied")
    if var == "eps" and args.d is not None:
        raise UsageError("--d is over-constrained when varying eps; give --m instead")
    step = args.step
    if step <= 0:
        raise UsageError("--step must be positive")
    values = list(range(args.start, args.stop + 1, step))
    if not values:
        raise UsageError(f"empty range {args.start}..{args.stop}")
    columns = [c.strip() for c in args.columns.split(",") if c.strip()]
    unknown = [c for c in columns if c not in TABLE_COLUMNS]
    if unknown or not columns:
        raise UsageError(f"unknown columns {unknown}; choose from {sorted(TABLE_COLUMNS)}")
    needs_d = any(TABLE_COLUMNS[c][1] for c in columns)
    rows = []
    for value in values:
        point = dict(fixed)
        point[var] = value
        if var == "eps":
            if args.s is None or args.t is None:
                raise UsageError("varying eps needs --s and --t")
            if not 0 <= value < args.s:
                raise UsageError(f"epsilon must lie in [0, s) (got {value})")
            point["d"] = args.m * args.s + value + 1
        for name in ("s", "t"):
            if point[name] is None:
                raise UsageError(f"missing fixed parameter --{name}")
        if needs_d and point["d"] is None:
            raise UsageError("missing fixed parameter --d (required by the chosen columns)")
        d = point["d"] if point["d"] is not None else 1
        FlagParams(d, point["s"], point["t"])
        row = [value]
        for c in columns:
            try:
                row.append(TABLE_COLUMNS[c][0](d, point["s"], point["t"]))
            except FlagGenusError as exc:
                print(f"note: {c} undefined at {var}={value}: {exc}", file=sys.stderr)
                row.append(None)
        rows.append(row)
    return render_rows([var] + columns, rows, args.format, args.decimal), EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flaggenus",
        description="Genus bounds, Hilbert functions and verification campaigns "
        "for curves in P^4 under a flag condition of type (s,t).",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["human", "csv", "json"], default="human")
    common.add_argument("--decimal", type=int, metavar="K", default=None,
                        help="also show approximate decimals with K digits (round-half-even)")
    common.add_argument("--out", metavar="PATH", help="also write the payload to PATH")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", parents=[common], help="bounds and case label for (d,s,t)")
    for name in ("d", "s", "t"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("hilbert", parents=[common], help="Hilbert profile of the extremal curve")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--d", type=int, help="multiple of s: add the complete-intersection profile")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("verify", parents=[common], help="run a verification campaign")
    p.add_argument("campaign", choices=sorted(CAMPAIGNS))
    p.add_argument("--t-min", type=int)
    p.add_argument("--t-max", type=int)
    p.add_argument("--s-min", type=int)
    p.add_argument("--s-max", type=int)
    p.add_argument("--eps-min", type=int)
    p.add_argument("--eps-max", type=int)
    p.add_argument("--d", type=int, action="append",
                   help="explicit degree (repeatable) instead of threshold+1")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", parents=[common], help="tabulate bounds over one varying parameter")
    p.add_argument("--vary", choices=["d", "s", "t", "eps"], required=True)
    p.add_argument("--from", dest="start", type=int, required=True)
    p.add_argument("--to", dest="stop", type=int, required=True)
    p.add_argument("--step", type=int, default=1)
    p.add_argument("--d", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--m", type=int, default=1, help="with --vary eps: d = m*s + eps + 1")
    p.add_argument("--columns", default="G", help=f"comma list from: {','.join(TABLE_COLUMNS)}")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.decimal is not None and args.decimal < 0:
        parser.error("--decimal must be non-negative")
    try:
        text, code = args.func(args)
    except (FlagGenusError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(text)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
