"""Command-line front end.

Every verb prints one human-readable line per check and can write a JSON
report with ``--json PATH`` (``-`` for stdout).  Exit status: 0 when every
hard check passes, 1 on any hard failure, 2 on usage or internal errors.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
import time
import traceback
from fractions import Fraction

from . import __version__
from .exactnum import parse, render
from .polyring import DEFAULT_TERM_CAP, set_term_cap

SCHEMA_VERSION = 1
DEFAULT_SEED = 20240601


def _fmt(x) -> str:
    if x is None:
        return "null"
    try:
        return render(x)
    except (TypeError, AttributeError, ValueError):
        return str(x)


def _result(id_: str, family: str, status: str, anchor: str, elapsed_ms: float = 0.0, **extra) -> dict:
    out = {"id": id_, "family": family, "status": status, "anchor": anchor, "elapsed_ms": round(elapsed_ms, 3)}
    out.update({k: v for k, v in extra.items() if v is not None})
    return out


def _timed(fn, *args, **kw):
    t0 = time.perf_counter()
    value = fn(*args, **kw)
    return value, (time.perf_counter() - t0) * 1000


# ---------------------------------------------------------------------------
# verbs


def cmd_verify(args) -> tuple[list[dict], dict]:
    from .identities import run_catalog, select

    if not select(args.catalog, True):
        print(f"warning: no catalog entries match {args.catalog!r}", file=sys.stderr)
        return [], {}
    methods = ["expand", "random"] if args.method == "both" else [args.method]
    results = []
    for method in methods:
        for r in run_catalog(args.catalog, method=method, seed=args.seed, count=args.points, include_heavy=not args.light):
            row = r.to_json(timing=True)
            if len(methods) > 1:
                row["method"] = method
            results.append(row)
    return results, {}


def cmd_forms(args) -> tuple[list[dict], dict]:
    from .forms import build, get_form, list_forms

    names = [args.name] if args.name else [f.name for f in list_forms(args.space)]
    rows = []
    for name in names:
        fd = get_form(name)
        row = {"name": fd.name, "space": fd.space, "degree": fd.degree, "anchor": fd.anchor}
        if args.expand:
            poly = build(name)
            row["terms"] = poly.num_terms()
            row["text"] = poly.to_text()
        rows.append(row)
        print(f"{fd.name:14s} {fd.space:6s} deg {fd.degree:3d}  {fd.anchor}")
    return [], {"forms": rows}


def cmd_group(args) -> tuple[list[dict], dict]:
    from . import groups as G

    gs = G.get_genset(args.name)
    results = []
    rels, ms = _timed(G.verify_matrix_relations, gs)
    for rel in rels:
        results.append(_result(f"{gs.name}:{rel['relation']}", "GR", rel["status"], gs.anchor, ms / max(len(rels), 1)))
    data: dict = {"name": gs.name, "dim": gs.dim, "generators": {k: m.to_text() for k, m in gs.gens.items()}}
    modes = ["matrix", "projective"] if args.mode == "both" else [args.mode]
    for mode in modes:
        try:
            gc, ms = _timed(G.closure, gs, mode, args.cap)
        except G.ClosureCapExceeded as exc:
            data[f"{mode}_order"] = None
            data[f"{mode}_note"] = str(exc)
            continue
        data[f"{mode}_order"] = gc.order
        if mode == "matrix":
            data["center_order"] = G.center_order(gc, list(gs.gens.values()))
            data["scalar_subgroup_order"] = G.scalar_subgroup_order(gc)
            if args.integrality:
                rep = G.integrality_report(gc)
                data["all_integral_det_trace"] = all(r["integral"] for r in rep)
    if args.expect is not None:
        got = data.get(f"{modes[-1]}_order")
        results.append(
            _result(
                f"{gs.name}:order",
                "GR",
                "pass" if got == args.expect else "fail",
                gs.anchor,
                witness=None if got == args.expect else {"expected": args.expect, "computed": got},
            )
        )
    print(f"{gs.name}: " + ", ".join(f"{k}={v}" for k, v in data.items() if k.endswith("order")))
    return results, {"group": data}


def cmd_lines(args) -> tuple[list[dict], dict]:
    from . import lines27 as L

    rep, ms = _timed(L.report)
    diffs = rep["table_diffs"]
    results = [
        _result("LN-count", "LN", "pass" if len(rep["lines"]) == 27 else "fail", "the 27 lines", ms),
        _result("LN-edges", "LN", "pass" if rep["edge_count"] == 135 else "fail", "incidence graph"),
        _result("LN-double-sixes", "LN", "pass" if rep["double_six_count"] == 36 else "fail", "double sixes"),
        _result("LN-schlafli", "LN", "pass" if rep["schlafli_matches_reference"] else "fail", "Schläfli labels"),
        _result(
            "LN-action-tables",
            "LN",
            "pass" if not any(v for d in (diffs["lines"], diffs["symbols"], diffs["double_six_images"]) for v in d.values()) else "fail",
            "line permutation tables",
        ),
        _result(
            "LN-intersections",
            "LN",
            "pass" if not diffs["intersections_failed"] else "fail",
            "intersection points",
            witness={"failed": diffs["intersections_failed"]} if diffs["intersections_failed"] else None,
        ),
        _result(
            "LN-automorphisms",
            "LN",
            "pass" if all(g["automorphism"] for g in rep["generators"].values()) else "fail",
            "induced permutations preserve incidence",
        ),
        _result(
            "LN-group-order",
            "LN",
            "pass" if rep["group_order"] == 72 else "fail",
            "order of the line-permutation group",
            witness=None if rep["group_order"] == 72 else {"expected": 72, "computed": rep["group_order"]},
        ),
        _result("LN-aut-order", "LN", "pass" if rep["aut_order"] == 51840 else "fail", "automorphisms of the configuration"),
        _result(
            "LN-conjugation",
            "LN",
            "pass" if len(rep["conjugation"]["fixed"]) == 15 else "fail",
            "real lines under complex conjugation",
        ),
    ]
    for r in results:
        r["elapsed_ms"] = 0.0 if r["id"] != "LN-count" else r["elapsed_ms"]
    return results, {"lines": rep if args.report else {k: rep[k] for k in ("edge_count", "double_six_count", "aut_order", "group_order")}}


def _parse_at(text: str | None):
    if not text:
        return None
    vals = []
    for tok in text.split(","):
        tok = tok.strip()
        try:
            vals.append(Fraction(tok))
        except ValueError:
            vals.append(parse(tok))
    return vals


def cmd_curve(args) -> tuple[list[dict], dict]:
    from . import elliptic as EL

    at = _parse_at(args.at)
    data: dict = {"which": args.which, "op": args.op, "at": [_fmt(v) for v in at] if at else None}
    results = []
    if args.which in ("E1t", "hessfam"):
        if args.op != "j":
            raise SystemExit(f"curve {args.which}: only --op j is available")
        if args.which == "E1t":
            from .polyring import get_space

            t = at[0] if at else get_space("t1").gen("t")
            rho = EL._lift(3 * (t + 2)) / EL._lift(t - 1)
            data["j"] = _fmt(EL.hauptmodul_j(rho))
        else:
            from .polyring import get_space

            mu = at[0] if at else get_space("uvwm4").gen("mu")
            data["j"] = _fmt(EL.hessian_j(mu))
        print(f"j = {data['j']}")
        return results, {"curve": data}
    curve, point = EL.named_curve(args.which, at)
    if args.op == "j":
        data["j"] = _fmt(curve.j)
    elif args.op == "disc":
        data["disc"] = _fmt(curve.disc)
    elif args.op.startswith("mul:"):
        m = int(args.op.split(":", 1)[1])
        if point is None:
            raise SystemExit(f"curve {args.which} has no marked point")
        q = EL.scalar_mul(curve, m, point)
        data["point"] = "O" if q.is_infinity else [_fmt(q.x), _fmt(q.y)]
    elif args.op == "lutznagell":
        if args.which != "E" or not at:
            raise SystemExit("lutznagell needs --which E and integer --at z1,z2,z3")
        res = EL.certify_non_torsion([int(v) for v in at])
        data["lutz_nagell"] = res
        results.append(_result("EL-lutz-nagell", "EL", "pass" if res["verdict"] == "not-torsion" else "fail", "Lutz-Nagell test"))
    else:
        raise SystemExit(f"unknown --op {args.op}")
    for k in ("j", "disc", "point"):
        if k in data:
            print(f"{k} = {data[k]}")
    return results, {"curve": data}


def cmd_qseries(args) -> tuple[list[dict], dict]:
    from . import qseries as QS

    checks = ["theta", "delta", "picardfuchs", "rform"] if args.check == "all" else [args.check]
    results = []
    for name in checks:
        if name == "theta":
            r = QS.verify_theta_eisenstein(args.order or 20)
            results.append(r.to_json())
        elif name == "delta":
            n = args.order or 30
            (a, b), ms = _timed(lambda: (QS.delta(n), QS.delta(n, "eisenstein")))
            bad = a.first_mismatch(b)
            results.append(
                _result("QS-delta", "QS", "pass" if bad is None else "fail", "product and Eisenstein forms of Δ", ms, witness=None if bad is None else {"first_mismatch": str(bad)})
            )
        elif name == "picardfuchs":
            results.append(QS.picard_fuchs_residual(args.order or 12).to_json())
        elif name == "rform":
            results.append(QS.picard_fuchs_r_form(args.order or 12).to_json())
        else:
            raise SystemExit(f"unknown check {name}")
    data = {"theta0": QS.coefficients_table(QS.theta_A2(0, 6)), "theta1": QS.coefficients_table(QS.theta_A2(1, 6))}
    return results, {"qseries": data}


def cmd_report(args) -> tuple[list[dict], dict]:
    args.catalog, args.method = "all", "expand"
    results, _ = cmd_verify(args)
    lres, _ = cmd_lines(argparse.Namespace(report=False))
    results += lres
    args.check, args.order = "all", None
    qres, _ = cmd_qseries(args)
    results += qres
    from . import elliptic as EL

    extra = []
    for name, fn in (
        ("EL-hauptmodul", EL.hauptmodul_check),
        ("EL-j-correspondence", EL.j_correspondence_check),
        ("EL-hessian-family", EL.hessian_family_checks),
    ):
        res, ms = _timed(fn)
        extra.append(_result(name, "EL", res["status"], "elliptic battery", ms))
    places, ms = _timed(EL.bad_places_E2t)
    extra.append(_result("EL-kodaira", "EL", "pass" if set(places.values()) == {"I3"} else "fail", "bad fibres", ms, details=places))
    res = EL.certify_non_torsion((1, 2, 3))
    extra.append(_result("EL-lutz-nagell", "EL", "pass" if res["verdict"] == "not-torsion" else "fail", "Lutz-Nagell test"))
    return results + extra, {}


# ---------------------------------------------------------------------------
# driver


def _summary(results: list[dict], strict: bool) -> dict:
    s = {"pass": 0, "fail": 0, "skipped": 0, "report_only_fail": 0}
    for r in results:
        st = r["status"]
        if st == "fail" and r.get("report_only") and not strict:
            s["report_only_fail"] += 1
        elif st in s:
            s[st] += 1
    return s


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", metavar="PATH", help="write the JSON report here ('-' for stdout)")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for every random choice")
    common.add_argument("--strict", action="store_true", help="report-only failures also fail the run")
    common.add_argument("--term-cap", type=int, default=DEFAULT_TERM_CAP, help="maximum terms in any expansion")
    common.add_argument("--order", type=int, default=None, help="truncation order for series checks")
    common.add_argument("--no-timing", action="store_true", help="zero all timings for reproducible output")

    p = argparse.ArgumentParser(prog="invcheck", description="exact verification of invariant-theory identities")
    p.add_argument("--version", action="version", version=f"invcheck {__version__}")
    sub = p.add_subparsers(dest="verb", required=True)

    v = sub.add_parser("verify", parents=[common], help="run catalog identities")
    v.add_argument("--catalog", default="all", help="id, id prefix or family name")
    v.add_argument("--method", choices=["expand", "random", "both"], default="expand")
    v.add_argument("--points", type=int, default=10, help="random points per identity")
    v.add_argument("--light", action="store_true", help="skip heavy entries")

    f = sub.add_parser("forms", parents=[common], help="list registered forms")
    f.add_argument("--space")
    f.add_argument("--name")
    f.add_argument("--expand", action="store_true", help="include the expanded polynomial")

    g = sub.add_parser("group", parents=[common], help="closure and relations of a generator set")
    g.add_argument("--name", default="hessian216")
    g.add_argument("--mode", choices=["matrix", "projective", "both"], default="both")
    g.add_argument("--cap", type=int, default=100_000)
    g.add_argument("--expect", type=int, help="expected order (last mode)")
    g.add_argument("--integrality", action="store_true")

    ln = sub.add_parser("lines", parents=[common], help="27-line configuration")
    ln.add_argument("--report", action="store_true", help="include the full configuration")

    c = sub.add_parser("curve", parents=[common], help="elliptic curve computations")
    c.add_argument("--which", choices=["E", "E1t", "E2t", "deuring", "hessfam"], required=True)
    c.add_argument("--op", default="j", help="j | disc | mul:m | lutznagell")
    c.add_argument("--at", help="comma-separated specialization values")

    q = sub.add_parser("qseries", parents=[common], help="q-expansion checks")
    q.add_argument("--check", choices=["theta", "delta", "picardfuchs", "rform", "all"], default="all")

    r = sub.add_parser("report", parents=[common], help="everything")
    r.add_argument("--points", type=int, default=10)
    r.add_argument("--light", action="store_true")
    return p


_VERBS = {
    "verify": cmd_verify,
    "forms": cmd_forms,
    "group": cmd_group,
    "lines": cmd_lines,
    "curve": cmd_curve,
    "qseries": cmd_qseries,
    "report": cmd_report,
}


def run(argv: list[str] | None = None) -> tuple[int, dict | None]:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (exc.code if isinstance(exc.code, int) else 2), None
    set_term_cap(args.term_cap)
    human = sys.stderr if args.json == "-" else sys.stdout
    try:
        with contextlib.redirect_stdout(human):
            results, extra = _VERBS[args.verb](args)
    except SystemExit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2, None
    except Exception:  # noqa: BLE001 - reported as an internal error
        traceback.print_exc()
        return 2, None
    finally:
        set_term_cap(DEFAULT_TERM_CAP)
    results.sort(key=lambda r: (r["id"], r.get("method", "")))
    if args.no_timing:
        for r in results:
            r["elapsed_ms"] = 0.0
    summary = _summary(results, args.strict)
    report = {
        "schema_version": SCHEMA_VERSION,
        "tool_version": __version__,
        "seed": args.seed,
        "config": {"verb": args.verb, "term_cap": args.term_cap, "strict": args.strict, "order": args.order, "omega": "exp(2*pi*i/3)"},
        "results": results,
        "summary": summary,
        **extra,
    }
    for r in results:
        flag = f" [{r['method']}]" if "method" in r else ""
        flag += " (report-only)" if r.get("report_only") else ""
        print(f"{r['status'].upper():8s} {r['id']}{flag}", file=human)
    if results:
        print(", ".join(f"{k}={v}" for k, v in summary.items()), file=human)
    if args.json:
        text = json.dumps(report, indent=2, sort_keys=False, default=str)
        if args.json == "-":
            print(text)
        else:
            with open(args.json, "w", encoding="utf-8") as fh:
                fh.write(text + "\n")
    return (1 if summary["fail"] else 0), report


def main(argv: list[str] | None = None) -> int:
    code, _ = run(argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
