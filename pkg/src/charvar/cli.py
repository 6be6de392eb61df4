"""Command-line front end: run pipelines, verify, and count over finite fields.

Exit codes: 0 on success, 1 when a computed value disagrees with a frozen
expected value (or an oracle row fails), 2 on internal errors. No report
rows are emitted once an internal error occurs.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import List, Tuple

from . import blocks, reference
from .fforacle import (STRATUM_PREDICATES, UnsupportedField,
                       VerificationFailed, _center_element,
                       commutator_distribution, genus_convolve,
                       trace_stratum_count, verify_table)
from .genus2 import Genus2Monodromy, genus2x1_strata
from .genus3_twisted import TwistedPipeline
from .genus3_untwisted import UntwistedPipeline
from .repring import HMRep

_M1_ROWS = ("e_w1", "e_w2", "e_w3", "e_zbar", "e_w4", "e_zbar_prime",
            "e_w5", "e_w6", "e_w_total", "e_m1")
_M_ROWS = ("e_v0", "e_v1", "e_v2", "e_v3", "r_v4_z2", "e_v4", "e_v_total",
           "e_r1", "e_r2", "e_r3", "e_r4", "e_v_red", "e_m_red", "e_v_irr",
           "e_m_irr", "e_m")


def _run_target(target: str) -> List[Tuple[str, object, int]]:
    """Run one pipeline and return (name, value, elapsed_ms) rows in order."""
    start = time.monotonic()
    if target == "m1":
        p = TwistedPipeline.run()
        values = {name: getattr(p, name) for name in _M1_ROWS}
        order = _M1_ROWS
    elif target == "genus2-monodromy":
        g = Genus2Monodromy.run()
        values = {"r_ybar4": g.r_ybar4, "r_mlambda": g.r_mlambda,
                  "e_y4": g.e_y4, "e_g2x1_w4": genus2x1_strata(),
                  "r_ybar4_z2": g.r_ybar4_z2}
        order = ("r_ybar4", "r_mlambda", "e_y4", "e_g2x1_w4", "r_ybar4_z2")
    elif target == "m":
        u = UntwistedPipeline.run()
        values = {name: getattr(u, name) for name in _M_ROWS if name != "e_v_total"}
        values["e_v_total"] = u.e_v
        order = _M_ROWS
    else:
        raise ValueError("unknown target %r" % target)
    elapsed_ms = int(round((time.monotonic() - start) * 1000))
    return [(name, values[name], elapsed_ms) for name in order]


def _coeff_strings(poly) -> List[str]:
    return [str(c) for c in poly.coeffs]


def _report(name: str, value, elapsed_ms: int, failed: set) -> dict:
    out = {"name": name, "elapsed_ms": elapsed_ms}
    if isinstance(value, HMRep):
        out["kind"] = "monodromy_rep"
        out["characters"] = {label: _coeff_strings(p)
                             for label, p in blocks.rep_to_labels(value).items()}
    else:
        out["kind"] = "polynomial"
        out["coefficients"] = _coeff_strings(value)
    out["citation"] = (reference.citation(name)
                       if reference.has_constant(name) else "")
    if reference.has_constant(name):
        out["expected_match"] = name not in failed
    return out


def canonical_json(payload: dict) -> str:
    """The one serialization everything agrees on, so output round-trips."""
    return json.dumps(payload, sort_keys=True, indent=2)


def _render_text(report: dict, value) -> str:
    status = ""
    if "expected_match" in report:
        status = "  [%s]" % ("match" if report["expected_match"] else "MISMATCH")
    if report["kind"] == "polynomial":
        return "%s: %s%s" % (report["name"], value, status)
    lines = ["%s:%s" % (report["name"], status)]
    for label, poly in blocks.rep_to_labels(value).items():
        lines.append("  %s: %s" % (label, poly))
    return "\n".join(lines)


def compute_reports(target: str) -> Tuple[List[dict], List[Tuple[str, object]], set]:
    """Build StratumReport dicts for a target; also return raw rows."""
    targets = ["m1", "genus2-monodromy", "m"] if target == "all" else [target]
    with reference.collecting() as col:
        rows = []
        for t in targets:
            rows.extend(_run_target(t))
    failed = {f.name for f in col.failures}
    reports = [_report(name, value, ms, failed) for name, value, ms in rows]
    return reports, [(name, value) for name, value, _ in rows], failed


def _cmd_compute(args) -> int:
    reports, rows, failed = compute_reports(args.target)
    if args.format == "json":
        print(canonical_json({"version": 1, "reports": reports}))
    else:
        for report, (_, value) in zip(reports, rows):
            print(_render_text(report, value))
    return 1 if failed else 0


def _cmd_verify(args) -> int:
    if args.paper:
        with reference.collecting() as col:
            TwistedPipeline.run()
            Genus2Monodromy.run()
            genus2x1_strata()
            UntwistedPipeline.run()
        # pipelines recompute shared strata, so the same constant can be
        # checked (and fail) more than once; report each name only once
        distinct = {}
        for failure in col.failures:
            distinct.setdefault(failure.name, failure)
        for failure in distinct.values():
            print("MISMATCH %s: got %s, want %s"
                  % (failure.name, failure.got, failure.want))
        print("%d frozen constants checked, %d mismatches"
              % (len(col.checked), len(distinct)))
        return 1 if distinct else 0
    q_list = [int(part) for part in args.oracle.split(",") if part]
    try:
        rows = verify_table(q_list)
    except VerificationFailed as exc:
        for row in exc.rows:
            print("FAIL q=%-3d %-16s expected=%d count=%d"
                  % (row["q"], row["name"], row["expected"], row["count"]))
        return 1
    for row in rows:
        status = "ok" if row["asserted"] else "recorded"
        note = "" if row["match"] else " (differs)"
        print("%-8s q=%-3d %-16s expected=%-20d count=%-20d%s"
              % (status, row["q"], row["name"], row["expected"],
                 row["count"], note))
    return 0


def _cmd_count(args) -> int:
    if args.trace_stratum is not None:
        print(trace_stratum_count(args.q, args.genus, args.center,
                                  args.trace_stratum))
        return 0
    n1 = commutator_distribution(args.q)
    dist = genus_convolve(n1, args.genus)
    print(dist[_center_element(args.q, args.center)])
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="charvar",
        description="Exact E-polynomial pipelines for rank-2 character "
                    "varieties, with finite-field cross-checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser(
        "compute", help="run a pipeline and report every named value")
    p_compute.add_argument("--target", required=True,
                           choices=("m1", "m", "genus2-monodromy", "all"))
    p_compute.add_argument("--format", default="text",
                           choices=("json", "text"))
    p_compute.set_defaults(func=_cmd_compute)

    p_verify = sub.add_parser(
        "verify", help="check frozen constants or finite-field counts")
    group = p_verify.add_mutually_exclusive_group(required=True)
    group.add_argument("--paper", action="store_true",
                       help="recompute every pipeline, list all mismatches")
    group.add_argument("--oracle", metavar="Q1,Q2,...",
                       help="compare counts over SL(2,F_q) for these primes")
    p_verify.set_defaults(func=_cmd_verify)

    p_count = sub.add_parser(
        "count", help="count commutator-product solutions over SL(2,F_q)")
    p_count.add_argument("--q", type=int, required=True)
    p_count.add_argument("--genus", type=int, required=True, choices=(1, 2, 3))
    p_count.add_argument("--center", required=True, choices=("id", "minus-id"))
    p_count.add_argument("--trace-stratum", dest="trace_stratum",
                         choices=tuple(STRATUM_PREDICATES))
    p_count.set_defaults(func=_cmd_count)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (reference.ReferenceMismatch, VerificationFailed) as exc:
        print("verification failed: %s" % exc, file=sys.stderr)
        return 1
    except UnsupportedField as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except Exception as exc:  # NonzeroRemainder, SelfCheckFailed, ...
        print("internal error: %s: %s" % (type(exc).__name__, exc),
              file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
