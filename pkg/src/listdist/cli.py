"""
Command-line interface.

stdout carries JSON only (one object, or JSON lines for ``hunt``); human
readable notes go to stderr with ``-v``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 cap overflow.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time

from listdist import constructive, graphs, labeling, listnum, suites
from listdist.errors import CapExceededError, GraphParseError, ListDistError
from listdist.labeling import Predicate

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

log = logging.getLogger("listdist")

PRED_KEYS = {
    Predicate.DISTINGUISHING: ("distinguishing", "D", "D_l"),
    Predicate.PROPER: ("proper", "chi", "chi_l"),
    Predicate.PROPER_DISTINGUISHING: ("proper_distinguishing", "chi_D", "chi_Dl"),
}


class UsageError(Exception):
    pass


def _emit(obj, out=None):
    out = out or sys.stdout
    out.write(json.dumps(obj) + "\n")
    out.flush()


def _error(kind: str, message: str, code: int) -> int:
    _emit({"error": {"type": kind, "message": message}})
    return code


def _read_input(path: str | None) -> str:
    if path in (None, "-"):
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _load_graph(args) -> graphs.Graph:
    if getattr(args, "family", None):
        name, _, params = args.family.partition(":")
        try:
            nums = [int(p) for p in params.split(",") if p]
        except ValueError:
            raise UsageError(f"bad family parameters {params!r}") from None
        try:
            return graphs.generate_family(name, *nums)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    text = _read_input(args.input)
    if args.format == "edges":
        return graphs.parse_edge_list(text)
    lines = [l for l in text.splitlines() if l.strip()]
    if len(lines) != 1:
        raise GraphParseError(f"expected exactly one graph6 line, got {len(lines)}")
    return graphs.parse_graph6(lines[0])


def describe(g: graphs.Graph) -> dict:
    return {"name": g.name, "n": g.order, "edges": len(g.edges), "graph6": graphs.encode_graph6(g)}


# ---------------------------------------------------------------------------
# list-number paths
# ---------------------------------------------------------------------------

def _literal_family(g: graphs.Graph):
    """(family, n) if g is literally friendship(n) or book(n)."""
    if g.order >= 5 and g.order % 2 == 1 and g == graphs.friendship((g.order - 1) // 2):
        return "friendship", (g.order - 1) // 2
    if g.order >= 6 and g.order % 2 == 0 and g == graphs.book((g.order - 2) // 2):
        return "book", (g.order - 2) // 2
    return None


def _constructive_value(g):
    fam = _literal_family(g)
    if fam is None:
        raise UsageError("the constructive path only applies to friendship(n) and book(n)")
    name, n = fam
    if name == "friendship":
        return constructive.friendship_distinguishing_number(n)
    return constructive.book_distinguishing_number(n)


def _list_entry(pred, g, aut, base, path, args) -> dict:
    """Compute one list number along ``path``; raises on cap overflow."""
    entry: dict = {}
    _, _, key = PRED_KEYS[pred]
    if path == "constructive":
        if pred is not Predicate.DISTINGUISHING:
            raise UsageError("the constructive path only covers the distinguishing predicate")
        value = _constructive_value(g)
        entry.update({key: value, "path": "constructive", "agreement": value == base})
        return entry
    values = {}
    m_max = None
    if path in ("direct", "both"):
        values["direct"] = listnum.list_number_direct(pred, g, args.k_max, aut, cap=args.cap).value
    if path in ("characterization", "both"):
        value, reports = listnum.list_number_characterization(pred, g, args.m_max, aut, cap=args.cap)
        values["characterization"] = value
        m_max = reports[-1].m_max if reports else 0
    entry[key] = values.get("direct", values.get("characterization"))
    entry["path"] = path
    entry["agreement"] = len(set(values.values())) == 1
    if len(values) > 1:
        entry["paths"] = values
    if m_max is not None:
        entry["m_max"] = m_max
    return entry


def _auto_list_entry(pred, g, aut, base, args) -> dict:
    for path in ("both", "direct"):
        try:
            return _list_entry(pred, g, aut, base, path, args)
        except CapExceededError as exc:
            log.info("%s list number: %s path over cap (%s)", pred.value, path, exc)
    if pred is Predicate.DISTINGUISHING and _literal_family(g) is not None:
        return _list_entry(pred, g, aut, base, "constructive", args)
    _, _, key = PRED_KEYS[pred]
    return {f"{key}_skipped": "every exact path exceeds --cap"}


def cmd_invariants(args) -> int:
    g = _load_graph(args)
    timing = {}
    t0 = time.perf_counter()
    aut = graphs.automorphisms(g, args.group_cap)
    timing["automorphisms"] = (time.perf_counter() - t0) * 1000
    report = {"graph": describe(g), "aut_order": aut.order}
    list_preds = set() if args.skip_lists else {Predicate.parse(p) for p in args.list_preds.split(",") if p}
    failed = False
    for pred in Predicate:
        section, base_key, _ = PRED_KEYS[pred]
        t0 = time.perf_counter()
        base = labeling.min_labels(pred, g, aut)
        entry = {base_key: base.number, "witness": list(base.witness)}
        failed |= not labeling.satisfies(pred, g, aut, base.witness)
        timing[f"{section}.base"] = (time.perf_counter() - t0) * 1000
        if pred in list_preds:
            t0 = time.perf_counter()
            if args.list_path == "auto":
                entry.update(_auto_list_entry(pred, g, aut, base.number, args))
            else:
                entry.update(_list_entry(pred, g, aut, base.number, args.list_path, args))
            timing[f"{section}.list"] = (time.perf_counter() - t0) * 1000
            failed |= entry.get("agreement") is False
        report[section] = entry
    if args.timing:
        report["timing_ms"] = {k: round(v, 3) for k, v in timing.items()}
    for k, v in timing.items():
        log.info("%-32s %10.1f ms", k, v)
    _emit(report)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_listnum(args) -> int:
    g = _load_graph(args)
    pred = Predicate.parse(args.pred)
    aut = graphs.automorphisms(g, args.group_cap) if pred.distinguishing else None
    base = labeling.min_labels(pred, g, aut)
    out = {"graph": describe(g), "pred": pred.value, "base": base.number, "witness": list(base.witness)}
    values = []
    if args.path in ("direct", "both"):
        k_max = args.k_max if args.k_max is not None else g.order
        res = listnum.list_number_direct(pred, g, k_max, aut, cap=args.cap, stop_at_first_pass=False)
        out["direct"] = {
            "value": res.value,
            "per_k": [{"k": r.k, "pass": r.passed, "representatives": r.representatives,
                       **({"witness": r.witness.to_json()} if r.witness else {})} for r in res.per_k],
        }
        values.append(res.value)
    if args.path in ("characterization", "both"):
        value, reports = listnum.list_number_characterization(pred, g, args.m_max, aut, cap=args.cap)
        out["characterization"] = {
            "value": value,
            "reports": [{"d": r.d, "m_max": r.m_max, "verdict": r.verdict,
                         "per_m": [{"m": e.m, "B": e.count_B, "A": e.count_A, "equal": e.equal} for e in r.per_m],
                         **({"witness": r.witness.to_json()} if r.witness else {})} for r in reports],
        }
        values.append(value)
    out["agreement"] = len(set(values)) == 1
    _emit(out)
    return EXIT_OK if out["agreement"] else EXIT_FAIL


def cmd_verify_props(args) -> int:
    if args.suite != "all" and args.suite not in suites.SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from all, {', '.join(suites.SUITES)}")
    log.info("seed %d", args.seed)
    results = suites.run(args.suite, args.seed, args.count)
    for r in results:
        _emit({"seed": args.seed, **r.to_json()})
        log.info("%-12s %d/%d", r.name, r.passed, r.checked)
    return EXIT_OK if all(r.ok for r in results) else EXIT_FAIL


def cmd_family(args) -> int:
    try:
        g = graphs.generate_family(args.name, *args.params)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "edges":
        sys.stdout.write(graphs.format_edge_list(g))
    else:
        sys.stdout.write(graphs.encode_graph6(g) + "\n")
    return EXIT_OK


def cmd_graphs(args) -> int:
    for g in graphs.small_graphs(args.n, connected=not args.all):
        sys.stdout.write(graphs.encode_graph6(g) + "\n")
    return EXIT_OK


def cmd_hunt(args) -> int:
    pred = Predicate.parse(args.pred)
    text = _read_input(args.input)
    parsed = []
    bad = 0
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            parsed.append((lineno, graphs.parse_graph6(line)))
        except GraphParseError as exc:
            bad += 1
            _emit({"skip": {"line": lineno, "reason": str(exc)}}, sys.stderr)
    lines = [ln for ln, _ in parsed]
    unconfirmed = 0

    def on_result(i, status, payload):
        nonlocal unconfirmed
        if status == "hit":
            _emit({"hit": {"line": lines[i], **payload.to_json()}})
            unconfirmed += not payload.reverified
        elif status == "skip":
            _emit({"skip": {"line": lines[i], "reason": payload}}, sys.stderr)

    report = listnum.hunt(pred, [g for _, g in parsed], k_offset=args.k_offset, group_cap=args.group_cap,
                          cap=args.cap, jobs=args.jobs, on_result=on_result)
    summary = report.summary()
    summary["scanned"] += bad
    summary["skipped"] += bad
    _emit({"summary": {"pred": pred.value, **summary}})
    return EXIT_FAIL if unconfirmed else EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true", help="human-readable notes on stderr")
    common.add_argument("--cap", type=int, default=listnum.DEFAULT_ASSIGNMENT_CAP,
                        help="max list-assignment classes / sequences examined (default %(default)s)")
    common.add_argument("--group-cap", type=int, default=graphs.DEFAULT_GROUP_CAP,
                        help="max automorphism group size (default %(default)s)")
    common.add_argument("--jobs", type=int, default=1, help="worker processes where supported")

    graph_in = argparse.ArgumentParser(add_help=False)
    graph_in.add_argument("input", nargs="?", help="input file, or - / omitted for stdin")
    graph_in.add_argument("--format", choices=("graph6", "edges"), default="graph6")
    graph_in.add_argument("--family", help="use a generated graph instead, e.g. friendship:3")
    graph_in.add_argument("--m-max", type=int, default=None, help="largest universe size m (default n*d)")
    graph_in.add_argument("--k-max", type=int, default=None, help="largest list size tried (default n)")

    p = argparse.ArgumentParser(prog="listdist", description=__doc__.strip().splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("invariants", parents=[common, graph_in], help="all numbers for one graph")
    s.add_argument("--list-path", choices=("auto", "direct", "characterization", "both", "constructive"),
                   default="auto")
    s.add_argument("--list-preds", default="dist,proper,propdist",
                   help="comma list of predicates whose list numbers are computed")
    s.add_argument("--skip-lists", action="store_true", help="omit every list number")
    s.add_argument("--timing", action="store_true", help="include per-stage timings in the JSON")
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("listnum", parents=[common, graph_in], help="one list number, per-k / per-m detail")
    s.add_argument("--pred", choices=("dist", "proper", "propdist"), default="dist")
    s.add_argument("--path", choices=("direct", "characterization", "both"), default="both")
    s.set_defaults(func=cmd_listnum)

    s = sub.add_parser("verify-props", parents=[common], help="run property suites")
    s.add_argument("--suite", default="all", help="all, " + ", ".join(suites.SUITES))
    s.add_argument("--seed", type=int, default=42)
    s.add_argument("--count", type=int, default=None, help="instances per randomised suite")
    s.set_defaults(func=cmd_verify_props)

    s = sub.add_parser("family", parents=[common], help="emit a named graph")
    s.add_argument("name", choices=sorted(graphs.FAMILIES))
    s.add_argument("params", type=int, nargs="+")
    s.add_argument("--format", choices=("graph6", "edges"), default="graph6")
    s.set_defaults(func=cmd_family)

    s = sub.add_parser("graphs", parents=[common], help="emit all graphs on n <= 6 vertices as graph6")
    s.add_argument("n", type=int)
    s.add_argument("--all", action="store_true", help="include disconnected graphs")
    s.set_defaults(func=cmd_graphs)

    s = sub.add_parser("hunt", parents=[common], help="search a graph6 stream for list number > number")
    s.add_argument("input", nargs="?", help="graph6 file, or - / omitted for stdin")
    s.add_argument("--pred", choices=("dist", "proper", "propdist"), default="dist")
    s.add_argument("--k-offset", type=int, default=0, help="test lists of size base + offset")
    s.set_defaults(func=cmd_hunt)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except UsageError as exc:
        return _error("usage", str(exc), EXIT_USAGE)
    except GraphParseError as exc:
        return _error("parse", str(exc), EXIT_USAGE)
    except CapExceededError as exc:
        return _error("cap", str(exc), EXIT_CAP)
    except (ListDistError, ValueError) as exc:
        return _error(type(exc).__name__, str(exc), EXIT_USAGE if isinstance(exc, ValueError) else EXIT_FAIL)


if __name__ == "__main__":
    sys.exit(main())
