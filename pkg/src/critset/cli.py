"""Command-line surface for the library.

Subcommands: analyze one graph, check properties on one graph, fuzz random
corpora, sweep all labeled graphs at a fixed order, scan the conjecture
sandwich, and list or verify the bundled fixtures. Exit codes: 0 everything
held, 1 a property failed or a scan found a violation, 2 usage or input
error, 3 a limit was hit while --strict was on. All JSON output carries
"schema": 1, sorts its keys, and serializes vertex sets as arrays of the
original labels in vertex-id order.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import fixtures as fixture_registry
from . import ke as ke_mod
from .graphs import (EXHAUSTIVE_MAX_N, Graph, LimitExceeded, ParseError,
                     parse_graph)
from .props import (Config, CorpusSpec, Facts, conjecture_scan,
                    default_workers, evaluate, exhaustive_corpus,
                    parse_corpus_spec, random_corpus, registry, run,
                    select_properties)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


def _dump(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True)


def _load_graph(path: str, fmt: str | None) -> Graph:
    text = Path(path).read_text()
    if fmt is None:
        fmt = "dimacs" if path.endswith((".col", ".dimacs")) else "edge-list"
    return parse_graph(text, fmt)


def _config(args: argparse.Namespace) -> Config:
    return Config(oracle_limit=args.oracle_limit,
                  use_oracle=not args.no_oracle,
                  strict=args.strict,
                  workers=args.workers)


# -- analyze -----------------------------------------------------------------

# which machinery produces each report field; "oracle" fields rest on bounded
# enumeration, "search" on exact branch and bound, the rest on matchings
_METHODS = {
    "polynomial": ["bipartite", "d", "deficiency", "diadem", "ker", "mu",
                   "ore", "witness"],
    "search": ["alpha", "ke"],
    "oracle": ["core", "corona", "ke_identities"],
}


def analyze_graph(g: Graph, config: Config) -> dict:
    facts = Facts(g, config)
    skipped: dict[str, str] = {}

    def attempt(field: str, compute):
        try:
            return compute()
        except LimitExceeded as exc:
            skipped[field] = str(exc)
            return None

    labels = g.label_list
    alpha = attempt("alpha", facts.alpha)
    mu = facts.mu()
    is_ke = attempt("ke", facts.is_ke)
    report: dict = {
        "schema": 1,
        "kind": "analysis",
        "n": g.n,
        "m": g.m,
        "bipartite": facts.parts() is not None,
        "ke": is_ke,
        "d": facts.d(),
        "alpha": alpha,
        "mu": mu,
        "deficiency": g.n - 2 * mu,
        "witness": labels(facts.witness()),
        "ker": labels(facts.ker()),
        "diadem": labels(facts.diadem()),
        "core": attempt("core", lambda: labels(facts.core())),
        "corona": attempt("corona", lambda: labels(facts.corona())),
    }
    if is_ke:
        def identities():
            facts.require_oracle()
            rep = ke_mod.ke_identities(g, config.oracle_limit)
            return [{"name": c.name, "holds": c.holds,
                     "lhs": c.lhs, "rhs": c.rhs}
                    for c in rep.identity_checks]
        report["ke_identities"] = attempt("ke_identities", identities)
    if facts.parts() is not None:
        p = facts.ore_profile()
        report["ore"] = {
            "side_a": labels(facts.parts().side_a),
            "side_b": labels(facts.parts().side_b),
            "delta0_a": p.delta0_a, "delta0_b": p.delta0_b,
            "ker_a": labels(p.ker_a), "ker_b": labels(p.ker_b),
            "diadem_a": labels(p.diadem_a), "diadem_b": labels(p.diadem_b)}
    report["methods"] = _METHODS
    report["skipped"] = skipped
    return report


def _render_analysis(path: str, rep: dict) -> str:
    def setline(name):
        val = rep.get(name)
        return "-" if val is None else (" ".join(val) if val else "(empty)")
    lines = [
        f"{path}: n={rep['n']} m={rep['m']}"
        f" bipartite={'yes' if rep['bipartite'] else 'no'}"
        f" KE={'yes' if rep['ke'] else 'unknown' if rep['ke'] is None else 'no'}",
        f"  d={rep['d']}"
        f" alpha={'-' if rep['alpha'] is None else rep['alpha']}"
        f" mu={rep['mu']} deficiency={rep['deficiency']}",
        f"  witness = {setline('witness')}",
        f"  ker     = {setline('ker')}",
        f"  diadem  = {setline('diadem')}",
        f"  core    = {setline('core')}",
        f"  corona  = {setline('corona')}",
    ]
    if "ke_identities" in rep and rep["ke_identities"] is not None:
        bad = [c for c in rep["ke_identities"] if not c["holds"]]
        lines.append(f"  KE identities: {len(rep['ke_identities'])} checked, "
                     f"{len(bad)} failing")
        for c in bad:
            lines.append(f"    {c['name']}: {c['lhs']} != {c['rhs']}")
    if "ore" in rep:
        o = rep["ore"]
        lines.append(f"  sides: A = {' '.join(o['side_a'])} |"
                     f" B = {' '.join(o['side_b'])}")
        lines.append(f"  delta0(A)={o['delta0_a']} delta0(B)={o['delta0_b']}")
        lines.append(f"  ker_A    = {' '.join(o['ker_a']) or '(empty)'}")
        lines.append(f"  ker_B    = {' '.join(o['ker_b']) or '(empty)'}")
        lines.append(f"  diadem_A = {' '.join(o['diadem_a']) or '(empty)'}")
        lines.append(f"  diadem_B = {' '.join(o['diadem_b']) or '(empty)'}")
    for field, reason in sorted(rep["skipped"].items()):
        lines.append(f"  skipped {field}: {reason}")
    return "\n".join(lines)


def _cmd_analyze(args) -> int:
    config = _config(args)
    g = _load_graph(args.file, args.format)
    rep = analyze_graph(g, config)
    if args.json:
        print(_dump(rep))
    else:
        print(_render_analysis(args.file, rep))
    if config.strict and rep["skipped"]:
        return EXIT_LIMIT
    return EXIT_OK


# -- check -------------------------------------------------------------------

def _cmd_check(args) -> int:
    config = _config(args)
    g = _load_graph(args.file, args.format)
    names = None if args.all else [args.property]
    props = select_properties(names)
    facts = Facts(g, config)
    results = [evaluate(p, facts) for p in props]
    if args.json:
        print(_dump({
            "schema": 1, "kind": "check", "file": args.file,
            "results": [r.as_dict() for r in results]}))
    else:
        for r in results:
            if r.verdict == "holds":
                print(f"{r.prop}: holds")
            elif r.verdict == "fails":
                print(f"{r.prop}: fails  witness: "
                      f"{json.dumps(r.witness, sort_keys=True)}")
            elif r.limit:
                print(f"{r.prop}: skipped: {r.reason}")
            else:
                print(f"{r.prop}: fails applicability: {r.reason}")
    if any(r.verdict == "fails" for r in results):
        return EXIT_FAIL
    if config.strict and any(r.limit for r in results):
        return EXIT_LIMIT
    return EXIT_OK


# -- corpus runs (fuzz, exhaustive) --------------------------------------------

def _render_run(rep: dict) -> str:
    s = rep["summary"]
    lines = [f"graphs: {s['graphs']}  checks: {s['checks']}  "
             f"holds: {s['holds']}  fails: {s['fails']}  "
             f"skipped: {s['skipped']} (limit: {s['limit_skips']})"]
    if s["skip_reasons"]:
        lines.append("skip reasons:")
        for reason, count in s["skip_reasons"].items():
            lines.append(f"  {reason}: {count}")
    if s["failures"]:
        lines.append("failures:")
        for f in s["failures"]:
            lines.append(f"  {f['graph']}  {f['property']}  witness: "
                         f"{json.dumps(f['witness'], sort_keys=True)}")
    return "\n".join(lines)


def _finish_run(rep: dict, config: Config, as_json: bool) -> int:
    if as_json:
        print(_dump(rep))
    else:
        print(_render_run(rep))
    if rep["summary"]["fails"]:
        return EXIT_FAIL
    if config.strict and rep["summary"]["limit_skips"]:
        return EXIT_LIMIT
    return EXIT_OK


def _parse_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
    else:
        lo = hi = text
    try:
        lo_i, hi_i = int(lo), int(hi)
    except ValueError:
        raise ValueError(f"bad range {text!r}; expected a..b")
    if lo_i < 0 or hi_i < lo_i:
        raise ValueError(f"bad range {text!r}; expected 0 <= a <= b")
    return lo_i, hi_i


def _cmd_fuzz(args) -> int:
    config = _config(args)
    lo, hi = _parse_range(args.n)
    corpus = random_corpus(lo, hi, args.p, args.count, args.seed)
    rep = run(corpus, args.properties, config)
    return _finish_run(rep, config, args.json)


def _cmd_exhaustive(args) -> int:
    config = _config(args)
    if args.n > EXHAUSTIVE_MAX_N:
        raise ValueError(
            f"exhaustive sweep supports n <= {EXHAUSTIVE_MAX_N}, got {args.n}")
    rep = run(exhaustive_corpus(args.n), args.properties, config)
    return _finish_run(rep, config, args.json)


# -- conjecture ----------------------------------------------------------------

def _render_scan(rep: dict) -> str:
    s = rep["summary"]
    lines = [f"graphs: {s['graphs']}  checked: {s['checked']}  "
             f"skipped: {len(s['skipped'])}  violations: "
             f"{len(s['violations'])}"]
    lines.append("minimum slack by n  (2*alpha - |ker| - |diadem|, "
                 "then |core| + |corona| - 2*alpha):")
    for n, slot in rep["per_n"].items():
        upper = slot["min_slack_upper"]
        lines.append(f"  n={n}: graphs={slot['graphs']} "
                     f"min_slack={slot['min_slack']} "
                     f"min_slack_upper={'-' if upper is None else upper}")
    for entry in s["skipped"]:
        lines.append(f"  skipped {entry['graph']}: {entry['reason']}")
    for v in s["violations"]:
        lines.append(f"VIOLATION ({v['kind']}) on {v['graph']}: "
                     f"lhs={v['lhs']} > rhs={v['rhs']}")
        lines.append(f"  edges: {v['edges']}")
        lines.append(f"  shrunk witness: n={v['shrunk']['n']} "
                     f"edges={v['shrunk']['edges']}")
    return "\n".join(lines)


def _cmd_conjecture(args) -> int:
    config = _config(args)
    if args.corpus is not None:
        corpus = parse_corpus_spec(Path(args.corpus).read_text())
    else:
        if args.max_n > EXHAUSTIVE_MAX_N:
            raise ValueError(f"--max-n supports at most {EXHAUSTIVE_MAX_N}")
        corpus = exhaustive_corpus(*range(1, args.max_n + 1))
    rep = conjecture_scan(corpus, config)
    if args.json:
        print(_dump(rep))
    else:
        print(_render_scan(rep))
    if rep["summary"]["violations"]:
        return EXIT_FAIL
    if config.strict and rep["summary"]["skipped"]:
        return EXIT_LIMIT
    return EXIT_OK


# -- fixtures --------------------------------------------------------------------

def _cmd_fixtures(args) -> int:
    config = _config(args)
    if args.action == "list":
        if args.json:
            print(_dump({"schema": 1, "kind": "fixtures",
                         "names": fixture_registry.fixture_names()}))
        else:
            for name in fixture_registry.fixture_names():
                fx = fixture_registry.load(name)
                print(f"{name:14s} {fx.file:22s} n={fx.graph.n:3d} "
                      f"m={fx.graph.m:3d}")
        return EXIT_OK
    reports = fixture_registry.verify_all(config)
    if args.json:
        print(_dump({"schema": 1, "kind": "fixtures-verify",
                     "reports": reports}))
    else:
        for rep in reports:
            status = "ok" if rep["holds"] else "FAIL"
            print(f"{rep['name']:14s} {status}  "
                  f"({len(rep['checks'])} values checked)")
            for check in rep["checks"]:
                if not check["holds"]:
                    print(f"    {check['key']}: expected "
                          f"{check['expected']!r}, got {check['actual']!r}")
                if "note" in check:
                    print(f"    note on {check['key']}: {check['note']}")
    return EXIT_OK if all(r["holds"] for r in reports) else EXIT_FAIL


# -- argument plumbing -------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--oracle-limit", type=int, default=20, metavar="N",
                        help="largest n the exhaustive oracles accept "
                             "(default 20)")
    common.add_argument("--no-oracle", action="store_true",
                        help="polynomial routines only; enumeration-backed "
                             "fields and checks report as skipped")
    common.add_argument("--strict", action="store_true",
                        help="exit 3 when any limit was hit")
    common.add_argument("--workers", type=int, default=default_workers(),
                        metavar="K",
                        help="worker processes for corpus runs (default from "
                             "CRITSET_WORKERS, else 1)")
    common.add_argument("--json", action="store_true",
                        help="machine-readable output")

    fileargs = argparse.ArgumentParser(add_help=False)
    fileargs.add_argument("file", help="graph file")
    fileargs.add_argument("--format", choices=["edge-list", "dimacs"],
                          help="input format (default: by file extension)")

    parser = argparse.ArgumentParser(
        prog="critset",
        description="Critical-set invariants of finite simple graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common, fileargs],
                       help="full invariant report for one graph")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("check", parents=[common, fileargs],
                       help="evaluate registered properties on one graph")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--property", metavar="NAME",
                       help="one registered property name")
    group.add_argument("--all", action="store_true",
                       help="every registered property")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("fuzz", parents=[common],
                       help="run properties over a seeded random corpus")
    p.add_argument("--n", required=True, metavar="A..B",
                   help="vertex-count range, e.g. 8..14")
    p.add_argument("--p", type=float, required=True, help="edge probability")
    p.add_argument("--count", type=int, required=True, help="graph count")
    p.add_argument("--seed", type=int, required=True, help="corpus seed")
    p.add_argument("--properties", nargs="+", metavar="NAME",
                   help="subset of properties (default: all)")
    p.set_defaults(func=_cmd_fuzz)

    p = sub.add_parser("exhaustive", parents=[common],
                       help="run properties over every labeled graph at n")
    p.add_argument("--n", type=int, required=True, help="vertex count")
    p.add_argument("--properties", nargs="+", metavar="NAME",
                   help="subset of properties (default: all)")
    p.set_defaults(func=_cmd_exhaustive)

    p = sub.add_parser("conjecture", parents=[common],
                       help="scan |ker| + |diadem| <= 2*alpha <= "
                            "|core| + |corona|")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--max-n", type=int, metavar="K",
                       help="all labeled graphs with 1 <= n <= K")
    group.add_argument("--corpus", metavar="FILE",
                       help="JSON corpus description")
    p.set_defaults(func=_cmd_conjecture)

    p = sub.add_parser("fixtures", parents=[common],
                       help="list or verify the bundled example graphs")
    p.add_argument("action", nargs="?", choices=["list", "verify"],
                   default="list")
    p.set_defaults(func=_cmd_fixtures)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {args.file}:{exc.line_no}: {exc.message}",
              file=sys.stderr)
        return EXIT_USAGE
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
