"""Command-line interface.

Exit codes: 0 success, 1 a check failed or a budget was exceeded, 2 usage or
parse error. A ``<spec>`` argument is a group spec file or a catalog name.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .budgets import Budgets
from .catalog import catalog, get
from .engine import METHODS, closure
from .cycles import emit_cycles, emit_spec, load_spec
from .errors import CycleSyntaxError, KClosureError
from .korbit import k_orbits
from .structure import sylow_subgroup, transitive_decompose
from .suites import SUITES, format_table, run_suite


class UsageError(Exception):
    pass


def _load(spec_arg):
    path = Path(spec_arg)
    if path.is_file():
        return load_spec(path)
    try:
        return get(spec_arg).spec
    except KeyError:
        raise UsageError(f"{spec_arg!r} is neither a spec file nor a catalog name") from None


def _budgets(args):
    return Budgets(
        max_oracle_degree=args.max_oracle_degree,
        max_backtrack_degree=args.max_backtrack_degree,
        max_k=args.max_k,
        tuple_budget=args.tuple_budget,
    )


def _gens(G):
    return [emit_cycles(g) for g in G.generators]


def cmd_orbits(args):
    spec = _load(args.spec)
    part = k_orbits(spec.group(), args.k, _budgets(args))
    if args.json:
        sizes = part.orbit_sizes()
        print(json.dumps({
            "group": spec.name, "k": args.k, "count": part.count,
            "orbits": [{"id": i, "size": int(sizes[i]), "representative": [a + 1 for a in rep]}
                       for i, rep in enumerate(part.representatives)],
        }))
    else:
        print(part.dump())
    return 0


def cmd_closure(args):
    spec = _load(args.spec)
    G = spec.group()
    result = closure(G, args.k, args.method, _budgets(args))
    record = {"group": spec.name, "k": args.k, "method": result.method,
              "order": result.element_count, "source_order": G.order(),
              "generators": _gens(result.group)}
    if args.json:
        print(json.dumps(record))
    else:
        print(f"group {spec.name}  k={args.k}  method={result.method}")
        print(f"|G| = {G.order()}   |G^({args.k})| = {result.element_count}")
        for g in record["generators"]:
            print(f"gen {g}")
    return 0


def cmd_sylow(args):
    spec = _load(args.spec)
    P = sylow_subgroup(spec.group(), args.p)
    if args.json:
        print(json.dumps({"group": spec.name, "p": args.p, "order": P.order(),
                          "generators": _gens(P)}))
    else:
        print(f"Sylow {args.p}-subgroup of {spec.name}: order {P.order()}")
        for g in _gens(P):
            print(f"gen {g}")
    return 0


def cmd_decompose(args):
    spec = _load(args.spec)
    d = transitive_decompose(spec.group(), args.p)
    record = {
        "group": spec.name,
        "p": args.p,
        "p_orbits": [[a + 1 for a in o] for o in d.p_orbits],
        "h_orbits": [[a + 1 for a in o] for o in d.h_orbits],
        "rho": {str(a + 1): list(pair) for a, pair in enumerate(d.rho)},
        "P_prime": {"degree": d.P_prime.degree, "order": d.P_prime.order(),
                    "generators": _gens(d.P_prime)},
        "H_prime": {"degree": d.H_prime.degree, "order": d.H_prime.order(),
                    "generators": _gens(d.H_prime)},
    }
    if args.json:
        print(json.dumps(record))
        return 0
    print(f"{spec.name} split at p={args.p}")
    print("Orb(P): " + " ".join("{" + ",".join(map(str, o)) + "}" for o in record["p_orbits"]))
    print("Orb(H): " + " ".join("{" + ",".join(map(str, o)) + "}" for o in record["h_orbits"]))
    for a, (i, j) in enumerate(d.rho):
        print(f"rho({a + 1}) = (P-orbit {i}, H-orbit {j})")
    for label, grp in (("P'", d.P_prime), ("H'", d.H_prime)):
        gens = ", ".join(_gens(grp)) or "()"
        print(f"{label}: degree {grp.degree}, order {grp.order()}, generators {gens}")
    return 0


def cmd_verify(args):
    names = SUITES if args.suite == "all" else [args.suite]
    budgets = _budgets(args)
    code = 0
    records = []
    for name in names:
        rc, recs = run_suite(name, args.k, budgets)
        code = max(code, rc)
        records.extend(recs)
    if args.no_timings:
        for r in records:
            r.millis = 0.0
    if args.json:
        for r in records:
            print(r.to_json())
    else:
        print(format_table(records, timings=not args.no_timings))
        counts = {s: sum(r.status == s for r in records) for s in ("pass", "fail", "skip")}
        print(f"\n{counts['pass']} passed, {counts['fail']} failed, {counts['skip']} skipped")
    return code


def cmd_catalog(args):
    entries = catalog()
    if args.emit:
        out = Path(args.emit)
        out.mkdir(parents=True, exist_ok=True)
        for e in entries:
            (out / f"{e.name}.group").write_text(emit_spec(e.spec), encoding="utf-8")
        print(f"wrote {len(entries)} spec files to {out}")
        return 0
    width = max(len(e.name) for e in entries)
    for e in entries:
        G = e.group()
        print(f"{e.name.ljust(width)}  degree {G.degree:>2}  order {G.order():>3}  "
              f"{','.join(sorted(e.tags))}")
    return 0


def build_parser():
    budget = argparse.ArgumentParser(add_help=False)
    budget.add_argument("--max-oracle-degree", type=int, default=8)
    budget.add_argument("--max-backtrack-degree", type=int, default=16)
    budget.add_argument("--max-k", type=int, default=4)
    budget.add_argument("--tuple-budget", type=int, default=10**7)
    budget.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(prog="kclosure", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("orbits", parents=[budget], help="k-orbit partition")
    p.add_argument("spec")
    p.add_argument("-k", type=int, default=1)
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("closure", parents=[budget], help="k-closure of a group")
    p.add_argument("spec")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--method", choices=METHODS, default="auto")
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("sylow", parents=[budget], help="Sylow subgroup of a nilpotent group")
    p.add_argument("spec")
    p.add_argument("-p", type=int, required=True)
    p.set_defaults(func=cmd_sylow)

    p = sub.add_parser("decompose", parents=[budget],
                       help="split a transitive nilpotent group at a prime")
    p.add_argument("spec")
    p.add_argument("-p", type=int, required=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", parents=[budget], help="run a verification suite")
    p.add_argument("--suite", required=True, choices=list(SUITES) + ["all"])
    p.add_argument("-k", type=int, default=None)
    p.add_argument("--no-timings", action="store_true",
                   help="zero all timings so reports are byte-reproducible")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("catalog", help="list or export the test-group catalog")
    p.add_argument("--emit", metavar="DIR")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, CycleSyntaxError) as exc:
        print(f"kclosure: error: {exc}", file=sys.stderr)
        return 2
    except (KClosureError, ValueError) as exc:
        print(f"kclosure: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
