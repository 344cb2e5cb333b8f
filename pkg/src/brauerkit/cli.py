"""Brauer relations, Burnside rings and primitive quotients of finite groups.

Exit codes: 0 on success, 1 when a verification disagrees, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence

from . import group_classes as gc
from .burnside_ring import class_label, table_of_marks
from .cache import LatticeCache, default_cache_dir
from .catalog import CATALOG, catalog_groups, lookup
from .groupspec import ParseError, UnsupportedSize, parse_group_spec
from .mackey_axioms import run_axiom_suite
from .perm_core import DEFAULT_ORDER_CAP, MAX_ORDER_CAP, FiniteGroup, GroupError
from .prim_quotient import prim_invariants
from .brauer_relations import check_characteristic, primordiality_trichotomy, relation_lattice


class UsageError(Exception):
    pass


def _emit(args: argparse.Namespace, payload: dict | list, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=False))
    else:
        print(text)


def _resolve(spec: str, args: argparse.Namespace) -> tuple[str, FiniteGroup]:
    try:
        text = lookup(spec)
    except KeyError:
        text = spec
    try:
        parsed = parse_group_spec(text)
    except (ParseError, UnsupportedSize) as e:
        raise UsageError(f"bad group spec {spec!r}: {e}") from None
    G = parsed.build(args.order_cap)
    if args.cache_dir:
        LatticeCache(args.cache_dir).attach(G)
    return parsed.render(), G


def _group_header(name: str, G: FiniteGroup) -> dict:
    return {"group": name, "order": G.order, "degree": G.degree}


def cmd_classify(args: argparse.Namespace) -> int:
    name, G = _resolve(args.group, args)
    primes = sorted(set(args.primes) | set(gc.prime_divisors(G.order)))
    report = gc.classify(G, primes)
    payload = {**_group_header(name, G), **report.to_json()}
    text = "\n".join(f"{k}: {v}" for k, v in payload.items())
    _emit(args, payload, text)
    return 0


def cmd_subgroups(args: argparse.Namespace) -> int:
    name, G = _resolve(args.group, args)
    lat = G.lattice
    rows = [
        {
            "index": i,
            "label": class_label(G, i),
            "order": c.order,
            "class_size": c.size,
            "normalizer_order": c.normalizer_order,
            "normal": lat.normal_flags[i],
            "cyclic": G.is_cyclic_subgroup(c.representative),
            "representative": list(c.representative.members),
        }
        for i, c in enumerate(lat.classes)
    ]
    payload = {**_group_header(name, G), "num_subgroups": lat.num_subgroups, "classes": rows}
    lines = [f"{name}: order {G.order}, {len(lat)} classes, {lat.num_subgroups} subgroups"]
    lines += [
        f"  {r['index']:3d} {r['label']:>10} order={r['order']:<4d} size={r['class_size']:<4d}"
        f" |N|={r['normalizer_order']:<4d}{' normal' if r['normal'] else ''}{' cyclic' if r['cyclic'] else ''}"
        for r in rows
    ]
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_marks(args: argparse.Namespace) -> int:
    name, G = _resolve(args.group, args)
    tom = table_of_marks(G).tolist()
    payload = {**_group_header(name, G), "orders": [c.order for c in G.lattice.classes], "marks": tom}
    width = max(len(str(x)) for r in tom for x in r) + 1
    lines = [f"{name}: table of marks (row H, column G/K)"]
    lines += ["".join(f"{x:>{width}}" for x in r) for r in tom]
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_relations(args: argparse.Namespace) -> int:
    name, G = _resolve(args.group, args)
    R = relation_lattice(G, args.char)
    payload = {**_group_header(name, G), **R.to_json()}
    lines = [
        f"{name}: K in characteristic {args.char}, rank {R.rank}, top ideal {R.top_ideal}",
        f"  detecting classes: {list(R.detecting)}",
    ]
    lines += [f"  {x}" for x in R.elements()]
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_prim(args: argparse.Namespace) -> int:
    name, G = _resolve(args.group, args)
    report = prim_invariants(G, args.char)
    payload = {**_group_header(name, G), **report.to_json()}
    lines = [
        f"{name}: Prim in characteristic {args.char} = {report.invariants}",
        f"  rank K = {report.k_rank}, rank Imprim = {report.imprim_rank}",
        f"  predicted: {report.predicted}",
        f"  certificate: {report.generator_certificate}",
        f"  agree: {report.agree}",
    ]
    _emit(args, payload, "\n".join(lines))
    return 0 if (report.agree or not args.verify) else 1


def _verify_rows(G: FiniteGroup, chars: Sequence[int]) -> list[dict]:
    rows = []
    for c in chars:
        tri = primordiality_trichotomy(G, c)
        rep = prim_invariants(G, c)
        rows.append({
            "characteristic": c,
            "top_ideal_predicted": tri.predicted,
            "top_ideal_computed": tri.computed,
            "prim": str(rep.invariants),
            "predicted": str(rep.predicted),
            "applicable": rep.predicted.applicable,
            "agree": tri.agree and rep.agree,
        })
    return rows


def _format_rows(name: str, rows: list[dict]) -> list[str]:
    return [
        f"{name:>10} char {r['characteristic']}: top {r['top_ideal_computed']} "
        f"(pred {r['top_ideal_predicted']}), Prim {r['prim']:<10} pred {r['predicted']:<40} "
        f"{'ok' if r['agree'] else 'DISAGREE'}"
        for r in rows
    ]


def cmd_verify(args: argparse.Namespace) -> int:
    name, G = _resolve(args.group, args)
    rows = _verify_rows(G, args.char or [0, 2, 3, 5])
    ok = all(r["agree"] for r in rows)
    _emit(args, {**_group_header(name, G), "results": rows, "agree": ok}, "\n".join(_format_rows(name, rows)))
    return 0 if ok else 1


def cmd_sweep(args: argparse.Namespace) -> int:
    chars = args.char or [0, 2, 3]
    table = []
    for label, spec in CATALOG:
        _, G = _resolve(spec, args)
        if args.max_order and G.order > args.max_order:
            continue
        table.append({"label": label, "spec": spec, "order": G.order, "results": _verify_rows(G, chars)})
    ok = all(r["agree"] for entry in table for r in entry["results"])
    lines = [line for e in table for line in _format_rows(e["label"], e["results"])]
    lines.append(f"{'all agree' if ok else 'DISAGREEMENT'} over {len(table)} groups")
    _emit(args, {"characteristics": chars, "groups": table, "agree": ok}, "\n".join(lines))
    return 0 if ok else 1


def cmd_axioms(args: argparse.Namespace) -> int:
    if args.groups:
        groups = [_resolve(s.strip(), args)[1] for s in args.groups.split(";") if s.strip()]
    else:
        groups = [G for _, G in catalog_groups(args.max_order or 24)]
    start = time.perf_counter()
    reports = run_axiom_suite(groups, args.samples, args.seed)
    elapsed = time.perf_counter() - start
    ok = all(r.passed for r in reports)
    payload = {"groups": len(groups), "samples": args.samples, "seed": args.seed,
               "reports": [r.to_json() for r in reports], "passed": ok}
    lines = [f"{r.axiom}: {r.instances} instances, {len(r.failures)} failures" for r in reports]
    lines.append(f"{'all axioms hold' if ok else 'FAILURES'} ({elapsed:.1f}s)")
    _emit(args, payload, "\n".join(lines))
    return 0 if ok else 1


def _prime_list(text: str) -> list[int]:
    try:
        ps = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a list of primes: {text!r}") from None
    for p in ps:
        if not gc.is_prime(p):
            raise argparse.ArgumentTypeError(f"{p} is not prime")
    return ps


def _char(text: str) -> int:
    try:
        return check_characteristic(int(text))
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--cache-dir", default=default_cache_dir(),
                        help="lattice cache directory (default: $BRAUERKIT_CACHE)")
    common.add_argument("--order-cap", type=int, default=DEFAULT_ORDER_CAP,
                        help=f"largest group order accepted (at most {MAX_ORDER_CAP})")

    parser = argparse.ArgumentParser(prog="brauerkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help: str, group: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help)
        if group:
            p.add_argument("--group", required=True, help="group spec or catalog label")
        p.set_defaults(func=func)
        return p

    p = add("classify", cmd_classify, "group-class predicates")
    p.add_argument("--primes", type=_prime_list, default=[2, 3, 5])
    add("subgroups", cmd_subgroups, "conjugacy classes of subgroups")
    add("marks", cmd_marks, "table of marks")
    p = add("relations", cmd_relations, "lattice of Brauer relations")
    p.add_argument("--char", type=_char, required=True)
    p = add("prim", cmd_prim, "primitive quotient")
    p.add_argument("--char", type=_char, required=True)
    p.add_argument("--verify", action="store_true", help="exit 1 if the prediction disagrees")
    p = add("verify", cmd_verify, "top-ideal and Prim conformance for one group")
    p.add_argument("--char", type=_char, action="append")
    p = add("sweep", cmd_sweep, "conformance table over the built-in catalog", group=False)
    p.add_argument("--char", type=_char, action="append")
    p.add_argument("--max-order", type=int, default=None)
    p = add("axioms", cmd_axioms, "Mackey/Green functor axiom suite", group=False)
    p.add_argument("--groups", help="';'-separated group specs (default: catalog, order <= 24)")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-order", type=int, default=None)
    return parser


def run_command(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if not 1 <= args.order_cap <= MAX_ORDER_CAP:
        print(f"error: --order-cap must be between 1 and {MAX_ORDER_CAP}", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (UsageError, GroupError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_command())
