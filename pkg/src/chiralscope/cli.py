"""Command-line front end.

Every command prints one JSON report (``--human`` for a short text form).
Exit codes: 0 success / chiral, 3 valid input that is not chiral (or a
search that found nothing, or a bounds sweep with untagged failures),
2 input or capacity errors.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time

from . import __version__, bounds, corpus, polytope
from .bounds import tables as bound_tables
from .chirality import GenPair, classify_pair, count_chiral_pairs, random_chiral_search
from .errors import ChiralscopeError

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NEGATIVE = 3
SAFE_INT = 2**53


def _exact(obj):
    """Integers beyond double precision become decimal strings."""
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) > SAFE_INT else obj
    if isinstance(obj, dict):
        return {str(k): _exact(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_exact(v) for v in obj]
    return obj


def _digest(*parts) -> str:
    h = hashlib.sha256()
    for p in parts:
        h.update(p.encode() if isinstance(p, str) else p)
        h.update(b"\0")
    return h.hexdigest()


def _report(args, digest, results, started):
    rep = {
        "command": args.command,
        "argv": list(args.argv),
        "inputs_digest": digest,
        "version": __version__,
        "results": results,
    }
    if args.timing:
        rep["timing"] = {"seconds": round(time.perf_counter() - started, 3)}
    return _exact(rep)


def _emit(args, report, human_lines):
    if args.human:
        print("\n".join(human_lines))
    else:
        print(json.dumps(report, indent=2, sort_keys=True))


# -- input resolution -----------------------------------------------------------

def _read(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def resolve_group(spec: str):
    """(NamedGroup, digest source) from a built-in name or a group file."""
    if os.path.isfile(spec):
        text = _read(spec)
        return corpus.parse_group_file(text, name=os.path.basename(spec)), text
    return corpus.lookup(spec), spec


def resolve_pair(spec: str):
    """(NamedGroup, GenPair, digest source).

    ``pair:M23``, ``pair:M24`` and ``pair:A<n>`` name the built-in pairs.
    Alternating pairs are checked inside A_n; a Mathieu pair generates its own
    copy of the group, whose order must match.
    """
    if os.path.isfile(spec):
        text = _read(spec)
        named, pair = corpus.parse_pair_file(text, name=os.path.basename(spec))
        return named, pair, text
    key = spec.lower()
    if key in ("pair:m23", "pair:m24"):
        name = key[-3:].upper()
        pair = corpus.known_pair_m23() if name == "M23" else corpus.known_pair_m24()
        # the printed pair lives in its own copy of the group, so the ambient
        # group is <x, t> held to the known Mathieu order
        ambient = corpus.NamedGroup(name, pair.degree, [pair.x, pair.t],
                                    known_order=corpus.mathieu(name).known_order, out_order=1)
        return ambient, pair, spec
    if key.startswith("pair:a") and key[6:].isdigit():
        k = int(key[6:])
        return corpus.alternating(k), corpus.known_pair_alternating(k), spec
    raise ChiralscopeError(f"no pair file or built-in pair named {spec!r}")


def _pair_dict(pair: GenPair) -> dict:
    return {"x": str(pair.x), "t": str(pair.t), "y": str(pair.y), "degree": pair.degree}


# -- commands --------------------------------------------------------------------

def cmd_verify(args):
    started = time.perf_counter()
    named, pair, source = resolve_pair(args.pair)
    G = named.group()
    verdict = classify_pair(G, pair)
    results = {"group": named.name, "group_order": G.order, "pair": _pair_dict(pair),
               "verdict": verdict.as_dict()}
    rep = _report(args, _digest(source), results, started)
    p, qq = verdict.schlafli_type
    _emit(args, rep, [
        f"group {named.name} order {G.order}",
        f"generates: {verdict.generates}  t involution: {verdict.t_is_involution}",
        f"type {{{p},{qq}}}  reflexible: {verdict.reflexible}  chiral: {verdict.chiral}",
    ])
    return EXIT_OK if verdict.chiral else EXIT_NEGATIVE


def cmd_count(args):
    started = time.perf_counter()
    named, source = resolve_group(args.group)
    out = args.out_order if args.out_order is not None else named.out_order
    if out is None:
        raise ChiralscopeError("--out-order is required for groups read from a file")
    G = named.group()
    census = count_chiral_pairs(G, out, name=named.name, jobs=args.jobs)
    rep = _report(args, _digest(source, str(out)), census.as_dict(), started)
    lines = [f"{named.name}: |G| = {G.order}, |Out| = {out}",
             f"chiral polyhedra: {census.polyhedra_count} "
             f"({census.mirror_classes} up to mirror image)"]
    for (p, qq), k in sorted(census.by_type.items()):
        lines.append(f"  {{{p},{qq}}}: {k}")
    _emit(args, rep, lines)
    return EXIT_OK


def cmd_build(args):
    started = time.perf_counter()
    named, pair, source = resolve_pair(args.pair)
    G = named.group()
    P = polytope.build_polyhedron(G, pair)
    summary = {
        "group": named.name,
        "group_order": G.order,
        "face_counts": list(P.face_counts),
        "flag_count": len(P.flags),
    }
    diamond = polytope.check_diamond(P)
    summary["diamond"] = diamond
    if args.checks:
        summary["strongly_connected"] = polytope.check_strong_connectivity(P)
        if diamond:
            orbits = polytope.flag_orbit_count(P, G)
            summary["flag_orbits"] = orbits.count
            summary["adjacent_flags_in_distinct_orbits"] = orbits.alternating
    try:
        summary["schlafli_type"] = list(polytope.schlafli_type(P))
    except ChiralscopeError as exc:
        summary["schlafli_type"] = None
        summary["type_error"] = str(exc)
    if args.export:
        payload = polytope.export_polyhedron(P, args.export)
        if args.export_to:
            with open(args.export_to, "w", encoding="utf-8") as fh:
                fh.write(payload)
            summary["export"] = {"format": args.export, "path": args.export_to}
        else:
            sys.stdout.write(payload)
            return EXIT_OK
    rep = _report(args, _digest(source), summary, started)
    _emit(args, rep, [f"{k}: {v}" for k, v in summary.items()])
    return EXIT_OK


def cmd_search(args):
    started = time.perf_counter()
    named, source = resolve_group(args.group)
    G = named.group()
    found = random_chiral_search(G, args.trials, args.seed)
    if found is None:
        results = {"group": named.name, "found": None}
        lines = [f"{named.name}: none in {args.trials} trials"]
    else:
        verdict = classify_pair(G, found)
        results = {"group": named.name, "found": _pair_dict(found),
                   "verdict": verdict.as_dict()}
        lines = [f"{named.name}: chiral pair of type {tuple(verdict.schlafli_type)}",
                 f"x = {found.x}", f"t = {found.t}"]
    rep = _report(args, _digest(source, str(args.trials), str(args.seed)), results, started)
    _emit(args, rep, lines)
    return EXIT_OK if found is not None else EXIT_NEGATIVE


FAMILY_GROUPS = {
    "exceptional": bound_tables.EXCEPTIONAL,
    "classical": bound_tables.CLASSICAL,
    "all": bound_tables.EXCEPTIONAL + bound_tables.CLASSICAL,
}


def _families(text):
    out = []
    for token in text.split(","):
        token = token.strip()
        if token in FAMILY_GROUPS:
            out.extend(FAMILY_GROUPS[token])
        elif token in FAMILY_GROUPS["all"]:
            out.append(token)
        else:
            raise ChiralscopeError(
                f"unknown family {token!r}; choose from {', '.join(FAMILY_GROUPS['all'])} "
                "or exceptional/classical/all")
    return list(dict.fromkeys(out))


def cmd_bounds(args):
    started = time.perf_counter()
    families = _families(args.families)
    reports = []
    for fam in families:
        default_q = 1024 if fam in bound_tables.EXCEPTIONAL else 64
        q_max = args.q_max if args.q_max is not None else default_q
        reports.extend(bounds.sweep([fam], q_max, args.rank_max, jobs=args.jobs))
    summary = bounds.summarize(reports)
    results = {
        "families": families,
        "q_max": args.q_max,
        "rank_max": args.rank_max,
        "summary": summary,
        "reports": [r.as_dict() for r in reports],
    }
    if args.sporadic:
        results["sporadic"] = bounds.sporadic_checks()
    untagged = len(summary["untagged_failures"])
    if args.json:
        digest = _digest(",".join(families), str(args.q_max), str(args.rank_max))
        print(json.dumps(_report(args, digest, results, started), indent=2, sort_keys=True))
    else:
        print(f"checked: {summary['checked']}  passed: {summary['passed']}  "
              f"failed: {summary['failed']}")
        for tag, k in sorted(summary["tags"].items()):
            print(f"tagged {tag}: {k}")
        if summary["external"]:
            print("requires external constant: " + ", ".join(summary["external"]))
        if summary["improved_recheck_failures"]:
            print("improved re-check failures: "
                  + ", ".join(summary["improved_recheck_failures"]))
        for name in summary["untagged_failures"]:
            print(f"untagged failure: {name}")
        if args.sporadic:
            for row in results["sporadic"]:
                print(f"sporadic {row['id']}: {row['lhs']} < {row['target']}: {row['status']}")
        print(f"untagged-failures: {untagged}")
    return EXIT_OK if untagged == 0 else EXIT_NEGATIVE


def cmd_corpus(args):
    started = time.perf_counter()
    if args.show:
        named = corpus.lookup(args.show)
        sys.stdout.write(corpus.format_group_file(named))
        return EXIT_OK
    entries = []
    for name in corpus.builtin_names():
        g = corpus.lookup(name)
        entries.append({"name": g.name, "degree": g.degree, "order": g.known_order,
                        "out_order": g.out_order})
    pairs = ["pair:M23", "pair:M24"] + [f"pair:A{k}" for k in range(8, 14)]
    rep = _report(args, _digest("corpus"), {"groups": entries, "pairs": pairs}, started)
    _emit(args, rep, [f"{e['name']:>10}  degree {e['degree']:>3}  order {e['order']}"
                      for e in entries] + pairs)
    return EXIT_OK


# -- argument parsing ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chiralscope",
        description="Chiral polyhedra from permutation groups, and involution-count bounds.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--human", action="store_true", help="short text instead of JSON")
        p.add_argument("--timing", action="store_true",
                       help="include wall-clock time (output is then not byte-stable)")
        return p

    p = common(sub.add_parser("verify", help="classify one pair (x, t)"))
    p.add_argument("pair", help="pair file, or pair:M23 / pair:M24 / pair:A<n>")
    p.set_defaults(func=cmd_verify)

    p = common(sub.add_parser("count", help="count chiral polyhedra of a group"))
    p.add_argument("group", help="built-in name (A7, psl2:11, M11, ...) or group file")
    p.add_argument("--out-order", type=int, help="|Out(G)|; required for group files")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_count)

    p = common(sub.add_parser("build", help="build and check the polyhedron of a pair"))
    p.add_argument("pair")
    p.add_argument("--export", choices=sorted(polytope.EXPORT_FORMATS))
    p.add_argument("--export-to", metavar="FILE",
                   help="write the export there and print the report instead")
    p.add_argument("--checks", action="store_true",
                   help="also run strong connectivity and flag-orbit checks")
    p.set_defaults(func=cmd_build)

    p = common(sub.add_parser("search", help="random search for a chiral pair"))
    p.add_argument("group")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=1)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("bounds", help="sweep the involution-count inequalities")
    p.add_argument("--families", default="all",
                   help="comma list of families, or exceptional / classical / all")
    p.add_argument("--q-max", type=int,
                   help="largest q (default 1024 exceptional, 64 classical)")
    p.add_argument("--rank-max", type=int, default=24,
                   help="largest natural-module dimension for classical families")
    p.add_argument("--json", action="store_true", help="full JSON report")
    p.add_argument("--sporadic", action="store_true", help="add the sporadic arithmetic checks")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timing", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = common(sub.add_parser("corpus", help="list built-in groups and pairs"))
    p.add_argument("--show", metavar="NAME", help="print the group file of one built-in")
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    args.argv = argv
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be at least 1")
    try:
        return args.func(args)
    except (ChiralscopeError, OSError) as exc:
        print(f"chiralscope {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
