"""Command-line surface: enumeration, queries, verification, export.

Verbs: ``roots``, ``classes``, ``wm``, ``bruhat``, ``verify``.  Words use
1-based simple-root indices everywhere ("1 2 1"; the identity prints as
"e").  Output is byte-identical across runs for a fixed configuration:
everything is sorted, seeded, and timestamp-free.

Exit codes: 0 success (and, for ``verify``, every check passed), 1 at
least one verification check failed, 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import _kernel as kernel
from . import bruhat, conjugacy, oracle, wm
from .cartan import weyl_order
from .errors import WeylMaxError, WordParseError
from .rootsys import build_root_system
from .weyl import from_word

# verify runs the sampled descent-chain suite above this group order
GKP_EXHAUSTIVE_LIMIT = 2000
GKP_SAMPLE_SIZE = 1000

SUITES = ("theorem-max", "rank-lemma", "psi-argmax", "gkp", "chain-step",
          "lattice", "oracle", "all")


def parse_word(text: str, rank: int) -> tuple[int, ...]:
    """Parse a 1-based word string; '' and 'e' denote the identity."""
    text = text.strip()
    if text in ("", "e"):
        return ()
    out = []
    for tok in text.split():
        if not tok.isdigit():
            raise WordParseError(f"malformed word token {tok!r}", token=tok)
        v = int(tok)
        if not 1 <= v <= rank:
            raise WordParseError(
                f"word token {tok!r} out of range 1..{rank}", token=tok)
        out.append(v - 1)
    return tuple(out)


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _sigma_io(sigma: frozenset) -> list[int]:
    return [i + 1 for i in sorted(sigma)]


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _effective_cap(args) -> int | None:
    if args.cap is not None:
        return args.cap
    env = os.environ.get(conjugacy.CAP_ENV_VAR)
    if env is not None:
        return int(env)
    return None


# -- verbs --------------------------------------------------------------------


def cmd_roots(args) -> int:
    rs = build_root_system(args.type)
    if args.format == "json":
        _emit(_dump_json(rs.to_json_dict()), args.out)
    elif args.format == "csv":
        header = ["index"] + [f"c{j + 1}" for j in range(rs.rank)]
        rows = [[r + 1] + list(v) for r, v in enumerate(rs.roots)]
        _emit(_csv_text(header, rows), args.out)
    else:
        lines = [f"type {rs.cartan_type}: {rs.n_positive} positive roots"]
        lines += [f"{r + 1}: " + " ".join(str(c) for c in v)
                  for r, v in enumerate(rs.roots)]
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def _class_rows(rs, cap):
    return [{
        "size": c.size,
        "min_length": c.min_length,
        "max_length": c.max_length,
        "representative_word": c.representative.word_str(),
        "involution": c.is_involution_class,
        "n_max_length_elements": len(c.max_elements),
    } for c in conjugacy.all_classes(rs, cap)]


def cmd_classes(args) -> int:
    rs = build_root_system(args.type)
    rows = _class_rows(rs, _effective_cap(args))
    if args.format == "json":
        _emit(_dump_json({"type": str(rs.cartan_type), "rank": rs.rank,
                          "classes": rows}), args.out)
    elif args.format == "csv":
        header = ["size", "min_length", "max_length", "representative_word",
                  "involution", "n_max_length_elements"]
        _emit(_csv_text(header, [[r[h] for h in header] for r in rows]),
              args.out)
    else:
        lines = [f"type {rs.cartan_type}: {len(rows)} conjugacy classes"]
        lines += [(f"size={r['size']:>6} len {r['min_length']:>3}.."
                   f"{r['max_length']:<3} top#={r['n_max_length_elements']:<4} "
                   f"{'inv' if r['involution'] else '   '} "
                   f"rep={r['representative_word']}") for r in rows]
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_wm(args) -> int:
    rs = build_root_system(args.type)
    lat = wm.wm_classes(rs, _effective_cap(args))
    rows = [{
        "sigma": _sigma_io(en.sigma),
        "max_word": en.max_element.word_str(),
        "rank_defect": en.rank_defect,
        "fixed_dim": en.fixed_dim,
        "predicted_dimension": en.predicted_dimension,
    } for en in lat.entries]
    if args.format == "json":
        _emit(_dump_json({"type": str(rs.cartan_type), "rank": rs.rank,
                          "entries": rows}), args.out)
    elif args.format == "csv":
        header = ["sigma", "max_word", "rank_defect", "fixed_dim",
                  "predicted_dimension"]
        csv_rows = [[",".join(str(i) for i in r["sigma"]), r["max_word"],
                     r["rank_defect"], r["fixed_dim"],
                     r["predicted_dimension"]] for r in rows]
        _emit(_csv_text(header, csv_rows), args.out)
    else:
        lines = [f"type {rs.cartan_type}: {len(rows)} unique-max classes"]
        for r in rows:
            sigma = "{" + ",".join(str(i) for i in r["sigma"]) + "}"
            lines.append(
                f"sigma={sigma:<16} rk_defect={r['rank_defect']} "
                f"fixed_dim={r['fixed_dim']} "
                f"dim={r['predicted_dimension']:>3} max={r['max_word']}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_bruhat(args) -> int:
    rs = build_root_system(args.type)
    u = from_word(rs, parse_word(args.u, rs.rank))
    v = from_word(rs, parse_word(args.v, rs.rank))
    uv = bruhat.bruhat_leq(u, v)
    vu = bruhat.bruhat_leq(v, u)
    if uv and vu:
        verdict = "u = v"
    elif uv:
        verdict = "u < v"
    elif vu:
        verdict = "u > v"
    else:
        verdict = "incomparable"
    if args.format == "json":
        _emit(_dump_json({"type": str(rs.cartan_type), "rank": rs.rank,
                          "u": u.word_str(), "v": v.word_str(),
                          "verdict": verdict}), args.out)
    elif args.format == "csv":
        _emit(_csv_text(["u", "v", "verdict"],
                        [[u.word_str(), v.word_str(), verdict]]), args.out)
    else:
        _emit(verdict + "\n", args.out)
    return 0


def _oracle_suite(rs, cap) -> wm.CheckReport:
    """Differential check of the main order and partition against the
    brute-force references."""
    ocap = oracle.ORACLE_CAP if cap is None else min(cap, oracle.ORACLE_CAP)
    elements = oracle.enumerate_group(rs, ocap)
    orc = oracle.bruhat_oracle(rs, ocap)
    n_checked = n_passed = 0
    bad = []
    for u in elements:
        for v in elements:
            n_checked += 1
            if bruhat.bruhat_leq(u, v) == orc.leq(u, v):
                n_passed += 1
            else:
                bad.append(f"order divergence at u={u.word_str()} "
                           f"v={v.word_str()}")
    n_checked += 1
    main_partition = {c.elements for c in conjugacy.all_classes(rs, cap)}
    if main_partition == set(oracle.classes_oracle(rs, ocap)):
        n_passed += 1
    else:
        bad.append("class partitions differ")
    return wm.CheckReport("oracle", rs.cartan_type, n_checked, n_passed,
                          tuple(bad))


def run_suite(rs, suite: str, cap: int | None, jobs: int) -> wm.CheckReport:
    if suite == "theorem-max":
        return wm.theorem_max_check(rs, cap, jobs=jobs)
    if suite == "rank-lemma":
        return wm.rank_lemma_suite(rs)
    if suite == "psi-argmax":
        return wm.psi_rank_maximization_check(rs, cap)
    if suite == "gkp":
        sample = (None if weyl_order(rs.cartan_type) <= GKP_EXHAUSTIVE_LIMIT
                  else GKP_SAMPLE_SIZE)
        return wm.gkp_suite(rs, cap, sample=sample, jobs=jobs)
    if suite == "chain-step":
        return wm.chain_step_property_check(rs, cap, jobs=jobs)
    if suite == "lattice":
        return wm.lattice_check(wm.wm_classes(rs, cap))
    if suite == "oracle":
        return _oracle_suite(rs, cap)
    raise ValueError(f"unknown suite {suite!r}")


def cmd_verify(args) -> int:
    rs = build_root_system(args.type)
    cap = _effective_cap(args)
    if args.suite == "all":
        suites = ["theorem-max", "rank-lemma", "psi-argmax", "gkp",
                  "chain-step", "lattice"]
        if args.with_oracle:
            suites.append("oracle")
    else:
        suites = [args.suite]
    reports = [run_suite(rs, s, cap, args.jobs) for s in suites]
    if args.format == "json":
        _emit(_dump_json([r.to_json_dict() for r in reports]), args.out)
    elif args.format == "csv":
        header = ["suite", "type", "rank", "n_checked", "n_passed", "passed"]
        rows = [[r.suite, str(r.cartan_type), r.cartan_type.rank,
                 r.n_checked, r.n_passed, r.passed] for r in reports]
        _emit(_csv_text(header, rows), args.out)
    else:
        lines = []
        for r in reports:
            mark = "PASS" if r.passed else "FAIL"
            lines.append(f"[{mark}] {r.suite} on {r.cartan_type}: "
                         f"{r.n_passed}/{r.n_checked} checks")
            lines += [f"  counterexample: {c}" for c in r.counterexamples]
        _emit("\n".join(lines) + "\n", args.out)
    return 0 if all(r.passed for r in reports) else 1


# -- parser ---------------------------------------------------------------------


def _add_common(sub, cap=False):
    sub.add_argument("--type", required=True,
                     help="Cartan type, letter plus rank (e.g. A3, E6)")
    sub.add_argument("--format", choices=("text", "json", "csv"),
                     default="text")
    sub.add_argument("--out", default=None,
                     help="write output to this path instead of stdout")
    if cap:
        sub.add_argument(
            "--cap", type=int, default=None,
            help=f"enumeration cap on |W| (default "
                 f"{conjugacy.DEFAULT_ENUMERATION_CAP}; env "
                 f"{conjugacy.CAP_ENV_VAR})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weylmax",
        description="Exact Weyl group combinatorics: roots, conjugacy "
                    "classes, Bruhat order, unique-maximum classes, and "
                    "verification suites.")
    parser.add_argument("--kernel-info", action="store_true",
                        help="print the active kernel backend and exit")
    subs = parser.add_subparsers(dest="command")

    p = subs.add_parser("roots", help="list the positive roots")
    _add_common(p)
    p.set_defaults(fn=cmd_roots)

    p = subs.add_parser("classes", help="conjugacy class table")
    _add_common(p, cap=True)
    p.set_defaults(fn=cmd_classes)

    p = subs.add_parser("wm", help="unique-max class table")
    _add_common(p, cap=True)
    p.set_defaults(fn=cmd_wm)

    p = subs.add_parser("bruhat", help="compare two elements given by words")
    _add_common(p)
    p.add_argument("--u", required=True, help="word for u, e.g. '1 2 1'")
    p.add_argument("--v", required=True, help="word for v")
    p.set_defaults(fn=cmd_bruhat)

    p = subs.add_parser("verify", help="run verification suites")
    _add_common(p, cap=True)
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--with-oracle", action="store_true",
                   help="include the brute-force differential suite in "
                        "--suite all")
    p.add_argument("--jobs", type=int, default=1,
                   help="worker threads for class-sharded suites; output "
                        "is identical for any value")
    p.set_defaults(fn=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.kernel_info:
        sys.stdout.write(f"kernel backend: {kernel.ACTIVE_BACKEND}\n")
        return 0
    if not getattr(args, "command", None):
        parser.print_help()
        return 2
    try:
        return args.fn(args)
    except WeylMaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
