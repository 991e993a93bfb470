"""Command-line interface.

Exit codes: 0 the claim holds / success, 1 the input is well formed but the
claim is false, 2 usage or input error, 3 a brute-force limit was exceeded.
Human-readable summaries go to stdout; machine formats go to files.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from math import gcd
from pathlib import Path

from .constructions import GalleryId, build_E, build_F, build_Y, gallery, s_formula
from .errors import CapacityError, MinSupportError
from .extremality import (
    cycle_edges,
    decompose,
    find_cycle,
    support_graph,
    to_dot,
)
from .formats import read_matrix, write_matrix
from .matrix import UMatrix, format_rational, require_member, scale_check_birkhoff, support, validate, verify_tiling
from .oracle.census import (
    CENSUS_SUM_LIMIT,
    DEFAULT_CENSUS_SIZE_LIMIT,
    PROFILE_SUM_LIMIT,
    SUBSET_CELL_LIMIT,
    enumerate_extremal,
    oracle_min_support,
    write_census,
)
from .oracle.equivalence import are_equivalent

OK, REFUTED, USAGE, CAPACITY = 0, 1, 2, 3


def _out(text: str = "") -> None:
    print(text)


def _err(text: str) -> None:
    print(f"error: {text}", file=sys.stderr)


def _summary(M: UMatrix) -> str:
    return f"{M.n}x{M.m}, support {len(support(M))}, S({M.n},{M.m}) = {s_formula(M.n, M.m)}"


# ---------------------------------------------------------------- construct


def cmd_construct(args) -> int:
    kind = args.kind
    params = args.params
    if kind == "gallery":
        if len(params) != 1:
            _err("construct gallery takes one tag: " + ", ".join(g.value for g in GalleryId))
            return USAGE
        try:
            tag = GalleryId(params[0])
        except ValueError:
            _err(f"unknown gallery tag {params[0]!r}; choose from " + ", ".join(g.value for g in GalleryId))
            return USAGE
        M, label = gallery(tag), tag.value
    else:
        if len(params) != 2:
            _err(f"construct {kind} takes two integers")
            return USAGE
        try:
            a, b = (int(p) for p in params)
        except ValueError:
            _err(f"construct {kind} parameters must be integers, got {' '.join(params)}")
            return USAGE
        builder = {"E": build_E, "F": build_F, "Y": build_Y}[kind]
        M = builder(a, b)
        label = f"{kind}_{M.n}x{M.m}"
    path = Path(args.output) if args.output else Path(f"{label}.{args.format}")
    write_matrix(M, path, args.format)
    _out(f"{label}: {_summary(M)}")
    _out(f"wrote {path}")
    return OK


# ---------------------------------------------------------------- check


def cmd_check(args) -> int:
    M = read_matrix(args.path)
    pred = args.predicate
    if pred == "member":
        report = validate(M)
        if report.is_member:
            _out(f"member of M({M.n},{M.m})")
            return OK
        _out(f"not a member of M({M.n},{M.m}):")
        for v in report.violations:
            _out(f"  {v}")
        return REFUTED
    if pred == "tiling":
        holds = verify_tiling(M)
        _out(f"tiles Z_{M.n} x Z_{M.m} with both translate families: {'yes' if holds else 'no'}")
        return OK if holds else REFUTED
    require_member(M, f"check {pred}")
    if pred == "extremal":
        w = find_cycle(support_graph(M))
        if w is None:
            _out(f"extremal: support graph is a forest ({_summary(M)})")
            return OK
        _out("not extremal: support graph has a cycle")
        _out(f"  cycle {w.describe()}")
        return REFUTED
    if pred == "birkhoff":
        holds = scale_check_birkhoff(M)
        _out(f"(1/{M.n})M is a permutation matrix: {'yes' if holds else 'no'}")
        return OK if holds else REFUTED
    # minimum
    size, target = len(support(M)), s_formula(M.n, M.m)
    _out(f"support {size}, n + m - gcd(n, m) = {target}")
    code = OK if size == target else REFUTED
    if args.oracle:
        value, method = oracle_min_support(M.n, M.m)
        _out(f"brute-force minimum ({method}) = {value}")
        if value != target:
            _out("oracle disagrees with n + m - gcd(n, m)")
            code = REFUTED
        if size != value:
            code = REFUTED
    _out("minimum" if code == OK else "not minimum")
    return code


# ---------------------------------------------------------------- decompose


def cmd_decompose(args) -> int:
    M = read_matrix(args.path)
    require_member(M, "decompose")
    dec = decompose(M)
    problems = dec.verify(M)
    if problems:
        raise RuntimeError("decomposition failed verification: " + "; ".join(problems))
    out = Path(args.output)
    out.mkdir(parents=True, exist_ok=True)
    width = max(3, len(str(len(dec))))
    terms = []
    for k, (c, V) in enumerate(dec, start=1):
        name = f"term_{k:0{width}d}.json"
        write_matrix(V, out / name, "json")
        terms.append({"coefficient": format_rational(c), "matrix": name, "support": len(support(V))})
    manifest = {"n": M.n, "m": M.m, "terms": terms}
    (out / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n")
    _out(f"{len(dec)} extremal term{'s' if len(dec) != 1 else ''}, coefficients sum to 1, recombination exact")
    for t in terms:
        _out(f"  {t['coefficient']:>8}  {t['matrix']}  (support {t['support']})")
    _out(f"wrote {out / 'manifest.json'}")
    return OK


# ---------------------------------------------------------------- table


def cmd_table(args) -> int:
    pairs = [(n, m) for n in range(2, args.max_n + 1) for m in range(n, args.max_m + 1)]
    if args.mode != "formula":
        too_big = [(n, m) for n, m in pairs if n * m > SUBSET_CELL_LIMIT and n + m > PROFILE_SUM_LIMIT]
        if too_big:
            n, m = too_big[0]
            raise CapacityError(
                f"no oracle for ({n},{m}): needs n*m <= {SUBSET_CELL_LIMIT} or n + m <= {PROFILE_SUM_LIMIT}"
            )
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "m", "gcd", "formula", "oracle", "method", "agree"])
    disagreements = []
    for n, m in pairs:
        formula = s_formula(n, m) if args.mode != "oracle" else ""
        oracle, method = oracle_min_support(n, m) if args.mode != "formula" else ("", "")
        agree = ""
        if args.mode == "both":
            agree = "yes" if formula == oracle else "no"
            if formula != oracle:
                disagreements.append((n, m, formula, oracle))
        w.writerow([n, m, gcd(n, m), formula, oracle, method, agree])
    if args.output:
        Path(args.output).write_text(buf.getvalue())
        _out(f"S(n,m) for 2 <= n <= {args.max_n}, n <= m <= {args.max_m}: {len(pairs)} entries ({args.mode})")
        _out(f"wrote {args.output}")
    else:
        sys.stdout.write(buf.getvalue())
    for n, m, f, o in disagreements:
        print(f"disagreement at ({n},{m}): formula {f}, oracle {o}", file=sys.stderr)
    return REFUTED if disagreements else OK


# ---------------------------------------------------------------- census


def cmd_census(args) -> int:
    n, m = args.n, args.m
    if n + m > CENSUS_SUM_LIMIT:
        raise CapacityError(f"census is limited to n + m <= {CENSUS_SUM_LIMIT}")
    c = enumerate_extremal(n, m, limit=args.limit)
    jsonl = Path(args.output) if args.output else Path(f"census_{n}x{m}.jsonl")
    hist = Path(args.hist) if args.hist else jsonl.with_name(jsonl.stem + "_hist.csv")
    stats = write_census(c, jsonl, hist)
    _out(f"M({n},{m}): {stats.count} extremal supports")
    _out(f"  support sizes {stats.min_size}..{stats.max_size}; histogram {stats.histogram}")
    _out(f"  {stats.class_count} equivalence classes")
    _out(f"wrote {jsonl} and {hist}")
    return OK


# ---------------------------------------------------------------- graph


def cmd_graph(args) -> int:
    M = read_matrix(args.path)
    G = support_graph(M)
    w = find_cycle(G)
    path = Path(args.output) if args.output else Path(args.path).with_suffix(".dot")
    path.write_text(to_dot(G, cycle_edges(w)))
    shape = "forest" if w is None else f"has a cycle {w.describe()}"
    _out(f"{G.n + G.m} nodes, {len(G.edges)} edges; {shape}")
    _out(f"wrote {path}")
    return OK


# ---------------------------------------------------------------- equivalent


def cmd_equivalent(args) -> int:
    A, B = read_matrix(args.first), read_matrix(args.second)
    same = are_equivalent(A, B)
    _out("equivalent" if same else "not equivalent")
    return OK if same else REFUTED


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="minsupport",
        description="Build and check doubly stochastic matrices with uniform marginals.",
    )
    p.add_argument("--seed", type=int, default=None, help="reserved; no command is randomized")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build E(n,k), F(n,m), Y(n,m) or a gallery matrix")
    c.add_argument("kind", choices=["E", "F", "Y", "gallery"])
    c.add_argument("params", nargs="+", help="E: n k; F/Y: n m; gallery: tag")
    c.add_argument("-o", "--output")
    c.add_argument("--format", choices=["json", "csv"], default="json")
    c.set_defaults(func=cmd_construct)

    c = sub.add_parser("check", help="test a predicate on a matrix file")
    c.add_argument("predicate", choices=["member", "extremal", "minimum", "tiling", "birkhoff"])
    c.add_argument("path")
    c.add_argument("--oracle", action="store_true", help="also compare against a brute-force minimum")
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("decompose", help="write a convex decomposition into extremal matrices")
    c.add_argument("path")
    c.add_argument("-o", "--output", default="decomposition", help="output directory")
    c.set_defaults(func=cmd_decompose)

    c = sub.add_parser("table", help="tabulate S(n,m) as CSV")
    c.add_argument("max_n", type=int)
    c.add_argument("max_m", type=int)
    c.add_argument("--mode", choices=["formula", "oracle", "both"], default="both")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_table)

    c = sub.add_parser("census", help="enumerate every extremal support of M(n,m)")
    c.add_argument("n", type=int)
    c.add_argument("m", type=int)
    c.add_argument("-o", "--output", help="JSON-lines output (default census_NxM.jsonl)")
    c.add_argument("--hist", help="histogram CSV (default next to the JSON-lines file)")
    c.add_argument("--limit", type=int, default=DEFAULT_CENSUS_SIZE_LIMIT, help="maximum number of supports")
    c.set_defaults(func=cmd_census)

    c = sub.add_parser("graph", help="write the support graph as DOT")
    c.add_argument("path")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_graph)

    c = sub.add_parser("equivalent", help="are two matrices equal up to row/column permutation")
    c.add_argument("first")
    c.add_argument("second")
    c.set_defaults(func=cmd_equivalent)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapacityError as exc:
        _err(str(exc))
        return CAPACITY
    except MinSupportError as exc:
        _err(str(exc))
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
