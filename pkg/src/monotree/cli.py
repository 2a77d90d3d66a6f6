"""Command line interface: ``mtd draw | verify | enumerate | gen``."""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from .enumeration import MAX_ENUM_N, enumerate_free_trees, enumerate_rooted_trees
from .io import FormatError, csv_rows, drawing_svg, format_coords, format_tree, parse_coords, parse_tree
from .layout import FOUR_Q, ONE_Q, TWO_Q, Drawing, GridDims, draw, grid_dims
from .tree import gen_complete_binary, gen_path, gen_random, gravity_root, root_at
from .verify import VerificationReport, check_bounds, check_embedding, first_crossing, first_non_monotone, verify

ALGO_NAMES = {"1q": ONE_Q, "2q": TWO_Q, "4q": FOUR_Q}

EXIT_OK, EXIT_INPUT, EXIT_VERIFY = 0, 2, 3

EMBEDDING_NOTE = (
    "Tree files list n, an optional 'root R' line, then n-1 edge lines 'u v'. "
    "The order in which each vertex's edges appear is its neighbour order; the "
    "1q and 2q drawings keep that order around every vertex."
)


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("MTD_THREADS", "")))
    except ValueError:
        return os.cpu_count() or 1


def _report_lines(r: VerificationReport) -> list[str]:
    lines = [
        f"monotone: {r.monotone}" + (f" (fails on pair {r.monotone_witness})" if r.monotone_witness else ""),
        f"planar: {r.planar}" + (f" (edges {r.planar_witness[0]} and {r.planar_witness[1]})" if r.planar_witness else ""),
        f"slope-disjoint: {r.nssd.status}" + (f" ({r.nssd.prop} at vertex {r.nssd.vertex})" if r.nssd.prop else ""),
        f"bounds: {r.bounds.ok} (observed {r.bounds.observed}, allowed {r.bounds.allowed})",
        f"embedding: {'n/a' if r.embedding_ok is None else r.embedding_ok}",
    ]
    return lines


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as e:
        raise FormatError(f"cannot read {path}: {e.strerror}") from None


def _read_tree(path: str):
    return parse_tree(_read(path))


def cmd_draw(args) -> int:
    tree, file_root = _read_tree(args.input)
    algo = ALGO_NAMES[args.algo]
    root = args.root if args.root is not None else file_root
    if algo == ONE_Q and root is None:
        raise FormatError("1q needs a root: add a 'root R' line or pass --root")
    if root is not None and not 0 <= root < tree.n:
        raise FormatError(f"root {root} out of range")
    d = draw(tree, algo, root)
    if args.coords:
        Path(args.coords).write_text(format_coords(d.coords))
    if args.svg:
        Path(args.svg).write_text(drawing_svg(d))
    if not args.coords and not args.svg:
        sys.stdout.write(format_coords(d.coords))
    print(f"grid: {grid_dims(d)}", file=sys.stderr)
    if args.verify:
        report = verify(d)
        for line in _report_lines(report):
            print(line, file=sys.stderr)
        if not report.ok:
            return EXIT_VERIFY
    return EXIT_OK


def cmd_verify(args) -> int:
    tree, file_root = _read_tree(args.input)
    coords = parse_coords(_read(args.coords), tree.n)
    algo = ALGO_NAMES[args.algo]
    root = args.root if args.root is not None else file_root
    if algo == ONE_Q:
        rooted = root_at(tree, root if root is not None else 0)
    elif algo == TWO_Q:
        rooted = root_at(tree, gravity_root(tree))
    else:
        rooted = None
    d = Drawing(tree, coords, algo, rooted.root if rooted else gravity_root(tree), rooted=rooted)
    mono = first_non_monotone(d)
    cross = first_crossing(d)
    bounds = check_bounds(d)
    emb = check_embedding(d)
    print(f"monotone: {mono is None}" + (f" (fails on pair {mono})" if mono else ""))
    print(f"planar: {cross is None}" + (f" (edges {cross[0]} and {cross[1]})" if cross else ""))
    print(f"bounds: {bounds.ok} (observed {bounds.observed}, allowed {bounds.allowed})")
    print(f"embedding: {'n/a' if emb is None else emb}")
    ok = mono is None and cross is None and bounds.ok and emb is not False
    return EXIT_OK if ok else EXIT_VERIFY


def _row(n: int, tree_id: int, algo: str, tree, root) -> dict:
    d = draw(tree, algo, root)
    r = verify(d)
    dims = grid_dims(d)
    return {
        "n": n,
        "tree_id": tree_id,
        "algo": algo,
        "width_pts": dims.width_points,
        "height_pts": dims.height_points,
        "monotone": r.monotone,
        "planar": r.planar,
        "bound_ok": r.bounds.ok,
        "embedding_ok": r.embedding_ok,
        "ok": r.ok,
    }


def enumerate_rows(n: int, algo: str, rooted: bool, threads: int = 1) -> list[dict]:
    if rooted:
        jobs = [(rt.tree, rt.root) for rt in enumerate_rooted_trees(n)]
    else:
        jobs = [(t, 0) for t in enumerate_free_trees(n)]

    def work(item):
        i, (tree, root) = item
        return _row(n, i, algo, tree, root)

    with ThreadPoolExecutor(max_workers=threads) as ex:
        return list(ex.map(work, enumerate(jobs)))


def cmd_enumerate(args) -> int:
    algo = ALGO_NAMES[args.algo]
    rooted = args.rooted if args.rooted is not None else algo == ONE_Q
    rows = enumerate_rows(args.n, algo, rooted, _threads())
    text = csv_rows(rows)
    if args.report:
        Path(args.report).write_text(text)
    else:
        sys.stdout.write(text)
    widest = max(rows, key=lambda r: (r["width_pts"] * r["height_pts"], r["width_pts"]))
    failures = sum(not r["ok"] for r in rows)
    print(
        f"{len(rows)} {'rooted' if rooted else 'free'} trees, n={args.n}, algo={args.algo}: "
        f"max dims {GridDims(widest['width_pts'], widest['height_pts'])} "
        f"(tree {widest['tree_id']}), {failures} failing",
        file=sys.stderr if not args.report else sys.stdout,
    )
    return EXIT_OK if failures == 0 else EXIT_VERIFY


def cmd_gen(args) -> int:
    if args.n < 1:
        raise FormatError("--n must be positive")
    if args.kind == "path":
        tree = gen_path(args.n)
    elif args.kind == "binary":
        levels = (args.n + 1).bit_length() - 1
        if 2**levels - 1 != args.n:
            raise FormatError("--kind binary needs n = 2^k - 1")
        tree = gen_complete_binary(levels)
    else:
        tree = gen_random(args.n, args.seed)
    text = format_tree(tree)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mtd", description="Monotone grid drawings of trees.", epilog=EMBEDDING_NOTE)
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("draw", help="draw a tree file", epilog=EMBEDDING_NOTE)
    d.add_argument("--algo", choices=ALGO_NAMES, required=True)
    d.add_argument("--input", required=True)
    d.add_argument("--root", type=int)
    d.add_argument("--coords", help="write 'v x y' lines here")
    d.add_argument("--svg", help="write an SVG picture here")
    d.add_argument("--verify", action="store_true", help="check the drawing; exit 3 on failure")
    d.set_defaults(func=cmd_draw)

    v = sub.add_parser("verify", help="check a coordinates file against a tree file")
    v.add_argument("--algo", choices=ALGO_NAMES, required=True, help="algorithm whose size bound applies")
    v.add_argument("--input", required=True)
    v.add_argument("--coords", required=True)
    v.add_argument("--root", type=int)
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("enumerate", help="draw and check every tree of a given size")
    e.add_argument("--n", type=int, required=True, choices=range(1, MAX_ENUM_N + 1), metavar="N")
    e.add_argument("--algo", choices=ALGO_NAMES, required=True)
    e.add_argument("--report", help="CSV output path (stdout if omitted)")
    g = e.add_mutually_exclusive_group()
    g.add_argument("--rooted", dest="rooted", action="store_true", default=None)
    g.add_argument("--free", dest="rooted", action="store_false")
    e.set_defaults(func=cmd_enumerate)

    gen = sub.add_parser("gen", help="write a tree file")
    gen.add_argument("--kind", choices=("path", "binary", "random"), required=True)
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out")
    gen.set_defaults(func=cmd_gen)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FormatError as e:
        print(f"mtd: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
