"""
Command-line front end.

Every command builds a JSON-ready payload plus a plain-text rendering of
the same data. Exit codes: 0 success, 1 a checked statement failed,
2 bad usage or input.

>>> run(["rw", "list", "3241"]).payload
['1213', '1231', '2123']
>>> run(["enum", "partitions", "4"]).text.splitlines()[0]
'(4)'
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Any, Sequence

from . import elnitsky, enumeration, pattern_redwords, permutation_core, reduced_words, verify
from .errors import NoIsolatedEmbedding, RedwordsError, SpreadsNotContained
from .permutation_core import BarredPattern, Permutation, format_word

SUCCESS, VIOLATION, ERROR = "success", "violation", "error"
EXIT_CODES = {SUCCESS: 0, VIOLATION: 1, ERROR: 2}


@dataclass
class CommandResult:
    status: str
    payload: Any
    text: str
    json_mode: bool = False

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]


def _ok(payload, text: str) -> CommandResult:
    return CommandResult(SUCCESS, payload, text)


def _perm(text: str) -> Permutation:
    return Permutation.parse(text)


def _positions(text: str) -> tuple[int, ...]:
    return tuple(int(t) for t in text.replace(" ", "").split(",") if t)


# --- rw -------------------------------------------------------------------------


def cmd_rw(args) -> CommandResult:
    w = _perm(args.w)
    if args.action == "list":
        words = [str(r) for r in reduced_words.enumerate_reduced_words(w)]
        return _ok(words, "\n".join(words))
    if args.action == "classes":
        classes = reduced_words.commutation_classes(w)
        payload = [{"canonical": str(c.canonical), "size": c.size} for c in classes]
        return _ok(payload, "\n".join(f"{d['canonical'] or '()'} x{d['size']}" for d in payload))
    g = reduced_words.braid_graph(w)
    payload = {str(c.canonical): [str(g.vertices[j].canonical) for j in g.neighbors(i)]
               for i, c in enumerate(g.vertices)}
    return _ok(payload, g.adjacency_text())


# --- pattern ---------------------------------------------------------------------


def cmd_pattern(args) -> CommandResult:
    if args.action == "spreads":
        p = _perm(args.p)
        items = [str(q) for q in permutation_core.spreads(p)]
        return _ok(items, "\n".join(items))
    if args.w is None:
        raise RedwordsError(f"pattern {args.action} needs a host permutation")
    w = _perm(args.w)
    if args.action == "occ":
        p = _perm(args.p)
        occs = permutation_core.occurrences(p, w)
        payload = [{"positions": list(o.positions), "values": list(o.values)} for o in occs]
        text = "\n".join(f"{format_word(o.positions, False)} -> {format_word(o.values, False)}" for o in occs)
        return _ok(payload, text)
    if args.action == "count":
        p = BarredPattern.parse(args.p)
        if p.barred:
            raise RedwordsError("count takes a plain pattern")
        c = permutation_core.count_pattern(p.full, w)
        return _ok(c, str(c))
    p = _perm(args.p)
    flag = permutation_core.spreads_contained(p, w)
    return _ok(flag, "true" if flag else "false")


# --- embed / stable -----------------------------------------------------------------


def cmd_embed(args) -> CommandResult:
    p, w = _perm(args.p), _perm(args.w)
    try:
        wit = pattern_redwords.construct_isolated_embedding(p, w)
    except SpreadsNotContained as exc:
        return _ok({"embeddable": False, "reason": str(exc)}, f"not embeddable: {exc}")
    except NoIsolatedEmbedding as exc:
        return CommandResult(VIOLATION, {"embeddable": False, "reason": str(exc)},
                             f"theorem violation: {exc}")
    payload = {"embeddable": True, **wit.to_json()}
    return _ok(payload, wit.describe())


def cmd_stable(args) -> CommandResult:
    p, w = _perm(args.p), _perm(args.w)
    occ = pattern_redwords.is_value_stable(p, w)
    if occ is None:
        return _ok({"value_stable": False}, "not value-stable")
    payload = {"value_stable": True, "positions": list(occ.positions), "values": list(occ.values)}
    return _ok(payload, f"value-stable: positions {format_word(occ.positions, False)} "
                        f"values {format_word(occ.values, False)}")


# --- tile --------------------------------------------------------------------------


def _pick_class(w: Permutation, key: str | None):
    ts = elnitsky.tilings(w)
    if key is None:
        return ts[0]
    for t in ts:
        if str(t.word) == key:
            return t
    if key.isdigit() and 1 <= int(key) <= len(ts):
        return ts[int(key) - 1]
    raise RedwordsError(f"no commutation class {key!r} for {w}; use a canonical word or 1..{len(ts)}")


def _tiling_payload(t: elnitsky.Tiling) -> dict:
    return {"class": str(t.word), "class_size": t.commutation_class.size,
            "tiles": [{"label": x.label, "position": x.position, "values": list(x.values)} for x in t.tiles]}


def _tiling_text(t: elnitsky.Tiling) -> str:
    tiles = " ".join(f"{x.label}:{x.position}({x.values[0]},{x.values[1]})" for x in t.tiles)
    return f"{t.word or '()'} x{t.commutation_class.size}  {tiles}".rstrip()


def _emit_svg(svg: str, out: str | None, what: str) -> CommandResult:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(svg)
        return _ok({"written": out, "bytes": len(svg.encode())}, f"wrote {what} to {out}")
    return _ok({"svg": svg}, svg.rstrip("\n"))


def cmd_tile(args) -> CommandResult:
    w = _perm(args.w)
    if args.action == "list":
        ts = elnitsky.tilings(w)
        return _ok([_tiling_payload(t) for t in ts], "\n".join(_tiling_text(t) for t in ts))
    if args.action == "svg":
        t = _pick_class(w, args.cls)
        return _emit_svg(elnitsky.render_svg(t, tile_labels=args.tile_labels), args.out, f"X({w}) class {t.word}")
    if args.host is None:
        raise RedwordsError(f"tile {args.action} needs a host permutation")
    p, host = w, _perm(args.host)
    if args.action == "paw":
        wit = elnitsky.paw_witness(p, host)
        if wit is None:
            wit = elnitsky.paw_tiling(p, host)
        if wit is None:
            return _ok({"paw": None}, f"no X({p})-paw tiling of X({host})")
        if args.out:
            return _emit_svg(elnitsky.render_svg(wit, tile_labels=args.tile_labels), args.out, wit.describe())
        return _ok(wit.to_json(), wit.describe())
    # mono
    if not args.occ:
        raise RedwordsError("tile mono needs --occ")
    src = _pick_class(p, args.cls)
    t = elnitsky.mono(p, host, _positions(args.occ), src)
    if args.out:
        return _emit_svg(elnitsky.render_svg(t, tile_labels=args.tile_labels), args.out, f"MONO image {t.word}")
    return _ok({"source": str(src.word), **_tiling_payload(t)}, _tiling_text(t))


# --- enum ---------------------------------------------------------------------------


def cmd_enum(args) -> CommandResult:
    if args.action == "partitions":
        parts = (enumeration.partitions(args.size) if args.parts is None
                 else enumeration.partitions_with_k_parts(args.size, args.parts))
        items = [str(p) for p in parts]
        return _ok(items, "\n".join(items))
    if args.action == "avoiders":
        ws = sorted(enumeration.enumerate_avoiders(args.pattern, args.length, args.cap),
                    key=lambda w: (w.n, tuple(w)))
        payload = [{"w": str(w), "d": enumeration.support_size(w)} for w in ws]
        return _ok(payload, "\n".join(f"{d['w'] or '()'} d={d['d']}" for d in payload))
    if args.action == "table":
        rows = enumeration.table_132(args.lmax, args.dmax)
        payload = [{"d": d, "l": ell, "count": c} for d, row in enumerate(rows) for ell, c in enumerate(row)]
        return _ok(payload, enumeration.format_table(rows))
    # 231
    count = enumeration.count_231_by_length(args.n, args.length)
    formula = enumeration.formula_231(args.n, args.length)
    payload = {"n": args.n, "l": args.length, "count": count, "formula": formula}
    status = SUCCESS if count == formula else VIOLATION
    return CommandResult(status, payload, f"n={args.n} l={args.length}: count {count}, formula {formula}")


# --- verify ---------------------------------------------------------------------------

MAX_LISTED = 10


def cmd_verify(args) -> CommandResult:
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    reports = verify.run_suites(names, args.max_n)
    payload = {"max_n": args.max_n, "seed": args.seed, "suites": [r.to_json() for r in reports]}
    lines = []
    for r in reports:
        lines.append(f"{'PASS' if r.ok else 'FAIL'} {r}")
        lines.extend(f"    {v}" for v in r.violations[:MAX_LISTED])
        if len(r.violations) > MAX_LISTED:
            lines.append(f"    ... {len(r.violations) - MAX_LISTED} more")
    status = SUCCESS if all(r.ok for r in reports) else VIOLATION
    return CommandResult(status, payload, "\n".join(lines))


# --- parser ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="print JSON")

    parser = argparse.ArgumentParser(prog="redwords", description=__doc__.split("\n\n")[0].strip())
    parser.add_argument("--json", action="store_true", help="print JSON instead of text")
    parser.add_argument("--max-words", type=int, default=None,
                        help="cap on |R(w)| before enumeration refuses (also REDWORDS_MAX_WORDS)")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized checks (default 0)")
    sub = parser.add_subparsers(dest="command", required=True)

    rw = sub.add_parser("rw", parents=[common], help="reduced words, classes, braid graph")
    rw.add_argument("action", choices=["list", "classes", "graph"])
    rw.add_argument("w")
    rw.set_defaults(func=cmd_rw)

    pat = sub.add_parser("pattern", parents=[common], help="occurrences, counts and spreads")
    pat.add_argument("action", choices=["occ", "count", "spreads", "spreads-contained"])
    pat.add_argument("p")
    pat.add_argument("w", nargs="?")
    pat.set_defaults(func=cmd_pattern)

    emb = sub.add_parser("embed", parents=[common], help="construct an isolated embedding")
    emb.add_argument("p")
    emb.add_argument("w")
    emb.set_defaults(func=cmd_embed)

    st = sub.add_parser("stable", parents=[common], help="value-stable occurrence")
    st.add_argument("p")
    st.add_argument("w")
    st.set_defaults(func=cmd_stable)

    tile = sub.add_parser("tile", parents=[common], help="Elnitsky tilings, SVG, paws and MONO")
    tile.add_argument("action", choices=["list", "svg", "paw", "mono"])
    tile.add_argument("w", help="the polygon's permutation (the pattern for paw and mono)")
    tile.add_argument("host", nargs="?", help="host permutation for paw and mono")
    tile.add_argument("--class", dest="cls", default=None,
                      help="canonical word of a class, or its 1-based index")
    tile.add_argument("--occ", default=None, help="occurrence positions, e.g. 1,2,3,5,7")
    tile.add_argument("--out", default=None, help="write SVG here")
    tile.add_argument("--tile-labels", action="store_true", help="number the rhombi in the SVG")
    tile.set_defaults(func=cmd_tile)

    en = sub.add_parser("enum", parents=[common], help="partitions, avoiders, tables")
    esub = en.add_subparsers(dest="action", required=True)
    a = esub.add_parser("avoiders", parents=[common])
    a.add_argument("--pattern", default="132")
    a.add_argument("--length", type=int, required=True)
    a.add_argument("--cap", type=int, default=None, help="largest rank (needed for infinite sets)")
    t = esub.add_parser("table", parents=[common])
    t.add_argument("--lmax", type=int, default=11)
    t.add_argument("--dmax", type=int, default=11)
    pp = esub.add_parser("partitions", parents=[common])
    pp.add_argument("size", type=int)
    pp.add_argument("--parts", type=int, default=None)
    c = esub.add_parser("231", parents=[common])
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--length", type=int, required=True)
    en.set_defaults(func=cmd_enum)

    ver = sub.add_parser("verify", parents=[common], help="run exhaustive verification suites")
    ver.add_argument("--suite", choices=[*verify.SUITES, "all"], default="all")
    ver.add_argument("--max-n", type=int, default=5, help="rank bound (6 is the slow tier)")
    ver.set_defaults(func=cmd_verify)
    return parser


def run(argv: Sequence[str]) -> CommandResult:
    """Parse and execute; usage and input errors come back as status 'error'."""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return CommandResult(ERROR if exc.code else SUCCESS, None, "")
    saved = os.environ.get("REDWORDS_MAX_WORDS")
    if args.max_words is not None:
        os.environ["REDWORDS_MAX_WORDS"] = str(args.max_words)
    try:
        result = args.func(args)
    except (RedwordsError, ValueError) as exc:
        return CommandResult(ERROR, {"error": type(exc).__name__, "message": str(exc)},
                             f"error: {type(exc).__name__}: {exc}")
    finally:
        if saved is None:
            os.environ.pop("REDWORDS_MAX_WORDS", None)
        else:
            os.environ["REDWORDS_MAX_WORDS"] = saved
    result.json_mode = getattr(args, "json", False)
    return result


def main(argv: Sequence[str] | None = None) -> int:
    result = run(sys.argv[1:] if argv is None else argv)
    if result.status == ERROR and result.payload is None:
        return result.exit_code            # argparse already printed usage
    if result.json_mode:
        out = json.dumps(result.payload, indent=2, ensure_ascii=False)
    else:
        out = result.text
    stream = sys.stderr if result.status == ERROR else sys.stdout
    if out:
        print(out, file=stream)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
