"""Command-line front end."""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from collections import Counter
from typing import Optional, Sequence

from . import analytics
from . import fusion as fs
from . import linmap
from . import partition as pc
from . import verify as vf
from .category import CategoryTable, family_table, generated_table, parse_family
from .errors import HorizonTooSmall, PartitionError

CACHE_ENV = "NCFUSION_CACHE"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit with 2
        raise UsageError(message)


def _common(p: argparse.ArgumentParser, table: bool = True) -> None:
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--seed", type=int, default=0)
    if table:
        src = p.add_mutually_exclusive_group()
        src.add_argument("--family", help="allnc, pairs, unitary, cs:<s>, cinf, c0plus or allp")
        src.add_argument("--gen", help="file with one generator per line")
        p.add_argument("--bound", type=int, default=8)
        p.add_argument("--cache-dir", default=os.environ.get(CACHE_ENV))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ncfusion", description="Categories of noncrossing two-colored partitions.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("enumerate", help="list partitions with given row colorings")
    _common(p, table=False)
    p.add_argument("--upper", default="")
    p.add_argument("--lower", default="")
    p.add_argument("--crossing", action="store_true", help="include crossing partitions")

    p = sub.add_parser("closure", help="build (or load) a category table")
    _common(p)

    p = sub.add_parser("member", help="membership of one partition")
    _common(p)
    p.add_argument("--partition", required=True)

    p = sub.add_parser("classify", help="label set, one-dimensional group and freeness")
    _common(p)

    p = sub.add_parser("fusion", help="tensor product of two label words")
    _common(p)
    p.add_argument("--left", required=True, help="comma separated labels; x is the first label")
    p.add_argument("--right", required=True)

    p = sub.add_parser("tensor", help="decomposition of u_p ⊗ u_q for projective p, q")
    _common(p)
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)

    p = sub.add_parser("tmap", help="matrix of the linear map of a partition")
    _common(p, table=False)
    p.add_argument("--partition", required=True)
    p.add_argument("--N", type=int, default=4)
    p.add_argument("--raw", action="store_true", help="skip the normalization factor")

    p = sub.add_parser("dims", help="dimensions of the classes of short words")
    _common(p)
    p.add_argument("--N", type=int, default=4)
    p.add_argument("--tmax", type=int, default=2)

    p = sub.add_parser("balls", help="number of classes of each length")
    _common(p)
    p.add_argument("--kmax", type=int, default=3)

    p = sub.add_parser("verify", help="run invariant checks")
    _common(p, table=False)
    p.add_argument("--suite", choices=("all",) + tuple(vf.SUITES), default="all")
    p.add_argument("--N", type=int, default=4)
    p.add_argument("--bound", type=int, default=6)

    p = sub.add_parser("render", help="draw a partition")
    _common(p, table=False)
    p.add_argument("--partition", required=True)
    return parser


def read_generators(path: str) -> list[pc.Partition]:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if text.lstrip().startswith("["):
        items = json.loads(text)
        return [pc.from_json_obj(x) if isinstance(x, dict) else pc.from_text(x) for x in items]
    return [pc.from_text(line.strip()) for line in text.splitlines() if line.strip() and not line.startswith("#")]


def load_table(args) -> CategoryTable:
    if args.bound < 0:
        raise UsageError("--bound must be nonnegative")
    if args.gen:
        gens = read_generators(args.gen)
        return generated_table(gens, args.bound, cache_dir=args.cache_dir, label=args.gen)
    if not args.family:
        raise UsageError("one of --family or --gen is required")
    return family_table(parse_family(args.family), args.bound, cache_dir=args.cache_dir)


def _parse_word(S: fs.SClass, text: str) -> tuple:
    if text in ("", "-"):
        return ()
    labels = S.labels()
    by_name = {str(x): x for x in labels} | {S.name(x): x for x in labels}
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if tok == "x":
            out.append(labels[0] if S.kind != "PlusMinus" else 1)
        elif tok in by_name:
            out.append(by_name[tok])
        else:
            try:
                out.append(int(tok))
            except ValueError:
                raise UsageError(f"--left/--right: unknown label {tok!r}") from None
    return tuple(out)


def _word_text(S: fs.SClass, w) -> str:
    return ",".join(S.name(x) for x in w) or "empty"


def _emit(payload, fmt: str, text: Optional[str] = None) -> None:
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True, indent=2, default=str))
    else:
        print(text if text is not None else json.dumps(payload, sort_keys=True, default=str))


def cmd_enumerate(args) -> int:
    parts = pc.enumerate_partitions(args.upper, args.lower, noncrossing_only=not args.crossing)
    out = [pc.to_text(p) for p in parts]
    _emit({"count": len(out), "partitions": out}, args.format, "\n".join(out))
    return 0


def cmd_closure(args) -> int:
    table = load_table(args)
    counts = {}
    for n in range(table.bound + 1):
        counts[str(n)] = len(table.keys_of_size(n))
    payload = {"table": table.describe(), "bound": table.bound, "exact": table.exact, "keys_by_size": counts}
    text = "\n".join(f"{n:>3} {c}" for n, c in counts.items())
    _emit(payload, args.format, text)
    return 0


def cmd_member(args) -> int:
    table = load_table(args)
    p = pc.from_text(args.partition)
    m = table.member(p)
    _emit({"partition": pc.to_text(p), "member": m.value}, args.format, m.value)
    return 0


def cmd_classify(args) -> int:
    table = load_table(args)
    data = fs.classify(table)
    text = "\n".join(f"{k}: {v}" for k, v in sorted(data.items()))
    _emit(data, args.format, text)
    return 0


def cmd_fusion(args) -> int:
    table = load_table(args)
    S = fs.compute_S(table)
    w, w2 = _parse_word(S, args.left), _parse_word(S, args.right)
    terms = fs.word_tensor(S, w, w2)
    realized = fs.tensor_via_partitions(table, S, w, w2)
    rows = sorted((_word_text(S, t), m) for t, m in terms.items())
    payload = {
        "S": S.to_json_obj(),
        "left": _word_text(S, w),
        "right": _word_text(S, w2),
        "terms": [{"word": t, "multiplicity": m} for t, m in rows],
        "matches_partitions": isinstance(realized, Counter) and realized == terms,
    }
    text = " + ".join(f"{m}*[{t}]" if m > 1 else f"[{t}]" for t, m in rows)
    _emit(payload, args.format, text)
    return 0


def cmd_tensor(args) -> int:
    table = load_table(args)
    p, q = pc.from_text(args.left), pc.from_text(args.right)
    terms = fs.rep_tensor(table, p, q)
    payload = [{"partition": pc.to_text(r), "t": r.t, "present": m.value} for r, m in terms]
    text = "\n".join(f"{d['present']:>7}  t={d['t']}  {d['partition']}" for d in payload)
    _emit({"terms": payload}, args.format, text)
    return 0


def cmd_tmap(args) -> int:
    p = pc.from_text(args.partition)
    out = linmap.dump_matrix(p, args.N, normalized=not args.raw)
    text = f"N^{out['exponent']} *\n" + "\n".join(" ".join(str(x) for x in row) for row in out["entries"])
    _emit(out, args.format, text)
    return 0


def cmd_dims(args) -> int:
    table = load_table(args)
    S = fs.compute_S(table)
    rows = []
    for t in range(args.tmax + 1):
        for w in fs.words(S, t):
            p = fs.phi(S, w)
            rows.append({"t": t, "word": _word_text(S, w), "dim": analytics.dim_general(table, p, args.N)})
    text = "\n".join(f"{r['t']:>2}  {r['word']:<16} {r['dim']}" for r in rows)
    _emit({"N": args.N, "rows": rows}, args.format, text)
    return 0


def cmd_balls(args) -> int:
    table = load_table(args)
    rows = []
    for k in range(args.kmax + 1):
        b = analytics.ball_count(table, k)
        rows.append({"k": k, "count": b.count, "lower": b.lower, "upper": b.upper})
    text = "\n".join(f"{r['k']:>2}  {r['lower']} <= {r['count']} <= {r['upper']}" for r in rows)
    _emit({"rows": rows}, args.format, text)
    return 0


def cmd_verify(args) -> int:
    rng = random.Random(args.seed)
    suites = vf.SUITES if args.suite == "all" else [args.suite]
    results = [vf.SUITES[name](N=args.N, bound=args.bound, rng=rng) for name in suites]
    payload = {"results": [r.to_json_obj() for r in results], "ok": all(r.ok for r in results)}
    text = "\n".join(f"{'PASS' if r.ok else 'FAIL'}  {r.name}  ({r.checked} checks)" for r in results)
    _emit(payload, args.format, text)
    return 0 if payload["ok"] else 2


def cmd_render(args) -> int:
    p = pc.from_text(args.partition)
    _emit({"partition": pc.to_text(p), "drawing": pc.render(p)}, args.format, pc.render(p))
    return 0


COMMANDS = {
    "enumerate": cmd_enumerate,
    "closure": cmd_closure,
    "member": cmd_member,
    "classify": cmd_classify,
    "fusion": cmd_fusion,
    "tensor": cmd_tensor,
    "tmap": cmd_tmap,
    "dims": cmd_dims,
    "balls": cmd_balls,
    "verify": cmd_verify,
    "render": cmd_render,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except (PartitionError, ValueError, OSError, HorizonTooSmall) as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
