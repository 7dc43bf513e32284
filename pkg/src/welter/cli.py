"""Command-line front door.

Commands: eval, best, pcheck, oracle-check, play, serve.  Positions are
given as ordinal strings in the 'w' grammar ("1", "w*2+4", "w^2+w*5+25").
Exit codes: 0 success (and P-position for pcheck), 1 N-position or failed
check, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import itertools
import json
import random
import sys
from typing import Iterable, Sequence

from .moves import Move
from .nim_transfinite import grundy_nim, winning_moves_nim
from .nimber import nim_sum
from .oracle import (
    GrundyOracle,
    apply_move,
    engine_move,
    is_terminal,
)
from .ordinal import Ordinal, cmp, format_ordinal, parse_ordinal
from .welter_finite import welter_value_pairwise
from .welter_transfinite import (
    blocks,
    canonical_position,
    grundy_welter_transfinite,
    is_p_position,
    winning_moves_transfinite,
)

# The finite part of the classic five-coin walkthrough's unique good move
# is often given as 6, which fails its own equation; the engine reports the
# actual solution and flags the mismatch when asked about that position.
_WALKTHROUGH_POSITION = frozenset(
    parse_ordinal(s) for s in ("1", "w*2+4", "w*2+9", "w^2+w*4+16", "w^2+w*5+25")
)
_WALKTHROUGH_NOTE = (
    "the finite part of this move must solve [x|16] = 13, whose unique "
    "solution is x = 30; the walkthrough value 6 fails its own equation "
    "(6 xor 16 - 1 = 21, not 13)"
)


class CliError(Exception):
    """Input or usage error; maps to exit code 2."""


def _parse_position(texts: Sequence[str], game: str) -> tuple[Ordinal, ...]:
    try:
        coins = tuple(parse_ordinal(t) for t in texts)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    if game == "welter":
        try:
            return canonical_position(coins)
        except ValueError as exc:
            raise CliError(str(exc)) from exc
    return coins


def _fmt_all(ordinals: Iterable[Ordinal]) -> list[str]:
    return [format_ordinal(a) for a in ordinals]


def _block_rows(coins: Sequence[Ordinal]) -> list[dict]:
    table = blocks(coins)
    return [
        {"lambda": format_ordinal(lam), "squares": sorted(table[lam])}
        for lam in sorted(table)
    ]


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload))
    else:
        for line in text_lines:
            print(line)


def cmd_eval(args) -> int:
    position = _parse_position(args.position, args.game)
    if args.game == "nim":
        value = grundy_nim(position)
        p_pos = value.is_zero
        payload = {
            "game": "nim",
            "position": _fmt_all(position),
            "value": format_ordinal(value),
            "p_position": p_pos,
        }
        lines = [
            f"value: {format_ordinal(value)}",
            f"verdict: {'P-position' if p_pos else 'N-position'}",
        ]
    else:
        value = grundy_welter_transfinite(position)
        p_pos = is_p_position(position)
        rows = _block_rows(position)
        payload = {
            "game": "welter",
            "position": _fmt_all(position),
            "value": format_ordinal(value),
            "p_position": p_pos,
            "blocks": rows,
        }
        lines = [
            f"value: {format_ordinal(value)}",
            f"verdict: {'P-position' if p_pos else 'N-position'}",
            "blocks:",
        ]
        lines += [
            "  lambda {}: {}".format(r["lambda"], " ".join(map(str, r["squares"])))
            for r in rows
        ]
    _emit(args, payload, lines)
    return 0


def cmd_best(args) -> int:
    position = _parse_position(args.position, args.game)
    if args.game == "nim":
        value = grundy_nim(position)
        moves = winning_moves_nim(position)
    else:
        value = grundy_welter_transfinite(position)
        moves = winning_moves_transfinite(position)
    note = None
    if args.game == "welter" and frozenset(position) == _WALKTHROUGH_POSITION:
        note = _WALKTHROUGH_NOTE
    payload = {
        "game": args.game,
        "position": _fmt_all(position),
        "value": format_ordinal(value),
        "p_position": value.is_zero,
        "winning_moves": [
            {"from": format_ordinal(m.source), "to": format_ordinal(m.target)}
            for m in moves
        ],
    }
    if note:
        payload["note"] = note
    lines = [f"value: {format_ordinal(value)}"]
    if moves:
        lines.append("winning moves:")
        lines += [f"  {format_ordinal(m.source)} -> {format_ordinal(m.target)}" for m in moves]
    else:
        lines.append("no winning moves (P-position)")
    if note:
        lines.append(f"note: {note}")
    _emit(args, payload, lines)
    return 0


def cmd_pcheck(args) -> int:
    position = _parse_position(args.position, args.game)
    if args.game == "nim":
        p_pos = grundy_nim(position).is_zero
    else:
        p_pos = is_p_position(position)
    payload = {"game": args.game, "position": _fmt_all(position), "p_position": p_pos}
    _emit(args, payload, ["P-position" if p_pos else "N-position"])
    return 0 if p_pos else 1


def _oracle_rows(game: str, items: int, bound: int) -> list[dict]:
    oracle = GrundyOracle(game)
    rows = []
    for k in range(items + 1):
        combos = (
            itertools.combinations_with_replacement(range(bound), k)
            if game == "nim"
            else itertools.combinations(range(bound), k)
        )
        checked = mismatches = 0
        for pos in combos:
            checked += 1
            closed = nim_sum(pos) if game == "nim" else welter_value_pairwise(pos)
            if closed != oracle.value(pos):
                mismatches += 1
        rows.append({"items": k, "positions": checked, "mismatches": mismatches})
    return rows


def cmd_oracle_check(args) -> int:
    rows = _oracle_rows(args.game, args.items, args.bound)
    ok = all(r["mismatches"] == 0 for r in rows)
    payload = {"game": args.game, "bound": args.bound, "rows": rows, "ok": ok}
    name = "heaps" if args.game == "nim" else "coins"
    lines = [
        f"{name}={r['items']} positions={r['positions']} mismatches={r['mismatches']}"
        for r in rows
    ]
    lines.append("ok" if ok else "MISMATCH")
    _emit(args, payload, lines)
    return 0 if ok else 1


def _show_position(position: tuple[Ordinal, ...], game: str) -> list[str]:
    lines = [f"position: {' '.join(_fmt_all(position))}"]
    if game == "welter":
        for row in _block_rows(position):
            lines.append(
                "  block {}: {}".format(row["lambda"], " ".join(map(str, row["squares"])))
            )
        value = grundy_welter_transfinite(position)
    else:
        value = grundy_nim(position)
    lines.append(f"value: {format_ordinal(value)}")
    return lines


def _read_move(line: str) -> tuple[Ordinal, Ordinal]:
    parts = [p for p in line.replace("->", " ").split() if p]
    if len(parts) != 2:
        raise ValueError("enter a move as: FROM TO (ordinal strings)")
    return parse_ordinal(parts[0]), parse_ordinal(parts[1])


def _human_move(position: tuple[Ordinal, ...], game: str) -> tuple[Ordinal, Ordinal]:
    occupied = set(position)
    while True:
        try:
            line = input("your move (FROM TO): ").strip()
        except EOFError:
            raise CliError("input ended before the game finished") from None
        if line.lower() in ("quit", "resign"):
            raise CliError("resigned")
        try:
            src, dst = _read_move(line)
        except ValueError as exc:
            print(f"invalid input: {exc}")
            continue
        if game == "nim":
            if src not in occupied:
                print("no such heap")
                continue
            if not cmp(dst, src) < 0:
                print("not smaller")
                continue
            return src, dst
        if src not in occupied:
            print("no such coin")
            continue
        if dst in occupied:
            print("occupied")
            continue
        if not cmp(dst, src) < 0:
            print("not smaller")
            continue
        return src, dst


def cmd_play(args) -> int:
    position = _parse_position(args.position, args.game)
    rng = random.Random(args.seed)
    mover = "human" if args.first == "human" else "engine"
    while True:
        for line in _show_position(position, args.game):
            print(line)
        if is_terminal(position, args.game):
            winner = "engine" if mover == "human" else "you"
            print(f"no moves left: {winner} win{'s' if winner == 'engine' else ''}")
            return 0
        if mover == "human":
            src, dst = _human_move(position, args.game)
            move = Move(index=position.index(src), source=src, target=dst)
            print(f"you: {format_ordinal(src)} -> {format_ordinal(dst)}")
        else:
            move = engine_move(position, args.game, rng, args.budget)
            print(f"engine: {format_ordinal(move.source)} -> {format_ordinal(move.target)}")
        position = apply_move(position, move, args.game)
        mover = "engine" if mover == "human" else "human"


def cmd_serve(args) -> int:
    from .service import serve

    serve(bind=args.bind, snapshot=args.snapshot, static_dir=args.static, seed=args.seed)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="welter",
        description="Exact solver for Nim and Welter's Game on finite and transfinite boards.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, positional=True):
        p.add_argument("--game", choices=("nim", "welter"), default="welter")
        p.add_argument("--format", choices=("text", "json"), default="text")
        if positional:
            p.add_argument("position", nargs="+", help="ordinal strings, e.g. 1 w*2+4 w^2+w*5+25")

    p_eval = sub.add_parser("eval", help="Grundy value, verdict and block table")
    common(p_eval)
    p_eval.set_defaults(func=cmd_eval)

    p_best = sub.add_parser("best", help="all winning moves")
    common(p_best)
    p_best.set_defaults(func=cmd_best)

    p_pcheck = sub.add_parser("pcheck", help="exit 0 iff the position is a P-position")
    common(p_pcheck)
    p_pcheck.set_defaults(func=cmd_pcheck)

    p_oracle = sub.add_parser("oracle-check", help="compare closed forms against the mex oracle")
    p_oracle.add_argument("--game", choices=("nim", "welter"), default="welter")
    p_oracle.add_argument("--format", choices=("text", "json"), default="text")
    p_oracle.add_argument("--items", type=int, default=3, help="max coins/heaps (default 3)")
    p_oracle.add_argument("--bound", type=int, default=16, help="exclusive square/size bound (default 16)")
    p_oracle.set_defaults(func=cmd_oracle_check)

    p_play = sub.add_parser("play", help="play against the engine in the terminal")
    common(p_play)
    p_play.add_argument("--first", choices=("human", "engine"), default="human")
    p_play.add_argument("--seed", type=int, default=0)
    p_play.add_argument("--budget", type=int, default=64)
    p_play.set_defaults(func=cmd_play)

    p_serve = sub.add_parser("serve", help="run the HTTP JSON API")
    p_serve.add_argument("--bind", default=None, help="HOST:PORT (default env WELTER_BIND or 127.0.0.1:8000)")
    p_serve.add_argument("--snapshot", default=None, help="append session snapshots to this JSON-lines file")
    p_serve.add_argument("--static", default=None, help="serve static files from this directory")
    p_serve.add_argument("--seed", type=int, default=0)
    p_serve.set_defaults(func=cmd_serve)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
