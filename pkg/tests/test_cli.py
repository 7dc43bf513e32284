import json
import random
import subprocess
import sys

from welter import Ordinal, parse_ordinal
from welter.oracle import apply_move, engine_move, is_terminal

EXAMPLE_32 = ["1", "w*2+4", "w*2+9", "w^2+w*4+16", "w^2+w*5+25"]
EXAMPLE_31 = ["1", "w*2+4", "w^2*3+9", "w^2*2+w*4+16", "w^2+w*5+25"]


def run_cli(*args, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "welter", *args],
        capture_output=True,
        text=True,
        input=stdin,
        timeout=120,
    )


class TestEval:
    def test_welter_example(self):
        res = run_cli("eval", "--game", "welter", *EXAMPLE_32)
        assert res.returncode == 0
        assert "value: w+4" in res.stdout
        assert "N-position" in res.stdout
        assert "lambda 2: 4 9" in res.stdout

    def test_nim_example(self):
        res = run_cli("eval", "--game", "nim", *EXAMPLE_31)
        assert res.returncode == 0
        assert "value: w*3+5" in res.stdout

    def test_jammed(self):
        res = run_cli("eval", "--game", "welter", "0", "1", "2")
        assert res.returncode == 0
        assert "value: 0" in res.stdout
        assert "P-position" in res.stdout

    def test_parse_error_exits_2(self):
        res = run_cli("eval", "--game", "welter", "w+w^2")
        assert res.returncode == 2
        assert "error" in res.stderr

    def test_duplicate_coins_exit_2(self):
        res = run_cli("eval", "--game", "welter", "w", "w")
        assert res.returncode == 2

    def test_json_round_trips(self):
        res = run_cli("eval", "--format", "json", "--game", "welter", *EXAMPLE_32)
        payload = json.loads(res.stdout)
        assert payload["value"] == "w+4"
        assert payload["p_position"] is False
        assert {"lambda": "2", "squares": [4, 9]} in payload["blocks"]
        for text in payload["position"]:
            parse_ordinal(text)


class TestBest:
    def test_nim_example_exact_move(self):
        res = run_cli("best", "--game", "nim", *EXAMPLE_31)
        assert res.returncode == 0
        moves = [l.strip() for l in res.stdout.splitlines() if "->" in l]
        assert moves == ["w*2+4 -> w+1"]

    def test_welter_example_move_and_note(self):
        res = run_cli("best", "--game", "welter", *EXAMPLE_32)
        assert res.returncode == 0
        moves = [l.strip() for l in res.stdout.splitlines() if "->" in l]
        assert moves == ["w^2+w*5+25 -> w^2+w*4+30"]
        assert "note:" in res.stdout
        assert "30" in res.stdout and "21" in res.stdout

    def test_p_position(self):
        res = run_cli("best", "--game", "welter", "0", "1", "2")
        assert res.returncode == 0
        assert "no winning moves" in res.stdout

    def test_json(self):
        res = run_cli("best", "--format", "json", "--game", "welter", *EXAMPLE_32)
        payload = json.loads(res.stdout)
        assert payload["winning_moves"] == [{"from": "w^2+w*5+25", "to": "w^2+w*4+30"}]
        assert "note" in payload


class TestPcheck:
    def test_p_position_exit_0(self):
        res = run_cli("pcheck", "0", "1", "2")
        assert res.returncode == 0
        assert "P-position" in res.stdout

    def test_n_position_exit_1(self):
        res = run_cli("pcheck", *EXAMPLE_32)
        assert res.returncode == 1
        assert "N-position" in res.stdout

    def test_bad_input_exit_2(self):
        res = run_cli("pcheck", "w*0")
        assert res.returncode == 2


class TestOracleCheck:
    def test_nim_small(self):
        res = run_cli("oracle-check", "--game", "nim", "--items", "3", "--bound", "8")
        assert res.returncode == 0
        assert "ok" in res.stdout

    def test_welter_small_json(self):
        res = run_cli(
            "oracle-check", "--game", "welter", "--items", "2", "--bound", "10",
            "--format", "json",
        )
        payload = json.loads(res.stdout)
        assert payload["ok"] is True
        assert all(row["mismatches"] == 0 for row in payload["rows"])


def _scripted_adversary_session(coins, seed, budget=64):
    """Simulate the play loop with the human always moving the largest coin
    to the smallest free square; returns (stdin lines, move count)."""
    position = tuple(sorted(parse_ordinal(t) for t in coins))
    rng = random.Random(seed)
    lines = []
    mover = "human"
    while not is_terminal(position, "welter"):
        if mover == "human":
            occupied = {c.to_int() for c in position if c.is_finite}
            free = 0
            while free in occupied:
                free += 1
            source = position[-1]
            target = Ordinal.from_int(free)
            lines.append(f"{source} {target}")
            from welter.moves import Move

            move = Move(index=len(position) - 1, source=source, target=target)
        else:
            move = engine_move(position, "welter", rng, budget)
        position = apply_move(position, move, "welter")
        mover = "engine" if mover == "human" else "human"
    return lines, mover


class TestPlay:
    def test_scripted_session_engine_wins(self):
        lines, side_to_move_at_end = _scripted_adversary_session(EXAMPLE_32, seed=5)
        # the losing side is the one that cannot move at the end
        assert side_to_move_at_end == "human"
        stdin = "\n".join(lines) + "\n"
        res = run_cli(
            "play", "--game", "welter", "--first", "human", "--seed", "5", *EXAMPLE_32,
            stdin=stdin,
        )
        assert res.returncode == 0
        assert "engine wins" in res.stdout

    def test_illegal_moves_reprompt(self):
        lines, _ = _scripted_adversary_session(EXAMPLE_32, seed=5)
        bad_first = ["w 3", "w^2+w*5+25 w^2+w*5+25", "1 w", "nonsense"]
        stdin = "\n".join(bad_first + lines) + "\n"
        res = run_cli(
            "play", "--game", "welter", "--first", "human", "--seed", "5", *EXAMPLE_32,
            stdin=stdin,
        )
        assert res.returncode == 0
        out = res.stdout
        assert "no such coin" in out
        assert "occupied" in out
        assert "not smaller" in out
        assert "invalid input" in out
        assert "engine wins" in out

    def test_eof_before_end_exits_2(self):
        res = run_cli(
            "play", "--game", "welter", "--first", "human", *EXAMPLE_32, stdin=""
        )
        assert res.returncode == 2
