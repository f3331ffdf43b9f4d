"""Smoke test for the `ppg` extension module.

Build first:
    cargo build --release -p ppg-py --features extension-module
    cp target/release/libppg.so python/ppg.so
"""

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import ppg  # noqa: E402


def main():
    op = ppg.witness("OP")
    assert ppg.outcome(op) == "P"
    assert ppg.oracle_outcome(op) == "P"
    assert len(ppg.witness_names()) == 15

    en1 = ppg.Game(["a", "b"], [("a", "b")], [["a"]])
    assert ppg.solve(en1)["winner"] == "Maker"
    assert ppg.solve(en1, first="breaker")["winner"] == "Breaker"
    assert ppg.Game.parse(en1.to_text()) == en1

    board = ppg.connect_k(3, 3, 3)
    assert len(board) == 9 and len(board.winsets) == 8
    assert ppg.solve(board)["winner"] == "Maker"
    big = ppg.connect_k(4, 7, 6)
    assert len(big.winsets) == 69 and big.width == 7

    u = ppg.disjoint_union(en1, en1)
    assert ppg.outcome(u) == "M"
    assert ppg.outcome(u) in ppg.union_table("even", "even", "N", "N")

    sat = ppg.from_dimacs("p cnf 2 2\n1 -2 0\n2 0\n")
    assert ppg.solve(sat)["winner"] == "Breaker"

    mm = ppg.from_avoid_true("var p\nclause p\n")
    assert mm.convention == "maker-maker"
    assert ppg.solve(mm)["result"] in ("FirstWin", "SecondWin", "Draw")

    checked, failed = ppg.verify_family("dp", count=50, seed=1)
    assert checked == 50 and failed == 0

    try:
        ppg.Game.parse("ppg v1\nvertex a\ncover a a\n")
    except ValueError as e:
        assert "cycle" in str(e)
    else:
        raise AssertionError("cycle not rejected")

    print("ppg smoke test: ok")


if __name__ == "__main__":
    main()
