"""How each rule behaves when two sources almost totally disagree.

Source 1 is 90% sure of A, source 2 is 90% sure of B, and both give the
leftover 10% to C. The conjunctive conflict is k12 = 0.99, which makes the
normalized rule conclude C with certainty — the classic argument for the
alternative redistribution strategies.

Run:  python demos/high_conflict.py
"""

from __future__ import annotations

from belieffusion import MassFunction, conflict, make_frame
from belieffusion.decision import betp
from belieffusion.rules import RULES

FRAME = make_frame(["A", "B", "C"])

m1 = MassFunction(FRAME, {FRAME.subset(["A"]): 0.9, FRAME.subset(["C"]): 0.1})
m2 = MassFunction(FRAME, {FRAME.subset(["B"]): 0.9, FRAME.subset(["C"]): 0.1})


def main() -> None:
    decomposition = conflict(m1, m2)
    print(f"total conflict k12 = {decomposition.total:.4f}")
    print("conflicting products:")
    for x, y, product in decomposition.pairs:
        print(f"  {x.label(FRAME)} x {y.label(FRAME)} -> {product:.4f}")

    for name in sorted(RULES):
        if name == "smets":
            continue
        out = RULES[name](m1, m2)
        masses = ", ".join(
            f"{fs.label(FRAME)}: {v:.4f}" for fs, v in sorted(out.items())
        )
        p = betp(out)
        pig = ", ".join(
            f"P({lbl}) = {p.prob(lbl):.4f}" for lbl in FRAME.labels
        )
        print(f"\n{name}\n  masses: {masses}\n  pignistic: {pig}")


if __name__ == "__main__":
    main()
