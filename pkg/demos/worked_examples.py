"""Recompute three classic two-source combination tables.

Each block fuses a pair of mass functions on the frame {A, B} under every
registered rule and prints the resulting table, so you can see how the
rules spread the conflicting mass differently on the same inputs.

Run:  python demos/worked_examples.py
"""

from __future__ import annotations

from belieffusion import MassFunction, conflict, make_frame
from belieffusion.rules import RULES

FRAME = make_frame(["A", "B"])


def bba(masses: dict[str, float]) -> MassFunction:
    return MassFunction(
        FRAME, {FRAME.subset(list(label)): v for label, v in masses.items()}
    )


PAIRS = {
    "low conflict (one-sided evidence)": (
        bba({"A": 0.6, "AB": 0.4}),
        bba({"B": 0.3, "AB": 0.7}),
    ),
    "partially agreeing sources": (
        bba({"A": 0.6, "AB": 0.4}),
        bba({"A": 0.2, "B": 0.3, "AB": 0.5}),
    ),
    "both sources committed": (
        bba({"A": 0.6, "B": 0.3, "AB": 0.1}),
        bba({"A": 0.2, "B": 0.3, "AB": 0.5}),
    ),
}

COLUMNS = ["A", "B", "A∪B"]


def main() -> None:
    for title, (m1, m2) in PAIRS.items():
        k12 = conflict(m1, m2).total
        print(f"\n=== {title}  (k12 = {k12:.4f}) ===")
        print(f"{'rule':<16}" + "".join(f"{c:>10}" for c in COLUMNS))
        for name in sorted(RULES):
            if name == "smets":
                continue  # open-world output; columns would not sum to 1
            out = RULES[name](m1, m2)
            row = {fs.label(FRAME): v for fs, v in out.items()}
            cells = "".join(f"{row.get(c, 0.0):>10.4f}" for c in COLUMNS)
            print(f"{name:<16}{cells}")


if __name__ == "__main__":
    main()
