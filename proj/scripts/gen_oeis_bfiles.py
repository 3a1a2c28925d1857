#!/usr/bin/env python3
"""Regenerate the b-files under data/oeis/.

Independent reference implementation: membership of n in C_a is decided
straight from binary digit-sum parity, without going through the library.
The files are generated locally (no network); each records the first 1000
terms at offset 1, matching the layout OEIS b-files use.
"""

from pathlib import Path

# OEIS id -> shift a such that the sequence lists {n : parity(n+a) == parity(n)}.
CLASS_IDS = {
    "A079523": 1,
    "A081706": 2,
    "A161579": 3,
    "A161627": 4,
    "A161817": 5,
    "A161824": 6,
    "A162311": 7,
    "A161639": 8,
    "A161890": 9,
}

TERMS = 1000


def parity(n: int) -> int:
    return bin(n).count("1") % 2


def members(a: int, count: int) -> list[int]:
    out = []
    n = 0
    while len(out) < count:
        if parity(n + a) == parity(n):
            out.append(n)
        n += 1
    return out


def main() -> None:
    out_dir = Path(__file__).resolve().parent.parent / "data" / "oeis"
    out_dir.mkdir(parents=True, exist_ok=True)
    for oeis_id, a in sorted(CLASS_IDS.items()):
        path = out_dir / f"b{oeis_id[1:]}.txt"
        lines = [f"# {oeis_id}: generated locally by scripts/gen_oeis_bfiles.py"]
        lines += [f"{i + 1} {n}" for i, n in enumerate(members(a, TERMS))]
        path.write_text("\n".join(lines) + "\n")
        print(f"{path} ({TERMS} terms)")


if __name__ == "__main__":
    main()
