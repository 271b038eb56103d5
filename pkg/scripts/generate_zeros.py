"""Regenerate src/foxeq/data/zeros100.txt (ordinates of the first nontrivial zeta zeros).

Requires mpmath; run once, the output is committed.
"""
import sys
from pathlib import Path

import mpmath

COUNT = 100
OUT = Path(__file__).resolve().parents[1] / "src" / "foxeq" / "data" / "zeros100.txt"


def main(count=COUNT, out=OUT):
    mpmath.mp.dps = 30
    lines = [f"# ordinates of the first {count} nontrivial zeros of zeta(s), rho = 1/2 + i*gamma",
             "# computed with mpmath.zetazero at 30 significant digits"]
    for n in range(1, count + 1):
        lines.append(mpmath.nstr(mpmath.zetazero(n).imag, 20))
    out.write_text("\n".join(lines) + "\n", encoding="utf-8")


if __name__ == "__main__":
    main(*(int(a) for a in sys.argv[1:2]))
