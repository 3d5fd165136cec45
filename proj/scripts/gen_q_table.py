#!/usr/bin/env python3
"""Regenerates core/src/q_table.inc.

Upper 5% points of the studentized range distribution for k = 2..12 groups
over the usual ladder of error degrees of freedom. Requires scipy.
"""

from pathlib import Path

from scipy.stats import studentized_range

KS = range(2, 13)
# The last row stands in for infinite df; it is labeled 1e18 in the table so
# lookups past df = 120 interpolate toward it in 1/df.
DFS = list(range(2, 31)) + [40, 60, 120, 100000]


def main() -> None:
    out = Path(__file__).resolve().parent.parent / "core" / "src" / "q_table.inc"
    lines = [
        "// Studentized range critical values q(alpha=0.05, k, df),",
        "// computed from the studentized range distribution (upper 5% point).",
        "// Rows: df values in kQTableDf; columns: k = 2..12.",
        "inline constexpr int kQTableKMin = 2;",
        "inline constexpr int kQTableKMax = 12;",
        "inline constexpr double kQTableDf[] = {"
        + ", ".join("1e18" if df == 100000 else str(df) for df in DFS)
        + "};",
        "inline constexpr double kQTable[][11] = {",
    ]
    for df in DFS:
        row = ", ".join(f"{studentized_range.ppf(0.95, k, df):.6f}" for k in KS)
        lines.append("    {" + row + "},")
    lines.append("};")
    out.write_text("\n".join(lines) + "\n")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
