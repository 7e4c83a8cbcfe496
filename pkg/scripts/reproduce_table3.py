"""Print the E8/E7/E6 Hodge numbers over the first four toric Fano bases and diff against the golden CSV."""

import sys
from pathlib import Path

from ltphodge.cli import main

GOLDEN = Path(__file__).resolve().parents[1] / "tests" / "golden" / "table3.csv"

if __name__ == "__main__":
    main(["table3"])
    out = Path("table3.csv")
    main(["table3", "--format", "csv", "--output", str(out)])
    same = out.read_text() == GOLDEN.read_text()
    print(f"\nCSV written to {out}; matches golden: {same}")
    sys.exit(0 if same else 1)
