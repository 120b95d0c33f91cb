"""Print the (n, 2d) chart and the witness recipe for every strict cell."""

import argparse
from dataclasses import dataclass

from evensos.jumper import chart, chart_text


@dataclass
class ChartConfig:
    n_max: int = 5
    deg_max: int = 14
    recipes: bool = True


def main(cfg: ChartConfig):
    rows = chart(cfg.n_max, cfg.deg_max)
    print(chart_text(rows), end="")
    if cfg.recipes:
        print()
        for row in rows:
            for e in row:
                if e.answer == "strict":
                    what = e.witness.describe() if e.witness.constructible else "(literature only)"
                    print(f"n={e.n:<3} 2d={e.two_d:<4} {what:<40} {e.citation}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-max", type=int, default=5)
    ap.add_argument("--deg-max", type=int, default=14)
    ap.add_argument("--no-recipes", action="store_true")
    a = ap.parse_args()
    main(ChartConfig(a.n_max, a.deg_max, not a.no_recipes))
