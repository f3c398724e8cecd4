"""How often is a Robinsonian graph not drawable, by alphabet size and completeness?

Samples random Robinson matrices (shuffled, some entries dropped) and counts the
instances that admit a Robinson ordering but no valid drawing. Small complete
cases with few weights are expected to show no separation at all.
"""

import argparse
import random
from collections import Counter
from dataclasses import dataclass
from typing import Tuple

from linedraw.corpus import random_robinson_matrix, shuffled
from linedraw.verify import DRAWABLE, INCONCLUSIVE, solve_scfe


@dataclass(frozen=True)
class SurveyConfig:
    samples: int = 300
    sizes: Tuple[int, ...] = (4, 5, 6, 7, 8)
    alphabet_sizes: Tuple[int, ...] = (2, 3, 4, 5, 6)
    drops: Tuple[float, ...] = (0.0, 0.3)
    tie_bias: float = 0.3
    seed: int = 7
    budget: int = 2000


def survey(cfg: SurveyConfig):
    rng = random.Random(cfg.seed)
    rows = []
    for drop in cfg.drops:
        for k in cfg.alphabet_sizes:
            for n in cfg.sizes:
                tally = Counter()
                witness = None
                for _ in range(cfg.samples):
                    m = shuffled(rng, random_robinson_matrix(rng, n, k, drop=drop, tie_bias=cfg.tie_bias))
                    verdict = solve_scfe(m.to_graph(), budget=cfg.budget).verdict
                    tally[verdict] += 1
                    if verdict not in (DRAWABLE, INCONCLUSIVE) and witness is None:
                        witness = m
                rows.append((drop, k, n, tally, witness))
    return rows


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--samples", type=int, default=SurveyConfig.samples)
    p.add_argument("--seed", type=int, default=SurveyConfig.seed)
    p.add_argument("--show-witness", action="store_true",
                   help="print the first non-drawable matrix of each cell")
    args = p.parse_args(argv)
    cfg = SurveyConfig(samples=args.samples, seed=args.seed)
    print(f"{'drop':>5} {'k':>3} {'n':>3} {'drawable':>9} {'not':>5} {'inconcl':>8}")
    for drop, k, n, tally, witness in survey(cfg):
        print(f"{drop:>5} {k:>3} {n:>3} {tally['drawable']:>9} {tally['not-drawable']:>5} "
              f"{tally['inconclusive']:>8}")
        if args.show_witness and witness is not None:
            for i in range(witness.n):
                print("      " + " ".join(f"{'*' if x is None else str(x):>2}"
                                          for x in (witness[i, j] for j in range(witness.n))))


if __name__ == "__main__":
    main()
