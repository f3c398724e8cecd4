"""Solve a fuzz corpus and print per-kind verdict counts and timing."""

import argparse
import time
from collections import Counter

from linedraw.corpus import CorpusConfig, fuzz_corpus
from linedraw.verify import is_valid_drawing, solve_scfe


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--size", type=int, default=CorpusConfig.size)
    p.add_argument("--max-n", type=int, default=CorpusConfig.max_n)
    p.add_argument("--seed", type=int, default=CorpusConfig.seed)
    args = p.parse_args(argv)
    cfg = CorpusConfig(size=args.size, max_n=args.max_n, seed=args.seed)
    counts = Counter()
    bad = 0
    t0 = time.perf_counter()
    for inst in fuzz_corpus(cfg):
        r = solve_scfe(inst.graph)
        counts[inst.kind, r.verdict] += 1
        if r.drawing is not None and is_valid_drawing(inst.graph, r.drawing):
            bad += 1
    dt = time.perf_counter() - t0
    for (kind, verdict), c in sorted(counts.items()):
        print(f"{kind:>14} {verdict:>13} {c:>6}")
    print(f"{cfg.size} instances in {dt:.2f}s, {bad} drawings with violations")


if __name__ == "__main__":
    main()
