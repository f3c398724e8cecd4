"""Exhaustive check of all complete 5-vertex matrices over weights {1,2,3}.

Reports how many are Robinsonian and how many of those have no valid drawing,
printing the first such matrix if one exists.
"""

import time

from linedraw.corpus import complete_matrices
from linedraw.robinson import find_robinson_ordering
from linedraw.verify import NOT_DRAWABLE, solve_scfe


def main(n=5, alphabet=(1, 2, 3)):
    t0 = time.perf_counter()
    total = robinsonian = separated = 0
    first = None
    for m in complete_matrices(n, alphabet):
        total += 1
        if not find_robinson_ordering(m).found:
            continue
        robinsonian += 1
        if solve_scfe(m.to_graph()).verdict == NOT_DRAWABLE:
            separated += 1
            first = first or m
    print(f"n={n} weights={alphabet}: {total} matrices, {robinsonian} Robinsonian, "
          f"{separated} Robinsonian but not drawable ({time.perf_counter() - t0:.1f}s)")
    if first is not None:
        for i in range(n):
            print("  " + " ".join(str(first[i, j]) for j in range(n)))


if __name__ == "__main__":
    main()
