"""Walk through the five-vertex counterexample: Robinson, yet not drawable."""

from linedraw.corpus import a5_matrix
from linedraw.polyhedron import build_constraints
from linedraw.robinson import enumerate_robinson_orderings, is_robinson
from linedraw.verify import solve_scfe


def main():
    a = a5_matrix()
    print("matrix (labels a..e):")
    for i in range(a.n):
        print("  " + " ".join(f"{str(a[i, j]):>2}" for j in range(a.n)))
    print("Robinson as given:", is_robinson(a))
    print("Robinson orderings:", [" ".join(a.labels[v] for v in pi) for pi in enumerate_robinson_orderings(a)])
    system = build_constraints(a)
    print(f"\n{system.h} restrictions, eps = {system.epsilon}:")
    print(system.dump())
    report = solve_scfe(a.to_graph())
    print("\nverdict:", report.verdict)
    print("certificate:")
    for r, y in report.certificate.support():
        print(f"  {y} * [ {system.constraints[r].format(system.epsilon)} ]")


if __name__ == "__main__":
    main()
