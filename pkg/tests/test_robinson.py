import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linedraw.core import Ordering, SimilarityMatrix, matrix_from_graph, permute
from linedraw.corpus import (CorpusConfig, fuzz_corpus, random_robinson_matrix, shuffled,
                             uniform_graph)
from linedraw.robinson import (BRUTE_FORCE, COMPLETE_POLY, SUBSET_DP, InstanceTooLarge,
                               brute_force_find, brute_force_orderings,
                               enumerate_robinson_orderings, find_robinson_ordering,
                               find_robinson_ordering_complete, good_elements, is_robinson,
                               multisweep_sfs)

from conftest import matrices

A5_ORDERS = {(0, 1, 2, 3, 4), (4, 3, 2, 1, 0)}


def robinson_by_definition(a):
    n = a.n
    for i, l in itertools.combinations(range(n), 2):
        for j in range(i, l + 1):
            for k in range(i, l + 1):
                ail, aij, akl = a[i, l], a[i, j], a[k, l]
                if None not in (ail, aij, akl) and ail > min(aij, akl):
                    return False
    return True


def good_by_definition(a, placed):
    rest = [v for v in range(a.n) if v not in placed]
    out = set()
    for u in rest:
        ok = True
        for k in placed:
            for p in rest:
                if p == u:
                    continue
                if a[k, u] is not None and a[k, p] is not None and a[k, u] < a[k, p]:
                    ok = False
                if a[p, u] is not None and a[p, k] is not None and a[p, u] < a[p, k]:
                    ok = False
        if ok:
            out.add(u)
    return out


def constant(n, w=1):
    return SimilarityMatrix.from_rows([[w] * n for _ in range(n)])


def signed_four_cycle():
    # cycle edges +1 (weight 2), chords -1 (weight 1)
    rows = [[None, 2, 1, 2], [2, None, 2, 1], [1, 2, None, 2], [2, 1, 2, None]]
    return SimilarityMatrix.from_rows(rows)


# --- is_robinson -------------------------------------------------------------

def test_a5_is_robinson(a5):
    assert is_robinson(a5)


def test_two_by_two_always_robinson():
    assert is_robinson(SimilarityMatrix.from_rows([[None, 3], [3, None]]))
    assert is_robinson(SimilarityMatrix.from_rows([[None, None], [None, None]]))


def test_a5_swapped_is_not_robinson(a5):
    swapped = permute(a5, Ordering((1, 0, 2, 3, 4)))
    # row 0 reads 5 2 3 ...: the 3 sits farther from the diagonal than the 2
    assert swapped[0, 1] < swapped[0, 2]
    assert not is_robinson(swapped)


@given(matrices(max_n=6))
def test_is_robinson_matches_definition(m):
    assert is_robinson(m) == robinson_by_definition(m)


@given(st.data())
def test_reversal_symmetry(data):
    m = data.draw(matrices(max_n=6))
    pi = Ordering(tuple(data.draw(st.permutations(range(m.n)))))
    assert is_robinson(permute(m, pi)) == is_robinson(permute(m, pi.reversed()))


# --- good elements ----------------------------------------------------------

def test_good_elements_of_empty_prefix(a5):
    assert good_elements(a5, set()) == set(range(5))


def test_good_elements_a5_after_a(a5):
    # the definition admits both b and c after a; c then leads nowhere
    expected = good_by_definition(a5, {0})
    assert expected == {1, 2}
    assert good_elements(a5, {0}) == expected
    assert good_elements(a5, {0, 2}) == good_by_definition(a5, {0, 2}) == set()


def test_good_elements_constant_matrix():
    m = constant(5)
    for placed in ({0}, {1, 3}, {0, 2, 4}):
        assert good_elements(m, placed) == set(range(5)) - placed


@given(st.data())
def test_good_elements_match_definition(data):
    m = data.draw(matrices(max_n=7))
    placed = data.draw(st.sets(st.integers(0, m.n - 1)))
    assert good_elements(m, placed) == good_by_definition(m, placed)


# --- recognition -------------------------------------------------------------

@pytest.mark.parametrize("perm", list(itertools.permutations(range(5))))
def test_a5_recovered_from_every_shuffle(a5, perm):
    pi = Ordering(perm)
    shuffled_a5 = permute(a5, pi)
    for result in (find_robinson_ordering(shuffled_a5), find_robinson_ordering_complete(shuffled_a5)):
        # map recovered positions back to the original a..e indices
        recovered = tuple(pi[v] for v in result.ordering)
        assert recovered in A5_ORDERS


def test_methods_are_tagged(a5):
    assert find_robinson_ordering(a5).method == SUBSET_DP
    assert find_robinson_ordering_complete(a5).method == COMPLETE_POLY
    assert brute_force_find(a5).method == BRUTE_FORCE


def test_signed_four_cycle_has_no_robinson_ordering():
    m = signed_four_cycle()
    assert brute_force_orderings(m) == []
    assert not find_robinson_ordering(m).found
    assert not find_robinson_ordering_complete(m).found


def test_constant_matrix_gives_identity():
    assert find_robinson_ordering(constant(3)).ordering == Ordering.identity(3)


@pytest.mark.parametrize("n", [1, 2])
def test_tiny_complete_gives_identity(n):
    m = SimilarityMatrix.from_rows([[7] * n for _ in range(n)])
    assert find_robinson_ordering_complete(m).ordering == Ordering.identity(n)


def test_complete_route_rejects_incomplete():
    with pytest.raises(ValueError):
        find_robinson_ordering_complete(SimilarityMatrix.from_rows([[None, None], [None, None]]))


def test_cap_enforced():
    m = matrix_from_graph(uniform_graph(random.Random(0), 9, 2, 0.5))
    with pytest.raises(InstanceTooLarge):
        find_robinson_ordering(m, cap=8)


@given(matrices(max_n=7))
@settings(max_examples=300)
def test_subset_search_matches_brute_force(m):
    dp = find_robinson_ordering(m)
    assert dp.found == brute_force_find(m).found
    if dp.found:
        assert is_robinson(permute(m, dp.ordering))


@given(matrices(min_n=3, max_n=8, allow_missing=False))
@settings(max_examples=300)
def test_complete_route_matches_subset_search(m):
    poly = find_robinson_ordering_complete(m)
    assert poly.found == find_robinson_ordering(m).found
    if poly.found:
        assert is_robinson(permute(m, poly.ordering))


def test_corpus_oracle_equivalence():
    for inst in fuzz_corpus(CorpusConfig(size=400, seed=7)):
        m = matrix_from_graph(inst.graph)
        assert find_robinson_ordering(m).found == brute_force_find(m).found


def test_multisweep_on_complete_corpus_up_to_ten():
    rng = random.Random(3)
    for _ in range(150):
        n = rng.randint(3, 10)
        m = shuffled(rng, random_robinson_matrix(rng, n, rng.randint(2, 5)))
        sigma = multisweep_sfs(m)
        assert sigma is not None and is_robinson(permute(m, sigma))


# --- enumeration -------------------------------------------------------------

def test_enumerate_a5_exactly_two(a5):
    found = {pi.perm for pi in enumerate_robinson_orderings(a5)}
    assert found == {pi.perm for pi in brute_force_orderings(a5)} == A5_ORDERS


def test_enumerate_constant():
    assert len(enumerate_robinson_orderings(constant(3))) == 6


def test_enumerate_two_by_two():
    m = SimilarityMatrix.from_rows([[None, 1], [1, None]])
    assert {pi.perm for pi in enumerate_robinson_orderings(m)} == {(0, 1), (1, 0)}


def test_enumerate_budget_is_flagged():
    e = enumerate_robinson_orderings(constant(5), budget=10)
    assert len(e) == 10 and e.budget_exhausted
    full = enumerate_robinson_orderings(constant(5), budget=120)
    assert len(full) == 120 and full.exhaustive


def test_enumerate_requires_budget_when_large():
    with pytest.raises(ValueError):
        enumerate_robinson_orderings(constant(13))


@given(matrices(max_n=6))
def test_enumeration_matches_brute_force(m):
    listed = [pi.perm for pi in enumerate_robinson_orderings(m)]
    assert len(listed) == len(set(listed))
    assert set(listed) == {pi.perm for pi in brute_force_orderings(m)}
