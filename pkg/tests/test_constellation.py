import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from critfilt import constellation as cs
from critfilt.constellation import Constellation
from critfilt.errors import BudgetExceeded, MalformedTuple, WrongArity


def rand_perm(rng, d):
    p = list(range(d))
    rng.shuffle(p)
    return tuple(p)


def rand_tuple(rng, d, k):
    while True:
        head = [rand_perm(rng, d) for _ in range(k - 1)]
        perms = head + [cs.inverse(cs.product_all(head))]
        if cs.is_transitive(perms):
            return Constellation(perms)


# -- permutations ---------------------------------------------------------


def test_compose_is_left_to_right():
    p = cs.from_cycles(3, [(1, 2)], one_based=True)
    q = cs.from_cycles(3, [(2, 3)], one_based=True)
    # 0 -> 1 under p, then 1 -> 2 under q
    assert cs.compose(p, q)[0] == 2
    assert cs.cycle_type(cs.compose(p, q)) == (3,)


def test_perms_of_type_counts():
    assert len(cs.perms_of_type(4, (2, 1, 1))) == 6
    assert len(cs.perms_of_type(4, (2, 2))) == 3
    assert len(cs.perms_of_type(5, (3, 2))) == 20
    assert [list(p) for p in cs.partitions(4)] == [[4], [3, 1], [2, 2], [2, 1, 1], [1, 1, 1, 1]]


def test_malformed_tuples():
    with pytest.raises(MalformedTuple):
        Constellation([(1, 0, 2), (1, 0, 2)])  # not transitive
    with pytest.raises(MalformedTuple):
        Constellation([(1, 2, 0), (1, 2, 0)])  # product is not the identity
    with pytest.raises(MalformedTuple):
        Constellation([(0, 0, 1), (0, 1, 2)])


# -- genus ----------------------------------------------------------------


def test_genus_examples():
    c = cs.from_cycles(3, [(1, 2, 3)], one_based=True)
    assert cs.genus([c, c, c]) == 1
    t = cs.from_cycles(2, [(1, 2)], one_based=True)
    assert cs.genus([t, t]) == 0
    assert cs.genus_from_passport(3, [(3,), (3,), (3,)]) == 1
    assert cs.genus_from_passport(5, [(5,), (5,), (1, 2, 2)]) == 1


# -- enumeration ----------------------------------------------------------


def test_degree3_classes_by_genus():
    assert len(cs.enumerate_triples(3, 0)) == 6
    g1 = cs.enumerate_triples(3, 1)
    assert len(g1) == 1
    assert g1[0].passport() == ((3,), (3,), (3,))


@pytest.mark.parametrize("d,count", [(1, 1), (2, 3), (3, 7), (4, 26)])
def test_triple_counts_match_naive(d, count):
    mine = cs.enumerate_triples(d)
    assert len(mine) == count == len(cs.naive_enumerate(d, 3))
    assert {c.perms for c in mine} == set(cs.naive_enumerate(d, 3))


def test_cyclic_two_constellations():
    # one class per degree: a d-cycle and its inverse
    for d in range(1, 7):
        cls = cs.enumerate_tuples(d, 2)
        assert len(cls) == 1
        assert cls[0].passport() == ((d,), (d,))


def test_passport_restricted_enumeration():
    out = cs.enumerate_tuples(4, 3, passport=[(3, 1), (3, 1), (2, 2)])
    assert out and all(sorted(c.passport()) == sorted([(3, 1), (3, 1), (2, 2)]) for c in out)


def test_budget(monkeypatch):
    monkeypatch.setenv("CRITFILT_BUDGET", "3")
    with pytest.raises(BudgetExceeded):
        cs.enumerate_triples(4)
    monkeypatch.setenv("CRITFILT_BUDGET", "triples=5,braid=2")
    assert cs.budgets() == {"triples": 5, "braid": 2}
    with pytest.raises(BudgetExceeded):
        cs.braid_orbits(3, "3;3;3;3")
    assert cs.enumerate_triples(4, budget=4)


# -- canonical forms ------------------------------------------------------


def test_canonical_form_matches_naive_oracle():
    rng = random.Random(11)
    for _ in range(60):
        d = rng.randint(1, 6)
        C = rand_tuple(rng, d, rng.choice([3, 4]))
        assert cs.canonical_form(C).perms == cs.naive_canonical_form(C)


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 6), st.integers(0, 2 ** 32), st.sampled_from([3, 4]))
def test_canonical_is_conjugation_invariant(d, seed, k):
    rng = random.Random(seed)
    C = rand_tuple(rng, d, k)
    g = rand_perm(rng, d)
    D = Constellation([cs.conjugate(p, g) for p in C.perms])
    assert cs.canonical_form(C) == cs.canonical_form(D)
    assert cs.canonical_key(C.perms) == cs.canonical_key(D.perms)
    assert cs.canonical_form(cs.canonical_form(C)) == cs.canonical_form(C)


# -- braid moves ----------------------------------------------------------


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 6), st.integers(0, 2 ** 32), st.integers(1, 3))
def test_braid_move_properties(d, seed, i):
    rng = random.Random(seed)
    C = rand_tuple(rng, d, 4)
    moved = cs.braid_act(i, C)
    assert cs.product_all(moved.perms) == cs.identity(d)
    assert cs.is_transitive(moved.perms)
    assert sorted(moved.passport()) == sorted(C.passport())
    assert cs.braid_act(i, moved, inverse_move=True) == C


def test_braid_relations():
    rng = random.Random(5)
    for _ in range(30):
        C = rand_tuple(rng, 5, 4)
        s = lambda i, X: cs.braid_act(i, X)  # noqa: E731
        assert s(1, s(2, s(1, C))) == s(2, s(1, s(2, C)))
        assert s(2, s(3, s(2, C))) == s(3, s(2, s(3, C)))
        assert s(1, s(3, C)) == s(3, s(1, C))


def test_braid_arity():
    with pytest.raises(WrongArity):
        cs.braid_act(1, rand_tuple(random.Random(1), 3, 3))
    with pytest.raises(WrongArity):
        cs.braid_act(4, rand_tuple(random.Random(1), 3, 4))


@pytest.mark.parametrize("d,pp", [(3, "2,1;2,1;2,1;2,1"), (3, "3;3;3;3"), (4, "2,2;2,2;3,1;3,1")])
def test_braid_orbits_match_brute_force(d, pp):
    orbits = cs.braid_orbits(d, pp)
    brute = cs.brute_force_orbits(d, pp)
    assert {frozenset(m.perms for m in o.members) for o in orbits} == set(brute)
    assert sum(o.size for o in orbits) == sum(len(b) for b in brute)


# -- dessins --------------------------------------------------------------


def test_dessin_degree_one():
    C = cs.enumerate_triples(1)[0]
    D = cs.dessin_export(C)
    assert (len(D.black), len(D.white), len(D.faces), D.genus) == (1, 1, 1, 0)
    assert cs.parse_dot(D.to_dot()) == {"black": 1, "white": 1, "edges": 1}


def test_dessin_genus_one_cubic():
    D = cs.dessin_export(cs.enumerate_triples(3, 1)[0])
    assert D.euler() == 0 and D.genus == 1
    text = D.to_dot()
    assert text.startswith("graph ")
    assert cs.parse_dot(text) == {"black": 1, "white": 1, "edges": 3}


def test_dessin_euler_characteristic():
    for d in range(1, 6):
        for C in cs.enumerate_triples(d):
            D = cs.dessin_export(C)
            assert D.euler() == 2 - 2 * D.genus
            assert cs.parse_dot(D.to_dot())["edges"] == d


def test_dessin_needs_triple():
    with pytest.raises(WrongArity):
        cs.dessin_export(rand_tuple(random.Random(2), 3, 4))


def test_format_is_one_based():
    c = Constellation([(1, 2, 0), (2, 0, 1), (0, 1, 2)])
    assert c.format() == "(1 2 3), (1 3 2), id"
    assert list(itertools.chain(*cs.cycles(c[0]))) == [0, 1, 2]
