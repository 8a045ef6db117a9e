import random

import pytest

from simconj.perm import all_permutations, commutator, compose, conjugate, cycle_decompose, inverse, moved_points, num_moved, random_permutation
from simconj.structure import (
    TEMPLATES,
    Case,
    InverseFactorPresent,
    beta_orbits_on_factors,
    classify_case,
    pair_profile,
    transitive_chains,
)

from conftest import P


def pts(profile):
    return [list(p.points) for p in profile.pairs]


def test_profile_worked_example():
    prof = pair_profile(P("(1 2 3 4 5 6)"), P("(3 2 1 5 4 6)"))
    assert pts(prof) == [[1, 2, 3], [4, 5], [6]]
    assert prof.free == frozenset()


def test_profile_with_free_points():
    g, h = P("(1 2 3)"), P("(2 1 4)")
    prof = pair_profile(g, h)
    assert pts(prof) == [[1, 2]]
    assert prof.free == {3, 4}
    assert moved_points(compose(g, h)) == {2, 3, 4}
    assert prof.free_in_g() == {3} and prof.free_in_h() == {4}


def test_profile_disjoint():
    prof = pair_profile(P("(1 2 3)"), P("(4 5 6)"))
    assert prof.pairs == ()
    assert prof.free == set(range(1, 7))


def test_profile_rejects_inverse_factor():
    with pytest.raises(InverseFactorPresent):
        pair_profile(P("(1 2 3)(4 5)"), P("(1 3 2)"))


def _no_inverse_factor(g, h):
    hc = set(h.cycles())
    for c in g.cycles():
        inv = tuple(reversed(c))
        k = inv.index(min(inv))
        if inv[k:] + inv[:k] in hc:
            return False
    return True


def test_pair_invariants_random():
    rng = random.Random(5)
    checked = 0
    while checked < 2000:
        n = rng.randint(2, 9)
        g = random_permutation(n, rng.getrandbits(32))
        h = random_permutation(n, rng.getrandbits(32))
        if not _no_inverse_factor(g, h):
            continue
        checked += 1
        gh = compose(g, h)
        prof = pair_profile(g, h)
        mgh = moved_points(gh)
        assert len(mgh) == len(prof.pairs) + len(prof.free)
        seen = set()
        for p in prof.pairs:
            x = p.points
            assert all(g(x[i]) == x[i + 1] and h(x[i + 1]) == x[i] for i in range(len(x) - 1))
            assert [y for y in x if y in mgh] == [x[-1]]
            assert not seen & set(x)
            seen |= set(x)
        assert not seen & prof.free
        assert prof.free <= mgh
        assert prof.free == moved_points(g) ^ moved_points(h)
        assert seen | prof.free == moved_points(g) | moved_points(h)
        for x in moved_points(g) - mgh:
            assert x in seen


def test_orbits_on_factors():
    assert beta_orbits_on_factors(P("(1 2)(3 4)"), P("(1 3)(2 4)")) == [[(1, 2), (3, 4)]]
    assert beta_orbits_on_factors(P("(1 2 3)"), P("(4 5)")) == [[(1, 2, 3)]]
    assert beta_orbits_on_factors(P("(1 2)(3 4)"), P("(1 3 5)(2 4 6)")) == []


def test_chains():
    ch = transitive_chains(P("(1 2)(3 4)"), P("(1 3 5)(2 4 6)"))
    assert [c.factors for c in ch] == [((1, 2), (3, 4))]
    assert ch[0].length == 2 and ch[0].head == (1, 2)
    assert transitive_chains(P("(1 2 3)"), P("(1 2)")) == []
    ch = transitive_chains(P("(1 2)(3 4)(5 6)"), P("(1 3 5 7)(2 4 6 8)"))
    assert [c.factors for c in ch] == [((1, 2), (3, 4), (5, 6))]


def test_chain_invariants_exhaustive_small():
    for a in all_permutations(6):
        fa_cycles = set(a.cycles())
        for b in all_permutations(6):
            chains = transitive_chains(a, b)
            if num_moved(commutator(a, b)) <= 4:
                assert len(chains) <= 3
            for ch in chains:
                for u, v in zip(ch.factors, ch.factors[1:]):
                    assert tuple(cycle_decompose(conjugate(P(_fmt(u)), b)).cycles[0]) == v
                last = cycle_decompose(conjugate(P(_fmt(ch.factors[-1])), b)).cycles[0]
                first = cycle_decompose(conjugate(P(_fmt(ch.head)), inverse(b))).cycles[0]
                assert last not in fa_cycles and first not in fa_cycles
        if a.degree and a(1) > 2:
            break  # a prefix of S_6 in lexicographic order keeps this quick


def _fmt(c):
    return "(" + " ".join(map(str, c)) + ")"


def test_classify_examples(ex49):
    assert classify_case(*ex49).case is Case.OUT_OF_SCOPE
    assert classify_case(*ex49).moved == 5
    t = classify_case(P("(1 4 3 2)"), P("(4 3 5)"))
    assert t.case is Case.T32II
    assert dict(t.binding.indices) == {"r": 4, "s": 2}
    assert t.binding.x == (1, 2, 3, 4) and t.binding.extra == 5
    t = classify_case(P("(1 2 3 4)(5 6)(7 8)"), P("(1 5)(2 6)(3 7)(4 8)"))
    assert t.case is Case.T36
    assert dict(t.binding.indices) == {"r": 4, "s": 2, "t": 2}
    assert classify_case(P("(1 2)"), P("(3 4)")).case is Case.COMMUTING
    assert classify_case(P("(1 2)(3 4)"), P("(1 3 5)(2 4 6)")).case is Case.HAS_CHAINS
    assert classify_case(P("(1 2)(3 4)(5 6 7)"), P("(1 3)(2 4)(5 6)")).case is Case.HAS_ORBITS
    assert classify_case(P("(1 2)"), P("(1 5)(2 6)")).case is Case.T32I


def test_classification_total_and_consistent():
    """Every in-scope chain-free pair at n <= 6 matches a template whose
    displayed shape reproduces alpha^beta, with the size checks on the way."""
    seen = set()
    for a in all_permutations(6):
        for b in all_permutations(6):
            t = classify_case(a, b)
            seen.add(t.case)
            if not t.case.is_template:
                continue
            assert len(cycle_decompose(a)) <= 3
            lengths = cycle_decompose(a).lengths()
            assert max(lengths.count(k) for k in lengths) <= 2
            delta = conjugate(a, b)
            if t.case is not Case.T32I:
                assert len(moved_points(delta) - moved_points(a)) <= 1
                cycles = TEMPLATES[t.case].delta(t.binding)
                assert delta == P("".join(_fmt(c) for c in cycles))
                assert t.alternatives == ()
    assert Case.T34IIB in seen and Case.T35 in seen

