import math
import random

import pytest

from simconj.oracle import (
    BudgetExceeded,
    SweepReport,
    all_inverting_conjugators,
    backtrack_inverter,
    brute_force_inverter,
    centralizer_elements,
    centralizer_order,
    centralizer_spec,
    class_representatives,
    full_scan_inverter,
    sharpness_search,
    theorem_sweep,
    to_representative,
)
from simconj.construct import verify_witness
from simconj.perm import Permutation, all_permutations, compose, conjugate, inverse, random_permutation

from conftest import P


def test_centralizer_order():
    assert centralizer_order(P("(1 2 3)"), 3) == 3
    assert centralizer_order(P("(1 2 3)"), 5) == 6
    assert centralizer_order(Permutation.identity(6), 6) == 720
    assert centralizer_order(P("(1 2)(3 4)(5 6 7)"), 9) == 2 * 2 * 2 * 3 * 2
    spec = centralizer_spec(P("(1 2)(3 4)(5 6 7)"), 9)
    assert spec.multiplicities == {2: 2, 3: 1} and spec.fixed == 2


def test_centralizer_order_is_exact_for_large_degree():
    n = 60
    assert centralizer_order(Permutation.identity(n), n) == math.factorial(60)


def test_centralizer_enumeration_matches_order():
    for n in range(1, 7):
        for a in all_permutations(n):
            els = list(centralizer_elements(a, n))
            assert len(els) == len(set(els)) == centralizer_order(a, n)
            assert all(compose(a, c) == compose(c, a) for c in els)


def test_inverting_conjugators():
    assert list(all_inverting_conjugators(P("(1 2)"), 2)) == [Permutation.identity(2), P("(1 2)")]
    for text, n, size in [("(1 2 3)", 3, 3), ("(1 2 3 4)", 4, 4)]:
        a = P(text)
        brute = [g for g in all_permutations(n) if conjugate(a, g) == inverse(a)]
        got = list(all_inverting_conjugators(a, n))
        assert len(got) == size
        assert got == brute


def test_inverting_coset_equals_filter_of_sn():
    for a in all_permutations(5):
        got = list(all_inverting_conjugators(a, 5))
        assert got == sorted(got)
        assert set(got) == {g for g in all_permutations(5) if conjugate(a, g) == inverse(a)}


def test_brute_force(ex49):
    assert brute_force_inverter(*ex49) is None
    a, b = P("(1 2)(3 4)"), P("(1 3 5)(2 4 6)")
    g = brute_force_inverter(a, b)
    assert g is not None and verify_witness(a, b, g)
    assert brute_force_inverter(P("(1 2)"), P("(1 2)")).is_identity()
    with pytest.raises(BudgetExceeded):
        brute_force_inverter(P("(1 2)"), P("(3 4)"), 10, budget=1000)


def test_three_oracles_agree():
    rng = random.Random(3)
    for _ in range(300):
        n = rng.randint(1, 6)
        a = random_permutation(n, rng.getrandbits(32))
        b = random_permutation(n, rng.getrandbits(32))
        g1 = brute_force_inverter(a, b)
        g2 = full_scan_inverter(a, b)
        g3 = backtrack_inverter(a, b)
        assert g1 == g2
        assert (g1 is None) == (g3 is None)
        if g3 is not None:
            assert verify_witness(a, b, g3)


def test_full_scan_budget():
    with pytest.raises(BudgetExceeded):
        full_scan_inverter(P("(1 2)"), P("(3 4)"), 9)


def _shifted(p, k, n):
    return Permutation.from_cycles([tuple(x + k for x in c) for c in p.cycles()], n)


def test_backtrack_exchanges_orbits(ex49):
    # neither orbit can be inverted onto itself, but a copy of the inverse
    # pair on 8..14 lets gamma exchange the two
    a, b = ex49
    assert backtrack_inverter(a, b) is None
    a2 = compose(a, _shifted(inverse(a), 7, 14))
    b2 = compose(b, _shifted(inverse(b), 7, 14))
    g = backtrack_inverter(a2, b2)
    assert g is not None and verify_witness(a2, b2, g)
    assert all(g(x) > 7 for x in range(1, 8))
    assert brute_force_inverter(a2, b2) is not None


def test_class_representatives():
    for n in range(1, 8):
        reps = class_representatives(n)
        assert sum(w for _, w in reps) == math.factorial(n)
    rng = random.Random(2)
    for _ in range(200):
        n = rng.randint(1, 9)
        a = random_permutation(n, rng.getrandbits(32))
        d = to_representative(a, n)
        rep = conjugate(a, d)
        assert sorted(len(c) for c in rep.cycles()) == sorted(len(c) for c in a.cycles())
        assert any(rep == r for r, _ in class_representatives(n))


def test_sweep_small():
    r = theorem_sweep(3)
    assert r.total == 36 and r.qualifying == 36 and r.failures == [] and r.fallback == 0
    r = theorem_sweep(5)
    assert r.total == 14400 and r.failures == [] and r.fallback == 0
    assert r.qualifying == sum(e + z for m, (e, z) in r.histogram.items() if m <= 4)
    assert all(z == 0 for m, (e, z) in r.histogram.items() if m <= 4)


def test_dedup_matches_full_run_n5():
    full = theorem_sweep(5).as_dict()
    dd = theorem_sweep(5, dedup=True)
    assert dd.evaluated == 7 * 120
    d = dd.as_dict()
    for key in ("total", "qualifying", "constructive", "fallback", "methods", "histogram"):
        assert d[key] == full[key]


def test_sampled_sweep_deterministic():
    r1 = theorem_sweep(7, mode="sampled", samples=300, seed=9, cross_check=0.2)
    r2 = theorem_sweep(7, mode="sampled", samples=300, seed=9, cross_check=0.2)
    d1, d2 = r1.as_dict(), r2.as_dict()
    d1.pop("wall_time"), d2.pop("wall_time")
    assert d1 == d2
    assert r1.total == 300 and r1.cross_checked > 0 and r1.disagreements == []
    r3 = theorem_sweep(7, mode="sampled", samples=300, seed=10).as_dict()
    r3.pop("wall_time")
    assert r3["histogram"] != d1["histogram"]


def test_sweep_parallel_equals_serial():
    serial = theorem_sweep(5).as_dict()
    par = theorem_sweep(5, jobs=2).as_dict()
    serial.pop("wall_time"), par.pop("wall_time")
    assert serial == par


def test_sweep_budget():
    with pytest.raises(BudgetExceeded):
        theorem_sweep(7)
    with pytest.raises(BudgetExceeded):
        theorem_sweep(5, budget=100)
    with pytest.raises(ValueError):
        theorem_sweep(3, mode="bogus")


def test_report_merge_is_associative():
    parts = [theorem_sweep(4, mode="sampled", samples=50, seed=s) for s in range(3)]
    left = parts[0].merge(parts[1]).merge(parts[2]).as_dict()
    right = parts[0].merge(parts[1].merge(parts[2])).as_dict()
    assert left == right
    assert SweepReport(4, "sampled").merge(parts[0]).as_dict() == parts[0].as_dict()


def test_sharpness_small():
    assert not sharpness_search(4, 3)
    assert not sharpness_search(2, 3)
    assert not sharpness_search(2, 5)
    assert len(sharpness_search(5, 5)) == 1440


def test_sharpness_members_have_no_inverter():
    res = sharpness_search(5, 5)
    listed = list(res)
    assert len(listed) == len(res) == len(set(listed))
    for a, b in listed[::37]:
        assert brute_force_inverter(a, b) is None
        assert (a, b) in res
    assert (P("(1 2)"), P("(3 4)")) not in res
