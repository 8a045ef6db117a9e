from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from simconj.perm import (
    Malformed,
    Permutation,
    PermutationError,
    RepeatedPoint,
    commutator,
    compose,
    conjugate,
    cycle_decompose,
    fixed_points,
    format_cycles,
    inverse,
    moved_points,
    num_moved,
    parse_cycles,
    power,
    random_permutation,
)

from conftest import P, perms


def test_compose_applies_left_operand_first():
    assert compose(P("(1 2)"), P("(1 2)")).is_identity()
    assert compose(P("(1 2 3 4)"), P("(2 1 5 6)")) == P("(2 3 4 5 6)")
    assert compose(P("(1 2 3)"), P("(1 2 3)")) == P("(1 3 2)")
    # 1 -> 2 under the first factor, 2 -> 3 under the second
    assert compose(P("(1 2)"), P("(2 3)"))(1) == 3


def test_mixed_degrees_extend_by_identity():
    p = compose(P("(1 2)"), P("(3 4 5)"))
    assert p.degree == 5
    assert P("(1 2)", 2) == P("(1 2)", 9)
    assert hash(P("(1 2)", 2)) == hash(P("(1 2)", 9))
    assert P("()", 4) == Permutation.identity(0)


def test_inverse():
    assert inverse(P("(1 2 3 4)")) == P("(1 4 3 2)")
    assert inverse(Permutation.identity(3)).is_identity()
    assert inverse(P("(1 2)(3 4)")) == P("(1 2)(3 4)")


def test_conjugate_relabels(ex49):
    a, b = ex49
    assert conjugate(a, b) == P("(2 1 5 6)")
    assert conjugate(P("(1 2 3)"), Permutation.identity(3)) == P("(1 2 3)")
    assert conjugate(P("(1 2)"), P("(1 2)")) == P("(1 2)")
    assert a ^ b == conjugate(a, b)


def test_commutator(ex49):
    a, b = ex49
    assert commutator(P("(1 2)"), P("(3 4)")).is_identity()
    assert commutator(a, b) == P("(2 3 4 5 6)")
    assert commutator(a, a).is_identity()


def test_moved_and_fixed(ex49):
    p = P("(1 2 3)", 5)
    assert moved_points(p) == {1, 2, 3}
    assert fixed_points(p) == {4, 5}
    assert moved_points(Permutation.identity(4)) == frozenset()
    c = commutator(*ex49)
    assert moved_points(c) == {2, 3, 4, 5, 6}
    assert num_moved(c) == 5


def test_cycle_decompose():
    assert cycle_decompose(P("(1 2)(3 4 5)")).cycles == ((1, 2), (3, 4, 5))
    assert cycle_decompose(Permutation.identity(5)).cycles == ()
    assert cycle_decompose(P("(3 2 1 5 4 6)")).cycles == ((1, 5, 4, 6, 3, 2),)
    d = cycle_decompose(P("(5 6)(4 1 2)"))
    assert d.cycles == ((1, 2, 4), (5, 6))
    assert d.product() == P("(5 6)(4 1 2)")
    assert d.lengths() == (3, 2)


def test_parse_variants():
    assert parse_cycles("(1 2 3)(4 5)") == Permutation.from_cycles([(1, 2, 3), (4, 5)])
    assert parse_cycles("()").is_identity()
    assert parse_cycles("(1,2,3)") == parse_cycles("( 1  2 3 )")
    assert parse_cycles("(1, 2) (3 4)") == P("(1 2)(3 4)")
    assert parse_cycles("(1 2)", 6).degree == 6


@pytest.mark.parametrize(
    "text,exc,pos",
    [
        ("(1 2 1)", RepeatedPoint, 5),
        ("(1 2", Malformed, 4),
        ("1 2)", Malformed, 0),
        ("(0 1)", Malformed, 1),
        ("(1 -2)", Malformed, 3),
        ("(1 x)", Malformed, 3),
        ("(1,,2)", Malformed, 3),
        ("", Malformed, 0),
        ("(1)(", Malformed, 4),
    ],
)
def test_parse_errors_report_position(text, exc, pos):
    with pytest.raises(exc) as info:
        parse_cycles(text)
    assert info.value.position == pos
    assert f"position {pos}" in str(info.value)


def test_repeated_point_is_malformed():
    assert issubclass(RepeatedPoint, Malformed)
    assert issubclass(Malformed, PermutationError)


def test_format_canonical():
    assert format_cycles(P("(5 4)(3 1 2)")) == "(1 2 3)(4 5)"
    assert format_cycles(Permutation.identity(3)) == "()"
    assert str(P("(2 3 1)")) == "(1 2 3)"


def test_constructor_rejects_non_bijection():
    with pytest.raises(PermutationError):
        Permutation([1, 1, 2])
    with pytest.raises(PermutationError):
        Permutation([2, 1], degree=1)


def test_power_and_sign():
    c = P("(1 2 3 4 5)")
    assert power(c, 5).is_identity()
    assert power(c, -1) == inverse(c)
    assert P("(1 2)").sign() == -1
    assert P("(1 2 3)").sign() == 1


def test_random_permutation_deterministic():
    assert random_permutation(1, 7).is_identity()
    assert random_permutation(9, 123) == random_permutation(9, 123)
    assert random_permutation(9, 123) != random_permutation(9, 124)


def test_random_permutation_uniform_images():
    n, trials = 6, 10_000
    counts = Counter()
    for s in range(trials):
        p = random_permutation(n, s)
        for x in range(1, n + 1):
            counts[(x, p(x))] += 1
    expect = trials / n
    sigma = (trials * (1 / n) * (1 - 1 / n)) ** 0.5
    assert all(abs(counts[(x, y)] - expect) < 5 * sigma for x in range(1, n + 1) for y in range(1, n + 1))


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_group_laws(data):
    n = data.draw(st.integers(1, 9))
    p, q, r, g = (data.draw(perms(n=n)) for _ in range(4))
    assert compose(compose(p, q), r) == compose(p, compose(q, r))
    assert compose(p, inverse(p)).is_identity()
    assert conjugate(compose(p, q), g) == compose(conjugate(p, g), conjugate(q, g))
    cg = set(conjugate(p, g).cycles())
    for c in p.cycles():
        img = tuple(g(x) for x in c)
        k = img.index(min(img))
        assert img[k:] + img[:k] in cg


@settings(max_examples=300, deadline=None)
@given(perms(max_n=10), perms(max_n=10))
def test_commutator_is_even(a, b):
    c = commutator(a, b)
    assert c.sign() == 1
    assert num_moved(c) not in (1, 2)


def test_parse_format_round_trip():
    for s in range(10_000):
        p = random_permutation(1 + s % 12, s)
        assert parse_cycles(format_cycles(p), p.degree) == p
