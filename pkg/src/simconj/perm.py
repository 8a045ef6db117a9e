"""Exact permutation arithmetic on the points 1..n.

Permutations act on the right: ``x^(pq) = (x^p)^q``, so ``compose(p, q)``
applies ``p`` first.  Conjugation is ``p^g = g^-1 p g``, which relabels every
cycle of ``p`` through ``g``.  Binary operations silently extend the operand
of smaller degree by the identity.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Cycle = tuple[int, ...]
PointSet = frozenset[int]


class PermutationError(ValueError):
    pass


class Malformed(PermutationError):
    def __init__(self, message: str, position: int | None = None, token: str | None = None):
        self.position = position
        self.token = token
        if position is not None:
            message = f"{message} at position {position}"
            if token is not None:
                message += f" (token {token!r})"
        super().__init__(message)


class RepeatedPoint(Malformed):
    pass


def _pad(img: tuple[int, ...], n: int) -> tuple[int, ...]:
    if len(img) > n:
        return img
    return img + tuple(range(len(img), n + 1))


class Permutation:
    """A bijection of ``{1..degree}``.

    ``img`` is stored with a dummy slot at index 0 so that ``img[x]`` is the
    image of the 1-based point ``x``.  Two permutations compare equal when
    they agree after extending the smaller one by the identity.
    """

    __slots__ = ("_img", "_key", "_cyc")

    def __init__(self, images: Sequence[int] = (), degree: int | None = None):
        img = (0, *images)
        n = len(img) - 1
        if sorted(img) != list(range(n + 1)):
            raise PermutationError(f"not a bijection of 1..{n}: {list(images)}")
        if degree is not None:
            if degree < n:
                raise PermutationError(f"degree {degree} smaller than image list ({n})")
            img = _pad(img, degree)
        self._img = img
        self._key = None
        self._cyc = None

    @classmethod
    def _raw(cls, img: tuple[int, ...]) -> Permutation:
        p = object.__new__(cls)
        p._img = img
        p._key = None
        p._cyc = None
        return p

    @classmethod
    def identity(cls, n: int = 0) -> Permutation:
        return cls._raw(tuple(range(n + 1)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int | None = None) -> Permutation:
        cycles = [tuple(c) for c in cycles]
        top = max((max(c) for c in cycles if c), default=0)
        n = max(top, degree or 0)
        img = list(range(n + 1))
        seen: set[int] = set()
        for c in cycles:
            for x in c:
                if x < 1:
                    raise Malformed(f"point {x} is not a positive integer")
                if x in seen:
                    raise RepeatedPoint(f"point {x} appears twice")
                seen.add(x)
            for a, b in zip(c, c[1:] + c[:1]):
                img[a] = b
        return cls._raw(tuple(img))

    @property
    def degree(self) -> int:
        return len(self._img) - 1

    @property
    def images(self) -> tuple[int, ...]:
        """Images of 1..degree, in order."""
        return self._img[1:]

    def __call__(self, x: int) -> int:
        img = self._img
        return img[x] if x < len(img) else x

    def extended(self, n: int) -> Permutation:
        if n <= self.degree:
            return self
        return Permutation._raw(_pad(self._img, n))

    def _trimmed(self) -> tuple[int, ...]:
        if self._key is None:
            img = self._img
            k = len(img) - 1
            while k > 0 and img[k] == k:
                k -= 1
            self._key = img[: k + 1]
        return self._key

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        if len(self._img) == len(other._img):
            return self._img == other._img
        return self._trimmed() == other._trimmed()

    def __hash__(self) -> int:
        return hash(self._trimmed())

    def __lt__(self, other: Permutation) -> bool:
        n = max(self.degree, other.degree)
        return _pad(self._img, n) < _pad(other._img, n)

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __pow__(self, k: int) -> Permutation:
        return power(self, k)

    def __xor__(self, g: Permutation) -> Permutation:
        return conjugate(self, g)

    def __invert__(self) -> Permutation:
        return inverse(self)

    def __repr__(self) -> str:
        return f"Permutation.from_cycles({list(self.cycles())}, degree={self.degree})"

    def __str__(self) -> str:
        return format_cycles(self)

    def is_identity(self) -> bool:
        return len(self._trimmed()) == 1

    def is_involution(self) -> bool:
        img = self._img
        return all(img[img[x]] == x for x in range(len(img)))

    def cycles(self) -> Iterator[Cycle]:
        """Nontrivial cycles ordered by their minimum point, each starting there."""
        if self._cyc is None:
            self._cyc = tuple(self._walk())
        return iter(self._cyc)

    def _walk(self) -> Iterator[Cycle]:
        img = self._img
        seen = bytearray(len(img))
        for x in range(1, len(img)):
            if seen[x] or img[x] == x:
                continue
            c = [x]
            seen[x] = 1
            y = img[x]
            while y != x:
                seen[y] = 1
                c.append(y)
                y = img[y]
            yield tuple(c)

    def sign(self) -> int:
        parity = sum(len(c) - 1 for c in self.cycles()) % 2
        return -1 if parity else 1


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply ``p`` then ``q``."""
    a, b = p._img, q._img
    if len(a) > len(b):
        b = _pad(b, len(a) - 1)
    elif len(b) > len(a):
        a = _pad(a, len(b) - 1)
    return Permutation._raw(tuple([b[x] for x in a]))


def compose_all(perms: Iterable[Permutation], degree: int = 0) -> Permutation:
    result = Permutation.identity(degree)
    for p in perms:
        result = compose(result, p)
    return result


def inverse(p: Permutation) -> Permutation:
    img = p._img
    inv = [0] * len(img)
    for x, y in enumerate(img):
        inv[y] = x
    return Permutation._raw(tuple(inv))


def power(p: Permutation, k: int) -> Permutation:
    if k < 0:
        return power(inverse(p), -k)
    img = p._img
    out = list(range(len(img)))
    for c in p.cycles():
        r = len(c)
        s = k % r
        for i, x in enumerate(c):
            out[x] = c[(i + s) % r]
    return Permutation._raw(tuple(out))


def conjugate(p: Permutation, g: Permutation) -> Permutation:
    """``g^-1 p g``: the cycle ``(x1 .. xr)`` of p becomes ``(x1^g .. xr^g)``."""
    a, b = p._img, g._img
    n = max(len(a), len(b)) - 1
    a, b = _pad(a, n), _pad(b, n)
    out = [0] * (n + 1)
    for x in range(n + 1):
        out[b[x]] = b[a[x]]
    return Permutation._raw(tuple(out))


def commutator(a: Permutation, b: Permutation) -> Permutation:
    """``[a, b] = a^-1 b^-1 a b``."""
    n = max(a.degree, b.degree)
    x, y = _pad(a._img, n), _pad(b._img, n)
    ainv = [0] * (n + 1)
    binv = [0] * (n + 1)
    for i in range(n + 1):
        ainv[x[i]] = i
        binv[y[i]] = i
    return Permutation._raw(tuple([y[x[binv[ainv[i]]]] for i in range(n + 1)]))


def moved_points(p: Permutation) -> PointSet:
    img = p._img
    return frozenset([x for x in range(1, len(img)) if img[x] != x])


def fixed_points(p: Permutation, n: int | None = None) -> PointSet:
    n = p.degree if n is None else max(n, p.degree)
    img = _pad(p._img, n)
    return frozenset(x for x in range(1, n + 1) if img[x] == x)


def num_moved(p: Permutation) -> int:
    img = p._img
    return len([x for x in range(len(img)) if img[x] != x])


def canonical_cycle(points: Sequence[int]) -> Cycle:
    k = points.index(min(points))
    return tuple(points[k:]) + tuple(points[:k])


def cycle_perm(c: Sequence[int], degree: int = 0) -> Permutation:
    return Permutation.from_cycles([c], degree)


def restrict(p: Permutation, points: Iterable[int]) -> Permutation:
    """The permutation agreeing with p on ``points`` (a union of p-cycles) and fixing the rest."""
    img = list(range(len(p._img)))
    src = p._img
    for x in points:
        y = src[x]
        img[x] = y
    return Permutation._raw(tuple(img))


@dataclass(frozen=True)
class CycleDecomposition:
    cycles: tuple[Cycle, ...]
    degree: int

    def __iter__(self) -> Iterator[Cycle]:
        return iter(self.cycles)

    def __len__(self) -> int:
        return len(self.cycles)

    def __contains__(self, c: object) -> bool:
        return c in self.cycles

    def lengths(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.cycles)

    def product(self) -> Permutation:
        return Permutation.from_cycles(self.cycles, self.degree)


def cycle_decompose(p: Permutation) -> CycleDecomposition:
    return CycleDecomposition(tuple(p.cycles()), p.degree)


_INT = re.compile(r"-?\d+")


def _skip_space(text: str, pos: int) -> int:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def parse_cycles(text: str, degree: int | None = None) -> Permutation:
    """Parse cycle notation such as ``"(1 2 3)(4 5)"``, ``"(1, 2)"`` or ``"()"``.

    Separators inside a cycle are runs of spaces or a single comma.  The
    degree defaults to the largest point mentioned.
    """
    pos = _skip_space(text, 0)
    if pos == len(text):
        raise Malformed("empty input", pos)
    if re.fullmatch(r"\s*\(\s*\)\s*", text):
        return Permutation.identity(degree or 0)
    cycles: list[list[int]] = []
    seen: set[int] = set()
    while pos < len(text):
        if text[pos] != "(":
            raise Malformed("expected '('", pos, text[pos])
        pos = _skip_space(text, pos + 1)
        current: list[int] = []
        while True:
            m = _INT.match(text, pos)
            if m is None:
                tok = text[pos] if pos < len(text) else None
                raise Malformed("expected a point", pos, tok)
            x = int(m.group())
            if x < 1:
                raise Malformed("point is not a positive integer", pos, m.group())
            if x in seen:
                raise RepeatedPoint(f"point {x} appears twice", pos, m.group())
            seen.add(x)
            current.append(x)
            pos = m.end()
            after = _skip_space(text, pos)
            if after < len(text) and text[after] == ")":
                pos = after + 1
                break
            if after < len(text) and text[after] == ",":
                pos = _skip_space(text, after + 1)
            elif after > pos:
                pos = after
            else:
                tok = text[pos] if pos < len(text) else None
                msg = "unbalanced parenthesis" if tok is None else "expected separator or ')'"
                raise Malformed(msg, pos, tok)
        cycles.append(current)
        pos = _skip_space(text, pos)
    return Permutation.from_cycles(cycles, degree)


def format_cycles(p: Permutation) -> str:
    cs = list(p.cycles())
    if not cs:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cs)


def random_permutation(n: int, seed: int) -> Permutation:
    """Uniform element of S_n; the same (n, seed) always gives the same result."""
    if n < 1:
        raise ValueError("n must be positive")
    pts = list(range(1, n + 1))
    random.Random(seed).shuffle(pts)
    return Permutation._raw((0, *pts))


def all_permutations(n: int) -> Iterator[Permutation]:
    """S_n in lexicographic order of image sequences."""
    from itertools import permutations

    for imgs in permutations(range(1, n + 1)):
        yield Permutation._raw((0, *imgs))
