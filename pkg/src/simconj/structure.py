"""Structural analysis of a pair (alpha, beta).

Three layers:

* local inverse pairs and free points between two permutations ``g`` and
  ``h`` (the way ``gh`` collapses to few moved points);
* the action of ``beta`` by conjugation on the cycle factors of ``alpha``,
  split into full orbits and transitive chains;
* classification of chain-free, orbit-free pairs with a small commutator
  into one of the case templates, with the template labels bound to actual
  points.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .perm import (
    Cycle,
    Permutation,
    PointSet,
    commutator,
    conjugate,
    cycle_decompose,
    inverse,
    num_moved,
)


class StructureError(Exception):
    pass


class InverseFactorPresent(StructureError):
    pass


class ClassificationFailure(StructureError):
    pass


# ---------------------------------------------------------------- pair profile


@dataclass(frozen=True)
class LocalInversePair:
    """Points ``x1..xl`` with ``xi^g = x(i+1)`` and ``x(i+1)^h = xi``, maximal at both ends."""

    points: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.points)

    @property
    def first(self) -> int:
        return self.points[0]

    @property
    def last(self) -> int:
        return self.points[-1]

    def reversed(self) -> tuple[int, ...]:
        return self.points[::-1]


@dataclass(frozen=True)
class PairProfile:
    pairs: tuple[LocalInversePair, ...]
    free: PointSet
    g: Permutation
    h: Permutation

    def free_in_g(self) -> PointSet:
        """Free points moved by g (and fixed by h)."""
        return frozenset(x for x in self.free if self.g(x) != x)

    def free_in_h(self) -> PointSet:
        return frozenset(x for x in self.free if self.h(x) != x)


def _inverse_factor(g: Permutation, h: Permutation) -> Cycle | None:
    for c in g.cycles():
        if all(h(c[(i + 1) % len(c)]) == c[i] for i in range(len(c))):
            return c
    return None


def pair_profile(g: Permutation, h: Permutation) -> PairProfile:
    """Local inverse pairs and free points between ``g`` and ``h``.

    Raises InverseFactorPresent if some cycle of ``h`` is the inverse of a
    cycle of ``g``; such factors cancel in ``gh`` and must be removed first.
    """
    c = _inverse_factor(g, h)
    if c is not None:
        raise InverseFactorPresent(f"cycle {c} of g is inverted by h")
    n = max(g.degree, h.degree)
    g, h = g.extended(n), h.extended(n)
    gi, hi = g._img, h._img
    ginv = inverse(g)._img
    pairs = []
    free = []
    for x in range(1, n + 1):
        in_g, in_h = gi[x] != x, hi[x] != x
        if in_g != in_h:
            free.append(x)
            continue
        if not in_g:
            continue
        # x starts a pair unless the previous g-step is reversed by h
        if hi[x] == ginv[x]:
            continue
        chain = [x]
        y = x
        while hi[gi[y]] == y:
            y = gi[y]
            chain.append(y)
        pairs.append(LocalInversePair(tuple(chain)))
    return PairProfile(tuple(pairs), frozenset(free), g, h)


# ----------------------------------------------------- factors under conjugation


@dataclass(frozen=True)
class TransitiveChain:
    """Cycle factors ``a, a^beta, ..., a^(beta^(k-1))`` of alpha, entering and leaving {alpha}."""

    factors: tuple[Cycle, ...]

    @property
    def length(self) -> int:
        return len(self.factors)

    @property
    def head(self) -> Cycle:
        return self.factors[0]

    def points(self) -> frozenset[int]:
        return frozenset(x for c in self.factors for x in c)


@dataclass(frozen=True)
class FactorAction:
    """How beta permutes the cycle factors of alpha.

    ``succ[i]`` is the index of ``cycles[i]^beta`` when that conjugate is again
    a factor of alpha, else None.  ``offset[i]`` records where the image of
    ``cycles[i][0]`` sits inside ``cycles[succ[i]]``.
    """

    cycles: tuple[Cycle, ...]
    succ: tuple[int | None, ...]
    offset: tuple[int | None, ...]

    def orbits(self) -> list[list[int]]:
        out = []
        seen = set()
        for i in range(len(self.cycles)):
            if i in seen:
                continue
            j = self.succ[i]
            path = [i]
            while j is not None and j != i and j not in path:
                path.append(j)
                j = self.succ[j]
            if j == i:
                out.append(path)
                seen.update(path)
        return out

    def chains(self) -> list[list[int]]:
        has_pred = {j for j in self.succ if j is not None}
        out = []
        for i in range(len(self.cycles)):
            if i in has_pred or self.succ[i] is None:
                continue
            path = [i]
            j = self.succ[i]
            while j is not None:
                path.append(j)
                j = self.succ[j]
            out.append(path)
        return out


def factor_action(alpha: Permutation, beta: Permutation) -> FactorAction:
    n = max(alpha.degree, beta.degree)
    alpha, beta = alpha.extended(n), beta.extended(n)
    cycles = cycle_decompose(alpha).cycles
    cidx = [-1] * (n + 1)
    cpos = [0] * (n + 1)
    for idx, c in enumerate(cycles):
        for pos, x in enumerate(c):
            cidx[x] = idx
            cpos[x] = pos
    a, b = alpha._img, beta._img
    succ: list[int | None] = []
    offset: list[int | None] = []
    for c in cycles:
        # c^beta is a cycle of alpha iff beta carries each alpha-step of c to an alpha-step
        img = [b[x] for x in c]
        if [a[y] for y in img] == img[1:] + img[:1]:
            succ.append(cidx[img[0]])
            offset.append(cpos[img[0]])
        else:
            succ.append(None)
            offset.append(None)
    return FactorAction(cycles, tuple(succ), tuple(offset))


def beta_orbits_on_factors(alpha: Permutation, beta: Permutation) -> list[list[Cycle]]:
    """Full orbits of beta acting by conjugation on the cycle factors of alpha."""
    fa = factor_action(alpha, beta)
    return [[fa.cycles[i] for i in orb] for orb in fa.orbits()]


def transitive_chains(alpha: Permutation, beta: Permutation) -> list[TransitiveChain]:
    fa = factor_action(alpha, beta)
    chains = [TransitiveChain(tuple(fa.cycles[i] for i in ch)) for ch in fa.chains()]
    chains.sort(key=lambda ch: min(ch.head))
    return chains


# ------------------------------------------------------------------ case tags


class Case(enum.Enum):
    COMMUTING = "Commuting"
    T32I = "T32i"
    T32II = "T32ii"
    T32III = "T32iii"
    T33I = "T33i"
    T33II = "T33ii"
    T34I = "T34i"
    T34IIA = "T34iiA"
    T34IIB = "T34iiB"
    T35 = "T35"
    T36 = "T36"
    HAS_CHAINS = "HasChains"
    HAS_ORBITS = "HasOrbits"
    OUT_OF_SCOPE = "OutOfScope"

    def __str__(self) -> str:
        return self.value

    @property
    def is_template(self) -> bool:
        return self in TEMPLATES


@dataclass(frozen=True)
class Binding:
    """Template labels bound to actual points.

    ``x``, ``y``, ``z`` list the points ``x1..``, ``y1..``, ``z1..`` of the
    cycles of alpha^-1 in template order; ``extra`` is the point ``x(r+1)``
    moved by alpha^beta but not by alpha, when the template has one.
    """

    x: tuple[int, ...]
    y: tuple[int, ...] = ()
    z: tuple[int, ...] = ()
    extra: int | None = None
    indices: tuple[tuple[str, int], ...] = ()

    def index(self, name: str) -> int:
        return dict(self.indices)[name]

    def as_dict(self) -> dict:
        d = {k: v for k, v in self.indices}
        d["x"] = list(self.x)
        if self.y:
            d["y"] = list(self.y)
        if self.z:
            d["z"] = list(self.z)
        if self.extra is not None:
            d["extra"] = self.extra
        return d

    def key(self) -> tuple:
        return (self.x, self.y, self.z)


@dataclass(frozen=True)
class CaseTag:
    case: Case
    moved: int = 0
    binding: Binding | None = None
    alternatives: tuple[Case, ...] = ()

    def __str__(self) -> str:
        return self.case.value


def _rev(seq: Sequence[int]) -> list[int]:
    return list(seq[::-1])


def _reflect(pairs: list[tuple[int, int]], seq: Sequence[int], lo: int, hi: int) -> None:
    """Pair seq[lo+j] with seq[hi-j] (0-based, inclusive bounds)."""
    while lo < hi:
        pairs.append((seq[lo], seq[hi]))
        lo += 1
        hi -= 1


def _positional(src: Sequence[int], dst: Sequence[int], out: dict[int, int]) -> None:
    for a, b in zip(src, dst):
        out[a] = b


@dataclass(frozen=True)
class Template:
    """One displayed shape of (alpha^-1, alpha^beta) together with the canonical
    beta and inverting involution of the matching construction.

    ``shape`` maps blocks of each role cycle to indices (or None when the
    blocks do not fit); ``delta`` returns the cycles of alpha^beta;
    ``beta`` returns the canonical beta as a point map; ``omega`` returns the
    transpositions of the involution; ``swap``, when present, returns the
    transpositions of the involution exchanging the two equal-length factors.
    """

    case: Case
    ncycles: int
    npairs: int
    nfree: int
    shape: Callable
    delta: Callable
    beta: Callable
    omega: Callable
    swap: Callable | None = None


# Blocks are ("p", length) for a local inverse pair and ("f", 1) for a free point.


def _shape_t32ii(bx, by, bz):
    if [k for k, _ in bx] != ["p", "p", "f"]:
        return None
    s, b = bx[0][1], bx[1][1]
    return {"r": s + b + 1, "s": s}


def _shape_t33i(bx, by, bz):
    if [k for k, _ in bx] != ["p", "f"]:
        return None
    r = bx[0][1] + 1
    return {"r": r, "s": r - 1}


def _delta_free_single(b: Binding):
    x, r, s = b.x, b.index("r"), b.index("s")
    return [_rev(x[:s]) + _rev(x[s : r - 1]) + [b.extra]]


def _beta_free_single(b: Binding):
    x, r, s = b.x, b.index("r"), b.index("s")
    cyc = _rev(x[s:r]) + [b.extra]
    return {cyc[i]: cyc[(i + 1) % len(cyc)] for i in range(len(cyc))}


def _omega_free_single(b: Binding):
    x, r, s = b.x, b.index("r"), b.index("s")
    out: list[tuple[int, int]] = []
    _reflect(out, x, 0, s - 1)
    _reflect(out, x, s, r - 1)
    return out


def _cuts_shape(nblocks):
    def shape(bx, by, bz):
        if len(bx) != nblocks or any(k != "p" for k, _ in bx):
            return None
        cuts = list(itertools.accumulate(L for _, L in bx))
        names = ["s", "t", "k"][: nblocks - 1]
        d = {"r": cuts[-1]}
        d.update(zip(names, cuts[:-1]))
        return d

    return shape


def _cuts(b: Binding) -> list[int]:
    return [0] + [b.index(k) for k in ("s", "t", "k") if k in dict(b.indices)] + [b.index("r")]


def _delta_blocks(b: Binding):
    cuts = _cuts(b)
    out: list[int] = []
    for lo, hi in zip(cuts, cuts[1:]):
        out += _rev(b.x[lo:hi])
    return [out]


def _beta_blocks(b: Binding):
    m: dict[int, int] = {}
    _positional(_rev(b.x), _delta_blocks(b)[0], m)
    return m


def _omega_full_reflection(b: Binding):
    out: list[tuple[int, int]] = []
    _reflect(out, b.x, 0, len(b.x) - 1)
    return out


def _shape_t34i(bx, by, bz):
    if [k for k, _ in bx] != ["p", "f"] or [k for k, _ in by] != ["p"]:
        return None
    l = by[0][1]
    if bx[0][1] != l:
        return None
    return {"r": l + 1, "l": l}


def _delta_t34i(b: Binding):
    x, y, r = b.x, b.y, b.index("r")
    return [_rev(y) + [b.extra], _rev(x[: r - 1])]


def _beta_t34i(b: Binding):
    x, y, l, r = b.x, b.y, b.index("l"), b.index("r")
    m = {}
    for i in range(l):
        m[x[i]], m[y[i]] = y[i], x[i]
    m[x[r - 1]], m[b.extra] = b.extra, x[r - 1]
    return m


def _omega_t34i(b: Binding):
    out: list[tuple[int, int]] = []
    l = b.index("l")
    _reflect(out, b.x, 0, l - 1)
    _reflect(out, b.y, 0, l - 1)
    return out


def _shape_t34iia(bx, by, bz):
    if [k for k, _ in bx] != ["p", "p", "p"] or [k for k, _ in by] != ["p"]:
        return None
    l = by[0][1]
    if bx[0][1] != l:
        return None
    return {"r": sum(L for _, L in bx), "l": l, "s": l + bx[1][1]}


def _delta_t34iia(b: Binding):
    x, y, r, l, s = b.x, b.y, b.index("r"), b.index("l"), b.index("s")
    return [_rev(y) + _rev(x[l:s]) + _rev(x[s:r]), _rev(x[:l])]


def _beta_t34iia(b: Binding):
    d1, d2 = _delta_t34iia(b)
    m: dict[int, int] = {}
    _positional(_rev(b.x), d1, m)
    _positional(_rev(b.y), d2, m)
    return m


def _omega_both_reflections(b: Binding):
    out: list[tuple[int, int]] = []
    _reflect(out, b.x, 0, len(b.x) - 1)
    _reflect(out, b.y, 0, len(b.y) - 1)
    return out


def _shape_t34iib(bx, by, bz):
    if [k for k, _ in bx] != ["p", "p"] or [k for k, _ in by] != ["p", "p"]:
        return None
    s = bx[0][1]
    if by[0][1] != s:
        return None
    r, l = s + bx[1][1], s + by[1][1]
    if l > r:
        return None
    return {"r": r, "l": l, "s": s}


def _delta_t34iib(b: Binding):
    x, y, s = b.x, b.y, b.index("s")
    return [_rev(x[s:]) + _rev(y[:s]), _rev(y[s:]) + _rev(x[:s])]


def _beta_swap_prefix(count_key: str):
    def beta(b: Binding):
        m = {}
        for i in range(b.index(count_key)):
            m[b.x[i]], m[b.y[i]] = b.y[i], b.x[i]
        return m

    return beta


def _omega_t34iib(b: Binding):
    s = b.index("s")
    out: list[tuple[int, int]] = []
    _reflect(out, b.x, 0, s - 1)
    _reflect(out, b.x, s, len(b.x) - 1)
    _reflect(out, b.y, 0, s - 1)
    _reflect(out, b.y, s, len(b.y) - 1)
    return out


def _swap_t34iib(b: Binding):
    if len(b.x) != len(b.y):
        return None
    return list(zip(b.x, b.y))


def _shape_t35(bx, by, bz):
    if [k for k, _ in bx] != ["p", "p"] or [k for k, _ in by] != ["p"]:
        return None
    l = by[0][1]
    if bx[0][1] != l:
        return None
    return {"r": l + bx[1][1], "l": l}


def _delta_t35(b: Binding):
    x, y, l = b.x, b.y, b.index("l")
    return [_rev(y) + _rev(x[l:]), _rev(x[:l])]


def _omega_t35(b: Binding):
    l = b.index("l")
    out: list[tuple[int, int]] = []
    _reflect(out, b.x, 0, l - 1)
    _reflect(out, b.x, l, len(b.x) - 1)
    _reflect(out, b.y, 0, l - 1)
    return out


def _shape_t36(bx, by, bz):
    if [k for k, _ in bx] != ["p", "p"] or [k for k, _ in by] != ["p"] or [k for k, _ in bz] != ["p"]:
        return None
    s, t = bx[0][1], bx[1][1]
    if by[0][1] != s or bz[0][1] != t:
        return None
    return {"r": s + t, "s": s, "t": t}


def _delta_t36(b: Binding):
    x, y, z, s = b.x, b.y, b.z, b.index("s")
    return [_rev(y) + _rev(z), _rev(x[:s]), _rev(x[s:])]


def _beta_t36(b: Binding):
    x, y, z, s = b.x, b.y, b.z, b.index("s")
    m = {}
    for i in range(s):
        m[x[i]], m[y[i]] = y[i], x[i]
    for j in range(len(z)):
        m[x[s + j]], m[z[j]] = z[j], x[s + j]
    return m


def _omega_t36(b: Binding):
    s = b.index("s")
    out: list[tuple[int, int]] = []
    _reflect(out, b.x, 0, s - 1)
    _reflect(out, b.x, s, len(b.x) - 1)
    _reflect(out, b.y, 0, len(b.y) - 1)
    _reflect(out, b.z, 0, len(b.z) - 1)
    return out


def _swap_t36(b: Binding):
    s = b.index("s")
    if s != len(b.z):
        return None
    return [(b.x[i], b.x[i + s]) for i in range(s)] + list(zip(b.y, b.z))


TEMPLATES: dict[Case, Template] = {
    t.case: t
    for t in [
        Template(Case.T32II, 1, 2, 2, _shape_t32ii, _delta_free_single, _beta_free_single, _omega_free_single),
        Template(Case.T32III, 1, 4, 0, _cuts_shape(4), _delta_blocks, _beta_blocks, _omega_full_reflection),
        Template(Case.T33I, 1, 1, 2, _shape_t33i, _delta_free_single, _beta_free_single, _omega_free_single),
        Template(Case.T33II, 1, 3, 0, _cuts_shape(3), _delta_blocks, _beta_blocks, _omega_full_reflection),
        Template(Case.T34I, 2, 2, 2, _shape_t34i, _delta_t34i, _beta_t34i, _omega_t34i),
        Template(Case.T34IIA, 2, 4, 0, _shape_t34iia, _delta_t34iia, _beta_t34iia, _omega_both_reflections),
        Template(
            Case.T34IIB, 2, 4, 0, _shape_t34iib, _delta_t34iib, _beta_swap_prefix("s"), _omega_t34iib, _swap_t34iib
        ),
        Template(Case.T35, 2, 3, 0, _shape_t35, _delta_t35, _beta_swap_prefix("l"), _omega_t35),
        Template(Case.T36, 3, 4, 0, _shape_t36, _delta_t36, _beta_t36, _omega_t36, _swap_t36),
    ]
}
TEMPLATES[Case.T32I] = None  # handled directly on the cycles of beta, see construct.t32i_witness


def _blocks(labels: Sequence[int], by_start: dict[int, LocalInversePair], free_g: PointSet):
    out = []
    pos = 0
    r = len(labels)
    while pos < r:
        p = labels[pos]
        pair = by_start.get(p)
        if pair is not None:
            L = len(pair)
            if tuple(labels[pos : pos + L]) != pair.points:
                return None
            out.append(("p", L))
            pos += L
        elif p in free_g:
            out.append(("f", 1))
            pos += 1
        else:
            return None
    return out


def _rotate_to(cycle: Cycle, x: int) -> tuple[int, ...]:
    k = cycle.index(x)
    return cycle[k:] + cycle[:k]


def _matches(delta: Permutation, cycles: list[list[int]]) -> bool:
    img = delta._img
    count = 0
    for c in cycles:
        L = len(c)
        for i in range(L):
            if img[c[i]] != c[(i + 1) % L]:
                return False
        count += L
    return count == num_moved(delta)


def match_templates(alpha: Permutation, delta: Permutation, profile: PairProfile) -> list[tuple[Case, Binding]]:
    """All (case, binding) pairs whose displayed shapes reproduce alpha^-1 and alpha^beta = delta.

    Bindings within one case are returned smallest first.
    """
    g = profile.g
    # alpha = (c0 c1 .. c(r-1)) means alpha^-1 = (c0 c(r-1) .. c1)
    gcycles = [(c[0],) + tuple(reversed(c[1:])) for c in cycle_decompose(alpha).cycles]
    by_start = {p.first: p for p in profile.pairs}
    free_g = profile.free_in_g()
    free_h = sorted(profile.free_in_h())
    npairs, nfree = len(profile.pairs), len(profile.free)
    starts = []
    for c in gcycles:
        cand = [x for x in c if x in by_start] + [g(x) for x in c if x in free_g]
        starts.append(sorted(set(cand)))

    results: list[tuple[Case, Binding]] = []
    for case, tpl in TEMPLATES.items():
        if tpl is None:
            continue
        if tpl.ncycles != len(gcycles) or tpl.npairs != npairs or tpl.nfree != nfree:
            continue
        extra = free_h[0] if len(free_h) == 1 else None
        found = []
        for roles in itertools.permutations(range(len(gcycles))):
            for pick in itertools.product(*(starts[i] for i in roles)):
                labels = [_rotate_to(gcycles[i], x) for i, x in zip(roles, pick)]
                blocks = [_blocks(lab, by_start, free_g) for lab in labels]
                if any(bl is None for bl in blocks):
                    continue
                while len(blocks) < 3:
                    blocks.append([])
                idx = tpl.shape(*blocks)
                if idx is None:
                    continue
                labels += [()] * (3 - len(labels))
                b = Binding(labels[0], labels[1], labels[2], extra, tuple(sorted(idx.items())))
                if _matches(delta, tpl.delta(b)):
                    found.append(b)
        found.sort(key=Binding.key)
        results.extend((case, b) for b in found)
    return results


def classify_case(alpha: Permutation, beta: Permutation, moved: int | None = None) -> CaseTag:
    """``moved`` may pass a known |M([alpha, beta])| to skip recomputing it."""
    n = max(alpha.degree, beta.degree)
    alpha, beta = alpha.extended(n), beta.extended(n)
    m = num_moved(commutator(alpha, beta)) if moved is None else moved
    if m == 0:
        return CaseTag(Case.COMMUTING, 0)
    if m > 4:
        return CaseTag(Case.OUT_OF_SCOPE, m)
    fa = factor_action(alpha, beta)
    if fa.orbits():
        return CaseTag(Case.HAS_ORBITS, m)
    if fa.chains():
        return CaseTag(Case.HAS_CHAINS, m)
    s = len(fa.cycles)
    if s > 3:
        raise ClassificationFailure(f"{s} cycle factors without chains or orbits and |M([a,b])| = {m}")
    delta = conjugate(alpha, beta)
    g = inverse(alpha)
    profile = pair_profile(g, delta)
    if s == 1 and len(fa.cycles[0]) == 2 and len(profile.pairs) == 0 and len(profile.free) == 4:
        x = fa.cycles[0]
        y = tuple(sorted(profile.free_in_h()))
        return CaseTag(Case.T32I, m, Binding(x, y, indices=(("r", 2),)))
    matches = match_templates(alpha, delta, profile)
    if not matches:
        raise ClassificationFailure(
            f"no template matches alpha={alpha} with alpha^beta={delta} "
            f"({len(profile.pairs)} pairs, {len(profile.free)} free points)"
        )
    case, binding = matches[0]
    others = tuple(dict.fromkeys(cs for cs, _ in matches if cs != case))
    return CaseTag(case, m, binding, others)


def _layout(case: Case, lengths: Sequence[int], idx: dict, extra: bool) -> Binding:
    pts = iter(itertools.count(1))
    cyc = [tuple(next(pts) for _ in range(L)) for L in lengths]
    cyc += [()] * (3 - len(cyc))
    e = next(pts) if extra else None
    return Binding(cyc[0], cyc[1], cyc[2], e, tuple(sorted(idx.items())))


def template_bindings(case: Case, max_len: int = 8) -> Iterator[Binding]:
    """Every index choice of a case with all cycle lengths at most ``max_len``,
    laid out on consecutive points x.., y.., z.., extra.  Cycles of y and z
    have length at least 2."""
    R = range(1, max_len + 1)
    if case is Case.T32I:
        yield Binding((1, 2), (3, 4), indices=(("r", 2),))
    elif case is Case.T32II:
        for r in R:
            for s in range(1, r - 1):
                yield _layout(case, [r], {"r": r, "s": s}, True)
    elif case is Case.T33I:
        for r in range(2, max_len + 1):
            yield _layout(case, [r], {"r": r, "s": r - 1}, True)
    elif case is Case.T32III:
        for r in R:
            for s, t, k in itertools.combinations(range(1, r), 3):
                yield _layout(case, [r], {"r": r, "s": s, "t": t, "k": k}, False)
    elif case is Case.T33II:
        for r in R:
            for s, t in itertools.combinations(range(1, r), 2):
                yield _layout(case, [r], {"r": r, "s": s, "t": t}, False)
    elif case is Case.T34I:
        for l in range(2, max_len):
            yield _layout(case, [l + 1, l], {"r": l + 1, "l": l}, True)
    elif case is Case.T34IIA:
        for r in R:
            for l, s in itertools.combinations(range(2, r), 2):
                yield _layout(case, [r, l], {"r": r, "l": l, "s": s}, False)
    elif case is Case.T34IIB:
        for r in R:
            for l in range(2, r + 1):
                for s in range(1, l):
                    yield _layout(case, [r, l], {"r": r, "l": l, "s": s}, False)
    elif case is Case.T35:
        for r in R:
            for l in range(2, r):
                yield _layout(case, [r, l], {"r": r, "l": l}, False)
    elif case is Case.T36:
        for r in R:
            for s in range(2, r - 1):
                yield _layout(case, [r, s, r - s], {"r": r, "s": s, "t": r - s}, False)
    else:
        raise ValueError(f"{case} is not a template case")
