"""Complete decision procedures for simultaneous inversion.

The inverting conjugators of alpha form the single coset ``C(alpha) omega0``
of the centralizer, so the coset oracle enumerates only that.  Two further
procedures are independent of it: a scan of all of S_n for tiny n, and a
backtracking search over the orbits of <alpha, beta> that propagates one
base-point image per orbit.  The backtracking search is what the solver
falls back on.
"""

from __future__ import annotations

import math
import random
import time
from collections import Counter
from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterator

from .perm import Permutation, all_permutations, commutator, conjugate, inverse, moved_points, num_moved

DEFAULT_BUDGET = 10**7


class BudgetExceeded(Exception):
    def __init__(self, needed: int, budget: int):
        self.needed = needed
        self.budget = budget
        super().__init__(f"enumeration of {needed} elements exceeds budget {budget}")


@dataclass(frozen=True)
class CentralizerSpec:
    multiplicities: dict[int, int]
    fixed: int
    order: int


def centralizer_spec(alpha: Permutation, n: int | None = None) -> CentralizerSpec:
    n = alpha.degree if n is None else max(n, alpha.degree)
    mult = Counter(len(c) for c in alpha.cycles())
    fixed = n - sum(k * m for k, m in mult.items())
    order = math.factorial(fixed)
    for k, m in mult.items():
        order *= k**m * math.factorial(m)
    return CentralizerSpec(dict(sorted(mult.items())), fixed, order)


def centralizer_order(alpha: Permutation, n: int | None = None) -> int:
    """``prod_k k^m_k m_k!`` times the factorial of the number of fixed points."""
    return centralizer_spec(alpha, n).order


def centralizer_elements(alpha: Permutation, n: int | None = None) -> Iterator[Permutation]:
    """Every permutation of 1..n commuting with alpha, each once."""
    n = alpha.degree if n is None else max(n, alpha.degree)
    cycles = list(alpha.extended(n).cycles())
    by_len: dict[int, list[tuple[int, ...]]] = {}
    for c in cycles:
        by_len.setdefault(len(c), []).append(c)
    fixed = sorted(set(range(1, n + 1)) - moved_points(alpha))
    groups = list(by_len.items())

    def group_maps(k, cs):
        # a centralizing map sends each k-cycle to some k-cycle, rotated
        for order in permutations(range(len(cs))):
            for rots in product(range(k), repeat=len(cs)):
                yield [(a, cs[j][(i + rot) % k]) for a_c, j, rot in zip(cs, order, rots) for i, a in enumerate(a_c)]

    choices = [list(group_maps(k, cs)) for k, cs in groups]
    for fimg in permutations(fixed):
        base = list(range(n + 1))
        for a, b in zip(fixed, fimg):
            base[a] = b
        for combo in product(*choices):
            img = base[:]
            for pairs in combo:
                for a, b in pairs:
                    img[a] = b
            yield Permutation._raw(tuple(img))


def _reverser(alpha: Permutation, n: int) -> Permutation:
    img = list(range(n + 1))
    for c in alpha.cycles():
        r = len(c)
        for i in range(r):
            img[c[i]] = c[-i % r]
    return Permutation._raw(tuple(img))


def all_inverting_conjugators(alpha: Permutation, n: int | None = None, budget: int = DEFAULT_BUDGET) -> Iterator[Permutation]:
    """All gamma with ``alpha^gamma = alpha^-1``, in lexicographic order of images."""
    n = alpha.degree if n is None else max(n, alpha.degree)
    order = centralizer_order(alpha, n)
    if order > budget:
        raise BudgetExceeded(order, budget)
    w0 = _reverser(alpha, n)._img
    coset = [tuple(w0[x] for x in c._img) for c in centralizer_elements(alpha, n)]
    coset.sort()
    for img in coset:
        yield Permutation._raw(img)


def brute_force_inverter(
    alpha: Permutation, beta: Permutation, n: int | None = None, budget: int = DEFAULT_BUDGET
) -> Permutation | None:
    """The lexicographically first gamma inverting both, or None when none exists."""
    n = max(alpha.degree, beta.degree, n or 0)
    b = beta.extended(n)._img
    for g in all_inverting_conjugators(alpha, n, budget):
        gi = g._img
        # beta^g = beta^-1  <=>  (x^beta)^g  maps back to x^g under beta
        if all(b[gi[b[x]]] == gi[x] for x in range(1, n + 1)):
            return g
    return None


def has_inverter(alpha: Permutation, beta: Permutation, n: int | None = None, budget: int = DEFAULT_BUDGET) -> bool:
    return brute_force_inverter(alpha, beta, n, budget) is not None


def full_scan_inverter(alpha: Permutation, beta: Permutation, n: int | None = None, max_degree: int = 8) -> Permutation | None:
    """First element of S_n (lexicographic) inverting both; only for small n."""
    n = max(alpha.degree, beta.degree, n or 0)
    if n > max_degree:
        raise BudgetExceeded(math.factorial(n), math.factorial(max_degree))
    ai, bi = inverse(alpha).extended(n), inverse(beta).extended(n)
    for g in all_permutations(n):
        if conjugate(alpha, g) == ai and conjugate(beta, g) == bi:
            return g
    return None


def _orbits(a: tuple[int, ...], b: tuple[int, ...], n: int) -> list[list[int]]:
    seen = bytearray(n + 1)
    out = []
    for x in range(1, n + 1):
        if seen[x]:
            continue
        seen[x] = 1
        orb, stack = [], [x]
        while stack:
            y = stack.pop()
            orb.append(y)
            for z in (a[y], b[y]):
                if not seen[z]:
                    seen[z] = 1
                    stack.append(z)
        out.append(orb)
    return out


def _propagate(x: int, y: int, a, ai, b, bi, img: dict[int, int], taken: set[int]) -> bool:
    """Extend ``x -> y`` to the whole orbit of x; gamma must satisfy
    ``(p^alpha)^gamma = (p^gamma)^(alpha^-1)`` and likewise for beta."""
    img[x] = y
    taken.add(y)
    stack = [x]
    while stack:
        p = stack.pop()
        q = img[p]
        for src, dst in ((a[p], ai[q]), (ai[p], a[q]), (b[p], bi[q]), (bi[p], b[q])):
            have = img.get(src)
            if have is None:
                if dst in taken:
                    return False
                img[src] = dst
                taken.add(dst)
                stack.append(src)
            elif have != dst:
                return False
    return True


def backtrack_inverter(alpha: Permutation, beta: Permutation) -> Permutation | None:
    """Orbit-by-orbit search, independent of the centralizer enumeration.

    gamma maps each orbit of <alpha, beta> either onto itself or onto a
    partner orbit; in the second case the inverse map serves the partner, so
    partners can be matched greedily.
    """
    n = max(alpha.degree, beta.degree)
    a, b = alpha.extended(n)._img, beta.extended(n)._img
    ai, bi = inverse(alpha).extended(n)._img, inverse(beta).extended(n)._img
    orbits = _orbits(a, b, n)

    def signature(orb):
        la = Counter(len(c) for c in _cycles_on(a, orb))
        lb = Counter(len(c) for c in _cycles_on(b, orb))
        return (len(orb), tuple(sorted(la.items())), tuple(sorted(lb.items())))

    sigs = [signature(o) for o in orbits]
    result = list(range(n + 1))
    done = [False] * len(orbits)
    for i, orb in enumerate(orbits):
        if done[i]:
            continue
        x = orb[0]
        cands = [i] + [j for j in range(i + 1, len(orbits)) if not done[j] and sigs[j] == sigs[i]]
        found = False
        for j in cands:
            for y in orbits[j]:
                img: dict[int, int] = {}
                if _propagate(x, y, a, ai, b, bi, img, set()):
                    for p, q in img.items():
                        result[p] = q
                        if j != i:
                            result[q] = p
                    done[i] = done[j] = True
                    found = True
                    break
            if found:
                break
        if not found:
            return None
    return Permutation._raw(tuple(result))


def _cycles_on(img, pts):
    seen = set()
    for x in pts:
        if x in seen:
            continue
        c = [x]
        seen.add(x)
        y = img[x]
        while y != x:
            seen.add(y)
            c.append(y)
            y = img[y]
        yield c


# ------------------------------------------------------------------ sweeps


def partitions(n: int) -> Iterator[tuple[int, ...]]:
    """Partitions of n in decreasing lexicographic order, parts non-increasing."""

    def rec(rest, top):
        if rest == 0:
            yield ()
            return
        for k in range(min(rest, top), 0, -1):
            for tail in rec(rest - k, k):
                yield (k, *tail)

    yield from rec(n, n)


def class_representative(shape: tuple[int, ...], n: int) -> Permutation:
    """Cycles of the given lengths laid out on 1, 2, .. in order."""
    cycles, start = [], 1
    for k in shape:
        if k > 1:
            cycles.append(tuple(range(start, start + k)))
        start += k
    return Permutation.from_cycles(cycles, n)


def class_representatives(n: int) -> list[tuple[Permutation, int]]:
    """One element per conjugacy class of S_n with the class size."""
    f = math.factorial(n)
    out = []
    for shape in partitions(n):
        rep = class_representative(shape, n)
        out.append((rep, f // centralizer_order(rep, n)))
    return out


def to_representative(alpha: Permutation, n: int | None = None) -> Permutation:
    """A conjugator delta with ``alpha^delta`` equal to the class representative."""
    n = alpha.degree if n is None else max(n, alpha.degree)
    cycles = sorted(alpha.extended(n).cycles(), key=lambda c: (-len(c), c[0]))
    fixed = sorted(set(range(1, n + 1)) - moved_points(alpha))
    img = [0] * (n + 1)
    pos = 1
    for c in cycles:
        for x in c:
            img[x] = pos
            pos += 1
    for x in fixed:
        img[x] = pos
        pos += 1
    return Permutation._raw(tuple(img))


@dataclass
class SweepReport:
    n: int
    mode: str = "exhaustive"
    dedup: bool = False
    total: int = 0
    evaluated: int = 0
    qualifying: int = 0
    constructive: int = 0
    fallback: int = 0
    fallback_pairs: list = None
    failures: list = None
    histogram: dict = None
    methods: dict = None
    cross_checked: int = 0
    disagreements: list = None
    wall_time: float = 0.0

    def __post_init__(self):
        for name in ("fallback_pairs", "failures", "disagreements"):
            if getattr(self, name) is None:
                setattr(self, name, [])
        if self.histogram is None:
            self.histogram = {}
        if self.methods is None:
            self.methods = {}

    def merge(self, other: "SweepReport") -> "SweepReport":
        out = SweepReport(self.n, self.mode, self.dedup)
        for name in ("total", "evaluated", "qualifying", "constructive", "fallback", "cross_checked"):
            setattr(out, name, getattr(self, name) + getattr(other, name))
        for name in ("fallback_pairs", "failures", "disagreements"):
            setattr(out, name, getattr(self, name) + getattr(other, name))
        for m in set(self.histogram) | set(other.histogram):
            e1, z1 = self.histogram.get(m, (0, 0))
            e2, z2 = other.histogram.get(m, (0, 0))
            out.histogram[m] = (e1 + e2, z1 + z2)
        for k in set(self.methods) | set(other.methods):
            out.methods[k] = self.methods.get(k, 0) + other.methods.get(k, 0)
        out.wall_time = self.wall_time + other.wall_time
        return out

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "mode": self.mode,
            "dedup": self.dedup,
            "total": self.total,
            "evaluated": self.evaluated,
            "qualifying": self.qualifying,
            "constructive": self.constructive,
            "fallback": self.fallback,
            "fallback_pairs": [list(p) for p in self.fallback_pairs],
            "failures": [list(p) for p in self.failures],
            "cross_checked": self.cross_checked,
            "disagreements": [list(p) for p in self.disagreements],
            "methods": dict(sorted(self.methods.items())),
            "histogram": {m: {"exists": e, "none": z} for m, (e, z) in sorted(self.histogram.items())},
            "wall_time": round(self.wall_time, 3),
        }


def _run_batch(args) -> SweepReport:
    from .construct import NotFound, simultaneous_inverter

    n, mode, dedup, items, cross_check, tag = args
    rep = SweepReport(n, mode, dedup)
    rng = random.Random(tag)
    all_b = None
    hist: dict[int, list[int]] = {}
    methods: Counter = Counter()
    for a_img, weight, b_imgs in items:
        alpha = Permutation._raw(a_img)
        if b_imgs is None:
            if all_b is None:
                all_b = [p._img for p in all_permutations(n)]
            b_imgs = all_b
        ai = inverse(alpha)._img
        for b_img in b_imgs:
            beta = Permutation._raw(b_img)
            # [a, b] = a^-1 a^b; count points it moves
            conj = [0] * (n + 1)
            for x in range(n + 1):
                conj[b_img[x]] = b_img[a_img[x]]
            m = sum(1 for x in range(1, n + 1) if conj[ai[x]] != x)
            rep.evaluated += 1
            rep.total += weight
            qualifying = m <= 4
            exists = True
            try:
                cert = simultaneous_inverter(alpha, beta, allow_fallback=True)
                method = cert.method.value
                ok = cert.verified
            except NotFound:
                exists, method, ok = False, "NotFound", True
            methods[method] += weight
            h = hist.setdefault(m, [0, 0])
            h[0 if exists else 1] += weight
            pair = (str(alpha), str(beta))
            if qualifying:
                rep.qualifying += weight
                if not exists or not ok:
                    rep.failures.append(pair)
                elif method == "OracleFallback":
                    rep.fallback += weight
                    rep.fallback_pairs.append(pair)
                else:
                    rep.constructive += weight
            elif not ok:
                rep.failures.append(pair)
            if cross_check and rng.random() < cross_check:
                rep.cross_checked += 1
                if has_inverter(alpha, beta, n) != exists:
                    rep.disagreements.append(pair)
    rep.histogram = {m: tuple(v) for m, v in hist.items()}
    rep.methods = dict(methods)
    return rep


def _map_batches(batches, jobs: int) -> list[SweepReport]:
    if jobs <= 1 or len(batches) <= 1:
        return [_run_batch(b) for b in batches]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_batch, batches))


def theorem_sweep(
    n: int,
    mode: str = "exhaustive",
    budget: int = DEFAULT_BUDGET,
    seed: int = 0,
    samples: int = 10_000,
    dedup: bool = False,
    jobs: int = 1,
    cross_check: float = 0.0,
) -> SweepReport:
    """Run the solver on every ordered pair of S_n (or a seeded sample).

    With ``dedup`` only one alpha per conjugacy class is run, against every
    beta, and each result is weighted by the class size; existence and the
    commutator support are invariant under simultaneous conjugation, so the
    weighted totals are those of the full run.
    """
    start = time.perf_counter()
    if mode == "exhaustive":
        size = math.factorial(n)
        if dedup:
            alphas = [(rep._img, w) for rep, w in class_representatives(n)]
        else:
            alphas = [(p._img, 1) for p in all_permutations(n)]
        work = len(alphas) * size
        if work > budget:
            raise BudgetExceeded(work, budget)
        chunk = max(1, len(alphas) // max(1, 4 * jobs)) if not dedup else 1
        groups = [alphas[i : i + chunk] for i in range(0, len(alphas), chunk)]
        batches = [
            (n, mode, dedup, [(a, w, None) for a, w in g], cross_check, f"{seed}:{i}") for i, g in enumerate(groups)
        ]
    elif mode == "sampled":
        if samples > budget:
            raise BudgetExceeded(samples, budget)
        rng = random.Random(seed)
        pts = list(range(1, n + 1))
        pairs = []
        for _ in range(samples):
            rng.shuffle(pts)
            a = (0, *pts)
            rng.shuffle(pts)
            pairs.append((a, (0, *pts)))
        size = 1000
        batches = [
            (n, mode, False, [(a, 1, [b]) for a, b in pairs[i : i + size]], cross_check, f"{seed}:{i}")
            for i in range(0, len(pairs), size)
        ]
    else:
        raise ValueError(f"unknown sweep mode {mode!r}")
    parts = _map_batches(batches, jobs)
    report = SweepReport(n, mode, dedup)
    for p in parts:
        report = report.merge(p)
    report.wall_time = time.perf_counter() - start
    return report


class SharpnessResult:
    """Pairs of S_n whose commutator moves ``target`` points and which admit
    no simultaneous inverter.

    Stored as the hits for one alpha per conjugacy class; membership,
    length and iteration cover the full set by conjugation.
    """

    def __init__(self, n: int, target: int, hits: dict[Permutation, tuple[Permutation, ...]], weights: dict):
        self.n = n
        self.target = target
        self.hits = hits
        self._sets = {r: frozenset(v) for r, v in hits.items()}
        self._weights = weights

    def representatives(self) -> list[tuple[Permutation, Permutation]]:
        return [(r, b) for r, bs in self.hits.items() for b in bs]

    def __len__(self) -> int:
        return sum(self._weights[r] * len(bs) for r, bs in self.hits.items())

    def __bool__(self) -> bool:
        return any(self.hits.values())

    def __contains__(self, pair) -> bool:
        alpha, beta = pair
        n = max(self.n, alpha.degree, beta.degree)
        if n != self.n:
            return False
        d = to_representative(alpha, n)
        rep = conjugate(alpha, d)
        return conjugate(beta, d) in self._sets.get(rep, ())

    def __iter__(self) -> Iterator[tuple[Permutation, Permutation]]:
        if not self:
            return
        for alpha in all_permutations(self.n):
            d = to_representative(alpha, self.n)
            hs = self._sets.get(conjugate(alpha, d))
            if not hs:
                continue
            di = inverse(d)
            for b in sorted(conjugate(h, di) for h in hs):
                yield alpha, b


def sharpness_search(n: int, target_moved: int, budget: int = DEFAULT_BUDGET) -> SharpnessResult:
    """All pairs with ``|M([alpha, beta])| = target_moved`` and no inverter.

    Each hit is found by the orbit search and confirmed by the centralizer
    coset scan; a disagreement raises RuntimeError.
    """
    reps = class_representatives(n)
    work = len(reps) * math.factorial(n)
    if work > budget:
        raise BudgetExceeded(work, budget)
    hits: dict[Permutation, tuple[Permutation, ...]] = {}
    weights = {}
    betas = list(all_permutations(n)) if target_moved >= 3 else []
    for rep, w in reps:
        found = []
        for beta in betas:
            if num_moved(commutator(rep, beta)) != target_moved:
                continue
            if backtrack_inverter(rep, beta) is not None:
                continue
            if brute_force_inverter(rep, beta, n, budget) is not None:
                raise RuntimeError(f"oracles disagree on {rep}, {beta}")
            found.append(beta)
        if found:
            hits[rep] = tuple(found)
            weights[rep] = w
    return SharpnessResult(n, target_moved, hits, weights)

