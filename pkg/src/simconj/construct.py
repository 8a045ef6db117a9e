"""Constructive simultaneous inversion.

Given alpha, beta with ``|M([alpha, beta])| <= 4`` this builds gamma with
``alpha^gamma = alpha^-1`` and ``beta^gamma = beta^-1`` from explicit
reversers: commuting blocks are handled factor orbit by factor orbit,
transitive chains are collapsed onto their head and re-expanded afterwards,
and the remaining chain-free pair is matched against a case template whose
involution is transported to the actual beta through the centralizer of
alpha.  Every result is checked by direct conjugation before it is
returned.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field
from typing import Sequence

from . import oracle
from .perm import (
    Cycle,
    Permutation,
    commutator,
    compose,
    compose_all,
    conjugate,
    cycle_decompose,
    inverse,
    moved_points,
    num_moved,
    restrict,
)
from .structure import (
    TEMPLATES,
    Case,
    CaseTag,
    StructureError,
    TransitiveChain,
    classify_case,
    factor_action,
)

log = logging.getLogger(__name__)


class ConstructionError(Exception):
    pass


class PointNotInCycle(ConstructionError):
    pass


class LengthMismatch(ConstructionError):
    pass


class NotDisjoint(ConstructionError):
    pass


class PreconditionViolated(ConstructionError):
    pass


class NotCommuting(ConstructionError):
    pass


class InvalidChain(ConstructionError):
    pass


class TemplateMismatch(ConstructionError):
    pass


class NotSameConjugate(ConstructionError):
    pass


class NoEqualLengthSwap(ConstructionError):
    pass


class OutOfScope(Exception):
    def __init__(self, moved: int):
        self.moved = moved
        super().__init__(f"|M([alpha,beta])| = {moved} > 4")


class NotFound(Exception):
    def __init__(self, moved: int):
        self.moved = moved
        super().__init__(f"no simultaneous inverter exists (|M([alpha,beta])| = {moved})")


class Method(enum.Enum):
    COMMUTING = "Commuting"
    CASE_TEMPLATE = "CaseTemplate"
    CHAIN_REDUCTION = "ChainReduction"
    ORACLE_FALLBACK = "OracleFallback"
    IDENTITY = "Identity"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class WitnessCertificate:
    gamma: Permutation
    method: Method
    verified: bool
    support_shrunk: bool
    tag: CaseTag | None = None
    trace: tuple[str, ...] = ()


def _from_pairs(pairs: Sequence[tuple[int, int]], n: int) -> Permutation:
    img = list(range(n + 1))
    for a, b in pairs:
        img[a], img[b] = b, a
    return Permutation._raw(tuple(img))


def _from_map(m: dict[int, int], n: int) -> Permutation:
    img = list(range(n + 1))
    for a, b in m.items():
        img[a] = b
    return Permutation._raw(tuple(img))


# ------------------------------------------------------------------ reversers


def reverser_fixing(c: Sequence[int], x: int, degree: int = 0) -> Permutation:
    """Involution inverting the cycle ``c``, fixing ``x`` and moving only points of ``c``."""
    return reverser_mapping(c, x, x, degree)


def reverser_mapping(c: Sequence[int], xi: int, xj: int, degree: int = 0) -> Permutation:
    """Involution inverting the cycle ``c`` with ``xi -> xj``, supported on ``c``."""
    c = tuple(c)
    try:
        p, q = c.index(xi), c.index(xj)
    except ValueError:
        raise PointNotInCycle(f"{xi} or {xj} not in cycle {c}") from None
    r = len(c)
    n = max(max(c), degree)
    img = list(range(n + 1))
    for t in range(r):
        img[c[t]] = c[(p + q - t) % r]
    return Permutation._raw(tuple(img))


def cycle_swapper(a: Sequence[int], b: Sequence[int], xi: int, yj: int, degree: int = 0) -> Permutation:
    """Involution with ``a -> b^-1``, ``b -> a^-1`` containing the transposition ``(xi yj)``."""
    a, b = tuple(a), tuple(b)
    if len(a) != len(b):
        raise LengthMismatch(f"cycles of lengths {len(a)} and {len(b)}")
    if set(a) & set(b):
        raise NotDisjoint(f"{a} and {b} share points")
    try:
        p, q = a.index(xi), b.index(yj)
    except ValueError:
        raise PointNotInCycle(f"{xi} not in {a} or {yj} not in {b}") from None
    r = len(a)
    n = max(max(a), max(b), degree)
    img = list(range(n + 1))
    for t in range(r):
        u, v = a[(p + t) % r], b[(q - t) % r]
        img[u], img[v] = v, u
    return Permutation._raw(tuple(img))


def _reverse_all(cycles, n: int, keep: frozenset[int] = frozenset()) -> list[tuple[int, int]]:
    """Transpositions of an involution inverting every cycle, fixing one point
    of each (a point of ``keep`` where the cycle has one, else its minimum)."""
    out = []
    for c in cycles:
        r = len(c)
        p = next((i for i, x in enumerate(c) if x in keep), 0)
        for t in range(1, r // 2 + 1):
            u, v = c[(p + t) % r], c[(p - t) % r]
            if u != v:
                out.append((u, v))
    return out


def extend_reverser(grid: Sequence[Sequence[int]], omega: Permutation) -> Permutation:
    """Extend a reverser of the first column to a reverser of the row product.

    ``grid[i]`` lists the cycle ``(x_i1 .. x_ir)`` and the first column is the
    cycle ``(x_11, x_21, .., x_k1)``.  ``omega`` must be an involution
    inverting that column and moving only its points.  Returns ``nu``,
    supported off the first column, with the rows inverted by ``omega nu``.
    """
    grid = [tuple(row) for row in grid]
    col = [row[0] for row in grid]
    rowof = {x: i for i, x in enumerate(col)}
    n = max(max(row) for row in grid)
    n = max(n, omega.degree)
    if not omega.is_involution():
        raise PreconditionViolated("omega is not an involution")
    if any(x not in rowof for x in moved_points(omega)):
        raise PreconditionViolated("omega moves points outside the first column")
    if len(col) > 1:
        colp = Permutation.from_cycles([col], n)
        if conjugate(colp, omega) != inverse(colp):
            raise PreconditionViolated("omega does not invert the first column")
    img = list(range(n + 1))
    for s, row in enumerate(grid):
        t = rowof[omega(row[0])]
        dst = grid[t]
        r = len(row)
        if len(dst) != r:
            raise PreconditionViolated("rows of unequal length")
        for j in range(1, r):
            img[row[j]] = dst[r - j]
    return Permutation._raw(tuple(img))


def inverts(p: Permutation, gamma: Permutation) -> bool:
    """Whether p^gamma = p^-1, i.e. (x^p)^gamma = (x^gamma)^(p^-1) for every x."""
    n = max(p.degree, gamma.degree)
    a, g = p.extended(n)._img, gamma.extended(n)._img
    return [a[g[a[x]]] for x in range(n + 1)] == list(g)


def verify_witness(alpha: Permutation, beta: Permutation, gamma: Permutation) -> bool:
    return inverts(alpha, gamma) and inverts(beta, gamma)


def inverts_factorwise(alpha: Permutation, gamma: Permutation, cycles: Sequence[Cycle] | None = None) -> bool:
    """Whether gamma maps every listed cycle of alpha onto its own inverse."""
    n = max(alpha.degree, gamma.degree)
    a, g = alpha.extended(n)._img, gamma.extended(n)._img
    if cycles is None:
        # (x^a)^g = (x^g)^(a^-1) on every point, and g preserves each cycle
        if any(a[g[a[x]]] != g[x] for x in range(1, n + 1)):
            return False
        cycles = cycle_decompose(alpha).cycles
        return all(g[c[0]] in set(c) for c in cycles) if len(cycles) > 1 else True
    for c in cycles:
        r = len(c)
        for i in range(r):
            if a[g[c[(i + 1) % r]]] != g[c[i]]:
                return False
    return True


def shrink_support(alpha: Permutation, beta: Permutation, mu: Permutation) -> Permutation:
    """Drop the cycle factors of ``mu`` that leave ``M(alpha) | M(beta)``."""
    if not verify_witness(alpha, beta, mu):
        raise PreconditionViolated("mu does not invert both alpha and beta")
    return _shrink(alpha, beta, mu)


def _shrink(alpha: Permutation, beta: Permutation, mu: Permutation) -> Permutation:
    n = max(alpha.degree, beta.degree, mu.degree)
    a, b, g = alpha.extended(n)._img, beta.extended(n)._img, mu.extended(n)._img
    outside = [x for x in range(1, n + 1) if g[x] != x and a[x] == x and b[x] == x]
    if not outside:
        return mu
    img = list(g)
    for x in outside:
        # drop the whole cycle of mu through x
        y = x
        while img[y] != y:
            z = img[y]
            img[y] = y
            y = z
    return Permutation._raw(tuple(img))


# -------------------------------------------------------------- commuting case


def _grid(head: Cycle, beta: Permutation, k: int) -> list[list[int]]:
    """Rows ``head, head^beta, .., head^(beta^(k-1))`` aligned column by column."""
    rows = [list(head)]
    for _ in range(k - 1):
        rows.append([beta(x) for x in rows[-1]])
    return rows


def _collapse(rows: list[list[int]], n: int) -> tuple[Permutation, list[list[int]]]:
    """The product of k-cycles sending row 1 to row k and row i to row i-1.

    Also returns its cycles as a grid whose first column is row 1.
    """
    k = len(rows)
    img = list(range(n + 1))
    mu_rows = []
    for j in range(len(rows[0])):
        col = [rows[i][j] for i in range(k)]
        img[col[0]] = col[-1]
        for i in range(1, k):
            img[col[i]] = col[i - 1]
        mu_rows.append([col[0]] + col[:0:-1])
    return Permutation._raw(tuple(img)), mu_rows


def commuting_witness(alpha: Permutation, beta: Permutation) -> WitnessCertificate:
    n = max(alpha.degree, beta.degree)
    alpha, beta = alpha.extended(n), beta.extended(n)
    if compose(alpha, beta) != compose(beta, alpha):
        raise NotCommuting("alpha and beta do not commute")
    if alpha.is_involution() and beta.is_involution():
        gamma = Permutation.identity(n)
        return WitnessCertificate(gamma, Method.COMMUTING, verify_witness(alpha, beta, gamma), True)
    fa = factor_action(alpha, beta)
    parts: list[Permutation] = []
    for orb in fa.orbits():
        head = fa.cycles[orb[0]]
        omega = reverser_fixing(head, head[0], n)
        if len(orb) == 1:
            # beta restricted to the factor is a power of it
            parts.append(omega)
            continue
        rows = _grid(head, beta, len(orb))
        mu, mu_rows = _collapse(rows, n)
        nu = extend_reverser(mu_rows, omega)
        parts.append(compose_all([omega, nu, mu], n))
    on_alpha = moved_points(alpha)
    rest = [c for c in beta.cycles() if c[0] not in on_alpha]
    parts.append(_from_pairs(_reverse_all(rest, n), n))
    gamma = _shrink(alpha, beta, compose_all(parts, n))
    return WitnessCertificate(gamma, Method.COMMUTING, verify_witness(alpha, beta, gamma), True, trace=("commuting",))


# ----------------------------------------------------------------- chains


@dataclass(frozen=True)
class ChainReductionStep:
    mu: Permutation
    removed: tuple[Cycle, ...]
    reduced_alpha: Permutation
    reduced_beta: Permutation
    chain: TransitiveChain
    mu_rows: tuple[tuple[int, ...], ...] = field(repr=False, default=())


def chain_reduce(alpha: Permutation, beta: Permutation, chain: TransitiveChain) -> ChainReductionStep:
    n = max(alpha.degree, beta.degree)
    alpha, beta = alpha.extended(n), beta.extended(n)
    fa = factor_action(alpha, beta)
    index = {c: i for i, c in enumerate(fa.cycles)}
    try:
        ids = [index[c] for c in chain.factors]
    except KeyError:
        raise InvalidChain("chain lists a cycle that is not a factor of alpha") from None
    if len(ids) < 2:
        raise InvalidChain("a chain has at least two factors")
    for i, j in zip(ids, ids[1:]):
        if fa.succ[i] != j:
            raise InvalidChain(f"{fa.cycles[i]}^beta is not {fa.cycles[j]}")
    if fa.succ[ids[-1]] is not None:
        raise InvalidChain("the last factor is carried back into {alpha}")
    if ids[0] in fa.succ:
        raise InvalidChain("the first factor has a predecessor in {alpha}")
    rows = _grid(chain.head, beta, len(ids))
    mu, mu_rows = _collapse(rows, n)
    tail = {x for c in chain.factors[1:] for x in c}
    reduced_alpha = Permutation._raw(tuple(x if x in tail else y for x, y in enumerate(alpha._img)))
    return ChainReductionStep(
        mu, chain.factors[1:], reduced_alpha, compose(mu, beta), chain, tuple(map(tuple, mu_rows))
    )


# -------------------------------------------------------------- case templates


def canonical_beta(tag: CaseTag, degree: int = 0) -> Permutation:
    """The canonical beta of the template construction for ``tag``."""
    tpl = TEMPLATES.get(tag.case)
    if tpl is None or tag.binding is None:
        raise TemplateMismatch(f"{tag.case} has no canonical beta")
    b = tag.binding
    n = max([degree, *b.x, *b.y, *b.z, b.extra or 0])
    return _from_map(tpl.beta(b), n)


def template_swap(tag: CaseTag, degree: int = 0) -> Permutation | None:
    tpl = TEMPLATES.get(tag.case)
    if tpl is None or tpl.swap is None:
        return None
    pairs = tpl.swap(tag.binding)
    if pairs is None:
        return None
    return _from_pairs(pairs, max(degree, max(max(p) for p in pairs)))


def t32i_witness(alpha: Permutation, beta: Permutation) -> Permutation:
    """Involution inverting beta and preserving the transposition alpha = (x y)."""
    n = max(alpha.degree, beta.degree)
    cs = cycle_decompose(alpha).cycles
    if len(cs) != 1 or len(cs[0]) != 2:
        raise TemplateMismatch("alpha is not a transposition")
    x, y = cs[0]
    bcycles = list(beta.extended(n).cycles())
    cx = next((c for c in bcycles if x in c), None)
    cy = next((c for c in bcycles if y in c), None)
    parts = []
    if cx is not None and cx is cy:
        parts.append(reverser_mapping(cx, x, y, n))
    elif cx is not None and cy is not None and len(cx) == len(cy):
        parts.append(cycle_swapper(cx, cy, x, y, n))
    else:
        if cx is not None:
            parts.append(reverser_fixing(cx, x, n))
        if cy is not None:
            parts.append(reverser_fixing(cy, y, n))
    rest = [c for c in bcycles if c is not cx and c is not cy]
    parts.append(_from_pairs(_reverse_all(rest, n), n))
    return compose_all(parts, n)


def verify_by_support_check(alpha: Permutation, beta: Permutation, omega: Permutation) -> bool:
    """Decide ``beta^omega = beta^-1`` from the points of M(alpha) alone.

    Valid when beta moves nothing outside ``M(alpha) | M(alpha^beta)``, at
    most one point of ``M(alpha^beta)`` lies off ``M(alpha)``, and ``omega`` is
    an involution inverting alpha inside M(alpha).
    """
    n = max(alpha.degree, beta.degree, omega.degree)
    alpha, beta, omega = alpha.extended(n), beta.extended(n), omega.extended(n)
    ma = moved_points(alpha)
    bi = beta._img
    mab = frozenset([bi[x] for x in ma])  # M(alpha^beta) = M(alpha)^beta
    if not moved_points(beta) <= ma | mab:
        raise PreconditionViolated("beta moves points outside M(alpha) | M(alpha^beta)")
    if len(mab - ma) > 1:
        raise PreconditionViolated("more than one point of M(alpha^beta) lies outside M(alpha)")
    if not omega.is_involution() or not moved_points(omega) <= ma or not inverts(alpha, omega):
        raise PreconditionViolated("omega must be an involution inverting alpha inside M(alpha)")
    w, b = omega._img, beta._img
    return all(b[w[b[w[x]]]] == x for x in ma)


def case_witness(alpha: Permutation, beta: Permutation, tag: CaseTag) -> Permutation:
    """The template involution omega for the canonical beta of ``tag``.

    omega inverts every cycle factor of alpha and beta, and moves only points
    of M(alpha) (plus the template's extra point in the T32i case).
    """
    n = max(alpha.degree, beta.degree)
    alpha, beta = alpha.extended(n), beta.extended(n)
    if tag.case is Case.T32I:
        omega = t32i_witness(alpha, beta)
        if not (inverts_factorwise(alpha, omega) and inverts(beta, omega)):
            raise TemplateMismatch("T32i reverser failed")
        return omega
    tpl = TEMPLATES.get(tag.case)
    if tpl is None or tag.binding is None:
        raise TemplateMismatch(f"{tag.case} is not a template case")
    b = tag.binding
    delta = conjugate(alpha, beta)
    expected = Permutation.from_cycles(tpl.delta(b), n)
    if delta != expected:
        raise TemplateMismatch(f"alpha^beta = {delta} does not have the {tag.case} shape {expected}")
    omega = _from_pairs(tpl.omega(b), n)
    if not inverts_factorwise(alpha, omega):
        raise TemplateMismatch("template involution does not invert the factors of alpha")
    try:
        ok = verify_by_support_check(alpha, beta, omega)
    except PreconditionViolated:
        ok = inverts(beta, omega)
    if not ok:
        raise TemplateMismatch(f"template involution does not invert beta = {beta}")
    return omega


def _find_swap(alpha: Permutation, beta0: Permutation, omega: Permutation, c1: Cycle, c2: Cycle) -> Permutation | None:
    """Search the centralizer of alpha for an involution exchanging c1, c2 that
    commutes with beta0 and omega."""
    n = max(alpha.degree, beta0.degree, omega.degree)
    others = [c for c in cycle_decompose(alpha).cycles if c != c1 and c != c2]
    r = len(c1)
    halves = [[0] + ([len(c) // 2] if len(c) % 2 == 0 else []) for c in others]
    from itertools import product

    for p in range(r):
        pairs = [(c1[i], c2[(i + p) % r]) for i in range(r)]
        for shifts in product(*halves):
            img = list(range(n + 1))
            for a, b in pairs:
                img[a], img[b] = b, a
            for c, sh in zip(others, shifts):
                L = len(c)
                for i in range(L):
                    img[c[i]] = c[(i + sh) % L]
            mu = Permutation._raw(tuple(img))
            if compose(mu, beta0) == compose(beta0, mu) and compose(mu, omega) == compose(omega, mu):
                return mu
    return None


def transfer_witness(
    alpha: Permutation,
    beta_canonical: Permutation,
    omega: Permutation,
    beta_actual: Permutation,
    swap: Permutation | None = None,
) -> Permutation:
    """Move a simultaneous inverter from the canonical beta to any beta' with
    the same conjugate of alpha.

    beta' = c beta for some c in the centralizer of alpha; c splits as a part on
    M(alpha) and a part b on Fix(alpha).  The result is ``c omega theta`` (or
    ``c omega mu theta`` when c exchanges two equal-length factors), where
    theta inverts b while fixing the point of M(beta) outside M(alpha).
    """
    n = max(alpha.degree, beta_canonical.degree, omega.degree, beta_actual.degree)
    alpha, b0, omega, b1 = (p.extended(n) for p in (alpha, beta_canonical, omega, beta_actual))
    c = compose(b1, inverse(b0))
    # alpha^beta' = alpha^beta exactly when c = beta' beta^-1 commutes with alpha
    a, ci = alpha._img, c._img
    if [ci[y] for y in a] != [a[y] for y in ci]:
        raise NotSameConjugate("alpha^beta' differs from alpha^beta")
    ma = moved_points(alpha)
    extra = moved_points(b0) - ma
    if len(extra) > 1:
        raise PreconditionViolated("canonical beta moves more than one point outside M(alpha)")
    cycles = cycle_decompose(alpha).cycles
    where = {}
    for i, cyc in enumerate(cycles):
        where.update(dict.fromkeys(cyc, i))
    moved_to = [where[c(cyc[0])] for cyc in cycles]
    swapped = [i for i, j in enumerate(moved_to) if i != j]
    mu = None
    if swapped:
        if len(swapped) != 2 or moved_to[swapped[0]] != swapped[1]:
            raise NoEqualLengthSwap("the centralizer part of beta' permutes more than two factors")
        c1, c2 = cycles[swapped[0]], cycles[swapped[1]]
        mu = swap if swap is not None else _find_swap(alpha, b0, omega, c1, c2)
        if mu is None:
            raise NoEqualLengthSwap(f"no involution exchanging {c1} and {c2} commutes with beta and omega")
        mu = mu.extended(n)
    b_part = [cyc for cyc in c.cycles() if cyc[0] not in ma]
    theta = _from_pairs(_reverse_all(b_part, n, keep=frozenset(extra)), n)
    chain = [c, omega] + ([mu] if mu is not None else []) + [theta]
    return compose_all(chain, n)


# ------------------------------------------------------------------- solver


def _construct(
    alpha: Permutation, beta: Permutation, trace: list[str], m: int | None = None
) -> tuple[Permutation, CaseTag | None]:
    n = max(alpha.degree, beta.degree)
    alpha, beta = alpha.extended(n), beta.extended(n)
    if m is None:
        m = num_moved(commutator(alpha, beta))
    if m == 0:
        trace.append("commuting")
        return commuting_witness(alpha, beta).gamma, None
    if m > 4:
        raise OutOfScope(m)
    if m < 3:
        raise ConstructionError(f"commutator moving {m} points is impossible")
    fa = factor_action(alpha, beta)
    orbits = fa.orbits()
    if orbits:
        trace.append(f"orbits:{len(orbits)}")
        pts = frozenset(x for orb in orbits for i in orb for x in fa.cycles[i])
        a_o, b_o = restrict(alpha, pts), restrict(beta, pts)
        others = [x for x in range(1, n + 1) if x not in pts]
        a_r, b_r = restrict(alpha, others), restrict(beta, others)
        g_o = commuting_witness(a_o, b_o).gamma
        g_r, tag = _construct(a_r, b_r, trace)
        g_r = _shrink(a_r, b_r, g_r)
        if moved_points(g_o) & moved_points(g_r):
            raise ConstructionError("orbit block and remainder witnesses overlap")
        return compose(g_o, g_r), tag
    chains = fa.chains()
    if chains:
        if len(chains) > 3:
            raise ConstructionError(f"{len(chains)} transitive chains with |M([a,b])| = {m}")
        chains.sort(key=lambda ch: min(fa.cycles[ch[0]]))
        chain = TransitiveChain(tuple(fa.cycles[i] for i in chains[0]))
        trace.append(f"chain:{chain.length}")
        step = chain_reduce(alpha, beta, chain)
        omega, tag = _construct(step.reduced_alpha, step.reduced_beta, trace)
        omega = _shrink(step.reduced_alpha, step.reduced_beta, omega)
        head = chain.head
        if not inverts_factorwise(alpha, omega, [head]):
            raise ConstructionError("reduced witness does not invert the chain head")
        nu = extend_reverser(step.mu_rows, restrict(omega, head))
        return compose_all([omega, nu, step.mu], n), tag
    tag = classify_case(alpha, beta, m)
    trace.append(str(tag.case))
    if tag.case is Case.T32I:
        return t32i_witness(alpha, beta), tag
    beta0 = canonical_beta(tag, n)
    omega = case_witness(alpha, beta0, tag)
    gamma = transfer_witness(alpha, beta0, omega, beta, template_swap(tag, n))
    return gamma, tag


def simultaneous_inverter(alpha: Permutation, beta: Permutation, allow_fallback: bool = True) -> WitnessCertificate:
    """Find gamma with ``alpha^gamma = alpha^-1`` and ``beta^gamma = beta^-1``.

    Raises OutOfScope when the commutator moves more than four points and
    fallback is off, NotFound when the fallback search proves no witness
    exists, and ConstructionError when the constructive path fails with
    fallback off.
    """
    n = max(alpha.degree, beta.degree)
    alpha, beta = alpha.extended(n), beta.extended(n)
    m = num_moved(commutator(alpha, beta))
    trace: list[str] = []
    try:
        if m == 0:
            cert = commuting_witness(alpha, beta)
            if not cert.verified:
                raise ConstructionError("commuting construction failed to verify")
            return cert
        if m > 4:
            raise OutOfScope(m)
        if alpha.is_involution() and beta.is_involution():
            gamma = Permutation.identity(n)
            return WitnessCertificate(gamma, Method.IDENTITY, True, True)
        gamma, tag = _construct(alpha, beta, trace, m)
        gamma = _shrink(alpha, beta, gamma)
        if not verify_witness(alpha, beta, gamma):
            raise ConstructionError(f"constructed gamma {gamma} does not invert both (path {trace})")
        if any(t.startswith("chain") for t in trace):
            method = Method.CHAIN_REDUCTION
        elif tag is not None:
            method = Method.CASE_TEMPLATE
        else:
            method = Method.COMMUTING
        return WitnessCertificate(gamma, method, True, True, tag, tuple(trace))
    except OutOfScope:
        if not allow_fallback:
            raise
    except (ConstructionError, StructureError) as exc:
        if not allow_fallback:
            raise
        log.warning("constructive path failed for alpha=%s beta=%s: %s", alpha, beta, exc)
        trace.append(f"failed:{type(exc).__name__}")
    gamma = oracle.backtrack_inverter(alpha, beta)
    if gamma is None:
        raise NotFound(m)
    gamma = _shrink(alpha, beta, gamma)
    return WitnessCertificate(gamma, Method.ORACLE_FALLBACK, verify_witness(alpha, beta, gamma), True, None, tuple(trace))
