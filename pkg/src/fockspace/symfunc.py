"""Symmetric functions in a fixed degree, stored in the Schur basis.

Everything is exact.  Hall-Littlewood P functions are built from the
empty partition by repeated multiplication by Q_(r), and Kostka
polynomials come from inverting the resulting transition matrix.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, List, Tuple

from .combinatorics import (
    EMPTY,
    Partition,
    adds_horizontal_strip,
    conjugate,
    partitions_of,
    skew_nodes,
)
from .qpoly import TPoly

SchurVector = Dict[Partition, TPoly]

T_ONE = TPoly.constant(1)
T_ZERO = TPoly()


def t_power(k: int) -> TPoly:
    return TPoly.monomial(k)


# ---------------------------------------------------------------------------
# Littlewood-Richardson coefficients
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def lr_coefficient(la: Partition, sigma: Partition, tau: Partition) -> int:
    """Number of LR tableaux of shape ``la/sigma`` and content ``tau``."""
    if sum(la) != sum(sigma) + sum(tau):
        return 0
    if len(sigma) > len(la) or any(sigma[i] > la[i] for i in range(len(sigma))):
        return 0
    if not tau:
        return 1
    if not sigma:
        return 1 if la == tau else 0
    # cells in reading order: rows top to bottom, each row right to left
    cells = []
    for r, p in enumerate(la):
        start = sigma[r] if r < len(sigma) else 0
        for c in range(p, start, -1):
            cells.append((r, c))
    filling: Dict[Tuple[int, int], int] = {}
    counts = [0] * (len(tau) + 1)

    def rec(idx: int) -> int:
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        upper = len(tau)
        right = filling.get((r, c + 1))
        if right is not None:
            upper = min(upper, right)
        lower = 1
        above = filling.get((r - 1, c))
        if above is not None:
            lower = above + 1
        total = 0
        for k in range(lower, min(upper, r + 1) + 1):
            if counts[k] >= tau[k - 1]:
                continue
            if k > 1 and counts[k] + 1 > counts[k - 1]:
                continue
            counts[k] += 1
            filling[(r, c)] = k
            total += rec(idx + 1)
            counts[k] -= 1
            del filling[(r, c)]
        return total

    return rec(0)


def lr_expand(sigma: Partition, tau: Partition) -> Dict[Partition, int]:
    """``s_sigma * s_tau`` as a dictionary of LR coefficients."""
    d = sum(sigma) + sum(tau)
    out = {}
    for la in partitions_of(d):
        c = lr_coefficient(la, sigma, tau)
        if c:
            out[la] = c
    return out


# ---------------------------------------------------------------------------
# Schur-basis vectors
# ---------------------------------------------------------------------------

def sv_add(a: SchurVector, b: SchurVector, scale: TPoly = T_ONE) -> SchurVector:
    out = dict(a)
    for k, v in b.items():
        x = out.get(k, T_ZERO) + scale * v
        if x:
            out[k] = x
        else:
            out.pop(k, None)
    return out


def sv_mul(a: SchurVector, b: SchurVector) -> SchurVector:
    out: SchurVector = {}
    for la, x in a.items():
        for mu, y in b.items():
            for nu, c in lr_expand(la, mu).items():
                v = out.get(nu, T_ZERO) + c * x * y
                if v:
                    out[nu] = v
                else:
                    out.pop(nu, None)
    return out


def q_row(r: int) -> SchurVector:
    """Q_(r) in the Schur basis: a sum over hooks."""
    if r == 0:
        return {EMPTY: T_ONE}
    out = {}
    one_minus_t = TPoly({0: 1, 1: -1})
    for k in range(r):
        hook = (r - k,) + (1,) * k
        out[hook] = TPoly({k: (-1) ** k}) * one_minus_t
    return out


# ---------------------------------------------------------------------------
# hs, hsb and b
# ---------------------------------------------------------------------------

def _col(conj: Partition, c: int) -> int:
    return conj[c - 1] if 0 < c <= len(conj) else 0


def _strip_columns(la: Partition, mu: Partition) -> set:
    if adds_horizontal_strip(la, mu) is None:
        raise ValueError("%r is not a horizontal strip over %r" % (mu, la))
    return {c for _, c in skew_nodes(mu, la)}


def hs(la: Partition, mu: Partition) -> TPoly:
    """Pieri coefficient of ``P_mu`` in ``P_la * Q_(r)``."""
    cols = _strip_columns(la, mu)
    mc = conjugate(mu)
    out = T_ONE
    for c in cols:
        if c + 1 not in cols:
            out = out * (T_ONE - t_power(_col(mc, c) - _col(mc, c + 1)))
    return out


def hsb(la: Partition, mu: Partition) -> TPoly:
    """Coefficient of ``P_la`` when the dual Pieri operator acts on ``P_mu``."""
    cols = _strip_columns(la, mu)
    lc = conjugate(la)
    out = T_ONE
    for c in cols:
        if c - 1 >= 1 and c - 1 not in cols:
            out = out * (T_ONE - t_power(_col(lc, c - 1) - _col(lc, c)))
    return out


def phi_poly(n: int) -> TPoly:
    out = T_ONE
    for i in range(1, n + 1):
        out = out * (T_ONE - t_power(i))
    return out


def b_factor(la: Partition) -> TPoly:
    lc = conjugate(la)
    out = T_ONE
    for c in range(1, len(lc) + 1):
        out = out * phi_poly(_col(lc, c) - _col(lc, c + 1))
    return out


# ---------------------------------------------------------------------------
# Hall-Littlewood functions and Kostka polynomials
# ---------------------------------------------------------------------------

def _divide(v: SchurVector, d: TPoly) -> SchurVector:
    return {k: x.divmod_exact(d) for k, x in v.items()}


@lru_cache(maxsize=None)
def _p_in_schur(mu: Partition) -> Tuple[Tuple[Partition, TPoly], ...]:
    """``P_mu`` in the Schur basis, from ``P_la * Q_(mu_1)`` with ``la = mu`` minus its first row."""
    if not mu:
        return ((EMPTY, T_ONE),)
    la = mu[1:]
    r = mu[0]
    prod = sv_mul(hall_littlewood_p(la), q_row(r))
    for nu in partitions_of(sum(mu)):
        if nu == mu:
            continue
        if adds_horizontal_strip(la, nu) == r:
            # nu strictly dominates mu, so P_nu is already known
            prod = sv_add(prod, hall_littlewood_p(nu), -hs(la, nu))
    out = _divide(prod, hs(la, mu))
    return tuple(sorted(out.items()))


def hall_littlewood_p(mu: Partition) -> SchurVector:
    return dict(_p_in_schur(tuple(mu)))


class KostkaMatrix:
    """Kostka polynomials ``K[la, mu]`` and their inverse for one degree.

    ``s_la = sum_mu K[la, mu] P_mu`` and ``P_la = sum_mu Kinv[la, mu] s_mu``.
    """

    def __init__(self, d: int):
        self.degree = d
        self.labels: List[Partition] = partitions_of(d)
        self.kinv: Dict[Tuple[Partition, Partition], TPoly] = {}
        for la in self.labels:
            for mu, v in hall_littlewood_p(la).items():
                self.kinv[(la, mu)] = v
        # invert the unitriangular matrix; Kinv[la, mu] is zero unless la dominates mu,
        # and descending lex order lists dominating partitions first
        self.k: Dict[Tuple[Partition, Partition], TPoly] = {}
        order = self.labels
        for j, mu in enumerate(order):
            self.k[(mu, mu)] = T_ONE
            for i in range(j - 1, -1, -1):
                la = order[i]
                acc = T_ZERO
                for k in range(i + 1, j + 1):
                    x = self.k.get((order[k], mu))
                    if x is None:
                        continue
                    y = self.kinv.get((la, order[k]))
                    if y is not None:
                        acc = acc + y * x
                if acc:
                    self.k[(la, mu)] = -acc

    def K(self, la: Partition, mu: Partition) -> TPoly:
        return self.k.get((la, mu), T_ZERO)

    def Kinv(self, la: Partition, mu: Partition) -> TPoly:
        return self.kinv.get((la, mu), T_ZERO)


@lru_cache(maxsize=None)
def kostka_matrix(d: int) -> KostkaMatrix:
    if d < 0:
        raise ValueError("degree must be non-negative")
    return KostkaMatrix(d)


def kostka(la: Partition, mu: Partition) -> TPoly:
    if sum(la) != sum(mu):
        return T_ZERO
    return kostka_matrix(sum(la)).K(tuple(la), tuple(mu))


def inverse_kostka(la: Partition, mu: Partition) -> TPoly:
    if sum(la) != sum(mu):
        return T_ZERO
    return kostka_matrix(sum(la)).Kinv(tuple(la), tuple(mu))


def schur_to_p(v: SchurVector) -> SchurVector:
    """Re-express a Schur-basis vector in the Hall-Littlewood P basis."""
    out: SchurVector = {}
    for la, x in v.items():
        km = kostka_matrix(sum(la))
        for mu in km.labels:
            k = km.K(la, mu)
            if k:
                out = sv_add(out, {mu: k}, x)
    return out


def hl_pieri_expand(la: Partition, r: int) -> SchurVector:
    """Coefficients of ``P_mu`` in ``P_la * Q_(r)``, via Schur products and base change."""
    return schur_to_p(sv_mul(hall_littlewood_p(la), q_row(r)))


def skew_row(mu: Partition, r: int) -> List[Partition]:
    """All ``la`` such that ``mu`` is ``la`` plus a horizontal strip of size ``r``."""
    if r > sum(mu):
        return []
    return [
        la
        for la in partitions_of(sum(mu) - r)
        if adds_horizontal_strip(la, mu) == r
    ]


def dual_pieri_expand(mu: Partition, r: int) -> SchurVector:
    """Coefficients of ``P_la`` in the dual Pieri operator applied to ``P_mu``."""
    out: SchurVector = {}
    for nu, x in hall_littlewood_p(mu).items():
        for la in skew_row(nu, r):
            out = sv_add(out, {la: x})
    return schur_to_p(out)


# ---------------------------------------------------------------------------
# Kostka polynomials by charge
# ---------------------------------------------------------------------------

def _ssyt(shape: Partition, content: Partition):
    """Semistandard tableaux of ``shape`` and ``content``, filled letter by letter."""
    def grow(inner: Partition, letter: int):
        if letter > len(content):
            if inner == tuple(shape):
                yield []
            return
        for outer in _strips_inside(inner, content[letter - 1], shape):
            for rest in grow(outer, letter + 1):
                yield [(inner, outer)] + rest

    for steps in grow(EMPTY, 1):
        rows = [[] for _ in shape]
        for letter, (inner, outer) in enumerate(steps, start=1):
            for r in range(len(outer)):
                old = inner[r] if r < len(inner) else 0
                rows[r].extend([letter] * (outer[r] - old))
        yield rows


def _strips_inside(inner: Partition, r: int, shape: Partition) -> List[Partition]:
    out = []
    for mu in partitions_of(sum(inner) + r):
        if len(mu) <= len(shape) and all(mu[i] <= shape[i] for i in range(len(mu))):
            if adds_horizontal_strip(inner, mu) == r:
                out.append(mu)
    return out


def charge(word: List[int]) -> int:
    """Lascoux-Schutzenberger charge of a word of partition content."""
    word = list(word)
    total = 0
    while word:
        top = max(word)
        picked = []
        j = len(word)
        index = 0
        for letter in range(1, top + 1):
            # search leftwards from j, wrapping around once
            k = j - 1
            while k >= 0 and word[k] != letter:
                k -= 1
            if k < 0:
                if letter > 1:
                    index += 1
                k = len(word) - 1
                while word[k] != letter:
                    k -= 1
            total += index
            picked.append(k)
            j = k
        keep = sorted(set(range(len(word))) - set(picked))
        word = [word[k] for k in keep]
    return total


def kostka_by_charge(la: Partition, mu: Partition) -> TPoly:
    """``K[la, mu](t)`` as a sum of ``t^charge`` over semistandard tableaux.

    Independent of the Hall-Littlewood construction above, so useful as a
    cross-check.
    """
    la, mu = tuple(la), tuple(mu)
    if sum(la) != sum(mu):
        return T_ZERO
    out: Dict[int, int] = {}
    for rows in _ssyt(la, mu):
        word = [x for row in reversed(rows) for x in row]
        c = charge(word)
        out[c] = out.get(c, 0) + 1
    return TPoly(out)
