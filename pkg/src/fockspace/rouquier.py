"""Rouquier cores and bar-cores, quotients, and the closed formulas for
canonical basis coefficients in the weight spaces they label."""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Tuple

from .combinatorics import (
    EMPTY,
    Partition,
    beta_set,
    conjugate,
    from_beta_set,
    from_core_quotient,
    h_bar_core_weight,
    is_h_bar_core,
    is_h_strict,
    is_m_core,
    m_core_weight,
    make_partition,
    partitions_of,
    quotient_from_display,
    runner_counts,
)
from .qpoly import LaurentPoly, ONE, eval_q1, subst_t
from .symfunc import inverse_kostka, lr_coefficient

__all__ = [
    "rouquier_bead_count",
    "is_w_rouquier_core",
    "is_w_rouquier_bar_core",
    "minimal_rouquier_core",
    "minimal_rouquier_bar_core",
    "m_quotient",
    "from_m_quotient",
    "h_bar_quotient",
    "from_h_bar_quotient",
    "ct_formula",
    "mainrouq_formula",
    "rock_q1",
]


def _nondecreasing_by(counts: Sequence[int], gap: int) -> bool:
    return all(counts[i] - counts[i - 1] >= gap for i in range(1, len(counts)))


def _rouquier_shift(nu: Partition, m: int, w: int) -> Optional[int]:
    """Smallest bead count ``s >= len(nu)`` whose display satisfies the Rouquier inequalities."""
    for s in range(len(nu), len(nu) + m):
        if _nondecreasing_by(runner_counts(beta_set(nu, s), m), w - 1):
            return s
    return None


def is_w_rouquier_core(nu: Partition, w: int, m: int) -> bool:
    """Some display has at least ``w - 1`` more beads on runner ``i`` than on ``i - 1``."""
    nu = tuple(nu)
    if not is_m_core(nu, m):
        raise ValueError("%r is not a %d-core" % (nu, m))
    return _rouquier_shift(nu, m, w) is not None


def _bar_runner_counts(ga: Partition, h: int) -> List[int]:
    counts = [0] * h
    for p in ga:
        counts[p % h] += 1
    return counts


def is_w_rouquier_bar_core(ga: Partition, w: int, h: int) -> bool:
    """At least ``w`` beads on runner 1 and ``w - 1`` more on each of runners ``2..n``."""
    ga = tuple(ga)
    if not is_h_bar_core(ga, h):
        raise ValueError("%r is not a %d-bar-core" % (ga, h))
    n = (h - 1) // 2
    c = _bar_runner_counts(ga, h)
    return c[1] >= w and _nondecreasing_by(c[1 : n + 1], w - 1)


def minimal_rouquier_core(w: int, m: int) -> Partition:
    """Runner ``i`` holds ``i (w - 1)`` beads, packed at the top."""
    if w < 1:
        raise ValueError("w must be positive")
    beads = [i + m * k for i in range(m) for k in range(i * (w - 1))]
    return from_beta_set(beads)


def minimal_rouquier_bar_core(w: int, h: int) -> Partition:
    """Runner ``i`` (``1 <= i <= n``) holds ``w + (i - 1)(w - 1)`` beads, packed at the top."""
    if w < 1:
        raise ValueError("w must be positive")
    n = (h - 1) // 2
    parts = [i + h * k for i in range(1, n + 1) for k in range(w + (i - 1) * (w - 1))]
    return make_partition(parts)


# ---------------------------------------------------------------------------
# quotients
# ---------------------------------------------------------------------------

def rouquier_bead_count(nu: Partition, m: int, w: int) -> int:
    """Bead count of a display of ``nu`` with the Rouquier inequalities and at
    least ``w`` beads on every runner."""
    s = _rouquier_shift(tuple(nu), m, max(w, 1))
    if s is None:
        s = _rouquier_shift(tuple(nu), m, 1)
    if s is None:
        raise ValueError("%r has no display with non-decreasing runners" % (nu,))
    while min(runner_counts(beta_set(nu, s), m)) < w:
        s += m
    return s


def m_quotient(la: Partition, nu: Partition, m: int) -> Tuple[Partition, ...]:
    """Ordered ``m``-quotient of ``la`` read on the Rouquier display of its core ``nu``."""
    la, nu = tuple(la), tuple(nu)
    core, w = m_core_weight(la, m)
    if core != nu:
        raise ValueError("%r does not have %d-core %r" % (la, m, nu))
    return quotient_from_display(la, m, rouquier_bead_count(nu, m, w))


def from_m_quotient(nu: Partition, quotient: Sequence[Partition], m: int) -> Partition:
    w = sum(sum(q) for q in quotient)
    return from_core_quotient(tuple(nu), [tuple(q) for q in quotient], m, rouquier_bead_count(nu, m, w))


def h_bar_quotient(al: Partition, ga: Partition, h: int) -> Tuple[Partition, ...]:
    """``(al(0), ..., al(n))``: parts divisible by ``h`` scaled down, then runners ``1..n``."""
    al, ga = tuple(al), tuple(ga)
    if not is_h_strict(al, h) or h_bar_core_weight(al, h)[0] != ga:
        raise ValueError("%r does not have %d-bar-core %r" % (al, h, ga))
    n = (h - 1) // 2
    out = [make_partition(p // h for p in al if p % h == 0)]
    for i in range(1, n + 1):
        levels = sorted((p // h for p in al if p % h == i), reverse=True)
        c = len(levels)
        out.append(make_partition(levels[r] - (c - 1 - r) for r in range(c)))
    if any(p % h > n for p in al):
        raise ValueError("%r has parts on runners beyond n" % (al,))
    return tuple(out)


def from_h_bar_quotient(ga: Partition, quotient: Sequence[Partition], h: int) -> Partition:
    ga = tuple(ga)
    n = (h - 1) // 2
    parts = [h * p for p in quotient[0]]
    for i in range(1, n + 1):
        levels = sorted((p // h for p in ga if p % h == i))
        c = len(levels)
        q = quotient[i]
        if len(q) > c:
            raise ValueError("runner %d has too few beads" % i)
        new = list(range(c))
        for r, x in enumerate(q):
            new[c - 1 - r] += x
        parts.extend(i + h * lv for lv in new)
    return make_partition(parts)


# ---------------------------------------------------------------------------
# the formulas
# ---------------------------------------------------------------------------

def _chain_sum(upper: Sequence[Partition], lower: Sequence[Partition],
               start: Dict[Partition, LaurentPoly]) -> LaurentPoly:
    """Sum over sigma(1..k-1), tau(1..k) of the LR products, with sigma(0)
    weighted by ``start`` and sigma(k) empty.

    ``upper[i]`` plays the role of the ``i``th quotient component of the row
    label and ``lower[i]`` that of the column label.
    """
    k = len(upper) - 1
    state = dict(start)
    for i in range(1, k + 1):
        nxt: Dict[Partition, LaurentPoly] = {}
        target = lower[i - 1]
        for sig_prev, wt in state.items():
            t_size = sum(target) - sum(sig_prev)
            if t_size < 0:
                continue
            for tau in partitions_of(t_size):
                c2 = lr_coefficient(target, sig_prev, conjugate(tau))
                if not c2:
                    continue
                s_size = sum(upper[i]) - t_size
                if s_size < 0:
                    continue
                sigmas = [EMPTY] if i == k else partitions_of(s_size)
                for sig in sigmas:
                    c1 = lr_coefficient(upper[i], sig, tau)
                    if not c1:
                        continue
                    nxt[sig] = nxt.get(sig, LaurentPoly()) + wt * (c1 * c2)
        state = {s: v for s, v in nxt.items() if v}
    return state.get(EMPTY, LaurentPoly())


def _shift(upper: Sequence[Partition], lower: Sequence[Partition]) -> int:
    return 2 * sum(i * (sum(upper[i]) - sum(lower[i])) for i in range(len(upper)))


def ct_formula(la: Partition, mu: Partition, nu: Partition, m: int) -> LaurentPoly:
    """Closed form of the coefficient of ``la`` in ``G_m(mu)`` for a Rouquier core ``nu``."""
    la, mu, nu = tuple(la), tuple(mu), tuple(nu)
    w = m_core_weight(mu, m)[1]
    if m_core_weight(la, m) != (nu, w) or m_core_weight(mu, m)[0] != nu:
        raise ValueError("both partitions must lie in the weight space of %r" % (nu,))
    if not is_w_rouquier_core(nu, w, m):
        raise ValueError("%r is not %d-Rouquier" % (nu, w))
    lq = m_quotient(la, nu, m)
    mq = m_quotient(mu, nu, m)
    if mq[m - 1]:
        raise ValueError("%r is not %d-restricted" % (mu, m))
    total = _chain_sum(lq, mq, {lq[0]: ONE})
    return total.shift(_shift(lq, mq))


def mainrouq_formula(al: Partition, be: Partition, ga: Partition, h: int) -> LaurentPoly:
    """Closed form of the coefficient of ``al`` in the A2 canonical basis vector of ``be``."""
    al, be, ga = tuple(al), tuple(be), tuple(ga)
    w = h_bar_core_weight(be, h)[1]
    if h_bar_core_weight(al, h) != (ga, w) or h_bar_core_weight(be, h)[0] != ga:
        raise ValueError("both partitions must lie in the weight space of %r" % (ga,))
    if not is_w_rouquier_bar_core(ga, w, h):
        raise ValueError("%r is not %d-Rouquier" % (ga, w))
    n = (h - 1) // 2
    aq = h_bar_quotient(al, ga, h)
    bq = h_bar_quotient(be, ga, h)
    if bq[n]:
        raise ValueError("%r is not restricted" % (be,))
    start = {}
    for sig in partitions_of(sum(aq[0])):
        k = inverse_kostka(aq[0], sig)
        if k:
            start[sig] = subst_t(k)
    total = _chain_sum(aq, bq, start)
    return total.shift(_shift(aq, bq))


def rock_q1(al: Partition, be: Partition, ga: Partition, h: int) -> Tuple[int, bool]:
    """Value at ``q = 1`` of ``mainrouq_formula``, with a flag saying whether the
    bar-weight is below ``h``.  The interpretation as a decomposition number is
    conjectural."""
    w = h_bar_core_weight(tuple(be), h)[1]
    return eval_q1(mainrouq_formula(al, be, ga, h)), w < h
