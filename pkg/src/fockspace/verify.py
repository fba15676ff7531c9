"""Property verifiers behind ``fockspace verify``.

Each function returns a report dictionary with at least the keys
``target`` and ``passed``; failures carry witnesses under ``failures``.
The randomised checks take an explicit seed so that reports are
reproducible.
"""

from __future__ import annotations

import random
from typing import Callable, Dict, List, Tuple

from . import compare, fock_a1, fock_a2, rouquier
from .combinatorics import (
    Partition,
    adds_horizontal_strip,
    adds_horizontal_strip_beta,
    dominates,
    partitions_of,
)
from .compare import NiceContext
from .fock import FockVector
from .qpoly import LaurentPoly, subst_t
from .symfunc import (
    b_factor,
    dual_pieri_expand,
    hl_pieri_expand,
    hs,
    hsb,
    kostka_by_charge,
    kostka_matrix,
    skew_row,
)

MAX_FAILURES = 20


def _report(target: str, checked: int, failures: List[dict], **extra) -> dict:
    out = {"target": target, "passed": not failures, "checked": checked,
           "failures": failures[:MAX_FAILURES]}
    out.update(extra)
    return out


def _strips_above(pi: Partition, r: int) -> List[Partition]:
    return [rho for rho in partitions_of(sum(pi) + r) if adds_horizontal_strip(pi, rho) == r]


# ---------------------------------------------------------------------------
# symmetric functions
# ---------------------------------------------------------------------------

def verify_kostka(max_degree: int = 8) -> dict:
    """Unitriangularity, divisibility by ``t`` and agreement with the charge formula."""
    failures = []
    checked = 0
    for d in range(max_degree + 1):
        km = kostka_matrix(d)
        for la in km.labels:
            for mu in km.labels:
                checked += 1
                k, ki = km.K(la, mu), km.Kinv(la, mu)
                if la == mu:
                    if k != 1 or ki != 1:
                        failures.append({"la": la, "mu": mu, "why": "diagonal not 1"})
                    continue
                for name, x in (("K", k), ("Kinv", ki)):
                    if x and not dominates(la, mu):
                        failures.append({"la": la, "mu": mu, "why": "%s not triangular" % name})
                    if x and x.coeff(0):
                        failures.append({"la": la, "mu": mu, "why": "%s not divisible by t" % name})
                if d <= 7 and k != kostka_by_charge(la, mu):
                    failures.append({"la": la, "mu": mu, "why": "K disagrees with charge"})
    return _report("kostka", checked, failures)


def verify_pieri(max_size: int = 8, max_r: int = 4) -> dict:
    """``P_la Q_(r) = sum hs_{la mu} P_mu`` with the product computed in the Schur basis."""
    failures = []
    checked = 0
    for r in range(max_r + 1):
        for d in range(max_size - r + 1):
            for la in partitions_of(d):
                got = hl_pieri_expand(la, r)
                for mu in partitions_of(d + r):
                    checked += 1
                    want = hs(la, mu) if adds_horizontal_strip(la, mu) == r else None
                    have = got.get(mu)
                    if (want or None) != (have or None):
                        failures.append({"la": la, "mu": mu, "r": r,
                                         "got": str(have), "expected": str(want)})
    return _report("pieri", checked, failures, max_size=max_size, max_r=max_r)


def verify_dualpieri(max_size: int = 8, max_r: int = 4) -> dict:
    """The dual operator on ``P_mu`` has coefficient ``hsb_{la mu}`` at ``P_la``."""
    failures = []
    checked = 0
    for r in range(1, max_r + 1):
        for d in range(r, max_size + 1):
            for mu in partitions_of(d):
                got = dual_pieri_expand(mu, r)
                strips = set(skew_row(mu, r))
                for la in partitions_of(d - r):
                    checked += 1
                    want = hsb(la, mu) if la in strips else None
                    have = got.get(la)
                    if (want or None) != (have or None):
                        failures.append({"la": la, "mu": mu, "r": r,
                                         "got": str(have), "expected": str(want)})
    return _report("dualpieri", checked, failures, max_size=max_size, max_r=max_r)


def verify_bstrip(max_size: int = 10) -> dict:
    """``hsb_{la mu} b_mu = b_la hs_{la mu}`` whenever ``mu / la`` is a horizontal strip."""
    failures = []
    checked = 0
    for d in range(max_size + 1):
        for mu in partitions_of(d):
            for r in range(1, d + 1):
                for la in skew_row(mu, r):
                    checked += 1
                    if hsb(la, mu) * b_factor(mu) != b_factor(la) * hs(la, mu):
                        failures.append({"la": la, "mu": mu})
    return _report("bstrip", checked, failures, max_size=max_size)


# ---------------------------------------------------------------------------
# horizontal strips
# ---------------------------------------------------------------------------

def verify_carbeta(max_size: int = 12, max_r: int = 4) -> dict:
    """The diagram test for horizontal strips agrees with the beta-set test."""
    failures = []
    checked = 0
    for d in range(max_size + 1):
        for la in partitions_of(d):
            for r in range(max_r + 1):
                if d + r > max_size:
                    continue
                for mu in partitions_of(d + r):
                    checked += 1
                    if adds_horizontal_strip(la, mu) != adds_horizontal_strip_beta(la, mu):
                        failures.append({"la": la, "mu": mu})
    return _report("carbeta", checked, failures, max_size=max_size, max_r=max_r)


def verify_carlem(max_size: int = 8) -> dict:
    """If ``sigma`` dominates ``pi`` minus its last part and ``rho`` adds a strip
    of that size to ``sigma``, then ``rho`` dominates ``pi``, with equality only
    when ``sigma`` is ``pi`` minus its last part."""
    failures = []
    checked = 0
    for d in range(1, max_size + 1):
        for pi in partitions_of(d):
            k = pi[-1]
            base = pi[:-1]
            for sigma in partitions_of(d - k):
                if not dominates(sigma, base):
                    continue
                for rho in _strips_above(sigma, k):
                    checked += 1
                    if not dominates(rho, pi) or (rho == pi and sigma != base):
                        failures.append({"pi": pi, "sigma": sigma, "rho": rho})
    return _report("carlem", checked, failures, max_size=max_size)


# ---------------------------------------------------------------------------
# random separated joins
# ---------------------------------------------------------------------------

def random_standard(ctx_h: int, rows: int, rng: random.Random, moves: int = 3) -> Tuple[Partition, NiceContext]:
    """A standard h-strict partition: runners ``1..n`` packed ``rows`` deep, then a
    few beads near the bottom pushed further down their runners."""
    n = (ctx_h - 1) // 2
    parts = {i + ctx_h * j for i in range(1, n + 1) for j in range(rows)}
    for _ in range(rng.randint(0, moves)):
        b = max(parts) if rng.random() < 0.5 else rng.choice(sorted(parts)[-n:])
        steps = rng.randint(1, 2)
        c = b + steps * ctx_h
        if c not in parts:
            parts.remove(b)
            parts.add(c)
    al = tuple(sorted(parts, reverse=True))
    return al, NiceContext(ctx_h, len(al))


def random_partition(max_size: int, rng: random.Random) -> Partition:
    d = rng.randint(0, max_size)
    return rng.choice(partitions_of(d))


def _separated_instance(rng: random.Random, need: Callable[[Partition, Partition, int, NiceContext], bool],
                        hs_choices=(3, 5, 7), max_pi: int = 3, max_k: int = 2):
    while True:
        h = rng.choice(hs_choices)
        rows = rng.randint(2, 4 if h == 3 else 3)
        al, ctx = random_standard(h, rows, rng)
        pi = random_partition(max_pi, rng)
        k = rng.randint(1, max_k)
        if need(al, pi, k, ctx):
            return al, pi, k, ctx


def verify_addrun(trials: int = 200, seed: int = 0) -> dict:
    """Both runner-addition statements on random separated joins.

    Type A1: every term of ``F_k(la | pi)`` is ``mu | rho`` with ``rho`` a strip
    of size ``r <= k`` over ``pi`` and coefficient ``<F_{k-r} la, mu>``, every such
    pair occurs, and each term keeps the leftover separation.  Type A2 is the same
    with the extra factor ``hsb_{pi rho}(-q^2)``.
    """
    rng = random.Random(seed)
    failures: List[dict] = []
    for trial in range(trials):
        al, pi, k, ctx = _separated_instance(
            rng, lambda al, pi, k, ctx: compare.is_k_bar_separated(al, pi, k, ctx))
        failures.extend(_addrun1_case(compare.psi(al, ctx), pi, k, ctx, trial))
        failures.extend(_addrun2_case(al, pi, k, ctx, trial))
        if len(failures) >= MAX_FAILURES:
            break
    return _report("addrun", trials, failures, seed=seed)


def _addrun1_case(la: Partition, pi: Partition, k: int, ctx: NiceContext, trial: int) -> List[dict]:
    m = ctx.m
    if not compare.is_k_separated(la, pi, k, ctx):
        return [{"trial": trial, "why": "psi image not separated", "la": la, "pi": pi, "k": k}]
    u = (compare.separation_gap_a1(la, pi, ctx) - 1) // m - k
    got = compare.apply_F_k(FockVector.basis(compare.join_a1(la, pi, ctx)), k, ctx)
    expected: Dict[Partition, LaurentPoly] = {}
    for r in range(k + 1):
        smaller = compare.apply_F_k(FockVector.basis(la), k - r, ctx)
        for mu, c in smaller.items():
            if not compare.in_p_plus(mu, ctx):
                continue
            for rho in _strips_above(pi, r):
                expected[compare.join_a1(mu, rho, ctx)] = c
    out = []
    if got != FockVector(expected):
        out.append({"trial": trial, "type": "a1", "la": la, "pi": pi, "k": k,
                    "diff": compare._first_diff(got, FockVector(expected))})
    for nu in got.support():
        split = compare.split_a1(nu, ctx)
        if split is None:
            out.append({"trial": trial, "type": "a1", "why": "term is not a join", "term": nu})
            continue
        mu, rho = split
        if not compare.is_k_separated(mu, rho, u, ctx):
            out.append({"trial": trial, "type": "a1", "why": "separation lost", "term": nu})
    return out


def _addrun2_case(al: Partition, pi: Partition, k: int, ctx: NiceContext, trial: int) -> List[dict]:
    h = ctx.h
    u = (compare.separation_gap_a2(al, pi, ctx) - 1) // h - k
    got = compare.apply_Fcheck_k(FockVector.basis(compare.join_a2(al, pi, ctx)), k, ctx)
    expected: Dict[Partition, LaurentPoly] = {}
    for r in range(k + 1):
        smaller = compare.apply_Fcheck_k(FockVector.basis(al), k - r, ctx)
        for be, c in smaller.items():
            if not compare.is_standard(be, ctx):
                continue
            for rho in _strips_above(pi, r):
                expected[compare.join_a2(be, rho, ctx)] = c * subst_t(hsb(pi, rho))
    out = []
    if got != FockVector(expected):
        out.append({"trial": trial, "type": "a2", "al": al, "pi": pi, "k": k,
                    "diff": compare._first_diff(got, FockVector(expected))})
    for ga in got.support():
        be, rho = compare.split_a2(ga, ctx)
        if not compare.is_k_bar_separated(be, rho, u, ctx):
            out.append({"trial": trial, "type": "a2", "why": "separation lost", "term": ga})
    return out


def verify_samecoeff(trials: int = 200, seed: int = 0) -> dict:
    """``<Fcheck_k al, be> = <F_k psi al, psi be>`` for standard ``al``, ``be``."""
    rng = random.Random(seed)
    failures: List[dict] = []
    for trial in range(trials):
        h = rng.choice((3, 5, 7))
        al, ctx = random_standard(h, rng.randint(1, 3), rng, moves=4)
        k = rng.randint(1, 2)
        a2 = compare.apply_Fcheck_k(FockVector.basis(al), k, ctx)
        a1 = compare.apply_F_k(FockVector.basis(compare.psi(al, ctx)), k, ctx)
        left = {compare.psi(be, ctx): c for be, c in a2.items() if compare.is_standard(be, ctx)}
        right = {mu: c for mu, c in a1.items() if compare.in_p_plus(mu, ctx)}
        if FockVector(left) != FockVector(right):
            failures.append({"trial": trial, "al": al, "h": h, "k": k,
                             "diff": compare._first_diff(FockVector(left), FockVector(right))})
            if len(failures) >= MAX_FAILURES:
                break
    return _report("samecoeff", trials, failures, seed=seed)


def verify_sasfk(trials: int = 200, seed: int = 0) -> dict:
    """``Theta(Fcheck_k v) = F_k Theta(v)`` for random ``k``-super-bar-separated joins."""
    rng = random.Random(seed)
    failures: List[dict] = []
    for trial in range(trials):
        al, pi, k, ctx = _separated_instance(
            rng, lambda al, pi, k, ctx: compare.is_k_super_bar_separated(al, pi, k, ctx))
        v = FockVector.basis(compare.join_a2(al, pi, ctx))
        left = compare.Theta(compare.apply_Fcheck_k(v, k, ctx), ctx)
        right = compare.apply_F_k(compare.Theta(v, ctx), k, ctx)
        diff = compare._first_diff(left, right)
        if diff:
            failures.append({"trial": trial, "al": al, "pi": pi, "k": k, "h": ctx.h, "diff": diff})
            if len(failures) >= MAX_FAILURES:
                break
    return _report("sasfk", trials, failures, seed=seed)


# ---------------------------------------------------------------------------
# Rouquier formulas
# ---------------------------------------------------------------------------

def verify_rouquier_a1(m: int, w: int) -> dict:
    """The closed formula against the LLT algorithm on the minimal Rouquier core."""
    nu = rouquier.minimal_rouquier_core(w, m)
    cb = fock_a1.llt_canonical_basis(nu, w, m)
    failures = []
    for mu in cb.cols:
        for la in cb.rows:
            got = rouquier.ct_formula(la, mu, nu, m)
            if got != cb.entry(la, mu):
                failures.append({"row": la, "column": mu, "formula": str(got),
                                 "computed": str(cb.entry(la, mu))})
    return _report("rouquier", len(cb.rows) * len(cb.cols), failures,
                   kind="a1", m=m, w=w, core=list(nu))


def verify_rouquier_a2(h: int, w: int) -> dict:
    """The closed formula against the computed A2 canonical basis on the minimal Rouquier bar-core."""
    ga = rouquier.minimal_rouquier_bar_core(w, h)
    cb = fock_a2.canonical_basis_a2(ga, w, h)
    failures = []
    for be in cb.cols:
        for al in cb.rows:
            got = rouquier.mainrouq_formula(al, be, ga, h)
            if got != cb.entry(al, be):
                failures.append({"row": al, "column": be, "formula": str(got),
                                 "computed": str(cb.entry(al, be))})
    return _report("rouquier", len(cb.rows) * len(cb.cols), failures,
                   kind="a2", h=h, w=w, core=list(ga))
