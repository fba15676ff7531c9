"""The dictionary between the two Fock spaces.

A ``NiceContext`` fixes an odd ``h`` and a length ``l``; it determines
``n = (h - 1) / 2`` and ``m = (h + 1) / 2``.  Standard h-strict partitions of
length ``l`` (every part has residue in ``1..n`` modulo ``h``) correspond to
partitions of length at most ``l`` through ``phi`` and to the set ``P+`` through
``psi``.  Joins attach a tail partition ``pi``: in type A1 on runner 0 of
the abacus, in type A2 as parts divisible by ``h``.  Join functions always
take the base partition first and the tail second.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from . import fock_a1, fock_a2
from .combinatorics import (
    Partition,
    beta_set,
    dominates,
    from_beta_set,
    is_h_strict,
    make_partition,
    partitions_of,
)
from .fock import FockVector
from .qpoly import LaurentPoly, subst_t
from .symfunc import inverse_kostka, kostka


@dataclass(frozen=True)
class NiceContext:
    h: int
    l: int

    def __post_init__(self):
        if self.h < 3 or self.h % 2 == 0:
            raise ValueError("h must be an odd integer at least 3")
        if self.l < 1:
            raise ValueError("l must be positive")

    @property
    def n(self) -> int:
        return (self.h - 1) // 2

    @property
    def m(self) -> int:
        return (self.h + 1) // 2


# ---------------------------------------------------------------------------
# the bijections phi and psi
# ---------------------------------------------------------------------------

def is_standard(al: Partition, ctx: NiceContext) -> bool:
    """h-strict of length ``l`` with every part congruent to one of ``1..n`` modulo ``h``."""
    return (
        len(al) == ctx.l
        and is_h_strict(al, ctx.h)
        and all(1 <= p % ctx.h <= ctx.n for p in al)
    )


def _need_standard(al: Partition, ctx: NiceContext) -> None:
    if not is_standard(al, ctx):
        raise ValueError("%r is not a standard %d-strict partition of length %d" % (al, ctx.h, ctx.l))


def phi(al: Partition, ctx: NiceContext) -> Partition:
    _need_standard(al, ctx)
    h, n, l = ctx.h, ctx.n, ctx.l
    return make_partition(al[r - 1] - (n + 1) * (al[r - 1] // h) - l + r - 1 for r in range(1, l + 1))


def phi_inv(la: Partition, ctx: NiceContext) -> Partition:
    n, l = ctx.n, ctx.l
    if len(la) > l:
        raise ValueError("%r has more than %d parts" % (la, l))
    out = []
    for r in range(1, l + 1):
        x = la[r - 1] if r <= len(la) else 0
        out.append(x + l - r + 1 + (n + 1) * ((x + l - r) // n))
    return tuple(out)


def plus_map(la: Partition, ctx: NiceContext) -> Partition:
    """Add an empty runner: ``la+_r = la_r + floor((la_r + l - r) / n)``."""
    n, l = ctx.n, ctx.l
    if len(la) > l:
        raise ValueError("%r has more than %d parts" % (la, l))
    return make_partition(
        (la[r - 1] if r <= len(la) else 0) + ((la[r - 1] if r <= len(la) else 0) + l - r) // n
        for r in range(1, l + 1)
    )


def in_p_plus(la: Partition, ctx: NiceContext) -> bool:
    """Length at most ``l`` and no bead of the ``(l+1)``-bead display on runner 0 except position 0."""
    m, l = ctx.m, ctx.l
    if len(la) > l:
        return False
    return all(
        ((la[r - 1] if r <= len(la) else 0) + l + 1 - r) % m != 0 for r in range(1, l + 1)
    )


def psi(al: Partition, ctx: NiceContext) -> Partition:
    _need_standard(al, ctx)
    h, l = ctx.h, ctx.l
    k = ctx.m - 1
    return make_partition(al[r - 1] - k * (al[r - 1] // h) - l + r - 1 for r in range(1, l + 1))


def psi_inv(la: Partition, ctx: NiceContext) -> Partition:
    if not in_p_plus(la, ctx):
        raise ValueError("%r is not in P+ for l=%d, m=%d" % (la, ctx.l, ctx.m))
    m, n, l = ctx.m, ctx.n, ctx.l
    out = []
    for r in range(1, l + 1):
        x = (la[r - 1] if r <= len(la) else 0) + l - r + 1
        out.append(x + n * (x // m))
    return tuple(out)


def _relabel(v: FockVector, f) -> FockVector:
    out: Dict[Partition, LaurentPoly] = {}
    for la, c in v.terms.items():
        mu = f(la)
        out[mu] = out.get(mu, LaurentPoly()) + c
    return FockVector(out)


def Phi(v: FockVector, ctx: NiceContext) -> FockVector:
    """Relabel every term by ``phi``; terms must be standard of length ``l``."""
    return _relabel(v, lambda al: phi(al, ctx))


def Psi(v: FockVector, ctx: NiceContext) -> FockVector:
    return _relabel(v, lambda al: psi(al, ctx))


# ---------------------------------------------------------------------------
# joins
# ---------------------------------------------------------------------------

def _pad(pi: Partition, a: Optional[int]) -> int:
    need = max(len(pi) - 1, 0)
    if a is None:
        return need
    if a < need:
        raise ValueError("padding %d too small for %r" % (a, pi))
    return a


def join_a1(la: Partition, pi: Partition, ctx: NiceContext, a: Optional[int] = None) -> Partition:
    """Move the ``r``th lowest bead on runner 0 down ``pi_r`` places."""
    if not in_p_plus(la, ctx):
        raise ValueError("%r is not in P+ for l=%d, m=%d" % (la, ctx.l, ctx.m))
    m = ctx.m
    a = _pad(pi, a)
    s = a * m + ctx.l + 1
    beads = set(beta_set(la, s))
    for r, p in enumerate(pi, start=1):
        pos = (a + 1 - r) * m
        beads.remove(pos)
        beads.add(pos + p * m)
    return from_beta_set(beads)


def split_a1(nu: Partition, ctx: NiceContext) -> Optional[Tuple[Partition, Partition]]:
    """Inverse of ``join_a1``; None when ``nu`` is not a join."""
    m, l = ctx.m, ctx.l
    a = 0
    while a * m + l + 1 < len(nu):
        a += 1
    s = a * m + l + 1
    beads = beta_set(nu, s)
    runner0 = sorted((b // m for b in beads if b % m == 0), reverse=True)
    if len(runner0) != a + 1:
        return None
    pi = make_partition(runner0[r] - (a - r) for r in range(a + 1))
    rest = [b for b in beads if b % m] + [k * m for k in range(a + 1)]
    try:
        la = from_beta_set(rest)
    except ValueError:
        return None
    if not in_p_plus(la, ctx) or join_a1(la, pi, ctx) != tuple(nu):
        return None
    return la, pi


def join_a2(al: Partition, pi: Partition, ctx: NiceContext) -> Partition:
    """``al`` together with the parts ``h * pi_r``."""
    _need_standard(al, ctx)
    return make_partition(list(al) + [ctx.h * p for p in pi])


def split_a2(ga: Partition, ctx: NiceContext) -> Tuple[Partition, Partition]:
    h = ctx.h
    pi = make_partition(p // h for p in ga if p % h == 0)
    al = make_partition(p for p in ga if p % h)
    _need_standard(al, ctx)
    return al, pi


# ---------------------------------------------------------------------------
# separation
# ---------------------------------------------------------------------------

def separation_gap_a1(la: Partition, pi: Partition, ctx: NiceContext) -> int:
    """``f - b`` for the join, measured on the display used by ``join_a1``."""
    m = ctx.m
    a = _pad(pi, None)
    s = a * m + ctx.l + 1
    beads = set(beta_set(join_a1(la, pi, ctx, a), s))
    b = ((pi[0] if pi else 0) + a) * m
    f = 1
    while f % m == 0 or f in beads:
        f += 1
    return f - b


def is_k_separated(la: Partition, pi: Partition, k: int, ctx: NiceContext) -> bool:
    return separation_gap_a1(la, pi, ctx) > k * ctx.m


def separation_gap_a2(al: Partition, pi: Partition, ctx: NiceContext) -> int:
    _need_standard(al, ctx)
    h, n = ctx.h, ctx.n
    b = (pi[0] if pi else 0) * h
    parts = set(al)
    f = 1
    while not (1 <= f % h <= n) or f in parts:
        f += 1
    return f - b


def is_k_bar_separated(al: Partition, pi: Partition, k: int, ctx: NiceContext) -> bool:
    return separation_gap_a2(al, pi, ctx) > k * ctx.h


def _spread(pi: Partition) -> int:
    return sum(pi) - (pi[0] if pi else 0)


def is_k_super_separated(la: Partition, pi: Partition, u: int, ctx: NiceContext) -> bool:
    """Every tail of the same size is ``u``-separated; the worst case is a single row."""
    return is_k_separated(la, pi, u + _spread(pi), ctx)


def is_k_super_bar_separated(al: Partition, pi: Partition, u: int, ctx: NiceContext) -> bool:
    return is_k_bar_separated(al, pi, u + _spread(pi), ctx)


def super_bar_separation(al: Partition, pi: Partition, ctx: NiceContext) -> int:
    """Largest ``u`` for which the join is ``u``-super-bar-separated, or -1."""
    gap = separation_gap_a2(al, pi, ctx)
    k = (gap - 1) // ctx.h
    return k - _spread(pi) if k >= _spread(pi) else -1


# ---------------------------------------------------------------------------
# the operators F_k
# ---------------------------------------------------------------------------

def F_word(k: int, ctx: NiceContext) -> List[Tuple[int, int]]:
    """Residues of ``F_k`` in application order (the rightmost factor first)."""
    m, l = ctx.m, ctx.l
    return [((g - l) % m, k) for g in range(m - 1, -1, -1)]


def Fcheck_word(k: int, ctx: NiceContext) -> List[Tuple[int, int]]:
    n = ctx.n
    return [(n, k)] + [(i, 2 * k) for i in range(n - 1, -1, -1)]


def apply_F_k(v: FockVector, k: int, ctx: NiceContext) -> FockVector:
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return v
    return fock_a1.apply_word(v, F_word(k, ctx), ctx.m)


def apply_Fcheck_k(v: FockVector, k: int, ctx: NiceContext) -> FockVector:
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return v
    return fock_a2.apply_word(v, Fcheck_word(k, ctx), ctx.h)


# ---------------------------------------------------------------------------
# Theta
# ---------------------------------------------------------------------------

def succeq(rho: Partition, pi: Partition) -> bool:
    """``rho`` is smaller than ``pi`` or dominates it."""
    return sum(rho) < sum(pi) or dominates(rho, pi)


def Theta(v: FockVector, ctx: NiceContext) -> FockVector:
    """``pi || al  ->  sum_rho K_{rho pi}(-q^2) (psi al | rho)``."""
    out = FockVector()
    for ga, c in v.items():
        al, pi = split_a2(ga, ctx)
        if not is_k_super_bar_separated(al, pi, 0, ctx):
            raise ValueError("%r is not super-bar-separated" % (ga,))
        la = psi(al, ctx)
        terms = {}
        for rho in partitions_of(sum(pi)):
            k = kostka(rho, pi)
            if k:
                terms[join_a1(la, rho, ctx)] = subst_t(k)
        out = out.add_scaled(FockVector(terms), c)
    return out


def Theta_inv(v: FockVector, ctx: NiceContext) -> FockVector:
    """``la | rho  ->  sum_pi Kinv_{pi rho}(-q^2) (pi || psi^-1 la)``."""
    out = FockVector()
    for nu, c in v.items():
        split = split_a1(nu, ctx)
        if split is None:
            raise ValueError("%r is not a join for l=%d" % (nu, ctx.l))
        la, rho = split
        if not is_k_super_separated(la, rho, 0, ctx):
            raise ValueError("%r is not super-separated" % (nu,))
        al = psi_inv(la, ctx)
        terms = {}
        for pi in partitions_of(sum(rho)):
            k = inverse_kostka(pi, rho)
            if k:
                terms[join_a2(al, pi, ctx)] = subst_t(k)
        out = out.add_scaled(FockVector(terms), c)
    return out


# ---------------------------------------------------------------------------
# verifiers
# ---------------------------------------------------------------------------

def _first_diff(a: FockVector, b: FockVector) -> Optional[dict]:
    for la in sorted(set(a.terms) | set(b.terms)):
        if a.coeff(la) != b.coeff(la):
            return {"label": list(la), "got": str(a.coeff(la)), "expected": str(b.coeff(la))}
    return None


def verify_sscbv(core: Partition, w: int, ctx: NiceContext) -> dict:
    """Check both parts of the super-separated comparison on one weight space.

    Every label of the weight space must be super-bar-separated.  For each
    restricted column ``pi || al`` the A2 canonical basis vector is pushed
    through ``Theta`` and compared with the A1 canonical basis vector of
    ``psi al | pi``, computed separately by the LLT algorithm.
    """
    h = ctx.h
    core = tuple(core)
    cb = fock_a2.canonical_basis_a2(core, w, h)
    for ga in cb.rows:
        al, pi = split_a2(ga, ctx)
        if not is_k_super_bar_separated(al, pi, 0, ctx):
            raise ValueError("weight space label %r is not super-bar-separated" % (ga,))
    a1 = fock_a1.llt_canonical_basis(psi(core, ctx), w, ctx.m)
    columns = []
    ok = True
    for be in cb.cols:
        al, pi = split_a2(be, ctx)
        u = super_bar_separation(al, pi, ctx)
        vec = cb.column(be)
        problems = []
        for ga in vec.support():
            b2, rho = split_a2(ga, ctx)
            if not succeq(rho, pi):
                problems.append("term %r has tail %r not above %r" % (ga, rho, pi))
            if not is_k_super_bar_separated(b2, rho, u, ctx):
                problems.append("term %r is not %d-super-bar-separated" % (ga, u))
        target = join_a1(psi(al, ctx), pi, ctx)
        image = Theta(vec, ctx)
        expected = a1.column(target)
        diff = _first_diff(image, expected)
        if diff:
            problems.append("Theta mismatch at %s" % diff)
        status = "pass" if not problems else "fail"
        ok = ok and not problems
        columns.append({
            "column": list(be),
            "a1_column": list(target),
            "status": status,
            "problems": problems,
        })
    return {"target": "sscbv", "h": h, "l": ctx.l, "core": list(core), "weight": w,
            "passed": ok, "columns": columns}


def verify_firstmain(core: Partition, w: int, ctx: NiceContext) -> dict:
    """``Psi`` of each A2 canonical basis vector labelled by a standard partition
    equals the A1 canonical basis vector of its image."""
    cb = fock_a2.canonical_basis_a2(tuple(core), w, ctx.h)
    columns = []
    ok = True
    for be in cb.cols:
        if not is_standard(be, ctx):
            continue
        mu = psi(be, ctx)
        got = Psi(cb.column(be), ctx)
        expected = fock_a1.canonical_basis_vector(mu, ctx.m)
        diff = _first_diff(got, expected)
        ok = ok and diff is None
        columns.append({"column": list(be), "image": list(mu),
                        "status": "pass" if diff is None else "fail", "diff": diff})
    return {"target": "firstmain", "h": ctx.h, "l": ctx.l, "core": list(core),
            "weight": w, "passed": ok, "columns": columns}


def verify_samedec(core: Partition, w: int, ctx: NiceContext) -> dict:
    """``Phi`` of each A2 canonical basis vector labelled by a standard partition
    equals the canonical basis vector of its image for modulus ``n`` (needs h >= 5)."""
    if ctx.h < 5:
        raise ValueError("this comparison needs h >= 5")
    cb = fock_a2.canonical_basis_a2(tuple(core), w, ctx.h)
    columns = []
    ok = True
    for be in cb.cols:
        if not is_standard(be, ctx):
            continue
        mu = phi(be, ctx)
        got = Phi(cb.column(be), ctx)
        expected = fock_a1.canonical_basis_vector(mu, ctx.n)
        diff = _first_diff(got, expected)
        ok = ok and diff is None
        columns.append({"column": list(be), "image": list(mu),
                        "status": "pass" if diff is None else "fail", "diff": diff})
    return {"target": "samedec", "h": ctx.h, "l": ctx.l, "core": list(core),
            "weight": w, "passed": ok, "columns": columns}
