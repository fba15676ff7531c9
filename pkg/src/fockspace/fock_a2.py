"""The level-one Fock space in type A^(2)_{h-1}.

The standard basis is the set of h-strict partitions.  ``apply_fcheck``
implements the divided powers of the Chevalley generators, including the
extra factor N for bar-residue 0, and ``canonical_basis_a2`` computes the
canonical basis of one weight space.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import List, Optional, Tuple

from .combinatorics import (
    EMPTY,
    Partition,
    bar_addable_removable,
    bar_residue,
    enumerate_bar_weight_space,
    h_bar_core_weight,
    is_h_bar_core,
    is_h_strict,
    is_partition,
    is_restricted,
    skew_nodes,
)
from .fock import (
    CanonicalBasisError,
    CanonicalBasisMatrix,
    FockVector,
    canonical_columns,
    check_column,
    linear_extend,
)
from .qpoly import LaurentPoly, ONE

__all__ = [
    "q_exponent",
    "fcheck_on_partition",
    "apply_fcheck",
    "apply_word",
    "first_approximation",
    "canonical_basis_a2",
    "canonical_basis_vector",
    "dcheck_coefficient",
]


def _check_h(h: int) -> int:
    if h < 3 or h % 2 == 0:
        raise ValueError("h must be an odd integer at least 3")
    return (h - 1) // 2


def q_exponent(i: int, h: int) -> int:
    """Exponent ``e`` with ``q_i = q^e``."""
    n = _check_h(h)
    if not 0 <= i <= n:
        raise ValueError("bar-residue %d out of range for h=%d" % (i, h))
    if i == 0:
        return 1
    if i == n:
        return 4
    return 2


def _row_options(al: Partition, i: int, h: int) -> List[List[int]]:
    """For each row (plus one new row) the possible numbers of added nodes."""
    opts = []
    for r in range(len(al) + 1):
        p = al[r] if r < len(al) else 0
        choice = [0]
        t = 1
        while t <= 2 and bar_residue(p + t, h) == i:
            choice.append(t)
            t += 1
        if r == len(al):
            choice = [t for t in choice if t <= 1]
        opts.append(choice)
    return opts


def _targets(al: Partition, i: int, r: int, h: int) -> List[Partition]:
    """All h-strict ``be`` obtained from ``al`` by adding ``r`` nodes of bar-residue ``i``."""
    opts = _row_options(al, i, h)
    live = [k for k, o in enumerate(opts) if len(o) > 1]
    out = []
    for combo in itertools.product(*(opts[k] for k in live)):
        if sum(combo) != r:
            continue
        parts = list(al) + [0]
        for k, t in zip(live, combo):
            parts[k] += t
        while parts and parts[-1] == 0:
            parts.pop()
        if is_partition(parts) and is_h_strict(parts, h):
            out.append(tuple(parts))
    return out


@lru_cache(maxsize=None)
def _fcheck_terms(al: Partition, i: int, r: int, h: int) -> Tuple[Tuple[Partition, LaurentPoly], ...]:
    e = q_exponent(i, h)
    _, rem = bar_addable_removable(al, i, h)
    rem_cols = [c for _, c in rem]
    out = []
    for be in _targets(al, i, r, h):
        added = skew_nodes(be, al)
        add_b, _ = bar_addable_removable(be, i, h)
        add_cols = [c for _, c in add_b]
        n = 0
        for _, col in added:
            n += sum(1 for c in add_cols if c < col)
            n -= sum(1 for c in rem_cols if c < col)
        coeff = LaurentPoly.monomial(e * n)
        if i == 0:
            cols = {c for _, c in added}
            for c in cols:
                if c > 1 and (c - 1) % h == 0 and (c - 1) not in cols:
                    b = sum(1 for p in al if p == c - 1)
                    coeff = coeff * (ONE - LaurentPoly.monomial(2 * b, (-1) ** b))
        if coeff:
            out.append((be, coeff))
    return tuple(out)


def fcheck_on_partition(al: Partition, i: int, r: int, h: int) -> FockVector:
    """The divided power of bar-residue ``i`` applied to one h-strict partition."""
    if r < 0:
        raise ValueError("r must be non-negative")
    if r == 0:
        return FockVector.basis(al)
    q_exponent(i, h)
    return FockVector(dict(_fcheck_terms(tuple(al), i, r, h)))


def apply_fcheck(v: FockVector, i: int, r: int, h: int) -> FockVector:
    if r == 0:
        return v
    return linear_extend(v, lambda al: fcheck_on_partition(al, i, r, h))


def apply_word(v: FockVector, word, h: int) -> FockVector:
    """Apply the divided powers listed in ``word`` as ``(i, r)`` pairs, first pair first."""
    for i, r in word:
        v = apply_fcheck(v, i, r, h)
    return v


# ---------------------------------------------------------------------------
# first approximations
# ---------------------------------------------------------------------------

def _predecessors(be: Partition, h: int) -> List[Tuple[int, int, Partition]]:
    """Restricted ``al`` with ``be`` obtained by adding ``k`` nodes of one bar-residue.

    Ordered so that removals from lower rows, and larger removals, come first.
    """
    n = (h - 1) // 2
    out = []
    for i in range(n + 1):
        opts = []
        for r, p in enumerate(be):
            choice = [0]
            t = 1
            while t <= 2 and t <= p and bar_residue(p - t + 1, h) == i:
                choice.append(t)
                t += 1
            opts.append(choice)
        live = [k for k, o in enumerate(opts) if len(o) > 1]
        for combo in itertools.product(*(opts[k] for k in live)):
            k_total = sum(combo)
            if not k_total:
                continue
            parts = list(be)
            for row, t in zip(live, combo):
                parts[row] -= t
            while parts and parts[-1] == 0:
                parts.pop()
            if not is_partition(parts) or not is_h_strict(parts, h):
                continue
            al = tuple(parts)
            if not is_restricted(al, h):
                continue
            low = min(row for row, t in zip(live, combo) if t)
            out.append((i, k_total, al, low))
    out.sort(key=lambda x: (-x[3], -x[1], x[0]))
    return [(i, k, al) for i, k, al, _ in out]


@lru_cache(maxsize=None)
def _approx(be: Partition, h: int) -> Optional[Tuple[Tuple[int, int], ...]]:
    """A word whose monomial on the empty partition has leading term ``be``."""
    if not be:
        return ()
    cands = _predecessors(be, h)
    # first pass: only steps that look unitriangular on the predecessor alone
    for strict in (True, False):
        for i, k, al in cands:
            if strict:
                local = fcheck_on_partition(al, i, k, h)
                if check_column(local, be):
                    continue
            word = _approx(al, h)
            if word is None:
                continue
            v = apply_word(FockVector.basis(EMPTY), word + ((i, k),), h)
            if check_column(v, be) is None:
                return word + ((i, k),)
    return None


def approximation_word(be: Partition, h: int) -> Tuple[Tuple[int, int], ...]:
    be = tuple(be)
    if not is_restricted(be, h) or not is_h_strict(be, h):
        raise ValueError("%r is not a restricted %d-strict partition" % (be, h))
    word = _approx(be, h)
    if word is None:
        raise CanonicalBasisError("no unitriangular monomial found for %r" % (be,))
    return word


@lru_cache(maxsize=None)
def _first_approx_cached(be: Partition, h: int) -> FockVector:
    return apply_word(FockVector.basis(EMPTY), approximation_word(be, h), h)


def first_approximation(be: Partition, h: int) -> FockVector:
    return _first_approx_cached(tuple(be), h)


# ---------------------------------------------------------------------------
# canonical basis
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _cb(core: Partition, w: int, h: int) -> CanonicalBasisMatrix:
    rows = enumerate_bar_weight_space(core, w, h)
    cols = [be for be in rows if is_restricted(be, h)]
    columns = canonical_columns(cols, lambda be: first_approximation(be, h))
    return CanonicalBasisMatrix("a2", h, core, w, rows, cols, columns)


def canonical_basis_a2(core: Partition, w: int, h: int) -> CanonicalBasisMatrix:
    """Canonical basis of the weight space with ``h``-bar-core ``core`` and bar-weight ``w``."""
    _check_h(h)
    core = tuple(core)
    if not is_h_bar_core(core, h):
        raise ValueError("%r is not a %d-bar-core" % (core, h))
    return _cb(core, w, h)


def canonical_basis_vector(be: Partition, h: int) -> FockVector:
    be = tuple(be)
    if not is_h_strict(be, h) or not is_restricted(be, h):
        raise ValueError("%r is not a restricted %d-strict partition" % (be, h))
    core, w = h_bar_core_weight(be, h)
    return canonical_basis_a2(core, w, h).column(be)


def dcheck_coefficient(al: Partition, be: Partition, h: int) -> LaurentPoly:
    """The coefficient of ``al`` in the canonical basis vector of ``be``."""
    al, be = tuple(al), tuple(be)
    if not is_h_strict(be, h) or not is_restricted(be, h):
        raise ValueError("%r is not a restricted %d-strict partition" % (be, h))
    if not is_h_strict(al, h) or h_bar_core_weight(al, h) != h_bar_core_weight(be, h):
        return LaurentPoly()
    return canonical_basis_vector(be, h).coeff(al)
