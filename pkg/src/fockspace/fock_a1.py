"""The level-one Fock space in type A^(1)_{m-1}.

The standard basis is the set of all partitions.  ``apply_f`` implements the
divided powers f_i^(r) and ``llt_canonical_basis`` computes the canonical
basis of one weight space by the LLT algorithm.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Dict, List, Tuple

from .combinatorics import (
    EMPTY,
    Partition,
    add_node,
    addable_removable_nodes,
    enumerate_weight_space,
    is_m_core,
    is_m_restricted,
    m_core_weight,
)
from .fock import (
    CanonicalBasisError,
    CanonicalBasisMatrix,
    FockVector,
    canonical_columns,
    check_column,
    linear_extend,
)
from .qpoly import LaurentPoly

__all__ = [
    "f_on_partition",
    "apply_f",
    "apply_word",
    "ladder_word",
    "first_approximation",
    "llt_canonical_basis",
    "canonical_basis_vector",
    "d_coefficient",
]


@lru_cache(maxsize=None)
def _f_terms(la: Partition, i: int, r: int, m: int) -> Tuple[Tuple[Partition, LaurentPoly], ...]:
    add, rem = addable_removable_nodes(la, i, m)
    out = []
    for chosen in itertools.combinations(add, r):
        mu = la
        for node in chosen:
            mu = add_node(mu, node)
        mu_add, _ = addable_removable_nodes(mu, i, m)
        n = 0
        for _, col in chosen:
            n += sum(1 for _, c in mu_add if c < col)
            n -= sum(1 for _, c in rem if c < col)
        out.append((mu, LaurentPoly.monomial(2 * n)))
    return tuple(out)


def f_on_partition(la: Partition, i: int, r: int, m: int) -> FockVector:
    """``f_i^(r)`` applied to a single partition."""
    if r < 0:
        raise ValueError("r must be non-negative")
    if r == 0:
        return FockVector.basis(la)
    return FockVector(dict(_f_terms(tuple(la), i % m, r, m)))


def apply_f(v: FockVector, i: int, r: int, m: int) -> FockVector:
    """``f_i^(r)`` extended linearly."""
    if r == 0:
        return v
    return linear_extend(v, lambda la: f_on_partition(la, i, r, m))


def apply_word(v: FockVector, word, m: int) -> FockVector:
    """Apply ``f_{i}^{(r)}`` for each ``(i, r)`` in ``word``, first pair first."""
    for i, r in word:
        v = apply_f(v, i, r, m)
    return v


def ladder_word(mu: Partition, m: int) -> List[Tuple[int, int]]:
    """The ladder decomposition of an ``m``-restricted partition.

    Ladder ``k`` holds the nodes ``(r, c)`` with ``c + (m - 1)(r - 1) = k``;
    all of them have residue ``k - 1``.  The word lists one divided power per
    non-empty ladder, lowest ladder first.
    """
    counts: Dict[int, int] = {}
    for r, p in enumerate(mu, start=1):
        for c in range(1, p + 1):
            k = c + (m - 1) * (r - 1)
            counts[k] = counts.get(k, 0) + 1
    return [((k - 1) % m, counts[k]) for k in sorted(counts)]


def first_approximation(mu: Partition, m: int) -> FockVector:
    """``f``-monomial on the empty partition with leading term ``mu``."""
    if not is_m_restricted(mu, m):
        raise ValueError("%r is not %d-restricted" % (mu, m))
    v = apply_word(FockVector.basis(EMPTY), ladder_word(mu, m), m)
    why = check_column(v, mu)
    if why:
        raise CanonicalBasisError("ladder monomial for %r fails: %s" % (mu, why))
    return v


@lru_cache(maxsize=None)
def _llt(core: Partition, w: int, m: int) -> CanonicalBasisMatrix:
    rows = enumerate_weight_space(core, w, m)
    cols = [mu for mu in rows if is_m_restricted(mu, m)]
    columns = canonical_columns(cols, lambda mu: first_approximation(mu, m))
    return CanonicalBasisMatrix("a1", m, core, w, rows, cols, columns)


def llt_canonical_basis(core: Partition, w: int, m: int) -> CanonicalBasisMatrix:
    """Canonical basis of the weight space with ``m``-core ``core`` and weight ``w``."""
    if m < 2:
        raise ValueError("m must be at least 2")
    core = tuple(core)
    if not is_m_core(core, m):
        raise ValueError("%r is not a %d-core" % (core, m))
    return _llt(core, w, m)


def canonical_basis_vector(mu: Partition, m: int) -> FockVector:
    """``G_m(mu)`` for an ``m``-restricted partition ``mu``."""
    mu = tuple(mu)
    if not is_m_restricted(mu, m):
        raise ValueError("%r is not %d-restricted" % (mu, m))
    core, w = m_core_weight(mu, m)
    return llt_canonical_basis(core, w, m).column(mu)


def d_coefficient(la: Partition, mu: Partition, m: int) -> LaurentPoly:
    """The coefficient of ``la`` in ``G_m(mu)``."""
    la, mu = tuple(la), tuple(mu)
    if not is_m_restricted(mu, m):
        raise ValueError("%r is not %d-restricted" % (mu, m))
    if m_core_weight(la, m) != m_core_weight(mu, m):
        return LaurentPoly()
    return canonical_basis_vector(mu, m).coeff(la)
