"""Shared pieces for both Fock spaces: sparse vectors, basis matrices and the
triangular bar-invariant correction step."""

from __future__ import annotations

from typing import Callable, Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from .combinatorics import Partition, dominates
from .qpoly import LaurentPoly, ONE, bar_symmetric_head, divisible_by_q


class FockVector:
    """Finitely supported map from partitions to Laurent polynomials."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[Partition, object]] = None):
        t: Dict[Partition, LaurentPoly] = {}
        if terms:
            for k, v in terms.items():
                if isinstance(v, int):
                    v = LaurentPoly.constant(v)
                if v:
                    t[tuple(k)] = v
        self.terms = t

    @classmethod
    def basis(cls, la: Partition) -> "FockVector":
        return cls({tuple(la): ONE})

    def coeff(self, la: Partition) -> LaurentPoly:
        return self.terms.get(tuple(la), LaurentPoly())

    def support(self) -> List[Partition]:
        return sorted(self.terms)

    def items(self) -> Iterator[Tuple[Partition, LaurentPoly]]:
        return iter(sorted(self.terms.items()))

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def add_scaled(self, other: "FockVector", scale=ONE) -> "FockVector":
        out = dict(self.terms)
        for k, v in other.terms.items():
            x = out.get(k, LaurentPoly()) + scale * v
            if x:
                out[k] = x
            else:
                out.pop(k, None)
        res = FockVector()
        res.terms = out
        return res

    def __add__(self, other: "FockVector") -> "FockVector":
        return self.add_scaled(other)

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self.add_scaled(other, -ONE)

    def __neg__(self) -> "FockVector":
        return FockVector().add_scaled(self, -ONE)

    def __rmul__(self, scale) -> "FockVector":
        return FockVector().add_scaled(self, scale)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FockVector):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return "FockVector(0)"
        body = " + ".join("(%s)%r" % (v, k) for k, v in self.items())
        return "FockVector(%s)" % body


def linear_extend(v: FockVector, action: Callable[[Partition], FockVector]) -> FockVector:
    out: Dict[Partition, LaurentPoly] = {}
    for la, c in v.terms.items():
        for mu, d in action(la).terms.items():
            x = out.get(mu, LaurentPoly()) + c * d
            if x:
                out[mu] = x
            else:
                out.pop(mu, None)
    res = FockVector()
    res.terms = out
    return res


class CanonicalBasisMatrix:
    """A weight space of canonical basis vectors, one column per restricted label."""

    def __init__(self, kind: str, modulus: int, core: Partition, weight: int,
                 rows: Sequence[Partition], cols: Sequence[Partition],
                 columns: Mapping[Partition, FockVector]):
        self.kind = kind
        self.modulus = modulus
        self.core = tuple(core)
        self.weight = weight
        self.rows = [tuple(r) for r in rows]
        self.cols = [tuple(c) for c in cols]
        self.columns = {tuple(k): v for k, v in columns.items()}

    def entry(self, row: Partition, col: Partition) -> LaurentPoly:
        return self.columns[tuple(col)].coeff(row)

    def column(self, col: Partition) -> FockVector:
        return self.columns[tuple(col)]

    def as_lists(self) -> List[List[LaurentPoly]]:
        return [[self.entry(r, c) for c in self.cols] for r in self.rows]

    def __eq__(self, other) -> bool:
        if not isinstance(other, CanonicalBasisMatrix):
            return NotImplemented
        return (
            self.kind == other.kind
            and self.modulus == other.modulus
            and self.core == other.core
            and self.weight == other.weight
            and self.rows == other.rows
            and self.cols == other.cols
            and self.as_lists() == other.as_lists()
        )


class CanonicalBasisError(RuntimeError):
    pass


def check_column(v: FockVector, beta: Partition) -> Optional[str]:
    """Describe why ``v`` cannot serve as a first approximation for ``beta``, or None."""
    if v.coeff(beta) != ONE:
        return "coefficient of %r is %s" % (beta, v.coeff(beta))
    for la in v.terms:
        if not dominates(la, beta):
            return "term %r does not dominate %r" % (la, beta)
    return None


def correct_column(
    beta: Partition,
    approx: FockVector,
    known: Callable[[Partition], FockVector],
) -> FockVector:
    """Subtract bar-invariant multiples of earlier columns until every
    off-diagonal coefficient lies in ``qZ[q]``.

    ``known(gamma)`` must return the finished column for any label ``gamma``
    strictly dominating ``beta``.  Scanning the support in ascending
    lexicographic order always meets a dominance-minimal offender first,
    and subtracting its column only changes lexicographically larger terms.
    """
    v = approx
    pos: Optional[Partition] = None
    while True:
        offender = None
        for la in sorted(v.terms):
            if pos is not None and la <= pos:
                continue
            if la == tuple(beta):
                continue
            c = v.terms[la]
            if not divisible_by_q(c, 1):
                offender = la
                break
        if offender is None:
            return v
        a = bar_symmetric_head(v.terms[offender])
        v = v.add_scaled(known(offender), -a)
        pos = offender


def canonical_columns(
    cols: Sequence[Partition],
    first_approx: Callable[[Partition], FockVector],
) -> Dict[Partition, FockVector]:
    """Run the triangular algorithm on the restricted labels ``cols``."""
    done: Dict[Partition, FockVector] = {}

    def known(gamma: Partition) -> FockVector:
        if gamma not in done:
            raise CanonicalBasisError(
                "correction needs the column of %r, which is not available" % (gamma,)
            )
        return done[gamma]

    for beta in sorted(cols, reverse=True):
        approx = first_approx(beta)
        why = check_column(approx, beta)
        if why:
            raise CanonicalBasisError("bad first approximation for %r: %s" % (beta, why))
        done[beta] = correct_column(beta, approx, known)
    return done
