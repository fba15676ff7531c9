"""Integer Laurent polynomials in q and ordinary polynomials in t.

Both types are immutable, hashable and kept in canonical form (no stored
zero coefficients).  Text form lists terms in ascending exponent order,
for example ``q^2-q^4+q^6``.
"""

from __future__ import annotations

import re
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

__all__ = [
    "LaurentPoly",
    "TPoly",
    "ONE",
    "ZERO",
    "Q",
    "q_power",
    "bar",
    "quantum_integer",
    "quantum_factorial",
    "subst_t",
    "eval_q1",
    "divisible_by_q",
    "bar_symmetric_head",
    "parse_laurent",
]

Number = int


class LaurentPoly:
    """Finitely supported map from integer exponents to integer coefficients."""

    __slots__ = ("_c", "_hash")
    var = "q"

    def __init__(self, coeffs: Union[Mapping[int, int], Iterable[Tuple[int, int]], None] = None):
        c: Dict[int, int] = {}
        if coeffs:
            items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
            for e, v in items:
                if v:
                    v = c.get(e, 0) + v
                    if v:
                        c[e] = v
                    else:
                        c.pop(e, None)
        self._check(c)
        self._c = c
        self._hash = None

    def _check(self, c: Dict[int, int]) -> None:
        pass

    @classmethod
    def _raw(cls, c: Dict[int, int]):
        obj = cls.__new__(cls)
        obj._c = c
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, v: int):
        return cls._raw({0: v} if v else {})

    @classmethod
    def monomial(cls, e: int, v: int = 1):
        return cls._raw({e: v} if v else {})

    # -- container protocol ------------------------------------------------
    def items(self) -> Iterator[Tuple[int, int]]:
        return iter(sorted(self._c.items()))

    def coeff(self, e: int) -> int:
        return self._c.get(e, 0)

    def exponents(self):
        return sorted(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def min_degree(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return min(self._c)

    def max_degree(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return max(self._c)

    # -- arithmetic ------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return type(self).constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other._c:
            return self
        if not self._c:
            return type(self)._raw(dict(other._c))
        c = dict(self._c)
        for e, v in other._c.items():
            w = c.get(e, 0) + v
            if w:
                c[e] = w
            else:
                del c[e]
        return type(self)._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._raw({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self._c or not other._c:
            return type(self)._raw({})
        c: Dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                w = c.get(e, 0) + v1 * v2
                if w:
                    c[e] = w
                else:
                    del c[e]
        return type(self)._raw(c)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._c) == 1:
                (e, v), = self._c.items()
                if v in (1, -1):
                    return type(self)._raw({e * k: v ** (-k)})
            raise ValueError("negative power of a non-unit")
        result = type(self).constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int):
        """Multiply by ``var**k``."""
        return type(self)._raw({e + k: v for e, v in self._c.items()})

    def divmod_exact(self, other: "LaurentPoly"):
        """Exact division; raises ArithmeticError if a remainder is left."""
        other = self._coerce(other)
        if not other._c:
            raise ZeroDivisionError("division by zero polynomial")
        rem = dict(self._c)
        quo: Dict[int, int] = {}
        dtop = max(other._c)
        lead = other._c[dtop]
        dlow = min(other._c)
        while rem:
            top = max(rem)
            if top - dtop < min(rem) - dlow:
                break
            v = rem[top]
            if v % lead:
                raise ArithmeticError("non-exact division: %s / %s" % (self, other))
            qv = v // lead
            qe = top - dtop
            quo[qe] = qv
            for e, w in other._c.items():
                k = e + qe
                x = rem.get(k, 0) - qv * w
                if x:
                    rem[k] = x
                else:
                    rem.pop(k, None)
        if rem:
            raise ArithmeticError("non-exact division: %s / %s" % (self, other))
        return type(self)._raw(quo)

    def __floordiv__(self, other):
        return self.divmod_exact(other)

    # -- comparison ------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            return self._c == ({0: other} if other else {})
        if isinstance(other, LaurentPoly):
            return self._c == other._c
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    # -- text --------------------------------------------------------------
    def __str__(self) -> str:
        if not self._c:
            return "0"
        out = []
        for e, v in sorted(self._c.items()):
            sign = "-" if v < 0 else "+"
            a = abs(v)
            if e == 0:
                body = str(a)
            else:
                mono = self.var if e == 1 else "%s^%d" % (self.var, e)
                body = mono if a == 1 else "%d*%s" % (a, mono)
            out.append((sign, body))
        first_sign, first_body = out[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in out[1:]:
            text += sign + body
        return text

    def __repr__(self) -> str:
        return "%s(%r)" % (type(self).__name__, str(self))


class TPoly(LaurentPoly):
    """Polynomial in t with integer coefficients (non-negative exponents only)."""

    __slots__ = ()
    var = "t"

    def _check(self, c):
        if any(e < 0 for e in c):
            raise ValueError("TPoly exponents must be non-negative")

    def __call__(self, value):
        """Evaluate at an integer or substitute a LaurentPoly."""
        total = 0 if isinstance(value, int) else LaurentPoly()
        for e, v in self._c.items():
            total = total + v * value ** e
        return total


ONE = LaurentPoly.constant(1)
ZERO = LaurentPoly()
Q = LaurentPoly.monomial(1)


def q_power(e: int) -> LaurentPoly:
    return LaurentPoly.monomial(e)


def bar(p: LaurentPoly) -> LaurentPoly:
    """The bar involution q -> q^-1 on coefficients."""
    return LaurentPoly._raw({-e: v for e, v in p._c.items()})


def quantum_integer(r: int, e: int = 1) -> LaurentPoly:
    """[r]_x with x = q^e, i.e. x^(r-1) + x^(r-3) + ... + x^(1-r)."""
    if r < 0:
        raise ValueError("r must be non-negative")
    return LaurentPoly._raw({e * (r - 1 - 2 * j): 1 for j in range(r)})


def quantum_factorial(r: int, e: int = 1) -> LaurentPoly:
    out = ONE
    for j in range(2, r + 1):
        out = out * quantum_integer(j, e)
    return out


def subst_t(p: TPoly) -> LaurentPoly:
    """Replace t by -q^2."""
    return LaurentPoly._raw({2 * k: v * (-1) ** k for k, v in p._c.items()})


def eval_q1(p: LaurentPoly) -> int:
    return sum(p._c.values())


def divisible_by_q(p: LaurentPoly, k: int = 1) -> bool:
    """True when every exponent of ``p`` is at least ``k`` (zero counts)."""
    return all(e >= k for e in p._c)


def bar_symmetric_head(p: LaurentPoly) -> LaurentPoly:
    """The unique bar-invariant a with p - a having only positive exponents."""
    c: Dict[int, int] = {}
    for e, v in p._c.items():
        if e == 0:
            c[0] = c.get(0, 0) + v
        elif e < 0:
            c[e] = c.get(e, 0) + v
            c[-e] = c.get(-e, 0) + v
    return LaurentPoly({k: v for k, v in c.items()})


_TERM = re.compile(r"\s*([+-]?)\s*(\d+)?\s*(\*)?\s*(?:([qt])(?:\^\s*(-?\d+)|\^\{(-?\d+)\})?)?\s*")


def parse_laurent(text: str, cls=LaurentPoly) -> LaurentPoly:
    """Parse the text grammar: signed terms ``c*q^e``; ``c`` optional when 1."""
    s = text.strip()
    if s in ("", "0"):
        return cls()
    pos = 0
    coeffs: Dict[int, int] = {}
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError("cannot parse polynomial %r at %d" % (text, pos))
        sign, num, star, var, exp1, exp2 = m.groups()
        if not first and not sign:
            raise ValueError("missing sign in %r" % text)
        if num is None and var is None:
            raise ValueError("empty term in %r" % text)
        if star and (num is None or var is None):
            raise ValueError("malformed term in %r" % text)
        c = int(num) if num is not None else 1
        if sign == "-":
            c = -c
        if var is None:
            e = 0
        else:
            if var != cls.var:
                raise ValueError("unexpected variable %r in %r" % (var, text))
            e = int(exp1 or exp2 or 1)
        coeffs[e] = coeffs.get(e, 0) + c
        pos = m.end()
        first = False
    return cls(coeffs)
