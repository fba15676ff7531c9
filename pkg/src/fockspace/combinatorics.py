"""Partitions, h-strict partitions and their abacus combinatorics.

Partitions are plain tuples of positive integers in weakly decreasing
order, with the empty tuple standing for the empty partition.  Nodes are
``(row, col)`` pairs, both counted from 1.
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

Partition = Tuple[int, ...]
Node = Tuple[int, int]

EMPTY: Partition = ()


# ---------------------------------------------------------------------------
# basic partition handling
# ---------------------------------------------------------------------------

def make_partition(parts: Iterable[int]) -> Partition:
    """Sort, drop zeros and return a canonical partition tuple."""
    out = sorted((int(p) for p in parts if p), reverse=True)
    if out and out[-1] < 0:
        raise ValueError("negative part in %r" % (out,))
    return tuple(out)


def is_partition(parts: Sequence[int]) -> bool:
    return all(p > 0 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


_EXP = re.compile(r"^\s*(\d+)\s*\^\s*(\d+)\s*$")


def parse_partition(text: str) -> Partition:
    """Read ``"5,3,3,1"`` or ``"5,3^2,1"``.  The empty string is the empty partition."""
    text = text.strip()
    if text in ("", "0", "()", "-"):
        return EMPTY
    text = text.strip("()")
    parts: List[int] = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            raise ValueError("empty part in %r" % text)
        m = _EXP.match(tok)
        if m:
            parts.extend([int(m.group(1))] * int(m.group(2)))
        else:
            parts.append(int(tok))
    parts = [p for p in parts if p != 0]
    if not is_partition(parts):
        raise ValueError("not a partition: %r" % text)
    return tuple(parts)


def format_partition(la: Partition) -> str:
    return ",".join(str(p) for p in la)


def partition_label(la: Partition) -> str:
    """Parenthesised form such as ``(5,3,3,1)``, used in messages and displays."""
    return "(" + format_partition(la) + ")"


def size(la: Partition) -> int:
    return sum(la)


def conjugate(la: Partition) -> Partition:
    if not la:
        return EMPTY
    return tuple(sum(1 for p in la if p >= c) for c in range(1, la[0] + 1))


def dominates(la: Partition, mu: Partition) -> bool:
    """True when ``la`` dominates ``mu`` (both must have the same size)."""
    if sum(la) != sum(mu):
        return False
    a = b = 0
    for i in range(max(len(la), len(mu))):
        a += la[i] if i < len(la) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


def partitions_of(n: int, max_part: Optional[int] = None) -> List[Partition]:
    """All partitions of ``n`` in descending lexicographic order."""
    return list(_partitions(n, n if max_part is None else min(n, max_part)))


@lru_cache(maxsize=None)
def _partitions(n: int, k: int) -> Tuple[Partition, ...]:
    if n == 0:
        return (EMPTY,)
    out = []
    for first in range(min(n, k), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def contains(la: Partition, mu: Partition) -> bool:
    """True when the diagram of ``mu`` lies inside that of ``la``."""
    if len(mu) > len(la):
        return False
    return all(la[i] >= mu[i] for i in range(len(mu)))


def nodes(la: Partition) -> List[Node]:
    return [(r + 1, c) for r, p in enumerate(la) for c in range(1, p + 1)]


def skew_nodes(mu: Partition, la: Partition) -> List[Node]:
    """Nodes of ``mu`` not in ``la`` (``la`` must be contained in ``mu``)."""
    out = []
    for r, p in enumerate(mu):
        start = la[r] if r < len(la) else 0
        out.extend((r + 1, c) for c in range(start + 1, p + 1))
    return out


def add_node(la: Partition, node: Node) -> Partition:
    r, _ = node
    parts = list(la)
    if r == len(parts) + 1:
        parts.append(1)
    else:
        parts[r - 1] += 1
    return tuple(parts)


def remove_node(la: Partition, node: Node) -> Partition:
    r, _ = node
    parts = list(la)
    parts[r - 1] -= 1
    if parts[-1] == 0:
        parts.pop()
    return tuple(parts)


# ---------------------------------------------------------------------------
# residues, addable and removable nodes
# ---------------------------------------------------------------------------

def residue(node: Node, m: int) -> int:
    r, c = node
    return (c - r) % m


def addable_nodes(la: Partition) -> List[Node]:
    """All addable nodes, left to right by column."""
    out = []
    for r in range(len(la) + 1):
        p = la[r] if r < len(la) else 0
        if r == 0 or la[r - 1] > p:
            out.append((r + 1, p + 1))
    out.sort(key=lambda x: x[1])
    return out


def removable_nodes(la: Partition) -> List[Node]:
    out = []
    for r, p in enumerate(la):
        if r + 1 == len(la) or la[r + 1] < p:
            out.append((r + 1, p))
    out.sort(key=lambda x: x[1])
    return out


def addable_removable_nodes(la: Partition, i: int, m: int) -> Tuple[List[Node], List[Node]]:
    """The ``i``-addable and ``i``-removable nodes, ordered by column."""
    i %= m
    add = [x for x in addable_nodes(la) if residue(x, m) == i]
    rem = [x for x in removable_nodes(la) if residue(x, m) == i]
    return add, rem


def is_m_restricted(la: Partition, m: int) -> bool:
    return all(
        la[r] - (la[r + 1] if r + 1 < len(la) else 0) < m for r in range(len(la))
    )


# ---------------------------------------------------------------------------
# beta-sets, abacus, cores
# ---------------------------------------------------------------------------

def beta_set(la: Partition, s: int) -> List[int]:
    """The ``s``-element beta-set, largest element first."""
    if s < len(la):
        raise ValueError("need at least %d beads" % len(la))
    return [(la[r] if r < len(la) else 0) + s - 1 - r for r in range(s)]


def from_beta_set(beads: Iterable[int]) -> Partition:
    b = sorted(beads, reverse=True)
    s = len(b)
    if len(set(b)) != s or (b and b[-1] < 0):
        raise ValueError("invalid beta-set")
    return make_partition(b[r] - (s - 1 - r) for r in range(s))


def runner_counts(beads: Iterable[int], m: int) -> List[int]:
    counts = [0] * m
    for b in beads:
        counts[b % m] += 1
    return counts


def _slide_up(beads: Iterable[int], m: int) -> Tuple[List[int], int]:
    counts = [0] * m
    moves = 0
    for b in beads:
        moves += b // m
        counts[b % m] += 1
    # moves already counts the total row index; subtract the rows the
    # beads occupy once packed at the top of their runners
    core = []
    for a in range(m):
        core.extend(a + m * k for k in range(counts[a]))
        moves -= counts[a] * (counts[a] - 1) // 2
    return core, moves


def m_core_weight(la: Partition, m: int) -> Tuple[Partition, int]:
    """The ``m``-core and ``m``-weight, by sliding beads up the abacus."""
    if m < 2:
        raise ValueError("m must be at least 2")
    s = len(la)
    core, moves = _slide_up(beta_set(la, s), m)
    return from_beta_set(core), moves


def m_core(la: Partition, m: int) -> Partition:
    return m_core_weight(la, m)[0]


def is_m_core(la: Partition, m: int) -> bool:
    return m_core_weight(la, m)[1] == 0


def adds_horizontal_strip(la: Partition, mu: Partition) -> Optional[int]:
    """Return ``r`` if ``mu`` is ``la`` plus ``r`` nodes in distinct columns."""
    if not contains(mu, la):
        return None
    for r in range(1, len(mu)):
        prev = la[r - 1] if r - 1 < len(la) else 0
        if mu[r] > prev:
            return None
    return sum(mu) - sum(la)


def adds_horizontal_strip_beta(la: Partition, mu: Partition) -> Optional[int]:
    """Same test through beta-sets.

    Looks for a set ``A`` of positive integers, disjoint from ``B(la)``, with
    ``B(mu) = (B(la) + A) - (A - 1)``.  Each new bead of ``mu`` heads a run of
    ``A`` that walks down through empty positions and stops just above a bead
    of ``la`` that has gone.
    """
    s = max(len(la), len(mu)) + 1
    bl = set(beta_set(la, s))
    bm = set(beta_set(mu, s))
    A = set()
    for a in bm - bl:
        A.add(a)
        x = a - 1
        while x >= 0 and x not in bl:
            if x in bm:
                return None
            A.add(x)
            x -= 1
        if x < 0:
            return None
    if min(A, default=1) < 1 or (bl | A) - {a - 1 for a in A} != bm:
        return None
    return len(A)


# ---------------------------------------------------------------------------
# h-strict partitions
# ---------------------------------------------------------------------------

def _check_h(h: int) -> None:
    if h < 3 or h % 2 == 0:
        raise ValueError("h must be an odd integer at least 3")


def is_h_strict(al: Sequence[int], h: int) -> bool:
    return is_partition(al) and all(
        al[r] != al[r + 1] or al[r] % h == 0 for r in range(len(al) - 1)
    )


def is_restricted(al: Partition, h: int) -> bool:
    """Restricted h-strict: consecutive differences at most ``h`` (strictly
    less than ``h`` when the upper part is divisible by ``h``)."""
    for r in range(len(al)):
        nxt = al[r + 1] if r + 1 < len(al) else 0
        d = al[r] - nxt
        if al[r] % h == 0:
            if d >= h:
                return False
        elif d > h:
            return False
    return True


def bar_residue(col: int, h: int) -> int:
    return min((col - 1) % h, (h - col) % h)


def _is_hs(parts: Sequence[int], h: int) -> bool:
    return is_partition(parts) and is_h_strict(parts, h)


def _bar_removable(al: Partition, h: int, i: int) -> List[Node]:
    out = []
    for r, p in enumerate(al):
        if bar_residue(p, h) != i:
            continue
        one = remove_node(al, (r + 1, p))
        if not _is_hs(one, h):
            continue
        # the last node of the row comes off on its own
        out.append((r + 1, p))
        # its left neighbour can follow when it has the same bar-residue
        if p >= 2 and bar_residue(p - 1, h) == i:
            two = remove_node(one, (r + 1, p - 1))
            if _is_hs(two, h):
                out.append((r + 1, p - 1))
    return out


def _bar_addable(al: Partition, h: int, i: int) -> List[Node]:
    out = []
    for r in range(len(al) + 1):
        p = al[r] if r < len(al) else 0
        if bar_residue(p + 1, h) != i:
            continue
        one = add_node(al, (r + 1, p + 1))
        if not _is_hs(one, h):
            continue
        out.append((r + 1, p + 1))
        # a second node to its right can follow when it has the same bar-residue
        if bar_residue(p + 2, h) == i:
            two = add_node(one, (r + 1, p + 2))
            if _is_hs(two, h):
                out.append((r + 1, p + 2))
    return out


def bar_addable_removable(al: Partition, i: int, h: int) -> Tuple[List[Node], List[Node]]:
    """``i``-bar-addable and ``i``-bar-removable nodes, ordered by column."""
    _check_h(h)
    key = lambda x: (x[1], x[0])
    return sorted(_bar_addable(al, h, i), key=key), sorted(_bar_removable(al, h, i), key=key)


# ---------------------------------------------------------------------------
# bar-cores and bar-weights
# ---------------------------------------------------------------------------

def h_bar_core_weight(al: Partition, h: int) -> Tuple[Partition, int]:
    """The ``h``-bar-core and ``h``-bar-weight, computed on the bar-abacus."""
    _check_h(h)
    if not is_h_strict(al, h):
        raise ValueError("%r is not %d-strict" % (al, h))
    per_runner: Dict[int, int] = {a: 0 for a in range(1, h)}
    for p in al:
        if p % h:
            per_runner[p % h] += 1
    core: List[int] = []
    for a in range(1, (h + 1) // 2):
        x, y = per_runner[a], per_runner[h - a]
        if x > y:
            core.extend(a + h * k for k in range(x - y))
        elif y > x:
            core.extend(h - a + h * k for k in range(y - x))
    core_p = make_partition(core)
    weight = (sum(al) - sum(core_p)) // h
    return core_p, weight


def h_bar_core(al: Partition, h: int) -> Partition:
    return h_bar_core_weight(al, h)[0]


def is_h_bar_core(al: Partition, h: int) -> bool:
    return is_h_strict(al, h) and h_bar_core_weight(al, h)[1] == 0


def bar_removals(al: Partition, h: int) -> List[Partition]:
    """All h-strict partitions obtained from ``al`` by removing one ``h``-bar."""
    out = set()
    parts = list(al)
    for idx, p in enumerate(parts):
        if p >= h and (p % h == 0 or (p - h) not in parts):
            new = parts[:idx] + parts[idx + 1 :] + [p - h]
            out.add(make_partition(new))
    seen = set(parts)
    for a in range(1, (h + 1) // 2):
        if a in seen and h - a in seen:
            new = list(parts)
            new.remove(a)
            new.remove(h - a)
            out.add(make_partition(new))
    return sorted(out)


def bar_additions(al: Partition, h: int) -> List[Partition]:
    """All h-strict partitions obtained from ``al`` by adding one ``h``-bar."""
    out = set()
    parts = list(al)
    present = set(parts)
    sources = set(parts) | {0}
    for b in sources:
        t = b + h
        if t % h == 0 or t not in present:
            new = list(parts)
            if b:
                new.remove(b)
            new.append(t)
            out.add(make_partition(new))
    for a in range(1, (h + 1) // 2):
        if a not in present and h - a not in present:
            out.add(make_partition(parts + [a, h - a]))
    return sorted(out)


# ---------------------------------------------------------------------------
# weight spaces
# ---------------------------------------------------------------------------

def multipartitions(w: int, k: int) -> List[Tuple[Partition, ...]]:
    """All ``k``-tuples of partitions with total size ``w``."""
    out: List[Tuple[Partition, ...]] = []

    def rec(i: int, left: int, acc: List[Partition]) -> None:
        if i == k - 1:
            for p in partitions_of(left):
                out.append(tuple(acc + [p]))
            return
        for s in range(left + 1):
            for p in partitions_of(s):
                rec(i + 1, left - s, acc + [p])

    if k == 0:
        return [()] if w == 0 else []
    rec(0, w, [])
    return out


def abacus_bead_count(core: Partition, m: int, w: int) -> int:
    """A bead count giving at least ``w`` beads on every runner of the core display."""
    s = len(core)
    s += (-s) % m
    while min(runner_counts(beta_set(core, s), m)) < w:
        s += m
    return s


def from_core_quotient(core: Partition, quotient: Sequence[Partition], m: int, s: int) -> Partition:
    """Partition whose ``s``-bead display is the core display with runner ``a``
    rearranged to carry ``quotient[a]``."""
    beads = beta_set(core, s)
    counts = runner_counts(beads, m)
    out = []
    for a in range(m):
        q = quotient[a]
        c = counts[a]
        if len(q) > c:
            raise ValueError("runner %d has too few beads" % a)
        levels = list(range(c))
        for r, part in enumerate(q):
            levels[c - 1 - r] += part
        out.extend(a + m * lv for lv in levels)
    return from_beta_set(out)


def quotient_from_display(la: Partition, m: int, s: int) -> Tuple[Partition, ...]:
    """Read runner ``a`` of the ``s``-bead display as a one-runner abacus."""
    beads = beta_set(la, s)
    out = []
    for a in range(m):
        levels = sorted((b // m for b in beads if b % m == a), reverse=True)
        c = len(levels)
        out.append(make_partition(levels[r] - (c - 1 - r) for r in range(c)))
    return tuple(out)


def sort_labels(labels: Iterable[Partition]) -> List[Partition]:
    """Ascending lexicographic order; it refines the dominance order."""
    return sorted(set(labels))


def enumerate_weight_space(core: Partition, w: int, m: int) -> List[Partition]:
    """All partitions with ``m``-core ``core`` and ``m``-weight ``w``."""
    if not is_m_core(core, m):
        raise ValueError("%r is not a %d-core" % (core, m))
    s = abacus_bead_count(core, m, w)
    return sort_labels(
        from_core_quotient(core, q, m, s) for q in multipartitions(w, m)
    )


def enumerate_bar_weight_space(core: Partition, w: int, h: int) -> List[Partition]:
    """All h-strict partitions with ``h``-bar-core ``core`` and ``h``-bar-weight ``w``."""
    _check_h(h)
    if not is_h_bar_core(core, h):
        raise ValueError("%r is not a %d-bar-core" % (core, h))
    level = {core}
    for _ in range(w):
        nxt = set()
        for al in level:
            nxt.update(bar_additions(al, h))
        level = nxt
    return sort_labels(level)
