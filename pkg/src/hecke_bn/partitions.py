"""Partitions, multipartitions, and the orders on them.

Partitions are stored as normalized tuples (weakly decreasing, no zeros), so
they hash and compare like the plain tuples they wrap. A multipartition is a
tuple of partitions; for level 2 it is a bipartition ``(lam1 | lam2)``.

Canonical enumeration order is reverse-lexicographic: partitions of ``n`` come
out as ``(4), (3,1), (2,2), (2,1,1), (1,1,1,1)``; multipartitions are compared
component by component on the key ``(size, parts)``, larger first.
"""

from __future__ import annotations

import math
import re
from functools import lru_cache
from typing import Iterable, Sequence

EMPTY_SYMBOL = "∅"  # ∅


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for i, p in enumerate(parts):
            if p <= 0:
                raise ValueError(f"partition parts must be positive: {parts}")
            if i and parts[i - 1] < p:
                raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """1-based part ``i``, zero past the end."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        if not self:
            return EMPTY_SYMBOL
        return "(" + ",".join(map(str, self)) + ")"

    def conjugate(self) -> "Partition":
        return conjugate(self)


class Multipartition(tuple):
    """An r-tuple of partitions (r >= 1)."""

    def __new__(cls, components: Iterable[Iterable[int]]):
        comps = tuple(c if isinstance(c, Partition) else Partition(c) for c in components)
        if not comps:
            raise ValueError("a multipartition needs at least one component")
        return super().__new__(cls, comps)

    @property
    def level(self) -> int:
        return len(self)

    @property
    def size(self) -> int:
        return sum(c.size for c in self)

    def __repr__(self) -> str:
        return f"Multipartition({[tuple(c) for c in self]!r})"

    def __str__(self) -> str:
        return format_multipartition(self)

    def to_json(self) -> list[list[int]]:
        return [list(c) for c in self]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[int]]) -> "Multipartition":
        if not isinstance(data, (list, tuple)) or not all(isinstance(c, (list, tuple)) for c in data):
            raise ValueError(f"expected an array of arrays of integers, got {data!r}")
        for c in data:
            for p in c:
                if not isinstance(p, int) or isinstance(p, bool):
                    raise ValueError(f"non-integer part {p!r} in {data!r}")
        return cls(data)

    @classmethod
    def parse(cls, text: str) -> "Multipartition":
        return parse_multipartition(text)


def bipartition(lam1: Iterable[int] = (), lam2: Iterable[int] = ()) -> Multipartition:
    return Multipartition((lam1, lam2))


def empty_multipartition(r: int) -> Multipartition:
    return Multipartition([()] * r)


# --- text encoding -----------------------------------------------------------

def format_partition_parts(p: Partition) -> str:
    return ",".join(map(str, p)) if p else EMPTY_SYMBOL


def format_multipartition(lam: Sequence[Partition]) -> str:
    return "(" + "|".join(format_partition_parts(c) for c in lam) + ")"


_PART_SPLIT = re.compile(r"[,\s]+")


def parse_partition(text: str) -> Partition:
    """Parse ``"3,1"``, ``"(3,1)"``, ``"∅"`` or ``""``."""
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1].strip()
    if s in ("", EMPTY_SYMBOL, "-", "0"):
        return Partition()
    try:
        parts = [int(t) for t in _PART_SPLIT.split(s) if t]
    except ValueError:
        raise ValueError(f"cannot parse partition {text!r}") from None
    return Partition(parts)


def parse_multipartition(text: str) -> Multipartition:
    """Parse ``"(3,1|2)"``, ``"(∅|2,1)"`` or ``"3,1|"``."""
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    return Multipartition(parse_partition(c) for c in s.split("|"))


# --- enumeration -------------------------------------------------------------

@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[Partition, ...]:
    if n == 0:
        return (Partition(),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append(Partition((first,) + tuple(rest)))
    return tuple(out)


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return list(_partitions(n, n))


def multipartition_key(lam: Sequence[Partition]) -> tuple:
    """Sort key; sorting with ``reverse=True`` gives the canonical order."""
    return tuple((c.size, tuple(c)) for c in lam)


@lru_cache(maxsize=None)
def _multipartitions(n: int, r: int) -> tuple[Multipartition, ...]:
    if r == 1:
        return tuple(Multipartition((p,)) for p in enumerate_partitions(n))
    out = []
    for k in range(n, -1, -1):
        for first in enumerate_partitions(k):
            for rest in _multipartitions(n - k, r - 1):
                out.append(Multipartition((first,) + tuple(rest)))
    return tuple(out)


def enumerate_multipartitions(n: int, r: int) -> list[Multipartition]:
    """All r-multipartitions of ``n`` in canonical order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if r < 1:
        raise ValueError("r must be at least 1")
    return list(_multipartitions(n, r))


# --- statistics and predicates -----------------------------------------------

def conjugate(p: Sequence[int]) -> Partition:
    p = Partition(p)
    if not p:
        return p
    return Partition(sum(1 for x in p if x > j) for j in range(p[0]))


def is_e_regular(p: Sequence[int], e: float) -> bool:
    """True iff no part is repeated ``e`` or more times (``e`` may be ``math.inf``)."""
    if e == math.inf:
        return True
    p = Partition(p)
    run = 0
    for i, x in enumerate(p):
        run = run + 1 if i and p[i - 1] == x else 1
        if run >= e:
            return False
    return True


def n_statistic(p: Sequence[int]) -> int:
    return sum(i * x for i, x in enumerate(p))


def _prefix_sums(p: Sequence[int], length: int) -> list[int]:
    out, acc = [], 0
    for i in range(length):
        acc += p[i] if i < len(p) else 0
        out.append(acc)
    return out


def dominates_partitions(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """``lam ⊴ mu``: every prefix sum of ``lam`` is at most that of ``mu``."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        raise ValueError(f"size mismatch: {lam} vs {mu}")
    length = max(len(lam), len(mu))
    return all(x <= y for x, y in zip(_prefix_sums(lam, length), _prefix_sums(mu, length)))


def dominates_bipartitions(lam: Sequence[Sequence[int]], mu: Sequence[Sequence[int]]) -> bool:
    """``lam ⊴ mu`` on multipartitions, with cross-component size offsets.

    For each component ``c`` and row ``j`` the sum of the sizes of components
    before ``c`` plus the first ``j`` parts of component ``c`` must not exceed
    the same quantity for ``mu``. Works at any level, the name notwithstanding.
    """
    lam, mu = Multipartition(lam), Multipartition(mu)
    if lam.level != mu.level:
        raise ValueError(f"level mismatch: {lam} vs {mu}")
    if lam.size != mu.size:
        raise ValueError(f"size mismatch: {lam} vs {mu}")
    off_l = off_m = 0
    for cl, cm in zip(lam, mu):
        length = max(len(cl), len(cm))
        for x, y in zip(_prefix_sums(cl, length), _prefix_sums(cm, length)):
            if off_l + x > off_m + y:
                return False
        off_l += cl.size
        off_m += cm.size
    return True


dominates = dominates_bipartitions
