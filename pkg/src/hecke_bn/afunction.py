"""Lusztig's a-invariants for type B_n bipartitions.

The weight function is given by ``L(t) = b`` and ``L(s_i) = a``. For ``a > 0``
the value is computed from the two-row symbol of the bipartition as a
difference of sums of pairwise minima; the result does not depend on the
padding length used to build the symbol.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .partitions import Multipartition, Partition, conjugate, n_statistic


@dataclass(frozen=True)
class WeightParams:
    """``L(t) = b``, ``L(s_i) = a``; for ``a > 0`` we write ``b = a*r + b_prime``."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise ValueError(f"weights must be non-negative, got a={self.a}, b={self.b}")

    @property
    def r(self) -> Optional[int]:
        return self.b // self.a if self.a > 0 else None

    @property
    def b_prime(self) -> Optional[int]:
        return self.b % self.a if self.a > 0 else None

    @property
    def divmod_defined(self) -> bool:
        return self.a > 0


@dataclass(frozen=True)
class SymbolPair:
    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    N: int


def _as_bipartition(lam) -> Multipartition:
    lam = lam if isinstance(lam, Multipartition) else Multipartition(lam)
    if lam.level != 2:
        raise ValueError(f"expected a bipartition, got level {lam.level}")
    return lam


def min_padding(lam, w: WeightParams) -> int:
    lam1, lam2 = _as_bipartition(lam)
    return max(len(lam2), len(lam1) - w.r, 1)


def build_symbol(lam, w: WeightParams, N: int) -> SymbolPair:
    """The symbol ``(alpha; beta)`` of ``lam`` with ``N + r`` top and ``N`` bottom entries."""
    if w.a == 0:
        raise ValueError("symbols need a > 0")
    lam1, lam2 = _as_bipartition(lam)
    a, r, bp = w.a, w.r, w.b_prime
    if N < min_padding(lam, w):
        raise ValueError(f"padding N={N} too small for {lam} (need {min_padding(lam, w)})")
    alpha = tuple(a * (lam1.part(N + r - i + 1) + i - 1) + bp for i in range(1, N + r + 1))
    beta = tuple(a * (lam2.part(N - j + 1) + j - 1) for j in range(1, N + 1))
    return SymbolPair(alpha, beta, N)


def _min_sum(alpha: Sequence[int], beta: Sequence[int]) -> int:
    total = sum(min(x, y) for x in alpha for y in beta)
    total += sum(min(x, y) for x, y in combinations(alpha, 2))
    total += sum(min(x, y) for x, y in combinations(beta, 2))
    return total


def a_value_at_padding(lam, w: WeightParams, N: int) -> int:
    """``A_N - B_N`` for an explicit padding ``N``."""
    sym = build_symbol(lam, w, N)
    empty = build_symbol(Multipartition(((), ())), w, N)
    return _min_sum(sym.alpha, sym.beta) - _min_sum(empty.alpha, empty.beta)


def a_value(lam, w: WeightParams) -> int:
    lam = _as_bipartition(lam)
    if w.a == 0:
        return w.b * lam[1].size
    return a_value_at_padding(lam, w, min_padding(lam, w))


def a_value_closed(lam, w: WeightParams) -> int:
    """Closed form ``b|lam2| + a(n(lam1) + 2n(lam2) - n(lam2*))``.

    Agrees with :func:`a_value` when ``b > (n-1)a > 0``; evaluated as-is otherwise.
    """
    lam1, lam2 = _as_bipartition(lam)
    return w.b * lam2.size + w.a * (n_statistic(lam1) + 2 * n_statistic(lam2) - n_statistic(conjugate(lam2)))


def a_value_symmetric(nu: Sequence[int], a: int) -> int:
    """a-invariant for the symmetric group with constant weight ``a``."""
    return a * n_statistic(Partition(nu))


def longest_element_weight(n: int, w: WeightParams) -> int:
    """``L(w_0)``: ``n`` reflections conjugate to ``t`` and ``n(n-1)`` conjugate to some ``s_i``."""
    return n * w.b + n * (n - 1) * w.a


def is_L_good(char_p: int, w: WeightParams, n: int) -> bool:
    """Whether a field of characteristic ``char_p`` is L-good for ``W_n``."""
    if char_p == 0:
        return True
    if w.a > 0:
        if w.b % w.a == 0 and w.b // w.a <= n - 1:
            return char_p != 2
        return True
    return char_p > n
