"""Truncated (J-)induction from the symmetric group to type B_n.

``J(nu)`` is computed on a shifted symbol: start from the symbol of the
empty bipartition with every entry raised by ``a``, then for each column
length ``k`` of ``nu`` (longest column first) raise the ``k`` largest entries
across both rows by ``a``, and read the bipartition back off.
"""

from __future__ import annotations

from dataclasses import dataclass

from .afunction import WeightParams
from .partitions import Multipartition, Partition, conjugate


class AmbiguousInductionError(ValueError):
    """``a`` divides ``b`` and ``r < n - 1``: top and bottom entries can tie."""


@dataclass
class ShiftedSymbol:
    top: list[int]
    bottom: list[int]
    w: WeightParams
    N: int

    @classmethod
    def initial(cls, w: WeightParams, N: int) -> "ShiftedSymbol":
        a, bp = w.a, w.b_prime
        top = [i * a + bp for i in range(1, N + w.r + 1)]
        bottom = [j * a for j in range(1, N + 1)]
        return cls(top, bottom, w, N)

    def raise_largest(self, k: int) -> None:
        entries = [(v, 1, i) for i, v in enumerate(self.top)] + [(v, 0, j) for j, v in enumerate(self.bottom)]
        # on a tie (only possible when b' = 0) the top row wins
        entries.sort(reverse=True)
        if k > len(entries):
            raise ValueError("padding too small for this step")
        for _, is_top, idx in entries[:k]:
            if is_top:
                self.top[idx] += self.w.a
            else:
                self.bottom[idx] += self.w.a
        if len(set(self.top)) != len(self.top) or len(set(self.bottom)) != len(self.bottom):
            raise AssertionError("symbol rows lost strict monotonicity")

    def to_bipartition(self) -> Multipartition:
        a, bp, N, r = self.w.a, self.w.b_prime, self.N, self.w.r
        top, bottom = sorted(self.top), sorted(self.bottom)
        lam1 = [0] * (N + r)
        lam2 = [0] * N
        for i, v in enumerate(top, start=1):
            q, rem = divmod(v - bp, a)
            if rem:
                raise AssertionError(f"top entry {v} not congruent to {bp} mod {a}")
            lam1[N + r - i] = q - i
        for j, v in enumerate(bottom, start=1):
            q, rem = divmod(v, a)
            if rem:
                raise AssertionError(f"bottom entry {v} not divisible by {a}")
            lam2[N - j] = q - j
        return Multipartition((lam1, lam2))


def j_induce(nu, w: WeightParams, N: int | None = None) -> Multipartition:
    """The bipartition ``J(nu)`` for the weights ``w``.

    ``N`` is the padding length of the bottom row; the default ``|nu| + 1`` is
    always sufficient and the answer does not depend on it.
    """
    nu = Partition(nu)
    n = nu.size
    if w.a == 0:
        return Multipartition((nu, ()))
    if w.b_prime == 0:
        if w.r >= n - 1:
            return Multipartition((nu, ()))
        raise AmbiguousInductionError(
            f"J is not defined by the symbol rule for a={w.a}, b={w.b} (a | b and r={w.r} < n-1={n - 1})"
        )
    if N is None:
        N = n + 1
    if N < n:
        raise ValueError(f"padding N={N} must be at least |nu|={n}")
    sym = ShiftedSymbol.initial(w, N)
    for k in conjugate(nu):
        sym.raise_largest(k)
    return sym.to_bipartition()
