"""Specialization cases and canonical basic sets in type B_n.

The Hecke algebra parameters are ``Q = xi**b`` and ``q = xi**a`` where ``xi``
has multiplicative order ``xi_order`` (``math.inf`` for a non-root of unity)
in a field of characteristic ``char_p``. :func:`resolve_case` works out which
of the three regimes applies:

* ``A``: ``f_n(Q, q) != 0``; simples are labelled by pairs of e-regular partitions.
* ``B``: ``f_n(Q, q) = 0`` and ``q = 1`` (so ``Q = -1``).
* ``C``: ``f_n(Q, q) = 0`` and ``q != 1``, i.e. ``Q = -q**d`` with ``|d| <= n-1``.

Everything is exact integer arithmetic on exponents of ``xi``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Optional

from .afunction import WeightParams, is_L_good
from .fock import NodeOrder, kleshchev_set, uglov_set
from .jinduction import j_induce
from .partitions import Multipartition, enumerate_multipartitions, enumerate_partitions, is_e_regular

INF = math.inf


class CharacteristicTwoError(ValueError):
    """Cases B and C are not treated in characteristic 2."""


class NotLGoodError(ValueError):
    pass


class Case(str, enum.Enum):
    A = "A"
    B = "B"
    C = "C"


class BetaStatus(str, enum.Enum):
    EXPLICIT = "explicit"
    IDENTITY = "identity"
    UNAVAILABLE = "unavailable-requires-canonical-basis"


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % k for k in range(2, math.isqrt(p) + 1))


@dataclass(frozen=True)
class SpecializationParams:
    n: int
    w: WeightParams
    xi_order: float  # int, or math.inf
    char_p: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        if self.char_p != 0 and not _is_prime(self.char_p):
            raise ValueError(f"characteristic must be 0 or a prime, got {self.char_p}")
        l = self.xi_order
        if l != INF:
            if int(l) != l or l < 1:
                raise ValueError(f"order of xi must be a positive integer or infinity, got {l}")
            if self.char_p and math.gcd(int(l), self.char_p) != 1:
                raise ValueError(f"no element of order {l} exists in characteristic {self.char_p}")

    @classmethod
    def of(cls, n: int, a: int, b: int, xi_order: float, char_p: int = 0) -> "SpecializationParams":
        return cls(n, WeightParams(a, b), xi_order, char_p)


@dataclass(frozen=True)
class CaseDescriptor:
    case: Case
    e: float
    q_is_one: bool
    f_n_zero: bool
    l_good: bool
    params: SpecializationParams
    d_class: Optional[int] = None
    s: Optional[int] = None

    def to_json(self) -> dict:
        p = self.params
        return {
            "n": p.n,
            "a": p.w.a,
            "b": p.w.b,
            "xi_order": _num_json(p.xi_order),
            "char": p.char_p,
            "case": self.case.value,
            "e": _num_json(self.e),
            "q_is_one": self.q_is_one,
            "f_n_zero": self.f_n_zero,
            "l_good": self.l_good,
            "d_class": self.d_class,
            "s": self.s,
        }


def _num_json(x):
    return "infinity" if x == INF else int(x)


def _f_n_witness(p: SpecializationParams) -> Optional[int]:
    """Some ``d`` with ``|d| <= n-1`` and ``Q = -q**d``, or ``None``."""
    n, a, b, l = p.n, p.w.a, p.w.b, p.xi_order
    ds = sorted(range(-(n - 1), n), key=abs)
    if p.char_p == 2:
        # -1 = 1: the condition is xi**b = xi**(a d)
        if l == INF:
            return next((d for d in ds if b == a * d), None)
        return next((d for d in ds if (b - a * d) % l == 0), None)
    # -1 is a power of xi only when xi has even order, and then -1 = xi**(l/2)
    if l == INF or l % 2:
        return None
    l = int(l)
    return next((d for d in ds if (a * d - (b - l // 2)) % l == 0), None)


def resolve_case(p: SpecializationParams) -> CaseDescriptor:
    a, b, l = p.w.a, p.w.b, p.xi_order
    q_is_one = a == 0 if l == INF else a % l == 0
    if q_is_one:
        e = p.char_p if p.char_p else INF
    elif l == INF:
        e = INF
    else:
        e = int(l) // math.gcd(int(l), a)
    witness = _f_n_witness(p)
    f_n_zero = witness is not None
    l_good = is_L_good(p.char_p, p.w, p.n)
    if not f_n_zero:
        return CaseDescriptor(Case.A, e, q_is_one, False, l_good, p)
    if p.char_p == 2:
        raise CharacteristicTwoError("f_n(Q,q) = 0 in characteristic 2 (cases B/C need char != 2)")
    if q_is_one:
        return CaseDescriptor(Case.B, e, True, True, l_good, p)
    d = witness
    # s is the member of d + eZ with s < b/a < s + e
    p0 = (b - a * d) // (a * e)
    s = d + p0 * e
    if a * s == b:
        raise ValueError(f"b/a = {b}/{a} is congruent to d mod e; no charge separates it")
    return CaseDescriptor(Case.C, e, False, True, l_good, p, d_class=d % e, s=s)


@dataclass
class BasicSetResult:
    lambda_set: frozenset
    basic_set: frozenset
    beta: Optional[dict]
    beta_status: BetaStatus
    descriptor: Optional[CaseDescriptor] = field(default=None, repr=False)


def lambda_set(c: CaseDescriptor, n: Optional[int] = None) -> frozenset[Multipartition]:
    """Labels of the simple modules (bipartitions with nonzero ``D^lam``)."""
    n = c.params.n if n is None else n
    e = c.e
    if c.case is Case.A:
        return frozenset(
            lam for lam in enumerate_multipartitions(n, 2) if is_e_regular(lam[0], e) and is_e_regular(lam[1], e)
        )
    if c.case is Case.B:
        return frozenset(Multipartition((nu, ())) for nu in enumerate_partitions(n) if is_e_regular(nu, e))
    return kleshchev_set(n, 2, int(e), (c.d_class, 0))


def basic_set(c: CaseDescriptor, n: Optional[int] = None) -> BasicSetResult:
    n = c.params.n if n is None else n
    if not c.l_good:
        raise NotLGoodError(
            f"characteristic {c.params.char_p} is not L-good for a={c.params.w.a}, b={c.params.w.b}, n={n}"
        )
    lam = lambda_set(c, n)
    if c.case is Case.A:
        return BasicSetResult(lam, lam, {x: x for x in lam}, BetaStatus.IDENTITY, c)
    if c.case is Case.B:
        beta = {x: j_induce(x[0], c.params.w) for x in lam}
        image = frozenset(beta.values())
        if len(image) != len(lam):
            raise AssertionError("J-induction is not injective on the e-regular partitions")
        return BasicSetResult(lam, image, beta, BetaStatus.EXPLICIT, c)
    w = c.params.w
    B = uglov_set(n, (c.s, 0), int(c.e), NodeOrder.FLOTW)
    if w.b > (n - 1) * w.a or c.s > n - 1:
        if B != lam:
            raise AssertionError(f"expected the basic set to equal the Kleshchev set for {c}")
        return BasicSetResult(lam, B, {x: x for x in lam}, BetaStatus.IDENTITY, c)
    return BasicSetResult(lam, B, None, BetaStatus.UNAVAILABLE, c)


def equal_parameter_shortcut(n: int, b: int, e: int) -> tuple[int, int]:
    """Charge ``(b - e/2, 0)`` for ``a = 1`` (equivalently ``(b, e/2)`` up to shift)."""
    if e % 2:
        raise ValueError(f"e must be even when a = 1, got {e}")
    return (b - e // 2, 0)
