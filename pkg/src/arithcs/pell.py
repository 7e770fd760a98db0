"""Continued fractions of sqrt(d) and the sign of the fundamental unit."""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .errors import NotSquarefree, PerfectSquare, ValidationError
from .ntcore import PrimeTuple


@dataclass(frozen=True)
class ContinuedFractionExpansion:
    d: int
    a0: int
    period: tuple[int, ...]

    @property
    def period_length(self) -> int:
        return len(self.period)

    def terms(self, count: int) -> list[int]:
        """First ``count`` partial quotients a_0, a_1, ..."""
        out = [self.a0]
        while len(out) < count:
            out.extend(self.period)
        return out[:count]


def _check_nonsquare(d: int) -> int:
    if isinstance(d, bool) or not isinstance(d, int) or d < 2:
        raise ValidationError(f"d must be an integer >= 2, got {d!r}")
    a0 = isqrt(d)
    if a0 * a0 == d:
        raise PerfectSquare(f"{d} is a perfect square")
    return a0


def is_squarefree(d: int) -> bool:
    if d < 1:
        return False
    for p in (2, 3):
        if d % (p * p) == 0:
            return False
        while d % p == 0:
            d //= p
    f = 5
    while f * f <= d:
        for q in (f, f + 2):
            if d % (q * q) == 0:
                return False
            while d % q == 0:
                d //= q
        f += 6
    return True


def cf_sqrt(d: int) -> ContinuedFractionExpansion:
    """Minimal period of sqrt(d) = [a0; a1, ..., a_l] with a_l = 2*a0."""
    a0 = _check_nonsquare(d)
    m, q, a = 0, 1, a0
    period = []
    while a != 2 * a0:
        m = q * a - m
        q = (d - m * m) // q
        a = (a0 + m) // q
        period.append(a)
    return ContinuedFractionExpansion(d, a0, tuple(period))


def period_length(d: int) -> int:
    """Period length of sqrt(d), walking only half the period.

    The complete quotients (m_k + sqrt d)/q_k come back in mirror order, so
    the first repeat q_k = q_{k+1} marks an odd period 2k+1, and the first
    repeat m_k = m_{k+1} an even period 2k.
    """
    a0 = _check_nonsquare(d)
    m, q, a = 0, 1, a0
    k = 0
    while True:
        m_next = q * a - m
        q_next = (d - m_next * m_next) // q
        if q_next == q:
            return 2 * k + 1
        if m_next == m:
            return 2 * k
        m, q = m_next, q_next
        a = (a0 + m) // q
        k += 1


def fundamental_pell_solution(d: int) -> tuple[int, int, int]:
    """Smallest positive (x, y) with x^2 - d y^2 = +-1, and that sign."""
    cf = cf_sqrt(d)
    p_prev, p = 1, cf.a0
    q_prev, q = 0, 1
    for a in cf.period[:-1]:
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
    norm = -1 if cf.period_length % 2 else 1
    return p, q, norm


def fundamental_unit_norm(d: int) -> int:
    """Norm (+1 or -1) of the fundamental unit of Q(sqrt(d)), d squarefree.

    A unit of norm -1 exists iff the period of sqrt(d) is odd.  For d = 1 mod 4
    the unit may live in Z[(1+sqrt d)/2] only, but its cube lies in Z[sqrt d]
    and keeps the sign, so the sqrt(d) period still decides.
    """
    _check_nonsquare(d)
    if not is_squarefree(d):
        raise NotSquarefree(f"{d} is not squarefree")
    return -1 if period_length(d) % 2 else 1


@dataclass(frozen=True)
class FieldReport:
    primes: PrimeTuple
    d: int
    unit_norm: int
    period_length: int

    @property
    def narrow_equals_wide(self) -> bool:
        return self.unit_norm == -1


def validate_field(t: PrimeTuple) -> FieldReport:
    # d is a product of distinct primes, hence squarefree already.
    ell = period_length(t.d)
    return FieldReport(t, t.d, -1 if ell % 2 else 1, ell)
