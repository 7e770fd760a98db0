"""Arithmetic Chern-Simons values and the mod-2 Dijkgraaf-Witten invariant.

CS_c(rho) is computed three ways that must agree:

* additively, sum over i<j of rho(e+_ij) * lk2(p_i, p_j);
* multiplicatively, as a product of Legendre symbols (p_j/p_i) over the
  pairs rho sends to 1;
* through the Kummer generator v = p_J / d, evaluating the Legendre
  symbol of the norm of a_v at each p_l with l in J.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Iterable

from .errors import ArityMismatch, NormNotMinusOne
from .genus import CSProfile, GenusCharacter, active_pairs, enumerate_characters, eval_on_e, support_set
from .linking import Mod2LinkingMatrix
from .ntcore import PrimeTuple, jacobi, mod2_linking_matrix
from .pell import FieldReport, validate_field


@dataclass(frozen=True)
class DWValue:
    even_count: int
    odd_count: int

    @property
    def value(self) -> int:
        return self.even_count - self.odd_count

    @property
    def total(self) -> int:
        return self.even_count + self.odd_count

    @classmethod
    def from_values(cls, values: Iterable[int]) -> DWValue:
        values = list(values)
        odd = sum(values)
        return cls(len(values) - odd, odd)


def _check_arity(rho: GenusCharacter, r: int) -> None:
    if rho.r != r:
        raise ArityMismatch(f"character of arity {rho.r} against data of arity {r}")


def cs_additive(rho: GenusCharacter, L: Mod2LinkingMatrix) -> int:
    _check_arity(rho, L.r)
    r = L.r
    total = 0
    for i in range(1, r + 1):
        for j in range(i + 1, r + 1):
            total += eval_on_e(rho, i, j) * L[i - 1, j - 1]
    return total % 2


def cs_multiplicative(rho: GenusCharacter, t: PrimeTuple) -> int:
    _check_arity(rho, t.r)
    sign = 1
    for i, j in active_pairs(rho):
        sign *= jacobi(t[j - 1], t[i - 1])
    return 0 if sign == 1 else 1


def kummer_data(rho: GenusCharacter, t: PrimeTuple) -> tuple[Fraction, int]:
    """The Kummer generator v = p_J / d of rho and the norm of a_v.

    K(sqrt v) is the unramified quadratic extension cut out by rho, and
    a_v = p_1...p_r / p_J (product of the ramified primes over p_i) satisfies
    a_v^2 = (v)^-1.  Its norm is the product of the p_i with i outside J.
    """
    _check_arity(rho, t.r)
    J = support_set(rho)
    p_J = prod(t[l - 1] for l in J)
    norm = prod(t[i - 1] for i in range(1, t.r + 1) if i not in J)
    return Fraction(p_J, t.d), norm


def cs_via_kummer(rho: GenusCharacter, t: PrimeTuple) -> int:
    """(-1)^CS = product over l in J of (N a_v / p_l)."""
    _, norm = kummer_data(rho, t)
    sign = 1
    for l in support_set(rho):
        sign *= jacobi(norm, t[l - 1])
    return 0 if sign == 1 else 1


def profile_from_matrix(L: Mod2LinkingMatrix, source: str | None = None, supported: bool = True) -> CSProfile:
    entries = tuple((rho, cs_additive(rho, L)) for rho in enumerate_characters(L.r))
    return CSProfile(source or L.source, entries, supported)


def _gate(t: PrimeTuple, force: bool) -> FieldReport:
    report = validate_field(t)
    if not report.narrow_equals_wide and not force:
        raise NormNotMinusOne(t.d)
    return report


def cs_profile(t: PrimeTuple, force: bool = False) -> CSProfile:
    """CS value of every character, after checking the unit-norm hypothesis.

    With ``force=True`` a norm +1 field is computed anyway and the profile is
    marked unsupported.
    """
    report = _gate(t, force)
    return profile_from_matrix(mod2_linking_matrix(t), f"arithmetic:{t.label()}", report.narrow_equals_wide)


def dw_invariant(t: PrimeTuple, force: bool = False) -> DWValue:
    return DWValue.from_values(cs_profile(t, force).values)
